"""The pretzel-knot character-variety computation end to end."""

from fractions import Fraction

import pytest

from talex import charcurves as cc
from talex.errors import AlgebraError
from talex.multipoly import MultiPoly, exact_divide

YZ = ("y", "z")
YBW = ("y", "b", "w")


def mk(vars, terms):
    return MultiPoly(vars, {k: Fraction(v) for k, v in terms.items()})


def quad_slice_factor():
    # w^2 - wy + y^2 - 2, exponents ordered (y, b, w)
    return mk(YBW, {(0, 0, 2): 1, (1, 0, 1): -1, (2, 0, 0): 1, (0, 0, 0): -2})


def cubic_slice_factor():
    # w^3 - w^2 y + w y^2 - y
    return mk(YBW, {(0, 0, 3): 1, (1, 0, 2): -1, (2, 0, 1): 1, (1, 0, 0): -1})


def curve_c_poly():
    return mk(YZ, {(2, 0): 1, (0, 1): -1, (0, 0): -1})  # y^2 - z - 1


def curve_cprime_poly():
    return mk(YZ, {
        (4, 1): 1, (4, 0): -2, (2, 2): -2, (2, 1): 5, (2, 0): -2,
        (0, 3): 1, (0, 2): -3, (0, 1): 3, (0, 0): -1,
    })


class TestTraceRecursion:
    def test_base_cases(self):
        r2 = cc.hlm_r(2)
        assert cc.hlm_r(0).is_zero()
        assert cc.hlm_r(1) == MultiPoly.constant(r2.vars, 1)

    def test_third_term(self):
        r3 = cc.hlm_r(3)
        v = MultiPoly.var(r3.vars, "v")
        y1 = MultiPoly.var(r3.vars, "y1")
        y2 = MultiPoly.var(r3.vars, "y2")
        assert r3 == v * v + y2 * y2 - y1 * y2 * v - 1

    def test_out_of_range(self):
        with pytest.raises(AlgebraError):
            cc.hlm_r(-1)
        with pytest.raises(AlgebraError):
            cc.hlm_r(7)

    def test_r6_is_the_two_factor_product(self):
        quad, cubic = cc.r6_factors()
        assert cc.hlm_r(6) == quad * cubic

    def test_r6_factors_divide_the_cleared_form(self):
        cleared = cc.hlm_r6_cleared()
        quad, cubic = cc.r6_factors()
        assert not cleared.has_negative_exponents()
        rest = exact_divide(cleared, quad)
        assert rest is not None
        assert exact_divide(rest, cubic) is not None


class TestChangeOfVariables:
    def test_round_trip(self):
        cleared = cc.hlm_r6_cleared()
        changed = cc.change_of_variables(cleared)
        assert set(changed.vars) == {"y", "b", "w"}
        assert cc.invert_change_of_variables(changed) == cleared

    def test_rejects_odd_residual_powers(self):
        vars = cc.hlm_r6_cleared().vars
        with pytest.raises(AlgebraError):
            cc.change_of_variables(MultiPoly.var(vars, "y1"))

    def test_rejects_excess_v_exponents(self):
        vars = cc.hlm_r6_cleared().vars
        with pytest.raises(AlgebraError):
            cc.change_of_variables(MultiPoly.var(vars, "v"))


class TestSliceAndElimination:
    def test_slice_is_the_factored_product(self):
        assert cc.slice_b_minus_one() == quad_slice_factor() * cubic_slice_factor()

    def test_second_equation_variables(self):
        q = cc.second_equation()
        assert set(q.vars) == {"y", "z", "w"}

    def test_eliminate_w_matches_component_product(self):
        res = cc.resultant_curve()
        c2cp = (curve_c_poly() ** 2) * curve_cprime_poly()
        q1 = exact_divide(res, c2cp)
        q2 = exact_divide(c2cp, res)
        assert q1 is not None and q1.is_constant()
        assert q2 is not None and q2.is_constant()

    def test_component_split(self):
        C, Cp = cc.curve_components()
        assert C.poly == curve_c_poly()
        assert Cp.poly == curve_cprime_poly()

    def test_parabola_points_satisfy_the_resultant(self):
        res = cc.resultant_curve()
        for y0 in (Fraction(2), Fraction(-3), Fraction(1, 2)):
            val = res.evaluate({"y": y0, "z": y0 * y0 - 1})
            assert val == 0


class TestPlaneCurves:
    def test_evaluate_and_slice(self):
        C, Cp = cc.curve_components()
        assert C.evaluate(Fraction(3), Fraction(8)) == 0
        assert abs(Cp.evaluate(1.0, 1.0)) < 1e-12
        assert abs(Cp.evaluate(-1.0, 1.0)) < 1e-12
        zs = C.z_values(2.0)
        assert len(zs) == 1 and abs(zs[0] - 3.0) < 1e-10

    def test_requires_the_curve_variables(self):
        with pytest.raises(AlgebraError):
            cc.PlaneCurve(MultiPoly.var(("a", "b"), "a"), name="bogus")


class TestPsi2:
    def test_closed_form(self):
        x = MultiPoly.var(("x",), "x")
        assert cc.psi2_polynomial() == x ** 3 + 6 * x ** 2 + 6 * x + 5

    def test_value_on_the_parabola_component(self):
        # on C, x = y^2 - z = 1, and psi2(1) = 18
        p = cc.psi2_polynomial()
        assert p.evaluate({"x": Fraction(1)}) == 18

    def test_certification_on_sampled_representations(self):
        cert = cc.certify_psi2(n_samples=6, seed=0)
        assert cert.ok
        assert cert.samples >= 6
        assert cert.max_det_error <= 1e-6
        assert cert.max_trace_error <= 1e-6

    def test_certificate_json_shape(self):
        cert = cc.certify_psi2(n_samples=2, seed=1)
        d = cert.to_json_dict()
        assert set(d) == {"samples", "max_det_error", "max_trace_error",
                          "tol", "ok"}

    def test_detA_equals_psi2_at_a_generic_point(self, p935_curve_rep):
        lead = cc.leading_determinant_sample(p935_curve_rep)
        assert abs(lead - 18) < 1e-6

    def test_detA_at_x_zero_point(self):
        # (y, z) = (1, 1) lies on the second component with x = 0
        rho = cc.solve_on_curve(1.0, 1.0, seed=0)
        lead = cc.leading_determinant_sample(rho)
        assert abs(lead - 5) < 1e-6

    def test_psi2_certified_returns_closed_form_with_certificate(self):
        poly, cert = cc.psi2_certified(n_samples=4)
        assert poly == cc.psi2_polynomial()
        assert cert.ok


class TestCensus:
    def test_monic_census(self):
        _, Cp = cc.curve_components()
        res = cc.census(Cp, 1)
        assert res.count == 6
        assert not res.identically_satisfied
        assert len(res.witnesses) == 6
        assert res.degenerate_roots == []

    def test_vanishing_census_has_degenerate_roots(self):
        _, Cp = cc.curve_components()
        res = cc.census(Cp, 0)
        assert res.count == 2
        assert len(res.witnesses) == 2
        assert len(res.degenerate_roots) == 2
        for r in res.degenerate_roots:
            assert abs(r * r + r + 1) < 1e-8
        for y0, z0 in res.witnesses:
            assert abs(abs(y0.imag) - 1.7457431218879391) < 1e-8
            assert abs(z0 - 1.952380952380952) < 1e-8

    def test_identically_satisfied_on_parabola(self):
        C, _ = cc.curve_components()
        res = cc.census(C, 18)
        assert res.identically_satisfied
        assert res.count is None
        assert res.witnesses == []

    def test_empty_census(self):
        C, _ = cc.curve_components()
        res = cc.census(C, 1)
        assert res.count == 0
        assert res.witnesses == []

    def test_witness_residuals(self):
        _, Cp = cc.curve_components()
        res = cc.census(Cp, 1)
        psi2 = cc.psi2_polynomial()
        for y0, z0 in res.witnesses:
            assert abs(Cp.evaluate(y0, z0)) <= 1e-8
            x0 = y0 * y0 - z0
            assert abs(psi2.evaluate({"x": x0}) - 1) <= 1e-8

    def test_float_c_coerced(self):
        _, Cp = cc.curve_components()
        assert cc.census(Cp, 1.0 + 0j).count == 6

    def test_json_shape(self):
        _, Cp = cc.curve_components()
        d = cc.census(Cp, 0).to_json_dict()
        assert d["count"] == 2
        assert not d["identically_satisfied"]
        assert len(d["witnesses"]) == 2
        assert len(d["degenerate_roots"]) == 2


class TestSolveOnCurve:
    def test_trace_targets_met(self, p935_curve_rep):
        resid = cc.trace_table_residual(p935_curve_rep, 1.0)
        assert resid <= 1e-6

    def test_witness_invariant_bundle(self):
        rho, ta = cc.solve_witness_invariant(2.5, 2.5 ** 2 - 1.0, seed=0)
        assert rho.relator_residual() <= 1e-8
        assert ta.polynomial is not None

    def test_monic_witness_loop(self):
        rows = cc.monic_witness_report(seed=0)
        assert len(rows) == 6
        for row in rows:
            assert row["residual"] <= 1e-8
            lead = complex(row["leading"][0], row["leading"][1])
            assert abs(lead - 1) <= 1e-5
            assert row["monic"]
