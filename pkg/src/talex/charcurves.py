"""Character curves of the (-3,-3,-3) pretzel knot.

The knot group of the pretzel knot P(-3,-3,-3) (9_35 in standard tables)
carries a 3-bridge structure with meridional generators a, b, c.  An
irreducible SL(2,C) character is determined by the six traces

    x = tr(a) = tr(b) = tr(c)   (all meridians are conjugate),
    y1 = tr(ab), y2 = tr(bc), y3 = tr(ca),

and for this knot the defining equations force y1 = y2 = y3 =: z with
tr(a) = tr(b) = tr(c) =: y on the components of interest.  The trace
field is generated by (y, z), and the irreducible character variety is
cut out by a single plane curve obtained by eliminating auxiliary
variables from a recursively defined family r_m(y1, y2, v):

    r_0 = 0,  r_1 = 1,  r_2 = v,
    r_m = -y1^{-1} y2 t_{m-1} r_{m-3}(y2, y1, v)
          + (1/2)(y2^2 - 2 + y1^{-1} y2 t_{m-1} (2v - y1 y2)) r_{m-2}(y1, y2, v)
          + (1/2)((y1 - 2 y1^{-1}) y2 t_{m-1} + 2v - y1 y2) r_{m-1}(y2, y1, v)

with sign pattern (t_1, ..., t_5) = (1, -1, 1, -1, 1).  The recursion
lives in the localization Z[y1^{-1}]; y1^5 r_6 is an honest polynomial.
After the change of variables

    y = y2,   b = y1^2 - 2,   w = y1 v,

the slice b = -1 together with the second defining equation
w^2 - w y + z - 1 = 0 eliminates to a plane curve in (y, z) that factors
as (y^2 - z - 1)^2 times an irreducible quartic-cubic C'.  The two
factors C : y^2 - z - 1 and C' are the two curves of irreducible
characters this module exposes.

On either curve the leading coefficient of the twisted Alexander
polynomial is a single trace polynomial psi_2(x) = x^3 + 6x^2 + 6x + 5
in x = y^2 - z, certified here by sampling representations on the curve
and comparing against the determinant it abbreviates.  Monicness of the
twisted polynomial at a character is then the root count census of
psi_2(x) = c intersected with the curve, computed exactly.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import AlgebraError, CertificationError, SolveError
from .laurent import LaurentPoly
from .matrix import det
from .multipoly import MultiPoly, exact_divide, resultant
from .presentations import Presentation, parse_presentation
from .representations import Representation, solve_representation
from .roots import complex_roots
from .twisted import TwistedAlex, fox_matrix_laurent, wada_invariant

RV_VARS = ("y1", "y2", "v")
YBW_VARS = ("y", "b", "w")
YZ_VARS = ("y", "z")

# Sign pattern t_1 .. t_5 entering the trace recursion.
T_SIGNS = (1, -1, 1, -1, 1)

PRETZEL935_TEXT = """\
gens: a b c
rel: aBabAbCbCBcB
rel: bCbcBcAcACaC
"""

#: Trace-identity table on the curves: word -> polynomial in x = y^2 - z.
#: Each entry is (word over the presentation's generators, coefficients of
#: the trace as a polynomial in x, ascending).
TRACE_TABLE = (
    ("aB", (0, 1)),             # tr = x
    ("aBaB", (-2, 0, 1)),       # tr = x^2 - 2
    ("aBaC", (0, -1, 1)),       # tr = x^2 - x
    ("aBcAbC", (-2, 0, 3, -1)),  # tr = -x^3 + 3x^2 - 2
)


def pretzel935_presentation() -> Presentation:
    """The standard two-relator, three-meridian presentation."""
    return parse_presentation(PRETZEL935_TEXT)


def _mono(var: str, vars_: tuple = RV_VARS, power: int = 1) -> MultiPoly:
    return MultiPoly.var(vars_, var, power)


def _const(c, vars_: tuple = RV_VARS) -> MultiPoly:
    return MultiPoly.constant(vars_, c)


@lru_cache(maxsize=None)
def hlm_r(m: int) -> MultiPoly:
    """The m-th trace recursion polynomial in Z[y1, y1^{-1}, y2, v].

    r_6 is an honest polynomial (no negative powers survive) and factors
    into the product of a degree-2 and a degree-3 factor in v.
    """
    if m < 0:
        raise AlgebraError("recursion index must be nonnegative")
    if m == 0:
        return MultiPoly.zero(RV_VARS)
    if m == 1:
        return _const(1)
    if m == 2:
        return _mono("v")
    if m > len(T_SIGNS) + 1:
        raise AlgebraError("sign pattern defined only up to index %d"
                           % (len(T_SIGNS) + 1))
    t = _const(T_SIGNS[m - 2])
    y1 = _mono("y1")
    y1_inv = MultiPoly(RV_VARS, {(-1, 0, 0): Fraction(1)})
    y2 = _mono("y2")
    v = _mono("v")
    half = Fraction(1, 2)
    swap_prev = hlm_r(m - 1).swap_vars("y1", "y2")
    swap_back3 = hlm_r(m - 3).swap_vars("y1", "y2")
    term3 = -(y1_inv * y2 * t) * swap_back3
    term2 = ((y2 * y2 - _const(2)) + y1_inv * y2 * t * (_const(2) * v - y1 * y2)
             ).scale(half) * hlm_r(m - 2)
    term1 = ((y1 - _const(2) * y1_inv) * y2 * t + _const(2) * v - y1 * y2
             ).scale(half) * swap_prev
    return term3 + term2 + term1


def hlm_r6_cleared() -> MultiPoly:
    """y1^5 * r_6, the polynomial whose vanishing cuts the curve."""
    y1_5 = MultiPoly(RV_VARS, {(5, 0, 0): Fraction(1)})
    p = y1_5 * hlm_r(6)
    if p.has_negative_exponents():
        raise AlgebraError("y1^5 r_6 still has negative exponents")
    return p


def r6_factors() -> tuple[MultiPoly, MultiPoly]:
    """The two factors of r_6: (quadratic in v, cubic in v).

    quadratic = v^2 - v y1 y2 + y1^2 + y2^2 - 3
    cubic     = v^3 - v^2 y1 y2 + v (y1^2 + y2^2 - 1) - y1 y2
    """
    y1 = _mono("y1")
    y2 = _mono("y2")
    v = _mono("v")
    quad = v * v - v * y1 * y2 + y1 * y1 + y2 * y2 - _const(3)
    cubic = (v ** 3 - v * v * y1 * y2 + v * (y1 * y1 + y2 * y2 - _const(1))
             - y1 * y2)
    return quad, cubic


def change_of_variables(p: MultiPoly) -> MultiPoly:
    """Rewrite a polynomial in (y1, y2, v) through y = y2, b = y1^2 - 2, w = y1 v.

    Each monomial y1^a y2^beta v^gamma becomes w^gamma y^beta (b+2)^{e/2}
    with e = a - gamma; a residual negative or odd power of y1 is an
    error (the input is then not in the image of the substitution).
    """
    if tuple(p.vars) != RV_VARS:
        raise AlgebraError("expected variables %s" % (RV_VARS,))
    out = MultiPoly.zero(YBW_VARS)
    b_plus_2 = MultiPoly.var(YBW_VARS, "b") + MultiPoly.constant(YBW_VARS, 2)
    for (a, beta, gamma), coeff in p.terms.items():
        e = a - gamma
        if e < 0:
            raise AlgebraError(
                "monomial y1^%d y2^%d v^%d has v-degree exceeding y1-degree"
                % (a, beta, gamma))
        if e % 2 != 0:
            raise AlgebraError(
                "monomial y1^%d y2^%d v^%d leaves an odd residual y1 power"
                % (a, beta, gamma))
        mono = MultiPoly(YBW_VARS, {(beta, 0, gamma): coeff})
        out = out + mono * (b_plus_2 ** (e // 2))
    return out


def invert_change_of_variables(q: MultiPoly) -> MultiPoly:
    """Substitute y -> y2, b -> y1^2 - 2, w -> y1 v (round-trip check)."""
    if tuple(q.vars) != YBW_VARS:
        raise AlgebraError("expected variables %s" % (YBW_VARS,))
    y1 = _mono("y1")
    y2 = _mono("y2")
    v = _mono("v")
    b_img = y1 * y1 - _const(2)
    w_img = y1 * v
    out = MultiPoly.zero(RV_VARS)
    for (beta, i, gamma), coeff in q.terms.items():
        if min(beta, i, gamma) < 0:
            raise AlgebraError("negative exponent in substitution input")
        term = MultiPoly(RV_VARS, {(0, beta, 0): coeff})
        out = out + term * (b_img ** i) * (w_img ** gamma)
    return out


def _with_vars(p: MultiPoly, vars_: tuple) -> MultiPoly:
    """Re-express p over a variable tuple containing all of its support."""
    index = {name: i for i, name in enumerate(vars_)}
    terms = {}
    for exps, coeff in p.terms.items():
        new = [0] * len(vars_)
        for name, e in zip(p.vars, exps):
            if e != 0:
                if name not in index:
                    raise AlgebraError("variable %s not in target %s"
                                       % (name, vars_))
                new[index[name]] = e
        terms[tuple(new)] = coeff
    return MultiPoly(vars_, terms)


def slice_b_minus_one() -> MultiPoly:
    """y1^5 r_6 in (y, b, w) coordinates, restricted to b = -1."""
    q = change_of_variables(hlm_r6_cleared())
    return q.substitute("b", Fraction(-1))


def second_equation() -> MultiPoly:
    """The companion defining equation w^2 - w y + z - 1 in (y, z, w)."""
    vars_ = ("y", "z", "w")
    w = MultiPoly.var(vars_, "w")
    yy = MultiPoly.var(vars_, "y")
    zz = MultiPoly.var(vars_, "z")
    return w * w - w * yy + zz - MultiPoly.constant(vars_, 1)


def eliminate_w(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Resultant in w of two polynomials, returned over (y, z)."""
    vars_ = ("y", "z", "w")
    res = resultant(_with_vars(p, vars_), _with_vars(q, vars_), "w")
    if res.degree_in("w") > 0:
        raise AlgebraError("resultant still involves w")
    return _with_vars(res, YZ_VARS)


@dataclasses.dataclass(frozen=True)
class PlaneCurve:
    """A content-normalized plane curve in the trace coordinates (y, z)."""

    poly: MultiPoly
    name: str = ""

    def __post_init__(self):
        if tuple(self.poly.vars) != YZ_VARS:
            raise AlgebraError("plane curve must live in variables %s"
                               % (YZ_VARS,))
        object.__setattr__(self, "poly", self.poly.primitive_normalized())

    def evaluate(self, y, z):
        return self.poly.evaluate({"y": y, "z": z})

    def y_slice(self, y0: complex) -> LaurentPoly:
        """The univariate polynomial z -> curve(y0, z)."""
        coeffs: dict[int, complex] = {}
        for (a, b), coeff in self.poly.terms.items():
            coeffs[b] = coeffs.get(b, 0j) + complex(coeff) * (complex(y0) ** a)
        return LaurentPoly(coeffs).cleanup()

    def z_values(self, y0: complex) -> list[complex]:
        slice_ = self.y_slice(y0)
        if slice_.is_zero():
            raise AlgebraError("curve is identically zero along y = %r" % y0)
        if slice_.degree() == 0:
            return []
        return [r for r, _ in complex_roots(slice_)]

    def to_text(self) -> str:
        return self.poly.to_text()


def resultant_curve() -> MultiPoly:
    """Res_w of (y1^5 r_6)|_{b=-1} with w^2 - wy + z - 1, over (y, z)."""
    return eliminate_w(slice_b_minus_one(), second_equation())


def curve_components() -> tuple[PlaneCurve, PlaneCurve]:
    """The two irreducible-character curves (C, C').

    The eliminated polynomial factors exactly as (y^2 - z - 1)^2 times a
    primitive quartic-cubic; failure of that exact division certifies a
    pipeline defect, so it raises rather than returning junk.
    """
    total = resultant_curve()
    y = MultiPoly.var(YZ_VARS, "y")
    z = MultiPoly.var(YZ_VARS, "z")
    c_poly = y * y - z - MultiPoly.constant(YZ_VARS, 1)
    rest = exact_divide(total, c_poly * c_poly)
    if rest is None:
        raise CertificationError(
            "eliminated curve is not divisible by (y^2 - z - 1)^2")
    return (PlaneCurve(c_poly, name="C"),
            PlaneCurve(rest, name="Cprime"))


def psi2_polynomial() -> MultiPoly:
    """Leading-coefficient trace polynomial psi_2(x) = x^3 + 6x^2 + 6x + 5."""
    x = MultiPoly.var(("x",), "x")
    one = MultiPoly.constant(("x",), 1)
    return x ** 3 + x * x * 6 + x * 6 + one * 5


def _psi2_laurent(shift=Fraction(0)) -> LaurentPoly:
    """psi_2(x) - shift as a univariate polynomial in x."""
    p = psi2_polynomial()
    coeffs = {exps[0]: coeff for exps, coeff in p.terms.items()}
    coeffs[0] = coeffs.get(0, Fraction(0)) - shift
    return LaurentPoly(coeffs)


@dataclasses.dataclass
class CensusResult:
    """Outcome of counting curve characters with a given leading value.

    count is None exactly when the condition holds identically on the
    curve (infinitely many characters); degenerate_roots lists values x0
    of x whose locus misses the curve entirely.
    """

    curve: str
    c: complex | Fraction
    count: int | None
    witnesses: list[tuple[complex, complex]]
    degenerate_roots: list[complex]

    @property
    def identically_satisfied(self) -> bool:
        return self.count is None

    def to_json_dict(self) -> dict:
        def _c2(zv):
            return [float(complex(zv).real), float(complex(zv).imag)]
        return {
            "curve": self.curve,
            "c": _c2(self.c),
            "identically_satisfied": self.identically_satisfied,
            "count": self.count,
            "witnesses": [[_c2(a), _c2(b)] for a, b in self.witnesses],
            "degenerate_roots": [_c2(r) for r in self.degenerate_roots],
        }


def _psi2_on_curve_minus_c(c: Fraction) -> MultiPoly:
    """psi_2(y^2 - z) - c as an exact polynomial over (y, z)."""
    y = MultiPoly.var(YZ_VARS, "y")
    z = MultiPoly.var(YZ_VARS, "z")
    x_img = y * y - z
    p = psi2_polynomial()
    out = MultiPoly.zero(YZ_VARS)
    for (k,), coeff in p.terms.items():
        out = out + (x_img ** k).scale(coeff)
    return out - MultiPoly.constant(YZ_VARS, Fraction(c))


def census(curve: PlaneCurve, c, cluster_radius: float = 1e-8,
           residual_tol: float = 1e-8) -> CensusResult:
    """Count characters on the curve where psi_2(y^2 - z) equals c.

    Exact rational c first gets an exact divisibility test: when the
    curve polynomial divides psi_2(y^2 - z) - c the condition holds
    identically and the census is infinite (count None).  Otherwise the
    values x0 with psi_2(x0) = c are found (exactly when c is rational),
    each slice x = y^2 - z = x0 is intersected with the curve, and the
    distinct intersection points are the witnesses.
    """
    if isinstance(c, complex) and c.imag == 0:
        c = c.real
    if isinstance(c, float) and c.is_integer():
        c = int(c)
    exact_c = isinstance(c, (int, Fraction))
    if exact_c:
        c_val = Fraction(c)
        if exact_divide(_psi2_on_curve_minus_c(c_val), curve.poly) is not None:
            return CensusResult(curve.name, c_val, None, [], [])
        shifted = _psi2_laurent(c_val)
    else:
        c_val = complex(c)
        shifted = _psi2_laurent() - LaurentPoly.constant(c_val)
    x_roots = complex_roots(shifted, cluster_radius=cluster_radius,
                            residual_tol=residual_tol)
    witnesses: list[tuple[complex, complex]] = []
    degenerate: list[complex] = []
    for x0, _ in x_roots:
        # On the slice x = x0 the constraint z = y^2 - x0 turns the curve
        # into a univariate polynomial in y.
        slice_poly = _curve_on_x_slice(curve, x0)
        if slice_poly.is_zero():
            # The whole slice lies on the curve: infinitely many points.
            return CensusResult(curve.name, c, None, [], [])
        if slice_poly.degree() == 0:
            degenerate.append(x0)
            continue
        for y0, _ in complex_roots(slice_poly, cluster_radius=cluster_radius,
                                   residual_tol=residual_tol):
            witnesses.append((complex(y0), complex(y0) ** 2 - complex(x0)))
    witnesses = _dedupe_pairs(witnesses, cluster_radius)
    return CensusResult(curve.name, c, len(witnesses), witnesses, degenerate)


def _dedupe_pairs(pairs: list[tuple[complex, complex]], radius: float
                  ) -> list[tuple[complex, complex]]:
    out: list[tuple[complex, complex]] = []
    for y0, z0 in sorted(pairs, key=lambda p: (p[0].real, p[0].imag,
                                               p[1].real, p[1].imag)):
        if all(abs(y0 - a) + abs(z0 - b) > radius for a, b in out):
            out.append((y0, z0))
    return out


def _curve_on_x_slice(curve: PlaneCurve, x0) -> LaurentPoly:
    """curve(y, y^2 - x0) as a univariate polynomial in y."""
    if isinstance(x0, Fraction):
        base = LaurentPoly({2: Fraction(1), 0: -x0})
    else:
        base = LaurentPoly({2: complex(1.0), 0: -complex(x0)})
    out = LaurentPoly.zero()
    for (a, b), coeff in curve.poly.terms.items():
        term = LaurentPoly({a: coeff if base.is_exact() else complex(coeff)})
        out = out + term * (base ** b)
    return out if out.is_exact() else out.cleanup()


# ---------------------------------------------------------------------------
# Representation sampling on the curves and certification of psi_2.
# ---------------------------------------------------------------------------

def curve_constraints(y0: complex, z0: complex) -> dict[str, complex]:
    """Trace targets pinning a character with tr(a)=y0 and tr(ab)=z0."""
    y0, z0 = complex(y0), complex(z0)
    return {"a": y0, "b": y0, "c": y0, "ab": z0, "bc": z0, "ca": z0}


def solve_on_curve(y0: complex, z0: complex, seed: int = 0,
                   restarts: int = 60) -> Representation:
    """An irreducible representation with the given curve character."""
    pres = pretzel935_presentation()
    return solve_representation(pres, curve_constraints(y0, z0), seed=seed,
                                restarts=restarts)


def leading_determinant_sample(rho: Representation) -> complex:
    """Coefficient of t^4 in the twisted numerator determinant.

    For the three-meridian presentation every Fox-matrix entry is linear
    in t, so the numerator determinant of the 4x4 block matrix has the
    form det(A t + B); its t^4 coefficient is det(A), the quantity the
    closed form psi_2 abbreviates.
    """
    pres = rho.presentation
    mat = fox_matrix_laurent(pres, rho, removed=pres.num_generators - 1)
    for row in mat:
        for entry in row:
            if not entry.is_zero() and not (0 <= entry.min_exp()
                                            and entry.max_exp() <= 1):
                raise AlgebraError("Fox matrix entry is not linear in t")
    d = det(mat)
    if isinstance(d, LaurentPoly):
        return complex(d[4])
    return 0j


def trace_table_residual(rho: Representation, x_value: complex) -> float:
    """Largest deviation of the sampled traces from the table in x."""
    worst = 0.0
    for word_text, coeffs in TRACE_TABLE:
        w = rho.presentation.word(word_text)
        predicted = sum(complex(cc) * complex(x_value) ** k
                        for k, cc in enumerate(coeffs))
        worst = max(worst, abs(complex(rho.trace(w)) - predicted))
    return worst


@dataclasses.dataclass
class Psi2Certificate:
    """Sampled evidence that psi_2 matches the numerator's t^4 coefficient."""

    samples: int
    max_det_error: float
    max_trace_error: float
    tol: float

    @property
    def ok(self) -> bool:
        return (self.max_det_error <= self.tol
                and self.max_trace_error <= self.tol)

    def to_json_dict(self) -> dict:
        return {
            "samples": self.samples,
            "max_det_error": self.max_det_error,
            "max_trace_error": self.max_trace_error,
            "tol": self.tol,
            "ok": self.ok,
        }


def _curve_sample_points(curve: PlaneCurve, rng: np.random.Generator,
                         budget: int) -> list[tuple[complex, complex]]:
    pts = []
    for _ in range(budget):
        y0 = complex(2.2 + 0.8 * rng.standard_normal(),
                     0.8 * rng.standard_normal())
        try:
            zs = curve.z_values(y0)
        except Exception:
            continue
        for z0 in zs:
            pts.append((y0, z0))
    return pts


def certify_psi2(n_samples: int = 12, seed: int = 0,
                 tol: float = 1e-6) -> Psi2Certificate:
    """Sample characters on both curves and compare psi_2 to det(A).

    Raises CertificationError if either comparison exceeds tol at any
    sample, or if too few representations can be solved.
    """
    rng = np.random.default_rng(seed)
    c_curve, cp_curve = curve_components()
    psi = psi2_polynomial()
    collected = 0
    max_det = 0.0
    max_tr = 0.0
    per_curve = max(1, n_samples // 2)
    for curve in (c_curve, cp_curve):
        got = 0
        for y0, z0 in _curve_sample_points(curve, rng, budget=8 * per_curve):
            if got >= per_curve:
                break
            try:
                rho = solve_on_curve(y0, z0,
                                     seed=int(rng.integers(0, 2 ** 31)),
                                     restarts=40)
            except SolveError:
                continue
            x_val = complex(y0) ** 2 - complex(z0)
            predicted = complex(psi.evaluate({"x": x_val}))
            sampled = leading_determinant_sample(rho)
            max_det = max(max_det, abs(sampled - predicted))
            max_tr = max(max_tr, trace_table_residual(rho, x_val))
            got += 1
            collected += 1
        if got == 0:
            raise CertificationError(
                "could not solve any representation on curve %s" % curve.name)
    cert = Psi2Certificate(samples=collected, max_det_error=max_det,
                           max_trace_error=max_tr, tol=tol)
    if not cert.ok:
        raise CertificationError(
            "sampled certification failed: det error %.3g, trace error %.3g "
            "exceed tol %.3g" % (max_det, max_tr, tol))
    return cert


def psi2_certified(n_samples: int = 20, seed: int = 0, tol: float = 1e-6
                   ) -> tuple[MultiPoly, Psi2Certificate]:
    """The closed form together with its sampled certification report."""
    return psi2_polynomial(), certify_psi2(n_samples=n_samples, seed=seed,
                                           tol=tol)


def solve_witness_invariant(y0: complex, z0: complex, seed: int = 0,
                            restarts: int = 60) -> tuple[Representation,
                                                         TwistedAlex]:
    """Solve a curve character to a representation and twist it."""
    rho = solve_on_curve(y0, z0, seed=seed, restarts=restarts)
    pres = rho.presentation
    ta = wada_invariant(pres, rho)
    return rho, ta


def monic_witness_report(seed: int = 0, restarts: int = 60,
                         residual_tol: float = 1e-8) -> list[dict]:
    """Close the loop on the monic census: every witness of the exact
    count-6 census is solved to a representation and its twisted leading
    coefficient is reported; solver failure or residual above tol is an
    error (the census and the invariant engine must agree)."""
    _, cprime = curve_components()
    result = census(cprime, 1)
    out = []
    for i, (y0, z0) in enumerate(result.witnesses):
        try:
            rho, ta = solve_witness_invariant(y0, z0, seed=seed + i,
                                              restarts=restarts)
        except SolveError as exc:
            raise CertificationError(
                "monic witness (%r, %r) did not solve: %s" % (y0, z0, exc)
            ) from exc
        if rho.relator_residual() > residual_tol:
            raise CertificationError(
                "monic witness residual %.3g exceeds %.3g"
                % (rho.relator_residual(), residual_tol))
        out.append({
            "y": [y0.real, y0.imag],
            "z": [z0.real, z0.imag],
            "residual": rho.relator_residual(),
            "leading": [complex(ta.leading).real, complex(ta.leading).imag],
            "monic": bool(ta.monic),
        })
    return out
