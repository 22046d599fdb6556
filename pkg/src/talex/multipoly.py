"""Sparse multivariate polynomials with exact rational coefficients.

A MultiPoly carries an ordered variable tuple and a term map from integer
exponent vectors to nonzero Fractions.  Exponents may be negative: the
ring is really a localization (Laurent in selected variables), which the
trace-polynomial recursion needs for its intermediate values.  Operations
that only make sense for honest polynomials (exact_divide, resultant,
content normalization) check for nonnegative exponents first.

The monomial order used throughout is lex in the stored variable order;
Python's tuple comparison on exponent vectors implements it directly.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from numbers import Rational

from .errors import AlgebraError


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...], terms: dict[tuple, Fraction] | None = None):
        self.vars = tuple(vars)
        clean: dict[tuple, Fraction] = {}
        if terms:
            nv = len(self.vars)
            for ex, c in terms.items():
                if len(ex) != nv:
                    raise AlgebraError("exponent vector %r does not match "
                                       "variables %r" % (ex, self.vars))
                c = Fraction(c)
                if c != 0:
                    clean[tuple(int(e) for e in ex)] = c
        self.terms = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, vars) -> "MultiPoly":
        return cls(tuple(vars))

    @classmethod
    def constant(cls, vars, c) -> "MultiPoly":
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): Fraction(c)})

    @classmethod
    def var(cls, vars, name, power: int = 1) -> "MultiPoly":
        vars = tuple(vars)
        if name not in vars:
            raise AlgebraError("unknown variable %r (have %r)" % (name, vars))
        ex = [0] * len(vars)
        ex[vars.index(name)] = power
        return cls(vars, {tuple(ex): Fraction(1)})

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in ex) for ex in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise AlgebraError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def has_negative_exponents(self) -> bool:
        return any(e < 0 for ex in self.terms for e in ex)

    def lex_leading(self) -> tuple[tuple, Fraction]:
        if self.is_zero():
            raise AlgebraError("zero polynomial has no leading term")
        ex = max(self.terms)
        return ex, self.terms[ex]

    def degree_in(self, name: str) -> int:
        """Highest exponent of the named variable (-1 for the zero poly)."""
        i = self.vars.index(name)
        return max((ex[i] for ex in self.terms), default=-1)

    def min_exponent_in(self, name: str) -> int:
        i = self.vars.index(name)
        return min((ex[i] for ex in self.terms), default=0)

    def total_degree(self) -> int:
        return max((sum(ex) for ex in self.terms), default=-1)

    # -- ring operations -----------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.vars != other.vars:
            raise AlgebraError("variable mismatch: %r vs %r" % (self.vars, other.vars))

    def __add__(self, other) -> "MultiPoly":
        other = self._as_poly(other)
        self._check(other)
        terms = dict(self.terms)
        for ex, c in other.terms.items():
            s = terms.get(ex, Fraction(0)) + c
            if s:
                terms[ex] = s
            else:
                terms.pop(ex, None)
        out = MultiPoly(self.vars)
        out.terms = terms
        return out

    def __neg__(self) -> "MultiPoly":
        out = MultiPoly(self.vars)
        out.terms = {ex: -c for ex, c in self.terms.items()}
        return out

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._as_poly(other))

    def __mul__(self, other) -> "MultiPoly":
        other = self._as_poly(other)
        self._check(other)
        terms: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                ex = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(ex, Fraction(0)) + c1 * c2
                if s:
                    terms[ex] = s
                else:
                    terms.pop(ex, None)
        out = MultiPoly(self.vars)
        out.terms = terms
        return out

    def __rmul__(self, other) -> "MultiPoly":
        return self * other

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise AlgebraError("negative polynomial power")
        out = MultiPoly.constant(self.vars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c) -> "MultiPoly":
        c = Fraction(c)
        out = MultiPoly(self.vars)
        if c:
            out.terms = {ex: c * t for ex, t in self.terms.items()}
        return out

    def _as_poly(self, x) -> "MultiPoly":
        if isinstance(x, MultiPoly):
            return x
        if isinstance(x, (int, Rational)):
            return MultiPoly.constant(self.vars, x)
        raise TypeError("cannot coerce %r into MultiPoly" % (x,))

    def __truediv__(self, other) -> "MultiPoly":
        """Exact division (used by fraction-free elimination); raises on failure."""
        other = self._as_poly(other)
        q = exact_divide(self, other)
        if q is None:
            raise AlgebraError("inexact multivariate division")
        return q

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Rational)):
                other = MultiPoly.constant(self.vars, other)
            else:
                return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- variable plumbing -----------------------------------------------------

    def permute_vars(self, new_order: tuple[str, ...]) -> "MultiPoly":
        """Reinterpret under a permutation of the variable tuple.

        The polynomial is unchanged mathematically; only the storage order
        moves.  To swap two variables' roles use swap_vars.
        """
        new_order = tuple(new_order)
        if sorted(new_order) != sorted(self.vars):
            raise AlgebraError("%r is not a permutation of %r" % (new_order, self.vars))
        idx = [self.vars.index(v) for v in new_order]
        out = MultiPoly(new_order)
        out.terms = {tuple(ex[i] for i in idx): c for ex, c in self.terms.items()}
        return out

    def swap_vars(self, a: str, b: str) -> "MultiPoly":
        """The polynomial with variables a and b exchanged (same var tuple)."""
        i, j = self.vars.index(a), self.vars.index(b)
        terms = {}
        for ex, c in self.terms.items():
            lst = list(ex)
            lst[i], lst[j] = lst[j], lst[i]
            terms[tuple(lst)] = c
        out = MultiPoly(self.vars)
        out.terms = terms
        return out

    def rename_vars(self, mapping: dict[str, str]) -> "MultiPoly":
        new_vars = tuple(mapping.get(v, v) for v in self.vars)
        if len(set(new_vars)) != len(new_vars):
            raise AlgebraError("renaming collides: %r" % (new_vars,))
        out = MultiPoly(new_vars)
        out.terms = dict(self.terms)
        return out

    # -- substitution -----------------------------------------------------------

    def substitute(self, name: str, value) -> "MultiPoly":
        """Replace a variable by an exact rational constant or a MultiPoly
        over the same variable tuple.  Requires nonnegative exponents in the
        substituted variable unless the value is a nonzero constant."""
        i = self.vars.index(name)
        if isinstance(value, MultiPoly):
            self._check(value)
            if self.min_exponent_in(name) < 0:
                raise AlgebraError("polynomial substitution into negative powers")
            out = MultiPoly.zero(self.vars)
            # Horner in the substituted variable.
            byexp: dict[int, MultiPoly] = {}
            for ex, c in self.terms.items():
                k = ex[i]
                rest = list(ex)
                rest[i] = 0
                part = byexp.setdefault(k, MultiPoly.zero(self.vars))
                part.terms[tuple(rest)] = part.terms.get(tuple(rest), Fraction(0)) + c
            for k in sorted(byexp, reverse=True):
                byexp[k] = MultiPoly(self.vars, byexp[k].terms)
            top = max(byexp) if byexp else 0
            for k in range(top, -1, -1):
                out = out * value + byexp.get(k, MultiPoly.zero(self.vars))
            return out
        c0 = Fraction(value)
        terms: dict[tuple, Fraction] = {}
        for ex, c in self.terms.items():
            k = ex[i]
            if k < 0 and c0 == 0:
                raise AlgebraError("substituting 0 into a negative power")
            factor = c0 ** k if k >= 0 else Fraction(1) / (c0 ** (-k))
            rest = list(ex)
            rest[i] = 0
            key = tuple(rest)
            s = terms.get(key, Fraction(0)) + c * factor
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
        out = MultiPoly(self.vars)
        out.terms = terms
        return out

    def evaluate(self, assignment: dict[str, object]):
        """Numeric value at a full assignment (complex or Fraction entries)."""
        missing = [v for v in self.vars if v not in assignment]
        if missing:
            raise AlgebraError("no value for variables %r" % missing)
        exact = all(isinstance(assignment[v], (int, Rational)) for v in self.vars)
        total = Fraction(0) if exact else 0j
        for ex, c in self.terms.items():
            term = Fraction(c) if exact else complex(c)
            for v, e in zip(self.vars, ex):
                x = assignment[v]
                if e >= 0:
                    term = term * x ** e
                else:
                    term = term / (x ** (-e))
            total = total + term
        return total

    # -- normalization ------------------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational content (gcd of numerators over lcm of denominators)."""
        if self.is_zero():
            return Fraction(0)
        from math import gcd, lcm
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def primitive_normalized(self) -> "MultiPoly":
        """Divide out the content and make the lex-leading coefficient positive."""
        if self.is_zero():
            return self
        c = self.content()
        if self.lex_leading()[1] < 0:
            c = -c
        return self.scale(Fraction(1) / c)

    # -- serialization ---------------------------------------------------------------

    def to_json_dict(self) -> dict:
        terms = []
        for ex in sorted(self.terms, reverse=True):
            c = self.terms[ex]
            terms.append([list(ex), "%d/%d" % (c.numerator, c.denominator)
                          if c.denominator != 1 else str(c.numerator)])
        return {"vars": list(self.vars), "terms": terms}

    @classmethod
    def from_json_dict(cls, data: dict) -> "MultiPoly":
        try:
            vars = tuple(data["vars"])
            terms = {tuple(int(e) for e in ex): Fraction(c)
                     for ex, c in data["terms"]}
        except (KeyError, TypeError, ValueError) as exc:
            raise AlgebraError("bad MultiPoly JSON: %s" % exc) from None
        return cls(vars, terms)

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        bits = []
        for ex in sorted(self.terms, reverse=True):
            c = self.terms[ex]
            mono = "*".join(
                (v if e == 1 else "%s^%d" % (v, e))
                for v, e in zip(self.vars, ex) if e != 0)
            mag = str(abs(c))
            if mono:
                body = mono if mag == "1" else "%s*%s" % (mag, mono)
            else:
                body = mag
            if not bits:
                bits.append("-" + body if c < 0 else body)
            else:
                bits.append(("- " if c < 0 else "+ ") + body)
        return " ".join(bits)

    def __repr__(self) -> str:
        return "MultiPoly(%s)" % self.to_text()


def exact_divide(p: MultiPoly, q: MultiPoly) -> MultiPoly | None:
    """The s with p = q*s exactly, or None if no such polynomial exists.

    Lex-leading term recursion: each step must clear the current leading
    term of the running remainder, so the first failure certifies that q
    does not divide p.  Inputs must have nonnegative exponents.
    """
    if p.vars != q.vars:
        raise AlgebraError("variable mismatch in exact_divide")
    if q.is_zero():
        raise AlgebraError("division by the zero polynomial")
    if p.has_negative_exponents() or q.has_negative_exponents():
        raise AlgebraError("exact_divide needs honest polynomials")
    quot = MultiPoly.zero(p.vars)
    rem = p
    qex, qc = q.lex_leading()
    while not rem.is_zero():
        rex, rc = rem.lex_leading()
        dex = tuple(a - b for a, b in zip(rex, qex))
        if any(e < 0 for e in dex):
            return None
        t = MultiPoly(p.vars, {dex: rc / qc})
        quot = quot + t
        rem = rem - q * t
    return quot


def sylvester_matrix(p: MultiPoly, q: MultiPoly, name: str) -> list[list[MultiPoly]]:
    """Sylvester matrix of p, q as univariate polynomials in the named
    variable; entries are MultiPolys in the remaining variables (stored
    over the same variable tuple, with the eliminated variable absent)."""
    i = p.vars.index(name)
    m, n = p.degree_in(name), q.degree_in(name)
    if m < 0 or n < 0:
        raise AlgebraError("resultant with a zero polynomial")
    if p.min_exponent_in(name) < 0 or q.min_exponent_in(name) < 0:
        raise AlgebraError("resultant needs nonnegative exponents in %r" % name)

    def coeff(poly: MultiPoly, k: int) -> MultiPoly:
        out = MultiPoly.zero(poly.vars)
        terms = {}
        for ex, c in poly.terms.items():
            if ex[i] == k:
                rest = list(ex)
                rest[i] = 0
                terms[tuple(rest)] = c
        out.terms = terms
        return out

    pc = [coeff(p, k) for k in range(m, -1, -1)]   # descending
    qc = [coeff(q, k) for k in range(n, -1, -1)]
    size = m + n
    zero = MultiPoly.zero(p.vars)
    rows = []
    for r in range(n):
        rows.append([zero] * r + pc + [zero] * (size - r - m - 1))
    for r in range(m):
        rows.append([zero] * r + qc + [zero] * (size - r - n - 1))
    return rows


def resultant(p: MultiPoly, q: MultiPoly, name: str) -> MultiPoly:
    """Resultant eliminating the named variable, as a polynomial in the rest.

    Computed as the Sylvester determinant by fraction-free elimination.
    Degenerate degrees: if either input is constant in the variable, the
    resultant is that constant raised to the other's degree.
    """
    m, n = p.degree_in(name), q.degree_in(name)
    if m < 0 or n < 0:
        raise AlgebraError("resultant with a zero polynomial")
    if m == 0:
        return p ** n
    if n == 0:
        return q ** m
    from .matrix import det
    return det(sylvester_matrix(p, q, name))
