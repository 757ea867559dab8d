"""Truncated graded expansions of rational characters.

Substituting lambda -> t*lambda and expanding at t = 0 turns a rational
character into a Laurent series in t whose degree-n piece is a homogeneous
degree-n rational function of lambda_1..lambda_m.  Pieces of negative
degree arise from factors (1 - e^{mu}) which contribute a simple pole
1/(mu.lambda) times a Bernoulli-type series.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .cyclotomic import Cyc
from .laurent import LaurentPoly
from .ratchar import RationalCharacter


# ---------------------------------------------------------------------------
# polynomials in lambda with cyclotomic coefficients


class Poly:
    """Multivariate polynomial in lambda_1..lambda_m over a cyclotomic field."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            if not isinstance(c, Cyc):
                c = Cyc.rational(c)
            if c:
                clean[tuple(int(x) for x in e)] = c
        self.terms = clean

    @staticmethod
    def zero(nvars: int) -> "Poly":
        return Poly(nvars)

    @staticmethod
    def constant(nvars: int, value) -> "Poly":
        return Poly(nvars, {(0,) * nvars: value})

    @staticmethod
    def linear(nvars: int, coeffs) -> "Poly":
        """The linear form sum_i coeffs[i] * lambda_i."""
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * nvars
                e[i] = 1
                terms[tuple(e)] = Cyc.rational(c)
        return Poly(nvars, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, Poly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: "Poly") -> "Poly":
        terms = dict(self.terms)
        for e, c in other.terms.items():
            acc = terms.get(e)
            s = c if acc is None else acc + c
            if s:
                terms[e] = s
            elif acc is not None:
                del terms[e]
        out = Poly.__new__(Poly)
        out.nvars, out.terms = self.nvars, terms
        return out

    def __neg__(self) -> "Poly":
        out = Poly.__new__(Poly)
        out.nvars = self.nvars
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyc)):
            c0 = other if isinstance(other, Cyc) else Cyc.rational(other)
            if not c0:
                return Poly.zero(self.nvars)
            return Poly(self.nvars, {e: c * c0 for e, c in self.terms.items()})
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                acc = terms.get(e)
                s = c if acc is None else acc + c
                if s:
                    terms[e] = s
                elif acc is not None:
                    del terms[e]
        out = Poly.__new__(Poly)
        out.nvars, out.terms = self.nvars, terms
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        out = Poly.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def all_rational(self) -> bool:
        return all(c.is_rational() for c in self.terms.values())

    def monomial_content(self):
        """Componentwise minimum exponent over the support."""
        if not self.terms:
            return None
        mins = [min(e[i] for e in self.terms) for i in range(self.nvars)]
        return tuple(mins)

    def shift_down(self, content) -> "Poly":
        return Poly(self.nvars, {tuple(a - b for a, b in zip(e, content)): c for e, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda t: (sum(t), t), reverse=True):
            c = self.terms[e]
            mono = "*".join(
                ("l%d" % (i + 1) if k == 1 else "l%d^%d" % (i + 1, k)) for i, k in enumerate(e) if k
            )
            cs = str(c)
            if not c.is_rational():
                cs = "(" + cs + ")"
            if mono:
                if cs == "1":
                    parts.append(mono)
                elif cs == "-1":
                    parts.append("-" + mono)
                else:
                    parts.append(cs + "*" + mono)
            else:
                parts.append(cs)
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


class RatFun:
    """Quotient of polynomials, used for homogeneous graded pieces."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = None):
        if den is None:
            den = Poly.constant(num.nvars, 1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = Poly.constant(num.nvars, 1)
        else:
            nc, dc = num.monomial_content(), den.monomial_content()
            common = tuple(min(a, b) for a, b in zip(nc, dc))
            if any(common):
                num, den = num.shift_down(common), den.shift_down(common)
            if len(num.terms) == len(den.terms) and not (
                len(den.terms) == 1 and not any(next(iter(den.terms)))
            ):
                # collapse scalar multiples of the denominator
                key = next(iter(den.terms))
                top = num.terms.get(key)
                if top is not None:
                    ratio = top / den.terms[key]
                    if den * ratio == num:
                        num = Poly.constant(num.nvars, 1) * ratio
                        den = Poly.constant(num.nvars, 1)
        self.num = num
        self.den = den

    @staticmethod
    def scalar(nvars: int, value) -> "RatFun":
        return RatFun(Poly.constant(nvars, value))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFun.scalar(self.num.nvars, other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return (self.num * other.den) == (other.num * self.den)

    def __hash__(self):
        raise TypeError("RatFun is unhashable")

    def __add__(self, other: "RatFun") -> "RatFun":
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyc)):
            return RatFun(self.num * other, self.den)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def all_rational(self) -> bool:
        return self.num.all_rational() and self.den.all_rational()

    def __str__(self):
        if self.den == Poly.constant(self.num.nvars, 1):
            return str(self.num)
        ns = str(self.num)
        if len(self.num.terms) > 1:
            ns = "(" + ns + ")"
        ds = str(self.den)
        if len(self.den.terms) > 1:
            ds = "(" + ds + ")"
        return ns + "/" + ds

    __repr__ = __str__


class GradedSeries:
    """Map degree -> homogeneous rational function, truncated above ``order``."""

    __slots__ = ("nvars", "order", "data")

    def __init__(self, nvars: int, order: int, data=None):
        self.nvars = nvars
        self.order = order
        self.data = {}
        for n, piece in (data or {}).items():
            if n <= order and not piece.is_zero():
                self.data[n] = piece

    @staticmethod
    def zero(nvars: int, order: int) -> "GradedSeries":
        return GradedSeries(nvars, order, {})

    def lower_bound(self):
        return min(self.data) if self.data else None

    def coefficient(self, n: int) -> RatFun:
        return self.data.get(n, RatFun.scalar(self.nvars, 0))

    def __add__(self, other: "GradedSeries") -> "GradedSeries":
        order = min(self.order, other.order)
        data = {}
        for n in set(self.data) | set(other.data):
            if n <= order:
                data[n] = self.coefficient(n) + other.coefficient(n)
        return GradedSeries(self.nvars, order, data)

    def __neg__(self):
        return GradedSeries(self.nvars, self.order, {n: -p for n, p in self.data.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "GradedSeries") -> "GradedSeries":
        # a factor known to degree N with lowest degree n0 limits the
        # product to degree (other's order) + n0
        la, lb = self.lower_bound(), other.lower_bound()
        if la is None or lb is None:
            return GradedSeries.zero(self.nvars, min(self.order, other.order))
        order = min(self.order + lb, other.order + la)
        data = {}
        for n1, p1 in self.data.items():
            for n2, p2 in other.data.items():
                n = n1 + n2
                if n <= order:
                    prod = p1 * p2
                    data[n] = data[n] + prod if n in data else prod
        return GradedSeries(self.nvars, order, data)

    def __eq__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return self.first_mismatch(other) is None

    def __hash__(self):
        raise TypeError("GradedSeries is unhashable")

    def first_mismatch(self, other: "GradedSeries"):
        """Smallest degree where the two series differ, or None."""
        order = min(self.order, other.order)
        for n in sorted(set(self.data) | set(other.data)):
            if n > order:
                break
            if self.coefficient(n) != other.coefficient(n):
                return n
        return None

    def all_rational(self) -> bool:
        return all(p.all_rational() for p in self.data.values())

    def __str__(self):
        if not self.data:
            return "0 (+ O(deg %d))" % (self.order + 1)
        parts = []
        for n in sorted(self.data):
            parts.append("[%d] %s" % (n, self.data[n]))
        return "  +  ".join(parts) + "  + O(deg %d)" % (self.order + 1)

    __repr__ = __str__


# ---------------------------------------------------------------------------
# classical coefficient sequences


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli numbers with B_1 = -1/2."""
    if n == 0:
        return Fraction(1)
    return -Fraction(1, n + 1) * sum(Fraction(comb(n + 1, k)) * bernoulli(k) for k in range(n))


@lru_cache(maxsize=None)
def todd_coefficient(n: int) -> Fraction:
    """Coefficients of x/(1 - e^{-x}), computed by series inversion."""
    # g(x) = (1 - e^{-x})/x has g_k = (-1)^k/(k+1)!; td = 1/g.
    if n == 0:
        return Fraction(1)
    fact = [Fraction(1)]
    for k in range(1, n + 2):
        fact.append(fact[-1] * k)
    g = [Fraction((-1) ** k, 1) / fact[k + 1] for k in range(n + 1)]
    return -sum(g[k] * todd_coefficient(n - k) for k in range(1, n + 1))


# ---------------------------------------------------------------------------
# t-series with polynomial coefficients


def tseries_mul(a: dict, b: dict, nmax: int) -> dict:
    out: dict[int, Poly] = {}
    for na, pa in a.items():
        for nb, pb in b.items():
            n = na + nb
            if n <= nmax:
                prod = pa * pb
                out[n] = out[n] + prod if n in out else prod
    return {n: p for n, p in out.items() if not p.is_zero()}


def exp_tseries(linear: Poly, nmax: int, scale=None) -> dict:
    """Series of coeff * e^{t * linear} as {n: linear^n/n! * coeff}."""
    out = {}
    power = Poly.constant(linear.nvars, 1)
    fact = Fraction(1)
    for n in range(nmax + 1):
        if n:
            power = power * linear
            fact *= n
        piece = power * (Fraction(1) / fact)
        if scale is not None:
            piece = piece * scale
        if not piece.is_zero():
            out[n] = piece
    return out


def bernoulli_tseries(linear: Poly, nmax: int) -> dict:
    """Series sum_n B_n/n! (t*linear)^n, the regular part of 1/(1-e^{t*linear})."""
    out = {}
    power = Poly.constant(linear.nvars, 1)
    fact = Fraction(1)
    for n in range(nmax + 1):
        if n:
            power = power * linear
            fact *= n
        piece = power * (bernoulli(n) / fact)
        if not piece.is_zero():
            out[n] = piece
    return out


def todd_tseries(linear: Poly, nmax: int) -> dict:
    """Series of Todd(t*linear) = (t*linear)/(1 - e^{-t*linear})."""
    out = {}
    power = Poly.constant(linear.nvars, 1)
    for n in range(nmax + 1):
        if n:
            power = power * linear
        piece = power * todd_coefficient(n)
        if not piece.is_zero():
            out[n] = piece
    return out


def regular_factor_tseries(c: Cyc, linear: Poly, nmax: int) -> dict:
    """Series of 1/(1 - c*e^{t*linear}) for c != 1 (regular at t = 0)."""
    a0 = (Cyc.rational(1) - c).inverse()
    # E = e^{t*linear} - 1; expansion a0 * sum_k (c*a0)^k E^k
    e_series = exp_tseries(linear, nmax)
    e_series.pop(0, None)
    out = {0: Poly.constant(linear.nvars, 1)}
    ek = {0: Poly.constant(linear.nvars, 1)}
    ratio = c * a0
    factor = ratio
    for k in range(1, nmax + 1):
        ek = tseries_mul(ek, e_series, nmax)
        if not ek:
            break
        for n, p in ek.items():
            piece = p * factor
            out[n] = out[n] + piece if n in out else piece
        factor = factor * ratio
    return {n: p * a0 for n, p in out.items()}


# ---------------------------------------------------------------------------
# the expansion itself


def expand_rational(x, order: int) -> GradedSeries:
    """Laurent-expand a rational character after lambda -> t*lambda.

    Denominator factors (1 - c e^{mu}) with c = 1 and mu != 0 contribute a
    simple pole 1/(mu.lambda); every other factor must have c != 1.  The
    result collects homogeneous pieces of degree n for n up to ``order``.
    """
    if isinstance(x, LaurentPoly):
        x = RationalCharacter.from_poly(x)
    nvars = x.nvars
    one = Cyc.rational(1)
    total = GradedSeries.zero(nvars, order)
    for num, den in x.terms:
        poles = [f for f in den if f.c == one]
        regulars = [f for f in den if f.c != one]
        npoles = len(poles)
        nmax = order + npoles
        series = {}
        for q, c in num.terms.items():
            lam = Poly.linear(nvars, q)
            for n, p in exp_tseries(lam, nmax, scale=c).items():
                series[n] = series[n] + p if n in series else p
        for f in poles:
            series = tseries_mul(series, bernoulli_tseries(Poly.linear(nvars, f.mu), nmax), nmax)
        for f in regulars:
            series = tseries_mul(series, regular_factor_tseries(f.c, Poly.linear(nvars, f.mu), nmax), nmax)
        den_poly = Poly.constant(nvars, 1)
        for f in poles:
            den_poly = den_poly * Poly.linear(nvars, f.mu)
        sign = Fraction((-1) ** npoles)
        data = {}
        for n, p in series.items():
            data[n - npoles] = RatFun(p * sign, den_poly)
        total = total + GradedSeries(nvars, order, data)
    return total
