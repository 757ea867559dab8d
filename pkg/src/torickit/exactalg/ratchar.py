"""Rational characters: sums of fractions num / prod (1 - c e^{mu.lambda}).

This is the shape localization produces, and it is kept that way: terms
accumulate, nothing is eagerly put over a common denominator, and no
multivariate gcd is ever attempted.  Equality clears the finite set of
denominator factors and compares Laurent polynomials exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import Cyc
from .laurent import LaurentPoly, exp_apply, exp_zero, format_exponent


class DenominatorCollapseError(ValueError):
    """A specialization sent a denominator factor to zero identically."""


@dataclass(frozen=True)
class Factor:
    """One denominator factor (1 - c * e^{mu.lambda})."""

    c: Cyc
    mu: tuple

    def sort_key(self):
        return (self.mu, self.c.n, self.c.coeffs)

    def as_poly(self, nvars: int) -> LaurentPoly:
        return LaurentPoly(nvars, {exp_zero(nvars): Cyc.rational(1), self.mu: -self.c})

    def __str__(self):
        cs = str(self.c)
        if cs == "1":
            return "(1 - %s)" % format_exponent(self.mu)
        if cs == "-1":
            return "(1 + %s)" % format_exponent(self.mu)
        return "(1 - (%s)*%s)" % (cs, format_exponent(self.mu))


def _normalize_factors(num: LaurentPoly, factors):
    """Fold constant factors into the numerator; reject identically-zero ones."""
    kept = []
    for f in factors:
        if not isinstance(f, Factor):
            f = Factor(f[0] if isinstance(f[0], Cyc) else Cyc.rational(f[0]), tuple(Fraction(x) for x in f[1]))
        if any(f.mu):
            kept.append(f)
        elif f.c == Cyc.rational(1):
            raise DenominatorCollapseError("denominator factor (1 - e^0) vanishes identically")
        else:
            num = num * (Cyc.rational(1) - f.c).inverse()
    kept.sort(key=Factor.sort_key)
    return num, tuple(kept)


class RationalCharacter:
    """A finite sum of terms  numerator / prod of (1 - c e^{mu})."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        merged = {}
        for num, factors in terms or []:
            num, den = _normalize_factors(num, factors)
            if num.is_zero():
                continue
            prev = merged.get(den)
            merged[den] = num if prev is None else prev + num
        self.terms = tuple((n, d) for d, n in merged.items() if not n.is_zero())

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "RationalCharacter":
        return RationalCharacter(nvars, [])

    @staticmethod
    def from_poly(poly: LaurentPoly) -> "RationalCharacter":
        return RationalCharacter(poly.nvars, [(poly, ())])

    @staticmethod
    def one(nvars: int) -> "RationalCharacter":
        return RationalCharacter.from_poly(LaurentPoly.one(nvars))

    @staticmethod
    def fraction(num: LaurentPoly, factors) -> "RationalCharacter":
        return RationalCharacter(num.nvars, [(num, factors)])

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("characters live on different tori")

    def __add__(self, other: "RationalCharacter") -> "RationalCharacter":
        self._check(other)
        return RationalCharacter(self.nvars, list(self.terms) + list(other.terms))

    def __neg__(self) -> "RationalCharacter":
        return RationalCharacter(self.nvars, [(-n, d) for n, d in self.terms])

    def __sub__(self, other: "RationalCharacter") -> "RationalCharacter":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyc)):
            return RationalCharacter(self.nvars, [(n * other, d) for n, d in self.terms])
        self._check(other)
        out = []
        for n1, d1 in self.terms:
            for n2, d2 in other.terms:
                out.append((n1 * n2, d1 + d2))
        return RationalCharacter(self.nvars, out)

    __rmul__ = __mul__

    # -- structure ------------------------------------------------------------

    def specialize(self, matrix) -> "RationalCharacter":
        """Restrict to a subtorus: every exponent q becomes A^T q.

        Raises DenominatorCollapseError when a factor (1 - e^{mu}) lands on
        zero; constant nonzero factors are folded into the numerator.
        """
        width = len(matrix[0]) if matrix else 0
        out = []
        for num, den in self.terms:
            new_num = num.apply_matrix(matrix)
            new_den = [Factor(f.c, exp_apply(matrix, f.mu)) for f in den]
            out.append((new_num, new_den))
        return RationalCharacter(width, out)

    def denominator_factors(self) -> dict:
        """Multiset (factor -> max multiplicity over terms) of all factors."""
        common: dict[Factor, int] = {}
        for _, den in self.terms:
            counts: dict[Factor, int] = {}
            for f in den:
                counts[f] = counts.get(f, 0) + 1
            for f, k in counts.items():
                if common.get(f, 0) < k:
                    common[f] = k
        return common

    def cleared_fraction(self) -> tuple[LaurentPoly, LaurentPoly]:
        """Single numerator and expanded common denominator (no reduction)."""
        common = self.denominator_factors()
        num_total = LaurentPoly.zero(self.nvars)
        for num, den in self.terms:
            counts: dict[Factor, int] = {}
            for f in den:
                counts[f] = counts.get(f, 0) + 1
            part = num
            for f, k in common.items():
                extra = k - counts.get(f, 0)
                for _ in range(extra):
                    part = part * f.as_poly(self.nvars)
            num_total = num_total + part
        den_total = LaurentPoly.one(self.nvars)
        for f, k in common.items():
            for _ in range(k):
                den_total = den_total * f.as_poly(self.nvars)
        return num_total, den_total

    def as_laurent_polynomial(self):
        """The character as a finite Laurent polynomial, or None if it is not one."""
        num, den = self.cleared_fraction()
        if den == LaurentPoly.one(self.nvars):
            return num
        return num.divide_exact(den)

    def is_zero(self) -> bool:
        if not self.terms:
            return True
        num, _ = self.cleared_fraction()
        return num.is_zero()

    def power_series(self, bound, functional=None) -> LaurentPoly:
        """Geometric expansion keeping monomials of functional value <= bound.

        Every denominator factor must have strictly positive functional value
        (default: total exponent degree), which is the regime where the
        character is an honest power series in the e^{lambda} variables.
        """
        phi = functional or (lambda q: sum(q))
        total = LaurentPoly.zero(self.nvars)
        for num, den in self.terms:
            part = num.truncate_by(phi, bound)
            if part.is_zero():
                continue
            # monomials of negative grade in the numerator push the factor
            # expansions correspondingly further
            reach = bound - min(min(phi(q) for q in part.terms), 0)
            for f in den:
                step = phi(f.mu)
                if step <= 0:
                    raise ValueError("factor %s is not expandable in this grading" % f)
                terms = {exp_zero(self.nvars): Cyc.rational(1)}
                acc_mu, acc_c = f.mu, f.c
                while phi(acc_mu) <= reach:
                    terms[acc_mu] = acc_c
                    acc_mu = tuple(a + b for a, b in zip(acc_mu, f.mu))
                    acc_c = acc_c * f.c
                part = (part * LaurentPoly(self.nvars, terms)).truncate_by(phi, bound)
            total = total + part
        return total.truncate_by(phi, bound)

    # -- comparison and rendering ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, RationalCharacter):
            return NotImplemented
        return rat_equal(self, other)

    def __hash__(self):  # structural identity only makes sense via rat_equal
        raise TypeError("rational characters are unhashable")

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for num, den in sorted(self.terms, key=lambda t: tuple(f.sort_key() for f in t[1])):
            ns = str(num)
            if den:
                if len(num.terms) > 1:
                    ns = "(" + ns + ")"
                chunks.append(ns + " / " + "".join(str(f) for f in den))
            else:
                chunks.append(ns)
        return "  +  ".join(chunks)

    def __repr__(self):
        return "RationalCharacter(%s)" % str(self)


def rat_equal(a: RationalCharacter, b: RationalCharacter) -> bool:
    """Exact equality of rational characters as rational functions."""
    a._check(b)
    return (a - b).is_zero()


def specialize(x, matrix):
    """Apply the subtorus substitution q -> A^T q to a Laurent polynomial or
    rational character."""
    if isinstance(x, RationalCharacter):
        return x.specialize(matrix)
    if isinstance(x, LaurentPoly):
        return x.apply_matrix(matrix)
    raise TypeError("specialize expects a LaurentPoly or RationalCharacter")
