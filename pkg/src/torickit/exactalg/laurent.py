"""Laurent polynomials in e^{lambda_1},...,e^{lambda_m} with fractional exponents.

A monomial is e^{q.lambda} for an exponent vector q with rational entries
(the fractional weights showing up at orbifold fixed points); it is stored
as a tuple of fractions.  Coefficients live in a cyclotomic field.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import Cyc, format_fraction

Exponent = tuple  # tuple of Fraction, one entry per torus factor


def exp_zero(nvars: int) -> Exponent:
    return (Fraction(0),) * nvars

def exp_add(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))

def exp_neg(a: Exponent) -> Exponent:
    return tuple(-x for x in a)

def exp_scale(c, a: Exponent) -> Exponent:
    return tuple(Fraction(c) * x for x in a)

def exp_apply(matrix, a: Exponent) -> Exponent:
    """Substitute lambda = A.mu: exponent q becomes A^T q (rows of A indexed like q)."""
    if len(matrix) != len(a):
        raise ValueError("substitution matrix has %d rows, exponent has %d entries" % (len(matrix), len(a)))
    width = len(matrix[0]) if matrix else 0
    out = [Fraction(0)] * width
    for qi, row in zip(a, matrix):
        if qi:
            for j, v in enumerate(row):
                out[j] += qi * Fraction(v)
    return tuple(out)

def format_exponent(q: Exponent) -> str:
    return "e[" + ",".join(format_fraction(Fraction(x)) for x in q) + "]"


class LaurentPoly:
    """Finite sum of cyclotomic multiples of monomials e^{q.lambda}."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        for q, c in (terms or {}).items():
            if not isinstance(c, Cyc):
                c = Cyc.rational(c)
            if c:
                clean[tuple(Fraction(x) for x in q)] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "LaurentPoly":
        return LaurentPoly(nvars)

    @staticmethod
    def one(nvars: int) -> "LaurentPoly":
        return LaurentPoly(nvars, {exp_zero(nvars): Cyc.rational(1)})

    @staticmethod
    def monomial(nvars: int, q: Exponent, coeff=1) -> "LaurentPoly":
        return LaurentPoly(nvars, {tuple(Fraction(x) for x in q): coeff if isinstance(coeff, Cyc) else Cyc.rational(coeff)})

    # -- ring operations --------------------------------------------------

    def _check(self, other: "LaurentPoly"):
        if self.nvars != other.nvars:
            raise ValueError("mixing Laurent polynomials in different tori")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        terms = dict(self.terms)
        for q, c in other.terms.items():
            acc = terms.get(q)
            s = c if acc is None else acc + c
            if s:
                terms[q] = s
            elif acc is not None:
                del terms[q]
        out = LaurentPoly.__new__(LaurentPoly)
        out.nvars, out.terms = self.nvars, terms
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out.nvars = self.nvars
        out.terms = {q: -c for q, c in self.terms.items()}
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction, Cyc)):
            c0 = other if isinstance(other, Cyc) else Cyc.rational(other)
            return LaurentPoly(self.nvars, {q: c * c0 for q, c in self.terms.items()})
        self._check(other)
        terms = {}
        for q1, c1 in self.terms.items():
            for q2, c2 in other.terms.items():
                q = exp_add(q1, q2)
                c = c1 * c2
                acc = terms.get(q)
                s = c if acc is None else acc + c
                if s:
                    terms[q] = s
                elif acc is not None:
                    del terms[q]
        out = LaurentPoly.__new__(LaurentPoly)
        out.nvars, out.terms = self.nvars, terms
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers need a monomial inverse")
        out = LaurentPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def coefficient(self, q: Exponent) -> Cyc:
        return self.terms.get(tuple(Fraction(x) for x in q), Cyc.rational(0))

    def all_rational(self) -> bool:
        return all(c.is_rational() for c in self.terms.values())

    def truncate_by(self, functional, bound) -> "LaurentPoly":
        """Keep monomials whose functional value is at most ``bound``."""
        return LaurentPoly(self.nvars, {q: c for q, c in self.terms.items() if functional(q) <= bound})

    # -- substitution and division ------------------------------------------

    def apply_matrix(self, matrix) -> "LaurentPoly":
        """Exponent substitution q -> A^T q (torus specialization)."""
        width = len(matrix[0]) if matrix else 0
        terms = {}
        for q, c in self.terms.items():
            q2 = exp_apply(matrix, q)
            acc = terms.get(q2)
            s = c if acc is None else acc + c
            if s:
                terms[q2] = s
            elif acc is not None:
                del terms[q2]
        return LaurentPoly(width, terms)

    def divide_exact(self, den: "LaurentPoly", max_steps: int = 200000):
        """Exact division: self == q * den, or None when not exactly divisible."""
        self._check(den)
        if den.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        lead = max(den.terms)
        lead_c = den.terms[lead]
        rem = dict(self.terms)
        quot = {}
        steps = 0
        while rem:
            steps += 1
            if steps > max_steps:
                return None
            q = max(rem)
            mono = tuple(a - b for a, b in zip(q, lead))
            coeff = rem[q] / lead_c
            quot[mono] = quot.get(mono, Cyc.rational(0)) + coeff
            for qd, cd in den.terms.items():
                key = exp_add(mono, qd)
                s = rem.get(key, Cyc.rational(0)) - coeff * cd
                if s:
                    rem[key] = s
                elif key in rem:
                    del rem[key]
        return LaurentPoly(self.nvars, quot)

    # -- rendering -----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for q in sorted(self.terms):
            c = self.terms[q]
            cs = str(c)
            if not c.is_rational():
                cs = "(" + cs + ")"
            if any(q):
                if cs == "1":
                    parts.append(format_exponent(q))
                elif cs == "-1":
                    parts.append("-" + format_exponent(q))
                else:
                    parts.append(cs + "*" + format_exponent(q))
            else:
                parts.append(cs)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return "LaurentPoly(%s)" % str(self)
