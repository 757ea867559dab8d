"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A :class:`Cyc` holds an element of the N-th cyclotomic field in the power
basis 1, z, ..., z^(phi(N)-1) of a primitive N-th root of unity z, with
rational coordinates.  Arithmetic is exact; values that happen to be
rational collapse to conductor 1, and every value is kept at its minimal
conductor so that equality and hashing are structural.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    """Quotient and remainder of dense rational polynomials (low degree first)."""
    num = list(num)
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    dlead = den[-1]
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] / dlead
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    while num and not num[-1]:
        num.pop()
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[Fraction, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    if n == 1:
        return (Fraction(-1), Fraction(1))
    # (x^n - 1) / prod_{d|n, d<n} Phi_d
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not r, "cyclotomic division must be exact"
            poly = q
    return tuple(poly)


@lru_cache(maxsize=None)
def _phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce_mod_cyclotomic(coeffs: list[Fraction], n: int) -> list[Fraction]:
    """Reduce a dense polynomial in z modulo Phi_n; returns length phi(n)."""
    phi = _phi(n)
    mod = cyclotomic_polynomial(n)
    coeffs = list(coeffs)
    for i in range(len(coeffs) - 1, phi - 1, -1):
        c = coeffs[i]
        if c:
            coeffs[i] = Fraction(0)
            for j in range(phi):
                coeffs[i - phi + j] -= c * mod[j]
    coeffs = coeffs[:phi]
    coeffs += [Fraction(0)] * (phi - len(coeffs))
    return coeffs


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def _embedding_matrix(m: int, n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Column j is zeta_n^(j*n/m) in the power basis of zeta_n, j < phi(m)."""
    cols = []
    for j in range(_phi(m)):
        e = j * (n // m)
        vec = [Fraction(0)] * (e + 1)
        vec[e] = Fraction(1)
        cols.append(tuple(_reduce_mod_cyclotomic(vec, n)))
    return tuple(cols)


def _solve_in_subfield(coeffs, m, n):
    """Express an element of Q(zeta_n) in the zeta_m power basis, or None."""
    cols = _embedding_matrix(m, n)
    rows, ncols = _phi(n), _phi(m)
    aug = [[cols[j][i] for j in range(ncols)] + [coeffs[i]] for i in range(rows)]
    sol = [Fraction(0)] * ncols
    pivot_row = 0
    pivots = []
    for col in range(ncols):
        sel = next((r for r in range(pivot_row, rows) if aug[r][col]), None)
        if sel is None:
            continue
        aug[pivot_row], aug[sel] = aug[sel], aug[pivot_row]
        pr = aug[pivot_row]
        inv = 1 / pr[col]
        aug[pivot_row] = [v * inv for v in pr]
        for r in range(rows):
            if r != pivot_row and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    for r in range(pivot_row, rows):
        if aug[r][ncols]:
            return None
    for r, col in enumerate(pivots):
        sol[col] = aug[r][ncols]
    return sol


class Cyc:
    """An element of a cyclotomic field, always at minimal conductor."""

    __slots__ = ("n", "coeffs", "_hash")

    def __init__(self, n: int, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        coeffs = _reduce_mod_cyclotomic(coeffs, n)
        # collapse to the smallest cyclotomic subfield containing the value
        if n > 1:
            if not any(coeffs[1:]):
                n, coeffs = 1, coeffs[:1]
            else:
                for m in _divisors(n):
                    if m < n and m % 4 != 2:
                        sub = _solve_in_subfield(coeffs, m, n)
                        if sub is not None:
                            n, coeffs = m, sub
                            break
        self.n = n
        self.coeffs = tuple(coeffs)
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def rational(value) -> "Cyc":
        return Cyc(1, [Fraction(value)])

    @staticmethod
    def root_of_unity(theta) -> "Cyc":
        """exp(2*pi*i*theta) for rational theta."""
        theta = Fraction(theta) % 1
        n, k = theta.denominator, theta.numerator
        vec = [Fraction(0)] * (k + 1)
        vec[k] = Fraction(1)
        return Cyc(n, vec)

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return self.n == 1

    def rational_value(self) -> Fraction:
        if self.n != 1:
            raise ValueError("not a rational value: %r" % (self,))
        return self.coeffs[0]

    def as_root_of_unity(self):
        """Return theta with self == exp(2*pi*i*theta), or None."""
        if self == _ONE:
            return Fraction(0)
        for k in range(1, 2 * self.n):
            if self == Cyc.root_of_unity(Fraction(k, 2 * self.n)):
                return Fraction(k, 2 * self.n)
        return None

    # -- arithmetic ----------------------------------------------------

    def _promoted(self, n: int) -> list[Fraction]:
        if n == self.n:
            return list(self.coeffs)
        cols = _embedding_matrix(self.n, n)
        out = [Fraction(0)] * _phi(n)
        for j, c in enumerate(self.coeffs):
            if c:
                for i, v in enumerate(cols[j]):
                    out[i] += c * v
        return out

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.n == 1 and other.n == 1:
            return Cyc(1, [self.coeffs[0] + other.coeffs[0]])
        n = self.n * other.n // gcd(self.n, other.n)
        a, b = self._promoted(n), other._promoted(n)
        return Cyc(n, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.n, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.n == 1 and other.n == 1:
            return Cyc(1, [self.coeffs[0] * other.coeffs[0]])
        if self.n == 1:
            q = self.coeffs[0]
            return Cyc(other.n, [q * c for c in other.coeffs])
        if other.n == 1:
            q = other.coeffs[0]
            return Cyc(self.n, [q * c for c in self.coeffs])
        n = self.n * other.n // gcd(self.n, other.n)
        a, b = self._promoted(n), other._promoted(n)
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyc(n, prod)

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic value")
        if self.n == 1:
            return Cyc(1, [1 / self.coeffs[0]])
        # extended Euclid: u*self + v*Phi_n = 1 in Q[z]
        mod = list(cyclotomic_polynomial(self.n))
        r0, r1 = mod, [c for c in self.coeffs]
        while r1 and not r1[-1]:
            r1.pop()
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            if len(r1) == 1:
                inv = 1 / r1[0]
                return Cyc(self.n, [c * inv for c in s1])
            q, r = _poly_divmod(r0, r1)
            s = list(s0)
            s += [Fraction(0)] * (len(q) + len(s1) - 1 - len(s))
            for i, qc in enumerate(q):
                if qc:
                    for j, sc in enumerate(s1):
                        s[i + j] -= qc * sc
            while s and not s[-1]:
                s.pop()
            r0, r1, s0, s1 = r1, r, s1, s or [Fraction(0)]

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = _ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.coeffs))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # -- rendering -------------------------------------------------------

    def __repr__(self):
        return "Cyc(%d, %s)" % (self.n, list(self.coeffs))

    def __str__(self):
        if self.n == 1:
            return format_fraction(self.coeffs[0])
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(format_fraction(c))
            else:
                mon = "z%d" % self.n if k == 1 else "z%d^%d" % (self.n, k)
                if c == 1:
                    parts.append(mon)
                elif c == -1:
                    parts.append("-" + mon)
                else:
                    parts.append(format_fraction(c) + "*" + mon)
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _coerce(value):
    if isinstance(value, Cyc):
        return value
    if isinstance(value, (int, Fraction)):
        return Cyc(1, [Fraction(value)])
    return NotImplemented


def format_fraction(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)


def parse_fraction(text) -> Fraction:
    """Parse "p/q" or an integer literal (also accepts ints directly)."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    return Fraction(str(text).strip())


_ONE = Cyc(1, [Fraction(1)])
ZERO = Cyc(1, [Fraction(0)])
ONE = _ONE
