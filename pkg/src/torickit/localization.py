"""Fixed-point data and equivariant Euler characteristics by localization.

Every torus-fixed point of the quotient is a minimal anticone delta.  Its
isotropy group is the finite kernel cut out by the delta-columns of the
weight matrix; tangent directions carry fractional weights obtained by
solving each remaining character against the delta-basis.  The Euler
characteristic of a class is the averaged sum over fixed points and
isotropy elements of fiber traces divided by the K-theoretic Euler class
of the normal directions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConvergenceError, InputError
from .exactalg import (
    Cyc,
    Factor,
    GradedSeries,
    IntMatrix,
    LaurentPoly,
    Poly,
    RatFun,
    RationalCharacter,
    rational_solve,
    smith_normal_form,
)
from .exactalg.laurent import exp_apply
from .exactalg.lp import weights_convex
from .exactalg.series import (
    exp_tseries,
    regular_factor_tseries,
    todd_tseries,
    tseries_mul,
)
from .gitdata import GITData, fixed_points, validate


class EquivClass:
    """Formal integer combination of line classes (u, s).

    u is a character of the gauge torus (length r), s a character of the
    big torus (length m); (u, s) is the equivariant line bundle induced by
    that pair on any quotient built from the same weight data.
    """

    __slots__ = ("r", "m", "terms")

    def __init__(self, r: int, m: int, terms=None):
        self.r = r
        self.m = m
        clean = {}
        for (u, s), coeff in (terms or {}).items():
            u = tuple(int(x) for x in u)
            s = tuple(int(x) for x in s)
            if len(u) != r or len(s) != m:
                raise InputError("line class has wrong character lengths")
            coeff = int(coeff)
            if coeff:
                clean[(u, s)] = clean.get((u, s), 0) + coeff
        self.terms = {k: v for k, v in clean.items() if v}

    @staticmethod
    def zero(r: int, m: int) -> "EquivClass":
        return EquivClass(r, m)

    @staticmethod
    def line(r: int, m: int, u, s=None, coeff: int = 1) -> "EquivClass":
        s = tuple(s) if s is not None else (0,) * m
        return EquivClass(r, m, {(tuple(u), s): coeff})

    def _check(self, other: "EquivClass"):
        if (self.r, self.m) != (other.r, other.m):
            raise InputError("classes live on different GIT data shapes")

    def __add__(self, other: "EquivClass") -> "EquivClass":
        self._check(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return EquivClass(self.r, self.m, terms)

    def __neg__(self) -> "EquivClass":
        return EquivClass(self.r, self.m, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return EquivClass(self.r, self.m, {k: other * v for k, v in self.terms.items()})
        return self.tensor(other)

    __rmul__ = __mul__

    def tensor(self, other: "EquivClass") -> "EquivClass":
        self._check(other)
        out = {}
        for (u1, s1), c1 in self.terms.items():
            for (u2, s2), c2 in other.terms.items():
                key = (tuple(a + b for a, b in zip(u1, u2)), tuple(a + b for a, b in zip(s1, s2)))
                out[key] = out.get(key, 0) + c1 * c2
        return EquivClass(self.r, self.m, out)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, EquivClass)
            and (self.r, self.m, self.terms) == (other.r, other.m, other.terms)
        )

    def __hash__(self):
        return hash((self.r, self.m, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_json_list(self) -> list:
        return [{"u": list(u), "s": list(s), "coeff": c} for (u, s), c in self.sorted_terms()]

    @staticmethod
    def from_json_list(r: int, m: int, obj) -> "EquivClass":
        if not isinstance(obj, list):
            raise InputError("class spec must be a JSON list")
        terms = {}
        for entry in obj:
            if not isinstance(entry, dict) or "u" not in entry:
                raise InputError("each class spec entry needs at least a 'u' field")
            unknown = set(entry) - {"u", "s", "coeff"}
            if unknown:
                raise InputError("unknown fields in class spec: %s" % ", ".join(sorted(unknown)))
            u = tuple(int(x) for x in entry["u"])
            s = tuple(int(x) for x in entry.get("s", [0] * m))
            coeff = int(entry.get("coeff", 1))
            key = (u, s)
            terms[key] = terms.get(key, 0) + coeff
        return EquivClass(r, m, terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (u, s), c in self.sorted_terms():
            core = "(u=%s; s=%s)" % (",".join(map(str, u)), ",".join(map(str, s)))
            parts.append(("%+d*" % c) + core)
        return " ".join(parts)

    __repr__ = __str__


@dataclass(frozen=True)
class FixedPointData:
    """Isotropy and tangent data of the fixed point attached to an anticone."""

    data: GITData
    delta: tuple[int, ...]
    group_order: int
    group_elements: tuple[tuple[Fraction, ...], ...]
    tangent_indices: tuple[int, ...]
    tangent_coeffs: dict
    tangent_weights: dict
    eigen_angles: tuple

    def angles(self, g_index: int):
        """Eigen-angle of each tangent coordinate for one isotropy element."""
        return dict(zip(self.tangent_indices, self.eigen_angles[g_index]))

    def fiber_exponent(self, u, s) -> tuple:
        """Weight of the line class (u, s) at this fixed point, length-m exponent."""
        coeffs = rational_solve(self.data.submatrix_columns(self.delta), u)
        if coeffs is None:
            raise InputError("gauge character does not lie in the delta-span")
        exp = [Fraction(x) for x in s]
        for c, i in zip(coeffs, sorted(self.delta)):
            exp[i - 1] += c
        return tuple(exp)


def fixed_point_data(data: GITData, delta) -> FixedPointData:
    """Isotropy group, tangent weights and eigen-angles at a minimal anticone."""
    delta = tuple(sorted(delta))
    if len(delta) != data.r:
        raise InputError("fixed points are anticones of size r")
    from .exactalg.lp import cone_contains

    if not cone_contains(data.submatrix_columns(delta), data.omega, strict=True):
        raise InputError("{%s} is not an anticone for this stability condition" % ",".join(map(str, delta)))
    cols = data.submatrix_columns(delta)
    r = data.r
    dmat = IntMatrix.from_rows([[cols[j][i] for j in range(r)] for i in range(r)])
    det = dmat.det()
    if det == 0:
        raise InputError("delta-columns are degenerate")
    order = abs(det)

    # group elements: v in Q^r / Z^r with D_delta^T v integral, via Smith form
    _, s, v = smith_normal_form(dmat.transpose())
    diag = [s[(k, k)] for k in range(r)]
    elements = set()
    for combo in itertools.product(*[range(d) for d in diag]):
        y = [Fraction(j, d) for j, d in zip(combo, diag)]
        vec = tuple(
            sum(Fraction(v[(i, k)]) * y[k] for k in range(r)) % 1 for i in range(r)
        )
        elements.add(vec)
    assert len(elements) == order, "isotropy enumeration does not match the determinant"
    elements = tuple(sorted(elements))

    tangent = tuple(j for j in range(1, data.m + 1) if j not in delta)
    coeffs = {}
    weights = {}
    for j in tangent:
        c = rational_solve(cols, data.character(j))
        assert c is not None, "delta-columns span by the validity assumption"
        coeffs[j] = tuple(c)
        w = [Fraction(0)] * data.m
        w[j - 1] = Fraction(1)
        for ci, i in zip(c, delta):
            w[i - 1] -= ci
        weights[j] = tuple(w)
    angles = tuple(
        tuple((-sum(Fraction(d) * x for d, x in zip(data.character(j), vel))) % 1 for j in tangent)
        for vel in elements
    )
    return FixedPointData(data, delta, order, elements, tangent, coeffs, weights, angles)


def restrict(E: EquivClass, fp: FixedPointData, g) -> LaurentPoly:
    """Trace of (g, e^lambda) on the fiber of E at the fixed point.

    ``g`` is a group element (a vector of fractions) or its index.  Each
    line class (u, s) contributes a root-of-unity times one monomial.
    """
    if isinstance(g, int):
        g = fp.group_elements[g]
    out = LaurentPoly.zero(fp.data.m)
    for (u, s), coeff in E.sorted_terms():
        angle = sum(Fraction(a) * b for a, b in zip(u, g)) % 1
        zeta = Cyc.root_of_unity(angle) * coeff
        out = out + LaurentPoly.monomial(fp.data.m, fp.fiber_exponent(u, s), zeta)
    return out


def _certificate(fps, subtorus):
    for fp in fps:
        ws = [fp.tangent_weights[j] for j in fp.tangent_indices]
        if subtorus is not None:
            ws = [exp_apply(subtorus, w) for w in ws]
        if not weights_convex(ws):
            raise ConvergenceError(
                "tangent weights at fixed point {%s} are not strictly convex"
                % ",".join(map(str, fp.delta))
            )


def _all_fixed_point_data(data: GITData):
    return [fixed_point_data(data, d) for d in sorted(fixed_points(data), key=lambda s: tuple(sorted(s)))]


def euler_characteristic(
    data: GITData,
    E: EquivClass,
    subtorus=None,
    certify: bool = True,
    check: bool = True,
    collapse: bool = False,
) -> RationalCharacter:
    """The equivariant Euler characteristic of E as a rational character.

    Sums, over fixed points delta and isotropy elements g, the fiber trace
    divided by prod_j (1 - zeta^theta_{g,j} e^{w_j}) over the tangent
    directions, averaged by the group order.  Terms are kept one per
    (delta, g); with ``collapse`` the isotropy sum of each fixed point is
    combined into a single fraction with rational coefficients, which is
    cheaper to compare against other characters.

    ``subtorus`` restricts the answer to a subtorus (exponents q become
    A^T q); with ``certify`` the tangent weights at every fixed point must
    pass the strict-convexity test, which is what rules out specializations
    with infinite-dimensional weight spaces.
    """
    if E.r != data.r or E.m != data.m:
        raise InputError("class shape does not match the GIT data")
    if check:
        report = validate(data)
        if not report.passed:
            raise InputError("invalid GIT data: %s" % "; ".join(report.failures))
    fps = _all_fixed_point_data(data)
    if certify:
        _certificate(fps, subtorus)
    terms = []
    for fp in fps:
        if collapse:
            terms.extend(_collapsed_terms(fp, E))
        else:
            scale = Fraction(1, fp.group_order)
            for gi, g in enumerate(fp.group_elements):
                num = restrict(E, fp, g) * scale
                factors = [
                    Factor(Cyc.root_of_unity(theta), fp.tangent_weights[j])
                    for j, theta in fp.angles(gi).items()
                ]
                terms.append((num, factors))
    chi = RationalCharacter(data.m, terms)
    if subtorus is not None:
        chi = chi.specialize(subtorus)
    return chi


def _collapsed_terms(fp: FixedPointData, E: EquivClass):
    """One fraction per fixed point: the isotropy average with the
    root-of-unity orbit of each tangent factor multiplied out."""
    m = fp.data.m
    orders = {}
    for j_idx, j in enumerate(fp.tangent_indices):
        mj = 1
        for gi in range(fp.group_order):
            theta = fp.eigen_angles[gi][j_idx]
            mj = mj * theta.denominator // _gcd(mj, theta.denominator)
        orders[j] = mj
    numerator = LaurentPoly.zero(m)
    for gi in range(fp.group_order):
        part = restrict(E, fp, gi)
        for j_idx, j in enumerate(fp.tangent_indices):
            w = fp.tangent_weights[j]
            mj = orders[j]
            theta = fp.eigen_angles[gi][j_idx]
            big = Factor(Cyc.rational(1), tuple(mj * x for x in w)).as_poly(m)
            for _ in range(fp.group_order // mj - 1):
                part = part * big
            for k in range(1, mj):
                other = Cyc.root_of_unity(theta + Fraction(k, mj))
                part = part * Factor(other, w).as_poly(m)
        numerator = numerator + part
    numerator = numerator * Fraction(1, fp.group_order)
    assert numerator.all_rational(), "isotropy average must have rational coefficients"
    factors = []
    for j in fp.tangent_indices:
        w = fp.tangent_weights[j]
        mj = orders[j]
        factors.extend([Factor(Cyc.rational(1), tuple(mj * x for x in w))] * (fp.group_order // mj))
    return [(numerator, factors)]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def sections_character(data: GITData, u, bound: int) -> LaurentPoly:
    """Brute-force character of degree-<=bound monomial sections of weight u.

    Enumerates lattice points a >= 0 with sum_i a_i D_i = u and total degree
    at most ``bound``; each contributes the monomial e^{a.lambda}.  This is
    the independent oracle for Euler characteristics concentrated in
    degree-zero cohomology.
    """
    u = tuple(int(x) for x in u)
    out = {}
    for a in itertools.product(range(bound + 1), repeat=data.m):
        if sum(a) > bound:
            continue
        total = [0] * data.r
        for ai, w in zip(a, data.weights):
            for k in range(data.r):
                total[k] += ai * w[k]
        if tuple(total) == u:
            out[tuple(Fraction(x) for x in a)] = Cyc.rational(1)
    return LaurentPoly(data.m, out)


def hrr_rhs(
    data: GITData,
    E: EquivClass,
    order: int,
    subtorus=None,
    certify: bool = True,
    check: bool = True,
) -> GradedSeries:
    """Graded expansion of the index predicted by the fixed-point formula.

    Per fixed point and isotropy element: the twisted Chern character of E
    (roots of unity times exponentials of the fiber weights), times the
    Todd factor of every untwisted normal direction and a twisted geometric
    factor for the others, divided by the equivariant Euler class of the
    untwisted directions.
    """
    if E.r != data.r or E.m != data.m:
        raise InputError("class shape does not match the GIT data")
    if check:
        report = validate(data)
        if not report.passed:
            raise InputError("invalid GIT data: %s" % "; ".join(report.failures))
    fps = _all_fixed_point_data(data)
    if certify:
        _certificate(fps, subtorus)
    nvars = len(subtorus[0]) if subtorus is not None else data.m

    def linform(vec):
        if subtorus is not None:
            vec = exp_apply(subtorus, vec)
        return Poly.linear(nvars, vec)

    total = GradedSeries.zero(nvars, order)
    for fp in fps:
        for gi, g in enumerate(fp.group_elements):
            angles = fp.angles(gi)
            zero_dirs = [j for j in fp.tangent_indices if angles[j] == 0]
            nmax = order + len(zero_dirs)
            series = {}
            for (u, s), coeff in E.sorted_terms():
                angle = sum(Fraction(a) * b for a, b in zip(u, g)) % 1
                zeta = Cyc.root_of_unity(angle) * coeff
                for n, p in exp_tseries(linform(fp.fiber_exponent(u, s)), nmax, scale=zeta).items():
                    series[n] = series[n] + p if n in series else p
            euler = Poly.constant(nvars, 1)
            for j in fp.tangent_indices:
                w = fp.tangent_weights[j]
                root = linform(tuple(-x for x in w))  # tangent Chern root
                if angles[j] == 0:
                    series = tseries_mul(series, todd_tseries(root, nmax), nmax)
                    euler = euler * root
                else:
                    series = tseries_mul(
                        series,
                        regular_factor_tseries(Cyc.root_of_unity(angles[j]), linform(w), nmax),
                        nmax,
                    )
            shift = len(zero_dirs)
            scale = Fraction(1, fp.group_order)
            data_out = {
                n - shift: RatFun(p * scale, euler) for n, p in series.items() if n - shift <= order
            }
            total = total + GradedSeries(nvars, order, data_out)
    return total


@dataclass(frozen=True)
class HRRReport:
    """Both sides of the index comparison, expanded to the same order."""

    lhs: GradedSeries
    rhs: GradedSeries
    equal: bool
    first_mismatch_degree: int | None

    def to_json_dict(self) -> dict:
        return {
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "equal": self.equal,
            "first_mismatch_degree": self.first_mismatch_degree,
        }

    def __str__(self):
        lines = ["euler characteristic expansion:", "  " + str(self.lhs), "index formula:", "  " + str(self.rhs)]
        if self.equal:
            lines.append("MATCH through degree %d" % min(self.lhs.order, self.rhs.order))
        else:
            lines.append("MISMATCH at degree %s" % self.first_mismatch_degree)
        return "\n".join(lines)


def hrr_check(data: GITData, E: EquivClass, order: int, subtorus=None) -> HRRReport:
    """Expand the localization Euler characteristic and compare it with the
    index-formula series, degree by degree."""
    from .exactalg.series import expand_rational

    chi = euler_characteristic(data, E, subtorus=subtorus)
    lhs = expand_rational(chi, order)
    rhs = hrr_rhs(data, E, order, subtorus=subtorus, check=False)
    mismatch = lhs.first_mismatch(rhs)
    return HRRReport(lhs, rhs, mismatch is None, mismatch)
