"""Single wall crossings: the wall, its primitive normal, crepancy, and the
extended GIT data whose three chambers carry both sides and their common
resolution."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, NotAdjacentError, OnWallError, OneSidedWallError
from .exactalg import (
    nullspace_vector,
    parse_fraction,
    primitive_integer_vector,
    rational_rank,
)
from .gitdata import Chamber, GITData, anticones, chamber_of, is_on_wall, validate
from .localization import EquivClass


@dataclass(frozen=True)
class WallCrossing:
    """Two adjacent chambers separated by one wall, with its primitive normal."""

    base: GITData  # carries omega_plus as its stability condition
    omega_plus: tuple
    omega_minus: tuple
    omega_zero: tuple
    e: tuple[int, ...]
    crepant: bool

    @property
    def data_plus(self) -> GITData:
        return self.base.with_omega(self.omega_plus)

    @property
    def data_minus(self) -> GITData:
        return self.base.with_omega(self.omega_minus)

    def pairing(self, i: int) -> int:
        """D_i . e for the i-th character (1-based)."""
        return sum(a * b for a, b in zip(self.base.character(i), self.e))

    def to_json_dict(self) -> dict:
        from .exactalg import format_fraction

        eta_p, eta_m = eta_invariants(self)
        return {
            "wall": {
                "normal": list(self.e),
                "point": [format_fraction(x) for x in self.omega_zero],
            },
            "e": list(self.e),
            "crepant": self.crepant,
            "eta": [eta_p, eta_m],
        }


def _candidate_normals(data: GITData):
    """Primitive normals of hyperplanes spanned by r-1 characters."""
    if data.r == 0:
        return []
    if data.r == 1:
        return [(1,)]
    normals = set()
    for combo in itertools.combinations(range(1, data.m + 1), data.r - 1):
        cols = data.submatrix_columns(combo)
        if rational_rank(cols) != data.r - 1:
            continue
        n = nullspace_vector(cols)
        if n is None:
            continue
        n = primitive_integer_vector(n)
        first = next(x for x in n if x)
        if first < 0:
            n = tuple(-x for x in n)
        normals.add(n)
    return sorted(normals)


def make_wall_crossing(base: GITData, omega_plus, omega_minus) -> WallCrossing:
    """Locate the single wall crossed between two stability conditions.

    Both conditions must be valid and off-wall; the straight segment
    between them must cross exactly one anticone-changing hyperplane.
    """
    omega_plus = tuple(parse_fraction(x) for x in omega_plus)
    omega_minus = tuple(parse_fraction(x) for x in omega_minus)
    data_p = base.with_omega(omega_plus)
    data_m = base.with_omega(omega_minus)
    for side, data in (("plus", data_p), ("minus", data_m)):
        if is_on_wall(data):
            raise OnWallError("omega_%s lies on a wall (degenerate)" % side)
        rep = validate(data)
        if not rep.passed:
            raise InputError("omega_%s is not admissible: %s" % (side, "; ".join(rep.failures)))
    fam_p, fam_m = anticones(data_p), anticones(data_m)
    if fam_p == fam_m:
        raise NotAdjacentError("the two stability conditions lie in the same chamber")

    def point(t: Fraction):
        return tuple(a + t * (b - a) for a, b in zip(omega_plus, omega_minus))

    crossings = {}
    for n in _candidate_normals(base):
        vp = sum(Fraction(a) * b for a, b in zip(n, omega_plus))
        vm = sum(Fraction(a) * b for a, b in zip(n, omega_minus))
        if (vp > 0 > vm) or (vm > 0 > vp):
            t = vp / (vp - vm)
            crossings.setdefault(t, set()).add(n)
    if not crossings:
        raise NotAdjacentError("no separating wall found between the chambers")
    times = sorted(crossings)
    gaps = [Fraction(0)] + times + [Fraction(1)]
    real = []
    for idx, t in enumerate(times):
        left = (gaps[idx] + t) / 2
        right = (t + gaps[idx + 2]) / 2
        if anticones(base.with_omega(point(left))) != anticones(base.with_omega(point(right))):
            real.append(t)
    if len(real) != 1:
        raise NotAdjacentError("segment crosses %d walls; compose single crossings" % len(real))
    t_star = real[0]
    normals = sorted(crossings[t_star])
    if len(normals) != 1:
        raise NotAdjacentError("crossing point lies on several hyperplanes")
    e = normals[0]
    if sum(Fraction(a) * b for a, b in zip(e, omega_plus)) < 0:
        e = tuple(-x for x in e)
    total = tuple(sum(w[k] for w in base.weights) for k in range(base.r))
    crepant = sum(a * b for a, b in zip(total, e)) == 0
    return WallCrossing(data_p, omega_plus, omega_minus, point(t_star), e, crepant)


def partition_M(wc: WallCrossing):
    """Indices with positive / zero / negative pairing against the normal."""
    m_plus = frozenset(i for i in range(1, wc.base.m + 1) if wc.pairing(i) > 0)
    m_zero = frozenset(i for i in range(1, wc.base.m + 1) if wc.pairing(i) == 0)
    m_minus = frozenset(i for i in range(1, wc.base.m + 1) if wc.pairing(i) < 0)
    if not m_plus or not m_minus:
        raise OneSidedWallError("one-sided wall: characters pair with a single sign")
    return m_plus, m_zero, m_minus


def eta_invariants(wc: WallCrossing) -> tuple[int, int]:
    """Widths of the two grade-restriction windows at this wall."""
    m_plus, _, m_minus = partition_M(wc)
    eta_plus = sum(wc.pairing(i) for i in m_plus)
    eta_minus = -sum(wc.pairing(i) for i in m_minus)
    return eta_plus, eta_minus


@dataclass(frozen=True)
class ExtendedGIT:
    """Rank-(r+1) data on m+1 coordinates realizing both sides and the blow-up."""

    wc: WallCrossing
    data: GITData  # carries omega_tilde (the resolution chamber) as stability
    omega_plus: tuple
    omega_minus: tuple
    omega_tilde: tuple
    chamber_plus: Chamber
    chamber_minus: Chamber
    chamber_tilde: Chamber

    @property
    def data_plus(self) -> GITData:
        return self.data.with_omega(self.omega_plus)

    @property
    def data_minus(self) -> GITData:
        return self.data.with_omega(self.omega_minus)

    @property
    def data_tilde(self) -> GITData:
        return self.data

    def exponent_twists(self, side: str) -> tuple[int, ...]:
        """Per-coordinate powers of the extra coordinate used by the
        contraction onto the chosen side."""
        if side == "-":
            return tuple(max(self.wc.pairing(j), 0) for j in range(1, self.wc.base.m + 1))
        if side == "+":
            return tuple(max(-self.wc.pairing(j), 0) for j in range(1, self.wc.base.m + 1))
        raise InputError("side must be '+' or '-'")

    def substitution(self, side: str):
        """Exponent substitution (length m -> m+1) identifying the tori:
        lambda_j -> lambda_j + twist_j * lambda_{m+1}."""
        m = self.wc.base.m
        twists = self.exponent_twists(side)
        rows = []
        for j in range(m):
            row = [0] * (m + 1)
            row[j] = 1
            row[m] = twists[j]
            rows.append(row)
        return rows

    def to_json_dict(self) -> dict:
        from .exactalg import format_fraction

        return {
            "weights": [list(w) for w in self.data.weights],
            "omega_plus": [format_fraction(x) for x in self.omega_plus],
            "omega_minus": [format_fraction(x) for x in self.omega_minus],
            "omega_tilde": [format_fraction(x) for x in self.omega_tilde],
            "chambers": {
                "plus": self.chamber_plus.to_json_dict(),
                "minus": self.chamber_minus.to_json_dict(),
                "tilde": self.chamber_tilde.to_json_dict(),
            },
        }


def _verify_contraction(ext: ExtendedGIT, side: str):
    """The monomials x_j x_{m+1}^{twist_j} must transform by the pulled-back
    characters; this pins the group map of the contraction on each side."""
    wc = ext.wc
    m = wc.base.m
    twists = ext.exponent_twists(side)
    for j in range(1, m + 1):
        dj_ext = ext.data.character(j)
        dm1 = ext.data.character(m + 1)
        monomial_char = tuple(a + twists[j - 1] * b for a, b in zip(dj_ext, dm1))
        if side == "-":
            expected = tuple(wc.base.character(j)) + (0,)
        else:
            expected = tuple(wc.base.character(j)) + (-wc.pairing(j),)
        if monomial_char != expected:
            raise AssertionError("contraction %s is not equivariant at coordinate %d" % (side, j))


def extend(wc: WallCrossing, epsilon=Fraction(1, 1000)) -> ExtendedGIT:
    """Extended GIT data with the three chambers around the wall.

    The extra gauge direction records the positive pairing of each
    character; the resolution chamber sits just below the wall, with the
    offset halved until the anticone family stabilizes.
    """
    base = wc.base
    weights = []
    for j in range(1, base.m + 1):
        p = wc.pairing(j)
        weights.append(tuple(base.character(j)) + ((-p) if p > 0 else 0,))
    weights.append((0,) * base.r + (1,))
    omega_p = wc.omega_plus + (Fraction(1),)
    omega_m = wc.omega_minus + (Fraction(1),)

    epsilon = parse_fraction(epsilon)
    if epsilon <= 0:
        raise InputError("epsilon must be positive")
    for _ in range(64):
        omega_t = wc.omega_zero + (-epsilon,)
        data_t = GITData.make(base.r + 1, weights, omega_t)
        half = wc.omega_zero + (-epsilon / 2,)
        if (
            validate(data_t).passed
            and not is_on_wall(data_t)
            and anticones(data_t) == anticones(data_t.with_omega(half))
        ):
            break
        epsilon /= 2
    else:
        raise InputError("could not stabilize the resolution chamber offset")

    ext = ExtendedGIT(
        wc,
        data_t,
        omega_p,
        omega_m,
        omega_t,
        chamber_of(data_t.with_omega(omega_p)),
        chamber_of(data_t.with_omega(omega_m)),
        chamber_of(data_t),
    )
    _verify_contraction(ext, "+")
    _verify_contraction(ext, "-")
    _verify_reductions(ext)
    return ext


def _verify_reductions(ext: ExtendedGIT):
    """At the side stability conditions every anticone contains the extra
    index, and deleting it recovers the base semistable loci."""
    from .gitdata import minimal_anticones

    m1 = ext.wc.base.m + 1
    for side_data, base_data in (
        (ext.data_plus, ext.wc.data_plus),
        (ext.data_minus, ext.wc.data_minus),
    ):
        fam = anticones(side_data)
        if any(m1 not in a for a in fam):
            raise AssertionError("an anticone at a side stability misses the extra index")
        reduced = sorted(
            {frozenset(a - {m1}) for a in minimal_anticones(side_data).minimal},
            key=lambda s: (len(s), tuple(sorted(s))),
        )
        expected = sorted(
            minimal_anticones(base_data).minimal, key=lambda s: (len(s), tuple(sorted(s)))
        )
        if reduced != expected:
            raise AssertionError("side chamber does not reduce to the base quotient")


def pullback_class(ext: ExtendedGIT, side: str, E: EquivClass) -> EquivClass:
    """Pull a class back to the extended data through the chosen contraction.

    The gauge character u acquires the extra component 0 on the minus side
    and -u.e on the plus side; the torus character s acquires s . twists.
    """
    wc = ext.wc
    if E.r != wc.base.r or E.m != wc.base.m:
        raise InputError("class does not live on the base data")
    twists = ext.exponent_twists(side)
    terms = {}
    for (u, s), coeff in E.terms.items():
        if side == "-":
            u2 = tuple(u) + (0,)
        else:
            u2 = tuple(u) + (-sum(a * b for a, b in zip(u, wc.e)),)
        s2 = tuple(s) + (sum(a * b for a, b in zip(s, twists)),)
        terms[(u2, s2)] = terms.get((u2, s2), 0) + coeff
    return EquivClass(wc.base.r + 1, wc.base.m + 1, terms)
