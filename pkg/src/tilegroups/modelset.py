"""Cut-and-project machinery with 1-D physical and 1-D internal space.

A scheme embeds the lattice Z^2 into R x R through two basis vectors with
exact coordinates; the star map sends a physical lattice value to its
internal one.  Acceptance windows are finite unions of closed intervals
with exact endpoints, so pattern windows P* = intersection of K - x* and
the empire congruence (equality of pattern windows, which is the kernel
of the projection functor) are decided exactly.  The same window calculus
drives the semigroup of window triples, the generator/relation harvest of
a partial group action, and the nearest-integer obstruction example.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactnum import QuadraticRational as QR
from .pointset import PointSet1D
from .patterns import PatternClass


class EmptyModelSetError(ValueError):
    """The window/lattice configuration selected no points at all."""


# ---------------------------------------------------------------------------
# windows


@dataclass(frozen=True)
class WindowSet:
    """A finite union of disjoint closed intervals [lo, hi], kept sorted
    and merged.  Degenerate components (lo == hi) may appear as
    intermediate intersection results."""

    components: tuple[tuple[QR, QR], ...]

    def __post_init__(self):
        prev_hi = None
        for lo, hi in self.components:
            if (hi - lo).sign() < 0:
                raise ValueError("interval needs lo <= hi")
            if prev_hi is not None and (lo - prev_hi).sign() <= 0:
                raise ValueError("components must be sorted and disjoint")
            prev_hi = hi

    @staticmethod
    def interval(lo: QR, hi: QR) -> "WindowSet":
        if (hi - lo).sign() < 0:
            raise ValueError("interval needs lo <= hi")
        return WindowSet(((lo, hi),))

    @staticmethod
    def empty() -> "WindowSet":
        return WindowSet(())

    @staticmethod
    def normalized(parts: list[tuple[QR, QR]]) -> "WindowSet":
        parts = sorted((p for p in parts if (p[1] - p[0]).sign() >= 0), key=lambda p: p[0])
        merged: list[tuple[QR, QR]] = []
        for lo, hi in parts:
            if merged and (lo - merged[-1][1]).sign() <= 0:
                last_lo, last_hi = merged[-1]
                merged[-1] = (last_lo, max(last_hi, hi))
            else:
                merged.append((lo, hi))
        return WindowSet(tuple(merged))

    def is_empty(self) -> bool:
        return not self.components

    def has_interior(self) -> bool:
        return any((hi - lo).sign() > 0 for lo, hi in self.components)

    def contains(self, x: QR) -> bool:
        return any((x - lo).sign() >= 0 and (hi - x).sign() >= 0 for lo, hi in self.components)

    def translate(self, shift: QR) -> "WindowSet":
        return WindowSet(tuple((lo + shift, hi + shift) for lo, hi in self.components))

    def intersect(self, other: "WindowSet") -> "WindowSet":
        parts = []
        for lo1, hi1 in self.components:
            for lo2, hi2 in other.components:
                lo, hi = max(lo1, lo2), min(hi1, hi2)
                if (hi - lo).sign() >= 0:
                    parts.append((lo, hi))
        return WindowSet.normalized(parts)

    def union(self, other: "WindowSet") -> "WindowSet":
        return WindowSet.normalized(list(self.components) + list(other.components))

    def issubset(self, other: "WindowSet") -> bool:
        return self.intersect(other) == self

    def hull(self) -> tuple[QR, QR]:
        if self.is_empty():
            raise ValueError("empty window has no hull")
        return self.components[0][0], self.components[-1][1]

    def to_json_list(self) -> list:
        return [[str(lo), str(hi)] for lo, hi in self.components]

    @staticmethod
    def from_json_list(data: list) -> "WindowSet":
        return WindowSet.normalized([(QR.from_string(lo), QR.from_string(hi)) for lo, hi in data])


def _integer_coordinates(value: QR, b1: QR, b2: QR) -> Optional[tuple[int, int]]:
    """Solve value = n*b1 + m*b2 with integer n, m; None if unsolvable.
    Requires b1, b2 to be Q-linearly independent in the field."""
    det = b1.rat * b2.surd - b2.rat * b1.surd
    if det == 0:
        raise ValueError("basis vectors are rationally dependent")
    n = (value.rat * b2.surd - b2.rat * value.surd) / det
    m = (b1.rat * value.surd - value.rat * b1.surd) / det
    if n.denominator != 1 or m.denominator != 1:
        return None
    return int(n), int(m)


def window_meets_group(window: WindowSet, b1: QR, b2: QR) -> bool:
    """Does the window contain a point of the dense subgroup Z*b1 + Z*b2?
    Components with interior always do; degenerate points are solved
    exactly."""
    for lo, hi in window.components:
        if (hi - lo).sign() > 0:
            return True
        if _integer_coordinates(lo, b1, b2) is not None:
            return True
    return False


# ---------------------------------------------------------------------------
# schemes


@dataclass(frozen=True)
class LatticeVector:
    phys: QR
    internal: QR


@dataclass(frozen=True)
class CutProjectScheme:
    """Lattice basis (two vectors with physical and internal coordinates)
    plus the acceptance window.

    Validation certifies the standard cut-and-project conditions constructively: both
    projections injective (irrational coordinate ratios), internal image
    dense (again the irrational ratio), and the window a finite union of
    non-degenerate closed intervals.
    """

    v1: LatticeVector
    v2: LatticeVector
    window: WindowSet

    def __post_init__(self):
        det = self.v1.phys * self.v2.internal - self.v2.phys * self.v1.internal
        if det.sign() == 0:
            raise ValueError("embedding matrix is singular")
        for a, b, name in ((self.v1.phys, self.v2.phys, "physical"),
                           (self.v1.internal, self.v2.internal, "internal")):
            if a.sign() == 0 or b.sign() == 0:
                raise ValueError(f"{name} coordinates must be nonzero")
            if (b / a).is_rational():
                raise ValueError(f"{name} projection not injective: rational coordinate ratio")
        if self.window.is_empty():
            raise ValueError("acceptance window is empty")
        for lo, hi in self.window.components:
            if (hi - lo).sign() <= 0:
                raise ValueError("acceptance window must be the closure of its interior")

    def physical_coordinates(self, y: QR) -> tuple[int, int]:
        coords = _integer_coordinates(y, self.v1.phys, self.v2.phys)
        if coords is None:
            raise ValueError(f"{y} is not in the physical lattice image")
        return coords

    def in_physical_lattice(self, y: QR) -> bool:
        return _integer_coordinates(y, self.v1.phys, self.v2.phys) is not None

    def star_of_coords(self, n: int, m: int) -> QR:
        return self.v1.internal * n + self.v2.internal * m

    def internal_group_basis(self) -> tuple[QR, QR]:
        return self.v1.internal, self.v2.internal

    def to_json_dict(self) -> dict:
        return {
            "v1": {"phys": str(self.v1.phys), "int": str(self.v1.internal)},
            "v2": {"phys": str(self.v2.phys), "int": str(self.v2.internal)},
            "window": self.window.to_json_list(),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "CutProjectScheme":
        vec = lambda d: LatticeVector(QR.from_string(d["phys"]), QR.from_string(d["int"]))
        return cls(vec(data["v1"]), vec(data["v2"]), WindowSet.from_json_list(data["window"]))


def star(scheme: CutProjectScheme, y: QR) -> QR:
    """The internal coordinate of a physical lattice value."""
    n, m = scheme.physical_coordinates(y)
    return scheme.star_of_coords(n, m)


def fibonacci_scheme() -> CutProjectScheme:
    """Reference scheme for the Fibonacci chain: v1 = (1, 1),
    v2 = (tau, 1-tau), window [-99/100, 63/100].

    The substitution chain's acceptance window is (-1, tau-1]; the rational
    endpoints sit inside the star-free gaps beyond the tested radius and,
    being non-integers, are never equal to a lattice star, so membership
    tests stay boundary-free at every radius.
    """
    tau = QR(Fraction(1, 2), Fraction(1, 2), 5)
    return CutProjectScheme(
        LatticeVector(QR(1), QR(1)),
        LatticeVector(tau, QR(1) - tau),
        WindowSet.interval(QR(Fraction(-99, 100)), QR(Fraction(63, 100))),
    )


# ---------------------------------------------------------------------------
# model-set generation


def modelset_points(scheme: CutProjectScheme, radius: QR) -> list[QR]:
    """All physical values y with |y| <= radius and star(y) in the window,
    sorted.  Enumerates the integer box obtained by mapping the physical
    range times the window hull through the inverse embedding matrix."""
    if radius.sign() <= 0:
        raise ValueError("radius must be positive")
    p1, p2 = scheme.v1.phys, scheme.v2.phys
    i1, i2 = scheme.v1.internal, scheme.v2.internal
    det = p1 * i2 - p2 * i1
    klo, khi = scheme.window.hull()
    corners_n, corners_m = [], []
    for x in (radius, -radius):
        for y in (klo, khi):
            corners_n.append((i2 * x - p2 * y) / det)
            corners_m.append((p1 * y - i1 * x) / det)
    n_lo = min(c.floor() for c in corners_n)
    n_hi = max(c.floor() + 1 for c in corners_n)
    m_lo = min(c.floor() for c in corners_m)
    m_hi = max(c.floor() + 1 for c in corners_m)
    out = []
    for n in range(n_lo, n_hi + 1):
        base_phys = p1 * n
        base_star = i1 * n
        for m in range(m_lo, m_hi + 1):
            y = base_phys + p2 * m
            if abs(y) > radius:
                continue
            if scheme.window.contains(base_star + i2 * m):
                out.append(y)
    out.sort()
    return out


def generate_modelset(scheme: CutProjectScheme, radius: QR) -> PointSet1D:
    """Model set in point-set form (window letters assigned by decreasing
    gap)."""
    pts = modelset_points(scheme, radius)
    if not pts:
        raise EmptyModelSetError("no lattice point projects into the window at this radius")
    if len(pts) == 1:
        raise EmptyModelSetError("a single projected point does not determine a gap word")
    return PointSet1D.from_points(pts)


# ---------------------------------------------------------------------------
# pattern windows and the empire congruence


def pattern_window(scheme: CutProjectScheme, points: list[QR]) -> WindowSet:
    """P* = intersection over the pattern of K - x*; empty exactly when no
    translate of the pattern occurs in the model set."""
    if not points:
        raise ValueError("pattern must be non-empty")
    out = None
    for p in points:
        translate = scheme.window.translate(-star(scheme, p))
        out = translate if out is None else out.intersect(translate)
        if out.is_empty():
            break
    return out


def pattern_embeds(scheme: CutProjectScheme, points: list[QR]) -> bool:
    """Exact decision: some lattice translate places the pattern inside the
    model set iff the pattern window contains an internal lattice value."""
    window = pattern_window(scheme, points)
    return window_meets_group(window, *scheme.internal_group_basis())


def embeds_oracle(scheme: CutProjectScheme):
    """Adapter handed to the pattern-class product search."""
    return lambda values: pattern_embeds(scheme, values)


def _require_in_modelset(scheme: CutProjectScheme, points: list[QR]) -> None:
    for p in points:
        if not scheme.window.contains(star(scheme, p)):
            raise ValueError(f"pattern point {p} is not in the model set")


def empire_equal(scheme: CutProjectScheme, pat_p: list[QR], pat_q: list[QR]) -> bool:
    """Same empire iff the pattern windows coincide (kernel of the
    projection functor)."""
    _require_in_modelset(scheme, pat_p)
    _require_in_modelset(scheme, pat_q)
    return pattern_window(scheme, pat_p) == pattern_window(scheme, pat_q)


@dataclass(frozen=True)
class EmpireBruteResult:
    agree: bool
    separator_coords: Optional[tuple[int, int]] = None
    separator_phys: Optional[QR] = None

    def __bool__(self):
        return self.agree


def empire_brute(
    scheme: CutProjectScheme,
    pat_p: list[QR],
    pat_q: list[QR],
    box_bound: int,
) -> EmpireBruteResult:
    """Independent empire oracle: scan every lattice g with coefficients in
    [-box_bound, box_bound] and compare, point by point, whether g + P and
    g + Q land inside the model set.

    The scan runs over integerized star coordinates (one common denominator,
    integer pairs over {1, sqrt(d)}) for speed; lattice rows whose star
    falls outside the combined window hull of both patterns are skipped,
    which is sound because there both memberships are False.
    """
    d = 0
    values: list[QR] = []
    i1, i2 = scheme.internal_group_basis()
    p_stars = [star(scheme, p) for p in pat_p]
    q_stars = [star(scheme, q) for q in pat_q]
    for v in [i1, i2, *p_stars, *q_stars]:
        values.append(v)
        if v.disc:
            d = v.disc
    for lo, hi in scheme.window.components:
        values.extend((lo, hi))
        if lo.disc:
            d = lo.disc
        if hi.disc:
            d = hi.disc

    denom = 1
    for v in values:
        for f in (v.rat, v.surd):
            denom = denom * f.denominator // _igcd(denom, f.denominator)

    def pair(v: QR) -> tuple[int, int]:
        return int(v.rat * denom), int(v.surd * denom)

    i1p, i2p = pair(i1), pair(i2)
    ppairs = [pair(v) for v in p_stars]
    qpairs = [pair(v) for v in q_stars]
    comps = [(pair(lo), pair(hi)) for lo, hi in scheme.window.components]

    def member(a: int, b: int, shift: tuple[int, int]) -> bool:
        # is (a,b) + shift inside the window, all over the common denominator
        x, y = a + shift[0], b + shift[1]
        for (alo, blo), (ahi, bhi) in comps:
            if _int_sign(x - alo, y - blo, d) >= 0 and _int_sign(ahi - x, bhi - y, d) >= 0:
                return True
        return False

    # band of star values that could possibly land in any K - x*
    klo, khi = scheme.window.hull()
    stars_all = p_stars + q_stars
    band_lo = klo - max(stars_all)
    band_hi = khi - min(stars_all)
    blo, bhi = pair(band_lo), pair(band_hi)

    bound = box_bound
    for n in range(-bound, bound + 1):
        gn = (n * i1p[0], n * i1p[1])
        for m in range(-bound, bound + 1):
            ga = gn[0] + m * i2p[0]
            gb = gn[1] + m * i2p[1]
            if _int_sign(ga - blo[0], gb - blo[1], d) < 0 or _int_sign(bhi[0] - ga, bhi[1] - gb, d) < 0:
                continue  # both memberships are False out here
            in_p = all(member(a, b, (ga, gb)) for a, b in ppairs)
            in_q = all(member(a, b, (ga, gb)) for a, b in qpairs)
            if in_p != in_q:
                g_phys = scheme.v1.phys * n + scheme.v2.phys * m
                return EmpireBruteResult(False, (n, m), g_phys)
    return EmpireBruteResult(True)


def _igcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _int_sign(p: int, q: int, d: int) -> int:
    """Sign of p + q*sqrt(d) for integers p, q."""
    if q == 0:
        return (p > 0) - (p < 0)
    if p == 0:
        return (q > 0) - (q < 0)
    if p > 0 and q > 0:
        return 1
    if p < 0 and q < 0:
        return -1
    lhs, rhs = p * p, q * q * d
    if lhs == rhs:
        return 0
    if p > 0:
        return 1 if lhs > rhs else -1
    return -1 if lhs > rhs else 1


# ---------------------------------------------------------------------------
# the semigroup of window triples


@dataclass(frozen=True)
class WindowTriple:
    """Translation class of a window triple, stored in left-anchored
    coordinates: (shift, window) stands for the class of (0, window, shift).

    The window is a finite intersection of group translates of the
    acceptance window; the class is inhabited iff the window contains an
    internal lattice value (dense components always do), which the factory
    checks.
    """

    shift: QR
    window: WindowSet


def window_triple(scheme: CutProjectScheme, a: QR, window: WindowSet, b: QR) -> WindowTriple:
    """Canonicalize a triple (a, window, b) by translating a to 0."""
    shift = b - a
    canon = window.translate(-a)
    bound = scheme.window.intersect(scheme.window.translate(shift))
    if not canon.issubset(bound):
        raise ValueError("window exceeds the two-translate intersection for this shift")
    if canon.is_empty() or not window_meets_group(canon, *scheme.internal_group_basis()):
        raise ValueError("window carries no lattice value; the class is empty")
    return WindowTriple(shift, canon)


def triple_identity(scheme: CutProjectScheme) -> WindowTriple:
    return WindowTriple(QR(0), scheme.window)


def triple_inverse(x: WindowTriple) -> WindowTriple:
    return WindowTriple(-x.shift, x.window.translate(-x.shift))


def triple_is_idempotent(x: WindowTriple) -> bool:
    return x.shift.sign() == 0


def triple_multiply(scheme: CutProjectScheme, x: WindowTriple, y: WindowTriple) -> Optional[WindowTriple]:
    """Product of window-triple classes: align the right anchor of x with
    the left anchor of y; defined iff the combined window still contains an
    internal lattice value (checked exactly, including degenerate points)."""
    window = x.window.intersect(y.window.translate(x.shift))
    if window.is_empty():
        return None
    if not window_meets_group(window, *scheme.internal_group_basis()):
        return None
    return WindowTriple(x.shift + y.shift, window)


def triple_max_and_shift(scheme: CutProjectScheme, x: WindowTriple) -> tuple[WindowTriple, QR]:
    """The unique maximal element above x (full two-translate window) and
    the group image of x."""
    full = scheme.window.intersect(scheme.window.translate(x.shift))
    return WindowTriple(x.shift, full), x.shift


def triple_natural_leq(x: WindowTriple, y: WindowTriple) -> bool:
    return x.shift == y.shift and x.window.issubset(y.window)


def project_functor(scheme: CutProjectScheme, pattern: PatternClass, placement: QR) -> WindowTriple:
    """Image of a placed pattern class under the window functor.

    The placement witness is only checked, never used: the image window
    equals the pattern window of the offsets shifted by the out-point star,
    which is translation invariant.
    """
    placed = [o + placement for o in pattern.offsets]
    _require_in_modelset(scheme, placed)
    w0 = pattern_window(scheme, list(pattern.offsets))
    out_star = star(scheme, pattern.out_value)
    shift = star(scheme, pattern.out_value - pattern.in_value)
    return WindowTriple(shift, w0.translate(out_star))


# ---------------------------------------------------------------------------
# generators and relations of a partial action


@dataclass(frozen=True)
class PartialActionData:
    """Truncated generator/relation harvest of a partial action of the
    group Z*g1 + Z*g2 on a window: the elements whose shifted window still
    meets the window, the composable pairs, and one relation triple
    (g, g', g+g') per composable pair."""

    basis: tuple[QR, QR]
    bound: int
    elements: tuple[QR, ...]
    composable: tuple[tuple[QR, QR], ...]
    relations: tuple[tuple[QR, QR, QR], ...]

    def element_labels(self) -> list[str]:
        return [str(g) for g in self.elements]


def _overlap_nonempty(window: WindowSet, interiors: bool, basis: tuple[QR, QR]) -> bool:
    if window.is_empty():
        return False
    if interiors:
        return window.has_interior()
    return window.has_interior() or window_meets_group(window, *basis)


def partial_action_data(
    basis: tuple[QR, QR],
    window: WindowSet,
    coeff_bound: int,
    interiors: bool = True,
) -> PartialActionData:
    """Elements are the boxed group values g with V and V - g overlapping;
    pairs (g, g') are composable when the triple overlap of V, g+V and
    g+g'+V is non-empty with all three members boxed; each composable pair
    contributes the relation equating the formal product with the sum.

    interiors=True tests overlap of interiors (the open-subset setting);
    interiors=False additionally accepts degenerate overlaps containing a
    group point (closed windows over a dense group).
    """
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be >= 1")
    g1, g2 = basis
    elements: list[QR] = []
    for n in range(-coeff_bound, coeff_bound + 1):
        for m in range(-coeff_bound, coeff_bound + 1):
            g = g1 * n + g2 * m
            overlap = window.intersect(window.translate(-g))
            if _overlap_nonempty(overlap, interiors, basis):
                elements.append(g)
    elements.sort()
    eset = set(elements)
    composable: list[tuple[QR, QR]] = []
    relations: list[tuple[QR, QR, QR]] = []
    for g in elements:
        shifted_g = window.translate(g)
        for gp in elements:
            total = g + gp
            if total not in eset:
                continue
            triple = window.intersect(shifted_g).intersect(window.translate(total))
            if _overlap_nonempty(triple, interiors, basis):
                composable.append((g, gp))
                relations.append((g, gp, total))
    return PartialActionData(basis, coeff_bound, tuple(elements), tuple(composable), tuple(relations))


# ---------------------------------------------------------------------------
# the nearest-integer obstruction


def obstruction_grade(r: QR, s: QR, x: QR) -> int:
    """Nearest integer to x/s, for x drawn from the difference harvest of
    the two-component window (0, r) union (s, s+r) with |s| > 8r.

    Well-defined because x/s then lies within 1/4 of one of -1, 0, 1; a
    value within 1/4 of a half-integer signals a precondition violation.
    """
    if (abs(s) - r * 8).sign() <= 0:
        raise ValueError("requires |s| > 8r")
    q = x / s
    try:
        nearest = q.nearest_int()
    except ValueError as exc:
        raise ValueError(f"{x}/{s} sits exactly between two integers") from exc
    gap = abs(q - nearest)
    if (gap - Fraction(1, 4)).sign() >= 0:
        raise ValueError(f"{x}/{s} is not within 1/4 of an integer; x outside the harvest range")
    return nearest
