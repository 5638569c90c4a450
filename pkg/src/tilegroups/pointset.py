"""1-D point sets from symbolic windows, their difference sets and the
partial operation of chained differences.

Every membership or definedness answer is relative to the materialised
truncation: an undefined chained sum means "no witness chain inside this
window", never a global claim.  Witness index pairs travel with every
difference so decompositions can be replayed in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .exactnum import QuadraticRational as QR
from .presentation import hnf
from .sequences import IndexedWord, TruncationError


@dataclass(frozen=True)
class LengthFunction:
    """Letter -> strictly positive exact length; distinct letters get
    distinct lengths."""

    lengths: dict[str, QR]

    def __post_init__(self):
        vals = list(self.lengths.values())
        for v in vals:
            if v.sign() <= 0:
                raise ValueError("tile lengths must be strictly positive")
        if len(set(vals)) != len(vals):
            raise ValueError("length function must be injective")

    def __getitem__(self, letter: str) -> QR:
        return self.lengths[letter]

    def letters(self) -> list[str]:
        return sorted(self.lengths)


class PointSet1D:
    """Points r_i with r_i - r_{i-1} = |T(i)| over a finite window of T.

    The window covers indices [start, start+n), so points r_{start-1}
    through r_{start+n-1} are materialised; the anchor fixes r_0.
    """

    def __init__(self, window: IndexedWord, lengths: LengthFunction, anchor: QR = QR(0)):
        if len(window) == 0:
            raise ValueError("window must be non-empty")
        lo, hi = window.start_index - 1, window.end_index - 1
        if not lo <= 0 <= hi:
            raise ValueError("window must cover the anchor index 0")
        self.window = window
        self.lengths = lengths
        self.anchor = anchor
        pts: dict[int, QR] = {0: anchor}
        run = anchor
        for i in range(1, hi + 1):
            run = run + lengths[window.at(i)]
            pts[i] = run
        run = anchor
        for i in range(0, lo, -1):
            run = run - lengths[window.at(i)]
            pts[i - 1] = run
        self.min_index, self.max_index = lo, hi
        self.points: list[QR] = [pts[i] for i in range(lo, hi + 1)]
        self._index_of = {v: i + lo for i, v in enumerate(self.points)}

    @classmethod
    def from_points(cls, points: list[QR], anchor_index: Optional[int] = None) -> "PointSet1D":
        """Rebuild window + lengths from an explicit sorted point list.

        Gap letters are assigned 'a', 'b', ... by decreasing gap length.
        The anchor r_0 is the largest point <= 0 unless an index is given.
        """
        if len(points) < 2:
            raise ValueError("need at least two points")
        pts = sorted(points)
        gaps = [b - a for a, b in zip(pts, pts[1:])]
        if any(g.sign() <= 0 for g in gaps):
            raise ValueError("points must be strictly increasing")
        distinct = sorted(set(gaps), reverse=True)
        if len(distinct) > 26:
            raise ValueError("too many distinct gaps to letter")
        letter = {g: chr(ord("a") + k) for k, g in enumerate(distinct)}
        if anchor_index is None:
            below = [i for i, p in enumerate(pts) if p.sign() <= 0]
            anchor_index = below[-1] if below else 0
        word = "".join(letter[g] for g in gaps)
        window = IndexedWord(1 - anchor_index, word)
        lengths = LengthFunction({letter[g]: g for g in distinct})
        return cls(window, lengths, pts[anchor_index])

    def __len__(self):
        return len(self.points)

    def values(self) -> list[QR]:
        return list(self.points)

    def __contains__(self, value: QR) -> bool:
        if value < self.points[0] or value > self.points[-1]:
            raise TruncationError(f"{value} outside the materialised range")
        return value in self._index_of

    def index_of(self, value: QR) -> int:
        if value not in self:
            raise KeyError(f"{value} is not a point of the set")
        return self._index_of[value]

    def point(self, index: int) -> QR:
        if not self.min_index <= index <= self.max_index:
            raise TruncationError(f"point index {index} outside truncation")
        return self.points[index - self.min_index]

    def max_gap(self) -> QR:
        return max(b - a for a, b in zip(self.points, self.points[1:]))

    def to_json_dict(self) -> dict:
        return {"anchor": str(self.anchor), "points": [str(p) for p in self.points]}


def build_pointset(window: IndexedWord, lengths: LengthFunction, anchor: QR = QR(0)) -> PointSet1D:
    return PointSet1D(window, lengths, anchor)


@dataclass(frozen=True)
class DiffElement:
    """A value of D - D together with every witnessing index pair (i, j),
    r_i - r_j = value, inside the truncation."""

    value: QR
    witnesses: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.witnesses:
            raise ValueError("a difference needs at least one witness")


def diff_set(ps: PointSet1D, bound: QR) -> list[DiffElement]:
    """All differences r_i - r_j with |value| <= bound, with complete
    witness lists, sorted by value."""
    if bound.sign() <= 0:
        raise ValueError("bound must be positive")
    found: dict[QR, list[tuple[int, int]]] = {}
    idx = range(ps.min_index, ps.max_index + 1)
    for i in idx:
        for j in idx:
            v = ps.point(i) - ps.point(j)
            if abs(v) <= bound:
                found.setdefault(v, []).append((i, j))
    return [DiffElement(v, tuple(ws)) for v, ws in sorted(found.items())]


def diff_lookup(ps: PointSet1D, bound: QR) -> dict[QR, DiffElement]:
    return {d.value: d for d in diff_set(ps, bound)}


def chained_sum(a: DiffElement, b: DiffElement, ps: PointSet1D) -> Optional[DiffElement]:
    """Chained sum: defined iff some x, y, z in the truncated set satisfy
    a = x - y and b = y - z; then the value is a + b.  None means no chain
    inside this window."""
    value = a.value + b.value
    witnesses = []
    for (i, j) in a.witnesses:
        y = ps.point(j)
        z = y - b.value
        try:
            if z in ps:
                witnesses.append((i, ps.index_of(z)))
        except TruncationError:
            continue
    if not witnesses:
        return None
    return DiffElement(value, tuple(witnesses))


def bounded_generator_set(ps: PointSet1D, radius: QR) -> list[DiffElement]:
    """The generating set of differences with |value| <= radius; requires
    radius at least the largest gap, and checks that every truncated
    difference decomposes as a chain of these."""
    if radius < ps.max_gap():
        raise ValueError("radius below the maximal gap; set not relatively dense at this scale")
    delta = diff_set(ps, radius)
    span = ps.points[-1] - ps.points[0]
    for elem in diff_set(ps, span):
        decompose_into_bounded(ps, elem, radius)
    return delta


def decompose_into_bounded(ps: PointSet1D, elem: DiffElement, radius: QR) -> list[DiffElement]:
    """Write elem as a chain of consecutive-point steps, each of absolute
    value <= radius; the chain composes under the partial sum by
    construction."""
    i, j = elem.witnesses[0]
    if i == j:
        return [DiffElement(QR(0), ((i, i),))]
    step = 1 if i > j else -1
    chain = []
    for k in range(j, i, step):
        value = ps.point(k + step) - ps.point(k)
        if abs(value) > radius:
            raise ValueError(f"gap {value} exceeds radius {radius}")
        chain.append(DiffElement(value, ((k + step, k),)))
    total = QR(0)
    for link in chain:
        total = total + link.value
    assert total == elem.value
    return chain


def difference_group_invariants(values: list[QR]) -> tuple[int, list[QR]]:
    """Rank and basis of the subgroup of R generated by the values.

    Each value is written over the Q-basis {sqrt(d), 1}, denominators are
    cleared, and a Hermite basis of the resulting integer row lattice is
    rescaled back.  The group is free abelian of the returned rank.
    """
    vals = [v for v in values if v.sign() != 0]
    if not vals:
        return 0, []
    disc = 0
    for v in vals:
        if v.disc:
            if disc and v.disc != disc:
                raise ValueError("values from different quadratic fields")
            disc = v.disc
    denom = 1
    for v in vals:
        denom = denom * v.surd.denominator // gcd(denom, v.surd.denominator)
        denom = denom * v.rat.denominator // gcd(denom, v.rat.denominator)
    rows = [[int(v.surd * denom), int(v.rat * denom)] for v in vals]
    rank, basis_rows = hnf(rows)
    basis = [QR(Fraction(p, denom), Fraction(q, denom), disc if q else 0) for q, p in basis_rows]
    return rank, basis
