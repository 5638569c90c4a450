"""The point-set semigroup of doubly-pointed finite pattern classes.

Elements are translation classes of (out point, finite pattern, in point),
multiplied by aligning the in point of the left factor with the out point
of the right factor and embedding the union back into the point set.
Products are decided against the truncated set; an optional window oracle
(from the cut-and-project machinery) upgrades the answer to an exact
Defined/Undefined.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .exactnum import QuadraticRational as QR
from .pointset import DiffElement, PointSet1D, chained_sum, diff_set
from .sequences import TruncationError


@dataclass(frozen=True)
class PatternClass:
    """Canonical representative of a translation class: offsets sorted with
    minimum 0, out/in given as positions into the offsets."""

    offsets: tuple[QR, ...]
    out_index: int
    in_index: int

    def __post_init__(self):
        if not self.offsets:
            raise ValueError("pattern must be non-empty")
        if any((b - a).sign() <= 0 for a, b in zip(self.offsets, self.offsets[1:])):
            raise ValueError("offsets must be strictly increasing")
        if self.offsets[0] != QR(0):
            raise ValueError("canonical form requires minimum offset 0")
        for idx in (self.out_index, self.in_index):
            if not 0 <= idx < len(self.offsets):
                raise ValueError("pointed index out of range")

    @property
    def out_value(self) -> QR:
        return self.offsets[self.out_index]

    @property
    def in_value(self) -> QR:
        return self.offsets[self.in_index]

    def to_json_dict(self) -> dict:
        return {"offsets": [str(v) for v in self.offsets],
                "out": self.out_index, "in": self.in_index}


def pattern_class(values: list[QR], out_value: QR, in_value: QR) -> PatternClass:
    """Canonicalize arbitrary point values into a PatternClass."""
    pts = sorted(set(values))
    if out_value not in pts or in_value not in pts:
        raise ValueError("pointed values must belong to the pattern")
    base = pts[0]
    offsets = tuple(p - base for p in pts)
    return PatternClass(offsets, pts.index(out_value), pts.index(in_value))


def make_element(ps: PointSet1D, indices: list[int], out: int, in_: int) -> PatternClass:
    """Pattern class from point indices of the truncated set."""
    if not indices:
        raise ValueError("empty point subset")
    if out not in indices or in_ not in indices:
        raise ValueError("out/in indices must belong to the subset")
    values = [ps.point(i) for i in indices]
    return pattern_class(values, ps.point(out), ps.point(in_))


def identity_element() -> PatternClass:
    return PatternClass((QR(0),), 0, 0)


def inverse(x: PatternClass) -> PatternClass:
    return PatternClass(x.offsets, x.in_index, x.out_index)


def is_idempotent(x: PatternClass) -> bool:
    return x.out_index == x.in_index


def pointed_difference(x: PatternClass) -> QR:
    """The difference of the pointed points; the morphism onto the
    group generated by all differences."""
    return x.out_value - x.in_value


def max_above(x: PatternClass) -> PatternClass:
    """Drop all unpointed points; the unique maximal element above x."""
    return pattern_class(sorted({x.out_value, x.in_value}), x.out_value, x.in_value)


def natural_leq(x: PatternClass, y: PatternClass) -> bool:
    """x <= y iff a translate aligns the pointed pairs and y's pattern is
    contained in x's."""
    if pointed_difference(x) != pointed_difference(y):
        return False
    shift = x.in_value - y.in_value
    xs = set(x.offsets)
    return all((v + shift) in xs for v in y.offsets) and x.out_value == y.out_value + shift


@dataclass(frozen=True)
class ProductResult:
    """Outcome of a pattern product: 'defined' carries the result; 'unknown'
    means no embedding inside this truncation; 'undefined' is an exact
    global claim (empty acceptance window)."""

    status: str
    value: Optional[PatternClass] = None

    @property
    def is_defined(self) -> bool:
        return self.status == "defined"


DEFINED, UNDEFINED, UNKNOWN = "defined", "undefined", "unknown"


def aligned_union(x: PatternClass, y: PatternClass) -> tuple[list[QR], QR, QR]:
    """Union of the two patterns after aligning in(x) with out(y); returns
    (values, out value, in value) in the x-anchored frame."""
    shift = x.in_value - y.out_value
    values = sorted(set(x.offsets) | {v + shift for v in y.offsets})
    return values, x.out_value, y.in_value + shift


def _embeds(ps: PointSet1D, values: list[QR]) -> bool:
    """Search all anchor alignments of the values into the truncated set."""
    base = values[0]
    classes = set()
    for p in ps.values():
        shift = p - base
        try:
            if all((v + shift) in ps for v in values):
                embedded = [v + shift for v in values]
                classes.add(tuple(q - embedded[0] for q in embedded))
        except TruncationError:
            continue
    # distinct embeddings must induce one translation class
    assert len(classes) <= 1
    return bool(classes)


def multiply(
    x: PatternClass,
    y: PatternClass,
    ps: PointSet1D,
    embeds_oracle: Optional[Callable[[list[QR]], bool]] = None,
) -> ProductResult:
    """Product in the pattern-class semigroup over the truncated set.

    embeds_oracle, when given, decides exactly whether a list of pattern
    values embeds anywhere in the infinite set (cut-and-project window
    calculus); it turns a failed truncated search into an exact Defined or
    Undefined answer.
    """
    values, out_v, in_v = aligned_union(x, y)
    result = pattern_class(values, out_v, in_v)
    if _embeds(ps, values):
        return ProductResult(DEFINED, result)
    if embeds_oracle is not None:
        if embeds_oracle(values):
            return ProductResult(DEFINED, result)
        return ProductResult(UNDEFINED)
    return ProductResult(UNKNOWN)


def maxset_table(ps: PointSet1D, bound: QR) -> dict[tuple[QR, QR], QR]:
    """The partial-operation table of chained differences with |value| <=
    bound: the group-like set of maximal pattern classes in coordinates."""
    elems = diff_set(ps, bound)
    by_value = {e.value: e for e in elems}
    table: dict[tuple[QR, QR], QR] = {}
    for a in elems:
        for b in elems:
            out = chained_sum(a, b, ps)
            if out is not None and out.value in by_value:
                table[(a.value, b.value)] = out.value
    return table


def max_class_of(diff: DiffElement, ps: PointSet1D) -> PatternClass:
    """The maximal pattern class of a difference y - x: the two-point
    pattern pointed out at y and in at x."""
    i, j = diff.witnesses[0]
    y, x = ps.point(i), ps.point(j)
    return pattern_class(sorted({y, x}), y, x)
