import pytest

from tilegroups.exactnum import QuadraticRational as QR, golden_ratio
from tilegroups.modelset import embeds_oracle, fibonacci_scheme
from tilegroups.pointset import LengthFunction, build_pointset, diff_lookup
from tilegroups.patterns import (
    PatternClass,
    aligned_union,
    identity_element,
    inverse,
    is_idempotent,
    make_element,
    max_above,
    maxset_table,
    multiply,
    natural_leq,
    pattern_class,
    max_class_of,
    pointed_difference,
)
from tilegroups.sequences import SequenceSpec, two_sided_window

TAU = golden_ratio()
FIB_SPEC = SequenceSpec("substitution", rule={"a": "ab", "b": "a"}, seed="a")


def fib_ps(half_width=12):
    return build_pointset(two_sided_window(FIB_SPEC, half_width), LengthFunction({"a": TAU, "b": QR(1)}))


class TestMakeElement:
    def test_identity_idempotent(self):
        ps = fib_ps(4)
        e = make_element(ps, [0], 0, 0)
        assert e == PatternClass((QR(0),), 0, 0) == identity_element()

    def test_canonical_shift(self):
        x = pattern_class([QR(0), TAU], TAU, QR(0))
        assert x.offsets == (QR(0), TAU) and x.out_index == 1 and x.in_index == 0

    def test_subtract_min(self):
        x = pattern_class([TAU, TAU + 1], TAU + 1, TAU)
        assert x.offsets == (QR(0), QR(1))

    def test_empty_subset_rejected(self):
        with pytest.raises(ValueError):
            make_element(fib_ps(4), [], 0, 0)

    def test_pointed_outside_subset_rejected(self):
        with pytest.raises(ValueError):
            make_element(fib_ps(4), [0, 1], 0, 2)


class TestMultiply:
    def test_identity_law(self):
        ps = fib_ps()
        e = identity_element()
        x = pattern_class([QR(0), TAU], TAU, QR(0))
        r = multiply(e, x, ps)
        assert r.is_defined and r.value == x
        r2 = multiply(x, e, ps)
        assert r2.is_defined and r2.value == x

    def test_ba_product(self):
        # aligned union {-1, 0, tau} embeds wherever the factor ba occurs
        ps = fib_ps()
        x = pattern_class([QR(0), TAU], TAU, QR(0))
        y = pattern_class([QR(0), QR(1)], QR(1), QR(0))
        r = multiply(x, y, ps)
        assert r.is_defined
        assert r.value.offsets == (QR(0), QR(1), TAU + 1)
        assert r.value.out_index == 2 and r.value.in_index == 0
        assert pointed_difference(r.value) == TAU + 1

    def test_bb_square_unknown_then_undefined(self):
        ps = fib_ps()
        y = pattern_class([QR(0), QR(1)], QR(1), QR(0))
        r = multiply(y, y, ps)
        assert r.status == "unknown"
        r2 = multiply(y, y, ps, embeds_oracle(fibonacci_scheme()))
        assert r2.status == "undefined"

    def test_aligned_union_frame(self):
        x = pattern_class([QR(0), TAU], TAU, QR(0))
        y = pattern_class([QR(0), QR(1)], QR(1), QR(0))
        values, out_v, in_v = aligned_union(x, y)
        assert values == [QR(-1), QR(0), TAU]
        assert out_v == TAU and in_v == QR(-1)


class TestOrder:
    def test_reflexive(self):
        x = pattern_class([QR(0), TAU], TAU, QR(0))
        assert natural_leq(x, x)

    def test_containment_after_shift(self):
        big = pattern_class([QR(0), QR(1), TAU + 1], TAU + 1, QR(0))
        small = pattern_class([QR(0), TAU + 1], TAU + 1, QR(0))
        assert natural_leq(big, small)
        assert not natural_leq(small, big)

    def test_incomparable_pointed_differences(self):
        x = pattern_class([QR(0), TAU], TAU, QR(0))
        y = pattern_class([QR(0), QR(1)], QR(1), QR(0))
        assert not natural_leq(x, y) and not natural_leq(y, x)

    def test_max_above(self):
        big = pattern_class([QR(0), QR(1), TAU + 1], TAU + 1, QR(0))
        assert max_above(big) == pattern_class([QR(0), TAU + 1], TAU + 1, QR(0))

    def test_max_above_single_point(self):
        e = identity_element()
        assert max_above(e) == e

    def test_max_above_coincident_points(self):
        x = pattern_class([QR(0), QR(1)], QR(0), QR(0))
        assert max_above(x) == identity_element()


class TestPointedDifference:
    def test_pointed_difference_examples(self):
        assert pointed_difference(identity_element()) == QR(0)
        assert pointed_difference(pattern_class([QR(0), TAU], TAU, QR(0))) == TAU
        x = pattern_class([QR(0), QR(1), TAU + 1], QR(0), TAU + 1)
        assert pointed_difference(x) == -(TAU + 1)

    def test_is_idempotent(self):
        assert is_idempotent(identity_element())
        assert not is_idempotent(pattern_class([QR(0), TAU], TAU, QR(0)))
        assert is_idempotent(pattern_class([QR(0), TAU], QR(0), QR(0)))

    def test_idempotent_purity_on_samples(self):
        ps = fib_ps(8)
        idx = list(range(ps.min_index, ps.max_index + 1))
        for i in idx:
            for j in idx:
                x = make_element(ps, sorted({i, j}), i, j)
                assert (pointed_difference(x).sign() == 0) == is_idempotent(x)


class TestInverseLaws:
    def test_sss(self):
        ps = fib_ps()
        x = pattern_class([QR(0), QR(1), TAU + 1], TAU + 1, QR(0))
        xi = inverse(x)
        r1 = multiply(x, xi, ps)
        assert r1.is_defined and is_idempotent(r1.value)
        r2 = multiply(r1.value, x, ps)
        assert r2.is_defined and r2.value == x

    def test_inverse_involution(self):
        x = pattern_class([QR(0), TAU], TAU, QR(0))
        assert inverse(inverse(x)) == x
        assert pointed_difference(inverse(x)) == -pointed_difference(x)


class TestMaxsetTable:
    def test_zero_entry(self):
        table = maxset_table(fib_ps(8), QR(1))
        assert table[(QR(0), QR(0))] == QR(0)

    def test_fibonacci_entries(self):
        table = maxset_table(fib_ps(), TAU + 1)
        assert table[(TAU, QR(1))] == TAU + 1
        assert (QR(1), QR(1)) not in table

    def test_theta_intertwines(self):
        ps = fib_ps()
        bound = TAU + 1
        table = maxset_table(ps, bound)
        diffs = diff_lookup(ps, bound)
        for a in diffs.values():
            for b in diffs.values():
                prod = multiply(max_class_of(a, ps), max_class_of(b, ps), ps)
                key = (a.value, b.value)
                if key in table:
                    assert prod.is_defined
                    assert max_above(prod.value) == max_class_of(diffs[table[key]], ps)
                elif prod.is_defined:
                    # defined products escape the table only when the sum
                    # leaves the bound
                    assert abs(a.value + b.value) > bound
