import pytest
from hypothesis import given
import hypothesis.strategies as st

from loopsplit.algebra import (
    GradedF2Module,
    TruncPolyRing,
    binom_expand,
    direct_sum,
    poincare,
    shift,
)


def pascal_mod2(k):
    """Row k of Pascal's triangle mod 2, by the recurrence only."""
    row = [1]
    for _ in range(k):
        row = [(a + b) % 2 for a, b in zip([0] + row, row + [0])]
    return row


modules = st.dictionaries(st.integers(-20, 40), st.integers(1, 4), max_size=8).map(GradedF2Module)


class TestBinomExpand:
    def test_zero_power_is_one(self):
        ring = TruncPolyRing(2, 5)
        assert binom_expand(0, ring) == ring.one()

    def test_cube(self):
        ring = TruncPolyRing(2, 3)
        assert binom_expand(3, ring).coeffs == (1, 1, 1)

    def test_fourth_power(self):
        ring = TruncPolyRing(2, 3)
        assert binom_expand(4, ring) == ring.one()

    @given(st.integers(0, 64), st.integers(1, 70), st.sampled_from([2, 4, 8]))
    def test_matches_pascal(self, k, h, r):
        ring = TruncPolyRing(r, h)
        row = pascal_mod2(k) + [0] * h
        assert list(binom_expand(k, ring).coeffs) == row[:h]

    @given(st.integers(0, 30), st.integers(1, 12))
    def test_matches_repeated_multiplication(self, k, h):
        ring = TruncPolyRing(2, h)
        assert binom_expand(k, ring) == (ring.one() + ring.gen()) ** k


class TestRing:
    def test_truncation(self):
        ring = TruncPolyRing(2, 3)
        x = ring.gen()
        assert x * x == ring.monomial(2)
        assert x * x * x == ring.zero()

    def test_char_two(self):
        ring = TruncPolyRing(4, 4)
        x = ring.gen()
        assert x + x == ring.zero()

    def test_module_degrees(self):
        assert TruncPolyRing(8, 3).module().dims == {0: 1, 8: 1, 16: 1}

    def test_rejects_non_bits(self):
        ring = TruncPolyRing(2, 2)
        with pytest.raises(ValueError):
            type(ring.one())(ring, (2, 0))

    def test_str(self):
        ring = TruncPolyRing(2, 3)
        assert str(ring.element([1, 1, 1])) == "1 + x + x^2"


class TestGradedModule:
    def test_zero_entries_dropped(self):
        assert GradedF2Module({0: 1, 3: 0}).dims == {0: 1}

    def test_label_count_must_match(self):
        with pytest.raises(ValueError):
            GradedF2Module({0: 2}, {0: ("a",)})

    def test_shift(self):
        assert shift(GradedF2Module({0: 1}), 3).dims == {3: 1}
        M = GradedF2Module({1: 1, 3: 1, 6: 1, 8: 1})
        assert shift(M, -1).dims == {0: 1, 2: 1, 5: 1, 7: 1}

    def test_shift_keeps_labels(self):
        M = GradedF2Module.from_labels({0: ["a"], 2: ["b"]})
        assert shift(M, 5).labels == {5: ("a",), 7: ("b",)}

    def test_direct_sum(self):
        assert direct_sum([]).is_zero
        assert direct_sum([GradedF2Module({0: 1}), GradedF2Module({0: 1, 2: 1})]).dims == {0: 2, 2: 1}

    @given(modules, st.integers(-30, 30))
    def test_shift_inverse(self, M, s):
        assert shift(shift(M, s), -s) == M

    @given(modules, st.integers(-30, 30))
    def test_shift_preserves_total_dim(self, M, s):
        assert shift(M, s).total_dim == M.total_dim

    @given(st.lists(modules, max_size=5))
    def test_direct_sum_order_independent(self, Ms):
        assert direct_sum(Ms).dims == direct_sum(reversed(Ms)).dims


class TestPoincare:
    def test_zero_module(self):
        p = poincare(GradedF2Module(), 5)
        assert p.coeffs == (0,) * 6 and p.exact_beyond_window

    def test_cp2(self):
        p = poincare(GradedF2Module({0: 1, 2: 1, 4: 1}), 10)
        assert p.sparse() == [[0, 1], [2, 1], [4, 1]]
        assert p.exact_beyond_window
        assert str(p) == "1 + t^2 + t^4"

    def test_not_exact_when_truncated(self):
        assert not poincare(GradedF2Module({0: 1, 12: 1}), 10).exact_beyond_window

    def test_negative_degrees_rejected(self):
        with pytest.raises(ValueError):
            poincare(GradedF2Module({-1: 1}), 3)

    @given(st.lists(st.dictionaries(st.integers(0, 40), st.integers(1, 4), max_size=8).map(GradedF2Module), max_size=5), st.integers(0, 45))
    def test_additive(self, Ms, D):
        total = poincare(direct_sum(Ms), D)
        acc = poincare(GradedF2Module(), D)
        for M in Ms:
            acc = acc + poincare(M, D)
        assert total.coeffs == acc.coeffs
