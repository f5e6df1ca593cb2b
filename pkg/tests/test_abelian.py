import pytest

from loopspace.abelian import FgAbelianGroup, FiniteAbelianGroup, GradedAbelianGroup


class TestFiniteAbelianGroup:
    def test_normalization_to_invariant_factors(self):
        g = FiniteAbelianGroup.from_cyclic_orders([2, 4, 3])
        assert g.invariant_factors == (2, 12)

    def test_order_one_summands_dropped(self):
        assert FiniteAbelianGroup.from_cyclic_orders([1, 1, 6]).invariant_factors == (6,)

    def test_broken_chain_rejected(self):
        with pytest.raises(ValueError):
            FiniteAbelianGroup((4, 6))
        with pytest.raises(ValueError):
            FiniteAbelianGroup((1,))

    def test_chinese_remainder_recombination(self):
        g = FiniteAbelianGroup.from_cyclic_orders([8, 4, 2, 9, 3, 5])
        assert g.invariant_factors == (2, 12, 360)

    def test_primes(self):
        assert FiniteAbelianGroup.from_cyclic_orders([12, 5]).primes() == {2, 3, 5}
        assert FiniteAbelianGroup.from_cyclic_orders([4]).primes() == {2}
        assert FiniteAbelianGroup.trivial().primes() == set()

    def test_tensor_dim(self):
        g = FiniteAbelianGroup.from_cyclic_orders([2, 4, 3])  # Z/2 + Z/12
        assert g.tensor_dim_mod(2) == 2
        assert g.tensor_dim_mod(3) == 1
        assert g.tensor_dim_mod(5) == 0

    def test_localize(self):
        g = FiniteAbelianGroup.from_cyclic_orders([12])
        assert g.localize({2}) == FiniteAbelianGroup((3,))
        assert g.localize({2, 3}).is_trivial()
        assert g.localize(set()) == g

    def test_power_and_direct_sum(self):
        g = FiniteAbelianGroup.from_cyclic_orders([3])
        assert g.power(2).invariant_factors == (3, 3)
        h = FiniteAbelianGroup.from_cyclic_orders([2])
        assert g.direct_sum(h).invariant_factors == (6,)

    def test_str(self):
        assert str(FiniteAbelianGroup.trivial()) == "0"
        assert str(FiniteAbelianGroup((2, 12))) == "Z/2 + Z/12"


class TestFgAbelianGroup:
    def test_str_formats(self):
        assert str(FgAbelianGroup(0)) == "0"
        assert str(FgAbelianGroup(1)) == "Z"
        g = FgAbelianGroup(2, FiniteAbelianGroup((3, 9)))
        assert str(g) == "Z^2 + Z/3 + Z/9"

    def test_localize_keeps_rank(self):
        g = FgAbelianGroup(1, FiniteAbelianGroup((12,)))
        assert g.localize({2, 3}) == FgAbelianGroup(1)

    def test_power(self):
        g = FgAbelianGroup(1, FiniteAbelianGroup((2,)))
        assert g.power(3) == FgAbelianGroup(3, FiniteAbelianGroup((2, 2, 2)))
        assert g.power(0).is_zero()


class TestGradedAbelianGroup:
    def test_zero_parts_dropped(self):
        g = GradedAbelianGroup({0: FgAbelianGroup(1), 3: FgAbelianGroup(0)})
        assert g.degrees() == [0]
        assert g.part(3).is_zero()

    def test_str_and_dict(self):
        g = GradedAbelianGroup({2: FgAbelianGroup(2, FiniteAbelianGroup((3,)))})
        assert str(g) == "H_2 = Z^2 + Z/3"
        assert g.to_dict() == {"2": "Z^2 + Z/3"}
