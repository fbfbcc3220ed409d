from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from legendre_pairs.arrays import Alphabet, GArray, autocorrelation_distribution
from legendre_pairs.constructions import paley_pair
from legendre_pairs.errors import (
    CoefficientOverflowError,
    GroupMismatchError,
    InvalidGroupError,
    UnsupportedIsomorphismError,
)
from legendre_pairs.groups import (
    FiniteAbelianGroup,
    GroupRingElement,
    correlation_values,
    crt_transport,
    cyclic,
    gr_add,
    gr_mul,
    gr_power_t,
    group_new,
    parse_group_spec,
)
from legendre_pairs.known import z57_pair_2


def naive_mul(u: GroupRingElement, v: GroupRingElement) -> list[int]:
    G = u.group
    out = [0] * G.order
    for i, a in enumerate(u.coeffs):
        for j, b in enumerate(v.coeffs):
            gi, gj = G.element(i), G.element(j)
            k = G.index(tuple((x + y) % s for x, y, s in zip(gi, gj, G.factors)))
            out[k] += a * b
    return out


class TestGroupConstruction:
    def test_single_factor(self):
        g = group_new([57])
        assert g.order == 57 and g.rank == 1

    def test_product_tuples(self):
        g = group_new([3, 19])
        assert g.order == 57
        assert g.element(20) == (1, 1)
        assert g.index((2, 18)) == 56

    def test_order_ten_carrier(self):
        assert group_new([2, 5]).order == 10

    def test_last_factor_fastest(self):
        g = group_new([2, 3])
        assert list(g.elements()) == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]

    @pytest.mark.parametrize("factors", [[], [1], [0], [-3], [4, 1]])
    def test_rejects_bad_factors(self, factors):
        with pytest.raises(InvalidGroupError):
            group_new(factors)

    def test_spec_round_trip(self):
        for text in ("Z57", "Z3xZ19", "Z2xZ5^2"):
            assert parse_group_spec(text).spec() == text
        assert parse_group_spec("Z2xZ5^2").factors == (2, 5, 5)

    @pytest.mark.parametrize("bad", ["", "57", "Z", "Zx", "Z3xx", "Z3^0", "Y5", "Z5^"])
    def test_spec_rejects(self, bad):
        with pytest.raises(InvalidGroupError):
            parse_group_spec(bad)


class TestGroupRing:
    def test_additive_identity(self):
        G = cyclic(5)
        u = GroupRingElement(G, (1, -2, 0, 3, 1))
        assert gr_add(u, GroupRingElement(G)) == u

    def test_doubling(self):
        G = cyclic(5)
        e = GroupRingElement.identity(G)
        assert (e + e).coeffs == (2, 0, 0, 0, 0)

    def test_paley_sum_coefficients(self):
        pr = paley_pair(5).pair
        A, B = pr.a.one_set, pr.b.one_set
        s = GroupRingElement.from_set(pr.group, A) + GroupRingElement.from_set(pr.group, B)
        for g, c in enumerate(s.coeffs):
            assert c == (g in A) + (g in B)
        assert {g for g, c in enumerate(s.coeffs) if c == 2} == A & B

    def test_multiplicative_identity(self):
        G = group_new([3, 4])
        w = GroupRingElement(G, tuple(range(12)))
        assert gr_mul(w, GroupRingElement.identity(G)) == w

    def test_difference_expansion(self):
        G = cyclic(5)
        A = GroupRingElement.from_set(G, {1, 4})
        assert (A * A.power(-1)).coeffs == (2, 0, 1, 1, 0)

    def test_power_identity_and_inverse(self):
        G = cyclic(5)
        w = GroupRingElement.from_set(G, {1, 2})
        assert gr_power_t(w, 1) == w
        assert gr_power_t(w, -1).support() == {3, 4}

    def test_power_collision(self):
        G = cyclic(6)
        w = GroupRingElement.from_set(G, {1, 4})
        assert gr_power_t(w, 2).coeffs == (0, 0, 2, 0, 0, 0)

    def test_overflow_guard(self):
        G = cyclic(4)
        big = GroupRingElement(G, (2**40, 0, 0, 0))
        with pytest.raises(CoefficientOverflowError):
            gr_mul(big, big)

    def test_group_mismatch(self):
        with pytest.raises(GroupMismatchError):
            gr_add(GroupRingElement(cyclic(3)), GroupRingElement(cyclic(4)))

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_mul_matches_naive_oracle(self, data):
        factors = data.draw(st.lists(st.integers(2, 6), min_size=1, max_size=3).filter(
            lambda f: int(np.prod(f)) <= 24))
        G = group_new(factors)
        coeff = st.lists(st.integers(-3, 3), min_size=G.order, max_size=G.order)
        u = GroupRingElement(G, tuple(data.draw(coeff)))
        v = GroupRingElement(G, tuple(data.draw(coeff)))
        assert list(gr_mul(u, v).coeffs) == naive_mul(u, v)


class TestCorrelation:
    def test_identity_value_is_n(self):
        rng = np.random.default_rng(1)
        for n in (5, 12, 19):
            x = rng.choice([-1, 1], n)
            assert correlation_values(cyclic(n), x, x)[0] == n

    def test_paley_seven(self):
        x = [-1] * 7
        for r in {pow(i, 2, 7) for i in range(1, 7)}:
            x[r] = 1
        c = correlation_values(cyclic(7), x, x)
        assert list(c[1:]) == [-1] * 6

    def test_slce_difference_values(self):
        x = [0, 0, 1, 0, 1, 1]
        assert list(correlation_values(cyclic(6), x, x)[1:]) == [1, 1, 2, 1, 1]


class TestTransport:
    def test_z57_to_z3xz19_and_back(self):
        pr = z57_pair_2()
        target = group_new([3, 19])
        x = crt_transport(pr.a, target)
        assert x.group == target
        assert crt_transport(x, cyclic(57)) == pr.a

    def test_same_group_identity(self):
        a = z57_pair_2().a
        assert crt_transport(a, cyclic(57)) is a

    def test_rejects_non_coprime(self):
        a = GArray(cyclic(4), Alphabet.PM1, (1, 1, -1, 1))
        with pytest.raises(UnsupportedIsomorphismError):
            crt_transport(a, group_new([2, 2]))

    def test_distribution_invariant(self):
        rng = np.random.default_rng(7)
        target = group_new([3, 5])
        for _ in range(50):
            a = GArray(cyclic(15), Alphabet.PM1, tuple(int(v) for v in rng.choice([-1, 1], 15)))
            assert autocorrelation_distribution(crt_transport(a, target)) == autocorrelation_distribution(a)

    def test_transport_is_group_isomorphism(self):
        from legendre_pairs.groups import crt_map

        src, dst = cyclic(15), group_new([3, 5])
        phi = crt_map(src, dst)
        for i in range(15):
            for j in range(15):
                assert phi[(i + j) % 15] == dst.add(int(phi[i]), int(phi[j]))


def test_frozen_group_hashable():
    assert len({FiniteAbelianGroup((3, 5)), group_new([3, 5])}) == 1
