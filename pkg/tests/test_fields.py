from __future__ import annotations

import itertools

import pytest

from legendre_pairs.errors import FieldError, NonPrimitiveError, ParameterError
from legendre_pairs.fields import (
    cyclotomic_classes,
    cyclotomic_number,
    discrete_log,
    field_for_order,
    field_new,
    field_new_with_alpha,
    prime_power,
    proper_representation,
    smallest_irreducible,
    t_alpha,
)


def brute_poly_mul(x, y, f):
    """Independent schoolbook multiply in F_p[x]/(modulus)."""
    p, m = f.p, f.m
    dx, dy = f.digits(x), f.digits(y)
    prod = [0] * (2 * m)
    for i, j in itertools.product(range(m), repeat=2):
        prod[i + j] += dx[i] * dy[j]
    mod = f.modulus
    for deg in range(2 * m - 1, m - 1, -1):
        c = prod[deg] % p
        if c:
            for k in range(m + 1):
                prod[deg - m + k] -= c * mod[k]
    return f.from_digits(prod[:m])


class TestFieldConstruction:
    def test_f7_smallest_primitive_root(self):
        assert field_new(7).alpha == 3

    def test_f27_structure(self):
        f = field_new(3, 3)
        assert f.q == 27 and len(f.exp_table) == 26
        assert sorted(f.exp_table) == list(range(1, 27))

    def test_forced_alpha_19(self):
        f = field_new_with_alpha(19, 1, 2)
        assert f.alpha == 2 and len(f.exp_table) == 18

    def test_alpha_13_valid(self):
        assert field_new_with_alpha(13, 1, 2).alpha == 2

    def test_alpha_7_rejected_with_order(self):
        with pytest.raises(NonPrimitiveError) as info:
            field_new_with_alpha(7, 1, 2)
        assert info.value.order == 3 and "order 3" in str(info.value)

    def test_alpha_as_coefficients(self):
        f = field_new(5, 2)
        g = field_new_with_alpha(5, 2, f.digits(f.alpha))
        assert g.exp_table == f.exp_table

    def test_non_prime_base(self):
        with pytest.raises(FieldError):
            field_new(6)
        with pytest.raises(FieldError):
            field_for_order(12)

    @pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (3, 2), (3, 3), (5, 2), (7, 2)])
    def test_modulus_is_smallest_irreducible(self, p, m):
        # degree <= 3: irreducible iff no root in Z_p
        def rootless(c):
            return all(sum(ci * x**i for i, ci in enumerate(c)) % p for x in range(p))

        expected = next(tuple(low) + (1,) for low in itertools.product(range(p), repeat=m)
                        if rootless(tuple(low) + (1,)))
        assert smallest_irreducible(p, m) == expected

    @pytest.mark.parametrize("q", [4, 8, 9, 25, 27, 49])
    def test_multiplication_matches_schoolbook(self, q):
        f = field_for_order(q)
        for x in range(1, q):
            for y in range(1, q):
                assert f.mul(x, y) == brute_poly_mul(x, y, f)

    @pytest.mark.parametrize("q", [5, 7, 9, 13, 25, 27])
    def test_field_axioms(self, q):
        f = field_for_order(q)
        for x in range(q):
            assert f.add(x, f.neg(x)) == 0
            if x:
                assert f.mul(x, f.power(x, q - 2)) == 1


class TestLogs:
    def test_log_alpha(self):
        f = field_new(23)
        assert discrete_log(f, f.alpha) == 1
        assert discrete_log(f, 1) == 0

    def test_log_seven_in_f19(self):
        assert discrete_log(field_new_with_alpha(19, 1, 2), 7) == 6

    def test_log_zero_rejected(self):
        with pytest.raises(FieldError):
            discrete_log(field_new(7), 0)


class TestCyclotomy:
    def test_classes(self):
        assert cyclotomic_classes(field_new_with_alpha(19, 1, 2), 6)[0] == {1, 7, 11}
        assert cyclotomic_classes(field_new(7), 2)[0] == {1, 2, 4}
        assert cyclotomic_classes(field_new_with_alpha(5, 1, 2), 4)[0] == {1}

    def test_classes_partition(self):
        f = field_new(13)
        cls = cyclotomic_classes(f, 4)
        assert set().union(*(cls[i] for i in range(4))) == set(range(1, 13))

    def test_bad_divisor(self):
        with pytest.raises(FieldError):
            cyclotomic_classes(field_new(7), 4)

    def test_cyclotomic_numbers(self):
        assert cyclotomic_number(cyclotomic_classes(field_new(7), 2), 0, 0) == 1
        assert cyclotomic_number(cyclotomic_classes(field_new_with_alpha(5, 1, 2), 4), 0, 3) == 0
        assert cyclotomic_number(cyclotomic_classes(field_new_with_alpha(13, 1, 2), 4), 0, 3) == 0

    @pytest.mark.parametrize("q,d", [(13, 4), (19, 6), (25, 4), (29, 4)])
    def test_cyclotomic_row_sums(self, q, d):
        # sum_j (i, j) counts C_i + 1 minus the element landing on 0
        f = field_for_order(q)
        cls = cyclotomic_classes(f, d)
        for i in range(d):
            total = sum(cyclotomic_number(cls, i, j) for j in range(d))
            assert total == len(cls[i]) - (f.minus_one() in cls[i])


class TestProperRepresentation:
    @pytest.mark.parametrize("q,s,t", [(5, 1, 1), (13, -3, 1), (29, 5, 1), (37, 1, 3), (53, -7, 1), (25, -3, 2)])
    def test_values(self, q, s, t):
        rep = proper_representation(q)
        assert (rep.s, rep.t_abs) == (s, t)
        assert rep.s**2 + 4 * rep.t_abs**2 == q

    def test_requires_prime_1_mod_4(self):
        with pytest.raises(ParameterError):
            proper_representation(7)


class TestTAlpha:
    def test_q5(self):
        assert t_alpha(field_new_with_alpha(5, 1, 2)) == -1

    def test_q13(self):
        assert t_alpha(field_new_with_alpha(13, 1, 2)) == -1

    def test_q29_all_primitive(self):
        base = field_new(29)
        prims = base.primitive_elements()
        assert len(prims) == 12
        values = {t_alpha(field_new_with_alpha(29, 1, a)) for a in prims}
        assert values <= {-1, 1}

    def test_q13_both_signs(self):
        vals = {a: t_alpha(field_new_with_alpha(13, 1, a)) for a in (2, 6, 7, 11)}
        assert vals == {2: -1, 6: -1, 7: 1, 11: 1}

    def test_q37_has_t_three(self):
        vals = {t_alpha(field_new_with_alpha(37, 1, a)) for a in field_new(37).primitive_elements()}
        assert vals == {-3, 3}

    def test_wrong_residue(self):
        with pytest.raises(ParameterError):
            t_alpha(field_new(17))


def test_prime_power():
    assert prime_power(27) == (3, 3)
    assert prime_power(12) is None
    assert prime_power(1) is None
