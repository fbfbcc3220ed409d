from __future__ import annotations

import pytest

from legendre_pairs.arrays import (
    GArray,
    PairRecord,
    SymmetryType,
    check_almost_difference_set,
    difference_census,
    is_almost_balanced,
    is_balanced,
    is_legendre_pair,
    is_perfect,
    is_sds,
    joint_census,
)
from legendre_pairs.constructions import (
    DHM_CLASSES,
    EX57_X,
    EX57_Y,
    backup_yp_pair,
    baumert_pair,
    cijl_sets,
    cyclotomic_coset_pair,
    cyclotomic_union_pair,
    dhm_array,
    dhm_component_pair,
    dhm_sets,
    dhm_yp_selector,
    ex57,
    paley_pair,
    slce_array,
    slce_yamada_bridge,
    szekeres_pair,
    szekeres_whiteman_pair,
    yamada_pair,
    yp_ads_parameters,
    yp_to_perfect,
)
from legendre_pairs.errors import ConstructionError, ParameterError
from legendre_pairs.fields import cyclotomic_classes, field_new, field_new_with_alpha, t_alpha
from legendre_pairs.groups import FiniteAbelianGroup, cyclic
from legendre_pairs.known import Z57_A2, Z57_B2, signs_to_array


class TestSlce:
    def test_q7(self):
        r = slce_array(7, 3)
        assert r.array.one_set == {2, 4, 5} and r.array.group == cyclic(6)
        assert r.properties["perfect"]

    def test_q9_balanced_not_perfect(self):
        arr = slce_array(9).array
        assert is_balanced(arr) and not is_perfect(arr)

    def test_q11_perfect(self):
        assert is_perfect(slce_array(11).array)

    def test_even_q_rejected(self):
        with pytest.raises(ParameterError):
            slce_array(8)

    def test_deterministic(self):
        assert slce_array(27).array == slce_array(27).array


class TestDhm:
    def test_q5_class2_perfect(self):
        r = dhm_array(5, 2, 2)
        assert r.properties["perfect"] and r.parameters["t_alpha"] == -1

    def test_q5_class3_perfect(self):
        assert dhm_array(5, 2, 3).properties["perfect"]

    def test_q13_class1_not_perfect(self):
        r = dhm_array(13, 2, 1)
        assert not r.properties["perfect"] and r.ok

    def test_coset_layout(self):
        A, B = dhm_sets(field_new_with_alpha(5, 1, 2), 3)
        arr = dhm_array(5, 2, 3).array
        assert arr.one_set == A | {5 + b for b in B}

    def test_regime(self):
        with pytest.raises(ParameterError):
            dhm_array(7, None, 3)
        with pytest.raises(ParameterError):
            dhm_array(13, 2, 3)  # s = -3
        with pytest.raises(ParameterError):
            dhm_array(37, 2, 1)  # |t| = 3
        with pytest.raises(ParameterError):
            dhm_array(5, 2, 4)

    def test_cijl_helper(self):
        f = field_new_with_alpha(13, 1, 2)
        for cls, (a, b) in DHM_CLASSES.items():
            cls_sets = cyclotomic_classes(f, 4)
            A, B = dhm_sets(f, cls)
            assert A == cls_sets[a[0]] | cls_sets[a[1]] and B == cls_sets[b[0]] | cls_sets[b[1]]
        A, B = cijl_sets(f, 0, 1, 3)
        assert A == cls_sets[0] | cls_sets[1] and B == cls_sets[1] | cls_sets[3]

    @pytest.mark.parametrize("q", [5, 13, 29])
    def test_joint_census_values_by_class(self, q):
        for a in field_new(q).primitive_elements():
            f = field_new_with_alpha(q, 1, a)
            t = t_alpha(f)
            cls = cyclotomic_classes(f, 4)
            inv = {x: f.power(x, q - 2) for x in range(1, q)}
            expected = {
                1: ((q - t - 2) // 2, (q + t - 4) // 2),
                2: ((q - t - 4) // 2, (q + t - 2) // 2),
            }
            for i in (1, 2):
                c = joint_census(f.additive_group, dhm_sets(f, i))
                even = {int(c[x]) for x in range(1, q) if inv[x] in cls[0] | cls[2]}
                odd = {int(c[x]) for x in range(1, q) if inv[x] in cls[1] | cls[3]}
                assert (even, odd) == ({expected[i][0]}, {expected[i][1]})

    @pytest.mark.parametrize("q", [5, 13, 29, 53])
    def test_class3_is_szekeres(self, q):
        f = field_new(q)
        d = dhm_component_pair(q, f.alpha, 3)
        s = szekeres_pair(q, f.alpha).pair
        assert (d.a, d.b) == (s.a, s.b)

    def test_c01_c02_legendre_iff_t_minus_one(self):
        f13 = field_new(13)
        seen = set()
        for a in f13.primitive_elements():
            f = field_new_with_alpha(13, 1, a)
            t = t_alpha(f)
            cls = cyclotomic_classes(f, 4)
            G = f.additive_group
            pr = PairRecord(GArray.from_set(G, cls[0] | cls[1]), GArray.from_set(G, cls[0] | cls[2]))
            assert pr.is_legendre() == (t == -1)
            seen.add(t)
        assert seen == {-1, 1}


class TestSelector:
    def test_q5(self):
        r = dhm_yp_selector(5, 2)
        assert r.properties == {"class": 2, "t_alpha": -1}

    def test_q13_alpha2(self):
        assert dhm_yp_selector(13, 2).properties["class"] == 2

    def test_q13_class1_exists(self):
        classes = {a: dhm_yp_selector(13, a).properties["class"] for a in (2, 6, 7, 11)}
        assert classes == {2: 2, 6: 2, 7: 1, 11: 1}

    def test_q37_rejected(self):
        with pytest.raises(ParameterError):
            dhm_yp_selector(37)


class TestYamadaFamilies:
    def test_yamada_q7(self):
        pr = yamada_pair(7).pair
        assert pr.group == cyclic(3) and pr.a.k == pr.b.k == 1

    def test_yamada_q19(self):
        pr = yamada_pair(19).pair
        assert pr.group == cyclic(9) and pr.is_yamada_pott()

    def test_yamada_q27_extension(self):
        pr = yamada_pair(27).pair
        assert pr.group == cyclic(13) and pr.is_yamada_pott()

    @pytest.mark.parametrize("q", [7, 11, 19, 23, 27, 31, 43, 47])
    def test_yamada_sds_sizes(self, q):
        pr = yamada_pair(q).pair
        assert pr.a.k == pr.b.k == (q - 3) // 4
        assert is_sds(pr.group, [pr.a.one_set, pr.b.one_set], (q - 7) // 4)

    def test_yamada_regime(self):
        with pytest.raises(ParameterError):
            yamada_pair(13)

    @pytest.mark.parametrize("q,u", [(7, 3), (59, 29), (23, 11)])
    def test_backup(self, q, u):
        r = backup_yp_pair(q)
        assert r.pair.group == cyclic(u) and r.pair.is_yamada_pott()
        assert r.pair.b.k == (q - 3) // 4
        lifted = r.extras["lifted"]
        assert lifted.n == 2 * u and is_perfect(lifted) and is_almost_balanced(lifted)


class TestAdditiveFamilies:
    def test_szekeres_q5(self):
        pr = szekeres_pair(5, 2).pair
        assert pr.a.one_set == {1, 2} and pr.b.one_set == {1, 3}
        assert pr.symmetry_types == (SymmetryType.SKEW, SymmetryType.SKEW)
        assert is_sds(pr.group, [pr.a.one_set, pr.b.one_set], 1)

    def test_paley_q7(self):
        pr = paley_pair(7).pair
        assert pr.is_legendre() and pr.group == cyclic(7)
        assert pr.a.one_set == pr.b.one_set == {1, 2, 4}

    def test_paley_q13_symmetric(self):
        assert paley_pair(13).pair.symmetry_types == (SymmetryType.SYMMETRIC,) * 2

    def test_sw25(self):
        pr = szekeres_whiteman_pair(25).pair
        assert pr.group == FiniteAbelianGroup((5, 5))
        assert pr.is_legendre() and pr.symmetry_types == (SymmetryType.SKEW,) * 2

    def test_sw_regime(self):
        with pytest.raises(ParameterError):
            szekeres_whiteman_pair(13)

    @pytest.mark.parametrize("q1,q2,factors", [(3, 5, (3, 5)), (5, 7, (5, 7)), (7, 9, (7, 3, 3))])
    def test_baumert(self, q1, q2, factors):
        r = baumert_pair(q1, q2)
        assert r.pair.group.factors == factors and r.pair.is_legendre()
        v = q1 * q2
        assert r.properties["ds"] == (v, (v - 1) // 2, (v - 3) // 4)

    def test_baumert_non_twin(self):
        with pytest.raises(ParameterError):
            baumert_pair(5, 9)

    def test_union_pair_unverified(self):
        pr = cyclotomic_union_pair(13, 2, 4, (0, 1), (0, 2))
        assert pr.is_legendre()  # t(2) = -1


class TestYpLift:
    def test_q7_lift(self):
        pr = backup_yp_pair(7).pair
        r = yp_to_perfect(pr.a, pr.b)
        assert r.array.n == 6 and is_perfect(r.array) and is_almost_balanced(r.array)

    @pytest.mark.parametrize("which", ["A", "B"])
    def test_complement_balanced(self, which):
        pr = backup_yp_pair(7).pair
        arr = yp_to_perfect(pr.a, pr.b, which).array
        assert is_perfect(arr) and is_balanced(arr)

    def test_ads_u3_no_identity(self):
        pr = backup_yp_pair(7).pair
        assert 0 not in pr.b.one_set
        arr = yp_to_perfect(pr.a, pr.b).array
        assert yp_ads_parameters(3, False) == (6, 2, 0, 3)
        assert check_almost_difference_set(arr.group, arr.one_set, 6, 2, 0, 3).ok
        # brute census: three non-identity elements at 0, two at 1
        c = difference_census(arr.group, arr.one_set)
        assert sorted(int(x) for x in c[1:]) == [0, 0, 0, 1, 1]

    def test_rejects_non_yp(self):
        pr = paley_pair(7).pair
        with pytest.raises(ParameterError):
            yp_to_perfect(pr.a, pr.b)


class TestBridge:
    @pytest.mark.parametrize("q", [7, 23, 31])
    def test_identities(self, q):
        sets = slce_yamada_bridge(q).properties["sets"]
        assert sets.a1_equals_b2 and sets.b1_is_complement_of_a2

    def test_regime(self):
        with pytest.raises(ParameterError):
            slce_yamada_bridge(13)


class TestCosetPairs:
    def test_ex57_preset(self):
        r = ex57()
        assert r.pair.group == FiniteAbelianGroup((3, 19))
        assert r.pair.is_legendre() and r.pair.energies == (1112, 1112)

    def test_ex57_transport(self):
        r = ex57()
        assert r.extras["a2"] == signs_to_array(Z57_A2, cyclic(57))
        assert r.extras["b2"] == signs_to_array(Z57_B2, cyclic(57))

    def test_empty_selection_fails(self):
        with pytest.raises(ConstructionError) as info:
            cyclotomic_coset_pair(3, 19, 6, {}, {}, alpha=2)
        report = info.value.report
        assert set(report.pair.a.values) == {-1}
        assert not report.verification["legendre"]
        assert "joint_census" in report.properties

    def test_bad_token(self):
        with pytest.raises(ParameterError):
            cyclotomic_coset_pair(3, 19, 6, {0: ("C9",)}, EX57_Y, alpha=2)

    def test_bad_divisor(self):
        with pytest.raises(ParameterError):
            cyclotomic_coset_pair(3, 19, 4, EX57_X, EX57_Y, alpha=2)

    def test_preset_pair_is_legendre_by_independent_check(self):
        pr = ex57().pair
        assert is_legendre_pair(pr.a, pr.b)
