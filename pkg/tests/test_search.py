from __future__ import annotations

import itertools
import math

import numpy as np
import pytest

from legendre_pairs.arrays import SymmetryType, is_legendre_pair, symmetry_type
from legendre_pairs.errors import InfeasibleSearchError, ParameterError, ParseError
from legendre_pairs.groups import cyclic
from legendre_pairs.search import (
    TABLE1_EXPECTED,
    TABLE2_EXPECTED,
    CandidateType,
    Checkpoint,
    SearchSpace,
    SearchStatus,
    _bitreverse,
    _paf,
    _swap_delta,
    difference_vectors,
    enumerate_candidates,
    k_cases,
    multiplier_orbits,
    orbit_representatives,
    pair_lambda,
    search_legendre_random,
    search_typed_legendre,
    search_yamada_pott,
    space_cardinality,
    type_census_by_scan,
)


def brute_space(n, type_, k):
    """All k-subsets of Z_n of the given type, lexicographic."""
    G = cyclic(n)
    from legendre_pairs.arrays import GArray

    out = []
    for c in itertools.combinations(range(n), k):
        t = symmetry_type(GArray.from_set(G, c))
        name = {SymmetryType.SYMMETRIC: "S", SymmetryType.SKEW: "Sk", SymmetryType.NEITHER: "N"}[t]
        if type_ == "any" or name == type_:
            out.append(frozenset(c))
    return out


class TestSpaces:
    def test_n5_symmetric_k3(self):
        assert list(enumerate_candidates(SearchSpace(5, "S", 3))) == [{0, 1, 4}, {0, 2, 3}]

    def test_n5_skew_k2(self):
        got = list(enumerate_candidates(SearchSpace(5, "Sk", 2)))
        assert len(got) == 4 and all(0 not in s for s in got)

    def test_n31_skew_closed_form(self):
        assert space_cardinality(31, "Sk", 16) == 2**15

    @pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
    @pytest.mark.parametrize("type_", ["S", "Sk", "N", "any"])
    def test_enumeration_matches_brute_force(self, n, type_):
        for k in range(n + 1):
            expected = brute_space(n, type_, k)
            got = list(enumerate_candidates(SearchSpace(n, type_, k)))
            assert got == expected
            assert len(got) == space_cardinality(n, type_, k)

    def test_restart_from_token(self):
        space = SearchSpace(13, "S", 7)
        full = list(enumerate_candidates(space))
        assert list(enumerate_candidates(space, start=5)) == full[5:]

    def test_scan_agrees_with_closed_forms(self):
        for n in (5, 9, 15):
            census = type_census_by_scan(n, chunk=64)
            for t in CandidateType:
                for k in range(n + 1):
                    assert census[(t, k)] == space_cardinality(n, t, k)

    def test_bitreverse_dtypes(self):
        for dtype in (np.uint32, np.uint64):
            w = np.array([0b0011, 0b1000], dtype=dtype)
            assert _bitreverse(w, 4).tolist() == [0b1100, 0b0001]

    def test_bad_space(self):
        with pytest.raises(ParameterError):
            SearchSpace(8, "S", 4)
        with pytest.raises(ParameterError):
            CandidateType.parse("diagonal")

    def test_lambda(self):
        assert pair_lambda(7, 4) == 4 and pair_lambda(7, 3) == 2
        assert k_cases(9) == (5, 4)
        with pytest.raises(ParameterError):
            pair_lambda(7, 2)


class TestEngineInternals:
    def test_difference_vectors(self):
        X = np.zeros((1, 7), dtype=np.uint8)
        X[0, [1, 2, 4]] = 1
        assert difference_vectors(X).tolist() == [[1, 1, 1]]

    def test_orbit_coverage(self):
        X = np.array([[1 if i in s else 0 for i in range(7)] for s in brute_space(7, "S", 3)], dtype=np.uint8)
        reps, sizes = orbit_representatives(X)
        assert int(np.sum(sizes)) == len(X)

    def test_multiplier_orbits_partition(self):
        orbs = multiplier_orbits(57, 7)
        assert sorted(np.concatenate(orbs).tolist()) == list(range(57))
        assert all(sorted(((o * 7) % 57).tolist()) == sorted(o.tolist()) for o in orbs)
        with pytest.raises(ParameterError):
            multiplier_orbits(57, 3)

    def test_swap_delta_matches_recompute(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            n = int(rng.choice([5, 7, 13, 21]))
            x = rng.choice([-1, 1], n).astype(np.int64)
            i, j = rng.choice(n, 2, replace=False)
            if x[i] == x[j]:
                continue
            y = x.copy()
            y[i], y[j] = x[j], x[i]
            assert np.array_equal(_paf(x) + _swap_delta(x, int(i), int(j)), _paf(y))


class TestYamadaPottSearch:
    def test_n7_none(self):
        out = search_yamada_pott(7, threads=1)
        assert out.status is SearchStatus.EXHAUSTED_NONE
        assert out.covered == out.cardinality

    def test_n9_found(self):
        out = search_yamada_pott(9)
        assert out.found
        pr = out.certificate
        assert is_legendre_pair(pr.a, pr.b) and pr.is_yamada_pott()

    @pytest.mark.parametrize("n", [3, 5, 11, 13, 15, 17, 19, 21])
    def test_small_table1(self, n):
        assert search_yamada_pott(n).found == TABLE1_EXPECTED[n]

    def test_thread_count_irrelevant(self):
        one = search_yamada_pott(21, threads=1)
        many = search_yamada_pott(21, threads=4)
        assert one.certificate == many.certificate
        assert one.census == many.census


class TestTypedSearch:
    def test_n7_neither_symmetric(self):
        assert search_typed_legendre(7, "N", "S").status is SearchStatus.EXHAUSTED_NONE

    def test_n17_neither_skew(self):
        out = search_typed_legendre(17, "N", "Sk")
        assert out.status is SearchStatus.EXHAUSTED_NONE
        assert out.covered == out.cardinality

    def test_n13_sym_sym(self):
        out = search_typed_legendre(13, "S", "S")
        assert out.found
        assert out.certificate.symmetry_types == (SymmetryType.SYMMETRIC,) * 2

    @pytest.mark.parametrize("n", [5, 7, 9, 11])
    def test_small_table2_columns(self, n):
        for (a, b, m), expected in TABLE2_EXPECTED.items():
            if m == n:
                assert search_typed_legendre(n, a, b).found == expected, (a, b, n)

    def test_unconstrained_guard(self):
        with pytest.raises(InfeasibleSearchError):
            search_typed_legendre(17, "N", "N")
        assert search_typed_legendre(17, "N", "N", force=True).found

    def test_budget_zero(self):
        out = search_typed_legendre(11, "S", "Sk", budget=0)
        assert out.status is SearchStatus.BUDGET_EXCEEDED and out.census == 0

    def test_checkpoint_resume(self, tmp_path):
        full = search_yamada_pott(19)
        part = search_yamada_pott(19, budget=1000)
        assert part.status is SearchStatus.BUDGET_EXCEEDED
        path = tmp_path / "run.ckpt"
        part.checkpoint.save(path)
        state = part
        while state.status is SearchStatus.BUDGET_EXCEEDED:
            state = search_yamada_pott(19, budget=1000, resume=Checkpoint.load(path))
            if state.checkpoint:
                state.checkpoint.save(path)
        assert state.status is full.status
        assert state.census == full.census and state.covered == full.covered == full.cardinality

    def test_checkpoint_mismatch(self):
        part = search_yamada_pott(19, budget=10)
        with pytest.raises(ParameterError):
            search_typed_legendre(19, "S", "S", resume=part.checkpoint)

    def test_checkpoint_text(self):
        ck = Checkpoint("yp", 19, CandidateType.SYMMETRIC, CandidateType.SKEW, 1, 42, 100, 300)
        assert Checkpoint.from_text(ck.to_text()) == ck
        with pytest.raises(ParseError):
            Checkpoint.from_text("garbage")


class TestRandomSearch:
    def test_n5_any_seed(self):
        for seed in range(5):
            out = search_legendre_random(5, seed=seed, budget=10_000)
            assert out.found and is_legendre_pair(out.certificate.a, out.certificate.b)

    def test_zero_budget(self):
        out = search_legendre_random(57, seed=1, budget=0)
        assert out.status is SearchStatus.BUDGET_EXCEEDED and out.census == 0

    def test_reproducible(self):
        a = search_legendre_random(21, seed=3, budget=200_000)
        b = search_legendre_random(21, seed=3, budget=200_000)
        assert a.found and a.certificate == b.certificate and a.census == b.census

    def test_cardinality(self):
        assert search_legendre_random(9, seed=0).cardinality == math.comb(9, 5) ** 2

    @pytest.mark.slow
    def test_n57_multiplier_orbits(self):
        out = search_legendre_random(57, seed=2, budget=2_000_000, multiplier=7)
        assert out.found
        pr = out.certificate
        assert is_legendre_pair(pr.a, pr.b)
