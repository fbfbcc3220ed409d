"""G-arrays over {0,1} or {-1,1}: balance/perfection predicates, symmetry
types, difference-set style censuses, Legendre and Yamada-Pott pair tests,
correlation invariants and pair equivalence.
"""

from __future__ import annotations

import enum
import itertools
import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import AlphabetError, GroupMismatchError, LegendrePairsError
from .groups import FiniteAbelianGroup, correlation_values


class Alphabet(str, enum.Enum):
    ZO = "zo"
    PM1 = "pm1"

    @property
    def symbols(self) -> tuple[int, int]:
        return (0, 1) if self is Alphabet.ZO else (-1, 1)


class SymmetryType(str, enum.Enum):
    SYMMETRIC = "S"
    SKEW = "Sk"
    NEITHER = "N"


@dataclass(frozen=True)
class GArray:
    group: FiniteAbelianGroup
    alphabet: Alphabet
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        alphabet = Alphabet(self.alphabet)
        values = tuple(int(v) for v in self.values)
        if len(values) != self.group.order:
            raise ValueError(f"{len(values)} values for a group of order {self.group.order}")
        allowed = alphabet.symbols
        bad = [v for v in values if v not in allowed]
        if bad:
            raise AlphabetError(f"value {bad[0]} not in the {alphabet.value} alphabet")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_set(
        cls, group: FiniteAbelianGroup, ones: Iterable[int], alphabet: Alphabet = Alphabet.ZO
    ) -> GArray:
        ones = set(ones)
        lo, hi = Alphabet(alphabet).symbols
        return cls(group, alphabet, tuple(hi if i in ones else lo for i in range(group.order)))

    @property
    def n(self) -> int:
        return self.group.order

    @cached_property
    def one_set(self) -> frozenset[int]:
        return frozenset(i for i, v in enumerate(self.values) if v == 1)

    @property
    def k(self) -> int:
        return len(self.one_set)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.asarray(self.values, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    def row_sum(self) -> int:
        return sum(self.values)

    def negated(self) -> GArray:
        if self.alphabet is not Alphabet.PM1:
            raise AlphabetError("negation is defined on ±1 arrays")
        return GArray(self.group, self.alphabet, tuple(-v for v in self.values))

    @cached_property
    def autocorrelation(self) -> np.ndarray:
        out = correlation_values(self.group, self.array, self.array)
        out.setflags(write=False)
        return out


def to_pm1(a: GArray) -> GArray:
    if a.alphabet is not Alphabet.ZO:
        raise AlphabetError("to_pm1 expects a {0,1} array")
    return GArray(a.group, Alphabet.PM1, tuple(2 * v - 1 for v in a.values))


def to_zo(a: GArray) -> GArray:
    if a.alphabet is not Alphabet.PM1:
        raise AlphabetError("to_zo expects a ±1 array")
    return GArray(a.group, Alphabet.ZO, tuple((v + 1) // 2 for v in a.values))


def as_zo(a: GArray) -> GArray:
    return a if a.alphabet is Alphabet.ZO else to_zo(a)


def as_pm1(a: GArray) -> GArray:
    return a if a.alphabet is Alphabet.PM1 else to_pm1(a)


# difference functions ----------------------------------------------------


def _indicator(group: FiniteAbelianGroup, D: Iterable[int]) -> np.ndarray:
    x = np.zeros(group.order, dtype=np.int64)
    for g in D:
        x[g] = 1
    return x


def difference_census(group: FiniteAbelianGroup, D: Iterable[int]) -> np.ndarray:
    """``d_D(t) = |(D + t) ∩ D|`` for every t."""
    x = _indicator(group, D)
    return correlation_values(group, x, x)


def difference_function(group: FiniteAbelianGroup, D: Iterable[int], t: int) -> int:
    D = frozenset(D)
    return sum(1 for g in D if group.add(g, t) in D)


def joint_census(group: FiniteAbelianGroup, sets: Sequence[Iterable[int]]) -> np.ndarray:
    total = np.zeros(group.order, dtype=np.int64)
    for D in sets:
        total += difference_census(group, D)
    return total


# balance and perfection --------------------------------------------------


def is_balanced(a: GArray) -> bool:
    n, s = a.n, a.row_sum()
    if a.alphabet is Alphabet.PM1:
        return s == 0 if n % 2 == 0 else s in (-1, 1)
    return 2 * s == n if n % 2 == 0 else 2 * s in (n - 1, n + 1)


def is_almost_balanced(a: GArray) -> bool:
    n, s = a.n, a.row_sum()
    if a.alphabet is Alphabet.PM1:
        return s in (-2, 2) if n % 2 == 0 else s in (-3, 3)
    return 2 * s in (n - 2, n + 2) if n % 2 == 0 else 2 * s in (n - 3, n + 3)


def perfect_values(n: int, k: int, alphabet: Alphabet) -> frozenset[int]:
    """Allowed off-identity autocorrelation values of a perfect array."""
    r = n % 4
    pm = {0: {0}, 1: {1}, 2: {-2, 2}, 3: {-1}}[r]
    if alphabet is Alphabet.PM1:
        return frozenset(pm)
    # n - 4(k - d) = c  =>  d = k - (n - c)/4
    return frozenset(k - (n - c) // 4 for c in pm)


def is_perfect(a: GArray) -> bool:
    allowed = perfect_values(a.n, a.k, a.alphabet)
    return all(int(c) in allowed for c in a.autocorrelation[1:])


# symmetry ----------------------------------------------------------------


def symmetry_type_of_set(group: FiniteAbelianGroup, D: Iterable[int]) -> SymmetryType:
    D = frozenset(D)
    neg = group.neg_table
    minus = frozenset(int(neg[g]) for g in D)
    if D == minus:
        return SymmetryType.SYMMETRIC
    everything = frozenset(range(group.order))
    if 0 in D:
        if D & minus == {0} and D | minus == everything:
            return SymmetryType.SKEW
    elif not D & minus and D | minus == everything - {0}:
        return SymmetryType.SKEW
    return SymmetryType.NEITHER


def symmetry_type(a: GArray) -> SymmetryType:
    return symmetry_type_of_set(a.group, a.one_set)


# difference sets -----------------------------------------------------------


@dataclass(frozen=True)
class DesignCheck:
    """Outcome of a DS/ADS/SDS test.  ``reason`` is ``None`` on success,
    ``"parameters"`` when the declared sizes do not match, ``"census"``
    when the difference counts are wrong."""

    ok: bool
    reason: str | None
    census: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.ok


def check_difference_set(
    group: FiniteAbelianGroup, D: Iterable[int], v: int, k: int, lam: int
) -> DesignCheck:
    D = frozenset(D)
    census = difference_census(group, D)
    if group.order != v or len(D) != k:
        return DesignCheck(False, "parameters", tuple(int(x) for x in census))
    ok = bool(np.all(census[1:] == lam))
    return DesignCheck(ok, None if ok else "census", tuple(int(x) for x in census))


def is_difference_set(group: FiniteAbelianGroup, D: Iterable[int], v: int, k: int, lam: int) -> bool:
    return check_difference_set(group, D, v, k, lam).ok


def check_almost_difference_set(
    group: FiniteAbelianGroup, D: Iterable[int], v: int, k: int, lam: int, t: int
) -> DesignCheck:
    D = frozenset(D)
    census = difference_census(group, D)
    if group.order != v or len(D) != k:
        return DesignCheck(False, "parameters", tuple(int(x) for x in census))
    off = census[1:]
    ok = bool(np.all((off == lam) | (off == lam + 1))) and int(np.sum(off == lam)) == t
    return DesignCheck(ok, None if ok else "census", tuple(int(x) for x in census))


def is_almost_difference_set(
    group: FiniteAbelianGroup, D: Iterable[int], v: int, k: int, lam: int, t: int
) -> bool:
    return check_almost_difference_set(group, D, v, k, lam, t).ok


def is_sds(group: FiniteAbelianGroup, sets: Sequence[Iterable[int]], lam: int) -> bool:
    census = joint_census(group, [frozenset(D) for D in sets])
    return bool(np.all(census[1:] == lam))


# Legendre and Yamada-Pott pairs ------------------------------------------------


def _check_pair(a: GArray, b: GArray) -> None:
    if a.group != b.group:
        raise GroupMismatchError(f"{a.group} vs {b.group}")
    if a.alphabet != b.alphabet:
        raise GroupMismatchError(f"alphabet {a.alphabet.value} vs {b.alphabet.value}")


def legendre_pm1_route(a: GArray, b: GArray) -> bool:
    """C_a(t) + C_b(t) = -2 off the identity, equal row sums in {-1, 1}."""
    a, b = as_pm1(a), as_pm1(b)
    if a.n % 2 == 0:
        return False
    sa, sb = a.row_sum(), b.row_sum()
    if sa != sb or sa not in (-1, 1):
        return False
    return bool(np.all(a.autocorrelation[1:] + b.autocorrelation[1:] == -2))


def legendre_zo_route(a: GArray, b: GArray) -> bool:
    """The 2-SDS form: weights (n±1)/2 with joint census (n+1)/2 or (n-3)/2."""
    a, b = as_zo(a), as_zo(b)
    n = a.n
    if n % 2 == 0:
        return False
    if a.k != b.k:
        return False
    if a.k == (n + 1) // 2:
        lam = (n + 1) // 2
    elif a.k == (n - 1) // 2:
        lam = (n - 3) // 2
    else:
        return False
    return bool(np.all(a.autocorrelation[1:] + b.autocorrelation[1:] == lam))


def is_legendre_pair(a: GArray, b: GArray) -> bool:
    _check_pair(a, b)
    if a.alphabet is Alphabet.PM1:
        return legendre_pm1_route(a, b)
    return legendre_zo_route(a, b)


def yamada_pott_conditions(a: GArray, b: GArray) -> dict[str, bool]:
    _check_pair(a, b)
    a, b = as_zo(a), as_zo(b)
    return {
        "legendre": legendre_zo_route(a, b),
        "equal_weight": a.k == b.k,
        "a_symmetric": symmetry_type(a) is SymmetryType.SYMMETRIC,
        "b_skew": symmetry_type(b) is SymmetryType.SKEW,
    }


def is_yamada_pott_pair(a: GArray, b: GArray) -> bool:
    return all(yamada_pott_conditions(a, b).values())


# invariants ------------------------------------------------------------------


def autocorrelation_distribution(a: GArray) -> tuple[tuple[int, int], ...]:
    counts = Counter(int(c) for c in a.autocorrelation[1:])
    return tuple(sorted(counts.items()))


def correlation_energy(a: GArray, include_identity: bool = False) -> int:
    c = a.autocorrelation if include_identity else a.autocorrelation[1:]
    return int(np.sum(c * c))


def peak_correlation(a: GArray) -> int:
    c = a.autocorrelation[1:]
    return int(np.max(np.abs(c))) if len(c) else 0


def format_distribution(dist: Sequence[tuple[int, int]]) -> str:
    return "".join(f"({v})^{m}" for v, m in dist)


@dataclass(frozen=True)
class PairRecord:
    a: GArray
    b: GArray

    def __post_init__(self) -> None:
        _check_pair(self.a, self.b)

    @property
    def group(self) -> FiniteAbelianGroup:
        return self.a.group

    @property
    def alphabet(self) -> Alphabet:
        return self.a.alphabet

    @cached_property
    def row_sums(self) -> tuple[int, int]:
        return (self.a.row_sum(), self.b.row_sum())

    @cached_property
    def symmetry_types(self) -> tuple[SymmetryType, SymmetryType]:
        return (symmetry_type(self.a), symmetry_type(self.b))

    @cached_property
    def distributions(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        pa, pb = as_pm1(self.a), as_pm1(self.b)
        return (autocorrelation_distribution(pa), autocorrelation_distribution(pb))

    @cached_property
    def energies(self) -> tuple[int, int]:
        return (correlation_energy(as_pm1(self.a)), correlation_energy(as_pm1(self.b)))

    @cached_property
    def peaks(self) -> tuple[int, int]:
        return (peak_correlation(as_pm1(self.a)), peak_correlation(as_pm1(self.b)))

    def is_legendre(self) -> bool:
        return is_legendre_pair(self.a, self.b)

    def is_yamada_pott(self) -> bool:
        return is_yamada_pott_pair(self.a, self.b)

    def to_pm1(self) -> PairRecord:
        return PairRecord(as_pm1(self.a), as_pm1(self.b))

    def to_zo(self) -> PairRecord:
        return PairRecord(as_zo(self.a), as_zo(self.b))


# equivalence -------------------------------------------------------------------


def units(s: int) -> list[int]:
    return [u for u in range(1, s) if math.gcd(u, s) == 1] if s > 1 else [0]


def apply_affine(a: GArray, shift: Sequence[int], mult: Sequence[int]) -> GArray:
    """The array with ``out[mult*g + shift] = a[g]`` coordinatewise."""
    group = a.group
    coords = group.coords * np.asarray(mult, dtype=np.int64) + np.asarray(shift, dtype=np.int64)
    target = group.index_array(coords)
    values = [0] * group.order
    for i, v in enumerate(a.values):
        values[int(target[i])] = v
    return GArray(group, a.alphabet, tuple(values))


class Equivalence(str, enum.Enum):
    EQUIVALENT = "equivalent"
    NOT_EQUIVALENT = "not-equivalent"
    UNDECIDED = "undecided-by-budget"


class EquivalenceUndecided(LegendrePairsError):
    pass


DEFAULT_EQUIVALENCE_CAP = 10**8


def equivalence_work(group: FiniteAbelianGroup) -> int:
    """Number of (swap, multiplier, sign, shift) combinations examined."""
    return 2 * math.prod(len(units(s)) for s in group.factors) * 2 * group.order


def _translation_table(group: FiniteAbelianGroup) -> np.ndarray:
    coords = group.coords
    return group.index_array(coords[None, :, :] + coords[:, None, :])  # [t, g] -> g + t


def _is_translate(table: np.ndarray, x: np.ndarray, z: np.ndarray) -> bool:
    """Whether x[g + t] == z[g] for some t."""
    return bool(np.any(np.all(x[table] == z[None, :], axis=1)))


def decide_equivalence(
    p1: PairRecord, p2: PairRecord, cap: int = DEFAULT_EQUIVALENCE_CAP
) -> Equivalence:
    """Exact decision whether {a, b} = {tau a', beta b'} with tau, beta affine
    maps whose multipliers satisfy beta* = +tau* or beta* = -tau*.

    The sign is shared by all coordinates: only the global negation x -> -x
    fixes every autocorrelation, so a per-coordinate sign would not keep
    Legendre pairs Legendre on groups of rank > 1.
    """
    if p1.group != p2.group:
        raise GroupMismatchError(f"{p1.group} vs {p2.group}")
    p1, p2 = p1.to_pm1(), p2.to_pm1()
    if sorted(p1.distributions) != sorted(p2.distributions):
        return Equivalence.NOT_EQUIVALENT
    if sorted(p1.energies) != sorted(p2.energies):
        return Equivalence.NOT_EQUIVALENT
    group = p1.group
    if equivalence_work(group) > cap:
        return Equivalence.UNDECIDED
    zero = [0] * group.rank
    table = _translation_table(group)
    unit_lists = [units(s) for s in group.factors]
    for x, y in ((p1.a, p1.b), (p1.b, p1.a)):
        xv, yv = x.array, y.array
        for mult in itertools.product(*unit_lists):
            za = apply_affine(p2.a, zero, mult).array
            if not _is_translate(table, xv, za):
                continue
            for sign in (1, -1):
                m2 = [(sign * u) % s for u, s in zip(mult, group.factors)]
                zb = apply_affine(p2.b, zero, m2).array
                if _is_translate(table, yv, zb):
                    return Equivalence.EQUIVALENT
    return Equivalence.NOT_EQUIVALENT


def pairs_equivalent(p1: PairRecord, p2: PairRecord, cap: int = DEFAULT_EQUIVALENCE_CAP) -> bool:
    outcome = decide_equivalence(p1, p2, cap)
    if outcome is Equivalence.UNDECIDED:
        raise EquivalenceUndecided(
            f"orbit work {equivalence_work(p1.group)} exceeds cap {cap}"
        )
    return outcome is Equivalence.EQUIVALENT
