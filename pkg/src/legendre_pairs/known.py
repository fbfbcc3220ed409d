"""Published test vectors: the two Z57 Legendre pairs and the balanced
perfect Z38 array, with their recorded invariants."""

from __future__ import annotations

from .arrays import Alphabet, GArray, PairRecord
from .groups import FiniteAbelianGroup, cyclic

Z57_A1 = (
    "- + + - + - + - + + - + + - - - - + - + + + + + - + + + - - + + + - + - - - - - + - + - - + - + + + - - + - + - -"
)
Z57_B1 = (
    "- - + + - - + + - + + + + - + + - + + + + + - - - - - + - + + + - + + - - + - + - - - + + + - - - - + + - - - - +"
)
Z57_A2 = (
    "+ + - + + + + + + + - - - - - - + + - - - + - - - + - - + - + + - + - + - + - + - - + + - + + - - + + - - - - + +"
)
Z57_B2 = (
    "+ + + - - - - + + - + + - + + + - - - - + - - - + - + - - - + + - - + - + + - + - + - - - + + - + + + + - - + - +"
)

Z38_S = (1, 1, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0,
         1, 0, 1, 0, 1, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 1, 0, 0)
Z19_A = (1, 1, 0, 1, 1, 1, 1, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 0, 0)
Z19_B = (0, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 0, 1, 0, 0)

# value:count pairs of the off-identity autocorrelation
DIST_A1 = ((-11, 2), (-7, 12), (-3, 10), (1, 20), (5, 12))
DIST_B1 = ((-7, 12), (-3, 20), (1, 10), (5, 12), (9, 2))
DIST_A2 = ((-7, 14), (-3, 12), (1, 18), (5, 12))
DIST_B2 = ((-7, 12), (-3, 18), (1, 12), (5, 14))
ENERGY_1 = 1240
ENERGY_2 = 1112


def signs_to_array(text: str, group: FiniteAbelianGroup) -> GArray:
    symbols = text.split()
    return GArray(group, Alphabet.PM1, tuple(1 if s == "+" else -1 for s in symbols))


def z57_pair_1() -> PairRecord:
    g = cyclic(57)
    return PairRecord(signs_to_array(Z57_A1, g), signs_to_array(Z57_B1, g))


def z57_pair_2() -> PairRecord:
    g = cyclic(57)
    return PairRecord(signs_to_array(Z57_A2, g), signs_to_array(Z57_B2, g))


def z38_array() -> GArray:
    return GArray(cyclic(38), Alphabet.ZO, Z38_S)


def z19_pair() -> PairRecord:
    g = cyclic(19)
    return PairRecord(GArray(g, Alphabet.ZO, Z19_A), GArray(g, Alphabet.ZO, Z19_B))


def z38_decomposition(s: GArray) -> PairRecord:
    """Split a Z_{2u} array (u odd) into its Z_u components through
    Z_{2u} ≅ Z2 x Z_u: position i goes to (i mod 2, i mod u)."""
    n = s.n
    if n % 4 != 2:
        raise ValueError(f"need n ≡ 2 (mod 4), got {n}")
    u = n // 2
    a = [0] * u
    b = [0] * u
    for i, v in enumerate(s.values):
        (a if i % 2 == 0 else b)[i % u] = v
    g = cyclic(u)
    return PairRecord(GArray(g, s.alphabet, tuple(a)), GArray(g, s.alphabet, tuple(b)))
