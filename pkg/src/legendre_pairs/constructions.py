"""Cyclotomic constructions of perfect arrays and Legendre pairs.

Every public builder returns a :class:`ConstructionReport` whose
``verification`` map has been checked by the predicates in
:mod:`legendre_pairs.arrays`; a failed check raises
:class:`~legendre_pairs.errors.ConstructionError` carrying the report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

from .arrays import (
    Alphabet,
    GArray,
    PairRecord,
    SymmetryType,
    as_pm1,
    as_zo,
    check_almost_difference_set,
    check_difference_set,
    is_almost_balanced,
    is_balanced,
    is_legendre_pair,
    is_perfect,
    is_yamada_pott_pair,
    joint_census,
    symmetry_type,
)
from .errors import ConstructionError, ParameterError
from .fields import (
    FiniteField,
    cyclotomic_classes,
    discrete_log,
    field_for_order,
    prime_power,
    proper_representation,
    t_alpha,
)
from .groups import FiniteAbelianGroup, crt_transport, cyclic

AlphaSpec = Union[int, Sequence[int], None]
Output = Union[GArray, PairRecord]


@dataclass
class ConstructionReport:
    name: str
    parameters: dict
    output: Output
    verification: dict[str, bool]
    properties: dict = field(default_factory=dict)
    extras: dict[str, Output] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.verification.values())

    @property
    def pair(self) -> PairRecord:
        if not isinstance(self.output, PairRecord):
            raise TypeError(f"{self.name} produced an array, not a pair")
        return self.output

    @property
    def array(self) -> GArray:
        if not isinstance(self.output, GArray):
            raise TypeError(f"{self.name} produced a pair, not an array")
        return self.output


def _emit(report: ConstructionReport) -> ConstructionReport:
    if not report.ok:
        failed = [k for k, v in report.verification.items() if not v]
        raise ConstructionError(f"{report.name}: failed checks {failed}", report)
    return report


def resolve_field(q: int, alpha: AlphaSpec) -> FiniteField:
    if prime_power(q) is None:
        raise ParameterError(f"q = {q} is not a prime power")
    if alpha is not None and not isinstance(alpha, int):
        p, _ = prime_power(q)
        alpha = sum(int(c) * p**i for i, c in enumerate(alpha))
    return field_for_order(q, alpha)


def _field_params(f: FiniteField) -> dict:
    return {"q": f.q, "alpha": f.alpha, "modulus": list(f.modulus)}


def _field_set_indices(f: FiniteField, elements) -> set[int]:
    return {f.group_index(x) for x in elements}


def _pair(group: FiniteAbelianGroup, A, B, alphabet: Alphabet) -> PairRecord:
    return PairRecord(GArray.from_set(group, A, alphabet), GArray.from_set(group, B, alphabet))


def _class_union(f: FiniteField, d: int, labels: Sequence[int]) -> set[int]:
    classes = cyclotomic_classes(f, d)
    out: set[int] = set()
    for i in labels:
        out |= classes[i]
    return out


def _shifted(f: FiniteField, elements, c: int) -> set[int]:
    return {f.add(x, c) for x in elements}


# Sidelnikov / Lempel-Cohn-Eastman ------------------------------------------------


def slce_array(q: int, alpha: AlphaSpec = None, alphabet: Alphabet = Alphabet.ZO) -> ConstructionReport:
    """Array on Z_{q-1} with a_i = 1 iff alpha^i lies in {alpha^(2j+1) - 1}."""
    if q < 4 or q % 2 == 0:
        raise ParameterError(f"SLCE array needs an odd prime power q >= 5, got {q}")
    f = resolve_field(q, alpha)
    S = {f.sub(f.alpha_power(2 * j + 1), 1) for j in range((q - 1) // 2)}
    ones = {discrete_log(f, x) for x in S if x}
    arr = GArray.from_set(cyclic(q - 1), ones, alphabet)
    perfect = is_perfect(arr)
    return _emit(
        ConstructionReport(
            "slce",
            _field_params(f),
            arr,
            {"balanced": is_balanced(arr), "perfect_iff_q_3_mod_4": perfect == (q % 4 == 3)},
            {"perfect": perfect},
        )
    )


# Ding-Helleseth-Martinsen ------------------------------------------------------------


DHM_CLASSES = {1: ((0, 1), (1, 3)), 2: ((0, 2), (2, 3)), 3: ((0, 1), (0, 3))}


def _dhm_field(q: int, alpha: AlphaSpec):
    if q % 8 != 5:
        raise ParameterError(f"DHM needs q ≡ 5 (mod 8), got q = {q}")
    f = resolve_field(q, alpha)
    return f, proper_representation(q)


def dhm_sets(f: FiniteField, cls: int) -> tuple[set[int], set[int]]:
    """The field-element sets (A_i, B_i) of DHM class ``cls``."""
    a_labels, b_labels = DHM_CLASSES[cls]
    return _class_union(f, 4, a_labels), _class_union(f, 4, b_labels)


def cijl_sets(f: FiniteField, i: int, j: int, l: int) -> tuple[set[int], set[int]]:
    """(C_i ∪ C_j, C_j ∪ C_l) for distinct classes of order 4."""
    if len({i, j, l}) != 3 or not {i, j, l} <= {0, 1, 2, 3}:
        raise ParameterError(f"need distinct indices in 0..3, got {(i, j, l)}")
    return _class_union(f, 4, (i, j)), _class_union(f, 4, (j, l))


def dhm_array(
    q: int, alpha: AlphaSpec = None, cls: int = 3, alphabet: Alphabet = Alphabet.ZO
) -> ConstructionReport:
    """Array on Z2 x Z_p^m with A_i on the 0-coset and B_i on the 1-coset."""
    f, rep = _dhm_field(q, alpha)
    if cls not in DHM_CLASSES:
        raise ParameterError(f"DHM class must be 1, 2 or 3, got {cls}")
    if cls == 3 and rep.s**2 != 1:
        raise ParameterError(f"class 3 needs s^2 = 1; q = {q} has s = {rep.s}")
    if cls in (1, 2) and rep.t_abs != 1:
        raise ParameterError(f"classes 1 and 2 need t^2 = 1; q = {q} has |t| = {rep.t_abs}")
    A, B = dhm_sets(f, cls)
    group = FiniteAbelianGroup((2,) + f.additive_group.factors)
    ones = {group.index((0,) + f.digits(x)) for x in A} | {group.index((1,) + f.digits(x)) for x in B}
    arr = GArray.from_set(group, ones, alphabet)
    t = t_alpha(f, rep) if rep.t_abs == 1 else None
    predicted = cls == 3 or t == (-1) ** (cls + 1)
    perfect = is_perfect(arr)
    params = _field_params(f) | {"class": cls, "s": rep.s, "t_abs": rep.t_abs, "t_alpha": t}
    return _emit(
        ConstructionReport(
            "dhm",
            params,
            arr,
            {"almost_balanced": is_almost_balanced(arr), "perfect_as_predicted": perfect == predicted},
            {"perfect": perfect},
        )
    )


def dhm_component_pair(q: int, alpha: AlphaSpec, cls: int, alphabet: Alphabet = Alphabet.ZO) -> PairRecord:
    """The (A_i, B_i) pair of DHM class ``cls`` placed on Z_p^m, unverified."""
    f = resolve_field(q, alpha)
    A, B = dhm_sets(f, cls)
    return _pair(f.additive_group, _field_set_indices(f, A), _field_set_indices(f, B), alphabet)


def dhm_yp_selector(q: int, alpha: AlphaSpec = None) -> ConstructionReport:
    """Pick the DHM class i in {1, 2} with t(alpha) = (-1)^(i+1).

    The selected pair is returned in Yamada-Pott order (symmetric set
    first): class 2 as (A_2, B_2), class 1 as (B_1, A_1).
    """
    f, rep = _dhm_field(q, alpha)
    if rep.t_abs != 1:
        raise ParameterError(f"selector needs |t| = 1; q = {q} has |t| = {rep.t_abs}")
    t = t_alpha(f, rep)
    chosen = 1 if t == 1 else 2
    pairs = {}
    for i in (1, 2):
        pr = dhm_component_pair(q, f.alpha, i)
        pairs[i] = PairRecord(pr.b, pr.a) if i == 1 else pr
    other = 3 - chosen
    return _emit(
        ConstructionReport(
            "dhm-yp-selector",
            _field_params(f) | {"t_alpha": t, "class": chosen},
            pairs[chosen],
            {
                "selected_is_yamada_pott": pairs[chosen].is_yamada_pott(),
                "other_is_not": not pairs[other].is_yamada_pott(),
            },
            {"class": chosen, "t_alpha": t},
        )
    )


# Legendre pair families ----------------------------------------------------------------


def _check_regime(ok: bool, message: str) -> None:
    if not ok:
        raise ParameterError(message)


def yamada_pair(q: int, alpha: AlphaSpec = None, alphabet: Alphabet = Alphabet.ZO) -> ConstructionReport:
    """M = {a : alpha^(2a) + 1 ∈ C0}, N = {a : alpha^(2a) - 1 ∈ C0} on Z_{(q-1)/2}."""
    _check_regime(q % 4 == 3 and q >= 7, f"Yamada pair needs q ≡ 3 (mod 4), q >= 7; got {q}")
    f = resolve_field(q, alpha)
    squares = cyclotomic_classes(f, 2)[0]
    u = (q - 1) // 2
    M, N = set(), set()
    for a in range(u):
        x = f.alpha_power(2 * a)
        plus, minus = f.add(x, 1), f.sub(x, 1)
        if plus and plus in squares:
            M.add(a)
        if minus and minus in squares:
            N.add(a)
    pr = _pair(cyclic(u), M, N, alphabet)
    return _emit(
        ConstructionReport(
            "yamada",
            _field_params(f),
            pr,
            {
                "legendre": pr.is_legendre(),
                "sizes": len(M) == len(N) == (q - 3) // 4,
                "a_symmetric": pr.symmetry_types[0] is SymmetryType.SYMMETRIC,
                "b_skew": pr.symmetry_types[1] is SymmetryType.SKEW,
            },
        )
    )


def _log_set(f: FiniteField, elements, modulus: int) -> set[int]:
    return {discrete_log(f, x) % modulus for x in elements if x}


def backup_yp_pair(q: int, alpha: AlphaSpec = None) -> ConstructionReport:
    """A = log((C0 - 1) ∩ C0), B = log((C0 - 1) ∩ C1), both mod (q-1)/2.

    Also lifts the pair to an almost balanced perfect array on
    Z2 x Z_{(q-1)/2}, stored in ``extras["lifted"]``.
    """
    _check_regime(q % 4 == 3 and q >= 7, f"backup pair needs q ≡ 3 (mod 4), q >= 7; got {q}")
    f = resolve_field(q, alpha)
    classes = cyclotomic_classes(f, 2)
    c0, c1 = classes[0], classes[1]
    u = (q - 1) // 2
    c0_minus_1 = _shifted(f, c0, f.minus_one())
    A = _log_set(f, c0_minus_1 & c0, u)
    B = _log_set(f, c0_minus_1 & c1, u)
    pr = _pair(cyclic(u), A, B, Alphabet.ZO)
    yp = pr.is_yamada_pott()
    verification = {"yamada_pott": yp, "b_size": len(B) == (q - 3) // 4}
    extras: dict[str, Output] = {}
    if yp:
        lifted = yp_to_perfect(pr.a, pr.b)
        extras["lifted"] = lifted.array
        verification["lift_perfect"] = lifted.ok
    return _emit(ConstructionReport("backup-yp", _field_params(f), pr, verification, extras=extras))


def szekeres_pair(q: int, alpha: AlphaSpec = None, alphabet: Alphabet = Alphabet.ZO) -> ConstructionReport:
    """(C0 ∪ C1, C0 ∪ C3) of order 4 on Z_p^m, q ≡ 5 (mod 8)."""
    _check_regime(q % 8 == 5, f"Szekeres pair needs q ≡ 5 (mod 8), got {q}")
    return _cyclotomic_family("szekeres", q, alpha, 4, (0, 1), (0, 3), alphabet, SymmetryType.SKEW, SymmetryType.SKEW)


def szekeres_whiteman_pair(q: int, alpha: AlphaSpec = None, alphabet: Alphabet = Alphabet.ZO) -> ConstructionReport:
    """(C0 ∪ C1 ∪ C2 ∪ C3, C0 ∪ C1 ∪ C6 ∪ C7) of order 8, p ≡ 5 (mod 8), m even."""
    pm = prime_power(q)
    _check_regime(
        pm is not None and pm[0] % 8 == 5 and pm[1] % 2 == 0,
        f"Szekeres-Whiteman pair needs q = p^m, p ≡ 5 (mod 8), m even; got {q}",
    )
    return _cyclotomic_family(
        "szekeres-whiteman", q, alpha, 8, (0, 1, 2, 3), (0, 1, 6, 7), alphabet,
        SymmetryType.SKEW, SymmetryType.SKEW,
    )


def paley_pair(q: int, alpha: AlphaSpec = None, alphabet: Alphabet = Alphabet.ZO) -> ConstructionReport:
    _check_regime(q % 2 == 1 and prime_power(q) is not None, f"Paley pair needs an odd prime power, got {q}")
    if q % 4 == 3:
        return _cyclotomic_family("paley", q, alpha, 2, (0,), (0,), alphabet, SymmetryType.SKEW, SymmetryType.SKEW)
    return _cyclotomic_family(
        "paley", q, alpha, 2, (1,), (0,), alphabet, SymmetryType.SYMMETRIC, SymmetryType.SYMMETRIC
    )


def _cyclotomic_family(name, q, alpha, d, a_labels, b_labels, alphabet, type_a, type_b) -> ConstructionReport:
    f = resolve_field(q, alpha)
    A = _field_set_indices(f, _class_union(f, d, a_labels))
    B = _field_set_indices(f, _class_union(f, d, b_labels))
    pr = _pair(f.additive_group, A, B, alphabet)
    return _emit(
        ConstructionReport(
            name,
            _field_params(f) | {"d": d, "a_classes": list(a_labels), "b_classes": list(b_labels)},
            pr,
            {
                "legendre": pr.is_legendre(),
                f"a_{type_a.name.lower()}": pr.symmetry_types[0] is type_a,
                f"b_{type_b.name.lower()}": pr.symmetry_types[1] is type_b,
            },
        )
    )


def cyclotomic_union_pair(
    q: int, alpha: AlphaSpec, d: int, a_labels: Sequence[int], b_labels: Sequence[int],
    alphabet: Alphabet = Alphabet.ZO,
) -> PairRecord:
    """Unverified pair of unions of cyclotomic classes on Z_p^m."""
    f = resolve_field(q, alpha)
    A = _field_set_indices(f, _class_union(f, d, a_labels))
    B = _field_set_indices(f, _class_union(f, d, b_labels))
    return _pair(f.additive_group, A, B, alphabet)


def baumert_pair(q1: int, q2: int, alphabet: Alphabet = Alphabet.ZO) -> ConstructionReport:
    """A = (C0 x C0) ∪ (C1 x C1) ∪ (F_q1 x {0}) on F_q1 x F_q2, with B = A."""
    if q2 != q1 + 2 or q1 % 2 == 0 or prime_power(q1) is None or prime_power(q2) is None:
        raise ParameterError(f"Baumert pair needs odd prime powers q2 = q1 + 2, got ({q1}, {q2})")
    f1, f2 = resolve_field(q1, None), resolve_field(q2, None)
    g1, g2 = f1.additive_group, f2.additive_group
    group = FiniteAbelianGroup(g1.factors + g2.factors)
    s1, s2 = cyclotomic_classes(f1, 2), cyclotomic_classes(f2, 2)

    def idx(x: int, y: int) -> int:
        return group.index(f1.digits(x) + f2.digits(y))

    A = {idx(x, y) for i in (0, 1) for x in s1[i] for y in s2[i]}
    A |= {idx(x, 0) for x in range(q1)}
    pr = _pair(group, A, A, alphabet)
    v = q1 * q2
    k = (q1 * q1 + 2 * q1 - 1) // 2
    lam = (q1 - 1) * (q1 + 3) // 4
    types = pr.symmetry_types
    return _emit(
        ConstructionReport(
            "baumert",
            {"q1": q1, "q2": q2, "modulus1": list(f1.modulus), "modulus2": list(f2.modulus)},
            pr,
            {
                "difference_set": check_difference_set(group, A, v, k, lam).ok,
                "legendre": pr.is_legendre(),
                "neither": types == (SymmetryType.NEITHER, SymmetryType.NEITHER),
            },
            {"ds": (v, k, lam)},
        )
    )


# Yamada-Pott lifting ------------------------------------------------------------------


def yp_ads_parameters(u: int, identity_in_b: bool) -> tuple[int, int, int, int]:
    """ADS (v, k, lambda, t) of the lifted set, with t the number of
    non-identity elements whose difference count is lambda."""
    if identity_in_b:
        k, lam = u + 1, (u + 1) // 2
    else:
        k, lam = u - 1, (u - 3) // 2
    # lambda + 1 sits on the (u +/- 1)/2 translates in the 1-coset named by the
    # group ring identity; every other non-identity element carries lambda
    return (2 * u, k, lam, 2 * u - 1 - (u + 1) // 2)


def yp_to_perfect(a: GArray, b: GArray, complement: str | None = None) -> ConstructionReport:
    """Lift a Yamada-Pott pair on H to S = A + omega B on Z2 x H.

    ``complement`` in {None, "A", "B"} replaces that set by its complement
    in H, which gives a balanced instead of almost balanced perfect array.
    """
    a, b = as_zo(a), as_zo(b)
    if not is_yamada_pott_pair(a, b):
        raise ParameterError("input is not a Yamada-Pott pair")
    if complement not in (None, "A", "B", "none"):
        raise ParameterError(f"complement must be None, 'A' or 'B', got {complement!r}")
    complement = None if complement == "none" else complement
    H = a.group
    u = H.order
    A, B = set(a.one_set), set(b.one_set)
    if complement == "A":
        A = set(range(u)) - A
    elif complement == "B":
        B = set(range(u)) - B
    group = FiniteAbelianGroup((2,) + H.factors)
    ones = {group.index((0,) + H.element(h)) for h in A} | {group.index((1,) + H.element(h)) for h in B}
    arr = GArray.from_set(group, ones)
    verification = {"perfect": is_perfect(arr)}
    props: dict = {}
    if complement is None:
        verification["almost_balanced"] = is_almost_balanced(arr)
        params = yp_ads_parameters(u, 0 in b.one_set)
        verification["ads"] = check_almost_difference_set(group, arr.one_set, *params).ok
        props["ads"] = params
    else:
        verification["balanced"] = is_balanced(arr)
    return _emit(
        ConstructionReport(
            "yp-lift", {"H": H.spec(), "complement": complement}, arr, verification, props
        )
    )


# SLCE / Yamada bridge -------------------------------------------------------------------


@dataclass(frozen=True)
class BridgeSets:
    u: int
    A1: frozenset[int]
    B1: frozenset[int]
    A2: frozenset[int]
    B2: frozenset[int]

    @property
    def a1_equals_b2(self) -> bool:
        return self.A1 == self.B2

    @property
    def b1_is_complement_of_a2(self) -> bool:
        return self.B1 == frozenset(range(self.u)) - self.A2


def slce_yamada_bridge(q: int, alpha: AlphaSpec = None) -> ConstructionReport:
    _check_regime(q % 4 == 3 and q >= 7, f"bridge needs q ≡ 3 (mod 4), q >= 7; got {q}")
    f = resolve_field(q, alpha)
    classes = cyclotomic_classes(f, 2)
    c0, c1 = classes[0], classes[1]
    u = (q - 1) // 2
    one, m1 = 1, f.minus_one()
    sets = BridgeSets(
        u,
        frozenset(_log_set(f, _shifted(f, c0, one) & c0, u)),
        frozenset(_log_set(f, _shifted(f, c0, m1) & c0, u)),
        frozenset(_log_set(f, _shifted(f, c1, m1) & c0, u)),
        frozenset(_log_set(f, _shifted(f, c1, m1) & c1, u)),
    )
    G = cyclic(u)
    return _emit(
        ConstructionReport(
            "slce-yamada-bridge",
            _field_params(f),
            PairRecord(GArray.from_set(G, sets.A1), GArray.from_set(G, sets.B1)),
            {"A1_eq_B2": sets.a1_equals_b2, "B1_eq_complement_A2": sets.b1_is_complement_of_a2},
            {"sets": sets},
        )
    )


# generalised cyclotomic-coset pairs ----------------------------------------------------------

Selection = Mapping[int, Sequence[str]]

EX57_X: dict[int, tuple[str, ...]] = {
    0: ("0", "C0", "C1", "C2"),
    1: ("C0", "C2", "C3", "C4"),
    2: ("C3", "C4"),
}
EX57_Y: dict[int, tuple[str, ...]] = {
    0: ("0", "C0", "C4", "C5"),
    1: ("C0", "C3", "C5"),
    2: ("C0", "C1", "C3"),
}


def _selection_elements(f: FiniteField, d: int, tokens: Sequence[str]) -> set[int]:
    classes = cyclotomic_classes(f, d)
    out: set[int] = set()
    for tok in tokens:
        tok = str(tok).strip()
        if tok == "0":
            out.add(0)
        elif tok.startswith("C") and tok[1:].isdigit() and int(tok[1:]) < d:
            out |= classes[int(tok[1:])]
        else:
            raise ParameterError(f"bad selection token {tok!r}; use '0' or 'C<i>' with i < {d}")
    return out


def cyclotomic_coset_pair(
    cyclic_order: int,
    q: int,
    d: int,
    x_selection: Selection,
    y_selection: Selection,
    alpha: AlphaSpec = None,
) -> ConstructionReport:
    """±1 pair on Z_c x F_q whose +1 entries are unions of {0} and classes
    C_i of order d, chosen separately for each first coordinate."""
    f = resolve_field(q, alpha)
    if (q - 1) % d:
        raise ParameterError(f"d = {d} does not divide q - 1 = {q - 1}")
    group = FiniteAbelianGroup((cyclic_order,) + f.additive_group.factors)

    def build(selection: Selection) -> set[int]:
        ones: set[int] = set()
        for c, tokens in selection.items():
            if not 0 <= int(c) < cyclic_order:
                raise ParameterError(f"first coordinate {c} outside Z_{cyclic_order}")
            for x in _selection_elements(f, d, tokens):
                ones.add(group.index((int(c),) + f.digits(x)))
        return ones

    pr = _pair(group, build(x_selection), build(y_selection), Alphabet.PM1)
    census = joint_census(group, [pr.a.one_set, pr.b.one_set])
    return _emit(
        ConstructionReport(
            "cyclotomic-coset",
            _field_params(f) | {"c": cyclic_order, "d": d,
                                "x": {int(k): list(v) for k, v in x_selection.items()},
                                "y": {int(k): list(v) for k, v in y_selection.items()}},
            pr,
            {"legendre": pr.is_legendre()},
            {"joint_census": [int(c) for c in census]},
        )
    )


def ex57() -> ConstructionReport:
    """The Z3 x Z19 pair from order-6 cyclotomy of F_19 (alpha = 2), with the
    CRT image on Z57 in ``extras``."""
    report = cyclotomic_coset_pair(3, 19, 6, EX57_X, EX57_Y, alpha=2)
    target = cyclic(57)
    a2 = crt_transport(report.pair.a, target)
    b2 = crt_transport(report.pair.b, target)
    report.extras["a2"] = a2
    report.extras["b2"] = b2
    report.verification["transported_legendre"] = is_legendre_pair(a2, b2)
    report.name = "ex57"
    return _emit(report)


FAMILIES = (
    "slce", "dhm", "yamada", "backup-yp", "szekeres", "szekeres-whiteman",
    "paley", "baumert", "ex57", "yp-lift",
)
