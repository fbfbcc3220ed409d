"""Finite abelian groups Z_{s1} x ... x Z_{sr}, their integer group rings,
correlation functions and CRT transport between isomorphic groups.

Elements are addressed by a mixed-radix flat index in ``[0, n)`` with the
last factor varying fastest, so ``Z3xZ19`` stores ``(g1, g2)`` at
``19*g1 + g2``.  Everything here is immutable once built.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    CoefficientOverflowError,
    GroupMismatchError,
    InvalidGroupError,
    UnsupportedIsomorphismError,
)

_INT64_MAX = np.iinfo(np.int64).max


@dataclass(frozen=True)
class FiniteAbelianGroup:
    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        factors = tuple(int(s) for s in self.factors)
        if not factors:
            raise InvalidGroupError("a group needs at least one factor")
        for s in factors:
            if s < 2:
                raise InvalidGroupError(f"factor {s} < 2")
        object.__setattr__(self, "factors", factors)

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @cached_property
    def _strides(self) -> tuple[int, ...]:
        strides = []
        acc = 1
        for s in reversed(self.factors):
            strides.append(acc)
            acc *= s
        return tuple(reversed(strides))

    @property
    def exponent(self) -> int:
        return math.lcm(*self.factors)

    def spec(self) -> str:
        """Canonical text form, e.g. ``Z2xZ5^2``."""
        parts: list[str] = []
        i = 0
        while i < len(self.factors):
            j = i
            while j < len(self.factors) and self.factors[j] == self.factors[i]:
                j += 1
            run = j - i
            parts.append(f"Z{self.factors[i]}" + (f"^{run}" if run > 1 else ""))
            i = j
        return "x".join(parts)

    def __str__(self) -> str:
        return self.spec()

    # element encoding -------------------------------------------------

    def index(self, element: Sequence[int]) -> int:
        if len(element) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(element)}")
        return sum((g % s) * st for g, s, st in zip(element, self.factors, self._strides))

    def element(self, index: int) -> tuple[int, ...]:
        if not 0 <= index < self.order:
            raise ValueError(f"index {index} outside [0, {self.order})")
        out = []
        for s, st in zip(self.factors, self._strides):
            out.append((index // st) % s)
        return tuple(out)

    def elements(self) -> Iterator[tuple[int, ...]]:
        for i in range(self.order):
            yield self.element(i)

    @cached_property
    def coords(self) -> np.ndarray:
        """``(n, r)`` array of element coordinates in flat-index order."""
        return np.array(list(self.elements()), dtype=np.int64).reshape(self.order, self.rank)

    def index_array(self, coords: np.ndarray) -> np.ndarray:
        """Vectorised :meth:`index` for an ``(..., r)`` coordinate array."""
        mods = np.asarray(self.factors, dtype=np.int64)
        strides = np.asarray(self._strides, dtype=np.int64)
        return ((coords % mods) * strides).sum(axis=-1)

    def add(self, i: int, j: int) -> int:
        a, b = self.element(i), self.element(j)
        return self.index([x + y for x, y in zip(a, b)])

    def neg(self, i: int) -> int:
        return self.index([-x for x in self.element(i)])

    @cached_property
    def neg_table(self) -> np.ndarray:
        return self.index_array(-self.coords)

    def scale_table(self, multipliers: Sequence[int]) -> np.ndarray:
        """Flat index of ``(m1*g1, ..., mr*gr)`` for every ``g``."""
        mult = np.asarray(multipliers, dtype=np.int64)
        return self.index_array(self.coords * mult)

    def shift_table(self, t: int) -> np.ndarray:
        """Flat index of ``g + t`` for every ``g``."""
        return self.index_array(self.coords + self.coords[t])


def group_new(factors: Iterable[int]) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(tuple(factors))


def cyclic(n: int) -> FiniteAbelianGroup:
    return FiniteAbelianGroup((n,))


@dataclass(frozen=True)
class GroupRingElement:
    """An element sum_g c_g g of Z[G] with exact integer coefficients."""

    group: FiniteAbelianGroup
    coeffs: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs) or (0,) * self.group.order
        if len(coeffs) != self.group.order:
            raise ValueError(
                f"{len(coeffs)} coefficients for a group of order {self.group.order}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_set(cls, group: FiniteAbelianGroup, support: Iterable[int]) -> GroupRingElement:
        coeffs = [0] * group.order
        for g in support:
            coeffs[g] += 1
        return cls(group, tuple(coeffs))

    @classmethod
    def identity(cls, group: FiniteAbelianGroup) -> GroupRingElement:
        coeffs = [0] * group.order
        coeffs[0] = 1
        return cls(group, tuple(coeffs))

    def norm(self) -> int:
        """|W|, the sum of absolute coefficients."""
        return sum(abs(c) for c in self.coeffs)

    def support(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.coeffs) if c)

    def __add__(self, other: GroupRingElement) -> GroupRingElement:
        return gr_add(self, other)

    def __sub__(self, other: GroupRingElement) -> GroupRingElement:
        _same_group(self.group, other.group)
        return GroupRingElement(self.group, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: GroupRingElement) -> GroupRingElement:
        return gr_mul(self, other)

    def power(self, t: int) -> GroupRingElement:
        return gr_power_t(self, t)


def _same_group(g: FiniteAbelianGroup, h: FiniteAbelianGroup) -> None:
    if g != h:
        raise GroupMismatchError(f"{g} vs {h}")


def gr_add(u: GroupRingElement, v: GroupRingElement) -> GroupRingElement:
    _same_group(u.group, v.group)
    return GroupRingElement(u.group, tuple(x + y for x, y in zip(u.coeffs, v.coeffs)))


def gr_mul(u: GroupRingElement, v: GroupRingElement) -> GroupRingElement:
    """Convolution over the group.  Raises :class:`CoefficientOverflowError`
    when the product could leave the signed 64-bit range."""
    _same_group(u.group, v.group)
    group = u.group
    n = group.order
    bound = max(map(abs, u.coeffs), default=0) * max(map(abs, v.coeffs), default=0) * n
    if bound > _INT64_MAX:
        raise CoefficientOverflowError(
            f"product coefficients may reach {bound}, beyond int64"
        )
    cu = np.asarray(u.coeffs, dtype=np.int64)
    cv = np.asarray(v.coeffs, dtype=np.int64)
    out = np.zeros(n, dtype=np.int64)
    coords = group.coords
    for h in np.flatnonzero(cv):
        # every g*h lands on a distinct index, so fancy-index accumulation is safe
        out[group.index_array(coords + coords[h])] += cu * cv[h]
    return GroupRingElement(group, tuple(int(c) for c in out))


def gr_power_t(w: GroupRingElement, t: int) -> GroupRingElement:
    """W^(t) = sum_g c_g (t*g); colliding images accumulate."""
    group = w.group
    target = group.index_array(group.coords * int(t))
    coeffs = [0] * group.order
    for i, c in enumerate(w.coeffs):
        if c:
            coeffs[int(target[i])] += c
    return GroupRingElement(group, tuple(coeffs))


def correlation_values(
    group: FiniteAbelianGroup, a: Sequence[int] | np.ndarray, b: Sequence[int] | np.ndarray
) -> np.ndarray:
    """``C[t] = sum_g a[g+t] * b[g]`` for every flat index ``t``."""
    x = np.asarray(a, dtype=np.int64).reshape(group.factors)
    y = np.asarray(b, dtype=np.int64).reshape(group.factors)
    axes = tuple(range(group.rank))
    out = np.empty(group.order, dtype=np.int64)
    for t, coord in enumerate(group.coords):
        shifted = np.roll(x, tuple(int(-c) for c in coord), axis=axes)
        out[t] = int((shifted * y).sum())
    return out


def cross_correlation(a, b) -> np.ndarray:
    """C_{a,b}(t) for two :class:`~legendre_pairs.arrays.GArray` values."""
    if a.group != b.group:
        raise GroupMismatchError(f"{a.group} vs {b.group}")
    if a.alphabet != b.alphabet:
        raise GroupMismatchError(f"alphabet {a.alphabet} vs {b.alphabet}")
    return correlation_values(a.group, a.values, b.values)


# CRT transport ----------------------------------------------------------


def _prime_power_parts(n: int) -> list[int]:
    parts = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            pp = 1
            while n % d == 0:
                pp *= d
                n //= d
            parts.append(pp)
        d += 1
    if n > 1:
        parts.append(n)
    return parts


def _primary_signature(group: FiniteAbelianGroup) -> list[list[int]]:
    # per factor, the prime-power parts it splits into by CRT
    return [_prime_power_parts(s) for s in group.factors]


def crt_map(source: FiniteAbelianGroup, target: FiniteAbelianGroup) -> np.ndarray:
    """Index permutation ``phi`` with ``phi[i]`` the target index of source element ``i``.

    Both groups are split into cyclic prime-power components through
    coprime CRT splittings of each factor; the map exists when the two
    groups produce the same components up to reordering, matched in order
    of first appearance.  Anything else (``Z4`` vs ``Z2xZ2``) is refused.
    """
    src_parts = _primary_signature(source)
    tgt_parts = _primary_signature(target)
    flat_src = [(fi, pp) for fi, parts in enumerate(src_parts) for pp in parts]
    flat_tgt = [(fi, pp) for fi, parts in enumerate(tgt_parts) for pp in parts]
    if sorted(pp for _, pp in flat_src) != sorted(pp for _, pp in flat_tgt):
        raise UnsupportedIsomorphismError(
            f"{source} and {target} are not related by coprime CRT splittings"
        )
    # pair equal prime powers in order of appearance
    used = [False] * len(flat_tgt)
    pairing: list[tuple[int, int, int]] = []  # (src factor, tgt factor, modulus)
    for fi, pp in flat_src:
        for j, (tj, tpp) in enumerate(flat_tgt):
            if not used[j] and tpp == pp:
                used[j] = True
                pairing.append((fi, tj, pp))
                break
    src_coords = source.coords
    tgt_residues: list[list[tuple[int, np.ndarray]]] = [[] for _ in target.factors]
    for fi, tj, pp in pairing:
        tgt_residues[tj].append((pp, src_coords[:, fi] % pp))
    tgt_coords = np.empty((source.order, target.rank), dtype=np.int64)
    for tj, s in enumerate(target.factors):
        residues = tgt_residues[tj]
        val = np.zeros(source.order, dtype=np.int64)
        for pp, r in residues:
            other = s // pp
            # CRT basis element: 1 mod pp, 0 mod other
            e = other * pow(other, -1, pp) if pp > 1 else 0
            val = (val + r * e) % s
        tgt_coords[:, tj] = val
    return target.index_array(tgt_coords)


def crt_transport(a, target: FiniteAbelianGroup):
    """Move an array onto an isomorphic group: ``a'[phi(g)] = a[g]``."""
    from .arrays import GArray

    if a.group == target:
        return a
    phi = crt_map(a.group, target)
    values = [0] * target.order
    for i, v in enumerate(a.values):
        values[int(phi[i])] = v
    return GArray(target, a.alphabet, tuple(values))


def parse_group_spec(text: str) -> FiniteAbelianGroup:
    """Parse ``Z57``, ``Z3xZ19`` or ``Z2xZ5^2`` (meaning Z2 x Z5 x Z5)."""
    text = text.strip()
    if not text:
        raise InvalidGroupError("empty group spec")
    factors: list[int] = []
    for part in text.split("x"):
        part = part.strip()
        if not part.startswith("Z"):
            raise InvalidGroupError(f"bad factor {part!r} in {text!r}")
        body = part[1:]
        base, sep, exp = body.partition("^")
        if not base.isdigit() or (sep and not exp.isdigit()):
            raise InvalidGroupError(f"bad factor {part!r} in {text!r}")
        count = int(exp) if sep else 1
        if count < 1:
            raise InvalidGroupError(f"bad exponent in {part!r}")
        factors.extend([int(base)] * count)
    return FiniteAbelianGroup(tuple(factors))
