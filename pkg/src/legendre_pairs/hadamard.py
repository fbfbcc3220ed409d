"""Group-developed matrices and the two bordered Hadamard layouts built
from a Legendre pair."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .arrays import GArray, as_pm1, is_legendre_pair
from .errors import HadamardVerificationError, ParameterError, ParseError
from .groups import FiniteAbelianGroup

VARIANTS = ("sym", "skew")


@dataclass(frozen=True, eq=False)
class DevelopedMatrix:
    """``M[g][h] = a_{h - g}``: row g is the translate of the first row by g,
    so row 0 is the array itself."""

    group: FiniteAbelianGroup
    first_row: GArray

    @cached_property
    def matrix(self) -> np.ndarray:
        g = self.group
        # diff[g, h] = index of h - g
        diff = g.index_array((g.coords[None, :, :] - g.coords[:, None, :]))
        m = np.asarray(self.first_row.values, dtype=np.int64)[diff]
        m.setflags(write=False)
        return m


def develop(a: GArray) -> DevelopedMatrix:
    return DevelopedMatrix(a.group, as_pm1(a))


@dataclass(frozen=True, eq=False)
class HadamardMatrix:
    order: int
    entries: np.ndarray
    source: str
    variant: str

    def to_text(self) -> str:
        return "".join("".join("+" if x > 0 else "-" for x in row) + "\n" for row in self.entries)


def is_hadamard(M: np.ndarray) -> bool:
    """Exact H Hᵀ = N I over int64."""
    M = np.asarray(M, dtype=np.int64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        return False
    if not np.all(np.abs(M) == 1):
        return False
    n = M.shape[0]
    return bool(np.array_equal(M @ M.T, n * np.eye(n, dtype=np.int64)))


def is_symmetric_matrix(M: np.ndarray) -> bool:
    M = np.asarray(M)
    return M.ndim == 2 and M.shape[0] == M.shape[1] and bool(np.array_equal(M, M.T))


def is_skew_type(M: np.ndarray) -> bool:
    """Diagonal all +1 and the off-diagonal part skew-symmetric."""
    M = np.asarray(M, dtype=np.int64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        return False
    if not np.all(np.diag(M) == 1):
        return False
    off = M - np.diag(np.diag(M))
    return bool(np.array_equal(off, -off.T))


def _normalized(a: GArray, b: GArray) -> tuple[GArray, GArray]:
    a, b = as_pm1(a), as_pm1(b)
    if not is_legendre_pair(a, b):
        raise ParameterError("input is not a Legendre pair")
    if a.row_sum() == -1:
        a, b = a.negated(), b.negated()
    return a, b


def _bordered(a: GArray, b: GArray, variant: str, source: str) -> HadamardMatrix:
    if variant not in VARIANTS:
        raise ParameterError(f"variant must be one of {VARIANTS}, got {variant!r}")
    a, b = _normalized(a, b)
    n = a.n
    A, B = develop(a).matrix, develop(b).matrix
    ones = np.ones(n, dtype=np.int64)
    H = np.empty((2 * n + 2, 2 * n + 2), dtype=np.int64)
    if variant == "sym":
        H[0, :2], H[1, :2] = (-1, -1), (-1, 1)
        H[0, 2:] = 1
        H[1, 2:] = np.concatenate([ones, -ones])
        H[2 : n + 2, 0], H[2 : n + 2, 1] = 1, 1
        H[n + 2 :, 0], H[n + 2 :, 1] = 1, -1
        H[2 : n + 2, 2:] = np.hstack([A, B])
        H[n + 2 :, 2:] = np.hstack([B.T, -A.T])
    else:
        H[0, :2], H[1, :2] = (1, 1), (-1, 1)
        H[0, 2:] = 1
        H[1, 2:] = np.concatenate([ones, -ones])
        H[2 : n + 2, 0], H[2 : n + 2, 1] = -1, -1
        H[n + 2 :, 0], H[n + 2 :, 1] = -1, 1
        H[2 : n + 2, 2:] = np.hstack([A, B])
        H[n + 2 :, 2:] = np.hstack([-B.T, A.T])
    if not is_hadamard(H):
        raise HadamardVerificationError(f"{variant} matrix of order {2 * n + 2} failed H Hᵀ = N I")
    H.setflags(write=False)
    return HadamardMatrix(2 * n + 2, H, source, variant)


def build_h_sym(a: GArray, b: GArray, source: str = "") -> HadamardMatrix:
    return _bordered(a, b, "sym", source)


def build_h_skew(a: GArray, b: GArray, source: str = "") -> HadamardMatrix:
    return _bordered(a, b, "skew", source)


def build_hadamard(a: GArray, b: GArray, variant: str, source: str = "") -> HadamardMatrix:
    return _bordered(a, b, variant, source)


def parse_matrix_text(text: str) -> np.ndarray:
    rows = [line.strip() for line in text.splitlines() if line.strip()]
    if not rows:
        raise ParseError("empty matrix")
    n = len(rows)
    out = np.empty((n, n), dtype=np.int64)
    for i, row in enumerate(rows):
        if len(row) != n or set(row) - {"+", "-"}:
            raise ParseError(f"matrix row {i} is not {n} characters over '+'/'-'")
        out[i] = [1 if c == "+" else -1 for c in row]
    return out

