"""GF(p^m) with table-based discrete logarithms, cyclotomic classes and
numbers, proper representations q = s^2 + 4t^2 and the signed invariant
t(alpha).

Field elements are ints ``c0 + c1*p + ... + c_{m-1}*p^(m-1)`` for the
residue polynomial ``c0 + c1*x + ...``.  On the additive group Z_p^m the
same element sits at coordinate tuple ``(c0, ..., c_{m-1})``, low degree
first.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import FieldError, NonPrimitiveError, ParameterError
from .groups import FiniteAbelianGroup

DEFAULT_MAX_ORDER = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, m)`` with ``q == p**m``, or None."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            while q % p == 0:
                q //= p
                m += 1
            return (p, m) if q == 1 else None
        if p * p > q:
            return (q, 1)
    return None


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# polynomials over Z_p as coefficient lists, low degree first -------------


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a by monic b."""
    a = list(a)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _poly_trim([x % p for x in a[:db]])


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    m = len(modulus) - 1
    for deg in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if not _poly_mod(modulus, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Monic irreducible of degree m whose low coefficients (c0, c1, ...)
    are lexicographically smallest.  Returned low degree first, leading 1 included."""
    for low in itertools.product(range(p), repeat=m):
        poly = list(low) + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise FieldError(f"no irreducible polynomial of degree {m} over Z_{p}")  # pragma: no cover


@dataclass(frozen=True, eq=False)
class FiniteField:
    p: int
    m: int
    modulus: tuple[int, ...]
    alpha: int
    exp_table: tuple[int, ...]
    log_table: tuple[int, ...]  # log_table[0] == -1 marks zero

    @property
    def q(self) -> int:
        return self.p**self.m

    def __repr__(self) -> str:
        return f"FiniteField(q={self.q}, modulus={list(self.modulus)}, alpha={self.alpha})"

    # encoding ----------------------------------------------------------

    def digits(self, x: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            out.append(x % self.p)
            x //= self.p
        return tuple(out)

    def from_digits(self, digits: Sequence[int]) -> int:
        return sum((c % self.p) * self.p**i for i, c in enumerate(digits))

    @cached_property
    def additive_group(self) -> FiniteAbelianGroup:
        return FiniteAbelianGroup((self.p,) * self.m)

    def group_index(self, x: int) -> int:
        """Flat index of x in Z_p^m (coordinate tuple low degree first)."""
        return self.additive_group.index(self.digits(x))

    # arithmetic ----------------------------------------------------------

    def add(self, x: int, y: int) -> int:
        if self.m == 1:
            return (x + y) % self.p
        return self.from_digits([a + b for a, b in zip(self.digits(x), self.digits(y))])

    def neg(self, x: int) -> int:
        return self.from_digits([-a for a in self.digits(x)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self.exp_table[(self.log_table[x] + self.log_table[y]) % (self.q - 1)]

    def power(self, x: int, k: int) -> int:
        if x == 0:
            if k <= 0:
                raise FieldError("0 has no non-positive powers")
            return 0
        return self.exp_table[(self.log_table[x] * k) % (self.q - 1)]

    def alpha_power(self, k: int) -> int:
        return self.exp_table[k % (self.q - 1)]

    def one(self) -> int:
        return 1

    def minus_one(self) -> int:
        return self.neg(1)

    def nonzero(self) -> range:
        return range(1, self.q)

    def primitive_elements(self) -> list[int]:
        n = self.q - 1
        return sorted(self.exp_table[k] for k in range(n) if math.gcd(k, n) == 1)


def discrete_log(field: FiniteField, x: int) -> int:
    if x == 0:
        raise FieldError("discrete log of 0")
    if not 0 < x < field.q:
        raise FieldError(f"{x} is not a field element of F_{field.q}")
    return field.log_table[x]


def _mul_poly(x: int, y: int, p: int, m: int, modulus: Sequence[int]) -> int:
    dx = [(x // p**i) % p for i in range(m)]
    dy = [(y // p**i) % p for i in range(m)]
    prod = [0] * (2 * m - 1)
    for i, a in enumerate(dx):
        if a:
            for j, b in enumerate(dy):
                prod[i + j] += a * b
    rem = _poly_mod(prod, modulus, p)
    return sum(c * p**i for i, c in enumerate(rem))


def _powers(g: int, p: int, m: int, modulus: Sequence[int]) -> list[int]:
    seq = [1]
    x = g
    while x != 1:
        seq.append(x)
        x = _mul_poly(x, g, p, m, modulus)
        if len(seq) > p**m:  # pragma: no cover
            raise FieldError("power cycle did not close; modulus is not irreducible")
    return seq


def _build(p: int, m: int, alpha: int | None, max_order: int) -> FiniteField:
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if m < 1:
        raise FieldError(f"extension degree {m} < 1")
    q = p**m
    if q > max_order:
        raise FieldError(f"q = {q} exceeds the table cap {max_order}")
    modulus = smallest_irreducible(p, m)
    if q == 2:
        exp = [1]
        chosen = 1
        if alpha not in (None, 1):
            raise FieldError(f"{alpha} is not a nonzero element of F_2")
    elif alpha is None:
        for g in range(2, q):
            exp = _powers(g, p, m, modulus)
            if len(exp) == q - 1:
                chosen = g
                break
        else:  # pragma: no cover
            raise FieldError(f"no primitive element found in F_{q}")
    else:
        if not 0 < alpha < q:
            raise FieldError(f"{alpha} is not a nonzero element of F_{q}")
        exp = _powers(alpha, p, m, modulus)
        if len(exp) != q - 1:
            raise NonPrimitiveError(alpha, len(exp))
        chosen = alpha
    log = [-1] * q
    for k, x in enumerate(exp):
        log[x] = k
    return FiniteField(p, m, modulus, chosen, tuple(exp), tuple(log))


def field_new(p: int, m: int = 1, *, max_order: int = DEFAULT_MAX_ORDER) -> FiniteField:
    """GF(p^m) with the lexicographically smallest irreducible modulus and
    the smallest primitive element."""
    return _build(p, m, None, max_order)


def field_new_with_alpha(
    p: int, m: int, alpha: int | Sequence[int], *, max_order: int = DEFAULT_MAX_ORDER
) -> FiniteField:
    """As :func:`field_new` but with a prescribed generator, given either as
    an int encoding or as a coefficient tuple (low degree first)."""
    if not isinstance(alpha, int):
        alpha = sum(int(c) * p**i for i, c in enumerate(alpha))
    return _build(p, m, alpha, max_order)


def field_for_order(q: int, alpha: int | None = None, **kw) -> FiniteField:
    pm = prime_power(q)
    if pm is None:
        raise FieldError(f"{q} is not a prime power")
    p, m = pm
    if alpha is None:
        return field_new(p, m, **kw)
    return field_new_with_alpha(p, m, alpha, **kw)


# cyclotomy ---------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CyclotomicClasses:
    field: FiniteField
    d: int

    def __post_init__(self) -> None:
        if self.d < 1 or (self.field.q - 1) % self.d:
            raise FieldError(f"d = {self.d} does not divide q - 1 = {self.field.q - 1}")

    def class_of(self, x: int) -> int:
        return discrete_log(self.field, x) % self.d

    @cached_property
    def _classes(self) -> tuple[frozenset[int], ...]:
        f = self.field
        buckets: list[set[int]] = [set() for _ in range(self.d)]
        for k, x in enumerate(f.exp_table):
            buckets[k % self.d].add(x)
        return tuple(frozenset(b) for b in buckets)

    def __getitem__(self, i: int) -> frozenset[int]:
        return cyclotomic_class(self, i)


def cyclotomic_classes(field: FiniteField, d: int) -> CyclotomicClasses:
    return CyclotomicClasses(field, d)


def cyclotomic_class(classes: CyclotomicClasses, i: int) -> frozenset[int]:
    if not 0 <= i < classes.d:
        raise FieldError(f"class index {i} outside [0, {classes.d})")
    return classes._classes[i]


def cyclotomic_number(classes: CyclotomicClasses, i: int, j: int) -> int:
    """(i, j)^d = |(C_i + 1) ∩ C_j|, by enumeration."""
    ci = cyclotomic_class(classes, i)
    cj = cyclotomic_class(classes, j)
    f = classes.field
    return sum(1 for x in ci if f.add(x, 1) in cj)


# proper representations and t(alpha) -------------------------------------


@dataclass(frozen=True)
class ProperRepresentation:
    q: int
    s: int
    t_abs: int


def proper_representation(q: int) -> ProperRepresentation:
    """The unique q = s^2 + 4t^2 with s ≡ 1 (mod 4) and gcd(s, q) = 1."""
    pm = prime_power(q)
    if pm is None or pm[0] % 4 != 1:
        raise ParameterError(f"q = {q} is not a power of a prime ≡ 1 (mod 4)")
    found = []
    r = math.isqrt(q)
    for s in range(-r, r + 1):
        if s % 4 != 1 or math.gcd(s, q) != 1:
            continue
        rest = q - s * s
        if rest % 4:
            continue
        t = math.isqrt(rest // 4)
        if t * t * 4 == rest:
            found.append(ProperRepresentation(q, s, t))
    if not found:
        raise ParameterError(f"q = {q} has no proper representation s^2 + 4t^2")
    if len(found) > 1:
        raise ParameterError(f"q = {q} has several proper representations: {found}")
    return found[0]


def t_alpha(field: FiniteField, rep: ProperRepresentation | None = None) -> int:
    """Signed t(alpha) = (16*(0,3)^4 - q - 1 - 2s) / 8 for q ≡ 5 (mod 8)."""
    q = field.q
    if q % 8 != 5:
        raise ParameterError(f"t(alpha) needs q ≡ 5 (mod 8), got q = {q}")
    if rep is None:
        rep = proper_representation(q)
    if rep.q != q:
        raise ParameterError(f"representation is for q = {rep.q}, field has q = {q}")
    num = 16 * cyclotomic_number(cyclotomic_classes(field, 4), 0, 3) - q - 1 - 2 * rep.s
    if num % 8:
        raise FieldError(f"t(alpha) numerator {num} not divisible by 8")
    t = num // 8
    if t * t != rep.t_abs**2:
        raise FieldError(f"t(alpha) = {t} disagrees with |t| = {rep.t_abs}")
    return t
