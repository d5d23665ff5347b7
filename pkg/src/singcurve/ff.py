"""Finite fields F_{p^k} with a deterministic model.

Elements are polynomials in ``x`` of degree < k with coefficients mod p,
reduced by a fixed modulus: the lexicographically smallest monic
irreducible of degree k, coefficients compared from the constant term up.
Every field is built directly over its prime field, so F_{q^n} with
q = p^k is simply ``field_create(p, k * n)``; subfields are located with
:func:`frobenius_fixed` or :func:`embedding`.

Each element also has an integer *index* ``sum(c_i * p**i)``.  The numeric
kernels work on indices, using the log/antilog tables of
:class:`FieldTables`.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from singcurve import limits
from singcurve.errors import SingCurveError, ValidationError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k``; raise if q is not a prime power."""
    if not isinstance(q, int) or q < 2:
        raise ValidationError(f"{q!r} is not a prime power")
    p = next(f for f in itertools.count(2) if q % f == 0)
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1:
        raise ValidationError(f"{q} is not a prime power")
    return p, k


# -- polynomials over F_p, as tuples of ints, constant term first ------------


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a by the monic polynomial b over F_p."""
    r = [x % p for x in a]
    db = len(b) - 1
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            for j in range(db + 1):
                r[i - db + j] = (r[i - db + j] - c * b[j]) % p
    return _trim(r[:db])


@functools.lru_cache(maxsize=None)
def _prime_field_irreducibles(p: int, d: int) -> tuple[tuple[int, ...], ...]:
    """All monic irreducibles of degree d over F_p, by trial division."""
    found = []
    for low in itertools.product(range(p), repeat=d):
        poly = low + (1,)
        if _is_irreducible_prime_field(poly, p):
            found.append(poly)
    return tuple(found)


def _is_irreducible_prime_field(poly: Sequence[int], p: int) -> bool:
    d = len(poly) - 1
    if d == 1:
        return True
    if poly[0] == 0:
        return False
    for e in range(1, d // 2 + 1):
        for f in _prime_field_irreducibles(p, e):
            if not _pmod(poly, f, p):
                return False
    return True


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    # itertools.product varies the last position fastest, so iterating over
    # (c0, c1, ..., c_{k-1}) is exactly the low-degree-first lexicographic order
    for low in itertools.product(range(p), repeat=k):
        poly = low + (1,)
        if _is_irreducible_prime_field(poly, p):
            return poly
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# -- fields -------------------------------------------------------------------


@dataclass(frozen=True)
class FieldCtx:
    """The field F_{p^k}.  Construct with :func:`field_create`."""

    p: int
    k: int
    modulus: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p**self.k

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.k)

    @property
    def one(self) -> FieldElement:
        return self.from_int(1)

    @property
    def gen(self) -> FieldElement:
        """The class of ``x`` (equal to ``-modulus[0]`` when k == 1)."""
        if self.k == 1:
            return self.from_int(-self.modulus[0])
        return FieldElement(self, (0, 1) + (0,) * (self.k - 2))

    def element(self, coeffs: Sequence[int]) -> FieldElement:
        """Element from coefficients (constant first); reduced by the modulus."""
        r = _pmod(list(coeffs), self.modulus, self.p) if len(coeffs) > self.k else [
            c % self.p for c in coeffs
        ]
        r = list(r) + [0] * (self.k - len(r))
        return FieldElement(self, tuple(r))

    def from_int(self, n: int) -> FieldElement:
        return FieldElement(self, (n % self.p,) + (0,) * (self.k - 1))

    def from_index(self, index: int) -> FieldElement:
        if not 0 <= index < self.order:
            raise SingCurveError(f"index {index} out of range for F_{self.order}")
        coeffs = []
        for _ in range(self.k):
            index, c = divmod(index, self.p)
            coeffs.append(c)
        return FieldElement(self, tuple(coeffs))

    @functools.cached_property
    def tables(self) -> FieldTables:
        return FieldTables.build(self)

    def __repr__(self) -> str:
        return f"FieldCtx(F_{self.order} = F_{self.p}[x]/{_poly_str(self.modulus)})"


def field_create(p: int, k: int = 1, bound: int = limits.ARITHMETIC_BOUND) -> FieldCtx:
    """Return the canonical model of F_{p^k}."""
    if not isinstance(p, int) or not is_prime(p):
        raise ValidationError(f"{p!r} is not prime")
    if not isinstance(k, int) or k < 1:
        raise ValidationError(f"extension degree must be >= 1, got {k!r}")
    limits.check(f"field F_{p}^{k}", p**k, bound)
    return _field_create(p, k)


@functools.lru_cache(maxsize=None)
def _field_create(p: int, k: int) -> FieldCtx:
    return FieldCtx(p, k, _smallest_irreducible(p, k))


def field_of_order(q: int, bound: int = limits.ARITHMETIC_BOUND) -> FieldCtx:
    p, k = prime_power(q)
    return field_create(p, k, bound)


@dataclass(frozen=True)
class FieldElement:
    ctx: FieldCtx
    coeffs: tuple[int, ...]

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, int):
            return self.ctx.from_int(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.ctx != self.ctx:
            raise SingCurveError(f"field mismatch: {self.ctx} vs {other.ctx}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> FieldElement:
        p = self.ctx.p
        return FieldElement(self.ctx, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p, k = self.ctx.p, self.ctx.k
        prod = [0] * (2 * k - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return self.ctx.element(prod)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> FieldElement:
        if e < 0:
            return self.inv() ** (-e)
        result, base = self.ctx.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inv(self) -> FieldElement:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self ** (self.ctx.order - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def index(self) -> int:
        return sum(c * self.ctx.p**i for i, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        return _poly_str(self.coeffs)


def _poly_str(coeffs: Sequence[int], var: str = "x") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms) or "0"


def frobenius_fixed(e: FieldElement, q: int) -> bool:
    """True iff ``e**q == e``, i.e. e lies in the subfield with q elements."""
    p, j = prime_power(q)
    if p != e.ctx.p or e.ctx.k % j:
        raise ValidationError(f"F_{q} is not a subfield of F_{e.ctx.order}")
    return e**q == e


def enumerate_elements(ctx: FieldCtx, bound: int = limits.ELEMENT_ENUM_BOUND) -> list[FieldElement]:
    """All elements of ``ctx``, in index order (zero first)."""
    limits.check(f"elements of F_{ctx.order}", ctx.order, bound)
    return [ctx.from_index(i) for i in range(ctx.order)]


def iter_elements(ctx: FieldCtx) -> Iterator[FieldElement]:
    return (ctx.from_index(i) for i in range(ctx.order))


# -- tables for the kernels ---------------------------------------------------


def _prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True, eq=False)
class FieldTables:
    """Index-level arithmetic for one field.

    ``log[a]`` is the discrete log of a to the base ``primitive`` (``-1`` for
    zero); ``exp[i]`` is ``primitive**i`` for ``0 <= i < q - 1``.  Addition is
    digit-wise mod p on indices.
    """

    p: int
    k: int
    q: int
    primitive: int
    log: np.ndarray
    exp: np.ndarray

    @classmethod
    def build(cls, ctx: FieldCtx) -> FieldTables:
        q = ctx.order
        if q == 2:
            return cls(ctx.p, ctx.k, q, 1, np.array([-1, 0], np.int64), np.array([1], np.int64))
        cofactors = [(q - 1) // r for r in _prime_factors(q - 1)]
        for i in range(2, q):
            g = ctx.from_index(i)
            if all(g**c != ctx.one for c in cofactors):
                break
        exp = np.empty(q - 1, np.int64)
        log = np.full(q, -1, np.int64)
        x = ctx.one
        for j in range(q - 1):
            idx = x.index
            exp[j] = idx
            log[idx] = j
            x = x * g
        return cls(ctx.p, ctx.k, q, i, log, exp)

    def args(self) -> tuple:
        """Positional arguments accepted by every kernel."""
        return self.p, self.k, self.log, self.exp

    def pow_index(self, a: int, e: int) -> int:
        if a == 0:
            return 1 if e == 0 else 0
        return int(self.exp[(int(self.log[a]) * e) % (self.q - 1)])


def embedding(small: FieldCtx, big: FieldCtx) -> np.ndarray:
    """Index map of a field embedding ``small -> big``.

    The generator of ``small`` is sent to the smallest-index root of its
    modulus in ``big``, which makes the map deterministic.
    """
    if small.p != big.p or big.k % small.k:
        raise ValidationError(f"F_{small.order} does not embed in F_{big.order}")
    if small.k == 1:
        return np.arange(small.order, dtype=np.int64)
    from singcurve import kernels

    tb = big.tables
    root = kernels.smallest_root(np.array(small.modulus, np.int64), *tb.args())
    powers = [tb.pow_index(root, i) for i in range(small.k)]
    out = np.empty(small.order, np.int64)
    for idx in range(small.order):
        el = small.from_index(idx)
        acc = 0
        for c, rp in zip(el.coeffs, powers):
            for _ in range(c):
                acc = kernels.add_index(acc, rp, big.p, big.k)
        out[idx] = acc
    return out


def embed_element(e: FieldElement, big: FieldCtx) -> FieldElement:
    return big.from_index(int(embedding(e.ctx, big)[e.index]))


# -- irreducible polynomials over F_q -----------------------------------------


def enumerate_monic_irreducibles(
    p: int, k_base: int, d: int, bound: int = limits.IRREDUCIBLE_BOUND
) -> list[tuple[FieldElement, ...]]:
    """Every monic irreducible of degree d over F_q, q = p**k_base.

    Polynomials are coefficient tuples, constant term first, leading 1
    included.  Reducible polynomials are found exhaustively: every product
    of two monic factors of degrees i and d - i, 1 <= i <= d/2, is marked.
    """
    ctx = field_create(p, k_base)
    if d < 1:
        raise ValidationError(f"degree must be >= 1, got {d}")
    q = ctx.order
    limits.check(f"monic polynomials of degree {d} over F_{q}", q**d, bound)
    from singcurve import kernels

    one = ctx.one
    if d == 1:
        return [(ctx.from_index(a), one) for a in range(q)]
    reducible = kernels.reducible_mask(d, *ctx.tables.args())
    out = []
    for code in np.flatnonzero(~reducible):
        coeffs = []
        code = int(code)
        for _ in range(d):
            code, c = divmod(code, q)
            coeffs.append(ctx.from_index(c))
        out.append(tuple(coeffs) + (one,))
    return out
