"""Dense integer polynomials as tuples, constant term first."""

from __future__ import annotations

from typing import Sequence

Poly = tuple[int, ...]


def trim(c: Sequence[int]) -> Poly:
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c)


def mul(a: Sequence[int], b: Sequence[int]) -> Poly:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def power(a: Sequence[int], e: int) -> Poly:
    out: Poly = (1,)
    for _ in range(e):
        out = mul(out, a)
    return out


def product(polys) -> Poly:
    out: Poly = (1,)
    for f in polys:
        out = mul(out, f)
    return out


def divmod_monic_low(a: Sequence[int], b: Sequence[int]) -> tuple[Poly, Poly]:
    """Quotient and remainder of a by b, where b has leading coefficient +-1."""
    b = trim(b)
    lead = b[-1]
    if lead not in (1, -1):
        raise ValueError("divisor must have leading coefficient +-1")
    r = list(trim(a))
    db = len(b) - 1
    if len(r) - 1 < db:
        return (0,), trim(r)
    quot = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] * lead
        quot[i - db] = c
        if c:
            for j in range(db + 1):
                r[i - db + j] -= c * b[j]
    return trim(quot), trim(r[:db] or [0])


def exact_div(a: Sequence[int], b: Sequence[int]) -> Poly:
    q, r = divmod_monic_low(a, b)
    if any(r):
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return q


def one_minus_t_pow(d: int) -> Poly:
    """1 - T^d."""
    return (1,) + (0,) * (d - 1) + (-1,)


def degree(a: Sequence[int]) -> int:
    a = trim(a)
    return len(a) - 1 if any(a) else -1


def to_str(a: Sequence[int], var: str = "T") -> str:
    terms = []
    for i, c in enumerate(a):
        if not c:
            continue
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        elif c == -1:
            terms.append(f"-{mono}")
        else:
            terms.append(f"{c}*{mono}")
    return " + ".join(terms).replace("+ -", "- ") or "0"
