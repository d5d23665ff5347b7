"""Brute-force kernels over field indices.

Every kernel takes the field as ``(p, k, log, exp)`` (see
:class:`singcurve.ff.FieldTables`) and works on integer indices.  Each one
has an explicit-loop implementation compiled by numba and a vectorised
numpy implementation; :mod:`singcurve.accel` picks which one runs.  The two
are tested against each other.
"""

import numpy as np

from singcurve import accel
from singcurve.accel import njit

# -- scalar field operations (numba-compiled when available) -----------------


@njit
def add_index(a, b, p, k):
    if p == 2:
        return a ^ b
    r = 0
    m = 1
    for _ in range(k):
        r += ((a % p + b % p) % p) * m
        a //= p
        b //= p
        m *= p
    return r


@njit
def neg_index(a, p, k):
    if p == 2:
        return a
    r = 0
    m = 1
    for _ in range(k):
        r += ((p - a % p) % p) * m
        a //= p
        m *= p
    return r


@njit
def mul_index(a, b, log, exp):
    if a == 0 or b == 0:
        return 0
    return exp[(log[a] + log[b]) % exp.shape[0]]


@njit
def pow_index(a, e, log, exp):
    """a**e for e >= 0, with 0**0 == 1."""
    if e == 0:
        return 1
    if a == 0:
        return 0
    n = exp.shape[0]
    return exp[(log[a] * (e % n)) % n]


@njit
def inv_index(a, log, exp):
    n = exp.shape[0]
    return exp[(n - log[a]) % n]


# -- vectorised counterparts ---------------------------------------------------


def v_add(a, b, p, k):
    if p == 2:
        return a ^ b
    r = np.zeros(np.broadcast(a, b).shape, np.int64)
    m = 1
    for _ in range(k):
        r += ((a // m % p + b // m % p) % p) * m
        m *= p
    return r


def v_neg(a, p, k):
    if p == 2:
        return a
    r = np.zeros(np.shape(a), np.int64)
    m = 1
    for _ in range(k):
        r += ((p - a // m % p) % p) * m
        m *= p
    return r


def v_mul(a, b, log, exp):
    a = np.asarray(a, np.int64)
    b = np.asarray(b, np.int64)
    r = exp[(log[a] + log[b]) % exp.shape[0]]
    return np.where((a == 0) | (b == 0), 0, r)


def v_pow(a, e, log, exp):
    a = np.asarray(a, np.int64)
    if e == 0:
        return np.ones(a.shape, np.int64)
    n = exp.shape[0]
    r = exp[(log[a] * (e % n)) % n]
    return np.where(a == 0, 0, r)


def _numba_selected() -> bool:
    return accel.get_backend() == "numba"


# -- roots of prime-field polynomials -----------------------------------------


@njit
def _smallest_root_numba(poly, p, k, log, exp):
    q = log.shape[0]
    for x in range(q):
        acc = 0
        for i in range(poly.shape[0] - 1, -1, -1):
            acc = add_index(mul_index(acc, x, log, exp), poly[i] % p, p, k)
        if acc == 0:
            return x
    return -1


def _smallest_root_numpy(poly, p, k, log, exp):
    xs = np.arange(log.shape[0], dtype=np.int64)
    acc = np.zeros_like(xs)
    for c in poly[::-1]:
        acc = v_add(v_mul(acc, xs, log, exp), int(c) % p, p, k)
    hits = np.flatnonzero(acc == 0)
    return int(hits[0]) if hits.size else -1


def smallest_root(poly, p, k, log, exp) -> int:
    """Smallest index root in F_{p^k} of a polynomial with F_p coefficients."""
    fn = _smallest_root_numba if _numba_selected() else _smallest_root_numpy
    root = int(fn(np.asarray(poly, np.int64), p, k, log, exp))
    if root < 0:
        raise ValueError("polynomial has no root in this field")
    return root


# -- reducible monic polynomials ------------------------------------------------


@njit
def _reducible_numba(d, p, k, log, exp):
    q = log.shape[0]
    mask = np.zeros(q**d, np.bool_)
    f = np.zeros(d + 1, np.int64)
    g = np.zeros(d + 1, np.int64)
    h = np.zeros(d + 1, np.int64)
    for i in range(1, d // 2 + 1):
        j = d - i
        for fc in range(q**i):
            t = fc
            for a in range(i):
                f[a] = t % q
                t //= q
            f[i] = 1
            for gc in range(q**j):
                t = gc
                for b in range(j):
                    g[b] = t % q
                    t //= q
                g[j] = 1
                for c in range(d + 1):
                    h[c] = 0
                for a in range(i + 1):
                    if f[a] != 0:
                        for b in range(j + 1):
                            h[a + b] = add_index(h[a + b], mul_index(f[a], g[b], log, exp), p, k)
                code = 0
                for c in range(d - 1, -1, -1):
                    code = code * q + h[c]
                mask[code] = True
    return mask


def _digits(codes, q, n):
    """Base-q digits of ``codes`` (least significant first), shape (len, n)."""
    out = np.empty((codes.shape[0], n), np.int64)
    t = codes.copy()
    for c in range(n):
        out[:, c] = t % q
        t //= q
    return out


def _reducible_numpy(d, p, k, log, exp):
    q = log.shape[0]
    mask = np.zeros(q**d, np.bool_)
    weights = q ** np.arange(d, dtype=np.int64)
    for i in range(1, d // 2 + 1):
        j = d - i
        gs = _digits(np.arange(q**j, dtype=np.int64), q, j)
        gs = np.hstack([gs, np.ones((gs.shape[0], 1), np.int64)])
        for fc in range(q**i):
            f = [int(x) for x in _digits(np.array([fc], np.int64), q, i)[0]] + [1]
            h = np.zeros((gs.shape[0], d + 1), np.int64)
            for a, fa in enumerate(f):
                if fa:
                    h[:, a : a + j + 1] = v_add(h[:, a : a + j + 1], v_mul(fa, gs, log, exp), p, k)
            mask[h[:, :d] @ weights] = True
    return mask


def reducible_mask(d, p, k, log, exp) -> np.ndarray:
    """Boolean mask over monic degree-d polynomials, True where reducible.

    Polynomial ``x^d + sum(c_i x^i)`` has code ``sum(c_i * q**i)``.
    """
    fn = _reducible_numba if _numba_selected() else _reducible_numpy
    return fn(d, p, k, log, exp)


# -- Weierstrass curves ---------------------------------------------------------


@njit
def _weierstrass_affine_numba(a1, a2, a3, a4, a6, p, k, log, exp):
    q = log.shape[0]
    count = 0
    for x in range(q):
        b = add_index(mul_index(a1, x, log, exp), a3, p, k)
        x2 = mul_index(x, x, log, exp)
        c = add_index(
            add_index(mul_index(x2, x, log, exp), mul_index(a2, x2, log, exp), p, k),
            add_index(mul_index(a4, x, log, exp), a6, p, k),
            p,
            k,
        )
        for y in range(q):
            if mul_index(y, add_index(y, b, p, k), log, exp) == c:
                count += 1
    return count


def _weierstrass_affine_numpy(a1, a2, a3, a4, a6, p, k, log, exp):
    q = log.shape[0]
    ys = np.arange(q, dtype=np.int64)
    count = 0
    for x in range(q):
        b = add_index(int(mul_index(a1, x, log, exp)), a3, p, k)
        x2 = int(mul_index(x, x, log, exp))
        c = add_index(
            add_index(int(mul_index(x2, x, log, exp)), int(mul_index(a2, x2, log, exp)), p, k),
            add_index(int(mul_index(a4, x, log, exp)), a6, p, k),
            p,
            k,
        )
        count += int(np.count_nonzero(v_mul(ys, v_add(ys, b, p, k), log, exp) == c))
    return count


def weierstrass_affine_count(coeffs, p, k, log, exp) -> int:
    """Affine solutions of y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""
    a1, a2, a3, a4, a6 = (int(c) for c in coeffs)
    fn = _weierstrass_affine_numba if _numba_selected() else _weierstrass_affine_numpy
    return int(fn(a1, a2, a3, a4, a6, p, k, log, exp))


@njit
def _discriminant_numba(a1, a2, a3, a4, a6, p, k, log, exp):
    four = 4 % p
    b2 = add_index(mul_index(a1, a1, log, exp), mul_index(four, a2, log, exp), p, k)
    b4 = add_index(mul_index(2 % p, a4, log, exp), mul_index(a1, a3, log, exp), p, k)
    b6 = add_index(mul_index(a3, a3, log, exp), mul_index(four, a6, log, exp), p, k)
    a1a1 = mul_index(a1, a1, log, exp)
    b8 = add_index(mul_index(a1a1, a6, log, exp), mul_index(four, mul_index(a2, a6, log, exp), log, exp), p, k)
    b8 = add_index(b8, neg_index(mul_index(a1, mul_index(a3, a4, log, exp), log, exp), p, k), p, k)
    b8 = add_index(b8, mul_index(a2, mul_index(a3, a3, log, exp), log, exp), p, k)
    b8 = add_index(b8, neg_index(mul_index(a4, a4, log, exp), p, k), p, k)
    t1 = mul_index(mul_index(b2, b2, log, exp), b8, log, exp)
    t2 = mul_index(8 % p, mul_index(b4, mul_index(b4, b4, log, exp), log, exp), log, exp)
    t3 = mul_index(27 % p, mul_index(b6, b6, log, exp), log, exp)
    t4 = mul_index(9 % p, mul_index(b2, mul_index(b4, b6, log, exp), log, exp), log, exp)
    neg = add_index(add_index(t1, t2, p, k), t3, p, k)
    return add_index(t4, neg_index(neg, p, k), p, k)


@njit
def _scan_numba(p, k, log, exp):
    q = log.shape[0]
    n = q**5
    smooth = np.zeros(n, np.bool_)
    counts = np.zeros(n, np.int64)
    for code in range(n):
        t = code
        a1 = t % q
        t //= q
        a2 = t % q
        t //= q
        a3 = t % q
        t //= q
        a4 = t % q
        a6 = t // q
        if _discriminant_numba(a1, a2, a3, a4, a6, p, k, log, exp) != 0:
            smooth[code] = True
            counts[code] = _weierstrass_affine_numba(a1, a2, a3, a4, a6, p, k, log, exp) + 1
    return smooth, counts


def _discriminant_numpy(a1, a2, a3, a4, a6, p, k, log, exp):
    def add(*xs):
        r = xs[0]
        for x in xs[1:]:
            r = v_add(r, x, p, k)
        return r

    def mul(*xs):
        r = xs[0]
        for x in xs[1:]:
            r = v_mul(r, x, log, exp)
        return r

    def neg(x):
        return v_neg(x, p, k)

    b2 = add(mul(a1, a1), mul(4 % p, a2))
    b4 = add(mul(2 % p, a4), mul(a1, a3))
    b6 = add(mul(a3, a3), mul(4 % p, a6))
    b8 = add(mul(a1, a1, a6), mul(4 % p, a2, a6), neg(mul(a1, a3, a4)), mul(a2, a3, a3), neg(mul(a4, a4)))
    return add(
        mul(9 % p, b2, b4, b6),
        neg(add(mul(b2, b2, b8), mul(8 % p, b4, b4, b4), mul(27 % p, b6, b6))),
    )


def _scan_numpy(p, k, log, exp):
    q = log.shape[0]
    a1, a2, a3, a4, a6 = _digits(np.arange(q**5, dtype=np.int64), q, 5).T
    smooth = _discriminant_numpy(a1, a2, a3, a4, a6, p, k, log, exp) != 0
    counts = np.ones(q**5, np.int64)
    for x in range(q):
        b = v_add(v_mul(a1, x, log, exp), a3, p, k)
        x2 = int(mul_index(x, x, log, exp))
        x3 = int(mul_index(x2, x, log, exp))
        c = v_add(v_add(x3, v_mul(a2, x2, log, exp), p, k), v_add(v_mul(a4, x, log, exp), a6, p, k), p, k)
        for y in range(q):
            counts += v_mul(y, v_add(y, b, p, k), log, exp) == c
    return smooth, np.where(smooth, counts, 0)


def weierstrass_scan(p, k, log, exp):
    """Discriminant test and projective point count for every curve over F_q.

    Curve ``(a1, a2, a3, a4, a6)`` has code ``a1 + a2*q + a3*q^2 + a4*q^3 +
    a6*q^4``.  Returns ``(smooth, counts)``; counts are 0 for singular curves.
    """
    fn = _scan_numba if _numba_selected() else _scan_numpy
    return fn(p, k, log, exp)


def discriminant(coeffs, p, k, log, exp) -> int:
    a1, a2, a3, a4, a6 = (int(c) for c in coeffs)
    if _numba_selected():
        return int(_discriminant_numba(a1, a2, a3, a4, a6, p, k, log, exp))
    return int(_discriminant_numpy(*(np.int64(a) for a in (a1, a2, a3, a4, a6)), p, k, log, exp))


# -- the parametrised curve (s^{q+1} : s^q t + s t^q : t^{q+1}) -------------------


@njit
def _curve_b_numba(qs, frob, p, k, log, exp):
    big = log.shape[0]
    out = np.empty(big + 1, np.int64)
    m = 0
    for i in range(big + 1):
        if i < big:
            s = 1
            t = i
        else:
            s = 0
            t = 1
        sq = pow_index(s, qs, log, exp)
        tq = pow_index(t, qs, log, exp)
        x = mul_index(sq, s, log, exp)
        y = add_index(mul_index(sq, t, log, exp), mul_index(s, tq, log, exp), p, k)
        z = mul_index(tq, t, log, exp)
        lead = x if x != 0 else (y if y != 0 else z)
        inv = inv_index(lead, log, exp)
        x = mul_index(x, inv, log, exp)
        y = mul_index(y, inv, log, exp)
        z = mul_index(z, inv, log, exp)
        if (
            pow_index(x, frob, log, exp) == x
            and pow_index(y, frob, log, exp) == y
            and pow_index(z, frob, log, exp) == z
        ):
            out[m] = (x * big + y) * big + z
            m += 1
    return out[:m]


def _curve_b_numpy(qs, frob, p, k, log, exp):
    big = log.shape[0]
    s = np.ones(big + 1, np.int64)
    s[-1] = 0
    t = np.arange(big + 1, dtype=np.int64)
    t[-1] = 1
    sq = v_pow(s, qs, log, exp)
    tq = v_pow(t, qs, log, exp)
    x = v_mul(sq, s, log, exp)
    y = v_add(v_mul(sq, t, log, exp), v_mul(s, tq, log, exp), p, k)
    z = v_mul(tq, t, log, exp)
    lead = np.where(x != 0, x, np.where(y != 0, y, z))
    inv = exp[(exp.shape[0] - log[lead]) % exp.shape[0]]
    x, y, z = (v_mul(c, inv, log, exp) for c in (x, y, z))
    fixed = np.ones(big + 1, np.bool_)
    for c in (x, y, z):
        fixed &= v_pow(c, frob, log, exp) == c
    return ((x * big + y) * big + z)[fixed]


def curve_b_fixed_images(qs, frob, p, k, log, exp) -> np.ndarray:
    """Codes of normalised image triples fixed by ``v -> v**frob``.

    The parameter (s:t) runs over P^1 of the tables' field; duplicates are
    kept, callers deduplicate.
    """
    fn = _curve_b_numba if _numba_selected() else _curve_b_numpy
    return fn(qs, frob, p, k, log, exp)


# -- homogeneous plane curves ----------------------------------------------------


@njit
def _eval_form(x, y, z, exps, coefs, p, k, log, exp):
    acc = 0
    for m in range(coefs.shape[0]):
        term = mul_index(
            coefs[m],
            mul_index(
                pow_index(x, exps[m, 0], log, exp),
                mul_index(pow_index(y, exps[m, 1], log, exp), pow_index(z, exps[m, 2], log, exp), log, exp),
                log,
                exp,
            ),
            log,
            exp,
        )
        acc = add_index(acc, term, p, k)
    return acc


@njit
def _plane_count_numba(exps, coefs, p, k, log, exp):
    q = log.shape[0]
    count = 0
    for x in range(q):
        for y in range(q):
            if _eval_form(x, y, 1, exps, coefs, p, k, log, exp) == 0:
                count += 1
    for x in range(q):
        if _eval_form(x, 1, 0, exps, coefs, p, k, log, exp) == 0:
            count += 1
    if _eval_form(1, 0, 0, exps, coefs, p, k, log, exp) == 0:
        count += 1
    return count


def _eval_form_numpy(x, y, z, exps, coefs, p, k, log, exp):
    acc = np.zeros(np.broadcast(x, y, z).shape, np.int64)
    for (ei, ej, ek), c in zip(exps, coefs):
        mono = v_mul(v_mul(v_pow(x, int(ei), log, exp), v_pow(y, int(ej), log, exp), log, exp),
                     v_pow(z, int(ek), log, exp), log, exp)
        acc = v_add(acc, v_mul(int(c), mono, log, exp), p, k)
    return acc


def _plane_count_numpy(exps, coefs, p, k, log, exp):
    q = log.shape[0]
    xs = np.arange(q, dtype=np.int64)
    count = 0
    for y in range(q):
        count += int(np.count_nonzero(_eval_form_numpy(xs, y, 1, exps, coefs, p, k, log, exp) == 0))
    count += int(np.count_nonzero(_eval_form_numpy(xs, 1, 0, exps, coefs, p, k, log, exp) == 0))
    count += int(_eval_form_numpy(np.int64(1), 0, 0, exps, coefs, p, k, log, exp) == 0)
    return count


def plane_curve_points(exps, coefs, p, k, log, exp) -> int:
    """Projective zeros of ``sum coefs[m] * X^e0 Y^e1 Z^e2`` over the field."""
    exps = np.asarray(exps, np.int64).reshape(-1, 3)
    coefs = np.asarray(coefs, np.int64)
    fn = _plane_count_numba if _numba_selected() else _plane_count_numpy
    return int(fn(exps, coefs, p, k, log, exp))
