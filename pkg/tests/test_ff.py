import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singcurve import ff, kernels
from singcurve.errors import BoundExceeded, SingCurveError, ValidationError
from singcurve.zeta import divisors, mobius


def _has_root_mod_p(poly, p):
    return any(sum(c * x**i for i, c in enumerate(poly)) % p == 0 for x in range(p))


def test_prime_field_modulus():
    assert ff.field_create(2, 1).modulus == (0, 1)


def test_f4_modulus():
    assert ff.field_create(2, 2).modulus == (1, 1, 1)


def test_f9_modulus_is_smallest_rootless_quadratic():
    # a quadratic is irreducible iff it has no root; scan in low-degree-first order
    expected = next(
        low + (1,) for low in itertools.product(range(3), repeat=2) if not _has_root_mod_p(low + (1,), 3)
    )
    assert expected == (1, 0, 1)
    assert ff.field_create(3, 2).modulus == expected


def test_field_create_is_deterministic():
    assert ff.field_create(2, 4) is ff.field_create(2, 4)
    assert ff.field_create(5, 2) == ff.field_create(5, 2)


@pytest.mark.parametrize("p,k", [(4, 1), (1, 1), (9, 2), (2, 0)])
def test_field_create_rejects(p, k):
    with pytest.raises(ValidationError):
        ff.field_create(p, k)


def test_field_create_bound():
    with pytest.raises(BoundExceeded):
        ff.field_create(2, 25)
    with pytest.raises(BoundExceeded):
        ff.field_create(2, 10, bound=512)


def test_f4_arithmetic():
    F4 = ff.field_create(2, 2)
    x = F4.gen
    assert x * x == x + 1
    assert x.inv() == x + 1
    assert x**0 == F4.one


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        ff.field_create(3, 2).zero.inv()


def test_ctx_mismatch():
    with pytest.raises(SingCurveError):
        ff.field_create(2, 2).one + ff.field_create(2, 3).one


def test_large_exponent():
    F = ff.field_create(3, 3)
    a = F.gen + 2
    assert a ** (10**30) == a ** (10**30 % 26)


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 3), (3, 2), (2, 4), (5, 2), (7, 2), (2, 6)])
def test_fermat(p, k):
    F = ff.field_create(p, k)
    one = F.one
    for e in ff.enumerate_elements(F)[1:]:
        assert e ** (F.order - 1) == one


@given(
    st.sampled_from([(2, 3), (3, 2), (5, 1), (2, 5)]),
    st.data(),
)
@settings(max_examples=60, deadline=None)
def test_field_axioms(pk, data):
    F = ff.field_create(*pk)
    idx = st.integers(0, F.order - 1)
    a, b, c = (F.from_index(data.draw(idx)) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == F.zero
    if not a.is_zero():
        assert a * a.inv() == F.one


def test_enumerate_elements():
    assert [e.index for e in ff.enumerate_elements(ff.field_create(2))] == [0, 1]
    assert len(ff.enumerate_elements(ff.field_create(2, 2))) == 4
    els = ff.enumerate_elements(ff.field_create(3, 2))
    assert len(els) == 9 and els[0].is_zero()
    assert len(set(els)) == 9
    with pytest.raises(BoundExceeded):
        ff.enumerate_elements(ff.field_create(2, 21))


def test_frobenius_fixed():
    F16 = ff.field_create(2, 4)
    assert ff.frobenius_fixed(F16.one, 2)
    F4 = ff.field_create(2, 2)
    assert not ff.frobenius_fixed(F4.gen, 2)
    g = F16.from_index(F16.tables.primitive)
    assert ff.frobenius_fixed(g**5, 4)
    assert not ff.frobenius_fixed(g, 4)


@pytest.mark.parametrize("p,k,j", [(2, 4, 1), (2, 4, 2), (3, 2, 1), (2, 6, 3), (2, 6, 2)])
def test_frobenius_fixed_set_size(p, k, j):
    F = ff.field_create(p, k)
    assert sum(ff.frobenius_fixed(e, p**j) for e in ff.enumerate_elements(F)) == p**j


def test_frobenius_fixed_rejects_non_subfield():
    with pytest.raises(ValidationError):
        ff.frobenius_fixed(ff.field_create(2, 4).one, 8)
    with pytest.raises(ValidationError):
        ff.frobenius_fixed(ff.field_create(2, 4).one, 3)


def _brute_irreducible_count(q, d):
    """Count monic degree-d polys over F_q that are not a product of two monic factors."""
    F = ff.field_of_order(q)
    els = ff.enumerate_elements(F)

    def polys(n):
        for low in itertools.product(els, repeat=n):
            yield low + (F.one,)

    def pmul(a, b):
        out = [F.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return tuple(out)

    reducible = set()
    for i in range(1, d // 2 + 1):
        for a in polys(i):
            for b in polys(d - i):
                reducible.add(pmul(a, b))
    return q**d - len(reducible)


@pytest.mark.parametrize("q,d,expected", [(2, 2, 1), (2, 3, 2), (3, 2, 3), (4, 2, 6), (2, 4, 3)])
def test_irreducible_counts(q, d, expected):
    assert _brute_irreducible_count(q, d) == expected
    p, k = ff.prime_power(q)
    assert len(ff.enumerate_monic_irreducibles(p, k, d)) == expected


def test_irreducibles_q2_d2_is_x2_x_1():
    (poly,) = ff.enumerate_monic_irreducibles(2, 1, 2)
    assert [c.index for c in poly] == [1, 1, 1]


def test_irreducibles_q2_d3():
    got = {tuple(c.index for c in f) for f in ff.enumerate_monic_irreducibles(2, 1, 3)}
    assert got == {(1, 1, 0, 1), (1, 0, 1, 1)}


def _gauss(q, d):
    return sum(mobius(e) * q ** (d // e) for e in divisors(d)) // d


@pytest.mark.parametrize(
    "p,k,d",
    [(p, k, d) for p, k in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4)] for d in range(1, 9)
     if (p**k) ** d <= 2**16],
)
def test_irreducible_count_matches_gauss(p, k, d):
    assert len(ff.enumerate_monic_irreducibles(p, k, d)) == _gauss(p**k, d)


def test_irreducibles_really_have_no_roots():
    F = ff.field_create(3, 1)
    for f in ff.enumerate_monic_irreducibles(3, 1, 3):
        for x in ff.enumerate_elements(F):
            acc = F.zero
            for c in reversed(f):
                acc = acc * x + c
            assert not acc.is_zero()


def test_irreducible_bound():
    with pytest.raises(BoundExceeded):
        ff.enumerate_monic_irreducibles(2, 1, 30)


@pytest.mark.parametrize("p,k", [(2, 3), (3, 2), (5, 2), (2, 5)])
def test_tables_agree_with_element_arithmetic(p, k):
    F = ff.field_create(p, k)
    t = F.tables
    assert sorted(t.exp.tolist()) == list(range(1, F.order))
    rng = np.random.default_rng(0)
    for a, b in rng.integers(0, F.order, size=(200, 2)):
        a, b = int(a), int(b)
        ea, eb = F.from_index(a), F.from_index(b)
        assert kernels.add_index(a, b, p, k) == (ea + eb).index
        assert kernels.mul_index(a, b, t.log, t.exp) == (ea * eb).index
        assert kernels.neg_index(a, p, k) == (-ea).index
        assert kernels.pow_index(a, 7, t.log, t.exp) == (ea**7).index


@pytest.mark.parametrize("small,big", [((2, 2), (2, 4)), ((2, 2), (2, 6)), ((3, 2), (3, 4)), ((2, 3), (2, 6))])
def test_embedding_is_a_ring_homomorphism(small, big):
    S, B = ff.field_create(*small), ff.field_create(*big)
    emb = ff.embedding(S, B)
    assert len(set(emb.tolist())) == S.order
    for a in ff.enumerate_elements(S):
        for b in ff.enumerate_elements(S):
            assert B.from_index(int(emb[(a * b).index])) == B.from_index(int(emb[a.index])) * B.from_index(int(emb[b.index]))
            assert int(emb[(a + b).index]) == (B.from_index(int(emb[a.index])) + B.from_index(int(emb[b.index]))).index
    # image is the subfield with |S| elements
    assert all(ff.frobenius_fixed(B.from_index(int(i)), S.order) for i in emb)


def test_prime_power():
    assert ff.prime_power(8) == (2, 3)
    assert ff.prime_power(9) == (3, 2)
    for bad in (1, 6, 12, 0):
        with pytest.raises(ValidationError):
            ff.prime_power(bad)
