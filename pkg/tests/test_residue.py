import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fermat_invariants.residue import (
    ModulusTooSmall,
    NonUnit,
    NotCoprime,
    NotPrime,
    OutOfRange,
    ResidueContext,
    SignsUnavailable,
    bar,
    inv_mod,
    is_prime,
    make_context,
    residue_context,
)
from oracles import egcd_inverse


@pytest.mark.parametrize("ell, m, expected", [(8, 5, 3), (-1, 5, 4), (14, 5, 4), (0, 1, 0)])
def test_bar(ell, m, expected):
    assert bar(ell, m) == expected


@given(st.integers(-10**12, 10**12), st.integers(1, 10**6))
def test_bar_is_representative(ell, m):
    k = bar(ell, m)
    assert 0 <= k < m
    assert (ell - k) % m == 0


@pytest.mark.parametrize("d, m, expected", [(2, 7, 4), (1, 9, 1), (3, 7, 5)])
def test_inv_mod(d, m, expected):
    assert inv_mod(d, m) == expected
    assert egcd_inverse(d, m) == expected


def test_inv_mod_rejects_non_unit():
    with pytest.raises(NonUnit):
        inv_mod(4, 8)


@given(st.integers(2, 5000).flatmap(
    lambda m: st.tuples(st.just(m), st.integers(1, m - 1).filter(lambda d: math.gcd(d, m) == 1))))
def test_inverse_round_trip(md):
    m, d = md
    assert bar(d * inv_mod(d, m), m) == 1


def test_is_prime_small():
    sieve = [q for q in range(200) if q > 1 and all(q % r for r in range(2, q))]
    assert [q for q in range(200) if is_prime(q)] == sieve


@pytest.mark.parametrize("m, p, d, n", [(5, 7, 2, 1), (4, 5, 1, 1), (7, 3, 3, 0), (5, 19, 4, 3)])
def test_make_context(m, p, d, n):
    ctx = make_context(m, p)
    assert (ctx.m, ctx.p, ctx.d, ctx.n) == (m, p, d, n)


@pytest.mark.parametrize("m, p, exc", [
    (4, 2, NotCoprime),
    (5, 9, NotPrime),
    (3, 7, ModulusTooSmall),
    (5, 2**31 + 11, OutOfRange),
    (2**20 + 1, 3, OutOfRange),
])
def test_make_context_errors(m, p, exc):
    with pytest.raises(exc):
        make_context(m, p)


@given(st.integers(4, 300), st.integers(2, 3000))
def test_context_round_trip(m, p):
    if not is_prime(p) or math.gcd(m, p) != 1:
        return
    ctx = make_context(m, p)
    assert ctx.d + ctx.n * ctx.m == p
    assert 1 <= ctx.d <= m - 1


def test_residue_only_context():
    ctx = residue_context(7, 10)
    assert (ctx.d, ctx.p, ctx.has_prime) == (3, None, False)
    with pytest.raises(SignsUnavailable):
        ctx.require_prime()
    with pytest.raises(NonUnit):
        residue_context(8, 4)


def test_context_rejects_inconsistent_fields():
    with pytest.raises(ValueError):
        ResidueContext(m=5, d=2, p=7, n=2)
