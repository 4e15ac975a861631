"""a-number, height class and Hodge numbers of the Fermat surface X_m.

H^2(X_m, O) is the mu_m-invariant part of H^1(C_m, O) (x) H^1(C_m, O), spanned
by the tensors (a, b) (x) (a', m-b).  Three independent ways of getting
a(X_m) live here:

* ``surface_a_closedform``: the case split on d = p mod m,
* ``surface_a_bruteforce``: emptiness of the triple set Y(m, d),
* ``surface_a_tensor``: best filtration level reached by an invariant tensor,
  read off the curve Frobenius.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

from .curve import BasisIndex, frobenius_matrix, genus, is_bijective
from .residue import (
    MIN_MODULUS,
    ModulusTooSmall,
    NonUnit,
    ResidueContext,
    inv_mod,
)


class InvariantPair(NamedTuple):
    left: BasisIndex
    right: BasisIndex


class YTriple(NamedTuple):
    a: int
    a_prime: int
    b: int


class HeightClass(enum.Enum):
    ONE = "One"
    INFINITE = "Infinite"
    UNDETERMINED = "Undetermined"

    def __str__(self):
        return self.value


def _check(m: int, d: int | None = None) -> None:
    if m < MIN_MODULUS:
        raise ModulusTooSmall(f"m must be >= {MIN_MODULUS}, got {m}")
    if d is not None and (not 1 <= d <= m - 1 or math.gcd(d, m) != 1):
        raise NonUnit(f"d={d} is not a unit in [1, m-1] for m={m}")


def invariant_pairs(m: int) -> list[InvariantPair]:
    _check(m)
    return [
        InvariantPair(BasisIndex(a, b), BasisIndex(a2, m - b))
        for b in range(2, m - 1)
        for a in range(1, b)
        for a2 in range(1, m - b)
    ]


def iter_Y(m: int, d: int) -> Iterator[YTriple]:
    """Triples (a, a', b) of Y(m, d) in lexicographic order."""
    _check(m, d)
    r = [(d * x) % m for x in range(m)]
    for a in range(1, m):
        for a2 in range(1, m):
            for b in range(a + 1, m - a2):
                if r[a] >= r[b] and r[a2] >= r[m - b]:
                    yield YTriple(a, a2, b)


def enumerate_Y(m: int, d: int) -> list[YTriple]:
    return list(iter_Y(m, d))


@lru_cache(maxsize=4096)
def y_count(m: int, d: int) -> int:
    _check(m, d)
    # count by b: the a- and a'-conditions decouple once b is fixed
    r = [(d * x) % m for x in range(m)]
    total = 0
    for b in range(2, m - 1):
        left = sum(1 for a in range(1, b) if r[a] >= r[b])
        if left:
            total += left * sum(1 for a2 in range(1, m - b) if r[a2] >= r[m - b])
    return total


def two_inverse(m: int) -> int | None:
    return inv_mod(2, m) if m % 2 else None


def surface_a_closedform(m: int, d: int) -> int:
    _check(m, d)
    if d == 1:
        return 0
    if m % 2 and d in (2 % m, two_inverse(m)):
        return 1
    return 2


def surface_a_bruteforce(m: int, d: int) -> int:
    _check(m, d)
    if d == 1:
        return 0
    return 2 if next(iter_Y(m, d), None) is not None else 1


def pair_score(fm, pair: InvariantPair) -> int:
    """Number of factors of the tensor killed by Frobenius."""
    return (fm[pair.left] is None) + (fm[pair.right] is None)


def surface_a_tensor(ctx: ResidueContext) -> int:
    fm = frobenius_matrix(ctx)
    if is_bijective(fm):
        return 0
    m = ctx.m
    best = 0
    # max over pairs of b factorises: the two factors share only b
    for b in range(2, m - 1):
        left = any(fm[a, b] is None for a in range(1, b))
        right = any(fm[a2, m - b] is None for a2 in range(1, m - b))
        best = max(best, left + right)
        if best == 2:
            break
    return best


def cardinality_symmetry_check(m: int, d: int) -> bool:
    return y_count(m, d) == y_count(m, inv_mod(d, m))


def hodge_numbers(m: int) -> tuple[int, int]:
    """(p_g, h^{1,1}) of a smooth degree-m surface in P^3."""
    _check(m)
    p_g = math.comb(m - 1, 3)
    b2 = m**3 - 4 * m**2 + 6 * m - 2
    return p_g, b2 - 2 * p_g


def height_class(m: int, d: int) -> HeightClass:
    _check(m, d)
    if d == 1:
        return HeightClass.ONE
    if m % 2 and d in (2 % m, two_inverse(m)):
        return HeightClass.UNDETERMINED
    return HeightClass.INFINITE


@dataclass(frozen=True)
class SurfaceInvariants:
    m: int
    p: int | None
    d: int
    a_closed: int
    a_brute: int
    a_tensor: int | None
    y_count: int
    genus_curve: int
    p_g: int
    h11: int
    height_class: HeightClass

    @property
    def routes_agree(self) -> bool:
        vals = {self.a_closed, self.a_brute}
        if self.a_tensor is not None:
            vals.add(self.a_tensor)
        return len(vals) == 1


def surface_invariants(ctx: ResidueContext) -> SurfaceInvariants:
    """Every route for one (m, p) or (m, d); tensor route only with a prime."""
    m, d = ctx.m, ctx.d
    p_g, h11 = hodge_numbers(m)
    return SurfaceInvariants(
        m=m,
        p=ctx.p,
        d=d,
        a_closed=surface_a_closedform(m, d),
        a_brute=surface_a_bruteforce(m, d),
        a_tensor=surface_a_tensor(ctx) if ctx.has_prime else None,
        y_count=y_count(m, d),
        genus_curve=genus(m),
        p_g=p_g,
        h11=h11,
        height_class=height_class(m, d),
    )
