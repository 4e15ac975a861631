"""a-number of a product of two curves from Frobenius data on H^1(O)."""
from __future__ import annotations

from dataclasses import dataclass

from .curve import SignedMonomialMap, frobenius_matrix, genus, is_bijective
from .relations import InvariantReport, infer
from .residue import InvalidInput, NotPrime, ResidueContext, is_prime


class CharacteristicMismatch(InvalidInput):
    pass


@dataclass(frozen=True)
class CurveFrobeniusData:
    """Frobenius on H^1(C, O) for a curve of genus ``g`` in characteristic ``p``.

    Exactly one of ``fermat`` (a signed monomial map) and ``matrix`` (rows of
    integers read mod p) is set.
    """

    p: int
    g: int
    fermat: SignedMonomialMap | None = None
    matrix: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        if (self.fermat is None) == (self.matrix is None):
            raise InvalidInput("give either a Fermat map or a matrix")
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")
        if self.g < 1:
            raise InvalidInput("genus must be at least 1")
        if self.matrix is not None:
            rows = tuple(tuple(int(x) % self.p for x in row) for row in self.matrix)
            if len(rows) != self.g or any(len(row) != self.g for row in rows):
                raise InvalidInput(f"matrix must be {self.g}x{self.g}")
            object.__setattr__(self, "matrix", rows)

    @classmethod
    def from_fermat(cls, ctx: ResidueContext) -> CurveFrobeniusData:
        return cls(p=ctx.require_prime(), g=genus(ctx.m), fermat=frobenius_matrix(ctx))

    @classmethod
    def from_matrix(cls, rows, p: int) -> CurveFrobeniusData:
        rows = [list(r) for r in rows]
        if any(len(r) != len(rows) for r in rows):
            raise InvalidInput("Frobenius matrix must be square")
        return cls(p=p, g=len(rows), matrix=tuple(map(tuple, rows)))


def rank_mod_p(rows, p: int) -> int:
    """Rank over F_p by row reduction with exact modular inverses."""
    a = [[x % p for x in row] for row in rows]
    if not a:
        return 0
    n_rows, n_cols = len(a), len(a[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = pow(a[rank][col], -1, p)
        a[rank] = [(x * inv) % p for x in a[rank]]
        for r in range(n_rows):
            if r != rank and a[r][col]:
                f = a[r][col]
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[rank])]
        rank += 1
        if rank == n_rows:
            break
    return rank


def is_ordinary(data: CurveFrobeniusData) -> bool:
    # a p-linear map with F_p-matrix is injective iff the matrix is invertible
    if data.fermat is not None:
        return is_bijective(data.fermat)
    return rank_mod_p(data.matrix, data.p) == data.g


def product_a_number(left: CurveFrobeniusData, right: CurveFrobeniusData) -> int:
    if left.p != right.p:
        raise CharacteristicMismatch(f"characteristics differ: {left.p} vs {right.p}")
    return (not is_ordinary(left)) + (not is_ordinary(right))


def product_hodge_numbers(g1: int, g2: int) -> tuple[int, int]:
    """(p_g, h^{1,1}) of C1 x C2 by Kuenneth."""
    return g1 * g2, 2 + 2 * g1 * g2


def product_report(left: CurveFrobeniusData, right: CurveFrobeniusData) -> InvariantReport:
    a = product_a_number(left, right)
    p_g, h11 = product_hodge_numbers(left.g, right.g)
    return infer(a, p_g, h11)
