"""Frobenius on H^1(C_m, O) for the Fermat curve x0^m + x1^m + x2^m = 0.

Cohomology classes are indexed by pairs ``(a, b)`` with ``1 <= a < b <= m-1``,
standing for the Cech cocycle t2^b / t1^a on the standard two-set cover.
Frobenius sends the class (a, b) to a multiple of (bar(a*d), bar(b*d)), which
is zero exactly when bar(b*d) <= bar(a*d).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, NamedTuple

from .residue import InvalidInput, ModulusTooSmall, MIN_MODULUS, ResidueContext


class BasisIndex(NamedTuple):
    a: int
    b: int

    def in_xi(self, m: int) -> bool:
        return 1 <= self.a < self.b <= m - 1


Image = tuple[int, BasisIndex]


def xi_basis(m: int) -> list[BasisIndex]:
    if m < MIN_MODULUS:
        raise ModulusTooSmall(f"m must be >= {MIN_MODULUS}, got {m}")
    return [BasisIndex(a, b) for a in range(1, m) for b in range(a + 1, m)]


def genus(m: int) -> int:
    if m < MIN_MODULUS:
        raise ModulusTooSmall(f"m must be >= {MIN_MODULUS}, got {m}")
    return (m - 1) * (m - 2) // 2


def dies(m: int, d: int, a: int, b: int) -> bool:
    """Zero criterion for the Frobenius image of the class (a, b)."""
    return (b * d) % m <= (a * d) % m


def _check_index(ctx: ResidueContext, idx) -> BasisIndex:
    idx = BasisIndex(*idx)
    if not idx.in_xi(ctx.m):
        raise InvalidInput(f"{tuple(idx)} is not in the basis index set for m={ctx.m}")
    return idx


def frobenius_image(ctx: ResidueContext, idx) -> Image | None:
    """Signed image of the class ``idx``, or ``None`` if it maps to zero.

    The sign is (-1)^(n*b), collapsed to +1 in characteristic 2.
    """
    p = ctx.require_prime()
    a, b = _check_index(ctx, idx)
    m, d = ctx.m, ctx.d
    A, B = (a * d) % m, (b * d) % m
    if B <= A:
        return None
    sign = -1 if (ctx.n * b) % 2 and p != 2 else 1
    return sign, BasisIndex(A, B)


@dataclass(frozen=True)
class SignedMonomialMap:
    """Frobenius on the basis as a partial signed map of indices.

    ``signs_reliable`` is False for maps built from a residue-only context;
    there every sign is +1 and only the zero pattern carries information.
    """

    m: int
    entries: Mapping[BasisIndex, Image | None]
    signs_reliable: bool = True
    p: int | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "entries", MappingProxyType(dict(self.entries)))
        seen = set()
        for src, img in self.entries.items():
            if not src.in_xi(self.m):
                raise InvalidInput(f"key {tuple(src)} outside the index set")
            if img is None:
                continue
            sign, tgt = img
            if sign not in (1, -1):
                raise InvalidInput(f"sign must be +1 or -1, got {sign}")
            if self.p == 2 and sign != 1:
                raise InvalidInput("characteristic 2 admits only the sign +1")
            if not tgt.in_xi(self.m):
                raise InvalidInput(f"image {tuple(tgt)} outside the index set")
            if tgt in seen:
                raise InvalidInput(f"two classes map to {tuple(tgt)}")
            seen.add(tgt)

    def __getitem__(self, idx) -> Image | None:
        return self.entries[BasisIndex(*idx)]

    def __len__(self):
        return len(self.entries)

    def killed(self) -> list[BasisIndex]:
        return [k for k, v in self.entries.items() if v is None]

    def require_signs(self) -> None:
        if not self.signs_reliable:
            raise InvalidInput("this map was built without p; its signs are placeholders")


def frobenius_matrix(ctx: ResidueContext) -> SignedMonomialMap:
    return SignedMonomialMap(
        m=ctx.m,
        entries={idx: frobenius_image(ctx, idx) for idx in xi_basis(ctx.m)},
        p=ctx.require_prime(),
    )


def frobenius_pattern(ctx: ResidueContext) -> SignedMonomialMap:
    """Zero/nonzero pattern of Frobenius; needs only ``d``."""
    m, d = ctx.m, ctx.d
    entries = {}
    for a, b in xi_basis(m):
        A, B = (a * d) % m, (b * d) % m
        entries[BasisIndex(a, b)] = None if B <= A else (1, BasisIndex(A, B))
    return SignedMonomialMap(m=m, entries=entries, signs_reliable=False, p=ctx.p)


def is_bijective(fm: SignedMonomialMap) -> bool:
    # injectivity of the index map is enforced at construction
    return all(v is not None for v in fm.entries.values())


def is_zero_map(fm: SignedMonomialMap) -> bool:
    return all(v is None for v in fm.entries.values())


def curve_a_number(ctx: ResidueContext) -> int:
    """0 if C_m is ordinary in this characteristic, 1 otherwise."""
    fm = frobenius_matrix(ctx) if ctx.has_prime else frobenius_pattern(ctx)
    return 0 if is_bijective(fm) else 1
