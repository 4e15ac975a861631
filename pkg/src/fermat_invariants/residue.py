"""Exact residue arithmetic shared by the curve and surface computations.

A prime ``p`` coprime to ``m`` is written as ``p = d + n*m`` with
``1 <= d <= m - 1``.  Most of the combinatorics only sees ``d``; the parity
of ``n`` enters the Frobenius signs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

MAX_MODULUS = 2**20
MAX_PRIME = 2**31
MIN_MODULUS = 4


class InvalidInput(ValueError):
    """Base class for rejected user-level inputs."""


class ModulusTooSmall(InvalidInput):
    pass


class NotPrime(InvalidInput):
    pass


class NotCoprime(InvalidInput):
    pass


class NonUnit(InvalidInput):
    pass


class OutOfRange(InvalidInput):
    pass


class SignsUnavailable(InvalidInput):
    """Raised when a sign-sensitive operation gets a residue-only context."""


def bar(ell: int, m: int) -> int:
    """Representative of ``ell`` modulo ``m`` in ``[0, m-1]``."""
    if m < 1:
        raise InvalidInput(f"modulus must be positive, got {m}")
    return ell % m


def inv_mod(d: int, m: int) -> int:
    if m < 2:
        raise InvalidInput(f"modulus must be at least 2, got {m}")
    try:
        return pow(d, -1, m)
    except ValueError:
        raise NonUnit(f"{d} is not a unit modulo {m}") from None


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    for q in range(3, math.isqrt(p) + 1, 2):
        if p % q == 0:
            return False
    return True


def primes_below(bound: int) -> list[int]:
    return [q for q in range(2, bound) if is_prime(q)]


def units(m: int) -> list[int]:
    """Units of Z/m in increasing order, as representatives in ``[1, m-1]``."""
    return [d for d in range(1, m) if math.gcd(d, m) == 1]


def _check_modulus(m: int) -> None:
    if m < MIN_MODULUS:
        raise ModulusTooSmall(f"m must be >= {MIN_MODULUS}, got {m}")
    if m > MAX_MODULUS:
        raise OutOfRange(f"m must be <= 2^20, got {m}")


@dataclass(frozen=True)
class ResidueContext:
    """Modulus ``m`` with the residue ``d`` of the characteristic.

    ``p`` and ``n`` are ``None`` for a residue-only context.
    """

    m: int
    d: int
    p: int | None = None
    n: int | None = None

    def __post_init__(self):
        _check_modulus(self.m)
        if not 1 <= self.d <= self.m - 1 or math.gcd(self.d, self.m) != 1:
            raise NonUnit(f"d={self.d} is not a unit in [1, m-1] for m={self.m}")
        if (self.p is None) != (self.n is None):
            raise InvalidInput("p and n must be given together")
        if self.p is not None and self.d + self.n * self.m != self.p:
            raise InvalidInput(f"{self.p} != {self.d} + {self.n}*{self.m}")

    @property
    def has_prime(self) -> bool:
        return self.p is not None

    def require_prime(self) -> int:
        if self.p is None:
            raise SignsUnavailable("operation needs the prime p, not just its residue")
        return self.p


def make_context(m: int, p: int) -> ResidueContext:
    _check_modulus(m)
    if p > MAX_PRIME:
        raise OutOfRange(f"p must be <= 2^31, got {p}")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if math.gcd(m, p) != 1:
        raise NotCoprime(f"gcd({m}, {p}) = {math.gcd(m, p)}")
    d = bar(p, m)
    return ResidueContext(m=m, d=d, p=p, n=(p - d) // m)


def residue_context(m: int, d: int) -> ResidueContext:
    """Context carrying only ``d``; sign-dependent operations refuse it."""
    _check_modulus(m)
    return ResidueContext(m=m, d=bar(d, m))
