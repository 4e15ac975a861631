"""Inference of b and h from the a-number and Hodge data.

Rules (identifiers appear in report notes and CLI output):

``a0-iff-b0``
    a = 0 exactly when b = 0.
``b-finite-a-le-1``
    b < oo forces a in {0, 1}; so a >= 2 gives b = oo.
``b-le-h11``
    a finite b is at most dim H^{n-1}(X, Omega^1).
``h-eq-b-plus-pg``
    h = b + p_g, with oo + p_g = oo.

The results assume the Hodge-to-de Rham spectral sequence degenerates at E1;
this is recorded, never checked.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .residue import InvalidInput
from .surface import HeightClass

RULE_A0_IFF_B0 = "a0-iff-b0"
RULE_B_FINITE = "b-finite-a-le-1"
RULE_B_BOUND = "b-le-h11"
RULE_H_EQ = "h-eq-b-plus-pg"
RULE_GIVEN = "given"

DEGENERATION_NOTE = "assumes Hodge-to-de Rham degeneration at E1 (not checked)"


@dataclass(frozen=True)
class InvariantStatus:
    """What is known about a value in Z_{>=0} union {oo}.

    ``finite`` is an inclusive range of possible finite values or None;
    ``infinite`` says whether oo is possible.  ``known=False`` is the
    Unknown status, with no constraint at all.
    """

    finite: tuple[int, int] | None
    infinite: bool
    rule: str
    known: bool = True

    def __post_init__(self):
        if self.finite is not None:
            lo, hi = self.finite
            if not 0 <= lo <= hi:
                raise InvalidInput(f"bad interval {self.finite}")
        if self.known and self.finite is None and not self.infinite:
            raise InvalidInput("empty status; use InvariantStatus.unknown()")

    @classmethod
    def exact(cls, v: int, rule: str) -> InvariantStatus:
        return cls((v, v), False, rule)

    @classmethod
    def interval(cls, lo: int, hi: int, rule: str, infinite: bool = False):
        # an empty finite range collapses to the infinite part alone
        return cls((lo, hi) if lo <= hi else None, infinite, rule)

    @classmethod
    def infinity(cls, rule: str) -> InvariantStatus:
        return cls(None, True, rule)

    @classmethod
    def unknown(cls, rule: str = "none") -> InvariantStatus:
        return cls(None, False, rule, known=False)

    @property
    def kind(self) -> str:
        if not self.known:
            return "unknown"
        if self.finite is None:
            return "infinite"
        lo, hi = self.finite
        base = "exact" if lo == hi else "interval"
        return base + "_or_infinite" if self.infinite else base

    @property
    def value(self) -> int | None:
        return self.finite[0] if self.kind == "exact" else None

    def shift(self, k: int, rule: str) -> InvariantStatus:
        if not self.known:
            return InvariantStatus.unknown(rule)
        fin = None if self.finite is None else (self.finite[0] + k, self.finite[1] + k)
        return InvariantStatus(fin, self.infinite, rule)

    def same_values(self, other: InvariantStatus) -> bool:
        return (self.finite, self.infinite, self.known) == (
            other.finite, other.infinite, other.known)

    def __str__(self):
        # compact, comma-free form; used verbatim in CSV output
        if not self.known:
            return "unknown"
        parts = []
        if self.finite is not None:
            lo, hi = self.finite
            parts.append(str(lo) if lo == hi else f"{lo}..{hi}")
        if self.infinite:
            parts.append("inf")
        return "|".join(parts)


@dataclass(frozen=True)
class InvariantReport:
    a: InvariantStatus
    b: InvariantStatus
    h: InvariantStatus
    p_g: int
    h_n_minus_1_1: int
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.a.kind != "exact":
            raise InvalidInput("the a-number must be exact")
        if self.b.known and not self.h.same_values(self.b.shift(self.p_g, RULE_H_EQ)):
            raise InvalidInput(f"h={self.h} is not b={self.b} shifted by p_g={self.p_g}")

    def with_notes(self, *notes: str) -> InvariantReport:
        return InvariantReport(self.a, self.b, self.h, self.p_g,
                               self.h_n_minus_1_1, self.notes + notes)


def infer(a: int, p_g: int, h_n11: int) -> InvariantReport:
    if a < 0 or p_g < 0 or h_n11 < 0:
        raise InvalidInput("a, p_g and dim H^{n-1}(Omega^1) must be nonnegative")
    if a == 0:
        b = InvariantStatus.exact(0, RULE_A0_IFF_B0)
    elif a == 1:
        # b != 0 by a0-iff-b0; finite b bounded by b-le-h11
        b = InvariantStatus.interval(1, h_n11, RULE_B_BOUND, infinite=True)
    else:
        b = InvariantStatus.infinity(RULE_B_FINITE)
    h = b.shift(p_g, RULE_H_EQ)
    return InvariantReport(
        a=InvariantStatus.exact(a, RULE_GIVEN),
        b=b,
        h=h,
        p_g=p_g,
        h_n_minus_1_1=h_n11,
        notes=(DEGENERATION_NOTE, f"b: {b.rule}", f"h: {h.rule}"),
    )


def check_calabi_yau_bound(report: InvariantReport) -> bool:
    """Finite h must lie in [1, h^{n-1,1} + 1] when p_g = 1."""
    if report.p_g != 1:
        raise InvalidInput(f"Calabi-Yau bound needs p_g = 1, got {report.p_g}")
    if not report.h.known:
        return False
    if report.h.finite is None:
        return True
    lo, hi = report.h.finite
    return 1 <= lo and hi <= report.h_n_minus_1_1 + 1


def reconcile_height(report: InvariantReport, hc: HeightClass) -> InvariantReport:
    """Attach notes comparing h = b + p_g with the Fermat height class.

    The height class says h = 1 when p = 1 mod m, while h = b + p_g gives
    h = p_g there.  The two only agree for p_g = 1; otherwise a conflict note
    is added and both values are kept.
    """
    if hc is HeightClass.ONE and report.h.kind == "exact" and report.h.value != 1:
        return report.with_notes(
            f"conflict: height class One vs h = b + p_g = {report.h.value}")
    if hc is HeightClass.INFINITE and report.h.kind != "infinite":
        return report.with_notes(f"conflict: height class Infinite vs h = {report.h}")
    return report
