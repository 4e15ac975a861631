"""Self-verification checks shared by ``verify`` and the acceptance tests.

Each check sweeps a grid, counts the cases it looked at and collects every
mismatch; a check passes when no mismatch was found.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

from .curve import (
    frobenius_matrix,
    frobenius_pattern,
    genus,
    is_bijective,
    is_zero_map,
    xi_basis,
)
from .product import CurveFrobeniusData, is_ordinary, product_a_number
from .relations import RULE_H_EQ, infer
from .residue import make_context, primes_below, residue_context, units
from .surface import (
    HeightClass,
    cardinality_symmetry_check,
    enumerate_Y,
    height_class,
    hodge_numbers,
    invariant_pairs,
    surface_a_bruteforce,
    surface_a_closedform,
    surface_a_tensor,
)


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.cases > 0 and not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        s = f"{status} {self.name}: {self.cases} cases, {len(self.failures)} failures"
        if self.detail:
            s += f" ({self.detail})"
        if self.failures:
            s += f"; first: {self.failures[0]}"
        return s


def prime_contexts(m: int, p_bound: int):
    for p in primes_below(p_bound):
        if math.gcd(p, m) == 1:
            yield make_context(m, p)


def closed_vs_brute(m_max: int) -> CheckResult:
    res = CheckResult("closed-vs-brute")
    for m in range(4, m_max + 1):
        for d in units(m):
            res.cases += 1
            c, b = surface_a_closedform(m, d), surface_a_bruteforce(m, d)
            if c != b:
                res.failures.append((m, d, c, b))
    res.detail = f"m in [4, {m_max}], all units"
    return res


def three_routes(m_max: int, p_bound: int = 200) -> CheckResult:
    res = CheckResult("three-routes")
    for m in range(4, m_max + 1):
        for ctx in prime_contexts(m, p_bound):
            res.cases += 1
            vals = (surface_a_closedform(m, ctx.d), surface_a_bruteforce(m, ctx.d),
                    surface_a_tensor(ctx))
            if len(set(vals)) != 1:
                res.failures.append((m, ctx.p, vals))
    res.detail = f"m in [4, {m_max}], primes < {p_bound}"
    return res


def isoorzero(m_max: int, p_bound: int = 200) -> CheckResult:
    res = CheckResult("isoorzero")
    classes = 0
    for m in range(4, m_max + 1):
        for d in units(m):
            classes += 1
            res.cases += 1
            fm = frobenius_pattern(residue_context(m, d))
            if is_bijective(fm) != (d == 1) or is_zero_map(fm) != (d == m - 1):
                res.failures.append(("pattern", m, d))
        for ctx in prime_contexts(m, p_bound):
            res.cases += 1
            fm = frobenius_matrix(ctx)
            if is_bijective(fm) != (ctx.d == 1) or is_zero_map(fm) != (ctx.d == m - 1):
                res.failures.append(("prime", m, ctx.p))
    res.detail = f"{classes} residue classes, primes < {p_bound}"
    return res


def y_symmetry(m_max: int) -> CheckResult:
    res = CheckResult("y-symmetry")
    for m in range(4, m_max + 1):
        for d in units(m):
            res.cases += 1
            if not cardinality_symmetry_check(m, d):
                res.failures.append((m, d))
    return res


def pair_count(m_max: int) -> CheckResult:
    res = CheckResult("pair-count")
    for m in range(4, m_max + 1):
        res.cases += 1
        n_xi, n_pairs = len(xi_basis(m)), len(invariant_pairs(m))
        p_g, _ = hodge_numbers(m)
        if not (n_xi == genus(m) == (m - 1) * (m - 2) // 2
                and n_pairs == math.comb(m - 1, 3) == p_g):
            res.failures.append((m, n_xi, n_pairs, p_g))
    return res


def det_mod_p(rows, p: int) -> int:
    """Leibniz expansion; independent of the row-reduction rank."""
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i, j in enumerate(perm):
            term *= rows[i][j]
        total += term
    return total % p


def product(m_max: int, p_bound: int = 100, n_random: int = 200, seed: int = 0) -> CheckResult:
    res = CheckResult("product")
    for m in range(4, m_max + 1):
        for ctx in prime_contexts(m, p_bound):
            res.cases += 1
            c = CurveFrobeniusData.from_fermat(ctx)
            expected = 2 * (ctx.d != 1)
            if product_a_number(c, c) != expected:
                res.failures.append(("fermat", m, ctx.p))
    rng = random.Random(seed)
    singular = 0
    for _ in range(n_random):
        p = rng.choice((2, 3, 5, 7))
        rows = [[rng.randrange(p) for _ in range(5)] for _ in range(5)]
        res.cases += 1
        oracle = det_mod_p(rows, p) != 0
        singular += not oracle
        if is_ordinary(CurveFrobeniusData.from_matrix(rows, p)) != oracle:
            res.failures.append(("matrix", p, rows))
    res.detail = f"{n_random} random 5x5 matrices, {singular} singular"
    return res


def height(m_max: int) -> CheckResult:
    res = CheckResult("height")
    for m in range(4, m_max + 1):
        for d in units(m):
            res.cases += 1
            hc = height_class(m, d)
            a = surface_a_closedform(m, d)
            ok = ((hc is HeightClass.ONE) == (d == 1)
                  and (hc is HeightClass.INFINITE) == (a == 2))
            p_g, h11 = hodge_numbers(m)
            rep = infer(a, p_g, h11)
            ok = ok and ((rep.h.kind == "infinite") == (hc is HeightClass.INFINITE))
            if not ok:
                res.failures.append((m, d, hc, a))
    return res


def relations(m_max: int) -> CheckResult:
    res = CheckResult("relations")
    k3 = infer(0, 1, 20)
    res.cases += 1
    if not (k3.b.value == 0 and k3.h.value == 1):
        res.failures.append(("k3", str(k3.b), str(k3.h)))
    for a in range(0, 5):
        for p_g in range(0, 6):
            for h11 in range(0, 8):
                res.cases += 1
                rep = infer(a, p_g, h11)
                if not rep.h.same_values(rep.b.shift(p_g, RULE_H_EQ)):
                    res.failures.append(("shift", a, p_g, h11))
                if a >= 2 and not (rep.b.kind == rep.h.kind == "infinite"):
                    res.failures.append(("a>=2", a, p_g, h11))
    for m in range(4, m_max + 1):
        p_g, h11 = hodge_numbers(m)
        for d in units(m):
            res.cases += 1
            rep = infer(surface_a_closedform(m, d), p_g, h11)
            if not rep.h.same_values(rep.b.shift(p_g, RULE_H_EQ)):
                res.failures.append(("fermat", m, d))
    return res


def erratum(m_max: int) -> CheckResult:
    res = CheckResult("erratum")
    for m in range(5, m_max + 1, 2):
        res.cases += 1
        if enumerate_Y(m, 2):
            res.failures.append(m)
    res.detail = f"Y(m, 2) for odd m in [5, {m_max}]"
    return res


SPOT_VALUES = {(5, 11): 0, (5, 7): 1, (7, 11): 1, (7, 5): 2, (5, 19): 2}


def spot_values() -> CheckResult:
    res = CheckResult("spot-values")
    for (m, p), want in SPOT_VALUES.items():
        res.cases += 1
        ctx = make_context(m, p)
        got = (surface_a_closedform(m, ctx.d), surface_a_bruteforce(m, ctx.d),
               surface_a_tensor(ctx))
        if got != (want,) * 3:
            res.failures.append((m, p, got, want))
    return res


CHECKS = {
    "route-agreement": lambda m_max: [closed_vs_brute(m_max), three_routes(m_max)],
    "isoorzero": lambda m_max: [isoorzero(m_max)],
    "y-symmetry": lambda m_max: [y_symmetry(m_max)],
    "pair-count": lambda m_max: [pair_count(m_max)],
    "product": lambda m_max: [product(m_max)],
    "height": lambda m_max: [height(m_max)],
    "relations": lambda m_max: [relations(m_max)],
    "erratum": lambda m_max: [erratum(max(m_max, 5))],
    "spot-values": lambda m_max: [spot_values()],
}


def run_checks(m_max: int, names=None) -> list[CheckResult]:
    names = list(CHECKS) if names is None else names
    out = []
    for name in names:
        out.extend(CHECKS[name](m_max))
    return out
