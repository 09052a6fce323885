"""Exhaustive cross-checks of every formula against the brute-force oracles.

Each suite yields ``(label, ok)`` pairs over a fixed small grid; nothing is
randomized, so reports are reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Callable, Iterator

from . import oracles
from .charpoly import X, binom, coinv_series, evaluate, render, sym_series, umbral_down
from .coinvariants import (
    coinv_character_univariate,
    coinv_graded_dims,
    orbit_count,
    univariate_invariant_dim,
)
from .configuration import (
    BRUTE_FORCE_DERANGEMENT_CAP,
    ConfigParams,
    config_ranges,
    derangement_count_brute,
    derangement_count_recurrence,
    hersh_reiner_dim,
    sphere_dim,
)
from .partitions import part_counts, partitions_of, specht_dim, syt_major_counts
from .ranges import (
    HypTriple,
    literature_ranges,
    ranges_from_cg,
    ranges_from_hyper,
    regularity_bound,
    t_bounds,
)
from .symchar import class_size, specht_character
from .witnesses import (
    KINDS,
    WitnessFamily,
    s_plus_i,
    sharpness_check,
    witness_character,
    witness_dim,
    witness_profile,
)

C4_DISPLAY = (
    "X4 + X3*X1 + binom(X2,2) + X2*binom(X1,2) + binom(X1,4) - X3 + 2*binom(X1,3) - X1"
)

Check = Iterator[tuple[str, bool]]


def suite_partitions(max_n: int) -> Check:
    for n in range(max_n + 1):
        parts = partitions_of(n)
        yield f"enumeration n={n}", [tuple(p) for p in parts] == oracles.partitions_by_filter(n)
        yield f"count n={n}", len(parts) == oracles.partition_count(n)
        yield f"sum of squared dims n={n}", sum(specht_dim(m) ** 2 for m in parts) == factorial(n)
        for mu in parts:
            yield f"hook length {list(mu)}", specht_dim(mu) == len(oracles.syt_by_permutation(mu))
            yield f"major index {list(mu)}", syt_major_counts(mu) == oracles.major_counts_brute(mu)


def suite_characters(max_n: int) -> Check:
    for n in range(max_n + 1):
        parts = partitions_of(n)
        brute = oracles.class_sizes_brute(n)
        yield f"class sizes n={n}", all(class_size(l) == brute[tuple(l)] for l in parts)
        for mu in parts:
            yield f"character table row {list(mu)}", all(
                specht_character(mu, l) == oracles.frobenius_character(mu, l) for l in parts
            )
        gram_ok = all(
            sum(class_size(l) * specht_character(a, l) * specht_character(b, l) for l in parts)
            == (factorial(n) if a == b else 0)
            for a in parts
            for b in parts
        )
        yield f"orthogonality n={n}", gram_ok


def suite_charpoly(max_n: int) -> Check:
    J = 5
    S, C = sym_series(J), coinv_series(J)
    yield "C^(4) display", render(C[4]) == C4_DISPLAY
    for n in range(max_n + 1):
        for lam in partitions_of(n):
            counts = part_counts(lam)
            yield f"trace identity {list(lam)}", all(
                evaluate(S[j], lam) == oracles.cycle_series_coeff(counts, j) for j in range(J + 1)
            )
    for j in range(J + 1):
        for n in range(j, max_n + 1):
            yield f"coinvariant character j={j} n={n}", all(
                evaluate(C[j], lam) == coinv_character_univariate(j, n)(lam)
                for lam in partitions_of(n)
            )
        if j >= 1:
            yield f"coinvariant character fails below j={j}", any(
                evaluate(C[j], lam) != coinv_character_univariate(j, n)(lam)
                for n in range(j)
                for lam in partitions_of(n)
            )
    x1, x2 = X(1), X(2)
    lhs = umbral_down((x1 - 1) ** 2 / 2 + (2 * x2 - 1) / 2)
    yield "umbral fixture", lhs == binom(x1 - 3, 2) + x2 + 2 * (x1 - 3)


def suite_ranges(max_n: int) -> Check:
    grid = range(-1, 21)
    yield "dominance", all(
        ranges_from_cg(HypTriple(c, g)).dominated_by(literature_ranges("cg", c=c, g=g))
        for c in grid
        for g in grid
    )
    yield "presentation bound", all(
        t_bounds(HypTriple(c, g))[1] - 1 == regularity_bound(HypTriple(c, g))
        for c in range(21)
        for g in grid
    )
    yield "degree-delta tuple", all(
        ranges_from_cg(HypTriple(2 * d - 2, d)).as_tuple()
        == (2 * d, 2 * d + 1, 2 * d - 1, 2 * d - 2, d, 2 * d)
        for d in range(1, 21)
    )
    yield "hyper ranges independent of theta_k1", all(
        len({ranges_from_hyper(t, u) for u in range(-1, t + 1)}) == 1 for t in range(1, 21)
    )


def suite_witnesses(max_n: int) -> Check:
    families = [WitnessFamily("I", g) for g in range(-1, 5)]
    families += [WitnessFamily(k, a) for k in ("T", "S") for a in range(5)]
    families += [WitnessFamily("V", g) for g in range(1, 5)]
    families += [s_plus_i(c, g) for c in range(5) for g in range(-(-c // 2) + 1)]
    for w in families:
        M = witness_profile(w).stable_ranges.M
        report = sharpness_check(w, specht=M + 1 <= max(max_n, 1))
        yield f"sharpness {w}", report.passed
    for kind in KINDS:
        for a in range(-1, 5):
            w = WitnessFamily(kind, a)
            yield f"dimension vs character {w}", all(
                witness_dim(w, n) == witness_character(w, n)((1,) * n) for n in range(max_n + 1)
            )


def suite_coinvariants(max_n: int) -> Check:
    for n in range(1, min(max_n, 5) + 1):
        top = n * (n - 1) // 2 + 1
        dims = coinv_graded_dims(n, 1, top)
        series = oracles.q_factorial(n) + [0] * (top + 1)
        yield f"univariate Hilbert series n={n}", all(dims[(k,)] == series[k] for k in range(top + 1))
        yield f"univariate total n={n}", sum(dims.values()) == factorial(n)
    if max_n >= 3:
        yield "diagonal total n=3", sum(coinv_graded_dims(3, 2, 4).values()) == 16
    for total in range(1, 5):
        for J in [(total,)] + [(a, total - a) for a in range(total + 1)]:
            counts = [orbit_count(J, n) for n in range(total + 3)]
            yield f"orbit stabilization {J}", (
                all(a <= b for a, b in zip(counts, counts[1:]))
                and len(set(counts[total:])) == 1
                and counts[total - 1] < counts[total]
            )
            yield f"orbit oracle {J}", all(
                counts[n] == oracles.vector_partitions(J, n) for n in range(len(counts))
            )
    for j in range(8):
        for n in range(8):
            ok = univariate_invariant_dim(j, n) == sum(
                1 for p in oracles.partitions_by_filter(j) if len(p) <= n
            )
            yield f"bounded partitions j={j} n={n}", ok


def suite_configuration(max_n: int) -> Check:
    for r in range(BRUTE_FORCE_DERANGEMENT_CAP):
        yield f"derangements r={r}", all(
            derangement_count_brute(r, ell) == derangement_count_recurrence(r, ell)
            for ell in range(r + 1)
        )
    for i in range(1, 5):
        yield f"Hersh-Reiner i={i}", all(
            hersh_reiner_dim(i, n) == (oracles.rising_product(n) + [0] * (i + 1))[i]
            for n in range(11)
        )
    yield "sphere", all(
        sphere_dim(n) == n * (n - 3) // 2 for n in range(3, 30)
    ) and all(sphere_dim(n) == specht_dim((n - 2, 2)) for n in range(4, 9))
    yield "sphere tuple", config_ranges(ConfigParams(4, 2, 3)).as_tuple() == (4, 5, 3, 2, 2, 4)
    ok = True
    for d in range(2, 9):
        for u in range(d - 1):
            for k in range(d - 1, 4 * d):
                R = config_ranges(ConfigParams(d, u, k))
                ok = ok and R == ranges_from_cg(HypTriple(2 * R.delta - 2, R.delta))
    yield "configuration tuples", ok


SUITES: dict[str, Callable[[int], Check]] = {
    "charpoly": suite_charpoly,
    "characters": suite_characters,
    "coinvariants": suite_coinvariants,
    "configuration": suite_configuration,
    "partitions": suite_partitions,
    "ranges": suite_ranges,
    "witnesses": suite_witnesses,
}


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: list = field(default_factory=list)

    @property
    def total(self) -> int:
        return self.passed + len(self.failed)

    def to_json(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "total": self.total, "failed": self.failed}


def run_verification(max_n: int = 6) -> list[SuiteResult]:
    """Run every suite, in suite-name order."""
    results = []
    for name in sorted(SUITES):
        res = SuiteResult(name)
        for label, ok in SUITES[name](max_n):
            if ok:
                res.passed += 1
            else:
                res.failed.append(label)
        results.append(res)
    return results
