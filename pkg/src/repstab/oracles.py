"""Independent brute-force oracles.

Nothing here calls the main algorithms: partitions come from filtering
compositions, characters from the Frobenius formula, series from direct
integer power-series products.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from math import comb, factorial


def compositions(n: int):
    """All compositions of ``n`` into positive parts."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def partitions_by_filter(n: int) -> list[tuple[int, ...]]:
    """Weakly decreasing compositions, in lexicographically decreasing order."""
    parts = [c for c in compositions(n) if all(a >= b for a, b in zip(c, c[1:]))]
    return sorted(parts, reverse=True)


@lru_cache(maxsize=None)
def partition_count(n: int, largest: int | None = None) -> int:
    """Partitions of ``n`` with parts at most ``largest``."""
    if largest is None:
        largest = n
    if n == 0:
        return 1
    if largest == 0:
        return 0
    return partition_count(n, largest - 1) + (partition_count(n - largest, largest) if n >= largest else 0)


def _cells(shape):
    return [(i, j) for i, row in enumerate(shape) for j in range(row)]


def syt_by_permutation(shape) -> list[dict]:
    """Standard tableaux as ``cell -> entry`` maps, by filtering all fillings."""
    cells = _cells(shape)
    out = []
    for perm in permutations(range(1, len(cells) + 1)):
        t = dict(zip(cells, perm))
        if all(
            (j == 0 or t[(i, j - 1)] < v) and (i == 0 or t[(i - 1, j)] < v)
            for (i, j), v in t.items()
        ):
            out.append(t)
    return out


def major_counts_brute(shape) -> dict[int, int]:
    counts: dict[int, int] = {}
    for t in syt_by_permutation(shape):
        row = {v: i for (i, _), v in t.items()}
        maj = sum(k for k in range(1, len(row)) if row[k + 1] > row[k])
        counts[maj] = counts.get(maj, 0) + 1
    return dict(sorted(counts.items()))


def cycle_type(perm) -> tuple[int, ...]:
    seen, lengths = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        length, j = 0, i
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def class_sizes_brute(n: int) -> dict[tuple[int, ...], int]:
    sizes: dict[tuple[int, ...], int] = {}
    for perm in permutations(range(n)):
        ct = cycle_type(perm)
        sizes[ct] = sizes.get(ct, 0) + 1
    return sizes


def _perm_sign(perm) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def _power_sum_coeff(parts: tuple[int, ...], target: tuple[int, ...]) -> int:
    # coefficient of x^target in prod_i (x_1^{p_i} + ... + x_l^{p_i})
    if any(t < 0 for t in target):
        return 0
    if not parts:
        return int(not any(target))
    head, rest = parts[0], parts[1:]
    total = 0
    for v in range(len(target)):
        if target[v] >= head:
            nxt = target[:v] + (target[v] - head,) + target[v + 1:]
            total += _power_sum_coeff(rest, nxt)
    return total


def frobenius_character(shape, ctype) -> int:
    """``chi^shape(ctype)`` as the coefficient of ``x^{shape + rho}`` in ``a_rho * p_ctype``."""
    ell = len(shape)
    if ell == 0:
        return int(sum(ctype) == 0)
    rho = tuple(range(ell - 1, -1, -1))
    goal = tuple(s + r for s, r in zip(shape, rho))
    total = 0
    for perm in permutations(range(ell)):
        shifted = tuple(rho[perm[i]] for i in range(ell))
        target = tuple(g - s for g, s in zip(goal, shifted))
        c = _power_sum_coeff(tuple(ctype), target)
        if c:
            total += _perm_sign(perm) * c
    return total


def _mul_series(a: list[int], b: list[int], order: int) -> list[int]:
    out = [0] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x:
            for j, y in enumerate(b[: order + 1 - i]):
                out[i + j] += x * y
    return out


def cycle_series_coeff(counts: dict[int, int], j: int) -> int:
    """``[t^j] prod_i (1 - t^i)^(-a_i)`` by multiplying geometric series."""
    series = [1] + [0] * j
    for i, a in counts.items():
        geom = [1 if m % i == 0 else 0 for m in range(j + 1)]
        for _ in range(a):
            series = _mul_series(series, geom, j)
    return series[j]


def q_factorial(n: int) -> list[int]:
    """Coefficients of ``prod_{i=1}^n (1 + q + ... + q^{i-1})``."""
    series = [1]
    for i in range(1, n + 1):
        series = _mul_series(series, [1] * i, len(series) + i - 2)
    return series


def rising_product(n: int) -> list[int]:
    """Coefficients of ``prod_{m=1}^{n-1} (1 + m t)``."""
    series = [1]
    for m in range(1, n):
        series = _mul_series(series, [1, m], len(series))
    return series


def stars_and_bars(n: int, j: int) -> int:
    """Monomials of degree ``j`` in ``n`` variables."""
    return comb(n + j - 1, j) if n > 0 else int(j == 0)


def vector_partitions(J: tuple[int, ...], n: int) -> int:
    """Multisets of at most ``n`` nonzero vectors in ``N^len(J)`` summing to ``J``."""
    vectors = [v for v in product(*(range(d + 1) for d in J)) if any(v)]
    vectors.sort()

    @lru_cache(maxsize=None)
    def count(rest: tuple[int, ...], slots: int, start: int) -> int:
        if not any(rest):
            return 1
        if slots == 0:
            return 0
        total = 0
        for idx in range(start, len(vectors)):
            v = vectors[idx]
            if all(a <= b for a, b in zip(v, rest)):
                total += count(tuple(b - a for a, b in zip(v, rest)), slots - 1, idx)
        return total

    return count(tuple(J), n, 0)


def regular_character_value(ctype) -> int:
    n = sum(ctype)
    return factorial(n) if all(p == 1 for p in ctype) else 0
