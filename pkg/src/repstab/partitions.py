"""Integer partitions and standard Young tableaux.

Partitions are immutable tuples of positive parts in weakly decreasing
order; the empty tuple is the partition of 0.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator

from .errors import InvalidCharacteristic, PadTooSmall, SizeCapExceeded

SYT_CAP = 12


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        # trailing zeros are normalized away, anything else must be positive
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def first(self) -> int:
        """Largest part, 0 for the empty partition."""
        return self[0] if self else 0

    def conjugate(self) -> Partition:
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def to_json(self) -> list[int]:
        return list(self)

    @classmethod
    def from_json(cls, data: list[int]) -> Partition:
        return cls(data)


def _as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions_bounded(n, n))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in lexicographically decreasing order.

    >>> [list(p) for p in partitions_of(3)]
    [[3], [2, 1], [1, 1, 1]]
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_partitions_cached(n))


def pad(lam, n: int) -> Partition:
    """Return ``lam[n] = (n - |lam|, lam_1, lam_2, ...)``."""
    lam = _as_partition(lam)
    if n < lam.size + lam.first:
        raise PadTooSmall(
            f"pad({list(lam)}, {n}) needs n >= |lam| + lam_1 = {lam.size + lam.first}"
        )
    return Partition((n - lam.size,) + tuple(lam))


def unpad(mu) -> Partition:
    """Inverse of :func:`pad`: drop the first row."""
    mu = _as_partition(mu)
    return Partition(mu[1:])


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def check_characteristic(p: int) -> int:
    if p != 0 and not _is_prime(p):
        raise InvalidCharacteristic(f"characteristic must be 0 or prime, got {p}")
    return p


def is_regular(lam, p: int) -> bool:
    """True iff ``p == 0`` or no part of ``lam`` repeats ``p`` or more times."""
    check_characteristic(p)
    if p == 0:
        return True
    return all(m < p for m in Counter(_as_partition(lam)).values())


def part_counts(lam) -> dict[int, int]:
    """Map ``j -> a_j(lam)``, the number of parts equal to ``j``."""
    return dict(sorted(Counter(_as_partition(lam)).items(), reverse=True))


def hook_lengths(lam) -> list[list[int]]:
    lam = _as_partition(lam)
    conj = lam.conjugate()
    return [[lam[i] - j + conj[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


def specht_dim(mu) -> int:
    """Dimension of the Specht module by the hook length formula."""
    mu = _as_partition(mu)
    denom = 1
    for row in hook_lengths(mu):
        for h in row:
            denom *= h
    return factorial(mu.size) // denom


def standard_tableaux(mu) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield the standard Young tableaux of shape ``mu`` as row tuples."""
    mu = _as_partition(mu)
    n = mu.size
    rows: list[list[int]] = [[] for _ in mu]

    def fill(k: int):
        if k > n:
            yield tuple(tuple(r) for r in rows)
            return
        for i, r in enumerate(rows):
            if len(r) < mu[i] and (i == 0 or len(rows[i - 1]) > len(r)):
                r.append(k)
                yield from fill(k + 1)
                r.pop()

    yield from fill(1)


def descent_set(tableau) -> set[int]:
    """Entries ``i`` such that ``i + 1`` lies in a strictly lower row."""
    row_of = {v: i for i, row in enumerate(tableau) for v in row}
    n = len(row_of)
    return {i for i in range(1, n) if row_of[i + 1] > row_of[i]}


def major_index(tableau) -> int:
    return sum(descent_set(tableau))


@lru_cache(maxsize=None)
def _major_counts(mu: Partition) -> tuple[tuple[int, int], ...]:
    counts: Counter[int] = Counter(major_index(t) for t in standard_tableaux(mu))
    return tuple(sorted(counts.items()))


def syt_major_counts(mu, *, override_caps: bool = False) -> dict[int, int]:
    """Map ``j -> u^j(mu)``, the number of SYT of shape ``mu`` with major index ``j``."""
    mu = _as_partition(mu)
    if mu.size > SYT_CAP and not override_caps:
        raise SizeCapExceeded(f"|mu| = {mu.size} exceeds the tableau cap {SYT_CAP}")
    return dict(_major_counts(mu))
