"""Ordered configuration spaces of manifolds: generation degrees and dimension formulas.

Topological input (dimension ``d``, connectivity ``u``, whether the
manifold is a surface other than a sphere minus a closed set) is asserted by
the caller; nothing here decides topology.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import comb

from .errors import InvalidParams, LowDegreeRegime
from .ranges import StableRanges, stable_ranges_of_degree

BRUTE_FORCE_DERANGEMENT_CAP = 9


@dataclass(frozen=True)
class ConfigParams:
    """``d``: manifold dimension; ``u``: connectivity; ``k``: cohomological degree.

    ``plane_exception`` asserts ``d = 2`` and that the manifold is not the
    2-sphere minus a closed set.
    """

    d: int
    u: int
    k: int
    plane_exception: bool = False

    def __post_init__(self):
        if self.d < 2:
            raise InvalidParams(f"manifold dimension must be >= 2, got d={self.d}")
        if not 0 <= self.u <= self.d - 2:
            raise InvalidParams(f"connectivity must satisfy 0 <= u <= d-2, got u={self.u}, d={self.d}")
        if self.k < 0:
            raise InvalidParams("degree k must be non-negative")
        if self.plane_exception and self.d != 2:
            raise InvalidParams("plane_exception requires d = 2")


def config_delta(p: ConfigParams) -> int:
    """Generation degree bound ``delta_k`` for ``H^k`` of the ordered configuration spaces.

    With ``k = q (d-1) + r``, ``0 <= r < d-1``::

        floor(k / (u+1))   if u+1 < d/2
        2q + 1             if d/2 <= u+1 <= r
        2q                 if u+1 >= max(d/2, r+1)

    and ``2k - 1`` under the plane exception. Special readings:

    * ``u = 0`` gives ``k`` for ``d >= 3`` and ``2k`` for ``d = 2``;
    * ``d = 2u + 2`` gives ``2q`` for ``r <= u`` and ``2q + 1`` otherwise;
    * ``u + 1 > d/2`` forces the manifold to be ``(d-2)``-connected, and
      ``u = d - 2`` gives ``2 floor(k / (d-1))``.
    """
    d, u, k = p.d, p.u, p.k
    if k < d - 1:
        raise LowDegreeRegime(
            f"k = {k} < d-1 = {d - 1}: in this range H^k of the configuration space is "
            "isomorphic to H^k(M^n) and no generation bound is computed"
        )
    if p.plane_exception:
        return 2 * k - 1
    q, r = divmod(k, d - 1)
    if 2 * (u + 1) < d:
        return k // (u + 1)
    if u + 1 <= r:
        return 2 * q + 1
    return 2 * q


def config_ranges(p: ConfigParams) -> StableRanges:
    return stable_ranges_of_degree(config_delta(p))


@lru_cache(maxsize=None)
def _derangements_by_cycles(r: int) -> dict[int, int]:
    counts: dict[int, int] = {}
    for perm in permutations(range(r)):
        if any(perm[i] == i for i in range(r)):
            continue
        seen, cycles = [False] * r, 0
        for i in range(r):
            if not seen[i]:
                cycles += 1
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
        counts[cycles] = counts.get(cycles, 0) + 1
    return counts


def derangement_count_brute(r: int, ell: int) -> int:
    """``D(r, ell)`` by enumerating the permutations of ``r`` letters."""
    if r < 0 or ell < 0:
        raise InvalidParams("r and ell must be non-negative")
    if r > BRUTE_FORCE_DERANGEMENT_CAP:
        raise InvalidParams(f"brute-force enumeration is limited to r <= {BRUTE_FORCE_DERANGEMENT_CAP}")
    return _derangements_by_cycles(r).get(ell, 0)


@lru_cache(maxsize=None)
def derangement_count_recurrence(r: int, ell: int) -> int:
    """``D(r, ell) = (r-1) (D(r-2, ell-1) + D(r-1, ell))`` with ``D(0, 0) = 1``."""
    if r < 0 or ell < 0:
        return 0
    if r == 0:
        return int(ell == 0)
    return (r - 1) * (derangement_count_recurrence(r - 2, ell - 1) + derangement_count_recurrence(r - 1, ell))


def derangement_count(r: int, ell: int) -> int:
    """Fixed-point-free permutations of ``r`` letters with exactly ``ell`` cycles."""
    if r < 0 or ell < 0:
        raise InvalidParams("r and ell must be non-negative")
    if r <= BRUTE_FORCE_DERANGEMENT_CAP:
        return derangement_count_brute(r, ell)
    return derangement_count_recurrence(r, ell)


def hersh_reiner_dim(i: int, n: int) -> int:
    """``sum_{r=i+1}^{2i} D(r, r-i) binom(n, r)``: the Betti number in degree ``i(d-1)`` for Euclidean space."""
    if i < 1 or n < 0:
        raise InvalidParams("need i >= 1 and n >= 0")
    return sum(derangement_count(r, r - i) * comb(n, r) for r in range(i + 1, 2 * i + 1))


def euclidean_sharp_ranges(i: int, d: int) -> StableRanges:
    """Sharp ranges of ``H^{i(d-1)}`` for Euclidean ``d``-space; ``M`` depends on the parity of ``d``."""
    if i < 1 or d < 2:
        raise InvalidParams("need i >= 1 and d >= 2")
    return StableRanges(2 * i, -1, 4 * i - 1, -1, 2 * i, 3 * i + (d % 2 == 0))


def sphere_dim(n: int) -> int:
    """Dimension of ``H^{d-1}`` for ``n`` points on an even-dimensional sphere."""
    if n < 0:
        raise InvalidParams("n must be non-negative")
    return comb(n - 1, 2) - 1 if n >= 3 else 0
