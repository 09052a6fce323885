"""Diagonal invariants and coinvariant algebras of the symmetric groups.

Variables are ``x_{b,i}`` for a basis label ``b`` and ``i = 1..n``, and
``S_n`` permutes the index ``i``. The coinvariant algebra is the quotient by
the ideal generated by invariants of positive degree. Its graded pieces are
computed by exact row reduction.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Mapping, Sequence

from .errors import InvalidParams, SizeCapExceeded
from .linalg import rank
from .partitions import partitions_of, syt_major_counts
from .symchar import ClassFunction, _check_cap, irreducible_character, zero_character

ORBIT_CAP = 8
COINV_N_CAP = 5
COINV_VARS_CAP = 2
COINV_TOTAL_CAP = 12


@dataclass(frozen=True)
class MultiDegree:
    """A map from basis labels to natural numbers."""

    degrees: tuple  # ((label, degree), ...) sorted by label

    def __init__(self, degrees):
        if isinstance(degrees, MultiDegree):
            items = degrees.degrees
        elif isinstance(degrees, Mapping):
            items = tuple(sorted(degrees.items()))
        else:
            items = tuple(enumerate(degrees))
        if not items:
            raise InvalidParams("a multidegree needs a nonempty basis")
        if any(int(v) < 0 for _, v in items):
            raise InvalidParams("multidegree entries must be non-negative")
        object.__setattr__(self, "degrees", tuple((k, int(v)) for k, v in items))

    @property
    def total(self) -> int:
        return sum(v for _, v in self.degrees)

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.degrees)

    def to_json(self) -> list[int]:
        return list(self.as_tuple())


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def monomials(J: tuple[int, ...], n: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of multidegree ``J`` in ``len(J) * n`` variables, blocked by label."""
    blocks = [list(_compositions(d, n)) for d in J]
    return tuple(sum(choice, ()) for choice in product(*blocks))


def _canonical(mono: tuple[int, ...], n: int, nb: int) -> tuple:
    # the orbit of a monomial is determined by the multiset of its columns
    cols = [tuple(mono[b * n + i] for b in range(nb)) for i in range(n)]
    return tuple(sorted(cols))


@lru_cache(maxsize=None)
def orbit_sums(J: tuple[int, ...], n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """The ``S_n``-orbits of monomials of multidegree ``J``, each as a tuple of monomials."""
    orbits: dict = {}
    for m in monomials(J, n):
        orbits.setdefault(_canonical(m, n, len(J)), []).append(m)
    return tuple(tuple(v) for _, v in sorted(orbits.items()))


def orbit_count(J, n: int, *, override_caps: bool = False) -> int:
    """Number of ``S_n``-orbits of monomials of multidegree ``J``; the rank of the invariants in degree ``J``."""
    J = MultiDegree(J)
    if not override_caps and (J.total > ORBIT_CAP or n > ORBIT_CAP):
        raise SizeCapExceeded(f"orbit counting is capped at |J| <= {ORBIT_CAP}, n <= {ORBIT_CAP}")
    if n < 0:
        raise InvalidParams("n must be non-negative")
    return len(orbit_sums(J.as_tuple(), n))


@lru_cache(maxsize=None)
def _partitions_at_most(j: int, parts: int) -> int:
    if j == 0:
        return 1
    if parts == 0:
        return 0
    # either fewer than `parts` parts, or subtract 1 from each of exactly `parts` parts
    return _partitions_at_most(j, parts - 1) + (_partitions_at_most(j - parts, parts) if j >= parts else 0)


def univariate_invariant_dim(j: int, n: int) -> int:
    """Partitions of ``j`` into at most ``n`` parts."""
    if j < 0 or n < 0:
        raise InvalidParams("j and n must be non-negative")
    return _partitions_at_most(j, n)


def _sub_degrees(J: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    for I in product(*(range(d + 1) for d in J)):
        if any(I):
            yield I


def coinv_dim(J: Sequence[int], n: int) -> int:
    """Dimension of the degree-``J`` piece of the diagonal coinvariant algebra on ``n`` points."""
    J = tuple(J)
    basis = monomials(J, n)
    size = len(basis)

    def rows():
        for I in sorted(_sub_degrees(J), key=lambda I: (sum(I), I)):
            rest = tuple(a - b for a, b in zip(J, I))
            for orbit in orbit_sums(I, n):
                for m in monomials(rest, n):
                    yield {tuple(x + y for x, y in zip(m, o)): 1 for o in orbit}

    return size - rank(rows(), full=size)


def _check_coinv_caps(n: int, nb: int, bound: int, override_caps: bool) -> None:
    if n < 0 or nb < 1 or bound < 0:
        raise InvalidParams("need n >= 0, at least one variable set, bound >= 0")
    if override_caps:
        return
    if n > COINV_N_CAP or nb > COINV_VARS_CAP or bound > COINV_TOTAL_CAP:
        raise SizeCapExceeded(
            f"coinvariant oracle is capped at n <= {COINV_N_CAP}, vars <= {COINV_VARS_CAP}, "
            f"total degree <= {COINV_TOTAL_CAP}"
        )


def coinv_graded_dims(n: int, B_size: int, J_bound: int, *,
                      override_caps: bool = False) -> dict[tuple[int, ...], int]:
    """Dimensions of every multidegree piece with total degree ``<= J_bound``.

    Keys are multidegrees as tuples of length ``B_size``, in graded lexicographic order.
    """
    _check_coinv_caps(n, B_size, J_bound, override_caps)
    out = {}
    for total in range(J_bound + 1):
        for J in sorted(_fixed_total(total, B_size), reverse=True):
            out[J] = coinv_dim(J, n)
    return out


def _fixed_total(total: int, parts: int) -> list[tuple[int, ...]]:
    return list(_compositions(total, parts))


def coinv_total_dim(n: int, B_size: int, *, override_caps: bool = False) -> int:
    """Total dimension, stopping at the first total degree whose pieces all vanish.

    The quotient is generated by its degree-0 piece, so one vanishing layer forces all later layers to vanish.
    """
    total, degree = 0, 0
    while True:
        _check_coinv_caps(n, B_size, degree, override_caps)
        layer = sum(coinv_dim(J, n) for J in _fixed_total(degree, B_size))
        if layer == 0:
            return total
        total += layer
        degree += 1


def coinv_character_univariate(j: int, n: int, *, override_caps: bool = False) -> ClassFunction:
    """``sum_mu u^j(mu) chi^mu``: the character of the degree-``j`` coinvariants on ``n`` points."""
    if j < 0:
        raise InvalidParams("j must be non-negative")
    _check_cap(n, override_caps)
    total = zero_character(n)
    for mu in partitions_of(n):
        u = syt_major_counts(mu, override_caps=override_caps).get(j, 0)
        if u:
            total = total + irreducible_character(mu).scale(u)
    return total
