"""Ordinary characters of the symmetric groups over the rationals.

Characters are computed with the Murnaghan-Nakayama rule on beta-sets and
kept as exact integers; class functions carry exact :class:`~fractions.Fraction`
values.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial, prod

from .errors import NotVirtualCharacter, SizeCapExceeded, SizeMismatch
from .partitions import Partition, _as_partition, part_counts, partitions_of

ORACLE_CAP = 8


def _check_cap(n: int, override_caps: bool) -> None:
    if n > ORACLE_CAP and not override_caps:
        raise SizeCapExceeded(
            f"n = {n} exceeds the character oracle cap {ORACLE_CAP} (use override_caps)"
        )


def centralizer_order(lam) -> int:
    """``z_lam = prod_j j^{a_j} a_j!``."""
    return prod(j**a * factorial(a) for j, a in part_counts(lam).items())


def class_size(lam) -> int:
    """Number of permutations of cycle type ``lam`` in its symmetric group."""
    lam = _as_partition(lam)
    return factorial(lam.size) // centralizer_order(lam)


@lru_cache(maxsize=None)
def _mn(mu: tuple[int, ...], lam: tuple[int, ...]) -> int:
    if not lam:
        return 1 if not mu else 0
    k, rest = lam[0], lam[1:]
    length = len(mu)
    beta = [mu[i] + length - 1 - i for i in range(length)]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in beads:
            continue
        crossed = sum(1 for c in beads if target < c < b)
        moved = sorted((beads - {b}) | {target}, reverse=True)
        parts = tuple(x - (length - 1 - i) for i, x in enumerate(moved))
        new_mu = tuple(p for p in parts if p > 0)
        total += (-1) ** crossed * _mn(new_mu, rest)
    return total


def specht_character(mu, lam) -> int:
    """The irreducible character ``chi^mu`` evaluated at cycle type ``lam``."""
    mu, lam = _as_partition(mu), _as_partition(lam)
    if mu.size != lam.size:
        raise SizeMismatch(f"|mu| = {mu.size} but |lam| = {lam.size}")
    return _mn(tuple(mu), tuple(lam))


@dataclass(frozen=True)
class ClassFunction:
    """A rational-valued class function on the symmetric group of degree ``n``.

    Absent cycle types are stored explicitly as zero after construction.
    """

    n: int
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        full = {lam: Fraction(0) for lam in partitions_of(self.n)}
        for key, val in self.values.items():
            lam = _as_partition(key)
            if lam.size != self.n:
                raise SizeMismatch(f"cycle type {list(lam)} is not a partition of {self.n}")
            full[lam] = Fraction(val)
        object.__setattr__(self, "values", full)

    def __call__(self, lam) -> Fraction:
        return self.values[_as_partition(lam)]

    def __add__(self, other: ClassFunction) -> ClassFunction:
        if other.n != self.n:
            raise SizeMismatch("class functions on different symmetric groups")
        return ClassFunction(self.n, {k: v + other.values[k] for k, v in self.values.items()})

    def __sub__(self, other: ClassFunction) -> ClassFunction:
        return self + other.scale(-1)

    def scale(self, c) -> ClassFunction:
        return ClassFunction(self.n, {k: c * v for k, v in self.values.items()})

    def is_zero(self) -> bool:
        return not any(self.values.values())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "values": [
                {"cycle_type": list(lam), "value": str(val)} for lam, val in self.values.items()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> ClassFunction:
        return cls(
            int(data["n"]),
            {Partition(e["cycle_type"]): Fraction(e["value"]) for e in data["values"]},
        )


def zero_character(n: int) -> ClassFunction:
    return ClassFunction(n)


def trivial_character(n: int) -> ClassFunction:
    return ClassFunction(n, {lam: 1 for lam in partitions_of(n)})


def irreducible_character(mu) -> ClassFunction:
    mu = _as_partition(mu)
    return ClassFunction(mu.size, {lam: specht_character(mu, lam) for lam in partitions_of(mu.size)})


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    """The standard inner product; characters are real so no conjugation is needed."""
    if f.n != g.n:
        raise SizeMismatch("class functions on different symmetric groups")
    total = sum(class_size(lam) * f(lam) * g(lam) for lam in partitions_of(f.n))
    return Fraction(total, factorial(f.n))


def decompose_class_function(f: ClassFunction, *, override_caps: bool = False) -> dict[Partition, int]:
    """Multiplicities of the irreducible characters in ``f``; zeros are omitted."""
    _check_cap(f.n, override_caps)
    out = {}
    for mu in partitions_of(f.n):
        m = inner_product(f, irreducible_character(mu))
        if m.denominator != 1:
            raise NotVirtualCharacter(f"<f, chi^{list(mu)}> = {m} is not an integer")
        if m:
            out[mu] = int(m)
    return out


def recompose(n: int, multiplicities: dict) -> ClassFunction:
    """``sum m(mu) chi^mu`` as a class function on S_n."""
    total = zero_character(n)
    for mu, m in multiplicities.items():
        total = total + irreducible_character(mu).scale(m)
    return total


def permutation_of_type(lam) -> list[int]:
    """A permutation of ``{0, ..., n-1}`` (as an image list) with cycle type ``lam``."""
    lam = _as_partition(lam)
    perm = list(range(lam.size))
    start = 0
    for part in lam:
        for i in range(part):
            perm[start + i] = start + (i + 1) % part
        start += part
    return perm


def induced_trivial_character(g: int, n: int, *, override_caps: bool = False) -> ClassFunction:
    """Permutation character of S_n acting on the ``g``-element subsets of an ``n``-set.

    Values are obtained by counting stable subsets directly.
    """
    if not 0 <= g <= n:
        raise ValueError(f"need 0 <= g <= n, got g={g}, n={n}")
    _check_cap(n, override_caps)
    values = {}
    for lam in partitions_of(n):
        sigma = permutation_of_type(lam)
        values[lam] = sum(
            1 for subset in combinations(range(n), g) if {sigma[i] for i in subset} == set(subset)
        )
    return ClassFunction(n, values)
