"""Closed-form regularity bounds and six-coordinate stable-range tuples.

A :class:`StableRanges` value ``(t0, t1, A, hmax, delta, M)`` packages
surjectivity/injectivity degrees, the onset of the additive description,
the local degree, the polynomial degree, and the Specht-stability onset.
"""
from __future__ import annotations

from dataclasses import astuple, dataclass, fields
from typing import Optional, Sequence

from .errors import InvalidParams, NotStrictlyIncreasing, ParamOutOfTheoremRange, ZeroDegree
from .partitions import check_characteristic


def _ceil_half(c: int) -> int:
    return -(-c // 2)


@dataclass(frozen=True)
class StableRanges:
    """The tuple ``(t0, t1, A, hmax, delta, M)``.

    ``M`` is ``None`` when it is undetermined (literature tuples only).
    """

    t0: int
    t1: int
    A: int
    hmax: int
    delta: int
    M: Optional[int]

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if v is None and f.name == "M":
                continue
            if not isinstance(v, int) or v < -1:
                raise InvalidParams(f"{f.name} = {v!r} must be an integer >= -1")
        if self.A < max(0, 2 * self.delta - 1):
            raise InvalidParams(f"A = {self.A} must be >= max(0, 2*delta - 1)")
        if self.M is not None and self.M < 0:
            raise InvalidParams(f"M = {self.M} must be >= 0")

    def as_tuple(self) -> tuple:
        return astuple(self)

    def to_json(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_json(cls, data: dict) -> StableRanges:
        return cls(**{f.name: data[f.name] for f in fields(cls)})

    def dominated_by(self, other: StableRanges) -> bool:
        """Coordinatewise ``<=`` on the first five coordinates, and on ``M`` when both are known."""
        a, b = self.as_tuple(), other.as_tuple()
        if any(x > y for x, y in zip(a[:5], b[:5])):
            return False
        return a[5] is None or b[5] is None or a[5] <= b[5]


@dataclass(frozen=True)
class HypTriple:
    """Local degree bound ``c`` and stable degree bound ``g``."""

    c: int
    g: int

    def __post_init__(self):
        if self.c < -1 or self.g < -1:
            raise InvalidParams(f"need c, g >= -1, got c={self.c}, g={self.g}")

    def to_json(self) -> dict:
        return {"c": self.c, "g": self.g}


def _triple(t) -> HypTriple:
    if isinstance(t, HypTriple):
        return t
    return HypTriple(*t)


def max_regularity(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise InvalidParams("a and b must be non-negative")
    return a + b - 1 if a < b else 2 * b - 2


def regularity_bound(t) -> int:
    c, g = astuple(_triple(t))
    if c == -1:
        return -2
    if g == -1:
        return c
    if g <= _ceil_half(c):
        return c + 1
    return g + c // 2 + 1


def t_bounds(t) -> tuple[int, int]:
    """Bounds on the generation and presentation degrees ``(t0, t1)``."""
    c, g = astuple(_triple(t))
    if c == -1:
        return g, -1
    if g == -1:
        return c, c + 1
    if g <= _ceil_half(c):
        return c + 1, c + 2
    return g + c // 2 + 1, g + c // 2 + 2


def complex_generation_bound(g_prev: int, g_k: int) -> int:
    if g_prev < 0 or g_k < 0:
        raise InvalidParams("generation degrees must be non-negative")
    return g_prev + g_k + 1 if g_k > g_prev else 2 * g_k


def ranges_from_cg(t) -> StableRanges:
    c, g = astuple(_triple(t))
    if c == -1:
        return StableRanges(g, -1, max(0, 2 * g - 1), -1, g, max(0, 2 * g))
    if g == -1:
        return StableRanges(c, c + 1, c + 1, c, -1, c + 1)
    if g <= _ceil_half(c):
        return StableRanges(c + 1, c + 2, c + 1, c, g, c + 1)
    base = g + c // 2
    return StableRanges(base + 1, base + 2, 2 * g - 1, c, g, 2 * g)


@dataclass(frozen=True)
class HyperInvariants:
    """Bounds on the invariants of ``H_k`` of a complex from its hyperhomology degrees."""

    theta_k: int
    theta_k1: int
    is_zero: bool
    delta_bound: int
    t0_bound: int
    hmax_bound: int
    reg_bound: int

    def h_bound(self, j: int) -> int:
        """Bound on the ``j``-th local cohomology degree ``h^j``."""
        if j < 0:
            raise InvalidParams("j must be non-negative")
        if self.is_zero:
            return -1
        n = max(self.theta_k, self.theta_k1)
        if j == 0:
            return max(-1, 2 * n - 2)
        if j == 1:
            return max(-1, 2 * n - 4)
        return max(-1, 2 * self.theta_k - 2 * j + 2)

    def to_json(self) -> dict:
        out = {f.name: getattr(self, f.name) for f in fields(self)}
        out["h_bounds"] = [self.h_bound(j) for j in range(3)]
        return out


def hyper_invariants(theta_k: int, theta_k1: int) -> HyperInvariants:
    if theta_k < -1 or theta_k1 < -1:
        raise InvalidParams("hyperhomology degrees must be >= -1")
    if theta_k == -1:
        return HyperInvariants(theta_k, theta_k1, True, -1, -1, -1, -2)
    n = max(theta_k, theta_k1)
    reg = 2 * n - 2 if theta_k == 0 else max(2 * theta_k, 2 * n - 2)
    return HyperInvariants(
        theta_k, theta_k1, False, theta_k, 2 * theta_k, max(-1, 2 * n - 2), reg
    )


def ranges_from_hyper(theta_k: int, theta_k1: int) -> StableRanges:
    if theta_k < 0 or theta_k1 < -1:
        raise InvalidParams("need theta_k >= 0 and theta_k1 >= -1")
    if theta_k == 0 and theta_k1 == 0:
        return StableRanges(0, -1, 0, -1, 0, 0)
    if theta_k >= max(1, theta_k1):
        t = theta_k
        return StableRanges(2 * t, 2 * t + 1, 2 * t - 1, 2 * t - 2, t, 2 * t)
    if theta_k < theta_k1:
        t, u = theta_k, theta_k1
        return StableRanges(2 * t, 2 * u - 1, 2 * u - 1, 2 * u - 2, t, 2 * u - 1)
    raise ParamOutOfTheoremRange(
        f"(theta_k, theta_k1) = ({theta_k}, {theta_k1}) matches no case of the hyperhomology ranges"
    )


def ranges_from_hyper_chain(theta: Sequence[int], k: int) -> StableRanges:
    """Ranges for ``H_k`` when the hyperhomology degrees form a strictly increasing sequence."""
    theta = list(theta)
    if any(b <= a for a, b in zip(theta, theta[1:])):
        raise NotStrictlyIncreasing(f"theta = {theta} is not strictly increasing")
    if not theta or theta[0] < 0:
        raise InvalidParams("theta must be non-empty with theta_0 >= 0")
    if not 0 <= k < len(theta) - 1:
        raise InvalidParams(f"need 0 <= k < {len(theta) - 1}, got k = {k}")
    t, u = theta[k], theta[k + 1]
    if 2 * t + 1 < u:
        return StableRanges(2 * t, u, 2 * t + u, 2 * t + u - 1, t, 2 * t + u)
    if k == 0:
        return StableRanges(u - 1, u, 2 * u - 1, 2 * u - 2, t, 2 * u - 1)
    return StableRanges(2 * t, 2 * t + 1, 2 * u - 1, 2 * u - 2, t, 2 * u - 1)


def stable_ranges_of_degree(delta: int) -> StableRanges:
    """``(2d, 2d+1, 2d-1, 2d-2, d, 2d)``, shared by coinvariant and configuration-space modules."""
    if delta < 1:
        raise InvalidParams("delta must be >= 1")
    d = delta
    return StableRanges(2 * d, 2 * d + 1, 2 * d - 1, 2 * d - 2, d, 2 * d)


def ranges_coinv(total_degree: int) -> StableRanges:
    if total_degree < 0:
        raise InvalidParams("total degree must be non-negative")
    if total_degree == 0:
        raise ZeroDegree("the multidegree must have positive total degree")
    return stable_ranges_of_degree(total_degree)


def ranges_congruence(s: int, k: int) -> StableRanges:
    """Ranges for the ``k``-th homology of congruence subgroups over a ring of stable rank ``s``.

    ``k = 0`` gives the constant module.
    """
    if s < 1 or k < 0:
        raise InvalidParams("need s >= 1 and k >= 0")
    if k == 0:
        return StableRanges(0, -1, 0, -1, 0, 0)
    if k == 1:
        return StableRanges(s + 1, s + 3, 2 * s + 4, 2 * s + 3, 2, 2 * s + 4)
    if k == 2:
        return StableRanges(2 * s + 5, 2 * s + 6, 2 * s + 9, 2 * s + 8, 4, 2 * s + 9)
    b = 4 * k + 2 * s
    return StableRanges(b - 2, b - 1, b + 1, b, 2 * k, b + 1)


def _literature_M(value: int, char_floor: int, characteristic: Optional[int]) -> Optional[int]:
    if characteristic is None:
        return None
    p = check_characteristic(characteristic)
    return value if p == 0 or p >= char_floor else None


def literature_ranges(kind: str, *, c=None, g=None, s=None, k=None,
                      characteristic: Optional[int] = None) -> StableRanges:
    """Previously known ranges, for comparison.

    ``M`` is ``None`` unless a field characteristic is supplied and is zero or
    large enough. Negative values of ``A`` and ``M`` (only at ``c = -1``) are
    clamped to 0, which is the same condition on ``n >= 0``.
    """
    if kind == "cg":
        t = HypTriple(c, g)
        c, g = t.c, t.g
        m = _literature_M(max(0, 2 * g + 4 * c + 4), 2 * g + 4 * c + 5, characteristic)
        a = max(0, 2 * g + 4 * c + 3, 2 * g - 1)
        return StableRanges(g + c + 1, g + 2 * c + 2, a, c, g, m)
    if kind == "congruence":
        if s is None or k is None or s < 1 or k < 1:
            raise InvalidParams("literature congruence ranges need s >= 1 and k >= 1")
        if k == 1:
            m = _literature_M(2 * s + 7, 2 * s + 8, characteristic)
            return StableRanges(s + 1, s + 3, 2 * s + 5, 2 * s + 3, 2, m)
        if k == 2:
            m = _literature_M(4 * s + 13, 4 * s + 14, characteristic)
            return StableRanges(2 * s + 5, 2 * s + 6, 4 * s + 11, 4 * s + 10, 4, m)
        m = _literature_M(8 * k + 4 * s + 9, 8 * k + 4 * s + 10, characteristic)
        return StableRanges(
            4 * k + 2 * s - 1, 4 * k + 2 * s + 4, 8 * k + 4 * s + 7, 8 * k + 4 * s + 2, 2 * k, m
        )
    raise InvalidParams(f"unknown literature kind {kind!r}")
