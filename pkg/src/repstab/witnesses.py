"""The witness families ``I(g)``, ``T(c)``, ``S(c)``, ``V(g)`` and their sums.

A family is represented by its dimension sequence, its character sequence,
and its homological profile. Transition maps are never materialized.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable, Optional

from .errors import InvalidParams, ParamOutOfTheoremRange
from .partitions import Partition, pad, unpad
from .polyfit import additive_eval, additive_fit, newton_eval, newton_fit
from .ranges import HypTriple, StableRanges, _ceil_half, ranges_from_cg
from .symchar import (
    ClassFunction,
    _check_cap,
    decompose_class_function,
    induced_trivial_character,
    irreducible_character,
    trivial_character,
    zero_character,
)

KINDS = ("I", "T", "S", "V")
COORDS = ("t0", "t1", "A", "hmax", "delta", "M")


@dataclass(frozen=True)
class WitnessFamily:
    kind: str
    param: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidParams(f"unknown family {self.kind!r}; expected one of {', '.join(KINDS)}")
        if self.param < -1:
            raise InvalidParams(f"parameter must be >= -1, got {self.param}")

    def __str__(self) -> str:
        return f"{self.kind}({self.param})"


@dataclass(frozen=True)
class DirectSum:
    """A direct sum of witness families; dimensions, characters and ``t_i`` combine summand-wise."""

    parts: tuple

    def __str__(self) -> str:
        return " + ".join(str(p) for p in self.parts)


def s_plus_i(c: int, g: int) -> DirectSum:
    """``S(c) + I(g)``, the witness for ``0 <= g <= ceil(c/2)``."""
    return DirectSum((WitnessFamily("S", c), WitnessFamily("I", g)))


def witness_dim(w, n: int) -> int:
    if n < 0:
        raise InvalidParams("n must be non-negative")
    if isinstance(w, DirectSum):
        return sum(witness_dim(p, n) for p in w.parts)
    k, a = w.kind, w.param
    if k == "I":
        return comb(n, a) if a >= 0 else 0
    if k == "T":
        return int(n == a)
    if k == "S":
        return int(n > a)
    if a <= 0 or n <= 2 * a - 2:
        return 0
    num = (n - 2 * a + 1) * comb(n, a - 1)
    assert num % a == 0
    return num // a


def witness_character(w, n: int, *, override_caps: bool = False) -> ClassFunction:
    _check_cap(n, override_caps)
    if isinstance(w, DirectSum):
        total = zero_character(n)
        for p in w.parts:
            total = total + witness_character(p, n, override_caps=override_caps)
        return total
    k, a = w.kind, w.param
    if k == "I":
        if 0 <= a <= n:
            return induced_trivial_character(a, n, override_caps=override_caps)
        return zero_character(n)
    if k == "T":
        return trivial_character(n) if n == a else zero_character(n)
    if k == "S":
        return trivial_character(n) if n > a else zero_character(n)
    if a >= 1 and n >= 2 * a:
        return irreducible_character(pad((a,), n))
    return zero_character(n)


def _t_function(w) -> Callable[[int], int]:
    if isinstance(w, DirectSum):
        fs = [_t_function(p) for p in w.parts]
        return lambda i: max(f(i) for f in fs)
    k, a = w.kind, w.param
    if k == "I":
        return lambda i: a if i == 0 else -1
    if k == "T":
        return lambda i: i + a
    if k == "S":
        return lambda i: i + a + 1
    return lambda i: i + 2 * a


def _check_range(w) -> None:
    if isinstance(w, DirectSum):
        for p in w.parts:
            _check_range(p)
        return
    k, a = w.kind, w.param
    if k in ("T", "S") and a < 0:
        raise ParamOutOfTheoremRange(f"{w} needs c >= 0")
    if k == "V" and a < 1:
        raise ParamOutOfTheoremRange(f"{w} needs g >= 1")


def _hyp_triple(w) -> HypTriple:
    if isinstance(w, DirectSum):
        ts = [_hyp_triple(p) for p in w.parts]
        return HypTriple(max(t.c for t in ts), max(t.g for t in ts))
    k, a = w.kind, w.param
    return {
        "I": lambda: HypTriple(-1, a),
        "T": lambda: HypTriple(a, -1),
        "S": lambda: HypTriple(a, 0),
        "V": lambda: HypTriple(2 * a - 2, a),
    }[k]()


def is_acyclic(w) -> bool:
    """True for the induced families, whose higher ``t_i`` all vanish."""
    if isinstance(w, DirectSum):
        return all(is_acyclic(p) for p in w.parts)
    return w.kind == "I"


@dataclass(frozen=True)
class WitnessProfile:
    family: object
    t: Callable[[int], int] = field(repr=False, compare=False)
    regularity: int
    hyp_triple: HypTriple
    stable_ranges: StableRanges
    sharp: dict

    def t_values(self, upto: int = 6) -> list[int]:
        return [self.t(i) for i in range(upto + 1)]

    def to_json(self) -> dict:
        return {
            "family": str(self.family),
            "t": self.t_values(),
            "regularity": self.regularity,
            "hyp_triple": self.hyp_triple.to_json(),
            "stable_ranges": self.stable_ranges.to_json(),
            "sharp": dict(self.sharp),
        }


def witness_profile(w) -> WitnessProfile:
    """Exact ``t_i``, regularity, hypothesis triple and stable ranges of a witness.

    For ``S(c) + I(g)`` the parameters must satisfy ``0 <= g <= ceil(c/2)``.
    """
    _check_range(w)
    if isinstance(w, DirectSum):
        kinds = sorted(p.kind for p in w.parts)
        if kinds != ["I", "S"]:
            raise ParamOutOfTheoremRange(f"no sharpness statement covers {w}")
        c = next(p.param for p in w.parts if p.kind == "S")
        g = next(p.param for p in w.parts if p.kind == "I")
        if not 0 <= g <= _ceil_half(c):
            raise ParamOutOfTheoremRange(f"{w} needs 0 <= g <= ceil(c/2)")
    t = _t_function(w)
    reg = max(t(i) - i for i in range(1, 8))
    triple = _hyp_triple(w)
    return WitnessProfile(w, t, reg, triple, ranges_from_cg(triple), {c: True for c in COORDS})


@dataclass
class SharpnessReport:
    family: str
    ranges: StableRanges
    checks: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "stable_ranges": self.ranges.to_json(),
            "checks": dict(self.checks),
            "details": self.details,
            "passed": self.passed,
        }


def _first_nonzero(dim: Callable[[int], int], horizon: int) -> Optional[int]:
    return next((n for n in range(horizon + 1) if dim(n)), None)


def _specht_profile(w, n: int, override_caps: bool) -> dict[Partition, int]:
    dec = decompose_class_function(witness_character(w, n, override_caps=override_caps),
                                   override_caps=override_caps)
    return {unpad(mu): m for mu, m in dec.items()}


def _generation_witness(w, horizon: int) -> Optional[int]:
    # t0 of a direct sum is the largest t0 of its summands
    if isinstance(w, DirectSum):
        vals = [_generation_witness(p, horizon) for p in w.parts]
        return max((v for v in vals if v is not None), default=None)
    return _first_nonzero(lambda n: witness_dim(w, n), horizon)


def sharpness_check(w, *, override_caps: bool = False, specht: bool = True) -> SharpnessReport:
    """Check, from dimensions and characters, that each claimed range is attained and cannot be lowered.

    * polynomiality: one polynomial of degree exactly ``delta`` fits from
      ``hmax + 1`` to a horizon and misfits at ``hmax``;
    * additive structure: non-negative integer multiplicities fit from ``A``
      and either misfit at ``A - 1`` or ``A`` is the least value allowed;
    * ``t0`` is the first degree where a summand is nonzero, and ``t1`` is
      forced to ``t0 + 1`` whenever ``t0 > delta``;
    * Specht stability: the decomposition read through the padding map is
      constant from ``M`` onward and not from ``M - 1``.
    """
    prof = witness_profile(w)
    R = prof.stable_ranges
    dim = lambda n: witness_dim(w, n)  # noqa: E731
    horizon = 2 * max(R.hmax, 0) + 2 * max(R.delta, 0) + 4
    rep = SharpnessReport(str(w), R)

    # polynomiality and hmax, delta
    base = R.hmax + 1
    deg = max(R.delta, 0)
    coeffs = newton_fit(dim, base, deg)
    fits = all(newton_eval(coeffs, base, n) == dim(n) for n in range(base, horizon + 1))
    rep.checks["polynomial_fit"] = fits
    if R.delta == -1:
        rep.checks["delta_sharp"] = all(c == 0 for c in coeffs)
    else:
        rep.checks["delta_sharp"] = coeffs[R.delta] != 0
    if R.hmax >= 0:
        below = newton_eval(coeffs, base, R.hmax)
        rep.details["polynomial_at_hmax"] = str(below)
        rep.checks["hmax_sharp"] = below != dim(R.hmax)
    else:
        rep.checks["hmax_sharp"] = True

    # additive structure
    b = additive_fit(dim, R.A, R.delta)
    rep.details["additive_multiplicities"] = [str(x) for x in b]
    ok = all(x.denominator == 1 and x >= 0 for x in b)
    ok = ok and all(additive_eval(b, n) == dim(n) for n in range(R.A, horizon + 1))
    rep.checks["additive_fit"] = ok
    minimal = R.A == max(0, 2 * R.delta - 1)
    rep.checks["A_sharp"] = minimal or additive_eval(b, R.A - 1) != dim(R.A - 1)

    # inductive description
    first = _generation_witness(w, horizon)
    rep.details["generation_witness"] = first
    rep.checks["t0_sharp"] = (first if first is not None else -1) == R.t0
    if R.t1 == -1:
        rep.checks["t1_sharp"] = True
    else:
        rep.checks["t1_sharp"] = R.t0 > R.delta and R.t1 == R.t0 + 1

    # virtual Specht stability
    if specht:
        if R.M == 0:
            rep.checks["M_sharp"] = all(
                _specht_profile(w, n, override_caps) == _specht_profile(w, 0, override_caps)
                for n in (1, 2)
            )
        else:
            stable = _specht_profile(w, R.M, override_caps)
            after = _specht_profile(w, R.M + 1, override_caps)
            before = _specht_profile(w, R.M - 1, override_caps)
            reach = max((lam.size + lam.first for lam in stable), default=0)
            rep.details["specht_multiplicities"] = {
                str(list(lam)): m for lam, m in sorted(stable.items())
            }
            rep.checks["M_sharp"] = stable == after and (before != stable or reach > R.M - 1)
    return rep
