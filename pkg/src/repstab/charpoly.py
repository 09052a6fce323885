"""Character polynomials: polynomials in the cycle-count functions ``X_j``.

``X_j`` evaluated on a permutation counts its ``j``-cycles and has weight
``j``. Polynomials are stored in expanded monomial form with exact rational
coefficients. The binomial basis ``prod_j binom(X_j, k_j)`` is available for
display through :func:`to_binomial_basis` and :func:`render`.
"""
from __future__ import annotations

import ast
import re
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping

from .errors import InvalidCharacteristic, SeriesCapExceeded
from .partitions import _as_partition, check_characteristic, part_counts, partitions_of

SERIES_CAP = 12
NEG_INF = float("-inf")

Exponents = tuple[int, ...]


def _trim(exps: Iterable[int]) -> Exponents:
    exps = tuple(int(e) for e in exps)
    end = len(exps)
    while end and exps[end - 1] == 0:
        end -= 1
    return exps[:end]


def _add_exps(a: Exponents, b: Exponents) -> Exponents:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))


class CharPoly:
    """An immutable polynomial in ``X_1, X_2, ...`` over the rationals."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Iterable[int], object] | None = None):
        clean: dict[Exponents, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            key = _trim(exps)
            if any(e < 0 for e in key):
                raise ValueError(f"negative exponent in {key}")
            clean[key] = clean.get(key, Fraction(0)) + Fraction(coeff)
        self._terms = {k: v for k, v in sorted(clean.items()) if v}
        self._hash = None

    # construction -----------------------------------------------------
    @classmethod
    def const(cls, c) -> CharPoly:
        return cls({(): c})

    @classmethod
    def var(cls, j: int, characteristic: int = 0) -> CharPoly:
        """The variable ``X_j``; refused in characteristic ``p`` when ``p`` divides ``j``."""
        if j < 1:
            raise ValueError("variables are indexed from 1")
        p = check_characteristic(characteristic)
        if p and j % p == 0:
            raise InvalidCharacteristic(f"X_{j} is not available in characteristic {p}")
        return cls({(0,) * (j - 1) + (1,): 1})

    # inspection -------------------------------------------------------
    @property
    def terms(self) -> dict[Exponents, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CharPoly.const(other)
        if not isinstance(other, CharPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"CharPoly({render_monomial(self)})"

    # ring structure ---------------------------------------------------
    @staticmethod
    def _coerce(other) -> CharPoly:
        if isinstance(other, CharPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return CharPoly.const(other)
        return NotImplemented

    def __add__(self, other) -> CharPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return CharPoly(out)

    __radd__ = __add__

    def __neg__(self) -> CharPoly:
        return CharPoly({k: -v for k, v in self._terms.items()})

    def __sub__(self, other) -> CharPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> CharPoly:
        return (-self) + other

    def __mul__(self, other) -> CharPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponents, Fraction] = {}
        for ka, va in self._terms.items():
            for kb, vb in other._terms.items():
                k = _add_exps(ka, kb)
                out[k] = out.get(k, Fraction(0)) + va * vb
        return CharPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, c) -> CharPoly:
        c = Fraction(c)
        return CharPoly({k: v / c for k, v in self._terms.items()})

    def __pow__(self, e: int) -> CharPoly:
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        out, base = CharPoly.const(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # JSON ------------------------------------------------------------
    def to_json(self) -> list[dict]:
        return [{"exponents": list(k), "coeff": str(v)} for k, v in self._terms.items()]

    @classmethod
    def from_json(cls, data: list[dict]) -> CharPoly:
        return cls({tuple(t["exponents"]): Fraction(t["coeff"]) for t in data})


def X(j: int, characteristic: int = 0) -> CharPoly:
    return CharPoly.var(j, characteristic)


def binom(p, k: int) -> CharPoly:
    """``binom(P, k) = P (P-1) ... (P-k+1) / k!`` for a polynomial or number ``P``."""
    if k < 0:
        return CharPoly()
    p = CharPoly._coerce(p)
    out = CharPoly.const(1)
    for i in range(k):
        out = out * (p - i)
    return out / factorial(k)


def evaluate(P: CharPoly, lam) -> Fraction:
    """Value of ``P`` on a permutation of cycle type ``lam``."""
    counts = part_counts(_as_partition(lam))
    total = Fraction(0)
    for exps, coeff in P._terms.items():
        term = coeff
        for j, e in enumerate(exps, start=1):
            if e:
                term *= counts.get(j, 0) ** e
                if not term:
                    break
        total += term
    return total


def degree(P: CharPoly):
    """Weighted degree with ``deg X_j = j``; :data:`NEG_INF` for the zero polynomial."""
    if P.is_zero():
        return NEG_INF
    return max(sum(j * e for j, e in enumerate(k, start=1)) for k in P._terms)


def _falling(j: int, e: int) -> CharPoly:
    x = CharPoly.var(j)
    out = CharPoly.const(1)
    for i in range(e):
        out = out * (x - i)
    return out


def umbral_down(P: CharPoly) -> CharPoly:
    """Replace every ``X_j^e`` by the falling factorial ``X_j (X_j - 1) ... (X_j - e + 1)``."""
    out = CharPoly()
    for exps, coeff in P._terms.items():
        term = CharPoly.const(coeff)
        for j, e in enumerate(exps, start=1):
            if e:
                term = term * _falling(j, e)
        out = out + term
    return out


@lru_cache(maxsize=None)
def _stirling2(e: int, k: int) -> int:
    if e == k:
        return 1
    if k == 0 or k > e:
        return 0
    return k * _stirling2(e - 1, k) + _stirling2(e - 1, k - 1)


def to_binomial_basis(P: CharPoly) -> dict[Exponents, Fraction]:
    """Coefficients of ``P`` in the basis ``prod_j binom(X_j, k_j)``.

    Uses ``x^e = sum_k S(e, k) k! binom(x, k)`` in each variable separately.
    """
    out: dict[Exponents, Fraction] = {}
    for exps, coeff in P._terms.items():
        partial: dict[Exponents, Fraction] = {(): coeff}
        for e in exps:
            nxt: dict[Exponents, Fraction] = {}
            for ks, c in partial.items():
                for k in range(e + 1):
                    s = _stirling2(e, k)
                    if s:
                        key = ks + (k,)
                        nxt[key] = nxt.get(key, Fraction(0)) + c * s * factorial(k)
            partial = nxt
        for ks, c in partial.items():
            key = _trim(ks)
            out[key] = out.get(key, Fraction(0)) + c
    return {k: v for k, v in out.items() if v}


def from_binomial_basis(coeffs: Mapping[Iterable[int], object]) -> CharPoly:
    out = CharPoly()
    for ks, c in coeffs.items():
        term = CharPoly.const(c)
        for j, k in enumerate(ks, start=1):
            if k:
                term = term * binom(CharPoly.var(j), k)
        out = out + term
    return out


def _term_order(exps: Exponents, width: int):
    padded = exps + (0,) * (width - len(exps))
    weight = sum(j * e for j, e in enumerate(exps, start=1))
    return (-weight, tuple(-e for e in reversed(padded)))


def _render_terms(items: dict[Exponents, Fraction], factor) -> str:
    if not items:
        return "0"
    width = max(len(k) for k in items)
    pieces = []
    for exps in sorted(items, key=lambda k: _term_order(k, width)):
        coeff = items[exps]
        factors = [factor(j, e) for j, e in reversed(list(enumerate(exps, start=1))) if e]
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(pieces)


def render(P: CharPoly) -> str:
    """Binomial-basis rendering, e.g. ``X3*X1 + binom(X2,2) - X1``.

    Terms are sorted by weighted degree, highest first, and within a degree by
    exponent of the highest-index variable first.
    """

    def factor(j, k):
        return f"X{j}" if k == 1 else f"binom(X{j},{k})"

    return _render_terms(to_binomial_basis(P), factor)


def render_monomial(P: CharPoly) -> str:
    def factor(j, e):
        return f"X{j}" if e == 1 else f"X{j}^{e}"

    return _render_terms(P.terms, factor)


def def_poly(W, h: int, characteristic: int = 0) -> CharPoly:
    """``sum_r sum_{lam |- r} chi_{W_r}(lam) binom(X_1-h-1, a_1) prod_{j>=2} binom(X_j, a_j)``.

    ``W[r]`` is a class function on ``S_r``. In characteristic ``p`` the value
    on any ``lam`` with a part divisible by ``p`` is taken to be zero.
    """
    p = check_characteristic(characteristic)
    out = CharPoly()
    shifted = CharPoly.var(1) - (h + 1)
    for r, w in enumerate(W):
        if w.n != r:
            raise ValueError(f"W[{r}] is a class function on S_{w.n}")
        for lam in partitions_of(r):
            value = w(lam)
            if not value or (p and any(part % p == 0 for part in lam)):
                continue
            term = CharPoly.const(value)
            for j, a in part_counts(lam).items():
                base = shifted if j == 1 else CharPoly.var(j, p)
                term = term * binom(base, a)
            out = out + term
    return out


def _check_series_cap(J: int) -> None:
    if J < 0:
        raise ValueError("J must be non-negative")
    if J > SERIES_CAP:
        raise SeriesCapExceeded(f"J = {J} exceeds the series cap {SERIES_CAP}")


def _product_series(J: int, shift: int) -> list[CharPoly]:
    # prod_{i<=J} sum_a binom(X_i + a - 1 - shift, a) t^{a i}, truncated at t^J
    series = [CharPoly.const(1)] + [CharPoly() for _ in range(J)]
    for i in range(1, J + 1):
        x = CharPoly.var(i)
        factor = {a * i: binom(x + (a - 1 - shift), a) for a in range(J // i + 1)}
        series = [
            sum((series[m - d] * f for d, f in factor.items() if d <= m), CharPoly())
            for m in range(J + 1)
        ]
    return series


def sym_series(J: int) -> list[CharPoly]:
    """``S^(0), ..., S^(J)``: coefficients of ``prod_i (1 - t^i)^(-X_i)``."""
    _check_series_cap(J)
    return _product_series(J, 0)


def coinv_series(J: int) -> list[CharPoly]:
    """``C^(0), ..., C^(J)``: coefficients of ``prod_i (1 - t^i)^(1 - X_i)``."""
    _check_series_cap(J)
    return _product_series(J, 1)


def parse_expr(text: str) -> CharPoly:
    """Parse an expression such as ``(X1-1)**2/2 + binom(X2,2)``.

    Accepted syntax: integers, variables ``X1, X2, ...``, ``+ - * /``,
    non-negative integer powers, and ``binom(P, k)`` with integer ``k``.
    Division is by constants only.
    """
    try:
        tree = ast.parse(text, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse {text!r}: {exc.msg}") from None
    return _eval_node(tree.body)


def _const_of(node) -> Fraction:
    value = _eval_node(node)
    if any(value._terms.keys() - {()}):
        raise ValueError("expected a constant")
    return value._terms.get((), Fraction(0))


def _eval_node(node) -> CharPoly:
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return CharPoly.const(node.value)
    if isinstance(node, ast.Name):
        m = re.fullmatch(r"X([1-9][0-9]*)", node.id)
        if not m:
            raise ValueError(f"unknown name {node.id!r}; variables are X1, X2, ...")
        return CharPoly.var(int(m.group(1)))
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        inner = _eval_node(node.operand)
        return -inner if isinstance(node.op, ast.USub) else inner
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            e = _const_of(node.right)
            if e.denominator != 1 or e < 0:
                raise ValueError("exponents must be non-negative integers")
            return _eval_node(node.left) ** int(e)
        if isinstance(node.op, ast.Div):
            d = _const_of(node.right)
            if not d:
                raise ValueError("division by zero")
            return _eval_node(node.left) / d
        ops = {ast.Add: CharPoly.__add__, ast.Sub: CharPoly.__sub__, ast.Mult: CharPoly.__mul__}
        for kind, fn in ops.items():
            if isinstance(node.op, kind):
                return fn(_eval_node(node.left), _eval_node(node.right))
    if (
        isinstance(node, ast.Call)
        and isinstance(node.func, ast.Name)
        and node.func.id == "binom"
        and len(node.args) == 2
        and not node.keywords
    ):
        k = _const_of(node.args[1])
        if k.denominator != 1:
            raise ValueError("binom needs an integer lower index")
        return binom(_eval_node(node.args[0]), int(k))
    raise ValueError(f"unsupported syntax: {ast.dump(node)}")
