"""Exact univariate polynomial algebra over the rationals.

Scalars are :class:`fractions.Fraction` throughout; Python integers are
unbounded, so coefficient growth never overflows silently.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

from .errors import FloatOverflow, InvalidInterval, ZeroPolynomial

Rational = Fraction

_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are refused.

    Floats would carry binary rounding into the exact layer, so callers with
    float data must go through the numeric backend instead.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class RationalPoly:
    """Immutable polynomial with Fraction coefficients in ascending degree.

    Trailing zeros are stripped on construction, so the zero polynomial has an
    empty coefficient tuple and ``degree == -1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPoly is immutable")

    @classmethod
    def constant(cls, c) -> "RationalPoly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> "RationalPoly":
        return cls([0] * k + [c])

    @classmethod
    def linear(cls, c0, c1) -> "RationalPoly":
        return cls([c0, c1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, RationalPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RationalPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, RationalPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RationalPoly([other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return RationalPoly(self[k] + o[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, c in enumerate(o.coeffs):
                    out[i + j] += a * c
        return RationalPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = RationalPoly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RationalPoly":
        return RationalPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def antiderivative(self) -> "RationalPoly":
        """Antiderivative vanishing at 0."""
        return RationalPoly([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def shift(self, c) -> "RationalPoly":
        """Return p(x + c) (Taylor shift)."""
        c = as_rational(c)
        out = RationalPoly()
        lin = RationalPoly([c, 1])
        for coef in reversed(self.coeffs):
            out = out * lin + coef
        return out

    def compose_linear(self, c0, c1) -> "RationalPoly":
        """Return p(c0 + c1*x)."""
        out = RationalPoly()
        lin = RationalPoly([c0, c1])
        for coef in reversed(self.coeffs):
            out = out * lin + coef
        return out

    def divmod(self, other: "RationalPoly"):
        """Euclidean division with exact rational quotient and remainder."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            if c:
                quot[k - dq] = c
                for j, oc in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * oc
        return RationalPoly(quot), RationalPoly(rem[:dq])

    def eval_float(self, x: float) -> float:
        return eval_float(self, x)

    def to_string(self, var: str = "τ") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var + (str(k).translate(_SUPERSCRIPT) if k > 1 else "")
                body = power if mag == 1 else f"{mag}{power}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"RationalPoly([{', '.join(str(c) for c in self.coeffs)}])"


def poly_arith(p: RationalPoly, q: RationalPoly, op: str) -> RationalPoly:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def differentiate(p: RationalPoly) -> RationalPoly:
    return p.derivative()


def definite_integral(p: RationalPoly, lo, hi) -> Fraction:
    """Exact integral of ``p`` over ``[lo, hi]``; requires ``lo <= hi``."""
    lo, hi = as_rational(lo), as_rational(hi)
    if lo > hi:
        raise InvalidInterval(f"lower limit {lo} exceeds upper limit {hi}")
    P = p.antiderivative()
    return P(hi) - P(lo)


def signed_integral(p: RationalPoly, lo, hi) -> Fraction:
    """Like :func:`definite_integral` but with the usual orientation sign."""
    lo, hi = as_rational(lo), as_rational(hi)
    if lo > hi:
        return -definite_integral(p, hi, lo)
    return definite_integral(p, lo, hi)


def double_antiderivative_from(p: RationalPoly, base) -> RationalPoly:
    """W with W'' = p and W(base) = W'(base) = 0.

    Equivalently W(t) = int_base^t (t - x) p(x) dx.
    """
    base = as_rational(base)
    P1 = p.antiderivative()
    P1 = P1 - P1(base)
    W = P1.antiderivative()
    return W - W(base)


def _deflate_at(p: RationalPoly, x: Fraction) -> RationalPoly:
    lin = RationalPoly([-x, 1])
    while p(x) == 0:
        p, r = p.divmod(lin)
        assert r.is_zero()
    return p


def _normalise(p: RationalPoly) -> RationalPoly:
    # positive rescaling keeps signs and stops denominators from growing
    return p * (1 / abs(p.leading))


def sturm_sequence(p: RationalPoly) -> list[RationalPoly]:
    seq = [_normalise(p)]
    dp = p.derivative()
    if dp.is_zero():
        return seq
    seq.append(_normalise(dp))
    while True:
        _, r = seq[-2].divmod(seq[-1])
        if r.is_zero():
            return seq
        seq.append(_normalise(-r))


def _sign_changes(seq: Sequence[RationalPoly], x: Fraction) -> int:
    signs = [v > 0 for v in (q(x) for q in seq) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_in_open_interval(p: RationalPoly, lo, hi) -> int:
    """Number of distinct real roots of ``p`` strictly inside ``(lo, hi)``.

    Roots sitting exactly on an endpoint are divided out first, so they are
    never counted and never spoil the sign-variation count.
    """
    lo, hi = as_rational(lo), as_rational(hi)
    if p.is_zero():
        raise ZeroPolynomial("root count of the zero polynomial is undefined")
    if not lo < hi:
        raise InvalidInterval(f"need lo < hi, got ({lo}, {hi})")
    q = _deflate_at(_deflate_at(p, lo), hi)
    if q.degree <= 0:
        return 0
    seq = sturm_sequence(q)
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


def eval_float(p: RationalPoly, x: float) -> float:
    """Horner evaluation in double precision."""
    try:
        cs = [float(c) for c in p.coeffs]
    except OverflowError as exc:
        raise FloatOverflow("coefficient does not fit in a double") from exc
    acc = 0.0
    for c in reversed(cs):
        acc = acc * x + c
    if math.isinf(acc):
        raise FloatOverflow(f"evaluation overflowed at x={x!r}")
    return acc


def float_coeffs(p: RationalPoly):
    """Coefficients as a float list (ascending), for vectorised evaluation."""
    try:
        return [float(c) for c in p.coeffs]
    except OverflowError as exc:
        raise FloatOverflow("coefficient does not fit in a double") from exc
