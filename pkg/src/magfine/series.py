"""Truncated formal power series with exact rational coefficients.

Series carry an interpretation flag.  For an OGF the coefficient of x^n is the
counted number a_n; for an EGF it is a_n / n!.  Arithmetic refuses to mix the
two; :meth:`TruncatedSeries.convert` moves between them explicitly.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence


OGF = "ogf"
EGF = "egf"

DEFAULT_ORDER = 12


def default_order() -> int:
    """Truncation order from ``MAGFINE_ORDER``, else 12."""
    return int(os.environ.get("MAGFINE_ORDER", DEFAULT_ORDER))


@dataclass(frozen=True)
class TruncatedSeries:
    """c_0 + c_1 x + ... + c_N x^N  (mod x^{N+1})."""

    coeffs: tuple
    kind: str = OGF

    def __post_init__(self):
        if self.kind not in (OGF, EGF):
            raise ValueError(f"unknown interpretation {self.kind!r}")
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, order: int, kind: str = OGF) -> TruncatedSeries:
        c = list(coeffs)[: order + 1]
        c += [0] * (order + 1 - len(c))
        return cls(tuple(c), kind)

    @classmethod
    def from_sequence(cls, seq: Sequence, kind: str = OGF) -> TruncatedSeries:
        """Series counting ``seq[n]`` objects of size n under the given interpretation."""
        if kind == EGF:
            return cls(tuple(Fraction(a, factorial(n)) for n, a in enumerate(seq)), EGF)
        return cls(tuple(seq), OGF)

    @classmethod
    def x(cls, order: int, kind: str = OGF) -> TruncatedSeries:
        return cls.from_coeffs([0, 1], order, kind)

    @classmethod
    def constant(cls, c, order: int, kind: str = OGF) -> TruncatedSeries:
        return cls.from_coeffs([c], order, kind)

    def sequence(self) -> list[Fraction]:
        """The counted numbers a_n (coefficients times n! for an EGF)."""
        if self.kind == EGF:
            return [c * factorial(n) for n, c in enumerate(self.coeffs)]
        return list(self.coeffs)

    def convert(self, kind: str) -> TruncatedSeries:
        return TruncatedSeries.from_sequence(self.sequence(), kind)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            if other.kind != self.kind:
                raise ValueError(f"cannot combine {self.kind} with {other.kind}")
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(other, self.order, self.kind)
        raise TypeError(f"unsupported operand {type(other).__name__}")

    def _common(self, other: TruncatedSeries) -> int:
        return min(self.order, other.order)

    def truncate(self, order: int) -> TruncatedSeries:
        return TruncatedSeries.from_coeffs(self.coeffs, order, self.kind)

    def __add__(self, other) -> TruncatedSeries:
        o = self._coerce(other)
        n = self._common(o)
        return TruncatedSeries(tuple(self.coeffs[i] + o.coeffs[i] for i in range(n + 1)), self.kind)

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(-c for c in self.coeffs), self.kind)

    def __sub__(self, other) -> TruncatedSeries:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> TruncatedSeries:
        return self._coerce(other) - self

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(tuple(c * other for c in self.coeffs), self.kind)
        o = self._coerce(other)
        n = self._common(o)
        a, b = self.coeffs, o.coeffs
        out = [sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n + 1)]
        return TruncatedSeries(tuple(out), self.kind)

    __rmul__ = __mul__

    def inverse(self) -> TruncatedSeries:
        """Multiplicative inverse; needs a nonzero constant term."""
        a = self.coeffs
        if a[0] == 0:
            raise ValueError("series with zero constant term has no inverse")
        out = [1 / a[0]]
        for k in range(1, self.order + 1):
            s = sum((a[i] * out[k - i] for i in range(1, k + 1)), Fraction(0))
            out.append(-s / a[0])
        return TruncatedSeries(tuple(out), self.kind)

    def __truediv__(self, other) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(tuple(c / other for c in self.coeffs), self.kind)
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> TruncatedSeries:
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> TruncatedSeries:
        if k < 0:
            return self.inverse() ** (-k)
        out = TruncatedSeries.constant(1, self.order, self.kind)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def compose(self, inner: TruncatedSeries) -> TruncatedSeries:
        """self(inner(x)); ``inner`` must have zero constant term."""
        inner = self._coerce(inner)
        if inner.coeffs[0] != 0:
            raise ValueError("inner series must have zero constant term")
        n = self._common(inner)
        inner = inner.truncate(n)
        # Horner scheme on the truncated coefficients.
        out = TruncatedSeries.constant(self.coeffs[n], n, self.kind)
        for c in reversed(self.coeffs[:n]):
            out = out * inner + c
        return out

    def __call__(self, inner: TruncatedSeries) -> TruncatedSeries:
        return self.compose(inner)

    def derivative(self) -> TruncatedSeries:
        d = [n * c for n, c in enumerate(self.coeffs)][1:] + [Fraction(0)]
        return TruncatedSeries(tuple(d), self.kind)

    def integral(self) -> TruncatedSeries:
        """Antiderivative with zero constant term, truncated at the same order."""
        out = [Fraction(0)] + [c / (n + 1) for n, c in enumerate(self.coeffs[:-1])]
        return TruncatedSeries(tuple(out), self.kind)

    def reversion(self) -> TruncatedSeries:
        """Compositional inverse g with self(g(x)) = x; needs c_0 = 0, c_1 != 0."""
        a = self.coeffs
        if a[0] != 0 or self.order < 1 or a[1] == 0:
            raise ValueError("reversion needs c_0 = 0 and c_1 != 0")
        n = self.order
        x = TruncatedSeries.x(n, self.kind)
        g = TruncatedSeries.from_coeffs([0, 1 / a[1]], n, self.kind)
        # Each step fixes the next coefficient: g_k -= [x^k](f(g) - x) / c_1.
        for k in range(2, n + 1):
            err = self.compose(g) - x
            if err.coeffs[k]:
                g = g - TruncatedSeries.from_coeffs([0] * k + [err.coeffs[k] / a[1]], n, self.kind)
        return g

    def sqrt(self) -> TruncatedSeries:
        """Square root with constant term 1, by Newton iteration s <- (s + f/s) / 2."""
        if self.coeffs[0] != 1:
            raise ValueError("sqrt needs constant term 1")
        s = TruncatedSeries.constant(1, self.order, self.kind)
        precision = 1
        while precision <= self.order:
            precision *= 2
            s = (s + self / s) * Fraction(1, 2)
        return s

    def exp(self) -> TruncatedSeries:
        """exp of a series with zero constant term, via h' = f' h."""
        if self.coeffs[0] != 0:
            raise ValueError("exp needs zero constant term")
        f = self.coeffs
        h = [Fraction(1)]
        for n in range(1, self.order + 1):
            h.append(sum((k * f[k] * h[n - k] for k in range(1, n + 1)), Fraction(0)) / n)
        return TruncatedSeries(tuple(h), self.kind)

    def log(self) -> TruncatedSeries:
        """log of a series with constant term 1, by Newton iteration g <- g + f exp(-g) - 1."""
        if self.coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        g = TruncatedSeries.constant(0, self.order, self.kind)
        precision = 1
        while precision <= self.order:
            precision *= 2
            g = g + self * (-g).exp() - 1
        return g


def sqrt_one_minus(u: TruncatedSeries) -> TruncatedSeries:
    """sqrt(1 - u) for u with zero constant term."""
    if u.coeffs[0] != 0:
        raise ValueError("u must have zero constant term")
    return (1 - u).sqrt()


def fine_series(order: int | None = None) -> TruncatedSeries:
    """(1 + 2x - sqrt(1 - 4x)) / (2 (2 + x)) = sum_{n>=1} F_{n-1} x^n."""
    n = default_order() if order is None else order
    if n < 1:
        raise ValueError("order must be >= 1")
    x = TruncatedSeries.x(n)
    root = sqrt_one_minus(x * 4)
    return (1 + x * 2 - root) / ((x + 2) * 2)


def mag_series(order: int | None = None) -> TruncatedSeries:
    """(1 - sqrt(1 - 4x)) / 2 = sum_{n>=1} C_{n-1} x^n."""
    n = default_order() if order is None else order
    x = TruncatedSeries.x(n)
    return (1 - sqrt_one_minus(x * 4)) * Fraction(1, 2)


def as_series(order: int | None = None) -> TruncatedSeries:
    """x / (1 - x)."""
    n = default_order() if order is None else order
    x = TruncatedSeries.x(n)
    return x / (1 - x)


def vallette_inner(order: int) -> TruncatedSeries:
    """x - x^3 / (1 - x)^2."""
    x = TruncatedSeries.x(order)
    return x - x ** 3 / (1 - x) ** 2


def vallette_check(order: int | None = None, fine: TruncatedSeries | None = None) -> bool:
    """Whether F(x - x^3/(1-x)^2) = x up to ``order``."""
    n = default_order() if order is None else order
    if n < 3:
        raise ValueError("order must be >= 3")
    f = fine_series(n) if fine is None else fine.truncate(n)
    return f.compose(vallette_inner(n)) == TruncatedSeries.x(n)


def compose_check(order: int | None = None) -> bool:
    """Whether f_As(F(x)) = f_Mag(x) up to ``order``."""
    n = default_order() if order is None else order
    return as_series(n).compose(fine_series(n)) == mag_series(n)


def _integral_values(values: Sequence[Fraction], what: str) -> list[int]:
    out = []
    for n, v in enumerate(values, start=1):
        if v.denominator != 1:
            raise ArithmeticError(f"{what}: non-integer value {v} at n={n}")
        out.append(int(v))
    return out


def prelie_quotient_dims(order: int = 5) -> list[int]:
    """dim (MagFine / pre-Lie relation)(n) for n = 1..order.

    With f the EGF of n^{n-1}, solve f = g / (1 - g), i.e. g = f / (1 + f).
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    f = TruncatedSeries.from_sequence([0] + [n ** (n - 1) for n in range(1, order + 1)], EGF)
    g = f / (1 + f)
    return _integral_values(g.sequence()[1:], "pre-Lie quotient")


def sabinin_dims(order: int = 8) -> list[int]:
    """n [x^n] log(1 + sum C_{n-1} x^n), the Log-Catalan numbers, for n = 1..order."""
    if order < 1:
        raise ValueError("order must be >= 1")
    g = (1 + mag_series(order)).log()
    return _integral_values([n * g[n] for n in range(1, order + 1)], "Log-Catalan")

