"""Truncated power series with integer coefficients and the core generating functions."""
from __future__ import annotations

from typing import Iterable, List

from .partitions import CoreFamily

DEFAULT_TRUNC = 50


class QSeries:
    """Coefficients ``c_0 .. c_trunc`` of a power series in ``q``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int], trunc: int = None):
        coeffs = [int(c) for c in coeffs]
        if trunc is not None:
            coeffs = (coeffs + [0] * (trunc + 1))[:trunc + 1]
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs = coeffs

    @property
    def trunc(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, trunc: int) -> "QSeries":
        return cls([1], trunc)

    @classmethod
    def monomial(cls, exponent: int, trunc: int, coeff: int = 1) -> "QSeries":
        out = [0] * (trunc + 1)
        if exponent <= trunc:
            out[exponent] = coeff
        return cls(out)

    def _same(self, other: "QSeries"):
        if not isinstance(other, QSeries):
            return NotImplemented
        if other.trunc != self.trunc:
            raise ValueError(f"truncation mismatch: {self.trunc} vs {other.trunc}")
        return other

    def __add__(self, other):
        if isinstance(other, int):
            return QSeries([self.coeffs[0] + other] + self.coeffs[1:])
        self._same(other)
        return QSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return QSeries(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries(other * c for c in self.coeffs)
        self._same(other)
        n = self.trunc
        out = [0] * (n + 1)
        b = other.coeffs
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(n + 1 - i):
                    if b[j]:
                        out[i + j] += a * b[j]
        return QSeries(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.reciprocal() ** (-k)
        out = QSeries.one(self.trunc)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        return self * self._same(other).reciprocal()

    def reciprocal(self) -> "QSeries":
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ValueError(f"constant term {c0} is not a unit")
        a = self.coeffs
        out = [0] * (self.trunc + 1)
        out[0] = c0
        for n in range(1, self.trunc + 1):
            acc = sum(a[k] * out[n - k] for k in range(1, n + 1))
            out[n] = -acc * c0
        return QSeries(out)

    def __eq__(self, other):
        if isinstance(other, QSeries):
            return self.coeffs == other.coeffs
        return self.coeffs == list(other)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        head = ", ".join(map(str, self.coeffs[:8]))
        return f"QSeries([{head}{', ...' if self.trunc >= 8 else ''}], trunc={self.trunc})"


def pochhammer(a: int, step: int, trunc: int, negate: bool = False) -> QSeries:
    """``(q^a; q^step)_inf`` truncated, or ``(-q^a; q^step)_inf`` when ``negate``."""
    if a < 1 or step < 1:
        raise ValueError("need a >= 1 and step >= 1")
    sign = 1 if negate else -1
    out = [0] * (trunc + 1)
    out[0] = 1
    e = a
    while e <= trunc:
        # multiply in place by (1 + sign q^e), high degrees first
        for n in range(trunc, e - 1, -1):
            out[n] += sign * out[n - e]
        e += step
    return QSeries(out)


def theta_half(s: int, trunc: int) -> QSeries:
    """``sum_{n>=0} q^(s n^2 / 2)`` for even ``s``."""
    out = [0] * (trunc + 1)
    n = 0
    while s * n * n // 2 <= trunc:
        out[s * n * n // 2] += 1
        n += 1
    return QSeries(out)


def series_family(family: CoreFamily, s: int, trunc: int = DEFAULT_TRUNC) -> QSeries:
    """Generating function of single-modulus family members counted by size."""
    if s < 2:
        raise ValueError("modulus must be at least 2")
    N = trunc
    odd = s % 2 == 1
    if family is CoreFamily.SC:
        num = pochhammer(1, 2, N, negate=True)
        if odd:
            return num * pochhammer(2 * s, 2 * s, N) ** ((s - 1) // 2) / pochhammer(s, 2 * s, N, negate=True)
        return num * pochhammer(2 * s, 2 * s, N) ** (s // 2)
    if family is CoreFamily.DD:
        num = pochhammer(2, 2, N, negate=True)
        if odd:
            return num * pochhammer(2 * s, 2 * s, N) ** ((s - 1) // 2) / pochhammer(2 * s, 2 * s, N, negate=True)
        return num * pochhammer(2 * s, 2 * s, N) ** ((s - 2) // 2) / pochhammer(s, s, N, negate=True)
    distinct = pochhammer(1, 1, N, negate=True)
    if odd:
        return distinct * pochhammer(s, s, N) ** ((s - 1) // 2) / pochhammer(s, s, N, negate=True)
    base = distinct * pochhammer(s, s, N) ** ((s - 2) // 2)
    if family is CoreFamily.BC:
        return base / pochhammer(s // 2, s // 2, N, negate=True) * theta_half(s, N)
    return base / pochhammer(s, s // 2, N, negate=True)
