"""Closed-form counts of simultaneous cores, with path and brute-force cross-checks.

Binomials and multinomials vanish whenever an index is negative or the lower
indices do not add up, which keeps the sums below free of boundary cases.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Dict, Tuple

from .abacus import constraints, enumerate_motzkin, family_path_set
from .enumeration import EnumerationSpec, enumerate_family
from .partitions import CoreFamily
from .yinyang import family_paths


class HypothesisError(ValueError):
    """Moduli violate the coprimality (or parity) assumption of a formula."""


class Method(enum.Enum):
    FORMULA = "formula"
    PATHS = "paths"
    BRUTE = "brute"


def binom(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinom(n: int, *ks: int) -> int:
    if n < 0 or any(k < 0 for k in ks) or sum(ks) != n:
        return 0
    out = math.factorial(n)
    for k in ks:
        out //= math.factorial(k)
    return out


def _coprime(a: int, b: int):
    if a < 1 or b < 1 or math.gcd(a, b) != 1:
        raise HypothesisError(f"{a} and {b} must be coprime positive integers")


def count_pair(family: CoreFamily, s: int, t: int) -> int:
    _coprime(s, t)
    if family in (CoreFamily.BC, CoreFamily.SC):
        return binom(s // 2 + t // 2, s // 2)
    if family is CoreFamily.DD:
        return binom((s - 1) // 2 + (t - 1) // 2, (s - 1) // 2)
    return (binom((s - 1) // 2 + t // 2 - 1, (s - 1) // 2)
            + binom(s // 2 + (t - 1) // 2 - 1, (t - 1) // 2))


def consecutive_csyd_count(s: int) -> int:
    """Number of (s, s+1)-CSYDs."""
    return binom(s - 1, (s - 1) // 2) + binom(s - 2, (s - 1) // 2)


def _sc_triple(s: int, d: int) -> int:
    if d % 2 == 0:
        return sum(multinom((s + d - 1) // 2, i, d // 2 + i, (s - 1) // 2 - 2 * i)
                   for i in range(s // 4 + 1))
    return sum(multinom((s + d - 1) // 2, i // 2, (d + i) // 2, s // 2 - i)
               for i in range(s // 2 + 1))


def _dd_odd_d(s: int, d: int) -> int:
    h = (s - 1) // 2
    return sum(multinom((s + d - 2) // 2, i // 2, (d + i) // 2, h - i) for i in range(h + 1))


def _odd_even(s: int, d: int) -> int:
    return sum(binom((s + d - 3) // 2, i // 2) * binom((s + d - 1) // 2 - i // 2, (s - 1) // 2 - i)
               for i in range((s - 1) // 2 + 1))


def _odd_odd(s: int, d: int) -> int:
    return sum(binom((d - 1) // 2 + i, i // 2)
               * (binom((s + d - 2) // 2, (d - 1) // 2 + i) + binom((s + d - 4) // 2, (d - 1) // 2 + i))
               for i in range((s - 1) // 2 + 1))


def _bc_even_odd(s: int, d: int) -> int:
    return sum(multinom((s + d - 1) // 2, i // 2, (d + i) // 2, s // 2 - i) for i in range(s // 2 + 1))


def _cs_even_odd(s: int, d: int) -> int:
    h = (s - 2) // 2
    first = sum(binom((s + d - 3) // 2, i // 2) * binom((s + d - 3) // 2 - i // 2, h - i)
                for i in range(h + 1))
    second = sum(binom((s + d - 5) // 2, i // 2) * binom((s + d - 1) // 2 - i // 2, h - i)
                 for i in range(h + 1))
    return first + second


def count_triple(family: CoreFamily, s: int, d: int) -> int:
    """Size of the family on (s, s+d, s+2d) by the closed formula for its parity case."""
    _coprime(s, d)
    if family is CoreFamily.SC:
        return _sc_triple(s, d)
    if family is CoreFamily.DD and d % 2:
        return _dd_odd_d(s, d)
    if s % 2 and d % 2 == 0:
        return _odd_even(s, d)
    if s % 2:
        return _odd_odd(s, d)
    if family is CoreFamily.BC:
        return _bc_even_odd(s, d)
    return _cs_even_odd(s, d)


def motzkin_count(a: int, b: int, variant: str) -> int:
    """Free Motzkin paths of type (a+b, -b) not starting with U.

    ``variant`` picks the ending rule: ``"a"`` none, ``"b"`` not ending in D,
    ``"c"`` not ending in U.
    """
    if variant == "a":
        return sum(multinom(a + b - 1, i // 2, b + (i - 1) // 2, a - i) for i in range(a + 1))
    if variant == "b":
        return sum(binom(a + b - 2, i // 2) * binom(a + b - 1 - i // 2, a - i - 1) for i in range(a))
    if variant == "c":
        return sum(binom(a + b - 2, i // 2) * binom(a + b - 1 - i // 2, a - i) for i in range(a + 1))
    raise ValueError(f"unknown variant {variant!r}")


def sc_triple_paths(s: int, d: int) -> int:
    """SC triple count via the free Motzkin path sets the self-conjugate bijection targets."""
    _coprime(s, d)
    if s % 2 and d % 2 == 0:
        return len(enumerate_motzkin((s + d - 1) // 2, -(d // 2)))
    if s % 2:
        return len(enumerate_motzkin((s + d) // 2, -((d + 1) // 2), constraints((), {"U"})))
    return len(enumerate_motzkin((s + d + 1) // 2, -((d + 1) // 2), constraints((), {"U"})))


def count(family: CoreFamily, shape: Tuple[int, int], triple: bool, method: Method) -> int:
    """Dispatch a count query for a pair ``(s, t)`` or a triple given as ``(s, d)``."""
    s, x = shape
    if method is Method.FORMULA:
        return count_triple(family, s, x) if triple else count_pair(family, s, x)
    _coprime(s, x)
    if method is Method.PATHS:
        if triple:
            if family is CoreFamily.SC:
                return sc_triple_paths(s, x)
            (length, end), rules = family_path_set(s, x, family)
            return len(enumerate_motzkin(length, end, rules))
        if family is CoreFamily.SC:
            raise ValueError("no path model for self-conjugate pairs")
        return len(family_paths(family, s, x))
    if family is CoreFamily.SC:
        raise ValueError("self-conjugate cores are counted by formula only")
    moduli = (s, s + x, s + 2 * x) if triple else (s, x)
    return len(enumerate_family(EnumerationSpec(family, moduli)))


@dataclass(frozen=True)
class SizeReport:
    s: int
    d: int
    case: str
    counts: Dict[str, int]
    holds: bool

    def describe(self) -> str:
        c = self.counts
        return f"({self.s},{self.d}) case {self.case}: " + " ".join(f"{k}={c[k]}" for k in ("sc", "bc", "cs", "dd"))


def size_order_report(s: int, d: int) -> SizeReport:
    """Compare the four triple counts against the ordering expected for the parity case."""
    _coprime(s, d)
    c = {f.value: count_triple(f, s, d) for f in CoreFamily}
    sc, bc, cs, dd = c["sc"], c["bc"], c["cs"], c["dd"]
    if s % 2 and d % 2 == 0:
        case, holds = "a", sc < bc == cs == dd
    elif s % 2:
        case, holds = "b", sc == dd < bc == cs
    else:
        case, holds = "c", dd < cs < sc == bc
    return SizeReport(s, d, case, c, holds)
