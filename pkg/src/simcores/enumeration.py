"""Brute-force enumeration of simultaneous cores and weight-indexed counts."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .partitions import (
    CoreFamily,
    doubled_distinct,
    is_bar_core,
    is_csyd,
    is_s_core,
    is_self_conjugate,
)


class NoCoprimePair(ValueError):
    pass


@dataclass(frozen=True)
class EnumerationSpec:
    family: CoreFamily
    moduli: Tuple[int, ...]
    part_bound: Optional[int] = None

    def bound(self) -> int:
        return self.part_bound if self.part_bound is not None else default_part_bound(self.moduli)


def default_part_bound(moduli: Sequence[int]) -> int:
    """``ceil(s*t/2)`` for the coprime pair with smallest product, never below max(moduli)."""
    pairs = [(s, t) for s, t in combinations(sorted(moduli), 2) if math.gcd(s, t) == 1]
    if not pairs:
        raise NoCoprimePair(f"no coprime pair among {tuple(moduli)}")
    s, t = min(pairs, key=lambda st: st[0] * st[1])
    return max(-(-s * t // 2), max(moduli))


def _excluded_parts(family: CoreFamily, moduli: Sequence[int]) -> set:
    out = set(moduli)
    for s in moduli:
        if s % 2 == 0:
            if family is CoreFamily.DD:
                out.add(s // 2)
            elif family is CoreFamily.CS:
                out.add(3 * s // 2)
    return out


def enumerate_family(spec: EnumerationSpec) -> List[Tuple[int, ...]]:
    """All strict members of ``spec.family`` with parts at most the bound.

    Parts are added in increasing order so that "part > s needs part - s"
    and the pairwise-sum condition are both checkable when a part arrives.
    """
    family, moduli = spec.family, tuple(spec.moduli)
    if family is CoreFamily.SC:
        raise ValueError("self-conjugate cores are counted by formula only")
    if not moduli:
        raise ValueError("need at least one modulus")
    bound = spec.bound()
    if bound < max(moduli):
        raise ValueError(f"part bound {bound} is below the largest modulus {max(moduli)}")
    excluded = _excluded_parts(family, moduli)
    m0 = min(moduli)
    halves = [s // 2 if s % 2 == 0 else None for s in moduli]
    found = []

    def admissible(p, chosen, residues):
        if p in excluded:
            return False
        for k, s in enumerate(moduli):
            if p > s and p - s not in chosen:
                return False
            r = p % s
            if (-r) % s in residues[k] and r != halves[k]:
                return False
        return True

    def extend(chosen, last, residues):
        found.append(tuple(sorted(chosen, reverse=True)))
        # any part above the smallest modulus m0 must sit m0 above a chosen part
        candidates = set(range(last + 1, min(m0, bound + 1)))
        candidates.update(q + m0 for q in chosen if last < q + m0 <= bound)
        for p in sorted(candidates):
            if admissible(p, chosen, residues):
                extend(chosen | {p}, p,
                       [res | {p % s} for res, s in zip(residues, moduli)])

    extend(frozenset(), 0, [frozenset() for _ in moduli])
    return sorted(found)


def strict_partitions(n: int, max_part: Optional[int] = None):
    """Strict partitions of ``n`` with largest part at most ``max_part``, largest first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        if first * (first + 1) // 2 < n:
            break
        for rest in strict_partitions(n - first, first - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _all_partitions(n: int, max_part: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _all_partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n: int):
    return _all_partitions(n, n)


def count_by_weight(family: CoreFamily, s: int, max_n: int) -> List[int]:
    """Coefficient list ``c_0..c_max_n`` counting single-modulus family members by size.

    Sizes are those of the underlying object: ``|lambda|`` for SC, BC and CS,
    ``|lambda lambda| = 2|lambda|`` for DD.
    """
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    counts = [0] * (max_n + 1)
    if family is CoreFamily.SC:
        for n in range(max_n + 1):
            counts[n] = sum(1 for p in partitions(n) if is_self_conjugate(p) and is_s_core(p, s))
    elif family is CoreFamily.DD:
        for n in range(max_n // 2 + 1):
            counts[2 * n] = sum(1 for p in strict_partitions(n)
                                if is_s_core(doubled_distinct(p), s))
    else:
        test = is_bar_core if family is CoreFamily.BC else is_csyd
        for n in range(max_n + 1):
            counts[n] = sum(1 for p in strict_partitions(n) if test(p, s))
    return counts

