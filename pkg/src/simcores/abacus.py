"""The (s+d, d)-abacus and free Motzkin path encodings of (s, s+d, s+2d)-cores.

Position ``(i, j)`` (row ``i`` in Z, column ``0 <= j <= (s+d)//2``) carries the
label ``(s+d)*i + d*j``.  A part ``h`` is drawn as a bead on the position
labelled ``h`` if there is one, otherwise on the position labelled ``-h``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .partitions import CoreFamily, membership_violation, is_member

STEP = {"U": 1, "F": 0, "D": -1}
STEP_OF = {1: "U", 0: "F", -1: "D"}


class AbacusError(ValueError):
    pass


@dataclass(frozen=True)
class FreeMotzkinPath:
    steps: str

    def __post_init__(self):
        if set(self.steps) - set(STEP):
            raise ValueError(f"Motzkin path has steps outside U/F/D: {self.steps!r}")

    @property
    def type(self) -> Tuple[int, int]:
        return len(self.steps), sum(STEP[c] for c in self.steps)

    def heights(self) -> List[int]:
        out = [0]
        for c in self.steps:
            out.append(out[-1] + STEP[c])
        return out

    def __str__(self):
        return self.steps


@dataclass(frozen=True)
class PathConstraintSet:
    forbidden_prefixes: FrozenSet[str] = frozenset()
    forbidden_suffixes: FrozenSet[str] = frozenset()

    def violation(self, steps: str) -> Optional[str]:
        for a in sorted(self.forbidden_prefixes):
            if steps.startswith(a):
                return f"starts with forbidden {a}"
        for b in sorted(self.forbidden_suffixes):
            if steps.endswith(b):
                return f"ends with forbidden {b}"
        return None

    def admits(self, steps: str) -> bool:
        return self.violation(steps) is None


def constraints(prefixes: Iterable[str] = (), suffixes: Iterable[str] = ()) -> PathConstraintSet:
    return PathConstraintSet(frozenset(prefixes), frozenset(suffixes))


def _check(s: int, d: int):
    if s < 1 or d < 1 or math.gcd(s, d) != 1:
        raise AbacusError(f"need coprime positive s, d; got {s}, {d}")


def last_column(s: int, d: int) -> int:
    return (s + d) // 2


def abacus_label(s: int, d: int, i: int, j: int) -> int:
    if not 0 <= j <= last_column(s, d):
        raise AbacusError(f"column {j} outside 0..{last_column(s, d)}")
    return (s + d) * i + d * j


def position_of(s: int, d: int, h: int) -> Tuple[int, int]:
    """Position carrying label ``h``, else the one carrying ``-h``."""
    _check(s, d)
    if h < 1:
        raise AbacusError("h must be positive")
    m = s + d
    for target in (h, -h):
        for j in range(last_column(s, d) + 1):
            if (target - d * j) % m == 0:
                return (target - d * j) // m, j
    raise AssertionError("unreachable: every residue is covered")  # pragma: no cover


def first_positive_row(s: int, d: int, j: int) -> int:
    """``r(j)``: least row whose label in column ``j`` is at least 1."""
    m = s + d
    return -((d * j - 1) // m)


@dataclass(frozen=True)
class AbacusFunction:
    s: int
    d: int
    values: Tuple[int, ...]

    def __getitem__(self, j):
        return self.values[j]

    def extended(self) -> Tuple[int, ...]:
        """Values with the closing point ``-(d+1)//2`` appended."""
        return self.values + (-((self.d + 1) // 2),)


def beads(s: int, d: int, sp) -> Dict[int, List[int]]:
    """Bead rows per column."""
    _check(s, d)
    out: Dict[int, List[int]] = {j: [] for j in range(last_column(s, d) + 1)}
    for h in sp:
        i, j = position_of(s, d, h)
        out[j].append(i)
    return out


def abacus_function(s: int, d: int, sp) -> AbacusFunction:
    cols = beads(s, d, sp)
    values = []
    for j in range(last_column(s, d) + 1):
        r = first_positive_row(s, d, j)
        rows = set(cols[j])
        positive = [i for i in rows if i >= r]
        if positive:
            values.append(max(positive))
        else:
            i = r - 1
            while i in rows:
                i -= 1
            values.append(i)
    return AbacusFunction(s, d, tuple(values))


def _parity_case(s: int, d: int) -> str:
    if s % 2 and d % 2 == 0:
        return "a"
    if s % 2 and d % 2:
        return "b"
    return "c"


@dataclass(frozen=True)
class PathShape:
    length: int
    end: int
    rules: PathConstraintSet
    closing_step: bool  # whether the last step goes to the appended closing point


def family_shape(s: int, d: int, family: CoreFamily) -> PathShape:
    """Length, end height and forbidden prefixes/suffixes per family and parity."""
    _check(s, d)
    J = last_column(s, d)
    low = -((d + 1) // 2)
    case = _parity_case(s, d)
    no_up_start = {"U"}
    if family is CoreFamily.SC:
        raise AbacusError("self-conjugate cores have no abacus path model here")
    if case == "a":
        return PathShape(J + 1, -(d // 2), constraints(no_up_start, {"D"}), True)
    if family is CoreFamily.DD:
        return PathShape(J, low, constraints(no_up_start), False)
    if case == "b":
        return PathShape(J + 1, low, constraints(no_up_start, {"FD", "DD", "U"}), True)
    if family is CoreFamily.BC:
        return PathShape(J + 1, low, constraints(no_up_start), True)
    return PathShape(J + 1, low, constraints(no_up_start, {"UU", "DD"}), True)


def family_path_set(s: int, d: int, family: CoreFamily) -> Tuple[Tuple[int, int], PathConstraintSet]:
    shape = family_shape(s, d, family)
    return (shape.length, shape.end), shape.rules


def triple(s: int, d: int) -> Tuple[int, int, int]:
    return s, s + d, s + 2 * d


def to_motzkin(s: int, d: int, sp, family: CoreFamily) -> FreeMotzkinPath:
    why = membership_violation(family, sp, triple(s, d))
    if why is not None:
        raise AbacusError(why)
    shape = family_shape(s, d, family)
    f = abacus_function(s, d, sp)
    heights = f.extended() if shape.closing_step else f.values
    steps = []
    for a, b in zip(heights, heights[1:]):
        if abs(b - a) > 1:
            raise AbacusError(f"abacus function jumps by {b - a}")
        steps.append(STEP_OF[b - a])
    return FreeMotzkinPath("".join(steps))


def from_motzkin(s: int, d: int, p: FreeMotzkinPath, family: CoreFamily) -> Tuple[int, ...]:
    shape = family_shape(s, d, family)
    why = shape.rules.violation(p.steps)
    if why is not None:
        raise AbacusError(f"path {why}")
    if p.type != (shape.length, shape.end):
        raise AbacusError(f"path type {p.type} differs from required {(shape.length, shape.end)}")
    heights = p.heights()
    if shape.closing_step:
        heights = heights[:-1]
    m = s + d
    parts = []
    for j, fj in enumerate(heights):
        r = first_positive_row(s, d, j)
        if fj >= r:
            parts.extend(m * i + d * j for i in range(r, fj + 1))
        elif fj < r - 1:
            parts.extend(-(m * i + d * j) for i in range(fj + 1, r))
    lam = tuple(sorted(parts, reverse=True))
    if len(set(lam)) != len(lam) or not is_member(family, lam, triple(s, d)):
        raise AbacusError(f"path {p} does not decode to a member: {lam}")
    return lam


@lru_cache(maxsize=4096)
def _walks(n: int, h: int) -> Tuple[str, ...]:
    """All step strings of length ``n`` whose heights sum to ``h``."""
    if abs(h) > n:
        return ()
    if n == 0:
        return ("",)
    return tuple(c + rest for c in "UFD" for rest in _walks(n - 1, h - STEP[c]))


def enumerate_motzkin(x: int, y: int, rules: PathConstraintSet = PathConstraintSet()) -> List[FreeMotzkinPath]:
    """All free Motzkin paths of type (x, y) admitted by ``rules``, in U<F<D order."""
    pre = tuple(rules.forbidden_prefixes)
    suf = tuple(rules.forbidden_suffixes)
    return [FreeMotzkinPath(w) for w in _walks(x, y)
            if not (pre and w.startswith(pre)) and not (suf and w.endswith(suf))]
