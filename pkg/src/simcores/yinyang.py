"""Yin-Yang diagrams and the NE lattice path encodings of (s, t) bar-cores.

A diagram has ``rows`` rows (numbered 1.. from the top) and ``cols`` columns.
Paths run from the lower-left to the upper-right corner.  Writing ``H(c)`` for
the number of N steps taken before the c-th E step, the cell in column ``c``
and ``r``-th row from the bottom lies below the path iff ``H(c) >= r``.  The
encoded part set is every positive entry above the path together with the
absolute value of every negative entry below it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, List, Tuple

from .partitions import CoreFamily, bar_core_violation, membership_violation


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class NEPath:
    steps: str

    def __post_init__(self):
        if set(self.steps) - {"N", "E"}:
            raise ValueError(f"NE path has steps outside N/E: {self.steps!r}")

    @property
    def target(self) -> Tuple[int, int]:
        return self.steps.count("E"), self.steps.count("N")

    def heights(self) -> List[int]:
        """``H(c)`` for each E step."""
        out, n = [], 0
        for step in self.steps:
            if step == "N":
                n += 1
            else:
                out.append(n)
        return out

    @classmethod
    def from_heights(cls, heights, rows: int) -> "NEPath":
        steps, prev = [], 0
        for h in heights:
            steps.append("N" * (h - prev) + "E")
            prev = h
        steps.append("N" * (rows - prev))
        return cls("".join(steps))

    def __str__(self):
        return self.steps


@dataclass(frozen=True)
class YinYangDiagram:
    kind: str
    s: int
    t: int
    entries: Tuple[Tuple[int, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else (self.t - 1) // 2

    def entry(self, i: int, j: int) -> int:
        """1-based, ``i`` counted from the top."""
        return self.entries[i - 1][j - 1]

    def column_from_bottom(self, c: int) -> List[int]:
        return [self.entries[i][c - 1] for i in range(self.rows - 1, -1, -1)]


def build_diagram(kind: str, s: int, t: int) -> YinYangDiagram:
    kind = kind.upper()
    if math.gcd(s, t) != 1:
        raise DiagramError(f"moduli {s}, {t} are not coprime")
    if kind == "A":
        if s % 2 == 0 or t % 2 == 0 or not 1 < s < t:
            raise DiagramError("diagram A needs odd 1 < s < t")
        rows, offset = (s - 1) // 2, (s + 1) * t // 2
    elif kind == "B":
        if s % 2 or t % 2 == 0:
            raise DiagramError("diagram B needs even s and odd t")
        rows, offset = s // 2, (s + 2) * t // 2
    else:
        raise DiagramError(f"unknown diagram kind {kind!r}")
    cols = (t - 1) // 2
    entries = tuple(
        tuple(-offset + j * s + i * t for j in range(1, cols + 1))
        for i in range(1, rows + 1)
    )
    return YinYangDiagram(kind, s, t, entries)


def diagram_for(s: int, t: int) -> YinYangDiagram:
    """The diagram that encodes (s, t) bar-cores, reordering the moduli as needed."""
    if s % 2 == 0:
        return build_diagram("B", s, t)
    if t % 2 == 0:
        return build_diagram("B", t, s)
    return build_diagram("A", min(s, t), max(s, t))


def _check_target(d: YinYangDiagram, p: NEPath):
    if p.target != (d.cols, d.rows):
        raise DiagramError(f"path {p} has target {p.target}, diagram needs {(d.cols, d.rows)}")


def path_region_sets(d: YinYangDiagram, p: NEPath) -> set:
    _check_target(d, p)
    out = set()
    for c, h in enumerate(p.heights(), start=1):
        for r, e in enumerate(d.column_from_bottom(c), start=1):
            below = h >= r
            if e > 0 and not below:
                out.add(e)
            elif e < 0 and below:
                out.add(-e)
    return out


def from_path(d: YinYangDiagram, p: NEPath) -> Tuple[int, ...]:
    return tuple(sorted(path_region_sets(d, p), reverse=True))


def to_path(d: YinYangDiagram, sp) -> NEPath:
    lam = tuple(sp)
    parts = set(lam)
    for s in (d.s, d.t):
        why = bar_core_violation(lam, s)
        if why is not None:
            raise DiagramError(f"not a bar-core for modulus {s}: {why}")
    heights = []
    for c in range(1, d.cols + 1):
        marks = [(e < 0 and -e in parts) or (e > 0 and e not in parts)
                 for e in d.column_from_bottom(c)]
        h = sum(marks)
        if marks != [True] * h + [False] * (len(marks) - h):
            raise DiagramError(f"column {c} marking is not contiguous")
        heights.append(h)
    if any(a > b for a, b in zip(heights, heights[1:])):
        raise DiagramError("column heights are not monotone")
    path = NEPath.from_heights(heights, d.rows)
    if path_region_sets(d, path) != parts:
        raise DiagramError("partition has parts outside the diagram")
    return path


def all_paths(east: int, north: int) -> Iterator[NEPath]:
    """Every NE path with the given step counts, in lexicographic order (E < N)."""
    n = east + north
    for north_at in combinations(range(n), north):
        steps = ["E"] * n
        for k in north_at:
            steps[k] = "N"
        yield NEPath("".join(steps))


def _even_odd(s: int, t: int):
    if s % 2 or t % 2 == 0 or math.gcd(s, t) != 1:
        raise DiagramError("need coprime even s and odd t")
    return build_diagram("B", s, t)


def dd_paths(s: int, t: int) -> List[NEPath]:
    """Paths in B(s, t) encoding doubled distinct (s, t)-cores: those ending in N."""
    d = _even_odd(s, t)
    return [p for p in all_paths(d.cols, d.rows) if p.steps.endswith("N")]


def csyd_paths(s: int, t: int) -> Tuple[List[NEPath], List[NEPath]]:
    """Paths in B(s, t) encoding (s, t)-CSYDs, split by whether ``s/2`` is a part.

    The first list (ending in N) omits ``s/2``; the second (ending in NE) contains it.
    """
    d = _even_odd(s, t)
    paths = list(all_paths(d.cols, d.rows))
    return ([p for p in paths if p.steps.endswith("N")],
            [p for p in paths if p.steps.endswith("NE")])


def shorten_dd(p: NEPath) -> NEPath:
    """Drop the final N: a path in NE((t-1)/2, (s-2)/2)."""
    if not p.steps.endswith("N"):
        raise DiagramError(f"{p} does not end with N")
    return NEPath(p.steps[:-1])


def shorten_cs(p: NEPath) -> NEPath:
    """Drop the final NE: a path in NE((t-3)/2, (s-2)/2)."""
    if not p.steps.endswith("NE"):
        raise DiagramError(f"{p} does not end with NE")
    return NEPath(p.steps[:-2])


def family_paths(family: CoreFamily, s: int, t: int) -> List[NEPath]:
    """Paths of the Yin-Yang diagram for (s, t) that encode members of ``family``."""
    d = diagram_for(s, t)
    paths = list(all_paths(d.cols, d.rows))
    if family is CoreFamily.BC or d.kind == "A":
        return paths
    if family is CoreFamily.DD:
        return dd_paths(d.s, d.t)
    if family is CoreFamily.CS:
        first, second = csyd_paths(d.s, d.t)
        return first + second
    raise ValueError(f"no path model for family {family.value}")


def map_to_path(family: CoreFamily, s: int, t: int, sp) -> NEPath:
    """Family-checked encoding of ``sp`` as a path in its Yin-Yang diagram."""
    why = membership_violation(family, sp, (s, t))
    if why is not None:
        raise DiagramError(why)
    return to_path(diagram_for(s, t), sp)


def map_to_partition(family: CoreFamily, s: int, t: int, p: NEPath) -> Tuple[int, ...]:
    d = diagram_for(s, t)
    _check_target(d, p)
    if d.kind == "B" and family is CoreFamily.DD and not p.steps.endswith("N"):
        raise DiagramError("doubled distinct paths must end with N")
    if d.kind == "B" and family is CoreFamily.CS and p.steps.endswith("EE"):
        raise DiagramError("CSYD paths cannot end with EE")
    return from_path(d, p)
