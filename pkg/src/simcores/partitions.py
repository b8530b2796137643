"""Partitions, strict partitions, and the three flavours of core predicates.

Boxes are addressed 1-based as (row, column).  Shifted diagrams keep the
absolute column, so row ``i`` of a shifted diagram occupies columns
``i .. i + parts[i-1] - 1``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

Box = Tuple[int, int]


class CoreFamily(enum.Enum):
    SC = "sc"  # self-conjugate cores (ordinary partitions)
    BC = "bc"  # bar-cores
    CS = "cs"  # core shifted Young diagrams
    DD = "dd"  # doubled distinct cores

    @classmethod
    def parse(cls, text: str) -> "CoreFamily":
        return cls(text.strip().lower())

    @property
    def strict(self) -> bool:
        return self is not CoreFamily.SC


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __contains__(self, x):
        return x in self.parts

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __str__(self):
        return format_parts(self.parts)


@dataclass(frozen=True, order=True)
class StrictPartition(Partition):
    """A partition with pairwise distinct parts."""

    def __post_init__(self):
        super().__post_init__()
        if any(self.parts[i] == self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError(f"parts must be distinct: {self.parts}")


def format_parts(parts: Iterable[int]) -> str:
    parts = tuple(parts)
    return ",".join(map(str, parts)) if parts else "-"


def parse_parts(text: str) -> Tuple[int, ...]:
    """Parse ``"7,6,3,2"`` (or ``-`` / ``[]`` / empty for the empty partition)."""
    text = text.strip().strip("()[]")
    if text in ("", "-"):
        return ()
    parts = tuple(sorted((int(x) for x in text.split(",") if x.strip()), reverse=True))
    return parts


def _t(p) -> Tuple[int, ...]:
    return p.parts if isinstance(p, Partition) else tuple(p)


def _column_lengths(parts: Tuple[int, ...]) -> List[int]:
    cols = [0] * (parts[0] if parts else 0)
    for x in parts:
        for j in range(x):
            cols[j] += 1
    return cols


def conjugate(p) -> Partition:
    return Partition(tuple(_column_lengths(_t(p))))


def hook_lengths(p) -> Dict[Box, int]:
    """Map each box (i, j) of the Young diagram to its hook length."""
    parts = _t(p)
    conj = _column_lengths(parts)
    return {
        (i, j): parts[i - 1] - j + conj[j - 1] - i + 1
        for i in range(1, len(parts) + 1)
        for j in range(1, parts[i - 1] + 1)
    }


def is_s_core(p, s: int) -> bool:
    """No hook length is divisible by ``s``."""
    parts = _t(p)
    conj = _column_lengths(parts)
    for i, row in enumerate(parts):
        for j in range(row):
            if (row - j + conj[j] - i - 1) % s == 0:
                return False
    return True


def is_self_conjugate(p) -> bool:
    parts = _t(p)
    return _column_lengths(parts) == list(parts)


def shifted_hook_rows(sp) -> List[Tuple[int, ...]]:
    """Rows of shifted hook lengths, left to right.

    Columns left of the last row's start pair with later parts
    (``parts[i] + parts[j+1]``); the remaining columns are ordinary hooks of
    ``mu = (parts[k] - ell + k)``.
    """
    lam = _t(sp)
    ell = len(lam)
    mu = tuple(lam[k] - ell + k + 1 for k in range(ell))
    mu_cols = _column_lengths(mu)
    rows = []
    for i in range(ell):
        paired = [lam[i] + lam[j] for j in range(i + 1, ell)]
        m = mu[i]
        rows.append(tuple(paired + [m - c - 1 + mu_cols[c] - i for c in range(m)]))
    return rows


def shifted_hook_lengths(sp) -> Dict[Box, int]:
    """Shifted hook lengths keyed by absolute (row, column) of the shifted diagram."""
    return {(i, j): h
            for i, row in enumerate(shifted_hook_rows(sp), 1)
            for j, h in enumerate(row, i)}


def bar_lengths(sp) -> List[Set[int]]:
    """Bar lengths of every row; row ``i`` is ``result[i-1]``."""
    lam = _t(sp)
    rows = []
    for i, a in enumerate(lam):
        rest = lam[i + 1:]
        row = {a + b for b in rest} | (set(range(1, a + 1)) - {a - b for b in rest})
        rows.append(row)
    return rows


def is_bar_core(sp, s: int) -> bool:
    return all(s not in row for row in bar_lengths(sp))


def bar_core_violation(sp, s: int) -> Optional[str]:
    """Describe the first failed clause of the bar-core characterization, or None."""
    lam = _t(sp)
    parts = set(lam)
    if s in parts:
        return f"clause (a): {s} is a part"
    for p in lam:
        if p > s and p - s not in parts:
            return f"clause (b): part {p} exceeds {s} but {p - s} is not a part"
    half = s // 2 if s % 2 == 0 else -1
    seen: Dict[int, int] = {}
    for a in lam:
        r = a % s
        if r != half and (-r) % s in seen:
            return f"clause (c): parts {seen[(-r) % s]} and {a} sum to a multiple of {s}"
        seen[r] = a
    return None


def is_bar_core_char(sp, s: int) -> bool:
    return bar_core_violation(sp, s) is None


def doubled_distinct(sp) -> Partition:
    """The partition with Frobenius symbol (parts | parts - 1)."""
    lam = _t(sp)
    r = len(lam)
    rows = [lam[i] + i + 1 for i in range(r)]
    # column j holds lam[j] + j boxes; rows below the diagonal count them
    below = _column_lengths(tuple(lam[j] + j for j in range(r)))[r:]
    return Partition(tuple(rows + below))


def is_dd_core(sp, s: int) -> bool:
    return is_s_core(doubled_distinct(sp), s)


def is_dd_core_char(sp, s: int) -> bool:
    return dd_core_violation(sp, s) is None


def dd_core_violation(sp, s: int) -> Optional[str]:
    why = bar_core_violation(sp, s)
    if why is None and s % 2 == 0 and s // 2 in _t(sp):
        why = f"half modulus {s // 2} is a part"
    return why


def is_csyd(sp, s: int) -> bool:
    """No shifted hook length is divisible by ``s``."""
    return all(h % s for row in shifted_hook_rows(sp) for h in row)


def is_csyd_char(sp, s: int) -> bool:
    return csyd_violation(sp, s) is None


def csyd_violation(sp, s: int) -> Optional[str]:
    why = bar_core_violation(sp, s)
    if why is None and s % 2 == 0 and 3 * s // 2 in _t(sp):
        why = f"{3 * s // 2} (three halves of the modulus) is a part"
    return why


_DIRECT = {
    CoreFamily.BC: is_bar_core,
    CoreFamily.CS: is_csyd,
    CoreFamily.DD: is_dd_core,
}
_VIOLATION = {
    CoreFamily.BC: bar_core_violation,
    CoreFamily.CS: csyd_violation,
    CoreFamily.DD: dd_core_violation,
}


def is_member(family: CoreFamily, p, moduli: Sequence[int]) -> bool:
    """Definition-direct membership of ``p`` in the simultaneous family."""
    if family is CoreFamily.SC:
        return is_self_conjugate(p) and all(is_s_core(p, s) for s in moduli)
    test = _DIRECT[family]
    return all(test(p, s) for s in moduli)


def membership_violation(family: CoreFamily, sp, moduli: Sequence[int]) -> Optional[str]:
    """First violated characterization clause for a strict family, or None."""
    lam = _t(sp)
    if len(set(lam)) != len(lam):
        return "parts are not distinct"
    for s in moduli:
        why = _VIOLATION[family](lam, s)
        if why is not None:
            return f"modulus {s}: {why}"
    return None
