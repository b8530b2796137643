"""Verification sweeps: closed forms vs. path models vs. brute force, plus fixtures."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List

from . import abacus as ab
from . import yinyang as yy
from .counting import Method, count, count_pair, consecutive_csyd_count, motzkin_count, size_order_report
from .enumeration import EnumerationSpec, count_by_weight, enumerate_family
from .partitions import (
    CoreFamily,
    bar_lengths,
    doubled_distinct,
    hook_lengths,
    is_bar_core,
    is_csyd,
    shifted_hook_lengths,
    shifted_hook_rows,
)
from .qseries import series_family

STRICT_FAMILIES = (CoreFamily.BC, CoreFamily.CS, CoreFamily.DD)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}" + (f"  [{self.detail}]" if self.detail else "")


def _expect(name: str, got, want) -> Check:
    return Check(name, got == want, "" if got == want else f"got {got!r}, want {want!r}")


def coprime_pairs(max_t: int, min_s: int = 2):
    return [(s, t) for t in range(min_s + 1, max_t + 1) for s in range(min_s, t) if math.gcd(s, t) == 1]


def coprime_triples(max_sum: int, min_s: int = 1):
    """``(s, d)`` with ``gcd(s, d) = 1`` and ``s + 2d <= max_sum``."""
    return [(s, d) for d in range(1, max_sum) for s in range(min_s, max_sum - 2 * d + 1)
            if math.gcd(s, d) == 1]


def figure_checks() -> List[Check]:
    lam = (7, 6, 3, 2)
    out = [
        _expect("hook h(1,2) of 7,6,3,2", hook_lengths(lam)[(1, 2)], 9),
        _expect("bar lengths of 7,6,3,2", bar_lengths(lam),
                [{13, 10, 9, 7, 6, 3, 2}, {9, 8, 6, 5, 2, 1}, {5, 3, 2}, {2, 1}]),
        _expect("bar-core moduli of 7,6,3,2 up to 20",
                [s for s in range(1, 21) if is_bar_core(lam, s)], [4, 11, 12] + list(range(14, 21))),
        _expect("shifted hook rows of 7,6,3,2", shifted_hook_rows(lam),
                [(13, 10, 9, 7, 6, 3, 2), (9, 8, 6, 5, 2, 1), (5, 3, 2), (2, 1)]),
        _expect("shifted hook (2,3) of 7,6,3,2", shifted_hook_lengths(lam)[(2, 3)], 8),
        _expect("7,6,3,2 is a 4-bar-core but not a 4-CSYD", (is_bar_core(lam, 4), is_csyd(lam, 4)), (True, False)),
        _expect("doubled distinct of 7,6,3,2", doubled_distinct(lam).parts, (8, 8, 6, 6, 4, 2, 2)),
    ]
    dd = doubled_distinct(lam)
    hooks = hook_lengths(dd)
    rows = [tuple(hooks[(i, j)] for j in range(1, dd[i - 1] + 1)) for i in range(1, len(dd) + 1)]
    out.append(_expect("hook rows of the doubled distinct 7,6,3,2", rows, [
        (14, 13, 10, 9, 7, 6, 3, 2), (13, 12, 9, 8, 6, 5, 2, 1), (10, 9, 6, 5, 3, 2),
        (9, 8, 5, 4, 2, 1), (6, 5, 2, 1), (3, 2), (2, 1)]))
    A = yy.build_diagram("A", 9, 13)
    B = yy.build_diagram("B", 8, 13)
    out += [
        _expect("Yin-Yang A(9,13)", A.entries, (
            (-43, -34, -25, -16, -7, 2), (-30, -21, -12, -3, 6, 15),
            (-17, -8, 1, 10, 19, 28), (-4, 5, 14, 23, 32, 41))),
        _expect("Yin-Yang B(8,13)", B.entries, (
            (-44, -36, -28, -20, -12, -4), (-31, -23, -15, -7, 1, 9),
            (-18, -10, -2, 6, 14, 22), (-5, 3, 11, 19, 27, 35))),
        _expect("A(9,13) path of 12,4,3,2", str(yy.to_path(A, (12, 4, 3, 2))), "NEENNEEEEN"),
        _expect("B(8,13) path of 15,7,5,2", str(yy.to_path(B, (15, 7, 5, 2))), "NEENNEEEEN"),
        _expect("A(9,13) path NEENNEEEEN decodes", yy.from_path(A, yy.NEPath("NEENNEEEEN")), (12, 4, 3, 2)),
        _expect("B(8,13) path NEENNEEEEN decodes", yy.from_path(B, yy.NEPath("NEENNEEEEN")), (15, 7, 5, 2)),
    ]
    fig5 = [  # (s, d, partition, extended abacus function, path)
        (7, 4, (8, 4, 2, 1), (0, 0, 0, -1, -2, -3, -2), "FFDDDU"),
        (7, 3, (8, 3, 1), (0, 0, -1, -2, -3, -2, -2), "FDDDUF"),
        (7, 3, (5, 3, 1), (0, 0, -1, -2, -2, -1, -2), "FDDFUD"),
        (8, 3, (7, 6, 3), (0, 0, 0, -1, -2, -3, -2), "FFDDDU"),
    ]
    for s, d, lam, f, path in fig5:
        label = f"({s + d},{d})-abacus of {','.join(map(str, lam))}"
        out.append(_expect(f"{label}: function", ab.abacus_function(s, d, lam).extended(), f))
        out.append(_expect(f"{label}: path", str(ab.to_motzkin(s, d, lam, CoreFamily.BC)), path))
        out.append(_expect(f"{label}: inverse", ab.from_motzkin(s, d, ab.FreeMotzkinPath(path), CoreFamily.BC), lam))
    out += [
        _expect("BC path set for (7,4)", ab.family_path_set(7, 4, CoreFamily.BC),
                ((6, -2), ab.constraints({"U"}, {"D"}))),
        _expect("DD path set for (7,3)", ab.family_path_set(7, 3, CoreFamily.DD),
                ((5, -2), ab.constraints({"U"}))),
        _expect("CS path set for (8,3)", ab.family_path_set(8, 3, CoreFamily.CS),
                ((6, -2), ab.constraints({"U"}, {"UU", "DD"}))),
    ]
    return out


def pair_roundtrip_problems(s: int, t: int) -> List[str]:
    d = yy.diagram_for(s, t)
    problems = []
    cores = enumerate_family(EnumerationSpec(CoreFamily.BC, (s, t)))
    images = set()
    for lam in cores:
        p = yy.to_path(d, lam)
        images.add(p.steps)
        if yy.path_region_sets(d, p) != set(lam) or yy.from_path(d, p) != lam:
            problems.append(f"core {lam} does not round trip")
    for p in yy.all_paths(d.cols, d.rows):
        lam = yy.from_path(d, p)
        if yy.to_path(d, lam) != p:
            problems.append(f"path {p} does not round trip")
    if len(images) != math.comb(d.rows + d.cols, d.rows):
        problems.append("image is not all paths")
    if d.kind == "B":
        dd = set(enumerate_family(EnumerationSpec(CoreFamily.DD, (s, t))))
        cs = set(enumerate_family(EnumerationSpec(CoreFamily.CS, (s, t))))
        half = d.s // 2
        for lam in cores:
            steps = yy.to_path(d, lam).steps
            if steps.endswith("N") != (lam in dd):
                problems.append(f"N-ending rule fails on {lam}")
            if steps.endswith("NE") != (lam in cs and half in lam):
                problems.append(f"NE-ending rule fails on {lam}")
    return problems


def pair_checks(max_t: int = 13) -> List[Check]:
    out = []
    for s, t in coprime_pairs(max_t):
        for fam in STRICT_FAMILIES:
            want = count_pair(fam, s, t)
            got = (count(fam, (s, t), False, Method.BRUTE), count(fam, (s, t), False, Method.PATHS))
            out.append(_expect(f"pair ({s},{t}) {fam.value} brute/paths = formula {want}", got, (want, want)))
        problems = pair_roundtrip_problems(s, t)
        out.append(Check(f"pair ({s},{t}) path bijection", not problems, "; ".join(problems[:3])))
    for s in range(2, max_t):
        out.append(_expect(f"CS ({s},{s + 1}) agrees with the (s, s+1) formula",
                           count_pair(CoreFamily.CS, s, s + 1), consecutive_csyd_count(s)))
    return out


def triple_roundtrip_problems(s: int, d: int, fam: CoreFamily) -> List[str]:
    problems = []
    (length, end), rules = ab.family_path_set(s, d, fam)
    paths = {p.steps for p in ab.enumerate_motzkin(length, end, rules)}
    members = enumerate_family(EnumerationSpec(fam, ab.triple(s, d)))
    images = set()
    for lam in members:
        p = ab.to_motzkin(s, d, lam, fam)
        images.add(p.steps)
        if ab.from_motzkin(s, d, p, fam) != lam:
            problems.append(f"{lam} does not round trip")
    if images != paths:
        problems.append(f"image differs from path set ({len(images)} vs {len(paths)})")
    return problems


def triple_checks(max_sum: int = 21) -> List[Check]:
    out = []
    for s, d in coprime_triples(max_sum):
        for fam in STRICT_FAMILIES:
            got = tuple(count(fam, (s, d), True, m) for m in Method)
            out.append(Check(f"triple ({s},{d}) {fam.value} formula/paths/brute", len(set(got)) == 1,
                             "" if len(set(got)) == 1 else f"{got}"))
            problems = triple_roundtrip_problems(s, d, fam)
            out.append(Check(f"triple ({s},{d}) {fam.value} path bijection", not problems, "; ".join(problems[:3])))
        rep = size_order_report(s, d)
        out.append(Check(f"triple ({s},{d}) size ordering, case {rep.case}", rep.holds,
                         "" if rep.holds else rep.describe()))
    rules = {"a": ab.constraints({"U"}), "b": ab.constraints({"U"}, {"D"}), "c": ab.constraints({"U"}, {"U"})}
    for a in range(1, 9):
        for b in range(1, 9):
            for v, r in rules.items():
                out.append(_expect(f"Motzkin count ({a},{b}) variant {v}", motzkin_count(a, b, v),
                                   len(ab.enumerate_motzkin(a + b, -b, r))))
    return out


def series_checks(max_n: int = 30, max_s: int = 8) -> List[Check]:
    out = []
    cache = {}
    for s in range(2, max_s + 1):
        for fam in CoreFamily:
            got = series_family(fam, s, max_n).coeffs
            want = count_by_weight(fam, s, max_n)
            cache[fam, s] = got
            out.append(_expect(f"{fam.value}_{s} series up to q^{max_n}", got, want))
            out.append(Check(f"{fam.value}_{s} coefficients nonnegative", min(got) >= 0))
    for s in range(3, min(max_s, 7) + 1, 2):
        dd = series_family(CoreFamily.DD, s, 2 * (max_n // 2)).coeffs
        bc = series_family(CoreFamily.BC, s, max_n // 2).coeffs
        out.append(_expect(f"dd_{s}(2n) = bc_{s}(n)", dd[::2], bc))
    for s in range(2, max_s + 1, 2):
        half = max_n // 2
        dd = series_family(CoreFamily.DD, s, 2 * half).coeffs
        bc = series_family(CoreFamily.BC, s, half).coeffs
        cs = series_family(CoreFamily.CS, s, half).coeffs
        ddx = lambda k: dd[k] if k >= 0 else 0  # noqa: E731
        bc_rec = [sum(ddx(2 * n - i * i * s) for i in range(0, 2 * n + 1) if i * i * s <= 2 * n) for n in range(half + 1)]
        cs_rec = [ddx(2 * n) + ddx(2 * n - s) for n in range(half + 1)]
        out.append(_expect(f"bc_{s} recurrence in dd_{s}", bc, bc_rec))
        out.append(_expect(f"cs_{s} recurrence in dd_{s}", cs, cs_rec))
    return out


SUITES: dict = {
    "figures": lambda m: figure_checks(),
    "pair": lambda m: pair_checks(m or 13),
    "triple": lambda m: triple_checks(m or 21),
    "series": lambda m: series_checks(m or 30),
}


def run_suite(name: str, limit: int = None) -> List[Check]:
    runner: Callable = SUITES[name]
    return runner(limit)
