"""Acceptance sweeps, one group per criterion, all at exact integer equality.

The terminal summary prints one PASS/FAIL line per criterion.
"""
import itertools
import math
from functools import lru_cache

import pytest

from simcores import abacus as ab
from simcores import yinyang as yy
from simcores.abacus import constraints, enumerate_motzkin
from simcores.counting import Method, count, count_pair, consecutive_csyd_count, motzkin_count, size_order_report
from simcores.enumeration import EnumerationSpec, enumerate_family
from simcores.partitions import (
    CoreFamily,
    bar_lengths,
    doubled_distinct,
    hook_lengths,
    is_bar_core_char,
    is_csyd_char,
    is_dd_core_char,
    shifted_hook_rows,
)
from simcores.verify import (
    coprime_pairs,
    coprime_triples,
    pair_roundtrip_problems,
    series_checks,
    triple_roundtrip_problems,
)

PAIRS = coprime_pairs(13)
TRIPLES = coprime_triples(21)
STRICT = (CoreFamily.BC, CoreFamily.CS, CoreFamily.DD)


def criterion(n, title):
    return pytest.mark.criterion(n, title)


def brute(family, moduli):
    return len(enumerate_family(EnumerationSpec(family, moduli)))


def report(failures, limit=10):
    return f"{len(failures)} failing instance(s): " + "; ".join(map(str, failures[:limit]))


C1 = criterion(1, "pair sweep, bar-cores equal the binomial count")
C2 = criterion(2, "pair sweep, doubled distinct and CSYD formulas; (s, s+1) CSYD values")
C3 = criterion(3, "Yin-Yang path bijections and fixtures")
C4 = criterion(4, "triple sweep, brute force = closed form = path count")
C5 = criterion(5, "Motzkin path bijections and abacus fixtures")
C6 = criterion(6, "Motzkin closed forms equal path enumeration")
C7 = criterion(7, "structural invariants")
C8 = criterion(8, "generating functions and their identities")
C9 = criterion(9, "size ordering of the four triple families")


@C1
def test_pair_bar_core_counts():
    bad = []
    for s, t in PAIRS:
        want = math.comb(s // 2 + t // 2, s // 2)
        got = brute(CoreFamily.BC, (s, t))
        if got != want:
            bad.append(((s, t), got, want))
    assert not bad, report(bad)


@C2
def test_pair_dd_and_csyd_counts():
    bad = []
    for s, t in PAIRS:
        for fam in (CoreFamily.DD, CoreFamily.CS):
            got, want = brute(fam, (s, t)), count_pair(fam, s, t)
            if got != want:
                bad.append((fam.value, (s, t), got, want))
    assert not bad, report(bad)


@C2
def test_csyd_consecutive_pairs():
    assert consecutive_csyd_count(4) == 5 == count_pair(CoreFamily.CS, 4, 5)
    bad = [s for s in range(2, 13) if count_pair(CoreFamily.CS, s, s + 1) != consecutive_csyd_count(s)]
    assert not bad, report(bad)


@C3
def test_pair_path_bijections():
    bad = []
    for s, t in PAIRS:
        problems = pair_roundtrip_problems(s, t)
        if problems:
            bad.append(((s, t), problems[:2]))
    assert not bad, report(bad)


@C3
def test_yin_yang_fixtures():
    A = yy.build_diagram("A", 9, 13)
    B = yy.build_diagram("B", 8, 13)
    assert str(yy.to_path(A, (12, 4, 3, 2))) == "NEENNEEEEN"
    assert str(yy.to_path(B, (15, 7, 5, 2))) == "NEENNEEEEN"
    assert yy.path_region_sets(A, yy.NEPath("NEENNEEEEN")) == {12, 4, 3, 2}
    assert yy.path_region_sets(B, yy.NEPath("NEENNEEEEN")) == {15, 7, 5, 2}


@lru_cache(maxsize=None)
def triple_counts(s, d, fam):
    return tuple(count(fam, (s, d), True, m) for m in (Method.BRUTE, Method.FORMULA, Method.PATHS))


@C4
def test_triple_counts_agree():
    bad = []
    for s, d in TRIPLES:
        for fam in STRICT:
            got = triple_counts(s, d, fam)
            if len(set(got)) != 1:
                bad.append((fam.value, (s, d), dict(zip(("brute", "formula", "paths"), got))))
    assert not bad, report(bad)


@C4
def test_triple_spot_values():
    assert triple_counts(3, 2, CoreFamily.BC) == (3, 3, 3)
    assert triple_counts(3, 1, CoreFamily.DD) == (2, 2, 2)


@C5
def test_triple_path_bijections():
    bad = []
    for s, d in TRIPLES:
        for fam in STRICT:
            problems = triple_roundtrip_problems(s, d, fam)
            if problems:
                bad.append((fam.value, (s, d), problems[:2]))
    assert not bad, report(bad)


@C5
@pytest.mark.parametrize("s, d, lam, f, path", [
    (7, 4, (8, 4, 2, 1), (0, 0, 0, -1, -2, -3, -2), "FFDDDU"),
    (7, 3, (8, 3, 1), (0, 0, -1, -2, -3, -2, -2), "FDDDUF"),
    (7, 3, (5, 3, 1), (0, 0, -1, -2, -2, -1, -2), "FDDFUD"),
    (8, 3, (7, 6, 3), (0, 0, 0, -1, -2, -3, -2), "FFDDDU"),
])
def test_abacus_fixtures(s, d, lam, f, path):
    assert ab.abacus_function(s, d, lam).extended() == f
    assert str(ab.to_motzkin(s, d, lam, CoreFamily.BC)) == path
    assert ab.FreeMotzkinPath(path).heights() == list(f)
    assert ab.from_motzkin(s, d, ab.FreeMotzkinPath(path), CoreFamily.BC) == lam


@C6
def test_motzkin_closed_forms():
    rules = {"a": constraints({"U"}), "b": constraints({"U"}, {"D"}), "c": constraints({"U"}, {"U"})}
    bad = []
    for a in range(1, 9):
        for b in range(1, 9):
            for v, r in rules.items():
                got, want = motzkin_count(a, b, v), len(enumerate_motzkin(a + b, -b, r))
                if got != want:
                    bad.append((a, b, v, got, want))
    assert not bad, report(bad)


def strict_universe():
    """Strict partitions with parts at most 20 and at most 8 parts."""
    for k in range(9):
        yield from itertools.combinations(range(20, 0, -1), k)


@C7
def test_bar_lengths_and_characterizations_over_universe():
    moduli = range(1, 22)
    divisors = [frozenset(s for s in moduli if h % s == 0) for h in range(64)]

    def dividing(hooks):
        return set().union(*(divisors[h] for h in hooks))

    bad = []
    for lam in strict_universe():
        rows = bar_lengths(lam)
        if [set(r) for r in shifted_hook_rows(lam)] != rows:
            bad.append(("row sets", lam))
        bars = set().union(*rows)
        hits_shifted = dividing(bars)
        hits_doubled = dividing(set(hook_lengths(doubled_distinct(lam)).values()))
        for s in moduli:
            if is_bar_core_char(lam, s) != (s not in bars):
                bad.append(("bar-core", lam, s))
            if is_csyd_char(lam, s) != (s not in hits_shifted):
                bad.append(("csyd", lam, s))
            if is_dd_core_char(lam, s) != (s not in hits_doubled):
                bad.append(("doubled distinct", lam, s))
    assert not bad, report(bad)


@C7
def test_abacus_labels_unique_up_to_sign():
    bad = []
    for s, d in TRIPLES:
        m, J = s + d, ab.last_column(s, d)
        for h in range(1, 3 * m):
            if h % m == 0 or (m % 2 == 0 and h % m == m // 2):
                continue
            hits = [((x - d * j) // m, j) for j in range(J + 1) for x in (h, -h) if (x - d * j) % m == 0]
            if len(hits) != 1 or ab.position_of(s, d, h) != hits[0]:
                bad.append(((s, d), h, hits))
    assert not bad, report(bad)


@C7
def test_abacus_functions_and_bead_contiguity():
    bad = []
    for s, d in TRIPLES:
        for lam in enumerate_family(EnumerationSpec(CoreFamily.BC, ab.triple(s, d))):
            f = ab.abacus_function(s, d, lam).values
            if f[0] != 0 or f[1] not in (0, -1) or any(abs(y - x) > 1 for x, y in zip(f, f[1:])):
                bad.append(("increments", (s, d), lam, f))
            for j, rows in ab.beads(s, d, lam).items():
                r = ab.first_positive_row(s, d, j)
                up = sorted(i for i in rows if i >= r)
                down = sorted(i for i in rows if i < r)
                if (up != list(range(r, r + len(up))) or down != list(range(r - len(down), r))
                        or (r in rows and r - 1 in rows)):
                    bad.append(("beads", (s, d), lam, j))
    assert not bad, report(bad)


@C8
def test_generating_functions():
    bad = [c.line() for c in series_checks(30, 8) if not c.ok]
    assert not bad, report(bad)


@C9
def test_size_orderings():
    bad = [size_order_report(s, d).describe() for s, d in TRIPLES if not size_order_report(s, d).holds]
    assert not bad, report(bad, limit=20)
