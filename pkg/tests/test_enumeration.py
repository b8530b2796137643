import itertools
import math

import pytest

from simcores.enumeration import (
    EnumerationSpec,
    NoCoprimePair,
    count_by_weight,
    default_part_bound,
    enumerate_family,
    partitions,
)
from simcores.partitions import CoreFamily, is_member

STRICT = (CoreFamily.BC, CoreFamily.CS, CoreFamily.DD)


def subsets_oracle(family, moduli, bound):
    """Every subset of {1..bound}, filtered by the definition-direct predicates."""
    out = []
    for r in range(bound + 1):
        for c in itertools.combinations(range(bound, 0, -1), r):
            if is_member(family, c, moduli):
                out.append(c)
    return sorted(out)


@pytest.mark.parametrize("family, moduli, expected", [
    (CoreFamily.BC, (3, 5, 7), [(), (1,), (2,)]),
    (CoreFamily.DD, (4, 5), [(), (1,), (3,)]),
    (CoreFamily.DD, (3, 4, 5), [(), (1,)]),
])
def test_enumerate_examples(family, moduli, expected):
    assert enumerate_family(EnumerationSpec(family, moduli)) == expected


@pytest.mark.parametrize("moduli, bound", [((9, 13), 59), ((3, 5, 7), 8), ((2, 3), 3), ((1, 2, 3), 3), ((2, 3, 4), 4)])
def test_default_part_bound(moduli, bound):
    assert default_part_bound(moduli) == bound


def test_no_coprime_pair():
    with pytest.raises(NoCoprimePair):
        default_part_bound((4, 6, 8))


def test_bound_below_largest_modulus_is_rejected():
    with pytest.raises(ValueError):
        enumerate_family(EnumerationSpec(CoreFamily.BC, (3, 5), part_bound=4))


def test_self_conjugate_is_not_enumerated():
    with pytest.raises(ValueError):
        enumerate_family(EnumerationSpec(CoreFamily.SC, (3, 5)))


@pytest.mark.parametrize("family", STRICT)
@pytest.mark.parametrize("moduli", [(2, 3), (3, 4), (2, 5), (4, 5), (3, 7), (3, 5, 7), (2, 3, 4), (4, 5, 6), (5, 7, 9)])
def test_enumeration_matches_subset_oracle(family, moduli):
    bound = default_part_bound(moduli)
    if bound > 16:
        bound = 16
    got = enumerate_family(EnumerationSpec(family, moduli, bound))
    assert got == subsets_oracle(family, moduli, bound)


@pytest.mark.parametrize("family", STRICT)
@pytest.mark.parametrize("moduli", [(4, 7), (5, 8), (6, 7), (8, 13), (3, 5, 7), (4, 7, 10), (5, 6, 7)])
def test_default_bound_is_saturated(family, moduli):
    s, t = sorted(moduli)[:2]
    base = enumerate_family(EnumerationSpec(family, moduli))
    wider = enumerate_family(EnumerationSpec(family, moduli, default_part_bound(moduli) + s + t))
    assert base == wider


@pytest.mark.parametrize("moduli", [(3, 5), (5, 7), (3, 5, 7), (7, 9, 11)])
def test_odd_moduli_give_one_set(moduli):
    sets = [enumerate_family(EnumerationSpec(f, moduli)) for f in STRICT]
    assert sets[0] == sets[1] == sets[2]


def test_results_are_sorted_descending_tuples():
    found = enumerate_family(EnumerationSpec(CoreFamily.BC, (5, 7)))
    assert found == sorted(found)
    assert all(list(p) == sorted(p, reverse=True) for p in found)


def test_count_by_weight_examples():
    assert count_by_weight(CoreFamily.BC, 4, 2) == [1, 1, 1]
    dd = count_by_weight(CoreFamily.DD, 5, 12)
    assert all(c == 0 for c in dd[1::2])
    assert count_by_weight(CoreFamily.SC, 2, 1)[1] == 1


def test_partition_numbers():
    assert [len(partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_pair_sizes_are_binomial_for_bar_cores():
    for s, t in [(2, 3), (4, 5), (5, 8), (6, 7)]:
        assert math.gcd(s, t) == 1
        want = math.comb(s // 2 + t // 2, s // 2)
        assert len(enumerate_family(EnumerationSpec(CoreFamily.BC, (s, t)))) == want
