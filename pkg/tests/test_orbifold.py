import itertools

import pytest

from hypermap_census import (
    NotFilledError,
    OrbifoldSignature,
    RootedCensus,
    admissible_signatures,
    epi0,
    faces_from_key,
    sensed_table,
)
from bruteforce import epi_count_by_tuples, signatures_by_search


def as_pairs(sigs):
    return {(s.quotient_genus, s.orbit_lengths) for s in sigs}


def test_signature_examples():
    assert as_pairs(admissible_signatures(1, 1)) == {(1, ())}
    assert as_pairs(admissible_signatures(1, 2)) == {(1, ()), (0, (1, 1, 1, 1))}
    assert as_pairs(admissible_signatures(0, 3)) == {(0, (1, 1))}


def test_signatures_match_unstructured_search():
    for G in range(0, 4):
        for L in range(1, 13):
            assert as_pairs(admissible_signatures(G, L)) == \
                signatures_by_search(G, L), (G, L)


def test_signature_validation_and_derived_fields():
    sig = OrbifoldSignature(4, 0, (1, 1, 2))
    assert sig.branch_indices == (2, 4, 4)
    assert sig.covered_genus() == 1    # quarter turns of the torus
    assert OrbifoldSignature(3, 0, (1, 1)).covered_genus() == 0
    with pytest.raises(ValueError):
        OrbifoldSignature(4, 0, (3,))    # 3 does not divide 4
    with pytest.raises(ValueError):
        OrbifoldSignature(4, 0, (4,))    # orbit length must be proper


def test_every_admissible_signature_covers_its_genus():
    for G in range(0, 4):
        for L in range(1, 13):
            for sig in admissible_signatures(G, L):
                assert sig.covered_genus() == G


def test_epi0_examples():
    assert epi0(OrbifoldSignature(1, 3, ())) == 1
    assert epi0(OrbifoldSignature(2, 0, (1, 1, 1, 1))) == 1
    assert epi0(OrbifoldSignature(4, 0, (1, 1, 2))) == 2


def test_epi0_against_tuple_enumeration():
    checked = 0
    for G in range(0, 4):
        for L in range(1, 13):
            for sig in admissible_signatures(G, L):
                assert epi0(sig) == epi_count_by_tuples(
                    sig.period, sig.quotient_genus, sig.orbit_lengths), sig
                checked += 1
    assert checked > 40


@pytest.mark.parametrize("G,key,expected", [
    (0, (4, 2, 2, 2), 5),
    (2, (8, 2, 2, 2), 2664),
    (1, (6, 2, 2, 2), 78),
    (5, (11, 1, 1, 1), 54990),
])
def test_sensed_printed_counts(G, key, expected):
    E, v, e, f = key
    table = sensed_table(G, E, RootedCensus(G, E))
    assert table.count(G, E, v, e, f) == expected


def test_sensed_totals():
    table = sensed_table(1, 6, RootedCensus(1, 6))
    assert table.total(1, 6) == 285
    table = sensed_table(2, 6, RootedCensus(2, 6))
    assert table.total(2, 6) == 48


def test_one_dart_and_trivial_cases():
    table = sensed_table(0, 2, RootedCensus(0, 2))
    assert table.count(0, 1, 1, 1, 1) == 1
    assert table.count(0, 2, 1, 1, 2) == 1
    assert table.total(0, 2) == 3


def test_burnside_sandwich_and_key_subset():
    for G in range(0, 3):
        rooted = RootedCensus(G, 9)
        sensed = sensed_table(G, 9, rooted)
        for E in range(2 * G + 1, 10):
            for (f, b, w), r in rooted.poly(G, E).terms():
                c = sensed.count(G, E, w, b)
                assert r <= E * c, (G, E, w, b)
                assert c <= r, (G, E, w, b)
        for (g, E, v, e), c in sensed.items():
            assert rooted.count(g, E, v, e, faces_from_key(g, E, v, e)) >= c


def test_sensed_permutation_symmetry():
    for G in range(0, 3):
        table = sensed_table(G, 8, RootedCensus(G, 8))
        for (g, E, v, e), c in table.items():
            f = faces_from_key(g, E, v, e)
            for pv, pe, pf in itertools.permutations((v, e, f)):
                assert table.count(g, E, pv, pe, pf) == c


def test_sensed_requires_covering_rooted_census():
    rooted = RootedCensus(0, 4)
    with pytest.raises(NotFilledError):
        sensed_table(1, 4, rooted)
    with pytest.raises(NotFilledError):
        sensed_table(0, 5, rooted)
