import pytest

from hypermap_census import (
    CensusError,
    CountTable,
    NegativeCoefficientError,
    faces_from_key,
    validate_hypermap_key,
    validate_map_key,
)


@pytest.mark.parametrize("key,expected", [
    ((0, 4, 2, 2, 2), True),
    ((1, 3, 1, 1, 1), True),
    ((1, 2, 1, 1, 1), False),   # 1+1+1 != 2+0
    ((0, 0, 1, 0, 1), True),    # the empty hypermap
    ((0, 0, 2, 0, 1), False),
    ((0, 1, 1, 1, 1), True),
    ((0, 4, 0, 2, 4), False),   # v must be >= 1
    ((0, 4, 2, 2, 0), False),   # f must be >= 1
    ((6, 13, 1, 1, 1), True),
])
def test_validate_hypermap_key(key, expected):
    assert validate_hypermap_key(*key) is expected


def test_validate_rejects_negative_arguments():
    assert not validate_hypermap_key(-1, 4, 2, 2, 4)
    assert not validate_hypermap_key(0, 4, 2, -2, 6)


@pytest.mark.parametrize("args,expected", [
    ((0, 4, 2, 2), 2),
    ((6, 13, 1, 1), 1),
    ((1, 3, 3, 3), -3),   # over-constrained, caller treats as "no such hypermap"
])
def test_faces_from_key(args, expected):
    assert faces_from_key(*args) == expected


def test_validate_map_key():
    assert validate_map_key(0, 0, 1, 1)          # the edgeless map
    assert validate_map_key(0, 1, 1, 2)          # the loop
    assert validate_map_key(0, 1, 2, 1)          # the link
    assert validate_map_key(1, 2, 1, 1)          # torus, two edges
    assert not validate_map_key(0, 1, 1, 1)
    assert not validate_map_key(1, 2, 0, 2)


def test_count_table_basics():
    table = CountTable(engine="kz", max_genus=0, max_darts=4)
    table.add(0, 4, 2, 2, 17)
    table.add(0, 4, 1, 1, 1)
    table.add(0, 4, 1, 1, 0)      # zero counts are dropped
    assert table.count(0, 4, 2, 2) == 17
    assert table.count(0, 4, 2, 2, f=2) == 17
    assert table.count(0, 4, 2, 2, f=3) == 0   # contradicts the genus relation
    assert table.count(0, 4, 3, 3) == 0
    assert len(table) == 2
    assert table.total(0, 4) == 18


def test_count_table_accumulates_and_orders_do_not_matter():
    entries = [(0, 4, 2, 2, 10), (0, 4, 1, 1, 1), (0, 4, 2, 2, 7)]
    t1 = CountTable(engine="kz", max_genus=0, max_darts=4)
    t2 = CountTable(engine="kz", max_genus=0, max_darts=4)
    for g, t, v, e, c in entries:
        t1.add(g, t, v, e, c)
    for g, t, v, e, c in reversed(entries):
        t2.add(g, t, v, e, c)
    assert t1 == t2
    assert t1.total(0, 4) == 18


def test_count_table_rejects_bad_entries():
    table = CountTable(engine="kz", max_genus=0, max_darts=4)
    with pytest.raises(NegativeCoefficientError):
        table.add(0, 4, 2, 2, -1)
    with pytest.raises(CensusError):
        table.add(0, 4, 4, 4, 1)   # no face count can satisfy the relation
    table.freeze()
    with pytest.raises(CensusError):
        table.add(0, 4, 2, 2, 1)


def test_every_stored_key_is_valid():
    table = CountTable(engine="kz", max_genus=2, max_darts=9)
    table.add(2, 7, 2, 1, 1183)
    table.add(2, 5, 1, 1, 8)
    for (g, t, v, e) in table.keys():
        assert validate_hypermap_key(g, t, v, e, faces_from_key(g, t, v, e))
