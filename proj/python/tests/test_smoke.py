import json

import pytest

import cubefire as cf


def test_hypercube_basics():
    assert cf.neighbors(5, 3) == [4, 7, 1]
    assert cf.gray_cycle(3) == [0, 1, 3, 2, 6, 7, 5, 4]
    assert cf.even_cycle(3, 6) == [0, 1, 3, 7, 5, 4]
    with pytest.raises(ValueError):
        cf.gray_cycle(0)


def test_constructors_cycle_with_their_order():
    for n, p in [(3, 4), (4, 5), (4, 7), (5, 11), (6, 29)]:
        part = cf.construct(n, p)
        assert part.order == p
        assert cf.validate(part) == (True, [])
        report = cf.evolve(cf.from_partition(part))
        assert report["transient"] == 0
        assert report["period"] == p
        assert report["firing_sets"] == [list(s) for s in part.sets]


def test_order_three_is_rejected():
    with pytest.raises(cf.DomainError):
        cf.construct_odd(5, 3)
    found, witness, _ = cf.search_partition(3, 3)
    assert not found and witness is None


def test_invalid_partition_is_reported():
    valid, violations = cf.validate(cf.LeftCyclicPartition(2, [[0, 1], [2, 3]]))
    assert not valid
    assert violations[0].startswith("internal-edge")


def test_json_round_trip():
    text = cf.h4_order7().to_json()
    assert json.loads(text)["sets"][5] == [4, 7, 9, 10]
    assert cf.LeftCyclicPartition.from_json(text) == cf.max_odd(4)


def test_census_and_reference_period():
    census = cf.census(2)
    assert census["total"] == 16
    assert {e["period"] for e in census["entries"]} == {1, 2, 4}
    assert cf.reference_period(cf.hamiltonian_orientation(3)) == (0, 1)
    assert cf.reference_period(cf.Orientation(1)) == (0, 2)


def test_block_schedule():
    report = cf.evolve(cf.Orientation(1), schedule=[[0], [1]])
    assert report["period"] == 2
    assert report["firing_sets"] == [[0], [1]]
