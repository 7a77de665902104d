import pytest
from hypothesis import given

from forest_patterns import CycleDecomposition, Forest, Permutation
from forest_patterns.textio import (
    cycles_to_text,
    forest_from_json,
    forest_to_json,
    forest_to_text,
    parse_composition,
    parse_cycles,
    parse_forest,
    parse_list_partition,
    parse_perm,
    parse_set_partition,
    perm_to_text,
)

from .conftest import forest_st


def test_perm_round_trip():
    p = Permutation([3, 6, 8, 4, 1, 10, 2, 9, 7, 5])
    assert parse_perm(perm_to_text(p)) == p
    assert perm_to_text(p) == "3,6,8,4,1,10,2,9,7,5"
    assert parse_perm("") == Permutation(())


def test_forest_text_round_trip():
    f = Forest({1: 0, 2: 1, 3: 1})
    assert forest_to_text(f) == "3|0 1 1"
    assert parse_forest("3|0 1 1") == f
    assert parse_forest(forest_to_text(f)) == f


def test_empty_forest_text():
    f = Forest({})
    assert forest_to_text(f) == "0|"
    assert parse_forest("0|") == f


def test_ordered_forest_text_round_trip():
    f = Forest({1: 0, 2: 0, 3: 1}, {0: (2, 1), 1: (3,), 2: (), 3: ()})
    text = forest_to_text(f)
    assert text == "3|0 0 1|2,1;3;;"
    assert parse_forest(text) == f


def test_forest_text_requires_standard_labels():
    with pytest.raises(ValueError):
        forest_to_text(Forest({4: 0, 7: 4}))


def test_forest_json_round_trip():
    f = Forest({1: 0, 2: 1, 3: 1})
    data = forest_to_json(f)
    assert data == {"n": 3, "parents": [0, 1, 1], "childOrder": None}
    assert forest_from_json(data) == f


def test_ordered_forest_json_round_trip():
    f = Forest({1: 0, 2: 0}, {0: (2, 1), 1: (), 2: ()})
    data = forest_to_json(f)
    assert data["childOrder"] == [[2, 1], [], []]
    assert forest_from_json(data) == f


@given(forest_st(max_n=6))
def test_standard_label_forests_round_trip(f):
    assert parse_forest(forest_to_text(f)) == f
    assert forest_from_json(forest_to_json(f)) == f


def test_parse_forest_rejects_malformed():
    with pytest.raises(ValueError):
        parse_forest("3|0 1")
    with pytest.raises(ValueError):
        parse_forest("nonsense")
    with pytest.raises(ValueError):
        parse_forest("2|0 1|1;2")  # needs n+1 order chunks


def test_cycles_round_trip():
    cd = CycleDecomposition([(11, 4, 10, 7), (12,), (8, 3, 1), (9, 5, 2, 6)])
    text = cycles_to_text(cd)
    assert text == "(11,4,10,7)(12)(8,3,1)(9,5,2,6)"
    assert parse_cycles(text) == cd
    assert parse_cycles("(11, 4, 10, 7)(12)(8,3,1)(9,5,2,6)") == cd


def test_partitioned_cycles_round_trip():
    cd = CycleDecomposition([(2, 1), (3,)], blocks=[[0, 1]])
    text = cycles_to_text(cd)
    assert parse_cycles(text) == cd


def test_parse_cycles_rejects_malformed():
    with pytest.raises(ValueError):
        parse_cycles("(1,2")
    with pytest.raises(ValueError):
        parse_cycles("(1)extra(2)")


def test_block_parsers():
    sp = parse_set_partition("{1,3,4,5}{2,6}")
    assert sp.blocks == ((1, 3, 4, 5), (2, 6))
    lp = parse_list_partition("{3,4,1}{2}")
    assert lp.blocks == ((3, 4, 1), (2,))
    with pytest.raises(ValueError):
        parse_set_partition("{1,2")
    with pytest.raises(ValueError):
        parse_set_partition("")


def test_parse_composition():
    assert parse_composition("3,1,2,2").parts == (3, 1, 2, 2)
