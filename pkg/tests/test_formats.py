import pytest
from hypothesis import given

from strategies import degree_vectors, diagram_tuples, diagrams
from tensorlayers.diagrams import DiagramTuple
from tensorlayers.formats import (
    ParseError,
    format_degree,
    format_partition,
    format_tuple,
    parse_degree,
    parse_partition,
    parse_tuple,
)


def test_partition_text():
    assert format_partition(()) == "-"
    assert parse_partition("3,2,1") == (3, 2, 1)
    assert parse_partition("-") == ()


def test_tuple_text_order_is_outward():
    lam = DiagramTuple(((1,), (2,)), (), (1, 1), ((3,), ()))
    assert format_tuple(lam) == "2/1|-;1,1|3/-"
    assert parse_tuple("2/1|-;1,1|3/-", 1) == lam
    assert parse_tuple("-|1;1|-", 0) == DiagramTuple(((),), (1,), (1,), ((),))


@pytest.mark.parametrize(
    "text, t, pos",
    [("-|1;x|-", 0, 4), ("-|1|-", 0, 2), ("-|1;1", 0, 0), ("-/-|1;1|-", 0, 0), ("-|1;1|-/1,2", 1, 8)],
)
def test_parse_errors_carry_position(text, t, pos):
    with pytest.raises(ParseError) as info:
        parse_tuple(text, t)
    assert info.value.position == pos


@given(diagrams(8))
def test_partition_roundtrip(lam):
    assert parse_partition(format_partition(lam)) == lam


@given(diagram_tuples(2))
def test_tuple_roundtrip(lam):
    assert parse_tuple(format_tuple(lam), 2) == lam


@given(degree_vectors(1))
def test_degree_roundtrip(l):
    assert parse_degree(format_degree(l), 1) == l
