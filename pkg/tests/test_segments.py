import pytest
from hypothesis import given

from crystaldict.errors import MalformedInput
from crystaldict.models.segments import (
    ContentMultiset,
    Multisegment,
    Segment,
    Weight,
    content_multiset,
    ends_of,
    group_by_end,
    left_order,
    m_of,
    n_of,
    right_order,
    starts_of,
)
from crystaldict.services.selfcheck import GOLDEN_EXAMPLE
from tests.strategies import multisegments


def _pairs(segments):
    return [(s.start, s.end) for s in segments]


def test_right_order_of_worked_example():
    assert _pairs(right_order(GOLDEN_EXAMPLE)) == [
        (5, 6), (5, 7), (4, 7), (3, 3), (3, 6), (3, 6), (3, 7),
        (3, 7), (2, 6), (2, 7), (2, 9), (-1, 1), (-1, 7), (-2, 2),
    ]


def test_left_order_of_worked_example():
    assert _pairs(left_order(GOLDEN_EXAMPLE)) == [
        (2, 9), (-1, 7), (2, 7), (3, 7), (3, 7), (4, 7), (5, 7),
        (2, 6), (3, 6), (3, 6), (5, 6), (3, 3), (-2, 2), (-1, 1),
    ]


def test_sizes_of_worked_example():
    assert n_of(GOLDEN_EXAMPLE) == 64
    assert m_of(GOLDEN_EXAMPLE) == 14


def test_group_by_end():
    assert _pairs(group_by_end(GOLDEN_EXAMPLE, 7)) == [(5, 7), (4, 7), (3, 7), (3, 7), (2, 7), (-1, 7)]
    assert group_by_end(GOLDEN_EXAMPLE, 8) == Multisegment()


def test_ends_and_starts():
    assert ends_of(GOLDEN_EXAMPLE) == [1, 2, 3, 6, 7, 9]
    assert starts_of(GOLDEN_EXAMPLE) == [-2, -1, 2, 3, 4, 5]


def test_content_multiset():
    d = Multisegment.of([(0, 2), (1, 1)])
    assert content_multiset(d).as_dict() == {0: 1, 1: 2, 2: 1}
    assert content_multiset(d).total == 4


def test_insertion_order_does_not_matter():
    assert Multisegment.of([(0, 1), (1, 1)]) == Multisegment.of([(1, 1), (0, 1)])


def test_labels():
    assert Multisegment().label == "∅"
    assert Multisegment.of([(0, 1), (1, 1)]).label == "[1,1]+[0,1]"


@pytest.mark.parametrize("bad", [(2, 1), (0.5, 1), (True, 2)])
def test_segment_validation(bad):
    with pytest.raises(MalformedInput):
        Segment(*bad)


def test_multisegment_rejects_non_pairs():
    with pytest.raises(MalformedInput):
        Multisegment.of([(1, 2, 3)])


def test_replace_one_drops_empty_result():
    d = Multisegment.of([(0, 0), (1, 2)])
    assert d.replace_one(Segment(0, 0), None) == Multisegment.of([(1, 2)])
    with pytest.raises(KeyError):
        d.replace_one(Segment(5, 5), None)


def test_content_multiset_remove_one():
    counts = ContentMultiset.from_contents([0, 0, 1])
    assert counts.remove_one(0).as_dict() == {0: 1, 1: 1}
    with pytest.raises(KeyError):
        counts.remove_one(3)


def test_weight_components_and_label():
    lam = Weight.from_colors([0, 2, 0])
    assert lam.components == (2, 0, 0)
    assert lam.level == 3
    assert lam.m(0) == 2 and lam.m(1) == 0
    assert lam.label == "Λ_2+2Λ_0"
    assert Weight().label == "0"


def test_weight_rejects_nonpositive_multiplicity():
    with pytest.raises(MalformedInput):
        Weight(((0, 0),))


@given(multisegments())
def test_orders_are_permutations(d):
    assert sorted(_pairs(left_order(d))) == sorted(_pairs(right_order(d)))
    assert n_of(d) == content_multiset(d).total


@given(multisegments())
def test_right_order_keys_are_sorted(d):
    keys = [(-s.start, s.end) for s in right_order(d)]
    assert keys == sorted(keys)
