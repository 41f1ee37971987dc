import pytest
from hypothesis import given

from crystaldict.errors import BoundExceeded, MalformedInput, MalformedLevel1
from crystaldict.models.partitions import (
    Box,
    ColoredPartition,
    Multipartition,
    Partition,
    addable_boxes,
    conjugate,
    delta_of,
    delta_of_mp,
    enumerate_kleshchev,
    enumerate_multipartitions,
    enumerate_partitions,
    is_kleshchev,
    mu_of_level1,
    removable_boxes,
)
from crystaldict.models.segments import Multisegment, Weight, n_of
from tests.strategies import colored_partitions, partitions


def test_conjugate():
    assert conjugate(Partition((3, 1))) == Partition((2, 1, 1))
    assert conjugate(Partition()) == Partition()
    assert conjugate(Partition((2, 2))) == Partition((2, 2))


@pytest.mark.parametrize("parts", [(1, 2), (0,), (-1,)])
def test_partition_validation(parts):
    with pytest.raises(MalformedInput):
        Partition(parts)


def test_boxes_of_colored_partition():
    cp = ColoredPartition.of((3, 1), 0)
    assert removable_boxes(cp) == {2: Box(1, 3), -1: Box(2, 1)}
    assert addable_boxes(cp) == {3: Box(1, 4), 0: Box(2, 2), -2: Box(3, 1)}
    assert addable_boxes(ColoredPartition.of((), 5)) == {5: Box(1, 1)}
    assert removable_boxes(ColoredPartition.of((), 5)) == {}


def test_add_and_remove_box():
    cp = ColoredPartition.of((3, 1), 0)
    assert cp.remove_box(2) == ColoredPartition.of((2, 1), 0)
    assert cp.add_box(0) == ColoredPartition.of((3, 2), 0)
    assert cp.remove_box(0) is None
    assert cp.add_box(1) is None


def test_delta_of():
    assert delta_of(ColoredPartition.of((3, 1), 0)) == Multisegment.of([(0, 2), (-1, -1)])
    assert delta_of(ColoredPartition.of((2,), 1)) == Multisegment.of([(1, 2)])
    assert delta_of(ColoredPartition.of((), 4)) == Multisegment()


def test_mu_of_level1():
    assert mu_of_level1(Multisegment.of([(0, 2), (-1, -1)])) == ColoredPartition.of((3, 1), 0)
    assert mu_of_level1(Multisegment(), 3) == ColoredPartition.of((), 3)


@pytest.mark.parametrize(
    "pairs",
    [
        [(0, 0), (0, 0)],
        [(0, 1), (-1, 1)],
        [(0, 1), (-2, -2)],
    ],
)
def test_mu_of_level1_rejects_other_shapes(pairs):
    with pytest.raises(MalformedLevel1):
        mu_of_level1(Multisegment.of(pairs))


def test_mu_of_level1_checks_color():
    with pytest.raises(MalformedLevel1):
        mu_of_level1(Multisegment.of([(1, 1)]), 0)
    with pytest.raises(MalformedLevel1):
        mu_of_level1(Multisegment())


def test_multipartition_colors_must_decrease():
    with pytest.raises(MalformedInput):
        Multipartition.of([(), ()], [0, 1])
    assert Multipartition.of([(1,), ()], [1, 0]).lam == Weight.from_colors([0, 1])


def test_multipartition_label_and_weight():
    mp = Multipartition.of([(1,), (2,)], [1, 0])
    assert mp.label == "(1|1)(2|0)"
    assert mp.size == 3
    assert mp.weight().as_dict() == {0: 1, 1: 2}
    assert Multipartition.empty(Weight.from_colors([0, 0])).label == "(|0)(|0)"


@pytest.mark.parametrize(
    "shapes, colors, expected",
    [
        ([(1, 1), ()], [1, 0], False),
        ([(1,), (1,)], [0, 0], True),
        ([(1,), ()], [0, 0], False),
        ([(), (1,)], [0, 0], True),
        ([(1,), (1,)], [1, 0], True),
        ([(2,), (1,)], [0, 0], False),
        ([(1,), (2,)], [0, 0], True),
    ],
)
def test_is_kleshchev(shapes, colors, expected):
    assert is_kleshchev(Multipartition.of(shapes, colors)) is expected


def test_level1_multipartitions_are_kleshchev():
    assert all(is_kleshchev(mp) for mp in enumerate_multipartitions(Weight.from_colors([3]), 4))


def test_enumerate_partitions():
    assert [p.parts for p in enumerate_partitions(4)] == [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
    assert enumerate_partitions(0) == [Partition()]
    assert len(enumerate_partitions(10)) == 42


def test_enumerate_partitions_bound():
    with pytest.raises(BoundExceeded):
        enumerate_partitions(5, bound=4)


def test_enumerate_kleshchev_smallest_level2():
    found = enumerate_kleshchev(Weight.from_colors([0, 0]), 1)
    assert [mp.label for mp in found] == ["(|0)(1|0)"]


def test_kleshchev_counts_level1_are_partition_numbers():
    lam = Weight.from_colors([0])
    assert [len(enumerate_kleshchev(lam, n)) for n in range(7)] == [1, 1, 2, 3, 5, 7, 11]


@pytest.mark.parametrize("colors", [[0, 0], [1, 0], [2, 0], [1, 0, 0]])
def test_delta_of_mp_is_injective_on_kleshchev(colors):
    lam = Weight.from_colors(colors)
    for n in range(6):
        images = [delta_of_mp(mp) for mp in enumerate_kleshchev(lam, n)]
        assert len(set(images)) == len(images)


@given(colored_partitions())
def test_delta_of_and_mu_of_level1_are_inverse(cp):
    d = delta_of(cp)
    assert n_of(d) == cp.size
    assert mu_of_level1(d, cp.color) == cp


@given(colored_partitions())
def test_removable_and_addable_contents_are_disjoint(cp):
    removable = removable_boxes(cp)
    addable = addable_boxes(cp)
    assert not set(removable) & set(addable)
    corners = sum(1 for row in range(1, len(cp.shape) + 1) if cp.shape.part(row) > cp.shape.part(row + 1))
    assert len(removable) == corners
    assert len(addable) == corners + 1


@given(partitions())
def test_conjugate_is_an_involution(p):
    assert conjugate(conjugate(p)) == p
    assert conjugate(p).size == p.size
