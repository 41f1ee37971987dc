import pytest
from hypothesis import given
from hypothesis import strategies as st

from crystaldict.models.partitions import ColoredPartition, enumerate_kleshchev
from crystaldict.models.segments import Weight
from crystaldict.services.graph import default_contents
from crystaldict.services.tensor import (
    CrystalElement,
    MultipartitionElement,
    PartitionElement,
    TensorElement,
    component_of,
    tensor_e,
    tensor_e_std,
    tensor_f,
    tensor_f_std,
)
from tests.strategies import colored_partitions

labels = st.integers(min_value=-4, max_value=4)
elements = colored_partitions().map(PartitionElement)


def _pe(parts, color):
    return PartitionElement(ColoredPartition.of(parts, color))


def _label(t):
    return t.label if t is not None else None


def test_elements_satisfy_protocol():
    assert isinstance(_pe((1,), 0), CrystalElement)
    assert isinstance(TensorElement.level1_empty(Weight.from_colors([0, 0])), CrystalElement)
    assert isinstance(MultipartitionElement.empty(Weight.from_colors([1, 0])), CrystalElement)


def test_e_is_null_when_minus_is_cancelled():
    t = TensorElement.of([_pe((1,), 0), _pe((), 0)])
    assert tensor_e(t, 0) is None
    assert t.eps(0) == 0


def test_f_acts_on_rightmost_plus():
    t = TensorElement.level1_empty(Weight.from_colors([0, 0]))
    assert tensor_f(t, 0).label == "(|0)*(1|0)"
    assert tensor_f(tensor_f(t, 0), 0).label == "(1|0)*(1|0)"


def test_inactive_label_is_null():
    t = TensorElement.level1_empty(Weight.from_colors([0, 0]))
    assert tensor_f(t, 5) is None
    assert tensor_e(t, 5) is None


def test_standard_convention_mirrors():
    t = TensorElement.level1_empty(Weight.from_colors([0, 0]))
    assert tensor_f_std(t, 0).label == "(1|0)*(|0)"
    t = TensorElement.of([_pe((1,), 0), _pe((), 0)])
    assert tensor_e_std(t, 0).label == "(|0)*(|0)"


def test_single_factor_matches_the_factor():
    p = _pe((2, 1), 0)
    t = TensorElement.of([p])
    for i in range(-3, 4):
        assert _label(tensor_e(t, i)) == _label(p.e(i))
        assert _label(tensor_f(t, i)) == _label(p.f(i))


def test_tensor_label_and_weight():
    t = TensorElement.of([_pe((1,), 1), _pe((2,), 0)])
    assert t.label == "(1|1)*(2|0)"
    assert t.size == 3
    assert t.weight().as_dict() == {0: 1, 1: 2}
    assert len(t) == 2


@given(elements, elements, labels)
def test_reversal_identity(a, b, i):
    t = TensorElement.of([a, b])
    assert _label(tensor_e_std(t.reversed(), i)) == _label(
        tensor_e(t, i).reversed() if tensor_e(t, i) is not None else None
    )
    assert _label(tensor_f_std(t.reversed(), i)) == _label(
        tensor_f(t, i).reversed() if tensor_f(t, i) is not None else None
    )


@given(elements, elements, elements, labels)
def test_nested_tensor_agrees_with_flat(a, b, c, i):
    flat = TensorElement.of([a, b, c])
    left = TensorElement.of([TensorElement.of([a, b]), c])
    right = TensorElement.of([a, TensorElement.of([b, c])])
    for nested in (left, right):
        assert nested.eps(i) == flat.eps(i)
        assert nested.phi(i) == flat.phi(i)
        assert _label(tensor_e(nested, i)) == _label(tensor_e(flat, i))
        assert _label(tensor_f(nested, i)) == _label(tensor_f(flat, i))


@given(elements, elements, labels)
def test_tensor_inverse_laws(a, b, i):
    t = TensorElement.of([a, b])
    down = tensor_e(t, i)
    if down is not None:
        assert tensor_f(down, i) == t
    up = tensor_f(t, i)
    if up is not None:
        assert tensor_e(up, i) == t


@pytest.mark.parametrize(
    "colors, max_n, expected",
    [([0, 0], 1, 2), ([0, 0], 0, 1), ([0], 3, 7), ([0], 4, 12)],
)
def test_component_sizes(colors, max_n, expected):
    lam = Weight.from_colors(colors)
    graph = component_of(TensorElement.level1_empty(lam), range(-6, 7), max_n)
    assert len(graph.nodes) == expected


@pytest.mark.parametrize("colors", [[0, 0], [1, 0], [2, 0], [1, 0, 0]])
def test_component_is_the_kleshchev_set(colors):
    lam = Weight.from_colors(colors)
    graph = component_of(TensorElement.level1_empty(lam), default_contents(lam, 4), 4)
    expected = {
        "*".join(c.label for c in mp.components)
        for n in range(5)
        for mp in enumerate_kleshchev(lam, n)
    }
    assert {node.label for node in graph.nodes} == expected


def test_multipartition_element_follows_box_rule():
    element = MultipartitionElement.empty(Weight.from_colors([0, 0]))
    assert element.f(0).label == "(|0)(1|0)"
    assert element.f(0).f(0).f(0) is None
