"""Partitions, colored Young diagrams and λ-colored multipartitions.

Rows and columns are 1-based; the box in row y, column x of a diagram
colored by i has content i + x - y. Row m of a partition colored by i is the
segment Δ[i-m+1, i-m+μ_m].
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

from crystaldict.config import get_config
from crystaldict.errors import MalformedInput, MalformedLevel1, check_bound
from crystaldict.models.segments import (
    Content,
    ContentMultiset,
    Multisegment,
    Segment,
    Weight,
    right_order,
)


class Box(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        if any(isinstance(p, bool) or not isinstance(p, int) or p <= 0 for p in parts):
            raise MalformedInput(f"partition parts must be positive integers: {parts!r}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise MalformedInput(f"partition parts must be weakly decreasing: {parts!r}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def part(self, row: int) -> int:
        """μ_row, with μ_row = 0 beyond the length."""
        return self.parts[row - 1] if 1 <= row <= len(self.parts) else 0

    def with_part(self, row: int, value: int) -> "Partition":
        parts = list(self.parts) + [0]
        parts[row - 1] = value
        return Partition(tuple(p for p in parts if p > 0))

    def __repr__(self) -> str:
        return f"Partition{self.parts!r}"


def conjugate(p: Partition) -> Partition:
    if not p.parts:
        return Partition()
    return Partition(tuple(sum(1 for part in p.parts if part >= col) for col in range(1, p.parts[0] + 1)))


@dataclass(frozen=True)
class ColoredPartition:
    shape: Partition
    color: Content

    @classmethod
    def of(cls, parts: Tuple[int, ...] | List[int], color: Content) -> "ColoredPartition":
        return cls(Partition(tuple(parts)), color)

    def content(self, box: Box) -> Content:
        return self.color + box.col - box.row

    @property
    def size(self) -> int:
        return self.shape.size

    def boxes(self) -> Iterator[Box]:
        for row, length in enumerate(self.shape.parts, start=1):
            for col in range(1, length + 1):
                yield Box(row, col)

    def weight(self) -> ContentMultiset:
        return ContentMultiset.from_contents(self.content(b) for b in self.boxes())

    @property
    def label(self) -> str:
        return "(" + ",".join(str(p) for p in self.shape.parts) + f"|{self.color})"

    def remove_box(self, content: Content) -> Optional["ColoredPartition"]:
        box = removable_boxes(self).get(content)
        if box is None:
            return None
        return ColoredPartition(self.shape.with_part(box.row, box.col - 1), self.color)

    def add_box(self, content: Content) -> Optional["ColoredPartition"]:
        box = addable_boxes(self).get(content)
        if box is None:
            return None
        return ColoredPartition(self.shape.with_part(box.row, box.col), self.color)


def removable_boxes(cp: ColoredPartition) -> Dict[Content, Box]:
    parts = cp.shape.parts
    found: Dict[Content, Box] = {}
    for row, length in enumerate(parts, start=1):
        if length > cp.shape.part(row + 1):
            box = Box(row, length)
            found[cp.content(box)] = box
    return found


def addable_boxes(cp: ColoredPartition) -> Dict[Content, Box]:
    parts = cp.shape.parts
    found: Dict[Content, Box] = {}
    for row in range(1, len(parts) + 2):
        length = cp.shape.part(row)
        if row == 1 or cp.shape.part(row - 1) > length:
            box = Box(row, length + 1)
            found[cp.content(box)] = box
    return found


def delta_of(cp: ColoredPartition) -> Multisegment:
    i = cp.color
    return Multisegment(
        tuple(Segment(i - m + 1, i - m + length) for m, length in enumerate(cp.shape.parts, start=1))
    )


def is_level1_form(d: Multisegment) -> bool:
    """Starts i, i-1, ..., each once, with strictly decreasing ends."""
    ordered = right_order(d)
    for first, second in zip(ordered, ordered[1:]):
        if second.start != first.start - 1 or second.end >= first.end:
            return False
    return True


def mu_of_level1(d: Multisegment, color: Content | None = None) -> ColoredPartition:
    if not d:
        if color is None:
            raise MalformedLevel1("empty multisegment has no color; pass the expected color")
        return ColoredPartition(Partition(), color)
    if not is_level1_form(d):
        raise MalformedLevel1(
            f"{d.label} is not of level-1 form (consecutive starts once each, strictly decreasing ends)"
        )
    ordered = right_order(d)
    top = ordered[0].start
    if color is not None and top != color:
        raise MalformedLevel1(f"{d.label} starts at {top}, expected color {color}")
    parts = tuple(s.end - top + m for m, s in enumerate(ordered, start=1))
    return ColoredPartition(Partition(parts), top)


@dataclass(frozen=True)
class Multipartition:
    """Ordered components colored by weakly decreasing colors i_1 ≥ ... ≥ i_r."""

    components: Tuple[ColoredPartition, ...] = ()

    def __post_init__(self) -> None:
        components = tuple(self.components)
        colors = [c.color for c in components]
        if any(colors[k] < colors[k + 1] for k in range(len(colors) - 1)):
            raise MalformedInput(f"component colors must be weakly decreasing, got {colors}")
        object.__setattr__(self, "components", components)

    @classmethod
    def empty(cls, lam: Weight) -> "Multipartition":
        return cls(tuple(ColoredPartition(Partition(), c) for c in lam.components))

    @classmethod
    def of(cls, shapes: List[Tuple[int, ...]], colors: List[Content]) -> "Multipartition":
        if len(shapes) != len(colors):
            raise MalformedInput("one color per component required")
        return cls(tuple(ColoredPartition.of(s, c) for s, c in zip(shapes, colors)))

    @property
    def colors(self) -> Tuple[Content, ...]:
        return tuple(c.color for c in self.components)

    @property
    def lam(self) -> Weight:
        return Weight.from_colors(self.colors)

    @property
    def size(self) -> int:
        return sum(c.size for c in self.components)

    @property
    def level(self) -> int:
        return len(self.components)

    def replace(self, index: int, component: ColoredPartition) -> "Multipartition":
        items = list(self.components)
        items[index] = component
        return Multipartition(tuple(items))

    def weight(self) -> ContentMultiset:
        total = ContentMultiset()
        for component in self.components:
            total = total + component.weight()
        return total

    @property
    def label(self) -> str:
        return "".join(c.label for c in self.components)

    def __repr__(self) -> str:
        return f"Multipartition({self.label})"


def delta_of_mp(mp: Multipartition) -> Multisegment:
    total = Multisegment()
    for component in mp.components:
        total = total.union(delta_of(component))
    return total


def is_kleshchev(mp: Multipartition) -> bool:
    for upper, lower in zip(mp.components, mp.components[1:]):
        shift = upper.color - lower.color
        # beyond x = len(upper) - shift the left side is 0
        for x in range(1, max(len(upper.shape) - shift, 0) + 1):
            if upper.shape.part(shift + x) > lower.shape.part(x):
                return False
    return True


def _partitions_bounded(n: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int, bound: int | None = None) -> List[Partition]:
    """All partitions of n, in increasing lexicographic order of parts."""
    check_bound("partition size", n, bound if bound is not None else get_config().partitions_max_n)
    return [Partition(parts) for parts in sorted(_partitions_bounded(n, n))]


def _compositions(n: int, r: int) -> Iterator[Tuple[int, ...]]:
    if r == 0:
        if n == 0:
            yield ()
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, r - 1):
            yield (first,) + rest


def enumerate_multipartitions(lam: Weight, n: int, bound: int | None = None) -> List[Multipartition]:
    """All λ-colored multipartitions of total size n (no Kleshchev filter)."""
    check_bound(
        "multipartition size", n, bound if bound is not None else get_config().multipartitions_max_n
    )
    colors = lam.components
    found: List[Multipartition] = []
    for sizes in _compositions(n, len(colors)):
        choices = [[Partition(p) for p in sorted(_partitions_bounded(k, k))] for k in sizes]
        for shapes in product(*choices):
            found.append(
                Multipartition(tuple(ColoredPartition(s, c) for s, c in zip(shapes, colors)))
            )
    return found


def enumerate_kleshchev(lam: Weight, n: int, bound: int | None = None) -> List[Multipartition]:
    return [mp for mp in enumerate_multipartitions(lam, n, bound) if is_kleshchev(mp)]
