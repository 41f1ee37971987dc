"""Segments, multisegments, weights and content bookkeeping.

A segment Δ[i, j] is the integer interval i..j (i ≤ j). Contents are plain
integers: the parameter is generic, so no modular reduction ever happens.
The empty segment Δ[j, j-1] is never stored; operations that would produce
it drop the segment instead.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple, Union

from crystaldict.errors import MalformedInput

Content = int
EMPTY_LABEL = "∅"


def _check_int(value: object, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedInput(f"{what} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class Segment:
    start: Content
    end: Content

    def __post_init__(self) -> None:
        _check_int(self.start, "segment start")
        _check_int(self.end, "segment end")
        if self.start > self.end:
            raise MalformedInput(f"segment [{self.start},{self.end}] has start > end")

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    def contents(self) -> range:
        return range(self.start, self.end + 1)

    @property
    def label(self) -> str:
        return f"[{self.start},{self.end}]"

    def right_key(self) -> Tuple[int, int]:
        # start descending, then end ascending
        return (-self.start, self.end)

    def left_key(self) -> Tuple[int, int]:
        # end descending, then start ascending
        return (-self.end, self.start)

    def __repr__(self) -> str:
        return f"Δ{self.label}"


SegmentLike = Union[Segment, Tuple[int, int], List[int]]


def as_segment(item: SegmentLike) -> Segment:
    if isinstance(item, Segment):
        return item
    try:
        start, end = item
    except (TypeError, ValueError):
        raise MalformedInput(f"expected a pair [i, j], got {item!r}") from None
    return Segment(start, end)


def trimmed(start: Content, end: Content) -> Segment | None:
    """Segment [start, end], or None when it would be empty."""
    if start > end:
        return None
    return Segment(start, end)


@dataclass(frozen=True)
class Multisegment:
    """Multiset of segments, stored in right order (the canonical form)."""

    segments: Tuple[Segment, ...] = ()

    def __post_init__(self) -> None:
        ordered = tuple(sorted((as_segment(s) for s in self.segments), key=Segment.right_key))
        object.__setattr__(self, "segments", ordered)

    @classmethod
    def of(cls, items: Iterable[SegmentLike] = ()) -> "Multisegment":
        return cls(tuple(as_segment(item) for item in items))

    def __len__(self) -> int:
        return len(self.segments)

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segments)

    def __bool__(self) -> bool:
        return bool(self.segments)

    def counts(self) -> Counter:
        return Counter(self.segments)

    def replace_one(self, old: Segment, new: Segment | None) -> "Multisegment":
        """Remove one copy of ``old`` and, unless ``new`` is None, add ``new``."""
        items = list(self.segments)
        try:
            items.remove(old)
        except ValueError:
            raise KeyError(f"{old!r} not in multisegment") from None
        if new is not None:
            items.append(new)
        return Multisegment(tuple(items))

    def add(self, segment: Segment) -> "Multisegment":
        return Multisegment(self.segments + (segment,))

    def union(self, other: "Multisegment") -> "Multisegment":
        return Multisegment(self.segments + other.segments)

    @property
    def label(self) -> str:
        if not self.segments:
            return EMPTY_LABEL
        return "+".join(segment.label for segment in self.segments)

    def to_pairs(self) -> List[List[int]]:
        return [[s.start, s.end] for s in self.segments]

    def __repr__(self) -> str:
        return f"Multisegment({self.label})"


def right_order(d: Multisegment) -> List[Segment]:
    return list(d.segments)


def left_order(d: Multisegment) -> List[Segment]:
    return sorted(d.segments, key=Segment.left_key)


def n_of(d: Multisegment) -> int:
    return sum(segment.length for segment in d.segments)


def m_of(d: Multisegment) -> int:
    return len(d.segments)


def group_by_end(d: Multisegment, j: Content) -> Multisegment:
    return Multisegment(tuple(s for s in d.segments if s.end == j))


def ends_of(d: Multisegment) -> List[Content]:
    return sorted({s.end for s in d.segments})


def starts_of(d: Multisegment) -> List[Content]:
    return sorted({s.start for s in d.segments})


@dataclass(frozen=True)
class ContentMultiset:
    """Counts per content, zero entries dropped, sorted by content."""

    counts: Tuple[Tuple[Content, int], ...] = ()

    @classmethod
    def from_mapping(cls, mapping: Mapping[Content, int]) -> "ContentMultiset":
        return cls(tuple(sorted((c, k) for c, k in mapping.items() if k)))

    @classmethod
    def from_contents(cls, contents: Iterable[Content]) -> "ContentMultiset":
        return cls.from_mapping(Counter(contents))

    def __getitem__(self, content: Content) -> int:
        return self.as_dict().get(content, 0)

    def as_dict(self) -> Dict[Content, int]:
        return dict(self.counts)

    @property
    def total(self) -> int:
        return sum(k for _, k in self.counts)

    def __add__(self, other: "ContentMultiset") -> "ContentMultiset":
        merged = Counter(self.as_dict())
        merged.update(other.as_dict())
        return ContentMultiset.from_mapping(merged)

    def remove_one(self, content: Content) -> "ContentMultiset":
        current = self.as_dict()
        if current.get(content, 0) == 0:
            raise KeyError(content)
        current[content] -= 1
        return ContentMultiset.from_mapping(current)


def content_multiset(d: Multisegment) -> ContentMultiset:
    return ContentMultiset.from_contents(c for s in d.segments for c in s.contents())


@dataclass(frozen=True)
class Weight:
    """λ = Σ m_i Λ_i, stored as sorted (i, m_i) pairs with m_i > 0."""

    multiplicities: Tuple[Tuple[Content, int], ...] = ()

    def __post_init__(self) -> None:
        for color, mult in self.multiplicities:
            _check_int(color, "weight color")
            if _check_int(mult, "weight multiplicity") <= 0:
                raise MalformedInput(f"multiplicity of Λ_{color} must be positive")
        object.__setattr__(self, "multiplicities", tuple(sorted(self.multiplicities)))

    @classmethod
    def from_colors(cls, colors: Iterable[Content]) -> "Weight":
        counted = Counter(_check_int(c, "weight color") for c in colors)
        return cls(tuple(counted.items()))

    @classmethod
    def from_mapping(cls, mapping: Mapping[Content, int]) -> "Weight":
        return cls(tuple((c, m) for c, m in mapping.items() if m))

    @property
    def components(self) -> Tuple[Content, ...]:
        """Colors with multiplicity, weakly decreasing (i_1 ≥ i_2 ≥ ...)."""
        return tuple(
            color for color, mult in sorted(self.multiplicities, reverse=True) for _ in range(mult)
        )

    @property
    def level(self) -> int:
        return sum(m for _, m in self.multiplicities)

    def m(self, color: Content) -> int:
        return dict(self.multiplicities).get(color, 0)

    @property
    def support(self) -> List[Content]:
        return [c for c, _ in self.multiplicities]

    @property
    def label(self) -> str:
        if not self.multiplicities:
            return "0"
        terms = []
        for color, mult in sorted(self.multiplicities, reverse=True):
            terms.append(f"Λ_{color}" if mult == 1 else f"{mult}Λ_{color}")
        return "+".join(terms)

    def __repr__(self) -> str:
        return f"Weight({self.label})"
