"""Formal characters of modules induced from segments, via shuffle products.

A word (γ_1, ..., γ_n) stands for the generalized eigenvalue q^γ_1 ... q^γ_n.
Characters are sparse word → multiplicity maps.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, prod
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from crystaldict.config import get_config
from crystaldict.errors import LengthMismatch, MalformedSingleEnd, check_bound
from crystaldict.models.partitions import Partition, conjugate
from crystaldict.models.segments import Content, Multisegment, Segment, ends_of, group_by_end

CharWord = Tuple[Content, ...]


@dataclass
class Character:
    terms: Dict[CharWord, int] = field(default_factory=dict)
    length: int = 0

    def __post_init__(self) -> None:
        self.terms = {tuple(w): m for w, m in self.terms.items() if m}
        if any(len(w) != self.length for w in self.terms):
            raise LengthMismatch(f"every word of a length-{self.length} character must have length {self.length}")

    @classmethod
    def unit(cls) -> "Character":
        return cls({(): 1}, 0)

    @classmethod
    def of_word(cls, word: Sequence[Content]) -> "Character":
        return cls({tuple(word): 1}, len(word))

    @classmethod
    def of_segment(cls, segment: Segment) -> "Character":
        return cls.of_word(tuple(segment.contents()))

    @property
    def total(self) -> int:
        return sum(self.terms.values())

    def words(self) -> List[CharWord]:
        return sorted(self.terms)

    def __getitem__(self, word: Sequence[Content]) -> int:
        return multiplicity(self, word)


@lru_cache(maxsize=65536)
def _shuffle_words(t: CharWord, u: CharWord) -> Tuple[Tuple[CharWord, int], ...]:
    if not t:
        return ((u, 1),)
    if not u:
        return ((t, 1),)
    merged: Counter = Counter()
    for rest, mult in _shuffle_words(t[1:], u):
        merged[(t[0],) + rest] += mult
    for rest, mult in _shuffle_words(t, u[1:]):
        merged[(u[0],) + rest] += mult
    return tuple(merged.items())


def shuffle(a: Character, b: Character) -> Character:
    merged: Counter = Counter()
    for t, m in a.terms.items():
        for u, k in b.terms.items():
            for word, mult in _shuffle_words(t, u):
                merged[word] += m * k * mult
    return Character(dict(merged), a.length + b.length)


def char_of_ind(segments: Iterable[Segment], bound: int | None = None) -> Character:
    segments = list(segments)
    n = sum(s.length for s in segments)
    check_bound("character length", n, bound if bound is not None else get_config().character_max_n)
    result = Character.unit()
    for segment in segments:
        result = shuffle(result, Character.of_segment(segment))
    return result


def multiplicity(c: Character, word: Sequence[Content]) -> int:
    word = tuple(word)
    if len(word) != c.length:
        raise LengthMismatch(f"word of length {len(word)} queried in a character of length {c.length}")
    return c.terms.get(word, 0)


def _single_end(dj: Multisegment) -> None:
    if len(ends_of(dj)) > 1:
        raise MalformedSingleEnd(f"{dj.label} has segments with different ends {ends_of(dj)}")


def q_word(dj: Multisegment) -> CharWord:
    """Staircase word of a single-end multisegment: its contents in increasing order."""
    _single_end(dj)
    return tuple(sorted(c for s in dj for c in s.contents()))


def beta_of(dj: Multisegment) -> Partition:
    _single_end(dj)
    return conjugate(Partition(tuple(sorted((s.length for s in dj), reverse=True))))


def beta_factorial(p: Partition) -> int:
    return prod(factorial(part) for part in p.parts)


def distinguished_word(d: Multisegment) -> CharWord:
    """Q(Δ^(j_1)) Q(Δ^(j_2)) ... over the ends j_1 > j_2 > ..."""
    word: Tuple[Content, ...] = ()
    for j in reversed(ends_of(d)):
        word += q_word(group_by_end(d, j))
    return word


def distinguished_multiplicity(d: Multisegment) -> int:
    return prod(beta_factorial(beta_of(group_by_end(d, j))) for j in ends_of(d))


def trailing_run(c: Character, j: Content) -> int:
    """Longest run of j closing any word of c."""
    best = 0
    for word in c.terms:
        run = 0
        for letter in reversed(word):
            if letter != j:
                break
            run += 1
        best = max(best, run)
    return best


def leading_run(c: Character, i: Content) -> int:
    best = 0
    for word in c.terms:
        run = 0
        for letter in word:
            if letter != i:
                break
            run += 1
        best = max(best, run)
    return best


def swapped(word: Sequence[Content], position: int) -> CharWord:
    items = list(word)
    items[position], items[position + 1] = items[position + 1], items[position]
    return tuple(items)


def character_rows(c: Character) -> List[Mapping[str, object]]:
    return [{"word": list(w), "mult": c.terms[w]} for w in c.words()]
