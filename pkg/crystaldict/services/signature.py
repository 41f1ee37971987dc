"""± word reduction shared by every crystal realization.

MinusPlus cancels adjacent "−+" pairs (reduced shape "+…+−…−"); PlusMinus
cancels adjacent "+−" pairs (reduced shape "−…−+…+"). Blanks never take part.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Hashable, Iterable, List, Sequence, Tuple, TypeVar

T = TypeVar("T")


class Kind(str, Enum):
    MINUS = "-"
    PLUS = "+"
    BLANK = " "


class Pattern(str, Enum):
    MINUS_PLUS = "-+"
    PLUS_MINUS = "+-"


@dataclass(frozen=True)
class SignatureToken:
    kind: Kind
    item_id: Hashable


@dataclass(frozen=True)
class SignatureWord:
    tokens: Tuple[SignatureToken, ...]

    @classmethod
    def from_items(
        cls, items: Iterable[T], classify: Callable[[T], Kind], ids: Iterable[Hashable] | None = None
    ) -> "SignatureWord":
        """One token per item, ``classify`` picks its kind; ids default to positions."""
        items = list(items)
        item_ids = list(ids) if ids is not None else list(range(len(items)))
        return cls(tuple(SignatureToken(classify(item), i) for item, i in zip(items, item_ids)))

    @classmethod
    def from_string(cls, text: str) -> "SignatureWord":
        """Parse "+-- +" style words; ids are 1-based positions, spaces are blanks."""
        symbols = {"+": Kind.PLUS, "-": Kind.MINUS, "−": Kind.MINUS, " ": Kind.BLANK, ".": Kind.BLANK}
        return cls(tuple(SignatureToken(symbols[ch], pos) for pos, ch in enumerate(text, start=1)))

    def __str__(self) -> str:
        return "".join(token.kind.value for token in self.tokens)


@dataclass(frozen=True)
class ReducedSignature:
    uncanceled_minus: Tuple[Hashable, ...]
    uncanceled_plus: Tuple[Hashable, ...]

    @property
    def eps(self) -> int:
        return len(self.uncanceled_minus)

    @property
    def phi(self) -> int:
        return len(self.uncanceled_plus)


def reduce(word: SignatureWord, pattern: Pattern = Pattern.MINUS_PLUS) -> ReducedSignature:
    """Single left-to-right stack pass.

    The opening symbol (− for MinusPlus, + for PlusMinus) is pushed; a closing
    symbol cancels the most recent open one, or is recorded as uncanceled.
    """
    opening = Kind.MINUS if pattern is Pattern.MINUS_PLUS else Kind.PLUS
    open_stack: List[Hashable] = []
    unmatched: List[Hashable] = []
    for token in word.tokens:
        if token.kind is Kind.BLANK:
            continue
        if token.kind is opening:
            open_stack.append(token.item_id)
        elif open_stack:
            open_stack.pop()
        else:
            unmatched.append(token.item_id)
    if pattern is Pattern.MINUS_PLUS:
        return ReducedSignature(tuple(open_stack), tuple(unmatched))
    return ReducedSignature(tuple(unmatched), tuple(open_stack))


def reduce_kinds(kinds: Sequence[Kind], pattern: Pattern = Pattern.MINUS_PLUS) -> ReducedSignature:
    return reduce(SignatureWord(tuple(SignatureToken(k, i) for i, k in enumerate(kinds))), pattern)
