"""Tensor products of crystals under the reversed convention ⊗*.

b_1 ⊗* b_2 ⊗* ... ⊗* b_r is read left to right; factor k contributes
+ × φ_i(b_k) followed by − × ε_i(b_k). After MinusPlus reduction E acts on the
factor owning the leftmost uncanceled −, F on the rightmost uncanceled +.
The standard convention ⊗ is the mirror image and is kept for cross-checks.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Protocol, Sequence, Tuple, runtime_checkable

from crystaldict.models.partitions import (
    ColoredPartition,
    Multipartition,
    Partition,
    addable_boxes,
    removable_boxes,
)
from crystaldict.models.segments import Content, ContentMultiset, Weight
from crystaldict.services import mp_crystal
from crystaldict.services.graph import CrystalGraph, f_closure
from crystaldict.services.signature import (
    Kind,
    Pattern,
    ReducedSignature,
    SignatureToken,
    SignatureWord,
    reduce,
)


@runtime_checkable
class CrystalElement(Protocol):
    @property
    def label(self) -> str: ...

    @property
    def size(self) -> int: ...

    def weight(self) -> ContentMultiset: ...

    def eps(self, i: Content) -> int: ...

    def phi(self, i: Content) -> int: ...

    def e(self, i: Content) -> Optional["CrystalElement"]: ...

    def f(self, i: Content) -> Optional["CrystalElement"]: ...


@dataclass(frozen=True)
class PartitionElement:
    """A node of the level-1 crystal B(Λ_c): a partition colored by c."""

    cp: ColoredPartition

    @classmethod
    def empty(cls, color: Content) -> "PartitionElement":
        return cls(ColoredPartition(Partition(), color))

    @property
    def label(self) -> str:
        return self.cp.label

    @property
    def size(self) -> int:
        return self.cp.size

    def weight(self) -> ContentMultiset:
        return self.cp.weight()

    def eps(self, i: Content) -> int:
        return int(i in removable_boxes(self.cp))

    def phi(self, i: Content) -> int:
        return int(i in addable_boxes(self.cp))

    def e(self, i: Content) -> Optional["PartitionElement"]:
        smaller = self.cp.remove_box(i)
        return PartitionElement(smaller) if smaller is not None else None

    def f(self, i: Content) -> Optional["PartitionElement"]:
        larger = self.cp.add_box(i)
        return PartitionElement(larger) if larger is not None else None


@dataclass(frozen=True)
class MultipartitionElement:
    """A node of B(λ) realized directly by the multipartition rule."""

    mp: Multipartition

    @classmethod
    def empty(cls, lam: Weight) -> "MultipartitionElement":
        return cls(Multipartition.empty(lam))

    @property
    def label(self) -> str:
        return self.mp.label

    @property
    def size(self) -> int:
        return self.mp.size

    def weight(self) -> ContentMultiset:
        return self.mp.weight()

    def eps(self, i: Content) -> int:
        return mp_crystal.eps_mp(self.mp, i)

    def phi(self, i: Content) -> int:
        return mp_crystal.phi_mp(self.mp, i)

    def e(self, i: Content) -> Optional["MultipartitionElement"]:
        result = mp_crystal.apply_e_mp(self.mp, i)
        return MultipartitionElement(result) if result is not None else None

    def f(self, i: Content) -> Optional["MultipartitionElement"]:
        result = mp_crystal.apply_f_mp(self.mp, i)
        return MultipartitionElement(result) if result is not None else None


def _star_word(factors: Sequence[CrystalElement], i: Content) -> SignatureWord:
    tokens: List[SignatureToken] = []
    for k, factor in enumerate(factors):
        tokens.extend(SignatureToken(Kind.PLUS, (k, "+", n)) for n in range(factor.phi(i)))
        tokens.extend(SignatureToken(Kind.MINUS, (k, "-", n)) for n in range(factor.eps(i)))
    return SignatureWord(tuple(tokens))


def _std_word(factors: Sequence[CrystalElement], i: Content) -> SignatureWord:
    tokens: List[SignatureToken] = []
    for k, factor in enumerate(factors):
        tokens.extend(SignatureToken(Kind.MINUS, (k, "-", n)) for n in range(factor.eps(i)))
        tokens.extend(SignatureToken(Kind.PLUS, (k, "+", n)) for n in range(factor.phi(i)))
    return SignatureWord(tuple(tokens))


def _star_signature(factors: Sequence[CrystalElement], i: Content) -> ReducedSignature:
    return reduce(_star_word(factors, i), Pattern.MINUS_PLUS)


def _std_signature(factors: Sequence[CrystalElement], i: Content) -> ReducedSignature:
    return reduce(_std_word(factors, i), Pattern.PLUS_MINUS)


@dataclass(frozen=True)
class TensorElement:
    """b_1 ⊗* ... ⊗* b_r; itself a crystal element, so tensors nest."""

    factors: Tuple[CrystalElement, ...]

    @classmethod
    def of(cls, factors: Iterable[CrystalElement]) -> "TensorElement":
        return cls(tuple(factors))

    @classmethod
    def level1_empty(cls, lam: Weight) -> "TensorElement":
        """Empty partitions, one factor per color of λ in component order."""
        return cls(tuple(PartitionElement.empty(c) for c in lam.components))

    @property
    def label(self) -> str:
        return "*".join(f.label for f in self.factors)

    @property
    def size(self) -> int:
        return sum(f.size for f in self.factors)

    def weight(self) -> ContentMultiset:
        total = ContentMultiset()
        for factor in self.factors:
            total = total + factor.weight()
        return total

    def eps(self, i: Content) -> int:
        return _star_signature(self.factors, i).eps

    def phi(self, i: Content) -> int:
        return _star_signature(self.factors, i).phi

    def e(self, i: Content) -> Optional["TensorElement"]:
        return tensor_e(self, i)

    def f(self, i: Content) -> Optional["TensorElement"]:
        return tensor_f(self, i)

    def replace(self, index: int, factor: CrystalElement) -> "TensorElement":
        items = list(self.factors)
        items[index] = factor
        return TensorElement(tuple(items))

    def reversed(self) -> "TensorElement":
        return TensorElement(tuple(reversed(self.factors)))

    def __len__(self) -> int:
        return len(self.factors)


def tensor_e(t: TensorElement, i: Content) -> Optional[TensorElement]:
    reduced = _star_signature(t.factors, i)
    if not reduced.uncanceled_minus:
        return None
    index = reduced.uncanceled_minus[0][0]
    moved = t.factors[index].e(i)
    return t.replace(index, moved) if moved is not None else None


def tensor_f(t: TensorElement, i: Content) -> Optional[TensorElement]:
    reduced = _star_signature(t.factors, i)
    if not reduced.uncanceled_plus:
        return None
    index = reduced.uncanceled_plus[-1][0]
    moved = t.factors[index].f(i)
    return t.replace(index, moved) if moved is not None else None


def tensor_e_std(t: TensorElement, i: Content) -> Optional[TensorElement]:
    """E_i with the factors read as b_1 ⊗ b_2 ⊗ ... (standard convention)."""
    reduced = _std_signature(t.factors, i)
    if not reduced.uncanceled_minus:
        return None
    index = reduced.uncanceled_minus[-1][0]
    moved = t.factors[index].e(i)
    return t.replace(index, moved) if moved is not None else None


def tensor_f_std(t: TensorElement, i: Content) -> Optional[TensorElement]:
    reduced = _std_signature(t.factors, i)
    if not reduced.uncanceled_plus:
        return None
    index = reduced.uncanceled_plus[0][0]
    moved = t.factors[index].f(i)
    return t.replace(index, moved) if moved is not None else None


def component_of(
    start: CrystalElement,
    contents: Iterable[Content],
    max_n: int,
    bound: int | None = None,
) -> CrystalGraph:
    """Closure of ``start`` under F_i (i in contents) up to total size max_n, with E edges."""
    labels = sorted(set(contents))
    return f_closure(
        start,
        labels,
        max_n,
        key=lambda x: x.label,
        size_of=lambda x: x.size,
        weight_of=lambda x: x.weight(),
        f_op=lambda x, i: x.f(i),
        e_op=lambda x, i: x.e(i),
        bound=bound,
    )
