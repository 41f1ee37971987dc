"""Crystal operators on λ-colored multipartitions (removable/addable box rule).

Components are read in stored order (colors weakly decreasing). Each one
contributes − for a removable j-box, + for an addable j-box, blank otherwise.
"""
from __future__ import annotations

from typing import Optional, Tuple

from crystaldict.models.partitions import Multipartition, addable_boxes, removable_boxes
from crystaldict.models.segments import Content
from crystaldict.services.signature import (
    Kind,
    Pattern,
    ReducedSignature,
    SignatureToken,
    SignatureWord,
    reduce,
)


def _box_kind(mp: Multipartition, index: int, j: Content) -> Kind:
    component = mp.components[index]
    if j in removable_boxes(component):
        return Kind.MINUS
    if j in addable_boxes(component):
        return Kind.PLUS
    return Kind.BLANK


def box_word(mp: Multipartition, j: Content) -> SignatureWord:
    return SignatureWord(
        tuple(SignatureToken(_box_kind(mp, k, j), k) for k in range(mp.level))
    )


def signature_mp(mp: Multipartition, j: Content) -> ReducedSignature:
    return reduce(box_word(mp, j), Pattern.MINUS_PLUS)


def eps_mp(mp: Multipartition, j: Content) -> int:
    return signature_mp(mp, j).eps


def phi_mp(mp: Multipartition, j: Content) -> int:
    return signature_mp(mp, j).phi


def apply_e_mp(mp: Multipartition, j: Content) -> Optional[Multipartition]:
    reduced = signature_mp(mp, j)
    if not reduced.uncanceled_minus:
        return None
    index = reduced.uncanceled_minus[0]
    return mp.replace(index, mp.components[index].remove_box(j))


def apply_f_mp(mp: Multipartition, j: Content) -> Optional[Multipartition]:
    reduced = signature_mp(mp, j)
    if not reduced.uncanceled_plus:
        return None
    index = reduced.uncanceled_plus[-1]
    return mp.replace(index, mp.components[index].add_box(j))


def string_lengths(mp: Multipartition, j: Content) -> Tuple[int, int]:
    """(ε_j, φ_j) from one reduction."""
    reduced = signature_mp(mp, j)
    return reduced.eps, reduced.phi
