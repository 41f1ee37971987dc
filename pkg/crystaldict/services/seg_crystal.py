"""Crystal operators on multisegments.

E_j / F_j / ε_j / φ_j read the segments in right order and look at ends
(− for end j, + for end j−1). The hatted operators read left order and look
at starts (− for start i, + for start i+1). ``None`` is the null result of a
partial operator; it is distinct from the empty multisegment.
"""
from __future__ import annotations

from itertools import groupby
from typing import Dict, List, Optional, Tuple

from crystaldict.models.segments import (
    Content,
    Multisegment,
    Segment,
    Weight,
    ends_of,
    left_order,
    right_order,
    starts_of,
    trimmed,
)
from crystaldict.services.signature import (
    Kind,
    Pattern,
    ReducedSignature,
    SignatureToken,
    SignatureWord,
    reduce,
)

# item id of the virtual token standing for the empty segment in F words
VIRTUAL = "virtual"


def _end_kind(segment: Segment, j: Content) -> Kind:
    if segment.end == j:
        return Kind.MINUS
    if segment.end == j - 1:
        return Kind.PLUS
    return Kind.BLANK


def _start_kind(segment: Segment, i: Content) -> Kind:
    if segment.start == i:
        return Kind.MINUS
    if segment.start == i + 1:
        return Kind.PLUS
    return Kind.BLANK


def _right_word(d: Multisegment, j: Content, *, virtual: bool = False) -> Tuple[SignatureWord, List[Segment]]:
    ordered = right_order(d)
    tokens = [SignatureToken(_end_kind(s, j), pos) for pos, s in enumerate(ordered)]
    if virtual:
        # Δ[j, j-1] sorts before every real ± token in right order
        tokens.insert(0, SignatureToken(Kind.PLUS, VIRTUAL))
    return SignatureWord(tuple(tokens)), ordered


def _left_word(d: Multisegment, i: Content, *, virtual: bool = False) -> Tuple[SignatureWord, List[Segment]]:
    ordered = left_order(d)
    tokens = [SignatureToken(_start_kind(s, i), pos) for pos, s in enumerate(ordered)]
    if virtual:
        # Δ[i+1, i] sorts after every real ± token in left order
        tokens.append(SignatureToken(Kind.PLUS, VIRTUAL))
    return SignatureWord(tuple(tokens)), ordered


def signature(d: Multisegment, j: Content) -> ReducedSignature:
    word, _ = _right_word(d, j)
    return reduce(word, Pattern.MINUS_PLUS)


def signature_hat(d: Multisegment, i: Content) -> ReducedSignature:
    word, _ = _left_word(d, i)
    return reduce(word, Pattern.PLUS_MINUS)


def eps(d: Multisegment, j: Content) -> int:
    return signature(d, j).eps


def phi(d: Multisegment, j: Content) -> int:
    return signature(d, j).phi


def eps_hat(d: Multisegment, i: Content) -> int:
    return signature_hat(d, i).eps


def phi_hat(d: Multisegment, i: Content) -> int:
    return signature_hat(d, i).phi


def apply_e(d: Multisegment, j: Content) -> Optional[Multisegment]:
    word, ordered = _right_word(d, j)
    reduced = reduce(word, Pattern.MINUS_PLUS)
    if not reduced.uncanceled_minus:
        return None
    target = ordered[reduced.uncanceled_minus[0]]
    return d.replace_one(target, trimmed(target.start, j - 1))


def apply_f(d: Multisegment, j: Content) -> Multisegment:
    word, ordered = _right_word(d, j, virtual=True)
    reduced = reduce(word, Pattern.MINUS_PLUS)
    chosen = reduced.uncanceled_plus[-1]
    if chosen == VIRTUAL:
        return d.add(Segment(j, j))
    target = ordered[chosen]
    return d.replace_one(target, Segment(target.start, j))


def apply_e_hat(d: Multisegment, i: Content) -> Optional[Multisegment]:
    word, ordered = _left_word(d, i)
    reduced = reduce(word, Pattern.PLUS_MINUS)
    if not reduced.uncanceled_minus:
        return None
    target = ordered[reduced.uncanceled_minus[-1]]
    return d.replace_one(target, trimmed(i + 1, target.end))


def apply_f_hat(d: Multisegment, i: Content) -> Multisegment:
    word, ordered = _left_word(d, i, virtual=True)
    reduced = reduce(word, Pattern.PLUS_MINUS)
    chosen = reduced.uncanceled_plus[0]
    if chosen == VIRTUAL:
        return d.add(Segment(i, i))
    target = ordered[chosen]
    return d.replace_one(target, Segment(i, target.end))


def apply_e_max(d: Multisegment, j: Content) -> Tuple[Multisegment, int]:
    """Apply E_j until the next application is null; returns (result, ε_j)."""
    steps = 0
    current = d
    while True:
        nxt = apply_e(current, j)
        if nxt is None:
            return current, steps
        current, steps = nxt, steps + 1


def hat_profile(d: Multisegment) -> Dict[Content, int]:
    """ε̂_i for every content with a nonzero value (only starts can carry a −)."""
    profile = {i: eps_hat(d, i) for i in starts_of(d)}
    return {i: value for i, value in profile.items() if value}


def cyclotomic_check(d: Multisegment, lam: Weight) -> bool:
    return all(value <= lam.m(i) for i, value in hat_profile(d).items())


def minimal_weight(d: Multisegment) -> Weight:
    return Weight.from_mapping(hat_profile(d))


def hw_path(d: Multisegment) -> List[Content]:
    """Contents j_1, j_2, ... taking d to ∅, smallest active j first at each step."""
    path: List[Content] = []
    current = d
    while current:
        # ε_j > 0 needs a segment ending at j, so only ends are candidates
        for j in ends_of(current):
            nxt = apply_e(current, j)
            if nxt is not None:
                path.append(j)
                current = nxt
                break
        else:  # pragma: no cover - the smallest end always has ε > 0
            raise RuntimeError(f"no active content for {current!r}")
    return path


def hw_path_grouped(d: Multisegment) -> List[Tuple[Content, int]]:
    return [(j, len(list(run))) for j, run in groupby(hw_path(d))]

