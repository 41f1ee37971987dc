"""Multisegment ↔ Kleshchev multipartition conversion.

seg_to_mp walks the highest-weight path of the multisegment down to ∅ and
replays it backwards with F on the empty λ-colored multipartition, then checks
that the result converts back to the input.
"""
from __future__ import annotations

import logging
from collections import Counter
from typing import List, Sequence, Tuple

from crystaldict.errors import MalformedInput, NotCyclotomic, TransportFailure
from crystaldict.models.partitions import (
    ColoredPartition,
    Multipartition,
    delta_of_mp,
    is_kleshchev,
    mu_of_level1,
)
from crystaldict.models.segments import Content, Multisegment, Segment, Weight
from crystaldict.services.mp_crystal import apply_f_mp
from crystaldict.services.seg_crystal import cyclotomic_check, hat_profile, hw_path

logger = logging.getLogger(__name__)


def _require_cyclotomic(d: Multisegment, lam: Weight) -> None:
    if not cyclotomic_check(d, lam):
        over = {i: v for i, v in hat_profile(d).items() if v > lam.m(i)}
        raise NotCyclotomic(
            f"{d.label} is not cyclotomic for {lam.label}: uncanceled starts exceed "
            + ", ".join(f"m_{i}={lam.m(i)} (have {v})" for i, v in sorted(over.items()))
        )


def seg_to_mp(d: Multisegment, lam: Weight, path: Sequence[Content] | None = None) -> Multipartition:
    """Kleshchev multipartition μ̄ with Δ(μ̄, λ) = d.

    ``path`` may replace the default highest-weight path with any E-sequence
    taking d to ∅.
    """
    _require_cyclotomic(d, lam)
    steps = list(path) if path is not None else hw_path(d)
    logger.debug("transport %s along %s", d.label, steps)
    current = Multipartition.empty(lam)
    for j in reversed(steps):
        nxt = apply_f_mp(current, j)
        if nxt is None:
            raise TransportFailure(f"F_{j} is null on {current.label} while transporting {d.label}")
        current = nxt
    if delta_of_mp(current) != d:
        raise TransportFailure(
            f"transport of {d.label} ended at {current.label}, which converts to {delta_of_mp(current).label}"
        )
    if not is_kleshchev(current):
        raise TransportFailure(f"transport of {d.label} ended at non-Kleshchev {current.label}")
    return current


def mp_to_seg(mp: Multipartition) -> Multisegment:
    return delta_of_mp(mp)


def decompose_level2(d: Multisegment, i: Content, h: Content) -> Tuple[ColoredPartition, ColoredPartition]:
    """Direct split of a Λ_i + Λ_h cyclotomic multisegment (i ≥ h).

    Starts above h can only be rows of the i-colored partition; a start at or
    below h seen once belongs to the h-colored one, seen twice gives the
    shorter segment to the i-colored partition.
    """
    if i < h:
        raise MalformedInput(f"need i >= h, got i={i}, h={h}")
    _require_cyclotomic(d, Weight.from_colors([i, h]))
    by_start: Counter = Counter(s.start for s in d)
    first: List[Segment] = []
    second: List[Segment] = []
    # right order lists equal starts shortest first
    for segment in d:
        if segment.start > h:
            first.append(segment)
        elif by_start[segment.start] == 1:
            second.append(segment)
        elif segment.start not in {s.start for s in first}:
            first.append(segment)
        else:
            second.append(segment)
    mu = mu_of_level1(Multisegment(tuple(first)), i)
    nu = mu_of_level1(Multisegment(tuple(second)), h)
    if not is_kleshchev(Multipartition((mu, nu))):
        raise TransportFailure(f"level-2 split of {d.label} gives non-Kleshchev {mu.label}{nu.label}")
    return mu, nu
