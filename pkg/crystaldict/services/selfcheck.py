"""Invariant suites behind `crystaldict selfcheck`.

Each suite walks an exhaustive small domain and collects failures instead of
stopping at the first one.
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from itertools import permutations, product
from math import factorial
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from crystaldict.config import AppConfig, get_config
from crystaldict.errors import CrystalError
from crystaldict.models.partitions import is_kleshchev
from crystaldict.models.segments import Multisegment, Segment, Weight, content_multiset, n_of
from crystaldict.services import characters as ch
from crystaldict.services.graph import enumerate_multisegments
from crystaldict.services.seg_crystal import (
    apply_e,
    apply_e_hat,
    apply_f,
    apply_f_hat,
    cyclotomic_check,
    eps,
    eps_hat,
    hat_profile,
    minimal_weight,
)
from crystaldict.services.signature import Kind, Pattern, reduce_kinds
from crystaldict.services.transport import decompose_level2, seg_to_mp
from crystaldict.services.verify import verify_three_way

logger = logging.getLogger(__name__)

# Example multisegment with 14 segments, n = 64.
GOLDEN_EXAMPLE = Multisegment.of(
    [
        (5, 6), (5, 7), (4, 7), (3, 3), (3, 6), (3, 6), (3, 7),
        (3, 7), (2, 6), (2, 7), (2, 9), (-1, 7), (-1, 1), (-2, 2),
    ]
)
GOLDEN_EPS_HAT = {-1: 2, 2: 2, 3: 4, 4: 1, 5: 2}
GOLDEN_E7_CHAIN = [(Segment(3, 7), Segment(3, 6)), (Segment(2, 7), Segment(2, 6)), (Segment(-1, 7), Segment(-1, 6))]

MAX_FAILURES = 20


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(message)

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "failures": self.failures,
            "seconds": round(self.seconds, 3),
        }


def naive_reduce(kinds: Sequence[Kind], pattern: Pattern) -> Tuple[List[int], List[int]]:
    """Repeated full scans cancelling adjacent live pairs; (minus positions, plus positions)."""
    first, second = (Kind.MINUS, Kind.PLUS) if pattern is Pattern.MINUS_PLUS else (Kind.PLUS, Kind.MINUS)
    live = [k for k, kind in enumerate(kinds) if kind is not Kind.BLANK]
    changed = True
    while changed:
        changed = False
        for a, b in zip(live, live[1:]):
            if kinds[a] is first and kinds[b] is second:
                live.remove(a)
                live.remove(b)
                changed = True
                break
    return [k for k in live if kinds[k] is Kind.MINUS], [k for k in live if kinds[k] is Kind.PLUS]


def suite_signature(length: int) -> SuiteResult:
    result = SuiteResult("signature_oracle")
    alphabet = (Kind.MINUS, Kind.PLUS, Kind.BLANK)
    for size in range(length + 1):
        for kinds in product(alphabet, repeat=size):
            for pattern in Pattern:
                reduced = reduce_kinds(kinds, pattern)
                expected = naive_reduce(kinds, pattern)
                result.checked += 1
                if (list(reduced.uncanceled_minus), list(reduced.uncanceled_plus)) != expected:
                    word = "".join(k.value for k in kinds)
                    result.fail(f"{pattern.value} reduction of {word!r} disagrees with repeated cancellation")
    return result


def suite_golden() -> SuiteResult:
    result = SuiteResult("worked_example")
    d = GOLDEN_EXAMPLE
    result.checked += 1
    if eps(d, 7) != 3:
        result.fail(f"eps_7 = {eps(d, 7)}, expected 3")
    current: Optional[Multisegment] = d
    for old, new in GOLDEN_E7_CHAIN:
        result.checked += 1
        nxt = apply_e(current, 7)
        if nxt != current.replace_one(old, new):
            result.fail(f"E_7 on {current.label} gave {nxt!r}, expected {old!r} -> {new!r}")
            return result
        current = nxt
    result.checked += 1
    if apply_e(current, 7) is not None:
        result.fail("fourth E_7 application is not null")
    result.checked += 1
    if hat_profile(d) != GOLDEN_EPS_HAT:
        result.fail(f"eps_hat profile {hat_profile(d)} != {GOLDEN_EPS_HAT}")
    result.checked += 1
    if minimal_weight(d) != Weight.from_mapping(GOLDEN_EPS_HAT):
        result.fail(f"minimal weight {minimal_weight(d).label}")
    return result


def suite_inverse_laws(domain: Sequence[Multisegment], labels: Sequence[int]) -> SuiteResult:
    result = SuiteResult("inverse_laws")
    for d in domain:
        for j in labels:
            result.checked += 1
            up = apply_f(d, j)
            if apply_e(up, j) != d:
                result.fail(f"E_{j} F_{j} {d.label} != id")
            down = apply_e(d, j)
            if down is not None and apply_f(down, j) != d:
                result.fail(f"F_{j} E_{j} {d.label} != id")
            up_hat = apply_f_hat(d, j)
            if apply_e_hat(up_hat, j) != d:
                result.fail(f"Ê_{j} F̂_{j} {d.label} != id")
            down_hat = apply_e_hat(d, j)
            if down_hat is not None and apply_f_hat(down_hat, j) != d:
                result.fail(f"F̂_{j} Ê_{j} {d.label} != id")
    return result


def suite_eps_laws(domain: Sequence[Multisegment], labels: Sequence[int]) -> SuiteResult:
    result = SuiteResult("eps_laws")
    for d in domain:
        for i in labels:
            down = apply_e(d, i)
            if down is None:
                continue
            result.checked += 1
            if eps(down, i) != eps(d, i) - 1:
                result.fail(f"eps_{i} does not drop by one under E_{i} on {d.label}")
            if n_of(down) != n_of(d) - 1:
                result.fail(f"E_{i} on {d.label} does not remove exactly one box")
            if content_multiset(down) != content_multiset(d).remove_one(i):
                result.fail(f"E_{i} on {d.label} removes a content other than {i}")
            for k in (i - 1, i + 1):
                if eps(down, k) - eps(d, k) not in (0, 1):
                    result.fail(f"eps_{k} jumps by {eps(down, k) - eps(d, k)} under E_{i} on {d.label}")
    return result


def suite_transport(weights: Sequence[Weight], domain: Sequence[Multisegment]) -> SuiteResult:
    result = SuiteResult("transport")
    for lam in weights:
        images: Dict[str, str] = {}
        for d in domain:
            if not cyclotomic_check(d, lam):
                continue
            result.checked += 1
            try:
                mp = seg_to_mp(d, lam)
            except CrystalError as exc:
                result.fail(f"seg_to_mp({d.label}, {lam.label}) raised {exc}")
                continue
            if not is_kleshchev(mp):
                result.fail(f"seg_to_mp({d.label}, {lam.label}) = {mp.label} is not Kleshchev")
            if mp.label in images:
                result.fail(f"{d.label} and {images[mp.label]} both map to {mp.label}")
            images[mp.label] = d.label
            if lam.level == 2:
                i, h = lam.components
                try:
                    pair = decompose_level2(d, i, h)
                except CrystalError as exc:
                    result.fail(f"level-2 split of {d.label} for {lam.label} raised {exc}")
                    continue
                if pair != mp.components:
                    result.fail(f"level-2 split of {d.label} is {pair}, transport gave {mp.label}")
    return result


def suite_graphs(weights: Sequence[Weight], max_n: int) -> SuiteResult:
    result = SuiteResult("three_way_graphs")
    for lam in weights:
        result.checked += 1
        report = verify_three_way(lam, max_n)
        for failure in report.failures():
            result.fail(f"{lam.label}: {failure}")
    return result


def _character_domain(max_n: int) -> List[Multisegment]:
    """Four contents up to about half of max_n, then three contents all the way to max_n."""
    wide = enumerate_multisegments(range(-1, 3), max_n // 2 + 1)
    seen = {d.label for d in wide}
    return wide + [d for d in enumerate_multisegments(range(-1, 2), max_n) if d.label not in seen]


def suite_characters(domain: Sequence[Multisegment], kato_max: int) -> SuiteResult:
    result = SuiteResult("characters")
    for d in domain:
        segments = list(d)
        character = ch.char_of_ind(segments)
        result.checked += 1
        word = ch.distinguished_word(d)
        if ch.multiplicity(character, word) != ch.distinguished_multiplicity(d):
            result.fail(f"distinguished word of {d.label} has multiplicity "
                        f"{ch.multiplicity(character, word)}, expected {ch.distinguished_multiplicity(d)}")
        if len(segments) <= 4:
            for order in set(permutations(segments)):
                if ch.char_of_ind(order).terms != character.terms:
                    result.fail(f"character of {d.label} depends on segment order")
                    break
        for w, mult in character.terms.items():
            for k in range(len(w) - 1):
                if abs(w[k] - w[k + 1]) > 1 and character.terms.get(ch.swapped(w, k), 0) != mult:
                    result.fail(f"swap at {k} in {w} changes multiplicity in the character of {d.label}")
        for j in {s.end for s in segments}:
            if eps(d, j) > ch.trailing_run(character, j):
                result.fail(f"eps_{j}({d.label}) exceeds the trailing run bound")
        for i in {s.start for s in segments}:
            if eps_hat(d, i) > ch.leading_run(character, i):
                result.fail(f"eps_hat_{i}({d.label}) exceeds the leading run bound")
    for k in range(1, kato_max + 1):
        result.checked += 1
        character = ch.char_of_ind([Segment(0, 0)] * k)
        if ch.multiplicity(character, (0,) * k) != factorial(k):
            result.fail(f"{k} copies of [0,0] do not give multiplicity {k}!")
    return result


def run_selfcheck(level: str = "quick", config: AppConfig | None = None) -> List[SuiteResult]:
    config = config or get_config()
    params = config.selfcheck_level(level)
    lo, hi = params["contents"]
    weights = [Weight.from_colors(colors) for colors in config.test_weights]
    domain = enumerate_multisegments(range(lo, hi + 1), params["max_n"])
    labels = list(range(lo - 1, hi + 2))
    transport_domain = enumerate_multisegments(range(-2, 3), min(params["max_n"], 6))
    character_domain = _character_domain(params["character_max_n"])

    plan: List[Tuple[str, Callable[[], SuiteResult]]] = [
        ("signature_oracle", lambda: suite_signature(params["signature_length"])),
        ("worked_example", suite_golden),
        ("inverse_laws", lambda: suite_inverse_laws(domain, labels)),
        ("eps_laws", lambda: suite_eps_laws(domain, labels)),
        ("transport", lambda: suite_transport(weights, transport_domain)),
        ("three_way_graphs", lambda: suite_graphs(weights, params["graph_max_n"])),
        ("characters", lambda: suite_characters(character_domain, params["character_max_n"])),
    ]
    results: List[SuiteResult] = []
    for name, run in plan:
        started = time.perf_counter()
        outcome = run()
        outcome.seconds = time.perf_counter() - started
        if outcome.ok:
            logger.info("suite %s passed (%d checks, %.2fs)", name, outcome.checked, outcome.seconds)
        else:
            for failure in outcome.failures:
                logger.error("suite %s: %s", name, failure)
        results.append(outcome)
    return results
