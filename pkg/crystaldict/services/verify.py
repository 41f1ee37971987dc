"""Three-way comparison of B(λ): multisegments, Kleshchev multipartitions, tensor component."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List

from crystaldict.models.partitions import delta_of_mp, enumerate_kleshchev
from crystaldict.models.segments import Weight
from crystaldict.services.graph import (
    CrystalGraph,
    IsomorphismResult,
    build_blambda_mp,
    build_blambda_seg,
    default_contents,
    isomorphic,
    reaches_root,
)
from crystaldict.services.tensor import TensorElement, component_of

logger = logging.getLogger(__name__)


@dataclass
class ThreeWayReport:
    lam: Weight
    max_n: int
    node_counts: Dict[str, int] = field(default_factory=dict)
    checks: Dict[str, IsomorphismResult] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> List[str]:
        return [f"{name}: {result.certificate}" for name, result in self.checks.items() if not result]

    def to_dict(self) -> dict:
        return {
            "lambda": list(self.lam.components),
            "max_n": self.max_n,
            "ok": self.ok,
            "nodes": self.node_counts,
            "checks": {name: {"ok": r.ok, "certificate": r.certificate} for name, r in self.checks.items()},
        }


def build_tensor(lam: Weight, max_n: int, bound: int | None = None) -> CrystalGraph:
    """Component of the empty element in B(Λ_{i_1}) ⊗* ... ⊗* B(Λ_{i_r})."""
    graph = component_of(TensorElement.level1_empty(lam), default_contents(lam, max_n), max_n, bound)
    logger.info("B(%s) by tensor component, n <= %d: %d nodes, %d edges",
                lam.label, max_n, len(graph.nodes), len(graph.edges))
    return graph


def verify_three_way(lam: Weight, max_n: int, bound: int | None = None) -> ThreeWayReport:
    mp_graph = build_blambda_mp(lam, max_n, bound)
    seg_graph = build_blambda_seg(lam, max_n, bound=bound)
    tensor_graph = build_tensor(lam, max_n, bound)

    to_seg: Dict[str, str] = {}
    to_tensor: Dict[str, str] = {}
    for n in range(max_n + 1):
        for mp in enumerate_kleshchev(lam, n):
            to_seg[mp.label] = delta_of_mp(mp).label
            to_tensor[mp.label] = "*".join(c.label for c in mp.components)

    report = ThreeWayReport(lam, max_n)
    report.node_counts = {
        "multipartitions": len(mp_graph.nodes),
        "multisegments": len(seg_graph.nodes),
        "tensor": len(tensor_graph.nodes),
    }
    report.checks["mp_vs_seg"] = isomorphic(mp_graph, seg_graph, to_seg)
    report.checks["mp_vs_tensor"] = isomorphic(mp_graph, tensor_graph, to_tensor)
    report.checks["seg_connected"] = (
        IsomorphismResult(True) if reaches_root(seg_graph)
        else IsomorphismResult(False, "some multisegment node does not reach ∅")
    )
    for failure in report.failures():
        logger.error("B(%s), n <= %d: %s", lam.label, max_n, failure)
    return report
