"""Truncated crystal graphs: builders, isomorphism check and summaries.

Nodes are ordered by (n, label); an edge (src, dst, i) means dst = E_i(src).
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple, TypeVar, Union

import networkx as nx
import pandas as pd

from crystaldict.config import get_config
from crystaldict.errors import check_bound
from crystaldict.models.partitions import Multipartition, enumerate_kleshchev, removable_boxes
from crystaldict.models.segments import (
    Content,
    ContentMultiset,
    Multisegment,
    Segment,
    Weight,
    content_multiset,
    ends_of,
    n_of,
)
from crystaldict.services.mp_crystal import apply_e_mp
from crystaldict.services.seg_crystal import apply_e, apply_f, cyclotomic_check

logger = logging.getLogger(__name__)

T = TypeVar("T", bound=Hashable)


@dataclass(frozen=True)
class Node:
    label: str
    n: int
    weight: ContentMultiset


@dataclass(frozen=True)
class Edge:
    src: int
    dst: int
    i: Content


@dataclass
class CrystalGraph:
    nodes: List[Node] = field(default_factory=list)
    edges: List[Edge] = field(default_factory=list)

    def index(self) -> Dict[str, int]:
        return {node.label: k for k, node in enumerate(self.nodes)}

    def labeled_edges(self) -> List[Tuple[str, str, Content]]:
        return [(self.nodes[e.src].label, self.nodes[e.dst].label, e.i) for e in self.edges]

    def root(self) -> Optional[Node]:
        sized_zero = [node for node in self.nodes if node.n == 0]
        return sized_zero[0] if len(sized_zero) == 1 else None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CrystalGraph):
            return NotImplemented
        return self.nodes == other.nodes and self.labeled_edges() == other.labeled_edges()


def assemble(
    items: Iterable[T],
    *,
    key: Callable[[T], str],
    size_of: Callable[[T], int],
    weight_of: Callable[[T], ContentMultiset],
    e_op: Callable[[T, Content], Optional[T]],
    labels_of: Callable[[T], Iterable[Content]],
) -> CrystalGraph:
    """Sort nodes by (n, label) and record every E-edge that stays inside the node set."""
    ordered = sorted(set(items), key=lambda x: (size_of(x), key(x)))
    position = {key(x): k for k, x in enumerate(ordered)}
    nodes = [Node(key(x), size_of(x), weight_of(x)) for x in ordered]
    edges: List[Edge] = []
    for k, item in enumerate(ordered):
        for i in sorted(set(labels_of(item))):
            target = e_op(item, i)
            if target is None:
                continue
            dst = position.get(key(target))
            if dst is not None:
                edges.append(Edge(k, dst, i))
    edges.sort(key=lambda e: (e.src, e.i))
    return CrystalGraph(nodes, edges)


def f_closure(
    start: T,
    contents: Sequence[Content],
    max_n: int,
    *,
    key: Callable[[T], str],
    size_of: Callable[[T], int],
    weight_of: Callable[[T], ContentMultiset],
    f_op: Callable[[T, Content], Optional[T]],
    e_op: Callable[[T, Content], Optional[T]],
    keep: Callable[[T], bool] = lambda _: True,
    bound: int | None = None,
) -> CrystalGraph:
    """Breadth-first closure of ``start`` under F_i for i in ``contents``."""
    check_bound("graph max_n", max_n, bound if bound is not None else get_config().graph_max_n)
    seen = {key(start): start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        if size_of(current) >= max_n:
            continue
        for i in contents:
            nxt = f_op(current, i)
            if nxt is None or key(nxt) in seen or not keep(nxt):
                continue
            seen[key(nxt)] = nxt
            queue.append(nxt)
    return assemble(
        seen.values(),
        key=key,
        size_of=size_of,
        weight_of=weight_of,
        e_op=e_op,
        labels_of=lambda _: contents,
    )


def segments_within(contents: Iterable[Content]) -> List[Segment]:
    """Every segment all of whose contents lie in the given set."""
    allowed = sorted(set(contents))
    found: List[Segment] = []
    for a in allowed:
        b = a
        while b in allowed:
            found.append(Segment(a, b))
            b += 1
    return found


def enumerate_multisegments(contents: Iterable[Content], max_n: int) -> List[Multisegment]:
    """All multisegments over the given contents with n ≤ max_n."""
    pool = segments_within(contents)
    found: List[Multisegment] = []

    def extend(first: int, chosen: Tuple[Segment, ...], budget: int) -> None:
        found.append(Multisegment(chosen))
        for k in range(first, len(pool)):
            if pool[k].length <= budget:
                extend(k, chosen + (pool[k],), budget - pool[k].length)

    extend(0, (), max_n)
    return found


def build_binf(contents: Iterable[Content], max_n: int, bound: int | None = None) -> CrystalGraph:
    check_bound("graph max_n", max_n, bound if bound is not None else get_config().graph_max_n)
    contents = sorted(set(contents))
    graph = assemble(
        enumerate_multisegments(contents, max_n),
        key=lambda d: d.label,
        size_of=n_of,
        weight_of=content_multiset,
        e_op=apply_e,
        labels_of=ends_of,
    )
    logger.info("B(inf) over %s..%s, n <= %d: %d nodes, %d edges",
                contents[0] if contents else None, contents[-1] if contents else None,
                max_n, len(graph.nodes), len(graph.edges))
    return graph


def default_contents(lam: Weight, max_n: int) -> List[Content]:
    """[min color - max_n, max color + max_n], enough for every node of size ≤ max_n."""
    if not lam.support:
        return []
    return list(range(min(lam.support) - max_n, max(lam.support) + max_n + 1))


def build_blambda_seg(
    lam: Weight, max_n: int, contents: Iterable[Content] | None = None, bound: int | None = None
) -> CrystalGraph:
    labels = sorted(set(contents)) if contents is not None else default_contents(lam, max_n)
    graph = f_closure(
        Multisegment(),
        labels,
        max_n,
        key=lambda d: d.label,
        size_of=n_of,
        weight_of=content_multiset,
        f_op=apply_f,
        e_op=apply_e,
        keep=lambda d: cyclotomic_check(d, lam),
        bound=bound,
    )
    logger.info("B(%s) by multisegments, n <= %d: %d nodes, %d edges",
                lam.label, max_n, len(graph.nodes), len(graph.edges))
    return graph


def _removable_contents(mp: Multipartition) -> List[Content]:
    return sorted({c for component in mp.components for c in removable_boxes(component)})


def build_blambda_mp(lam: Weight, max_n: int, bound: int | None = None) -> CrystalGraph:
    check_bound("graph max_n", max_n, bound if bound is not None else get_config().graph_max_n)
    items: List[Multipartition] = []
    for n in range(max_n + 1):
        items.extend(enumerate_kleshchev(lam, n))
    graph = assemble(
        items,
        key=lambda mp: mp.label,
        size_of=lambda mp: mp.size,
        weight_of=lambda mp: mp.weight(),
        e_op=apply_e_mp,
        labels_of=_removable_contents,
    )
    logger.info("B(%s) by Kleshchev multipartitions, n <= %d: %d nodes, %d edges",
                lam.label, max_n, len(graph.nodes), len(graph.edges))
    return graph


@dataclass(frozen=True)
class IsomorphismResult:
    ok: bool
    certificate: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


NodeMap = Union[Mapping[str, str], Callable[[str], str]]


def isomorphic(g1: CrystalGraph, g2: CrystalGraph, node_map: NodeMap) -> IsomorphismResult:
    """Check that node_map is a size/weight/edge preserving bijection g1 → g2."""
    lookup = node_map.__getitem__ if isinstance(node_map, Mapping) else node_map
    targets = g2.index()
    image: Dict[str, str] = {}
    for node in g1.nodes:
        try:
            mapped = lookup(node.label)
        except KeyError:
            return IsomorphismResult(False, f"node {node.label} has no image")
        if mapped not in targets:
            return IsomorphismResult(False, f"node {node.label} maps to {mapped}, not a node of the target")
        target = g2.nodes[targets[mapped]]
        if target.n != node.n or target.weight != node.weight:
            return IsomorphismResult(False, f"node {node.label} -> {mapped} changes size or weight")
        image[node.label] = mapped
    if len(set(image.values())) != len(image) or len(image) != len(g2.nodes):
        return IsomorphismResult(
            False, f"node map is not a bijection ({len(g1.nodes)} -> {len(set(image.values()))} of {len(g2.nodes)})"
        )
    mapped_edges = {(image[s], image[d], i) for s, d, i in g1.labeled_edges()}
    target_edges = set(g2.labeled_edges())
    missing = sorted(mapped_edges - target_edges, key=str)
    if missing:
        src, dst, i = missing[0]
        return IsomorphismResult(False, f"edge {src} -{i}-> {dst} missing from the target")
    extra = sorted(target_edges - mapped_edges, key=str)
    if extra:
        src, dst, i = extra[0]
        return IsomorphismResult(False, f"edge {src} -{i}-> {dst} has no preimage")
    return IsomorphismResult(True)


def to_networkx(g: CrystalGraph) -> nx.MultiDiGraph:
    graph = nx.MultiDiGraph()
    for node in g.nodes:
        graph.add_node(node.label, n=node.n)
    for src, dst, i in g.labeled_edges():
        graph.add_edge(src, dst, key=i, i=i)
    return graph


def reaches_root(g: CrystalGraph) -> bool:
    """Every node reaches the unique size-0 node along E-edges."""
    root = g.root()
    if root is None:
        return False
    graph = to_networkx(g)
    reaching = nx.ancestors(graph, root.label) | {root.label}
    return len(reaching) == len(g.nodes)


def size_profile(g: CrystalGraph) -> pd.DataFrame:
    nodes = pd.DataFrame({"n": [node.n for node in g.nodes]})
    edges = pd.DataFrame({"n": [g.nodes[e.src].n for e in g.edges]})
    profile = pd.DataFrame(
        {
            "nodes": nodes.groupby("n").size(),
            "edges": edges.groupby("n").size() if len(edges) else pd.Series(dtype="int64"),
        }
    )
    profile = profile.fillna(0).astype("int64")
    profile.index.name = "n"
    return profile.reset_index()
