from __future__ import annotations

import io

from typing import Tuple

import pandas as pd

from crystaldict.errors import MalformedInput
from crystaldict.models.segments import ContentMultiset
from crystaldict.services.codec import (
    EdgeDocument,
    GraphDocument,
    NodeDocument,
    dumps,
    loads,
    validate,
    weight_of_label,
)
from crystaldict.services.graph import CrystalGraph, Edge, Node

def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'

def to_dot(g: CrystalGraph) -> str:
    lines = ["digraph crystal {"]
    for node in g.nodes:
        lines.append(f"  {_quote(node.label)} [n={node.n}];")
    for src, dst, i in g.labeled_edges():
        lines.append(f"  {_quote(src)} -> {_quote(dst)} [label={i}];")
    lines.append("}")
    return "\n".join(lines) + "\n"

def to_json(g: CrystalGraph) -> str:
    document = GraphDocument(
        nodes=[NodeDocument(label=node.label, n=node.n) for node in g.nodes],
        edges=[EdgeDocument(src=e.src, dst=e.dst, i=e.i) for e in g.edges],
    )
    return dumps(document.model_dump())

def parse_json(text: str) -> CrystalGraph:
    """Inverse of to_json; node weights are recomputed from the labels."""
    document = validate(GraphDocument, loads(text), "graph")
    nodes = [Node(item.label, item.n, weight_of_label(item.label)) for item in document.nodes]
    edges = []
    for item in document.edges:
        if not (0 <= item.src < len(nodes) and 0 <= item.dst < len(nodes)):
            raise MalformedInput(f"edge {item.src} -> {item.dst} points outside the node list")
        edges.append(Edge(item.src, item.dst, item.i))
    return CrystalGraph(nodes, edges)

def weight_text(weight: ContentMultiset) -> str:
    return " ".join(f"{c}:{k}" for c, k in weight.counts)

def graph_frames(g: CrystalGraph) -> Tuple[pd.DataFrame, pd.DataFrame]:
    nodes = pd.DataFrame(
        [{"index": k, "label": node.label, "n": node.n, "weight": weight_text(node.weight)}
         for k, node in enumerate(g.nodes)],
        columns=["index", "label", "n", "weight"],
    )
    edges = pd.DataFrame(
        [{"src": src, "dst": dst, "i": i} for src, dst, i in g.labeled_edges()],
        columns=["src", "dst", "i"],
    )
    return nodes, edges

def to_csv(g: CrystalGraph, table: str = "edges") -> str:
    nodes, edges = graph_frames(g)
    frame = nodes if table == "nodes" else edges
    return frame.to_csv(index=False, lineterminator="\n")

def to_excel(g: CrystalGraph) -> bytes:
    nodes, edges = graph_frames(g)
    output = io.BytesIO()
    with pd.ExcelWriter(output, engine="openpyxl") as writer:
        nodes.to_excel(writer, index=False, sheet_name="Nodes")
        edges.to_excel(writer, index=False, sheet_name="Edges")
    return output.getvalue()
