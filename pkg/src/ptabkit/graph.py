"""Enumerate irreducible crystal components of ptableaux and export them."""

from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .crystal import crystal_ptab
from .errors import LimitExceeded
from .grid import Ptableau
from .rsk import ptab_rsk
from .words import LOWER, RAISE

DEFAULT_LIMIT = 100_000
LIMIT_ENV = "PTABKIT_LIMIT"


def default_limit() -> int:
    value = os.environ.get(LIMIT_ENV)
    return int(value) if value else DEFAULT_LIMIT


def node_label(T: Ptableau) -> str:
    """Compact one-line text: rows of the left-justified form joined by '/'."""
    return "/".join(" ".join("." if v is None else str(v) for v in row) or "-" for row in T.left)


@dataclass(frozen=True)
class CrystalComponent:
    nodes: Tuple[Ptableau, ...]
    edges: Tuple[Tuple[int, int, int], ...]  # (from index, i, to index) for f_i
    source: int
    sink: int
    complete: bool = True

    def __len__(self):
        return len(self.nodes)

    def index(self, T: Ptableau) -> int:
        return self.nodes.index(T)


def _neighbours(T: Ptableau):
    for i in range(1, T.n_rows):
        for d in (RAISE, LOWER):
            nxt = crystal_ptab(T, i, d)
            if nxt is not None:
                yield i, d, nxt


def _closure(seed: Ptableau, limit: int):
    seen = {seed}
    queue = deque([seed])
    while queue:
        T = queue.popleft()
        for _, _, nxt in _neighbours(T):
            if nxt not in seen:
                if len(seen) >= limit:
                    return seen, False
                seen.add(nxt)
                queue.append(nxt)
    return seen, True


def _order(nodes, start: Ptableau) -> List[Ptableau]:
    """BFS layers from ``start`` (lowering edges only), each layer sorted by label."""
    order = [start]
    placed = {start}
    layer = [start]
    while layer:
        nxt = set()
        for T in layer:
            for i in range(1, T.n_rows):
                child = crystal_ptab(T, i, LOWER)
                if child is not None and child in nodes and child not in placed:
                    nxt.add(child)
        layer = sorted(nxt, key=node_label)
        placed.update(layer)
        order.extend(layer)
    # anything unreachable from the source (only possible for partial results)
    order.extend(sorted(nodes - placed, key=node_label))
    return order


def explore(seed: Ptableau, max_nodes: Optional[int] = None) -> CrystalComponent:
    """Breadth-first closure of ``seed`` under every e_i and f_i.

    Nodes are ordered by distance from the highest-weight node and then by
    label, so the result does not depend on which node was the seed.
    """
    limit = default_limit() if max_nodes is None else max_nodes
    nodes, complete = _closure(seed, limit)
    sources = [T for T in nodes if all(crystal_ptab(T, i, RAISE) is None for i in range(1, T.n_rows))]
    start = min(sources, key=node_label) if sources else seed
    order = _order(nodes, start)
    index = {T: k for k, T in enumerate(order)}
    edges = []
    for T in order:
        for i in range(1, T.n_rows):
            child = crystal_ptab(T, i, LOWER)
            if child is not None and child in index:
                edges.append((index[T], i, index[child]))
    sinks = [k for k, T in enumerate(order) if all(crystal_ptab(T, i, LOWER) is None for i in range(1, T.n_rows))]
    comp = CrystalComponent(
        tuple(order), tuple(edges), index[start], sinks[0] if sinks else len(order) - 1, complete
    )
    if not complete:
        raise LimitExceeded(f"component has more than {limit} nodes", comp)
    return comp


def plactic_class(T: Ptableau) -> Ptableau:
    """Distinguished-crystal representative of the plactic class of ``T``."""
    return ptab_rsk(T).pt


def weyl_dimension(shape: Sequence[int], n: int) -> int:
    """Number of SSYT of the given shape with entries in 1..n."""
    parts = list(shape) + [0] * (n - len(shape))
    if len(parts) > n:
        return 0 if any(parts[n:]) else weyl_dimension(parts[:n], n)
    value = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            value *= Fraction(parts[i] - parts[j] + j - i, j - i)
    return int(value)


def to_dot(comp: CrystalComponent) -> str:
    lines = ["digraph crystal {", "  node [shape=box, fontname=monospace];"]
    for k, T in enumerate(comp.nodes):
        lines.append(f"  n{k} [label={json.dumps(node_label(T))}];")
    for a, i, b in comp.edges:
        lines.append(f'  n{a} -> n{b} [label="f{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_obj(comp: CrystalComponent) -> Dict:
    return {
        "nodes": [[list(row) for row in T.left] for T in comp.nodes],
        "edges": [{"from": a, "i": i, "to": b} for a, i, b in comp.edges],
        "source": comp.source,
        "sink": comp.sink,
    }


def export(comp: CrystalComponent, fmt: str = "dot") -> str:
    if fmt == "dot":
        return to_dot(comp)
    if fmt == "json":
        return json.dumps(to_json_obj(comp), sort_keys=True) + "\n"
    raise ValueError(f"unknown export format {fmt!r}")
