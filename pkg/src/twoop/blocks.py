"""Biconnected blocks and cutvertices of an abstract graph."""

from __future__ import annotations

from typing import Mapping, Sequence


def biconnected_blocks(
    adj: Mapping[int, Sequence[int]], vertices=None
) -> tuple[list[frozenset[int]], set[int], dict[frozenset[int], int]]:
    """Blocks (as vertex sets) and cutvertices, restricted to ``vertices``.

    Isolated vertices form singleton blocks.  The third value maps every
    edge, as a frozenset pair, to the index of its block.
    """
    if vertices is None:
        vertices = list(adj)
    vset = set(vertices)
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[frozenset[int]] = []
    edge_block: dict[frozenset[int], int] = {}
    cut: set[int] = set()
    counter = 0
    for root in sorted(vset):
        if root in disc:
            continue
        nbrs_root = [w for w in adj[root] if w in vset]
        if not nbrs_root:
            disc[root] = counter
            counter += 1
            blocks.append(frozenset([root]))
            continue
        disc[root] = low[root] = counter
        counter += 1
        child_count = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter([w for w in adj[root] if w in vset]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter([x for x in adj[w] if x in vset])))
                    if v == root:
                        child_count += 1
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] >= disc[p]:
                    if p != root:
                        cut.add(p)
                    comp_edges = []
                    while True:
                        e = edge_stack.pop()
                        comp_edges.append(e)
                        if e == (p, v):
                            break
                    idx = len(blocks)
                    blocks.append(frozenset(x for e in comp_edges for x in e))
                    for a, b in comp_edges:
                        edge_block[frozenset((a, b))] = idx
        if child_count > 1:
            cut.add(root)
    return blocks, cut, edge_block


def is_biconnected(adj: Mapping[int, Sequence[int]]) -> bool:
    """Connected, at least 3 vertices and no cutvertex."""
    if len(adj) < 3:
        return False
    blocks, cut, _ = biconnected_blocks(adj)
    return len(blocks) == 1 and not cut
