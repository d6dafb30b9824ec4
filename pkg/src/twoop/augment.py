"""Edge augmentation to an internally triangulated biconnected 2-outerplane graph."""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import biconnected_blocks, is_biconnected
from .plane_graph import (
    PlaneGraph,
    _corner_on_face,
    check_two_outerplane,
    faces,
    insert_edge,
    layers,
)


class TooSmall(ValueError):
    pass


class NotTwoOuterplane(ValueError):
    pass


@dataclass(frozen=True)
class AugmentResult:
    graph: PlaneGraph
    added_edges: tuple[tuple[int, int, int], ...]


def is_internally_triangulated(g: PlaneGraph) -> bool:
    fp = faces(g)
    for f in fp.face_ids():
        if f == fp.outer:
            continue
        walks = fp.walks(f)
        if len(walks) != 1 or len(walks[0]) != 3:
            return False
        if len({d.source for d in walks[0]}) != 3:
            return False
    return True


def _outer_corner(g: PlaneGraph, v: int) -> tuple[int, int] | None:
    return _corner_on_face(g, v, faces(g).outer)


def _connect_components(g: PlaneGraph, added: list) -> PlaneGraph:
    while True:
        fp = faces(g)
        comp = g.component_of()
        roots = sorted({comp[v] for v in fp.face_vertices(fp.outer)})
        if len(roots) < 2:
            return g
        l1 = fp.face_vertices(fp.outer)
        v1 = min(v for v in l1 if comp[v] == roots[0])
        v2 = min(v for v in l1 if comp[v] == roots[1])
        g = insert_edge(g, v1, v2, _outer_corner(g, v1), _outer_corner(g, v2))
        added.append((min(v1, v2), max(v1, v2), 1))


def _split_outer_cutvertices(g: PlaneGraph, added: list) -> PlaneGraph:
    while True:
        fp = faces(g)
        walk = fp.walks(fp.outer)
        if len(walk) != 1:
            raise NotTwoOuterplane("outer face is not a single walk after connecting")
        walk = list(walk[0])
        k = walk.index(min(walk))
        walk = walk[k:] + walk[:k]
        _, _, edge_block = biconnected_blocks(g.rotations)
        hit = None
        for i, d in enumerate(walk):
            e = walk[(i + 1) % len(walk)]
            if edge_block[frozenset(d)] != edge_block[frozenset(e)]:
                hit = (walk[i - 1], d, e)
                break
        if hit is None:
            return g
        before, (v1, u), (_, v2) = hit
        g = insert_edge(g, v1, v2, before, (u, v2), outer=(v1, v2))
        added.append((min(v1, v2), max(v1, v2), 2))


def _fill_faces(g: PlaneGraph, added: list, l1: frozenset[int], step: int) -> PlaneGraph:
    while True:
        fp = faces(g)
        best = None
        for f in fp.face_ids():
            if f == fp.outer:
                continue
            verts = sorted(fp.face_vertices(f))
            if step == 4 and len(verts) < 4:
                continue
            for i, a in enumerate(verts):
                for b in verts[i + 1 :]:
                    if g.has_edge(a, b):
                        continue
                    if step == 3 and a not in l1 and b not in l1:
                        continue
                    cand = (a, b, f)
                    if best is None or cand[:2] < best[:2]:
                        best = cand
                    break
        if best is None:
            return g
        a, b, f = best
        if step == 4 and (a in l1 or b in l1):
            raise NotTwoOuterplane(f"triangulation pair {a}-{b} touches the outer layer")
        g = insert_edge(g, a, b, _corner_on_face(g, a, f), _corner_on_face(g, b, f))
        added.append((a, b, step))


def augment(g: PlaneGraph) -> AugmentResult:
    """Add edges until ``g`` is internally triangulated and biconnected.

    The outer layer is preserved.  Pair choices favour the smallest ids so
    the output is reproducible.
    """
    if g.n < 3:
        raise TooSmall(f"need at least 3 vertices, got {g.n}")
    if not check_two_outerplane(g):
        raise NotTwoOuterplane("input is not 2-outerplane")
    l1 = layers(g).l1
    added: list[tuple[int, int, int]] = []
    h = _connect_components(g, added)
    h = _split_outer_cutvertices(h, added)
    h = _fill_faces(h, added, l1, 3)
    h = _fill_faces(h, added, l1, 4)
    if layers(h).l1 != l1:
        raise NotTwoOuterplane("augmentation changed the outer layer")
    if not (is_internally_triangulated(h) and is_biconnected(h.rotations)):
        raise NotTwoOuterplane("augmentation did not reach a triangulated biconnected graph")
    if not check_two_outerplane(h):
        raise NotTwoOuterplane("augmentation broke 2-outerplanarity")
    return AugmentResult(h, tuple(added))
