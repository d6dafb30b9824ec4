"""Rooted weak dual, terminal components, block-cut trees and cages."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping

from .augment import is_internally_triangulated
from .blocks import biconnected_blocks, is_biconnected
from .errors import InternalProofViolation
from .plane_graph import Dart, PlaneGraph, _DSU, faces, induced_embedding, layers, outer_walk


class NotPrepared(ValueError):
    pass


class NotExtremal(ValueError):
    pass


class Biconnected(ValueError):
    pass


class TrivialBlock(ValueError):
    pass


@dataclass(frozen=True)
class RootedTree:
    root: Hashable
    parent: Mapping[Hashable, Hashable | None]
    children: Mapping[Hashable, tuple]

    @property
    def nodes(self) -> list:
        return list(self.parent)

    def depth(self, node) -> int:
        d = 0
        while self.parent[node] is not None:
            node = self.parent[node]
            d += 1
        return d

    def leaves(self) -> list:
        return [n for n in self.parent if not self.children[n]]


def _rooted(root, adjacency: Mapping[Hashable, Iterable]) -> RootedTree:
    parent: dict = {root: None}
    children: dict = {}
    order = [root]
    for node in order:
        kids = tuple(sorted(w for w in adjacency[node] if w not in parent))
        for w in kids:
            parent[w] = node
        children[node] = kids
        order.extend(kids)
    return RootedTree(root, parent, children)


# -- weak dual of the outer layer ----------------------------------------


def default_e_star(g: PlaneGraph) -> Dart:
    """Lexicographically smallest dart of the clockwise outer walk."""
    return min(outer_walk(g))


def _face_key(walk: tuple[Dart, ...]) -> tuple[int, ...]:
    k = walk.index(min(walk))
    rolled = walk[k:] + walk[:k]
    return tuple(d.source for d in rolled)


def _check_prepared(g: PlaneGraph) -> None:
    if g.n < 3 or not is_biconnected(g.rotations) or not is_internally_triangulated(g):
        raise NotPrepared("graph must be biconnected and internally triangulated")


def weak_dual_rooted(g: PlaneGraph, e_star: tuple[int, int] | None = None) -> RootedTree:
    """Tree on the internal faces of G[L1]; nodes are face cycles (ccw)."""
    _check_prepared(g)
    e_star = Dart(*e_star) if e_star is not None else default_e_star(g)
    fp = faces(g)
    if e_star not in fp.orbit_of or fp.face(e_star) != fp.outer:
        raise NotPrepared(f"{tuple(e_star)} is not a dart of the outer face")
    outer_layer = induced_embedding(g, layers(g).l1)
    lp = faces(outer_layer)
    node_of_dart: dict[tuple[int, int], tuple[int, ...]] = {}
    for orbit_index, walk in enumerate(lp.orbits):
        if not walk or lp.face_of_orbit[orbit_index] == lp.outer:
            continue
        key = _face_key(walk)
        for d in walk:
            node_of_dart[d] = key
    adjacency: dict = {key: set() for key in node_of_dart.values()}
    for (a, b), key in node_of_dart.items():
        other = node_of_dart.get((b, a))
        if other is not None:
            adjacency[key].add(other)
    root = node_of_dart[(e_star.target, e_star.source)]
    return _rooted(root, adjacency)


# -- terminal components -------------------------------------------------


@dataclass(frozen=True)
class TerminalComponent:
    leaf: tuple[int, ...]
    cycle: tuple[int, ...]  # face of G[L1], counter-clockwise from x
    vertices: frozenset[int]
    x: int
    y: int
    z: int

    @property
    def key(self) -> int:
        return min(self.vertices)


def _anchor(tstar: RootedTree, leaf: tuple[int, ...], e_star: Dart) -> tuple[int, int]:
    darts = {(leaf[i], leaf[(i + 1) % len(leaf)]) for i in range(len(leaf))}
    par = tstar.parent[leaf]
    if par is None:
        return e_star.target, e_star.source
    pdarts = {(par[i], par[(i + 1) % len(par)]) for i in range(len(par))}
    shared = sorted(d for d in darts if (d[1], d[0]) in pdarts)
    if len(shared) != 1:
        raise InternalProofViolation("structure", f"dual edge of leaf {leaf} is not unique")
    return shared[0]


def terminal_components(
    g: PlaneGraph, tstar: RootedTree, e_star: tuple[int, int] | None = None
) -> list[TerminalComponent]:
    e_star = Dart(*e_star) if e_star is not None else default_e_star(g)
    lay = layers(g)
    fp = faces(g)
    # faces of g inside one face of G[L1] are joined across edges touching L2
    dsu = _DSU(max(fp.face_of_orbit) + 1)
    for u, rot in g.rotations.items():
        for w in rot:
            if u < w and (u in lay.l2 or w in lay.l2):
                dsu.union(fp.face((u, w)), fp.face((w, u)))
    node_of_class: dict[int, tuple[int, ...]] = {}
    for node in tstar.nodes:
        cls = dsu.find(fp.face((node[0], node[1])))
        node_of_class[cls] = node
    inside: dict[tuple[int, ...], set[int]] = {}
    for w in lay.l2:
        cls = dsu.find(fp.face((w, g.rotations[w][0])))
        inside.setdefault(node_of_class[cls], set()).add(w)

    out = []
    for leaf in tstar.leaves():
        members = inside.get(leaf)
        if not members:
            continue
        x, y = _anchor(tstar, leaf, e_star)
        z = g.next_dart((x, y)).target
        if z not in members:
            raise InternalProofViolation("structure", f"apex of {x}-{y} is not in the component")
        comps = _components(g, members)
        if len(comps) != 1:
            raise InternalProofViolation("structure", f"face {leaf} holds {len(comps)} components")
        k = leaf.index(x)
        cycle = leaf[k:] + leaf[:k]
        if cycle[1] != y:
            raise InternalProofViolation("structure", "anchor dart is not on the leaf face")
        out.append(TerminalComponent(leaf, cycle, frozenset(members), x, y, z))
    return sorted(out, key=lambda t: t.key)


def _components(g: PlaneGraph, members: set[int]) -> list[set[int]]:
    seen: set[int] = set()
    comps = []
    for s in sorted(members):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.rotations[v]:
                if w in members and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(comp)
    return comps


# -- block-cutvertex tree ------------------------------------------------


def block_node(block: Iterable[int]) -> tuple[str, tuple[int, ...]]:
    return ("B", tuple(sorted(block)))


def block_cut_tree_rooted(g: PlaneGraph, tc: TerminalComponent) -> RootedTree:
    """Block-cutvertex tree of K rooted at z's C-node or at z's block."""
    blocks, cut, _ = biconnected_blocks(g.rotations, tc.vertices)
    adjacency: dict = {}
    for b in blocks:
        bn = block_node(b)
        adjacency.setdefault(bn, set())
        for v in b:
            if v in cut:
                adjacency[bn].add(("C", v))
                adjacency.setdefault(("C", v), set()).add(bn)
    if tc.z in cut:
        root = ("C", tc.z)
    else:
        root = next(block_node(b) for b in blocks if tc.z in b)
    return _rooted(root, adjacency)


def extremal_leaves(t: RootedTree) -> list[tuple[str, tuple[int, ...]]]:
    leaves = t.leaves()
    depth = {leaf: t.depth(leaf) for leaf in leaves}
    deepest = max(depth.values())
    return sorted((leaf for leaf in leaves if depth[leaf] == deepest), key=lambda b: b[1])


# -- regions bounded by cycles -------------------------------------------


@dataclass(frozen=True)
class Region:
    """Vertices, edges and faces inside or on a cycle of a plane graph."""

    cycle: tuple[int, ...]
    faces: frozenset[int]
    vertices: frozenset[int]
    edges: frozenset[frozenset[int]]

    @property
    def interior(self) -> frozenset[int]:
        return self.vertices - set(self.cycle)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


def enclosed(g: PlaneGraph, cycle: Iterable[int]) -> Region:
    """The side of ``cycle`` away from the outer face, closure included."""
    cycle = tuple(cycle)
    fp = faces(g)
    cyc_edges = {frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))}
    for e in cyc_edges:
        a, b = tuple(e)
        if not g.has_edge(a, b):
            raise InternalProofViolation("structure", f"cycle edge {a}-{b} missing")
    dsu = _DSU(max(fp.face_of_orbit) + 1)
    for u, rot in g.rotations.items():
        for w in rot:
            if u < w and frozenset((u, w)) not in cyc_edges:
                dsu.union(fp.face((u, w)), fp.face((w, u)))
    a, b = cycle[0], cycle[1]
    sides = {dsu.find(fp.face((a, b))), dsu.find(fp.face((b, a)))}
    outer = dsu.find(fp.outer)
    if len(sides) != 2 or outer not in sides:
        raise InternalProofViolation("structure", f"cycle {cycle} does not separate the outer face")
    (inner,) = sides - {outer}
    inside_faces = frozenset(f for f in fp.face_ids() if dsu.find(f) == inner)
    vertices = set(cycle)
    edges = set(cyc_edges)
    for u, rot in g.rotations.items():
        for w in rot:
            if fp.face((u, w)) in inside_faces:
                vertices.update((u, w))
                edges.add(frozenset((u, w)))
    return Region(cycle, inside_faces, frozenset(vertices), frozenset(edges))


# -- cages -----------------------------------------------------------------


@dataclass(frozen=True)
class CageDescriptor:
    block: tuple[int, ...]
    trivial: bool
    c: int
    d: int | None
    u: int | None
    v: int | None
    u_next: int | None  # follows u on the clockwise outer walk of B
    v_prev: int | None  # precedes v on that walk
    left: int
    right: int
    left_out: int  # precedes ``left`` on the outer walk of G
    right_out: int  # follows ``right`` on the outer walk of G
    path: tuple[int, ...]
    region: Region
    block_walk: tuple[int, ...]  # clockwise outer walk of B from u to v
    l1_nbrs: Mapping[int, frozenset[int]] = field(repr=False)
    block_degree: Mapping[int, int] = field(repr=False)  # for path vertices

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.block)

    def delta(self, w: int) -> int:
        return self.region.degree(w)


def _outer_position(g: PlaneGraph) -> tuple[list[int], dict[int, int]]:
    walk = [d.source for d in outer_walk(g)]
    return walk, {v: i for i, v in enumerate(walk)}


def cage_at(g: PlaneGraph, block: Iterable[int], c: int) -> CageDescriptor:
    """Cage data of ``block`` attached to the rest of its component at ``c``."""
    block = tuple(sorted(block))
    bset = set(block)
    l1 = layers(g).l1
    if len(block) == 2:
        (d,) = bset - {c}
        u = v = u_next = v_prev = None
        left, right = g.pred(c, d), g.succ(c, d)
        block_walk: tuple[int, ...] = (d,)
    else:
        d = None
        sub = induced_embedding(g, bset)
        bwalk = [x.source for x in outer_walk(sub)]
        k = bwalk.index(c)
        bwalk = bwalk[k:] + bwalk[:k]
        u, v = bwalk[1], bwalk[-1]
        u_next, v_prev = bwalk[2], bwalk[-2]
        left, right = g.pred(c, u), g.succ(c, v)
        block_walk = tuple(bwalk[1:])
    if left not in l1 or right not in l1:
        raise InternalProofViolation("structure", f"cage vertices of block {block} not on the outer face")
    if left == right:
        raise InternalProofViolation("structure", f"cage vertices of block {block} coincide")
    walk, pos = _outer_position(g)
    i, j = pos[left], pos[right]
    n1 = len(walk)
    path = tuple(walk[(i + t) % n1] for t in range((j - i) % n1 + 1))
    left_out = walk[(i - 1) % n1]
    right_out = walk[(j + 1) % n1]
    region = enclosed(g, path + (c,))
    l1_nbrs = {w: frozenset(x for x in g.rotations[w] if x in l1) for w in block}
    block_degree = {z: sum(1 for x in g.rotations[z] if x in bset) for z in path}
    return CageDescriptor(
        block, d is not None, c, d, u, v, u_next, v_prev, left, right, left_out, right_out,
        path, region, block_walk, l1_nbrs, block_degree,
    )


def cage(g: PlaneGraph, tree: RootedTree, leaf: tuple[str, tuple[int, ...]]) -> CageDescriptor:
    """Cage descriptor of an extremal leaf of a rooted block-cut tree."""
    if tree.parent[leaf] is None:
        raise Biconnected("the component is a single block")
    if leaf not in extremal_leaves(tree):
        raise NotExtremal(f"{leaf} is not an extremal leaf")
    c = tree.parent[leaf][1]
    cd = cage_at(g, leaf[1], c)
    bset = set(cd.block)
    path = cd.path
    for a, b in zip(path, path[1:]):
        third = g.next_dart((b, a)).target
        if third not in bset:
            raise InternalProofViolation("structure", f"face on cage edge {a}-{b} misses the block")
    for i, a in enumerate(path):
        for b in path[i + 2 :]:
            if frozenset((a, b)) in cd.region.edges:
                raise InternalProofViolation("structure", f"cage chord {a}-{b}")
    return cd


def is_pesky(cd: CageDescriptor) -> bool:
    if cd.trivial:
        raise TrivialBlock("pesky is defined for non-trivial blocks")
    ends = cd.delta(cd.left) == 4 and cd.delta(cd.right) == 4
    middle = all(cd.delta(w) == 5 for w in cd.path[1:-1])
    unique = cd.l1_nbrs[cd.u] == {cd.left} and cd.l1_nbrs[cd.v] == {cd.right}
    alternating = all(len(cd.l1_nbrs[w]) == (1 if i % 2 == 0 else 2) for i, w in enumerate(cd.block_walk))
    if ends and middle and not (unique and alternating):
        raise InternalProofViolation("pesky", f"degree pattern of block {cd.block} without alternation")
    pesky = ends and middle
    if pesky and len(cd.block) != 2 * len(cd.path):
        raise InternalProofViolation("pesky", f"block {cd.block} size differs from twice its cage path")
    return pesky
