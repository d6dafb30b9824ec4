"""Named fixtures, a seeded random generator and the lower-bound gadget family."""

from __future__ import annotations

import random
from dataclasses import dataclass
from importlib import resources
from typing import Callable

from .augment import augment
from .plane_graph import (
    PlaneGraph,
    _corner_on_face,
    add_vertex_in_face,
    check_two_outerplane,
    faces,
    from_drawing,
    insert_edge,
    layers,
    parse,
)


class UnknownName(KeyError):
    pass


@dataclass(frozen=True)
class GenConfig:
    n: int
    seed: int = 0
    inner_fraction: float = 0.4
    triangulate: bool = True
    chord_rate: float = 0.5
    edge_rate: float = 1.5  # extra edge attempts per vertex

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not 0 <= self.inner_fraction < 1:
            raise ValueError("inner_fraction must lie in [0, 1)")


def cycle_graph(n: int) -> PlaneGraph:
    """Cycle 0..n-1 drawn clockwise, so (0, 1) lies on the outer face."""
    rot = {i: ((i - 1) % n, (i + 1) % n) for i in range(n)}
    g = PlaneGraph(rot, [(0, 1)])
    if n >= 3 and faces(g).face((0, 1)) != faces(g).outer:
        raise AssertionError("cycle orientation")
    return g


def _internal_faces(g: PlaneGraph) -> list[int]:
    fp = faces(g)
    return [f for f in fp.face_ids() if f != fp.outer]


def _try_edge(g: PlaneGraph, rng: random.Random, face: int) -> PlaneGraph | None:
    verts = sorted(faces(g).face_vertices(face))
    pairs = [(a, b) for i, a in enumerate(verts) for b in verts[i + 1 :] if not g.has_edge(a, b)]
    if not pairs:
        return None
    a, b = rng.choice(pairs)
    fp = faces(g)
    ca = [(w, a) for w in g.rotations[a] if fp.face((w, a)) == face] or [None]
    cb = [(w, b) for w in g.rotations[b] if fp.face((w, b)) == face] or [None]
    h = insert_edge(g, a, b, rng.choice(ca), rng.choice(cb))
    return h if check_two_outerplane(h) else None


def gen_random(cfg: GenConfig) -> PlaneGraph:
    """Connected 2-outerplane graph; identical configs give identical graphs."""
    rng = random.Random(cfg.seed)
    n = cfg.n
    if n == 1:
        return PlaneGraph({0: ()})
    if n == 2:
        return PlaneGraph({0: (1,), 1: (0,)}, [(0, 1)])
    inner = min(int(round(cfg.inner_fraction * n)), n - 3)
    outer_n = n - inner
    g = cycle_graph(outer_n)
    # chords of the outer layer
    for _ in range(int(cfg.chord_rate * outer_n)):
        fs = _internal_faces(g)
        h = _try_edge(g, rng, rng.choice(fs))
        if h is not None:
            g = h
    # inner vertices hang off a vertex of some internal face
    for w in range(outer_n, n):
        while True:
            fs = _internal_faces(g)
            face = rng.choice(fs)
            verts = sorted(faces(g).face_vertices(face))
            anchor = rng.choice(verts)
            corner = _corner_on_face(g, anchor, face)
            h = add_vertex_in_face(g, w, face)
            h = insert_edge(h, w, anchor, None, corner)
            if check_two_outerplane(h):
                g = h
                break
    for _ in range(int(cfg.edge_rate * n)):
        fs = _internal_faces(g)
        h = _try_edge(g, rng, rng.choice(fs))
        if h is not None:
            g = h
    if cfg.triangulate:
        g = augment(g).graph
    return g


# -- named fixtures --------------------------------------------------------


def _k4() -> PlaneGraph:
    coords = {0: (0.0, 4.0), 1: (3.5, -2.0), 2: (-3.5, -2.0), 3: (0.0, 0.0)}
    return from_drawing(coords, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)])


def _octahedron() -> PlaneGraph:
    """Outer triangle 0 1 2, inner triangle 3 4 5; inner i misses outer i - 3."""
    coords = {0: (0.0, 4.0), 1: (-3.5, -2.0), 2: (3.5, -2.0), 3: (0.0, -1.0), 4: (0.9, 0.5), 5: (-0.9, 0.5)}
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
    edges += [(3, 1), (3, 2), (4, 2), (4, 0), (5, 0), (5, 1)]
    return from_drawing(coords, edges)


def _wheel(rim: int) -> PlaneGraph:
    import math

    coords = {i: (math.cos(-2 * math.pi * i / rim), math.sin(-2 * math.pi * i / rim)) for i in range(rim)}
    coords[rim] = (0.0, 0.0)
    edges = [(i, (i + 1) % rim) for i in range(rim)] + [(i, rim) for i in range(rim)]
    return from_drawing(coords, edges)


def _wheel_one_spoke_removed() -> PlaneGraph:
    g = _wheel(5)
    coords = {0: (1.0, 0.0), 1: (0.31, -0.95), 2: (-0.81, -0.59), 3: (-0.81, 0.59), 4: (0.31, 0.95), 5: (0.0, 0.0)}
    edges = [e for e in g.edges() if e != (0, 5)]
    return from_drawing(coords, edges)


GADGET_L1 = (0, 1, 2, 3)


def _gadget(offset: float = 0.0, base: int = 0) -> tuple[dict[int, tuple[float, float]], list[tuple[int, int]]]:
    """Outer square a b c d around a path q1 q2 q3 with one ear above and below each path edge.

    Every outer vertex sees one ear and both ends of its path edge, so it
    closes a K4 (and, with the opposite ear, a K_{2,3}); each ear has that
    outer vertex as its only outer neighbour.
    """
    a, b, c, d, q1, q2, q3, m1, m2, m3, m4 = (base + i for i in range(11))
    pts = {
        a: (-3, 3), b: (3, 3), c: (3, -3), d: (-3, -3),
        q1: (-1.5, 0), q2: (0, 0), q3: (1.5, 0),
        m1: (-1.4, 0.8), m2: (-1.4, -0.8), m3: (1.4, 0.8), m4: (1.4, -0.8),
    }
    coords = {v: (x + offset, float(y)) for v, (x, y) in pts.items()}
    edges = [(a, b), (b, c), (c, d), (d, a), (q1, q2), (q2, q3)]
    for ear, (s, t), owner in ((m1, (q1, q2), a), (m2, (q1, q2), d), (m3, (q2, q3), b), (m4, (q2, q3), c)):
        edges += [(ear, s), (ear, t), (owner, ear), (owner, s), (owner, t)]
    return coords, edges


def _gadget11() -> PlaneGraph:
    return from_drawing(*_gadget())


def _fixture_file(name: str) -> Callable[[], PlaneGraph]:
    def load() -> PlaneGraph:
        text = resources.files(__package__).joinpath("fixtures").joinpath(name).read_text()
        return parse(text)

    return load


# name -> (builder, provenance)
_FIXTURES: dict[str, tuple[Callable[[], PlaneGraph], str]] = {
    "C3": (lambda: cycle_graph(3), "triangle"),
    "C6": (lambda: cycle_graph(6), "hexagon, already outerplane"),
    "K4": (_k4, "triangle with one centre vertex"),
    "OCTAHEDRON": (_octahedron, "octahedron, outer and inner triangle; largest outerplane induced subgraph has 4 vertices"),
    "WHEEL5": (lambda: _wheel(5), "five rim vertices around a hub"),
    "WHEEL5_MINUS_SPOKE": (_wheel_one_spoke_removed, "WHEEL5 without the spoke at rim vertex 0, which then has degree 2"),
    "GADGET11": (_gadget11, "11-vertex lower-bound gadget: 4 outer, 7 inner vertices"),
    "PESKY_MIN": (_fixture_file("pesky_min.2op"), "smallest generator instance with a pesky block on a 2-vertex cage path"),
    "FIG3": (_fixture_file("fig3.2op"), "weak dual with 3 nodes, two non-biconnected terminal components, one with 3 extremal leaves"),
    "CASE13_EVEN_TRANSPARENT": (
        _fixture_file("case13_even_transparent.2op"),
        "final case with every boundary vertex transparent and an even boundary length",
    ),
}


def _register_case_fixtures() -> None:
    root = resources.files(__package__).joinpath("fixtures")
    for entry in sorted(root.iterdir(), key=lambda e: e.name):
        name = entry.name
        if name.startswith("case_") and name.endswith(".2op"):
            key = "CASE_" + name[len("case_") : -len(".2op")].upper()
            first = entry.read_text().splitlines()[0].lstrip("# ").strip()
            _FIXTURES[key] = (_fixture_file(name), first)


_register_case_fixtures()


def fixture_names() -> list[str]:
    return sorted(_FIXTURES)


def provenance(name: str) -> str:
    if name not in _FIXTURES:
        raise UnknownName(name)
    return _FIXTURES[name][1]


def named(name: str) -> PlaneGraph:
    if name not in _FIXTURES:
        raise UnknownName(name)
    return _FIXTURES[name][0]()


def counterexample(k: int) -> PlaneGraph:
    """k disjoint copies of GADGET11 side by side; copy i uses ids 11i..11i+10."""
    if k < 1:
        raise ValueError("k must be at least 1")
    coords: dict[int, tuple[float, float]] = {}
    edges: list[tuple[int, int]] = []
    for i in range(k):
        c, e = _gadget(offset=8.0 * i, base=11 * i)
        coords.update(c)
        edges += e
    return from_drawing(coords, edges)


def gadget_parts(g: PlaneGraph) -> list[tuple[frozenset[int], frozenset[int]]]:
    """Per gadget copy of a counterexample graph, its (vertices, inner vertices)."""
    inner = layers(g).l2
    out = []
    for comp in sorted(g.components(), key=min):
        vs = frozenset(comp)
        out.append((vs, vs & inner))
    return out
