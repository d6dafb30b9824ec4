"""Rotation-system plane graphs.

A plane graph is stored as a map from vertex id to the clockwise cyclic
sequence of its neighbours.  Faces are orbits of the successor map

    next(u -> v) = (v, w),  w = clockwise successor of u around v,

which walks every internal face counter-clockwise and the outer face
clockwise.  Disconnected graphs are supported: every component with at
least one edge carries its own outer dart, and a component may be declared
to sit inside a face of another component.  Components without such a
declaration lie side by side in the unbounded face, so a face of the whole
drawing may be bounded by several closed walks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence


class Dart(NamedTuple):
    source: int
    target: int


class InvalidEmbedding(ValueError):
    """The rotation system is not a simple genus-0 embedding."""


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class EmptySet(ValueError):
    pass


class EdgeExists(ValueError):
    pass


class NotOnFace(ValueError):
    pass


class WouldEmpty(ValueError):
    pass


class _DSU:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, a: int) -> int:
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


class PlaneGraph:
    """Immutable embedded graph.

    ``outer_darts`` holds one dart per component that has an edge; the dart
    lies on the face of that component facing away from it.  ``containments``
    lists ``(root, host)`` pairs: the component whose smallest vertex is
    ``root`` is drawn inside the face of ``host``.
    """

    __slots__ = ("rotations", "outer_darts", "containments", "_pos", "_faces", "_comp")

    def __init__(
        self,
        rotations: Mapping[int, Sequence[int]],
        outer_darts: Iterable[tuple[int, int]] | tuple[int, int] | None = (),
        containments: Iterable[tuple[int, tuple[int, int]]] = (),
    ):
        self.rotations: dict[int, tuple[int, ...]] = {
            v: tuple(rotations[v]) for v in sorted(rotations)
        }
        if outer_darts is None:
            outer_darts = ()
        elif len(outer_darts) == 2 and isinstance(outer_darts[0], int):  # type: ignore[arg-type]
            outer_darts = (outer_darts,)  # type: ignore[assignment]
        self.outer_darts: tuple[Dart, ...] = tuple(Dart(*d) for d in outer_darts)  # type: ignore[misc]
        self.containments: tuple[tuple[int, Dart], ...] = tuple(
            sorted((int(r), Dart(*h)) for r, h in containments)
        )
        self._pos: dict[int, dict[int, int]] | None = None
        self._faces: FacePartition | None = None
        self._comp: dict[int, int] | None = None
        self._validate_basic()

    # -- basic queries -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.rotations)

    @property
    def vertices(self) -> list[int]:
        return list(self.rotations)

    @property
    def outer_dart(self) -> Dart | None:
        """Dart of the first listed component on the unbounded face."""
        return self.outer_darts[0] if self.outer_darts else None

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.pos[u] if u in self.rotations else False

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotations[v]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, rot in self.rotations.items() for v in rot if u < v]

    def darts(self) -> list[Dart]:
        return [Dart(u, v) for u, rot in self.rotations.items() for v in rot]

    @property
    def m(self) -> int:
        return sum(len(r) for r in self.rotations.values()) // 2

    @property
    def pos(self) -> dict[int, dict[int, int]]:
        if self._pos is None:
            self._pos = {v: {w: i for i, w in enumerate(rot)} for v, rot in self.rotations.items()}
        return self._pos

    def succ(self, v: int, u: int) -> int:
        """Neighbour of ``v`` following ``u`` clockwise."""
        rot = self.rotations[v]
        return rot[(self.pos[v][u] + 1) % len(rot)]

    def pred(self, v: int, u: int) -> int:
        """Neighbour of ``v`` preceding ``u`` clockwise."""
        rot = self.rotations[v]
        return rot[(self.pos[v][u] - 1) % len(rot)]

    def next_dart(self, d: tuple[int, int]) -> Dart:
        u, v = d
        return Dart(v, self.succ(v, u))

    def prev_dart(self, d: tuple[int, int]) -> Dart:
        u, v = d
        return Dart(self.pred(u, v), u)

    def component_of(self) -> dict[int, int]:
        """Vertex -> smallest vertex id of its connected component."""
        if self._comp is None:
            comp: dict[int, int] = {}
            for s in self.rotations:
                if s in comp:
                    continue
                comp[s] = s
                stack = [s]
                while stack:
                    a = stack.pop()
                    for b in self.rotations[a]:
                        if b not in comp:
                            comp[b] = s
                            stack.append(b)
            self._comp = comp
        return self._comp

    def components(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for v, r in self.component_of().items():
            groups.setdefault(r, []).append(v)
        return [sorted(groups[r]) for r in sorted(groups)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlaneGraph):
            return NotImplemented
        return serialize(self) == serialize(other)

    def __hash__(self) -> int:
        return hash(serialize(self))

    def __repr__(self) -> str:
        return f"PlaneGraph(n={self.n}, m={self.m}, outer={tuple(self.outer_darts)})"

    # -- validation ----------------------------------------------------

    def _validate_basic(self) -> None:
        rot = self.rotations
        for v, nbrs in rot.items():
            if len(set(nbrs)) != len(nbrs):
                raise InvalidEmbedding(f"duplicate neighbour in rotation of {v}")
            for w in nbrs:
                if w == v:
                    raise InvalidEmbedding(f"loop at {v}")
                if w not in rot or v not in rot[w]:
                    raise InvalidEmbedding(f"asymmetric adjacency {v}-{w}")
        for d in self.outer_darts:
            if d.source not in rot or d.target not in rot[d.source]:
                raise InvalidEmbedding(f"outer dart {tuple(d)} is not an edge")
        for _, h in self.containments:
            if h.source not in rot or h.target not in rot[h.source]:
                raise InvalidEmbedding(f"host dart {tuple(h)} is not an edge")


@dataclass
class FacePartition:
    """Faces of a plane graph.

    ``orbits`` are the closed walks of the successor map; an isolated vertex
    contributes an empty walk recorded in ``isolated``.  ``face_of_orbit``
    groups walks into faces of the drawing; ``outer`` is the unbounded face.
    """

    orbits: list[tuple[Dart, ...]]
    orbit_of: dict[tuple[int, int], int]
    face_of_orbit: list[int]
    outer: int
    isolated: dict[int, int] = field(default_factory=dict)  # vertex -> orbit index
    comp_outer_orbit: dict[int, int] = field(default_factory=dict)  # component root -> orbit
    _by_face: dict[int, list[tuple[Dart, ...]]] | None = field(default=None, init=False, repr=False, compare=False)

    @property
    def face_of_dart(self) -> dict[tuple[int, int], int]:
        return {d: self.face_of_orbit[o] for d, o in self.orbit_of.items()}

    def face(self, d: tuple[int, int]) -> int:
        return self.face_of_orbit[self.orbit_of[d]]

    @property
    def num_faces(self) -> int:
        return len(set(self.face_of_orbit))

    def walks(self, face: int) -> list[tuple[Dart, ...]]:
        if self._by_face is None:
            self._by_face = {}
            for o, w in enumerate(self.orbits):
                if w:
                    self._by_face.setdefault(self.face_of_orbit[o], []).append(w)
        return list(self._by_face.get(face, ()))

    def face_vertices(self, face: int) -> set[int]:
        out = {d.source for w in self.walks(face) for d in w}
        out.update(v for v, o in self.isolated.items() if self.face_of_orbit[o] == face)
        return out

    def face_ids(self) -> list[int]:
        return sorted(set(self.face_of_orbit))

    def outer_walks(self) -> list[tuple[Dart, ...]]:
        return self.walks(self.outer)


def _orbits(g: PlaneGraph) -> tuple[list[tuple[Dart, ...]], dict[tuple[int, int], int]]:
    rot = g.rotations
    pos = g.pos
    orbit_of: dict[tuple[int, int], int] = {}
    orbits: list[tuple[Dart, ...]] = []
    for v in rot:
        for w in rot[v]:
            if (v, w) in orbit_of:
                continue
            idx = len(orbits)
            walk = []
            a, b = v, w
            while (a, b) not in orbit_of:
                orbit_of[(a, b)] = idx
                walk.append(Dart(a, b))
                rb = rot[b]
                a, b = b, rb[(pos[b][a] + 1) % len(rb)]
            orbits.append(tuple(walk))
    return orbits, orbit_of


def faces(g: PlaneGraph) -> FacePartition:
    """Face partition of ``g``; raises InvalidEmbedding on a non-planar rotation."""
    if g._faces is not None:
        return g._faces
    orbits, orbit_of = _orbits(g)
    comp = g.component_of()
    isolated: dict[int, int] = {}
    for v, nbrs in g.rotations.items():
        if not nbrs:
            isolated[v] = len(orbits)
            orbits.append(())
    # Euler per component
    nv: dict[int, int] = {}
    ne: dict[int, int] = {}
    nf: dict[int, int] = {}
    for v, nbrs in g.rotations.items():
        r = comp[v]
        nv[r] = nv.get(r, 0) + 1
        ne[r] = ne.get(r, 0) + len(nbrs)
    for walk in orbits:
        if walk:
            r = comp[walk[0].source]
            nf[r] = nf.get(r, 0) + 1
    for v in isolated:
        nf[comp[v]] = 1
    for r in nv:
        if nv[r] - ne[r] // 2 + nf[r] != 2:
            raise InvalidEmbedding(f"component of vertex {r} violates Euler's formula")

    comp_outer: dict[int, int] = {}
    for d in g.outer_darts:
        r = comp[d.source]
        if r in comp_outer:
            raise InvalidEmbedding(f"two outer darts for component of {r}")
        comp_outer[r] = orbit_of[tuple(d)]
    for v, o in isolated.items():
        comp_outer[comp[v]] = o
    for r in nv:
        if r not in comp_outer:
            raise InvalidEmbedding(f"component of vertex {r} has no outer dart")

    glob = len(orbits)
    dsu = _DSU(glob + 1)
    hosted: dict[int, int] = {}
    for root, h in g.containments:
        if root not in comp or comp[root] != root:
            raise InvalidEmbedding(f"containment root {root} is not a component minimum")
        hc = comp[h.source]
        if hc == root:
            raise InvalidEmbedding(f"component of {root} cannot contain itself")
        hosted[root] = hc
        dsu.union(comp_outer[root], orbit_of[tuple(h)])
    for r in comp_outer:
        if r not in hosted:
            dsu.union(comp_outer[r], glob)
    # containment must be acyclic
    for r in hosted:
        seen = {r}
        a = r
        while a in hosted:
            a = hosted[a]
            if a in seen:
                raise InvalidEmbedding("cyclic containment declarations")
            seen.add(a)

    label: dict[int, int] = {}
    face_of_orbit = []
    outer_root = dsu.find(glob)
    label[outer_root] = 0
    for o in range(len(orbits)):
        root = dsu.find(o)
        if root not in label:
            label[root] = len(label)
        face_of_orbit.append(label[root])
    fp = FacePartition(orbits, orbit_of, face_of_orbit, 0, isolated, comp_outer)
    g._faces = fp
    return fp


def vertex_faces(g: PlaneGraph, v: int) -> set[int]:
    fp = faces(g)
    if v in fp.isolated:
        return {fp.face_of_orbit[fp.isolated[v]]}
    return {fp.face((v, w)) for w in g.rotations[v]}


def outer_walk(g: PlaneGraph) -> list[Dart]:
    """Outer walk of the component carrying ``outer_dart``, starting there."""
    d = g.outer_dart
    if d is None:
        return []
    walk = [d]
    nxt = g.next_dart(d)
    while nxt != d:
        walk.append(nxt)
        nxt = g.next_dart(nxt)
    return walk


@dataclass(frozen=True)
class Layers:
    l1: frozenset[int]
    l2: frozenset[int]


def layers(g: PlaneGraph) -> Layers:
    fp = faces(g)
    l1 = frozenset(fp.face_vertices(fp.outer))
    return Layers(l1, frozenset(g.rotations) - l1)


# -- induced subgraphs ---------------------------------------------------


def _merged_faces(g: PlaneGraph, s: set[int]) -> tuple[FacePartition, _DSU]:
    fp = faces(g)
    dsu = _DSU(max(fp.face_of_orbit, default=0) + 1)
    for u, rot in g.rotations.items():
        for w in rot:
            if u < w and (u not in s or w not in s):
                dsu.union(fp.face((u, w)), fp.face((w, u)))
    return fp, dsu


def induced_outer_vertices(g: PlaneGraph, s: Iterable[int]) -> frozenset[int]:
    """Members of ``s`` on the unbounded face of the embedding of G[s]."""
    s = set(s)
    fp, dsu = _merged_faces(g, s)
    target = dsu.find(fp.outer)
    out = set()
    for v in s:
        if v in fp.isolated:
            if dsu.find(fp.face_of_orbit[fp.isolated[v]]) == target:
                out.add(v)
            continue
        for w in g.rotations[v]:
            if dsu.find(fp.face((v, w))) == target:
                out.add(v)
                break
    return frozenset(out)


def is_outerplane(g: PlaneGraph) -> bool:
    return layers(g).l2 == frozenset()


def induced_embedding(g: PlaneGraph, s: Iterable[int]) -> PlaneGraph:
    """Embedding of G[s] inherited from ``g``, with outer and nesting data."""
    s = set(s)
    if not s:
        raise EmptySet("induced_embedding of an empty set")
    fp, dsu = _merged_faces(g, s)
    rot = {v: tuple(w for w in g.rotations[v] if w in s) for v in sorted(s)}
    h = PlaneGraph(rot, (), ())
    orbits, _ = _orbits(h)
    comp = h.component_of()

    def g_face(v: int) -> int:
        if v in fp.isolated:
            return fp.face_of_orbit[fp.isolated[v]]
        return fp.face((v, g.rotations[v][0]))

    # bipartite incidence between merged faces and components of G[s]
    comp_faces: dict[int, dict[int, Dart | None]] = {}
    for walk in orbits:
        d = min(walk)
        cls = dsu.find(fp.face(tuple(d)))
        comp_faces.setdefault(comp[d.source], {})
        prev = comp_faces[comp[d.source]].get(cls)
        if prev is None or d < prev:
            comp_faces[comp[d.source]][cls] = d
    for v, nbrs in rot.items():
        if not nbrs:
            comp_faces[v] = {dsu.find(g_face(v)): None}
    face_comps: dict[int, list[int]] = {}
    for c in sorted(comp_faces):
        for cls in comp_faces[c]:
            face_comps.setdefault(cls, []).append(c)

    outer_cls = dsu.find(fp.outer)
    outer_darts: list[Dart] = []
    containments: list[tuple[int, Dart]] = []
    seen_comp: set[int] = set()
    seen_face = {outer_cls}
    queue: list[tuple[int, int | None]] = [(outer_cls, None)]
    while queue:
        cls, host_comp = queue.pop(0)
        for c in face_comps.get(cls, []):
            if c in seen_comp:
                continue
            seen_comp.add(c)
            d = comp_faces[c][cls]
            if d is not None:
                outer_darts.append(d)
            if host_comp is not None:
                containments.append((c, comp_faces[host_comp][cls]))
            for other in sorted(comp_faces[c]):
                if other not in seen_face:
                    seen_face.add(other)
                    queue.append((other, c))
    if len(seen_comp) != len(comp_faces):
        raise InvalidEmbedding("induced embedding has unreachable components")
    return PlaneGraph(rot, outer_darts, containments)


def delete_vertices(g: PlaneGraph, s: Iterable[int]) -> PlaneGraph:
    s = set(s)
    keep = set(g.rotations) - s
    if not keep:
        raise WouldEmpty("deleting every vertex")
    return induced_embedding(g, keep)


def check_two_outerplane(g: PlaneGraph) -> bool:
    """True iff removing the outer-face vertices leaves an outerplane drawing."""
    l2 = layers(g).l2
    if not l2:
        return True
    return induced_outer_vertices(g, l2) == l2


# -- surgery -------------------------------------------------------------


def mirror(g: PlaneGraph) -> PlaneGraph:
    rot = {v: tuple(reversed(r)) for v, r in g.rotations.items()}
    return PlaneGraph(
        rot,
        [Dart(d.target, d.source) for d in g.outer_darts],
        [(r, Dart(h.target, h.source)) for r, h in g.containments],
    )


def insert_edge(
    g: PlaneGraph,
    u: int,
    v: int,
    into_u: tuple[int, int] | None,
    into_v: tuple[int, int] | None,
    outer: tuple[int, int] | None = None,
) -> PlaneGraph:
    """Add edge uv at the given corners.

    ``into_u`` is a dart ``(a, u)``; the new edge is placed right after ``a``
    in the rotation of ``u``, i.e. in the face that ``(a, u)`` belongs to.
    ``None`` is allowed for an isolated endpoint.  When the edge splits the
    outer face of a component, ``outer`` picks which new dart stays outside;
    by default ``(u, v)`` does.
    """
    if g.has_edge(u, v):
        raise EdgeExists(f"edge {u}-{v} already present")
    if u == v:
        raise InvalidEmbedding("loop")
    fp = faces(g)

    def corner_face(x: int, d: tuple[int, int] | None) -> int:
        if d is None:
            if g.rotations[x]:
                raise NotOnFace(f"vertex {x} is not isolated")
            return fp.face_of_orbit[fp.isolated[x]]
        if d[1] != x or not g.has_edge(*d):
            raise NotOnFace(f"{d} is not a dart into {x}")
        return fp.face(d)

    fu, fv = corner_face(u, into_u), corner_face(v, into_v)
    if fu != fv:
        raise NotOnFace(f"{u} and {v} do not share the chosen face")
    rot = dict(g.rotations)

    def put(x: int, d: tuple[int, int] | None, y: int) -> None:
        if d is None:
            rot[x] = (y,)
        else:
            r = list(rot[x])
            r.insert(r.index(d[0]) + 1, y)
            rot[x] = tuple(r)

    put(u, into_u, v)
    put(v, into_v, u)
    comp = g.component_of()
    cu, cv = comp[u], comp[v]
    outer_darts = list(g.outer_darts)
    containments = dict(g.containments)
    if cu == cv:
        # face split inside one component
        o = fp.orbit_of[tuple(into_u)] if into_u is not None else None
        if o is not None and fp.comp_outer_orbit.get(cu) == o:
            new = Dart(*(outer or (u, v)))
            outer_darts = [new if comp[d.source] == cu else d for d in outer_darts]
        return PlaneGraph(rot, outer_darts, containments.items())

    # merging two components that share a face
    def parent_of(c: int) -> int | None:
        return comp[containments[c].source] if c in containments else None

    if parent_of(cv) == cu:
        keep, drop = cu, cv
    elif parent_of(cu) == cv:
        keep, drop = cv, cu
    else:
        keep, drop = (cu, cv) if cu < cv else (cv, cu)
    new_root = min(keep, drop)
    outer_darts = [d for d in outer_darts if comp[d.source] != drop]
    if not any(comp[d.source] == keep for d in outer_darts):
        outer_darts.append(Dart(u, v))
    host = containments.pop(keep, None)
    containments.pop(drop, None)
    if host is not None:
        containments[new_root] = host
    fixed = {}
    for r, h in containments.items():
        fixed[r] = h
    return PlaneGraph(rot, outer_darts, fixed.items())


def _corner_on_face(g: PlaneGraph, x: int, face: int) -> tuple[int, int] | None:
    fp = faces(g)
    if not g.rotations[x]:
        if fp.face_of_orbit[fp.isolated[x]] == face:
            return None
        raise NotOnFace(f"vertex {x} not on face {face}")
    cands = [(a, x) for a in g.rotations[x] if fp.face((a, x)) == face]
    if not cands:
        raise NotOnFace(f"vertex {x} not on face {face}")
    return min(cands)


def add_edge_in_face(
    g: PlaneGraph,
    u: int,
    v: int,
    face: int | tuple[int, int],
    outer: tuple[int, int] | None = None,
) -> PlaneGraph:
    """Add uv inside ``face`` (a face id or any dart on that face)."""
    fp = faces(g)
    if not isinstance(face, int):
        face = fp.face(tuple(face))
    if g.has_edge(u, v):
        raise EdgeExists(f"edge {u}-{v} already present")
    return insert_edge(g, u, v, _corner_on_face(g, u, face), _corner_on_face(g, v, face), outer)


def add_vertex_in_face(g: PlaneGraph, new: int, face: int | tuple[int, int]) -> PlaneGraph:
    """Place a new isolated vertex inside ``face``."""
    if new in g.rotations:
        raise ValueError(f"vertex {new} already exists")
    fp = faces(g)
    if not isinstance(face, int):
        face = fp.face(tuple(face))
    rot = dict(g.rotations)
    rot[new] = ()
    containments = list(g.containments)
    if face != fp.outer:
        host = min(d for w in fp.walks(face) for d in w) if fp.walks(face) else None
        if host is None:
            raise NotOnFace("cannot nest inside an isolated vertex")
        containments.append((new, host))
    # a new smallest id would change component roots of neighbours; ids are
    # only ever appended by callers, so roots stay stable
    return PlaneGraph(rot, g.outer_darts, containments)


# -- text format ---------------------------------------------------------


def serialize(g: PlaneGraph) -> str:
    lines = ["2op 1", f"n {g.n}"]
    for v, rot in g.rotations.items():
        if rot:
            k = rot.index(min(rot))
            rot = rot[k:] + rot[:k]
        lines.append(f"rot {v}:" + "".join(f" {w}" for w in rot))
    for d in g.outer_darts:
        lines.append(f"outer {d.source} {d.target}")
    for r, h in g.containments:
        lines.append(f"contain {r} {h.source} {h.target}")
    return "\n".join(lines) + "\n"


def _int(tok: str, line: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", line, col) from None


def parse(text: str) -> PlaneGraph:
    rot: dict[int, tuple[int, ...]] = {}
    outer: list[Dart] = []
    contain: list[tuple[int, Dart]] = []
    declared_n = None
    header = False
    line_of: dict[int, int] = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        col = len(body) - len(body.lstrip()) + 1
        toks = body.split()
        key = toks[0]
        if not header:
            if toks != ["2op", "1"]:
                raise ParseError("expected header '2op 1'", ln, col)
            header = True
            continue
        if key == "n":
            if len(toks) != 2:
                raise ParseError("expected 'n <count>'", ln, col)
            declared_n = _int(toks[1], ln, col + 2)
        elif key == "rot":
            head = body.split(":", 1)
            if len(head) != 2:
                raise ParseError("expected 'rot <v>: <neighbours>'", ln, col)
            vt = head[0].split()
            if len(vt) != 2:
                raise ParseError("expected a single vertex id before ':'", ln, col)
            v = _int(vt[1], ln, col + 4)
            if v in rot:
                raise ParseError(f"vertex {v} listed twice", ln, col)
            nb_col = len(head[0]) + 2
            line_of[v] = ln
            rot[v] = tuple(_int(t, ln, nb_col) for t in head[1].split())
        elif key == "outer":
            if len(toks) != 3:
                raise ParseError("expected 'outer <u> <v>'", ln, col)
            outer.append(Dart(_int(toks[1], ln, col), _int(toks[2], ln, col)))
        elif key == "contain":
            if len(toks) != 4:
                raise ParseError("expected 'contain <root> <u> <v>'", ln, col)
            contain.append(
                (_int(toks[1], ln, col), Dart(_int(toks[2], ln, col), _int(toks[3], ln, col)))
            )
        else:
            raise ParseError(f"unknown directive {key!r}", ln, col)
    if not header:
        raise ParseError("missing header", 1)
    if declared_n is not None and declared_n != len(rot):
        raise ParseError(f"n says {declared_n} but {len(rot)} rotations given", 2)
    for v, nbrs in rot.items():
        for w in nbrs:
            if w not in rot or v not in rot[w]:
                raise ParseError(f"asymmetric adjacency between {v} and {w}", line_of.get(v, 1))
            if w == v:
                raise ParseError(f"loop at {v}", line_of.get(v, 1))
        if len(set(nbrs)) != len(nbrs):
            raise ParseError(f"duplicate neighbour at {v}", line_of.get(v, 1))
    g = PlaneGraph(rot, outer, contain)
    faces(g)
    return g


def _inside_polygon(pt: tuple[float, float], poly: list[tuple[float, float]]) -> bool:
    x, y = pt
    inside = False
    for (x1, y1), (x2, y2) in zip(poly, poly[1:] + poly[:1]):
        if (y1 > y) != (y2 > y) and x < x1 + (y - y1) * (x2 - x1) / (y2 - y1):
            inside = not inside
    return inside


def from_drawing(
    coords: Mapping[int, tuple[float, float]], edges: Iterable[tuple[int, int]]
) -> PlaneGraph:
    """Rotation system of a straight-line drawing.

    Neighbours are sorted by decreasing angle (clockwise).  Per component
    the outer dart comes from the face walk of most negative signed area;
    a component is nested in the smallest bounded walk of another
    component that surrounds its first vertex.
    """
    import math

    adj: dict[int, list[int]] = {v: [] for v in coords}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)

    def angle(v: int, w: int) -> float:
        return math.atan2(coords[w][1] - coords[v][1], coords[w][0] - coords[v][0])

    rot = {v: sorted(nb, key=lambda w, v=v: -angle(v, w)) for v, nb in adj.items()}
    g = PlaneGraph(rot, ())
    comp = g.component_of()
    orbits, _ = _orbits(g)
    outer: dict[int, tuple[float, Dart]] = {}
    bounded: list[tuple[float, int, Dart, list[tuple[float, float]]]] = []
    for walk in orbits:
        area = 0.0
        for a, b in walk:
            (x1, y1), (x2, y2) = coords[a], coords[b]
            area += x1 * y2 - x2 * y1
        r = comp[walk[0].source]
        if r not in outer or area < outer[r][0]:
            if r in outer:
                bounded.append((-outer[r][0], r, outer[r][1], []))
            outer[r] = (area, min(walk))
        else:
            bounded.append((area, r, min(walk), []))
    walk_of = {min(w): w for w in orbits}
    bounded = [
        (-area if area < 0 else area, r, d, [coords[x.source] for x in walk_of[d]])
        for area, r, d, _ in bounded
    ]
    containments = []
    for r in sorted(set(comp.values())):
        hosts = [
            (area, d)
            for area, hr, d, poly in bounded
            if hr != r and _inside_polygon(coords[r], poly)
        ]
        if hosts:
            containments.append((r, min(hosts)[1]))
    return PlaneGraph(rot, [d for _, d in outer.values()], containments)
