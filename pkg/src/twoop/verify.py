"""Independent checks: induced outerplanarity, good-set reports and brute-force oracles."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import networkx as nx

from .plane_graph import PlaneGraph, induced_outer_vertices

ORACLE_LIMIT = 16
MINOR_LIMIT = 10


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class GoodSetReport:
    n: int
    size: int
    bound: int
    bound_ok: bool
    outerplane_ok: bool
    offending: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.bound_ok and self.outerplane_ok


def two_thirds(n: int) -> int:
    return math.ceil(2 * n / 3)


def check_good(g: PlaneGraph, chosen: Iterable[int]) -> GoodSetReport:
    s = frozenset(chosen)
    stray = s - set(g.rotations)
    if stray:
        raise ValueError(f"vertices {sorted(stray)} are not in the graph")
    outer = induced_outer_vertices(g, s) if s else frozenset()
    offending = tuple(sorted(s - outer))
    bound = two_thirds(g.n)
    return GoodSetReport(g.n, len(s), bound, len(s) >= bound, not offending, offending)


def _as_nx(edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(vertices)
    h.add_edges_from((a, b) for a, b in edges if a != b)
    return h


def is_outerplanar_abstract(
    edges: Iterable[tuple[int, int]],
    vertices: Iterable[int] = (),
    limit: int | None = ORACLE_LIMIT,
) -> bool:
    """Outerplanarity via the apex test: G plus a universal vertex is planar."""
    h = _as_nx(edges, vertices)
    if limit is not None and h.number_of_nodes() > limit:
        raise TooLarge(f"{h.number_of_nodes()} vertices exceed the limit {limit}")
    if h.number_of_nodes() <= 3:
        return True
    if h.number_of_edges() > 2 * h.number_of_nodes() - 3:
        return False
    apex = object()
    h.add_edges_from((apex, v) for v in list(h.nodes))
    planar, _ = nx.check_planarity(h)
    return planar


# -- exhaustive minor search, kept as a cross-check --------------------------

_K4 = frozenset(frozenset(p) for p in itertools.combinations(range(4), 2))
_K23 = frozenset(frozenset((a, b)) for a in (0, 1) for b in (2, 3, 4))


def _contains_pattern(vs: tuple[int, ...], es: frozenset[frozenset[int]], pattern, size: int) -> bool:
    for image in itertools.permutations(vs, size):
        if all(frozenset((image[a], image[b])) in es for a, b in (tuple(e) for e in pattern)):
            return True
    return False


@lru_cache(maxsize=1 << 18)
def _has_minor(vs: tuple[int, ...], es: frozenset[frozenset[int]], which: str) -> bool:
    pattern, size, m = (_K4, 4, 6) if which == "K4" else (_K23, 5, 6)
    if len(vs) < size or len(es) < m:
        return False
    if _contains_pattern(vs, es, pattern, size):
        return True
    if len(vs) == size:
        return False
    for v in vs:
        rest = tuple(x for x in vs if x != v)
        if _has_minor(rest, frozenset(e for e in es if v not in e), which):
            return True
    for e in es:
        a, b = sorted(e)
        merged = set()
        for f in es:
            if f == e:
                continue
            f2 = frozenset(a if x == b else x for x in f)
            if len(f2) == 2:
                merged.add(f2)
        if _has_minor(tuple(x for x in vs if x != b), frozenset(merged), which):
            return True
    return False


def is_outerplanar_by_minors(edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> bool:
    """Outerplanarity as absence of K4 and K_{2,3} minors, by exhaustive search."""
    h = _as_nx(edges, vertices)
    if h.number_of_nodes() > MINOR_LIMIT:
        raise TooLarge(f"{h.number_of_nodes()} vertices exceed the minor-search limit {MINOR_LIMIT}")
    vs = tuple(sorted(h.nodes))
    es = frozenset(frozenset(e) for e in h.edges)
    return not (_has_minor(vs, es, "K4") or _has_minor(vs, es, "K23"))


# -- brute-force oracles -----------------------------------------------------


def _check_size(g: PlaneGraph, limit: int) -> None:
    if g.n > limit:
        raise TooLarge(f"{g.n} vertices exceed the oracle limit {limit}")


def brute_max_outerplane(g: PlaneGraph, limit: int = ORACLE_LIMIT) -> tuple[int, frozenset[int]]:
    """Largest vertex set inducing an outerplane graph, with a lexicographically first witness."""
    _check_size(g, limit)
    verts = sorted(g.rotations)
    for size in range(len(verts), 0, -1):
        for combo in itertools.combinations(verts, size):
            if len(induced_outer_vertices(g, combo)) == size:
                return size, frozenset(combo)
    return 0, frozenset()


def brute_max_outerplanar_containing(
    g: PlaneGraph, required: Iterable[int], limit: int = ORACLE_LIMIT
) -> int:
    """Largest I containing ``required`` with G[I] abstractly outerplanar; -1 if none."""
    _check_size(g, limit)
    req = frozenset(required)
    optional = sorted(set(g.rotations) - req)
    edges = g.edges()
    for extra in range(len(optional), -1, -1):
        for combo in itertools.combinations(optional, extra):
            s = req | set(combo)
            sub = [(a, b) for a, b in edges if a in s and b in s]
            if is_outerplanar_abstract(sub, s, limit=None):
                return len(s)
    return -1
