"""Inductive construction of a vertex set of size at least 2n/3 inducing an outerplane graph.

Every level augments the current graph, finds the first applicable case,
removes part of the graph, solves the remainder and adds back a set of
vertices chosen by the case's rule.  Every claimed property is checked on
the spot; a failure raises :class:`InternalProofViolation`.
"""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass
from typing import Iterable

from .augment import NotTwoOuterplane, augment
from .blocks import is_biconnected
from .errors import InternalProofViolation
from .plane_graph import (
    PlaneGraph,
    check_two_outerplane,
    induced_embedding,
    induced_outer_vertices,
    insert_edge,
    layers,
    mirror,
    outer_walk,
    serialize,
)
from .structure import (
    CageDescriptor,
    RootedTree,
    TerminalComponent,
    block_cut_tree_rooted,
    cage,
    cage_at,
    default_e_star,
    enclosed,
    extremal_leaves,
    is_pesky,
    terminal_components,
    weak_dual_rooted,
)

CASE_ORDER = (
    "1", "2", "3", "4", "5", "6", "6'", "7", "7'", "8", "8'",
    "9", "9'", "10", "10'", "11", "12", "13",
)
CASE_IDS = ("BASE", "1", "2.1", "2.2", "2.3", "3.1", "3.2", "4", "5.1", "5.2") + CASE_ORDER[5:]


class CaseMismatch(ValueError):
    pass


class PrereqViolation(InternalProofViolation):
    pass


@dataclass(frozen=True)
class TraceEntry:
    case: str
    locus: tuple[int, ...]
    n_before: int
    n_after: int


@dataclass(frozen=True)
class SelectionResult:
    chosen: frozenset[int]
    property: str
    excluded: frozenset[int]


@dataclass(frozen=True)
class Step:
    """One inductive step: H is G[keep] (plus ``new_edge``), I = I_H + extra."""

    case: str
    locus: tuple[int, ...]
    keep: frozenset[int]
    extra: frozenset[int]
    new_edge: tuple[int, int, int, int] | None = None  # a, b, deleted nbr of a, of b
    selection: SelectionResult | None = None
    detail: str = ""  # subcase label where the case splits further


# -- small geometric predicates ------------------------------------------


def is_internal_face(g: PlaneGraph, a: int, b: int, c: int) -> bool:
    """True iff the triangle abc bounds an internal face of ``g``."""
    if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
        return False
    outer = {tuple(d) for d in outer_walk(g)}
    for p, q, r in ((a, b, c), (b, a, c)):
        d1 = g.next_dart((p, q))
        if d1.target == r and g.next_dart(d1) == (r, p) and (p, q) not in outer:
            return True
    return False


def _violation(case: str, message: str, g: PlaneGraph) -> InternalProofViolation:
    return InternalProofViolation(case, message, serialize(g))


def _is_outerplane_set(g: PlaneGraph, s: Iterable[int]) -> bool:
    s = frozenset(s)
    return not s or induced_outer_vertices(g, s) == s


# -- selection checks ----------------------------------------------------

_BICONNECTED_OFFSET = {"A": 0, "B": 1, "C": 1, "D": 2}
_FRAME_OFFSET = {"A": 1, "B": 2, "C": 2}


def _check_selection(
    g: PlaneGraph, sel: SelectionResult, n_region: int, offset: int, extras: set[int], case: str
) -> None:
    if sel.chosen & sel.excluded:
        raise _violation(case, f"anchor vertices {sorted(sel.chosen & sel.excluded)} selected", g)
    if 3 * len(sel.chosen) < 2 * (n_region - offset):
        raise _violation(
            case,
            f"property {sel.property}: |I|={len(sel.chosen)} below 2({n_region}-{offset})/3",
            g,
        )
    if not _is_outerplane_set(g, sel.chosen | extras):
        raise _violation(case, f"property {sel.property}: selection plus anchors not outerplane", g)


# -- Lemma for a biconnected terminal component --------------------------


def _alternate(seq: list[int], degree: dict[int, int]) -> tuple[set[int], list[int]]:
    """Odd-indexed members of the degree-2 subsequence, and that subsequence."""
    twos = [z for z in seq if degree[z] == 2]
    return {z for i, z in enumerate(twos) if i % 2 == 0}, twos


def _biconnected_oriented(dx: int, dy: int, zs: list[int], degree: dict[int, int]) -> tuple[set[int], str]:
    """Selection on the boundary path for d(x) >= d(y) where the rule is asymmetric."""
    picked, twos = _alternate(zs, degree)
    m = len(twos)
    total = dx + dy
    if total >= 6:
        return picked, "A"
    if total == 5:
        if m % 2 == 1:
            picked.discard(twos[-1])
        return picked, "C"
    if total == 4:
        if dx == 3:
            return picked, "C"
        return picked, ("C" if m % 2 == 0 else "A")
    if total == 3:
        if degree[zs[0]] == 2:
            return picked, "C"
        return picked, ("D" if m % 2 == 0 else "B")
    if m % 2 == 1 and m > 1:
        picked.discard(twos[-1])
    return picked, "D"


_SWAP = {"A": "A", "B": "C", "C": "B", "D": "D"}


def lemma_biconnected(g: PlaneGraph, tc: TerminalComponent) -> SelectionResult:
    """Selection inside L = G[C_f + K] that avoids x and y."""
    k_set = tc.vertices
    zs = list(reversed(tc.cycle[2:]))
    degree = {z: sum(1 for w in g.rotations[z] if w in k_set) for z in zs}
    low = [z for z in zs if degree[z] < 2]
    if low:
        raise PrereqViolation("4", f"boundary vertices {low} have fewer than two neighbours in K", serialize(g))
    dx = sum(1 for w in g.rotations[tc.x] if w in k_set)
    dy = sum(1 for w in g.rotations[tc.y] if w in k_set)
    mirrored = dx < dy and dx + dy < 6
    if mirrored:
        picked, prop = _biconnected_oriented(dy, dx, zs[::-1], degree)
        prop = _SWAP[prop]
    else:
        picked, prop = _biconnected_oriented(dx, dy, zs, degree)
    return SelectionResult(frozenset(k_set | picked), prop, frozenset((tc.x, tc.y)))


# -- Lemma for a cushy extremal leaf -------------------------------------


def _cushy_right_condition(ds: list[int]) -> bool:
    """Conditions (i)-(vii) for keeping the right cage vertex; ds[0] = d(z_1)."""
    if ds[-1] != 2:
        return False
    first = ds[0]
    mid = ds[1:-1]
    m = sum(1 for d in mid if d == 2)
    count = {v: sum(1 for d in mid if d == v) for v in (3, 4, 5)}
    all3 = all(d == 3 for d in mid)
    one = lambda v: count[v] == 1 and count[3] == len(mid) - 1  # noqa: E731
    if 3 <= first <= 4 and all3:
        return True
    if first <= 3 and one(4):
        return True
    if first == 2 and one(5):
        return True
    if first == 2 and count[4] == 2 and count[3] == len(mid) - 2:
        return True
    if m == 2 and all(d <= 3 for d in ds[:-1]):
        return True
    if m == 4 and first == 2 and all(d <= 3 for d in mid):
        return True
    if m == 1 and first == 2 and len(mid) >= 1 and mid[-1] == 3 and all(d <= 3 for d in mid[:-1]):
        return True
    if first == 2 and m == 2 and count[4] == 1 and all(d <= 3 for d in mid if d != 4):
        return True
    return False


def lemma_cushy(g: PlaneGraph, cd: CageDescriptor) -> SelectionResult:
    """Selection inside the cage graph that avoids c_B, l_B and r_B."""
    zs = list(cd.path)
    degree = dict(cd.block_degree)
    low = [z for z in zs if degree[z] < 2]
    if low:
        raise PrereqViolation("5.2", f"cage path vertices {low} have fewer than two block neighbours", serialize(g))
    picked, _ = _alternate(zs[1:-1], degree)
    ds = [degree[z] for z in zs]
    if _cushy_right_condition(ds):
        prop = "C"
    elif _cushy_right_condition(ds[::-1]):
        prop = "B"
    else:
        prop = "A"
    chosen = (set(cd.block) - {cd.c}) | picked
    return SelectionResult(frozenset(chosen), prop, frozenset((cd.c, cd.left, cd.right)))


# -- Lemma for the final case --------------------------------------------


def _alternate_forward(seq: list[int], transparent: list[bool], chosen: set[int], start: int, stop: int) -> None:
    """For j in [start, stop): a transparent z_j joins iff z_{j-1} did not."""
    for j in range(start, stop):
        if transparent[j] and seq[j - 1] not in chosen:
            chosen.add(seq[j])


def _final_forward(seq: list[int], transparent: list[bool]) -> tuple[set[int], str] | None:
    """Subcases whose rule scans the boundary from the left; None if none applies."""
    k = len(seq)
    chosen: set[int] = set()
    if transparent[0] and not transparent[1]:
        _alternate_forward(seq, transparent, chosen, 2, k - 1)
        return chosen, "B"
    return None


def _final_selection(seq: list[int], transparent: list[bool]) -> tuple[set[int], str, str]:
    """Boundary vertices of the frame chosen by the final lemma.

    Returns the chosen boundary vertices, the property and the subcase label.
    Mirrored subcases run the forward rule on the reversed sequence.
    """
    k = len(seq)
    fwd = _final_forward(seq, transparent)
    if fwd is not None:
        return fwd[0], fwd[1], "13.1"
    back = _final_forward(seq[::-1], transparent[::-1])
    if back is not None:
        return back[0], _SWAP[back[1]], "13.2"
    if not transparent[-1]:
        chosen: set[int] = set()
        _alternate_forward(seq, transparent, chosen, 1, k - 1)
        return chosen, "A", "13.3"
    if not transparent[0]:
        chosen = set()
        rs, rt = seq[::-1], transparent[::-1]
        _alternate_forward(rs, rt, chosen, 1, k - 1)
        return chosen, "A", "13.4"
    a = next((j for j in range(k) if not transparent[j]), k)  # prefix length
    if a == k:
        evens = {seq[j] for j in range(1, k, 2)}
        if k % 2 == 1:
            return evens, "A", "13.5"
        # z_1 and z_2 would both sit next to l_P, so only the r_P side is safe
        return evens - {seq[-1]}, "C", "13.5"
    b = max(j for j in range(k) if not transparent[j]) + 2  # 1-based start of suffix
    suffix = k - b + 1

    def rule_551(s: list[int], t: list[bool]) -> set[int]:
        chosen: set[int] = set()
        _alternate_forward(s, t, chosen, 2, len(s) - 1)
        return chosen

    if suffix % 2 == 0:
        return rule_551(seq, transparent), "B", "13.5.1"
    if a % 2 == 0:
        return rule_551(seq[::-1], transparent[::-1]), "C", "13.5.2"
    chosen = {seq[j] for j in range(1, a - 1, 2)}  # z_2, z_4, ..., z_{a-1}
    _alternate_forward(seq, transparent, chosen, a + 1, k - 1)
    return chosen, "C", "13.5.3"


@dataclass(frozen=True)
class FinalFrame:
    block: tuple[int, ...]
    frame: CageDescriptor  # cage-style data of B_P seen from c_P
    descendants: frozenset[int]  # V(K_P)
    subcase: str = ""


def _check_final_block(g: PlaneGraph, tree: RootedTree, bp_node, scan: "_Scan") -> None:
    block = bp_node[1]
    if len(block) < 3 or not tree.children[bp_node]:
        raise _violation("13", f"block {block} is trivial or a leaf", g)
    walk = scan.block_walk(block)
    for cnode in tree.children[bp_node]:
        kids = tree.children[cnode]
        if len(kids) != 1:
            raise _violation("13", f"cutvertex {cnode[1]} has {len(kids)} children", g)
        leaf = kids[0]
        if leaf not in extremal_leaves(tree):
            raise _violation("13", f"grandchild {leaf[1]} is not an extremal leaf", g)
        cd = cage(g, tree, leaf)
        if not cd.trivial and not is_pesky(cd):
            raise _violation("13", f"grandchild {leaf[1]} is cushy", g)
        i = walk.index(cnode[1])
        c_left, c_right = walk[i - 1], walk[(i + 1) % len(walk)]
        if not is_internal_face(g, c_left, cd.left, cd.c) or not is_internal_face(g, c_right, cd.right, cd.c):
            raise _violation("13", f"facial triangles around cutvertex {cd.c} missing", g)


def lemma_final(g: PlaneGraph, tc: TerminalComponent, tree: RootedTree, bp_node, scan: "_Scan") -> tuple[SelectionResult, FinalFrame]:
    """Selection inside G_P that avoids c_P, l_P and r_P."""
    _check_final_block(g, tree, bp_node, scan)
    block = bp_node[1]
    parent = tree.parent[bp_node]
    c_p = parent[1] if parent is not None else tc.z
    frame = cage_at(g, block, c_p)
    seq = list(frame.path)
    k = len(seq)
    kp = frame.region.vertices - set(seq)
    desc = _subtree_vertices(tree, bp_node)
    if kp != desc:
        raise _violation("13", "frame interior differs from the descendants of the block", g)
    degree_kp = {w: sum(1 for x in g.rotations[w] if x in kp) for w in kp}
    exclude = frozenset((c_p, frame.left, frame.right))
    base = set(kp) - {c_p}
    if k == 2:
        if len(kp) >= 5:
            prop = "A"
        elif len(kp) == 4 and len(block) == 3:
            (d_vertex,) = kp - set(block)
            (parent_cut,) = [x for x in g.rotations[d_vertex] if x in block]
            if parent_cut == frame.u:
                prop = "B"
            elif parent_cut == frame.v:
                prop = "C"
            else:
                raise _violation("13", "trivial grandchild hangs off neither neighbour of c_P", g)
        else:
            raise _violation("13", f"frame with k = 2 and |K_P| = {len(kp)}", g)
        return SelectionResult(frozenset(base), prop, exclude), FinalFrame(block, frame, kp, "13.k2")
    transparent = []
    for z in seq:
        nb = [x for x in g.rotations[z] if x in kp]
        if len(nb) == 2:
            transparent.append(True)
        elif len(nb) == 3:
            transparent.append(sum(1 for x in nb if degree_kp[x] == 1) == 1)
        else:
            transparent.append(False)
    chosen, prop, subcase = _final_selection(seq, transparent)
    chosen -= {frame.left, frame.right}
    return (
        SelectionResult(frozenset(base | chosen), prop, exclude),
        FinalFrame(block, frame, kp, subcase),
    )


def _subtree_vertices(tree: RootedTree, node) -> frozenset[int]:
    out: set[int] = set()
    stack = [node]
    while stack:
        x = stack.pop()
        if x[0] == "B":
            out.update(x[1])
        stack.extend(tree.children[x])
    return frozenset(out)


# -- per-level scan ------------------------------------------------------


class _Scan:
    """Lazily computed structure of one augmented level."""

    def __init__(self, g: PlaneGraph):
        self.g = g
        self.lay = layers(g)
        self._walk = [d.source for d in outer_walk(g)]
        self._pos = {v: i for i, v in enumerate(self._walk)}
        self._tcs: list[TerminalComponent] | None = None
        self._trees: dict[int, RootedTree] = {}
        self._cages: dict = {}
        self._mirror: PlaneGraph | None = None
        self._mirror_cages: dict = {}
        self._pesky: dict = {}
        self._bwalk: dict = {}

    def outer_neighbours(self, v: int) -> tuple[int, int]:
        i = self._pos[v]
        n = len(self._walk)
        return self._walk[(i - 1) % n], self._walk[(i + 1) % n]

    @property
    def terminal(self) -> list[TerminalComponent]:
        if self._tcs is None:
            e_star = default_e_star(self.g)
            self._tcs = terminal_components(self.g, weak_dual_rooted(self.g, e_star), e_star)
        return self._tcs

    def tree(self, tc: TerminalComponent) -> RootedTree:
        if tc.key not in self._trees:
            self._trees[tc.key] = block_cut_tree_rooted(self.g, tc)
        return self._trees[tc.key]

    def leaves(self, tc: TerminalComponent) -> list:
        return extremal_leaves(self.tree(tc))

    def cage(self, tc: TerminalComponent, leaf) -> CageDescriptor:
        if leaf not in self._cages:
            self._cages[leaf] = cage(self.g, self.tree(tc), leaf)
        return self._cages[leaf]

    def pesky(self, tc: TerminalComponent, leaf) -> bool:
        cd = self.cage(tc, leaf)
        if cd.trivial:
            return False
        if leaf not in self._pesky:
            self._pesky[leaf] = is_pesky(cd)
        return self._pesky[leaf]

    @property
    def mirrored(self) -> PlaneGraph:
        if self._mirror is None:
            self._mirror = mirror(self.g)
        return self._mirror

    def mirror_cage(self, tc: TerminalComponent, leaf) -> CageDescriptor:
        if leaf not in self._mirror_cages:
            cd = self.cage(tc, leaf)
            mcd = cage_at(self.mirrored, cd.block, cd.c)
            if (mcd.left, mcd.right) != (cd.right, cd.left):
                raise _violation("mirror", f"mirroring block {cd.block} did not swap cage vertices", self.g)
            self._mirror_cages[leaf] = mcd
        return self._mirror_cages[leaf]

    def block_walk(self, block: tuple[int, ...]) -> list[int]:
        """Clockwise outer walk of a block."""
        if block not in self._bwalk:
            sub = induced_embedding(self.g, block)
            self._bwalk[block] = [d.source for d in outer_walk(sub)]
        return self._bwalk[block]

    def non_biconnected(self):
        for tc in self.terminal:
            tree = self.tree(tc)
            if tree.parent and len(tree.parent) > 1:
                yield tc, tree


# -- case handlers -------------------------------------------------------


def _all(g: PlaneGraph) -> frozenset[int]:
    return frozenset(g.rotations)


def _case1(scan: _Scan) -> Step | None:
    g = scan.g
    for v in sorted(scan.lay.l1):
        if g.degree(v) == 2:
            return Step("1", (v,), _all(g) - {v}, frozenset((v,)))
    return None


def _case2(scan: _Scan) -> Step | None:
    g = scan.g
    for v in sorted(scan.lay.l1):
        if g.degree(v) != 3:
            continue
        u, z = scan.outer_neighbours(v)
        if not g.has_edge(u, z):
            return Step("2.1", (v,), _all(g) - {v}, frozenset((v,)), new_edge=(u, z, v, v))
        region = enclosed(g, (u, v, z)).vertices
        extra = region - {u, z}
        if len(region) >= 6:
            return Step("2.2", (v,), _all(g) - region, extra)
        return Step("2.3", (v,), (_all(g) - region) | {u}, extra)
    return None


def _case3(scan: _Scan) -> Step | None:
    g = scan.g
    for tc in scan.terminal:
        if len(tc.vertices) == 1:
            raise _violation("3", f"terminal component {sorted(tc.vertices)} is a single vertex", g)
        if len(tc.vertices) != 2:
            continue
        u, v = sorted(tc.vertices)
        locus = (u, v)
        if len(tc.cycle) == 3:
            z = tc.cycle[2]
            if not (g.has_edge(z, u) and g.has_edge(z, v)):
                raise _violation("3.1", "third face vertex is not adjacent to the edge", g)
            return Step("3.1", locus, _all(g) - {u, v, z}, frozenset((u, v)))
        if len(tc.cycle) == 4:
            t, z = tc.cycle[2], tc.cycle[3]
            if not all(g.has_edge(a, b) for a in (t, z) for b in (u, v)):
                raise _violation("3.2", "face vertices are not adjacent to the edge", g)
            return Step("3.2", locus, _all(g) - {u, v, t, z}, frozenset((u, v, t)))
        raise _violation("3", f"single-edge component in a face of length {len(tc.cycle)}", g)
    return None


def _case4(scan: _Scan) -> Step | None:
    g = scan.g
    for tc in scan.terminal:
        sub = {v: [w for w in g.rotations[v] if w in tc.vertices] for v in tc.vertices}
        if len(tc.vertices) < 3 or not is_biconnected(sub):
            continue
        sel = lemma_biconnected(g, tc)
        region = set(tc.cycle) | tc.vertices
        extras = {"A": set(), "B": {tc.x}, "C": {tc.y}, "D": {tc.x, tc.y}}[sel.property]
        _check_selection(g, sel, len(region), _BICONNECTED_OFFSET[sel.property], extras, "4")
        keep = (_all(g) - region) | extras
        return Step("4", tuple(sorted(tc.vertices)), frozenset(keep), sel.chosen, selection=sel)
    return None


def _frame_step(
    case: str, g: PlaneGraph, sel: SelectionResult, region: frozenset[int], c: int, left: int, right: int, locus, detail: str = ""
) -> Step:
    extras = {"A": {c}, "B": {c, left}, "C": {c, right}}[sel.property]
    _check_selection(g, sel, len(region), _FRAME_OFFSET[sel.property], extras, case)
    keep = (_all(g) - region) | extras
    return Step(case, locus, frozenset(keep), sel.chosen, selection=sel, detail=detail)


def _case5(scan: _Scan, tc: TerminalComponent, leaf) -> Step | None:
    cd = scan.cage(tc, leaf)
    if cd.trivial or scan.pesky(tc, leaf):
        return None
    return _case5_handle(scan.g, tc, cd)


def _case5_handle(g: PlaneGraph, tc: TerminalComponent, cd: CageDescriptor) -> Step:
    zs = cd.path
    k = len(zs)
    d = cd.block_degree
    locus = cd.block
    mid = [d[z] for z in zs[1:-1]]
    applies = d[zs[0]] == 2 and d[zs[-1]] == 2 and (
        (k == 3 and mid == [2]) or (k >= 3 and all(x == 3 for x in mid))
    )
    if not applies:
        sel = lemma_cushy(g, cd)
        return _frame_step("5.2", g, sel, cd.region.vertices, cd.c, cd.left, cd.right, locus)
    ell, r, c = cd.left, cd.right, cd.c
    block_rest = frozenset(cd.block) - {c}
    if not g.has_edge(ell, r):
        keep = (_all(g) - cd.region.vertices) | {c, ell, r}
        return Step("5.1", locus, frozenset(keep), block_rest, new_edge=(ell, r, zs[1], zs[-2]))
    inner = enclosed(g, (c, ell, r)).interior
    outer_region = enclosed(g, zs).vertices
    if len(outer_region) != len(cd.region.vertices) + len(inner):
        raise _violation("5.1", "closed cage region does not add up", g)
    if len(inner) >= 3:
        keep = _all(g) - outer_region
    elif len(inner) in (1, 2):
        if all(g.has_edge(ell, w) for w in inner):
            keep = (_all(g) - outer_region) | {r}
        elif all(g.has_edge(r, w) for w in inner):
            keep = (_all(g) - outer_region) | {ell}
        else:
            raise _violation("5.1", "no cage vertex sees every vertex inside c l r", g)
    else:
        raise _violation("5.1", "triangle c l r is empty although the component is not biconnected", g)
    return Step("5.1", locus, frozenset(keep), tc.vertices)


def _leaf_cage(scan: _Scan, tc: TerminalComponent, leaf, mirrored: bool) -> tuple[PlaneGraph, CageDescriptor]:
    if mirrored:
        return scan.mirrored, scan.mirror_cage(tc, leaf)
    return scan.g, scan.cage(tc, leaf)


def _case6(scan: _Scan, tc: TerminalComponent, leaf, mirrored: bool) -> Step | None:
    if not scan.pesky(tc, leaf):
        return None
    gm, cd = _leaf_cage(scan, tc, leaf, mirrored)
    if is_internal_face(gm, cd.c, cd.left, cd.left_out):
        keep = _all(gm) - cd.region.vertices
        extra = (frozenset(cd.block) - {cd.c}) | {cd.left}
        return Step("6'" if mirrored else "6", cd.block, frozenset(keep), extra)
    return None


def _case7(scan: _Scan, tc: TerminalComponent, leaf, mirrored: bool) -> Step | None:
    if not scan.pesky(tc, leaf):
        return None
    gm, cd = _leaf_cage(scan, tc, leaf, mirrored)
    if not gm.has_edge(cd.c, cd.left_out):
        return None
    inner = enclosed(gm, (cd.c, cd.left, cd.left_out)).interior
    if len(inner) != 1:
        return None
    (hidden,) = inner
    keep = _all(gm) - ((cd.region.vertices - {cd.right}) | {hidden})
    extra = (frozenset(cd.block) - {cd.c}) | {hidden}
    return Step("7'" if mirrored else "7", cd.block, frozenset(keep), extra)


def _case8(scan: _Scan, tc: TerminalComponent, leaf, mirrored: bool) -> Step | None:
    if not scan.pesky(tc, leaf):
        return None
    gm, cd = _leaf_cage(scan, tc, leaf, mirrored)
    for other_leaf in scan.leaves(tc):
        if other_leaf == leaf or not scan.pesky(tc, other_leaf):
            continue
        _, other = _leaf_cage(scan, tc, other_leaf, mirrored)
        if other.c == cd.c and other.right == cd.left:
            removed = (cd.region.vertices - {cd.right}) | (other.region.vertices - {other.left})
            keep = _all(gm) - removed
            extra = (frozenset(cd.block) | frozenset(other.block)) - {cd.c}
            return Step("8'" if mirrored else "8", cd.block, frozenset(keep), frozenset(extra))
    return None


def _case9(scan: _Scan, tc: TerminalComponent, leaf, mirrored: bool) -> Step | None:
    if not scan.cage(tc, leaf).trivial:
        return None
    gm, cd = _leaf_cage(scan, tc, leaf, mirrored)
    if is_internal_face(gm, cd.c, cd.left, cd.left_out):
        keep = _all(gm) - {cd.left, cd.right, cd.d}
        return Step("9'" if mirrored else "9", cd.block, frozenset(keep), frozenset((cd.left, cd.d)))
    return None


def _case10(scan: _Scan, tc: TerminalComponent, leaf, mirrored: bool) -> Step | None:
    if not scan.cage(tc, leaf).trivial:
        return None
    gm, cd = _leaf_cage(scan, tc, leaf, mirrored)
    if not gm.has_edge(cd.c, cd.left_out):
        return None
    inner = enclosed(gm, (cd.c, cd.left, cd.left_out)).interior
    if len(inner) != 1:
        return None
    (hidden,) = inner
    keep = _all(gm) - {cd.left, cd.d, hidden}
    return Step("10'" if mirrored else "10", cd.block, frozenset(keep), frozenset((cd.d, hidden)))


_LEAF_CASES = (_case6, _case7, _case8, _case9, _case10)


def _leaf_step(scan: _Scan, tc: TerminalComponent, leaf) -> Step | None:
    """Cases 5 to 10' for one extremal leaf, each primed case right after its twin."""
    step = _case5(scan, tc, leaf)
    if step is not None:
        return step
    for handler in _LEAF_CASES:
        for mirrored in (False, True):
            step = handler(scan, tc, leaf, mirrored)
            if step is not None:
                return step
    return None


def _leaf_cases(scan: _Scan) -> Step | None:
    for tc, _tree in scan.non_biconnected():
        for leaf in scan.leaves(tc):
            step = _leaf_step(scan, tc, leaf)
            if step is not None:
                return step
    return None


def _check_leaf_cases_exhaustive(scan: _Scan) -> None:
    for tc, tree in scan.non_biconnected():
        for leaf in scan.leaves(tc):
            cnode = tree.parent[leaf]
            if len(tree.children[cnode]) != 1:
                raise _violation("10'", f"link vertex {cnode[1]} has several children", scan.g)


def _parent_block(tree: RootedTree, leaf):
    cnode = tree.parent[leaf]
    return tree.parent[cnode]


def _case11_12(scan: _Scan) -> Step | None:
    g = scan.g
    for want_trivial, case in ((False, "11"), (True, "12")):
        for tc, tree in scan.non_biconnected():
            for leaf in scan.leaves(tc):
                cd = scan.cage(tc, leaf)
                if cd.trivial != want_trivial or (not cd.trivial and not scan.pesky(tc, leaf)):
                    continue
                bp = _parent_block(tree, leaf)
                if bp is None or len(bp[1]) != 2:
                    continue
                (p,) = set(bp[1]) - {cd.c}
                if not (is_internal_face(g, p, cd.left, cd.c) and is_internal_face(g, p, cd.right, cd.c)):
                    raise _violation(case, f"faces p l c and p r c missing around {cd.c}", g)
                if case == "11":
                    keep = _all(g) - cd.region.vertices
                    return Step(case, cd.block, frozenset(keep), frozenset(cd.block))
                keep = _all(g) - {cd.c, cd.d, cd.right}
                return Step(case, cd.block, frozenset(keep), frozenset((cd.c, cd.d)))
    return None


def _case13(scan: _Scan) -> Step:
    g = scan.g
    for tc, tree in scan.non_biconnected():
        leaf = scan.leaves(tc)[0]
        bp = _parent_block(tree, leaf)
        if bp is None:
            raise _violation("13", "extremal leaf hangs off the root cutvertex", g)
        sel, info = lemma_final(g, tc, tree, bp, scan)
        frame = info.frame
        return _frame_step("13", g, sel, frame.region.vertices, frame.c, frame.left, frame.right, info.block, info.subcase)
    raise _violation("13", "no terminal component left for the final case", g)


def dispatch(g: PlaneGraph) -> Step:
    """First applicable case on an augmented graph, with its H and rule."""
    scan = _Scan(g)
    for handler in (_case1, _case2, _case3, _case4, _leaf_cases):
        step = handler(scan)
        if step is not None:
            return step
    _check_leaf_cases_exhaustive(scan)
    step = _case11_12(scan)
    if step is not None:
        return step
    return _case13(scan)


def apply_case(g: PlaneGraph, case: str) -> Step:
    """Run one case handler on an augmented graph; CaseMismatch if it does not apply.

    ``case`` is a family id from CASE_ORDER; "2" and "5" may come back as
    any of their subcases.  Case 13 is only meaningful after Cases 1-12
    failed, so it is tried only when dispatch itself falls through to it.
    """
    if case not in CASE_ORDER:
        raise CaseMismatch(f"unknown case {case!r}")
    scan = _Scan(g)
    plain = {"1": _case1, "2": _case2, "3": _case3, "4": _case4}
    paired = {"6": _case6, "7": _case7, "8": _case8, "9": _case9, "10": _case10}
    step: Step | None = None
    if case in plain:
        step = plain[case](scan)
    elif case == "5" or case.rstrip("'") in paired:
        for tc, _tree in scan.non_biconnected():
            for leaf in scan.leaves(tc):
                if case == "5":
                    step = _case5(scan, tc, leaf)
                else:
                    step = paired[case.rstrip("'")](scan, tc, leaf, case.endswith("'"))
                if step is not None:
                    break
            if step is not None:
                break
    elif case in ("11", "12"):
        step = _case11_12(scan)
        if step is not None and step.case != case:
            step = None
    else:
        step = dispatch(g)
        if step.case != "13":
            step = None
    if step is None:
        raise CaseMismatch(f"case {case} does not apply")
    return step


# -- recursion -----------------------------------------------------------


def _build_h(g: PlaneGraph, step: Step) -> PlaneGraph:
    if not step.keep:
        return PlaneGraph({})
    h = induced_embedding(g, step.keep)
    if step.new_edge is None:
        return h
    a, b, gone_a, gone_b = step.new_edge

    def corner(p: int, gone: int) -> tuple[int, int]:
        rot = g.rotations[p]
        i = rot.index(gone)
        for t in range(1, len(rot)):
            w = rot[(i - t) % len(rot)]
            if w in step.keep:
                return (w, p)
        raise _violation(step.case, f"vertex {p} keeps no neighbour", g)

    outer_darts = {tuple(d) for d in outer_walk(g)}
    # the new edge replaces an outer path and keeps its direction
    first, second = (a, b) if (a, gone_a) in outer_darts else (b, a)
    h = insert_edge(h, a, b, corner(a, gone_a), corner(b, gone_b), outer=(first, second))
    if not check_two_outerplane(h):
        raise _violation(step.case, "graph with the replacement edge is not 2-outerplane", g)
    return h


def _check_level(g: PlaneGraph, chosen: frozenset[int], case: str) -> None:
    if not chosen <= frozenset(g.rotations):
        raise _violation(case, "selected vertices outside the graph", g)
    if 3 * len(chosen) < 2 * g.n:
        raise _violation(case, f"|I|={len(chosen)} below 2n/3 for n={g.n}", g)
    if not _is_outerplane_set(g, chosen):
        raise _violation(case, "selected set does not induce an outerplane graph", g)


def _archive(exc: InternalProofViolation, directory: str | None) -> None:
    if directory is None or exc.instance is None:
        return
    os.makedirs(directory, exist_ok=True)
    digest = hashlib.sha256(exc.instance.encode()).hexdigest()[:12]
    tag = exc.case.replace("'", "p")
    path = os.path.join(directory, f"case{tag}-{digest}.2op")
    with open(path, "w") as fh:
        fh.write(f"# {exc.message}\n")
        fh.write(exc.instance)
    exc.archive_path = path


def good_set(g: PlaneGraph, archive_dir: str | None = None) -> tuple[frozenset[int], tuple[TraceEntry, ...]]:
    """Vertex set of size at least 2n/3 inducing an outerplane graph, plus the case trace."""
    if g.n and not check_two_outerplane(g):
        raise NotTwoOuterplane("input is not 2-outerplane")
    trace: list[TraceEntry] = []
    levels: list[tuple[PlaneGraph, Step]] = []
    try:
        current = g
        while current.n > 2:
            aug = augment(current).graph
            step = dispatch(aug)
            h = _build_h(aug, step)
            if h.n >= aug.n:
                raise _violation(step.case, "inductive graph did not shrink", aug)
            trace.append(TraceEntry(step.case, tuple(step.locus), aug.n, h.n))
            levels.append((aug, step))
            current = h
        trace.append(TraceEntry("BASE", tuple(current.vertices), current.n, current.n))
        chosen = frozenset(current.rotations)
        for aug, step in reversed(levels):
            chosen = chosen | step.extra
            _check_level(aug, chosen, step.case)
        if g.n:
            _check_level(g, chosen, "final")
    except InternalProofViolation as exc:
        _archive(exc, archive_dir)
        raise
    return chosen, tuple(trace)
