import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import corpus
from twoop.augment import augment
from twoop.blocks import biconnected_blocks, is_biconnected
from twoop.instances import GenConfig, cycle_graph, gen_random, named
from twoop.plane_graph import from_drawing, induced_embedding, layers, outer_walk
from twoop.structure import (
    Biconnected,
    NotExtremal,
    NotPrepared,
    RootedTree,
    TrivialBlock,
    block_cut_tree_rooted,
    cage,
    default_e_star,
    extremal_leaves,
    is_pesky,
    terminal_components,
    weak_dual_rooted,
)


def prepared(name):
    return augment(named(name)).graph


def components_of(g):
    t = weak_dual_rooted(g)
    return t, terminal_components(g, t)


def tree_of(nodes_parent):
    root = next(k for k, p in nodes_parent.items() if p is None)
    children = {k: [] for k in nodes_parent}
    for k, p in nodes_parent.items():
        if p is not None:
            children[p].append(k)
    return RootedTree(root, nodes_parent, children)


# -- weak dual -------------------------------------------------------------


def test_octahedron_dual_is_one_node():
    t, tcs = components_of(prepared("OCTAHEDRON"))
    assert t.nodes == [t.root] and len(t.root) == 3
    assert [set(tc.vertices) for tc in tcs] == [{3, 4, 5}]


def test_k4_component_is_center():
    g = prepared("K4")
    _, tcs = components_of(g)
    assert [tc.vertices for tc in tcs] == [layers(g).l2]


def test_gadget_has_one_seven_vertex_component():
    _, tcs = components_of(prepared("GADGET11"))
    assert len(tcs) == 1 and len(tcs[0].vertices) == 7


def test_fan_dual_is_path_rooted_at_e_star_face():
    coords = {0: (0, 0), 1: (-3, 2), 2: (-1, 3), 3: (1, 3), 4: (3, 2)}
    edges = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)]
    g = from_drawing(coords, edges)
    t = weak_dual_rooted(g)
    e = default_e_star(g)
    assert len(t.nodes) == 3
    assert sorted(len(t.children[v]) for v in t.nodes) == [0, 1, 1]
    assert e.source in t.root and e.target in t.root
    assert max(t.depth(v) for v in t.nodes) == 2


@settings(max_examples=40, deadline=None)
@given(st.integers(6, 40), st.integers(0, 5000), st.sampled_from([0.2, 0.5, 0.7]))
def test_dual_matches_direct_face_count_and_ears(n, seed, frac):
    g = gen_random(GenConfig(n, seed, inner_fraction=frac))
    t = weak_dual_rooted(g)
    l1 = layers(g).l1
    outer_layer = induced_embedding(g, l1)
    m1 = len(outer_layer.edges())
    # G[L1] is biconnected outerplane: m - n + 1 internal faces
    assert len(t.nodes) == m1 - len(l1) + 1
    ring = {frozenset((d.source, d.target)) for d in outer_walk(g)}
    chords = {frozenset(e) for e in outer_layer.edges()} - ring
    ears = [f for f in t.nodes if sum(frozenset((f[i], f[(i + 1) % len(f)])) in chords for i in range(len(f))) <= 1]
    if len(t.nodes) > 1:
        non_root_leaves = [v for v in t.leaves() if v != t.root]
        # the root counts as an ear only when it is itself a leaf of the path
        assert len(ears) == len(non_root_leaves) + (len(t.children[t.root]) == 1)
    for node in t.nodes:
        assert (t.parent[node] is None) == (node == t.root)


def test_unprepared_graph_is_rejected():
    with pytest.raises(NotPrepared):
        weak_dual_rooted(cycle_graph(4))


def test_terminal_components_sit_in_leaf_faces():
    for g in corpus([10, 20, 30], 10):
        t, tcs = components_of(g)
        l2 = layers(g).l2
        assert set().union(*(tc.vertices for tc in tcs)) <= l2
        for tc in tcs:
            assert tc.leaf in t.leaves()
            assert tc.z in tc.vertices
            assert g.has_edge(tc.x, tc.y) and g.next_dart((tc.x, tc.y)).target == tc.z


# -- block-cut trees ---------------------------------------------------------


def test_blocks_agree_with_networkx():
    for g in corpus([8, 16, 32], 15, fractions=(0.4, 0.7)):
        for tc in components_of(g)[1]:
            h = nx.Graph()
            h.add_nodes_from(tc.vertices)
            h.add_edges_from((a, b) for a, b in g.edges() if a in tc.vertices and b in tc.vertices)
            blocks, cut, _ = biconnected_blocks(g.rotations, tc.vertices)
            expected = {frozenset(b) for b in nx.biconnected_components(h)} if h.number_of_edges() else set()
            if len(tc.vertices) == 1:
                expected = {frozenset(tc.vertices)}
            assert set(blocks) == expected
            assert cut == set(nx.articulation_points(h))
            assert is_biconnected({v: [w for w in g.rotations[v] if w in tc.vertices] for v in tc.vertices}) == (
                len(tc.vertices) >= 3 and nx.is_biconnected(h)
            )


def test_block_cut_trees_are_rooted_at_z():
    for g in corpus([12, 24], 12, fractions=(0.5, 0.7)):
        for tc in components_of(g)[1]:
            tree = block_cut_tree_rooted(g, tc)
            kind, payload = tree.root
            assert (tc.z == payload) if kind == "C" else (tc.z in payload)
            assert all(leaf[0] == "B" for leaf in tree.leaves())


def test_single_edge_component_is_one_block():
    g = prepared("CASE_3_1")
    tc = next(tc for tc in components_of(g)[1] if len(tc.vertices) == 2)
    tree = block_cut_tree_rooted(g, tc)
    assert tree.nodes == [("B", tuple(sorted(tc.vertices)))]
    assert extremal_leaves(tree) == [tree.root]


def test_extremal_leaves_examples():
    b = ("B", (1,))
    assert extremal_leaves(tree_of({b: None})) == [b]
    path = {("B", (0, 1)): None, ("C", 1): ("B", (0, 1)), ("B", (1, 2)): ("C", 1)}
    assert extremal_leaves(tree_of(path)) == [("B", (1, 2))]
    star = {("C", 0): None, ("B", (0, 1)): ("C", 0), ("B", (0, 2)): ("C", 0), ("B", (0, 3)): ("C", 0)}
    assert extremal_leaves(tree_of(star)) == [("B", (0, 1)), ("B", (0, 2)), ("B", (0, 3))]


def test_fig3_instance_shape():
    g = prepared("FIG3")
    t, tcs = components_of(g)
    assert len(t.nodes) == 3
    counts = sorted(len(extremal_leaves(block_cut_tree_rooted(g, tc))) for tc in tcs)
    assert counts == [2, 3]


# -- cages -------------------------------------------------------------------


def leaf_cages(g):
    _, tcs = components_of(g)
    for tc in tcs:
        tree = block_cut_tree_rooted(g, tc)
        if tree.parent[tree.root] is None and len(tree.nodes) > 1:
            for leaf in extremal_leaves(tree):
                yield tree, leaf, cage(g, tree, leaf)


def test_trivial_cage_flanks_d():
    g = prepared("FIG3")
    seen = 0
    l1 = layers(g).l1
    for _, _, cd in leaf_cages(g):
        if not cd.trivial:
            continue
        seen += 1
        assert {cd.left, cd.right} <= l1
        assert all(g.has_edge(cd.d, w) and g.has_edge(cd.c, w) for w in (cd.left, cd.right))
        assert cd.path[0] == cd.left and cd.path[-1] == cd.right
    assert seen == 5


def test_pesky_min():
    g = prepared("PESKY_MIN")
    (entry,) = [cd for _, _, cd in leaf_cages(g)]
    assert len(entry.block) == 4 and len(entry.path) == 2
    assert is_pesky(entry)


def test_cage_rejects_root_and_non_extremal():
    # a shallow leaf exists in this instance
    g = gen_random(GenConfig(10, 7, inner_fraction=0.7, edge_rate=1.0))
    tree = next(
        t for t in (block_cut_tree_rooted(g, tc) for tc in components_of(g)[1])
        if set(t.leaves()) - set(extremal_leaves(t))
    )
    shallow = next(v for v in tree.leaves() if v not in extremal_leaves(tree))
    with pytest.raises(NotExtremal):
        cage(g, tree, shallow)
    single = block_cut_tree_rooted(prepared("OCTAHEDRON"), components_of(prepared("OCTAHEDRON"))[1][0])
    with pytest.raises(Biconnected):
        cage(prepared("OCTAHEDRON"), single, single.root)
    trivial = next(cd for _, _, cd in leaf_cages(prepared("FIG3")) if cd.trivial)
    with pytest.raises(TrivialBlock):
        is_pesky(trivial)


def _pesky_by_definition(g, cd):
    def deg(w):
        return sum(1 for e in cd.region.edges if w in e)

    if deg(cd.left) != 4 or deg(cd.right) != 4:
        return False
    return all(deg(w) == 5 for w in cd.path[1:-1])


def test_pesky_classification_over_corpus():
    pesky = cushy = 0
    graphs = (
        gen_random(GenConfig(n, s, inner_fraction=frac, edge_rate=er))
        for n in (10, 14, 18) for frac in (0.5, 0.6, 0.7) for er in (1.0, 1.5, 3.0) for s in range(15)
    )
    for g in graphs:
        for _, _, cd in leaf_cages(g):
            if cd.trivial:
                continue
            got = is_pesky(cd)
            assert got == _pesky_by_definition(g, cd)
            if got:
                pesky += 1
                assert len(cd.block) == 2 * len(cd.path)
            else:
                cushy += 1
    assert pesky and cushy
