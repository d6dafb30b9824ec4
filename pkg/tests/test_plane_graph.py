import pytest
from hypothesis import given, settings, strategies as st

from conftest import icosahedron
from twoop.instances import GenConfig, cycle_graph, gen_random, named
from twoop.plane_graph import (
    EdgeExists,
    InvalidEmbedding,
    ParseError,
    PlaneGraph,
    add_edge_in_face,
    delete_vertices,
    check_two_outerplane,
    faces,
    from_drawing,
    induced_embedding,
    induced_outer_vertices,
    is_outerplane,
    layers,
    mirror,
    outer_walk,
    parse,
    serialize,
)

graphs = st.builds(
    lambda n, seed, frac: gen_random(GenConfig(n, seed, inner_fraction=frac)),
    st.integers(3, 30),
    st.integers(0, 10_000),
    st.sampled_from([0.0, 0.3, 0.6, 0.8]),
)


def face_lengths(g):
    fp = faces(g)
    return sorted(sum(len(w) for w in fp.walks(f)) for f in fp.face_ids())


# -- faces -----------------------------------------------------------------


def test_triangle_has_two_three_walks():
    assert face_lengths(named("C3")) == [3, 3]


def test_k4_has_four_triangles():
    assert face_lengths(named("K4")) == [3, 3, 3, 3]


def test_octahedron_has_eight_triangles():
    assert face_lengths(named("OCTAHEDRON")) == [3] * 8


def test_face_successor_convention():
    g = named("K4")
    for d in g.darts():
        nxt = g.next_dart(d)
        assert nxt.source == d.target
        assert nxt.target == g.succ(d.target, d.source)


@settings(max_examples=60, deadline=None)
@given(graphs)
def test_euler_and_dart_partition(g):
    fp = faces(g)
    assert sorted(d for w in fp.orbits for d in w) == sorted(g.darts())
    if len(g.components()) == 1:
        assert g.n - g.m + fp.num_faces == 2


def test_rejects_nonplanar_rotation():
    # sorted rotations at every vertex of K4 give a torus embedding
    g = PlaneGraph({0: (1, 2, 3), 1: (0, 2, 3), 2: (0, 1, 3), 3: (0, 1, 2)}, [(0, 1)])
    with pytest.raises(InvalidEmbedding):
        faces(g)


# -- layers ----------------------------------------------------------------


def test_layers_of_fixtures():
    assert layers(named("C3")).l1 == {0, 1, 2} and not layers(named("C3")).l2
    k4 = layers(named("K4"))
    assert len(k4.l1) == 3 and len(k4.l2) == 1
    octa = layers(named("OCTAHEDRON"))
    assert octa.l1 == {0, 1, 2} and octa.l2 == {3, 4, 5}


def test_two_outerplane_checks():
    assert check_two_outerplane(named("OCTAHEDRON"))
    assert check_two_outerplane(named("C3"))
    assert not check_two_outerplane(icosahedron())


def test_icosahedron_second_layer_encloses_inner_triangle():
    g = icosahedron()
    l2 = layers(g).l2
    assert induced_outer_vertices(g, l2) == {3, 4, 5, 6, 7, 8}


# -- induced embeddings --------------------------------------------------


def test_induced_embedding_examples():
    k4 = named("K4")
    hull = layers(k4).l1
    h = induced_embedding(k4, hull)
    assert h.n == 3 and face_lengths(h) == [3, 3]
    octa = named("OCTAHEDRON")
    inner = induced_embedding(octa, {3, 4, 5})
    assert sorted(inner.edges()) == [(3, 4), (3, 5), (4, 5)]


def test_gadget_inner_layer_is_outerplane():
    g = named("GADGET11")
    l2 = layers(g).l2
    assert len(l2) == 7
    assert is_outerplane(induced_embedding(g, l2))
    assert induced_outer_vertices(g, l2) == l2


def test_induced_outer_vertices_examples():
    assert induced_outer_vertices(named("K4"), range(4)) == layers(named("K4")).l1
    octa = named("OCTAHEDRON")
    assert induced_outer_vertices(octa, range(6)) == {0, 1, 2}
    # the outer triangle survives, so the kept inner vertex stays enclosed
    assert induced_outer_vertices(octa, {0, 1, 2, 3}) == {0, 1, 2}


@settings(max_examples=40, deadline=None)
@given(graphs, st.randoms(use_true_random=False))
def test_induced_outer_matches_embedding_faces(g, rnd):
    s = {v for v in g.vertices if rnd.random() < 0.6}
    if not s:
        return
    h = induced_embedding(g, s)
    fp = faces(h)
    assert induced_outer_vertices(g, s) == fp.face_vertices(fp.outer)


# -- mirror and surgery --------------------------------------------------


def test_mirror_of_triangle_reverses_rotations():
    c3 = named("C3")
    m = mirror(c3)
    for v, rot in c3.rotations.items():
        assert sorted(rot) == sorted(m.rotations[v])
        assert [m.succ(v, w) for w in rot] == [c3.pred(v, w) for w in rot]


@settings(max_examples=40, deadline=None)
@given(graphs)
def test_mirror_is_an_involution_preserving_faces(g):
    m = mirror(g)
    assert mirror(m) == g
    assert faces(m).num_faces == faces(g).num_faces
    assert layers(m) == layers(g)


def test_chord_splits_square():
    c4 = cycle_graph(4)
    inner = next(f for f in faces(c4).face_ids() if f != faces(c4).outer)
    g = add_edge_in_face(c4, 0, 2, inner)
    assert face_lengths(g) == [3, 3, 4]
    with pytest.raises(EdgeExists):
        add_edge_in_face(g, 0, 2, inner)


def test_delete_center_of_k4():
    k4 = named("K4")
    center = next(iter(layers(k4).l2))
    h = delete_vertices(k4, {center})
    assert h.n == 3 and face_lengths(h) == [3, 3]


def test_add_then_delete_round_trip():
    c4 = cycle_graph(4)
    inner = next(f for f in faces(c4).face_ids() if f != faces(c4).outer)
    g = add_edge_in_face(c4, 0, 2, inner)
    h = delete_vertices(g, {2})
    assert sorted(h.edges()) == [(0, 1), (0, 3)]
    faces(h)


# -- text format -----------------------------------------------------------


def test_parse_fixture_text():
    text = "2op 1\nn 3\nrot 0: 1 2\nrot 1: 0 2\nrot 2: 0 1\nouter 0 1\n"
    g = parse(text)
    assert g.n == 3 and g == named("C3")


def test_parse_rejects_asymmetric_adjacency():
    with pytest.raises(ParseError) as err:
        parse("2op 1\nrot 0: 1 2\nrot 1: 0\nrot 2: 0 1\nouter 0 1\n")
    # vertex 2 lists 1 but not the other way round
    assert err.value.line == 4


@pytest.mark.parametrize(
    "text,line",
    [
        ("2op 2\n", 1),
        ("2op 1\nrot x: 1\n", 2),
        ("2op 1\nn 4\nrot 0: 1\nrot 1: 0\nouter 0 1\n", 2),
        ("2op 1\nrot 0: 1\nrot 1: 0\nbogus 1\n", 4),
    ],
)
def test_parse_reports_line(text, line):
    with pytest.raises(ParseError) as err:
        parse(text)
    assert err.value.line == line


@settings(max_examples=60, deadline=None)
@given(graphs)
def test_serialize_round_trip(g):
    text = serialize(g)
    assert parse(text) == g
    assert serialize(parse(text)) == text


def test_nested_component_round_trip():
    coords = {0: (0, 0), 1: (10, 0), 2: (5, 9), 3: (4, 2), 4: (6, 2), 5: (5, 4)}
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
    g = from_drawing(coords, edges)
    assert g.containments
    assert layers(g).l1 == {0, 1, 2}
    assert parse(serialize(g)) == g
    assert check_two_outerplane(g)


def test_outer_walk_is_clockwise_on_cycle():
    walk = [d.source for d in outer_walk(cycle_graph(5))]
    assert walk == [0, 1, 2, 3, 4]
