"""Acceptance criteria 1-9; the terminal summary prints one PASS/FAIL line per criterion."""

import os
import shutil
import time
from collections import Counter

import pytest

from conftest import thinned
from twoop import cli
from twoop.augment import augment, is_internally_triangulated
from twoop.blocks import is_biconnected
from twoop.errors import InternalProofViolation
from twoop.instances import GenConfig, counterexample, fixture_names, gadget_parts, gen_random, named
from twoop.plane_graph import check_two_outerplane, induced_embedding, layers
from twoop.solver import CASE_IDS, _archive, _build_h, dispatch, good_set
from twoop.structure import block_cut_tree_rooted, cage, extremal_leaves, is_pesky, terminal_components, weak_dual_rooted
from twoop.verify import brute_max_outerplanar_containing, brute_max_outerplane, check_good, two_thirds

SIZES = (6, 12, 24, 48, 60)
PER_SIZE = 500
FRACTIONS = (0.2, 0.4, 0.6, 0.8)
EDGE_RATES = (1.0, 1.5, 3.0)


def corpus_config(n, seed):
    return GenConfig(n, seed, inner_fraction=FRACTIONS[seed % 4], edge_rate=EDGE_RATES[seed % 3])


def corpus_graphs():
    for n in SIZES:
        for seed in range(PER_SIZE):
            yield (n, seed), gen_random(corpus_config(n, seed))


def fixture_graphs():
    return [(name, named(name)) for name in fixture_names()]


@pytest.fixture(scope="module")
def archive(tmp_path_factory):
    return str(tmp_path_factory.mktemp("violations"))


def solve_all(items, archive):
    failures, hist = [], Counter()
    for key, g in items:
        try:
            chosen, trace = good_set(g, archive_dir=archive)
        except InternalProofViolation as exc:
            failures.append((key, f"violation in case {exc.case}: {exc.message}"))
            continue
        rep = check_good(g, chosen)
        if not rep.ok or len(chosen) < two_thirds(g.n):
            failures.append((key, repr(rep)))
        hist.update(t.case for t in trace)
    return failures, hist


@pytest.fixture(scope="module")
def theorem1_run(archive):
    graphs = list(corpus_graphs())
    start = time.perf_counter()
    failures, hist = solve_all(graphs, archive)
    return failures, hist, time.perf_counter() - start


@pytest.fixture(scope="module")
def fixture_run(archive):
    return solve_all(fixture_graphs(), archive)


def levels(g):
    """Augmented graph and dispatched step of every level of the recursion."""
    current = g
    while current.n > 2:
        aug = augment(current).graph
        step = dispatch(aug)
        yield aug, step
        current = _build_h(aug, step)


def leaf_cages(g):
    tstar = weak_dual_rooted(g)
    for tc in terminal_components(g, tstar):
        tree = block_cut_tree_rooted(g, tc)
        if len(tree.parent) > 1:
            for leaf in extremal_leaves(tree):
                yield cage(g, tree, leaf)


@pytest.fixture(scope="module")
def level_pass(archive):
    """Walk every level of the corpus and fixture runs once; collect selection and pesky data."""
    stats = Counter()
    selection_failures, pesky_failures = [], []
    items = list(corpus_graphs()) + fixture_graphs()
    for key, g in items:
        try:
            for aug, step in levels(g):
                if step.selection is not None:
                    stats["selections"] += 1
                    stats[f"property {step.case.split('.')[0]}{step.selection.property}"] += 1
                    # with the anchors paid for by the property, every
                    # selection must cover 2/3 of the vertices it removes
                    removed = set(aug.vertices) - step.keep
                    if 3 * len(step.selection.chosen) < 2 * len(removed):
                        selection_failures.append((key, step.case, step.selection.property))
                for cd in leaf_cages(aug):
                    if cd.trivial:
                        continue
                    stats["non-trivial leaves"] += 1
                    if is_pesky(cd):
                        stats["pesky"] += 1
                        l1 = layers(aug).l1
                        outer = {w: {x for x in aug.rotations[w] if x in l1} for w in cd.block_walk}
                        alternating = [len(outer[w]) for w in cd.block_walk] == [1 + i % 2 for i in range(len(cd.block_walk))]
                        unique = outer[cd.u] == {cd.left} and outer[cd.v] == {cd.right}
                        if len(cd.block) != 2 * len(cd.path) or not (alternating and unique):
                            pesky_failures.append((key, cd.block))
        except InternalProofViolation as exc:
            _archive(exc, archive)
            (pesky_failures if exc.case == "pesky" else selection_failures).append((key, exc.case, exc.message))
    return stats, selection_failures, pesky_failures


# -- criteria ------------------------------------------------------------------


@pytest.mark.criterion(1, "2n/3 bound on 500 seeded instances per n in {6, 12, 24, 48, 60} under 5 minutes")
def test_criterion_1_theorem_bound(theorem1_run):
    failures, hist, elapsed = theorem1_run
    print(f"criterion 1: {len(SIZES) * PER_SIZE} instances, {len(failures)} failures, {elapsed:.1f}s")
    assert failures == []
    assert hist["BASE"] == len(SIZES) * PER_SIZE
    assert elapsed < 300


@pytest.mark.criterion(2, "oracle >= |good_set| >= ceil(2n/3) on every instance with n <= 14")
def test_criterion_2_oracle_consistency(archive):
    checked = 0
    for n in range(1, 15):
        for seed in range(20):
            g = gen_random(corpus_config(n, seed))
            chosen, _ = good_set(g, archive_dir=archive)
            best, witness = brute_max_outerplane(g)
            assert check_good(g, chosen).ok
            assert best >= len(chosen) >= two_thirds(n), (n, seed)
            assert check_good(g, witness).outerplane_ok
            checked += 1
    assert checked >= 200


@pytest.mark.criterion(3, "octahedron: oracle maximum 4 and good_set returns exactly 4")
def test_criterion_3_octahedron():
    g = named("OCTAHEDRON")
    assert brute_max_outerplane(g)[0] == 4
    chosen, _ = good_set(g)
    assert len(chosen) == 4 and check_good(g, chosen).ok


@pytest.mark.criterion(4, "lower-bound family: 7 of 11 with L2 kept; 14 of 22 per gadget for k = 2")
def test_criterion_4_lower_bound_family():
    one = counterexample(1)
    assert one.n == 11 and check_two_outerplane(one)
    assert brute_max_outerplanar_containing(one, layers(one).l2) == 7
    two = counterexample(2)
    assert two.n == 22 and check_two_outerplane(two)
    per_gadget = [brute_max_outerplanar_containing(induced_embedding(two, vs), inner) for vs, inner in gadget_parts(two)]
    # gadgets are disjoint, so an outerplanar I within each gadget bounds I globally
    assert per_gadget == [7, 7] and sum(per_gadget) == 14


@pytest.mark.criterion(5, "augment invariants on 1000 seeded instances")
def test_criterion_5_augment_invariants():
    violations = []
    shapes = Counter()
    for i in range(1000):
        g = thinned(3 + i % 38, i, FRACTIONS[i % 4], (1.0, 0.85, 0.6)[i % 3])
        if g.n < 3:
            g = gen_random(GenConfig(3 + i % 38, i, triangulate=False))
        shapes["disconnected" if len(g.components()) > 1 else "cutvertex" if not is_biconnected(g.rotations) else "biconnected"] += 1
        res = augment(g)
        h = res.graph
        checks = {
            "triangulated": is_internally_triangulated(h),
            "biconnected": is_biconnected(h.rotations),
            "two-outerplane": check_two_outerplane(h),
            "l1-preserving": layers(h).l1 == layers(g).l1,
            "edge-monotone": set(g.edges()) <= set(h.edges()) and set(h.rotations) == set(g.rotations),
            "idempotent": augment(h).graph == h and augment(h).added_edges == (),
        }
        violations += [(i, name) for name, ok in checks.items() if not ok]
    print(f"criterion 5: input shapes {dict(shapes)}")
    assert violations == []
    assert shapes["disconnected"] and shapes["cutvertex"]


@pytest.mark.criterion(6, "every pesky block has |V(B)| = 2|P_B| and alternating outer neighbours")
def test_criterion_6_pesky_invariant(level_pass):
    stats, _, pesky_failures = level_pass
    print(f"criterion 6: {stats['pesky']} pesky of {stats['non-trivial leaves']} non-trivial extremal leaves")
    assert pesky_failures == []
    assert stats["pesky"] > 0


@pytest.mark.criterion(7, "case histogram covers every case id, fixtures filling the gaps")
def test_criterion_7_case_coverage(theorem1_run, fixture_run):
    _, random_hist, _ = theorem1_run
    fixture_failures, fixture_hist = fixture_run
    assert fixture_failures == []
    direct = Counter(dispatch(named(n)).case for n in fixture_names() if n.startswith("CASE_"))
    total = random_hist + fixture_hist + direct
    required = set(CASE_IDS) - {"BASE"}
    only_fixtures = sorted(required - set(random_hist))
    print(f"criterion 7: random corpus misses {only_fixtures}; fixtures cover them")
    assert required <= set(total), sorted(required - set(total))


@pytest.mark.criterion(8, "selection bounds hold and the violation archive stays empty over the corpus")
def test_criterion_8_empty_archive(archive, theorem1_run, fixture_run, level_pass):
    stats, selection_failures, _ = level_pass
    print(f"criterion 8: {stats['selections']} selections checked")
    assert selection_failures == []
    assert stats["selections"] > 0
    assert os.listdir(archive) == []


SUBCOMMANDS = [
    ["gen", "--n", "20", "--seed", "4", "--out", "g.2op"],
    ["gen", "--name", "FIG3", "--out", "fig3.2op"],
    ["counterexample", "--k", "2", "--out", "ce.2op"],
    ["solve", "--in", "fig3.2op", "--out", "set.txt", "--trace", "trace.tsv", "--svg", "set.svg"],
    ["verify", "--in", "fig3.2op", "--set", "set.txt", "--out", "report.tsv"],
    ["oracle", "--in", "small.2op", "--out", "oracle.tsv"],
    ["augment", "--in", "raw.2op", "--out", "aug.2op"],
    ["inspect", "--in", "fig3.2op", "--out", "inspect.json", "--svg", "inspect.svg"],
    ["bench", "--n", "18", "--count", "5", "--seed", "7", "--out", "bench.tsv"],
]


def _run_all(workdir):
    os.makedirs(workdir)
    cwd = os.getcwd()
    os.chdir(workdir)
    try:
        assert cli.main(["gen", "--n", "9", "--seed", "2", "--out", "small.2op"]) == 0
        assert cli.main(["gen", "--n", "16", "--seed", "5", "--raw", "--out", "raw.2op"]) == 0
        for i, argv in enumerate(SUBCOMMANDS):
            assert cli.main(argv + ["--manifest", f"manifest{i}.json"]) == 0, argv
        return {name: open(name, "rb").read() for name in sorted(os.listdir("."))}
    finally:
        os.chdir(cwd)


@pytest.mark.criterion(9, "same manifest inputs give byte-identical outputs for every subcommand")
def test_criterion_9_determinism(tmp_path):
    first = _run_all(tmp_path / "run")
    shutil.rmtree(tmp_path / "run")
    second = _run_all(tmp_path / "run")
    assert first.keys() == second.keys()
    assert len([k for k in first if k.startswith("manifest")]) == len(SUBCOMMANDS)
    assert {k for k, v in first.items() if second[k] != v} == set()
