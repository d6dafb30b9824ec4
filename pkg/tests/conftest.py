import math
import random

import pytest

from twoop.instances import GenConfig, gen_random
from twoop.plane_graph import delete_vertices, from_drawing


def corpus(ns, per_n, fractions=(0.3, 0.5, 0.7), seed0=0):
    """Seeded generator instances spread across inner fractions."""
    for n in ns:
        for i in range(per_n):
            frac = fractions[i % len(fractions)]
            yield gen_random(GenConfig(n, seed0 + i, inner_fraction=frac))


def icosahedron():
    """Outer triangle, a hexagon, an inner triangle; every vertex has degree 5."""
    coords, edges = {}, []

    def polar(r, deg):
        return (r * math.cos(math.radians(deg)), r * math.sin(math.radians(deg)))

    for i in range(3):
        coords[i] = polar(6, 90 + 120 * i)
        coords[9 + i] = polar(0.8, 150 + 120 * i)
    for j in range(6):
        coords[3 + j] = polar(2, 90 + 60 * j)
    for i in range(3):
        edges += [(i, (i + 1) % 3), (9 + i, 9 + (i + 1) % 3)]
        a = 2 * i
        edges += [(i, 3 + (a - 1) % 6), (i, 3 + a), (i, 3 + (a + 1) % 6)]
        edges += [(9 + i, 3 + a), (9 + i, 3 + a + 1), (9 + i, 3 + (a + 2) % 6)]
    for j in range(6):
        edges.append((3 + j, 3 + (j + 1) % 6))
    return from_drawing(coords, edges)


def thinned(n, seed, frac, keep):
    """Raw generator output with a random share of vertices dropped.

    Deleting vertices never raises the outerplanarity index, so the result
    is still 2-outerplane but may be disconnected or have cutvertices.
    """
    g = gen_random(GenConfig(n, seed, inner_fraction=frac, triangulate=False))
    rng = random.Random(seed)
    drop = {v for v in g.vertices if rng.random() > keep}
    if not drop or len(drop) >= g.n:
        return g
    return delete_vertices(g, drop)


# -- acceptance summary --------------------------------------------------------

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA[number] = (title, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, verdict = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {verdict}  {title}")
