"""Command line entry point: ``twoop <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or input errors,
3 an internal proof violation (the instance is archived).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from importlib import metadata
from typing import Sequence

from .augment import NotTwoOuterplane, TooSmall, augment, is_internally_triangulated
from .blocks import is_biconnected
from .errors import InternalProofViolation
from .instances import GenConfig, UnknownName, counterexample, gen_random, named
from .plane_graph import InvalidEmbedding, ParseError, PlaneGraph, layers, parse, serialize
from .solver import TraceEntry, good_set
from .verify import TooLarge, brute_max_outerplane, check_good

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _version() -> str:
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        return "0.1.0"


class _Run:
    """Collects written outputs for the manifest."""

    def __init__(self, args: argparse.Namespace, input_text: str | None):
        self.args = args
        self.input_hash = hashlib.sha256(input_text.encode()).hexdigest() if input_text is not None else None
        self.outputs: list[dict[str, str]] = []

    def emit(self, path: str | None, text: str) -> None:
        """Write to ``path``, or to stdout when no path is given."""
        if path is None or path == "-":
            sys.stdout.write(text)
            label = "<stdout>"
        else:
            with open(path, "w") as fh:
                fh.write(text)
            label = path
        self.outputs.append({"path": label, "sha256": hashlib.sha256(text.encode()).hexdigest()})

    def finish(self) -> None:
        if not getattr(self.args, "manifest", None):
            return
        manifest = {
            "subcommand": self.args.command,
            "input_sha256": self.input_hash,
            "seed": getattr(self.args, "seed", None),
            "tool_version": _version(),
            "outputs": self.outputs,
        }
        with open(self.args.manifest, "w") as fh:
            json.dump(manifest, fh, indent=2, sort_keys=True)
            fh.write("\n")


def _read_graph(path: str) -> tuple[PlaneGraph, str]:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return parse(text), text


def _read_set(path: str) -> list[int]:
    try:
        with open(path) as fh:
            lines = fh.read().split("\n")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    out = []
    for i, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append(int(line))
        except ValueError:
            raise UsageError(f"{path}:{i}: expected a vertex id, got {line!r}") from None
    return out


def _set_text(vertices) -> str:
    return "".join(f"{v}\n" for v in sorted(vertices))


def _trace_text(trace: Sequence[TraceEntry]) -> str:
    rows = ["case\tlocus\tn_before\tn_after"]
    rows += [f"{t.case}\t{','.join(map(str, t.locus))}\t{t.n_before}\t{t.n_after}" for t in trace]
    return "\n".join(rows) + "\n"


def _histogram(trace: Sequence[TraceEntry]) -> Counter:
    return Counter(t.case for t in trace)


def _histogram_text(hist: Counter) -> str:
    return ",".join(f"{case}:{hist[case]}" for case in sorted(hist))


# -- subcommands -------------------------------------------------------------


def cmd_solve(args: argparse.Namespace) -> int:
    g, text = _read_graph(args.input)
    run = _Run(args, text)
    chosen, trace = good_set(g, archive_dir=args.archive_dir)
    report = check_good(g, chosen)
    run.emit(args.out, _set_text(chosen))
    if args.trace:
        run.emit(args.trace, _trace_text(trace))
    if args.svg:
        from .render import to_svg

        run.emit(args.svg, to_svg(g, chosen))
    print(f"n={g.n} size={report.size} bound={report.bound} outerplane={report.outerplane_ok}", file=sys.stderr)
    run.finish()
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_verify(args: argparse.Namespace) -> int:
    if not args.set:
        raise UsageError("verify needs --set")
    g, text = _read_graph(args.input)
    run = _Run(args, text)
    chosen = _read_set(args.set)
    stray = sorted(set(chosen) - set(g.rotations))
    if stray:
        raise UsageError(f"set mentions vertices not in the graph: {stray}")
    report = check_good(g, chosen)
    lines = [
        f"n\t{report.n}",
        f"size\t{report.size}",
        f"bound\t{report.bound}",
        f"bound_ok\t{report.bound_ok}",
        f"outerplane_ok\t{report.outerplane_ok}",
        f"offending\t{','.join(map(str, report.offending))}",
    ]
    run.emit(args.out, "\n".join(lines) + "\n")
    if not report.ok:
        detail = f"offending vertices {list(report.offending)}" if report.offending else "set below the bound"
        print(f"verification failed: {detail}", file=sys.stderr)
    run.finish()
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_oracle(args: argparse.Namespace) -> int:
    g, text = _read_graph(args.input)
    run = _Run(args, text)
    size, witness = brute_max_outerplane(g)
    run.emit(args.out, f"size\t{size}\nwitness\t{','.join(map(str, sorted(witness)))}\n")
    run.finish()
    return EXIT_OK


def cmd_augment(args: argparse.Namespace) -> int:
    g, text = _read_graph(args.input)
    run = _Run(args, text)
    result = augment(g)
    run.emit(args.out, serialize(result.graph))
    print(f"added {len(result.added_edges)} edges", file=sys.stderr)
    run.finish()
    return EXIT_OK


def _inspect_report(g: PlaneGraph) -> dict:
    from .solver import _Scan  # same cached structure the dispatcher reads
    from .structure import default_e_star, weak_dual_rooted

    prepared = g.n >= 3 and is_internally_triangulated(g) and is_biconnected(g.rotations)
    h = g if prepared or g.n < 3 else augment(g).graph
    lay = layers(h)
    report: dict = {
        "n": h.n,
        "augmented": h is not g,
        "l1": sorted(lay.l1),
        "l2": sorted(lay.l2),
    }
    if h.n < 3:
        return report
    e_star = default_e_star(h)
    tstar = weak_dual_rooted(h, e_star)
    report["e_star"] = list(e_star)
    report["weak_dual"] = {
        "root": list(tstar.root),
        "edges": sorted([list(child), list(parent)] for child, parent in tstar.parent.items() if parent is not None),
    }
    scan = _Scan(h)
    comps = []
    for tc in scan.terminal:
        tree = scan.tree(tc)
        entry: dict = {
            "vertices": sorted(tc.vertices),
            "face": list(tc.cycle),
            "x": tc.x,
            "y": tc.y,
            "z": tc.z,
            "root": _node_label(tree.root),
            "tree_edges": sorted(
                [_node_label(child), _node_label(parent)] for child, parent in tree.parent.items() if parent is not None
            ),
        }
        if len(tree.parent) > 1:
            cages = []
            for leaf in scan.leaves(tc):
                cd = scan.cage(tc, leaf)
                cages.append(
                    {
                        "block": list(cd.block),
                        "trivial": cd.trivial,
                        "link": cd.c,
                        "left": cd.left,
                        "right": cd.right,
                        "path": list(cd.path),
                        "pesky": False if cd.trivial else scan.pesky(tc, leaf),
                    }
                )
            entry["extremal_leaves"] = cages
        comps.append(entry)
    report["terminal_components"] = comps
    return report


def _node_label(node) -> str:
    kind, data = node
    if kind == "C":
        return f"C{data}"
    return "B" + "-".join(map(str, data))


def cmd_inspect(args: argparse.Namespace) -> int:
    g, text = _read_graph(args.input)
    run = _Run(args, text)
    run.emit(args.out, json.dumps(_inspect_report(g), indent=2, sort_keys=True) + "\n")
    if args.svg:
        from .render import to_svg

        run.emit(args.svg, to_svg(g))
    run.finish()
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    run = _Run(args, None)
    if args.name:
        g = named(args.name)
    else:
        if args.n is None:
            raise UsageError("gen needs --n or --name")
        try:
            cfg = GenConfig(args.n, args.seed, inner_fraction=args.inner_fraction, triangulate=not args.raw)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        g = gen_random(cfg)
    run.emit(args.out, serialize(g))
    run.finish()
    return EXIT_OK


def cmd_counterexample(args: argparse.Namespace) -> int:
    if args.k < 1:
        raise UsageError("--k must be at least 1")
    run = _Run(args, None)
    run.emit(args.out, serialize(counterexample(args.k)))
    run.finish()
    return EXIT_OK


def _bench_one(job: tuple[int, int, float]) -> tuple[int, int, int, str, bool]:
    n, seed, frac = job
    g = gen_random(GenConfig(n, seed, inner_fraction=frac))
    chosen, trace = good_set(g)
    return seed, g.n, len(chosen), _histogram_text(_histogram(trace)), check_good(g, chosen).ok


def cmd_bench(args: argparse.Namespace) -> int:
    if args.n is None:
        raise UsageError("bench needs --n")
    run = _Run(args, None)
    jobs = [(args.n, args.seed + i, args.inner_fraction) for i in range(args.count)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_bench_one, jobs, chunksize=8))
    else:
        rows = [_bench_one(job) for job in jobs]
    total: Counter = Counter()
    lines = ["seed\tn\tsize\tratio\tcases"]
    worst = 1.0
    for seed, n, size, hist, _ok in rows:
        ratio = size / n if n else 1.0
        worst = min(worst, ratio)
        lines.append(f"{seed}\t{n}\t{size}\t{ratio:.4f}\t{hist}")
        for item in hist.split(","):
            case, count = item.rsplit(":", 1)
            total[case] += int(count)
    lines.append(f"all\t{args.n}\t-\t{worst:.4f}\t{_histogram_text(total)}")
    run.emit(args.out, "\n".join(lines) + "\n")
    run.finish()
    ok = all(row[4] for row in rows)
    return EXIT_OK if ok else EXIT_FAIL


# -- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twoop", description="Large outerplane induced subgraphs of 2-outerplane graphs.")
    parser.add_argument("--version", action="version", version=_version())
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, needs_input: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        if needs_input:
            p.add_argument("--in", dest="input", required=True, help="input .2op file, or - for stdin")
        p.add_argument("--out", help="output file (default: stdout)")
        p.add_argument("--manifest", help="write a JSON run manifest here")
        return p

    p = add("solve", "compute a good set")
    p.add_argument("--trace", help="write the case trace as TSV")
    p.add_argument("--svg", help="write a drawing with the set highlighted")
    p.add_argument("--archive-dir", default="violations", help="where proof violations are archived")
    p.set_defaults(func=cmd_solve)

    p = add("verify", "check a vertex set against the bound and outerplanarity")
    p.add_argument("--set", help="vertex set file, one id per line")
    p.set_defaults(func=cmd_verify)

    p = add("oracle", "exact maximum by subset enumeration (small graphs)")
    p.set_defaults(func=cmd_oracle)

    p = add("augment", "triangulate internally and make biconnected")
    p.set_defaults(func=cmd_augment)

    p = add("inspect", "dump the weak dual, terminal components and cages as JSON")
    p.add_argument("--svg", help="write a drawing of the graph")
    p.set_defaults(func=cmd_inspect)

    p = add("gen", "generate a random instance or emit a named fixture", needs_input=False)
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inner-fraction", type=float, default=0.4)
    p.add_argument("--raw", action="store_true", help="skip the final augmentation")
    p.add_argument("--name", help="emit a named fixture instead")
    p.set_defaults(func=cmd_gen)

    p = add("counterexample", "k disjoint copies of the 11-vertex gadget", needs_input=False)
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=cmd_counterexample)

    p = add("bench", "solve many generated instances and tabulate", needs_input=False)
    p.add_argument("--n", type=int)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inner-fraction", type=float, default=0.4)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except InternalProofViolation as exc:
        where = f"; instance archived at {exc.archive_path}" if exc.archive_path else ""
        print(f"internal proof violation in case {exc.case}: {exc.message}{where}", file=sys.stderr)
        return EXIT_VIOLATION
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, UnknownName, InvalidEmbedding, NotTwoOuterplane, TooSmall, TooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
