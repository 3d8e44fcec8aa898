"""Command-line surface over the library.

Every report is plain text and byte-deterministic for fixed inputs and
flags.  Labeling-producing commands emit the ``.lbl`` format, so their
output feeds straight back into ``validate``.  Exit status: 0 on success,
1 on validation failure, infeasibility, or resource limits (diagnostic on
stderr), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import analysis, construct, families, geometry, sidon, solver
from .core import (
    Hypergraph,
    HypergraphError,
    Labeling,
    parse_hypergraph,
    parse_labeling,
    serialize_hypergraph,
    serialize_labeling,
    validate_discriminator,
)


class CommandError(Exception):
    """Fatal command failure; message goes to stderr, exit status 1."""


def _load_hypergraph(path: str) -> Hypergraph:
    try:
        return parse_hypergraph(Path(path).read_text())
    except OSError as exc:
        raise CommandError(f"cannot read {path}: {exc}") from exc
    except HypergraphError as exc:
        raise CommandError(f"{path}: {exc}") from exc


def _load_labeling(path: str, hg: Hypergraph) -> Labeling:
    try:
        raw = parse_labeling(Path(path).read_text())
        return Labeling.for_hypergraph(hg, raw)
    except OSError as exc:
        raise CommandError(f"cannot read {path}: {exc}") from exc
    except HypergraphError as exc:
        raise CommandError(f"{path}: {exc}") from exc


def _cmd_validate(args) -> int:
    hg = _load_hypergraph(args.hypergraph)
    labeling = _load_labeling(args.labels, hg)
    verdict = validate_discriminator(hg, labeling)
    if verdict.ok:
        print("valid")
        return 0
    print(f"violation: {verdict.message}", file=sys.stderr)
    return 1


def _cmd_construct(args) -> int:
    hg = _load_hypergraph(args.hypergraph)
    if args.hitting_heuristic:
        if args.order or args.init:
            raise CommandError("--hitting-heuristic replaces --order and --init")
        labeling, order, init = construct.hitting_set_labeling(hg)
    else:
        order = None
        if args.order:
            try:
                order = construct.Ordering.from_sequence(hg, args.order.split(","))
            except HypergraphError as exc:
                raise CommandError(str(exc)) from exc
        init = None
        if args.init:
            seed = {}
            for item in args.init.split(","):
                name, _, value = item.partition("=")
                if not value or not value.isdigit():
                    raise CommandError(f"bad --init entry {item!r}; expected vertex=weight")
                seed[name] = int(value)
            try:
                init = Labeling.for_hypergraph(hg, seed)
            except HypergraphError as exc:
                raise CommandError(str(exc)) from exc
        labeling = construct.greedy_labeling(hg, order, init)
    bound = construct.greedy_weight_bound(hg, order, init)
    print(f"# certificate {bound}")
    sys.stdout.write(serialize_labeling(hg, labeling))
    return 0


def _cmd_solve(args) -> int:
    hg = _load_hypergraph(args.hypergraph)
    try:
        result = solver.exact_optimal(hg, node_cap=args.node_cap)
    except solver.SearchLimitError as exc:
        raise CommandError(str(exc)) from exc
    print(f"# optimal-weight {result.optimal_weight}")
    print(f"# nodes-explored {result.nodes_explored}")
    sys.stdout.write(serialize_labeling(hg, result.witness))
    return 0


_FAMILIES = {
    "path": (families.path, "m"),
    "cycle": (families.cycle, "m"),
    "powerset": (families.power_set, "m"),
    "star": (families.star, "m"),
    "nested": (families.nested_chain, "m"),
    "disjoint": (families.disjoint_edges, "m"),
}


def _cmd_family(args) -> int:
    if args.kind == "rpartite":
        if not args.sizes:
            raise CommandError("family rpartite needs --sizes m1,m2,...")
        try:
            sizes = tuple(int(s) for s in args.sizes.split(","))
        except ValueError:
            raise CommandError(f"bad --sizes {args.sizes!r}") from None
        try:
            hg, labeling, weight = families.complete_r_partite(sizes)
        except ValueError as exc:
            raise CommandError(str(exc)) from exc
        header = f"# family rpartite sizes={args.sizes} weight={weight}"
    else:
        if args.m is None:
            raise CommandError(f"family {args.kind} needs --m")
        maker, _ = _FAMILIES[args.kind]
        try:
            hg, labeling, weight = maker(args.m)
        except ValueError as exc:
            raise CommandError(str(exc)) from exc
        header = f"# family {args.kind} m={args.m} weight={weight}"
    print(header)
    for line in serialize_hypergraph(hg).splitlines():
        print(f"# hg: {line}")
    sys.stdout.write(serialize_labeling(hg, labeling))
    if args.out_hg:
        Path(args.out_hg).write_text(serialize_hypergraph(hg))
    return 0


def _cmd_bounds(args) -> int:
    hg = _load_hypergraph(args.hypergraph)
    sys.stdout.write(analysis.bounds(hg).format())
    return 0


def _cmd_census(args) -> int:
    try:
        report = analysis.census(
            args.n, dedup=args.dedup, workers=args.workers, node_cap=args.node_cap
        )
    except (ValueError, solver.SearchLimitError) as exc:
        raise CommandError(str(exc)) from exc
    sys.stdout.write(report.format())
    if args.conjecture:
        sys.stdout.write(analysis.conjecture_scan(args.n, report).format())
    return 0


def _cmd_sidon(args) -> int:
    rest = args.args
    if rest and rest[0] == "label":
        if len(rest) != 2:
            raise CommandError("usage: sidon label <file.hg> [--r R]")
        hg = _load_hypergraph(rest[1])
        try:
            labeling = sidon.sidon_labeling(hg, r=args.r)
        except HypergraphError as exc:
            raise CommandError(str(exc)) from exc
        order = args.r if args.r is not None else sidon.uniformity(hg)
        print(f"# sidon r={order} weight={labeling.total()}")
        sys.stdout.write(serialize_labeling(hg, labeling))
        return 0
    if rest:
        raise CommandError(f"unknown sidon arguments: {' '.join(rest)}")
    if args.h is None or args.count is None:
        raise CommandError("usage: sidon --h H --count K  |  sidon label <file.hg> [--r R]")
    bh = sidon.greedy_bh(args.h, args.count)
    print(" ".join(map(str, bh.elements)))
    return 0


def _load_regions(path: str):
    try:
        regions = geometry.parse_regions(Path(path).read_text())
    except OSError as exc:
        raise CommandError(f"cannot read {path}: {exc}") from exc
    except HypergraphError as exc:
        raise CommandError(f"{path}: {exc}") from exc
    if not regions:
        raise CommandError(f"{path}: no regions")
    return regions


def _cmd_geom(args) -> int:
    regions = _load_regions(args.regions)
    try:
        placement = geometry.geometric_discriminator(regions, node_cap=args.node_cap)
    except solver.SearchLimitError as exc:
        raise CommandError(str(exc)) from exc
    sys.stdout.write(placement.format())
    return 0


def _cmd_report(args) -> int:
    from . import report as report_mod

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    if args.kind == "census":
        if args.n is None:
            raise CommandError("report census needs --n")
        data = analysis.census(args.n, dedup=args.dedup, workers=args.workers)
        written = report_mod.render_census(data, outdir)
    else:
        if not args.regions:
            raise CommandError("report geom needs a regions file")
        regions = _load_regions(args.regions)
        placement = geometry.geometric_discriminator(regions)
        written = report_mod.render_placement(regions, placement, outdir, Path(args.regions).stem)
    for path in written:
        print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgediscrim",
        description="Construct, verify, bound, and exactly optimize edge-discriminating labelings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a labeling against a hypergraph")
    p.add_argument("hypergraph")
    p.add_argument("--labels", required=True)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("construct", help="greedy labeling with weight certificate")
    p.add_argument("hypergraph")
    p.add_argument("--order", help="comma-separated vertex order")
    p.add_argument("--init", help="comma-separated vertex=weight seeds")
    p.add_argument("--hitting-heuristic", action="store_true",
                   help="seed with a greedy hitting set placed last")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("solve", help="exact minimum-weight labeling")
    p.add_argument("hypergraph")
    p.add_argument("--node-cap", type=int, default=None)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("family", help="closed-form optimal labelings")
    p.add_argument("kind", choices=sorted(_FAMILIES) + ["rpartite"])
    p.add_argument("--m", type=int)
    p.add_argument("--sizes", help="comma-separated non-increasing part sizes")
    p.add_argument("--out-hg", help="also write the hypergraph to this file")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("bounds", help="lower/upper weight bounds with witnesses")
    p.add_argument("hypergraph")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("census", help="attainable optimal weights for n edges")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dedup", action="store_true",
                   help="skip edge-relabeling duplicates")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--node-cap", type=int, default=None)
    p.add_argument("--conjecture", action="store_true",
                   help="append the non-attainable interval scan")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("sidon", help="distinct-sum sets and uniform labelings")
    p.add_argument("args", nargs="*", metavar="label <file.hg>")
    p.add_argument("--h", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--r", type=int)
    p.set_defaults(func=_cmd_sidon)

    p = sub.add_parser("geom", help="geometric discriminator for a region family")
    p.add_argument("regions")
    p.add_argument("--node-cap", type=int, default=None)
    p.set_defaults(func=_cmd_geom)

    p = sub.add_parser("report", help="delimited data plus rendered figures")
    p.add_argument("kind", choices=["census", "geom"])
    p.add_argument("regions", nargs="?")
    p.add_argument("--n", type=int)
    p.add_argument("--dedup", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--outdir", required=True)
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    raise SystemExit(main())
