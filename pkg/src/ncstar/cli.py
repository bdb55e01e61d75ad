"""Command-line entry point.

Exit status: 0 on success, 1 on bad input or usage, 2 when a computed result
contradicts the classification (oracle, certificate or path disagreement).
"""
from __future__ import annotations

import argparse
import json
import sys

from .atlas import atlas_run
from .classify import classify, ncstar_compact
from .errors import InternalInvariantViolation, NCStarError, ParseError
from .graph import TopoGraph, build_graph
from .hyperspace import certificate_family, discretize, enumerate_ncstar, hyperspace_components, noncompactness_certificate
from .paths import ft_path, tangle_path, verify_path
from .region import subgraph_from_region
from .report import FORMATS, CertificateReport, OracleReport, PathReport, export, region_from_json

__all__ = ["parse_graph_file", "parse_graph_text", "main"]

OK, USAGE, DISAGREE = 0, 1, 2


def parse_graph_text(text: str) -> TopoGraph:
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(lineno, f"expected two vertex ids, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"vertex ids must be integers, got {line!r}") from None
        if u < 0 or v < 0:
            raise ParseError(lineno, "vertex ids must be nonnegative")
        edges.append((u, v))
    return build_graph(edges)


def parse_graph_file(path) -> TopoGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph_text(fh.read())


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def _ks(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)

    parser = _Parser(prog="ncstar", description="Hyperspaces of non-cut subcontinua of finite graphs.")
    parser.add_argument("--format", choices=FORMATS, default="json")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="decide membership in the family")
    p.add_argument("file")

    p = sub.add_parser("oracle", parents=[common], help="brute-force discrete hyperspace")
    p.add_argument("file")
    p.add_argument("--subdivide", type=int, default=2)

    p = sub.add_parser("path", parents=[common], help="build and verify a path to the whole graph")
    p.add_argument("file")
    p.add_argument("--start", required=True, help="region JSON over the smoothed graph")
    p.add_argument("--avoid", type=int, help="subdivided vertex kept out until the last step (tangles)")
    p.add_argument("--subdivide", type=int, default=2)

    p = sub.add_parser("certificate", parents=[common], help="non-compactness certificate")
    p.add_argument("file")
    p.add_argument("--subdivide", type=int, default=2)
    p.add_argument("--family", type=int, default=3, help="number of converging regions to emit")

    p = sub.add_parser("atlas", parents=[common], help="exhaustive check over small multigraphs")
    p.add_argument("--max-edges", type=int, default=3)
    p.add_argument("--subdivide", type=_ks, default=[2])
    return parser


def _classify(args):
    return classify(parse_graph_file(args.file)), OK


def _oracle(args):
    G = parse_graph_file(args.file)
    _, sub, _ = discretize(G, args.subdivide)
    report = OracleReport(args.subdivide, hyperspace_components(sub, enumerate_ncstar(sub)))
    return report, OK if report.connected == classify(G).in_ft else DISAGREE


def _path(args):
    G = parse_graph_file(args.file)
    with open(args.start, encoding="utf-8") as fh:
        data = json.load(fh)
    S, _, M = discretize(G, args.subdivide)
    A = subgraph_from_region(S, M, region_from_json(S, data))
    if args.avoid is None:
        path = ft_path(G, args.subdivide, A)
    else:
        path = tangle_path(G, args.subdivide, A, args.avoid)
    check = verify_path(G, args.subdivide, path, A)
    return PathReport(args.subdivide, path, check), OK if check.ok else DISAGREE


def _certificate(args):
    G = parse_graph_file(args.file)
    S, _, _ = discretize(G, args.subdivide)
    cert = noncompactness_certificate(G, args.subdivide)
    family = tuple(certificate_family(G, cert, args.family)) if cert is not None else ()
    report = CertificateReport(S, args.subdivide, cert, family)
    return report, OK if (cert is None) == ncstar_compact(G) else DISAGREE


def _atlas(args):
    entries = atlas_run(args.max_edges, args.subdivide)
    return entries, DISAGREE if any(e.disagreement for e in entries) else OK


COMMANDS = {
    "classify": _classify,
    "oracle": _oracle,
    "path": _path,
    "certificate": _certificate,
    "atlas": _atlas,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE
    try:
        report, status = COMMANDS[args.command](args)
        out = export(report, args.format)
    except InternalInvariantViolation as exc:
        print(f"ncstar: invariant violated: {exc}", file=sys.stderr)
        return DISAGREE
    except (NCStarError, OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        print(f"ncstar: {exc}", file=sys.stderr)
        return USAGE
    sys.stdout.buffer.write(out)
    sys.stdout.flush()
    return status


if __name__ == "__main__":
    sys.exit(main())
