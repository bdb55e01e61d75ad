"""JSON, DOT and plain-text renderings of every result the tool produces.

All output is deterministic: identical inputs give identical bytes.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import singledispatch

from .atlas import AtlasEntry
from .classify import FTClassification, Lemma5Witness, lemma5_witness
from .cuts import BlockCutTree
from .errors import UnsupportedFormat
from .graph import AtVertex, GraphPoint, TopoGraph
from .hyperspace import HyperspaceGraph, NoncompactnessCertificate
from .paths import NCPath, VerificationReport
from .region import Region, hausdorff_distance

__all__ = [
    "FORMATS",
    "CertificateReport",
    "OracleReport",
    "PathReport",
    "region_to_json",
    "region_from_json",
    "to_dict",
    "to_dot",
    "to_text",
    "export",
]

FORMATS = ("json", "dot", "text")
_FLAT_LIST = re.compile(r"\[[^\[\]{}\"]*\]")


@dataclass(frozen=True)
class OracleReport:
    k: int
    hyperspace: HyperspaceGraph

    @property
    def connected(self) -> bool:
        return self.hyperspace.is_connected()


@dataclass(frozen=True)
class PathReport:
    k: int
    path: NCPath
    verification: VerificationReport


@dataclass(frozen=True)
class CertificateReport:
    """A certificate (or its absence) with the regions converging to its limit."""

    graph: TopoGraph
    k: int
    certificate: NoncompactnessCertificate | None
    family: tuple[Region, ...] = ()

    def distances(self) -> list[Fraction]:
        if self.certificate is None:
            return []
        return [hausdorff_distance(self.graph, R, self.certificate.limit) for R in self.family]


def _frac(x: Fraction) -> list[int]:
    x = Fraction(x)
    return [x.numerator, x.denominator]


def region_to_json(R: Region) -> dict:
    return {
        "vertices": sorted(R.vertices),
        "intervals": {str(e): [_frac(a) + _frac(b) for a, b in ivs] for e, ivs in R.intervals},
    }


def region_from_json(G: TopoGraph, data: dict) -> Region:
    """Inverse of :func:`region_to_json`; validates against ``G``."""
    ivs = {}
    for e, rows in data.get("intervals", {}).items():
        ivs[int(e)] = [(Fraction(an, ad), Fraction(bn, bd)) for an, ad, bn, bd in rows]
    return Region.build(G, data.get("vertices", []), ivs)


def _point(x: GraphPoint) -> dict:
    if isinstance(x, AtVertex):
        return {"vertex": x.vertex}
    return {"edge": x.edge, "position": _frac(x.position)}


def _point_text(x: GraphPoint) -> str:
    if isinstance(x, AtVertex):
        return f"vertex {x.vertex}"
    return f"edge {x.edge} at {x.position}"


def _witness(w: Lemma5Witness | None) -> dict | None:
    if w is None:
        return None
    return {
        "point": _point(w.p),
        "component_representatives": [_point(x) for x in w.component_representatives],
        "separating_family": w.separating_family,
    }


@singledispatch
def to_dict(report) -> dict | list:
    raise UnsupportedFormat(f"no JSON rendering for {type(report).__name__}")


@to_dict.register
def _(report: Region) -> dict:
    return region_to_json(report)


@to_dict.register
def _(report: BlockCutTree) -> dict:
    return {
        "blocks": [{"edges": list(b), "kind": kind} for b, kind in zip(report.blocks, report.kinds)],
        "cut_vertices": list(report.cut_vertices),
        "tree": [list(link) for link in report.tree],
    }


@to_dict.register
def _(report: FTClassification) -> dict:
    decomposition = {
        "graph": [list(e) for e in report.graph.edges],
        "tangles": [list(t) for t in report.tangles],
        "arc": list(report.arc),
        "junctions": list(report.junctions),
        "simple_closed_curve": report.is_simple_closed_curve,
    }
    reason = None
    if report.reason is not None:
        r = report.reason
        reason = {"kind": r.kind, "vertex": r.vertex, "block": None if r.block is None else list(r.block)}
    return {
        "verdict": "FT" if report.in_ft else "NotFT",
        "form": report.verdict.value,
        "decomposition": decomposition,
        "reason": reason,
        "witness": _witness(lemma5_witness(report.graph)),
    }


@to_dict.register
def _(report: HyperspaceGraph) -> dict:
    return {
        "nodes": [D.to_hex() for D in report.nodes],
        "adjacency": [list(pair) for pair in report.adjacency],
        "components": report.components(),
        "connected": report.is_connected(),
    }


@to_dict.register
def _(report: OracleReport) -> dict:
    return {"k": report.k, "connected": report.connected, "hyperspace": to_dict(report.hyperspace)}


@to_dict.register
def _(report: NCPath) -> dict:
    return {
        "keyframes": [D.to_hex() for D in report.keyframes],
        "stage_labels": list(report.stage_labels),
        "avoid": report.avoid,
    }


@to_dict.register
def _(report: PathReport) -> dict:
    v = report.verification
    return {
        "k": report.k,
        "path": to_dict(report.path),
        "verification": {"ok": v.ok, "index": v.index, "violation": v.violation},
    }


@to_dict.register
def _(report: NoncompactnessCertificate) -> dict:
    return {
        "k": report.k,
        "base": report.base.to_hex(),
        "pivot": report.pivot,
        "approach": format(report.approach, "x"),
        "limit": region_to_json(report.limit),
    }


@to_dict.register
def _(report: CertificateReport) -> dict:
    if report.certificate is None:
        return {"k": report.k, "certificate": None, "family": [], "distances": []}
    return {
        "k": report.k,
        "certificate": to_dict(report.certificate),
        "family": [region_to_json(R) for R in report.family],
        "distances": [_frac(d) for d in report.distances()],
    }


@to_dict.register
def _(report: AtlasEntry) -> dict:
    cls = report.classification
    return {
        "edges": [list(e) for e in report.edges],
        "form": cls.verdict.value,
        "in_ft": cls.in_ft,
        "oracle": {str(k): ok for k, ok in sorted(report.oracle.items())},
        "certificate": report.certificate is not None,
        "compact": report.compact,
        "disagreements": report.disagreements,
    }


@to_dict.register
def _(report: list) -> list:
    return [to_dict(x) for x in report]


def _hsv(i: int, n: int) -> str:
    return f"{i / max(n, 1):.3f} 0.450 0.950"


@singledispatch
def to_dot(report) -> str:
    raise UnsupportedFormat(f"no DOT rendering for {type(report).__name__}")


@to_dot.register
def _(report: BlockCutTree) -> str:
    lines = ["graph blockcut {"]
    for i, (b, kind) in enumerate(zip(report.blocks, report.kinds)):
        edges = " ".join(map(str, b))
        lines.append(f'  b{i} [shape=box, label="{kind}\\nedges {edges}"];')
    for c in report.cut_vertices:
        lines.append(f'  c{c} [shape=circle, label="{c}"];')
    for b, c in report.tree:
        lines.append(f"  b{b} -- c{c};")
    lines.append("}")
    return "\n".join(lines) + "\n"


@to_dot.register
def _(report: FTClassification) -> str:
    return to_dot(report.tree)


@to_dot.register
def _(report: HyperspaceGraph) -> str:
    comps = report.components()
    color = {}
    for ci, members in enumerate(comps):
        for i in members:
            color[i] = _hsv(ci, len(comps))
    lines = ["graph hyperspace {", "  node [style=filled];"]
    for i, D in enumerate(report.nodes):
        lines.append(f'  n{i} [label="v:{D.vertex_bits:x} e:{D.edge_bits:x}", fillcolor="{color[i]}"];')
    for i, j in report.adjacency:
        lines.append(f"  n{i} -- n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


@to_dot.register
def _(report: OracleReport) -> str:
    return to_dot(report.hyperspace)


@to_dot.register
def _(report: NCPath) -> str:
    lines = ["digraph path {", "  rankdir=LR;"]
    last = len(report.keyframes) - 1
    for i, D in enumerate(report.keyframes):
        shape = "doublecircle" if i in (0, last) else "ellipse"
        lines.append(f'  k{i} [shape={shape}, label="v:{D.vertex_bits:x} e:{D.edge_bits:x}"];')
    for i, label in enumerate(report.stage_labels):
        lines.append(f'  k{i} -> k{i + 1} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


@to_dot.register
def _(report: PathReport) -> str:
    return to_dot(report.path)


def _region_text(R: Region) -> str:
    parts = [f"v{v}" for v in sorted(R.vertices)]
    for e, ivs in R.intervals:
        parts += [f"e{e}[{a},{b}]" for a, b in ivs]
    return "{" + ", ".join(parts) + "}"


@singledispatch
def to_text(report) -> str:
    raise UnsupportedFormat(f"no text rendering for {type(report).__name__}")


@to_text.register
def _(report: Region) -> str:
    return _region_text(report) + "\n"


@to_text.register
def _(report: BlockCutTree) -> str:
    lines = [f"block {i}: {kind} edges {list(b)}" for i, (b, kind) in enumerate(zip(report.blocks, report.kinds))]
    lines.append(f"cut vertices: {list(report.cut_vertices)}")
    return "\n".join(lines) + "\n"


@to_text.register
def _(report: FTClassification) -> str:
    lines = [f"form: {report.verdict.value}", f"smoothed edges: {list(report.graph.edges)}"]
    if report.in_ft:
        if report.tangles:
            lines.append(f"tangles: {[list(t) for t in report.tangles]}")
        if report.arc:
            lines.append(f"arc: {list(report.arc)}")
        if report.junctions:
            lines.append(f"junctions: {list(report.junctions)}")
        if report.is_simple_closed_curve:
            lines.append("simple closed curve")
    else:
        r = report.reason
        where = f" vertex {r.vertex}" if r.vertex is not None else ""
        where += f" block {list(r.block)}" if r.block is not None else ""
        lines.append(f"reason: {r.kind}{where}")
        w = lemma5_witness(report.graph)
        if w is not None:
            reps = ", ".join(_point_text(x) for x in w.component_representatives)
            lines.append(f"witness: {_point_text(w.p)}; components hold {reps}")
    return "\n".join(lines) + "\n"


@to_text.register
def _(report: HyperspaceGraph) -> str:
    comps = report.components()
    lines = [f"nodes: {len(report.nodes)}", f"edges: {len(report.adjacency)}", f"components: {len(comps)}"]
    for ci, members in enumerate(comps):
        lines.append(f"  component {ci}: {len(members)} nodes")
    return "\n".join(lines) + "\n"


@to_text.register
def _(report: OracleReport) -> str:
    verdict = "connected" if report.connected else "disconnected"
    return f"k={report.k}: {verdict}\n" + to_text(report.hyperspace)


@to_text.register
def _(report: NCPath) -> str:
    lines = []
    for i, D in enumerate(report.keyframes):
        step = f"  <- {report.stage_labels[i - 1]}" if i else ""
        lines.append(f"{i}: vertices {D.vertices()} edges {D.edges()}{step}")
    if report.avoid is not None:
        lines.append(f"avoid: {report.avoid}")
    return "\n".join(lines) + "\n"


@to_text.register
def _(report: PathReport) -> str:
    v = report.verification
    status = "verified" if v.ok else f"FAILED at keyframe {v.index}: {v.violation}"
    return to_text(report.path) + status + "\n"


@to_text.register
def _(report: CertificateReport) -> str:
    c = report.certificate
    if c is None:
        return f"k={report.k}: no certificate (hyperspace of non-cut subcontinua is compact)\n"
    lines = [
        f"k={c.k}: base vertices {c.base.vertices()} edges {c.base.edges()}, pivot {c.pivot}",
        f"limit: {_region_text(c.limit)}",
    ]
    for m, (R, d) in enumerate(zip(report.family, report.distances()), 1):
        lines.append(f"R_{m}: {_region_text(R)}  distance {d}")
    return "\n".join(lines) + "\n"


@to_text.register
def _(report: list) -> str:
    lines = []
    for entry in report:
        oracle = " ".join(f"k{k}={'conn' if ok else 'disc'}" for k, ok in sorted(entry.oracle.items()))
        flag = f"  DISAGREE {','.join(entry.disagreements)}" if entry.disagreement else ""
        cert = "cert" if entry.certificate is not None else "compact"
        lines.append(f"{list(entry.edges)}: {entry.classification.verdict.value} {oracle} {cert}{flag}")
    return "\n".join(lines) + "\n"


def export(report, fmt: str = "json") -> bytes:
    if fmt == "json":
        text = json.dumps(to_dict(report), indent=2)
        # lists of scalars on one line
        text = _FLAT_LIST.sub(lambda m: "[" + " ".join(m.group()[1:-1].split()) + "]", text)
        return (text + "\n").encode()
    if fmt == "dot":
        return to_dot(report).encode()
    if fmt == "text":
        return to_text(report).encode()
    raise UnsupportedFormat(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
