"""JSON, DOT and plain-text serialisation.

All output is deterministic: points and lines appear in their canonical
order and JSON keys are emitted in a fixed order.
"""

from __future__ import annotations

import json

import networkx as nx

from .geometry import COMMUTING, IncidenceStructure, design_params
from .hypercomplex import OCTONION_TABLE, Octonion
from .liealg import StructureConstantAlgebra, algebra_to_dict
from .subalgebra import SubalgebraReport

FORMATS = ("text", "json", "dot")


class EmitError(ValueError):
    pass


def structure_to_dict(s: IncidenceStructure) -> dict:
    lines = []
    for i in range(s.b):
        orient = s.line_orientations[i] if s.line_orientations else None
        lines.append(
            {
                "points": list(s.ordered_line(i)),
                "kind": s.line_kinds[i] if s.line_kinds else None,
                "orientation": list(orient) if orient else None,
            }
        )
    return {"points": list(s.points), "lines": lines}


def graph_to_dict(g: nx.Graph) -> dict:
    nodes = sorted(g.nodes)
    return {
        "points": [p.label for p in nodes],
        "adjacency": {p.label: [q.label for q in sorted(g.neighbors(p))] for p in nodes},
    }


def octonion_table_to_dict() -> dict:
    return {
        "rows": [f"e{i}" for i in range(1, 8)],
        "columns": [f"e{j}" for j in range(1, 8)],
        "table": [[str(e) for e in row] for row in OCTONION_TABLE],
    }


def _dot_id(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def levi_dot(s: IncidenceStructure, name: str = "levi") -> str:
    """Bipartite point-line graph; line nodes are small squares.

    Anticommuting lines get solid edges and their cyclic orientation as a
    label, commuting lines dashed edges.
    """
    out = [f"graph {_dot_id(name)} {{", "  node [fontsize=10];"]
    for p in s.points:
        out.append(f"  {_dot_id('p:' + p)} [label={_dot_id(p)} shape=ellipse];")
    for i in range(s.b):
        kind = s.line_kinds[i] if s.line_kinds else None
        orient = s.line_orientations[i] if s.line_orientations else None
        attrs = ['shape=square', 'width=0.15', 'height=0.15', 'label=""']
        if orient:
            attrs.append(f"xlabel={_dot_id(' -> '.join(orient))}")
        if kind:
            attrs.append(f"tooltip={_dot_id(kind)}")
        out.append(f"  {_dot_id(f'l:{i + 1}')} [{' '.join(attrs)}];")
    for i in range(s.b):
        kind = s.line_kinds[i] if s.line_kinds else None
        style = "dashed" if kind == COMMUTING else "solid"
        for p in s.ordered_line(i):
            out.append(f"  {_dot_id('p:' + p)} -- {_dot_id(f'l:{i + 1}')} [style={style}];")
    out.append("}")
    return "\n".join(out) + "\n"


def graph_dot(g: nx.Graph, name: str = "commutation") -> str:
    nodes = sorted(g.nodes)
    out = [f"graph {_dot_id(name)} {{", "  node [fontsize=10];"]
    for p in nodes:
        out.append(f"  {_dot_id(p.label)};")
    for a, b in sorted(tuple(sorted(e)) for e in g.edges):
        out.append(f"  {_dot_id(a.label)} -- {_dot_id(b.label)};")
    out.append("}")
    return "\n".join(out) + "\n"


def structure_text(s: IncidenceStructure) -> str:
    d = design_params(s)
    head = (
        f"v={d.v} b={d.b} r={d.r} k={d.k} lambda={d.lam} "
        f"2-design={d.is_2_design} projective-plane={d.is_projective_plane} "
        f"configuration={d.is_configuration}"
    )
    rows = [head]
    census = s.kind_census()
    if census:
        rows.append("census: " + ", ".join(f"{k}={v}" for k, v in census.items()))
    for i in range(s.b):
        kind = s.line_kinds[i] if s.line_kinds else None
        orient = s.line_orientations[i] if s.line_orientations else None
        desc = " ".join(s.ordered_line(i))
        extra = []
        if kind:
            extra.append(kind)
        if orient:
            extra.append("cycle " + " -> ".join(orient))
        rows.append(f"  {{{desc}}}" + (f"  [{'; '.join(extra)}]" if extra else ""))
    return "\n".join(rows) + "\n"


def report_text(r: SubalgebraReport) -> str:
    d = r.to_dict()
    return (
        f"{d['label']}: {{{', '.join(d['members'])}}}\n"
        f"  center={d['center']} census={d['line_census']} "
        f"commutation-closed={d['closed_under_commutation']} "
        f"product-closed={d['closed_under_product']}\n"
    )


def algebra_text(a: StructureConstantAlgebra) -> str:
    rows = ["basis: " + ", ".join(a.basis_labels)]
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            br = a.bracket(i, j)
            if br:
                rhs = " + ".join(f"({f})*{a.basis_labels[k]}" for k, f in sorted(br.items()))
                rows.append(f"  [{a.basis_labels[i]}, {a.basis_labels[j]}] = {rhs}")
    return "\n".join(rows) + "\n"


def octonion_table_text() -> str:
    width = 5
    rows = [" " * width + "".join(f"e{j}".rjust(width) for j in range(1, 8))]
    for i, row in enumerate(OCTONION_TABLE, start=1):
        rows.append(f"e{i}".rjust(width) + "".join(str(e).rjust(width) for e in row))
    return "\n".join(rows) + "\n"


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def emit(payload, fmt: str = "text") -> str:
    """Serialise ``payload`` as ``text``, ``json`` or ``dot``."""
    if fmt not in FORMATS:
        raise EmitError(f"unknown format {fmt!r}")
    if isinstance(payload, IncidenceStructure):
        if fmt == "json":
            return _dumps(structure_to_dict(payload))
        if fmt == "dot":
            return levi_dot(payload)
        return structure_text(payload)
    if isinstance(payload, nx.Graph):
        if fmt == "json":
            return _dumps(graph_to_dict(payload))
        if fmt == "dot":
            return graph_dot(payload)
        return "".join(
            f"{p.label}: {' '.join(q.label for q in sorted(payload.neighbors(p)))}\n"
            for p in sorted(payload.nodes)
        )
    if fmt == "dot":
        raise EmitError(f"dot output is only available for graphs and incidence structures, not {type(payload).__name__}")
    if isinstance(payload, SubalgebraReport):
        return _dumps(payload.to_dict()) if fmt == "json" else report_text(payload)
    if isinstance(payload, StructureConstantAlgebra):
        return _dumps(algebra_to_dict(payload)) if fmt == "json" else algebra_text(payload)
    if isinstance(payload, Octonion):
        return _dumps([str(c) for c in payload.coeffs]) if fmt == "json" else repr(payload) + "\n"
    if fmt == "json":
        return _dumps(payload)
    return f"{payload}\n"
