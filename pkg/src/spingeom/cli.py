"""Command-line entry point: ``spingeom <group> <command> [options]``.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import geometry as geo
from . import hypercomplex as hc
from . import liealg as lie
from . import pauli
from . import subalgebra as sub
from .emit import EmitError, emit, octonion_table_text, octonion_table_to_dict
from .verify import DEFAULT_SAMPLES, DEFAULT_SEED, verify_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _common(parser: argparse.ArgumentParser, top: bool = False):
    # leaf parsers suppress defaults so a flag given before the subcommand survives
    d = (lambda v: v) if top else (lambda v: argparse.SUPPRESS)
    parser.add_argument("--emit", choices=("text", "json", "dot"), default=d("text"))
    parser.add_argument("--seed", type=int, default=d(DEFAULT_SEED))
    parser.add_argument("--quiet", action="store_true", default=d(False))


def _qubits(parser, default=None, required=False):
    parser.add_argument("-n", "--qubits", type=int, default=default, required=required)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spingeom", description=__doc__.splitlines()[0])
    _common(p, top=True)
    groups = p.add_subparsers(dest="group", required=True)

    oct_ = groups.add_parser("oct", help="octonion table and checks")
    oc = oct_.add_subparsers(dest="cmd", required=True)
    for name in ("table", "verify", "fano"):
        _common(oc.add_parser(name))

    pa = groups.add_parser("pauli", help="N-qubit Pauli strings")
    pc = pa.add_subparsers(dest="cmd", required=True)
    mul = pc.add_parser("mul")
    mul.add_argument("a")
    mul.add_argument("b")
    _qubits(mul)
    com = pc.add_parser("commutes")
    com.add_argument("a")
    com.add_argument("b")
    deg = pc.add_parser("degree")
    _qubits(deg, required=True)
    deg.add_argument("--check", action="store_true", help="confirm by building the graph")
    gr = pc.add_parser("graph")
    _qubits(gr, required=True)
    for sp in (mul, com, deg, gr):
        _common(sp)

    ge = groups.add_parser("geom", help="incidence geometries")
    gc = ge.add_subparsers(dest="cmd", required=True)
    lines = gc.add_parser("lines")
    _qubits(lines, default=2)
    lines.add_argument("--kind", choices=(geo.COMMUTING, geo.ANTICOMMUTING))
    doily = gc.add_parser("doily")
    polar = gc.add_parser("polar")
    _qubits(polar, required=True)
    find = gc.add_parser("find")
    _qubits(find, default=2)
    find.add_argument("--b", type=int, required=True)
    find.add_argument("--r", type=int, required=True)
    find.add_argument("--commuting", type=int, default=0)
    find.add_argument("--anticommuting", type=int, default=0)
    find.add_argument("--first", action="store_true", help="stop at the first solution")
    find.add_argument("--index", type=int, default=0, help="which solution to emit as dot/text")
    for sp in (lines, doily, polar, find):
        _common(sp)

    su = groups.add_parser("sub", help="su(4) subalgebras")
    sc = su.add_subparsers(dest="cmd", required=True)
    hs = sc.add_parser("heptads")
    h = sc.add_parser("heptad")
    h.add_argument("--center", required=True)
    ps = sc.add_parser("pentads")
    dc = sc.add_parser("decad")
    dc.add_argument("--pentad", required=True)
    cl = sc.add_parser("classify")
    cl.add_argument("--set", dest="members", required=True)
    for sp in (hs, h, ps, dc, cl):
        _common(sp)

    li = groups.add_parser("lie", help="so(4) structure constants")
    lc = li.add_subparsers(dest="cmd", required=True)
    so4 = lc.add_parser("so4")
    so4.add_argument("--check", action="store_true")
    so4.add_argument("--split", action="store_true")
    so4.add_argument("--fano", action="store_true")
    _common(so4)

    va = groups.add_parser("verify-all", help="run every structural check")
    va.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    _common(va)
    return p


def _need_no_dot(args, what: str):
    if args.emit == "dot":
        raise UsageError(f"--emit dot is not available for {what}")


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def run_oct(args, out) -> int:
    if args.cmd == "table":
        _need_no_dot(args, "the octonion table")
        out.write(_json(octonion_table_to_dict()) if args.emit == "json" else octonion_table_text())
        return EXIT_OK
    if args.cmd == "fano":
        out.write(emit(hc.fano_from_table(), args.emit))
        return EXIT_OK
    _need_no_dot(args, "octonion checks")
    rng = random.Random(args.seed)
    samples = [
        (hc.Octonion([rng.randint(-9, 9) for _ in range(8)]),
         hc.Octonion([rng.randint(-9, 9) for _ in range(8)]))
        for _ in range(DEFAULT_SAMPLES)
    ]
    results = {
        "sign_balance": hc.verify_sign_balance(),
        "index_rules": hc.verify_index_rules(),
        "alternativity": all(
            hc.associator(x, x, y).is_zero() and hc.associator(y, x, x).is_zero() for x, y in samples
        ),
        "norm_composition": all(hc.norm_composition_check(x, y) for x, y in samples),
    }
    if args.emit == "json":
        out.write(_json({**results, "samples": len(samples), "seed": args.seed}))
    else:
        for k, v in results.items():
            out.write(f"{k}: {'pass' if v else 'FAIL'}\n")
    return EXIT_OK if all(results.values()) else EXIT_FAIL


def run_pauli(args, out) -> int:
    if args.cmd == "mul":
        _need_no_dot(args, "products")
        a = pauli.parse_pauli(args.a, args.qubits)
        b = pauli.parse_pauli(args.b, args.qubits)
        c = pauli.multiply(a, b)
        out.write(_json({"a": a.label, "b": b.label, "product": c.label})
                  if args.emit == "json" else f"{c.label}\n")
        return EXIT_OK
    if args.cmd == "commutes":
        _need_no_dot(args, "commutation tests")
        a = pauli.parse_pauli(args.a).string
        b = pauli.parse_pauli(args.b).string
        res = pauli.commutes(a, b)
        out.write(_json({"a": a.label, "b": b.label, "commutes": res})
                  if args.emit == "json" else f"{str(res).lower()}\n")
        return EXIT_OK
    if args.cmd == "degree":
        _need_no_dot(args, "degree")
        n = args.qubits
        v, d = 4**n - 1, pauli.degree(n)
        payload = {"N": n, "v": v, "D": d, "non_commuting": 2 ** (2 * n - 1)}
        status = EXIT_OK
        if args.check:
            g = pauli.commutation_graph(n)
            degs = sorted({x for _, x in g.degree()})
            payload["graph_degrees"] = degs
            status = EXIT_OK if degs == [d] else EXIT_FAIL
        if args.emit == "json":
            out.write(_json(payload))
        else:
            extra = f" graph-degrees={payload['graph_degrees']}" if args.check else ""
            out.write(f"N={n}: D={d} v={v} non-commuting={payload['non_commuting']}{extra}\n")
        return status
    g = pauli.commutation_graph(args.qubits)
    out.write(emit(g, args.emit))
    return EXIT_OK


def run_geom(args, out) -> int:
    if args.cmd == "lines":
        pts = pauli.all_points(args.qubits)
        lines = geo.operator_lines(pts)
        if args.kind:
            lines = [line for line in lines if line.kind == args.kind]
        out.write(emit(geo.structure_from_lines(pts, lines), args.emit))
        return EXIT_OK
    if args.cmd == "doily":
        out.write(emit(geo.symplectic_polar_space(2), args.emit))
        return EXIT_OK
    if args.cmd == "polar":
        out.write(emit(geo.symplectic_polar_space(args.qubits), args.emit))
        return EXIT_OK
    pts = pauli.all_points(args.qubits)
    cands = geo.operator_lines(pts)
    census = {geo.COMMUTING: args.commuting, geo.ANTICOMMUTING: args.anticommuting}
    sols = geo.find_configuration(pts, cands, args.b, args.r, census, first_only=args.first)
    if args.emit == "json":
        out.write(_json({
            "count": len(sols),
            "solutions": [[list(line.labels) for line in sol] for sol in sols],
        }))
        return EXIT_OK
    if args.emit == "dot":
        if not sols:
            raise UsageError("no configuration matches; nothing to draw")
        if not 0 <= args.index < len(sols):
            raise UsageError(f"--index must be in 0..{len(sols) - 1}")
        out.write(emit(geo.structure_from_lines(pts, sols[args.index]), "dot"))
        return EXIT_OK
    out.write(f"solutions: {len(sols)}\n")
    for i, sol in enumerate(sols):
        out.write(f"#{i}: " + " ".join("{" + " ".join(line.labels) + "}" for line in sol) + "\n")
    return EXIT_OK


def run_sub(args, out) -> int:
    if args.cmd == "heptads":
        _need_no_dot(args, "heptad listings")
        reports = sub.heptads(2)
        if args.emit == "json":
            out.write(_json([r.to_dict() for r in reports]))
        else:
            out.write("".join(emit(r, "text") for r in reports))
        return EXIT_OK
    if args.cmd == "heptad":
        r = sub.classify(sub.heptad(pauli.parse_string(args.center, 2)))
        g = sub.heptad_geometry(r)
        out.write(emit(g, args.emit) if args.emit != "text" else emit(r, "text") + emit(g, "text"))
        return EXIT_OK
    if args.cmd == "pentads":
        _need_no_dot(args, "pentad listings")
        ps = sub.pentads(2)
        if args.emit == "json":
            out.write(_json([p.labels for p in ps]))
        else:
            out.write(f"pentads: {len(ps)}\n" + "".join(",".join(p.labels) + "\n" for p in ps))
        return EXIT_OK
    if args.cmd == "decad":
        r = sub.decad_from_pentad(sub.parse_set(args.pentad, 2))
        g = sub.decad_geometry(r)
        out.write(emit(g, args.emit) if args.emit != "text" else emit(r, "text") + emit(g, "text"))
        return EXIT_OK
    _need_no_dot(args, "classification reports")
    out.write(emit(sub.classify(sub.parse_set(args.members)), args.emit))
    return EXIT_OK


def run_lie(args, out) -> int:
    a = lie.make_so4()
    if args.fano:
        out.write(emit(lie.fano_arrangement_so4(), args.emit))
        return EXIT_OK
    _need_no_dot(args, "structure constants")
    status = EXIT_OK
    payload = {"so4": lie.algebra_to_dict(a)}
    text = [emit(a, "text")]
    if args.check:
        ok = lie.jacobi_check(a)
        payload["jacobi"] = ok
        text.append(f"jacobi: {'pass' if ok else 'FAIL'}\n")
        status = EXIT_OK if ok else EXIT_FAIL
    if args.split:
        j = lie.change_basis(a, lie.so4_split_basis())
        blocks = lie.commuting_block_decomposition(j)
        payload["split"] = lie.algebra_to_dict(j)
        payload["blocks"] = [[j.basis_labels[i] for i in b] for b in blocks]
        text.append(emit(j, "text"))
        text.append("blocks: " + " | ".join(" ".join(j.basis_labels[i] for i in b) for b in blocks) + "\n")
    out.write(_json(payload) if args.emit == "json" else "".join(text))
    return status


def run_verify(args, out) -> int:
    _need_no_dot(args, "verify-all")
    reports = verify_all(seed=args.seed, samples=args.samples)
    if args.emit == "json":
        out.write(_json([
            {"name": r.name, "status": r.status, "expected": r.expected, "actual": r.actual,
             **({} if args.quiet else {"elapsed": round(r.elapsed, 3)})}
            for r in reports
        ]))
    else:
        for r in reports:
            out.write(r.line(timing=not args.quiet) + "\n")
        passed = sum(r.passed for r in reports)
        out.write(f"{passed}/{len(reports)} checks passed\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


_DISPATCH = {
    "oct": run_oct,
    "pauli": run_pauli,
    "geom": run_geom,
    "sub": run_sub,
    "lie": run_lie,
    "verify-all": run_verify,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return _DISPATCH[args.group](args, out)
    except (UsageError, EmitError, pauli.PauliParseError, pauli.BoundExceeded, ValueError) as exc:
        print(f"spingeom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
