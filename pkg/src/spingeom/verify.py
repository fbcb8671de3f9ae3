"""End-to-end checks of every structural claim, run in a fixed order.

Each check returns ``(expected, actual)`` summaries; a check passes exactly
when the two are equal.
"""

from __future__ import annotations

import itertools
import random
import time
from collections import Counter
from dataclasses import dataclass
from typing import Callable

from . import geometry as geo
from . import hypercomplex as hc
from . import liealg as lie
from . import pauli
from . import subalgebra as sub

DEFAULT_SEED = 20100101
DEFAULT_SAMPLES = 10_000
QUAT_SAMPLES = 1_000


@dataclass(frozen=True)
class RunReport:
    name: str
    status: str
    expected: str
    actual: str
    elapsed: float

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def line(self, timing: bool = True) -> str:
        text = f"[{self.status.upper()}] {self.name}: {self.actual}"
        if self.status != "pass":
            text += f" (expected {self.expected})"
        if timing:
            text += f"  ({self.elapsed:.3f}s)"
        return text


def _fmt(d: dict) -> str:
    return "; ".join(f"{k}: {v}" for k, v in d.items())


def _random_octonion(rng: random.Random, lo: int = -9, hi: int = 9) -> hc.Octonion:
    return hc.Octonion([rng.randint(lo, hi) for _ in range(8)])


def _random_quaternion(rng: random.Random, lo: int = -9, hi: int = 9) -> hc.Quaternion:
    return hc.Quaternion(*(rng.randint(lo, hi) for _ in range(4)))


def check_octonion_table():
    units = [hc.Octonion.unit(k) for k in range(8)]
    matches = 0
    for i, j in itertools.product(range(1, 8), repeat=2):
        e = hc.OCTONION_TABLE[i - 1][j - 1]
        if units[i] * units[j] == hc.Octonion.unit(e.index, e.sign):
            matches += 1
    anti = all(units[i] * units[j] == -(units[j] * units[i])
               for i, j in itertools.combinations(range(1, 8), 2))
    actual = {
        "unit products matching table": matches,
        "anticommuting units": anti,
        "sign balance": hc.verify_sign_balance(),
        "shift/doubling rules": hc.verify_index_rules(),
    }
    expected = {
        "unit products matching table": 49,
        "anticommuting units": True,
        "sign balance": True,
        "shift/doubling rules": True,
    }
    return expected, actual


def check_fano():
    f = hc.fano_from_table()
    d = geo.design_params(f)
    actual = {"v": d.v, "b": d.b, "r": d.r, "k": d.k, "lambda": d.lam,
              "projective plane": d.is_projective_plane,
              "self-dual": geo.are_isomorphic(f, geo.dual(f))}
    expected = {"v": 7, "b": 7, "r": 3, "k": 3, "lambda": 1,
                "projective plane": True, "self-dual": True}
    return expected, actual


def check_hypercomplex(seed: int, samples: int):
    rng = random.Random(seed)
    alt = comp = 0
    for _ in range(samples):
        x, y = _random_octonion(rng), _random_octonion(rng)
        if hc.associator(x, x, y).is_zero() and hc.associator(y, x, x).is_zero():
            alt += 1
        if hc.norm_composition_check(x, y):
            comp += 1
    e = hc.Octonion.unit
    witness = hc.associator(e(1), e(2), e(3))
    basis = (hc.Quaternion(1), hc.QI, hc.QJ, hc.QK)
    hom_basis = sum(
        hc.quat_to_pauli(a * b) == hc.quat_to_pauli(a) @ hc.quat_to_pauli(b)
        for a, b in itertools.product(basis, repeat=2)
    )
    hom_rand = 0
    for _ in range(QUAT_SAMPLES):
        a, b = _random_quaternion(rng), _random_quaternion(rng)
        if hc.quat_to_pauli(a * b) == hc.quat_to_pauli(a) @ hc.quat_to_pauli(b):
            hom_rand += 1
    actual = {
        "alternative samples": alt,
        "norm-composition samples": comp,
        "associator(e1,e2,e3)": repr(witness),
        "quaternion basis homomorphism": hom_basis,
        "quaternion random homomorphism": hom_rand,
    }
    expected = {
        "alternative samples": samples,
        "norm-composition samples": samples,
        "associator(e1,e2,e3)": repr(hc.Octonion.unit(6, -2)),
        "quaternion basis homomorphism": 16,
        "quaternion random homomorphism": QUAT_SAMPLES,
    }
    return expected, actual


def check_pauli_oracle():
    ops = [pauli.PauliString.identity(2)] + pauli.all_points(2)
    mats = {p: pauli.to_matrix(p) for p in ops}
    products = sum(
        pauli.to_matrix(pauli.multiply(a, b)) == mats[a] @ mats[b]
        for a, b in itertools.product(ops, repeat=2)
    )
    pts = ops[1:]
    comm = sum(
        pauli.commutes(a, b) == mats[a].commutator(mats[b]).is_zero()
        for a, b in itertools.product(pts, repeat=2)
    )
    return ({"phased products": 256, "commutation checks": 225},
            {"phased products": products, "commutation checks": comm})


def check_degree_table():
    expected, actual = {}, {}
    for n in range(1, 5):
        g = pauli.commutation_graph(n)
        degs = {d for _, d in g.degree()}
        expected[f"N={n}"] = f"D={pauli.degree(n)}, v={4**n - 1}, regular=True"
        actual[f"N={n}"] = (
            f"D={min(degs)}, v={g.number_of_nodes()}, regular={len(degs) == 1}"
        )
    closed = {f"N={n}": pauli.degree(n) for n in range(1, 5)}
    expected["closed form"] = {"N=1": 0, "N=2": 6, "N=3": 30, "N=4": 126}
    actual["closed form"] = closed
    return expected, actual


def check_line_census():
    pts = pauli.all_points(2)
    lines = geo.operator_lines(pts)
    kinds = Counter(line.kind for line in lines)
    s = geo.structure_from_lines(pts, lines)
    pc = s.pair_counts()
    pairs_once = all(pc.get(frozenset(pq), 0) == 1 for pq in itertools.combinations(s.points, 2))
    actual = {"lines": len(lines), "commuting": kinds[geo.COMMUTING],
              "anticommuting": kinds[geo.ANTICOMMUTING],
              "homogeneous": None not in kinds, "each pair on one line": pairs_once}
    expected = {"lines": 35, "commuting": 15, "anticommuting": 20,
                "homogeneous": True, "each pair on one line": True}
    return expected, actual


def check_heptads():
    reports = sub.heptads(2)
    centers = {r.center for r in reports}
    ok = 0
    for r in reports:
        g = sub.heptad_geometry(r)
        (c,) = r.center
        comm_lines = [line for line, k in zip(g.lines, g.line_kinds) if k == geo.COMMUTING]
        if (
            r.closed_under_product
            and r.line_census == {geo.COMMUTING: 3, geo.ANTICOMMUTING: 4}
            and all(c.label in line for line in comm_lines)
        ):
            ok += 1
    yy = sub.heptad("YY").labels
    actual = {"heptads": len(reports), "distinct centers": len(centers),
              "closed with 4+3 census through center": ok, "YY heptad": ",".join(yy)}
    expected = {"heptads": 15, "distinct centers": 15,
                "closed with 4+3 census through center": 15,
                "YY heptad": ",".join(sub.OperatorSet.of(
                    ["YY", "YI", "IY", "XX", "XZ", "ZX", "ZZ"]).labels)}
    return expected, actual


def check_pentads_decads():
    ps = sub.pentads(2)
    six = sub.anticommuting_cliques(pauli.all_points(2), 6)
    good = 0
    for p in ps:
        r = sub.decad_from_pentad(p)
        g = sub.decad_geometry(r)
        d = geo.design_params(g)
        if (
            r.closed_under_commutation
            and (r.members.members | p.members) == set(pauli.all_points(2))
            and (d.v, d.b, d.r, d.k) == (10, 10, 3, 3)
            and g.kind_census() == {geo.ANTICOMMUTING: 10}
            and geo.are_isomorphic(g, geo.desargues_configuration())
        ):
            good += 1
    actual = {"pentads nonzero": len(ps) > 0, "6-sets": len(six), "valid decads": good}
    expected = {"pentads nonzero": True, "6-sets": 0, "valid decads": len(ps)}
    return expected, actual


def check_doily():
    w = geo.symplectic_polar_space(2)
    actual = {"points": w.v, "lines": w.b, "GQ(2,2)": geo.gq22_check(w),
              "self-dual": geo.are_isomorphic(w, geo.dual(w))}
    expected = {"points": 15, "lines": 15, "GQ(2,2)": True, "self-dual": True}
    return expected, actual


def check_mixed_search():
    pts = pauli.all_points(2)
    lines = geo.operator_lines(pts)
    sols = geo.find_configuration(
        pts, lines, 15, 3, {geo.COMMUTING: 1, geo.ANTICOMMUTING: 14}, first_only=True
    )
    ok = False
    if sols:
        s = geo.structure_from_lines(pts, sols[0])
        d = geo.design_params(s)
        ok = d.b == 15 and d.r == 3 and s.kind_census() == {geo.ANTICOMMUTING: 14, geo.COMMUTING: 1}
    return {"found 15-line (1,14) configuration": True}, {"found 15-line (1,14) configuration": ok}


def check_so4():
    a = lie.make_so4()
    j = lie.change_basis(a, lie.so4_split_basis())
    blocks = lie.commuting_block_decomposition(j)
    heptad_geom = sub.heptad_geometry(sub.classify(sub.heptad("YY")))
    actual = {
        "jacobi": lie.jacobi_check(a),
        "jacobi after split": lie.jacobi_check(j),
        "blocks": blocks,
        "standard su(2) blocks": sum(lie.is_standard_su2(j, b) for b in blocks),
        "su(2) triples": len(lie.su2_triples(a)),
        "so(4) fano ~ heptad geometry": geo.are_isomorphic(lie.fano_arrangement_so4(), heptad_geom),
    }
    expected = {
        "jacobi": True,
        "jacobi after split": True,
        "blocks": [[0, 1, 2], [3, 4, 5]],
        "standard su(2) blocks": 2,
        "su(2) triples": 4,
        "so(4) fano ~ heptad geometry": True,
    }
    return expected, actual


def checks(seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES) -> list[tuple[str, Callable]]:
    return [
        ("octonion table", check_octonion_table),
        ("fano plane", check_fano),
        ("hypercomplex properties", lambda: check_hypercomplex(seed, samples)),
        ("pauli oracle (N=2)", check_pauli_oracle),
        ("degree table", check_degree_table),
        ("two-qubit line census", check_line_census),
        ("heptads", check_heptads),
        ("pentads and decads", check_pentads_decads),
        ("doily", check_doily),
        ("mixed-census configuration search", check_mixed_search),
        ("so(4) suite", check_so4),
    ]


def verify_all(seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES) -> list[RunReport]:
    out = []
    for name, fn in checks(seed, samples):
        t0 = time.perf_counter()
        try:
            expected, actual = fn()
        except Exception as exc:  # reported, not raised
            expected, actual = {"completed": True}, {"error": f"{type(exc).__name__}: {exc}"}
        elapsed = time.perf_counter() - t0
        status = "pass" if expected == actual else "fail"
        out.append(RunReport(name, status, _fmt(expected), _fmt(actual), elapsed))
    return out
