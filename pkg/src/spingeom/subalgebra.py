"""Pauli-basis subalgebras of su(4): heptads, pentads and decads.

In the Pauli basis a commutator ``[a, b]`` is either zero (commuting pair)
or ``2ab``, so closing a set under commutators means adding the projective
product of every anticommuting pair.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .geometry import (
    ANTICOMMUTING,
    COMMUTING,
    IncidenceStructure,
    operator_lines,
    structure_from_lines,
)
from .pauli import PauliString, all_points, centralizer, commutes, parse_string

HEPTAD = "su2su2u1-heptad"
DECAD = "so5-decad"
FULL = "full-su4"
OTHER = "other"


@dataclass(frozen=True)
class OperatorSet:
    n_qubits: int
    members: frozenset

    def __post_init__(self):
        members = frozenset(self.members)
        object.__setattr__(self, "members", members)
        for p in members:
            if p.n_qubits != self.n_qubits:
                raise ValueError(f"{p.label} is not a {self.n_qubits}-qubit string")
            if p.is_identity:
                raise ValueError("identity cannot be a member")

    @classmethod
    def of(cls, items: Iterable) -> "OperatorSet":
        pts = [parse_string(p) if isinstance(p, str) else p for p in items]
        if not pts:
            raise ValueError("empty operator set needs an explicit qubit count")
        return cls(pts[0].n_qubits, frozenset(pts))

    def sorted(self) -> list[PauliString]:
        return sorted(self.members)

    @property
    def labels(self) -> list[str]:
        return [p.label for p in self.sorted()]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, p):
        return p in self.members


@dataclass(frozen=True)
class SubalgebraReport:
    members: OperatorSet
    closed_under_commutation: bool
    closed_under_product: bool
    line_census: dict
    center: tuple
    label: str

    def to_dict(self) -> dict:
        return {
            "members": self.members.labels,
            "closed_under_commutation": self.closed_under_commutation,
            "closed_under_product": self.closed_under_product,
            "line_census": dict(self.line_census),
            "center": [p.label for p in self.center],
            "label": self.label,
        }


def lie_closure(seed: OperatorSet) -> OperatorSet:
    if not seed.members:
        raise ValueError("seed must be non-empty")
    current = set(seed.members)
    frontier = list(current)
    while frontier:
        new = []
        for a in frontier:
            for b in list(current):
                if not commutes(a, b):
                    c = a * b
                    if c not in current:
                        current.add(c)
                        new.append(c)
        frontier = new
    return OperatorSet(seed.n_qubits, frozenset(current))


def is_commutation_closed(s: OperatorSet) -> bool:
    return all(
        commutes(a, b) or (a * b) in s.members
        for a, b in itertools.combinations(s.members, 2)
    )


def product_closure_check(s: OperatorSet) -> bool:
    """Every pairwise projective product lands in the set (or is the identity)."""
    return all((a * b) in s.members for a, b in itertools.combinations(s.members, 2))


def center(s: OperatorSet) -> tuple:
    return tuple(
        p for p in s.sorted() if all(commutes(p, q) for q in s.members if q != p)
    )


def classify(s: OperatorSet) -> SubalgebraReport:
    lines = operator_lines(s.members)
    census = {COMMUTING: 0, ANTICOMMUTING: 0}
    for line in lines:
        census[line.kind] = census.get(line.kind, 0) + 1
    ctr = center(s)
    size = len(s)
    degrees = {p: 0 for p in s.members}
    for line in lines:
        for p in line.points:
            degrees[p] += 1
    if size == 7 and len(ctr) == 1 and census == {COMMUTING: 3, ANTICOMMUTING: 4}:
        label = HEPTAD
    elif (
        size == 10
        and not ctr
        and census == {COMMUTING: 0, ANTICOMMUTING: 10}
        and set(degrees.values()) == {3}
    ):
        label = DECAD
    elif s.n_qubits == 2 and size == 15:
        label = FULL
    else:
        label = OTHER
    return SubalgebraReport(
        members=s,
        closed_under_commutation=is_commutation_closed(s),
        closed_under_product=product_closure_check(s),
        line_census=census,
        center=ctr,
        label=label,
    )


def _require_two_qubits(n: int):
    if n != 2:
        raise ValueError("heptad/pentad enumeration is defined for two qubits")


def heptad(c, n: int = 2) -> OperatorSet:
    """The centre ``c`` together with everything commuting with it."""
    c = parse_string(c, n) if isinstance(c, str) else c
    return OperatorSet(c.n_qubits, frozenset({c}) | centralizer(c))


def heptads(n: int = 2) -> list[SubalgebraReport]:
    _require_two_qubits(n)
    return [classify(heptad(c)) for c in all_points(n)]


def _internal_geometry(r: SubalgebraReport) -> IncidenceStructure:
    pts = r.members.sorted()
    return structure_from_lines(pts, operator_lines(pts))


def heptad_geometry(r: SubalgebraReport) -> IncidenceStructure:
    if r.label != HEPTAD:
        raise ValueError(f"expected a {HEPTAD} report, got {r.label}")
    return _internal_geometry(r)


def pentads(n: int = 2) -> list[OperatorSet]:
    """All 5-sets of mutually anticommuting points, in canonical order."""
    _require_two_qubits(n)
    return [OperatorSet(n, frozenset(c)) for c in anticommuting_cliques(all_points(n), 5)]


def anticommuting_cliques(points: Iterable[PauliString], size: int) -> list[tuple]:
    """All ``size``-subsets of ``points`` whose members pairwise anticommute."""
    pts = sorted(points)
    out = []

    def grow(clique: list, start: int):
        if len(clique) == size:
            out.append(tuple(clique))
            return
        for i in range(start, len(pts)):
            p = pts[i]
            if all(not commutes(p, q) for q in clique):
                clique.append(p)
                grow(clique, i + 1)
                clique.pop()

    grow([], 0)
    return out


def is_pentad(p: OperatorSet) -> bool:
    return len(p) == 5 and all(not commutes(a, b) for a, b in itertools.combinations(p.members, 2))


def decad_from_pentad(p: OperatorSet) -> SubalgebraReport:
    if not is_pentad(p):
        raise ValueError("input is not a set of 5 mutually anticommuting points")
    products = [a * b for a, b in itertools.combinations(p.sorted(), 2)]
    decad = OperatorSet(p.n_qubits, frozenset(products))
    if len(decad) != 10 or decad.members & p.members:
        raise ValueError("pentad products are not a 10-set disjoint from the pentad")
    report = classify(decad)
    if not report.closed_under_commutation or report.label != DECAD:
        raise ValueError("pentad products do not form a commutation-closed decad")
    return report


def decad_geometry(r: SubalgebraReport) -> IncidenceStructure:
    if r.label != DECAD:
        raise ValueError(f"expected a {DECAD} report, got {r.label}")
    return _internal_geometry(r)


def parse_set(text: str, n: Optional[int] = None) -> OperatorSet:
    items = [t.strip() for t in text.split(",") if t.strip()]
    return OperatorSet.of(parse_string(t, n) for t in items)
