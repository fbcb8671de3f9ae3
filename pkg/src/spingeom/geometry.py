"""Finite incidence structures built from operator points.

An :class:`IncidenceStructure` is a list of point labels plus lines given as
sets of labels.  Lines built from Pauli products carry a kind (``commuting``
or ``anticommuting``) and, for anticommuting lines, a cyclic orientation
``(a, b, c)`` meaning ``a*b = +i c``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .pauli import BoundExceeded, PauliString, all_points, commutes, multiply

COMMUTING = "commuting"
ANTICOMMUTING = "anticommuting"

ISOMORPHISM_POINT_BOUND = 40
POLAR_SPACE_MAX_QUBITS = 4


@dataclass(frozen=True)
class IncidenceStructure:
    points: tuple
    lines: tuple
    line_kinds: Optional[tuple] = None
    line_orientations: Optional[tuple] = None
    # duals of degenerate structures may repeat lines or have 1-point lines
    allow_degenerate: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        points = tuple(self.points)
        lines = tuple(frozenset(line) for line in self.lines)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "lines", lines)
        if len(set(points)) != len(points):
            raise ValueError("duplicate point labels")
        known = set(points)
        for line in lines:
            if not line:
                raise ValueError("empty line")
            if not line <= known:
                raise ValueError(f"line {sorted(line)} uses unknown points {sorted(line - known)}")
            if len(line) < 2 and not self.allow_degenerate:
                raise ValueError(f"line {sorted(line)} has fewer than 2 points")
        if not self.allow_degenerate and len(set(lines)) != len(lines):
            raise ValueError("duplicate lines")
        for name in ("line_kinds", "line_orientations"):
            meta = getattr(self, name)
            if meta is not None:
                meta = tuple(meta)
                if len(meta) != len(lines):
                    raise ValueError(f"{name} must have one entry per line")
                object.__setattr__(self, name, meta)

    @property
    def v(self) -> int:
        return len(self.points)

    @property
    def b(self) -> int:
        return len(self.lines)

    def point_degrees(self) -> dict:
        deg = dict.fromkeys(self.points, 0)
        for line in self.lines:
            for p in line:
                deg[p] += 1
        return deg

    def pair_counts(self) -> Counter:
        """Number of lines through each unordered pair of points (absent means 0)."""
        counts = Counter()
        for line in self.lines:
            for pq in itertools.combinations(line, 2):
                counts[frozenset(pq)] += 1
        return counts

    def lines_through(self, p) -> list:
        return [line for line in self.lines if p in line]

    def kind_census(self) -> dict:
        if self.line_kinds is None:
            return {}
        return dict(sorted(Counter(k for k in self.line_kinds if k is not None).items()))

    def ordered_line(self, idx: int) -> tuple:
        order = {p: i for i, p in enumerate(self.points)}
        return tuple(sorted(self.lines[idx], key=order.__getitem__))


@dataclass(frozen=True)
class DesignParameters:
    v: int
    b: int
    r: Optional[int]
    k: Optional[int]
    lam: Optional[int]
    is_2_design: bool
    is_projective_plane: bool
    is_configuration: bool


@dataclass(frozen=True)
class OperatorLine:
    """Three Pauli points, each the projective product of the other two."""

    points: tuple
    kind: Optional[str]
    orientation: Optional[tuple] = None

    @property
    def labels(self) -> tuple:
        return tuple(p.label for p in self.points)


def _constant(values) -> Optional[int]:
    values = set(values)
    return values.pop() if len(values) == 1 else None


def _triple_kind(a, b, c) -> Optional[str]:
    flags = {commutes(a, b), commutes(b, c), commutes(a, c)}
    if flags == {True}:
        return COMMUTING
    if flags == {False}:
        return ANTICOMMUTING
    return None


def _rotate_min(t: tuple) -> tuple:
    i = t.index(min(t))
    return t[i:] + t[:i]


def operator_lines(points: Iterable[PauliString]) -> list[OperatorLine]:
    """All triples ``{a, b, a*b}`` inside ``points``, in canonical order."""
    pts = sorted(set(points))
    if any(p.is_identity for p in pts):
        raise ValueError("identity is not a geometric point")
    if len({p.n_qubits for p in pts}) > 1:
        raise ValueError("points must share a qubit count")
    members = set(pts)
    out = []
    for i, a in enumerate(pts):
        for b in pts[i + 1 :]:
            c = a * b
            if c <= b or c not in members:
                continue
            kind = _triple_kind(a, b, c)
            orientation = None
            if kind == ANTICOMMUTING:
                # phase_exp 1: a*b = +i c, so the cycle a -> b -> c is positive
                cycle = (a, b, c) if multiply(a, b).phase_exp == 1 else (b, a, c)
                orientation = _rotate_min(cycle)
            out.append(OperatorLine((a, b, c), kind, orientation))
    return out


def structure_from_lines(
    points: Iterable[PauliString], lines: Sequence[OperatorLine]
) -> IncidenceStructure:
    pts = sorted(points)
    return IncidenceStructure(
        points=tuple(p.label for p in pts),
        lines=tuple(frozenset(line.labels) for line in lines),
        line_kinds=tuple(line.kind for line in lines),
        line_orientations=tuple(
            tuple(p.label for p in line.orientation) if line.orientation else None
            for line in lines
        ),
    )


def operator_structure(points: Iterable[PauliString]) -> IncidenceStructure:
    """Incidence structure of every operator line inside ``points``."""
    pts = sorted(set(points))
    return structure_from_lines(pts, operator_lines(pts))


def design_params(s: IncidenceStructure) -> DesignParameters:
    r = _constant(s.point_degrees().values()) if s.v else None
    k = _constant(len(line) for line in s.lines) if s.b else None
    lam = None
    if s.v >= 2:
        pc = s.pair_counts()
        lam = _constant(pc.get(frozenset(pq), 0) for pq in itertools.combinations(s.points, 2))
    is_2_design = bool(s.b and k is not None and k >= 2 and lam is not None and lam >= 1)
    partial_linear = all(c <= 1 for c in s.pair_counts().values())
    is_config = bool(s.v and s.b and r is not None and k is not None and partial_linear)
    return DesignParameters(
        v=s.v,
        b=s.b,
        r=r,
        k=k,
        lam=lam,
        is_2_design=is_2_design,
        is_projective_plane=is_projective_plane(s),
        is_configuration=is_config,
    )


def is_projective_plane(s: IncidenceStructure) -> bool:
    if s.v < 4 or s.b < 2:
        return False
    pc = s.pair_counts()
    if any(pc.get(frozenset(pq), 0) != 1 for pq in itertools.combinations(s.points, 2)):
        return False
    if any(len(l1 & l2) != 1 for l1, l2 in itertools.combinations(s.lines, 2)):
        return False
    for quad in itertools.combinations(s.points, 4):
        if not any(
            sum(p in line for p in quad) >= 3 for line in s.lines
        ):
            return True
    return False


def dual(s: IncidenceStructure) -> IncidenceStructure:
    """Swap points and lines; old line ``i`` becomes point ``L{i+1}``."""
    names = tuple(f"L{i + 1}" for i in range(s.b))
    new_lines = []
    for p in s.points:
        through = frozenset(names[i] for i, line in enumerate(s.lines) if p in line)
        if through:
            new_lines.append(through)
    degenerate = s.allow_degenerate or any(len(l) < 2 for l in new_lines) or len(
        set(new_lines)
    ) != len(new_lines)
    return IncidenceStructure(points=names, lines=tuple(new_lines), allow_degenerate=degenerate)


def find_isomorphism(
    s1: IncidenceStructure, s2: IncidenceStructure, bound: int = ISOMORPHISM_POINT_BOUND
) -> Optional[dict]:
    """Point bijection carrying the lines of ``s1`` onto those of ``s2``, or None.

    Backtracking over candidates with matching incidence signatures; each
    partial assignment must preserve pair multiplicities, and a line is
    checked as soon as its last point is mapped.
    """
    if max(s1.v, s2.v) > bound:
        raise BoundExceeded(f"isomorphism search limited to {bound} points")
    if s1.v != s2.v or s1.b != s2.b:
        return None
    if sorted(len(l) for l in s1.lines) != sorted(len(l) for l in s2.lines):
        return None

    def signature(s):
        return {p: tuple(sorted(len(l) for l in s.lines if p in l)) for p in s.points}

    sig1, sig2 = signature(s1), signature(s2)
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None
    pc1, pc2 = s1.pair_counts(), s2.pair_counts()
    lines2 = Counter(s2.lines)
    lines1 = Counter(s1.lines)

    # connected, high-degree-first ordering keeps the pair test biting early
    order = []
    remaining = set(s1.points)
    while remaining:
        start = max(remaining, key=lambda p: (len(sig1[p]), -s1.points.index(p)))
        frontier = [start]
        remaining.discard(start)
        while frontier:
            p = frontier.pop(0)
            order.append(p)
            nbrs = sorted(
                {q for l in s1.lines if p in l for q in l} & remaining, key=s1.points.index
            )
            for q in nbrs:
                remaining.discard(q)
                frontier.append(q)
    pos = {p: i for i, p in enumerate(order)}
    closing = {p: [] for p in order}
    for line in lines1:
        closing[max(line, key=pos.__getitem__)].append(line)

    mapping: dict = {}
    used: set = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        for q in s2.points:
            if q in used or sig2[q] != sig1[p]:
                continue
            if any(
                pc1.get(frozenset((p, pp)), 0) != pc2.get(frozenset((q, mapping[pp])), 0)
                for pp in order[:i]
            ):
                continue
            mapping[p] = q
            ok = all(
                lines2.get(frozenset(mapping[x] for x in line), 0) == lines1[line]
                for line in closing[p]
            )
            if ok:
                used.add(q)
                if extend(i + 1):
                    return True
                used.discard(q)
            del mapping[p]
        return False

    return dict(mapping) if extend(0) else None


def are_isomorphic(
    s1: IncidenceStructure, s2: IncidenceStructure, bound: int = ISOMORPHISM_POINT_BOUND
) -> bool:
    return find_isomorphism(s1, s2, bound) is not None


def gq22_check(s: IncidenceStructure) -> bool:
    """Axioms of a generalized quadrangle of order (2, 2)."""
    if not s.v or not s.b:
        return False
    if any(len(line) != 3 for line in s.lines):
        return False
    if any(d != 3 for d in s.point_degrees().values()):
        return False
    pc = s.pair_counts()
    if any(c > 1 for c in pc.values()):
        return False
    for line in s.lines:
        for p in s.points:
            if p in line:
                continue
            if sum(pc.get(frozenset((p, q)), 0) for q in line) != 1:
                return False
    return True


def symplectic_polar_space(n: int, bound: int = POLAR_SPACE_MAX_QUBITS) -> IncidenceStructure:
    """Points and totally isotropic lines of W(2n-1, 2)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > bound:
        raise BoundExceeded(f"symplectic_polar_space limited to {bound} qubits, got {n}")
    pts = all_points(n)
    lines = [line for line in operator_lines(pts) if line.kind == COMMUTING]
    return structure_from_lines(pts, lines)


class SearchLimitExceeded(RuntimeError):
    pass


def find_configuration(
    points: Iterable,
    candidate_lines: Sequence[OperatorLine],
    b_target: int,
    r_target: int,
    kind_census: Mapping[str, int],
    *,
    first_only: bool = False,
    max_nodes: Optional[int] = 5_000_000,
) -> list[tuple]:
    """Sub-collections of ``candidate_lines`` forming a tactical configuration.

    Returns every selection of ``b_target`` lines in which each point lies on
    exactly ``r_target`` lines and the number of lines of each kind equals
    ``kind_census`` (kinds absent from the census must not be used).  Each
    selection is a tuple of lines in candidate order; the list is sorted.
    Infeasible targets give an empty list.  ``max_nodes`` caps the number of
    search nodes and raises :class:`SearchLimitExceeded` when hit.
    """
    pts = sorted(set(points))
    index = {p: i for i, p in enumerate(pts)}
    cands = list(candidate_lines)
    if sum(kind_census.values()) != b_target or any(c < 0 for c in kind_census.values()):
        return []
    sizes = {len(line.points) for line in cands}
    if len(sizes) == 1 and len(pts) * r_target != b_target * sizes.pop():
        return []
    if b_target == 0:
        return [()] if r_target == 0 or not pts else []

    kinds = sorted(set(kind_census) | {line.kind for line in cands}, key=str)
    kind_id = {k: i for i, k in enumerate(kinds)}
    quota0 = [kind_census.get(k, 0) for k in kinds]
    masks = []
    line_kind = []
    for line in cands:
        if any(p not in index for p in line.points):
            raise ValueError(f"line {line.labels} uses points outside the point set")
        masks.append(sum(1 << index[p] for p in line.points))
        line_kind.append(kind_id[line.kind])
    through = [0] * len(pts)
    for li, m in enumerate(masks):
        for pi in range(len(pts)):
            if m >> pi & 1:
                through[pi] |= 1 << li
    by_kind = [sum(1 << li for li in range(len(cands)) if line_kind[li] == k) for k in range(len(kinds))]

    # lines of exhausted kinds are never available
    avail0 = (1 << len(cands)) - 1
    for k, q in enumerate(quota0):
        if q == 0:
            avail0 &= ~by_kind[k]

    solutions: list[tuple] = []
    nodes = 0

    def search(need: list, quota: list, avail: int, chosen: list) -> bool:
        nonlocal nodes
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise SearchLimitExceeded(f"find_configuration exceeded {max_nodes} nodes")
        for k, q in enumerate(quota):
            if (avail & by_kind[k]).bit_count() < q:
                return False
        best = None
        best_slack = None
        for pi, nd in enumerate(need):
            if nd == 0:
                continue
            slack = (avail & through[pi]).bit_count() - nd
            if slack < 0:
                return False
            if best is None or slack < best_slack:
                best, best_slack = pi, slack
        if best is None:
            if not any(quota):
                solutions.append(tuple(cands[li] for li in sorted(chosen)))
                return first_only
            return False
        cand_bits = avail & through[best]
        li = (cand_bits & -cand_bits).bit_length() - 1
        # branch 1: take line li
        new_need = need[:]
        new_avail = avail & ~(1 << li)
        m = masks[li]
        for pi in range(len(pts)):
            if m >> pi & 1:
                new_need[pi] -= 1
                if new_need[pi] == 0:
                    new_avail &= ~through[pi]
        k = line_kind[li]
        new_quota = quota[:]
        new_quota[k] -= 1
        if new_quota[k] == 0:
            new_avail &= ~by_kind[k]
        chosen.append(li)
        if search(new_need, new_quota, new_avail, chosen):
            return True
        chosen.pop()
        # branch 2: exclude line li
        return search(need, quota, avail & ~(1 << li), chosen)

    need0 = [r_target] * len(pts)
    # lines through points that need nothing are unusable
    if r_target == 0:
        return []
    search(need0, quota0, avail0, [])
    order = {id(line): i for i, line in enumerate(cands)}
    solutions.sort(key=lambda sol: [order[id(line)] for line in sol])
    return solutions


def desargues_configuration() -> IncidenceStructure:
    """Desargues 10_3: points are 2-subsets of {1..5}, lines are 3-subsets."""
    pts = [frozenset(c) for c in itertools.combinations(range(1, 6), 2)]
    name = {p: "".join(map(str, sorted(p))) for p in pts}
    lines = [
        frozenset(name[frozenset(pair)] for pair in itertools.combinations(t, 2))
        for t in itertools.combinations(range(1, 6), 3)
    ]
    return IncidenceStructure(points=tuple(name[p] for p in pts), lines=tuple(lines))
