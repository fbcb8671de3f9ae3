"""Lie algebras given by exact structure constants.

``constants[(i, j, k)] = f`` means ``[b_i, b_j] = sum_k f * b_k``.  Constants
are Gaussian rationals and follow the physics convention
``[L_x, L_y] = i L_z``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .exact import ZERO, GaussianRational, invert_rational, rational
from .geometry import COMMUTING, IncidenceStructure

_EPS = {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1, (1, 0, 2): -1, (2, 1, 0): -1, (0, 2, 1): -1}


@dataclass(frozen=True)
class StructureConstantAlgebra:
    basis_labels: tuple
    constants: Mapping = field(default_factory=dict)

    def __post_init__(self):
        labels = tuple(self.basis_labels)
        object.__setattr__(self, "basis_labels", labels)
        n = len(labels)
        consts = {}
        for (i, j, k), f in self.constants.items():
            if not all(0 <= t < n for t in (i, j, k)):
                raise ValueError(f"index out of range in constant {(i, j, k)}")
            f = GaussianRational.coerce(f)
            if f:
                consts[(i, j, k)] = f
        for (i, j, k), f in consts.items():
            if consts.get((j, i, k), ZERO) != -f:
                raise ValueError(f"constants not antisymmetric at {(i, j, k)}")
        object.__setattr__(self, "constants", dict(sorted(consts.items())))

    @classmethod
    def from_brackets(cls, labels: Sequence[str], brackets: Mapping) -> "StructureConstantAlgebra":
        """Build from ``{(i, j): {k: f}}``; the ``(j, i)`` entries are filled in."""
        consts = {}
        for (i, j), out in brackets.items():
            for k, f in out.items():
                f = GaussianRational.coerce(f)
                consts[(i, j, k)] = f
                consts[(j, i, k)] = -f
        return cls(tuple(labels), consts)

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    def f(self, i: int, j: int, k: int) -> GaussianRational:
        return self.constants.get((i, j, k), ZERO)

    def bracket(self, i: int, j: int) -> dict:
        """``[b_i, b_j]`` as a sparse ``{k: coefficient}`` dict."""
        return {k: f for (a, b, k), f in self.constants.items() if a == i and b == j}

    def index(self, label: str) -> int:
        return self.basis_labels.index(label)


@dataclass(frozen=True)
class BasisChange:
    """Row ``a`` gives new basis vector ``a`` in old coordinates."""

    matrix: tuple
    labels: Optional[tuple] = None

    def __post_init__(self):
        m = tuple(tuple(rational(v) for v in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        # raises on singular or non-square input
        object.__setattr__(self, "_inverse", tuple(map(tuple, invert_rational(m))))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != len(m):
                raise ValueError("one label per new basis vector")

    @property
    def inverse(self) -> tuple:
        return self._inverse


def make_so4() -> StructureConstantAlgebra:
    """so(4) on (L_x, L_y, L_z, A_x, A_y, A_z)."""
    i = GaussianRational(0, 1)
    brackets = {}
    for (a, b, c), eps in _EPS.items():
        if a < b:
            s = i * eps
            brackets[(a, b)] = {c: s}              # [L, L] = iL
            brackets[(3 + a, 3 + b)] = {c: s}      # [A, A] = iL
        brackets[(a, 3 + b)] = {3 + c: i * eps}    # [L, A] = iA
    labels = ("L_x", "L_y", "L_z", "A_x", "A_y", "A_z")
    return StructureConstantAlgebra.from_brackets(labels, brackets)


def jacobi_check(a: StructureConstantAlgebra) -> bool:
    n = a.dim
    for i, j, k in itertools.combinations(range(n), 3):
        total = [ZERO] * n
        for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
            for m, fxy in a.bracket(x, y).items():
                for out, fmz in a.bracket(m, z).items():
                    total[out] = total[out] + fxy * fmz
        if any(total):
            return False
    return True


def change_basis(a: StructureConstantAlgebra, t: BasisChange) -> StructureConstantAlgebra:
    n = a.dim
    if len(t.matrix) != n:
        raise ValueError(f"basis change of size {len(t.matrix)} for a {n}-dimensional algebra")
    T, Tinv = t.matrix, t.inverse
    consts = {}
    for p, q in itertools.product(range(n), repeat=2):
        row = [ZERO] * n
        for (i, j, k), f in a.constants.items():
            c = T[p][i] * T[q][j]
            if c:
                row[k] = row[k] + f * c
        for k, coeff in enumerate(row):
            if not coeff:
                continue
            for r in range(n):
                if Tinv[k][r]:
                    consts[(p, q, r)] = consts.get((p, q, r), ZERO) + coeff * Tinv[k][r]
    labels = t.labels if t.labels is not None else tuple(f"b{idx}" for idx in range(n))
    return StructureConstantAlgebra(labels, consts)


def so4_split_basis() -> BasisChange:
    """``J+_i = (L_i + A_i)/2`` and ``J-_i = (L_i - A_i)/2``."""
    h = Fraction(1, 2)
    rows = []
    for sign in (1, -1):
        for i in range(3):
            row = [0] * 6
            row[i] = h
            row[3 + i] = sign * h
            rows.append(row)
    labels = ("J+_x", "J+_y", "J+_z", "J-_x", "J-_y", "J-_z")
    return BasisChange(tuple(map(tuple, rows)), labels)


def commuting_block_decomposition(a: StructureConstantAlgebra) -> list[list[int]]:
    """Finest partition of the basis into mutually commuting, bracket-closed blocks."""
    parent = list(range(a.dim))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j, k in a.constants:
        for y in (j, k):
            ri, ry = find(i), find(y)
            if ri != ry:
                parent[max(ri, ry)] = min(ri, ry)
    blocks: dict = {}
    for x in range(a.dim):
        blocks.setdefault(find(x), []).append(x)
    return sorted(blocks.values())


def su2_triples(a: StructureConstantAlgebra) -> list[tuple]:
    """Index triples whose three brackets each return the remaining element."""
    out = []
    for x, y, z in itertools.combinations(range(a.dim), 3):
        if all(
            set(a.bracket(p, q)) == {r}
            for p, q, r in ((x, y, z), (y, z, x), (z, x, y))
        ):
            out.append((x, y, z))
    return out


def is_standard_su2(a: StructureConstantAlgebra, block: Sequence[int]) -> bool:
    """True iff ``[J_p, J_q] = i eps_pqr J_r`` exactly on the ordered block."""
    if len(block) != 3:
        return False
    for p, q, r in itertools.product(range(3), repeat=3):
        want = GaussianRational(0, _EPS.get((p, q, r), 0))
        if a.f(block[p], block[q], block[r]) != want:
            return False
    return all(
        not a.f(block[p], block[q], k)
        for p, q in itertools.product(range(3), repeat=2)
        for k in range(a.dim)
        if k not in block
    )


UNIT_LABEL = "1"


def fano_arrangement_so4() -> IncidenceStructure:
    """The six so(4) generators plus the unit on seven lines.

    The four su(2) triples are oriented so that ``[x, y]`` is a positive
    imaginary multiple of ``z``; the three ``{L_i, A_i, 1}`` lines are
    commuting and carry no orientation.
    """
    alg = make_so4()
    labels = alg.basis_labels
    lines, kinds, orients = [], [], []
    for x, y, z in su2_triples(alg):
        c = alg.f(x, y, z)
        cyc = (x, y, z) if c.im > 0 else (y, x, z)
        r = cyc.index(min(cyc))
        cyc = cyc[r:] + cyc[:r]
        lines.append(frozenset(labels[t] for t in cyc))
        kinds.append(None)
        orients.append(tuple(labels[t] for t in cyc))
    for i in range(3):
        lines.append(frozenset((labels[i], labels[3 + i], UNIT_LABEL)))
        kinds.append(COMMUTING)
        orients.append(None)
    return IncidenceStructure(
        points=labels + (UNIT_LABEL,),
        lines=tuple(lines),
        line_kinds=tuple(kinds),
        line_orientations=tuple(orients),
    )


def algebra_to_dict(a: StructureConstantAlgebra) -> dict:
    return {
        "basis": list(a.basis_labels),
        "constants": [
            {"i": a.basis_labels[i], "j": a.basis_labels[j], "k": a.basis_labels[k], "value": str(f)}
            for (i, j, k), f in a.constants.items()
        ],
    }
