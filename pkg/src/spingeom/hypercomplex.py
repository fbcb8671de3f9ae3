"""Exact quaternions and octonions.

The octonion product is driven entirely by the stored unit table
``OCTONION_TABLE`` (rows ``e1..e7`` times columns ``e1..e7``); the checks
below inspect that stored data rather than re-deriving it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .exact import ComplexMatrix, GaussianRational, rational
from .geometry import IncidenceStructure

# Row e_i, column e_j holds e_i * e_j.
_TABLE_ROWS = (
    "-1   e4  e7 -e2  e6 -e5 -e3",
    "-e4 -1   e5  e1 -e3  e7 -e6",
    "-e7 -e5 -1   e6  e2 -e4  e1",
    " e2 -e1 -e6 -1   e7  e3 -e5",
    "-e6  e3 -e2 -e7 -1   e1  e4",
    " e5 -e7  e4 -e3 -e1 -1   e2",
    " e3  e6 -e1  e5 -e4 -e2 -1 ",
)


@dataclass(frozen=True)
class UnitProduct:
    """``sign * e_index``; index 0 is the real unit."""

    sign: int
    index: int

    def __str__(self):
        unit = "1" if self.index == 0 else f"e{self.index}"
        return ("-" if self.sign < 0 else "") + unit


@dataclass(frozen=True)
class SignedTriad:
    """``e_i * e_j = sign * e_k``."""

    i: int
    j: int
    k: int
    sign: int

    def __post_init__(self):
        if len({self.i, self.j, self.k}) != 3 or not all(1 <= t <= 7 for t in (self.i, self.j, self.k)):
            raise ValueError(f"triad indices must be distinct in 1..7: {(self.i, self.j, self.k)}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")


def _parse_entry(tok: str) -> UnitProduct:
    sign = -1 if tok.startswith("-") else 1
    body = tok.lstrip("+-")
    return UnitProduct(sign, 0 if body == "1" else int(body[1:]))


OCTONION_TABLE: tuple = tuple(tuple(_parse_entry(t) for t in row.split()) for row in _TABLE_ROWS)


def oct_table() -> tuple:
    """7x7 tuple of :class:`UnitProduct`; ``oct_table()[i-1][j-1]`` is ``e_i e_j``."""
    return OCTONION_TABLE


def _full_unit_table(table: Sequence[Sequence[UnitProduct]]):
    # 8x8 (sign, index) including the real unit, flattened into a product list
    full = [[None] * 8 for _ in range(8)]
    for a in range(8):
        full[0][a] = (1, a)
        full[a][0] = (1, a)
    for i in range(1, 8):
        for j in range(1, 8):
            e = table[i - 1][j - 1]
            full[i][j] = (e.sign, e.index)
    return tuple((a, b, s, c) for a in range(8) for b in range(8) for s, c in [full[a][b]])


_PRODUCTS = _full_unit_table(OCTONION_TABLE)


class Octonion:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = (0,) * 8):
        coeffs = tuple(rational(c) for c in coeffs)
        if len(coeffs) != 8:
            raise ValueError("an octonion has 8 coefficients")
        self.coeffs = coeffs

    @classmethod
    def unit(cls, k: int, sign: int = 1) -> "Octonion":
        c = [0] * 8
        c[k] = sign
        return cls(c)

    @classmethod
    def real(cls, x) -> "Octonion":
        return cls((x,) + (0,) * 7)

    def __add__(self, other):
        return Octonion(tuple(a + b for a, b in zip(self.coeffs, _as_oct(other).coeffs)))

    def __sub__(self, other):
        return Octonion(tuple(a - b for a, b in zip(self.coeffs, _as_oct(other).coeffs)))

    def __neg__(self):
        return Octonion(tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        return oct_mul(self, _as_oct(other))

    def __rmul__(self, other):
        return oct_mul(_as_oct(other), self)

    def conj(self) -> "Octonion":
        return Octonion((self.coeffs[0],) + tuple(-a for a in self.coeffs[1:]))

    def norm2(self):
        return rational(sum(a * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Octonion):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == Octonion.real(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*e{k}")
        return "Octonion(" + (" + ".join(terms) or "0") + ")"


def _as_oct(x) -> Octonion:
    return x if isinstance(x, Octonion) else Octonion.real(x)


def oct_mul(a: Octonion, b: Octonion, table: Optional[Sequence] = None) -> Octonion:
    products = _PRODUCTS if table is None else _full_unit_table(table)
    ac, bc = a.coeffs, b.coeffs
    out = [0] * 8
    for i, j, s, k in products:
        x = ac[i]
        if x:
            y = bc[j]
            if y:
                out[k] += s * x * y
    return Octonion(out)


def associator(x: Octonion, y: Octonion, z: Octonion) -> Octonion:
    return (x * y) * z - x * (y * z)


def norm_composition_check(x: Octonion, y: Octonion) -> bool:
    return (x * y).norm2() == x.norm2() * y.norm2()


def verify_sign_balance(table: Optional[Sequence] = None) -> bool:
    """Each row and column has three plus and three minus off-diagonal entries."""
    t = OCTONION_TABLE if table is None else table
    for idx in range(7):
        row = [t[idx][j].sign for j in range(7) if j != idx]
        col = [t[i][idx].sign for i in range(7) if i != idx]
        if row.count(1) != 3 or row.count(-1) != 3:
            return False
        if col.count(1) != 3 or col.count(-1) != 3:
            return False
    return True


def sign_counts(row: int, table: Optional[Sequence] = None) -> tuple[int, int]:
    """(plus, minus) counts over the off-diagonal entries of row ``e_row``."""
    t = OCTONION_TABLE if table is None else table
    signs = [t[row - 1][j].sign for j in range(7) if j != row - 1]
    return signs.count(1), signs.count(-1)


def wrap_index(n: int) -> int:
    return (n - 1) % 7 + 1


def verify_index_rules(table: Optional[Sequence] = None) -> bool:
    """``e_i e_j = s e_k`` implies the same for indices shifted by one and doubled."""
    t = OCTONION_TABLE if table is None else table
    for i, j in itertools.permutations(range(1, 8), 2):
        e = t[i - 1][j - 1]
        if e.index == 0:
            return False
        for step in (lambda n: n + 1, lambda n: 2 * n):
            i2, j2, k2 = (wrap_index(step(n)) for n in (i, j, e.index))
            if t[i2 - 1][j2 - 1] != UnitProduct(e.sign, k2):
                return False
    return True


def fano_triads(table: Optional[Sequence] = None) -> list[SignedTriad]:
    """One positively oriented triad per line, rotated to start at its least index."""
    t = OCTONION_TABLE if table is None else table
    seen = set()
    out = []
    for i, j in itertools.combinations(range(1, 8), 2):
        e = t[i - 1][j - 1]
        line = frozenset((i, j, e.index))
        if line in seen:
            continue
        seen.add(line)
        cyc = (i, j, e.index) if e.sign > 0 else (j, i, e.index)
        r = cyc.index(min(cyc))
        cyc = cyc[r:] + cyc[:r]
        out.append(SignedTriad(cyc[0], cyc[1], cyc[2], 1))
    return sorted(out, key=lambda tr: (tr.i, tr.j, tr.k))


def fano_from_table(table: Optional[Sequence] = None) -> IncidenceStructure:
    triads = fano_triads(table)
    return IncidenceStructure(
        points=tuple(f"e{k}" for k in range(1, 8)),
        lines=tuple(frozenset(f"e{x}" for x in (tr.i, tr.j, tr.k)) for tr in triads),
        line_orientations=tuple(tuple(f"e{x}" for x in (tr.i, tr.j, tr.k)) for tr in triads),
    )


# Quaternion units 1, i, j, k share the product rule ij = k = -ji (cyclic).
_QUAT_PRODUCTS = (
    (0, 0, 1, 0), (0, 1, 1, 1), (0, 2, 1, 2), (0, 3, 1, 3),
    (1, 0, 1, 1), (1, 1, -1, 0), (1, 2, 1, 3), (1, 3, -1, 2),
    (2, 0, 1, 2), (2, 1, -1, 3), (2, 2, -1, 0), (2, 3, 1, 1),
    (3, 0, 1, 3), (3, 1, 1, 2), (3, 2, -1, 1), (3, 3, -1, 0),
)


@dataclass(frozen=True)
class Quaternion:
    w: object = 0
    x: object = 0
    y: object = 0
    z: object = 0

    def __post_init__(self):
        for name in ("w", "x", "y", "z"):
            object.__setattr__(self, name, rational(getattr(self, name)))

    @property
    def coeffs(self) -> tuple:
        return (self.w, self.x, self.y, self.z)

    def __add__(self, other):
        return Quaternion(*(a + b for a, b in zip(self.coeffs, _as_quat(other).coeffs)))

    def __sub__(self, other):
        return Quaternion(*(a - b for a, b in zip(self.coeffs, _as_quat(other).coeffs)))

    def __neg__(self):
        return Quaternion(*(-a for a in self.coeffs))

    def __mul__(self, other):
        return quat_mul(self, _as_quat(other))

    def __rmul__(self, other):
        return quat_mul(_as_quat(other), self)

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self):
        return rational(sum(a * a for a in self.coeffs))


def _as_quat(x) -> Quaternion:
    return x if isinstance(x, Quaternion) else Quaternion(x)


QI = Quaternion(0, 1, 0, 0)
QJ = Quaternion(0, 0, 1, 0)
QK = Quaternion(0, 0, 0, 1)


def quat_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    ac, bc = a.coeffs, b.coeffs
    out = [0] * 4
    for i, j, s, k in _QUAT_PRODUCTS:
        out[k] += s * ac[i] * bc[j]
    return Quaternion(*out)


_MINUS_I = GaussianRational(0, -1)
_SIGMA = (
    ComplexMatrix(((0, 1), (1, 0))),
    ComplexMatrix(((0, GaussianRational(0, -1)), (GaussianRational(0, 1), 0))),
    ComplexMatrix(((1, 0), (0, -1))),
)
# i -> -i sigma_x, j -> -i sigma_y, k -> -i sigma_z
_QUAT_IMAGES = (ComplexMatrix.identity(2),) + tuple(s.scale(_MINUS_I) for s in _SIGMA)


def quat_to_pauli(q: Quaternion) -> ComplexMatrix:
    out = ComplexMatrix.zeros(2)
    for c, m in zip(q.coeffs, _QUAT_IMAGES):
        if c:
            out = out + m.scale(c)
    return out
