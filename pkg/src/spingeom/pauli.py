"""N-qubit Pauli strings in the binary symplectic representation.

A string on ``n`` qubits is a pair of packed GF(2) words ``(x_bits, z_bits)``.
Qubit 0 (the first label character) sits in the most significant bit, so
integer order on ``(x_bits, z_bits)`` is lexicographic order on the bit
vectors.  Per qubit::

    (x, z) = (0, 0) -> I
             (1, 0) -> X
             (1, 1) -> Y
             (0, 1) -> Z

The canonical matrix of a string is the plain tensor product of I, X, Y, Z
(no hidden factors of i); :class:`PhasedPauli` carries an extra ``i**k``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

import networkx as nx

from .exact import I_POWERS, ComplexMatrix, GaussianRational, kron_all

__all__ = [
    "PauliString",
    "PhasedPauli",
    "PauliParseError",
    "BoundExceeded",
    "ComplexMatrix",
    "parse_pauli",
    "parse_string",
    "multiply",
    "commutes",
    "symplectic_form",
    "to_matrix",
    "all_points",
    "degree",
    "commutation_graph",
    "centralizer",
    "MATRIX_QUBIT_BOUND",
    "GRAPH_QUBIT_BOUND",
]

MATRIX_QUBIT_BOUND = 10
GRAPH_QUBIT_BOUND = 8

_CHAR_TO_XZ = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_XZ_TO_CHAR = {v: k for k, v in _CHAR_TO_XZ.items()}
_PREFIXES = {"": 0, "+": 0, "+i": 1, "-": 2, "-i": 3}
_PHASE_PREFIX = ("+", "+i", "-", "-i")

_SINGLE = {
    "I": ComplexMatrix(((1, 0), (0, 1))),
    "X": ComplexMatrix(((0, 1), (1, 0))),
    "Y": ComplexMatrix(((0, GaussianRational(0, -1)), (GaussianRational(0, 1), 0))),
    "Z": ComplexMatrix(((1, 0), (0, -1))),
}


class PauliParseError(ValueError):
    pass


class BoundExceeded(ValueError):
    """An exhaustive operation was asked for more qubits than its bound allows."""


@dataclass(frozen=True, order=True)
class PauliString:
    n_qubits: int
    x_bits: int
    z_bits: int

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("n_qubits must be positive")
        mask = (1 << self.n_qubits) - 1
        if not (0 <= self.x_bits <= mask and 0 <= self.z_bits <= mask):
            raise ValueError(f"bit vectors do not fit in {self.n_qubits} qubits")

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(n, 0, 0)

    @property
    def is_identity(self) -> bool:
        return self.x_bits == 0 and self.z_bits == 0

    @property
    def weight(self) -> int:
        return (self.x_bits | self.z_bits).bit_count()

    @property
    def label(self) -> str:
        n = self.n_qubits
        return "".join(
            _XZ_TO_CHAR[(self.x_bits >> (n - 1 - q)) & 1, (self.z_bits >> (n - 1 - q)) & 1]
            for q in range(n)
        )

    def __mul__(self, other: "PauliString") -> "PauliString":
        """Projective product: phases are dropped."""
        _check_same_n(self, other)
        return PauliString(self.n_qubits, self.x_bits ^ other.x_bits, self.z_bits ^ other.z_bits)

    def __str__(self):
        return self.label

    def __repr__(self):
        return f"PauliString({self.label!r})"


@dataclass(frozen=True)
class PhasedPauli:
    string: PauliString
    phase_exp: int = 0

    def __post_init__(self):
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    @property
    def n_qubits(self) -> int:
        return self.string.n_qubits

    @property
    def label(self) -> str:
        return _PHASE_PREFIX[self.phase_exp] + self.string.label

    def __mul__(self, other: "PhasedPauli") -> "PhasedPauli":
        return multiply(self, other)

    def __str__(self):
        return self.label

    def __repr__(self):
        return f"PhasedPauli({self.label!r})"


def _check_same_n(a: PauliString, b: PauliString):
    if a.n_qubits != b.n_qubits:
        raise ValueError(f"qubit-count mismatch: {a.n_qubits} vs {b.n_qubits}")


def parse_pauli(label: str, n: int | None = None) -> PhasedPauli:
    """Parse labels such as ``"XY"``, ``"-iZI"`` or ``"+YY"``."""
    text = label.strip().replace("−", "-")
    prefix = ""
    if text[:1] in ("+", "-"):
        prefix = text[0]
        text = text[1:]
        if text[:1] == "i":
            prefix += "i"
            text = text[1:]
    body = text
    for pos, ch in enumerate(body):
        if ch not in _CHAR_TO_XZ:
            raise PauliParseError(
                f"invalid character {ch!r} at position {pos + len(prefix)} in Pauli label {label!r}"
            )
    if not body:
        raise PauliParseError(f"empty Pauli label {label!r}")
    if n is not None and len(body) != n:
        raise PauliParseError(f"label {label!r} has {len(body)} qubits, expected {n}")
    x = z = 0
    for ch in body:
        xb, zb = _CHAR_TO_XZ[ch]
        x = (x << 1) | xb
        z = (z << 1) | zb
    return PhasedPauli(PauliString(len(body), x, z), _PREFIXES[prefix])


def parse_string(label: str, n: int | None = None) -> PauliString:
    """Parse a phaseless label; any phase prefix is rejected."""
    p = parse_pauli(label, n)
    if p.phase_exp:
        raise PauliParseError(f"unexpected phase in point label {label!r}")
    return p.string


def _as_string(p) -> PauliString:
    if isinstance(p, PhasedPauli):
        return p.string
    if isinstance(p, str):
        return parse_string(p)
    return p


def _as_phased(p) -> PhasedPauli:
    if isinstance(p, PauliString):
        return PhasedPauli(p, 0)
    if isinstance(p, str):
        return parse_pauli(p)
    return p


def multiply(a, b) -> PhasedPauli:
    """Exact product of two (phased) Pauli operators.

    With the canonical matrix written as ``i**(x.z) X**x Z**z``, moving
    ``Z**z1`` past ``X**x2`` costs ``(-1)**(z1.x2)``, giving the exponent
    ``x1.z1 + x2.z2 + 2 z1.x2 - x3.z3`` (popcounts, mod 4).
    """
    a, b = _as_phased(a), _as_phased(b)
    sa, sb = a.string, b.string
    _check_same_n(sa, sb)
    x3 = sa.x_bits ^ sb.x_bits
    z3 = sa.z_bits ^ sb.z_bits
    k = (
        a.phase_exp
        + b.phase_exp
        + (sa.x_bits & sa.z_bits).bit_count()
        + (sb.x_bits & sb.z_bits).bit_count()
        + 2 * (sa.z_bits & sb.x_bits).bit_count()
        - (x3 & z3).bit_count()
    )
    return PhasedPauli(PauliString(sa.n_qubits, x3, z3), k)


def symplectic_form(a, b) -> int:
    """GF(2) symplectic form ``x_a.z_b + z_a.x_b``."""
    a, b = _as_string(a), _as_string(b)
    _check_same_n(a, b)
    return ((a.x_bits & b.z_bits) ^ (a.z_bits & b.x_bits)).bit_count() & 1


def commutes(a, b) -> bool:
    return symplectic_form(a, b) == 0


def to_matrix(p, bound: int = MATRIX_QUBIT_BOUND) -> ComplexMatrix:
    p = _as_phased(p)
    if p.n_qubits > bound:
        raise BoundExceeded(f"to_matrix limited to {bound} qubits, got {p.n_qubits}")
    m = kron_all(_SINGLE[ch] for ch in p.string.label)
    return m.scale(I_POWERS[p.phase_exp]) if p.phase_exp else m


def all_points(n: int) -> list[PauliString]:
    """All ``4**n - 1`` non-identity strings in canonical order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    size = 1 << n
    return [
        PauliString(n, x, z)
        for x, z in itertools.product(range(size), repeat=2)
        if x or z
    ]


def degree(n: int) -> int:
    """Number of other points commuting with any fixed point of W(2n-1, 2)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    v = 4**n - 1
    return v - 1 - 2 ** (2 * n - 1)


def commutation_graph(n: int, bound: int = GRAPH_QUBIT_BOUND) -> nx.Graph:
    if n > bound:
        raise BoundExceeded(f"commutation_graph limited to {bound} qubits, got {n}")
    pts = all_points(n)
    g = nx.Graph()
    g.add_nodes_from(pts)
    for i, a in enumerate(pts):
        ax, az = a.x_bits, a.z_bits
        for b in pts[i + 1 :]:
            if not ((ax & b.z_bits) ^ (az & b.x_bits)).bit_count() & 1:
                g.add_edge(a, b)
    return g


def centralizer(p, n: int | None = None) -> frozenset[PauliString]:
    """Non-identity strings commuting with ``p``, excluding ``p`` itself."""
    p = _as_string(p)
    if n is not None and n != p.n_qubits:
        raise ValueError(f"qubit-count mismatch: {p.n_qubits} vs {n}")
    if p.is_identity:
        raise ValueError("centralizer of the identity is not a geometric object")
    return frozenset(q for q in all_points(p.n_qubits) if q != p and commutes(p, q))


def labels(points: Iterable[PauliString]) -> list[str]:
    return [p.label for p in sorted(points)]
