"""Exact scalar and matrix arithmetic.

Scalars are Gaussian rationals ``a + b*i`` with ``a`` and ``b`` held as Python
ints or :class:`fractions.Fraction`.  Integer-valued coefficients stay plain
ints so that bulk integer arithmetic (random octonion sampling, Pauli
matrices) does not pay the Fraction overhead.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


def rational(x) -> Rational:
    """Coerce ``x`` to an exact rational, reducing integral Fractions to int."""
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, numbers.Rational):
        return rational(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return rational(Fraction(x))
    raise TypeError(f"expected an exact rational, got {type(x).__name__}: {x!r}")


@dataclass(frozen=True)
class GaussianRational:
    re: Rational = 0
    im: Rational = 0

    def __post_init__(self):
        object.__setattr__(self, "re", rational(self.re))
        object.__setattr__(self, "im", rational(self.im))

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return cls(rational(x), 0)

    def __add__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Rational:
        return rational(self.re * self.re + self.im * self.im)

    def __truediv__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        d = o.norm2()
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * o.conjugate()
        return GaussianRational(Fraction(num.re) / d, Fraction(num.im) / d)

    def __rtruediv__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return o / self

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __eq__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        im = "i" if self.im == 1 else "-i" if self.im == -1 else f"{self.im}i"
        if self.re == 0:
            return im
        sign = "+" if not im.startswith("-") else "-"
        return f"{self.re}{sign}{im.lstrip('-')}"

    def __repr__(self):
        return f"GaussianRational({self})"


I = GaussianRational(0, 1)
ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)

#: Powers of i indexed by exponent mod 4.
I_POWERS = (ONE, I, GaussianRational(-1, 0), GaussianRational(0, -1))


def _coerce_or_none(x):
    if isinstance(x, GaussianRational):
        return x
    try:
        return GaussianRational(rational(x), 0)
    except TypeError:
        return None


@dataclass(frozen=True)
class ComplexMatrix:
    """Square matrix of Gaussian rationals, stored row-major as nested tuples."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(GaussianRational.coerce(v) for v in row) for row in self.rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("ComplexMatrix must be square")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, dim: int) -> "ComplexMatrix":
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(dim)) for i in range(dim)))

    @classmethod
    def zeros(cls, dim: int) -> "ComplexMatrix":
        return cls(tuple((ZERO,) * dim for _ in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        self._check_dim(other)
        return ComplexMatrix(
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows))
        )

    def __sub__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        self._check_dim(other)
        return ComplexMatrix(
            tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows))
        )

    def __neg__(self):
        return ComplexMatrix(tuple(tuple(-a for a in row) for row in self.rows))

    def scale(self, c) -> "ComplexMatrix":
        c = GaussianRational.coerce(c)
        return ComplexMatrix(tuple(tuple(c * a for a in row) for row in self.rows))

    def __matmul__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        self._check_dim(other)
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = ZERO
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(tuple(out_row))
        return ComplexMatrix(tuple(out))

    def kron(self, other: "ComplexMatrix") -> "ComplexMatrix":
        rows = []
        for ra in self.rows:
            for rb in other.rows:
                rows.append(tuple(a * b for a in ra for b in rb))
        return ComplexMatrix(tuple(rows))

    def commutator(self, other: "ComplexMatrix") -> "ComplexMatrix":
        return self @ other - other @ self

    def is_zero(self) -> bool:
        return not any(a for row in self.rows for a in row)

    def _check_dim(self, other):
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def tolist(self) -> list:
        return [[str(a) for a in row] for row in self.rows]

    def __str__(self):
        return "\n".join("[" + ", ".join(str(a) for a in row) + "]" for row in self.rows)


def kron_all(mats: Iterable[ComplexMatrix]) -> ComplexMatrix:
    out = ComplexMatrix.identity(1)
    for m in mats:
        out = out.kron(m)
    return out


def invert_rational(matrix: Sequence[Sequence]) -> list:
    """Invert a square rational matrix by Gauss-Jordan elimination.

    Raises ``ValueError`` if the matrix is singular or not square.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    aug = [[Fraction(rational(v)) for v in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [[rational(v) for v in row[n:]] for row in aug]
