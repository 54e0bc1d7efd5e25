"""Exact integer lattice arithmetic: tagged vectors, pairings, Smith normal form.

Everything here is plain ``int`` arithmetic (arbitrary precision); no floats are
used anywhere in the package. Vectors carry the name of the lattice they live in
so that a functional on one lattice can never be paired against a vector of
another by accident.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional, Sequence


class RankMismatch(ValueError):
    """Raised when two vectors of different rank (or lattice) are combined."""


def _as_int_tuple(coords) -> tuple:
    out = tuple(int(c) for c in coords)
    if any(isinstance(c, bool) for c in coords):
        raise TypeError("vector coordinates must be integers")
    return out


@dataclass(frozen=True)
class LatticeVector:
    """A point of a lattice, e.g. a weight in M or a character in X(T)."""

    coords: tuple
    lattice: str = "M"

    def __post_init__(self):
        object.__setattr__(self, "coords", _as_int_tuple(self.coords))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def _check(self, other):
        if self.lattice != other.lattice:
            raise RankMismatch(
                f"vectors live in different lattices: {self.lattice!r} vs {other.lattice!r}"
            )
        if len(self.coords) != len(other.coords):
            raise RankMismatch(
                f"rank mismatch: {len(self.coords)} vs {len(other.coords)}"
            )

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        self._check(other)
        return LatticeVector(tuple(a + b for a, b in zip(self.coords, other.coords)), self.lattice)

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        self._check(other)
        return LatticeVector(tuple(a - b for a, b in zip(self.coords, other.coords)), self.lattice)

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(tuple(-a for a in self.coords), self.lattice)

    def __mul__(self, n: int) -> "LatticeVector":
        return LatticeVector(tuple(n * a for a in self.coords), self.lattice)

    __rmul__ = __mul__


@dataclass(frozen=True)
class DualVector:
    """An integral functional on the lattice named by ``lattice``.

    Valuation vectors kappa(D) and cone ray generators are DualVectors; weights
    are LatticeVectors. The pairing below only accepts a matching pair.
    """

    coords: tuple
    lattice: str = "M"

    def __post_init__(self):
        object.__setattr__(self, "coords", _as_int_tuple(self.coords))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def _check(self, other):
        if self.lattice != other.lattice:
            raise RankMismatch(
                f"functionals on different lattices: {self.lattice!r} vs {other.lattice!r}"
            )
        if len(self.coords) != len(other.coords):
            raise RankMismatch(
                f"rank mismatch: {len(self.coords)} vs {len(other.coords)}"
            )

    def __add__(self, other: "DualVector") -> "DualVector":
        self._check(other)
        return DualVector(tuple(a + b for a, b in zip(self.coords, other.coords)), self.lattice)

    def __sub__(self, other: "DualVector") -> "DualVector":
        self._check(other)
        return DualVector(tuple(a - b for a, b in zip(self.coords, other.coords)), self.lattice)

    def __neg__(self) -> "DualVector":
        return DualVector(tuple(-a for a in self.coords), self.lattice)

    def __mul__(self, n: int) -> "DualVector":
        return DualVector(tuple(n * a for a in self.coords), self.lattice)

    __rmul__ = __mul__


def pairing(rho: DualVector, lam: LatticeVector) -> int:
    """<rho, lambda>: the integer value of the functional rho on lambda."""
    if not isinstance(rho, DualVector) or not isinstance(lam, LatticeVector):
        raise TypeError("pairing takes (DualVector, LatticeVector)")
    if rho.lattice != lam.lattice:
        raise RankMismatch(
            f"cannot pair a functional on {rho.lattice!r} with a vector of {lam.lattice!r}"
        )
    if rho.rank != lam.rank:
        raise RankMismatch(f"rank mismatch: {rho.rank} vs {lam.rank}")
    return sum(a * b for a, b in zip(rho.coords, lam.coords))


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) != len(b):
        raise RankMismatch(f"rank mismatch: {len(a)} vs {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def content(coords: Iterable[int]) -> int:
    g = 0
    for c in coords:
        g = gcd(g, abs(c))
    return g


def primitive_tuple(coords: Sequence[int]) -> tuple:
    """Divide out the gcd of the coordinates, keeping direction and sign."""
    g = content(coords)
    if g == 0:
        raise ValueError("the zero vector has no primitive representative")
    return tuple(c // g for c in coords)


def primitive(v):
    """Primitive vector on the same ray: v / gcd(coords). Sign is preserved."""
    if isinstance(v, LatticeVector):
        return LatticeVector(primitive_tuple(v.coords), v.lattice)
    if isinstance(v, DualVector):
        return DualVector(primitive_tuple(v.coords), v.lattice)
    raise TypeError("primitive expects a LatticeVector or DualVector")


# ---------------------------------------------------------------------------
# Integer matrices (lists of row tuples) and Smith normal form.
# ---------------------------------------------------------------------------


def _identity(n: int):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(matrix: Sequence[Sequence[int]]):
    """Return (U, D, V) with U * A * V = D over the integers.

    U (m x m) and V (n x n) are unimodular; D is diagonal with nonnegative
    entries d_1 | d_2 | ... . Matrices are returned as tuples of row tuples.
    """
    A = [list(_as_int_tuple(row)) for row in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    if any(len(row) != n for row in A):
        raise ValueError("ragged matrix")
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        A[dst] = [a + c * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, c):
        for row in A:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    def negate_row(i):
        A[i] = [-a for a in A[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while t < min(m, n):
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] != 0 and (best is None or abs(A[i][j]) < best):
                    best = abs(A[i][j])
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            swap_rows(t, pivot[0])
        if pivot[1] != t:
            swap_cols(t, pivot[1])
        while True:
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(t, i, -(A[i][t] // A[t][t]))
            rem = [i for i in range(t + 1, m) if A[i][t]]
            if rem:
                i = min(rem, key=lambda k: (abs(A[k][t]), k))
                swap_rows(t, i)
                continue
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(t, j, -(A[t][j] // A[t][t]))
            rem = [j for j in range(t + 1, n) if A[t][j]]
            if rem:
                j = min(rem, key=lambda k: (abs(A[t][k]), k))
                swap_cols(t, j)
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % A[t][t] != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(bad, t, 1)
        if A[t][t] < 0:
            negate_row(t)
        t += 1

    to_t = lambda M: tuple(tuple(row) for row in M)
    return to_t(U), to_t(A), to_t(V)


def invariant_factors(matrix) -> tuple:
    _, D, _ = smith_normal_form(matrix)
    return tuple(D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i] != 0)


def matrix_rank(matrix) -> int:
    rows = [row for row in matrix if any(row)]
    if not rows:
        return 0
    return len(invariant_factors(rows))


def integer_kernel(rows: Sequence[Sequence[int]], n: int):
    """Basis of {v in Z^n : <row, v> = 0 for every row}, as a list of tuples.

    The basis spans a saturated sublattice (it is the full integer kernel).
    """
    rows = [tuple(r) for r in rows if any(r)]
    if not rows:
        return [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    if any(len(r) != n for r in rows):
        raise ValueError("row length does not match n")
    _, D, V = smith_normal_form(rows)
    m = len(rows)
    nonzero = sum(1 for i in range(min(m, n)) if D[i][i] != 0)
    basis = []
    for j in range(nonzero, n):
        basis.append(tuple(V[i][j] for i in range(n)))
    return basis


def integer_row_solve(basis_rows: Sequence[Sequence[int]], target: Sequence[int]):
    """Solve x * B = target for integer x, where B has the given rows.

    Returns the coefficient tuple, or None when no integer solution exists.
    """
    B = [tuple(r) for r in basis_rows]
    r = len(B)
    if r == 0:
        return () if not any(target) else None
    n = len(B[0])
    if len(target) != n:
        raise RankMismatch(f"target rank {len(target)} does not match columns {n}")
    # x*B = t  <=>  B^T x^T = t^T; with U (B^T) V = D this becomes D (V^-1 x^T) = U t^T.
    At = [[B[i][j] for i in range(r)] for j in range(n)]
    U, D, V = smith_normal_form(At)
    w = [dot(U[i], target) for i in range(n)]
    y = [0] * r
    for i in range(n):
        d = D[i][i] if i < min(n, r) else 0
        if d != 0:
            if w[i] % d != 0:
                return None
            y[i] = w[i] // d
        elif w[i] != 0:
            return None
    x = [dot(V[i], y) for i in range(r)]
    return tuple(x)


def unimodular_inverse(matrix: Sequence[Sequence[int]]):
    """Inverse of a unimodular integer matrix, as integer row tuples."""
    from fractions import Fraction

    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    inv = []
    for i in range(n):
        row = aug[i][n:]
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        inv.append(tuple(int(x) for x in row))
    return tuple(inv)


@dataclass(frozen=True)
class Sublattice:
    """A finite-rank subgroup of Z^ambient_rank given by full-row-rank basis rows."""

    ambient_rank: int
    basis_rows: tuple
    lattice: str = "X(T)"

    def __post_init__(self):
        rows = tuple(_as_int_tuple(r) for r in self.basis_rows)
        object.__setattr__(self, "basis_rows", rows)
        if any(len(r) != self.ambient_rank for r in rows):
            raise ValueError("basis row length does not match ambient rank")
        if rows and matrix_rank(rows) != len(rows):
            raise ValueError("basis rows are not linearly independent")

    @classmethod
    def full(cls, rank: int, lattice: str = "X(T)") -> "Sublattice":
        return cls(rank, tuple(tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank)),
                   lattice)

    @property
    def rank(self) -> int:
        return len(self.basis_rows)

    @property
    def is_full(self) -> bool:
        return (self.rank == self.ambient_rank
                and all(d == 1 for d in invariant_factors(self.basis_rows)))

    def coordinates(self, v: LatticeVector) -> Optional[tuple]:
        """Coefficients of v in the basis rows, or None when v is not in the sublattice."""
        if v.lattice != self.lattice:
            raise RankMismatch(
                f"vector of {v.lattice!r} tested against a sublattice of {self.lattice!r}")
        if v.rank != self.ambient_rank:
            raise RankMismatch(f"rank mismatch: {v.rank} vs {self.ambient_rank}")
        return integer_row_solve(self.basis_rows, v.coords)

    def contains(self, v: LatticeVector) -> bool:
        return self.coordinates(v) is not None

    def embed(self, coeffs: Sequence[int]) -> LatticeVector:
        """The ambient vector sum_i coeffs[i] * basis_rows[i]."""
        if len(coeffs) != self.rank:
            raise RankMismatch(f"expected {self.rank} coefficients, got {len(coeffs)}")
        coords = [0] * self.ambient_rank
        for c, row in zip(coeffs, self.basis_rows):
            for j in range(self.ambient_rank):
                coords[j] += c * row[j]
        return LatticeVector(tuple(coords), self.lattice)
