"""Exact integer lattice arithmetic.

Matrices are lists of rows of Python ints, so entries never overflow.
The Smith form drives the quotient-group reducer; the Hermite form backs
an independent membership test used to cross-check it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import InvalidInputError

Matrix = list  # list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix, inner: Optional[int] = None) -> Matrix:
    if inner is None:
        inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)] for row in a]


def determinant(a: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def columns_to_matrix(vectors: Sequence[Sequence[int]], dim: int) -> Matrix:
    """Matrix whose columns are ``vectors`` (``dim`` rows, possibly zero columns)."""
    for v in vectors:
        if len(v) != dim:
            raise InvalidInputError(f"expected vectors of length {dim}, got length {len(v)}")
    return [[int(v[i]) for v in vectors] for i in range(dim)]


# -- Smith normal form -------------------------------------------------------


@dataclass(frozen=True)
class SNFDecomposition:
    """``U * R * V == D`` with ``U``, ``V`` unimodular and ``D`` diagonal."""

    U: tuple
    D: tuple
    V: tuple

    @property
    def diagonal(self) -> tuple:
        n = min(len(self.D), len(self.V))
        return tuple(self.D[i][i] for i in range(n))


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m, src, dst, q):
    """row[dst] += q * row[src]"""
    rs, rd = m[src], m[dst]
    for c in range(len(rd)):
        rd[c] += q * rs[c]


def _add_col(m, src, dst, q):
    """col[dst] += q * col[src]"""
    for row in m:
        row[dst] += q * row[src]


def smith_normal_form(R: Sequence[Sequence[int]], ncols: Optional[int] = None) -> SNFDecomposition:
    """Smith normal form of an integer matrix.

    The pivot at each stage is the nonzero entry of least absolute value in
    the remaining block, ties broken by lowest row then lowest column, so
    the output is a deterministic function of ``R``.  ``ncols`` is only
    needed to give a shape to a matrix with no rows.
    """
    A = [[int(x) for x in row] for row in R]
    r = len(A)
    c = len(A[0]) if A else (ncols or 0)
    if ncols is not None and ncols != c:
        raise InvalidInputError(f"ncols={ncols} disagrees with matrix width {c}")
    if any(len(row) != c for row in A):
        raise InvalidInputError("ragged matrix")
    U = identity(r)
    V = identity(c)

    for t in range(min(r, c)):
        while True:
            best = None
            for i in range(t, r):
                row = A[i]
                for j in range(t, c):
                    x = row[j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, pi, pj = best
            if pi != t:
                _swap_rows(A, t, pi)
                _swap_rows(U, t, pi)
            if pj != t:
                _swap_cols(A, t, pj)
                _swap_cols(V, t, pj)
            p = A[t][t]
            clean = True
            for i in range(t + 1, r):
                if A[i][t]:
                    q = A[i][t] // p
                    _add_row(A, t, i, -q)
                    _add_row(U, t, i, -q)
                    clean = clean and A[i][t] == 0
            for j in range(t + 1, c):
                if A[t][j]:
                    q = A[t][j] // p
                    _add_col(A, t, j, -q)
                    _add_col(V, t, j, -q)
                    clean = clean and A[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, r) if any(A[i][j] % p for j in range(t + 1, c))),
                None,
            )
            if bad is None:
                break
            # pull the offending row into the pivot row; column reduction then
            # leaves a remainder smaller than |p|
            _add_row(A, bad, t, 1)
            _add_row(U, bad, t, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]

    freeze = lambda m: tuple(tuple(row) for row in m)
    return SNFDecomposition(freeze(U), freeze(A), freeze(V))


# -- Hermite normal form -----------------------------------------------------


def hermite_normal_form(R: Sequence[Sequence[int]]) -> Matrix:
    """Column-style Hermite normal form of the lattice spanned by the columns of ``R``.

    The result is lower triangular in echelon shape with only the nonzero
    columns kept: each column's first nonzero entry (its pivot) is
    positive, pivot rows strictly increase, and entries to the left of a
    pivot lie in ``[0, pivot)``.
    """
    A = [[int(x) for x in row] for row in R]
    n = len(A)
    m = len(A[0]) if A else 0
    c = 0
    for r in range(n):
        if c == m:
            break
        row = A[r]
        while True:
            nz = [j for j in range(c, m) if row[j]]
            if not nz:
                break
            j0 = min(nz, key=lambda j: (abs(row[j]), j))
            if j0 != c:
                _swap_cols(A, c, j0)
            if len(nz) == 1:
                break
            p = row[c]
            for j in range(c + 1, m):
                if row[j]:
                    _add_col(A, c, j, -(row[j] // p))
        if row[c] == 0:
            continue
        if row[c] < 0:
            for rr in A:
                rr[c] = -rr[c]
        p = row[c]
        for j in range(c):
            q = row[j] // p
            if q:
                _add_col(A, c, j, -q)
        c += 1
    return [row[:c] for row in A]


def lattice_member(vectors: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """True iff ``v`` is an integer combination of ``vectors``.

    Decided by back substitution against the Hermite form, without
    touching the Smith form machinery.
    """
    dim = len(v)
    H = hermite_normal_form(columns_to_matrix(vectors, dim))
    w = [int(x) for x in v]
    ncols = len(H[0]) if H else 0
    r = 0
    for j in range(ncols):
        while H[r][j] == 0:
            if w[r]:
                return False
            r += 1
        q, rem = divmod(w[r], H[r][j])
        if rem:
            return False
        if q:
            for i in range(r, dim):
                w[i] -= q * H[i][j]
        r += 1
    return not any(w[r:])


# -- quotient groups ---------------------------------------------------------


@dataclass(frozen=True)
class ClassCoordinate:
    """Canonical form of an element of ``Z^r + Z/d1 + ... + Z/dk``.

    ``moduli`` records the invariant factors so the coordinate can print
    itself; residues in ``torsion`` lie in ``[0, d)``.
    """

    free: tuple = ()
    torsion: tuple = ()
    moduli: tuple = ()

    def is_zero(self) -> bool:
        return not any(self.free) and not any(self.torsion)

    def sort_key(self):
        return (self.free, self.torsion)

    def __lt__(self, other: "ClassCoordinate"):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        if self.free:
            parts.append("(" + ", ".join(str(x) for x in self.free) + ")")
        parts.extend(f"{r} mod {d}" for r, d in zip(self.torsion, self.moduli))
        return " + ".join(parts)

    def as_dict(self) -> dict:
        return {"free": list(self.free), "torsion": list(self.torsion)}


@dataclass(frozen=True)
class QuotientGroup:
    """``Z^rank / L`` where ``L`` is spanned by the columns of ``relations``."""

    rank: int
    relations: tuple
    snf: SNFDecomposition = field(repr=False)
    invariant_factors: tuple
    free_rank: int

    def __hash__(self):
        return hash((self.rank, self.relations))

    @property
    def diagonal(self) -> tuple:
        """Diagonal of ``D`` padded with zeros to length ``rank``."""
        d = self.snf.diagonal
        return d + (0,) * (self.rank - len(d))

    @property
    def order(self) -> Optional[int]:
        if self.free_rank:
            return None
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def zero(self) -> ClassCoordinate:
        return ClassCoordinate((0,) * self.free_rank, (0,) * len(self.invariant_factors), self.invariant_factors)

    def __str__(self):
        if self.is_trivial():
            return "0"
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        return " + ".join(parts)


def build_quotient(vectors: Sequence[Sequence[int]], g: int) -> QuotientGroup:
    """The group ``Z^(2g)`` modulo the lattice spanned by ``vectors``."""
    dim = 2 * g
    R = columns_to_matrix(vectors, dim)
    snf = smith_normal_form(R, ncols=len(vectors))
    diag = snf.diagonal + (0,) * (dim - len(snf.diagonal))
    return QuotientGroup(
        rank=dim,
        relations=tuple(tuple(int(x) for x in v) for v in vectors),
        snf=snf,
        invariant_factors=tuple(d for d in diag if d > 1),
        free_rank=sum(1 for d in diag if d == 0),
    )


def reduce(q: QuotientGroup, v: Sequence[int]) -> ClassCoordinate:
    """Canonical coordinate of the coset ``v + L``.

    Applies the stored ``U`` of the Smith form, keeps the entries at zero
    diagonal positions, reduces the rest modulo their invariant factor and
    drops positions whose factor is 1.
    """
    if len(v) != q.rank:
        raise InvalidInputError(f"expected a vector of length {q.rank}, got {len(v)}")
    U = q.snf.U
    free, torsion = [], []
    for t, d in enumerate(q.diagonal):
        y = sum(a * int(b) for a, b in zip(U[t], v))
        if d == 0:
            free.append(y)
        elif d > 1:
            torsion.append(y % d)
    return ClassCoordinate(tuple(free), tuple(torsion), q.invariant_factors)
