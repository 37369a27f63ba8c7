"""Exact linear algebra over ZZ, QQ and Zmod(m).

Matrices are plain lists of rows.  Everything here is pure Python on
arbitrary-precision integers and :class:`fractions.Fraction`; the matrices
that occur in this package stay at a few hundred entries per side, so
textbook elimination is adequate.

Two canonical forms are used:

* Smith normal form ``U @ M @ V == D`` with the pivot rule "smallest nonzero
  absolute value, ties broken by lowest (row, col)".  It decides solvability
  of ``M x = b`` over every domain, including non-prime moduli.
* Hermite normal form of a list of generator vectors.  The canonical basis is
  lower-triangular when generators are written as columns, with positive
  pivots and the entries to the left of each pivot reduced into
  ``[0, pivot)``.  We store the transpose of that matrix, i.e. a list of basis
  row vectors in echelon order, so that two submodules are equal exactly when
  their stored bases are equal.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import InputError
from .exactring import QQ, ZZ, Domain

Matrix = list  # list of rows


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def shape(M: Matrix, ncols: int | None = None) -> tuple[int, int]:
    if not M:
        return 0, ncols or 0
    widths = {len(r) for r in M}
    if len(widths) != 1:
        raise InputError("ragged matrix")
    width = widths.pop()
    if ncols is not None and ncols != width:
        raise InputError(f"matrix has {width} columns, expected {ncols}")
    return len(M), width


def transpose(M: Matrix, ncols: int | None = None) -> Matrix:
    rows, cols = shape(M, ncols)
    return [[M[i][j] for i in range(rows)] for j in range(cols)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if A and B and len(A[0]) != len(B):
        raise InputError("shape mismatch in matrix product")
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(M: Matrix, v: Sequence) -> list:
    if M and len(M[0]) != len(v):
        raise InputError(f"shape mismatch: {len(M[0])} columns vs vector of length {len(v)}")
    return [sum(a * b for a, b in zip(row, v)) for row in M]


def determinant(M: Matrix) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    n = len(M)
    if any(len(r) != n for r in M):
        raise InputError("determinant of a non-square matrix")
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def is_unimodular(M: Matrix) -> bool:
    return abs(determinant(M)) == 1


# ---------------------------------------------------------------------------
# Smith normal form


def smith_normal_form(M: Matrix, ncols: int | None = None) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, D, V)`` with ``U @ M @ V == D``.

    ``U`` and ``V`` are unimodular, ``D`` is diagonal with non-negative
    entries ``d_1 | d_2 | ...`` followed by zeros.
    """
    m, n = shape(M, ncols)
    A = [[_as_int(a) for a in row] for row in M]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, k):
        A[i], A[k] = A[k], A[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for row in A:
            row[j], row[k] = row[k], row[j]
        for row in V:
            row[j], row[k] = row[k], row[j]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    a = A[i][j]
                    if a and (pivot is None or abs(a) < abs(A[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                return U, A, V
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    clean = clean and not A[i][t]
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    clean = clean and not A[t][j]
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
    return U, A, V


def _as_int(a) -> int:
    if isinstance(a, Fraction):
        if a.denominator != 1:
            raise InputError(f"non-integral entry {a} in an integer matrix")
        return int(a.numerator)
    return int(a)


class SmithSolver:
    """A Smith factorisation of a fixed integer matrix, reused across right-hand sides."""

    def __init__(self, M: Matrix, ncols: int | None = None):
        self.rows, self.cols = shape(M, ncols)
        self.matrix = [list(r) for r in M]
        self.U, self.D, self.V = smith_normal_form(M, self.cols)
        k = min(self.rows, self.cols)
        self.diagonal = [self.D[i][i] for i in range(k)]
        self.rank = sum(1 for d in self.diagonal if d)

    def solve(self, b: Sequence, domain: Domain = ZZ) -> list | None:
        if len(b) != self.rows:
            raise InputError(f"right-hand side has length {len(b)}, expected {self.rows}")
        if domain.kind == "Zmod":
            return self._solve_mod(b, domain.modulus)
        c = matvec(self.U, b) if self.rows else []
        y = [0] * self.cols
        for i, ci in enumerate(c):
            d = self.diagonal[i] if i < len(self.diagonal) else 0
            if d == 0:
                if ci != 0:
                    return None
                continue
            if domain.kind == "Z":
                if isinstance(ci, Fraction) and ci.denominator != 1:
                    return None
                if ci % d:
                    return None
                y[i] = int(ci // d)
            else:
                y[i] = Fraction(ci) / d
        x = matvec(self.V, y) if self.cols else []
        if domain.kind == "Q":
            x = [Fraction(v) for v in x]
        return x

    def _solve_mod(self, b, m: int) -> list | None:
        b = [_residue(v, m) for v in b]
        c = [v % m for v in matvec(self.U, b)] if self.rows else []
        y = [0] * self.cols
        for i, ci in enumerate(c):
            d = self.diagonal[i] if i < len(self.diagonal) else 0
            g = gcd(d, m)
            if ci % g:
                return None
            if i >= self.cols:
                continue
            mg = m // g
            if mg == 1:
                continue
            y[i] = (ci // g) * pow(d // g, -1, mg) % mg
        return [v % m for v in matvec(self.V, y)] if self.cols else []

    def kernel_basis(self) -> list:
        """A ZZ-basis of ``{x : M x = 0}`` (as row vectors, not yet canonical)."""
        return [[self.V[i][j] for i in range(self.cols)] for j in range(self.rank, self.cols)]


def _residue(v, m: int) -> int:
    if isinstance(v, Fraction):
        return v.numerator * pow(v.denominator, -1, m) % m
    return v % m


def solve_linear(M: Matrix, b: Sequence, domain: Domain = ZZ, ncols: int | None = None) -> list | None:
    """Some ``x`` with ``M x = b`` in ``domain``, or ``None`` when there is none.

    Over ``Zmod(m)`` the system is lifted to the integers and decided through
    the Smith form, so composite and non-squarefree moduli are handled.  The
    returned solution is canonical: free Smith coordinates are zero and the
    bound ones are least non-negative residues.
    """
    rows, _ = shape(M, ncols)
    if rows != len(b):
        raise InputError(f"matrix has {rows} rows but right-hand side has length {len(b)}")
    if domain.kind == "Q":
        M, b = _integral_rows(M, b)
    return SmithSolver(M, ncols).solve(b, domain)


def _integral_rows(M, b):
    # scale each equation by the lcm of its denominators so the matrix is integral
    out_M, out_b = [], []
    for row, rhs in zip(M, b):
        den = 1
        for a in row:
            if isinstance(a, Fraction):
                den = den * a.denominator // gcd(den, a.denominator)
        out_M.append([_as_int(a * den) for a in row])
        out_b.append(Fraction(rhs) * den)
    return out_M, out_b


# ---------------------------------------------------------------------------
# Hermite normal form and row reduction


def hermite_normal_form(vectors: Sequence[Sequence[int]], ncols: int) -> list:
    """Canonical echelon basis of the ZZ-span of ``vectors`` (see module docstring)."""
    A = [[_as_int(a) for a in v] for v in vectors if any(v)]
    for v in A:
        if len(v) != ncols:
            raise InputError(f"vector of length {len(v)} in ambient rank {ncols}")
    r = 0
    for j in range(ncols):
        while True:
            live = [i for i in range(r, len(A)) if A[i][j]]
            if not live:
                break
            k = min(live, key=lambda i: (abs(A[i][j]), i))
            A[r], A[k] = A[k], A[r]
            if len(live) == 1:
                break
            p = A[r][j]
            for i in range(r + 1, len(A)):
                if A[i][j]:
                    q = A[i][j] // p
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
        if r == len(A) or A[r][j] == 0:
            continue
        if A[r][j] < 0:
            A[r] = [-a for a in A[r]]
        p = A[r][j]
        for i in range(r):
            q = A[i][j] // p
            if q:
                A[i] = [a - q * b for a, b in zip(A[i], A[r])]
        r += 1
        A = A[:r] + [v for v in A[r:] if any(v)]
    return [tuple(v) for v in A[:r]]


def rref(vectors: Sequence[Sequence], ncols: int) -> list:
    """Reduced row echelon basis over QQ of the span of ``vectors``."""
    A = [[Fraction(a) for a in v] for v in vectors]
    for v in A:
        if len(v) != ncols:
            raise InputError(f"vector of length {len(v)} in ambient rank {ncols}")
    r = 0
    for j in range(ncols):
        k = next((i for i in range(r, len(A)) if A[i][j]), None)
        if k is None:
            continue
        A[r], A[k] = A[k], A[r]
        p = A[r][j]
        A[r] = [a / p for a in A[r]]
        for i in range(len(A)):
            if i != r and A[i][j]:
                q = A[i][j]
                A[i] = [a - q * b for a, b in zip(A[i], A[r])]
        r += 1
    return [tuple(v) for v in A[:r]]


def primitive(v: Sequence) -> tuple:
    """Scale a rational vector to a primitive integer vector, first nonzero entry positive."""
    den = 1
    for a in v:
        a = Fraction(a)
        den = den * a.denominator // gcd(den, a.denominator)
    ints = [int(Fraction(a) * den) for a in v]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g == 0:
        return tuple(ints)
    ints = [a // g for a in ints]
    lead = next(a for a in ints if a)
    return tuple(-a for a in ints) if lead < 0 else tuple(ints)


def rank(M: Matrix, ncols: int | None = None) -> int:
    _, cols = shape(M, ncols)
    return len(rref(M, cols))


# ---------------------------------------------------------------------------
# Submodules


class Submodule:
    """A ZZ-submodule (or, with ``domain=QQ``, a QQ-subspace) of a free module.

    The canonical basis is the Hermite normal form (ZZ) or the reduced row
    echelon form (QQ).
    """

    def __init__(self, ambient_rank: int, generators: Sequence[Sequence] = (), domain: Domain = ZZ):
        if domain not in (ZZ, QQ):
            raise InputError("submodules are supported over ZZ and QQ only")
        self.ambient_rank = ambient_rank
        self.domain = domain
        self.generators = [tuple(g) for g in generators]
        for g in self.generators:
            if len(g) != ambient_rank:
                raise InputError(f"generator of length {len(g)} in ambient rank {ambient_rank}")
        if domain == ZZ:
            self.basis = hermite_normal_form(self.generators, ambient_rank)
        else:
            self.basis = rref(self.generators, ambient_rank)

    @classmethod
    def zero(cls, ambient_rank: int, domain: Domain = ZZ) -> "Submodule":
        return cls(ambient_rank, (), domain)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.rank

    def __repr__(self):
        return f"Submodule(rank {self.rank} in {self.domain!r}^{self.ambient_rank})"

    def _check(self, other: "Submodule"):
        if other.ambient_rank != self.ambient_rank:
            raise InputError(f"ambient rank mismatch: {self.ambient_rank} vs {other.ambient_rank}")
        if other.domain != self.domain:
            raise InputError("domain mismatch between submodules")

    def membership(self, v: Sequence) -> list | None:
        """Coefficients ``c`` with ``sum c_i * generators[i] == v``, or ``None``."""
        if len(v) != self.ambient_rank:
            raise InputError(f"vector of length {len(v)} in ambient rank {self.ambient_rank}")
        if not self.generators:
            return [] if not any(v) else None
        cols = transpose(self.generators, self.ambient_rank)
        return solve_linear(cols, list(v), self.domain, ncols=len(self.generators))

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_rank:
            raise InputError(f"vector of length {len(v)} in ambient rank {self.ambient_rank}")
        if not self.basis:
            return not any(v)
        cols = transpose(self.basis, self.ambient_rank)
        return solve_linear(cols, list(v), self.domain, ncols=len(self.basis)) is not None

    __contains__ = contains

    def is_subset(self, other: "Submodule") -> bool:
        self._check(other)
        return all(other.contains(b) for b in self.basis)

    def equals(self, other: "Submodule") -> bool:
        return self.is_subset(other) and other.is_subset(self)

    def __eq__(self, other):
        if not isinstance(other, Submodule):
            return NotImplemented
        return self.ambient_rank == other.ambient_rank and self.domain == other.domain and self.equals(other)

    def __hash__(self):
        return hash((self.ambient_rank, self.domain, tuple(self.basis)))

    def sum(self, other: "Submodule") -> "Submodule":
        self._check(other)
        return Submodule(self.ambient_rank, list(self.basis) + list(other.basis), self.domain)

    __add__ = sum

    def intersect(self, other: "Submodule") -> "Submodule":
        self._check(other)
        if not self.basis or not other.basis:
            return Submodule.zero(self.ambient_rank, self.domain)
        r = len(self.basis)
        # columns: basis of self, then minus basis of other
        cols = [list(b) for b in self.basis] + [[-a for a in b] for b in other.basis]
        K = kernel(transpose(cols, self.ambient_rank), ncols=len(cols), domain=self.domain)
        gens = []
        for x in K.basis:
            gens.append([sum(x[i] * self.basis[i][k] for i in range(r)) for k in range(self.ambient_rank)])
        return Submodule(self.ambient_rank, gens, self.domain)

    def integral_basis(self) -> list:
        """Basis vectors with integer entries (primitive vectors over QQ)."""
        if self.domain == ZZ:
            return [tuple(b) for b in self.basis]
        return [primitive(b) for b in self.basis]


def kernel(M: Matrix, ncols: int | None = None, domain: Domain = ZZ) -> Submodule:
    """``{x : M x = 0}`` as a submodule of ``domain^ncols``."""
    rows, cols = shape(M, ncols)
    if domain == ZZ:
        if rows == 0:
            return Submodule(cols, identity(cols), ZZ)
        return Submodule(cols, SmithSolver(M, cols).kernel_basis(), ZZ)
    if domain != QQ:
        raise InputError("kernels are supported over ZZ and QQ only")
    R = rref(M, cols)
    pivots = []
    for row in R:
        pivots.append(next(j for j, a in enumerate(row) if a))
    free = [j for j in range(cols) if j not in pivots]
    gens = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        gens.append(v)
    return Submodule(cols, gens, QQ)


def image(M: Matrix, ncols: int | None = None, domain: Domain = ZZ) -> Submodule:
    """Span of the columns of ``M``."""
    rows, cols = shape(M, ncols)
    return Submodule(rows, transpose(M, cols), domain)
