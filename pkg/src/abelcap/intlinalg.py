"""Exact integer linear algebra.

Extended gcd, row Hermite normal form, Smith normal form and integer
row-space membership.  Everything works on plain Python ints, so values are
exact and cannot wrap around.

Conventions
-----------
Matrices act on row vectors.  ``hnf(M)`` returns ``(H, U)`` with ``U @ M == H``
and ``H`` in upper row echelon form with positive pivots and every entry above
a pivot reduced into ``[0, pivot)``.  That form is unique per row lattice, so
two lattices are equal iff their Hermite forms are entry-wise equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

__all__ = [
    "IntMatrix",
    "ext_gcd",
    "hnf",
    "hermite_rows",
    "snf",
    "solve_echelon",
    "solve_in_rowspace",
    "is_hermite",
]


def _check_int(x) -> int:
    # bool is an int subclass but never a meaningful matrix entry
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"matrix entries must be exact integers, got {x!r}")
    return x


@dataclass(frozen=True)
class IntMatrix:
    """Immutable exact-integer matrix stored row-major."""

    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("dimensions must be nonnegative")
        entries = tuple(_check_int(x) for x in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(entries)}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]],
                  cols: Optional[int] = None) -> "IntMatrix":
        rows = [tuple(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols is required for a matrix with no rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.diag([1] * n)

    @classmethod
    def diag(cls, values: Sequence[int]) -> "IntMatrix":
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else 0
                               for i in range(n) for j in range(n)))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(
            self.entries[i * self.cols + j]
            for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = [other.entries[j::other.cols] for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.extend(sum(a * b for a, b in zip(r, c)) for c in ocols)
        return IntMatrix(self.rows, other.cols, tuple(out))

    def vecmul(self, v: Sequence[int]) -> Tuple[int, ...]:
        """Row vector times matrix: ``v @ self``."""
        if len(v) != self.rows:
            raise ValueError("length mismatch")
        return tuple(sum(v[i] * self.entries[i * self.cols + j]
                         for i in range(self.rows))
                     for j in range(self.cols))

    def vstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        return IntMatrix(self.rows + other.rows, self.cols,
                         self.entries + other.entries)

    def is_diagonal(self) -> bool:
        return all(self[i, j] == 0 for i in range(self.rows)
                   for j in range(self.cols) if i != j)

    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self[i, i] for i in range(min(self.rows, self.cols)))

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        a = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1

    def __repr__(self):
        return f"IntMatrix({self.tolist()!r})"


def ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(d, s, t)`` with ``d = gcd(a, b) >= 0`` and ``s*a + t*b == d``.

    The coefficients are whatever the Euclidean recurrence produces; callers
    should rely only on the Bezout identity.
    """
    if a == 0 and b == 0:
        return 0, 0, 0
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _combine_rows(rows, r, i, a, b):
    # Unimodular 2x2 step: row r <- s*r + t*i, row i <- (-b/d)*r + (a/d)*i.
    # When a | b only row i changes; this keeps snf's clearing loop finite.
    if a and b % a == 0:
        q = b // a
        for mat in rows:
            mat[i] = [v - q * u for u, v in zip(mat[r], mat[i])]
        return
    d, s, t = ext_gcd(a, b)
    x, y = -b // d, a // d
    for mat in rows:
        pr, pi = mat[r], mat[i]
        mat[r] = [s * u + t * v for u, v in zip(pr, pi)]
        mat[i] = [x * u + y * v for u, v in zip(pr, pi)]


def _hnf_inplace(A, n, U=None):
    mats = (A,) if U is None else (A, U)
    m = len(A)
    r = 0
    for j in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            if A[i][j]:
                _combine_rows(mats, r, i, A[r][j], A[i][j])
        p = A[r][j]
        if p == 0:
            continue
        if p < 0:
            for mat in mats:
                mat[r] = [-x for x in mat[r]]
            p = -p
        for i in range(r):
            q = A[i][j] // p
            if q:
                for mat in mats:
                    mat[i] = [x - q * y for x, y in zip(mat[i], mat[r])]
        r += 1
    return r


def hnf(M: IntMatrix) -> Tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular, ``U @ M == H``, ``H`` upper
    echelon with positive pivots, entries above each pivot in ``[0, pivot)``
    and all zero rows at the bottom.
    """
    m, n = M.shape
    A = M.tolist()
    U = IntMatrix.identity(m).tolist()
    _hnf_inplace(A, n, U)
    return IntMatrix.from_rows(A, n), IntMatrix.from_rows(U, m)


def hermite_rows(rows: Iterable[Sequence[int]], ncols: int) -> list:
    """Nonzero rows of the Hermite form of ``rows``, without the transform."""
    A = [list(r) for r in rows]
    rank = _hnf_inplace(A, ncols)
    return A[:rank]


def is_hermite(H: IntMatrix) -> bool:
    """True when ``H`` is in the canonical form produced by :func:`hnf`."""
    last = -1
    seen_zero = False
    pivots = []
    for i in range(H.rows):
        row = H.row(i)
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            seen_zero = True
            continue
        if seen_zero:
            return False
        j = nz[0]
        if j <= last or row[j] <= 0:
            return False
        pivots.append((i, j))
        last = j
    for i, j in pivots:
        p = H[i, j]
        if any(not 0 <= H[k, j] < p for k in range(i)):
            return False
    return True


def snf(M: IntMatrix) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form.

    Returns ``(D, U, V)`` with ``U``, ``V`` unimodular and ``U @ M @ V == D``,
    where ``D`` is diagonal with nonnegative entries ``d_1 | d_2 | ...``.
    """
    m, n = M.shape
    A = M.tolist()
    U = IntMatrix.identity(m).tolist()
    # V is tracked transposed so column operations become row operations
    Vt = IntMatrix.identity(n).tolist()

    def col_combine(t, j):
        At = [list(c) for c in zip(*A)]
        _combine_rows((At, Vt), t, j, At[t][t], At[j][t])
        A[:] = [list(r) for r in zip(*At)]

    for t in range(min(m, n)):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n)
              if A[i][j]]
        if not nz:
            break
        _, i0, j0 = min(nz)
        A[t], A[i0] = A[i0], A[t]
        U[t], U[i0] = U[i0], U[t]
        if j0 != t:
            for r in A:
                r[t], r[j0] = r[j0], r[t]
            Vt[t], Vt[j0] = Vt[j0], Vt[t]
        while True:
            while (any(A[i][t] for i in range(t + 1, m))
                   or any(A[t][j] for j in range(t + 1, n))):
                for i in range(t + 1, m):
                    if A[i][t]:
                        _combine_rows((A, U), t, i, A[t][t], A[i][t])
                for j in range(t + 1, n):
                    if A[t][j]:
                        col_combine(t, j)
            p = A[t][t]
            bad = next((i for i in range(t + 1, m)
                        if any(A[i][j] % p for j in range(t + 1, n))), None)
            if bad is None:
                break
            A[t] = [x + y for x, y in zip(A[t], A[bad])]
            U[t] = [x + y for x, y in zip(U[t], U[bad])]
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    V = [list(c) for c in zip(*Vt)] if n else []
    return (IntMatrix.from_rows(A, n), IntMatrix.from_rows(U, m),
            IntMatrix.from_rows(V, n))


def _solve_rows(rows, v):
    res = list(v)
    coeffs = [0] * len(rows)
    for i, row in enumerate(rows):
        j = next((j for j, x in enumerate(row) if x), None)
        if j is None:
            break
        q, rem = divmod(res[j], row[j])
        if rem:
            return None
        if q:
            coeffs[i] = q
            res = [x - q * y for x, y in zip(res, row)]
    if any(res):
        return None
    return tuple(coeffs)


def solve_echelon(H: IntMatrix, v: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """Solve ``c @ H == v`` for a matrix already in row echelon form.

    Returns the coefficient vector or ``None`` when ``v`` is not an integer
    combination of the rows.
    """
    if len(v) != H.cols:
        raise ValueError("length mismatch")
    return _solve_rows([H.row(i) for i in range(H.rows)], v)


def solve_in_rowspace(B: IntMatrix, v: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """Return ``c`` with ``c @ B == v``, or ``None`` if ``v`` is not in the
    integer row space of ``B``."""
    H, U = hnf(B)
    c = solve_echelon(H, v)
    if c is None:
        return None
    return U.vecmul(c)
