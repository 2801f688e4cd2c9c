"""Exact integer matrices, Hermite/Smith normal forms and linear solvers.

Everything here works on plain Python ``int`` so entries never overflow.
Matrices are immutable; the normal-form routines copy into nested lists,
reduce in place and wrap the result again.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence


class DimensionError(ValueError):
    """Shapes of the operands do not fit together."""


def _as_int(value) -> int:
    # bool is an int subclass; floats would silently lose precision
    if isinstance(value, bool):
        raise TypeError(f"expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        text = value.strip()
        try:
            return int(text, 10)
        except ValueError:
            raise TypeError(f"not a decimal integer string: {value!r}") from None
    raise TypeError(f"expected an integer, got {type(value).__name__}")


def as_int_vector(values: Iterable) -> tuple[int, ...]:
    """Coerce a sequence of ints or decimal strings to a tuple of ints."""
    return tuple(_as_int(v) for v in values)


@dataclass(frozen=True)
class IntegerMatrix:
    """Dense row-major matrix of exact integers."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise DimensionError(f"empty matrix {self.rows}x{self.cols} not allowed")
        entries = as_int_vector(self.entries)
        if len(entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "IntegerMatrix":
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise DimensionError("empty matrix not allowed")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), width, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, size: int) -> "IntegerMatrix":
        return cls(size, size, tuple(int(i == j) for i in range(size) for j in range(size)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def from_json(cls, obj: dict) -> "IntegerMatrix":
        """Parse ``{"rows": R, "cols": C, "entries": [...]}``."""
        try:
            rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
        except (KeyError, TypeError):
            raise ValueError("matrix JSON needs 'rows', 'cols' and 'entries'") from None
        return cls(_as_int(rows), _as_int(cols), tuple(entries))

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": list(self.entries)}

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j::self.cols]

    def tolist(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(
            self.cols, self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.extend(sum(a * b for a, b in zip(r, c)) for c in cols)
        return IntegerMatrix(self.rows, other.cols, tuple(out))

    def apply(self, x: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product ``A @ x``."""
        x = as_int_vector(x)
        if len(x) != self.cols:
            raise DimensionError(f"vector of length {len(x)} for {self.cols} columns")
        return tuple(sum(a * b for a, b in zip(self.row(i), x)) for i in range(self.rows))

    def hstack(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.rows != other.rows:
            raise DimensionError("row counts differ")
        return IntegerMatrix.from_rows(
            [self.row(i) + other.row(i) for i in range(self.rows)]
        )

    def is_diagonal(self) -> bool:
        return all(self[i, j] == 0
                   for i in range(self.rows) for j in range(self.cols) if i != j)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self[i, i] for i in range(min(self.rows, self.cols)))

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise DimensionError("determinant of a non-square matrix")
        a = self.tolist()
        n = self.rows
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class NormalFormResult:
    """``U @ A @ V == D`` with unimodular ``U`` and ``V``."""

    D: IntegerMatrix
    U: IntegerMatrix
    V: IntegerMatrix

    def __iter__(self):
        return iter((self.D, self.U, self.V))


def _identity_rows(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _freeze(rows: list[list[int]]) -> IntegerMatrix:
    return IntegerMatrix.from_rows(rows)


def hnf(A: IntegerMatrix) -> NormalFormResult:
    """Row-style Hermite normal form.

    Returns ``(H, U, I)`` with ``U @ A == H``. Pivots of ``H`` are positive,
    each pivot sits strictly right of the one above, zero rows come last and
    entries above a pivot lie in ``[0, pivot)``.
    """
    H = A.tolist()
    U = _identity_rows(A.rows)
    r = 0
    for j in range(A.cols):
        if r == A.rows:
            break
        while True:
            nonzero = [i for i in range(r, A.rows) if H[i][j] != 0]
            if not nonzero:
                break
            p = min(nonzero, key=lambda i: abs(H[i][j]))
            H[r], H[p] = H[p], H[r]
            U[r], U[p] = U[p], U[r]
            done = True
            for i in range(r + 1, A.rows):
                if H[i][j]:
                    q = H[i][j] // H[r][j]
                    H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[r])]
                    done = done and H[i][j] == 0
            if done:
                break
        if H[r][j] == 0:
            continue
        if H[r][j] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        for i in range(r):
            q = H[i][j] // H[r][j]
            if q:
                H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        r += 1
    return NormalFormResult(_freeze(H), _freeze(U), IntegerMatrix.identity(A.cols))


def snf(A: IntegerMatrix) -> NormalFormResult:
    """Smith normal form by elementary row and column operations.

    The pivot at each stage is the nonzero entry of least absolute value in
    the remaining block, which keeps intermediate growth down. Returns
    ``(D, U, V)`` with ``U @ A @ V == D``, ``D`` diagonal, nonnegative, with
    each diagonal entry dividing the next and zeros trailing.
    """
    R, C = A.rows, A.cols
    D = A.tolist()
    U = _identity_rows(R)
    V = _identity_rows(C)

    def swap_cols(M, a, b):
        for row in M:
            row[a], row[b] = row[b], row[a]

    def add_col(M, dst, src, q):
        # column dst -= q * column src
        for row in M:
            row[dst] -= q * row[src]

    for k in range(min(R, C)):
        while True:
            best = None
            for i in range(k, R):
                for j in range(k, C):
                    v = D[i][j]
                    if v and (best is None or abs(v) < abs(D[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return NormalFormResult(_freeze(D), _freeze(U), _freeze(V))
            i, j = best
            D[k], D[i] = D[i], D[k]
            U[k], U[i] = U[i], U[k]
            swap_cols(D, k, j)
            swap_cols(V, k, j)

            p = D[k][k]
            clean = True
            for i in range(k + 1, R):
                q = D[i][k] // p
                if q:
                    D[i] = [x - q * y for x, y in zip(D[i], D[k])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[k])]
                clean = clean and D[i][k] == 0
            for j in range(k + 1, C):
                q = D[k][j] // p
                if q:
                    add_col(D, j, k, q)
                    add_col(V, j, k, q)
                clean = clean and D[k][j] == 0
            if not clean:
                continue
            # pivot must divide the rest of the block
            bad = next(((i, j) for i in range(k + 1, R) for j in range(k + 1, C)
                        if D[i][j] % p), None)
            if bad is None:
                break
            i = bad[0]
            D[k] = [x + y for x, y in zip(D[k], D[i])]
            U[k] = [x + y for x, y in zip(U[k], U[i])]
        if D[k][k] < 0:
            D[k] = [-x for x in D[k]]
            U[k] = [-x for x in U[k]]
    return NormalFormResult(_freeze(D), _freeze(U), _freeze(V))


def rank_of_diagonal(D: IntegerMatrix) -> int:
    return sum(1 for d in D.diagonal() if d != 0)


def solve_integer(A: IntegerMatrix, c: Sequence) -> Optional[tuple[int, ...]]:
    """Return an integer ``x`` with ``A @ x == c``, or ``None``.

    The particular solution has every free SNF coordinate set to zero.
    """
    c = as_int_vector(c)
    if len(c) != A.rows:
        raise DimensionError(f"right-hand side has {len(c)} entries, matrix has {A.rows} rows")
    D, U, V = snf(A)
    d = U.apply(c)
    y = [0] * A.cols
    for i in range(A.rows):
        piv = D[i, i] if i < A.cols else 0
        if piv:
            if d[i] % piv:
                return None
            y[i] = d[i] // piv
        elif d[i]:
            return None
    return V.apply(y)


class Status(str, Enum):
    SOLVABLE = "solvable"
    UNSOLVABLE = "unsolvable"


@dataclass(frozen=True)
class FailingCongruence:
    """A scalar congruence ``diag * x = rhs (mod modulus)`` with no solution."""

    diag: int
    rhs: int
    modulus: int

    @property
    def gcd(self) -> int:
        return math.gcd(self.diag, self.modulus)

    def is_valid(self) -> bool:
        """True when the congruence really has no solution."""
        return self.rhs % self.gcd != 0

    def to_json(self) -> dict:
        return {"diag": self.diag, "rhs": self.rhs, "modulus": self.modulus}


@dataclass(frozen=True)
class SolveOutcome:
    status: Status
    witness: Optional[tuple[int, ...]] = None
    certificate: Optional[FailingCongruence] = None

    @property
    def solvable(self) -> bool:
        return self.status is Status.SOLVABLE

    def to_json(self) -> dict:
        out: dict = {"status": self.status.value}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


def solve_mod(A: IntegerMatrix, c: Sequence, m: int) -> SolveOutcome:
    """Decide whether ``A @ x = c (mod m)`` has a solution.

    Works over the integers on the augmented system ``[A | m*I] (x, y) = c``.
    A witness is reduced into ``[0, m)``. On failure the certificate is the
    first SNF row whose pivot does not divide the transformed right-hand side;
    every pivot of the augmented matrix divides ``m``, so that row is an
    unsolvable scalar congruence mod ``m``.
    """
    c = as_int_vector(c)
    m = _as_int(m)
    if len(c) != A.rows:
        raise DimensionError(f"right-hand side has {len(c)} entries, matrix has {A.rows} rows")
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if m == 1:
        return SolveOutcome(Status.SOLVABLE, witness=(0,) * A.cols)

    B = A.hstack(IntegerMatrix(A.rows, A.rows, tuple(
        m * int(i == j) for i in range(A.rows) for j in range(A.rows))))
    D, U, V = snf(B)
    d = U.apply(c)
    # [A | mI] has full row rank, so every pivot is nonzero
    y = [0] * B.cols
    for i in range(B.rows):
        piv = D[i, i]
        if d[i] % piv:
            return SolveOutcome(
                Status.UNSOLVABLE,
                certificate=FailingCongruence(piv, d[i] % m, m),
            )
        y[i] = d[i] // piv
    z = V.apply(y)
    return SolveOutcome(Status.SOLVABLE, witness=tuple(v % m for v in z[:A.cols]))
