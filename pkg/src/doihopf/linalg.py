"""Exact field arithmetic and dense linear algebra over Q and F_p.

Everything downstream is expressed as numpy arrays of dtype ``object`` whose
entries are exact scalars (``int``/``Fraction`` for Q, reduced ``int`` for
F_p).  Tensor axes follow one global convention: for a product space
``V (x) W`` the pair ``(i, j)`` sits at flat index ``i * dim W + j``, which is
exactly numpy's C-order ``reshape``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np


class FieldError(ValueError):
    """Raised on malformed scalars, mismatched fields or bad dimensions."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Field:
    """Base class; use :data:`QQ` or :func:`GF`."""

    char: int = 0

    def coerce(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        return arr

    def parse(self, token):
        raise NotImplementedError

    def format(self, x):
        raise NotImplementedError

    def describe(self) -> dict:
        raise NotImplementedError

    # -- array helpers -------------------------------------------------
    def array(self, data) -> np.ndarray:
        arr = np.array(data, dtype=object)
        flat = arr.reshape(-1)
        for k, x in enumerate(flat):
            flat[k] = self.coerce(x)
        return arr

    def zeros(self, *shape: int) -> np.ndarray:
        arr = np.empty(shape, dtype=object)
        arr.fill(0)
        return arr

    def eye(self, n: int) -> np.ndarray:
        arr = self.zeros(n, n)
        for i in range(n):
            arr[i, i] = 1
        return arr

    def einsum(self, spec: str, *ops) -> np.ndarray:
        out = np.einsum(spec, *ops, optimize=len(ops) > 2)
        return self.reduce(np.asarray(out, dtype=object))

    def is_zero(self, arr) -> bool:
        arr = self.reduce(np.asarray(arr, dtype=object))
        return all(x == 0 for x in arr.reshape(-1))

    def equal(self, a, b) -> bool:
        a = np.asarray(a, dtype=object)
        b = np.asarray(b, dtype=object)
        if a.shape != b.shape:
            return False
        return self.is_zero(a - b)


def _norm_q(x):
    return x.numerator if isinstance(x, Fraction) and x.denominator == 1 else x


_normalize_q = np.frompyfunc(_norm_q, 1, 1)


class Rationals(Field):
    char = 0

    def coerce(self, x):
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction):
            return x.numerator if x.denominator == 1 else x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, (np.integer,)):
            return int(x)
        raise FieldError(f"cannot interpret {x!r} as a rational")

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.coerce(Fraction(1) / Fraction(x))

    def reduce(self, arr):
        # keep integral values as plain ints
        return np.asarray(_normalize_q(arr), dtype=object)

    def parse(self, token):
        if isinstance(token, int) and not isinstance(token, bool):
            return token
        if not isinstance(token, str):
            raise FieldError(f"rational must be a string 'p/q' or int, got {token!r}")
        try:
            return self.coerce(Fraction(token.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad rational {token!r}") from exc

    def format(self, x) -> str:
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def describe(self) -> dict:
        return {"type": "Q"}

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.char = p

    def coerce(self, x):
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, (int, np.integer)):
            return int(x) % self.p
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        if isinstance(x, str):
            return self.parse(x)
        raise FieldError(f"cannot interpret {x!r} in F_{self.p}")

    def inv(self, x):
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def reduce(self, arr):
        return arr % self.p

    def parse(self, token):
        if isinstance(token, bool):
            raise FieldError(f"bad F_{self.p} element {token!r}")
        if isinstance(token, int):
            return token % self.p
        if isinstance(token, str):
            try:
                return self.coerce(Fraction(token.strip()))
            except (ValueError, ZeroDivisionError) as exc:
                raise FieldError(f"bad F_{self.p} element {token!r}") from exc
        raise FieldError(f"bad F_{self.p} element {token!r}")

    def format(self, x) -> int:
        return int(x) % self.p

    def describe(self) -> dict:
        return {"type": "Fp", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()
_prime_fields: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]


def field_from_desc(desc: dict) -> Field:
    kind = desc.get("type")
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return GF(int(desc["p"]))
    raise FieldError(f"unknown field description {desc!r}")


class Matrix:
    """Dense matrix over an exact field.

    Thin wrapper so that linear maps carry their field; the entries are an
    object ndarray that callers may read but should not mutate.
    """

    __slots__ = ("field", "entries")

    def __init__(self, field: Field, entries):
        arr = field.array(entries)
        if arr.ndim != 2:
            raise FieldError(f"matrix must be 2-dimensional, got shape {arr.shape}")
        self.field = field
        self.entries = arr
        arr.setflags(write=False)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, field.eye(n))

    @classmethod
    def zero(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, field.zeros(rows, cols))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, self.entries.T)

    def _check(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            raise FieldError("expected a Matrix")
        if other.field != self.field:
            raise FieldError(f"field mismatch: {self.field} vs {other.field}")

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            self._check(other)
            if self.cols != other.rows:
                raise FieldError(f"cannot compose {self.shape} with {other.shape}")
            return Matrix(self.field, self.field.reduce(self.entries.dot(other.entries)))
        vec = self.field.array(other)
        if vec.shape != (self.cols,):
            raise FieldError(f"vector of length {vec.shape} does not fit {self.shape}")
        return self.field.reduce(self.entries.dot(vec))

    def __add__(self, other):
        self._check(other)
        return Matrix(self.field, self.field.reduce(self.entries + other.entries))

    def __sub__(self, other):
        self._check(other)
        return Matrix(self.field, self.field.reduce(self.entries - other.entries))

    def __neg__(self):
        return Matrix(self.field, self.field.reduce(-self.entries))

    def __rmul__(self, scalar):
        s = self.field.coerce(scalar)
        return Matrix(self.field, self.field.reduce(self.entries * s))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return other.field == self.field and self.field.equal(self.entries, other.entries)

    def __hash__(self):
        return hash((self.field, self.shape, tuple(self.entries.reshape(-1))))

    def __getitem__(self, idx):
        return self.entries[idx]

    def tolist(self):
        return self.entries.tolist()

    def rank(self) -> int:
        return len(rref(self.field, self.entries)[1])

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise FieldError("only square matrices have inverses")
        n = self.rows
        aug = np.concatenate([self.entries, self.field.eye(n)], axis=1)
        red, pivots = rref(self.field, aug)
        if pivots[:n] != list(range(n)) or len(pivots) > n:
            raise FieldError("matrix is singular")
        return Matrix(self.field, red[:n, n:])

    def __repr__(self):
        body = "; ".join(" ".join(str(self.field.format(x)) for x in row) for row in self.entries)
        return f"Matrix({self.field!r}, [{body}])"


def rref(field: Field, mat) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form with first-nonzero pivoting.

    Returns the reduced matrix (rank rows first, zero rows after) and the list
    of pivot columns.
    """
    rows = [list(r) for r in np.asarray(mat, dtype=object)]
    n_rows = len(rows)
    n_cols = 0 if n_rows == 0 else len(rows[0])
    pivots: list[int] = []
    r = 0
    reduce_mod = field.char
    for c in range(n_cols):
        piv = None
        for i in range(r, n_rows):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        prow = [field.coerce(x * inv) for x in rows[r]]
        rows[r] = prow
        nz = [j for j in range(c, n_cols) if prow[j] != 0]
        for i in range(n_rows):
            if i == r:
                continue
            f = rows[i][c]
            if f == 0:
                continue
            row = rows[i]
            for j in nz:
                v = row[j] - f * prow[j]
                row[j] = v % reduce_mod if reduce_mod else v
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    out = np.empty((n_rows, n_cols), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            out[i, j] = field.coerce(x)
    return out, pivots


@dataclass(frozen=True, eq=False)
class AffineSolutionSpace:
    """``{x : A x = b}`` as ``particular + span(homogeneous_basis)``.

    ``particular`` is ``None`` exactly when the system is inconsistent.
    """

    field: Field
    ambient_dim: int
    homogeneous_basis: tuple = dc_field(default=())
    particular: np.ndarray | None = None

    @property
    def dim(self) -> int:
        return len(self.homogeneous_basis)

    @property
    def consistent(self) -> bool:
        return self.particular is not None

    def basis_matrix(self) -> np.ndarray:
        """Rows are the homogeneous basis vectors."""
        if not self.homogeneous_basis:
            return self.field.zeros(0, self.ambient_dim)
        return np.array([list(v) for v in self.homogeneous_basis], dtype=object)

    def contains_direction(self, v) -> bool:
        """Is ``v`` in the homogeneous solution space?"""
        v = self.field.array(v)
        return in_span(self.field, self.basis_matrix(), v)

    def contains(self, v) -> bool:
        """Is ``v`` a solution of the (inhomogeneous) system?"""
        if self.particular is None:
            return False
        v = self.field.array(v)
        return self.contains_direction(self.field.reduce(v - self.particular))

    def element(self, coeffs: Sequence) -> np.ndarray:
        """``particular + sum coeffs[i] * basis[i]`` (particular taken as 0 if absent)."""
        out = self.field.zeros(self.ambient_dim) if self.particular is None else self.particular.copy()
        for c, v in zip(coeffs, self.homogeneous_basis):
            out = out + self.field.coerce(c) * v
        return self.field.reduce(out)


def solve_affine(A, b) -> AffineSolutionSpace:
    """All solutions of ``A x = b``.

    The homogeneous basis comes from the reduced echelon form with one vector
    per free column (increasing order); the particular solution sets all free
    variables to zero.
    """
    if not isinstance(A, Matrix):
        raise FieldError("solve_affine expects a Matrix")
    field = A.field
    b = field.array(b)
    if b.shape != (A.rows,):
        raise FieldError(f"right-hand side has {b.shape} entries, matrix has {A.rows} rows")
    n = A.cols
    aug = np.concatenate([A.entries, b.reshape(-1, 1)], axis=1) if A.rows else field.zeros(0, n + 1)
    red, pivots = rref(field, aug)
    consistent = n not in pivots
    pivots = [p for p in pivots if p < n]
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = field.zeros(n)
        v[f] = 1
        for r, p in enumerate(pivots):
            v[p] = field.coerce(-red[r, f])
        basis.append(v)
    particular = None
    if consistent:
        particular = field.zeros(n)
        for r, p in enumerate(pivots):
            particular[p] = red[r, n]
    return AffineSolutionSpace(field, n, tuple(basis), particular)


def nullspace(A: Matrix) -> list[np.ndarray]:
    return list(solve_affine(A, A.field.zeros(A.rows)).homogeneous_basis)


def rank(field: Field, mat) -> int:
    mat = np.asarray(mat, dtype=object)
    if mat.size == 0:
        return 0
    return len(rref(field, mat)[1])


def in_span(field: Field, rows, v) -> bool:
    rows = np.asarray(rows, dtype=object)
    if rows.shape[0] == 0:
        return field.is_zero(v)
    return rank(field, rows) == rank(field, np.vstack([rows, np.asarray(v, dtype=object).reshape(1, -1)]))


def same_span(field: Field, rows_a, rows_b) -> bool:
    rows_a = np.asarray(rows_a, dtype=object)
    rows_b = np.asarray(rows_b, dtype=object)
    ra, rb = rank(field, rows_a), rank(field, rows_b)
    if ra != rb:
        return False
    if ra == 0:
        return True
    return rank(field, np.vstack([rows_a, rows_b])) == ra


def kron(A: Matrix, B: Matrix) -> Matrix:
    """Kronecker product; row/column pair (i, j) sits at i * dim_B + j."""
    A._check(B)
    out = np.einsum("ij,kl->ikjl", A.entries, B.entries)
    return Matrix(A.field, A.field.reduce(out.reshape(A.rows * B.rows, A.cols * B.cols)))


def flip(field: Field, m: int, n: int) -> Matrix:
    """Permutation ``v (x) w -> w (x) v`` for ``dim v = m, dim w = n``."""
    out = field.zeros(m * n, m * n)
    for i in range(m):
        for j in range(n):
            out[j * m + i, i * n + j] = 1
    return Matrix(field, out)


def block_rows(blocks: Iterable[np.ndarray], ncols: int, field: Field) -> np.ndarray:
    blocks = [np.asarray(b, dtype=object).reshape(-1, ncols) for b in blocks]
    if not blocks:
        return field.zeros(0, ncols)
    return np.vstack(blocks)
