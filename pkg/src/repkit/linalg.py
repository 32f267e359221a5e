"""Dense exact matrices and subspaces of coordinate spaces F^d."""

from __future__ import annotations

from typing import Callable, Iterable, NamedTuple, Sequence

from .errors import DimensionError, FieldError
from .exactfield import Field, FieldElement, Polynomial, poly_lcm


def _rref(F: Field, data: list[list], pivot_limit: int | None = None) -> list[int]:
    """Reduce ``data`` (modified in place) to reduced row echelon form.

    Pivots are only taken in the first ``pivot_limit`` columns; row operations
    still act on the full rows.  The first nonzero entry in scan order is the
    pivot.  Returns pivot column indices.
    """
    nrows = len(data)
    if not nrows:
        return []
    ncols = len(data[0])
    limit = ncols if pivot_limit is None else pivot_limit
    pivots: list[int] = []
    r = 0
    for c in range(limit):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if not F.is_zero(data[i][c])), None)
        if pr is None:
            continue
        data[r], data[pr] = data[pr], data[r]
        row = data[r]
        inv = F.inv(row[c])
        if row[c] != F.one:
            data[r] = row = [F.mul(x, inv) for x in row]
        for i in range(nrows):
            if i != r:
                f = data[i][c]
                if not F.is_zero(f):
                    other = data[i]
                    data[i] = [
                        x if F.is_zero(y) else F.sub(x, F.mul(f, y)) for x, y in zip(other, row)
                    ]
        pivots.append(c)
        r += 1
    return pivots


class Matrix:
    """Immutable dense matrix over an exact field.

    ``@`` is the matrix product; ``*`` with a scalar scales.  Zero-width and
    zero-height matrices are allowed (bases of trivial subspaces).
    """

    __slots__ = ("field", "rows", "cols", "_data")

    def __init__(self, field: Field, entries: Iterable[Iterable]):
        data = tuple(tuple(field.coerce(x) for x in row) for row in entries)
        if not data:
            raise DimensionError("use Matrix.zeros for empty matrices")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise DimensionError("ragged matrix rows")
        self.field = field
        self.rows = len(data)
        self.cols = width
        self._data = data

    @classmethod
    def _raw(cls, field: Field, data, rows: int | None = None, cols: int | None = None) -> "Matrix":
        m = cls.__new__(cls)
        m.field = field
        m._data = tuple(tuple(r) for r in data)
        m.rows = len(m._data) if rows is None else rows
        m.cols = (len(m._data[0]) if m._data else 0) if cols is None else cols
        return m

    # constructors -------------------------------------------------------------
    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls._raw(field, [[o if i == j else z for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls._raw(field, [[field.zero] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def scalar(cls, field: Field, n: int, a) -> "Matrix":
        a = field.coerce(a)
        return cls._raw(field, [[a if i == j else field.zero for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def column(cls, field: Field, values: Iterable) -> "Matrix":
        vals = [field.coerce(v) for v in values]
        return cls._raw(field, [[v] for v in vals], len(vals), 1)

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        """Assemble a matrix from raw column vectors."""
        if not columns:
            if rows is None:
                raise DimensionError("row count needed for a matrix with no columns")
            return cls._raw(field, [[] for _ in range(rows)], rows, 0)
        n = len(columns[0])
        return cls._raw(field, [[col[i] for col in columns] for i in range(n)], n, len(columns))

    @classmethod
    def elementary(cls, field: Field, rows: int, cols: int, j: int, m: int) -> "Matrix":
        """The matrix unit with a single 1 at (j, m)."""
        data = [[field.zero] * cols for _ in range(rows)]
        data[j][m] = field.one
        return cls._raw(field, data, rows, cols)

    @classmethod
    def diagonal(cls, field: Field, values: Sequence) -> "Matrix":
        vals = [field.coerce(v) for v in values]
        n = len(vals)
        return cls._raw(field, [[vals[i] if i == j else field.zero for j in range(n)] for i in range(n)], n, n)

    # access -------------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij) -> FieldElement:
        i, j = ij
        return FieldElement(self.field, self._data[i][j])

    def raw(self, i: int, j: int):
        return self._data[i][j]

    def raw_rows(self) -> list[list]:
        return [list(r) for r in self._data]

    def raw_column(self, j: int) -> list:
        return [row[j] for row in self._data]

    def raw_columns(self) -> list[list]:
        return [self.raw_column(j) for j in range(self.cols)]

    def column_matrix(self, j: int) -> "Matrix":
        return Matrix._raw(self.field, [[row[j]] for row in self._data], self.rows, 1)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._raw(self.field, [[self._data[i][j] for j in cols] for i in rows], len(rows), len(cols))

    def tolist(self) -> list[list[FieldElement]]:
        return [[FieldElement(self.field, x) for x in row] for row in self._data]

    def to_json(self) -> list[list]:
        return [[self.field.format(x) for x in row] for row in self._data]

    def map(self, fn: Callable, field: Field | None = None) -> "Matrix":
        return Matrix._raw(field or self.field, [[fn(x) for x in row] for row in self._data], self.rows, self.cols)

    # comparisons ----------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.field, self.shape, self._data))

    def is_zero(self) -> bool:
        F = self.field
        return all(F.is_zero(x) for row in self._data for x in row)

    def is_identity(self) -> bool:
        return self.is_square and self == Matrix.identity(self.field, self.rows)

    def is_scalar(self) -> bool:
        if not self.is_square:
            return False
        if self.rows == 0:
            return True
        return self == Matrix.scalar(self.field, self.rows, self._data[0][0])

    # arithmetic -----------------------------------------------------------------
    def _check(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldError(f"mixed fields: {self.field} and {other.field}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        F = self.field
        return Matrix._raw(
            F, [[F.add(x, y) for x, y in zip(r, s)] for r, s in zip(self._data, other._data)], self.rows, self.cols
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot subtract {other.shape} from {self.shape}")
        F = self.field
        return Matrix._raw(
            F, [[F.sub(x, y) for x, y in zip(r, s)] for r, s in zip(self._data, other._data)], self.rows, self.cols
        )

    def __neg__(self) -> "Matrix":
        return self.map(self.field.neg)

    def __mul__(self, a) -> "Matrix":
        if isinstance(a, Matrix):
            raise TypeError("use @ for the matrix product")
        F = self.field
        try:
            a = F.coerce(a)
        except (FieldError, TypeError):
            return NotImplemented
        return self.map(lambda x: F.mul(a, x))

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        F = self.field
        ocols = list(zip(*other._data)) if other.rows else [()] * other.cols
        zero = F.zero
        out = []
        for row in self._data:
            nz = [(k, x) for k, x in enumerate(row) if not F.is_zero(x)]
            new = []
            for col in ocols:
                acc = zero
                for k, x in nz:
                    y = col[k]
                    if not F.is_zero(y):
                        acc = F.add(acc, F.mul(x, y))
                new.append(acc)
            out.append(new)
        return Matrix._raw(F, out, self.rows, other.cols)

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square:
            raise DimensionError("power of a non-square matrix")
        if k < 0:
            inv = self.inverse()
            if inv is None:
                raise ZeroDivisionError("singular matrix")
            return inv ** (-k)
        result = Matrix.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def apply(self, vector: Sequence) -> list:
        """Raw matrix-vector product."""
        F = self.field
        return [F.sum(F.mul(x, y) for x, y in zip(row, vector) if not F.is_zero(y)) for row in self._data]

    # structure ----------------------------------------------------------------
    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def transpose(self) -> "Matrix":
        return Matrix._raw(self.field, [list(c) for c in zip(*self._data)] if self.rows else [], self.cols, self.rows)

    def conjugate(self) -> "Matrix":
        return self.map(self.field.conj)

    def conjugate_transpose(self) -> "Matrix":
        return self.transpose().conjugate()

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.rows != other.rows:
            raise DimensionError("hstack needs equal row counts")
        return Matrix._raw(self.field, [r + s for r, s in zip(self._data, other._data)], self.rows, self.cols + other.cols)

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.cols != other.cols:
            raise DimensionError("vstack needs equal column counts")
        return Matrix._raw(self.field, self._data + other._data, self.rows + other.rows, self.cols)

    def kron(self, other: "Matrix") -> "Matrix":
        self._check(other)
        F = self.field
        out = []
        for r in self._data:
            for s in other._data:
                out.append([F.mul(x, y) for x in r for y in s])
        return Matrix._raw(F, out, self.rows * other.rows, self.cols * other.cols)

    def trace(self) -> FieldElement:
        if not self.is_square:
            raise DimensionError("trace of a non-square matrix")
        F = self.field
        return FieldElement(F, F.sum(self._data[i][i] for i in range(self.rows)))

    def det(self) -> FieldElement:
        if not self.is_square:
            raise DimensionError("determinant of a non-square matrix")
        F = self.field
        data = self.raw_rows()
        n = self.rows
        result = F.one
        for c in range(n):
            pr = next((i for i in range(c, n) if not F.is_zero(data[i][c])), None)
            if pr is None:
                return FieldElement(F, F.zero)
            if pr != c:
                data[c], data[pr] = data[pr], data[c]
                result = F.neg(result)
            piv = data[c][c]
            result = F.mul(result, piv)
            inv = F.inv(piv)
            for i in range(c + 1, n):
                f = data[i][c]
                if not F.is_zero(f):
                    f = F.mul(f, inv)
                    data[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(data[i], data[c])]
        return FieldElement(F, result)

    def inverse(self) -> "Matrix | None":
        """Inverse matrix, or None when singular."""
        if not self.is_square:
            raise DimensionError("inverse of a non-square matrix")
        F = self.field
        n = self.rows
        aug = [list(row) + [F.one if i == j else F.zero for j in range(n)] for i, row in enumerate(self._data)]
        pivots = _rref(F, aug, n)
        if len(pivots) < n:
            return None
        return Matrix._raw(F, [row[n:] for row in aug], n, n)

    def minor(self, i: int, j: int) -> "Matrix":
        return Matrix._raw(
            self.field,
            [[x for c, x in enumerate(row) if c != j] for r, row in enumerate(self._data) if r != i],
            self.rows - 1,
            self.cols - 1,
        )

    def adjugate(self) -> "Matrix":
        if not self.is_square:
            raise DimensionError("adjugate of a non-square matrix")
        F = self.field
        n = self.rows
        if n == 1:
            return Matrix.identity(F, 1)
        if n > 5:
            inv = self.inverse()
            if inv is not None:
                return inv * self.det()
        cof = [[F.zero] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                d = self.minor(i, j).det().value
                cof[j][i] = d if (i + j) % 2 == 0 else F.neg(d)
        return Matrix._raw(F, cof, n, n)

    def rref(self) -> tuple["Matrix", list[int]]:
        data = self.raw_rows()
        pivots = _rref(self.field, data)
        return Matrix._raw(self.field, data, self.rows, self.cols), pivots

    def rank(self) -> int:
        return len(_rref(self.field, self.raw_rows()))

    def kernel(self) -> "Subspace":
        F = self.field
        data = self.raw_rows()
        pivots = _rref(F, data)
        pivot_set = set(pivots)
        basis = []
        for f in range(self.cols):
            if f in pivot_set:
                continue
            v = [F.zero] * self.cols
            v[f] = F.one
            for r, pc in enumerate(pivots):
                v[pc] = F.neg(data[r][f])
            basis.append(v)
        return Subspace(Matrix.from_columns(F, basis, rows=self.cols))

    def image(self) -> "Subspace":
        pivots = _rref(self.field, self.raw_rows())
        return Subspace(self.submatrix(range(self.rows), pivots))

    # polynomials ---------------------------------------------------------------
    def charpoly(self) -> Polynomial:
        return char_poly(self)

    def minpoly(self) -> Polynomial:
        return min_poly(self)

    def __repr__(self):
        body = "; ".join(", ".join(str(FieldElement(self.field, x)) for x in row) for row in self._data)
        return f"Matrix({self.field}, [{body}])"


def block_diagonal(blocks: Sequence[Matrix]) -> Matrix:
    F = blocks[0].field
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    data = [[F.zero] * m for _ in range(n)]
    r0 = c0 = 0
    for b in blocks:
        if b.field != F:
            raise FieldError("mixed fields in block_diagonal")
        for i in range(b.rows):
            for j in range(b.cols):
                data[r0 + i][c0 + j] = b.raw(i, j)
        r0 += b.rows
        c0 += b.cols
    return Matrix._raw(F, data, n, m)


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """Column space of a matrix with linearly independent columns."""

    __slots__ = ("basis",)

    def __init__(self, basis: Matrix):
        self.basis = basis

    @classmethod
    def span(cls, field: Field, vectors: Sequence[Sequence], ambient: int) -> "Subspace":
        """Span of raw vectors; dependent ones are dropped (pivot columns kept)."""
        if not vectors:
            return cls.zero(field, ambient)
        M = Matrix.from_columns(field, [list(v) for v in vectors])
        return M.image()

    @classmethod
    def of(cls, field: Field, vectors: Sequence[Sequence]) -> "Subspace":
        """Span of user-supplied vectors (any coercible entries)."""
        raw = [[field.coerce(x) for x in v] for v in vectors]
        return cls.span(field, raw, len(raw[0]))

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(Matrix.zeros(field, ambient, 0))

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        return cls(Matrix.identity(field, ambient))

    @property
    def field(self) -> Field:
        return self.basis.field

    @property
    def ambient(self) -> int:
        return self.basis.rows

    @property
    def dim(self) -> int:
        return self.basis.cols

    def vectors(self) -> list[list]:
        return self.basis.raw_columns()

    def coordinates(self, vector: Sequence) -> list | None:
        """Coordinates of a raw vector in this basis, or None if outside."""
        return solve(self.basis, [list(vector)])[0]

    def contains(self, vector: Sequence) -> bool:
        return self.coordinates(vector) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        if other.dim == 0:
            return True
        return all(c is not None for c in solve(self.basis, other.vectors()))

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient == other.ambient
            and self.dim == other.dim
            and self.contains_subspace(other)
        )

    __hash__ = None

    def __repr__(self):
        vecs = ["(" + ", ".join(str(FieldElement(self.field, x)) for x in v) + ")" for v in self.vectors()]
        return f"Subspace(dim={self.dim}, span{{{', '.join(vecs)}}})"


def solve(basis: Matrix, vectors: Sequence[Sequence]) -> list[list | None]:
    """Coordinates of each raw vector in the column basis, None where not in the span."""
    F = basis.field
    k = basis.cols
    m = len(vectors)
    if basis.rows == 0:
        return [[] for _ in vectors]
    aug = [list(row) + [v[i] for v in vectors] for i, row in enumerate(basis._data)]
    pivots = _rref(F, aug, k)
    rank = len(pivots)
    out: list[list | None] = []
    for j in range(m):
        col = k + j
        if any(not F.is_zero(aug[i][col]) for i in range(rank, basis.rows)):
            out.append(None)
            continue
        x = [F.zero] * k
        for r, pc in enumerate(pivots):
            x[pc] = aug[r][col]
        out.append(x)
    return out


def extend_to_basis(sub: Subspace) -> Matrix:
    """Square invertible matrix whose first columns are the basis of ``sub``.

    The remaining columns are standard basis vectors, chosen greedily in index
    order.
    """
    F = sub.field
    d = sub.ambient
    cols = sub.vectors()
    eye = [[F.one if i == j else F.zero for i in range(d)] for j in range(d)]
    M = Matrix.from_columns(F, cols + eye, rows=d)
    pivots = _rref(F, M.raw_rows())
    chosen = cols + [eye[p - len(cols)] for p in pivots if p >= len(cols)]
    return Matrix.from_columns(F, chosen, rows=d)


# ---------------------------------------------------------------------------
# operations under their functional names


def mat_arith(A: Matrix, B, op: str) -> Matrix:
    if op == "add":
        return A + B
    if op == "scalar_mul":
        return A * B
    if op == "mul":
        return A @ B
    raise ValueError(f"unknown operation {op!r}")


def trace(A: Matrix) -> FieldElement:
    return A.trace()


def determinant(A: Matrix) -> FieldElement:
    return A.det()


def inverse_and_adjugate(A: Matrix) -> tuple[Matrix | None, Matrix]:
    return A.inverse(), A.adjugate()


class RankData(NamedTuple):
    rank: int
    kernel: Subspace
    image: Subspace
    solve: Callable[[Sequence], "list | None"]


def rref_kernel_image(A: Matrix) -> RankData:
    image = A.image()
    return RankData(image.dim, A.kernel(), image, image.coordinates)


def char_poly(A: Matrix) -> Polynomial:
    """det(A - t I), computed with Berkowitz's division-free recurrence."""
    if not A.is_square:
        raise DimensionError("characteristic polynomial of a non-square matrix")
    F = A.field
    n = A.rows
    a = A._data
    p = [F.one]  # coefficients of det(t I - A_r), highest degree first
    for r in range(1, n + 1):
        # A_r = [[N, c], [R, a_rr]] with N the leading (r-1)x(r-1) block
        c = [a[i][r - 1] for i in range(r - 1)]
        R = a[r - 1][: r - 1]
        col = [F.one, F.neg(a[r - 1][r - 1])]
        v = c
        for _ in range(r - 1):
            col.append(F.neg(F.sum(F.mul(x, y) for x, y in zip(R, v))))
            v = [F.sum(F.mul(a[i][j], v[j]) for j in range(r - 1)) for i in range(r - 1)]
        newp = []
        for i in range(r + 1):
            acc = F.zero
            for j in range(max(0, i - len(col) + 1), min(i, len(p) - 1) + 1):
                acc = F.add(acc, F.mul(col[i - j], p[j]))
            newp.append(acc)
        p = newp
    coeffs = list(reversed(p))
    if n % 2:
        coeffs = [F.neg(x) for x in coeffs]
    return Polynomial._from_raw(F, coeffs)


def min_poly(A: Matrix) -> Polynomial:
    """Monic minimal polynomial from Krylov chains of the standard basis vectors."""
    if not A.is_square:
        raise DimensionError("minimal polynomial of a non-square matrix")
    F = A.field
    n = A.rows
    result = Polynomial.constant(F, 1)
    for i in range(n):
        e = [F.one if k == i else F.zero for k in range(n)]
        if result.degree >= 1 and all(F.is_zero(x) for x in eval_poly_at_matrix(result, A).raw_column(i)):
            continue
        chain = [e]
        while True:
            nxt = A.apply(chain[-1])
            coords = solve(Matrix.from_columns(F, chain), [nxt])[0]
            if coords is not None:
                local = Polynomial._from_raw(F, [F.neg(c) for c in coords] + [F.one])
                break
            chain.append(nxt)
        result = poly_lcm(result, local)
    return result


def eval_poly_at_matrix(p: Polynomial, A: Matrix) -> Matrix:
    if not A.is_square:
        raise DimensionError("polynomial of a non-square matrix")
    if p.field != A.field:
        raise FieldError(f"polynomial over {p.field}, matrix over {A.field}")
    F = A.field
    n = A.rows
    result = Matrix.zeros(F, n, n)
    for c in reversed(p.coeffs):
        result = result @ A + Matrix.scalar(F, n, FieldElement(F, c))
    return result


def eigenspace(A: Matrix, alpha) -> Subspace:
    if not A.is_square:
        raise DimensionError("eigenspace of a non-square matrix")
    return (A - Matrix.scalar(A.field, A.rows, alpha)).kernel()


def dual_map(A: Matrix) -> Matrix:
    return A.transpose()
