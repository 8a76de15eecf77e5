"""Exact dense matrices over Q(zeta_m).

The public :class:`Matrix` is dense and immutable.  Elimination runs on
sparse row dictionaries internally, which keeps the large and very sparse
Koszul differentials cheap without exposing a second matrix format.
"""

from .errors import CyclotomicOrderError, NotInvariant
from .exactmath import CyclotomicNumber, Polynomial, embed


class Matrix:
    """Row-major matrix with entries in one cyclotomic field Q(zeta_m)."""

    __slots__ = ("rows", "cols", "entries", "order", "_key")

    def __init__(self, rows, cols, entries, order):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        for e in entries:
            if type(e) is not CyclotomicNumber or e.order != order:
                raise CyclotomicOrderError("matrix entries must all lie in Q(zeta_%d)" % order)
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self.order = order
        self._key = None

    @classmethod
    def _trusted(cls, rows, cols, entries, order):
        obj = object.__new__(cls)
        obj.rows, obj.cols, obj.entries, obj.order = rows, cols, tuple(entries), order
        obj._key = None
        return obj

    @classmethod
    def from_rows(cls, rows, order):
        """Build from nested lists of ints, rationals, literals or field elements."""
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls._trusted(len(rows), ncols, [embed(order, x) for r in rows for x in r], order)

    @classmethod
    def from_columns(cls, columns, nrows, order):
        columns = [list(c) for c in columns]
        return cls.from_rows(
            [[columns[j][i] for j in range(len(columns))] for i in range(nrows)], order
        ) if columns else cls.zero(nrows, 0, order)

    @classmethod
    def zero(cls, rows, cols, order):
        z = CyclotomicNumber.zero(order)
        return cls._trusted(rows, cols, [z] * (rows * cols), order)

    @classmethod
    def identity(cls, n, order):
        z, o = CyclotomicNumber.zero(order), CyclotomicNumber.one(order)
        return cls._trusted(n, n, [o if i == j else z for i in range(n) for j in range(n)], order)

    @classmethod
    def diag(cls, values, order):
        values = [embed(order, v) for v in values]
        n = len(values)
        z = CyclotomicNumber.zero(order)
        return cls._trusted(
            n, n, [values[i] if i == j else z for i in range(n) for j in range(n)], order
        )

    # -- access ------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self):
        return self.rows == self.cols

    def is_zero(self):
        return not any(self.entries)

    def key(self):
        """Hashable canonical form used for group element lookup."""
        if self._key is None:
            self._key = (self.rows, self.cols, tuple(e.coeffs for e in self.entries))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.order == other.order and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Matrix({[[str(x) for x in r] for r in self.to_rows()]}, order={self.order})"

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.to_rows()) + "]"

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if other.order != self.order:
            raise CyclotomicOrderError("matrices over different cyclotomic fields")

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix._trusted(self.rows, self.cols,
                               [a + b for a, b in zip(self.entries, other.entries)], self.order)

    def __sub__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix._trusted(self.rows, self.cols,
                               [a - b for a, b in zip(self.entries, other.entries)], self.order)

    def __neg__(self):
        return Matrix._trusted(self.rows, self.cols, [-a for a in self.entries], self.order)

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            c = embed(self.order, other)
            return Matrix._trusted(self.rows, self.cols, [a * c for a in self.entries], self.order)
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        zero = CyclotomicNumber.zero(self.order)
        n, k, m = self.rows, self.cols, other.cols
        A, B = self.entries, other.entries
        out = []
        for i in range(n):
            arow = A[i * k:(i + 1) * k]
            for j in range(m):
                acc = zero
                for t in range(k):
                    a = arow[t]
                    if a:
                        b = B[t * m + j]
                        if b:
                            acc = acc + a * b
                out.append(acc)
        return Matrix._trusted(n, m, out, self.order)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, e):
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        if e < 0:
            return inverse(self) ** (-e)
        result = Matrix.identity(self.rows, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def transpose(self):
        return Matrix._trusted(
            self.cols, self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
            self.order,
        )

    T = property(transpose)

    def hstack(self, other):
        self._check(other)
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        out = []
        for i in range(self.rows):
            out.extend(self.entries[i * self.cols:(i + 1) * self.cols])
            out.extend(other.entries[i * other.cols:(i + 1) * other.cols])
        return Matrix._trusted(self.rows, self.cols + other.cols, out, self.order)

    def select_columns(self, idx):
        idx = list(idx)
        return Matrix._trusted(
            self.rows, len(idx),
            [self.entries[i * self.cols + j] for i in range(self.rows) for j in idx],
            self.order,
        )

    def select_rows(self, idx):
        idx = list(idx)
        out = []
        for i in idx:
            out.extend(self.entries[i * self.cols:(i + 1) * self.cols])
        return Matrix._trusted(len(idx), self.cols, out, self.order)

    def trace(self):
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        acc = CyclotomicNumber.zero(self.order)
        for i in range(self.rows):
            acc = acc + self.entries[i * self.cols + i]
        return acc


def block_diag(a, b):
    a._check(b)
    zero = CyclotomicNumber.zero(a.order)
    n = a.rows + b.rows
    m = a.cols + b.cols
    out = [zero] * (n * m)
    for i in range(a.rows):
        for j in range(a.cols):
            out[i * m + j] = a[i, j]
    for i in range(b.rows):
        for j in range(b.cols):
            out[(a.rows + i) * m + a.cols + j] = b[i, j]
    return Matrix._trusted(n, m, out, a.order)


# -- sparse elimination core --------------------------------------------------

def _sparse_rows(M):
    rows = []
    c = M.cols
    for i in range(M.rows):
        r = {}
        for j, x in enumerate(M.entries[i * c:(i + 1) * c]):
            if x:
                r[j] = x
        rows.append(r)
    return rows


def _axpy(row, factor, pivot_row):
    """row -= factor * pivot_row, in place, dropping zeros."""
    for j, v in pivot_row.items():
        x = row.get(j)
        if x is None:
            row[j] = -(factor * v)
        else:
            y = x - factor * v
            if y:
                row[j] = y
            else:
                del row[j]


class Echelon:
    """Incremental row echelon basis keyed by pivot column.

    Each stored row has pivot entry 1 and no entries left of its pivot.
    Useful for rank computations and membership tests on row spaces.
    """

    def __init__(self):
        self.basis = {}

    def reduce(self, row):
        """Reduce a sparse row dict (copied) against the basis; return the remainder."""
        row = dict(row)
        basis = self.basis
        while row:
            lead = min(row)
            piv = basis.get(lead)
            if piv is None:
                return row
            _axpy(row, row[lead], piv)
        return row

    def add(self, row):
        """Insert a row; return True if it increased the rank."""
        rem = self.reduce(row)
        if not rem:
            return False
        lead = min(rem)
        inv = rem[lead].inverse()
        self.basis[lead] = {j: v * inv for j, v in rem.items()}
        return True

    @property
    def rank(self):
        return len(self.basis)


def sparse_rank(rows):
    """Rank of a list of sparse row dicts."""
    ech = Echelon()
    for r in rows:
        if r:
            ech.add(r)
    return ech.rank


def _rref_rows(rows, ncols):
    """Gauss-Jordan on sparse rows; returns (reduced rows, pivots)."""
    rows = [dict(r) for r in rows]
    pivots = []
    prow = 0
    for col in range(ncols):
        sel = None
        best = None
        for i in range(prow, len(rows)):
            if col in rows[i]:
                size = len(rows[i])
                if best is None or size < best:
                    sel, best = i, size
        if sel is None:
            continue
        rows[prow], rows[sel] = rows[sel], rows[prow]
        pr = rows[prow]
        inv = pr[col].inverse()
        pr = {j: v * inv for j, v in pr.items()}
        rows[prow] = pr
        for i in range(len(rows)):
            if i != prow:
                f = rows[i].get(col)
                if f is not None:
                    _axpy(rows[i], f, pr)
        pivots.append(col)
        prow += 1
        if prow == len(rows):
            break
    return rows, pivots


def sparse_kernel(rows, ncols, one):
    """Kernel vectors (sparse dicts) of the map whose matrix has the given sparse rows.

    ``one`` is the unit of the coefficient field.
    """
    rows, pivots = _rref_rows(rows, ncols)
    pivset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = {f: one}
        for r, p in zip(rows, pivots):
            x = r.get(f)
            if x is not None:
                v[p] = -x
        out.append(v)
    return out


def _dense(rows, nrows, ncols, order):
    zero = CyclotomicNumber.zero(order)
    out = [zero] * (nrows * ncols)
    for i, r in enumerate(rows):
        for j, v in r.items():
            out[i * ncols + j] = v
    return Matrix._trusted(nrows, ncols, out, order)


# -- public operations ---------------------------------------------------------

def rref(M):
    """Reduced row echelon form: ``(reduced, pivots, rank)``."""
    rows, pivots = _rref_rows(_sparse_rows(M), M.cols)
    return _dense(rows, M.rows, M.cols, M.order), pivots, len(pivots)


def rank(M):
    return sparse_rank(_sparse_rows(M))


def kernel_basis(M):
    """Columns spanning the right kernel of ``M`` (one per free column)."""
    one = CyclotomicNumber.one(M.order)
    cols = sparse_kernel(_sparse_rows(M), M.cols, one)
    return _dense([{} for _ in range(M.cols)], M.cols, 0, M.order) if not cols else \
        _dense([{k: col[i] for k, col in enumerate(cols) if i in col} for i in range(M.cols)],
               M.cols, len(cols), M.order)


def column_space(M):
    """Independent columns of ``M`` spanning its image (pivot columns)."""
    _, pivots, _ = rref(M)
    return M.select_columns(pivots)


def solve(A, B):
    """Return X with ``A X = B``; raise :class:`NotInvariant` if inconsistent.

    ``A`` must have independent columns, so the solution is unique.
    """
    A._check(B)
    aug = A.hstack(B)
    rows, pivots = _rref_rows(_sparse_rows(aug), aug.cols)
    if any(p >= A.cols for p in pivots):
        raise NotInvariant("linear system has no solution")
    if len(pivots) != A.cols:
        raise ValueError("coefficient matrix has dependent columns")
    zero = CyclotomicNumber.zero(A.order)
    out = []
    for i in range(A.cols):
        r = rows[i]
        out.extend(r.get(A.cols + j, zero) for j in range(B.cols))
    return Matrix._trusted(A.cols, B.cols, out, A.order)


def inverse(M):
    if not M.is_square():
        raise ValueError("inverse of a non-square matrix")
    n = M.rows
    aug = M.hstack(Matrix.identity(n, M.order))
    rows, pivots = _rref_rows(_sparse_rows(aug), 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    zero = CyclotomicNumber.zero(M.order)
    return Matrix._trusted(n, n, [rows[i].get(n + j, zero) for i in range(n) for j in range(n)],
                           M.order)


def det(M):
    """Determinant by elimination (independent of :func:`char_poly`)."""
    if not M.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    rows = [dict(r) for r in _sparse_rows(M)]
    result = CyclotomicNumber.one(M.order)
    for col in range(n):
        sel = next((i for i in range(col, n) if col in rows[i]), None)
        if sel is None:
            return CyclotomicNumber.zero(M.order)
        if sel != col:
            rows[col], rows[sel] = rows[sel], rows[col]
            result = -result
        piv = rows[col][col]
        result = result * piv
        inv = piv.inverse()
        for i in range(col + 1, n):
            f = rows[i].get(col)
            if f is not None:
                _axpy(rows[i], f * inv, rows[col])
    return result


def char_poly(M):
    """``det(x I - M)`` by the division-free Berkowitz recurrence."""
    if not M.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = M.rows
    m = M.order
    zero, one = CyclotomicNumber.zero(m), CyclotomicNumber.one(m)
    A = M.to_rows()
    vect = [one]  # highest degree first
    for k in range(n):
        a = A[k][k]
        R = A[k][:k]
        C = [A[i][k] for i in range(k)]
        # t = [1, -a, -R C, -R A_k C, ..., -R A_k^(k-1) C]
        t = [one, -a]
        v = C
        for _ in range(k):
            acc = zero
            for r, x in zip(R, v):
                if r and x:
                    acc = acc + r * x
            t.append(-acc)
            v = [sum((A[i][j] * v[j] for j in range(k) if A[i][j] and v[j]), zero)
                 for i in range(k)]
        new = []
        for i in range(k + 2):
            acc = zero
            for j in range(max(0, i - (len(t) - 1)), min(i, k) + 1):
                if t[i - j] and vect[j]:
                    acc = acc + t[i - j] * vect[j]
            new.append(acc)
        vect = new
    return Polynomial(list(reversed(vect)), "x")


def exterior_traces(M):
    """``[e_0, ..., e_d]`` with ``e_n = trace(Lambda^n M)``."""
    cp = char_poly(M)
    d = M.rows
    one = CyclotomicNumber.one(M.order)
    out = []
    for n in range(d + 1):
        c = cp[d - n]
        c = c if type(c) is CyclotomicNumber else one * c
        out.append(c if n % 2 == 0 else -c)
    return out


def restrict(M, basis):
    """Matrix of ``M`` on the column span of ``basis`` (``M B = B X``)."""
    if basis.cols == 0:
        return Matrix.zero(0, 0, M.order)
    try:
        return solve(basis, M * basis)
    except NotInvariant:
        raise NotInvariant("subspace is not stable under the operator") from None


__all__ = [
    "Echelon",
    "Matrix",
    "block_diag",
    "char_poly",
    "column_space",
    "det",
    "exterior_traces",
    "inverse",
    "kernel_basis",
    "rank",
    "restrict",
    "rref",
    "solve",
    "sparse_kernel",
    "sparse_rank",
]
