"""Exact rational linear algebra.

Matrices are immutable and stored row-sparse (one ``{col: Fraction}`` dict per
row); the public surface is that of a dense matrix.  Every reduction goes
through :func:`rref_rows`, which returns the unique reduced row-echelon basis
of a row space, so all chosen bases, sections and retractions are
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class DimensionError(ValueError):
    """Raised when matrix shapes do not conform."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


class RationalMatrix:
    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Sequence[dict] | None = None):
        if rows < 0 or cols < 0:
            raise DimensionError(f"negative shape {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        if data is None:
            data = tuple({} for _ in range(rows))
        elif len(data) != rows:
            raise DimensionError(f"expected {rows} rows, got {len(data)}")
        self._data = tuple(data)

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], cols: int | None = None) -> "RationalMatrix":
        data = []
        width = cols
        for row in rows:
            row = [_frac(x) for x in row]
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise DimensionError("ragged rows")
            data.append({j: x for j, x in enumerate(row) if x})
        return cls(len(data), width or 0, data)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Sequence) -> "RationalMatrix":
        if len(entries) != rows * cols:
            raise DimensionError(f"{len(entries)} entries for shape {rows}x{cols}")
        data = []
        for i in range(rows):
            r = {}
            for j in range(cols):
                x = _frac(entries[i * cols + j])
                if x:
                    r[j] = x
            data.append(r)
        return cls(rows, cols, data)

    @classmethod
    def from_dict(cls, rows: int, cols: int, entries: dict) -> "RationalMatrix":
        data = [dict() for _ in range(rows)]
        for (i, j), x in entries.items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise DimensionError(f"entry ({i},{j}) outside {rows}x{cols}")
            x = _frac(x)
            if x:
                data[i][j] = x
        return cls(rows, cols, data)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        one = Fraction(1)
        return cls(n, n, [{i: one} for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols)

    @classmethod
    def permutation(cls, images: Sequence[int], size: int | None = None) -> "RationalMatrix":
        """Matrix sending basis vector ``j`` to basis vector ``images[j]``."""
        n = len(images) if size is None else size
        data = [dict() for _ in range(n)]
        one = Fraction(1)
        for j, i in enumerate(images):
            data[i][j] = one
        return cls(n, len(images), data)

    # -- access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self._data[i].get(j, Fraction(0))

    def row(self, i: int) -> dict:
        return self._data[i]

    @property
    def entries(self) -> tuple[Fraction, ...]:
        """Row-major entries."""
        zero = Fraction(0)
        return tuple(r.get(j, zero) for r in self._data for j in range(self.cols))

    def to_lists(self) -> list[list[Fraction]]:
        zero = Fraction(0)
        return [[r.get(j, zero) for j in range(self.cols)] for r in self._data]

    def nonzero(self):
        for i, r in enumerate(self._data):
            for j, x in r.items():
                yield i, j, x

    def nnz(self) -> int:
        return sum(len(r) for r in self._data)

    @property
    def is_zero(self) -> bool:
        return not any(self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and all(a == b for a, b in zip(self._data, other._data))

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(sorted(r.items())) for r in self._data)))

    def __repr__(self) -> str:
        if self.rows * self.cols <= 64:
            body = "; ".join(" ".join(str(x) for x in row) for row in self.to_lists())
            return f"RationalMatrix({self.rows}x{self.cols}: [{body}])"
        return f"RationalMatrix({self.rows}x{self.cols}, nnz={self.nnz()})"

    # -- arithmetic ---------------------------------------------------------

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        return mat_compose(self, other)

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        data = []
        for a, b in zip(self._data, other._data):
            r = dict(a)
            for j, x in b.items():
                y = r.get(j, 0) + x
                if y:
                    r[j] = y
                else:
                    r.pop(j, None)
            data.append(r)
        return RationalMatrix(self.rows, self.cols, data)

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(self.rows, self.cols, [{j: -x for j, x in r.items()} for r in self._data])

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + (-other)

    def scale(self, c) -> "RationalMatrix":
        c = _frac(c)
        if not c:
            return RationalMatrix.zeros(self.rows, self.cols)
        return RationalMatrix(self.rows, self.cols, [{j: c * x for j, x in r.items()} for r in self._data])

    @property
    def T(self) -> "RationalMatrix":
        return mat_dual(self)

    def kron(self, other: "RationalMatrix") -> "RationalMatrix":
        return mat_kron(self, other)

    def select_rows(self, idx: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix(len(idx), self.cols, [self._data[i] for i in idx])

    def select_cols(self, idx: Sequence[int]) -> "RationalMatrix":
        where = {j: k for k, j in enumerate(idx)}
        data = []
        for r in self._data:
            if len(r) < len(where):
                data.append({where[j]: x for j, x in r.items() if j in where})
            else:
                data.append({k: r[j] for j, k in where.items() if j in r})
        return RationalMatrix(self.rows, len(idx), data)

    def col_block(self, start: int, stop: int) -> "RationalMatrix":
        data = [{j - start: x for j, x in r.items() if start <= j < stop} for r in self._data]
        return RationalMatrix(self.rows, stop - start, data)

    def row_block(self, start: int, stop: int) -> "RationalMatrix":
        return RationalMatrix(stop - start, self.cols, self._data[start:stop])

    def rank(self) -> int:
        return len(rref_rows(self._data, self.cols)[1])


Matrix = RationalMatrix


@dataclass(frozen=True)
class SubquotientPresentation:
    """A subspace or quotient of ``k^ambient_dim`` with a chosen splitting.

    ``projection`` is ``dim x ambient_dim``, ``section`` is ``ambient_dim x dim``
    and ``projection @ section`` is the identity.
    """

    ambient_dim: int
    dim: int
    projection: RationalMatrix
    section: RationalMatrix

    def check(self) -> bool:
        return (self.projection @ self.section) == RationalMatrix.identity(self.dim)


# -- row reduction ------------------------------------------------------------


def rref_rows(rows: Iterable[dict], ncols: int) -> tuple[list[dict], list[int]]:
    """Reduced row-echelon basis of the span of sparse ``rows``.

    Returns ``(basis, pivots)`` sorted by pivot column; each basis row has a 1
    in its pivot column and zeros in every other pivot column.
    """
    pivot_rows: dict[int, dict] = {}
    # col -> pivot cols whose row has a nonzero entry there (non-pivot cols only)
    occurs: dict[int, set] = {}
    for src in rows:
        if not src:
            continue
        r = dict(src)
        for c in [c for c in r if c in pivot_rows]:
            coeff = r.get(c)
            if not coeff:
                continue
            for j, x in pivot_rows[c].items():
                y = r.get(j, 0) - coeff * x
                if y:
                    r[j] = y
                else:
                    del r[j]
        if not r:
            continue
        p = min(r)
        inv = 1 / r[p]
        if inv != 1:
            r = {j: x * inv for j, x in r.items()}
        # clear column p from existing pivot rows
        for q in occurs.pop(p, ()):
            prow = pivot_rows[q]
            coeff = prow.get(p)
            if not coeff:
                continue
            for j, x in r.items():
                y = prow.get(j, 0) - coeff * x
                if y:
                    prow[j] = y
                    if j != p:
                        occurs.setdefault(j, set()).add(q)
                else:
                    del prow[j]
                    if j in occurs:
                        occurs[j].discard(q)
        pivot_rows[p] = r
        for j in r:
            if j != p:
                occurs.setdefault(j, set()).add(p)
    pivots = sorted(pivot_rows)
    return [pivot_rows[p] for p in pivots], pivots


def rref(a: RationalMatrix) -> tuple[RationalMatrix, list[int]]:
    basis, pivots = rref_rows(a._data, a.cols)
    return RationalMatrix(len(basis), a.cols, basis), pivots


def rank(a: RationalMatrix) -> int:
    return a.rank()


# -- operations ---------------------------------------------------------------


def mat_compose(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Exact product ``a @ b``."""
    if a.cols != b.rows:
        raise DimensionError(f"cannot compose {a.shape} with {b.shape}")
    bd = b._data
    data = []
    for r in a._data:
        out: dict = {}
        for k, x in r.items():
            for j, y in bd[k].items():
                out[j] = out.get(j, 0) + x * y
        data.append({j: v for j, v in out.items() if v})
    return RationalMatrix(a.rows, b.cols, data)


def mat_kron(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Kronecker product: ``(a⊗b)[i*b.rows+k, j*b.cols+l] = a[i,j]*b[k,l]``."""
    data = []
    bc = b.cols
    for ra in a._data:
        for rb in b._data:
            if not ra or not rb:
                data.append({})
                continue
            data.append({j * bc + l: x * y for j, x in ra.items() for l, y in rb.items()})
    return RationalMatrix(a.rows * b.rows, a.cols * b.cols, data)


def mat_direct_sum(*mats: RationalMatrix) -> RationalMatrix:
    data = []
    col = 0
    for m in mats:
        for r in m._data:
            data.append({j + col: x for j, x in r.items()})
        col += m.cols
    return RationalMatrix(len(data), col, data)


def mat_dual(a: RationalMatrix) -> RationalMatrix:
    """Transpose: the matrix of the dual map in dual bases."""
    data = [dict() for _ in range(a.cols)]
    for i, r in enumerate(a._data):
        for j, x in r.items():
            data[j][i] = x
    return RationalMatrix(a.cols, a.rows, data)


def hstack(mats: Sequence[RationalMatrix], rows: int | None = None) -> RationalMatrix:
    if not mats:
        return RationalMatrix.zeros(rows or 0, 0)
    n = mats[0].rows
    if any(m.rows != n for m in mats):
        raise DimensionError("hstack row mismatch")
    data = [dict() for _ in range(n)]
    col = 0
    for m in mats:
        for i, r in enumerate(m._data):
            if r:
                d = data[i]
                for j, x in r.items():
                    d[j + col] = x
        col += m.cols
    return RationalMatrix(n, col, data)


def vstack(mats: Sequence[RationalMatrix], cols: int | None = None) -> RationalMatrix:
    if not mats:
        return RationalMatrix.zeros(0, cols or 0)
    n = mats[0].cols
    if any(m.cols != n for m in mats):
        raise DimensionError("vstack column mismatch")
    data = []
    for m in mats:
        data.extend(m._data)
    return RationalMatrix(len(data), n, data)


def swap_matrix(m: int, n: int) -> RationalMatrix:
    """The symmetry ``k^m ⊗ k^n -> k^n ⊗ k^m``."""
    return RationalMatrix.permutation([j * m + i for i in range(m) for j in range(n)])


def cokernel(a: RationalMatrix) -> SubquotientPresentation:
    """Presentation of ``k^a.rows / im(a)``.

    The section picks the pivot-free coordinates of the reduced echelon form of
    the image.
    """
    basis, pivots = rref_rows(mat_dual(a)._data, a.rows)
    pivset = set(pivots)
    free = [j for j in range(a.rows) if j not in pivset]
    where = {j: k for k, j in enumerate(free)}
    one = Fraction(1)
    proj = [dict() for _ in free]
    for k, j in enumerate(free):
        proj[k][j] = one
    for p, row in zip(pivots, basis):
        for j, x in row.items():
            if j != p:
                proj[where[j]][p] = -x
    projection = RationalMatrix(len(free), a.rows, proj)
    section = RationalMatrix.permutation(free, a.rows)
    return SubquotientPresentation(a.rows, len(free), projection, section)


def kernel_subspace(a: RationalMatrix) -> SubquotientPresentation:
    """Presentation of ``ker(a)``: inclusion as section, coordinate retraction as projection."""
    basis, pivots = rref_rows(a._data, a.cols)
    pivset = set(pivots)
    free = [j for j in range(a.cols) if j not in pivset]
    where = {j: k for k, j in enumerate(free)}
    one = Fraction(1)
    incl = [dict() for _ in range(a.cols)]
    for k, j in enumerate(free):
        incl[j][k] = one
    for p, row in zip(pivots, basis):
        for j, x in row.items():
            if j != p:
                incl[p][where[j]] = -x
    inclusion = RationalMatrix(a.cols, len(free), incl)
    retraction = mat_dual(RationalMatrix.permutation(free, a.cols))
    return SubquotientPresentation(a.cols, len(free), retraction, inclusion)


def is_isomorphism(a: RationalMatrix) -> bool:
    return a.rows == a.cols and a.rank() == a.rows


def is_injective(a: RationalMatrix) -> bool:
    return a.rank() == a.cols


def is_surjective(a: RationalMatrix) -> bool:
    return a.rank() == a.rows


def solve(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix | None:
    """Some ``x`` with ``a @ x == b``, or ``None`` when the system is inconsistent."""
    if a.rows != b.rows:
        raise DimensionError(f"cannot solve {a.shape} against {b.shape}")
    m = a.cols
    aug = [dict(ra) for ra in a._data]
    for d, rb in zip(aug, b._data):
        for j, x in rb.items():
            d[m + j] = x
    basis, pivots = rref_rows(aug, m + b.cols)
    if pivots and pivots[-1] >= m:
        return None
    data = [dict() for _ in range(m)]
    for p, row in zip(pivots, basis):
        data[p] = {j - m: x for j, x in row.items() if j >= m}
    return RationalMatrix(m, b.cols, data)


def inverse(a: RationalMatrix) -> RationalMatrix:
    if not is_isomorphism(a):
        raise ValueError(f"matrix {a.shape} is not invertible")
    return solve(a, RationalMatrix.identity(a.rows))
