"""Exact dense linear algebra over a coefficient field: rank and kernel."""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple

from hochschild.algebra.coeff import CoefficientField, complexity


@dataclass(frozen=True)
class ExactMatrix:
    """A rows x cols matrix of field elements, stored row-major."""

    rows: int
    cols: int
    entries: Tuple
    field: CoefficientField

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: CoefficientField, cols: int = None) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        convert = field.convert
        return cls(len(rows), cols, tuple(convert(x) for r in rows for x in r), field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: CoefficientField) -> "ExactMatrix":
        return cls(rows, cols, (field.zero,) * (rows * cols), field)

    @classmethod
    def identity(cls, n: int, field: CoefficientField) -> "ExactMatrix":
        return cls(n, n, tuple(field.one if i == j else field.zero for i in range(n) for j in range(n)), field)

    def __getitem__(self, index):
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Tuple:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> List[List]:
        return [list(self.row(i)) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)), self.field)

    def apply(self, vector: Sequence) -> Tuple:
        if len(vector) != self.cols:
            raise ValueError("vector length does not match the column count")
        zero = self.field.zero
        out = []
        for i in range(self.rows):
            total = zero
            for a, x in zip(self.row(i), vector):
                if a and x:
                    total = total + a * x
            out.append(total)
        return tuple(out)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        columns = [self.apply(other.column(j)) for j in range(other.cols)]
        return ExactMatrix(
            self.rows,
            other.cols,
            tuple(columns[j][i] for i in range(self.rows) for j in range(other.cols)),
            self.field,
        )


def _echelon(rows: int, cols: int, entries: Tuple) -> Tuple[List[List], List[Tuple[int, int]]]:
    """
    Forward elimination.

    Columns are scanned left to right. Within a column the pivot is the row
    whose entry has the smallest complexity, ties to the lowest index. Each
    row update costs one field division; zero entries are skipped. Returns
    the worked rows and the (row, column) pivot positions in column order.
    """
    work = [list(entries[i * cols:(i + 1) * cols]) for i in range(rows)]
    active = list(range(rows))
    pivots = []
    for col in range(cols):
        candidates = [i for i in active if work[i][col]]
        if not candidates:
            continue
        p = min(candidates, key=lambda i: (complexity(work[i][col]), i))
        active.remove(p)
        prow = work[p]
        pv = prow[col]
        zero = pv - pv
        support = [k for k in range(col + 1, cols) if prow[k]]
        for i in candidates:
            if i == p:
                continue
            row = work[i]
            factor = row[col] / pv
            row[col] = zero
            for k in support:
                row[k] = row[k] - factor * prow[k]
        pivots.append((p, col))
        if not active:
            break
    return work, pivots


def _column_normalized(M: ExactMatrix) -> Tuple:
    """Entries after dividing each column by its first nonzero entry."""
    columns = []
    for j in range(M.cols):
        col = M.column(j)
        lead = next((x for x in col if x), None)
        columns.append(col if lead is None or lead == 1 else tuple(x / lead for x in col))
    return tuple(columns[j][i] for i in range(M.rows) for j in range(M.cols))


@lru_cache(maxsize=1024)
def _cached_rank(rows: int, cols: int, entries: Tuple) -> int:
    return len(_echelon(rows, cols, entries)[1])


def rank(M: ExactMatrix) -> int:
    """
    Exact rank.

    Results are memoized on the column-normalized entries, so matrices that
    differ by nonzero column scalings share one elimination.
    """
    if not M.rows or not M.cols or M.is_zero():
        return 0
    return _cached_rank(M.rows, M.cols, _column_normalized(M))


def kernel_basis(M: ExactMatrix) -> List[Tuple]:
    """
    Basis of the right null space, one vector per free column, each scaled
    so its first nonzero coordinate is 1.
    """
    field = M.field
    if not M.rows:
        return [tuple(field.one if k == j else field.zero for k in range(M.cols)) for j in range(M.cols)]
    work, pivots = _echelon(M.rows, M.cols, M.entries)
    pivot_cols = {col for _, col in pivots}
    basis = []
    for free in range(M.cols):
        if free in pivot_cols:
            continue
        v = [field.zero] * M.cols
        v[free] = field.one
        for p, col in reversed(pivots):
            if col > free:
                continue
            prow = work[p]
            total = field.zero
            for k in range(col + 1, M.cols):
                if prow[k] and v[k]:
                    total = total + prow[k] * v[k]
            if total:
                v[col] = -total / prow[col]
        lead = next(x for x in v if x)
        basis.append(tuple(x / lead for x in v) if lead != 1 else tuple(v))
    return basis


def nullity(M: ExactMatrix) -> int:
    return M.cols - rank(M)
