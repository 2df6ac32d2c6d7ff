"""Sparse exact linear algebra over the rationals.

Matrices are dictionaries (row, col) -> nonzero rational.  Elimination is
plain rational Gaussian elimination with a Markowitz-style pivot choice
(sparsest column, then sparsest row in it), which keeps fill-in tolerable
on the face-map matrices produced elsewhere in the package.
"""

from .rationals import QQ, ZERO

__all__ = [
    "SparseMatrix",
    "SubspaceBasis",
    "QuotientSpace",
    "CompositionNonZeroError",
    "rank",
    "kernel_basis",
    "homology_dim",
    "rank_of_rows",
]


class CompositionNonZeroError(Exception):
    """Raised when two maps that should compose to zero do not."""


class SparseMatrix:
    """An immutable-by-convention sparse matrix over QQ.

    entries maps (row, col) -> scalar; zeros are never stored.
    """

    def __init__(self, rows, cols, entries=None):
        self.rows = rows
        self.cols = cols
        self.entries = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < rows and 0 <= j < cols):
                    raise IndexError("entry (%d, %d) out of bounds" % (i, j))
                v = QQ(v)
                if v:
                    self.entries[(i, j)] = v

    @classmethod
    def from_dense(cls, data):
        rows = len(data)
        cols = len(data[0]) if rows else 0
        entries = {}
        for i, row in enumerate(data):
            for j, v in enumerate(row):
                if v:
                    entries[(i, j)] = QQ(v)
        return cls(rows, cols, entries)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): QQ(1) for i in range(n)})

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols)

    def transpose(self):
        return SparseMatrix(
            self.cols, self.rows,
            {(j, i): v for (i, j), v in self.entries.items()})

    def matmul(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch: %dx%d times %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        by_row = {}
        for (i, j), v in other.entries.items():
            by_row.setdefault(i, []).append((j, v))
        out = {}
        for (i, k), u in self.entries.items():
            for j, v in by_row.get(k, ()):
                key = (i, j)
                w = out.get(key, ZERO) + u * v
                if w:
                    out[key] = w
                elif key in out:
                    del out[key]
        return SparseMatrix(self.rows, other.cols, out)

    def apply(self, vec):
        """Multiply by a sparse column vector (dict col -> scalar)."""
        out = {}
        for (i, j), v in self.entries.items():
            if j in vec:
                w = out.get(i, ZERO) + v * vec[j]
                if w:
                    out[i] = w
                elif i in out:
                    del out[i]
        return out

    def is_zero(self):
        return not self.entries

    def row_dicts(self):
        rows = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def __eq__(self, other):
        return (isinstance(other, SparseMatrix)
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __repr__(self):
        return "SparseMatrix(%d, %d, nnz=%d)" % (
            self.rows, self.cols, len(self.entries))


class SubspaceBasis:
    """A list of linearly independent sparse vectors in k^ambient_dim."""

    def __init__(self, ambient_dim, vectors):
        self.ambient_dim = ambient_dim
        self.vectors = list(vectors)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


def rank_of_rows(rows):
    """Rank of a list of sparse rows (dicts col -> scalar).

    Destroys its input.  Pivot choice: the column hit by the fewest active
    rows, then the shortest row in that column.
    """
    rows = [r for r in rows if r]
    col_rows = {}
    for rid, r in enumerate(rows):
        for c in r:
            col_rows.setdefault(c, set()).add(rid)
    rank = 0
    while col_rows:
        # sparsest column; ties broken by index for determinism
        c = min(col_rows, key=lambda cc: (len(col_rows[cc]), cc))
        rids = col_rows[c]
        piv = min(rids, key=lambda rid: (len(rows[rid]), rid))
        piv_row = rows[piv]
        piv_val = piv_row[c]
        for rid in list(rids):
            if rid == piv:
                continue
            row = rows[rid]
            factor = row[c] / piv_val
            for cc, vv in piv_row.items():
                w = row.get(cc, ZERO) - factor * vv
                if w:
                    if cc not in row:
                        col_rows.setdefault(cc, set()).add(rid)
                    row[cc] = w
                else:
                    if cc in row:
                        del row[cc]
                        col_rows[cc].discard(rid)
        # retire the pivot row and column
        for cc in piv_row:
            s = col_rows.get(cc)
            if s is not None:
                s.discard(piv)
                if not s:
                    del col_rows[cc]
        rows[piv] = {}
        rank += 1
    return rank


def rank(M):
    """Rank of M over the rationals."""
    return rank_of_rows(M.row_dicts())


def _echelon(rows):
    """Deterministic left-to-right echelon form.

    Returns a list of (pivot_col, row_dict) with each row scaled to pivot 1
    and fully reduced against the others (RREF rows).
    """
    pivots = []  # (col, row)
    for row in rows:
        row = dict(row)
        for pc, prow in pivots:
            if pc in row:
                factor = row[pc]
                for cc, vv in prow.items():
                    w = row.get(cc, ZERO) - factor * vv
                    if w:
                        row[cc] = w
                    elif cc in row:
                        del row[cc]
        if not row:
            continue
        pc = min(row)
        pv = row[pc]
        row = {cc: vv / pv for cc, vv in row.items()}
        # back-reduce existing pivots
        for i, (opc, orow) in enumerate(pivots):
            if pc in orow:
                factor = orow[pc]
                new = dict(orow)
                for cc, vv in row.items():
                    w = new.get(cc, ZERO) - factor * vv
                    if w:
                        new[cc] = w
                    elif cc in new:
                        del new[cc]
                pivots[i] = (opc, new)
        pivots.append((pc, row))
    pivots.sort(key=lambda t: t[0])
    return pivots


def kernel_basis(M):
    """Basis of the right null space of M; length = cols - rank."""
    pivots = _echelon(M.row_dicts())
    pivot_cols = [pc for pc, _ in pivots]
    pivot_set = set(pivot_cols)
    free_cols = [c for c in range(M.cols) if c not in pivot_set]
    vectors = []
    for f in free_cols:
        vec = {f: QQ(1)}
        # RREF: pivot row gives x_pc = -row[f] * x_f directly
        for pc, row in pivots:
            if f in row:
                vec[pc] = -row[f]
        vectors.append(vec)
    return SubspaceBasis(M.cols, vectors)


class QuotientSpace:
    """k^ambient_dim modulo the span of a list of sparse relation vectors.

    Coordinates are arbitrary hashable labels.  The quotient basis is the
    set of non-pivot labels of the reduced echelon form of the relations.
    """

    def __init__(self, labels, relations):
        self.labels = list(labels)
        order = {lab: i for i, lab in enumerate(self.labels)}
        rows = [{order[lab]: QQ(v) for lab, v in rel.items() if v}
                for rel in relations]
        self._pivots = _echelon(rows)
        pivot_set = {pc for pc, _ in self._pivots}
        self.basis = [lab for i, lab in enumerate(self.labels)
                      if i not in pivot_set]
        self._order = order

    @property
    def dim(self):
        return len(self.basis)

    def project(self, vec):
        """Coordinates of a vector's class on the quotient basis."""
        v = {self._order[lab]: QQ(c) for lab, c in vec.items() if c}
        for pc, row in self._pivots:
            if pc in v:
                factor = v[pc]
                for cc, vv in row.items():
                    w = v.get(cc, ZERO) - factor * vv
                    if w:
                        v[cc] = w
                    elif cc in v:
                        del v[cc]
        return {self.labels[i]: c for i, c in v.items()}


def homology_dim(d_out, d_in, check=True):
    """dim ker(d_out) - rank(d_in) for a block C_in -> C_mid -> C_out.

    d_out: C_mid -> C_out, d_in: C_in -> C_mid.  Raises
    CompositionNonZeroError when d_out . d_in != 0.
    """
    if d_out.cols != d_in.rows:
        raise ValueError("middle dimensions disagree: %d vs %d"
                         % (d_out.cols, d_in.rows))
    if check and not d_out.matmul(d_in).is_zero():
        raise CompositionNonZeroError("d_out . d_in != 0: not a complex")
    h = d_out.cols - rank(d_out) - rank(d_in)
    if h < 0:
        raise CompositionNonZeroError("negative homology dimension")
    return h
