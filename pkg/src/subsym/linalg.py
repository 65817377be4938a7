"""Exact dense linear algebra by fraction-preserving Gaussian elimination.

Works over any exact field whose elements support +, -, *, / and truthiness
(GaussianRational, Fraction, gmpy2.mpq).  No pivoting heuristics beyond
first-nonzero: exactness makes numerical stability a non-issue.
"""

from __future__ import annotations

from .scalars import GR_ONE, GR_ZERO, GaussianRational


class ExactMatrix:
    """Rectangular matrix of exact field elements (rows of equal length)."""

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        if rows:
            w = len(rows[0])
            if any(len(r) != w for r in rows):
                raise ValueError("matrix rows must have equal length")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0

    @staticmethod
    def identity(n, one=GR_ONE, zero=GR_ZERO):
        return ExactMatrix([[one if i == j else zero for j in range(n)] for i in range(n)])

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([list(col) for col in zip(*self.rows)] if self.rows else [])

    def rank(self) -> int:
        _, pivots = rref(self.rows)
        return len(pivots)

    def kernel_basis(self):
        return kernel_basis(self.rows, self.ncols)

    def solve(self, b):
        return solve(self.rows, b)


def rref(rows):
    """Reduced row echelon form; returns (new rows, pivot column list)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        if piv != 1:
            inv_row = m[r]
            m[r] = [x / piv for x in inv_row]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                ri, rr = m[i], m[r]
                m[i] = [a - f * b for a, b in zip(ri, rr)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(rows) -> int:
    _, pivots = rref(rows)
    return len(pivots)


def kernel_basis(rows, ncols=None):
    """Basis of the right null space {x : M x = 0} as a list of vectors."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(rows[0])
    if not rows:
        rows = []
    m, pivots = rref(rows)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    zero, one = _zero_one_like(rows)
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(v)
    return basis


def solve(rows, b):
    """Solve M x = b exactly.

    Returns (particular_solution, kernel_basis) or None when inconsistent.
    The solution is unique iff the kernel basis is empty.
    """
    if not rows:
        raise ValueError("empty system")
    ncols = len(rows[0])
    aug = [list(r) + [bv] for r, bv in zip(rows, b)]
    m, pivots = rref(aug)
    # inconsistent iff a pivot lands in the augmented column
    if ncols in pivots:
        return None
    zero, one = _zero_one_like(rows)
    x = [zero] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = m[r][ncols]
    kern = kernel_basis(rows, ncols)
    return x, kern


def _zero_one_like(rows):
    for r in rows:
        for x in r:
            if isinstance(x, GaussianRational):
                return GR_ZERO, GR_ONE
            return x - x, (x - x) + 1
    return GR_ZERO, GR_ONE


def span_rank(vectors, ncols=None) -> int:
    """Rank of the span of a list of coordinate vectors."""
    vecs = [v for v in vectors if any(v)]
    if not vecs:
        return 0
    return rank(vecs)
