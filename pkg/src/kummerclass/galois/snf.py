"""Smith normal form over the integers, with unimodular transforms."""

from __future__ import annotations

Matrix = list[list[int]]


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _copy(m: Matrix) -> Matrix:
    return [list(row) for row in m]


class _State:
    # U @ A @ V == S is maintained throughout; Uinv tracks U^-1.
    def __init__(self, a: Matrix):
        self.s = _copy(a)
        self.rows = len(a)
        self.cols = len(a[0]) if a else 0
        self.u = _identity(self.rows)
        self.uinv = _identity(self.rows)
        self.v = _identity(self.cols)

    def swap_rows(self, i, j):
        if i == j:
            return
        for m in (self.s, self.u):
            m[i], m[j] = m[j], m[i]
        for row in self.uinv:
            row[i], row[j] = row[j], row[i]

    def swap_cols(self, i, j):
        if i == j:
            return
        for m in (self.s, self.v):
            for row in m:
                row[i], row[j] = row[j], row[i]

    def add_row(self, src, dst, k):
        """row[dst] += k * row[src]"""
        if k == 0:
            return
        for m in (self.s, self.u):
            rs, rd = m[src], m[dst]
            for c in range(len(rd)):
                rd[c] += k * rs[c]
        for row in self.uinv:
            row[src] -= k * row[dst]

    def add_col(self, src, dst, k):
        """col[dst] += k * col[src]"""
        if k == 0:
            return
        for m in (self.s, self.v):
            for row in m:
                row[dst] += k * row[src]

    def negate_row(self, i):
        for m in (self.s, self.u):
            m[i] = [-x for x in m[i]]
        for row in self.uinv:
            row[i] = -row[i]


def smith_normal_form(a: Matrix) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    """Return ``(S, U, U_inv, V)`` with ``U @ a @ V == S`` diagonal.

    The diagonal entries are non-negative and each divides the next.  The input
    is not modified.
    """
    st = _State(a)
    s = st.s
    m, n = st.rows, st.cols
    for t in range(min(m, n)):
        while True:
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    if s[i][j] and (pivot is None or abs(s[i][j]) < abs(s[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                return s, st.u, st.uinv, st.v
            st.swap_rows(t, pivot[0])
            st.swap_cols(t, pivot[1])
            p = s[t][t]
            dirty = False
            for i in range(t + 1, m):
                if s[i][t]:
                    st.add_row(t, i, -(s[i][t] // p))
                    dirty = dirty or s[i][t] != 0
            for j in range(t + 1, n):
                if s[t][j]:
                    st.add_col(t, j, -(s[t][j] // p))
                    dirty = dirty or s[t][j] != 0
            if dirty:
                continue
            # divisibility chain: fold any offending row into the pivot row
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if s[i][j] % p),
                None,
            )
            if bad is None:
                break
            st.add_row(bad, t, 1)
        if s[t][t] < 0:
            st.negate_row(t)
    return s, st.u, st.uinv, st.v


def diagonal(s: Matrix) -> list[int]:
    return [s[i][i] for i in range(min(len(s), len(s[0]) if s else 0))]


def invariant_factors(a: Matrix) -> list[int]:
    """Non-zero Smith invariants ``d_1 | d_2 | ...`` of ``a``."""
    if not a or not a[0]:
        return []
    s = smith_normal_form(a)[0]
    return [x for x in diagonal(s) if x]


def integer_kernel(a: Matrix) -> Matrix:
    """Basis of ``{x in Z^n : a x = 0}`` as a list of column vectors."""
    n = len(a[0])
    s, _, _, v = smith_normal_form(a)
    rank = sum(1 for x in diagonal(s) if x)
    return [[v[i][j] for i in range(n)] for j in range(rank, n)]


def lattice_basis(generators: list[list[int]], dim: int) -> Matrix:
    """Basis (as column vectors) of the Z-span of ``generators`` in Z^dim."""
    if not generators:
        return []
    g = [[vec[i] for vec in generators] for i in range(dim)]
    s, _, uinv, _ = smith_normal_form(g)
    # g V = U^-1 S, so the non-zero columns of U^-1 S span the same lattice.
    basis = []
    for j, dj in enumerate(diagonal(s)):
        if dj:
            basis.append([uinv[i][j] * dj for i in range(dim)])
    return basis
