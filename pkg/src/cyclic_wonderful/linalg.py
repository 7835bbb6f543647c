"""Exact linear algebra kernels: rational solves, integer Smith form, LP.

Everything runs over ``fractions.Fraction`` or plain Python integers.  The
matrices in this project are small (ambient dimension n*(r-1), relation
matrices a few hundred rows) but must be exact, so there is no floating
point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = Sequence  # any indexable of ints/Fractions


def dot(u: Vector, v: Vector) -> Fraction:
    return sum((Fraction(a) * Fraction(b) for a, b in zip(u, v)), Fraction(0))


def primitive_vector(v: Iterable[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    vt = tuple(int(x) for x in v)
    g = 0
    for x in vt:
        g = gcd(g, x)
    return vt if g in (0, 1) else tuple(x // g for x in vt)


def solve_columns(cols: Sequence[Vector], target: Vector) -> list[Fraction] | None:
    """Solve sum_j c_j * cols[j] = target for independent columns.

    Returns the unique coefficient list, or None when the system is
    inconsistent.  Raises if the columns are linearly dependent, which the
    callers (simplicial cones) never produce.
    """
    k = len(cols)
    d = len(target)
    aug = [
        [Fraction(cols[j][i]) for j in range(k)] + [Fraction(target[i])]
        for i in range(d)
    ]
    pivots: list[int] = []
    row = 0
    for col in range(k):
        pr = next((i for i in range(row, d) if aug[i][col] != 0), None)
        if pr is None:
            raise ValueError("columns are linearly dependent")
        aug[row], aug[pr] = aug[pr], aug[row]
        pv = aug[row][col]
        aug[row] = [x / pv for x in aug[row]]
        for i in range(d):
            if i != row and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
    for i in range(row, d):
        if aug[i][k] != 0:
            return None
    sol = [Fraction(0)] * k
    for rr, col in enumerate(pivots):
        sol[col] = aug[rr][k]
    return sol


def matrix_rank(rows: Sequence[Vector]) -> int:
    """Rank over Q by dense Gaussian elimination (small matrices only)."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    col = 0
    while rank < len(m) and col < ncols:
        pr = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pr is None:
            col += 1
            continue
        m[rank], m[pr] = m[pr], m[rank]
        pv = m[rank][col]
        for i in range(rank + 1, len(m)):
            if m[i][col] != 0:
                f = m[i][col] / pv
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


def nullspace(rows: Sequence[Vector]) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel of the given row matrix."""
    if not rows:
        return []
    ncols = len(rows[0])
    m = [[Fraction(x) for x in row] for row in rows]
    piv_of_col: dict[int, int] = {}
    rank = 0
    for col in range(ncols):
        pr = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pr is None:
            continue
        m[rank], m[pr] = m[pr], m[rank]
        pv = m[rank][col]
        m[rank] = [x / pv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        piv_of_col[col] = rank
        rank += 1
    basis = []
    free = [c for c in range(ncols) if c not in piv_of_col]
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for col, row in piv_of_col.items():
            vec[col] = -m[row][fc]
        basis.append(tuple(vec))
    return basis


def _normalize_int_row(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    lead = row[min(row)]
    if lead < 0:
        row = {c: -v for c, v in row.items()}
    return row


class SparseEliminator:
    """Incremental fraction-free elimination over the integers.

    Rows are sparse ``{column: coefficient}`` dicts.  Feeding a row reduces
    it against the pivots collected so far; a surviving nonzero row becomes
    a new pivot.  Updates use integer cross-multiplication followed by a gcd
    division, which keeps coefficients small for the near-unimodular rows
    this project produces.
    """

    def __init__(self) -> None:
        self.pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict[int, int]) -> dict[int, int]:
        r = {c: int(v) for c, v in row.items() if v}
        while r:
            c = min(r)
            p = self.pivots.get(c)
            if p is None:
                return _normalize_int_row(r)
            a, b = p[c], r[c]
            new: dict[int, int] = {}
            for col in set(r) | set(p):
                v = a * r.get(col, 0) - b * p.get(col, 0)
                if v:
                    new[col] = v
            if new:
                new = _normalize_int_row(new)
            r = new
        return {}

    def add(self, row: dict[int, int]) -> bool:
        """Feed a row; returns True when it increased the rank."""
        r = self.reduce(row)
        if not r:
            return False
        self.pivots[min(r)] = r
        return True

    def is_in_span(self, row: dict[int, int]) -> bool:
        return not self.reduce(row)


def sparse_rank(rows: Iterable[dict[int, int]]) -> int:
    elim = SparseEliminator()
    for row in rows:
        elim.add(row)
    return elim.rank


def independent_row_indices(rows: Iterable[dict[int, int]]) -> list[int]:
    """Indices of a maximal independent subset, scanned in input order."""
    elim = SparseEliminator()
    return [i for i, row in enumerate(rows) if elim.add(row)]


def smith_divisors(mat: Sequence[Sequence[int]]) -> list[int]:
    """Nonnegative diagonal of the Smith normal form of an integer matrix.

    Returns min(m, n) entries with the divisibility chain d_1 | d_2 | ...;
    trailing zeros indicate rank deficiency.
    """
    a = [[int(x) for x in row] for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    size = min(m, n)
    divisors: list[int] = []
    t = 0
    while t < size:
        # locate a nonzero entry of smallest magnitude in the working block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            divisors.extend([0] * (size - t))
            break
        bi, bj = best
        a[t], a[bi] = a[bi], a[t]
        for row in a:
            row[t], row[bj] = row[bj], row[t]
        # clear row and column t by Euclidean steps
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, m):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    for j in range(t, n):
                        a[i][j] -= q * a[t][j]
                    if a[i][t] != 0:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    for i in range(t, m):
                        a[i][j] -= q * a[i][t]
                    if a[t][j] != 0:
                        for i in range(t, m):
                            a[i][t], a[i][j] = a[i][j], a[i][t]
                        dirty = True
        divisors.append(abs(a[t][t]))
        t += 1
    # enforce the divisibility chain
    for i in range(len(divisors)):
        for j in range(i + 1, len(divisors)):
            di, dj = divisors[i], divisors[j]
            if di and dj % di != 0:
                g = gcd(di, dj)
                divisors[i], divisors[j] = g, di * dj // g
            elif di == 0 and dj != 0:
                divisors[i], divisors[j] = dj, 0
    return divisors


# ---------------------------------------------------------------------------
# Exact LP feasibility (phase-1 simplex) and convex hull extremeness
# ---------------------------------------------------------------------------


def _lp_feasible_eq(a: list[list[Fraction]], b: list[Fraction]) -> bool:
    """Feasibility of {x >= 0 : A x = b} by phase-1 simplex with Bland's rule."""
    m = len(b)
    n = len(a[0]) if m else 0
    tab: list[list[Fraction]] = []
    for i in range(m):
        row = list(a[i])
        rhs = b[i]
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        art = [Fraction(1) if k == i else Fraction(0) for k in range(m)]
        tab.append(row + art + [rhs])
    width = n + m
    obj = [Fraction(0)] * (width + 1)
    for i in range(m):
        for j in range(width + 1):
            obj[j] -= tab[i][j]
    for i in range(m):
        obj[n + i] = Fraction(0)  # artificials carry cost 1; reduced cost is 0
    basis = list(range(n, n + m))
    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        candidates = [
            (tab[i][width] / tab[i][enter], basis[i], i)
            for i in range(m)
            if tab[i][enter] > 0
        ]
        if not candidates:
            break  # cannot happen in phase 1; defensive
        _, _, leave = min(candidates)
        pv = tab[leave][enter]
        tab[leave] = [v / pv for v in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [v - f * w for v, w in zip(tab[i], tab[leave])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [v - f * w for v, w in zip(obj, tab[leave])]
        basis[leave] = enter
    return obj[width] == 0


def in_convex_hull(point: Vector, points: Sequence[Vector]) -> bool:
    """Exact membership of ``point`` in the convex hull of ``points``."""
    if not points:
        return False
    d = len(point)
    a = [[Fraction(p[i]) for p in points] for i in range(d)]
    a.append([Fraction(1)] * len(points))
    b = [Fraction(x) for x in point] + [Fraction(1)]
    return _lp_feasible_eq(a, b)


def extreme_points(points: Iterable[Vector]) -> list[tuple[Fraction, ...]]:
    """The extreme points of the convex hull of a finite point set."""
    unique = sorted({tuple(Fraction(x) for x in p) for p in points})
    out = []
    for i, p in enumerate(unique):
        others = [q for j, q in enumerate(unique) if j != i]
        if not in_convex_hull(p, others):
            out.append(p)
    return out
