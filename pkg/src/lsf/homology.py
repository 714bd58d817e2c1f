"""Integer linear algebra for surgery presentations of 3-manifolds."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

Matrix = List[List[int]]


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: Tuple[Tuple[int, ...], ...]

    @classmethod
    def of(cls, grid: Sequence[Sequence[int]]) -> "IntMatrix":
        grid = [tuple(int(v) for v in row) for row in grid]
        cols = len(grid[0]) if grid else 0
        if any(len(r) != cols for r in grid):
            raise ValueError("ragged matrix")
        return cls(len(grid), cols, tuple(grid))

    def tolist(self) -> Matrix:
        return [list(r) for r in self.entries]


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(len(a))]


def smith_normal_form(m) -> Tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, D, V)`` with ``U m V = D``, ``D`` diagonal, ``d_i | d_{i+1}``.

    ``U`` and ``V`` are unimodular; diagonal entries are non-negative.
    """
    a = m.tolist() if isinstance(m, IntMatrix) else [list(map(int, r)) for r in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    U = _identity(rows)
    V = _identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, f):  # row dst += f * row src
        if f:
            a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
            U[dst] = [x + f * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, f):
        if f:
            for r in a:
                r[dst] += f * r[src]
            for r in V:
                r[dst] += f * r[src]

    t = 0
    while t < min(rows, cols):
        # pivot: smallest nonzero |entry| in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // p))
                    if a[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // p))
                    if a[t][j]:
                        done = False
            if done:
                # divisibility: pivot must divide the rest of the block
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                add_row(bad[0], t, 1)
                continue
            # bring the smallest remaining entry of row/column t to the pivot
            cand = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
            _, i, j = min(cand)
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return U, a, V


def invariant_factors(m) -> List[int]:
    _, d, _ = smith_normal_form(m)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def h1_from_presentation(m) -> Tuple[int, List[int]]:
    """Order of the group presented by the rows of ``m`` (0 if infinite).

    Columns are generators; the group is finite iff the relations have full
    column rank.
    """
    grid = m.tolist() if isinstance(m, IntMatrix) else [list(r) for r in m]
    cols = len(grid[0]) if grid else 0
    factors = invariant_factors(grid)
    nonzero = [d for d in factors if d]
    if len(nonzero) < cols:
        return 0, factors
    return math.prod(nonzero), factors


def determinant(m) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    a = m.tolist() if isinstance(m, IntMatrix) else [list(map(int, r)) for r in m]
    n = len(a)
    if n == 0:
        return 1
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rational_chain(framing) -> List[int]:
    """Integer chain with the same filling as one rational-framed unknot.

    Uses the all-minus continued fraction ``p/q = a_1 - 1/(a_2 - 1/(...))``;
    consecutive chain members link once.
    """
    x = Fraction(framing)
    out = []
    while True:
        a = math.ceil(x)
        out.append(a)
        if x == a:
            return out
        x = 1 / (a - x)


def chain_matrix(chain: Sequence[int]) -> Matrix:
    k = len(chain)
    return [[chain[i] if i == j else int(abs(i - j) == 1) for j in range(k)] for i in range(k)]


@dataclass(frozen=True)
class SurgeryDescription:
    linking: Tuple[Tuple[int, ...], ...]
    framings: Tuple[Fraction, ...]

    def __post_init__(self):
        n = len(self.framings)
        if len(self.linking) != n or any(len(r) != n for r in self.linking):
            raise ValueError("linking matrix size does not match framings")
        for i in range(n):
            if self.linking[i][i] != 0:
                raise ValueError("linking matrix must have zero diagonal")
            for j in range(n):
                if self.linking[i][j] != self.linking[j][i]:
                    raise ValueError("linking matrix must be symmetric")

    @classmethod
    def of(cls, linking, framings) -> "SurgeryDescription":
        return cls(tuple(tuple(int(v) for v in r) for r in linking),
                   tuple(Fraction(f) for f in framings))

    @property
    def components(self) -> int:
        return len(self.framings)

    def integer_matrix(self) -> Matrix:
        """Linking matrix after replacing rational framings by integer chains."""
        n = self.components
        chains = [rational_chain(f) for f in self.framings]
        size = n + sum(len(c) - 1 for c in chains)
        m = [[0] * size for _ in range(size)]
        for i in range(n):
            for j in range(n):
                if i != j:
                    m[i][j] = self.linking[i][j]
        nxt = n
        for i, c in enumerate(chains):
            m[i][i] = c[0]
            prev = i
            for a in c[1:]:
                m[nxt][nxt] = a
                m[prev][nxt] = m[nxt][prev] = 1
                prev = nxt
                nxt += 1
        return m


def surgery_h1(s: SurgeryDescription) -> int:
    """``|H_1|`` of the surgered manifold; 0 when infinite."""
    return abs(determinant(s.integer_matrix()))


def seifert_plumbing(b: int, ratios: Sequence) -> SurgeryDescription:
    """Surgery description of ``S^2(b; r_1, ..., r_s)``: a central unknot
    with framing ``b`` and one meridian per fiber with framing ``-1/r_i``."""
    ratios = [Fraction(r) for r in ratios]
    n = len(ratios) + 1
    link = [[0] * n for _ in range(n)]
    for i in range(1, n):
        link[0][i] = link[i][0] = 1
    return SurgeryDescription.of(link, [Fraction(b)] + [-1 / r for r in ratios])


def pseudoseiferter_matrix(a11: int, a12: int, a21: int, p: int, q: int, n: int) -> Matrix:
    return [[a11, a12, 0], [a21, 0, 1], [0, n * p * q + 1, -n * p * p]]


def pseudoseiferter_det(a11: int, a12: int, a21: int, p: int, q: int, n: int) -> int:
    """``|det M_n|``; equals ``|n p (A p + B q) + B|`` with ``A = -a12 a21``, ``B = a11``."""
    if p < 2:
        raise ValueError("p must be at least 2")
    if math.gcd(p, q) != 1:
        raise ValueError("p and q must be coprime")
    return abs(determinant(pseudoseiferter_matrix(a11, a12, a21, p, q, n)))
