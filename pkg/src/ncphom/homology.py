"""Exact integer Smith normal form and homology-group assembly.

Two elimination paths compute invariant factors:

- a dense textbook reduction for small matrices (pivot = entry of minimal
  absolute value, ties broken by lowest row then column),
- a sparse dict-of-dicts elimination for the larger boundary matrices,
  preferring unit pivots with least fill; remainders shrink the minimum
  absolute entry monotonically, so the loop terminates.

Both end with a divisibility fixup (replace any non-dividing diagonal pair
by gcd and lcm) so the returned factors form the canonical chain
d1 | d2 | ... .  Homology per degree k is assembled as

    free rank = dim C_k - rank(out of k) - rank(into k),
    torsion   = invariant factors > 1 of the incoming boundary,

with chain degrees re-indexed to topological degrees by the complex's
lowest degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

DENSE_LIMIT = 200


@dataclass
class BoundaryMatrix:
    """Sparse integer matrix: entries[(row, col)] = nonzero value."""

    rows: int
    cols: int
    entries: dict = field(default_factory=dict)

    def set(self, row: int, col: int, value: int) -> None:
        if value:
            self.entries[(row, col)] = value
        else:
            self.entries.pop((row, col), None)

    def column(self, col: int):
        return {r: v for (r, c), v in self.entries.items() if c == col}

    def is_zero(self) -> bool:
        return not self.entries

    def transpose(self) -> "BoundaryMatrix":
        return BoundaryMatrix(
            self.cols, self.rows,
            {(c, r): v for (r, c), v in self.entries.items()})


def compose(a: BoundaryMatrix, b: BoundaryMatrix) -> BoundaryMatrix:
    """Matrix product a @ b over the integers."""
    assert a.cols == b.rows, (a.cols, b.rows)
    rows_of_a: dict = {}
    for (r, c), v in a.entries.items():
        rows_of_a.setdefault(c, []).append((r, v))  # keyed by a's column
    out = BoundaryMatrix(a.rows, b.cols)
    acc: dict = {}
    for (mid, c), v in b.entries.items():
        for r, w in rows_of_a.get(mid, ()):
            key = (r, c)
            new = acc.get(key, 0) + w * v
            acc[key] = new
    out.entries = {k: v for k, v in acc.items() if v}
    return out


def invariant_factors(matrix: BoundaryMatrix):
    """All invariant factors (including 1s) as the divisibility chain, and
    the rank (= their count)."""
    if not matrix.entries:
        return [], 0
    if matrix.rows <= DENSE_LIMIT and matrix.cols <= DENSE_LIMIT:
        diag = _dense_diagonalize(matrix)
    else:
        diag = _sparse_diagonalize(matrix)
    factors = _divisibility_fixup([abs(d) for d in diag if d])
    return factors, len(factors)


def _dense_diagonalize(matrix: BoundaryMatrix):
    m, n = matrix.rows, matrix.cols
    a = [[0] * n for _ in range(m)]
    for (r, c), v in matrix.entries.items():
        a[r][c] = v
    diag = []
    top = 0
    while top < m and top < n:
        pivot = None
        best = None
        for i in range(top, m):
            row = a[i]
            for j in range(top, n):
                v = row[j]
                if v and (best is None or abs(v) < best):
                    best = abs(v)
                    pivot = (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if pivot is None:
            break
        pi, pj = pivot
        if pi != top:
            a[top], a[pi] = a[pi], a[top]
        if pj != top:
            for row in a:
                row[top], row[pj] = row[pj], row[top]
        while True:
            p = a[top][top]
            dirty = False
            for i in range(top + 1, m):
                v = a[i][top]
                if v:
                    q = v // p
                    if q:
                        arow, trow = a[i], a[top]
                        for j in range(top, n):
                            arow[j] -= q * trow[j]
                    if a[i][top]:  # remainder smaller than |p|: new pivot
                        a[top], a[i] = a[i], a[top]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(top + 1, n):
                v = a[top][j]
                if v:
                    q = v // p
                    if q:
                        for row in a:
                            row[j] -= q * row[top]
                    if a[top][j]:
                        for row in a:
                            row[top], row[j] = row[j], row[top]
                        dirty = True
                        break
            if not dirty:
                break
        diag.append(a[top][top])
        top += 1
    return diag


def _sparse_diagonalize(matrix: BoundaryMatrix):
    rows: dict = {}
    cols: dict = {}
    for (r, c), v in matrix.entries.items():
        rows.setdefault(r, {})[c] = v
        cols.setdefault(c, set()).add(r)
    diag = []

    def discard(r, c):
        row = rows[r]
        row.pop(c, None)
        if not row:
            del rows[r]
        colset = cols[c]
        colset.discard(r)
        if not colset:
            del cols[c]

    def put(r, c, v):
        if v:
            if c not in rows.setdefault(r, {}):
                cols.setdefault(c, set()).add(r)
            rows[r][c] = v
        elif r in rows and c in rows[r]:
            discard(r, c)

    while rows:
        # pivot: unit if possible, else min |v|; among those least fill
        best = None
        best_key = None
        for r, row in rows.items():
            for c, v in row.items():
                a = abs(v)
                fill = (len(row) - 1) * (len(cols[c]) - 1)
                key = (a != 1, a, fill, r, c)
                if best_key is None or key < best_key:
                    best_key = key
                    best = (r, c, v)
            if best_key is not None and best_key[0] is False \
                    and best_key[2] == 0:
                break
        pr, pc, pv = best
        # reduce the pivot column
        clean = True
        for r in list(cols[pc]):
            if r == pr:
                continue
            v = rows[r][pc]
            q = v // pv
            if 2 * abs(v - q * pv) > abs(pv):  # balanced remainder
                q += 1
            if q:
                prow = rows[pr]
                for c, w in list(prow.items()):
                    put(r, c, rows.get(r, {}).get(c, 0) - q * w)
            if rows.get(r, {}).get(pc, 0):
                clean = False
        if not clean:
            continue
        # reduce the pivot row
        for c in list(rows[pr].keys()):
            if c == pc:
                continue
            v = rows[pr][c]
            q = v // pv
            if 2 * abs(v - q * pv) > abs(pv):
                q += 1
            if q:
                for r in list(cols[pc]):
                    put(r, c, rows.get(r, {}).get(c, 0) - q * rows[r][pc])
            if rows[pr].get(c, 0):
                clean = False
        if not clean:
            continue
        # pivot row and column are clean: extract
        diag.append(pv)
        discard(pr, pc)
        assert pr not in rows or pc not in rows.get(pr, {})
    return diag


def _divisibility_fixup(factors):
    factors = sorted(factors)
    changed = True
    while changed:
        changed = False
        for i in range(len(factors)):
            for j in range(i + 1, len(factors)):
                a, b = factors[i], factors[j]
                if b % a:
                    g = gcd(a, b)
                    factors[i] = g
                    factors[j] = a * b // g
                    changed = True
        if changed:
            factors.sort()
    return factors


@dataclass(frozen=True)
class HomologyGroup:
    """One integral homology group: free rank plus invariant-factor
    torsion (each factor > 1, each dividing the next)."""

    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        assert self.free_rank >= 0
        for a, b in zip(self.torsion, self.torsion[1:]):
            assert b % a == 0, self.torsion
        assert all(t > 1 for t in self.torsion)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z_{t}" for t in self.torsion)
        return "+".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"free": self.free_rank, "torsion": list(self.torsion)}

    @staticmethod
    def from_dict(d: dict) -> "HomologyGroup":
        return HomologyGroup(d["free"], tuple(d["torsion"]))

    def doubled(self) -> "HomologyGroup":
        """Direct sum with itself."""
        return HomologyGroup(
            2 * self.free_rank,
            tuple(sorted(self.torsion + self.torsion)))


def homology_of(complex_) -> list:
    """Integral homology of a chain complex, one HomologyGroup per
    topological degree starting at 0.

    The complex supplies ascending chain degrees, a dimension per degree,
    and matrices[d] : C_d -> C_{d-1} for every degree above the lowest.
    Chain degree d becomes topological degree d - min(degrees).
    """
    degrees = list(complex_.degrees)
    assert degrees == sorted(degrees)
    offset = degrees[0]
    ranks = {}
    torsion = {}
    for d in degrees[1:]:
        factors, rank = invariant_factors(complex_.matrices[d])
        ranks[d] = rank
        torsion[d] = tuple(f for f in factors if f > 1)
    out = []
    for d in degrees:
        free = complex_.dims[d] - ranks.get(d, 0) - ranks.get(d + 1, 0)
        out.append(HomologyGroup(free, torsion.get(d + 1, ())))
    assert all(d - offset == i for i, d in enumerate(degrees))
    return out


def euler_characteristic(complex_) -> int:
    """Alternating sum of dimensions in topological degrees."""
    offset = min(complex_.degrees)
    return sum((-1) ** (d - offset) * complex_.dims[d]
               for d in complex_.degrees)
