"""Exact integer linear algebra: Smith normal form, abelianizations, and
class-2 nilpotent quotients of finite presentations.

Entries are Python integers throughout; intermediate growth in Smith normal
form is real even for small matrices, so no fixed-width arithmetic is used
anywhere in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .presentations import Presentation
from .words import Word


class IntMatrix:
    """Dense rectangular matrix of exact integers."""

    def __init__(self, data: Sequence[Sequence[int]], cols: Optional[int] = None):
        self.data = [list(map(int, row)) for row in data]
        self.rows = len(self.data)
        if self.rows:
            self.cols = len(self.data[0])
            if any(len(row) != self.cols for row in self.data):
                raise ValueError("ragged rows")
        else:
            self.cols = 0 if cols is None else cols

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(r: int, c: int) -> "IntMatrix":
        return IntMatrix([[0] * c for _ in range(r)], cols=c)

    def copy(self) -> "IntMatrix":
        return IntMatrix([row[:] for row in self.data], cols=self.cols)

    def __getitem__(self, rc):
        r, c = rc
        return self.data[r][c]

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = [[sum(self.data[i][k] * other.data[k][j] for k in range(self.cols))
                for j in range(other.cols)] for i in range(self.rows)]
        return IntMatrix(out, cols=other.cols)

    def determinant(self) -> int:
        """Fraction-free Bareiss elimination; exact for integer matrices."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [row[:] for row in self.data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for r in range(k + 1, n):
                    if a[r][k] != 0:
                        a[k], a[r] = a[r], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def is_unimodular(self) -> bool:
        return self.rows == self.cols and self.determinant() in (1, -1)

    def __repr__(self):
        return f"IntMatrix({self.data})"


@dataclass(frozen=True)
class SmithForm:
    d: IntMatrix
    u: IntMatrix
    v: IntMatrix

    @property
    def diagonal(self) -> List[int]:
        return [self.d[t, t] for t in range(min(self.d.rows, self.d.cols))]


def smith_normal_form(m: IntMatrix) -> SmithForm:
    """D = U m V with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1}.

    Pivoting picks the smallest nonzero absolute value, ties broken by
    (row, col), which bounds entry growth and fixes U, V reproducibly.
    """
    a = m.copy()
    rows, cols = a.rows, a.cols
    u = IntMatrix.identity(rows)
    v = IntMatrix.identity(cols)
    ad, ud, vd = a.data, u.data, v.data

    def row_swap(i, j):
        ad[i], ad[j] = ad[j], ad[i]
        ud[i], ud[j] = ud[j], ud[i]

    def col_swap(i, j):
        for r in range(rows):
            ad[r][i], ad[r][j] = ad[r][j], ad[r][i]
        for r in range(cols):
            vd[r][i], vd[r][j] = vd[r][j], vd[r][i]

    def row_addmul(dst, src, q):
        if q:
            arow, srow = ad[dst], ad[src]
            for c in range(cols):
                arow[c] += q * srow[c]
            urow, usrc = ud[dst], ud[src]
            for c in range(rows):
                urow[c] += q * usrc[c]

    def col_addmul(dst, src, q):
        if q:
            for r in range(rows):
                ad[r][dst] += q * ad[r][src]
            for r in range(cols):
                vd[r][dst] += q * vd[r][src]

    def row_negate(i):
        ad[i] = [-x for x in ad[i]]
        ud[i] = [-x for x in ud[i]]

    for t in range(min(rows, cols)):
        while True:
            pivot = None
            for r in range(t, rows):
                for c in range(t, cols):
                    x = ad[r][c]
                    if x and (pivot is None or (abs(x), r, c) < pivot):
                        pivot = (abs(x), r, c)
            if pivot is None:
                return SmithForm(a, u, v)
            _, pr, pc = pivot
            if pr != t:
                row_swap(t, pr)
            if pc != t:
                col_swap(t, pc)
            if ad[t][t] < 0:
                row_negate(t)
            piv = ad[t][t]
            dirty = False
            for r in range(t + 1, rows):
                if ad[r][t]:
                    row_addmul(r, t, -(ad[r][t] // piv))
                    if ad[r][t]:
                        dirty = True
            for c in range(t + 1, cols):
                if ad[t][c]:
                    col_addmul(c, t, -(ad[t][c] // piv))
                    if ad[t][c]:
                        dirty = True
            if dirty:
                continue
            viol = None
            for r in range(t + 1, rows):
                for c in range(t + 1, cols):
                    if ad[r][c] % piv:
                        viol = r
                        break
                if viol is not None:
                    break
            if viol is None:
                break
            row_addmul(t, viol, 1)
    return SmithForm(a, u, v)


def kernel_basis(m: IntMatrix) -> List[List[int]]:
    """Basis of the left integer kernel {x : x m = 0}, as rows."""
    snf = smith_normal_form(m)
    diag = snf.diagonal
    out = []
    for i in range(m.rows):
        if i >= len(diag) or diag[i] == 0:
            out.append(snf.u.data[i][:])
    return out


@dataclass(frozen=True)
class AbelianInvariants:
    """Canonical form of a finitely generated abelian group."""

    torsion: Tuple[int, ...]
    free_rank: int

    def order(self) -> Optional[int]:
        if self.free_rank:
            return None
        return math.prod(self.torsion) if self.torsion else 1

    def is_trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0

    def __str__(self) -> str:
        parts = [f"Z_{d}" for d in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " x ".join(parts) if parts else "1"


def invariants_from_matrix(m: IntMatrix) -> AbelianInvariants:
    """Invariants of Z^cols modulo the row lattice of m."""
    diag = smith_normal_form(m).diagonal
    nonzero = [d for d in diag if d]
    torsion = tuple(d for d in nonzero if d > 1)
    return AbelianInvariants(torsion, m.cols - len(nonzero))


def exponent_matrix(p: Presentation) -> IntMatrix:
    idx = {g: k for k, g in enumerate(p.generators)}
    rows = []
    for r in p.relators:
        row = [0] * len(p.generators)
        for sym, exp in r.letters:
            row[idx[sym]] += exp
        rows.append(row)
    return IntMatrix(rows, cols=len(p.generators))


def abelianization(p: Presentation) -> AbelianInvariants:
    return invariants_from_matrix(exponent_matrix(p))


# ---------------------------------------------------------------------------
# Class-2 nilpotent quotients
#
# The free class-2 nilpotent group on g generators is modeled on
# Z^g x Z^{C(g,2)} with product (u1,v1)(u2,v2) = (u1+u2, v1+v2+phi(u1,u2)),
# where phi(u,w) places u_i*w_j on the pair coordinate (i,j) for i < j.
# With this cocycle the basic commutator [e_i, e_j] maps to the pair basis
# vector once (the antisymmetric full wedge would double it and introduce
# spurious 2-torsion).


@dataclass(frozen=True)
class Class2Quotient:
    abelianization: AbelianInvariants
    commutator_step: AbelianInvariants
    order: Optional[int]


def _pair_index(g: int) -> Dict[Tuple[int, int], int]:
    out = {}
    for i in range(g):
        for j in range(i + 1, g):
            out[(i, j)] = len(out)
    return out


def _collect(r: Word, idx: Dict, pidx: Dict, g: int) -> Tuple[List[int], List[int]]:
    """Image (u, v) of a relator under left-to-right collection."""
    u = [0] * g
    v = [0] * len(pidx)
    for sym, exp in r.letters:
        j = idx[sym]
        for i in range(j):
            if u[i]:
                v[pidx[(i, j)]] += exp * u[i]
        u[j] += exp
    return u, v


def _phi(u: List[int], w: List[int], pidx: Dict) -> List[int]:
    out = [0] * len(pidx)
    for (i, j), k in pidx.items():
        out[k] = u[i] * w[j]
    return out


def _wedge_basis(j: int, u: List[int], pidx: Dict) -> List[int]:
    """Coordinates of e_j wedge u."""
    out = [0] * len(pidx)
    for k, uk in enumerate(u):
        if not uk or k == j:
            continue
        if j < k:
            out[pidx[(j, k)]] += uk
        else:
            out[pidx[(k, j)]] -= uk
    return out


def class2_quotient(p: Presentation) -> Class2Quotient:
    """Exact structure of the quotient by the third lower central term.

    The normal closure of the relator images meets the center in the lattice
    spanned by all e_j wedge u_r together with one central correction per
    integer relation among the u_r (the correction map is linear modulo the
    wedge rows, so a kernel basis suffices).
    """
    g = len(p.generators)
    idx = {sym: k for k, sym in enumerate(p.generators)}
    pidx = _pair_index(g)
    m = len(pidx)
    images = [_collect(r, idx, pidx, g) for r in p.relators]
    umat = IntMatrix([u for u, _ in images], cols=g)
    ab = invariants_from_matrix(umat)

    central_rows: List[List[int]] = []
    for u, _ in images:
        for j in range(g):
            central_rows.append(_wedge_basis(j, u, pidx))
    for mvec in kernel_basis(umat):
        psi = [0] * m
        for r, (u, v) in enumerate(images):
            if mvec[r]:
                for k in range(m):
                    psi[k] += mvec[r] * v[k]
        for r in range(len(images)):
            mr = mvec[r]
            if not mr:
                continue
            cr2 = mr * (mr - 1) // 2
            if cr2:
                fr = _phi(images[r][0], images[r][0], pidx)
                for k in range(m):
                    psi[k] += cr2 * fr[k]
            for s in range(r + 1, len(images)):
                ms = mvec[s]
                if ms:
                    frs = _phi(images[r][0], images[s][0], pidx)
                    for k in range(m):
                        psi[k] += mr * ms * frs[k]
        central_rows.append(psi)

    step = invariants_from_matrix(IntMatrix(central_rows, cols=m))
    order = None
    if ab.order() is not None and step.order() is not None:
        order = ab.order() * step.order()
    return Class2Quotient(ab, step, order)
