"""Smith normal form over F_c[H].

Matrices are plain lists of rows of :class:`Poly`.  ``snf`` returns
``(U, S, V)`` with ``U @ M @ V == S``; pivots are chosen as the nonzero
entry of least degree, ties going to the lowest ``(row, column)``.
"""

from __future__ import annotations

from typing import List

from .field import Field
from .poly import Poly

PolyMatrix = List[List[Poly]]


def identity(field: Field, n: int) -> PolyMatrix:
    one, zero = Poly.const(field, 1), Poly.zero(field)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def zeros(field: Field, rows: int, cols: int) -> PolyMatrix:
    zero = Poly.zero(field)
    return [[zero] * cols for _ in range(rows)]


def matmul(field: Field, a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    rows = len(a)
    inner = len(b)
    cols = len(b[0]) if b else 0
    if rows and len(a[0]) != inner:
        raise ValueError("shape mismatch")
    out = zeros(field, rows, cols)
    for i in range(rows):
        ai = a[i]
        for k in range(inner):
            if not ai[k]:
                continue
            bk = b[k]
            for j in range(cols):
                if bk[j]:
                    out[i][j] = out[i][j] + ai[k] * bk[j]
    return out


def det(field: Field, m: PolyMatrix) -> Poly:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return Poly.const(field, 1)
    a = [list(row) for row in m]
    sign = 1
    prev = Poly.const(field, 1)
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Poly.zero(field)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                q, r = divmod(num, prev)
                assert not r, "Bareiss division must be exact"
                a[i][j] = q
        prev = a[k][k]
    return a[n - 1][n - 1].scale(sign)


def _min_entry(a: PolyMatrix, rows, cols):
    best = None
    for i in rows:
        row = a[i]
        for j in cols:
            e = row[j]
            if e and (best is None or e.degree < best[0]):
                best = (e.degree, i, j)
    return best


def _swap_rows(m: PolyMatrix, i: int, j: int) -> None:
    if i != j:
        m[i], m[j] = m[j], m[i]


def _swap_cols(m: PolyMatrix, i: int, j: int) -> None:
    if i != j:
        for row in m:
            row[i], row[j] = row[j], row[i]


def _add_row(m: PolyMatrix, dst: int, src: int, factor: Poly) -> None:
    # row_dst += factor * row_src
    rd, rs = m[dst], m[src]
    for j, x in enumerate(rs):
        if x:
            rd[j] = rd[j] + factor * x


def _add_col(m: PolyMatrix, dst: int, src: int, factor: Poly) -> None:
    for row in m:
        x = row[src]
        if x:
            row[dst] = row[dst] + x * factor


def snf(field: Field, m: PolyMatrix) -> tuple[PolyMatrix, PolyMatrix, PolyMatrix]:
    """Smith normal form of ``m``: returns ``(U, S, V)`` with ``U m V = S``.

    The diagonal of ``S`` is monic and satisfies ``s1 | s2 | ...``; ``U``
    and ``V`` are products of elementary operations, hence have nonzero
    constant determinant.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [list(r) for r in m]
    u = identity(field, rows)
    v = identity(field, cols)
    t = 0
    while t < min(rows, cols):
        best = _min_entry(a, range(t, rows), range(t, cols))
        if best is None:
            break
        _, pi, pj = best
        _swap_rows(a, t, pi)
        _swap_rows(u, t, pi)
        _swap_cols(a, t, pj)
        _swap_cols(v, t, pj)
        while True:
            clean = True
            p = a[t][t]
            for i in range(t + 1, rows):
                if a[i][t]:
                    q, r = divmod(a[i][t], p)
                    _add_row(a, i, t, -q)
                    _add_row(u, i, t, -q)
                    if r:
                        clean = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    q, r = divmod(a[t][j], p)
                    _add_col(a, j, t, -q)
                    _add_col(v, j, t, -q)
                    if r:
                        clean = False
            if not clean:
                # a remainder of lower degree survived: move it to the pivot
                best = _min_entry(a, range(t, rows), [t])
                cand = _min_entry(a, [t], range(t, cols))
                if cand is not None and (best is None or cand[0] < best[0]):
                    best = cand
                _, pi, pj = best
                _swap_rows(a, t, pi)
                _swap_rows(u, t, pi)
                _swap_cols(a, t, pj)
                _swap_cols(v, t, pj)
                continue
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] and divmod(a[i][j], p)[1]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            one = Poly.const(field, 1)
            _add_row(a, t, bad, one)
            _add_row(u, t, bad, one)
        inv = Poly.const(field, field.inv(a[t][t].lead))
        a[t] = [x * inv for x in a[t]]
        u[t] = [x * inv for x in u[t]]
        t += 1
    return u, a, v


def invariant_factors(field: Field, m: PolyMatrix) -> list[Poly]:
    _, s, _ = snf(field, m)
    return [s[i][i] for i in range(min(len(s), len(s[0]) if s else 0)) if s[i][i]]


def rank(field: Field, m: PolyMatrix) -> int:
    """Rank over the fraction field F_c(H)."""
    return len(invariant_factors(field, m))
