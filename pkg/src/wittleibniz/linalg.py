"""Exact sparse row reduction.

Vectors are dicts ``column -> Scalar`` without zero entries.  Rows are fed in
order; each one is reduced against the current pivots and, if something is
left, becomes a new pivot at its smallest column.  The result is the reduced
row echelon form, which is unique, so nullspace bases do not depend on the
order rows arrive in.
"""

from __future__ import annotations

from typing import Iterable

from .scalar import ONE, Scalar


class RowReducer:
    def __init__(self):
        self.pivots: dict = {}

    def _reduce(self, row: dict) -> dict:
        r = {c: v for c, v in row.items() if v}
        for c in sorted(c for c in r if c in self.pivots):
            f = r.get(c)
            if not f:
                continue
            for cc, vv in self.pivots[c].items():
                x = r.get(cc)
                x = -(f * vv) if x is None else x - f * vv
                if x:
                    r[cc] = x
                else:
                    r.pop(cc, None)
        return r

    def add(self, row: dict) -> bool:
        """Insert a row; return True if it raised the rank."""
        r = self._reduce(row)
        if not r:
            return False
        c0 = min(r)
        f = r[c0]
        if f != ONE:
            inv = f.inverse() if isinstance(f, Scalar) else 1 / f
            r = {c: v * inv for c, v in r.items()}
        for c, prow in self.pivots.items():
            g = prow.get(c0)
            if g:
                for cc, vv in r.items():
                    x = prow.get(cc)
                    x = -(g * vv) if x is None else x - g * vv
                    if x:
                        prow[cc] = x
                    else:
                        del prow[cc]
        self.pivots[c0] = r
        return True

    def contains(self, row: dict) -> bool:
        return not self._reduce(row)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def nullspace(self, n: int) -> list:
        free = [c for c in range(n) if c not in self.pivots]
        basis = []
        for fc in free:
            v = {fc: ONE}
            for c, r in self.pivots.items():
                x = r.get(fc)
                if x:
                    v[c] = -x
            basis.append(v)
        return basis


def row_reduce(rows: Iterable[dict]) -> RowReducer:
    rr = RowReducer()
    for r in rows:
        rr.add(r)
    return rr


def nullspace(rows: Iterable[dict], n: int) -> list:
    return row_reduce(rows).nullspace(n)


def rank(vectors: Iterable[dict]) -> int:
    return row_reduce(vectors).rank


def dot(row: dict, vec: dict):
    s = 0
    for c, v in row.items():
        x = vec.get(c)
        if x:
            s = v * x + s
    return s
