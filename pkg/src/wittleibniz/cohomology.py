"""Low-degree Leibniz cohomology of W with adjoint coefficients.

Cochains take values in W only.  Conventions:

    derivation defect   D([x,y]) - [D(x),y] - [x,D(y)]
    coboundary          f(x,y) = [g(x),y] + [x,g(y)] - g([x,y])
    2-cocycle defect    [x,phi(y,z)] - [phi(x,y),z] + [phi(x,z),y]
                        + phi(x,[y,z]) - phi([x,y],z) + phi([x,z],y)

Dimension counts are done one weight s at a time: degree 1 cochains are
``d_i -> t_i d_{i+s}``, degree 2 cochains ``(d_i,d_j) -> c_{i,j} d_{i+j+s}``.
Equations use the same scope rule as the gamma solver: an equation is kept
only if every coefficient it references with a nonzero factor is in scope.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Mapping

from .core import ContractError, LeibnizElement, WittElement, witt_bracket
from .linalg import RowReducer, rank
from .scalar import Scalar
from .verify import Failure, IndexWindow, VerificationReport

_ZW = WittElement()


def _d(i: int) -> WittElement:
    return WittElement.basis(i)


@dataclass
class LinearCochain:
    """A linear map W -> W given on basis vectors; zero off ``values``."""

    values: Mapping[int, WittElement] = field(default_factory=dict)

    def __call__(self, i: int) -> WittElement:
        return self.values.get(i, _ZW)

    def apply(self, x: WittElement) -> WittElement:
        out = _ZW
        for i, c in x.items():
            out = out + self(i).scale(c)
        return out

    @classmethod
    def graded(cls, weight: int, coeffs: Mapping[int, object]) -> "LinearCochain":
        return cls({i: WittElement({i + weight: c}) for i, c in coeffs.items()})


class BilinearCochain:
    """A bilinear map W x W -> W on basis pairs.

    Either a finite table or a rule ``(i, j) -> WittElement`` evaluated
    lazily (and memoized), which is how coboundaries of arbitrary cochains
    are represented without fixing a support in advance.
    """

    def __init__(self, values: Mapping | None = None,
                 rule: Callable[[int, int], WittElement] | None = None):
        self._values = dict(values or {})
        self._rule = rule

    def __call__(self, i: int, j: int) -> WittElement:
        v = self._values.get((i, j))
        if v is None:
            v = self._rule(i, j) if self._rule else _ZW
            if self._rule:
                self._values[(i, j)] = v
        return v

    def apply(self, x: WittElement, y: WittElement) -> WittElement:
        out = _ZW
        for i, a in x.items():
            for j, b in y.items():
                out = out + self(i, j).scale(a * b)
        return out

    @classmethod
    def graded(cls, weight: int, coeffs: Mapping) -> "BilinearCochain":
        return cls({(i, j): WittElement({i + j + weight: c}) for (i, j), c in coeffs.items()})


def derivation_defect(D: LinearCochain, i: int, j: int) -> WittElement:
    return (D.apply(witt_bracket(_d(i), _d(j))) - witt_bracket(D(i), _d(j))
            - witt_bracket(_d(i), D(j)))


def coboundary2(g: LinearCochain) -> BilinearCochain:
    def rule(i: int, j: int) -> WittElement:
        return (witt_bracket(g(i), _d(j)) + witt_bracket(_d(i), g(j))
                - g.apply(witt_bracket(_d(i), _d(j))))
    return BilinearCochain(rule=rule)


def cocycle_defect2(phi: BilinearCochain, i: int, j: int, k: int) -> WittElement:
    x, y, z = _d(i), _d(j), _d(k)
    br = witt_bracket
    return (br(x, phi(j, k)) - br(phi(i, j), z) + br(phi(i, k), y)
            + phi.apply(x, br(y, z)) - phi.apply(br(x, y), z) + phi.apply(br(x, z), y))


def antisymmetry_report(phi: BilinearCochain, w: IndexWindow) -> VerificationReport:
    """phi(d_i,d_i) = 0 and phi(d_i,d_j) = -phi(d_j,d_i) for i < j in ``w``."""
    rep = VerificationReport({"cochain": "bilinear"}, w, ("antisym", "diag"))
    for i in w:
        for j in w:
            if j < i:
                continue
            rep.triples_checked += 1
            if i == j:
                v = phi(i, i)
                kind = "diag"
            else:
                v = phi(i, j) + phi(j, i)
                kind = "antisym"
            if v:
                rep.failures.append(Failure(kind, (i, j), LeibnizElement(v)))
    rep.failures.sort(key=lambda f: (f.kind, f.indices))
    return rep


# graded dimension counts ---------------------------------------------------

def _row(index: dict, terms) -> dict | None:
    row: dict = {}
    for lab, c in terms:
        if not c:
            continue
        n = index.get(lab)
        if n is None:
            return None
        row[n] = row.get(n, 0) + c
    row = {n: Scalar(c) for n, c in row.items() if c}
    return row or None


def cocycle_row2(s: int, i: int, j: int, k: int):
    """Coefficients of the weight-s cocycle equation at (d_i, d_j, d_k)."""
    return (((j, k), i - j - k - s), ((i, j), -(i + j + s - k)), ((i, k), i + k + s - j),
            ((i, j + k), j - k), ((i + j, k), -(i - j)), ((i + k, j), i - k))


@dataclass
class CohomologyReport:
    degree: int
    weight: int
    window: IndexWindow
    cocycle_dim: int
    coboundary_dim: int

    @property
    def h_dim(self) -> int:
        return self.cocycle_dim - self.coboundary_dim

    def to_json(self) -> dict:
        return {"degree": self.degree, "weight": self.weight, "window": self.window.to_json(),
                "cocycle_dim": self.cocycle_dim, "coboundary_dim": self.coboundary_dim,
                "h_dim": self.h_dim}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


def _radius_check(w: IndexWindow, weight: int, margin: int) -> None:
    if min(-w.lo, w.hi) < abs(weight) + margin:
        raise ContractError(f"window {w} too small for weight {weight}: "
                            f"radius must be at least {abs(weight) + margin}")


def h1_report(weight: int, w: IndexWindow) -> CohomologyReport:
    _radius_check(w, weight, 2)
    s = weight
    index = {i: n for n, i in enumerate(w)}
    rr = RowReducer()
    for i in w:
        for j in w:
            # D(d_i) = t_i d_{i+s}: derivation defect coefficient at d_{i+j+s}
            r = _row(index, ((i + j, i - j), (i, -(i + s - j)), (j, -(i - j - s))))
            if r:
                rr.add(r)
    kernel = rr.nullspace(len(index))
    # inner derivations ad(d_s): t_i proportional to i - s
    inner = {index[i]: Scalar(i - s) for i in w if i != s}
    inner = [inner] if inner else []
    if not _inside(kernel, inner):
        raise ArithmeticError("inner derivation is not a cocycle on the window")
    return CohomologyReport(1, weight, w, len(kernel), rank(inner))


def _inside(kernel: list, vectors: list) -> bool:
    rr = RowReducer()
    for v in kernel:
        rr.add(v)
    return all(rr.contains(v) for v in vectors)


def _graded2_unknowns(w: IndexWindow) -> dict:
    lo, hi = w.lo, w.hi
    labs = [(i, j) for i in w for j in w if lo <= i + j <= hi]
    return {lab: n for n, lab in enumerate(labs)}


def h2_system(weight: int, w: IndexWindow) -> tuple:
    index = _graded2_unknowns(w)
    rows = []
    for i in w:
        for j in w:
            for k in w:
                r = _row(index, cocycle_row2(weight, i, j, k))
                if r:
                    rows.append(r)
    return index, rows


def h2_coboundaries(weight: int, w: IndexWindow, index: dict) -> list:
    s = weight
    gens = []
    for t in w:
        g = {}
        for (i, j), n in index.items():
            x = 0
            if i == t:
                x += i + s - j
            if j == t:
                x += i - j - s
            if i + j == t:
                x -= i - j
            if x:
                g[n] = Scalar(x)
        if g:
            gens.append(g)
    return gens


def h2_report(weight: int, w: IndexWindow) -> CohomologyReport:
    _radius_check(w, weight, 3)
    index, rows = h2_system(weight, w)
    rr = RowReducer()
    for r in rows:
        rr.add(r)
    kernel = rr.nullspace(len(index))
    gens = h2_coboundaries(weight, w, index)
    if not _inside(kernel, gens):
        raise ArithmeticError("graded coboundaries are not cocycles on the window")
    return CohomologyReport(2, weight, w, len(kernel), rank(gens))


def graded_h1_dimension(weight: int, w: IndexWindow) -> int:
    return h1_report(weight, w).h_dim


def graded_h2_dimension(weight: int, w: IndexWindow) -> int:
    return h2_report(weight, w).h_dim


def generating_triples(w: IndexWindow) -> list:
    """(0,0,0), (i,0,0), (0,i,i), (i,i,0), (i,i,j) over ``w``."""
    trip = {(0, 0, 0)}
    for i in w:
        trip |= {(i, 0, 0), (0, i, i), (i, i, 0)}
        for j in w:
            trip.add((i, i, j))
    return sorted(trip)


def generating_triple_certificate(weight: int, w: IndexWindow, inner: IndexWindow) -> dict:
    """Solve Phi(phi) = 0 on the generating triples only, then check antisymmetry.

    Unknowns are all c_{i,j} with i, j in ``w``; the check runs on ``inner``,
    away from the edge where the truncated system is underdetermined.
    """
    if not w.contains_window(inner):
        raise ContractError("inner window must lie inside the solving window")
    labs = [(i, j) for i in w for j in w]
    index = {lab: n for n, lab in enumerate(labs)}
    big = IndexWindow(2 * w.lo, 2 * w.hi)
    rr = RowReducer()
    for (i, j, k) in generating_triples(big):
        r = _row(index, cocycle_row2(weight, i, j, k))
        if r:
            rr.add(r)
    kernel = rr.nullspace(len(index))
    bad = set()
    for v in kernel:
        val = lambda p: v.get(index[p], 0)
        for i in inner:
            for j in inner:
                if i == j and val((i, i)):
                    bad.add((i, i))
                elif i < j and val((i, j)) + val((j, i)):
                    bad.add((i, j))
    return {"weight": weight, "window": w.to_json(), "inner": inner.to_json(),
            "solutions": len(kernel), "violations": sorted(bad)}
