"""Linear constraint systems for the module corrections gamma.

Ansatz: ``[d_i, d_j] = (i-j) d_{i+j} + sum_k gamma_{i,j,k} v(k)``.  The Witt
part of the Leibniz identity holds by Jacobi, so only the module component of
L(d_a, d_b, d_c) at each index m constrains gamma, linearly:

    (b-c) g(a,b+c,m) - (a-b) g(a+b,c,m) - (alpha+m-c+beta*c) g(a,b,m-c)
      + (a-c) g(a+c,b,m) + (alpha+m-b+beta*b) g(a,c,m-b) = 0

Each equation only couples unknowns with the same shift k - (i+j).  The
reduced mode keeps the resonant shift k = i+j-alpha (integral alpha) and
writes ``g(i,j) = gamma_{i,j,i+j-alpha}``.

Scope rule: a pair (i,j) is in scope iff i, j and i+j lie in the window; in
full mode only shifts whose whole range of k fits in the module window are
kept.  An equation is emitted iff every unknown with a nonzero coefficient is
in scope.  Without the i+j condition the edge of the window produces
spurious solutions.

Basis changes ``d_i -> d_i + sum_m t_{i,m} v(m)`` move gamma by

    delta g(i,j,k) = t_{i,k-j} (alpha+k-j+beta*j) - (i-j) t_{i+j,k}

and the moduli dimension is dim(kernel + gauge) - dim(gauge).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .core import ContractError, ModuleParams
from .linalg import RowReducer, dot, rank
from .scalar import ONE, Scalar, as_int
from .verify import IndexWindow


@dataclass
class GammaSystem:
    mode: str
    params: ModuleParams
    window: IndexWindow
    module_window: IndexWindow | None
    unknowns: list
    rows: list
    row_labels: list
    gauge: str = "quotient"
    index: dict = field(init=False, repr=False)

    def __post_init__(self):
        self.index = {lab: n for n, lab in enumerate(self.unknowns)}

    def vector(self, values: dict) -> dict:
        """Column vector from a label -> value map (labels outside scope ignored)."""
        out = {}
        for lab, v in values.items():
            n = self.index.get(lab)
            v = Scalar.coerce(v)
            if n is not None and v:
                out[n] = v
        return out

    def labelled(self, vec: dict) -> dict:
        return {self.unknowns[c]: v for c, v in sorted(vec.items())}

    def residuals(self, vec: dict) -> list:
        return [lab for lab, row in zip(self.row_labels, self.rows) if dot(row, vec)]


@dataclass
class SolutionSpace:
    rank: int
    nullity: int
    basis: list


@dataclass
class GaugeSubspace:
    generators: list
    labels: list


def _in_scope(w: IndexWindow):
    lo, hi = w.lo, w.hi
    return lambda i, j: lo <= i <= hi and lo <= j <= hi and lo <= i + j <= hi


def _emit(index: dict, terms) -> dict | None:
    row: dict = {}
    for lab, c in terms:
        if not c:
            continue
        n = index.get(lab)
        if n is None:
            return None
        x = row.get(n)
        row[n] = c if x is None else x + c
    row = {n: c for n, c in row.items() if c}
    return row or None


def build_reduced_system(beta, w: IndexWindow, gauge: str = "fixed", alpha=0) -> GammaSystem:
    """Equations on g(i,j) at a single beta.

    ``gauge="fixed"`` adds the normalization rows g(0,j) = 0 (j != 0); for
    beta != -1 also g(0,0) = g(j,0) = 0; g(1,1) = 0 when beta is not 0 or -1
    and g(1,-1) = 0 when beta = 0.  ``gauge="quotient"`` adds nothing.
    """
    beta = Scalar.coerce(beta)
    p = ModuleParams(alpha, beta)
    if not p.alpha_integer:
        raise ContractError("reduced mode needs integral alpha")
    if not (w.lo <= -2 and w.hi >= 2):
        raise ContractError(f"window {w} must contain -2..2")
    if gauge not in ("fixed", "quotient"):
        raise ContractError(f"unknown gauge mode {gauge!r}")
    ok = _in_scope(w)
    unknowns = [(i, j) for i in w for j in w if ok(i, j)]
    index = {lab: n for n, lab in enumerate(unknowns)}
    rows, labels = [], []
    R = range(2 * w.lo, 2 * w.hi + 1)
    for a in R:
        for b in R:
            for c in R:
                row = _emit(index, (
                    ((a, b + c), Scalar(b - c)),
                    ((a + b, c), Scalar(b - a)),
                    ((a, b), -(beta * c + (a + b))),
                    ((a + c, b), Scalar(a - c)),
                    ((a, c), beta * b + (a + c)),
                ))
                if row:
                    rows.append(row)
                    labels.append(("identity", a, b, c))
    if gauge == "fixed":
        fixed = [(0, j) for j in w if j != 0 and ok(0, j)]
        if beta != -1:
            fixed += [(0, 0)] + [(j, 0) for j in w if j != 0 and ok(j, 0)]
            fixed.append((1, 1) if beta != 0 else (1, -1))
        for lab in fixed:
            rows.append({index[lab]: ONE})
            labels.append(("fix",) + lab)
    return GammaSystem("reduced", p, w, None, unknowns, rows, labels, gauge)


def shift_range(w: IndexWindow, kv: IndexWindow) -> range:
    """Shifts k-(i+j) for which every in-scope pair keeps k inside ``kv``."""
    return range(kv.lo - w.lo, kv.hi - w.hi + 1)


def build_full_system(p: ModuleParams, w: IndexWindow, kv: IndexWindow) -> GammaSystem:
    """Equations on gamma_{i,j,k} with no normalization."""
    alpha, beta = p.alpha, p.beta
    ok = _in_scope(w)
    shifts = shift_range(w, kv)
    unknowns = [(i, j, i + j + s) for i in w for j in w if ok(i, j) for s in shifts]
    unknowns.sort()
    index = {lab: n for n, lab in enumerate(unknowns)}
    rows, labels = [], []
    for a in w:
        for b in w:
            for c in w:
                for s in shifts:
                    m = a + b + c + s
                    row = _emit(index, (
                        ((a, b + c, m), Scalar(b - c)),
                        ((a + b, c, m), Scalar(b - a)),
                        ((a, b, m - c), -(alpha + beta * c + (m - c))),
                        ((a + c, b, m), Scalar(a - c)),
                        ((a, c, m - b), alpha + beta * b + (m - b)),
                    ))
                    if row:
                        rows.append(row)
                        labels.append(("identity", a, b, c, m))
    order = sorted(range(len(rows)), key=lambda n: labels[n])
    rows = [rows[n] for n in order]
    labels = [labels[n] for n in order]
    return GammaSystem("full", p, w, kv, unknowns, rows, labels, "quotient")


def solve(sys: GammaSystem) -> SolutionSpace:
    rr = RowReducer()
    for r in sys.rows:
        rr.add(r)
    basis = rr.nullspace(len(sys.unknowns))
    return SolutionSpace(rr.rank, len(basis), basis)


def gauge_subspace(sys: GammaSystem) -> GaugeSubspace:
    """Linearized basis changes, one generator per parameter, restricted to scope."""
    p = sys.params
    gens, labels = [], []
    if sys.mode == "reduced":
        beta = p.beta
        for s in sys.window:
            g = {}
            for lab, n in sys.index.items():
                i, j = lab
                x = Scalar(0)
                if i == s:
                    x = x + beta * j + i
                if i + j == s:
                    x = x - (i - j)
                if x:
                    g[n] = x
            if g:
                gens.append(g)
                labels.append((s,))
        return GaugeSubspace(gens, labels)
    by_first: dict = {}
    by_sum: dict = {}
    for lab, n in sys.index.items():
        i, j, k = lab
        by_first.setdefault((i, k - j), []).append((n, j))
        by_sum.setdefault((i + j, k), []).append((n, i - j))
    for s in sys.window:
        for m in sys.module_window:
            g: dict = {}
            for n, j in by_first.get((s, m), ()):
                g[n] = p.alpha + p.beta * j + m
            for n, d in by_sum.get((s, m), ()):
                x = g.get(n, Scalar(0)) - d
                if x:
                    g[n] = x
                else:
                    g.pop(n, None)
            g = {n: x for n, x in g.items() if x}
            if g:
                gens.append(g)
                labels.append((s, m))
    return GaugeSubspace(gens, labels)


def quotient_dimension(sol: SolutionSpace, gauge: GaugeSubspace) -> int:
    return rank(list(sol.basis) + list(gauge.generators)) - rank(gauge.generators)


def quotient_representatives(sol: SolutionSpace, gauge: GaugeSubspace) -> list:
    """Kernel vectors spanning a complement of the gauge directions."""
    rr = RowReducer()
    for g in gauge.generators:
        rr.add(g)
    return [v for v in sol.basis if rr.add(v)]


def gauge_in_kernel(sys: GammaSystem, gauge: GaugeSubspace) -> bool:
    return all(not dot(row, g) for g in gauge.generators for row in sys.rows)


def _resonant(sys: GammaSystem, lab) -> tuple | None:
    """Reduced-mode label (i, j) of an unknown, or None off the resonant shift."""
    if sys.mode == "reduced":
        return lab
    if not sys.params.alpha_integer:
        return None
    i, j, k = lab
    return (i, j) if k == i + j - as_int(sys.params.alpha) else None


def match_family(vec: dict, t, sys: GammaSystem) -> bool:
    """True iff ``vec``, rescaled, equals the table on the window.

    The scale is fixed at gamma_{2,1} (or the first nonzero table entry when
    the table vanishes there).

    In full mode only resonant coordinates are compared and all others must
    vanish; this is only meaningful for a gauge-fixed representative.
    """
    target = {}
    for lab in sys.unknowns:
        red = _resonant(sys, lab)
        target[lab] = t.gamma(*red) if red is not None else Scalar(0)
    labelled = sys.labelled(vec)
    if not any(target.values()):
        return not labelled
    anchor = next((lab for lab in sys.unknowns if _resonant(sys, lab) == (2, 1)), None)
    if anchor is None or not target[anchor]:
        anchor = next(lab for lab in sys.unknowns if target[lab])
    got = labelled.get(anchor)
    if not got:
        return False
    scale = target[anchor] / got
    return all(labelled.get(lab, Scalar(0)) * scale == target[lab] for lab in sys.unknowns)


@dataclass
class SolverReport:
    system: GammaSystem
    solution: SolutionSpace
    gauge_dim: int
    quotient_dim: int
    vectors: list

    def to_json(self) -> dict:
        sys = self.system
        alpha_int = sys.params.alpha_integer
        basis = []
        for n, v in enumerate(self.vectors):
            for lab, x in sys.labelled(v).items():
                gl = list(lab)
                if sys.mode == "reduced" and alpha_int:
                    gl.append(lab[0] + lab[1] - as_int(sys.params.alpha))
                basis.append({"vector": n, "gamma": gl, "value": str(x)})
        out = {"mode": sys.mode, "gauge": sys.gauge, "alpha": str(sys.params.alpha),
               "beta": str(sys.params.beta), "window": sys.window.to_json(),
               "unknowns": len(sys.unknowns), "rank": self.solution.rank,
               "nullity": self.solution.nullity, "gauge_dim": self.gauge_dim,
               "quotient_dim": self.quotient_dim, "basis": basis}
        if sys.module_window is not None:
            out["module_window"] = sys.module_window.to_json()
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


def run_solver(mode: str, p: ModuleParams, w: IndexWindow, kv: IndexWindow | None = None,
               gauge: str | None = None) -> SolverReport:
    """Build, solve and quotient one system.

    Reduced mode defaults to the fixed gauge, where the reported basis is the
    kernel; otherwise the basis lists representatives of kernel / gauge.
    """
    if mode == "reduced":
        gauge = gauge or "fixed"
        sys = build_reduced_system(p.beta, w, gauge, alpha=p.alpha)
    elif mode == "full":
        if gauge not in (None, "quotient"):
            raise ContractError("full mode is never gauge fixed; use --gauge quotient")
        if kv is None:
            raise ContractError("full mode needs a module window")
        sys = build_full_system(p, w, kv)
    else:
        raise ContractError(f"unknown mode {mode!r}")
    sol = solve(sys)
    if sys.gauge == "fixed":
        return SolverReport(sys, sol, 0, sol.nullity, sol.basis)
    gs = gauge_subspace(sys)
    gdim = rank(gs.generators)
    reps = quotient_representatives(sol, gs)
    return SolverReport(sys, sol, gdim, len(reps), reps)


def affine_match(sys: GammaSystem, basis: list, targets: dict) -> dict | None:
    """A vector in span(basis) with the prescribed label values, or None."""
    labs = [lab for lab in targets if lab in sys.index]
    # unknowns: combination coefficients c_0..c_{r-1}; one equation per target label
    r = len(basis)
    rr = RowReducer()
    for lab in labs:
        n = sys.index[lab]
        row = {q: v[n] for q, v in enumerate(basis) if n in v}
        tv = Scalar.coerce(targets[lab])
        if tv:
            row[r] = -tv
        if row:
            rr.add(row)
    if r in rr.pivots and set(rr.pivots[r]) == {r}:
        return None
    # the augmented column is free: set it to 1 and read off the coefficients
    sol = {}
    for c, prow in rr.pivots.items():
        if c < r:
            x = prow.get(r)
            if x:
                sol[c] = -x
    vec: dict = {}
    for q, cq in sol.items():
        for n, x in basis[q].items():
            y = vec.get(n, Scalar(0)) + cq * x
            if y:
                vec[n] = y
            else:
                vec.pop(n, None)
    return vec


def iv_agreement(w: IndexWindow) -> dict:
    """Compare the printed family IV recursions with the solver at beta = -1.

    Solves the gauge-fixed reduced system on ``w`` and asks whether a single
    solution with gamma_{2,1} = 1 reproduces every entry the printed
    recursions define on ``w``.
    """
    from .families import DomainError, b_coeff_IV
    sys = build_reduced_system(-1, w, "fixed")
    sol = solve(sys)
    printed = {}
    for i in w:
        for j in w:
            if (i, j) not in sys.index:
                continue
            try:
                printed[(i, j)] = b_coeff_IV(i, j)
            except DomainError:
                pass
    targets = dict(printed)
    targets[(2, 1)] = Scalar(1)
    vec = affine_match(sys, sol.basis, targets)
    return {"nullity": sol.nullity, "compared": len(printed), "consistent": vec is not None}


def project(sys: GammaSystem, vectors: Iterable[dict]) -> list:
    return [sys.labelled(v) for v in vectors]
