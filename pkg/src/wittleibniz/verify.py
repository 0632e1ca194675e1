"""Exhaustive Leibniz-identity sweeps over basis triples.

The defect is trilinear, so it vanishes on a span iff it vanishes on every
basis triple; sweeps therefore only visit basis elements.
"""

from __future__ import annotations

import itertools
import json
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .core import ContractError, LeibnizElement, ModuleElement, ModuleParams, leibniz_defect
from .scalar import Scalar

ALL_KINDS = ("ddd", "vdd", "dvd", "ddv", "vvd", "vdv", "dvv", "vvv")
_WINDOW = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


@dataclass(frozen=True)
class IndexWindow:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ContractError(f"empty window {self.lo}..{self.hi}")

    @classmethod
    def parse(cls, text: str) -> "IndexWindow":
        m = _WINDOW.match(text)
        if not m:
            raise ContractError(f"malformed window {text!r}, expected lo..hi")
        return cls(int(m.group(1)), int(m.group(2)))

    @classmethod
    def radius(cls, r: int) -> "IndexWindow":
        return cls(-r, r)

    def __iter__(self):
        return iter(range(self.lo, self.hi + 1))

    def __len__(self):
        return self.hi - self.lo + 1

    def __contains__(self, i) -> bool:
        return self.lo <= i <= self.hi

    def contains_window(self, other: "IndexWindow") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def to_json(self) -> dict:
        return {"lo": self.lo, "hi": self.hi}

    def __str__(self):
        return f"{self.lo}..{self.hi}"


@dataclass(frozen=True)
class Failure:
    kind: str
    indices: tuple
    defect: LeibnizElement

    def to_json(self) -> dict:
        return {"kind": self.kind, "indices": list(self.indices), "defect": self.defect.to_json()}


@dataclass
class VerificationReport:
    table: dict
    window: IndexWindow
    kinds: tuple
    triples_checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def failure_keys(self) -> set:
        return {(f.kind, f.indices) for f in self.failures}

    def to_json(self) -> dict:
        return {"table": self.table, "window": self.window.to_json(), "kinds": list(self.kinds),
                "triples_checked": self.triples_checked,
                "failures": [f.to_json() for f in self.failures]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


def _basis(letter: str, i: int) -> LeibnizElement:
    return LeibnizElement.d(i) if letter == "d" else LeibnizElement.v(i)


def _sweep(t, kind: str, firsts: Sequence[int], idx: Sequence[int]) -> tuple:
    checked = 0
    fails = []
    for i in firsts:
        a = _basis(kind[0], i)
        for j in idx:
            b = _basis(kind[1], j)
            for k in idx:
                checked += 1
                dft = leibniz_defect(t, a, b, _basis(kind[2], k))
                if dft:
                    fails.append(Failure(kind, (i, j, k), dft))
    return checked, fails


def _sweep_job(args):
    return _sweep(*args)


def _order(kinds: Iterable[str]) -> tuple:
    kinds = tuple(dict.fromkeys(kinds))
    for k in kinds:
        if k not in ALL_KINDS:
            raise ContractError(f"unknown triple kind {k!r}")
    return tuple(sorted(kinds))


def verify_window(t, w: IndexWindow, kinds: Iterable[str] = ALL_KINDS, *,
                  workers: int = 1) -> VerificationReport:
    """Check L(x, y, z) = 0 for all basis triples of the selected kinds in ``w``."""
    kinds = _order(kinds)
    idx = list(w)
    report = VerificationReport(t.describe(), w, kinds)
    if workers <= 1:
        results = [_sweep(t, kind, idx, idx) for kind in kinds]
    else:
        jobs = [(t, kind, [i], idx) for kind in kinds for i in idx]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_sweep_job, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    for checked, fails in results:
        report.triples_checked += checked
        report.failures.extend(fails)
    report.failures.sort(key=lambda f: (f.kind, f.indices))
    return report


ActionRule = Callable[[ModuleParams, int, int], Scalar]


def _default_action(p: ModuleParams, n: int, m: int) -> Scalar:
    return p.action_coeff(n, m)


def verify_module_axiom(p: ModuleParams, w: IndexWindow,
                        action: ActionRule | None = None) -> VerificationReport:
    """Check v(k)*[d_i,d_j] = (v(k)*d_i)*d_j - (v(k)*d_j)*d_i on ``w``.

    ``action(p, n, m)`` is the coefficient of v(n+m) in v(n)*d_m; replacing it
    is how mutation tests feed in a broken action.
    """
    act = action or _default_action
    report = VerificationReport({"module": p.to_json()}, w, ("vdd",))
    for k, i, j in itertools.product(w, w, w):
        report.triples_checked += 1
        lhs = act(p, k, i + j) * (i - j)
        rhs = act(p, k, i) * act(p, k + i, j) - act(p, k, j) * act(p, k + j, i)
        diff = lhs - rhs
        if diff:
            dft = LeibnizElement(module=ModuleElement({k + i + j: diff}))
            report.failures.append(Failure("vdd", (k, i, j), dft))
    return report
