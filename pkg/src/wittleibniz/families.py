"""Structure tables of the Leibniz algebras L = W + V(alpha, beta).

Every table has the Witt part ``[d_i, d_j] = (i - j) d_{i+j}`` and a module
correction ``gamma_{i,j} v(i + j - alpha)``.  Families:

=======  ================  ==========================================
THM1     alpha not in Z    no correction
I        alpha in Z        no correction, any beta
II       alpha in Z, b=3   gamma from the a_i / b_{i,j} recursions
III      alpha in Z, b=1   gamma_{i,j} = j(ij - 1), antidiagonal i^3 - i
IV       alpha in Z, b=-1  gamma_{i,j} = j, antidiagonal gamma_{i,-i} = -3i
X0       alpha in Z, b=0   only gamma_{i,-i} = i^3 - i
X2       alpha in Z, b=2   gamma_{i,j} = j(ij(i+j) - 2)/4, antidiagonal 0
=======  ================  ==========================================

In every family gamma vanishes whenever an index is 0.  X0 and X2 are not
part of the classical list; they are extra solutions found by the constraint
solver and are kept so that the solver output can be matched against a table.
"""

from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from gmpy2 import mpq

from .core import ContractError, ModuleParams
from .scalar import ZERO, Scalar


class DomainError(ValueError):
    """A coefficient was requested outside the region its recursion covers."""


class FamilyId(str, enum.Enum):
    THM1 = "thm1"
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    X0 = "x0"
    X2 = "x2"

    @classmethod
    def parse(cls, name: str) -> "FamilyId":
        for f in cls:
            if f.value.lower() == name.lower():
                return f
        raise ContractError(f"unknown family {name!r}")


# beta forced by each family with corrections
FORCED_BETA = {FamilyId.II: 3, FamilyId.III: 1, FamilyId.IV: -1, FamilyId.X0: 0, FamilyId.X2: 2}


def _a(i: int) -> mpq:
    return mpq((i - 1) * (i + 2) * (i + 3), 20)


def a_coeff(i: int) -> Scalar:
    """a_i of family II, defined for i outside {-1, 0, 1}."""
    if i in (-1, 0, 1):
        raise DomainError(f"a_{i} is not defined (index in {{-1,0,1}})")
    if i >= 2:
        return Scalar(_a(i))
    n = -i
    return Scalar(-mpq((n + 1) * (n - 2) * (n - 3), 20))


class _IICoefficients:
    """Memoized gamma of family II at normalization 1.

    ``sign`` selects the superdiagonal step: -1 is the version that satisfies
    the Leibniz identity, +1 reproduces the printed plus-sign variant.
    """

    BETA = 3

    def __init__(self, sign: int = -1):
        self.sign = sign
        self._diag = {2: mpq(9), -2: mpq(-9)}
        self._g: dict = {}

    def diag(self, i: int) -> mpq:
        if abs(i) < 2:
            raise DomainError(f"b_{{{i},{i}}} is outside the diagonal recursion")
        d = self._diag
        if i > 0:
            k = max(k for k in d if k > 0 and k <= i)
            while k < i:
                k += 1
                d[k] = (((k + 1) * (2 * k + 1) * d[k - 1] - (k + 1) * (4 * k - 3) * _a(k - 1)
                         - (4 * k - 1) * (k - 2) * _a(-k)) / ((k - 2) * (2 * k - 3)))
        else:
            k = min(k for k in d if k < 0 and k >= i)
            while k > i:
                # the upward relation at index k solved for b_{k-1,k-1}
                d[k - 1] = (((k - 2) * (2 * k - 3) * d[k] + (k + 1) * (4 * k - 3) * _a(k - 1)
                             + (4 * k - 1) * (k - 2) * _a(-k)) / ((k + 1) * (2 * k + 1)))
                k -= 1
        return d[i]

    def superdiag(self, i: int) -> mpq:
        return mpq(i + 1, (i - 1) * (2 * i + 1)) * ((2 * i + 3) * self.diag(i) + self.sign * (4 * i + 1) * _a(i))

    def gamma(self, i: int, j: int) -> mpq:
        key = (i, j)
        v = self._g.get(key)
        if v is None:
            v = self._gamma(i, j)
            self._g[key] = v
        return v

    def _gamma(self, i: int, j: int) -> mpq:
        if i == 0 or j == 0:
            return mpq(0)
        if i == -j:
            return -self.diag(i) / 3 if abs(i) > 1 else mpq(0)
        if j == 1:
            return _a(i)
        if j == -1:
            return -_a(-i)
        if i == 1:
            return j * _a(j)
        if i == -1:
            return j * _a(-j)
        return self.b(i, j)

    def b(self, i: int, j: int) -> mpq:
        if i == j:
            return self.diag(i)
        if i > j:
            return mpq(j, i) * self.gamma(j, i)
        if j == i + 1:
            return self.superdiag(i)
        if (i > 0) == (j > 0) or i + j > 0:
            return mpq(j, i * (j - 2)) * ((i - 1) * self.gamma(i + 1, j - 1)
                                          + (3 * i + j) * (j - 1) * _a(j - 1)
                                          - (j - i - 1) * (j + i - 1) * _a(j + i - 1)
                                          - i * (i + 3 * j - 2) * _a(i))
        # i < 0 < j with i + j < 0: the identity at (d_{-1}, d_{i+1}, d_j) solved for b_{i,j}
        B = self.BETA
        p, q = i, j
        g = self.gamma
        return ((q + 1) * mpq(p + 1, q - 1) * g(p + 1, q - 1) + (p + B * q) * g(-1, p + 1)
                - (q - 1 + B * (p + 1)) * g(-1, q) - (p + 1 - q) * g(-1, p + q + 1)) / (p + 2)


_II = {-1: _IICoefficients(-1), 1: _IICoefficients(1)}


def b_coeff_II(i: int, j: int, *, sign: int = -1) -> Scalar:
    """b_{i,j} of family II for |i|, |j| >= 2 and i != -j."""
    if abs(i) < 2 or abs(j) < 2:
        raise DomainError(f"b_{{{i},{j}}}: indices in {{-1,0,1}} are boundary entries, not b values")
    if i == -j:
        raise DomainError(f"b_{{{i},{j}}}: the antidiagonal is -b_{{j,j}}/3, not a b value")
    return Scalar(_II[sign].b(i, j))


class _IVPrinted:
    """Family IV coefficients exactly as the printed recursions give them."""

    def __init__(self):
        self._diag = {2: mpq(2), -2: mpq(-2)}
        self._b: dict = {}

    def diag(self, i: int) -> mpq:
        if abs(i) < 2:
            raise DomainError(f"b_{{{i},{i}}} is outside the diagonal recursion")
        d = self._diag
        if i > 0:
            k = max(k for k in d if 0 < k <= i)
            while k < i:
                k += 1
                d[k] = ((k + 1) * (2 * k - 3) * d[k - 1] - (2 * k - 1)) / ((2 * k + 1) * (k - 2))
        else:
            k = min(k for k in d if i <= k < 0)
            while k > i:
                d[k - 1] = ((2 * k + 1) * (k - 2) * d[k] + (2 * k - 1)) / ((k + 1) * (2 * k - 3))
                k -= 1
        return d[i]

    def b(self, i: int, j: int) -> mpq:
        if abs(i) < 2 or abs(j) < 2:
            raise DomainError(f"b_{{{i},{j}}}: the printed recursions do not reach indices in {{-1,0,1}}")
        if i == -j:
            raise DomainError(f"b_{{{i},{j}}}: antidiagonal entry, not a b value")
        key = (i, j)
        v = self._b.get(key)
        if v is None:
            v = self._compute(i, j)
            self._b[key] = v
        return v

    def _compute(self, i: int, j: int) -> mpq:
        if i == j:
            return self.diag(i)
        if i > j:
            return mpq(j, i) * self.b(j, i)
        if j == i + 1:
            return mpq(i + 1, (2 * i + 1) * (i - 1)) * ((2 * i - 1) * self.diag(i) - 1)
        if j == 2:
            raise DomainError(f"b_{{{i},{j}}}: the general step divides by j-2")
        return mpq(j, i * (j - 2)) * ((i - 1) * self.b(i + 1, j - 1) + (j - i - 1))


_IV_PRINTED = _IVPrinted()


def b_coeff_IV(i: int, j: int) -> Scalar:
    """b_{i,j} of family IV from the printed recursions (no boundary entries)."""
    return Scalar(_IV_PRINTED.b(i, j))


def _gamma_IV(i: int, j: int) -> mpq:
    # normalized solution of the constraint system at beta = -1, gamma_{2,1} = 1
    if i == 0 or j == 0:
        return mpq(0)
    if i == -j:
        return mpq(-3 * i)
    return mpq(j)


def _gamma_III(i: int, j: int) -> mpq:
    if i == 0 or j == 0:
        return mpq(0)
    if i == -j:
        return mpq(i ** 3 - i)
    return mpq(j * (i * j - 1))


def _gamma_X0(i: int, j: int) -> mpq:
    return mpq(i ** 3 - i) if i == -j else mpq(0)


def _gamma_X2(i: int, j: int) -> mpq:
    if i == 0 or j == 0 or i == -j:
        return mpq(0)
    return mpq(j * (i * j * (i + j) - 2), 4)


_CLOSED = {FamilyId.III: _gamma_III, FamilyId.IV: _gamma_IV,
           FamilyId.X0: _gamma_X0, FamilyId.X2: _gamma_X2}


@dataclass(frozen=True)
class StructureTable:
    """A multiplication table of L on the basis d_i, v(n).

    ``overrides`` replaces individual gamma_{i,j} (used for mutation tests);
    ``ii_sign`` picks the superdiagonal variant of family II.
    """

    family: FamilyId
    params: ModuleParams
    normalization: Scalar = field(default=Scalar(1))
    ii_sign: int = -1
    overrides: tuple = ()
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    @property
    def has_corrections(self) -> bool:
        return (self.family not in (FamilyId.THM1, FamilyId.I) and bool(self.normalization)) \
            or bool(self.overrides)

    def gamma(self, i: int, j: int) -> Scalar:
        key = (i, j)
        v = self._cache.get(key)
        if v is None:
            v = self._gamma(i, j)
            self._cache[key] = v
        return v

    def _gamma(self, i: int, j: int) -> Scalar:
        for (p, q), val in self.overrides:
            if (p, q) == (i, j):
                return Scalar.coerce(val)
        if self.family in (FamilyId.THM1, FamilyId.I) or not self.normalization:
            return ZERO
        if self.family is FamilyId.II:
            raw = _II[self.ii_sign].gamma(i, j)
        else:
            raw = _CLOSED[self.family](i, j)
        return self.normalization * Scalar(raw) if raw else ZERO

    def module_index(self, i: int, j: int) -> int:
        return self.params.module_index(i, j)

    def describe(self) -> dict:
        out = {"family": self.family.value, "alpha": str(self.params.alpha),
               "beta": str(self.params.beta), "normalization": str(self.normalization)}
        if self.ii_sign != -1:
            out["ii_sign"] = self.ii_sign
        if self.overrides:
            out["overrides"] = [[p, q, str(Scalar.coerce(v))] for (p, q), v in self.overrides]
        return out

    def __getstate__(self):
        return {k: getattr(self, k) for k in ("family", "params", "normalization", "ii_sign", "overrides")}

    def __setstate__(self, state):
        for k, v in state.items():
            object.__setattr__(self, k, v)
        object.__setattr__(self, "_cache", {})


def check_family(family: FamilyId, p: ModuleParams) -> None:
    if family is FamilyId.THM1:
        if p.alpha_integer:
            raise ContractError(f"family thm1 needs alpha outside Z, got {p.alpha}")
        return
    if not p.alpha_integer:
        raise ContractError(f"family {family.value} needs integral alpha, got {p.alpha}")
    forced = FORCED_BETA.get(family)
    if forced is not None and p.beta != forced:
        raise ContractError(f"family {family.value} forces beta = {forced}, got {p.beta}")


def build_table(family: FamilyId | str, p: ModuleParams, normalization=1, *,
                ii_sign: int = -1, overrides: Mapping | Iterable = ()) -> StructureTable:
    family = FamilyId.parse(family) if isinstance(family, str) else family
    check_family(family, p)
    if isinstance(overrides, Mapping):
        overrides = overrides.items()
    ov = tuple(sorted(((int(i), int(j)), Scalar.coerce(v)) for (i, j), v in overrides))
    if ov and not p.alpha_integer:
        raise ContractError("module corrections need integral alpha")
    if ii_sign not in (-1, 1):
        raise ContractError("ii_sign must be -1 or 1")
    return StructureTable(family, p, Scalar.coerce(normalization), ii_sign, ov)


def default_params(family: FamilyId, alpha, beta=None) -> ModuleParams:
    """ModuleParams with beta filled in from the family when it is forced."""
    if beta is None:
        if family not in FORCED_BETA:
            raise ContractError(f"family {family.value} needs an explicit beta")
        beta = FORCED_BETA[family]
    return ModuleParams(alpha, beta)


def gamma_of(t: StructureTable, i: int, j: int) -> Scalar:
    return t.gamma(i, j)


def table_records(t: StructureTable, indices: Iterable[int]) -> list:
    idx = list(indices)
    out = []
    for i in idx:
        for j in idx:
            g = t.gamma(i, j)
            out.append({
                "i": i, "j": j,
                "witt_index": i + j, "witt_coeff": str(Scalar(i - j)),
                "module_index": t.module_index(i, j) if t.params.alpha_integer else None,
                "module_coeff": str(g),
            })
    return out


RECORD_FIELDS = ("i", "j", "witt_index", "witt_coeff", "module_index", "module_coeff")


def records_csv(records: list, fields=RECORD_FIELDS) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(fields), lineterminator="\n")
    w.writeheader()
    for r in records:
        w.writerow({k: "" if r[k] is None else r[k] for k in fields})
    return buf.getvalue()


def _tex(s: str) -> str:
    if "/" in s:
        sign = "-" if s.startswith("-") else ""
        num, den = s.lstrip("-").split("/")
        return f"{sign}\\frac{{{num}}}{{{den}}}"
    return s


def records_latex(records: list, fields=RECORD_FIELDS) -> str:
    lines = ["\\begin{tabular}{" + "r" * len(fields) + "}", "\\hline",
             " & ".join(f.replace("_", "\\_") for f in fields) + " \\\\", "\\hline"]
    for r in records:
        cells = ["--" if r[k] is None else f"${_tex(str(r[k]))}$" for k in fields]
        lines.append(" & ".join(cells) + " \\\\")
    lines += ["\\hline", "\\end{tabular}"]
    return "\n".join(lines) + "\n"


def iv_discrepancies(indices: Iterable[int], reference=None) -> list:
    """Pairs where the printed IV recursions disagree with ``reference``.

    ``reference(i, j)`` defaults to the frozen solver table at normalization 1.
    Pairs the printed recursions cannot reach are skipped.
    """
    ref = reference or (lambda i, j: Scalar(_gamma_IV(i, j)))
    out = []
    idx = list(indices)
    for i in idx:
        for j in idx:
            try:
                printed = b_coeff_IV(i, j)
            except DomainError:
                continue
            expected = ref(i, j)
            if printed != expected:
                out.append({"i": i, "j": j, "printed": str(printed), "solver": str(expected)})
    return out

