"""Sparse elements of W, V(alpha, beta) and L = W + V, and their products.

Basis conventions:

* ``d_i`` spans the Witt algebra, ``[d_m, d_n] = (m - n) d_{m+n}``.
* ``v(n)`` spans V(alpha, beta), a right W-module with
  ``v(n) * d_m = (alpha + n + beta*m) v(n+m)``.
* In L the products ``[W, V]`` and ``[V, V]`` vanish, ``[v, d] = v * d``
  and ``[d_i, d_j]`` is read from a structure table, which may add a module
  correction ``gamma_{i,j} v(i+j-alpha)``.  That index is only an integer
  when alpha is, which is why corrections are refused for non-integral alpha.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .scalar import ONE, ZERO, Scalar, as_int, is_integer, parse_scalar


class ContractError(ValueError):
    """A precondition on parameters or indices was violated."""


def _clean(coeffs: Mapping[int, object]) -> dict:
    out = {}
    for k, c in coeffs.items():
        c = Scalar.coerce(c)
        if c:
            out[int(k)] = c
    return out


class _Sparse:
    """Finite-support map index -> Scalar with no stored zeros."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        self._c = _clean(coeffs or {})

    @classmethod
    def _raw(cls, d: dict):
        obj = object.__new__(cls)
        obj._c = d
        return obj

    @classmethod
    def basis(cls, i: int):
        return cls._raw({i: ONE})

    def coeff(self, i: int) -> Scalar:
        return self._c.get(i, ZERO)

    def items(self):
        return sorted(self._c.items())

    @property
    def support(self) -> tuple:
        return tuple(sorted(self._c))

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)._raw(_accumulate(self._c, other._c, 1))

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)._raw(_accumulate(self._c, other._c, -1))

    def __neg__(self):
        return type(self)._raw({k: -c for k, c in self._c.items()})

    def scale(self, s) -> "_Sparse":
        s = Scalar.coerce(s)
        if not s:
            return type(self)._raw({})
        return type(self)._raw({k: c * s for k, c in self._c.items()})

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash((type(self).__name__, tuple(self.items())))

    def to_json(self) -> dict:
        return {str(k): str(c) for k, c in self.items()}

    @classmethod
    def from_json(cls, obj: Mapping[str, str]):
        return cls({int(k): parse_scalar(v) for k, v in obj.items()})

    def __repr__(self):
        sym = "d" if isinstance(self, WittElement) else "v"
        if not self._c:
            return "0"
        return " + ".join(f"({c})*{sym}({k})" for k, c in self.items())


def _accumulate(a: dict, b: dict, sign: int) -> dict:
    out = dict(a)
    for k, c in b.items():
        if sign < 0:
            c = -c
        if k in out:
            s = out[k] + c
            if s:
                out[k] = s
            else:
                del out[k]
        else:
            out[k] = c
    return out


def _add_into(acc: dict, k: int, c: Scalar) -> None:
    if k in acc:
        s = acc[k] + c
        if s:
            acc[k] = s
        else:
            del acc[k]
    elif c:
        acc[k] = c


class WittElement(_Sparse):
    __slots__ = ()


class ModuleElement(_Sparse):
    __slots__ = ()


@dataclass(frozen=True)
class LeibnizElement:
    witt: WittElement = field(default_factory=WittElement)
    module: ModuleElement = field(default_factory=ModuleElement)

    @classmethod
    def d(cls, i: int) -> "LeibnizElement":
        return cls(WittElement.basis(i), _EMPTY_V)

    @classmethod
    def v(cls, n: int) -> "LeibnizElement":
        return cls(_EMPTY_W, ModuleElement.basis(n))

    def __add__(self, other: "LeibnizElement") -> "LeibnizElement":
        return LeibnizElement(self.witt + other.witt, self.module + other.module)

    def __sub__(self, other: "LeibnizElement") -> "LeibnizElement":
        return LeibnizElement(self.witt - other.witt, self.module - other.module)

    def __neg__(self):
        return LeibnizElement(-self.witt, -self.module)

    def scale(self, s) -> "LeibnizElement":
        return LeibnizElement(self.witt.scale(s), self.module.scale(s))

    def __bool__(self):
        return bool(self.witt) or bool(self.module)

    def to_json(self) -> dict:
        return {"witt": self.witt.to_json(), "module": self.module.to_json()}

    @classmethod
    def from_json(cls, obj: Mapping) -> "LeibnizElement":
        return cls(WittElement.from_json(obj.get("witt", {})),
                   ModuleElement.from_json(obj.get("module", {})))

    def __repr__(self):
        return f"LeibnizElement(witt={self.witt!r}, module={self.module!r})"


_EMPTY_W = WittElement()
_EMPTY_V = ModuleElement()


@dataclass(frozen=True)
class ModuleParams:
    """alpha, beta of V(alpha, beta).

    alpha = 0 is accepted: for integral alpha the module only depends on alpha
    up to the reindexing v(n) -> v(n + alpha).
    """

    alpha: Scalar
    beta: Scalar
    alpha_integer: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "alpha", Scalar.coerce(self.alpha))
        object.__setattr__(self, "beta", Scalar.coerce(self.beta))
        object.__setattr__(self, "alpha_integer", is_integer(self.alpha))

    @property
    def alpha_int(self) -> int:
        if not self.alpha_integer:
            raise ContractError(f"alpha = {self.alpha} is not an integer")
        return as_int(self.alpha)

    def module_index(self, i: int, j: int) -> int:
        """Stored index of v(i + j - alpha); only defined for integral alpha."""
        if not self.alpha_integer:
            raise ContractError(
                f"module index i+j-alpha is not integral for alpha = {self.alpha}")
        return i + j - as_int(self.alpha)

    def action_coeff(self, n: int, m: int) -> Scalar:
        return self.alpha + n + self.beta * m

    def to_json(self) -> dict:
        return {"alpha": str(self.alpha), "beta": str(self.beta)}


def witt_bracket(x: WittElement, y: WittElement) -> WittElement:
    acc: dict = {}
    for i, a in x._c.items():
        for j, b in y._c.items():
            if i != j:
                _add_into(acc, i + j, a * b * (i - j))
    return WittElement._raw(acc)


def module_action(v: ModuleElement, x: WittElement, p: ModuleParams) -> ModuleElement:
    acc: dict = {}
    alpha, beta = p.alpha, p.beta
    for n, a in v._c.items():
        for m, b in x._c.items():
            c = alpha + n + beta * m
            if c:
                _add_into(acc, n + m, a * b * c)
    return ModuleElement._raw(acc)


def leibniz_product(t, a: LeibnizElement, b: LeibnizElement) -> LeibnizElement:
    """``[a, b]`` in L for the structure table ``t``.

    Only ``b.witt`` matters: products with a module element on the right vanish.
    """
    if not b.witt:
        return _ZERO_L
    if t.has_corrections and not t.params.alpha_integer:
        raise ContractError("module corrections need integral alpha")
    w: dict = {}
    mod: dict = {}
    for i, x in a.witt._c.items():
        for j, y in b.witt._c.items():
            xy = x * y
            if i != j:
                _add_into(w, i + j, xy * (i - j))
            if t.has_corrections:
                g = t.gamma(i, j)
                if g:
                    _add_into(mod, t.params.module_index(i, j), xy * g)
    if a.module:
        p = t.params
        for n, x in a.module._c.items():
            for m, y in b.witt._c.items():
                c = p.alpha + n + p.beta * m
                if c:
                    _add_into(mod, n + m, x * y * c)
    return LeibnizElement(WittElement._raw(w), ModuleElement._raw(mod))


_ZERO_L = LeibnizElement(_EMPTY_W, _EMPTY_V)


def leibniz_defect(t, a: LeibnizElement, b: LeibnizElement, c: LeibnizElement) -> LeibnizElement:
    """``[a,[b,c]] - [[a,b],c] + [[a,c],b]``; zero on all triples iff t is Leibniz."""
    p = lambda x, y: leibniz_product(t, x, y)
    return p(a, p(b, c)) - p(p(a, b), c) + p(p(a, c), b)


def is_reducible(p: ModuleParams) -> bool:
    """Kac: V(alpha, beta) is reducible iff alpha is integral and beta is 0 or 1."""
    return p.alpha_integer and (p.beta == 0 or p.beta == 1)


def element(witt: Mapping[int, object] | None = None,
            module: Mapping[int, object] | None = None) -> LeibnizElement:
    return LeibnizElement(WittElement(witt), ModuleElement(module))


def span(elements: Iterable[LeibnizElement], coeffs: Iterable) -> LeibnizElement:
    out = _ZERO_L
    for e, c in zip(elements, coeffs):
        out = out + e.scale(c)
    return out
