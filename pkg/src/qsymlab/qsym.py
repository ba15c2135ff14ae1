"""Exact quasisymmetric functions in the monomial (M) and fundamental (F) bases."""
from __future__ import annotations

import json
from collections import Counter
from itertools import combinations
from math import factorial
from typing import Iterable, Mapping

from .compositions import (
    Composition,
    DomainError,
    canonical_key,
    coarsenings,
    composition,
    compositions_of,
    format_composition,
    refinements,
    sort_to_partition,
)

BASES = ("M", "F", "m")


def _clean(coeffs: Mapping) -> dict:
    return {k: v for k, v in coeffs.items() if v != 0}


class QSymElement:
    """A finite integer combination of basis elements indexed by compositions.

    Basis ``"m"`` (monomial symmetric, indexed by partitions) is only produced
    for display by :func:`to_monomial_symmetric`.
    """

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: str, coeffs: Mapping[Composition, int] | None = None):
        if basis not in BASES:
            raise DomainError(f"unknown basis {basis!r}")
        self.basis = basis
        clean = _clean({composition(k): int(v) for k, v in (coeffs or {}).items()})
        self.coeffs = {k: clean[k] for k in sorted(clean, key=canonical_key)}

    @classmethod
    def basis_element(cls, basis: str, alpha: Iterable[int]) -> "QSymElement":
        return cls(basis, {tuple(alpha): 1})

    @classmethod
    def one(cls, basis: str = "M") -> "QSymElement":
        return cls(basis, {(): 1})

    @classmethod
    def zero(cls, basis: str = "M") -> "QSymElement":
        return cls(basis, {})

    def __repr__(self):
        return f"QSymElement({self.basis!r}, {self.coeffs!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for alpha, c in self.coeffs.items():
            term = f"{self.basis}[{format_composition(alpha)}]"
            mag = abs(c)
            term = term if mag == 1 else f"{mag}*{term}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    def __eq__(self, other):
        if not isinstance(other, QSymElement):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.basis, tuple(self.coeffs.items())))

    def __getitem__(self, alpha) -> int:
        return self.coeffs.get(tuple(alpha), 0)

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other: "QSymElement"):
        if self.basis != other.basis:
            raise DomainError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __add__(self, other: "QSymElement") -> "QSymElement":
        self._check(other)
        out = Counter(self.coeffs)
        out.update(other.coeffs)
        return QSymElement(self.basis, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other: "QSymElement") -> "QSymElement":
        return self + (-other)

    def scale(self, k: int) -> "QSymElement":
        return QSymElement(self.basis, {a: k * c for a, c in self.coeffs.items()})

    def __mul__(self, other: "QSymElement") -> "QSymElement":
        return quasi_shuffle_product(self, other)

    def degrees(self) -> set[int]:
        return {sum(a) for a in self.coeffs}

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"composition": list(a), "coeff": c} for a, c in self.coeffs.items()],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "QSymElement":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["basis"], {tuple(t["composition"]): t["coeff"] for t in data["terms"]})


def add(f: QSymElement, g: QSymElement) -> QSymElement:
    return f + g


def scale(f: QSymElement, k: int) -> QSymElement:
    return f.scale(k)


def _require(f: QSymElement, basis: str):
    if f.basis != basis:
        raise DomainError(f"expected basis {basis}, got {f.basis}")


def f_to_m(f: QSymElement) -> QSymElement:
    _require(f, "F")
    out: Counter = Counter()
    for alpha, c in f.coeffs.items():
        for beta in refinements(alpha):
            out[beta] += c
    return QSymElement("M", out)


def m_to_f(f: QSymElement) -> QSymElement:
    """Inverse of :func:`f_to_m` by Moebius inversion on refinement order."""
    _require(f, "M")
    out: Counter = Counter()
    for alpha, c in f.coeffs.items():
        for beta in refinements(alpha):
            out[beta] += c * (-1) ** (len(beta) - len(alpha))
    return QSymElement("F", out)


def psi(f: QSymElement) -> QSymElement:
    _require(f, "M")
    out: Counter = Counter()
    for alpha, c in f.coeffs.items():
        sign = (-1) ** (sum(alpha) - len(alpha))
        for beta in coarsenings(alpha):
            out[beta] += sign * c
    return QSymElement("M", out)


def is_symmetric(f: QSymElement) -> bool:
    """Coefficients agree on compositions that rearrange the same partition.

    A rearrangement class is symmetric only if every member has the same
    coefficient, including members whose coefficient is zero.
    """
    _require(f, "M")
    classes: dict[tuple, list] = {}
    for alpha, c in f.coeffs.items():
        classes.setdefault(sort_to_partition(alpha), []).append(c)
    return all(
        len(set(values)) == 1 and len(values) == _num_rearrangements(lam)
        for lam, values in classes.items()
    )


def _num_rearrangements(lam: tuple[int, ...]) -> int:
    out = factorial(len(lam))
    for m in Counter(lam).values():
        out //= factorial(m)
    return out


def to_monomial_symmetric(f: QSymElement) -> QSymElement:
    """Coefficients in the monomial symmetric basis ``m``."""
    if not is_symmetric(f):
        raise DomainError("element is not symmetric")
    return QSymElement("m", {a: c for a, c in f.coeffs.items() if sort_to_partition(a) == a})


def from_monomial_symmetric(f: QSymElement) -> QSymElement:
    _require(f, "m")
    out: Counter = Counter()
    for lam, c in f.coeffs.items():
        for alpha in compositions_of(sum(lam)):
            if sort_to_partition(alpha) == lam:
                out[alpha] += c
    return QSymElement("M", out)


def _qsh(a: Composition, b: Composition, memo: dict) -> Counter:
    if not a:
        return Counter({b: 1})
    if not b:
        return Counter({a: 1})
    key = (a, b)
    if key in memo:
        return memo[key]
    out: Counter = Counter()
    for rest, c in _qsh(a[1:], b, memo).items():
        out[(a[0], *rest)] += c
    for rest, c in _qsh(a, b[1:], memo).items():
        out[(b[0], *rest)] += c
    for rest, c in _qsh(a[1:], b[1:], memo).items():
        out[(a[0] + b[0], *rest)] += c
    memo[key] = out
    return out


def quasi_shuffle_product(f: QSymElement, g: QSymElement) -> QSymElement:
    _require(f, "M")
    _require(g, "M")
    memo: dict = {}
    out: Counter = Counter()
    for a, c in f.coeffs.items():
        for b, d in g.coeffs.items():
            for comp, e in _qsh(a, b, memo).items():
                out[comp] += c * d * e
    return QSymElement("M", out)


# -- tensors and the coproduct -----------------------------------------------


class TensorElement:
    """A finite integer combination of ``F_beta (x) F_gamma``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[tuple[Composition, Composition], int] | None = None):
        clean = _clean({(composition(l), composition(r)): int(v) for (l, r), v in (coeffs or {}).items()})
        key = lambda p: (canonical_key(p[0]), canonical_key(p[1]))
        self.coeffs = {k: clean[k] for k in sorted(clean, key=key)}

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other: "TensorElement") -> "TensorElement":
        out = Counter(self.coeffs)
        out.update(other.coeffs)
        return TensorElement(out)

    def __repr__(self):
        return f"TensorElement({self.coeffs!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for (l, r), c in self.coeffs.items():
            t = f"F[{format_composition(l)}]#F[{format_composition(r)}]"
            terms.append(t if c == 1 else f"{c}*{t}")
        return " + ".join(terms)

    def total_multiplicity(self) -> int:
        return sum(self.coeffs.values())

    def to_json(self) -> dict:
        return {
            "basis": "F#F",
            "terms": [{"left": list(l), "right": list(r), "coeff": c} for (l, r), c in self.coeffs.items()],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "TensorElement":
        if isinstance(data, str):
            data = json.loads(data)
        return cls({(tuple(t["left"]), tuple(t["right"])): t["coeff"] for t in data["terms"]})


def tensor(f: QSymElement, g: QSymElement) -> TensorElement:
    _require(f, "F")
    _require(g, "F")
    return TensorElement({(a, b): c * d for a, c in f.coeffs.items() for b, d in g.coeffs.items()})


def split_composition(alpha: Composition, k: int) -> tuple[Composition, Composition]:
    """The unique ``(beta, gamma)`` with ``|beta| = k`` and ``alpha`` equal to
    their concatenation or near-concatenation."""
    left, right, acc = [], list(alpha), 0
    while right and acc + right[0] <= k:
        acc += right[0]
        left.append(right.pop(0))
    if acc < k:
        part = right.pop(0)
        left.append(k - acc)
        right.insert(0, part - (k - acc))
    return tuple(left), tuple(right)


def coproduct_F(f: QSymElement) -> TensorElement:
    _require(f, "F")
    out: Counter = Counter()
    for alpha, c in f.coeffs.items():
        for k in range(sum(alpha) + 1):
            out[split_composition(alpha, k)] += c
    return TensorElement(out)


def coproduct_tensor_left(t: TensorElement) -> dict:
    """``(Delta (x) id)`` applied to ``t``, as a mapping of triples."""
    out: Counter = Counter()
    for (l, r), c in t.coeffs.items():
        for (a, b), d in coproduct_F(QSymElement("F", {l: 1})).coeffs.items():
            out[(a, b, r)] += c * d
    return {k: v for k, v in out.items() if v}


def coproduct_tensor_right(t: TensorElement) -> dict:
    out: Counter = Counter()
    for (l, r), c in t.coeffs.items():
        for (a, b), d in coproduct_F(QSymElement("F", {r: 1})).coeffs.items():
            out[(l, a, b)] += c * d
    return {k: v for k, v in out.items() if v}


# -- evaluation in finitely many variables ----------------------------------

Polynomial = dict[tuple[int, ...], int]


def evaluate_truncated(f: QSymElement, num_vars: int) -> Polynomial:
    """Specialize an M-expansion to ``x_1, ..., x_num_vars``."""
    _require(f, "M")
    if num_vars < 1:
        raise DomainError("need at least one variable")
    out: Counter = Counter()
    for alpha, c in f.coeffs.items():
        for idx in combinations(range(num_vars), len(alpha)):
            exps = [0] * num_vars
            for i, a in zip(idx, alpha):
                exps[i] = a
            out[tuple(exps)] += c
    return {k: v for k, v in out.items() if v}


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    out: Counter = Counter()
    for a, c in p.items():
        for b, d in q.items():
            out[tuple(x + y for x, y in zip(a, b))] += c * d
    return {k: v for k, v in out.items() if v}


__all__ = [
    "QSymElement",
    "TensorElement",
    "add",
    "scale",
    "f_to_m",
    "m_to_f",
    "psi",
    "is_symmetric",
    "to_monomial_symmetric",
    "from_monomial_symmetric",
    "quasi_shuffle_product",
    "coproduct_F",
    "tensor",
    "split_composition",
    "evaluate_truncated",
    "poly_mul",
]
