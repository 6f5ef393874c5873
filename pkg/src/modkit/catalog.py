"""Corpus generation: pointed modular data from metric groups, Deligne products, fixtures."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from importlib import resources
from math import gcd
from typing import Iterator, Mapping, Sequence

from .cyclo import zeta
from .cyclo.polys import lcm
from .errors import DegenerateForm, IllDefinedForm
from .moddata import ModularData, from_matrices

PRESETS = ("trivial", "semion", "antisemion", "toric", "ising")


def _mod1(q: Fraction) -> Fraction:
    return q - (q.numerator // q.denominator)


@dataclass(frozen=True)
class MetricGroup:
    """Finite abelian group ``Z_{n_1} x ... x Z_{n_r}`` with a quadratic form ``q``.

    ``q(sum x_i e_i) = sum x_i^2 q_i + sum_{i<j} x_i x_j b_ij  (mod 1)``.
    """

    orders: tuple[int, ...]
    q_gens: tuple[Fraction, ...]
    b_pairs: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(n) for n in self.orders))
        object.__setattr__(self, "q_gens", tuple(Fraction(q) for q in self.q_gens))
        object.__setattr__(self, "b_pairs", {tuple(k): Fraction(v) for k, v in dict(self.b_pairs).items()})
        if len(self.q_gens) != len(self.orders):
            raise ValueError("need one q value per cyclic factor")

    @classmethod
    def cyclic(cls, n: int, a: int) -> "MetricGroup":
        """``q(x) = a x^2 / n`` for odd ``n``, ``a x^2 / (2n)`` for even ``n``."""
        den = n if n % 2 else 2 * n
        return cls((n,), (Fraction(a, den),))

    @property
    def order(self) -> int:
        return reduce(lambda a, b: a * b, self.orders, 1)

    def elements(self) -> list[tuple[int, ...]]:
        return list(itertools.product(*(range(n) for n in self.orders)))

    def q(self, x: Sequence[int]) -> Fraction:
        v = sum((xi * xi * qi for xi, qi in zip(x, self.q_gens)), Fraction(0))
        for (i, j), bij in self.b_pairs.items():
            v += x[i] * x[j] * bij
        return _mod1(v)

    def b(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        xy = tuple(a + c for a, c in zip(x, y))
        return _mod1(self.q(xy) - self.q(x) - self.q(y))

    def check(self) -> None:
        elems = self.elements()
        for x in elems:
            for i, n in enumerate(self.orders):
                shifted = list(x)
                shifted[i] += n
                if self.q(shifted) != self.q(x):
                    raise IllDefinedForm(f"q(x + {n} e_{i}) != q(x) at x = {x}")
        zero = tuple(0 for _ in self.orders)
        for x in elems:
            if x != zero and all(self.b(x, y) == 0 for y in elems):
                raise DegenerateForm(f"b({x}, -) vanishes identically")

    def label(self, x: Sequence[int]) -> str:
        return str(x[0]) if len(x) == 1 else "(" + ",".join(map(str, x)) + ")"


def metric_group_pointed(mg: MetricGroup, name: str | None = None) -> ModularData:
    """Pointed modular data: ``theta_a = e(q(a))``, ``s_ab = e(b(a, b))``."""
    mg.check()
    elems = mg.elements()
    qs = [mg.q(x) for x in elems]
    N = reduce(lcm, (q.denominator for q in qs), 1)
    theta = [zeta(N, int(q * N)) for q in qs]
    s = [[zeta(N, int(mg.b(x, y) * N)) for y in elems] for x in elems]
    return from_matrices(s, theta, labels=[mg.label(x) for x in elems], name=name, conductor=N)


def deligne_product(a: ModularData, b: ModularData, name: str | None = None) -> ModularData:
    """Kronecker product of S-matrices; index ``i * rank(b) + j`` is the pair ``(i, j)``."""
    m = b.rank
    pairs = [(i, j) for i in range(a.rank) for j in range(m)]
    s = [[a.s[i][k] * b.s[j][l] for (k, l) in pairs] for (i, j) in pairs]
    theta = [a.theta[i] * b.theta[j] for (i, j) in pairs]
    labels = [f"({a.labels[i]},{b.labels[j]})" for (i, j) in pairs]
    if name is None and a.name and b.name:
        name = f"{a.name} x {b.name}"
    return from_matrices(s, theta, labels=labels, name=name, conductor=lcm(a.conductor, b.conductor))


def load_fixture(name: str) -> ModularData:
    from .mdio import parse_text

    text = resources.files("modkit.fixtures").joinpath(f"{name}.md").read_text()
    return parse_text(text)


def trivial() -> ModularData:
    return from_matrices([[1]], [1], name="trivial")


def semion() -> ModularData:
    return metric_group_pointed(MetricGroup.cyclic(2, 1), name="semion")


def antisemion() -> ModularData:
    return metric_group_pointed(MetricGroup.cyclic(2, 3), name="antisemion")


def toric_code() -> ModularData:
    return load_fixture("toric")


def toric_code_group() -> MetricGroup:
    return MetricGroup((2, 2), (0, 0), {(0, 1): Fraction(1, 2)})


def ising() -> ModularData:
    return load_fixture("ising")


def preset(name: str) -> ModularData:
    makers = {"trivial": trivial, "semion": semion, "antisemion": antisemion, "toric": toric_code, "ising": ising}
    try:
        return makers[name]()
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}") from None


def cyclic_pointed(n: int, a: int) -> ModularData:
    return metric_group_pointed(MetricGroup.cyclic(n, a), name=f"Z{n}[a={a}]")


def odd_pointed_specs(limit: int) -> Iterator[tuple[str, MetricGroup]]:
    for n in range(3, limit + 1, 2):
        for a in range(1, n):
            if gcd(a, n) == 1:
                yield f"Z{n}[a={a}]", MetricGroup.cyclic(n, a)
    if limit >= 3:
        for a, b in itertools.product((1, 2), repeat=2):
            yield f"Z3xZ3[{a},{b}]", MetricGroup((3, 3), (Fraction(a, 3), Fraction(b, 3)))


def standard_corpus(limit: int) -> list[ModularData]:
    """Deterministic corpus of valid modular data; odd cyclic orders run up to ``limit``."""
    if limit < 1:
        raise ValueError("limit must be at least 1")
    sem, anti = semion(), antisemion()
    out = [trivial(), sem, anti, toric_code(), ising()]
    for a in (1, 3, 5, 7):
        out.append(metric_group_pointed(MetricGroup.cyclic(4, a), name=f"Z4[a={a}]"))
    odd = [metric_group_pointed(mg, name=tag) for tag, mg in odd_pointed_specs(limit)]
    out.extend(odd)
    for c in odd:
        out.append(deligne_product(c, sem))
        out.append(deligne_product(c, anti))
    return out
