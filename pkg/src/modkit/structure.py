"""Fusion subcategories: generation, adjoint/pointed parts, universal grading, centralizers."""
from __future__ import annotations

import enum
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Iterator, Optional

import numpy as np

from .cyclo import CycNum, zeta
from .cyclo.polys import prime_factors
from .errors import GradingInconsistent, NonGroupFusion, TwistNotPlusMinusOneOnSymmetric
from .moddata import ModularData


class Subcat:
    """Simples of a fusion subcategory of ``owner``; ``members`` is sorted and contains 0."""

    __slots__ = ("owner", "members", "_mask")

    def __init__(self, owner: ModularData, members: Iterable[int]):
        self.owner = owner
        self.members = tuple(sorted(set(int(i) for i in members) | {0}))
        mask = np.zeros(owner.rank, dtype=bool)
        mask[list(self.members)] = True
        self._mask = mask

    @property
    def mask(self) -> np.ndarray:
        return self._mask

    def __contains__(self, i: int) -> bool:
        return bool(self._mask[i])

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subcat):
            return NotImplemented
        return self.owner is other.owner and self.members == other.members

    def __hash__(self) -> int:
        return hash((id(self.owner), self.members))

    def __le__(self, other: "Subcat") -> bool:
        return bool((self._mask <= other._mask).all())

    def __and__(self, other: "Subcat") -> "Subcat":
        return Subcat(self.owner, np.nonzero(self._mask & other._mask)[0])

    def __repr__(self) -> str:
        labels = ", ".join(self.owner.labels[i] for i in self.members)
        return f"Subcat({{{labels}}})"

    def is_trivial(self) -> bool:
        return self.members == (0,)

    def is_whole(self) -> bool:
        return len(self.members) == self.owner.rank

    def labels(self) -> list[str]:
        return [self.owner.labels[i] for i in self.members]


def _closure(md: ModularData, mask: np.ndarray) -> np.ndarray:
    support = md.fusion.N > 0
    dual = np.array(md.dual)
    mask = mask.copy()
    mask[0] = True
    while True:
        idx = np.nonzero(mask)[0]
        new = support[np.ix_(idx, idx)].any(axis=(0, 1)) | mask
        new[dual[new]] = True
        if (new == mask).all():
            return mask
        mask = new


def generated(md: ModularData, seed: Iterable[int] = ()) -> Subcat:
    """Smallest fusion subcategory containing ``seed``."""
    mask = np.zeros(md.rank, dtype=bool)
    mask[list(seed)] = True
    return Subcat(md, np.nonzero(_closure(md, mask))[0])


def whole(md: ModularData) -> Subcat:
    return Subcat(md, range(md.rank))


def trivial(md: ModularData) -> Subcat:
    return Subcat(md, ())


def adjoint_of(md: ModularData, K: Subcat) -> Subcat:
    """Subcategory generated by ``X (x) X*`` for ``X`` in ``K``."""
    N = md.fusion.N
    seed = set()
    for i in K:
        seed.update(np.nonzero(N[i, md.dual[i]])[0].tolist())
    return generated(md, seed)


def adjoint_subcategory(md: ModularData) -> Subcat:
    return _memo(md, "adjoint", lambda m: adjoint_of(m, whole(m)))


def is_invertible(md: ModularData, i: int) -> bool:
    return md.dims[i] == 1


def pointed_of(md: ModularData, K: Subcat) -> Subcat:
    return Subcat(md, [i for i in K if is_invertible(md, i)])


def pointed_subcategory(md: ModularData) -> Subcat:
    return _memo(md, "pointed", lambda m: pointed_of(m, whole(m)))


# -- the group of invertibles -------------------------------------------------


def invariant_factors(orders: Iterable[int]) -> tuple[int, ...]:
    """Invariant factors ``d_1 | d_2 | ...`` of a finite abelian group from its element orders.

    For each prime ``p`` the count of elements killed by ``p^k`` is
    ``prod_i p^min(k, e_i)``, which recovers the exponents ``e_i``.
    """
    orders = list(orders)
    size = len(orders)
    if size <= 1:
        return ()
    chains: dict[int, list[int]] = {}
    for p in prime_factors(size):
        exps: list[int] = []
        prev, k = 1, 1
        while True:
            killed = _p_killed(orders, p, k)
            if killed == prev:
                break
            gain = _log(killed // prev, p)  # number of cyclic p-factors with e_i >= k
            exps.append(gain)
            prev, k = killed, k + 1
        # exps[k-1] = #{i : e_i >= k}; turn into the list of e_i
        es = [sum(1 for g in exps if g > r) for r in range(exps[0])] if exps else []
        chains[p] = sorted(es)
    width = max(len(v) for v in chains.values())
    factors = [1] * width
    for p, es in chains.items():
        for pos, e in enumerate(reversed(es)):
            factors[width - 1 - pos] *= p**e
    return tuple(factors)


def _p_part(o: int, p: int) -> int:
    q = 1
    while o % p == 0:
        o //= p
        q *= p
    return q


def _p_killed(orders: list[int], p: int, k: int) -> int:
    """Number of elements of the p-Sylow subgroup whose order divides ``p^k``."""
    return sum(1 for o in orders if _p_part(o, p) == o and (p**k) % o == 0)


def _log(x: int, p: int) -> int:
    e = 0
    while x > 1:
        x //= p
        e += 1
    return e


@dataclass(frozen=True)
class AbelianGroupTable:
    """The invertible simples under fusion; ``table[a, b]`` indexes into ``elements``."""

    elements: tuple[int, ...]
    table: np.ndarray
    invariant_factors: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def position(self) -> dict[int, int]:
        return {g: a for a, g in enumerate(self.elements)}

    def mul(self, g: int, h: int) -> int:
        pos = self.position
        return self.elements[self.table[pos[g], pos[h]]]

    @cached_property
    def orders(self) -> dict[int, int]:
        out = {}
        for a, g in enumerate(self.elements):
            k, cur = 1, a
            while cur != 0:
                cur = self.table[cur, a]
                k += 1
            out[g] = k
        return out

    def of_order(self, m: int) -> list[int]:
        return [g for g in self.elements if self.orders[g] == m]

    def describe(self) -> str:
        if not self.invariant_factors:
            return "trivial"
        return " x ".join(f"Z{d}" for d in self.invariant_factors)


def _memo(md: ModularData, key: str, build):
    if key not in md._cache:
        md._cache[key] = build(md)
    return md._cache[key]


def invertibles(md: ModularData) -> AbelianGroupTable:
    return _memo(md, "invertibles", _invertibles)


def _invertibles(md: ModularData) -> AbelianGroupTable:
    elems = pointed_subcategory(md).members
    pos = {g: a for a, g in enumerate(elems)}
    N = md.fusion.N
    table = np.zeros((len(elems), len(elems)), dtype=np.int64)
    for a, g in enumerate(elems):
        for b, h in enumerate(elems):
            row = N[g, h]
            ks = np.nonzero(row)[0]
            if len(ks) != 1 or row[ks[0]] != 1 or int(ks[0]) not in pos:
                raise NonGroupFusion(f"{md.labels[g]} x {md.labels[h]} is not a single invertible")
            table[a, b] = pos[int(ks[0])]
    group = AbelianGroupTable(tuple(elems), table, ())
    factors = invariant_factors(group.orders.values())
    return AbelianGroupTable(group.elements, table, factors)


# -- universal grading ----------------------------------------------------------


@dataclass(frozen=True)
class GradingAssignment:
    """Degree of each simple as the character ``g -> s[g][X] / d_X`` on G(C).

    A character value is ``zeta_m ** E[X, a]`` for ``g = group.elements[a]``.
    """

    group: AbelianGroupTable
    modulus: int
    exponents: np.ndarray
    components: tuple[tuple[int, ...], ...]

    def key(self, i: int) -> tuple[int, ...]:
        return tuple(int(e) for e in self.exponents[i])

    def degree(self, i: int) -> tuple[CycNum, ...]:
        return tuple(zeta(self.modulus, e) for e in self.key(i))

    @property
    def size(self) -> int:
        return len(self.components)

    @cached_property
    def characters(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.key(c[0]) for c in self.components)

    def trivial_component(self) -> tuple[int, ...]:
        return self.components[0]

    def character_order(self, chi: tuple[int, ...]) -> int:
        return _exponent(self.modulus // gcd(self.modulus, e) for e in chi)

    def subgroup_of_order(self, m: int) -> frozenset[tuple[int, ...]]:
        """Characters killed by ``m``; the unique subgroup of order ``m`` when gcd(m, |U|/m) = 1."""
        return frozenset(c for c in self.characters if all((m * e) % self.modulus == 0 for e in c))

    def union(self, H: Iterable[tuple[int, ...]]) -> list[int]:
        H = set(H)
        return sorted(i for c in self.components if self.key(c[0]) in H for i in c)


def _exponent(orders: Iterable[int]) -> int:
    m = 1
    for o in orders:
        m = m * o // gcd(m, o)
    return m


def universal_grading(md: ModularData) -> GradingAssignment:
    return _memo(md, "grading", _universal_grading)


def _universal_grading(md: ModularData) -> GradingAssignment:
    group = invertibles(md)
    m = _exponent(group.orders.values())
    G = group.elements
    E = np.zeros((md.rank, len(G)), dtype=np.int64)
    S = md.s_float
    for X in range(md.rank):
        dX = md.dims[X]
        for a, g in enumerate(G):
            ang = np.angle(S[g, X] / S[0, X].real) / (2 * np.pi)
            e = int(round(ang * m)) % m
            if md.s[g][X] != zeta(m, e) * dX:
                raise GradingInconsistent(
                    f"s[{md.labels[g]}][{md.labels[X]}] / d is not an {m}-th root of unity"
                )
            E[X, a] = e
    buckets: dict[tuple[int, ...], list[int]] = defaultdict(list)
    for X in range(md.rank):
        buckets[tuple(int(e) for e in E[X])].append(X)
    comps = sorted((tuple(v) for v in buckets.values()), key=lambda c: c[0])
    grading = GradingAssignment(group, m, E, tuple(comps))
    _check_grading(md, grading)
    return grading


def _check_grading(md: ModularData, gr: GradingAssignment) -> None:
    E, m = gr.exponents, gr.modulus
    i, j, k = np.nonzero(md.fusion.N)
    if ((E[i] + E[j] - E[k]) % m != 0).any():
        raise GradingInconsistent("degree is not multiplicative on fusion")
    if gr.components[0] != adjoint_subcategory(md).members:
        raise GradingInconsistent("trivial component differs from the adjoint subcategory")
    if gr.size != gr.group.order:
        raise GradingInconsistent(f"{gr.size} components but |G(C)| = {gr.group.order}")


# -- centralizers and classification --------------------------------------------


def centralizer(md: ModularData, K: Subcat) -> Subcat:
    """Simples ``Y`` with ``s[X][Y] == d_X d_Y`` for every ``X`` in ``K``."""
    T = md.transparent
    return Subcat(md, np.nonzero(T[list(K.members)].all(axis=0))[0])


class SubcatClass(enum.Enum):
    MODULAR = "Modular"
    SYMMETRIC_TANNAKIAN = "SymmetricTannakian"
    SYMMETRIC_SUPER_TANNAKIAN = "SymmetricSuperTannakian"
    NON_DEGENERATE_OTHER = "NonDegenerateOther"
    DEGENERATE = "Degenerate"

    def __str__(self) -> str:
        return self.value


def classify_subcategory(md: ModularData, K: Subcat) -> SubcatClass:
    Kc = centralizer(md, K)
    if K <= Kc:
        thetas = [md.theta[i] for i in K]
        if any(t != 1 and t != -1 for t in thetas):
            raise TwistNotPlusMinusOneOnSymmetric(f"symmetric {K} has a twist other than +-1")
        if all(t == 1 for t in thetas):
            return SubcatClass.SYMMETRIC_TANNAKIAN
        return SubcatClass.SYMMETRIC_SUPER_TANNAKIAN
    if (K & Kc).is_trivial():
        return SubcatClass.MODULAR
    return SubcatClass.DEGENERATE


def is_modular(md: ModularData, K: Subcat) -> bool:
    return (K & centralizer(md, K)).is_trivial()


def is_fermion(md: ModularData, i: int) -> bool:
    return (
        md.fusion.N[i, i, 0] == 1
        and md.dims[i] == 1
        and md.theta[i] == -1
    )


def self_dual_count(md: ModularData) -> int:
    return md.self_dual_count()


def is_mnsd(md: ModularData) -> bool:
    return self_dual_count(md) == 1


def subcat_fpdim(md: ModularData, K: Subcat) -> CycNum:
    return sum((md.dims[i] * md.dims[i] for i in K), CycNum.rational(0))


def subcat_fpdim_float(md: ModularData, K: Subcat) -> float:
    d = md.s_float[0].real
    return float(sum(d[i] ** 2 for i in K))


# -- lattice ----------------------------------------------------------------------


def lattice(md: ModularData, limit: Optional[int] = None) -> list[Subcat]:
    """Every fusion subcategory, by breadth-first extension with one simple at a time.

    Complete: each subcategory is generated by its own simples, so it is reached
    from ``{0}`` by adding them in any order.
    """
    start = trivial(md)
    seen = {start.members: start}
    frontier = [start]
    while frontier:
        nxt = []
        for K in frontier:
            for i in range(md.rank):
                if i in K:
                    continue
                L = generated(md, K.members + (i,))
                if L.members not in seen:
                    seen[L.members] = L
                    nxt.append(L)
                    if limit is not None and len(seen) >= limit:
                        return sorted(seen.values(), key=lambda s: (len(s), s.members))
        frontier = nxt
    return sorted(seen.values(), key=lambda s: (len(s), s.members))


def element_order_profile(group: AbelianGroupTable) -> Counter:
    return Counter(group.orders.values())


def pointed_lattice(md: ModularData) -> list[Subcat]:
    """Fusion subcategories made of invertibles only (the subgroups of G(C))."""
    inv = pointed_subcategory(md).members
    start = trivial(md)
    seen = {start.members: start}
    frontier = [start]
    while frontier:
        nxt = []
        for K in frontier:
            for g in inv:
                if g in K:
                    continue
                L = generated(md, K.members + (g,))
                if L.members not in seen:
                    seen[L.members] = L
                    nxt.append(L)
        frontier = nxt
    return sorted(seen.values(), key=lambda s: (len(s), s.members))
