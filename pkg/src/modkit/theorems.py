"""Decision procedures for the factorization and dichotomy results on modular data.

Each checker re-derives every hypothesis and every conclusion from the data and
returns a ``TheoremReport``. A conclusion that fails while all hypotheses hold
is flagged ``critical``: on valid input it would contradict a proven theorem,
so it points at a toolkit bug or corrupted data.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Any, Callable, Optional, Sequence

import numpy as np

from .cyclo import zeta
from .cyclo.polys import factorize, is_prime, prime_factors
from .errors import ModkitError, NoOrderTwoInvertible, NotModularSubcat, PairingNotBijective
from .moddata import ModularData, fpdim_int, from_matrices
from .structure import (
    Subcat,
    SubcatClass,
    adjoint_of,
    adjoint_subcategory,
    centralizer,
    classify_subcategory,
    generated,
    invertibles,
    is_fermion,
    is_mnsd,
    is_modular,
    pointed_lattice,
    pointed_subcategory,
    subcat_fpdim,
    universal_grading,
    whole,
)

# -- factorization at a modular subcategory -------------------------------------


@dataclass
class FactorizationResult:
    K: Subcat
    Kprime: Subcat
    pairing: dict[tuple[int, int], int]
    factor_data: tuple[ModularData, ModularData]
    status: str = "verified"
    reason: str = ""

    @property
    def verified(self) -> bool:
        return self.status == "verified"


def restrict(md: ModularData, K: Subcat, prefix: str = "") -> ModularData:
    """Modular data of a modular subcategory, read off the rows and columns of ``K``."""
    idx = K.members
    s = [[md.s[i][j] for j in idx] for i in idx]
    theta = [md.theta[i] for i in idx]
    labels = [f"{prefix}{md.labels[i]}" for i in idx]
    return from_matrices(s, theta, labels=labels, conductor=md.conductor)


def factor_at(md: ModularData, K: Subcat, prefixes: tuple[str, str] = ("K:", "K':")) -> FactorizationResult:
    """Split ``md`` as ``K`` times its centralizer; every identity is checked exactly."""
    if not is_modular(md, K):
        raise NotModularSubcat(f"{K} is not a modular subcategory")
    Kp = centralizer(md, K)
    N = md.fusion.N
    pairing: dict[tuple[int, int], int] = {}
    for a in K:
        for x in Kp:
            row = N[a, x]
            ks = np.nonzero(row)[0]
            if len(ks) != 1 or row[ks[0]] != 1:
                raise PairingNotBijective(f"{md.labels[a]} x {md.labels[x]} is not simple")
            pairing[(a, x)] = int(ks[0])
    if sorted(pairing.values()) != list(range(md.rank)):
        raise PairingNotBijective("pairing does not hit every simple exactly once")

    A, B = restrict(md, K, prefixes[0]), restrict(md, Kp, prefixes[1])
    result = FactorizationResult(K, Kp, pairing, (A, B))
    order = [pairing[(a, x)] for a in K for x in Kp]
    reason = _product_mismatch(md, order, A, B)
    if reason:
        result.status, result.reason = "failed", reason
    return result


def _product_mismatch(md: ModularData, order: Sequence[int], A: ModularData, B: ModularData) -> str:
    """Compare ``md`` (reindexed by ``order``) with the Deligne product of ``A`` and ``B``."""
    n, m = A.rank, B.rank
    for r, c in enumerate(order):
        a, x = divmod(r, m)
        if md.theta[c] != A.theta[a] * B.theta[x]:
            return f"theta of {md.labels[c]} does not factor"
    NA, NB = A.fusion.N, B.fusion.N
    prod = np.einsum("abe,xyz->axbyez", NA, NB).reshape(n * m, n * m, n * m)
    P = np.array(order)
    if not (md.fusion.N[np.ix_(P, P, P)] == prod).all():
        return "fusion coefficients do not factor"
    f = md.split.field
    S = md.split.s[:, :, P][:, :, :, P]
    SA = f.image(np.array(A.s, dtype=object))
    SB = f.image(np.array(B.s, dtype=object))
    kron = f.mod(SA[:, :, :, None, :, None] * SB[:, :, None, :, None, :]).reshape(S.shape)
    if not f.zero_mask(f.mod(S - kron), md.split.bounds["transparent"]).all():
        return "s-matrix does not factor"
    return ""


def find_relabeling(A: ModularData, B: ModularData) -> Optional[list[int]]:
    """Permutation ``pi`` with ``B.s[pi[i]][pi[j]] == A.s[i][j]`` and matching twists, or None."""
    if A.rank != B.rank:
        return None
    n = A.rank
    SA, SB = A.s_float, B.s_float
    tA = np.array([t.embed() for t in A.theta])
    tB = np.array([t.embed() for t in B.theta])
    cand = [
        [j for j in range(n) if abs(tA[i] - tB[j]) < 1e-9 and abs(SA[0, i] - SB[0, j]) < 1e-9]
        for i in range(n)
    ]
    pi: list[int] = []
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return all(
                A.s[r][c] == B.s[pi[r]][pi[c]] for r in range(n) for c in range(r, n)
            ) and all(A.theta[r] == B.theta[pi[r]] for r in range(n))
        for j in cand[i] if i else [0]:
            if used[j]:
                continue
            if any(abs(SA[i, r] - SB[j, pi[r]]) > 1e-9 for r in range(i)) or abs(SA[i, i] - SB[j, j]) > 1e-9:
                continue
            used[j] = True
            pi.append(j)
            if extend(i + 1):
                return True
            pi.pop()
            used[j] = False
        return False

    return pi if extend(0) else None


def isomorphic(A: ModularData, B: ModularData) -> bool:
    return find_relabeling(A, B) is not None


# -- reports ---------------------------------------------------------------------


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class TheoremReport:
    theorem: str
    hypotheses: list[Check] = field(default_factory=list)
    claims: list[Check] = field(default_factory=list)
    witnesses: dict[str, Any] = field(default_factory=dict)
    trace: list[str] = field(default_factory=list)

    @property
    def applicable(self) -> bool:
        return all(h.passed for h in self.hypotheses)

    @property
    def conclusion(self) -> str:
        if not self.applicable:
            return "hypotheses-fail"
        return "pass" if all(c.passed for c in self.claims) else "fail"

    @property
    def critical(self) -> bool:
        return self.conclusion == "fail"

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "hypotheses": [h.to_json() for h in self.hypotheses],
            "conclusion": self.conclusion,
            "claims": [c.to_json() for c in self.claims],
            "witnesses": self.witnesses,
            "critical": self.critical,
            "trace": list(self.trace),
        }

    def summary(self) -> str:
        flag = " CRITICAL" if self.critical else ""
        return f"{self.theorem}: {self.conclusion}{flag}"


class _Run:
    """Accumulates checks; stops recording claims once a hypothesis fails."""

    def __init__(self, theorem: str):
        self.report = TheoremReport(theorem)

    def hyp(self, name: str, ok: bool, detail: str = "") -> bool:
        self.report.hypotheses.append(Check(name, bool(ok), detail))
        self.note(f"hypothesis {name}: {'ok' if ok else 'fails'}{' (' + detail + ')' if detail else ''}")
        return bool(ok)

    def claim(self, name: str, ok: bool, detail: str = "") -> bool:
        self.report.claims.append(Check(name, bool(ok), detail))
        self.note(f"claim {name}: {'ok' if ok else 'FAILS'}{' (' + detail + ')' if detail else ''}")
        return bool(ok)

    def attempt(self, name: str, fn: Callable[[], Any]) -> Any:
        """Run ``fn``; a ModkitError becomes a failed claim instead of escaping."""
        try:
            return fn()
        except ModkitError as exc:
            self.claim(name, False, f"{type(exc).__name__}: {exc}")
            return None

    def note(self, line: str) -> None:
        self.report.trace.append(line)

    def witness(self, key: str, value: Any) -> None:
        self.report.witnesses[key] = value


# -- shared quantities -------------------------------------------------------------


def _fpdim_mod4(md: ModularData) -> Optional[int]:
    v = fpdim_int(md)
    return None if v is None else v % 4


def group_order(md: ModularData) -> int:
    return len(pointed_subcategory(md))


def adjoint_group_order(md: ModularData) -> int:
    ad = adjoint_subcategory(md)
    return sum(1 for i in ad if md.dims[i] == 1)


def _labels(md: ModularData, K) -> list[str]:
    return [md.labels[i] for i in K]


def _twist_str(md: ModularData, i: int) -> str:
    t = md.theta[i]
    return str(t) if t.is_rational() else f"{t} (z = zeta_{t.conductor})"


# -- individual results ----------------------------------------------------------


def check_dichotomy_lemma(md: ModularData) -> TheoremReport:
    """``|G|`` = 2 mod 4 with odd FPdim(C_ad), or ``|G|`` odd with FPdim(C_ad) = 2 mod 4."""
    run = _Run("dichotomy_lemma")
    r = _fpdim_mod4(md)
    if not run.hyp("FPdim(C) = 2 mod 4", r == 2, f"FPdim = {md.D2}"):
        return run.report
    G = group_order(md)
    ad = adjoint_subcategory(md)
    fad = subcat_fpdim(md, ad)
    if not run.claim("FPdim(C_ad) is an integer", fad.is_integer(), str(fad)):
        return run.report
    fad_i = fad.as_integer()
    run.claim("FPdim(C) = |G(C)| FPdim(C_ad)", G * fad_i == fpdim_int(md), f"{G} * {fad_i}")
    case1 = G % 4 == 2 and fad_i % 2 == 1
    case2 = G % 2 == 1 and fad_i % 4 == 2
    run.claim("exactly one case holds", case1 != case2, f"case1={case1}, case2={case2}")
    Gad = adjoint_group_order(md)
    run.claim("|G(C_ad)| is odd", Gad % 2 == 1, f"|G(C_ad)| = {Gad}")
    run.witness("case", 1 if case1 else 2 if case2 else None)
    run.witness("group_order", G)
    run.witness("adjoint_fpdim", fad_i)
    run.witness("adjoint_group_order", Gad)
    return run.report


def _order_two(md: ModularData) -> list[int]:
    return invertibles(md).of_order(2)


def _svec_branch(md: ModularData, f: int) -> str:
    cls = classify_subcategory(md, generated(md, [f]))
    if cls is SubcatClass.MODULAR:
        return "modular"
    if cls is SubcatClass.SYMMETRIC_SUPER_TANNAKIAN and is_fermion(md, f):
        return "svec"
    if cls is SubcatClass.SYMMETRIC_TANNAKIAN:
        return "tannakian"
    return str(cls)


def check_svec_dichotomy(md: ModularData, generalized: bool = False) -> TheoremReport:
    """``C[f]`` is modular, or it is sVec with ``f`` a fermion, never both.

    ``generalized`` classifies every order-2 invertible of any input, which is
    how the sVec and Rep(Z_2) branches get exercised outside the 2 mod 4 setting.
    """
    run = _Run("svec_dichotomy" + ("_generalized" if generalized else ""))
    r = _fpdim_mod4(md)
    twos = _order_two(md)
    if generalized:
        if not twos:
            raise NoOrderTwoInvertible(f"{md!r} has no invertible of order 2")
        run.hyp("has an invertible of order 2", True, ", ".join(_labels(md, twos)))
        rows = []
        for f in twos:
            branch = _svec_branch(md, f)
            rows.append({"index": f, "label": md.labels[f], "theta": _twist_str(md, f), "branch": branch})
            run.claim(f"C[{md.labels[f]}] lands in a known branch", branch in ("modular", "svec", "tannakian"), branch)
            if r == 2:
                run.claim(f"C[{md.labels[f]}] is not Rep(Z_2) when FPdim = 2 mod 4", branch != "tannakian", branch)
        run.witness("order_two", rows)
        return run.report

    ok = run.hyp("FPdim(C) = 2 mod 4", r == 2, f"FPdim = {md.D2}")
    ok = run.hyp("|G(C)| even", group_order(md) % 2 == 0, f"|G(C)| = {group_order(md)}") and ok
    if not ok:
        return run.report
    if not run.claim("unique invertible of order 2", len(twos) == 1, ", ".join(_labels(md, twos))):
        return run.report
    f = twos[0]
    K = generated(md, [f])
    cls = classify_subcategory(md, K)
    modular = cls is SubcatClass.MODULAR
    svec = cls is SubcatClass.SYMMETRIC_SUPER_TANNAKIAN and is_fermion(md, f)
    run.claim("exactly one branch", modular != svec, f"C[f] is {cls}")
    run.witness("f", {"index": f, "label": md.labels[f], "theta": _twist_str(md, f)})
    run.witness("branch", "modular" if modular else "svec" if svec else str(cls))
    return run.report


def check_2mod4_suite(md: ModularData) -> TheoremReport:
    """Rank-2 pointed part is a modular semion, complement odd and MNSD, two self-duals."""
    run = _Run("2mod4_suite")
    integral = all(d.is_integer() for d in md.dims)
    ok = run.hyp("integral", integral)
    ok = run.hyp("FPdim(C) = 2 mod 4", _fpdim_mod4(md) == 2, f"FPdim = {md.D2}") and ok
    if not ok:
        return run.report
    G = group_order(md)
    run.claim("|G(C)| even", G % 2 == 0, f"|G(C)| = {G}")
    twos = _order_two(md)
    if not run.claim("an invertible of order 2 exists", bool(twos)):
        return run.report
    f = twos[0]
    run.witness("f", {"index": f, "label": md.labels[f], "theta": _twist_str(md, f)})
    K = generated(md, [f])
    cls = classify_subcategory(md, K)
    run.claim("C[f] is modular", cls is SubcatClass.MODULAR, str(cls))
    run.claim("theta_f = i or -i", md.theta[f] in (zeta(4, 1), zeta(4, 3)), _twist_str(md, f))
    if cls is not SubcatClass.MODULAR:
        return run.report
    fac = run.attempt("factorization at C[f]", lambda: factor_at(md, K))
    if fac is None:
        return run.report
    run.claim("factorization verified", fac.verified, fac.reason)
    comp = fac.factor_data[1]
    cd = fpdim_int(comp)
    run.claim("complement has odd FPdim", cd is not None and cd % 2 == 1, f"FPdim = {comp.D2}")
    run.claim("complement is MNSD", is_mnsd(comp), f"{comp.self_dual_count()} self-dual simples")
    run.claim("exactly two self-dual simples", md.self_dual_count() == 2, str(md.self_dual_count()))
    run.witness("complement_rank", comp.rank)
    run.witness("complement_fpdim", cd)
    return run.report


def check_p_mult_one(md: ModularData, p: int) -> TheoremReport:
    """Odd ``p`` dividing ``|G|`` exactly once in FPdim splits off a pointed modular Z_p."""
    run = _Run("p_mult_one")
    run.witness("p", p)
    D = fpdim_int(md)
    G = group_order(md)
    ok = run.hyp("p is an odd prime", p > 2 and is_prime(p), str(p))
    ok = run.hyp("weakly integral", D is not None, f"FPdim = {md.D2}") and ok
    ok = run.hyp("p divides |G(C)|", G % p == 0, f"|G(C)| = {G}") and ok
    ok = run.hyp("p^2 does not divide FPdim(C)", D is not None and D % (p * p) != 0, f"FPdim = {md.D2}") and ok
    if not ok:
        return run.report
    gs = invertibles(md).of_order(p)
    if not run.claim("an invertible of order p exists", bool(gs)):
        return run.report
    g = gs[0]
    run.witness("g", {"index": g, "label": md.labels[g]})
    K = generated(md, [g])
    cls = classify_subcategory(md, K)
    if not run.claim("C[g] is modular", cls is SubcatClass.MODULAR, str(cls)):
        return run.report
    run.claim("FPdim(C[g]) = p", subcat_fpdim(md, K) == p, str(subcat_fpdim(md, K)))
    fac = run.attempt("factorization at C[g]", lambda: factor_at(md, K))
    if fac is None:
        return run.report
    run.claim("factorization verified", fac.verified, fac.reason)
    cd = fpdim_int(fac.factor_data[1])
    run.claim("complement FPdim not divisible by p", cd is not None and cd % p != 0, f"FPdim = {cd}")
    run.witness("complement_fpdim", cd)
    run.witness("factor_twists", [str(t) for t in fac.factor_data[0].theta])
    return run.report


def _is_subgroup(H: frozenset, modulus: int) -> bool:
    if not H:
        return False
    zero = tuple(0 for _ in next(iter(H)))
    if zero not in H:
        return False
    return all(tuple((a + b) % modulus for a, b in zip(x, y)) in H for x in H for y in H)


def rel_prime_subgroup(md: ModularData, p: int) -> frozenset:
    """Subgroup of U(C) of order ``m`` where ``|U(C)| = p^n m`` and ``p`` does not divide ``m``."""
    gr = universal_grading(md)
    m = gr.size
    while m % p == 0:
        m //= p
    return gr.subgroup_of_order(m)


def check_rel_prime(md: ModularData, H) -> TheoremReport:
    """``D = sum_{h in H} C_h`` has a pointed modular centralizer of dimension ``[U(C):H]``.

    ``H`` is a set of characters of G(C), each a tuple of exponents as in
    ``GradingAssignment.key``. A coprime-index subgroup is a Hall subgroup, so
    containing the image of G(C_ad) amounts to every prime of ``|G(C_ad)|``
    dividing ``|H|``.
    """
    run = _Run("rel_prime")
    gr = universal_grading(md)
    H = frozenset(tuple(h) for h in H)
    U = gr.size
    ok = run.hyp("H is a subgroup of U(C)", _is_subgroup(H, gr.modulus) and H <= set(gr.characters))
    if not ok:
        return run.report
    idx = U // len(H)
    Gad = adjoint_group_order(md)
    ok = run.hyp("gcd(|H|, [U(C):H]) = 1", gcd(len(H), idx) == 1, f"|H| = {len(H)}, index = {idx}")
    ok = run.hyp(
        "G(C_ad) lies in H",
        all(len(H) % q == 0 for q in prime_factors(Gad)),
        f"|G(C_ad)| = {Gad}",
    ) and ok
    run.witness("H_order", len(H))
    run.witness("index", idx)
    if not ok:
        return run.report
    D = Subcat(md, gr.union(H))
    run.claim("D is a fusion subcategory", generated(md, D.members) == D)
    Dp = centralizer(md, D)
    run.witness("D_prime", _labels(md, Dp))
    run.claim("D' is pointed", all(md.dims[i] == 1 for i in Dp))
    run.claim("D' is modular", is_modular(md, Dp), str(classify_subcategory(md, Dp)))
    dim = subcat_fpdim(md, Dp)
    run.claim("FPdim(D') = [U(C):H]", dim == idx, f"{dim} vs {idx}")
    return run.report


def rel_prime_primes(md: ModularData) -> list[int]:
    """Primes dividing ``|G(C)|`` but not ``|G(C_ad)|``."""
    G, Gad = group_order(md), adjoint_group_order(md)
    return [p for p in prime_factors(G) if Gad % p != 0] if G > 1 else []


def peel_pointed_factors(md: ModularData) -> tuple[list[ModularData], ModularData, TheoremReport]:
    """Split off pointed modular factors until G and G_ad share their prime factors."""
    run = _Run("peel_pointed_factors")
    run.hyp("valid modular data", True)
    pointed: list[ModularData] = []
    cur = md
    step = 0
    while True:
        primes = rel_prime_primes(cur)
        if not primes:
            break
        p = primes[0]
        step += 1
        H = rel_prime_subgroup(cur, p)
        rep = check_rel_prime(cur, H)
        if not run.claim(f"step {step}: rel-prime at p = {p}", rep.conclusion == "pass", rep.conclusion):
            return pointed, cur, run.report
        Dp = centralizer(cur, Subcat(cur, universal_grading(cur).union(H)))
        fac = run.attempt(f"step {step}: factorization", lambda: factor_at(cur, Dp, (f"P{step}:", "")))
        if fac is None:
            return pointed, cur, run.report
        run.claim(f"step {step}: factorization verified", fac.verified, fac.reason)
        pointed.append(fac.factor_data[0])
        cur = fac.factor_data[1]
        run.note(f"peeled pointed factor of dimension {fac.factor_data[0].D2}")
    gp = set(prime_factors(group_order(cur))) if group_order(cur) > 1 else set()
    ap = set(prime_factors(adjoint_group_order(cur))) if adjoint_group_order(cur) > 1 else set()
    run.claim("G(residual) and G(residual_ad) share prime factors", gp == ap, f"{sorted(gp)} vs {sorted(ap)}")
    run.witness("pointed_dims", [str(P.D2) for P in pointed])
    run.witness("residual_rank", cur.rank)
    run.witness("residual_fpdim", str(cur.D2))
    return pointed, cur, run.report


def check_p_squared(md: ModularData) -> TheoremReport:
    """``G(C) = Z_p x Z_p`` gives a pointed modular subcategory of dimension ``[G(C):G(C_ad)]``."""
    run = _Run("p_squared")
    grp = invertibles(md)
    G = grp.order
    fac = factorize(G) if G > 1 else ()
    p = fac[0][0] if len(fac) == 1 else None
    ok = run.hyp("weakly integral", fpdim_int(md) is not None, f"FPdim = {md.D2}")
    ok = run.hyp("|G(C)| = p^2, p odd prime", p is not None and p > 2 and fac[0][1] == 2, f"|G(C)| = {G}") and ok
    ok = run.hyp("G(C) = Z_p x Z_p", p is not None and grp.invariant_factors == (p, p), grp.describe()) and ok
    if not ok:
        return run.report
    target = G // adjoint_group_order(md)
    run.witness("target_dim", target)
    found = [
        K for K in pointed_lattice(md)
        if len(K) == target and is_modular(md, K)
    ]
    run.claim("pointed modular subcategory of dimension [G(C):G(C_ad)] exists", bool(found))
    if found:
        run.witness("subcategory", _labels(md, found[0]))
    return run.report


def check_mod_or_tan(md: ModularData, g: Optional[int] = None) -> TheoremReport:
    """For ``g`` of odd prime order, ``C[g]`` is modular or Tannakian, not both."""
    run = _Run("mod_or_tan")
    grp = invertibles(md)
    ok = run.hyp("FPdim(C) = 2 mod 4", _fpdim_mod4(md) == 2, f"FPdim = {md.D2}")
    ok = run.hyp("|G(C)| > 2", grp.order > 2, f"|G(C)| = {grp.order}") and ok
    if g is None:
        odd = [h for h in grp.elements if grp.orders[h] > 2 and is_prime(grp.orders[h])]
        g = odd[0] if odd else None
    order = grp.orders.get(g) if g is not None else None
    ok = run.hyp("g has odd prime order", order is not None and order > 2 and is_prime(order), f"order {order}") and ok
    if not ok:
        return run.report
    cls = classify_subcategory(md, generated(md, [g]))
    modular = cls is SubcatClass.MODULAR
    tannakian = cls is SubcatClass.SYMMETRIC_TANNAKIAN
    run.claim("C[g] is modular or Tannakian, not both", modular != tannakian, str(cls))
    run.witness("g", {"index": g, "label": md.labels[g], "order": order})
    run.witness("branch", "modular" if modular else "tannakian" if tannakian else str(cls))
    return run.report


def nilpotency_certificate(md: ModularData) -> TheoremReport:
    """Adjoint chain ``C > C_ad > (C_ad)_ad > ...``; nilpotent iff it reaches the unit."""
    run = _Run("nilpotency")
    run.hyp("valid modular data", True)
    chain = [whole(md)]
    while True:
        nxt = adjoint_of(md, chain[-1])
        if nxt == chain[-1]:
            break
        chain.append(nxt)
    nilpotent = chain[-1].is_trivial()
    ad, pt = adjoint_subcategory(md), pointed_subcategory(md)
    ad_pointed = ad <= pt
    D = fpdim_int(md)
    solvable = ad_pointed and D is not None and D % 4 != 0
    if ad_pointed:
        run.claim("C_ad pointed implies nilpotent", nilpotent)
    run.witness("chain", [_labels(md, K) for K in chain])
    run.witness("length", len(chain) - 1)
    run.witness("nilpotent", nilpotent)
    run.witness("adjoint_in_pointed", ad_pointed)
    run.witness("solvable_certified", solvable)
    return run.report


# -- batch -----------------------------------------------------------------------

CHECKERS = (
    "dichotomy_lemma",
    "svec_dichotomy",
    "2mod4_suite",
    "p_mult_one",
    "rel_prime",
    "peel_pointed_factors",
    "p_squared",
    "mod_or_tan",
    "nilpotency",
)


def run_checkers(md: ModularData, names: Sequence[str] = CHECKERS) -> list[TheoremReport]:
    """Run the named checkers with parameters chosen from the data; keep applicable reports."""
    out: list[TheoremReport] = []
    grp = invertibles(md)
    for name in names:
        if name not in CHECKERS:
            raise ValueError(f"unknown theorem {name!r}; choose from {', '.join(CHECKERS)}")
        if name == "dichotomy_lemma":
            reps = [check_dichotomy_lemma(md)]
        elif name == "svec_dichotomy":
            reps = [check_svec_dichotomy(md)]
            if grp.of_order(2):
                reps.append(check_svec_dichotomy(md, generalized=True))
        elif name == "2mod4_suite":
            reps = [check_2mod4_suite(md)]
        elif name == "p_mult_one":
            reps = [check_p_mult_one(md, p) for p in prime_factors(grp.order) if p > 2] if grp.order > 1 else []
        elif name == "rel_prime":
            reps = [check_rel_prime(md, rel_prime_subgroup(md, p)) for p in rel_prime_primes(md)]
        elif name == "peel_pointed_factors":
            reps = [peel_pointed_factors(md)[2]]
        elif name == "p_squared":
            reps = [check_p_squared(md)]
        elif name == "mod_or_tan":
            reps = [check_mod_or_tan(md)]
        else:
            reps = [nilpotency_certificate(md)]
        out.extend(r for r in reps if r.applicable)
    return out
