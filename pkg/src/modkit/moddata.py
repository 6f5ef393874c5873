"""Modular data: validation, Verlinde fusion rules, dimensions and global invariants.

The S-matrix is unnormalized: ``s[0][i]`` is the quantum dimension of simple
``i`` and ``s[0][0] == 1``. Inputs must be pseudo-unitary (all ``s[0][i]``
positive reals). Every structural claim is certified in exact cyclotomic
arithmetic; floating point only proposes candidates (duality permutation,
fusion coefficients) that the exact layer then confirms or rejects.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from .config import tolerance
from .cyclo import CycNum, PrecisionError, SplitField, norm_data
from .cyclo.polys import growth, lcm
from .errors import (
    DualityFailure,
    FusionAxiomFailure,
    MismatchWithSDims,
    ModReductionOnNonInteger,
    NonConvergence,
    NotPseudoUnitary,
    NotSymmetric,
    ShapeError,
    TwistNotRootOfUnity,
    VerlindeNegative,
    VerlindeNonInteger,
)


@dataclass(frozen=True)
class RawData:
    """Unvalidated modular data as read from a file or built by hand."""

    rank: int
    conductor: int
    s: Sequence[Sequence[CycNum]]
    t: Sequence[CycNum]
    labels: Optional[Sequence[str]] = None
    name: Optional[str] = None
    source: Optional[str] = None


@dataclass(frozen=True, eq=False)
class FusionRing:
    """Structure constants ``N[i, j, k] = N_{ij}^k``."""

    rank: int
    N: np.ndarray
    dual: tuple[int, ...]

    def summands(self, i: int, j: int) -> list[int]:
        return [int(k) for k in np.nonzero(self.N[i, j])[0]]

    def check(self) -> None:
        """Raise FusionAxiomFailure unless unit, duality, commutativity and associativity hold."""
        N, n = self.N, self.rank
        if (N < 0).any():
            raise FusionAxiomFailure("negative structure constant")
        eye = np.eye(n, dtype=N.dtype)
        if not (N[0] == eye).all():
            raise FusionAxiomFailure("N_{0j}^k != delta_{jk}")
        P = np.zeros((n, n), dtype=N.dtype)
        P[np.arange(n), list(self.dual)] = 1
        if not (N[:, :, 0] == P).all():
            raise FusionAxiomFailure("N_{ij}^0 != delta_{j,i*}")
        if not (N == N.transpose(1, 0, 2)).all():
            raise FusionAxiomFailure("fusion is not commutative")
        if not associative(N):
            raise FusionAxiomFailure("fusion is not associative")


def associative(N: np.ndarray) -> bool:
    n = N.shape[0]
    big = int(N.max(initial=0))
    # float matmul is exact while every partial sum stays below the mantissa range
    bound = n * big * big
    dtype = np.float32 if bound < 2**23 else np.float64 if bound < 2**52 else object
    A = N.astype(dtype)
    left = (A.reshape(n * n, n) @ A.reshape(n, n * n)).reshape(n, n, n, n)
    B = A.transpose(1, 0, 2).reshape(n, n * n)  # [m, (i, l)] = N[i, m, l]
    right = (A.reshape(n * n, n) @ B).reshape(n, n, n, n).transpose(2, 0, 1, 3)
    return bool((left == right).all())


@dataclass(frozen=True, eq=False)
class ModularData:
    rank: int
    labels: tuple[str, ...]
    s: tuple[tuple[CycNum, ...], ...]
    theta: tuple[CycNum, ...]
    conductor: int
    fusion: FusionRing
    dims: tuple[CycNum, ...]
    D2: CycNum
    dual: tuple[int, ...]
    name: Optional[str] = None
    source: Optional[str] = None
    _cache: dict = field(default_factory=dict, repr=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModularData):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.labels == other.labels
            and self.s == other.s
            and self.theta == other.theta
            and self.name == other.name
            and self.source == other.source
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<ModularData{tag} rank={self.rank} conductor={self.conductor}>"

    @cached_property
    def s_float(self) -> np.ndarray:
        return np.array([[x.embed() for x in row] for row in self.s], dtype=complex)

    @cached_property
    def split(self) -> "SplitImages":
        return SplitImages.build(self.s, self.theta, self.fusion.N, self.conductor)

    @cached_property
    def transparent(self) -> np.ndarray:
        """Boolean matrix of exact ``s[x][y] == d_x d_y`` (double braiding trivial)."""
        return self.split.transparent()

    def self_dual_count(self) -> int:
        return sum(1 for i, j in enumerate(self.dual) if i == j)

    def fpdim(self) -> CycNum:
        return self.D2

    def relabeled(self, labels: Sequence[str], name: Optional[str] = None) -> "ModularData":
        return from_matrices(self.s, self.theta, labels=labels, name=name)


@dataclass
class SplitImages:
    """Split-prime images of an S-matrix and twist vector with certified bounds."""

    field: SplitField
    s: np.ndarray
    theta: np.ndarray
    N: np.ndarray
    bounds: dict

    @classmethod
    def build(cls, s, theta, N, conductor) -> "SplitImages":
        n = len(s)
        flat = [x for row in s for x in row]
        L, Ds = norm_data(flat)
        Lt, Dt = norm_data(theta)
        G = growth(conductor)
        rowmax = int(N.sum(axis=2).max(initial=0)) if N is not None else n
        bounds = {
            "duality": 2 * n * L * L * G,
            "verlinde": L * L * G * (1 + rowmax),
            "transparent": Ds * L + L * L * G,
            "balancing": Lt * Lt * L * G * G + Dt * rowmax * Lt * L * G,
        }
        fld = SplitField(conductor, max(bounds.values()))
        return cls(fld, fld.image(np.array(flat, dtype=object).reshape(n, n)), fld.image(list(theta)), N, bounds)

    def transparent(self) -> np.ndarray:
        f, S = self.field, self.s
        d = S[:, :, 0, :]
        dd = f.mod(d[:, :, :, None] * d[:, :, None, :])
        return f.zero_mask(f.mod(S - dd), self.bounds["transparent"])


# -- validation ---------------------------------------------------------------


def from_matrices(s, theta, labels=None, name=None, source=None, conductor: int = 1) -> ModularData:
    n = len(s)
    for row in s:
        for x in row:
            if isinstance(x, CycNum):
                conductor = lcm(conductor, x.conductor)
    for x in theta:
        if isinstance(x, CycNum):
            conductor = lcm(conductor, x.conductor)
    conductor = twist_conductor(theta, conductor)
    return validate(RawData(n, conductor, s, theta, labels, name, source))


def twist_conductor(theta, n: int) -> int:
    """Smallest multiple of ``n`` with every twist an ``n``-th root of unity, when one exists.

    Roots of unity in Q(zeta_n) have order dividing lcm(n, 2), so doubling odd ``n`` suffices.
    """
    if n % 2 and any(_as_cyc(t, n) ** n != 1 for t in theta):
        return 2 * n
    return n


def _as_cyc(x, n: int) -> CycNum:
    return x.lift(n) if isinstance(x, CycNum) else CycNum.rational(x, n)


def validate(raw) -> ModularData:
    """Check every modular-data invariant exactly and return the derived ModularData."""
    n = raw.rank
    if n < 1:
        raise ShapeError("rank must be positive")
    if len(raw.s) != n or any(len(row) != n for row in raw.s):
        raise ShapeError(f"S must be {n}x{n}")
    if len(raw.t) != n:
        raise ShapeError(f"T must have {n} entries")
    labels = tuple(raw.labels) if raw.labels is not None else tuple(str(i) for i in range(n))
    if len(labels) != n:
        raise ShapeError(f"expected {n} labels")

    N = raw.conductor
    for row in raw.s:
        for x in row:
            if isinstance(x, CycNum):
                N = lcm(N, x.conductor)
    for x in raw.t:
        if isinstance(x, CycNum):
            N = lcm(N, x.conductor)
    s = tuple(tuple(_as_cyc(x, N) for x in row) for row in raw.s)
    theta = tuple(_as_cyc(x, N) for x in raw.t)

    for i in range(n):
        for j in range(i + 1, n):
            if s[i][j] != s[j][i]:
                raise NotSymmetric(f"s[{i}][{j}] = {s[i][j]} but s[{j}][{i}] = {s[j][i]}")
    if s[0][0] != 1:
        raise NotPseudoUnitary(f"s[0][0] must be 1, got {s[0][0]}")
    if theta[0] != 1:
        raise TwistNotRootOfUnity(f"theta_0 must be 1, got {theta[0]}")
    for i, t in enumerate(theta):
        if t.is_zero() or t**N != 1:
            raise TwistNotRootOfUnity(f"theta_{i} = {t} is not an N-th root of unity (N = {N})")
    tol = tolerance()
    dims = s[0]
    for i, d in enumerate(dims):
        if not d.is_positive_real(tol):
            raise NotPseudoUnitary(f"d_{i} = s[0][{i}] = {d} is not a positive real")
    D2 = sum((d * d for d in dims), CycNum.rational(0, N))

    S = np.array([[x.embed() for x in row] for row in s], dtype=complex)
    d = S[0].real
    D2f = float(D2.embed().real)

    dual = _dual_candidate(S, D2f)
    Ncand = _verlinde_candidate(s, S, d, D2f, D2)
    images = SplitImages.build(s, theta, Ncand, N)
    _certify_duality(images, D2, dual)
    _certify_verlinde(images, s, D2, Ncand)

    fusion = FusionRing(n, Ncand, dual)
    fusion.check()
    md = ModularData(n, labels, s, theta, N, fusion, dims, D2, dual, raw.name, raw.source)
    md.__dict__["split"] = images
    fp = fp_dims(fusion, [x.embed().real for x in dims])
    md._cache["fp_dims"] = fp
    return md


def _dual_candidate(S: np.ndarray, D2f: float) -> tuple[int, ...]:
    M = (S @ S) / D2f
    n = len(S)
    dual = tuple(int(np.argmax(np.abs(M[i]))) for i in range(n))
    if sorted(dual) != list(range(n)) or dual[0] != 0 or any(dual[dual[i]] != i for i in range(n)):
        raise DualityFailure("s*s is not D2 times an involutive permutation fixing the unit")
    return dual


def _certify_duality(images: SplitImages, D2: CycNum, dual: tuple[int, ...]) -> None:
    f, S = images.field, images.s
    n = S.shape[-1]
    d2 = f.image([D2])[:, :, 0]
    bound = images.bounds["duality"]
    sq = f.matmul(S, S)
    P = np.zeros((n, n), dtype=np.int64)
    P[np.arange(n), list(dual)] = 1
    target = f.mod(d2[:, :, None, None] * P)
    bad = ~f.zero_mask(f.mod(sq - target), bound)
    if bad.any():
        i, j = map(int, np.argwhere(bad)[0])
        raise DualityFailure(f"(s*s)[{i}][{j}] != D2 * P[{i}][{j}]")
    uni = f.matmul(S, f.conj(S))
    target = f.mod(d2[:, :, None, None] * np.eye(n, dtype=np.int64))
    bad = ~f.zero_mask(f.mod(uni - target), bound)
    if bad.any():
        i, j = map(int, np.argwhere(bad)[0])
        raise DualityFailure(f"(s*conj(s))[{i}][{j}] != D2 * delta")


def verlinde_entry(s, D2: CycNum, i: int, j: int, k: int) -> CycNum:
    """Exact ``(1/D2) sum_a s_ia s_ja conj(s_ka) / d_a``."""
    acc = CycNum.rational(0, D2.conductor)
    for a in range(len(s)):
        acc = acc + s[i][a] * s[j][a] * s[k][a].conj() / s[0][a]
    return acc / D2


def _verlinde_candidate(s, S: np.ndarray, d: np.ndarray, D2f: float, D2: CycNum) -> np.ndarray:
    n = len(S)
    A = S[:, None, :] * S[None, :, :] / d
    Nf = (A.reshape(n * n, n) @ S.conj().T).reshape(n, n, n) / D2f
    cand = np.rint(Nf.real)
    off = np.abs(Nf - cand)
    for i, j, k in np.argwhere(off > 1e-6):
        v = verlinde_entry(s, D2, int(i), int(j), int(k))
        if not v.is_integer():
            raise VerlindeNonInteger(f"N_{{{i}{j}}}^{k} = {v}")
        cand[i, j, k] = v.as_integer()
    for i, j, k in np.argwhere(cand < 0):
        v = verlinde_entry(s, D2, int(i), int(j), int(k))
        if not v.is_integer():
            raise VerlindeNonInteger(f"N_{{{i}{j}}}^{k} = {v}")
        if v.as_integer() < 0:
            raise VerlindeNegative(f"N_{{{i}{j}}}^{k} = {v}")
        cand[i, j, k] = v.as_integer()
    return cand.astype(np.int64)


def _certify_verlinde(images: SplitImages, s, D2: CycNum, Ncand: np.ndarray) -> None:
    # s_ia s_ja = d_a sum_k N_ij^k s_ka for all i, j, a pins N down uniquely
    # once s is known to be invertible
    f, S = images.field, images.s
    bound = images.bounds["verlinde"]
    if 2 * bound >= f.modulus:
        raise PrecisionError(f"bound {bound} exceeds certified range")
    n = S.shape[-1]
    d = S[:, :, None, 0, :]
    step = max(1, (1 << 22) // max(1, S[..., 0, 0].size * n * n))
    for i0 in range(0, n, step):
        i1 = min(n, i0 + step)
        rhs = f.left_int(Ncand[i0:i1].reshape(-1, n), S)
        # both products stay below 2**52, so their difference fits in int64
        lhs = (S[:, :, i0:i1, None, :] * S[:, :, None, :, :]).reshape(rhs.shape)
        bad = (f.mod(lhs - rhs * d) != 0).any(axis=(0, 1, 3))
        if bad.any():
            i, j = divmod(int(np.argwhere(bad)[0][0]), n)
            i += i0
            for k in range(n):
                v = verlinde_entry(s, D2, i, j, k)
                if not v.is_integer():
                    raise VerlindeNonInteger(f"N_{{{i}{j}}}^{k} = {v}")
                if v.as_integer() < 0:
                    raise VerlindeNegative(f"N_{{{i}{j}}}^{k} = {v}")
            raise VerlindeNonInteger(f"fusion rules for ({i}, {j}) failed exact certification")


def verlinde(s, D2: CycNum, dims) -> FusionRing:
    """Exact fusion ring of a (symmetric, unitary-up-to-D2) S-matrix."""
    n = len(s)
    N = lcm(D2.conductor, 1)
    for row in s:
        for x in row:
            N = lcm(N, x.conductor)
    s = tuple(tuple(x.lift(N) for x in row) for row in s)
    S = np.array([[x.embed() for x in row] for row in s], dtype=complex)
    D2f = float(D2.embed().real)
    dual = _dual_candidate(S, D2f)
    Ncand = _verlinde_candidate(s, S, S[0].real, D2f, D2)
    images = SplitImages.build(s, [CycNum.rational(1, N)] * n, Ncand, N)
    _certify_duality(images, D2, dual)
    _certify_verlinde(images, s, D2, Ncand)
    ring = FusionRing(n, Ncand, dual)
    ring.check()
    return ring


# -- dimensions ---------------------------------------------------------------


@dataclass(frozen=True)
class FPDims:
    values: tuple[float, ...]
    integral: Optional[tuple[int, ...]]

    @property
    def fpdim(self) -> float:
        return float(sum(v * v for v in self.values))


def fp_dims(fusion: FusionRing, s_dims: Optional[Sequence[float]] = None, *, max_iter: int = 100000) -> FPDims:
    """Perron-Frobenius dimensions by power iteration on ``sum_i N_i``.

    Integer candidates are certified exactly through ``N_i d = d_i d``.
    """
    tol = tolerance()
    A = fusion.N.sum(axis=0).astype(float)  # A[j, k] = sum_i N_ij^k
    v = np.ones(fusion.rank)
    for _ in range(max_iter):
        w = A @ v
        w /= w[0]
        if np.max(np.abs(w - v)) < 1e-15 * max(1.0, float(np.max(w))):
            v = w
            break
        v = w
    else:
        raise NonConvergence(f"power iteration did not settle in {max_iter} steps")
    # one more step to polish
    v = A @ v
    v /= v[0]
    integral = None
    cand = np.rint(v).astype(np.int64)
    if (cand > 0).all() and np.max(np.abs(v - cand)) < tol:
        lhs = fusion.N @ cand  # [i, j] = sum_k N_ij^k c_k
        if (lhs == np.outer(cand, cand)).all():
            integral = tuple(int(c) for c in cand)
    if s_dims is not None:
        gap = np.max(np.abs(v - np.asarray(s_dims, dtype=float)))
        if gap > tol:
            raise MismatchWithSDims(f"FP dims differ from s-row dims by {gap:.3g}")
    return FPDims(tuple(float(x) for x in v), integral)


def md_fp_dims(md: ModularData) -> FPDims:
    fp = md._cache.get("fp_dims")
    if fp is None:
        fp = md._cache["fp_dims"] = fp_dims(md.fusion, [x.embed().real for x in md.dims])
    return fp


@dataclass(frozen=True)
class GlobalInvariants:
    fpdim: CycNum
    fpdim_mod4: Optional[int]
    is_integral: bool
    is_weakly_integral: bool
    self_dual_count: int

    def to_json(self) -> dict:
        return {
            "fpdim": str(self.fpdim),
            "fpdim_mod4": self.fpdim_mod4,
            "is_integral": self.is_integral,
            "is_weakly_integral": self.is_weakly_integral,
            "self_dual_count": self.self_dual_count,
        }


def fpdim_mod(md: ModularData, m: int) -> int:
    if not md.D2.is_integer():
        raise ModReductionOnNonInteger(f"FPdim = {md.D2} is not an integer")
    return md.D2.as_integer() % m


def fpdim_int(md: ModularData) -> Optional[int]:
    return md.D2.as_integer() if md.D2.is_integer() else None


def global_invariants(md: ModularData) -> GlobalInvariants:
    weak = md.D2.is_integer()
    return GlobalInvariants(
        fpdim=md.D2,
        fpdim_mod4=fpdim_mod(md, 4) if weak else None,
        is_integral=all(d.is_integer() for d in md.dims),
        is_weakly_integral=weak,
        self_dual_count=md.self_dual_count(),
    )


def balancing_check(md: ModularData) -> bool:
    """Exact ribbon identity ``theta_i theta_j s_ij = sum_k N_ij^k theta_k d_k``."""
    im = md.split
    f, S, T = im.field, im.s, im.theta
    d = S[:, :, 0, :]
    lhs = f.mod(f.mod(T[:, :, :, None] * T[:, :, None, :]) * S)
    td = f.mod(T * d)  # (P, phi, k)
    rhs = f.mod(np.matmul(md.fusion.N, td[:, :, None, :, None])[..., 0])
    return bool(f.zero_mask(f.mod(lhs - rhs), im.bounds["balancing"]).all())
