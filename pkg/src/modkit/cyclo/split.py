"""Vectorized exact identity checks in Q(zeta_N) via split primes.

For a prime ``p = 1 (mod N)`` the cyclotomic polynomial splits into distinct
linear factors over F_p, so ``Z[zeta_N] / p`` is isomorphic to ``F_p^phi(N)``
(evaluation at the primitive N-th roots of unity mod p). An element of
``Z[zeta_N]`` whose reduced coefficients are bounded by ``B`` in absolute
value is zero iff its image vanishes modulo a set of such primes whose
product exceeds ``2 B``. Callers supply ``B``; every equality decided here is
therefore exact, while the heavy lifting is plain int64 numpy arithmetic.
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .number import CycNum
from .polys import factorize, is_prime, phi_degree_of, units

# primes below 2**26 keep products below 2**52, so n-term sums of products
# fit int64 for n < 2**11
_PRIME_LO = 1 << 25
_PRIME_HI = 1 << 26
MAX_INNER = 1 << 11


class PrecisionError(ArithmeticError):
    """The requested bound exceeds what the chosen primes can certify."""


@lru_cache(maxsize=None)
def _split_primes(n: int, count: int) -> tuple[int, ...]:
    out = []
    t = _PRIME_LO // n + 1
    while len(out) < count:
        p = 1 + n * t
        if p >= _PRIME_HI:
            raise PrecisionError(f"ran out of split primes for conductor {n}")
        if is_prime(p):
            out.append(p)
        t += 1
    return tuple(out)


def _primitive_root(p: int) -> int:
    qs = [q for q, _ in factorize(p - 1)]
    g = 2
    while any(pow(g, (p - 1) // q, p) == 1 for q in qs):
        g += 1
    return g


@lru_cache(maxsize=None)
def _power_matrix(n: int, p: int) -> np.ndarray:
    """``M[k, e] = (omega^u_k)^e mod p`` for embeddings ``u_k`` and ``e < phi(n)``."""
    omega = pow(_primitive_root(p), (p - 1) // n, p)
    deg = phi_degree_of(n)
    rows = []
    for u in units(n):
        r = pow(omega, u, p)
        rows.append([pow(r, e, p) for e in range(deg)])
    return np.array(rows, dtype=np.int64)


class SplitField:
    """Images of Q(zeta_n) elements modulo enough split primes to certify ``bound``."""

    def __init__(self, n: int, bound: int):
        self.n = n
        self.bound = int(bound)
        count = 1
        while True:
            primes = _split_primes(n, count)
            prod = 1
            for p in primes:
                prod *= p
            if prod > 2 * self.bound:
                break
            count += 1
        self.primes = primes
        self.modulus = prod
        self._p = np.array(primes, dtype=np.int64)
        self.degree = phi_degree_of(n)
        us = units(n)
        pos = {u: i for i, u in enumerate(us)}
        self.conj_index = np.array([pos[(-u) % n] if n > 1 else 0 for u in us], dtype=np.intp)

    @property
    def p(self) -> np.ndarray:
        """Prime moduli shaped to broadcast against an image's trailing axes."""
        return self._p

    def mod(self, img: np.ndarray) -> np.ndarray:
        shape = (len(self.primes),) + (1,) * (img.ndim - 1)
        return img % self._p.reshape(shape)

    def image(self, values) -> np.ndarray:
        """Image array of shape ``(n_primes, phi, *values.shape)``."""
        arr = np.asarray(values, dtype=object)
        flat = arr.reshape(-1)
        uniq: dict[tuple, int] = {}
        reps: list[CycNum] = []
        idx = np.empty(len(flat), dtype=np.intp)
        for t, v in enumerate(flat):
            if not isinstance(v, CycNum):
                v = CycNum.rational(v, self.n)
            elif v.conductor != self.n:
                v = v.lift(self.n)
            k = v.key()
            j = uniq.get(k)
            if j is None:
                j = uniq[k] = len(reps)
                reps.append(v)
            idx[t] = j
        out = np.empty((len(self.primes), self.degree, len(reps)), dtype=np.int64)
        for a, p in enumerate(self.primes):
            coeff = np.zeros((len(reps), self.degree), dtype=np.int64)
            dinv = np.empty(len(reps), dtype=np.int64)
            for j, v in enumerate(reps):
                if v.den % p == 0:
                    raise PrecisionError(f"denominator {v.den} divisible by split prime {p}")
                for e, c in v.terms:
                    coeff[j, e] = c % p
                dinv[j] = pow(v.den, -1, p)
            vals = (coeff @ _power_matrix(self.n, p).T) % p
            out[a] = ((vals * dinv[:, None]) % p).T
        return out[:, :, idx].reshape((len(self.primes), self.degree) + arr.shape)

    def conj(self, img: np.ndarray) -> np.ndarray:
        return img[:, self.conj_index]

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.shape[-1] >= MAX_INNER:
            raise PrecisionError("inner dimension too large for int64 accumulation")
        return self.mod(np.matmul(a, b))

    def left_int(self, A: np.ndarray, img: np.ndarray) -> np.ndarray:
        """``A @ img`` for a small nonnegative integer matrix ``A`` (no prime axis).

        Runs through float64 BLAS, which is exact while every partial sum of
        ``A[r, k] * img[k, c]`` stays below 2**53.
        """
        reach = int(A.sum(axis=-1).max(initial=0)) * (max(self.primes) - 1)
        if reach >= 2**53:
            return self.mod(np.matmul(A, img))
        k = img.shape[-2]
        lead = img.shape[:-2]
        flat = np.moveaxis(img, -2, 0).reshape(k, -1).astype(np.float64)
        out = (A.astype(np.float64) @ flat).astype(np.int64)
        out = np.moveaxis(out.reshape((A.shape[0],) + lead + img.shape[-1:]), 0, -2)
        return self.mod(out)

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.mod(a * b)

    def zero_mask(self, img: np.ndarray, bound: int) -> np.ndarray:
        """Elementwise exact zero test; ``bound`` caps the true scaled coefficients."""
        if 2 * bound >= self.modulus:
            raise PrecisionError(f"bound {bound} exceeds certified range")
        return (img == 0).all(axis=(0, 1))


def norm_data(values: Iterable[CycNum]) -> tuple[int, int]:
    """``(L, D)``: common denominator D and max l1 norm of ``D * v`` numerators."""
    vals = list(values)
    d = 1
    for v in vals:
        d = d // gcd(d, v.den) * v.den
    big = 0
    for v in vals:
        big = max(big, v.l1() * (d // v.den))
    return big, d


def flatten(rows: Sequence[Sequence[CycNum]]) -> list[CycNum]:
    return [x for row in rows for x in row]
