"""Integer number theory and cyclotomic polynomial tables."""
from __future__ import annotations

from functools import lru_cache
from math import gcd


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n`` as ``((p, e), ...)`` with ``p`` ascending."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_factors(n: int) -> tuple[int, ...]:
    return tuple(p for p, _ in factorize(n))


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    out = n
    for p, _ in factorize(n):
        out = out // p * (p - 1)
    return out


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic
    num = list(num)
    dq = len(den) - 1
    quot = [0] * (len(num) - dq)
    for k in range(len(quot) - 1, -1, -1):
        c = num[k + dq]
        quot[k] = c
        if c:
            for t, dc in enumerate(den):
                num[k + t] -= c * dc
    if any(num[:dq]):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        num = _poly_divexact(num, cyclotomic_poly(d))
    return tuple(num)


@lru_cache(maxsize=None)
def power_table(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """``x^e mod Phi_n`` for ``0 <= e < n`` as sparse ``((exponent, coeff), ...)`` rows."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    tail = [(k, -c) for k, c in enumerate(phi[:-1]) if c]
    rows = []
    cur = {0: 1}
    for _ in range(n):
        rows.append(tuple(sorted(cur.items())))
        nxt: dict[int, int] = {}
        for k, c in cur.items():
            if k + 1 == deg:
                for t, tc in tail:
                    nxt[t] = nxt.get(t, 0) + c * tc
            else:
                nxt[k + 1] = nxt.get(k + 1, 0) + c
        cur = {k: c for k, c in nxt.items() if c}
    return tuple(rows)


@lru_cache(maxsize=None)
def growth(n: int) -> int:
    """Largest l1 norm of a reduced power ``x^e mod Phi_n``.

    Bounds coefficient growth: the reduced product of ``a`` and ``b`` has l1 norm
    at most ``|a|_1 * |b|_1 * growth(n)``.
    """
    return max(sum(abs(c) for _, c in row) for row in power_table(n))


@lru_cache(maxsize=None)
def units(n: int) -> tuple[int, ...]:
    return tuple(k for k in range(n) if gcd(k, n) == 1) if n > 1 else (0,)


def phi_degree_of(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1
