"""Exact elements of cyclotomic fields Q(zeta_N)."""
from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Iterable, Mapping, Sequence, Union

from .polys import cyclotomic_poly, lcm, mobius, power_table, totient, units

Terms = tuple[tuple[int, int], ...]


class NotAnInteger(ValueError):
    pass


def _normalize(n: int, acc: Mapping[int, int], den: int) -> tuple[Terms, int]:
    items = [(e, c) for e, c in acc.items() if c]
    if not items:
        return (), 1
    if den < 0:
        den = -den
        items = [(e, -c) for e, c in items]
    g = den
    for _, c in items:
        g = gcd(g, c)
        if g == 1:
            break
    if g != 1:
        den //= g
        items = [(e, c // g) for e, c in items]
    items.sort()
    return tuple(items), den


def _reduce(n: int, raw: Iterable[tuple[int, int]]) -> dict[int, int]:
    table = power_table(n)
    acc: dict[int, int] = {}
    for e, c in raw:
        for k, t in table[e % n]:
            acc[k] = acc.get(k, 0) + c * t
    return acc


@lru_cache(maxsize=65536)
def _lift(n: int, terms: Terms, den: int, m: int) -> Terms:
    step = m // n
    return _normalize(m, _reduce(m, ((e * step, c) for e, c in terms)), den)[0]


@lru_cache(maxsize=65536)
def _galois(n: int, terms: Terms, den: int, k: int) -> Terms:
    return _normalize(n, _reduce(n, ((e * k, c) for e, c in terms)), den)[0]


@lru_cache(maxsize=None)
def _trace_weights(n: int) -> tuple[Fraction, ...]:
    # Tr(zeta^e) / phi(n) = mu(n/g) / phi(n/g), g = gcd(e, n)
    out = []
    for e in range(n):
        m = n // gcd(e, n)
        out.append(Fraction(mobius(m), totient(m)))
    return tuple(out)


class CycNum:
    """An element ``sum_k c_k zeta_N^k / den`` of Q(zeta_N), reduced modulo Phi_N.

    Instances are immutable. Equality is by value across conductors.
    """

    __slots__ = ("_n", "_terms", "_den", "_hash", "_embed")

    def __init__(self, conductor: int, coeffs: Union[Mapping[int, object], Sequence[object], None] = None):
        if conductor < 1:
            raise ValueError(f"conductor must be positive, got {conductor}")
        if coeffs is None:
            coeffs = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else enumerate(coeffs)
        fr = [(int(e), Fraction(c)) for e, c in items]
        den = 1
        for _, c in fr:
            den = lcm(den, c.denominator)
        raw = [(e, c.numerator * (den // c.denominator)) for e, c in fr]
        self._set(conductor, *_normalize(conductor, _reduce(conductor, raw), den))

    def _set(self, n: int, terms: Terms, den: int) -> None:
        self._n = n
        self._terms = terms
        self._den = den
        self._hash = None
        self._embed = None

    @classmethod
    def _raw(cls, n: int, terms: Terms, den: int) -> "CycNum":
        obj = cls.__new__(cls)
        obj._set(n, terms, den)
        return obj

    @classmethod
    def _build(cls, n: int, acc: Mapping[int, int], den: int) -> "CycNum":
        return cls._raw(n, *_normalize(n, acc, den))

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CycNum":
        return _zeta(n, k % n)

    @classmethod
    def rational(cls, q, conductor: int = 1) -> "CycNum":
        q = Fraction(q)
        return cls._raw(conductor, ((0, q.numerator),) if q else (), q.denominator)

    # -- introspection -------------------------------------------------

    @property
    def conductor(self) -> int:
        return self._n

    @property
    def coeffs(self) -> list[Fraction]:
        """Coefficient vector of length ``conductor`` (zero above ``phi(N)``)."""
        out = [Fraction(0)] * self._n
        for e, c in self._terms:
            out[e] = Fraction(c, self._den)
        return out

    @property
    def terms(self) -> Terms:
        return self._terms

    @property
    def den(self) -> int:
        return self._den

    def key(self) -> tuple[int, Terms, int]:
        """Raw representation; equal keys imply equal values (not conversely across conductors)."""
        return (self._n, self._terms, self._den)

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        t = self._terms
        return not t or (len(t) == 1 and t[0][0] == 0)

    def to_fraction(self) -> Fraction | None:
        if not self._terms:
            return Fraction(0)
        if self.is_rational():
            return Fraction(self._terms[0][1], self._den)
        return None

    def as_integer(self) -> int:
        q = self.to_fraction()
        if q is None or q.denominator != 1:
            raise NotAnInteger(f"{self} is not a rational integer")
        return q.numerator

    def is_integer(self) -> bool:
        q = self.to_fraction()
        return q is not None and q.denominator == 1

    def l1(self) -> int:
        return sum(abs(c) for _, c in self._terms)

    # -- conductor handling -------------------------------------------

    def lift(self, m: int) -> "CycNum":
        """The same value written over Q(zeta_m); requires ``conductor | m``."""
        n = self._n
        if m == n:
            return self
        if m % n:
            raise ValueError(f"cannot lift conductor {n} to {m}")
        if self.is_rational():
            return CycNum._raw(m, self._terms, self._den)
        return CycNum._raw(m, _lift(n, self._terms, self._den, m), self._den)

    def _common(self, other: "CycNum") -> tuple["CycNum", "CycNum"]:
        if self._n == other._n:
            return self, other
        m = lcm(self._n, other._n)
        return self.lift(m), other.lift(m)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other, self._n)
        if other is NotImplemented:
            return other
        a, b = self._common(other)
        if not b._terms:
            return a
        if not a._terms:
            return b
        da, db = a._den, b._den
        acc = {e: c * db for e, c in a._terms}
        for e, c in b._terms:
            acc[e] = acc.get(e, 0) + c * da
        return CycNum._build(a._n, acc, da * db)

    __radd__ = __add__

    def __neg__(self) -> "CycNum":
        return CycNum._raw(self._n, tuple((e, -c) for e, c in self._terms), self._den)

    def __sub__(self, other):
        other = _coerce(other, self._n)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other, self._n)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other, self._n)
        if other is NotImplemented:
            return other
        a, b = self._common(other)
        n = a._n
        if not a._terms or not b._terms:
            return CycNum._raw(n, (), 1)
        if b.is_rational():
            a, b = b, a
        if a.is_rational():
            c0 = a._terms[0][1]
            return CycNum._build(n, {e: c * c0 for e, c in b._terms}, a._den * b._den)
        table = power_table(n)
        acc: dict[int, int] = {}
        for ea, ca in a._terms:
            for eb, cb in b._terms:
                c = ca * cb
                for k, t in table[(ea + eb) % n]:
                    acc[k] = acc.get(k, 0) + c * t
        return CycNum._build(n, acc, a._den * b._den)

    __rmul__ = __mul__

    def inv(self) -> "CycNum":
        if not self._terms:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        return _inverse(self._n, self._terms, self._den)

    def __truediv__(self, other):
        other = _coerce(other, self._n)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce(other, self._n)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __pow__(self, k: int) -> "CycNum":
        if k < 0:
            return self.inv() ** (-k)
        acc = CycNum._raw(self._n, ((0, 1),), 1)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            k >>= 1
            if k:
                base = base * base
        return acc

    def galois(self, k: int) -> "CycNum":
        """Apply the automorphism ``zeta_N -> zeta_N^k`` (``gcd(k, N) = 1``)."""
        n = self._n
        k %= n
        if gcd(k, n) != 1 and n > 1:
            raise ValueError(f"{k} is not a unit modulo {n}")
        if self.is_rational() or k == 1 % n:
            return self
        return CycNum._raw(n, _galois(n, self._terms, self._den, k), self._den)

    def conj(self) -> "CycNum":
        return self.galois(-1)

    # -- comparisons -----------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, CycNum):
            if self._n == other._n:
                return self._terms == other._terms and self._den == other._den
            a, b = self._common(other)
            return a._terms == b._terms and a._den == b._den
        if isinstance(other, (int, Rational)):
            return self.to_fraction() == other
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        # normalized trace is independent of the conductor the value is written in
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.to_fraction())
            else:
                w = _trace_weights(self._n)
                tr = sum((w[e] * c for e, c in self._terms), Fraction(0)) / self._den
                self._hash = hash(("cyc", tr))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- numerics --------------------------------------------------------

    def embed(self) -> complex:
        """Value under ``zeta_N -> exp(2 pi i / N)``."""
        if self._embed is None:
            n = self._n
            z = sum(c * cmath.exp(2j * cmath.pi * e / n) for e, c in self._terms)
            self._embed = complex(z) / self._den
        return self._embed

    def __complex__(self) -> complex:
        return self.embed()

    def is_real(self) -> bool:
        return self == self.conj()

    def is_positive_real(self, tol: float | None = None) -> bool:
        if tol is None:
            from ..config import tolerance

            tol = tolerance()
        return self.is_real() and self.embed().real > tol

    def __repr__(self) -> str:
        from .literal import format_literal

        return f"CycNum({self._n}, {format_literal(self)!r})"

    def __str__(self) -> str:
        from .literal import format_literal

        return format_literal(self)


def _coerce(x, n: int):
    if isinstance(x, CycNum):
        return x
    if isinstance(x, (int, Rational)):
        return CycNum.rational(x, n)
    return NotImplemented


@lru_cache(maxsize=4096)
def _zeta(n: int, k: int) -> CycNum:
    return CycNum._build(n, _reduce(n, [(k, 1)]), 1)


@lru_cache(maxsize=16384)
def _inverse(n: int, terms: Terms, den: int) -> CycNum:
    if len(terms) == 1:
        e, c = terms[0]
        # (c/den) zeta^e  ->  (den/c) zeta^-e
        return CycNum._build(n, _reduce(n, [(-e, den)]), c)
    # x^-1 = prod_{sigma != 1} sigma(x) / N(x)
    x = CycNum._raw(n, terms, den)
    rest = CycNum._raw(n, ((0, 1),), 1)
    for k in units(n):
        if k != 1:
            rest = rest * x.galois(k)
    norm = (x * rest).to_fraction()
    if norm is None or norm == 0:
        raise ArithmeticError("norm computation did not land in Q")
    return rest * CycNum.rational(1 / norm, n)


def zeta(n: int, k: int = 1) -> CycNum:
    return CycNum.zeta(n, k)


def phi_degree(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1
