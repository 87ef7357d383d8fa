"""Exact coefficient domains: arbitrary-precision rationals and cyclotomic numbers.

Rationals are stdlib ``fractions.Fraction`` (always normalized, positive
denominator).  ``CycloNum`` is an element of the cyclotomic field Q(zeta_m),
stored by its coordinates in the power basis 1, x, ..., x^(phi(m)-1) of
Q[x]/Phi_m(x).  All values are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Union

Rat = Fraction

Scalar = Union[int, Fraction, "CycloNum"]


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    """Number of integers in 1..m coprime to m."""
    if m < 1:
        raise ValueError(f"euler_phi needs m >= 1, got {m}")
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients (constant term first) of the m-th cyclotomic polynomial.

    Computed by exact division of x^m - 1 by the product of the cyclotomic
    polynomials of the proper divisors of m.  Monic of degree phi(m).

    >>> cyclotomic_polynomial(3)
    (1, 1, 1)
    >>> cyclotomic_polynomial(12)
    (1, 0, -1, 0, 1)
    """
    if m < 1:
        raise ValueError(f"cyclotomic_polynomial needs m >= 1, got {m}")
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _exact_poly_div(poly, list(cyclotomic_polynomial(d)))
    assert len(poly) == euler_phi(m) + 1 and poly[-1] == 1
    return tuple(poly)


def _exact_poly_div(num: list[int], den: list[int]) -> list[int]:
    """Quotient of dense integer polynomials; the division must be exact."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(q) - 1, -1, -1):
        c, rem = divmod(num[k + len(den) - 1], den[-1])
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[k] = c
        for i, d in enumerate(den):
            num[k + i] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def _reduction_rows(m: int) -> tuple[tuple[int, ...], ...]:
    """x^k reduced mod Phi_m, as integer coordinate rows, for k up to max(m-1, 2*phi-2)."""
    phi = euler_phi(m)
    Phi = cyclotomic_polynomial(m)
    limit = max(m - 1, 2 * phi - 2)
    rows: list[tuple[int, ...]] = []
    for k in range(phi):
        rows.append(tuple(1 if i == k else 0 for i in range(phi)))
    for _ in range(phi, limit + 1):
        prev = rows[-1]
        shifted = [0] + list(prev)
        carry = shifted[phi]
        rows.append(tuple(shifted[i] - carry * Phi[i] for i in range(phi)))
    return tuple(rows)


class CycloNum:
    """An element of Q(zeta_m) in the power basis mod the m-th cyclotomic polynomial.

    Arithmetic between different orders lifts both operands to the lcm order
    via the embedding x -> x^(lcm/m).  Division computes the exact inverse by
    the extended Euclidean algorithm against Phi_m.
    """

    __slots__ = ("order", "coeffs")
    __hash__ = None  # equal values may live at different orders; do not hash

    def __init__(self, order: int, coeffs) -> None:
        phi = euler_phi(order)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != phi:
            raise ValueError(f"order {order} needs {phi} coordinates, got {len(coeffs)}")
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def zero(cls, order: int = 1) -> CycloNum:
        return cls(order, (Fraction(0),) * euler_phi(order))

    @classmethod
    def one(cls, order: int = 1) -> CycloNum:
        c = [Fraction(0)] * euler_phi(order)
        c[0] = Fraction(1)
        return cls(order, c)

    @classmethod
    def from_rat(cls, value, order: int = 1) -> CycloNum:
        c = [Fraction(0)] * euler_phi(order)
        c[0] = Fraction(value)
        return cls(order, c)

    @classmethod
    def root(cls, m: int, k: int = 1) -> CycloNum:
        """zeta_m^k in reduced power-basis form (k taken mod m)."""
        if m < 1:
            raise ValueError(f"root order must be positive, got {m}")
        row = _reduction_rows(m)[k % m]
        return cls(m, row)

    # -- representation changes ------------------------------------------

    def lift(self, order: int) -> CycloNum:
        """Image of self in Q(zeta_order); requires self.order | order."""
        if order == self.order:
            return self
        if order % self.order != 0:
            raise ValueError(f"cannot lift order {self.order} into order {order}")
        step = order // self.order
        rows = _reduction_rows(order)
        phi = euler_phi(order)
        out = [Fraction(0)] * phi
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            row = rows[k * step]
            for i in range(phi):
                if row[i]:
                    out[i] += c * row[i]
        return CycloNum(order, out)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rat(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> tuple[CycloNum, CycloNum] | None:
        if isinstance(other, CycloNum):
            m = lcm(self.order, other.order)
            return self.lift(m), other.lift(m)
        if isinstance(other, (int, Fraction)):
            return self, CycloNum.from_rat(other, 1).lift(self.order)
        return None

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycloNum(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CycloNum:
        return CycloNum(self.order, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycloNum(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return CycloNum(self.order, tuple(c * f for c in self.coeffs))
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        phi = len(a.coeffs)
        prod = [Fraction(0)] * (2 * phi - 1)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    prod[i + j] += x * y
        rows = _reduction_rows(a.order)
        out = [Fraction(0)] * phi
        for k, c in enumerate(prod):
            if not c:
                continue
            row = rows[k]
            for i in range(phi):
                if row[i]:
                    out[i] += c * row[i]
        return CycloNum(a.order, out)

    __rmul__ = __mul__

    def inverse(self) -> CycloNum:
        """Multiplicative inverse via the extended Euclidean algorithm on Phi_m."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self.is_rational():
            return CycloNum.from_rat(1 / self.coeffs[0], self.order)
        # Dense Fraction polynomials, constant term first.  Track s with
        # r_i = s_i * self + t_i * Phi; Phi irreducible, so the gcd is a
        # nonzero constant and self^{-1} = s / gcd mod Phi.
        r0 = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        r1 = _trim(list(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1 or r1[0]:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _trim([x - y for x, y in _zip_pad(s0, _poly_mul(q, s1))])
        g = r0[0]
        inv = [c / g for c in s0]
        phi = euler_phi(self.order)
        inv = (inv + [Fraction(0)] * phi)[:phi]
        return CycloNum(self.order, inv)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, CycloNum):
            m = lcm(self.order, other.order)
            return self.lift(m) * other.lift(m).inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNum.from_rat(other, 1) / self
        return NotImplemented

    def __pow__(self, k: int) -> CycloNum:
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloNum.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, CycloNum):
            m = lcm(self.order, other.order)
            return self.lift(m).coeffs == other.lift(m).coeffs
        return NotImplemented

    def __repr__(self) -> str:
        return f"CycloNum({self})"

    def __str__(self) -> str:
        """Bracket form "[c0,c1,...]@m" with each c printed as p/q (q omitted when 1)."""
        body = ",".join(
            str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            for c in self.coeffs
        )
        return f"[{body}]@{self.order}"


def _trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and not p[-1]:
        p = p[:-1]
    return p if p else [Fraction(0)]


def _zip_pad(a: list[Fraction], b: list[Fraction]):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return zip(a, b)


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    den = _trim(list(den))
    if len(num) < len(den):
        return [Fraction(0)], num
    q = [Fraction(0)] * (len(num) - len(den) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = num[k + len(den) - 1] / den[-1]
        q[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    return q, _trim(num[: len(den) - 1])


def root_power(m: int, k: int) -> CycloNum:
    """zeta_m^k, reduced into the power basis of Q(zeta_m)."""
    return CycloNum.root(m, k)


def cyclo_arith(a: CycloNum, b: CycloNum, op: str) -> CycloNum:
    """Field arithmetic dispatch; orders are lifted to their lcm automatically."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")
