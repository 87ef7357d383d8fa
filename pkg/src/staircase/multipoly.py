"""Sparse multivariate polynomials over the rationals or a cyclotomic field.

A ``Poly`` is an immutable map from exponent tuples to nonzero coefficients,
together with an ordered tuple of variable names (names are metadata for
printing and substitution; variables are positional) and a coefficient-field
tag ``order`` (``None`` for Q, an integer m for Q(zeta_m)).  Printing and the
leading-term order are graded lexicographic, descending.

The term-level inner loops live in a small kernel that is compiled with
Cython when available and falls back to pure Python otherwise.  Set
``STAIRCASE_KERNEL=py`` (or ``c``) to force a backend.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .exactnum import CycloNum, lcm

_backend = os.environ.get("STAIRCASE_KERNEL", "auto")
if _backend == "py":
    from . import _kernel_py as _kernel
elif _backend == "c":
    from . import _kernel  # type: ignore[no-redef]
else:
    try:
        from . import _kernel  # type: ignore[no-redef]
    except ImportError:
        from . import _kernel_py as _kernel


def kernel_backend() -> str:
    """Which term-kernel implementation is active: "cython" or "python"."""
    return _kernel.BACKEND


class ArityMismatch(ValueError):
    pass


class UnknownVariable(KeyError):
    pass


class NotDivisible(ArithmeticError):
    """Raised when exact_divide has no exact quotient; a legitimate outcome."""


class BadK(ValueError):
    pass


Coeff = Union[Fraction, CycloNum]
ScalarLike = Union[int, Fraction, CycloNum]


def _merge_order(o1: int | None, o2: int | None) -> int | None:
    if o1 is None:
        return o2
    if o2 is None:
        return o1
    return lcm(o1, o2)


def _promote(c: ScalarLike, order: int | None) -> Coeff:
    if order is None:
        if isinstance(c, CycloNum):
            return c.to_rat()
        return Fraction(c)
    if isinstance(c, CycloNum):
        if order % c.order:
            raise ValueError(f"coefficient of order {c.order} does not embed in order {order}")
        return c.lift(order)
    return CycloNum.from_rat(Fraction(c), order)


def glex_key(exp: tuple[int, ...]) -> tuple:
    return (sum(exp), exp)


class Poly:
    """Sparse multivariate polynomial; immutable after construction."""

    __slots__ = ("names", "order", "terms")

    def __init__(self, names: Sequence[str], terms: Mapping[tuple, ScalarLike], order: int | None = None) -> None:
        names = tuple(names)
        arity = len(names)
        clean: dict[tuple[int, ...], Coeff] = {}
        for exp, c in terms.items():
            exp = tuple(exp)
            if len(exp) != arity:
                raise ArityMismatch(f"exponent {exp} does not match arity {arity}")
            c = _promote(c, order)
            if c:
                clean[exp] = c
        self.names = names
        self.order = order
        self.terms = clean

    @classmethod
    def _raw(cls, names: tuple[str, ...], terms: dict, order: int | None) -> Poly:
        """Internal constructor: terms already canonical (promoted, no zeros)."""
        p = object.__new__(cls)
        p.names = names
        p.order = order
        p.terms = terms
        return p

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, names: Sequence[str], order: int | None = None) -> Poly:
        return cls(names, {}, order)

    @classmethod
    def const(cls, names: Sequence[str], value: ScalarLike, order: int | None = None) -> Poly:
        return cls(names, {(0,) * len(names): value}, order)

    @classmethod
    def variable(cls, names: Sequence[str], name: str, order: int | None = None) -> Poly:
        names = tuple(names)
        if name not in names:
            raise UnknownVariable(name)
        exp = tuple(1 if n == name else 0 for n in names)
        one = Fraction(1) if order is None else CycloNum.one(order)
        return cls(names, {exp: one}, order)

    @classmethod
    def monomial(cls, names: Sequence[str], exp: Sequence[int], coeff: ScalarLike = 1, order: int | None = None) -> Poly:
        return cls(names, {tuple(exp): coeff}, order)

    # -- context and field changes ----------------------------------------

    def with_order(self, order: int | None) -> Poly:
        """Lift (or restrict, when rational-valued) the coefficient field."""
        if order == self.order:
            return self
        return Poly(self.names, self.terms, _merge_order(self.order, order) if order is not None else None)

    def extend(self, extra_names: Sequence[str]) -> Poly:
        """Append fresh variables (exponent 0 everywhere)."""
        extra = tuple(extra_names)
        for n in extra:
            if n in self.names:
                raise ArityMismatch(f"variable {n!r} already present")
        pad = (0,) * len(extra)
        return Poly._raw(self.names + extra, {e + pad: c for e, c in self.terms.items()}, self.order)

    def drop(self, names_to_drop: Iterable[str]) -> Poly:
        """Remove variables that occur with exponent 0 in every term."""
        drop = set(names_to_drop)
        for n in drop:
            if n not in self.names:
                raise UnknownVariable(n)
        idx = [i for i, n in enumerate(self.names) if n not in drop]
        for e in self.terms:
            for i, n in enumerate(self.names):
                if n in drop and e[i]:
                    raise ArityMismatch(f"variable {n!r} still occurs; cannot drop")
        names = tuple(self.names[i] for i in idx)
        return Poly._raw(names, {tuple(e[i] for i in idx): c for e, c in self.terms.items()}, self.order)

    def embed(self, target_names: Sequence[str], positions: Sequence[int]) -> Poly:
        """Re-index into a larger context: variable i goes to target position positions[i]."""
        target_names = tuple(target_names)
        if len(positions) != self.arity:
            raise ArityMismatch(f"need {self.arity} positions, got {len(positions)}")
        if len(set(positions)) != len(positions):
            raise ArityMismatch("positions must be distinct")
        width = len(target_names)
        out: dict = {}
        for e, c in self.terms.items():
            te = [0] * width
            for i, x in enumerate(e):
                te[positions[i]] = x
            out[tuple(te)] = c
        return Poly._raw(target_names, out, self.order)

    def _align(self, other: Poly) -> tuple[Poly, Poly]:
        if self.names != other.names:
            if len(self.names) != len(other.names):
                raise ArityMismatch(f"arity {len(self.names)} vs {len(other.names)}")
            raise ArityMismatch(f"variable contexts differ: {self.names} vs {other.names}")
        order = _merge_order(self.order, other.order)
        return self.with_order(order), other.with_order(order)

    def _wrap(self, other) -> Poly | None:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, CycloNum)):
            return Poly.const(self.names, other, self.order if not isinstance(other, CycloNum) else _merge_order(self.order, other.order))
        return None

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        a, b = self._align(other)
        return Poly._raw(a.names, _kernel.add_terms(a.terms, b.terms), a.order)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw(self.names, {e: -c for e, c in self.terms.items()}, self.order)

    def __sub__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        a, b = self._align(other)
        return Poly._raw(a.names, _kernel.sub_terms(a.terms, b.terms), a.order)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Poly._raw(self.names, _kernel.scale_terms(self.terms, c), self.order)
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        a, b = self._align(other)
        return Poly._raw(a.names, _kernel.mul_terms(a.terms, b.terms), a.order)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative polynomial power")
        result = Poly.const(self.names, 1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k > 1
            if base_needed:
                base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, CycloNum)):
            other = self._wrap(other)
        if not isinstance(other, Poly):
            return NotImplemented
        try:
            a, b = self._align(other)
        except ArityMismatch:
            return False
        return a.terms == b.terms

    __hash__ = None

    # -- inspection ----------------------------------------------------------

    @property
    def arity(self) -> int:
        return len(self.names)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_const(self) -> bool:
        return all(not any(e) for e in self.terms)

    def const_value(self) -> Coeff:
        """The scalar value of a constant polynomial."""
        if not self.terms:
            return Fraction(0) if self.order is None else CycloNum.zero(self.order)
        [(e, c)] = self.terms.items()
        if any(e):
            raise ValueError(f"{self} is not constant")
        return c

    def leading(self) -> tuple[tuple[int, ...], Coeff]:
        """(exponent, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=glex_key)
        return e, self.terms[e]

    def total_degree(self) -> int:
        """Total degree of the highest monomial; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def degree_in(self, name: str) -> int:
        i = self._index(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def _index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariable(name) from None

    # -- substitution ---------------------------------------------------------

    def substitute(self, assignment: Mapping[str, Union[ScalarLike, "Poly"]]) -> Poly:
        """Replace the named variables by scalars or polynomials (exact).

        Unassigned variables persist; polynomial values must share this
        polynomial's variable context.  The coefficient field is lifted as
        needed (rationals embed into any cyclotomic order).
        """
        if not assignment:
            return self
        order = self.order
        values: dict[int, Poly] = {}
        for name, v in assignment.items():
            i = self._index(name)
            if isinstance(v, Poly):
                if v.names != self.names:
                    raise ArityMismatch(f"substituted value for {name!r} uses context {v.names}, expected {self.names}")
            else:
                v = Poly.const(self.names, v, order if not isinstance(v, CycloNum) else _merge_order(order, v.order))
            order = _merge_order(order, v.order)
            values[i] = v
        base = self.with_order(order)
        values = {i: v.with_order(order) for i, v in values.items()}
        # Power tables, filled lazily per substituted variable.
        powers: dict[int, list[dict]] = {i: [ {(0,) * self.arity: Fraction(1) if order is None else CycloNum.one(order)}, v.terms ] for i, v in values.items()}

        def power_terms(i: int, k: int) -> dict:
            tab = powers[i]
            while len(tab) <= k:
                tab.append(_kernel.mul_terms(tab[-1], tab[1]))
            return tab[k]

        acc: dict = {}
        for exp, coeff in base.terms.items():
            rest = tuple(0 if i in values else e for i, e in enumerate(exp))
            factor: dict | None = None
            for i in values:
                if exp[i]:
                    p = power_terms(i, exp[i])
                    factor = p if factor is None else _kernel.mul_terms(factor, p)
            if factor is None:
                prev = acc.get(rest)
                if prev is None:
                    acc[rest] = coeff
                else:
                    s = prev + coeff
                    if s:
                        acc[rest] = s
                    else:
                        del acc[rest]
            else:
                _kernel.addmul_terms(acc, rest, coeff, factor)
        return Poly(self.names, acc, order)

    def evaluate(self, values: Sequence[ScalarLike]) -> Coeff:
        """Full evaluation at a scalar point."""
        if len(values) != self.arity:
            raise ArityMismatch(f"expected {self.arity} values, got {len(values)}")
        order = self.order
        vals: list[Coeff] = []
        for v in values:
            if isinstance(v, CycloNum):
                order = _merge_order(order, v.order)
            vals.append(v)
        total: Coeff = Fraction(0) if order is None else CycloNum.zero(order)
        for exp, coeff in self.terms.items():
            term = _promote(coeff, order)
            for v, e in zip(vals, exp):
                if e:
                    term = term * (v ** e if not isinstance(v, int) else Fraction(v) ** e)
            total = total + term
        return total

    # -- division ---------------------------------------------------------------

    def exact_divide(self, den: Poly) -> Poly:
        """Exact quotient self/den; raises NotDivisible when none exists."""
        den = self._wrap(den)
        num, den = self._align(den)
        if den.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if num.is_zero():
            return num
        if len(den.terms) == 1:
            return _divide_by_monomial(num, den)
        lin = _linear_binomial_shape(den)
        if lin is not None:
            return _divide_by_linear_binomial(num, den, *lin)
        return _divide_general(num, den)

    # -- coefficient extraction ----------------------------------------------

    def coefficient(self, name: str, k: int) -> Poly:
        """Coefficient of name**k, as a polynomial in the remaining variables."""
        i = self._index(name)
        idx = [j for j in range(self.arity) if j != i]
        names = tuple(self.names[j] for j in idx)
        out: dict = {}
        for e, c in self.terms.items():
            if e[i] == k:
                out[tuple(e[j] for j in idx)] = c
        return Poly._raw(names, out, self.order)

    def coefficient_bivariate(self, vx: str, vy: str, i: int, j: int) -> Poly:
        """Coefficient of vx**i * vy**j, in the remaining variables."""
        ix, iy = self._index(vx), self._index(vy)
        idx = [t for t in range(self.arity) if t not in (ix, iy)]
        names = tuple(self.names[t] for t in idx)
        out: dict = {}
        for e, c in self.terms.items():
            if e[ix] == i and e[iy] == j:
                out[tuple(e[t] for t in idx)] = c
        return Poly._raw(names, out, self.order)

    def degree_stats(self, k: int) -> tuple[int, int, tuple[int, ...]]:
        """(d_k, total degree, per-variable degrees).

        d_k is the maximum, over monomials, of the sum of the k largest
        exponents: the degree in any k variables simultaneously.
        """
        if not 1 <= k <= self.arity:
            raise BadK(f"k must be in 1..{self.arity}, got {k}")
        if not self.terms:
            return 0, 0, (0,) * self.arity
        d_k = 0
        per_var = [0] * self.arity
        total = 0
        for e in self.terms:
            top = sorted(e, reverse=True)[:k]
            d_k = max(d_k, sum(top))
            total = max(total, sum(e))
            for i, x in enumerate(e):
                if x > per_var[i]:
                    per_var[i] = x
        return d_k, total, tuple(per_var)

    def is_symmetric(self, names: Sequence[str] | None = None) -> bool:
        """True iff invariant under all adjacent transpositions of the given variables."""
        names = tuple(names) if names is not None else self.names
        idx = [self._index(n) for n in names]
        for a, b in zip(idx, idx[1:]):
            swapped: dict = {}
            for e, c in self.terms.items():
                el = list(e)
                el[a], el[b] = el[b], el[a]
                swapped[tuple(el)] = c
            if swapped != self.terms:
                return False
        return True

    # -- printing ------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for e in sorted(self.terms, key=glex_key, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"{n}^{p}" if p > 1 else n for n, p in zip(self.names, e) if p
            )
            if isinstance(c, CycloNum):
                cs = str(c)
                body = f"{cs}*{mono}" if mono else cs
                parts.append(("+ " if parts else "") + body)
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if parts:
                parts.append(f"{sign} {body}")
            else:
                parts.append(body if sign == "+" else f"-{body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"


def variables(names: Sequence[str] | str, order: int | None = None) -> list[Poly]:
    """Generators for a fresh polynomial context, e.g. variables("x y z")."""
    if isinstance(names, str):
        names = names.split()
    names = tuple(names)
    return [Poly.variable(names, n, order) for n in names]


# -- division strategies -------------------------------------------------------


def _divide_by_monomial(num: Poly, den: Poly) -> Poly:
    [(de, dc)] = den.terms.items()
    out: dict = {}
    for e, c in num.terms.items():
        q = tuple(x - y for x, y in zip(e, de))
        if any(x < 0 for x in q):
            raise NotDivisible(f"{num} not divisible by {den}")
        out[q] = c / dc
    return Poly._raw(num.names, out, num.order)


def _linear_binomial_shape(den: Poly):
    """Recognize a*X_i - b*X_j with X_i, X_j distinct single variables."""
    if len(den.terms) != 2:
        return None
    (e1, c1), (e2, c2) = den.terms.items()
    def single(e):
        nz = [i for i, x in enumerate(e) if x]
        return nz[0] if len(nz) == 1 and e[nz[0]] == 1 else None
    i1, i2 = single(e1), single(e2)
    if i1 is None or i2 is None or i1 == i2:
        return None
    if glex_key(e1) < glex_key(e2):
        (e1, c1, i1), (e2, c2, i2) = (e2, c2, i2), (e1, c1, i1)
    return i1, c1, i2, -c2


def _divide_by_linear_binomial(num: Poly, den: Poly, i: int, a, j: int, b) -> Poly:
    """Synthetic division by a*x_i - b*x_j, treating x_i as the lead variable.

    Writing num = sum_t x_i^t P_t, the quotient satisfies
    Q_{t-1} = (P_t + b*x_j*Q_t)/a from the top degree down, and the
    remainder P_0 + b*x_j*Q_0 must vanish.
    """
    arity = num.arity
    slices: dict[int, dict] = {}
    for e, c in num.terms.items():
        t = e[i]
        rest = list(e)
        rest[i] = 0
        slices.setdefault(t, {})[tuple(rest)] = c
    d = max(slices)
    shift_j = tuple(1 if t == j else 0 for t in range(arity))
    inv_a = (Fraction(1) if num.order is None else CycloNum.one(num.order)) / a
    q_slices: dict[int, dict] = {}
    carry: dict = {}
    for t in range(d, 0, -1):
        cur = _kernel.add_terms(slices.get(t, {}), carry)
        qt = _kernel.scale_terms(cur, inv_a)
        if qt:
            q_slices[t - 1] = qt
        carry = _kernel.shift_terms(_kernel.scale_terms(qt, b), shift_j)
    rem = _kernel.add_terms(slices.get(0, {}), carry)
    if rem:
        raise NotDivisible("no exact quotient (nonzero remainder)")
    out: dict = {}
    for t, sl in q_slices.items():
        for e, c in sl.items():
            el = list(e)
            el[i] = t
            out[tuple(el)] = c
    return Poly._raw(num.names, out, num.order)


def _divide_general(num: Poly, den: Poly) -> Poly:
    """Graded-lex reduction by a single divisor; exact or NotDivisible."""
    lt_e, lt_c = den.leading()
    rest = dict(den.terms)
    del rest[lt_e]
    r = dict(num.terms)
    q: dict = {}
    while r:
        e = max(r, key=glex_key)
        c = r.pop(e)
        diff = tuple(x - y for x, y in zip(e, lt_e))
        if any(x < 0 for x in diff):
            raise NotDivisible("no exact quotient (leading term not divisible)")
        qc = c / lt_c
        q[diff] = qc
        if rest:
            _kernel.addmul_terms(r, diff, -qc, rest)
    return Poly._raw(num.names, q, num.order)
