"""Partitions and Schur-function machinery.

Staircase partition families, the bialternant (ratio of shifted Vandermonde
to Vandermonde) and the complete-homogeneous determinant evaluation (which
tolerates repeated arguments), bivariate Chebyshev factorizations, the
root-of-unity vanishing ("wheel") and recursion identities of staircase
Schur functions, and degree/uniqueness diagnostics for the generalized
m-staircase family.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence, Union

from .exactnum import CycloNum
from .multipoly import Poly, _merge_order
from .polylinalg import PolyMatrix, determinant, det_generic, slater_det, LengthMismatch


class BadParams(ValueError):
    pass


class BadIndices(ValueError):
    pass


class BadConcat(ValueError):
    pass


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of non-negative integers."""

    parts: tuple[int, ...]

    def __init__(self, parts: Sequence[int]) -> None:
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise BadParams(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise BadParams(f"negative part in {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(t) for t in text.split(",")))

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


def two_staircase(n: int, l: int, lp: int) -> Partition:
    """Length-2n partition interleaving (n-j)*l + lp and (n-j)*l."""
    if n < 1 or l < 0 or not 0 <= lp <= l:
        raise BadParams(f"need n >= 1 and 0 <= lp <= l, got {(n, l, lp)}")
    parts: list[int] = []
    for j in range(1, n + 1):
        parts.append((n - j) * l + lp)
        parts.append((n - j) * l)
    return Partition(parts)


def staircase(n: int, l: int) -> Partition:
    """Length-n partition ((n-1)l, (n-2)l, ..., l, 0)."""
    if n < 1:
        raise BadParams(f"need n >= 1, got {n}")
    return Partition(tuple((n - j) * l for j in range(1, n + 1)))


def m_staircase(N: int, m: int, l: int, lam_prime: Partition | Sequence[int]) -> Partition:
    """Length-N m-staircase partition built from the length-m seed lam_prime.

    For position j (1-indexed) write N - j = a*m + b with 0 <= b < m; the
    part is a*l + lam_prime[m-b] (the last seed entry when b = 0).  Requires
    lam_prime[0] - lam_prime[-1] <= l so the result is weakly decreasing.
    Reduces to ``staircase`` at m = 1 and to ``two_staircase`` at m = 2 with
    seed (lp, 0) and N = 2n.
    """
    lam_prime = lam_prime if isinstance(lam_prime, Partition) else Partition(lam_prime)
    if N < 0 or m < 1 or l < 0:
        raise BadParams(f"need N >= 0, m >= 1, l >= 0, got {(N, m, l)}")
    if lam_prime.length != m:
        raise BadParams(f"seed must have length m={m}, got {lam_prime.length}")
    if lam_prime.length and lam_prime[0] - lam_prime[-1] > l:
        raise BadParams(f"seed spread {lam_prime[0] - lam_prime[-1]} exceeds l={l}; result not monotone")
    parts = []
    for j in range(1, N + 1):
        a, b = divmod(N - j, m)
        parts.append(a * l + lam_prime[m - b - 1 if b else m - 1])
    return Partition(parts)


def chebyshev_U(h: int, names: Sequence[str] = ("x", "y"), order: int | None = None) -> Poly:
    """Homogeneous bivariate Chebyshev polynomial x^h + x^(h-1) y + ... + y^h."""
    if h < 0:
        raise BadParams(f"need h >= 0, got {h}")
    names = tuple(names)
    if len(names) != 2:
        raise BadParams("chebyshev_U is bivariate")
    return Poly(names, {(t, h - t): 1 for t in range(h + 1)}, order)


def default_z_names(arity: int) -> tuple[str, ...]:
    return tuple(f"z{i+1}" for i in range(arity))


@lru_cache(maxsize=None)
def _schur_bialternant_cached(parts: tuple[int, ...], names: tuple[str, ...], order: int | None) -> Poly:
    arity = len(names)
    if arity == 0:
        return Poly.const((), 1, order)
    num = slater_det(parts, names, range(arity), order)
    for i in range(arity):
        for j in range(i + 1, arity):
            zi = Poly.variable(names, names[i], order)
            zj = Poly.variable(names, names[j], order)
            num = num.exact_divide(zi - zj)
    return num


def schur_bialternant(lam: Partition | Sequence[int], arity: int, names: Sequence[str] | None = None, order: int | None = None) -> Poly:
    """Schur polynomial as the exact quotient of shifted Vandermonde by Vandermonde.

    Symmetric and homogeneous of degree |lam|.  The Vandermonde division runs
    as a chain of binomial divisions by (z_i - z_j), each a synthetic
    division in the lead variable.
    """
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if lam.length != arity:
        raise LengthMismatch(f"partition length {lam.length} != arity {arity}")
    names = tuple(names) if names is not None else default_z_names(arity)
    if len(names) != arity:
        raise LengthMismatch(f"{arity} names required, got {len(names)}")
    return _schur_bialternant_cached(lam.parts, names, order)


ScalarOrPoly = Union[int, Fraction, CycloNum, Poly]


def complete_homogeneous_row(values: Sequence[ScalarOrPoly], max_k: int) -> list:
    """h_0 .. h_max_k evaluated at the given values, by the prefix recurrence.

    h_k(x_1..x_r) = h_k(x_1..x_{r-1}) + x_r * h_{k-1}(x_1..x_r); the table is
    updated in place per argument, which memoizes every prefix evaluation.
    """
    polys = [v for v in values if isinstance(v, Poly)]
    if polys:
        names, order = polys[0].names, polys[0].order
        for p in polys[1:]:
            order = _merge_order(order, p.order)
        one = Poly.const(names, 1, order)
        zero = Poly.zero(names, order)
        vals = [v if isinstance(v, Poly) else Poly.const(names, v, order) for v in values]
    else:
        one, zero = Fraction(1), Fraction(0)
        vals = list(values)
    h = [one] + [zero] * max_k
    for v in vals:
        for k in range(1, max_k + 1):
            h[k] = h[k] + v * h[k - 1]
    return h


def schur_specialized(lam: Partition | Sequence[int], values: Sequence[ScalarOrPoly]):
    """Schur evaluation via the complete-homogeneous determinant.

    Handles repeated arguments (where the bialternant ratio degenerates to
    0/0) and symbolic values; returns a scalar for scalar input, else a Poly.
    """
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    r = lam.length
    if len(values) != r:
        raise LengthMismatch(f"need {r} values for a length-{r} partition, got {len(values)}")
    if r == 0:
        return Fraction(1)
    max_k = lam[0] + r - 1
    h = complete_homogeneous_row(values, max_k)

    def entry(i: int, j: int):
        k = lam[i] - (i + 1) + (j + 1)
        if k < 0:
            return 0 if not isinstance(h[0], Poly) else Poly.zero(h[0].names, h[0].order)
        return h[k]

    grid = [[entry(i, j) for j in range(r)] for i in range(r)]
    if isinstance(h[0], Poly):
        return determinant(PolyMatrix.from_rows(grid))
    return det_generic(grid, zero=Fraction(0), one=Fraction(1))


# -- wheel and recursion identities ------------------------------------------------


def _wheel_substitution(s: Poly, names: tuple[str, ...], positions: Sequence[int], exponents: Sequence[int], order: int) -> Poly:
    """Substitute z_pos -> q^exp * w (q = zeta_order) into s extended with w."""
    big = s.extend(("w",)).with_order(order)
    assignment = {}
    for pos, e in zip(positions, exponents):
        coeff = CycloNum.root(order, e)
        exp = tuple(1 if n == "w" else 0 for n in big.names)
        assignment[names[pos - 1]] = Poly.monomial(big.names, exp, coeff, order)
    return big.substitute(assignment)


def wheel_check(n: int, l: int, lp: int, positions: Sequence[int] | None = None, exponents: Sequence[int] | None = None) -> bool:
    """Vanishing of the 2-staircase Schur function on a wheel of three variables.

    Setting three of the 2n variables to q^g w, q^h w, q^k w (q = zeta_(l+2),
    distinct exponents in 0..l+1) must give the zero polynomial.  With
    positions/exponents omitted, every choice of both is checked.
    """
    lam = two_staircase(n, l, lp)
    names = default_z_names(2 * n)
    s = schur_bialternant(lam, 2 * n, names)
    order = l + 2
    if positions is None or exponents is None:
        if positions is not None or exponents is not None:
            raise BadIndices("give both positions and exponents, or neither")
        pos_sets = itertools.combinations(range(1, 2 * n + 1), 3)
        all_exps = list(itertools.combinations(range(l + 2), 3))
        return all(
            _wheel_substitution(s, names, pos, exps, order).is_zero()
            for pos in pos_sets
            for exps in all_exps
        )
    positions = list(positions)
    exponents = list(exponents)
    if len(positions) != 3 or len(set(positions)) != 3 or not all(1 <= p <= 2 * n for p in positions):
        raise BadIndices(f"positions must be 3 distinct indices in 1..{2*n}")
    if len(exponents) != 3 or len(set(e % (l + 2) for e in exponents)) != 3 or not all(0 <= e <= l + 1 for e in exponents):
        raise BadIndices(f"exponents must be 3 distinct values in 0..{l+1}")
    return _wheel_substitution(s, names, positions, exponents, order).is_zero()


def _u_ratio(names: tuple[str, ...], var: str, l: int, k: int, order: int) -> Poly:
    """U_(l+1)(x, w)/(x - q^k w) expanded as the product of (x - q^r w), r in 1..l+1, r != k."""
    out = Poly.const(names, 1, order)
    x = Poly.variable(names, var, order)
    w_exp = tuple(1 if n == "w" else 0 for n in names)
    for r in range(1, l + 2):
        if r == k:
            continue
        out = out * (x - Poly.monomial(names, w_exp, CycloNum.root(order, r), order))
    return out


def recursion_check(n: int, l: int, lp: int, i: int, j: int, k: int) -> bool:
    """Exact recursion: s at (z minus i,j; w, q^k w) factors through size n-1.

    The right side is w^lp * U_lp(1, q^k) times the product over the other
    variables of U_(l+1)(z_m, w)/(z_m - q^k w), times the next-smaller
    2-staircase Schur function in the remaining variables.
    """
    if i == j or not (1 <= i <= 2 * n and 1 <= j <= 2 * n):
        raise BadIndices(f"positions {i}, {j} must be distinct in 1..{2*n}")
    if not 1 <= k <= l + 1:
        raise BadIndices(f"k must be in 1..{l+1}, got {k}")
    order = l + 2
    lam = two_staircase(n, l, lp)
    names = default_z_names(2 * n)
    s = schur_bialternant(lam, 2 * n, names)
    big_names = names + ("w",)
    big = s.extend(("w",)).with_order(order)
    w_exp = tuple(1 if nm == "w" else 0 for nm in big_names)
    lhs = big.substitute({
        names[i - 1]: Poly.monomial(big_names, w_exp, 1, order),
        names[j - 1]: Poly.monomial(big_names, w_exp, CycloNum.root(order, k), order),
    })

    u_lp = sum((CycloNum.root(order, k * t) for t in range(lp + 1)), CycloNum.zero(order))
    rhs = Poly.monomial(big_names, tuple(x * lp for x in w_exp), u_lp, order)
    for mpos in range(1, 2 * n + 1):
        if mpos in (i, j):
            continue
        rhs = rhs * _u_ratio(big_names, names[mpos - 1], l, k, order)
    remaining = [p for p in range(1, 2 * n + 1) if p not in (i, j)]
    if n >= 2:
        s_small = schur_bialternant(two_staircase(n - 1, l, lp), 2 * n - 2)
        positions = [big_names.index(names[p - 1]) for p in remaining]
        rhs = rhs * s_small.embed(big_names, positions).with_order(order)
    return lhs == rhs


def m_wheel_check(N: int, m: int, l: int, lam_prime: Partition | Sequence[int], I: Sequence[int] | None = None, K: Sequence[int] | None = None) -> bool:
    """(m, l)-wheel condition: m+1 variables at q^k w (q = zeta_(l+m)) kill the polynomial.

    I is a set of m+1 positions in 1..N and K a set of m+1 exponents in
    1..l+m.  With both omitted, all choices are checked; if N < m+1 the
    condition is vacuous and the check passes.
    """
    lam = m_staircase(N, m, l, lam_prime)
    order = l + m
    names = default_z_names(N)
    s = schur_bialternant(lam, N, names)
    if I is None and K is None:
        if N < m + 1:
            return True
        return all(
            _wheel_substitution(s, names, pos, exps, order).is_zero()
            for pos in itertools.combinations(range(1, N + 1), m + 1)
            for exps in itertools.combinations(range(1, l + m + 1), m + 1)
        )
    if I is None or K is None:
        raise BadIndices("give both I and K, or neither")
    I, K = list(I), list(K)
    if len(I) != m + 1 or len(set(I)) != m + 1 or not all(1 <= p <= N for p in I):
        raise BadIndices(f"I must be {m+1} distinct positions in 1..{N}")
    if len(K) != m + 1 or len(set(K)) != m + 1 or not all(1 <= e <= l + m for e in K):
        raise BadIndices(f"K must be {m+1} distinct exponents in 1..{l+m}")
    return _wheel_substitution(s, names, I, K, order).is_zero()


def m_recursion_check(N: int, m: int, l: int, lam_prime: Partition | Sequence[int], I: Sequence[int], K: Sequence[int]) -> bool:
    """Exact m-variable recursion for m-staircase Schur functions.

    Substituting z_(i_a) = q^(k_a) w for the m positions in I yields
    s_seed(q^K) * w^|seed| * prod over remaining positions and exponents of
    (z_j - q^h w) * the (N-m)-variable m-staircase Schur function.
    """
    lam_prime = lam_prime if isinstance(lam_prime, Partition) else Partition(lam_prime)
    I, K = list(I), list(K)
    if len(I) != m or len(set(I)) != m or not all(1 <= p <= N for p in I):
        raise BadIndices(f"I must be {m} distinct positions in 1..{N}")
    if len(K) != m or len(set(K)) != m or not all(1 <= e <= l + m for e in K):
        raise BadIndices(f"K must be {m} distinct exponents in 1..{l+m}")
    order = l + m
    lam = m_staircase(N, m, l, lam_prime)
    names = default_z_names(N)
    s = schur_bialternant(lam, N, names)
    lhs = _wheel_substitution(s, names, I, K, order)

    big_names = names + ("w",)
    w_exp = tuple(1 if nm == "w" else 0 for nm in big_names)
    prefactor = schur_specialized(lam_prime, [CycloNum.root(order, ka) for ka in K])
    rhs = Poly.monomial(big_names, tuple(x * lam_prime.weight for x in w_exp), prefactor, order)
    remaining = [p for p in range(1, N + 1) if p not in I]
    for j in remaining:
        zj = Poly.variable(big_names, names[j - 1], order)
        for h in range(1, l + m + 1):
            if h in K:
                continue
            rhs = rhs * (zj - Poly.monomial(big_names, w_exp, CycloNum.root(order, h), order))
    if remaining:
        s_small = schur_bialternant(m_staircase(N - m, m, l, lam_prime), N - m)
        positions = [big_names.index(names[p - 1]) for p in remaining]
        rhs = rhs * s_small.embed(big_names, positions).with_order(order)
    return lhs == rhs


# -- splitting, probes, degrees -----------------------------------------------------


def splitting_check(lam: Partition | Sequence[int], mu: Partition | Sequence[int]) -> bool:
    """Check the low-order split of s_nu(z, eps*y) for nu = concat(lam, mu).

    All coefficients of eps^t for t < |mu| must vanish, and the eps^|mu|
    coefficient must equal s_lam(z) * s_mu(y).
    """
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    mu = mu if isinstance(mu, Partition) else Partition(mu)
    if lam.length and mu.length and lam[lam.length - 1] < mu[0]:
        raise BadConcat(f"cannot concatenate: {lam} ends below {mu} start")
    nu = Partition(lam.parts + mu.parts)
    k, h = lam.length, mu.length
    z_names = tuple(f"z{i+1}" for i in range(k))
    y_names = tuple(f"y{i+1}" for i in range(h))
    names = z_names + y_names
    s_nu = schur_bialternant(nu, k + h, names)
    big = s_nu.extend(("eps",))
    assignment = {}
    for ynm in y_names:
        exp = tuple(1 if nm in (ynm, "eps") else 0 for nm in big.names)
        assignment[ynm] = Poly.monomial(big.names, exp, 1)
    expanded = big.substitute(assignment)
    for t in range(mu.weight):
        if not expanded.coefficient("eps", t).is_zero():
            return False
    lead = expanded.coefficient("eps", mu.weight)
    s_lam = schur_bialternant(lam, k, z_names) if k else Poly.const((), 1)
    s_mu = schur_bialternant(mu, h, y_names) if h else Poly.const((), 1)
    target = s_lam.embed(names, list(range(k))) * s_mu.embed(names, [k + i for i in range(h)])
    return lead == target


def unfactorability_probe(l: int, lp: int) -> bool:
    """Collapse s for the 4-variable 2-staircase at (z, z, z, 0).

    The value must be z^(2(l+lp)) * (l+2)(lp+1)(l-lp+1)/2, which is nonzero
    for every 0 <= lp <= l; this rules out a factor z_i - z_j.
    """
    lam = two_staircase(2, l, lp)
    names = default_z_names(4)
    s = schur_bialternant(lam, 4, names)
    z1 = Poly.variable(names, "z1")
    collapsed = s.substitute({"z2": z1, "z3": z1, "z4": 0})
    scale = Fraction((l + 2) * (lp + 1) * (l - lp + 1), 2)
    expected = Poly.monomial(names, (2 * (l + lp), 0, 0, 0), scale)
    return collapsed == expected


def degree_triple(N: int, m: int, l: int) -> tuple[int, int, int]:
    """(D*, d*, d_m*) for the all-zero-seed m-staircase in N variables.

    With N = a*m + b, 1 <= b <= m: D* = l*(m*a*(a-1)/2 + a*b), d* = a*l,
    d_m* = (N-m)*l (meaningful when N >= m).
    """
    if N < 1 or m < 1 or l < 0:
        raise BadParams(f"need N, m >= 1 and l >= 0, got {(N, m, l)}")
    a, b = divmod(N - 1, m)
    b += 1
    D = l * (m * a * (a - 1) // 2 + a * b)
    return D, a * l, (N - m) * l


def wheel_space_dimension(N: int, m: int, l: int, basis_cap: int = 500, order_cap: int = 12) -> int:
    """Dimension of symmetric polynomials of degree D* (per-variable bound d*)
    annihilated by every (m, l)-wheel substitution; expected 1.

    Builds the monomial-symmetric basis, imposes each wheel substitution as
    exact linear constraints over Q(zeta_(l+m)), and returns the nullspace
    dimension.  Refuses oversize instances rather than thrash.
    """
    order = l + m
    if order > order_cap:
        raise TooLarge(f"cyclotomic order {order} exceeds cap {order_cap}")
    D, d, _ = degree_triple(N, m, l)
    mus = list(_bounded_partitions(D, N, d)) if D > 0 else [()]
    if len(mus) > basis_cap:
        raise TooLarge(f"basis size {len(mus)} exceeds cap {basis_cap}")
    names = default_z_names(N)
    basis = [_monomial_symmetric(mu, names) for mu in mus]
    rows: list[list[CycloNum]] = []
    for I in itertools.combinations(range(1, N + 1), m + 1):
        for K in itertools.combinations(range(1, l + m + 1), m + 1):
            images = [_wheel_substitution(p, names, I, K, order) for p in basis]
            monomials = sorted({e for img in images for e in img.terms})
            for e in monomials:
                row = []
                for img in images:
                    c = img.terms.get(e, CycloNum.zero(order))
                    row.append(c if isinstance(c, CycloNum) else CycloNum.from_rat(c, order))
                rows.append(row)
    rank = _rank_over_field(rows, len(basis))
    return len(basis) - rank


def _bounded_partitions(total: int, max_parts: int, max_part: int):
    """Weakly decreasing tuples summing to total, length <= max_parts, parts <= max_part."""
    def rec(remaining: int, slots: int, bound: int):
        if remaining == 0:
            yield ()
            return
        if slots == 0 or bound == 0:
            return
        for first in range(min(remaining, bound), 0, -1):
            for rest in rec(remaining - first, slots - 1, first):
                yield (first,) + rest
    yield from rec(total, max_parts, max_part)


def _monomial_symmetric(mu: tuple[int, ...], names: tuple[str, ...]) -> Poly:
    padded = tuple(mu) + (0,) * (len(names) - len(mu))
    return Poly(names, {e: 1 for e in set(itertools.permutations(padded))})


def _rank_over_field(rows: list[list[CycloNum]], width: int) -> int:
    work = [list(r) for r in rows]
    rank = 0
    for col in range(width):
        pivot = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = work[rank][col].inverse()
        work[rank] = [x * inv for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank
