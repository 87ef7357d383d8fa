"""Exact linear algebra over polynomial rings.

Determinants are computed fraction-free (Bareiss, with exact divisions that
are guaranteed in an integral domain) or by Laplace expansion with memoized
minors; both paths are kept and cross-checked.  The module also hosts the
compound-determinant identities: the minor expansion of a sum of matrices,
the Bazin-Reiss-Picquet factorization, its divisibility corollary, and the
coefficient-matrix factorization lemma for bivariate interpolation grids.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb
from typing import Sequence

from .exactnum import CycloNum
from .multipoly import NotDivisible, Poly, _merge_order


class NotSquare(ValueError):
    pass


class SizeMismatch(ValueError):
    pass


class BadShape(ValueError):
    pass


class DegreeTooHigh(ValueError):
    pass


class LengthMismatch(ValueError):
    pass


class PolyMatrix:
    """Rectangular matrix of Poly entries over a common context and field."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[Poly]) -> None:
        entries = list(entries)
        if rows * cols != len(entries):
            raise SizeMismatch(f"{rows}x{cols} needs {rows*cols} entries, got {len(entries)}")
        if entries:
            names = entries[0].names
            order = None
            for e in entries:
                if e.names != names:
                    raise SizeMismatch("entries use different variable contexts")
                order = _merge_order(order, e.order)
            entries = [e.with_order(order) for e in entries]
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Poly]]) -> PolyMatrix:
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat: list[Poly] = []
        for row in rows:
            if len(row) != c:
                raise SizeMismatch("ragged rows")
            flat.extend(row)
        return cls(r, c, flat)

    def at(self, i: int, j: int) -> Poly:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Poly]:
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(self.at(i, j)) for j in range(self.cols)) + "]" for i in range(self.rows))


def determinant(m: PolyMatrix, method: str = "bareiss") -> Poly:
    """Exact determinant of a square PolyMatrix.

    method: "bareiss" (fraction-free elimination, default) or "laplace"
    (expansion with memoized minors; better for very sparse matrices).
    """
    if m.rows != m.cols:
        raise NotSquare(f"{m.rows}x{m.cols} matrix")
    if m.rows == 0:
        names = ()
        return Poly.const(names, 1)
    if method == "bareiss":
        return _det_bareiss(m)
    if method == "laplace":
        grid = [m.row(i) for i in range(m.rows)]
        zero = Poly.zero(m.entries[0].names, m.entries[0].order)
        one = Poly.const(m.entries[0].names, 1, m.entries[0].order)
        return det_generic(grid, zero=zero, one=one)
    raise ValueError(f"unknown determinant method {method!r}")


def _det_bareiss(m: PolyMatrix) -> Poly:
    n = m.rows
    work = [[m.at(i, j) for j in range(n)] for i in range(n)]
    zero = Poly.zero(m.entries[0].names, m.entries[0].order)
    sign = 1
    prev: Poly | None = None
    for k in range(n - 1):
        # First nonzero pivot in column k (deterministic row-swap order).
        pivot = next((r for r in range(k, n) if work[r][k]), None)
        if pivot is None:
            return zero
        if pivot != k:
            work[k], work[pivot] = work[pivot], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                elt = work[k][k] * work[i][j] - work[i][k] * work[k][j]
                if prev is not None:
                    elt = elt.exact_divide(prev)
                work[i][j] = elt
        prev = work[k][k]
    out = work[n - 1][n - 1]
    return out if sign > 0 else -out


def det_generic(rows: Sequence[Sequence], zero=0, one=1):
    """Division-free determinant for any commutative-ring entries.

    Laplace expansion along the first row of each minor, memoized on the
    remaining-columns bitmask.  Works uniformly for ints, Fractions,
    CycloNums and Polys.
    """
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise NotSquare("ragged or non-square matrix")
    if n == 0:
        return one
    full = (1 << n) - 1
    memo: dict[int, object] = {}

    def minor(colmask: int):
        if colmask == 0:
            return one
        got = memo.get(colmask)
        if got is not None:
            return got
        depth = n - bin(colmask).count("1")
        row = rows[depth]
        total = zero
        sgn = 1
        rest = colmask
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            e = row[j]
            if e:
                sub = minor(colmask & ~low)
                term = e * sub
                total = total + term if sgn > 0 else total - term
            sgn = -sgn
            rest ^= low
        memo[colmask] = total
        return total

    return minor(full)


def vandermonde(var_polys: Sequence[Poly]) -> PolyMatrix:
    """Matrix with entry (i, j) = vars_i^(L-j), L = number of variables."""
    L = len(var_polys)
    rows = [[v ** (L - j) for j in range(1, L + 1)] for v in var_polys]
    return PolyMatrix.from_rows(rows)


def shifted_vandermonde(parts: Sequence[int], var_polys: Sequence[Poly]) -> PolyMatrix:
    """Matrix with entry (i, j) = vars_i^(parts_j + L - j), 1-indexed j."""
    L = len(parts)
    if len(var_polys) != L:
        raise LengthMismatch(f"{L} parts but {len(var_polys)} variables")
    rows = [[v ** (parts[j - 1] + L - j) for j in range(1, L + 1)] for v in var_polys]
    return PolyMatrix.from_rows(rows)


def slater_det(parts: Sequence[int], names: Sequence[str], positions: Sequence[int], order: int | None = None) -> Poly:
    """Shifted Vandermonde determinant as a Poly, by direct signed expansion.

    The matrix rows are the variables at ``positions`` within ``names``; the
    columns carry exponents parts[j] + L - 1 - j (0-indexed), which are all
    distinct, so the n! expansion terms are distinct monomials.
    """
    L = len(parts)
    if len(positions) != L:
        raise LengthMismatch(f"{L} parts but {len(positions)} positions")
    names = tuple(names)
    exps = [parts[j] + L - 1 - j for j in range(L)]
    terms: dict[tuple[int, ...], Fraction] = {}
    base = [0] * len(names)
    for perm in itertools.permutations(range(L)):
        e = list(base)
        for i, j in enumerate(perm):
            e[positions[i]] = exps[j]
        terms[tuple(e)] = Fraction(_perm_sign(perm))
    return Poly(names, terms, order)


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# -- minor expansion of a sum of matrices ---------------------------------------


def _ordered_partitions(n: int, k: int):
    """All ordered k-tuples of (possibly empty) disjoint sorted blocks covering 0..n-1."""
    for assign in itertools.product(range(k), repeat=n):
        blocks: list[list[int]] = [[] for _ in range(k)]
        for i, a in enumerate(assign):
            blocks[a].append(i)
        yield [tuple(b) for b in blocks]


def _block_signature(blocks_i: Sequence[Sequence[int]], blocks_j: Sequence[Sequence[int]]) -> int:
    """Sign of the permutation sending concat(I) to concat(J), blocks kept in order."""
    n = sum(len(b) for b in blocks_i)
    tau = [0] * n
    for bi, bj in zip(blocks_i, blocks_j):
        for s, t in zip(bi, bj):
            tau[s] = t
    return _perm_sign(tau)


def _submatrix_det(matrix: Sequence[Sequence], rows: Sequence[int], cols: Sequence[int]):
    if not rows:
        return 1
    sub = [[matrix[i][j] for j in cols] for i in rows]
    return det_generic(sub)


def minor_expansion_sum_check(summands: Sequence[Sequence[Sequence]]) -> bool:
    """Check det(sum of matrices) against the signed sum of products of minors.

    Both sides are evaluated independently: the left as a plain determinant
    of the entrywise sum, the right as the sum over compatible ordered
    partition pairs of signed products of block minors.
    """
    k = len(summands)
    n = len(summands[0])
    for m in summands:
        if len(m) != n or any(len(row) != n for row in m):
            raise SizeMismatch("summands must be square matrices of equal size")
    total_matrix = [[sum(summands[a][i][j] for a in range(k)) for j in range(n)] for i in range(n)]
    lhs = det_generic(total_matrix)

    by_sizes: dict[tuple[int, ...], list] = {}
    for blocks in _ordered_partitions(n, k):
        by_sizes.setdefault(tuple(len(b) for b in blocks), []).append(blocks)
    rhs = 0
    for group in by_sizes.values():
        for blocks_i in group:
            for blocks_j in group:
                prod = _block_signature(blocks_i, blocks_j)
                for a in range(k):
                    prod = prod * _submatrix_det(summands[a], blocks_i[a], blocks_j[a])
                rhs = rhs + prod
    return lhs == rhs


# -- Bazin-Reiss-Picquet ----------------------------------------------------------


def bazin_compound_check(m: int, n: int, p: int, A, B, C, ordering: Sequence[tuple[int, ...]] | None = None) -> bool:
    """Check the compound-determinant factorization det D = det(A|C)^C(n-1,p) det(B|C)^C(n-1,p-1).

    A, B are m x n, C is m x (m-n); D is indexed by pairs of p-subsets of the
    A-columns, its (I, J) entry being the determinant after replacing columns
    I of (A|C) with columns J of B, in order.  ``ordering`` overrides the
    default lexicographic ordering of the p-subsets (the result must not
    depend on it).
    """
    if not (m >= n >= p >= 0):
        raise BadShape(f"need m >= n >= p >= 0, got {(m, n, p)}")
    if len(A) != m or len(B) != m or (m > n and len(C) != m):
        raise BadShape("row counts do not match m")
    subsets = list(ordering) if ordering is not None else [tuple(s) for s in itertools.combinations(range(n), p)]

    def ac_column(k: int):
        return [A[i][k] for i in range(m)] if k < n else [C[i][k - n] for i in range(m)]

    def m_ij(I: tuple[int, ...], J: tuple[int, ...]):
        cols = []
        for k in range(m):
            if k < n and k in I:
                cols.append([B[i][J[I.index(k)]] for i in range(m)])
            else:
                cols.append(ac_column(k))
        return [[cols[j][i] for j in range(m)] for i in range(m)]

    D = [[det_generic(m_ij(I, J)) for J in subsets] for I in subsets]
    lhs = det_generic(D)
    det_ac = det_generic([[ac_column(k)[i] for k in range(m)] for i in range(m)])
    bc_cols = [[B[i][k] for i in range(m)] for k in range(n)] + [[C[i][k] for i in range(m)] for k in range(m - n)]
    det_bc = det_generic([[bc_cols[k][i] for k in range(m)] for i in range(m)])
    if n < 1:
        raise BadShape("need n >= 1")
    e1 = comb(n - 1, p)
    e2 = comb(n - 1, p - 1) if p >= 1 else 0
    rhs = (det_ac ** e1) * (det_bc ** e2)
    return lhs == rhs


def divisibility_corollary_check(m: int, n: int, k: int, parts: Sequence[int], u, v, seed_names: tuple[Sequence[str], Sequence[str]] | None = None) -> bool:
    """Check that det( sum_a u_i^a v_j^a P(z-minus-i, y_j) ) is divisible by P(z)^(n-k).

    P is the shifted Vandermonde (Slater) determinant for ``parts`` (length m)
    in m arguments; z has m variables and y has n.  u, v are k x n scalar
    tables.
    """
    if not (m >= n >= k >= 0):
        raise BadShape(f"need m >= n >= k >= 0, got {(m, n, k)}")
    if len(parts) != m:
        raise BadShape(f"P spec must have length m={m}")
    if len(u) != k or len(v) != k or any(len(row) != n for row in u) or any(len(row) != n for row in v):
        raise BadShape("u, v must be k x n tables")
    z_names = tuple(f"z{i+1}" for i in range(m)) if seed_names is None else tuple(seed_names[0])
    y_names = tuple(f"y{j+1}" for j in range(n)) if seed_names is None else tuple(seed_names[1])
    names = z_names + y_names

    def entry(i: int, j: int) -> Poly:
        positions = [t for t in range(m) if t != i] + [m + j]
        pz = slater_det(parts, names, positions)
        scale = sum(Fraction(u[a][i]) * Fraction(v[a][j]) for a in range(k))
        return pz * scale

    grid = [[entry(i, j) for j in range(n)] for i in range(n)]
    zero = Poly.zero(names)
    one = Poly.const(names, 1)
    det = det_generic(grid, zero=zero, one=one)
    p_z = slater_det(parts, names, list(range(m)))
    try:
        quotient = det
        for _ in range(n - k):
            quotient = quotient.exact_divide(p_z)
    except NotDivisible:
        return False
    return True


def coefficient_factorization_check(P: Poly, u_points: Sequence, v_points: Sequence) -> bool:
    """Check det(P(u_i, v_j)) = Delta(u) Delta(v) det(coefficient matrix of P).

    P must be a bivariate polynomial of degree at most n-1 in each variable,
    where n is the number of sample points per side.
    """
    if P.arity != 2:
        raise BadShape("P must be bivariate")
    n = len(u_points)
    if len(v_points) != n:
        raise BadShape("need equally many u and v points")
    du = P.degree_in(P.names[0])
    dv = P.degree_in(P.names[1])
    if du > n - 1 or dv > n - 1:
        raise DegreeTooHigh(f"degree ({du}, {dv}) exceeds n-1 = {n-1}")
    lhs = det_generic([[P.evaluate((ui, vj)) for vj in v_points] for ui in u_points], zero=Fraction(0), one=Fraction(1))
    coeffs = [[P.coefficient_bivariate(P.names[0], P.names[1], i, j).const_value() for j in range(n)] for i in range(n)]
    det_p = det_generic(coeffs, zero=Fraction(0), one=Fraction(1))
    delta_u = _delta(u_points)
    delta_v = _delta(v_points)
    return lhs == delta_u * delta_v * det_p


def _delta(points: Sequence) -> Fraction:
    out: Fraction | CycloNum = Fraction(1)
    pts = list(points)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            out = out * (pts[i] - pts[j])
    return out
