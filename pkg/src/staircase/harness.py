"""Suite orchestration and machine-readable reporting.

Each suite is a list of independent cases with stable ids; a case runs to a
status in {pass, fail, skipped, infeasible} plus a human detail string.
Randomized suites draw integer instances from a seeded generator so reports
are reproducible; the seed is recorded in the report.  Cases may run on a
small worker pool (VERIHARNESS_THREADS); report assembly sorts by case id.
"""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Sequence

from . import asmlab, polylinalg, symfunc, theorems
from .multipoly import Poly
from .symfunc import Partition

DEFAULT_SEED = 42

SUITE_NAMES = ("asm", "theorem1", "theorem2", "wheel", "recursion", "bazin", "minexp", "schur", "appendixB", "all")


class UnknownSuite(ValueError):
    pass


@dataclass(frozen=True)
class CaseResult:
    id: str
    params: dict
    status: str
    detail: str
    elapsed_ms: int


@dataclass
class SuiteReport:
    suite: str
    seed: int
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        return {
            "total": len(self.cases),
            "passed": sum(1 for c in self.cases if c.status == "pass"),
            "failed": sum(1 for c in self.cases if c.status == "fail"),
        }

    @property
    def ok(self) -> bool:
        return self.summary["failed"] == 0

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "cases": [
                {"id": c.id, "params": c.params, "status": c.status, "detail": c.detail, "elapsed_ms": c.elapsed_ms}
                for c in self.cases
            ],
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> SuiteReport:
        report = cls(suite=data["suite"], seed=data["seed"])
        for c in data["cases"]:
            report.cases.append(CaseResult(c["id"], c["params"], c["status"], c["detail"], c["elapsed_ms"]))
        return report

    @classmethod
    def from_json(cls, text: str) -> SuiteReport:
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class Options:
    n: int | None = None
    l: int | None = None
    lp: int | None = None
    m: int | None = None
    N: int | None = None
    seed: int = DEFAULT_SEED
    cap: int = 7
    force: bool = False


Case = tuple[str, dict, Callable[[], tuple[bool, str]]]


def _run_cases(suite: str, cases: Sequence[Case], seed: int) -> SuiteReport:
    threads = int(os.environ.get("VERIHARNESS_THREADS", "1") or "1")

    def run_one(case: Case) -> CaseResult:
        cid, params, thunk = case
        start = time.monotonic()
        try:
            ok, detail = thunk()
            status = "pass" if ok else "fail"
        except (theorems.Infeasible, asmlab.CapExceeded, symfunc.TooLarge) as e:
            status, detail = "infeasible", str(e)
        except Exception as e:  # a crashed case is a failing case
            status, detail = "fail", f"{type(e).__name__}: {e}"
        elapsed = int((time.monotonic() - start) * 1000)
        return CaseResult(cid, params, status, detail, elapsed)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run_one, cases))
    else:
        results = [run_one(c) for c in cases]
    report = SuiteReport(suite=suite, seed=seed)
    report.cases = sorted(results, key=lambda c: c.id)
    return report


def _bool_case(cid: str, params: dict, fn: Callable[[], bool], detail_ok: str = "exact", detail_bad: str = "mismatch") -> Case:
    def thunk():
        ok = fn()
        return ok, (detail_ok if ok else detail_bad)
    return cid, params, thunk


# -- suite builders ------------------------------------------------------------------


def _asm_cases(opt: Options) -> list[Case]:
    golden = {
        1: ((1,),),
        2: ((0, 1), (1, 0)),
        3: ((0, 1, 1), (1, 1, 1), (1, 1, 0)),
        4: ((0, 2, 3, 2), (2, 4, 5, 3), (3, 5, 4, 2), (2, 3, 2, 0)),
        5: ((0, 7, 14, 14, 7), (7, 21, 33, 30, 14), (14, 33, 41, 33, 14), (14, 30, 33, 21, 7), (7, 14, 14, 7, 0)),
    }
    cases: list[Case] = []
    n_max = opt.n if opt.n is not None else 6
    for n in range(1, n_max + 1):
        def count_check(n=n):
            got = sum(1 for _ in asmlab.enumerate_asms(n, opt.cap, opt.force))
            want = asmlab.count_formula(n)
            return got == want, f"enumerated {got}, product formula {want}"
        cases.append((f"count/n={n}", {"n": n}, count_check))
    for n, want in golden.items():
        def golden_check(n=n, want=want):
            got = asmlab.refined_matrix(n, opt.cap, opt.force).counts
            return got == want, "matches printed census" if got == want else f"got {got}"
        cases.append((f"census/n={n}", {"n": n}, golden_check))
    for n in range(2, min(n_max, 6) + 1):
        def invariants(n=n):
            t = asmlab.refined_matrix(n, opt.cap, opt.force)
            a1, a2 = asmlab.count_formula(n - 1), asmlab.count_formula(n - 2)
            ok = (
                t.total() == asmlab.count_formula(n)
                and t.row_sums()[0] == a1 and t.row_sums()[-1] == a1
                and t.col_sums()[0] == a1 and t.col_sums()[-1] == a1
                and t.counts[n - 1][0] == a2 and t.counts[0][n - 1] == a2
                and all(t.counts[i][j] == t.counts[n - 1 - j][n - 1 - i] for i in range(n) for j in range(n))
            )
            return ok, "marginals, corners and persymmetry"
        cases.append((f"census-invariants/n={n}", {"n": n}, invariants))
    for n in range(1, min(n_max, 5) + 1):
        def rowcol(n=n):
            t = asmlab.refined_rowcol(n, opt.cap, opt.force)
            a = asmlab.refined_matrix(n, opt.cap, opt.force)
            ok = t.total() == asmlab.count_formula(n) and t.row_sums() == a.row_sums()
            return ok, "total and first-row marginal agree with the row/row census"
        cases.append((f"rowcol/n={n}", {"n": n}, rowcol))
    return cases


def _theorem1_cases(opt: Options) -> list[Case]:
    printed = {2: -1, 3: 1, 4: -7, 5: 1764}
    cases: list[Case] = []
    n_max = opt.n if opt.n is not None else 6
    for n in range(2, n_max + 1):
        def check(n=n):
            t = asmlab.refined_matrix(n, opt.cap, opt.force)
            det = polylinalg.det_generic([list(r) for r in t.counts])
            ok = asmlab.theorem1_check(n, opt.cap, opt.force)
            if n in printed:
                ok = ok and det == printed[n]
            return ok, f"det = {det}"
        cases.append((f"det/n={n}", {"n": n}, check))
    for n in range(2, min(n_max, 5) + 1):
        cases.append(_bool_case(f"chain/n={n}", {"n": n}, lambda n=n: theorems.theorem1_via_theorem2(n), "chain re-derivation agrees with brute force"))
    return cases


def _theorem2_grid(opt: Options) -> list[tuple[int, int, int]]:
    if opt.n is not None and opt.l is not None and opt.lp is not None:
        return [(opt.n, opt.l, opt.lp)]
    grid: list[tuple[int, int, int]] = []
    for l in range(0, 4):
        for lp in range(0, l + 1):
            grid.append((1, l, lp))
    for l in range(0, 4):
        for lp in range(0, l + 1):
            grid.append((2, l, lp))
    grid += [(3, 1, 0), (3, 1, 1)]
    return grid


def _theorem2_cases(opt: Options) -> list[Case]:
    cases: list[Case] = []
    for n, l, lp in _theorem2_grid(opt):
        def check(n=n, l=l, lp=lp):
            r = theorems.theorem2_verify(n, l, lp, force=opt.force)
            detail = f"constant {r.constant_found} (expected {r.constant_expected}), N={r.N}"
            return r.passed and r.constant_found == r.constant_expected, detail
        cases.append((f"factorization/n={n},l={l},lp={lp}", {"n": n, "l": l, "lp": lp}, check))
    for n, l, lp in [(2, 1, 0), (2, 1, 1), (3, 1, 0)]:
        if opt.n is not None and (n, l, lp) != (opt.n, opt.l, opt.lp):
            continue
        cases.append(_bool_case(
            f"divisibility/n={n},l={l},lp={lp}", {"n": n, "l": l, "lp": lp},
            lambda n=n, l=l, lp=lp: theorems.theorem2_divisibility_probe(n, l, lp, force=opt.force),
            "stated factor divides the determinant"))
    for n, l, lp in [(1, 2, 1), (2, 1, 0), (2, 1, 1), (2, 2, 0)]:
        if opt.n is not None and (n, l, lp) != (opt.n, opt.l, opt.lp):
            continue
        def agree(n=n, l=l, lp=lp):
            r1 = theorems.theorem2_verify(n, l, lp, force=opt.force)
            r2 = theorems.theorem2_verify(n, l, lp, mode="generic-xy", force=opt.force)
            return r1.passed and r2.passed, "coefficient-matrix and generic-xy modes agree"
        cases.append((f"mode-agreement/n={n},l={l},lp={lp}", {"n": n, "l": l, "lp": lp}, agree))
    return cases


_WHEEL_PARAMS = ((2, 1, 0), (2, 2, 0), (2, 2, 1), (3, 1, 0), (3, 1, 1))


def _wheel_cases(opt: Options) -> list[Case]:
    params = _WHEEL_PARAMS
    if opt.n is not None and opt.l is not None and opt.lp is not None:
        params = ((opt.n, opt.l, opt.lp),)
    cases = []
    for n, l, lp in params:
        cases.append(_bool_case(
            f"wheel/n={n},l={l},lp={lp}", {"n": n, "l": l, "lp": lp},
            lambda n=n, l=l, lp=lp: symfunc.wheel_check(n, l, lp),
            "zero on every wheel substitution"))
    return cases


def _recursion_cases(opt: Options) -> list[Case]:
    params = _WHEEL_PARAMS
    if opt.n is not None and opt.l is not None and opt.lp is not None:
        params = ((opt.n, opt.l, opt.lp),)
    cases = []
    for n, l, lp in params:
        def check(n=n, l=l, lp=lp):
            for i in range(1, 2 * n + 1):
                for j in range(i + 1, 2 * n + 1):
                    for k in range(1, l + 2):
                        if not symfunc.recursion_check(n, l, lp, i, j, k):
                            return False, f"failed at positions ({i},{j}), k={k}"
            return True, "exact for every position pair and k"
        cases.append((f"recursion/n={n},l={l},lp={lp}", {"n": n, "l": l, "lp": lp}, check))
        if max(0, (l + 2)) > 0:
            def gcd_vanish(n=n, l=l, lp=lp):
                # Divisibility remark: gcd(lp+1, l+2) > 1 forces vanishing at z_i = q^k z_j.
                from math import gcd
                g = gcd(lp + 1, l + 2)
                if g == 1:
                    return True, "not applicable (gcd = 1)"
                k = (l + 2) // g
                lam = symfunc.two_staircase(n, l, lp)
                names = symfunc.default_z_names(2 * n)
                s = symfunc.schur_bialternant(lam, 2 * n, names).with_order(l + 2)
                from .exactnum import CycloNum
                zj = Poly.variable(names, names[1], l + 2)
                val = s.substitute({names[0]: zj * CycloNum.root(l + 2, k)})
                return val.is_zero(), f"vanishes at z1 = q^{k} z2"
            cases.append((f"gcd-vanishing/n={n},l={l},lp={lp}", {"n": n, "l": l, "lp": lp}, gcd_vanish))
    return cases


def _bazin_cases(opt: Options) -> list[Case]:
    rng = random.Random(opt.seed)
    cases: list[Case] = []

    def rmat(r, c):
        return [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]

    shapes = [(3, 2, 1)] * 50 + [(4, 3, 2)] * 40 + [(3, 2, 0)] * 10
    for idx, (m, n, p) in enumerate(shapes):
        A, B, C = rmat(m, n), rmat(m, n), rmat(m, m - n)
        cases.append(_bool_case(
            f"bazin/{idx:03d}(m={m},n={n},p={p})", {"m": m, "n": n, "p": p, "seed": opt.seed},
            lambda m=m, n=n, p=p, A=A, B=B, C=C: polylinalg.bazin_compound_check(m, n, p, A, B, C),
            "compound determinant factorizes"))
    A, B, C = rmat(4, 3), rmat(4, 3), rmat(4, 1)
    import itertools as it
    rev = list(reversed([tuple(s) for s in it.combinations(range(3), 2)]))
    def ordering_independent():
        ok1 = polylinalg.bazin_compound_check(4, 3, 2, A, B, C)
        ok2 = polylinalg.bazin_compound_check(4, 3, 2, A, B, C, ordering=rev)
        return ok1 and ok2, "det D identical under a second subset ordering"
    cases.append(("bazin/ordering-independence", {"m": 4, "n": 3, "p": 2, "seed": opt.seed}, ordering_independent))

    def tab(k, n):
        return [[Fraction(rng.randint(-5, 5)) for _ in range(n)] for _ in range(k)]
    corollary = [
        ("corollary/k=n", lambda: polylinalg.divisibility_corollary_check(3, 2, 2, (0, 0, 0), tab(2, 2), tab(2, 2))),
        ("corollary/k=1,n=2,m=3", lambda: polylinalg.divisibility_corollary_check(3, 2, 1, (0, 0, 0), tab(1, 2), tab(1, 2))),
        ("corollary/k=2,n=3,m=4", lambda: polylinalg.divisibility_corollary_check(4, 3, 2, (1, 0, 0, 0), tab(2, 3), tab(2, 3))),
    ]
    for cid, fn in corollary:
        cases.append(_bool_case(cid, {"seed": opt.seed}, fn, "determinant divisible by the stated power"))
    return cases


def _minexp_cases(opt: Options) -> list[Case]:
    rng = random.Random(opt.seed + 1)
    cases: list[Case] = []
    grid = [(k, n) for k in (1, 2, 3) for n in (2, 3, 4)]
    for idx in range(100):
        k, n = grid[idx % len(grid)]
        mats = [[[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)] for _ in range(k)]
        cases.append(_bool_case(
            f"minexp/{idx:03d}(k={k},n={n})", {"k": k, "n": n, "seed": opt.seed},
            lambda mats=mats: polylinalg.minor_expansion_sum_check(mats),
            "minor expansion matches the plain determinant"))

    def lemma_case(idx, build, n):
        pts_u = rng.sample(range(-20, 20), n)
        pts_v = rng.sample(range(-20, 20), n)
        P = build()
        cases.append(_bool_case(
            f"coeff-lemma/{idx}", {"n": n, "seed": opt.seed},
            lambda P=P, u=pts_u, v=pts_v: polylinalg.coefficient_factorization_check(
                P, [Fraction(x) for x in u], [Fraction(x) for x in v]),
            "interpolation determinant factorizes through the coefficient matrix"))

    uv = ("u", "v")
    u = Poly.variable(uv, "u")
    v = Poly.variable(uv, "v")
    lemma_case(0, lambda: u * v, 2)
    lemma_case(1, lambda: Poly.const(uv, 1) + u * v, 2)
    lemma_case(2, lambda: (u + v) ** 2, 3)
    for idx in range(3, 8):
        n = rng.choice((2, 3, 4))
        terms = {(i, j): rng.randint(-4, 4) for i in range(n) for j in range(n)}
        lemma_case(idx, lambda terms=terms: Poly(uv, terms), n)
    return cases


def _schur_cases(opt: Options) -> list[Case]:
    rng = random.Random(opt.seed + 2)
    cases: list[Case] = []
    for n in range(1, 6):
        cases.append(_bool_case(
            f"count-identity/n={n}", {"n": n},
            lambda n=n: asmlab.schur_count_check(n, opt.cap, opt.force),
            "A_n 3^C(n,2) equals the staircase Schur value at all ones"))
    for n in range(1, 5):
        cases.append(_bool_case(
            f"combinatorial-point/n={n}", {"n": n},
            lambda n=n: asmlab.combinatorial_point_check(n, opt.cap, opt.force),
            "uniform weights and Z_n = A_n (q-q^2)^(n^2)"))
    for n in range(1, 4):
        cases.append(_bool_case(
            f"double-refined/n={n}", {"n": n},
            lambda n=n: asmlab.double_refined_check(n, opt.cap, opt.force),
            "census generating function equals the Schur formula"))
    for n in range(1, 4):
        cases.append(_bool_case(
            f"vandermonde-substitution/n={n}", {"n": n},
            lambda n=n: asmlab.vander_substitution_check(n),
            "exact polynomial identity"))

    documented = [((2,), (1,)), ((1, 1), (0, 0)), ((2, 2), (1, 0))]
    for idx, (lam, mu) in enumerate(documented):
        cases.append(_bool_case(
            f"splitting/doc{idx}", {"lam": list(lam), "mu": list(mu)},
            lambda lam=lam, mu=mu: symfunc.splitting_check(lam, mu),
            "low-order coefficients vanish and the split matches"))
    made = 0
    while made < 10:
        k = rng.randint(1, 3)
        h = rng.randint(1, 3)
        mu = sorted((rng.randint(0, 2) for _ in range(h)), reverse=True)
        low = mu[0] if mu else 0
        lam = sorted((rng.randint(low, low + 2) for _ in range(k)), reverse=True)
        if sum(lam) + sum(mu) > 8:
            continue
        cases.append(_bool_case(
            f"splitting/rand{made}", {"lam": lam, "mu": mu, "seed": opt.seed},
            lambda lam=tuple(lam), mu=tuple(mu): symfunc.splitting_check(lam, mu),
            "low-order coefficients vanish and the split matches"))
        made += 1

    for N in range(2, 6):
        for h in range(0, 4):
            if N > 4 and h > 2:
                continue
            cases.append(_bool_case(
                f"staircase-product/N={N},h={h}", {"N": N, "h": h},
                lambda N=N, h=h: _staircase_product_identity(N, h),
                "staircase Schur equals the Chebyshev product"))

    for l in range(0, 4):
        for lp in range(0, l + 1):
            cases.append(_bool_case(
                f"collapse-probe/l={l},lp={lp}", {"l": l, "lp": lp},
                lambda l=l, lp=lp: symfunc.unfactorability_probe(l, lp),
                "collapsed value matches the closed form"))

    for idx, lam in enumerate(_oracle_partitions()):
        cases.append(_bool_case(
            f"two-path/{idx:02d}({lam})", {"partition": str(lam), "seed": opt.seed},
            lambda lam=lam: _two_path_agreement(lam, rng, points=20),
            "bialternant ratio and h-determinant agree at 20 rational points"))
    return cases


def _staircase_product_identity(N: int, h: int) -> bool:
    names = symfunc.default_z_names(N)
    s = symfunc.schur_bialternant(symfunc.staircase(N, h), N, names)
    prod = Poly.const(names, 1)
    for i in range(N):
        for j in range(i + 1, N):
            prod = prod * symfunc.chebyshev_U(h).embed(names, [i, j])
    return s == prod


def _oracle_partitions() -> list[Partition]:
    """Every partition exercised by the factorization, wheel and appendix suites."""
    seen: dict[tuple, Partition] = {}

    def add(p: Partition):
        seen.setdefault(p.parts, p)

    for l in range(0, 4):
        for lp in range(0, l + 1):
            add(symfunc.two_staircase(1, l, lp))
            add(symfunc.two_staircase(2, l, lp))
    add(symfunc.two_staircase(3, 1, 0))
    add(symfunc.two_staircase(3, 1, 1))
    for n, l, lp in _WHEEL_PARAMS:
        add(symfunc.two_staircase(n, l, lp))
    for l in range(0, 4):
        add(symfunc.staircase(2, l + 1))
        add(symfunc.staircase(4, l + 1))
    for m in (1, 2, 3):
        for N in range(1, 6):
            for l in range(0, 3):
                add(symfunc.m_staircase(N, m, l, Partition((0,) * m)))
    add(symfunc.m_staircase(4, 3, 1, (1, 0, 0)))
    add(symfunc.m_staircase(4, 2, 1, (1, 0)))
    add(symfunc.m_staircase(4, 2, 2, (1, 0)))
    return list(seen.values())


def _two_path_agreement(lam: Partition, rng: random.Random, points: int = 20) -> bool:
    r = lam.length
    if r == 0:
        return True
    for _ in range(points):
        vals = [Fraction(rng.randint(1, 60), rng.randint(1, 9)) for _ in range(r)]
        while len(set(vals)) != r:
            vals = [Fraction(rng.randint(1, 60), rng.randint(1, 9)) for _ in range(r)]
        num = polylinalg.det_generic([[v ** (lam[j] + r - 1 - j) for j in range(r)] for v in vals])
        den = polylinalg.det_generic([[v ** (r - 1 - j) for j in range(r)] for v in vals])
        if num / den != symfunc.schur_specialized(lam, vals):
            return False
    return True


def _appendixB_cases(opt: Options) -> list[Case]:
    cases: list[Case] = []
    m3_seeds = [(0, 0, 0), (1, 0, 0)]
    for seed_parts in m3_seeds:
        cases.append(_bool_case(
            f"m-wheel/N=4,m=3,l=1,seed={','.join(map(str, seed_parts))}", {"N": 4, "m": 3, "l": 1, "seed_partition": list(seed_parts)},
            lambda sp=seed_parts: symfunc.m_wheel_check(4, 3, 1, sp),
            "zero on every wheel substitution"))
        def rec_all(sp=seed_parts):
            import itertools as it
            for I in it.combinations(range(1, 5), 3):
                for K in it.combinations(range(1, 5), 3):
                    if not symfunc.m_recursion_check(4, 3, 1, sp, I, K):
                        return False, f"failed at I={I}, K={K}"
            return True, "exact for every (I, K)"
        cases.append((f"m-recursion/N=4,m=3,l=1,seed={','.join(map(str, seed_parts))}", {"N": 4, "m": 3, "l": 1, "seed_partition": list(seed_parts)}, rec_all))
    for l in (1, 2):
        for seed_parts in ((0, 0), (1, 0)):
            cases.append(_bool_case(
                f"m-wheel/N=4,m=2,l={l},seed={','.join(map(str, seed_parts))}", {"N": 4, "m": 2, "l": l, "seed_partition": list(seed_parts)},
                lambda l=l, sp=seed_parts: symfunc.m_wheel_check(4, 2, l, sp),
                "zero on every wheel substitution"))
            def rec_all2(l=l, sp=seed_parts):
                import itertools as it
                for I in it.combinations(range(1, 5), 2):
                    for K in it.combinations(range(1, l + 3), 2):
                        if not symfunc.m_recursion_check(4, 2, l, sp, I, K):
                            return False, f"failed at I={I}, K={K}"
                return True, "exact for every (I, K)"
            cases.append((f"m-recursion/N=4,m=2,l={l},seed={','.join(map(str, seed_parts))}", {"N": 4, "m": 2, "l": l, "seed_partition": list(seed_parts)}, rec_all2))
    cases.append(_bool_case(
        "m-wheel/vacuous(N=3,m=3,l=2)", {"N": 3, "m": 3, "l": 2},
        lambda: symfunc.m_wheel_check(3, 3, 2, (0, 0, 0)),
        "no wheel hyperplanes; vacuous pass"))
    cases.append(_bool_case(
        "cross-check/m=2-reduces-to-wheel", {},
        lambda: symfunc.m_wheel_check(4, 2, 1, (0, 0)) == symfunc.wheel_check(2, 1, 0),
        "m=2 wheel agrees with the 2-staircase wheel"))

    for m in (1, 2, 3):
        for N in range(1, 6):
            for l in range(0, 3):
                def deg_check(N=N, m=m, l=l):
                    lam = symfunc.m_staircase(N, m, l, Partition((0,) * m))
                    s = symfunc.schur_bialternant(lam, N)
                    D, d, dm = symfunc.degree_triple(N, m, l)
                    d1 = s.degree_stats(1)
                    ok = d1[1] == D and d1[0] == d
                    if N >= m:
                        ok = ok and s.degree_stats(m)[0] == dm
                    return ok, f"(D,d,d_m) = ({D},{d},{dm})"
                cases.append((f"degree-triple/N={N},m={m},l={l}", {"N": N, "m": m, "l": l}, deg_check))

    for N, m, l in ((3, 1, 1), (4, 2, 1)):
        cases.append(_bool_case(
            f"wheel-space/N={N},m={m},l={l}", {"N": N, "m": m, "l": l},
            lambda N=N, m=m, l=l: symfunc.wheel_space_dimension(N, m, l) == 1,
            "solution space is one-dimensional"))
    return cases


_BUILDERS = {
    "asm": _asm_cases,
    "theorem1": _theorem1_cases,
    "theorem2": _theorem2_cases,
    "wheel": _wheel_cases,
    "recursion": _recursion_cases,
    "bazin": _bazin_cases,
    "minexp": _minexp_cases,
    "schur": _schur_cases,
    "appendixB": _appendixB_cases,
}


def run_suite(name: str, options: Options | None = None) -> SuiteReport:
    """Run a named suite; deterministic for a fixed seed."""
    opt = options or Options()
    if name == "all":
        cases: list[Case] = []
        for sub in ("asm", "theorem1", "theorem2", "wheel", "recursion", "bazin", "minexp", "schur", "appendixB"):
            cases.extend((f"{sub}/{cid}", params, thunk) for cid, params, thunk in _BUILDERS[sub](opt))
        return _run_cases("all", cases, opt.seed)
    if name not in _BUILDERS:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    return _run_cases(name, _BUILDERS[name](opt), opt.seed)
