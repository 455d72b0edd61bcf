"""Named batches of identity checks, shared by the CLI and the acceptance tests.

Each suite yields :class:`Check` records; running one produces a verdict and
wall time.  Parameters are bounded by a site count and a particle count.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from itertools import product as cartesian
from typing import Callable, Iterator

from . import asm as asm_mod
from .algebra import VarTable, exact_div
from .combinatorics import partitions_in_box
from .lattice import (
    TILDE,
    LatticeConfig,
    b_element_generic,
    b_element_minus_one,
    c_element_minus_one,
    check_eigenstate,
    check_intermediate,
    check_rll,
    check_rll_tilde,
    check_ybe,
    commutes,
    corrupted_l_fn,
    create_state,
    dual_wavefunction,
    dual_wavefunction_closed,
    dwbpf,
    element_in_z,
    exchange_relations,
    intermediate_direct,
    intermediate_initial,
    intermediate_recursion_sides,
    matrix_element_B,
    scalar_product_identity,
    wavefunction_closed,
)
from .lattice.scalar import rational_battery
from .symfunc import SchurContext, beta_pair_product, cauchy_sides, schur_bialternant, schur_combinatorial

SUITES = (
    "schur",
    "intertwiners",
    "matrix-elements",
    "wavefunction",
    "scalar",
    "intermediate",
    "dwbpf",
    "cauchy",
    "asm",
    "bethe",
)


@dataclass(frozen=True)
class Check:
    id: str
    params: dict
    run: Callable[[], bool]


@dataclass(frozen=True)
class CheckResult:
    id: str
    params: dict
    verdict: bool
    ms: float


def run_check(check: Check) -> CheckResult:
    start = time.perf_counter()
    verdict = bool(check.run())
    return CheckResult(check.id, check.params, verdict, (time.perf_counter() - start) * 1000)


def occupations(M: int, N: int, cap: int = 1) -> list[tuple[int, ...]]:
    return [o for o in cartesian(range(cap + 1), repeat=M) if sum(o) == N]


# -- individual identities -----------------------------------------------------


def schur_agrees(M: int, N: int) -> bool:
    ctx = SchurContext.create(N)
    return all(schur_combinatorial(lam, ctx) == schur_bialternant(lam, ctx) for lam in partitions_in_box(N, M - N))


def minus_one_elements_agree(M: int) -> bool:
    cfg = LatticeConfig.create(M, ["z"], normalization=TILDE)
    z = cfg.var("z")
    for N in range(M):
        for n in occupations(M, N):
            for m in occupations(M, N + 1):
                if not element_in_z("B", m, n, z, cfg).equals(b_element_minus_one(m, n, z, cfg.beta)):
                    return False
                if not element_in_z("C", n, m, z, cfg).equals(c_element_minus_one(n, m, z, cfg.beta)):
                    return False
    return True


def generic_elements_agree(M: int, N: int) -> bool:
    """All pairs with ``n`` carrying ``N`` particles, per-site occupation up to ``N + 1``."""
    cfg = LatticeConfig.create(M, ["v"], t="formal")
    v = cfg.var("v")
    for n in occupations(M, N, N):
        for m in occupations(M, N + 1, N + 1):
            if matrix_element_B(m, n, v, cfg) != b_element_generic(m, n, v, cfg.t, cfg.beta):
                return False
    return True


def wavefunction_agrees(M: int, N: int, check_quotient: bool = True) -> bool:
    """Direct tilde wavefunction = closed form for every occupation; optionally the
    quotient by the beta pair product is beta-free."""
    zs = [f"z{j}" for j in range(1, N + 1)]
    cfg = LatticeConfig.create(M, zs, normalization=TILDE)
    zp = [cfg.var(z) for z in zs]
    state = create_state(zp, cfg)
    pairs = beta_pair_product(zp, cfg.beta, cfg.table)
    for occ in occupations(M, N):
        direct = state.amplitude(occ)
        if direct != wavefunction_closed(occ, zp, cfg):
            return False
        if check_quotient and exact_div(direct, pairs).degree("beta") != 0:
            return False
    return True


def dual_wavefunction_agrees(M: int, N: int) -> bool:
    zs = [f"z{j}" for j in range(1, N + 1)]
    cfg = LatticeConfig.create(M, zs, normalization=TILDE)
    return all(dual_wavefunction(o, zs, cfg) == dual_wavefunction_closed(o, zs, cfg) for o in occupations(M, N))


def scalar_symbolic(M: int, N: int) -> bool:
    us = [f"u{j}" for j in range(1, N + 1)]
    vs = [f"v{j}" for j in range(1, N + 1)]
    return scalar_product_identity(us, vs, LatticeConfig.create(M, us + vs)).holds


def scalar_rational(M: int, N: int, points: int = 3, seed: int = 7) -> bool:
    """The cleared identity at rational ``u, v, beta``; ``points`` values per variable."""
    checked = 0
    for k, pt in enumerate(rational_battery(20 * points, 2 * N + 1, seed)):
        us, vs, beta = pt[:N], pt[N : 2 * N], pt[-1]
        if len(set(us + vs)) < 2 * N:
            continue
        cfg = LatticeConfig.create(M, beta=beta)
        if not scalar_product_identity(us, vs, cfg).holds:
            return False
        checked += 1
        if checked >= points:
            return True
    return False


def intermediate_initial_agrees(M: int, N: int, points: int = 3) -> bool:
    for pt in rational_battery(points, N + M + 1, seed=11):
        vs, ws, beta = pt[:N], pt[N : N + M], pt[-1]
        if intermediate_direct([], vs, ws, beta, M) != intermediate_initial(vs, ws, beta, M):
            return False
    return True


def intermediate_recursion_agrees(M: int, N: int, n: int, points: int = 3) -> bool:
    checked = 0
    for pt in rational_battery(10 * points, n + N + M + 1, seed=13):
        us, vs, ws, beta = pt[:n], pt[n : n + N], pt[n + N : n + N + M], pt[-1]
        try:
            left, right = intermediate_recursion_sides(us, vs, ws, beta, M)
        except ZeroDivisionError:
            continue
        if left != right:
            return False
        checked += 1
        if checked >= points:
            return True
    return False


def dwbpf_agrees(N: int) -> bool:
    vs = [f"v{j}" for j in range(1, N + 1)]
    cfg = LatticeConfig.create(N, vs, inhomogeneities="formal")
    return dwbpf(vs, None, "direct", cfg).equals(dwbpf(vs, None, "factorized", cfg))


def dwbpf_homogeneous(N: int) -> bool:
    cfg = LatticeConfig.create(N, ["v"])
    v = cfg.var("v")
    z = dwbpf([v] * N, None, "direct", cfg)
    return z.num == (2 * v) ** (N * (N + 1) // 2) * z.den


@lru_cache(maxsize=None)
def asm_checks(n: int) -> dict[str, bool]:
    A = asm_mod.enumerate_asm(n)
    C = asm_mod.enumerate_sixvertex(n)
    out = {
        "count-matches-six-vertex": len(A) == len(C),
        "round-trip": all(asm_mod.sixvertex_to_asm(asm_mod.asm_to_sixvertex(a)) == a for a in A),
        "bijection-onto": sorted(asm_mod.sixvertex_to_asm(c).entries for c in C) == [a.entries for a in A],
        "statistics-correspond": all(
            asm_mod.asm_statistics(asm_mod.sixvertex_to_asm(c)) == asm_mod.sixvertex_statistics(c) for c in C
        ),
        "vertex-type-counts": all(
            asm_mod.vertex_type_counts(c)
            == asm_mod.expected_type_counts(n, asm_mod.sixvertex_statistics(c).nu, asm_mod.sixvertex_statistics(c).mu)
            for c in C
        ),
        "u-formula": asm_mod.verify_u_formula(n).holds,
    }
    return out


ASM_KEYS = (
    "count-matches-six-vertex",
    "round-trip",
    "bijection-onto",
    "statistics-correspond",
    "vertex-type-counts",
    "u-formula",
)


# -- suites --------------------------------------------------------------------


def suite_checks(suite: str, max_sites: int, max_particles: int) -> Iterator[Check]:
    M, N = max_sites, max_particles
    if suite == "schur":
        for m in range(1, M + 1):
            for n in range(1, min(N, m) + 1):
                yield Check("schur-combinatorial", {"M": m, "N": n}, lambda m=m, n=n: schur_agrees(m, n))
    elif suite == "intertwiners":
        yield Check("ybe", {"t": "formal"}, lambda: check_ybe().holds)
        yield Check("rll", {"t": "formal", "max_occupation": 3}, lambda: check_rll("generic", 3).holds)
        yield Check("rll", {"t": -1}, lambda: check_rll("minus_one").holds)
        yield Check("rll-tilde", {"t": -1}, lambda: check_rll_tilde().holds)

        def corrupted():
            t = VarTable(["u", "v", "beta"])
            return not check_rll("minus_one", l_fn=corrupted_l_fn(t.var("beta"), t.const(-1))).holds

        yield Check("rll-corrupted-entry-detected", {"t": -1}, corrupted)
    elif suite == "matrix-elements":
        for m in range(1, M + 1):
            yield Check("b-c-elements-t-minus-one", {"M": m}, lambda m=m: minus_one_elements_agree(m))
        for m in range(1, min(M, 5) + 1):
            for n in range(0, min(N, 2) + 1):
                yield Check("b-element-generic-t", {"M": m, "N": n}, lambda m=m, n=n: generic_elements_agree(m, n))
    elif suite == "wavefunction":
        for m in range(1, M + 1):
            for n in range(0, min(N, m) + 1):
                yield Check("wavefunction", {"M": m, "N": n}, lambda m=m, n=n: wavefunction_agrees(m, n))
                yield Check("dual-wavefunction", {"M": m, "N": n}, lambda m=m, n=n: dual_wavefunction_agrees(m, n))
    elif suite == "scalar":
        for m in range(1, min(M, 4) + 1):
            for n in range(0, min(N, 2, m) + 1):
                yield Check("scalar-product-symbolic", {"M": m, "N": n}, lambda m=m, n=n: scalar_symbolic(m, n))
        if N >= 3:
            for m in range(3, M + 1):
                yield Check("scalar-product-rational", {"M": m, "N": 3}, lambda m=m: scalar_rational(m, 3))
    elif suite == "intermediate":
        for m in range(1, min(M, 4) + 1):
            for big in range(1, min(N, 2, m) + 1):
                for n in range(0, big + 1):
                    params = {"M": m, "N": big, "n": n}
                    yield Check("intermediate-determinant", params, lambda m=m, b=big, n=n: check_intermediate(m, b, n).holds)
                    if n >= 1:
                        yield Check("intermediate-recursion", params, lambda m=m, b=big, n=n: intermediate_recursion_agrees(m, b, n))
                yield Check("intermediate-initial", {"M": m, "N": big}, lambda m=m, b=big: intermediate_initial_agrees(m, b))
    elif suite == "dwbpf":
        for n in range(1, min(M, 4) + 1):
            yield Check("dwbpf-factorized", {"N": n}, lambda n=n: dwbpf_agrees(n))
            yield Check("dwbpf-homogeneous", {"N": n}, lambda n=n: dwbpf_homogeneous(n))
    elif suite == "cauchy":
        for m in range(1, M + 1):
            for n in range(1, min(N, m) + 1):
                yield Check("cauchy", {"M": m, "N": n}, lambda m=m, n=n: cauchy_sides(m, n).holds)
        if M >= 3 and N >= 2:
            yield Check("cauchy-literal-entry-rejected", {"M": 3, "N": 2}, lambda: not cauchy_sides(3, 2, "yj").holds)
    elif suite == "asm":
        for n in range(1, min(M, 4) + 1):
            for key in ASM_KEYS:
                yield Check(f"asm-{key}", {"n": n}, lambda n=n, key=key: asm_checks(n)[key])
        yield Check("asm-count-3", {"n": 3}, lambda: len(asm_mod.enumerate_asm(3)) == 7)
    elif suite == "bethe":
        for m, beta, v in ((2, 1, Fraction(1, 2)), (4, 1, Fraction(1, 2)), (3, 2, Fraction(1, 3))):
            if m <= M:
                yield Check("eigenstate", {"M": m, "beta": str(beta), "v": str(v)},
                            lambda m=m, b=beta, v=v: check_eigenstate([v], LatticeConfig.create(m, ["u"], beta=b)).holds)
        for m in range(1, min(M, 3) + 1):
            yield Check("exchange-relations-generic-t", {"M": m},
                        lambda m=m: _exchange_ok(LatticeConfig.create(m, ["u", "v"], t="formal")))
            yield Check("exchange-relations-t-minus-one", {"M": m},
                        lambda m=m: _exchange_ok(LatticeConfig.create(m, ["u", "v"])))
            yield Check("b-b-commute", {"M": m}, lambda m=m: commutes("B", LatticeConfig.create(m, ["u", "v"])))
            yield Check("c-c-commute", {"M": m}, lambda m=m: commutes("C", LatticeConfig.create(m, ["u", "v"]), max_particles=m))
    else:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")


def _exchange_ok(cfg: LatticeConfig) -> bool:
    r = exchange_relations(cfg)
    return r["ab"] and r["db"] and r["cb"]


def run_suite(suite: str, max_sites: int, max_particles: int) -> list[CheckResult]:
    names = SUITES if suite == "all" else (suite,)
    out = []
    for name in names:
        for check in suite_checks(name, max_sites, max_particles):
            out.append(run_check(check))
    return out
