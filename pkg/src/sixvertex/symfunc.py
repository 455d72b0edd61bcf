"""Schur polynomials, Schur Q-functions and the Cauchy identity.

Two independent routes to ``s_lambda`` live here: the classical bialternant
(a determinant ratio) and a chain-sum over interlacing strict partitions
carrying an extra free parameter ``beta``.  The chain sum is exact for every
``beta``; this is checked, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .algebra import (
    DivisionNotExact,
    PolyMatrix,
    Polynomial,
    Rational,
    VarTable,
    as_rational,
    det_bareiss,
    exact_div,
    product,
)
from .combinatorics import (
    Partition,
    StrictPartition,
    enumerate_chains,
    interlaces,
    interlacing_predecessors,
    new_parts_count,
    partitions_in_box,
    poincare_dual,
    x_of_lambda,
)


class FormulaViolation(ArithmeticError):
    """A closed form failed to divide out exactly; the formula is wrong here."""


@dataclass(frozen=True)
class SchurContext:
    """Variables ``z_1..z_N`` and the deformation parameter ``beta``.

    ``beta`` is a polynomial on ``table``: the formal variable ``beta`` or a
    bound rational constant.
    """

    table: VarTable
    z: tuple[Polynomial, ...]
    beta: Polynomial

    @property
    def N(self) -> int:
        return len(self.z)

    @classmethod
    def create(cls, N: int, beta="formal", prefix: str = "z", table: VarTable | None = None) -> "SchurContext":
        if N < 1:
            raise ValueError("a Schur context needs at least one variable")
        names = [f"{prefix}{j}" for j in range(1, N + 1)]
        if table is None:
            table = VarTable(names + (["beta"] if beta == "formal" else []))
        z = tuple(table.var(n) for n in names)
        b = table.var("beta") if beta == "formal" else table.const(as_rational(beta))
        return cls(table, z, b)


def vandermonde(zs: Sequence[Polynomial], table: VarTable) -> Polynomial:
    """``prod_{j<k} (z_j - z_k)``."""
    return product((zs[j] - zs[k] for j in range(len(zs)) for k in range(j + 1, len(zs))), table)


def beta_pair_product(zs: Sequence[Polynomial], beta: Polynomial, table: VarTable) -> Polynomial:
    """``prod_{j<k} (z_j + z_k + 2 beta z_j z_k)``."""
    n = len(zs)
    return product((zs[j] + zs[k] + 2 * beta * zs[j] * zs[k] for j in range(n) for k in range(j + 1, n)), table)


def _pad(lam: Sequence[int], N: int) -> Partition:
    return Partition(lam).padded(N)


def schur_bialternant(lam: Sequence[int], ctx: SchurContext) -> Polynomial:
    """``det(z_j^{lambda_k + N - k}) / prod_{j<k}(z_j - z_k)``."""
    N = ctx.N
    lam = _pad(lam, N)
    m = PolyMatrix([[ctx.z[j] ** (lam[k] + N - 1 - k) for k in range(N)] for j in range(N)], ctx.table)
    return exact_div(det_bareiss(m), vandermonde(ctx.z, ctx.table))


def chain_weight(chain: Sequence[Sequence[int]], ctx: SchurContext) -> tuple[Polynomial, list[int]]:
    """Weight of one interlacing chain as ``(numerator, denominator exponents)``.

    Level ``k`` contributes
    ``z_k^{|x^(k)| - |x^(k-1)| - 1} (2(1+beta z_k)/(1+2 beta z_k))^{#new - 1}``
    times a ``(1 + 2 beta z_k)`` for every ``j`` with ``x^(k-1)_j != x^(k)_{j+1}``.
    The returned list holds the power of ``(1 + 2 beta z_k)`` that divides the
    numerator for each ``k``.
    """
    table, beta = ctx.table, ctx.beta
    num = table.one()
    dens = []
    for k in range(1, len(chain)):
        zk = ctx.z[k - 1]
        upper, lower = chain[k], chain[k - 1]
        num = num * zk ** (sum(upper) - sum(lower) - 1)
        e = new_parts_count(upper, lower) - 1
        if e:
            num = num * (2 * (1 + beta * zk)) ** e
        dens.append(e)
        for j in range(k - 1):
            if lower[j] != upper[j + 1]:
                num = num * (1 + 2 * beta * zk)
    return num, dens


def combinatorial_chain_sum(lam: Sequence[int], ctx: SchurContext) -> Polynomial:
    """Sum of chain weights for ``lambda``, denominators already cleared.

    This is the polynomial ``prod_{j<k}(z_j + z_k + 2 beta z_j z_k) s_lambda``
    when the formula holds.
    """
    N = ctx.N
    top = x_of_lambda(_pad(lam, N), N)
    table, beta = ctx.table, ctx.beta
    # Level k has at most k new parts, so (1+2 beta z_k)^(k-1) clears it.
    caps = list(range(N))
    lifts = [1 + 2 * beta * ctx.z[k] for k in range(N)]
    total = table.zero()
    for chain in enumerate_chains(top):
        num, dens = chain_weight(chain, ctx)
        for k, e in enumerate(dens):
            if caps[k] - e:
                num = num * lifts[k] ** (caps[k] - e)
        total = total + num
    common = product((lifts[k] ** caps[k] for k in range(N)), table)
    try:
        return exact_div(total, common)
    except DivisionNotExact as exc:
        raise FormulaViolation(f"chain sum for {tuple(lam)} is not a polynomial") from exc


def schur_combinatorial(lam: Sequence[int], ctx: SchurContext) -> Polynomial:
    """``s_lambda`` from the beta-deformed chain sum."""
    total = combinatorial_chain_sum(lam, ctx)
    try:
        return exact_div(total, beta_pair_product(ctx.z, ctx.beta, ctx.table))
    except DivisionNotExact as exc:
        raise FormulaViolation(f"chain sum for {tuple(lam)} is not divisible by the beta pair product") from exc


def schur_q(x: Sequence[int], ctx: SchurContext) -> Polynomial:
    """Schur Q-function ``Q_x(z_1..z_N)`` for a strict partition with ``N`` parts.

    Symmetrises ``prod z_j^{x_j} prod_{j<k} (z_j+z_k)/(z_j-z_k)``: the pair
    product is symmetric and the Vandermonde alternating, so the sum over
    permutations is an alternant divided once by the Vandermonde.
    """
    x = StrictPartition(x)
    N = ctx.N
    if len(x) != N:
        raise ValueError(f"Q_x needs exactly {N} parts, got {tuple(x)}")
    table = ctx.table
    alt = table.zero()
    for perm in permutations(range(N)):
        inv = sum(1 for i in range(N) for j in range(i + 1, N) if perm[i] > perm[j])
        term = product((ctx.z[perm[j]] ** x[j] for j in range(N)), table)
        alt = alt - term if inv % 2 else alt + term
    pairs = product((ctx.z[j] + ctx.z[k] for j in range(N) for k in range(j + 1, N)), table)
    return exact_div(2**N * pairs * alt, vandermonde(ctx.z, table))


def skew_q_single(y: Sequence[int], x: Sequence[int], z: Polynomial) -> Polynomial:
    """One-variable skew ``Q_{y/x}(z) = 2^{#(y|x)} z^{|y|-|x|}``, zero unless ``y > x``."""
    if not interlaces(y, x):
        return z.table.zero()
    return 2 ** new_parts_count(y, x) * z ** (sum(y) - sum(x))


def skew_q(y: Sequence[int], x: Sequence[int], zs: Sequence[Polynomial]) -> Polynomial:
    """``Q_{y/x}(z_1, ..., z_k)`` by branching, ``len(y) = len(x) + k``.

    ``Q_{y/x}(z_1, z_rest) = sum_w Q_{y/w}(z_1) Q_{w/x}(z_rest)``.
    """
    if not zs:
        raise ValueError("need at least one variable")
    y, x = StrictPartition(y), StrictPartition(x)
    if len(y) != len(x) + len(zs):
        raise ValueError("part counts must differ by the number of variables")
    if len(zs) == 1:
        return skew_q_single(y, x, zs[0])
    total = zs[0].table.zero()
    for w in interlacing_predecessors(y):
        total = total + skew_q_single(y, w, zs[0]) * skew_q(w, x, zs[1:])
    return total


# -- Cauchy identity -----------------------------------------------------------

CAUCHY_ENTRIES = ("yk", "yj")


@dataclass(frozen=True)
class CauchyResult:
    """Both sides of the box-Cauchy identity in cross-multiplied form.

    ``lhs_cleared`` is ``sum s_lambda(z) s_dual(y)`` times every denominator
    of the right side; ``rhs_cleared`` is the cleared determinant.
    """

    M: int
    N: int
    entry: str
    lhs: Polynomial
    lhs_cleared: Polynomial
    rhs_cleared: Polynomial

    @property
    def holds(self) -> bool:
        return self.lhs_cleared == self.rhs_cleared


def cauchy_lhs(M: int, N: int, zctx: SchurContext, yctx: SchurContext) -> Polynomial:
    """``sum_{lambda in (M-N)^N} s_lambda(z) s_{lambda dual}(y)``."""
    total = zctx.table.zero()
    for lam in partitions_in_box(N, M - N):
        total = total + schur_bialternant(lam, zctx) * schur_bialternant(poincare_dual(lam, M, N), yctx)
    return total


def cauchy_sides(M: int, N: int, entry: str = "yk") -> CauchyResult:
    """Compare the Schur box sum with the determinant of ``(z_j^M - y_?^M)/(z_j - y_k)``.

    ``entry="yk"`` uses ``y_k^M`` in the numerator, ``entry="yj"`` the
    literal ``y_j^M``.  Row ``j`` of the matrix is multiplied by
    ``prod_k (z_j - y_k)`` so every entry is a polynomial, and the left side is
    multiplied by the same factors together with the prefactor's denominator.
    """
    if entry not in CAUCHY_ENTRIES:
        raise ValueError(f"entry must be one of {CAUCHY_ENTRIES}")
    if not 1 <= N <= M:
        raise ValueError(f"need 1 <= N <= M, got M={M}, N={N}")
    names = [f"z{j}" for j in range(1, N + 1)] + [f"y{j}" for j in range(1, N + 1)]
    table = VarTable(names)
    zctx = SchurContext.create(N, beta=0, prefix="z", table=table)
    yctx = SchurContext.create(N, beta=0, prefix="y", table=table)
    z, y = zctx.z, yctx.z
    lhs = cauchy_lhs(M, N, zctx, yctx)
    rows = []
    for j in range(N):
        row = []
        for k in range(N):
            top = z[j] ** M - (y[k] if entry == "yk" else y[j]) ** M
            others = product((z[j] - y[l] for l in range(N) if l != k), table)
            row.append(top * others)
        rows.append(row)
    rhs = det_bareiss(PolyMatrix(rows, table))
    pref = product(((z[k] - z[j]) * (y[j] - y[k]) for j in range(N) for k in range(j + 1, N)), table)
    cleared = product((z[j] - y[k] for j in range(N) for k in range(N)), table)
    return CauchyResult(M, N, entry, lhs, lhs * pref * cleared, rhs)


def is_symmetric(p: Polynomial, names: Sequence[str]) -> bool:
    """Invariance under every adjacent transposition of the named variables."""
    table = p.table
    for a, b in zip(names, names[1:]):
        swapped = p.subs({a: table.var(b), b: table.var(a)})
        if swapped != p:
            return False
    return True


def specialize_beta(p: Polynomial, value: Rational) -> Polynomial:
    return p.evaluate({"beta": value}) if "beta" in p.table else p
