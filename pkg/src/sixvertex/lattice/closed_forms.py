"""Closed forms for matrix elements, wavefunctions and the domain-wall partition function.

Expressions with denominators are returned as :class:`Quotient` pairs and
compared by cross-multiplication; there is no rational-function arithmetic.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from ..algebra import Polynomial, VarTable, as_rational, exact_fraction, product
from ..combinatorics import (
    admissible,
    interlaces,
    lambda_of_x,
    new_parts_count,
    occupation_to_strict,
    poincare_dual,
)
from ..symfunc import SchurContext, beta_pair_product, schur_bialternant
from .config import TILDE, LatticeConfig, LatticeConfigError
from .rows import StateVector, apply_rows, create_state, matrix_element


class Quotient(NamedTuple):
    """``num / den`` kept as a pair of polynomials on one table."""

    num: Polynomial
    den: Polynomial

    def equals(self, other: "Quotient") -> bool:
        return self.num * other.den == other.num * self.den

    def value(self, bindings):
        num = self.num.evaluate(bindings)
        den = self.den.evaluate(bindings)
        if not num.is_constant() or not den.is_constant():
            raise ValueError("bindings leave free variables")
        if den.constant_value() == 0:
            raise ZeroDivisionError("denominator vanishes at this point")
        return exact_fraction(num.constant_value()) / den.constant_value()


def z_of_v(v, beta):
    """``z = (1/v - beta)^{-1} = v / (1 - beta v)`` for rational inputs."""
    v, beta = exact_fraction(v), exact_fraction(beta)
    return v / (1 - beta * v)


def v_of_z(z, beta):
    """Inverse of :func:`z_of_v`: ``v = z / (1 + beta z)``."""
    z, beta = exact_fraction(z), exact_fraction(beta)
    return z / (1 + beta * z)


# -- single-row matrix elements ------------------------------------------------


def b_element_generic(m: Sequence[int], n: Sequence[int], v: Polynomial, t: Polynomial, beta: Polynomial) -> Polynomial:
    """Closed form of ``<m| B(v) |n>`` for generic ``t`` (homogeneous lattice).

    With ``p`` the sites where ``m = n + 1`` and ``q`` those where
    ``m + 1 = n`` (``q_r = M + 1``) the element is
    ``v^{sum p - sum q} prod (1 - t^{n_p + 1}) prod_{p_j < k < q_j} (1 - beta v t^{n_k})``.
    """
    table = v.table
    if sum(m) != sum(n) + 1 or not admissible(m, n):
        return table.zero()
    M = len(m)
    ps = [k for k in range(1, M + 1) if m[k - 1] == n[k - 1] + 1]
    qs = [k for k in range(1, M + 1) if m[k - 1] + 1 == n[k - 1]]
    qs = qs + [M + 1]
    out = v ** (sum(ps) - sum(qs[:-1]))
    for j, p in enumerate(ps):
        out = out * (1 - t ** (n[p - 1] + 1))
        for k in range(p + 1, qs[j]):
            out = out * (1 - beta * v * t ** n[k - 1])
    return out


def _strict_or_none(occ):
    if any(c > 1 for c in occ):
        return None
    return occupation_to_strict(occ)


def b_element_minus_one(m: Sequence[int], n: Sequence[int], z: Polynomial, beta: Polynomial) -> Quotient:
    """Closed form of ``<m| B(v) |n>`` at ``t = -1`` in ``z = v/(1 - beta v)``.

    ``(1+2bz)/(1+bz)^{M+1} (2(1+bz)/(1+2bz))^{#(y|x)} z^{|y|-|x|}
    prod_j (1 + 2bz(1 - delta_{x_j, y_{j+1}}))``.
    """
    table = z.table
    M = len(m)
    y, x = _strict_or_none(m), _strict_or_none(n)
    if y is None or x is None or len(y) != len(x) + 1 or not interlaces(y, x):
        return Quotient(table.zero(), table.one())
    r = new_parts_count(y, x)
    lift = 1 + 2 * beta * z
    num = 2**r * z ** (sum(y) - sum(x))
    for j in range(len(x)):
        if x[j] != y[j + 1]:
            num = num * lift
    den = lift ** (r - 1) * (1 + beta * z) ** (M + 1 - r)
    return Quotient(num, den)


def dual_strict(occ: Sequence[int]):
    """``x^vee = (M+1)^N / x``: site ``j`` contributes the part ``M + 1 - j``."""
    M = len(occ)
    if any(c > 1 for c in occ):
        return None
    return tuple(M + 1 - j for j in range(1, M + 1) if occ[j - 1])


def c_element_minus_one(n: Sequence[int], m: Sequence[int], z: Polynomial, beta: Polynomial) -> Quotient:
    """Closed form of ``<n| C(v) |m>`` at ``t = -1`` through the reversed partitions."""
    table = z.table
    M = len(m)
    yv, xv = dual_strict(m), dual_strict(n)
    if yv is None or xv is None or len(yv) != len(xv) + 1 or not interlaces(yv, xv):
        return Quotient(table.zero(), table.one())
    r = new_parts_count(yv, xv)
    lift = 1 + 2 * beta * z
    num = (2 * (1 + beta * z)) ** (r - 1) * z ** (sum(yv) - sum(xv))
    for j in range(len(xv)):
        if xv[j] != yv[j + 1]:
            num = num * lift
    den = z * (1 + beta * z) ** (M - 1) * lift ** (r - 1)
    return Quotient(num, den)


def element_in_z(kind: str, bra: Sequence[int], ket: Sequence[int], z, cfg: LatticeConfig) -> Quotient:
    """Direct ``<bra| K(v) |ket>`` at ``t = -1`` written in ``z`` via the tilde weights.

    Every tilde site weight is ``(1 + beta z)`` times the original one.
    """
    if cfg.normalization != TILDE:
        raise LatticeConfigError("element_in_z needs the tilde normalization")
    zp = cfg.table.var(z) if isinstance(z, str) else z
    num = matrix_element(kind, bra, ket, zp, cfg)
    return Quotient(num, (1 + cfg.beta * zp) ** cfg.M)


# -- wavefunctions -------------------------------------------------------------


def _zs(cfg: LatticeConfig, zs) -> tuple[Polynomial, ...]:
    return tuple(cfg.table.var(z) if isinstance(z, str) else z for z in zs)


def wavefunction(occ: Sequence[int], zs, cfg: LatticeConfig, state: StateVector | None = None) -> Polynomial:
    """``<occ| B~(z_1) ... B~(z_N) |vacuum>`` with tilde weights.

    Pass a precomputed ``state`` to read several amplitudes from one contraction.
    """
    if cfg.normalization != TILDE:
        raise LatticeConfigError("wavefunction uses the tilde normalization")
    if state is None:
        state = create_state(_zs(cfg, zs), cfg)
    return state.amplitude(occ)


def wavefunction_closed(occ: Sequence[int], zs, cfg: LatticeConfig) -> Polynomial:
    """``2^N prod z_j prod_{j<k}(z_j + z_k + 2 beta z_j z_k) s_lambda(z)``."""
    zs = _zs(cfg, zs)
    N = len(zs)
    x = occupation_to_strict(occ)
    if len(x) != N:
        return cfg.table.zero()
    if N == 0:
        return cfg.table.one()
    ctx = SchurContext(cfg.table, zs, cfg.beta)
    s = schur_bialternant(lambda_of_x(x, N), ctx)
    return 2**N * product(zs, cfg.table) * beta_pair_product(zs, cfg.beta, cfg.table) * s


def dual_wavefunction(occ: Sequence[int], zs, cfg: LatticeConfig) -> Polynomial:
    """``<vacuum| C~(z_1) ... C~(z_N) |occ>`` with tilde weights."""
    if cfg.normalization != TILDE:
        raise LatticeConfigError("dual_wavefunction uses the tilde normalization")
    state = apply_rows("C", _zs(cfg, zs), StateVector.basis(occ, cfg.table), cfg)
    return state.amplitude((0,) * cfg.M)


def dual_wavefunction_closed(occ: Sequence[int], zs, cfg: LatticeConfig) -> Polynomial:
    """``prod (1 + beta z_j) prod_{j<k}(z_j + z_k + 2 beta z_j z_k) s_{lambda dual}(z)``.

    This is the original-normalization closed form times ``prod (1 + beta z_j)^M``.
    """
    zs = _zs(cfg, zs)
    N = len(zs)
    x = occupation_to_strict(occ)
    if len(x) != N:
        return cfg.table.zero()
    if N == 0:
        return cfg.table.one()
    table = cfg.table
    ctx = SchurContext(table, zs, cfg.beta)
    lam = lambda_of_x(x, N)
    s = schur_bialternant(poincare_dual(lam, cfg.M, N), ctx)
    lifts = product((1 + cfg.beta * z for z in zs), table)
    return lifts * beta_pair_product(zs, cfg.beta, table) * s


def dual_wavefunction_closed_value(occ: Sequence[int], vs: Sequence, beta, M: int):
    """Closed dual wavefunction evaluated at rational ``v`` (original weights)."""
    beta = exact_fraction(beta)
    zs = [z_of_v(v, beta) for v in vs]
    N = len(zs)
    table = VarTable([f"z{j}" for j in range(1, N + 1)])
    cfg = LatticeConfig(M, table, table.const(beta), normalization=TILDE)
    poly = dual_wavefunction_closed(occ, [table.var(f"z{j}") for j in range(1, N + 1)], cfg)
    value = poly.evaluate({f"z{j}": zs[j - 1] for j in range(1, N + 1)}).constant_value()
    den = 1
    for z in zs:
        den *= (1 + beta * z) ** M
    return value / den


# -- domain wall boundary partition function ----------------------------------


def dwbpf_factorized(vs: Sequence[Polynomial], ws: Sequence[Polynomial] | None, table: VarTable) -> Quotient:
    """``prod_j 2 v_j / w_j^j prod_{j<k} (v_j + v_k)``."""
    N = len(vs)
    num = product((2 * v for v in vs), table) * product(
        (vs[j] + vs[k] for j in range(N) for k in range(j + 1, N)), table
    )
    den = table.one() if ws is None else product((ws[j] ** (j + 1) for j in range(N)), table)
    return Quotient(num, den)
