"""Scalar products, intermediate scalar products and the domain-wall partition function.

The intermediate determinant carries denominators in every ``w`` and ``u``,
so it is checked by exact evaluation at rational points rather than by
clearing symbolically.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from ..algebra import PolyMatrix, Polynomial, VarTable, as_rational, exact_fraction, det_bareiss, exact_div, product
from .closed_forms import Quotient, dwbpf_factorized
from .config import MINUS_ONE, ORIGINAL, LatticeConfig, LatticeConfigError
from .rows import apply_rows, create_state

log = logging.getLogger(__name__)


# -- Bethe functions -----------------------------------------------------------


def vacuum_a(v, ws: Sequence | None, M: int, beta):
    """``a(v) = prod_j (1 - beta v / w_j)``; works on polynomials and rationals."""
    if ws is None:
        return (1 - beta * v) ** M
    out = 1
    for w in ws:
        out = out * (1 - beta * v / w)
    return out


def vacuum_d(v, ws: Sequence | None, M: int):
    """``d(v) = prod_j v / w_j``."""
    if ws is None:
        return v**M
    out = 1
    for w in ws:
        out = out * (v / w)
    return out


def f_exchange(u, v, t):
    """``f(u, v) = (u t - v) / (u - v)`` as ``(num, den)``."""
    return u * t - v, u - v


def g_exchange(u, v, t):
    """``g(u, v) = (1 - t) v / (u - v)`` as ``(num, den)``."""
    return (1 - t) * v, u - v


# -- scalar product ------------------------------------------------------------


def _check_scalar_cfg(cfg: LatticeConfig) -> None:
    if cfg.t_mode != MINUS_ONE or cfg.normalization != ORIGINAL:
        raise LatticeConfigError("scalar products are defined at t = -1 with the original weights")


def scalar_product(us: Sequence, vs: Sequence, cfg: LatticeConfig) -> Quotient:
    """``<vacuum| C(u_1)...C(u_N) B(v_1)...B(v_N) |vacuum>`` by contraction."""
    _check_scalar_cfg(cfg)
    if len(us) != len(vs):
        raise LatticeConfigError("need as many u as v")
    state = apply_rows("C", us, create_state(vs, cfg), cfg)
    return Quotient(state.amplitude((0,) * cfg.M), state.denominator)


def _spectral(cfg: LatticeConfig, xs) -> list[Polynomial]:
    table = cfg.table
    return [table.var(x) if isinstance(x, str) else (x if isinstance(x, Polynomial) else table.const(as_rational(x))) for x in xs]


def scalar_q_matrix(us: Sequence[Polynomial], vs: Sequence[Polynomial], M: int, beta: Polynomial) -> list[list[Polynomial]]:
    """Homogeneous ``Q_jk = (a(u_j) d(v_k) - d(u_j) a(v_k)) / (v_k - u_j)``, divided exactly."""
    rows = []
    for u in us:
        row = []
        for v in vs:
            top = vacuum_a(u, None, M, beta) * vacuum_d(v, None, M) - vacuum_d(u, None, M) * vacuum_a(v, None, M, beta)
            row.append(exact_div(top, v - u))
        rows.append(row)
    return rows


@dataclass(frozen=True)
class ClearedIdentity:
    """``lhs * lhs_factor == rhs`` once every denominator is cleared."""

    lhs: Quotient
    lhs_factor: Polynomial
    rhs: Polynomial

    @property
    def holds(self) -> bool:
        return self.lhs.num * self.lhs_factor == self.rhs * self.lhs.den


def scalar_product_identity(us: Sequence, vs: Sequence, cfg: LatticeConfig) -> ClearedIdentity:
    """Direct scalar product against the determinant, homogeneous lattice.

    ``S prod_{j<k}(u_j - u_k)(v_k - v_j) = prod 2 v_j prod_{j<k}(u_j + u_k)(v_j + v_k) det Q``.
    """
    if cfg.inhomogeneities is not None:
        raise LatticeConfigError("the cleared scalar-product identity is stated for the homogeneous lattice")
    us, vs = _spectral(cfg, us), _spectral(cfg, vs)
    table, N = cfg.table, len(us)
    lhs = scalar_product(us, vs, cfg)
    pairs = list(combinations(range(N), 2))
    factor = product(((us[j] - us[k]) * (vs[k] - vs[j]) for j, k in pairs), table)
    pref = product((2 * v for v in vs), table) * product(((us[j] + us[k]) * (vs[j] + vs[k]) for j, k in pairs), table)
    if N == 0:
        det = table.one()
    else:
        det = det_bareiss(PolyMatrix(scalar_q_matrix(us, vs, cfg.M, cfg.beta), table))
    return ClearedIdentity(lhs, factor, pref * det)


# -- intermediate scalar products ---------------------------------------------


def _rational_cfg(M: int, beta, ws) -> LatticeConfig:
    return LatticeConfig.create(M, (), beta=exact_fraction(beta), inhomogeneities=[exact_fraction(w) for w in ws])


def intermediate_direct(us: Sequence, vs: Sequence, ws: Sequence, beta, M: int) -> Fraction:
    """``<1^{N-n} 0^{M-N+n}| C(u_1)...C(u_n) B(v_1)...B(v_N) |vacuum>`` at rational inputs."""
    n, N = len(us), len(vs)
    if not 0 <= n <= N <= M:
        raise LatticeConfigError(f"need 0 <= n <= N <= M, got n={n}, N={N}, M={M}")
    cfg = _rational_cfg(M, beta, ws)
    state = apply_rows("C", us, create_state(vs, cfg), cfg)
    bra = (1,) * (N - n) + (0,) * (M - N + n)
    return exact_fraction(state.amplitude(bra).constant_value()) / state.denominator.constant_value()


def intermediate_determinant(us: Sequence, vs: Sequence, ws: Sequence, beta, M: int) -> Fraction:
    """The determinant formula for the intermediate scalar product, evaluated exactly.

    Raises ``ZeroDivisionError`` at points where a denominator vanishes.
    """
    us = [exact_fraction(u) for u in us]
    vs = [exact_fraction(v) for v in vs]
    ws = [exact_fraction(w) for w in ws]
    beta = exact_fraction(beta)
    n, N = len(us), len(vs)
    K = M - N + n  # w_1..w_K face the full rows; w_{K+1}..w_M the C rows
    pref = Fraction(1)
    for v in vs:
        pref *= 2 * v
    for j, k in combinations(range(N), 2):
        pref *= (vs[j] + vs[k]) / (vs[k] - vs[j])
    for j, k in combinations(range(K, M), 2):
        pref /= beta * (1 - ws[k] / ws[j])
    for j, k in combinations(range(n), 2):
        pref *= (us[j] + us[k]) / (us[j] - us[k])
    rows = []
    for j in range(N):
        row = []
        for k in range(N):
            v = vs[k]
            if j < n:
                u = us[j]
                lead = Fraction(1)
                for l in range(K, M):
                    lead *= (beta * u + ws[l]) / (beta * u - ws[l])
                top = vacuum_a(u, ws, M, beta) * vacuum_d(v, ws, M) - vacuum_a(v, ws, M, beta) * vacuum_d(u, ws, M)
                row.append(lead * top / (v - u))
            else:
                idx = M - N + j  # 0-based index of w_{M-N+j+1}
                entry = Fraction(1) / ws[idx]
                for l in range(M):
                    if l != idx:
                        entry *= 1 - beta * v / ws[l]
                row.append(entry)
        rows.append(row)
    table = VarTable(())
    det = det_bareiss(PolyMatrix([[table.const(e) for e in row] for row in rows], table)).constant_value() if N else 1
    return pref * det


def intermediate_initial(vs: Sequence, ws: Sequence, beta, M: int) -> Fraction:
    """Closed form of the ``n = 0`` intermediate scalar product."""
    vs = [exact_fraction(v) for v in vs]
    ws = [exact_fraction(w) for w in ws]
    beta = exact_fraction(beta)
    N = len(vs)
    out = Fraction(1)
    for j in range(N):
        out *= 2 * vs[j] / ws[M - N + j] ** (j + 1)
        for k in range(M - N):
            out *= 1 - beta * vs[j] / ws[k]
    for j, k in combinations(range(N), 2):
        out *= vs[j] + vs[k]
    return out


def intermediate_recursion_sides(us: Sequence, vs: Sequence, ws: Sequence, beta, M: int) -> tuple[Fraction, Fraction]:
    """Both sides of the recursion in ``n`` at ``u_n = w_{M-N+n} / beta``.

    The last entry of ``us`` is ignored and replaced by the special point.
    """
    ws = [exact_fraction(w) for w in ws]
    beta = exact_fraction(beta)
    n, N = len(us), len(vs)
    if n < 1:
        raise LatticeConfigError("the recursion needs n >= 1")
    K = M - N + n
    wk = ws[K - 1]
    special = list(us[:-1]) + [wk / beta]
    left = intermediate_direct(special, vs, ws, beta, M)
    factor = Fraction(1)
    for j in range(K - 1):
        factor *= wk / (beta * ws[j])
    for j in range(K, M):
        factor *= 1 + wk / ws[j]
    right = factor * intermediate_direct(list(us[:-1]), vs, ws, beta, M)
    return left, right


@dataclass
class BatteryReport:
    """Outcome of evaluating an identity over a battery of rational points."""

    checked: int = 0
    skipped: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.checked > 0 and not self.failures


def rational_battery(count: int, size: int, seed: int = 0) -> list[list[Fraction]]:
    """Deterministic rational points with small, mostly distinct coordinates."""
    rng = random.Random(seed)
    points = []
    for _ in range(count):
        points.append([Fraction(rng.randint(1, 11), rng.randint(1, 7)) for _ in range(size)])
    return points


def check_intermediate(M: int, N: int, n: int, points: int = 3, seed: int = 0) -> BatteryReport:
    """Compare direct contraction and the determinant at ``points`` rational points.

    Points hitting a vanishing denominator are skipped, logged and replaced.
    """
    report = BatteryReport()
    size = n + N + M + 1
    attempt = 0
    while report.checked < points and attempt < 50 * points:
        pt = rational_battery(1, size, seed * 1000 + attempt)[0]
        attempt += 1
        us, vs, ws, beta = pt[:n], pt[n : n + N], pt[n + N : n + N + M], pt[-1]
        try:
            det = intermediate_determinant(us, vs, ws, beta, M)
        except ZeroDivisionError:
            log.info("skipping colliding point %s", pt)
            report.skipped.append(pt)
            continue
        direct = intermediate_direct(us, vs, ws, beta, M)
        report.checked += 1
        if direct != det:
            report.failures.append((pt, direct, det))
    return report


# -- domain wall boundary partition function ----------------------------------


def dwbpf(vs: Sequence, ws: Sequence | None, mode: str = "direct", cfg: LatticeConfig | None = None) -> Quotient:
    """Partition function of the ``N x N`` lattice with domain-wall boundary.

    ``mode="direct"`` contracts ``<1^N| B(v_1)...B(v_N) |0^N>``;
    ``mode="factorized"`` returns ``prod 2 v_j / w_j^j prod_{j<k}(v_j + v_k)``.
    ``cfg`` must be an ``N``-site t = -1 config; inhomogeneities come from it
    when ``ws`` is ``None``.
    """
    N = len(vs)
    if cfg is None:
        raise LatticeConfigError("dwbpf needs a lattice config")
    if cfg.M != N:
        raise LatticeConfigError(f"domain-wall lattice is square: {N} rows, {cfg.M} sites")
    _check_scalar_cfg(cfg)
    vs = _spectral(cfg, vs)
    if ws is None:
        ws = cfg.inhomogeneities
    if mode == "factorized":
        return dwbpf_factorized(vs, ws, cfg.table)
    if mode != "direct":
        raise LatticeConfigError("mode must be 'direct' or 'factorized'")
    if ws is not None and tuple(ws) != cfg.inhomogeneities:
        cfg = cfg.with_(inhomogeneities=tuple(ws))
    state = create_state(vs, cfg)
    return Quotient(state.amplitude((1,) * N), state.denominator)
