"""On-shell Bethe states, exchange relations and commutativity of row operators."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import Sequence

from ..algebra import Polynomial, as_rational, exact_fraction, product
from .config import MINUS_ONE, ORIGINAL, LatticeConfig, LatticeConfigError
from .rows import StateVector, apply_row, apply_word, create_state


class NotOnShell(LatticeConfigError):
    """Roots do not satisfy the Bethe equations; ``residuals`` lists the offenders."""

    def __init__(self, message: str, residuals):
        super().__init__(message)
        self.residuals = residuals


def bethe_residuals(roots: Sequence, beta, M: int) -> list[Fraction]:
    """``(1/v_j - beta)^M - (-1)^{N+1}`` for each root (all zero on shell).

    At t = -1 the Bethe equations reduce to this one-variable form because
    ``f(v_k, v_j) / f(v_j, v_k) = -1`` for every pair, including ``k = j``.
    """
    beta = exact_fraction(beta)
    N = len(roots)
    target = (-1) ** (N + 1)
    return [(1 / exact_fraction(v) - beta) ** M - target for v in roots]


@dataclass(frozen=True)
class EigenstateResult:
    holds: bool
    state: StateVector
    residual: StateVector


def transfer(u, state: StateVector, cfg: LatticeConfig) -> StateVector:
    """``tau(u) = A(u) + D(u)`` applied to ``state``."""
    return apply_row("A", u, state, cfg) + apply_row("D", u, state, cfg)


def check_eigenstate(roots: Sequence, cfg: LatticeConfig, probe: str = "u") -> EigenstateResult:
    """``tau(u) |Psi> = Lambda(u) |Psi>`` as a polynomial identity in the probe ``u``.

    ``cfg`` is homogeneous, at t = -1, with rational ``beta`` and a formal
    probe variable.  Both sides are multiplied by ``prod_j (u - v_j)`` to clear
    the exchange denominators:
    ``Lambda(u) prod (u - v_j) = ((-1)^N a(u) + d(u)) prod (u + v_j)``.
    """
    if cfg.t_mode != MINUS_ONE or cfg.normalization != ORIGINAL or cfg.inhomogeneities is not None:
        raise LatticeConfigError("eigenstate checks need a homogeneous t = -1 lattice")
    if not cfg.beta.is_constant():
        raise LatticeConfigError("eigenstate checks need a rational beta")
    beta = cfg.beta.constant_value()
    res = bethe_residuals(roots, beta, cfg.M)
    if any(res):
        raise NotOnShell(f"roots {list(roots)} are not on shell", res)
    table = cfg.table
    u = table.var(probe)
    vs = [table.const(as_rational(v)) for v in roots]
    N = len(vs)
    psi = create_state(vs, cfg)
    a = (1 - cfg.beta * u) ** cfg.M
    d = u**cfg.M
    clear = product((u - v for v in vs), table)
    lam = ((-1) ** N * a + d) * product((u + v for v in vs), table)
    lhs = transfer(u, psi, cfg).scaled(clear)
    rhs = psi.scaled(lam)
    residual = lhs - rhs
    return EigenstateResult(not residual.amplitudes, psi, residual)


# -- exchange relations --------------------------------------------------------


def all_states(cfg: LatticeConfig, max_particles: int) -> list[StateVector]:
    """Basis vectors with per-site cap and at most ``max_particles`` particles."""
    cap = cfg.site_cap if cfg.site_cap is not None else max_particles
    out = []
    for occ in cartesian(range(cap + 1), repeat=cfg.M):
        if sum(occ) <= max_particles:
            out.append(StateVector.basis(occ, cfg.table))
    return out


def word_state(word, state: StateVector, cfg: LatticeConfig, factor: Polynomial | None = None) -> StateVector:
    out = apply_word(word, state, cfg)
    return out.scaled(factor) if factor is not None else out


def exchange_relations(cfg: LatticeConfig, u: str = "u", v: str = "v", max_particles: int = 2) -> dict[str, bool]:
    """Check the A-B, D-B and C-B exchange relations on every small basis state.

    Each relation is multiplied by ``u - v``:

    * ``(u - v) A(u) B(v) = (u t - v) B(v) A(u) + (1 - t) v B(u) A(v)``
    * ``(u - v) D(u) B(v) = (u - v t) B(v) D(u) - (1 - t) v B(u) D(v)``
    * ``(u - v)(C(u) B(v) - t B(v) C(u)) = (1 - t) v (A(v) D(u) - A(u) D(v))``.

    The key ``"db_literal"`` tests the variant with ``B(u) D(u)`` in the last
    term, which is expected to fail.
    """
    table = cfg.table
    U, V = table.var(u), table.var(v)
    t = cfg.t_value
    fuv_n, fuv_d = U * t - V, U - V  # f(u, v)
    fvu_n = V * t - U  # f(v, u) = fvu_n / (v - u) = -fvu_n / (u - v)
    g_n = (1 - t) * V  # g(u, v) = g_n / (u - v)
    results = {"ab": True, "db": True, "db_literal": True, "cb": True}
    for state in all_states(cfg, max_particles):
        ab_l = word_state([("A", U), ("B", V)], state, cfg, fuv_d)
        ab_r = word_state([("B", V), ("A", U)], state, cfg, fuv_n) + word_state([("B", U), ("A", V)], state, cfg, g_n)
        results["ab"] &= ab_l.cross_equal(ab_r)
        db_l = word_state([("D", U), ("B", V)], state, cfg, fuv_d)
        db_first = word_state([("B", V), ("D", U)], state, cfg, -fvu_n)
        db_r = db_first - word_state([("B", U), ("D", V)], state, cfg, g_n)
        results["db"] &= db_l.cross_equal(db_r)
        db_lit = db_first - word_state([("B", U), ("D", U)], state, cfg, g_n)
        results["db_literal"] &= db_l.cross_equal(db_lit)
        cb_l = word_state([("C", U), ("B", V)], state, cfg, fuv_d) - word_state([("B", V), ("C", U)], state, cfg, t * fuv_d)
        cb_r = word_state([("A", V), ("D", U)], state, cfg, g_n) - word_state([("A", U), ("D", V)], state, cfg, g_n)
        results["cb"] &= cb_l.cross_equal(cb_r)
    return results


def commutes(kind: str, cfg: LatticeConfig, u: str = "u", v: str = "v", max_particles: int = 2) -> bool:
    """``[K(u), K(v)] = 0`` on every small basis state."""
    table = cfg.table
    U, V = table.var(u), table.var(v)
    for state in all_states(cfg, max_particles):
        left = apply_word([(kind, U), (kind, V)], state, cfg)
        right = apply_word([(kind, V), (kind, U)], state, cfg)
        if not left.cross_equal(right):
            return False
    return True
