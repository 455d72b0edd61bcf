"""Lattice configuration and the local L-operator weights.

Conventions used throughout the lattice package:

* Sites are numbered ``1..M``.  Along a row the auxiliary line enters at
  site 1 and leaves after site M.  ``B`` enters with aux state 1 and leaves
  with 0, ``C`` enters with 0 and leaves with 1, ``A`` is 0 -> 0, ``D`` is
  1 -> 1.
* Site ``j`` carries the inhomogeneity ``w_{M+1-j}``, so the spectral
  argument seen at site ``j`` is ``v / w_{M+1-j}``.
* A local weight is indexed by ``(a_in, n_in) -> (a_out, n_out)``; the aux
  charge plus the site occupation is conserved.

With these conventions the single-row matrix elements, wavefunctions and
determinant formulas hold literally (see the test suite).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Sequence

from ..algebra import Polynomial, VarTable, as_rational

GENERIC = "generic"
MINUS_ONE = "minus_one"
T_MODES = (GENERIC, MINUS_ONE)

ORIGINAL = "original"
ZFORM = "z"
TILDE = "tilde"
NORMALIZATIONS = (ORIGINAL, ZFORM, TILDE)

# (aux state entering at site 1, aux state leaving after site M)
ROW_AUX = {"A": (0, 0), "B": (1, 0), "C": (0, 1), "D": (1, 1)}


class LatticeConfigError(ValueError):
    """Invalid lattice configuration, or a Fock cap was exceeded."""


@dataclass(frozen=True)
class LatticeConfig:
    """Site count, formal parameters and L-operator normalization of a row.

    ``beta`` and ``t`` are polynomials on ``table`` (formal variables or bound
    constants).  ``inhomogeneities`` holds ``w_1..w_M`` or ``None`` for the
    homogeneous lattice.  ``cap`` bounds per-site occupation in generic-t mode.
    """

    M: int
    table: VarTable
    beta: Polynomial
    t_mode: str = MINUS_ONE
    t: Polynomial | None = None
    normalization: str = ORIGINAL
    inhomogeneities: tuple[Polynomial, ...] | None = None
    cap: int | None = None

    def __post_init__(self):
        if self.M < 1:
            raise LatticeConfigError("need at least one site")
        if self.t_mode not in T_MODES:
            raise LatticeConfigError(f"t_mode must be one of {T_MODES}")
        if self.normalization not in NORMALIZATIONS:
            raise LatticeConfigError(f"normalization must be one of {NORMALIZATIONS}")
        if self.normalization != ORIGINAL and self.t_mode != MINUS_ONE:
            raise LatticeConfigError(f"the {self.normalization!r} normalization exists only at t = -1")
        if self.normalization != ORIGINAL and self.inhomogeneities is not None:
            raise LatticeConfigError("z-form and tilde weights are homogeneous only")
        if self.t_mode == GENERIC and self.t is None:
            raise LatticeConfigError("generic-t mode needs a t polynomial")
        if self.beta.table != self.table:
            raise LatticeConfigError("beta lives on a different table")
        if self.inhomogeneities is not None:
            if len(self.inhomogeneities) != self.M:
                raise LatticeConfigError(f"expected {self.M} inhomogeneities")
            for w in self.inhomogeneities:
                if w.table != self.table:
                    raise LatticeConfigError("inhomogeneity lives on a different table")
                if w.is_zero():
                    raise LatticeConfigError("inhomogeneities must be nonzero")

    @classmethod
    def create(
        cls,
        M: int,
        spectral: Sequence[str] = (),
        *,
        beta="formal",
        t="minus_one",
        normalization: str = ORIGINAL,
        inhomogeneities=None,
        cap: int | None = None,
        extra: Sequence[str] = (),
    ) -> "LatticeConfig":
        """Build a config together with a fresh variable table.

        ``beta`` is ``"formal"`` or a rational; ``t`` is ``"minus_one"``,
        ``"formal"`` or a rational (generic mode with bound ``t``);
        ``inhomogeneities`` is ``None``, ``"formal"`` (variables ``w1..wM``)
        or a sequence of rationals.
        """
        names = list(spectral) + list(extra)
        if beta == "formal":
            names.append("beta")
        if t == "formal":
            names.append("t")
        if isinstance(inhomogeneities, str):
            if inhomogeneities != "formal":
                raise LatticeConfigError("inhomogeneities must be None, 'formal' or rationals")
            names += [f"w{j}" for j in range(1, M + 1)]
        table = VarTable(names)
        b = table.var("beta") if beta == "formal" else table.const(as_rational(beta))
        if t == "minus_one":
            mode, tp = MINUS_ONE, None
        elif t == "formal":
            mode, tp = GENERIC, table.var("t")
        else:
            mode, tp = GENERIC, table.const(as_rational(t))
        ws = None
        if inhomogeneities == "formal":
            ws = tuple(table.var(f"w{j}") for j in range(1, M + 1))
        elif inhomogeneities is not None:
            ws = tuple(table.const(as_rational(w)) for w in inhomogeneities)
        return cls(M, table, b, mode, tp, normalization, ws, cap)

    def with_(self, **changes) -> "LatticeConfig":
        return replace(self, **changes)

    @property
    def t_value(self) -> Polynomial:
        return self.table.const(-1) if self.t_mode == MINUS_ONE else self.t

    @property
    def site_cap(self) -> int | None:
        return 1 if self.t_mode == MINUS_ONE else self.cap

    def site_inhomogeneity(self, site: int) -> Polynomial | None:
        """``w_{M+1-site}`` or ``None`` when homogeneous."""
        if self.inhomogeneities is None:
            return None
        return self.inhomogeneities[self.M - site]

    def var(self, name: str) -> Polynomial:
        return self.table.var(name)


def _as_spectral(cfg: LatticeConfig, x) -> Polynomial:
    if isinstance(x, Polynomial):
        if x.table != cfg.table:
            raise LatticeConfigError("spectral parameter lives on a different table")
        return x
    if isinstance(x, str):
        return cfg.table.var(x)
    return cfg.table.const(as_rational(x))


@lru_cache(maxsize=None)
def _tilde_transitions(table: VarTable, beta: Polynomial, z: Polynomial, a_in: int, n_in: int):
    one = table.one()
    if a_in == 0 and n_in == 0:
        return ((0, 0, one),)
    if a_in == 0 and n_in == 1:
        return ((0, 1, 1 + 2 * beta * z), (1, 0, 1 + beta * z))
    if a_in == 1 and n_in == 0:
        return ((0, 1, 2 * z), (1, 0, z))
    if a_in == 1 and n_in == 1:
        return ((1, 1, z),)
    raise LatticeConfigError(f"occupation {n_in} outside the t = -1 sector")


def original_weights(x, w, beta, T, a_in: int, n_in: int, cap: int | None = None):
    """Local weights of ``w L(x/w)`` leaving ``(a_in, n_in)`` as ``(a_out, n_out, weight)``.

    ``w`` may be ``1``; ``T`` is the value of ``t`` (a polynomial).  Zero
    weights are omitted; creating past ``cap`` raises.
    """
    out = []
    if a_in == 0:
        out.append((0, n_in, w - beta * x * T**n_in))
        if n_in > 0:
            out.append((1, n_in - 1, w))
    else:
        out.append((1, n_in, x))
        create = x * (1 - T ** (n_in + 1))
        if create:
            if cap is not None and n_in + 1 > cap:
                raise LatticeConfigError(f"creating a particle would exceed the Fock cap {cap}")
            out.append((0, n_in + 1, create))
    return tuple((a, n, wt) for a, n, wt in out if wt)


@lru_cache(maxsize=None)
def local_transitions(cfg: LatticeConfig, x: Polynomial, site: int | None, a_in: int, n_in: int):
    """Nonzero local weights leaving ``(a_in, n_in)`` at ``site``.

    Returns a tuple of ``(a_out, n_out, weight)``.  When the site carries a
    formal inhomogeneity ``w`` the weights are multiplied by ``w`` (the
    denominator is reported by :func:`site_denominator`); a rational ``w`` is
    divided out directly.  ``site=None`` means the homogeneous weight.
    """
    if cfg.normalization != ORIGINAL:
        return _tilde_transitions(cfg.table, cfg.beta, x, a_in, n_in)
    w = cfg.site_inhomogeneity(site) if site is not None else None
    if w is not None and w.is_constant():
        x = x / w.constant_value()
        w = None
    wpoly = w if w is not None else cfg.table.one()
    return original_weights(x, wpoly, cfg.beta, cfg.t_value, a_in, n_in, cfg.site_cap)


def site_denominator(cfg: LatticeConfig, x: Polynomial, site: int | None) -> Polynomial:
    """Denominator shared by every local weight at ``site``."""
    if cfg.normalization == ZFORM:
        return 1 + cfg.beta * x
    if cfg.normalization == TILDE or site is None:
        return cfg.table.one()
    w = cfg.site_inhomogeneity(site)
    if w is None or w.is_constant():
        return cfg.table.one()
    return w


def l_entry(cfg: LatticeConfig, x, n_in: int, n_out: int, aux_in: int, aux_out: int, site: int | None = None) -> Polynomial:
    """Matrix element ``<aux_out, n_out| L(x) |aux_in, n_in>``.

    For the z-form and for formal inhomogeneities this is the numerator over
    :func:`site_denominator`.
    """
    x = _as_spectral(cfg, x)
    if cfg.normalization != ORIGINAL and (n_in > 1 or n_out > 1):
        return cfg.table.zero()
    for a, n, wt in local_transitions(cfg, x, site, aux_in, n_in):
        if a == aux_out and n == n_out:
            return wt
    return cfg.table.zero()


def l_matrix(cfg: LatticeConfig, x, site: int | None = None) -> list[list[Polynomial]]:
    """The 4x4 t = -1 L-operator, basis ``|aux, site>`` ordered 00, 01, 10, 11.

    Rows are the outgoing (bra) states and columns the incoming ones.
    """
    basis = [(0, 0), (0, 1), (1, 0), (1, 1)]
    return [[l_entry(cfg, x, ni, no, ai, ao, site) for (ai, ni) in basis] for (ao, no) in basis]
