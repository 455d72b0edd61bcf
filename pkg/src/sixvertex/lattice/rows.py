"""Row operators A, B, C, D acting on sparse state vectors."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from ..algebra import Polynomial, VarTable, product
from .config import ROW_AUX, LatticeConfig, LatticeConfigError, _as_spectral, local_transitions, site_denominator

Occupation = tuple[int, ...]


@dataclass(frozen=True)
class StateVector:
    """Sparse vector ``sum_n (amplitudes[n] / denominator) |n>``.

    Amplitudes are polynomials on ``table``; the shared denominator collects
    row denominators (formal inhomogeneities, z-form factors).
    """

    table: VarTable
    amplitudes: Mapping[Occupation, Polynomial]
    denominator: Polynomial

    @classmethod
    def basis(cls, occ: Sequence[int], table: VarTable) -> "StateVector":
        return cls(table, {tuple(occ): table.one()}, table.one())

    @classmethod
    def vacuum(cls, cfg: LatticeConfig) -> "StateVector":
        return cls.basis((0,) * cfg.M, cfg.table)

    def amplitude(self, occ: Sequence[int]) -> Polynomial:
        """Numerator of the coefficient of ``|occ>``."""
        return self.amplitudes.get(tuple(occ), self.table.zero())

    def __iter__(self) -> Iterator[tuple[Occupation, Polynomial]]:
        return iter(sorted(self.amplitudes.items()))

    def __len__(self) -> int:
        return len(self.amplitudes)

    def scaled(self, factor: Polynomial) -> "StateVector":
        return StateVector(self.table, {k: v * factor for k, v in self.amplitudes.items() if v * factor}, self.denominator)

    def cross_equal(self, other: "StateVector") -> bool:
        """Equality of the represented vectors (cross-multiplied)."""
        keys = set(self.amplitudes) | set(other.amplitudes)
        return all(self.amplitude(k) * other.denominator == other.amplitude(k) * self.denominator for k in keys)

    def __add__(self, other: "StateVector") -> "StateVector":
        if self.denominator == other.denominator:
            out = dict(self.amplitudes)
            for k, v in other.amplitudes.items():
                out[k] = out.get(k, self.table.zero()) + v
            return StateVector(self.table, {k: v for k, v in out.items() if v}, self.denominator)
        a = self.scaled(other.denominator)
        b = other.scaled(self.denominator)
        return StateVector(self.table, a.amplitudes, self.denominator * other.denominator) + StateVector(
            self.table, b.amplitudes, self.denominator * other.denominator
        )

    def __neg__(self) -> "StateVector":
        return StateVector(self.table, {k: -v for k, v in self.amplitudes.items()}, self.denominator)

    def __sub__(self, other: "StateVector") -> "StateVector":
        return self + (-other)


@lru_cache(maxsize=None)
def row_elements(kind: str, x: Polynomial, occ: Occupation, cfg: LatticeConfig) -> dict[Occupation, Polynomial]:
    """Numerators of ``<m| K(x) |occ>`` for every reachable ``m``.

    Contracts the auxiliary line across the row, site 1 first.  The
    denominator common to all entries is :func:`row_denominator`.
    """
    if kind not in ROW_AUX:
        raise LatticeConfigError(f"row operator must be one of {tuple(ROW_AUX)}")
    if len(occ) != cfg.M:
        raise LatticeConfigError(f"state has {len(occ)} sites, lattice has {cfg.M}")
    a_in, a_out = ROW_AUX[kind]
    partial: dict[tuple[int, Occupation], Polynomial] = {(a_in, ()): cfg.table.one()}
    for site in range(1, cfg.M + 1):
        n_in = occ[site - 1]
        step: dict[tuple[int, Occupation], Polynomial] = {}
        for (a, prefix), wt in partial.items():
            for a2, n2, w in local_transitions(cfg, x, site, a, n_in):
                step[(a2, prefix + (n2,))] = wt * w
        partial = step
    return {prefix: wt for (a, prefix), wt in partial.items() if a == a_out and wt}


def row_denominator(cfg: LatticeConfig, x: Polynomial) -> Polynomial:
    return product((site_denominator(cfg, x, site) for site in range(1, cfg.M + 1)), cfg.table)


def apply_row(kind: str, x, state: StateVector, cfg: LatticeConfig) -> StateVector:
    """``K(x) |state>`` for ``K`` in A, B, C, D."""
    x = _as_spectral(cfg, x)
    out: dict[Occupation, Polynomial] = {}
    zero = cfg.table.zero()
    for occ, amp in state.amplitudes.items():
        for m, wt in row_elements(kind, x, occ, cfg).items():
            out[m] = out.get(m, zero) + amp * wt
    return StateVector(cfg.table, {k: v for k, v in out.items() if v}, state.denominator * row_denominator(cfg, x))


def apply_rows(kind: str, xs: Sequence, state: StateVector, cfg: LatticeConfig) -> StateVector:
    """``K(x_1) K(x_2) ... K(x_n) |state>``: the last factor acts first."""
    for x in reversed(list(xs)):
        state = apply_row(kind, x, state, cfg)
    return state


def create_state(xs: Sequence, cfg: LatticeConfig) -> StateVector:
    """``B(x_1) ... B(x_N) |vacuum>``."""
    return apply_rows("B", xs, StateVector.vacuum(cfg), cfg)


def apply_word(word: Sequence[tuple[str, object]], state: StateVector, cfg: LatticeConfig) -> StateVector:
    """Apply a product of row operators written left to right, e.g. ``[("D", u), ("B", v)]``."""
    for kind, x in reversed(list(word)):
        state = apply_row(kind, x, state, cfg)
    return state


def matrix_element(kind: str, bra: Sequence[int], ket: Sequence[int], x, cfg: LatticeConfig) -> Polynomial:
    """Numerator of ``<bra| K(x) |ket>`` over :func:`row_denominator`."""
    x = _as_spectral(cfg, x)
    return row_elements(kind, x, tuple(ket), cfg).get(tuple(bra), cfg.table.zero())


def matrix_element_B(m: Sequence[int], n: Sequence[int], x, cfg: LatticeConfig) -> Polynomial:
    """``<m| B(x) |n>`` (numerator; exact for the original and tilde weights)."""
    return matrix_element("B", m, n, x, cfg)


def matrix_element_C(n: Sequence[int], m: Sequence[int], x, cfg: LatticeConfig) -> Polynomial:
    """``<n| C(x) |m>`` (numerator; exact for the original and tilde weights)."""
    return matrix_element("C", n, m, x, cfg)
