"""Yang-Baxter and RLL intertwining relations, checked entry by entry.

Operators are applied to sparse vectors over small tensor products.  A
product ``X Y Z`` acts right to left: ``Z`` is applied first.  The Fock
space is never truncated for intermediate states; only the tested input
vectors are bounded in occupation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Callable, Iterable

from ..algebra import Polynomial, VarTable
from .config import MINUS_ONE, original_weights

Vector = dict[tuple[int, ...], Polynomial]
LFn = Callable[..., Iterable[tuple[int, int, Polynomial]]]


def r_matrix(u: Polynomial, v: Polynomial, t: Polynomial) -> dict[tuple[int, int, int, int], Polynomial]:
    """Six-vertex R-matrix as ``{(a_out, b_out, a_in, b_in): weight}``."""
    return {
        (0, 0, 0, 0): u - t * v,
        (1, 1, 1, 1): u - t * v,
        (0, 1, 0, 1): t * (u - v),
        (0, 1, 1, 0): (1 - t) * u,
        (1, 0, 0, 1): (1 - t) * v,
        (1, 0, 1, 0): u - v,
    }


def r_tilde(p: Polynomial, q: Polynomial, beta: Polynomial) -> dict[tuple[int, int, int, int], Polynomial]:
    """``q R~(p/q)`` on two t = -1 sites, keyed ``(j_out, k_out, j_in, k_in)``."""
    return {
        (0, 0, 0, 0): q,
        (0, 1, 0, 1): beta * (p - q),
        (0, 1, 1, 0): p,
        (1, 0, 0, 1): q,
        (1, 1, 1, 1): p,
    }


def _apply_two(mat, i: int, j: int, vec: Vector, zero: Polynomial) -> Vector:
    """Apply a two-slot operator keyed ``(i_out, j_out, i_in, j_in)`` to slots ``i, j``."""
    by_input: dict[tuple[int, int], list] = {}
    for (io, jo, ii, ji), wt in mat.items():
        by_input.setdefault((ii, ji), []).append((io, jo, wt))
    out: Vector = {}
    for state, amp in vec.items():
        for io, jo, wt in by_input.get((state[i], state[j]), ()):
            new = list(state)
            new[i], new[j] = io, jo
            key = tuple(new)
            out[key] = out.get(key, zero) + amp * wt
    return {k: v for k, v in out.items() if v}


def _apply_l(l_fn: LFn, x, w, aux: int, site: int, vec: Vector, zero: Polynomial) -> Vector:
    out: Vector = {}
    for state, amp in vec.items():
        for a2, n2, wt in l_fn(x, w, state[aux], state[site]):
            new = list(state)
            new[aux], new[site] = a2, n2
            key = tuple(new)
            out[key] = out.get(key, zero) + amp * wt
    return {k: v for k, v in out.items() if v}


@dataclass
class IntertwinerReport:
    """Verdict of one relation; ``mismatches`` lists ``(input, output, lhs, rhs)``."""

    name: str
    checked: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.checked > 0 and not self.mismatches


def _compare(name: str, inputs, lhs_fn, rhs_fn, zero: Polynomial) -> IntertwinerReport:
    report = IntertwinerReport(name)
    for basis in inputs:
        vec = {basis: zero + 1}
        lhs, rhs = lhs_fn(vec), rhs_fn(vec)
        report.checked += 1
        for key in sorted(set(lhs) | set(rhs)):
            a, b = lhs.get(key, zero), rhs.get(key, zero)
            if a != b:
                report.mismatches.append((basis, key, a, b))
    return report


def check_ybe(t_formal: bool = True) -> IntertwinerReport:
    """``R12(u,v) R13(u,w) R23(v,w) = R23(v,w) R13(u,w) R12(u,v)`` on three 2-dim spaces."""
    table = VarTable(["u", "v", "w", "t"] if t_formal else ["u", "v", "w"])
    u, v, w = table.var("u"), table.var("v"), table.var("w")
    t = table.var("t") if t_formal else table.const(-1)
    zero = table.zero()
    r12, r13, r23 = r_matrix(u, v, t), r_matrix(u, w, t), r_matrix(v, w, t)

    def lhs(vec):
        return _apply_two(r12, 0, 1, _apply_two(r13, 0, 2, _apply_two(r23, 1, 2, vec, zero), zero), zero)

    def rhs(vec):
        return _apply_two(r23, 1, 2, _apply_two(r13, 0, 2, _apply_two(r12, 0, 1, vec, zero), zero), zero)

    return _compare("ybe", cartesian((0, 1), repeat=3), lhs, rhs, zero)


def default_l_fn(beta: Polynomial, t: Polynomial) -> LFn:
    def l_fn(x, w, a_in, n_in):
        return original_weights(x, w, beta, t, a_in, n_in)

    return l_fn


def check_rll(t_mode: str = "generic", max_occupation: int = 3, l_fn: LFn | None = None) -> IntertwinerReport:
    """``R_ab(u,v) L_aj(u) L_bj(v) = L_bj(v) L_aj(u) R_ab(u,v)`` on ``W_a W_b F_j``.

    ``t`` is formal in generic mode and ``-1`` otherwise; ``beta`` is formal.
    Input site occupations run up to ``max_occupation`` (1 at t = -1).
    """
    generic = t_mode != MINUS_ONE
    table = VarTable(["u", "v", "beta"] + (["t"] if generic else []))
    u, v, beta = table.var("u"), table.var("v"), table.var("beta")
    t = table.var("t") if generic else table.const(-1)
    zero, one = table.zero(), table.one()
    l_fn = l_fn or default_l_fn(beta, t)
    r = r_matrix(u, v, t)
    top = max_occupation if generic else 1

    def lhs(vec):
        vec = _apply_l(l_fn, v, one, 1, 2, vec, zero)
        vec = _apply_l(l_fn, u, one, 0, 2, vec, zero)
        return _apply_two(r, 0, 1, vec, zero)

    def rhs(vec):
        vec = _apply_two(r, 0, 1, vec, zero)
        vec = _apply_l(l_fn, u, one, 0, 2, vec, zero)
        return _apply_l(l_fn, v, one, 1, 2, vec, zero)

    inputs = [(a, b, n) for a in (0, 1) for b in (0, 1) for n in range(top + 1)]
    return _compare(f"rll-{t_mode}", inputs, lhs, rhs, zero)


def check_rll_tilde(l_fn: LFn | None = None) -> IntertwinerReport:
    """``R~_jk(p/q) L_ak(u/q) L_aj(u/p) = L_aj(u/p) L_ak(u/q) R~_jk(p/q)`` at t = -1.

    Both sides are multiplied by ``p q^2`` so every weight is a polynomial.
    """
    table = VarTable(["u", "p", "q", "beta"])
    u, p, q, beta = (table.var(n) for n in ("u", "p", "q", "beta"))
    t = table.const(-1)
    zero = table.zero()
    l_fn = l_fn or default_l_fn(beta, t)
    rt = r_tilde(p, q, beta)

    def lhs(vec):
        vec = _apply_l(l_fn, u, p, 0, 1, vec, zero)
        vec = _apply_l(l_fn, u, q, 0, 2, vec, zero)
        return _apply_two(rt, 1, 2, vec, zero)

    def rhs(vec):
        vec = _apply_two(rt, 1, 2, vec, zero)
        vec = _apply_l(l_fn, u, q, 0, 2, vec, zero)
        return _apply_l(l_fn, u, p, 0, 1, vec, zero)

    return _compare("rll-tilde", cartesian((0, 1), repeat=3), lhs, rhs, zero)


def corrupted_l_fn(beta: Polynomial, t: Polynomial, target=(1, 0, 1, 0), extra=1) -> LFn:
    """Weights with one entry shifted by ``extra``; a negative control.

    ``target`` is ``(a_in, n_in, a_out, n_out)``.
    """
    base = default_l_fn(beta, t)

    def l_fn(x, w, a_in, n_in):
        out = []
        hit = False
        for a, n, wt in base(x, w, a_in, n_in):
            if (a_in, n_in, a, n) == target:
                wt = wt + extra
                hit = True
            if wt:
                out.append((a, n, wt))
        if not hit and (a_in, n_in) == target[:2]:
            out.append((target[2], target[3], x * 0 + extra))
        return tuple(out)

    return l_fn


def verify_intertwiners(max_occupation: int = 3) -> dict[str, IntertwinerReport]:
    """Run the Yang-Baxter equation and all three intertwining relations."""
    reports = [
        check_ybe(),
        check_rll("generic", max_occupation),
        check_rll(MINUS_ONE),
        check_rll_tilde(),
    ]
    return {r.name: r for r in reports}
