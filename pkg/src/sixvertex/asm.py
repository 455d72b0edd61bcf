"""Alternating sign matrices and domain-wall six-vertex configurations.

Lattice convention: the domain-wall lattice is ``<1^n| B(v_1) ... B(v_n) |0^n>``
on ``n`` sites.  ASM row ``i`` is the lattice row of ``B(v_i)``, so row 1 is
the one adjacent to the filled boundary ``<1^n|`` and row ``n`` the one next
to the vacuum.  Column ``j`` is site ``j``; the auxiliary line enters at
site 1.

For a vertex at row ``i``, column ``j``:

* the vertical edge above it carries ``sum_{i' >= i} A_{i'j}`` and the one
  below ``sum_{i' > i} A_{i'j}``;
* the horizontal edge entering from the left carries
  ``1 - sum_{j' < j} A_{ij'}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import Iterable, Sequence

from .algebra import Polynomial, VarTable, product

MAX_ENUMERATION = 6

# Row whose a1 vertices define rho(C): the top row, adjacent to <1^n|.
RHO_ROW = 0

# Vertex types keyed by (a_out, n_out, a_in, n_in).
VERTEX_TYPES = {
    (0, 0, 0, 0): "a0",
    (0, 1, 0, 1): "b0",
    (0, 1, 1, 0): "c1",
    (1, 0, 0, 1): "c0",
    (1, 0, 1, 0): "b1",
    (1, 1, 1, 1): "a1",
}
TYPE_ORDER = ("a0", "b0", "c1", "c0", "b1", "a1")


class AsmError(ValueError):
    """Not an alternating sign matrix, or an inconsistent vertex configuration."""


class CapExceeded(AsmError):
    """Requested size is above the enumeration cap."""


def _alternates(line: Sequence[int]) -> bool:
    """Partial sums stay in {0, 1} and end at 1: sum 1 with alternating signs from +1."""
    s = 0
    for e in line:
        s += e
        if s not in (0, 1):
            return False
    return s == 1


@dataclass(frozen=True)
class AsmMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(e) for e in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if n == 0:
            raise AsmError("an ASM has at least one row")
        if any(len(r) != n for r in rows):
            raise AsmError("an ASM is square")
        if any(e not in (-1, 0, 1) for r in rows for e in r):
            raise AsmError("entries must be -1, 0 or 1")
        for i, r in enumerate(rows):
            if not _alternates(r):
                raise AsmError(f"row {i + 1} {r} does not alternate to sum 1")
        for j in range(n):
            col = [rows[i][j] for i in range(n)]
            if not _alternates(col):
                raise AsmError(f"column {j + 1} {tuple(col)} does not alternate to sum 1")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries[ij[0]][ij[1]]

    def __str__(self) -> str:
        return format_asm(self)


def format_asm(a: AsmMatrix) -> str:
    return "\n".join(" ".join(str(e) for e in row) for row in a.entries)


def parse_asm(text: str) -> AsmMatrix:
    rows = [line.split() for line in text.strip().splitlines() if line.strip()]
    try:
        return AsmMatrix(tuple(tuple(int(tok) for tok in row) for row in rows))
    except ValueError as exc:
        if isinstance(exc, AsmError):
            raise
        raise AsmError(f"malformed ASM text: {exc}") from None


def _candidate_rows(n: int) -> list[tuple[int, ...]]:
    return [r for r in cartesian((-1, 0, 1), repeat=n) if _alternates(r)]


def enumerate_asm(n: int, cap: int = MAX_ENUMERATION) -> list[AsmMatrix]:
    """All ASMs of size ``n`` in row-major lexicographic order.

    Rows are stacked top-down while every column partial sum stays in {0, 1}.
    """
    if n < 1:
        raise AsmError("n must be at least 1")
    if n > cap:
        raise CapExceeded(f"n = {n} is above the enumeration cap {cap}")
    rows = _candidate_rows(n)
    found: list[tuple[tuple[int, ...], ...]] = []

    def extend(prefix, sums):
        if len(prefix) == n:
            if all(s == 1 for s in sums):
                found.append(tuple(prefix))
            return
        for r in rows:
            new = tuple(s + e for s, e in zip(sums, r))
            if all(s in (0, 1) for s in new):
                extend(prefix + [r], new)

    extend([], (0,) * n)
    found.sort()
    return [AsmMatrix(m) for m in found]


# -- statistics ----------------------------------------------------------------


@dataclass(frozen=True)
class AsmStatistics:
    nu: int
    mu: int
    rho: int


def asm_statistics(a: AsmMatrix) -> AsmStatistics:
    """``nu = sum_{i<k, l<=j} A_ij A_kl``, ``mu`` = number of -1 entries, ``rho`` = zeros left of the 1 in row one."""
    n, A = a.n, a.entries
    nu = 0
    for i in range(n):
        for k in range(i + 1, n):
            for j in range(n):
                if A[i][j]:
                    nu += A[i][j] * sum(A[k][l] for l in range(j + 1))
    mu = sum(1 for row in A for e in row if e == -1)
    rho = A[0].index(1)
    return AsmStatistics(nu, mu, rho)


# -- six-vertex configurations -------------------------------------------------


@dataclass(frozen=True)
class SixVertexConfiguration:
    """Edge occupations of a domain-wall configuration on the ``n x n`` lattice.

    ``vertical[k][j]`` is the particle count on column ``j`` between ASM rows
    ``k`` and ``k + 1`` (``k = 0`` the filled top boundary, ``k = n`` the empty
    bottom).  ``horizontal[i][k]`` is the aux state of row ``i`` entering site
    ``k + 1`` (``k = 0`` the left boundary with 1, ``k = n`` the right with 0).
    """

    vertical: tuple[tuple[int, ...], ...]
    horizontal: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        V = tuple(tuple(r) for r in self.vertical)
        H = tuple(tuple(r) for r in self.horizontal)
        object.__setattr__(self, "vertical", V)
        object.__setattr__(self, "horizontal", H)
        n = len(H)
        if n == 0 or len(V) != n + 1 or any(len(r) != n for r in V) or any(len(r) != n + 1 for r in H):
            raise AsmError("edge arrays have the wrong shape")
        if any(b not in (0, 1) for r in V + H for b in r):
            raise AsmError("edge states are 0 or 1")
        if V[0] != (1,) * n or V[n] != (0,) * n:
            raise AsmError("vertical boundary must be filled on top and empty at the bottom")
        if any(r[0] != 1 or r[n] != 0 for r in H):
            raise AsmError("horizontal boundary must enter with 1 and leave with 0")
        for i in range(n):
            for j in range(n):
                if self.pattern(i, j) not in VERTEX_TYPES:
                    raise AsmError(f"vertex ({i + 1}, {j + 1}) violates particle conservation")

    @property
    def n(self) -> int:
        return len(self.horizontal)

    def pattern(self, i: int, j: int) -> tuple[int, int, int, int]:
        """``(a_out, n_out, a_in, n_in)`` at row ``i``, column ``j`` (0-based)."""
        return (self.horizontal[i][j + 1], self.vertical[i][j], self.horizontal[i][j], self.vertical[i + 1][j])

    def vertex_type(self, i: int, j: int) -> str:
        return VERTEX_TYPES[self.pattern(i, j)]

    def grid(self) -> list[list[str]]:
        return [[self.vertex_type(i, j) for j in range(self.n)] for i in range(self.n)]


def asm_to_sixvertex(a: AsmMatrix) -> SixVertexConfiguration:
    n, A = a.n, a.entries
    vertical = tuple(tuple(sum(A[i][j] for i in range(k, n)) for j in range(n)) for k in range(n + 1))
    horizontal = tuple(tuple(1 - sum(A[i][: k]) for k in range(n + 1)) for i in range(n))
    return SixVertexConfiguration(vertical, horizontal)


def sixvertex_to_asm(c: SixVertexConfiguration) -> AsmMatrix:
    """Entry 1 at c1 vertices, -1 at c0 vertices, 0 elsewhere."""
    value = {"c1": 1, "c0": -1}
    return AsmMatrix(tuple(tuple(value.get(t, 0) for t in row) for row in c.grid()))


def enumerate_sixvertex(n: int, cap: int = MAX_ENUMERATION) -> list[SixVertexConfiguration]:
    """Every consistent domain-wall configuration, built row by row from the vacuum.

    Independent of :func:`enumerate_asm`: each row is a path of the aux line
    through the six allowed vertices.
    """
    if n < 1:
        raise AsmError("n must be at least 1")
    if n > cap:
        raise CapExceeded(f"n = {n} is above the enumeration cap {cap}")
    allowed = {(a_in, n_in): [(a_out, n_out) for (a_out, n_out, ai, ni) in VERTEX_TYPES if (ai, ni) == (a_in, n_in)]
               for a_in in (0, 1) for n_in in (0, 1)}

    def row_paths(below):
        paths = [((1,), ())]
        for j in range(n):
            step = []
            for aux, top in paths:
                for a_out, n_out in allowed[(aux[-1], below[j])]:
                    step.append((aux + (a_out,), top + (n_out,)))
            paths = step
        return [(aux, top) for aux, top in paths if aux[-1] == 0]

    out = []

    def build(k, below, verticals, horizontals):
        # k counts rows still to place; rows are added bottom-up
        if k == 0:
            if below == (1,) * n:
                out.append(SixVertexConfiguration(tuple(reversed(verticals)), tuple(reversed(horizontals))))
            return
        for aux, top in row_paths(below):
            build(k - 1, top, verticals + [top], horizontals + [aux])

    build(n, (0,) * n, [(0,) * n], [])
    out.sort(key=lambda c: c.vertical)
    return out


def vertex_type_counts(c: SixVertexConfiguration) -> dict[str, int]:
    counts = {t: 0 for t in TYPE_ORDER}
    for row in c.grid():
        for t in row:
            counts[t] += 1
    return counts


def sixvertex_statistics(c: SixVertexConfiguration) -> AsmStatistics:
    """``nu`` = a1 count, ``mu`` = c0 count, ``rho`` = a1 count in :data:`RHO_ROW`."""
    counts = vertex_type_counts(c)
    rho = sum(1 for t in c.grid()[RHO_ROW] if t == "a1")
    return AsmStatistics(counts["a1"], counts["c0"], rho)


def expected_type_counts(n: int, nu: int, mu: int) -> dict[str, int]:
    """Vertex-type counts implied by ``nu`` and ``mu``."""
    free = n * (n - 1) // 2 - nu - mu
    return {"a0": nu, "b0": free, "c1": mu + n, "c0": mu, "b1": free, "a1": nu}


# -- generating functions ------------------------------------------------------


def asm_generating_function(n: int, table: VarTable | None = None) -> Polynomial:
    """``sum_A x^nu(A) y^mu(A) z^rho(A)``."""
    table = table or VarTable(["x", "y", "z"])
    x, y, z = table.var("x"), table.var("y"), table.var("z")
    total = table.zero()
    for a in enumerate_asm(n):
        s = asm_statistics(a)
        total = total + x**s.nu * y**s.mu * z**s.rho
    return total


def vertex_weights(table: VarTable, v: Polynomial, beta: Polynomial) -> dict[str, Polynomial]:
    """Homogeneous t = -1 weights of the six vertex types."""
    return {"a0": 1 - beta * v, "a1": v, "b0": 1 + beta * v, "b1": v, "c0": table.one(), "c1": 2 * v}


def weighted_configuration_sum(n: int, configs: Iterable[SixVertexConfiguration] | None = None) -> Polynomial:
    """``sum_C (a0 a1)^nu (b0 b1)^{n(n-1)/2 - nu - mu} c0^mu c1^{mu + n}`` with formal ``v``, ``beta``."""
    table = VarTable(["v", "beta"])
    w = vertex_weights(table, table.var("v"), table.var("beta"))
    total = table.zero()
    for c in configs if configs is not None else enumerate_sixvertex(n):
        s = sixvertex_statistics(c)
        free = n * (n - 1) // 2 - s.nu - s.mu
        total = total + (w["a0"] * w["a1"]) ** s.nu * (w["b0"] * w["b1"]) ** free * w["c0"] ** s.mu * w["c1"] ** (s.mu + n)
    return total


def configuration_weight(c: SixVertexConfiguration, weights: dict[str, Polynomial], table: VarTable) -> Polynomial:
    return product((weights[t] for row in c.grid() for t in row), table)


@dataclass(frozen=True)
class UFormulaReport:
    n: int
    specialization: bool
    weighted_sum: bool
    rational_points: bool

    @property
    def holds(self) -> bool:
        return self.specialization and self.weighted_sum and self.rational_points


DEFAULT_POINTS = ((1, Fraction(1, 2)), (2, 3), (Fraction(1, 3), 5))


def verify_u_formula(n: int, points: Sequence[tuple] = DEFAULT_POINTS) -> UFormulaReport:
    """Check ``Z_ASM(n, u - 1, u, 1) = u^{n(n-1)/2}`` three ways.

    1. Specialize the generating function polynomially.
    2. The weighted six-vertex sum equals ``(2v)^{n(n+1)/2}`` with ``v``, ``beta`` formal.
    3. ``sum_C ((1 - b v)/(1 + b v))^nu (2/(1 + b v))^mu = (2/(1 + b v))^{n(n-1)/2}``
       at rational ``(beta, v)``.
    """
    half = n * (n - 1) // 2
    table = VarTable(["x", "y", "z", "u"])
    u = table.var("u")
    gf = asm_generating_function(n, table)
    specialized = gf.subs({"x": u - 1, "y": u, "z": 1}) == u**half
    wt = VarTable(["v", "beta"])
    ws = weighted_configuration_sum(n)
    weighted = ws == (2 * wt.var("v")) ** (n * (n + 1) // 2)
    configs = enumerate_sixvertex(n)
    stats = [sixvertex_statistics(c) for c in configs]
    rational = True
    for b, v in points:
        b, v = Fraction(b), Fraction(v)
        if 1 + b * v == 0:
            continue
        left = sum(((1 - b * v) / (1 + b * v)) ** s.nu * (2 / (1 + b * v)) ** s.mu for s in stats)
        rational &= left == (2 / (1 + b * v)) ** half
    return UFormulaReport(n, specialized, weighted, rational)
