"""Partitions, strict partitions, occupation vectors and interlacing.

Lattice states have three interchangeable encodings.  An occupation vector
``(n_1, ..., n_M)`` records how many particles sit on each site; its strict
partition lists the occupied site indices (1-based) in decreasing order; and
the partition ``lambda`` is the strict partition with the staircase removed,
``lambda_j = x_j - N + j - 1``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence


class CombinatoricsError(ValueError):
    """Malformed partition, occupation or mismatched sizes."""


class NotStrictSector(CombinatoricsError):
    """An occupation vector has a site with two or more particles."""


class Partition(tuple):
    """Weakly decreasing sequence of non-negative integers.

    Trailing zeros are kept: ``Partition((1, 0))`` has two parts, which is the
    form the Schur functions of ``N`` variables expect.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise CombinatoricsError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise CombinatoricsError(f"{parts} is not weakly decreasing")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    def padded(self, n: int) -> "Partition":
        if len(self) > n and any(self[n:]):
            raise CombinatoricsError(f"{tuple(self)} has more than {n} nonzero parts")
        return Partition(tuple(self[:n]) + (0,) * (n - len(self)))


class StrictPartition(tuple):
    """Strictly decreasing sequence of positive integers (occupied sites)."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise CombinatoricsError(f"strict partitions have parts >= 1, got {parts}")
        if any(a <= b for a, b in zip(parts, parts[1:])):
            raise CombinatoricsError(f"{parts} is not strictly decreasing")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"StrictPartition({tuple(self)})"


class OccupationVector(tuple):
    """Particle counts ``n_1..n_M`` on the sites of a lattice row."""

    def __new__(cls, counts: Iterable[int]):
        counts = tuple(int(c) for c in counts)
        if any(c < 0 for c in counts):
            raise CombinatoricsError(f"negative occupation in {counts}")
        return super().__new__(cls, counts)

    def __repr__(self) -> str:
        return f"OccupationVector({tuple(self)})"

    @property
    def M(self) -> int:
        return len(self)

    @property
    def N(self) -> int:
        return sum(self)

    @classmethod
    def from_bits(cls, bits: str) -> "OccupationVector":
        """``"00110"`` -> ``(0, 0, 1, 1, 0)``."""
        bits = bits.strip()
        if bits and not set(bits) <= set("0123456789"):
            raise CombinatoricsError(f"occupation text must be digits, got {bits!r}")
        return cls(int(ch) for ch in bits)

    def to_bits(self) -> str:
        return "".join(str(c) for c in self)


# -- text form -----------------------------------------------------------------


def parse_partition(text: str) -> Partition:
    """``"3,1"`` -> ``Partition((3, 1))``; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return Partition(())
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise CombinatoricsError(f"malformed partition text {text!r}") from None
    return Partition(parts)


def format_partition(parts: Sequence[int]) -> str:
    return ",".join(str(p) for p in parts)


# -- conversions ---------------------------------------------------------------


def occupation_to_strict(occ: Sequence[int]) -> StrictPartition:
    """Occupied site indices in decreasing order; requires a 0/1 occupation."""
    if any(c > 1 for c in occ):
        raise NotStrictSector(f"{tuple(occ)} has a multiply occupied site")
    if any(c < 0 for c in occ):
        raise CombinatoricsError(f"negative occupation in {tuple(occ)}")
    return StrictPartition(j for j in range(len(occ), 0, -1) if occ[j - 1])


def occupation_to_partition(occ: Sequence[int]) -> Partition:
    """General encoding ``x = (M^{n_M}, ..., 1^{n_1})`` allowing multiplicities."""
    parts = []
    for j in range(len(occ), 0, -1):
        parts.extend([j] * occ[j - 1])
    return Partition(parts)


def strict_to_occupation(x: Sequence[int], M: int) -> OccupationVector:
    x = StrictPartition(x)
    if x and x[0] > M:
        raise CombinatoricsError(f"part {x[0]} exceeds the site count {M}")
    occ = [0] * M
    for part in x:
        occ[part - 1] = 1
    return OccupationVector(occ)


def lambda_of_x(x: Sequence[int], N: int) -> Partition:
    """Remove the staircase: ``lambda_j = x_j - N + j - 1``."""
    x = StrictPartition(x)
    if len(x) != N:
        raise CombinatoricsError(f"expected {N} parts, got {tuple(x)}")
    return Partition(x[j] - N + j for j in range(N))


def x_of_lambda(lam: Sequence[int], N: int) -> StrictPartition:
    """Add the staircase back: ``x_j = lambda_j + N - j + 1``."""
    lam = Partition(lam).padded(N)
    return StrictPartition(lam[j] + N - j for j in range(N))


def poincare_dual(lam: Sequence[int], M: int, N: int) -> Partition:
    """Complement of ``lambda`` inside the ``(M-N)^N`` box, read backwards."""
    lam = Partition(lam).padded(N)
    width = M - N
    if width < 0:
        raise CombinatoricsError(f"need N <= M, got M={M}, N={N}")
    if N and lam[0] > width:
        raise CombinatoricsError(f"{tuple(lam)} does not fit in the {width}^{N} box")
    return Partition(width - lam[N - 1 - j] for j in range(N))


# -- relations -----------------------------------------------------------------


def interlaces(y: Sequence[int], x: Sequence[int]) -> bool:
    """``y_j >= x_j >= y_{j+1}`` for all ``j``; ``y`` has one more part than ``x``."""
    if len(y) != len(x) + 1:
        raise CombinatoricsError(f"interlacing needs len(y) = len(x) + 1, got {len(y)} and {len(x)}")
    return all(y[j] >= x[j] >= y[j + 1] for j in range(len(x)))


def admissible(m: Sequence[int], n: Sequence[int]) -> bool:
    """Right-tail partial sums of ``m - n`` all lie in ``{0, 1}``."""
    if len(m) != len(n):
        raise CombinatoricsError(f"site counts differ: {len(m)} vs {len(n)}")
    if sum(m) != sum(n) + 1:
        raise CombinatoricsError(f"m must carry one more particle than n ({sum(m)} vs {sum(n)})")
    tail = 0
    for j in range(len(m) - 1, -1, -1):
        tail += m[j] - n[j]
        if tail not in (0, 1):
            return False
    return True


def new_parts_count(y: Sequence[int], x: Sequence[int]) -> int:
    """Number of parts of ``y`` that are not parts of ``x``."""
    xs = set(x)
    return sum(1 for part in y if part not in xs)


# -- enumeration ---------------------------------------------------------------


def strict_partitions(length: int, max_part: int) -> Iterator[StrictPartition]:
    """All strict partitions with exactly ``length`` parts, each ``<= max_part``."""
    for combo in combinations(range(max_part, 0, -1), length):
        yield StrictPartition(combo)


def partitions_in_box(rows: int, width: int) -> Iterator[Partition]:
    """Partitions with ``rows`` parts (zeros allowed) and largest part ``<= width``.

    Emitted in lexicographic order, smallest first.
    """
    def rec(prefix, bound, left):
        if not left:
            yield Partition(prefix)
            return
        for p in range(0, bound + 1):
            yield from rec(prefix + [p], p, left - 1)

    out = list(rec([], width, rows))
    out.sort()
    yield from out


def interlacing_predecessors(y: Sequence[int]) -> Iterator[StrictPartition]:
    """Strict partitions ``x`` with ``y > x`` (one fewer part)."""
    k = len(y) - 1
    if k < 0:
        return

    def rec(j, prefix):
        if j == k:
            yield StrictPartition(prefix)
            return
        hi = y[j]
        if prefix:
            hi = min(hi, prefix[-1] - 1)
        for part in range(y[j + 1], hi + 1):
            yield from rec(j + 1, prefix + [part])

    yield from rec(0, [])


def enumerate_chains(top: Sequence[int]) -> list[tuple[StrictPartition, ...]]:
    """All chains ``() < x1 < ... < xN = top`` of interlacing strict partitions.

    Each chain is returned bottom-up ``(x0, x1, ..., xN)`` with ``x0 = ()``.
    Order is lexicographic in ``(x1, x2, ...)``.
    """
    top = StrictPartition(top)
    chains: list[tuple[StrictPartition, ...]] = []

    def descend(level: StrictPartition, below: list[StrictPartition]):
        if not level:
            chains.append(tuple(reversed(below)))
            return
        for pred in interlacing_predecessors(level):
            descend(pred, below + [pred])

    descend(top, [top])
    chains.sort(key=lambda chain: tuple(tuple(level) for level in chain[1:]))
    return chains
