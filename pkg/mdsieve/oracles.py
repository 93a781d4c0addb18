"""
oracles.py

Independent ways to get the same answers as the sieve: Burnside's lemma over the
group of row/column rotations, union-find over explicit rotations, and trial division.
"""
import itertools
import logging
from math import isqrt
from typing import Sequence

from .config import Settings, default_settings
from .datatypes import BreakdownDict
from .exceptions import OracleBoundError, SieveException
from .matrices import Dims, apply_shift

logger = logging.getLogger(__name__)


class BurnsideBreakdown:
    def __init__(self, dims: Dims, per_shift_fixed: dict[tuple[int, int], int]):
        self.dims = dims
        self.per_shift_fixed = per_shift_fixed
        fixed_sum = sum(per_shift_fixed.values())
        total, remainder = divmod(fixed_sum, dims.cells)
        if remainder:
            raise SieveException(
                f"fixed-point sum {fixed_sum} is not divisible by {dims.cells}"
            )
        self.total = total

    def __repr__(self) -> str:
        return f"BurnsideBreakdown(dims={self.dims}, total={self.total})"

    def as_dict(self) -> BreakdownDict:
        return {
            "rows": self.dims.m,
            "cols": self.dims.n,
            "per_shift_fixed": {f"{i},{j}": v for (i, j), v in self.per_shift_fixed.items()},
            "total": self.total,
        }


def count_cycles(dims: Dims, i: int, j: int) -> int:
    """Cycles of the translation (r, c) -> (r + i, c + j) on the m x n index grid."""
    m, n = dims
    visited = [[False] * n for _ in range(m)]
    cycles = 0
    for r0, c0 in itertools.product(range(m), range(n)):
        if visited[r0][c0]:
            continue
        cycles += 1
        r, c = r0, c0
        while not visited[r][c]:
            visited[r][c] = True
            r, c = (r + i) % m, (c + j) % n
    return cycles


def burnside_count(dims: Dims, settings: Settings = default_settings) -> BurnsideBreakdown:
    dims.validate()
    if dims.cells > settings.burnside_max_mn:
        raise OracleBoundError(
            f"m*n={dims.cells} exceeds the exact-arithmetic bound {settings.burnside_max_mn}"
        )
    per_shift_fixed = {
        (i, j): 2 ** count_cycles(dims, i, j)
        for i in range(dims.m)
        for j in range(dims.n)
    }
    return BurnsideBreakdown(dims, per_shift_fixed)


class UnionFind:
    """Union by rank with path compression over 0..size-1."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        px, py = self.find(x), self.find(y)
        if px == py:
            return
        if self.rank[px] < self.rank[py]:
            px, py = py, px
        self.parent[py] = px
        if self.rank[px] == self.rank[py]:
            self.rank[px] += 1


class BruteForceResult:
    def __init__(self, dims: Dims, class_count: int, canonical: Sequence[int]):
        self.dims = dims
        self.class_count = class_count
        # flat index -> smallest flat index of its class
        self.canonical = canonical

    def __repr__(self) -> str:
        return f"BruteForceResult(dims={self.dims}, class_count={self.class_count})"


def _pack(code: Sequence[int], n: int) -> int:
    index = 0
    for p in code:
        index = (index << n) | p
    return index


def brute_force_classes(dims: Dims, settings: Settings = default_settings) -> BruteForceResult:
    dims.validate()
    if dims.cells > settings.brute_force_max_mn:
        raise OracleBoundError(
            f"m*n={dims.cells} exceeds the brute-force bound {settings.brute_force_max_mn}"
        )
    m, n = dims
    size = 1 << dims.cells
    classes = UnionFind(size)
    # product() yields codes in lexicographic order, i.e. by increasing flat index
    for index, code in enumerate(itertools.product(range(1 << n), repeat=m)):
        classes.union(index, _pack(apply_shift(code, 1, 0, n), n))
        classes.union(index, _pack(apply_shift(code, 0, 1, n), n))

    smallest: dict[int, int] = {}
    canonical = []
    for index in range(size):
        root = classes.find(index)
        canonical.append(smallest.setdefault(root, index))
    logger.debug("brute force over %s found %d classes", dims, len(smallest))
    return BruteForceResult(dims, len(smallest), canonical)


def trial_division_primes(limit: int) -> list[int]:
    if limit < 2:
        raise OracleBoundError(f"limit must be at least 2, got {limit}")
    return [
        candidate
        for candidate in range(2, limit + 1)
        if all(candidate % d for d in range(2, isqrt(candidate) + 1))
    ]
