"""
board.py

The crossing-out board of the multidimensional sieve.
Cells are addressed by MatrixCode coordinates, each in [0, 2^n - 1], and stored
in one flat bit vector in lexicographic order of the coordinates.
"""
import logging
from typing import Iterable, Optional, Sequence

from bitarray import bitarray

from .config import Settings, default_settings
from .datatypes import MatrixCode
from .exceptions import (CodeRangeError, DimensionError, InfeasibleInstance,
                         SieveException)
from .matrices import Dims

logger = logging.getLogger(__name__)


class BoardLayout:
    def __init__(self, dims: Dims, settings: Settings = default_settings):
        self.dims = dims.validate()
        self.feasibility_bound = settings.max_mn
        if dims.cells > self.feasibility_bound:
            raise InfeasibleInstance(dims.cells, self.feasibility_bound)
        self.radix = dims.radix
        self.coordinate_count = dims.m
        self.total_bits = self.radix**self.coordinate_count
        # largest coordinate seen by flatten or unflatten
        self.max_coordinate = 0

    def __repr__(self) -> str:
        return f"BoardLayout(dims={self.dims}, total_bits={self.total_bits})"

    @property
    def mu(self) -> int:
        return max(self.radix - 1, self.coordinate_count)

    def flatten(self, code: Sequence[int]) -> int:
        if len(code) != self.coordinate_count:
            raise DimensionError(
                f"code has {len(code)} coordinates, expected {self.coordinate_count}"
            )
        index = 0
        for p in code:
            if not 0 <= p < self.radix:
                raise CodeRangeError(f"coordinate {p} is outside [0, {self.radix - 1}]")
            if p > self.max_coordinate:
                self.max_coordinate = p
            index = index * self.radix + p
        return index

    def unflatten(self, index: int) -> MatrixCode:
        self.check_index(index)
        result = []
        for _ in range(self.coordinate_count):
            index, p = divmod(index, self.radix)
            if p > self.max_coordinate:
                self.max_coordinate = p
            result.append(p)
        return tuple(reversed(result))

    def check_coordinate_bound(self) -> int:
        if self.max_coordinate > self.mu:
            raise SieveException(f"coordinate {self.max_coordinate} exceeds mu={self.mu}")
        return self.max_coordinate

    def check_index(self, index: int) -> int:
        if not 0 <= index < self.total_bits:
            raise CodeRangeError(f"index {index} is outside [0, {self.total_bits})")
        return index


class BitBoard:
    def __init__(self, layout: BoardLayout):
        self.layout = layout
        self.bits = bitarray(layout.total_bits)
        self.bits.setall(0)
        logger.debug("allocated board of %d bits for %s", layout.total_bits, layout.dims)

    def __len__(self) -> int:
        return len(self.bits)

    def get(self, code: Sequence[int]) -> int:
        return self.bits[self.layout.flatten(code)]

    def set(self, code: Sequence[int]) -> None:
        self.bits[self.layout.flatten(code)] = 1

    def get_index(self, index: int) -> int:
        return self.bits[self.layout.check_index(index)]

    def set_index(self, index: int) -> None:
        self.bits[self.layout.check_index(index)] = 1

    def set_many(self, indices: Iterable[int]) -> None:
        # callers pass indices produced by the layout itself
        bits = self.bits
        for index in indices:
            bits[index] = 1

    def first_zero_at_or_after(self, index: int) -> Optional[int]:
        if index >= self.layout.total_bits:
            return None
        self.layout.check_index(index)
        found = self.bits.find(0, index)
        return None if found < 0 else found

    def crossed_count(self) -> int:
        return self.bits.count(1)


def make_board(dims: Dims, settings: Settings = default_settings) -> BitBoard:
    return BitBoard(BoardLayout(dims, settings))
