"""
matrices.py

Boolean m x n matrices encoded as m-tuples of row integers.
Row i is read as an n-digit binary number, leftmost column most significant.
"""
from typing import NamedTuple, Sequence

from .datatypes import BitMatrix, MatrixCode
from .exceptions import CodeRangeError, DimensionError


class Dims(NamedTuple):
    m: int
    n: int

    @property
    def cells(self) -> int:
        return self.m * self.n

    @property
    def radix(self) -> int:
        return 1 << self.n

    def validate(self) -> "Dims":
        if self.m < 1 or self.n < 1:
            raise DimensionError(f"dimensions must be positive, got {self.m}x{self.n}")
        return self

    def __str__(self) -> str:
        return f"{self.m}x{self.n}"


def check_row(a: int, n: int) -> int:
    if not 0 <= a < (1 << n):
        raise CodeRangeError(f"row code {a} is outside [0, {(1 << n) - 1}]")
    return a


def check_code(code: Sequence[int], dims: Dims) -> MatrixCode:
    if len(code) != dims.m:
        raise DimensionError(f"code has {len(code)} rows, expected {dims.m}")
    return tuple(check_row(p, dims.n) for p in code)


def encode(matrix: Sequence[Sequence[int]], dims: Dims) -> MatrixCode:
    dims.validate()
    if len(matrix) != dims.m:
        raise DimensionError(f"matrix has {len(matrix)} rows, expected {dims.m}")
    result = []
    for row in matrix:
        if len(row) != dims.n:
            raise DimensionError(f"matrix row has {len(row)} columns, expected {dims.n}")
        value = 0
        for bit in row:
            if bit not in (0, 1):
                raise CodeRangeError(f"matrix entry {bit!r} is not 0 or 1")
            value = (value << 1) | bit
        result.append(value)
    return tuple(result)


def decode(code: Sequence[int], dims: Dims) -> BitMatrix:
    dims.validate()
    check_code(code, dims)
    # shift n-1 first: leading zeros fill from the left
    return tuple(
        tuple((p >> (dims.n - 1 - col)) & 1 for col in range(dims.n)) for p in code
    )


def xi(a: int, n: int) -> int:
    """Rotate the n-bit string of a one place to the right."""
    check_row(a, n)
    return (a % 2) * (1 << (n - 1)) + a // 2


def f_r(code: MatrixCode) -> MatrixCode:
    if len(code) < 2:
        return code
    return (code[-1],) + code[:-1]


def f_c(code: MatrixCode, n: int) -> MatrixCode:
    return tuple(xi(p, n) for p in code)


def apply_shift(code: MatrixCode, i: int, j: int, n: int) -> MatrixCode:
    """f_r^i followed by f_c^j. The two rotations commute."""
    m = len(code)
    if m:
        i %= m
        code = code[m - i:] + code[: m - i]
    j %= n
    if j:
        low = (1 << j) - 1
        code = tuple(((p & low) << (n - j)) | (p >> j) for p in code)
    return code


class PackedShifter:
    """
    Row and column rotations on the flat index, i.e. on the concatenated m*n-bit
    integer whose most significant n bits hold the first row.
    """

    def __init__(self, dims: Dims):
        self.dims = dims.validate()
        m, n = dims
        self.width = m * n
        self.full = (1 << self.width) - 1
        self.row_mask = (1 << n) - 1
        self.low_bits = sum(1 << (k * n) for k in range(m))
        self.keep = self.full & ~(self.low_bits << (n - 1))

    def rotate_rows(self, index: int) -> int:
        n, m = self.dims.n, self.dims.m
        return (index >> n) | ((index & self.row_mask) << (n * (m - 1)))

    def rotate_columns(self, index: int) -> int:
        return ((index >> 1) & self.keep) | ((index & self.low_bits) << (self.dims.n - 1))

    def orbit_indices(self, index: int) -> set[int]:
        result = set()
        row_image = index
        for _ in range(self.dims.m):
            image = row_image
            for _ in range(self.dims.n):
                result.add(image)
                image = self.rotate_columns(image)
            row_image = self.rotate_rows(row_image)
        return result


def orbit_indices(index: int, dims: Dims) -> set[int]:
    return PackedShifter(dims).orbit_indices(index)


def weight(code: MatrixCode) -> int:
    return sum(bin(p).count("1") for p in code)
