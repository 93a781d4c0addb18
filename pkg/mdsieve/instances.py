"""
instances.py

Concrete universes for the generic sieve.
"""
from typing import Optional

from .board import BoardLayout
from .config import Settings, default_settings
from .datatypes import MatrixCode
from .enums import ClosureMode
from .exceptions import OracleBoundError
from .matrices import Dims, f_c, f_r
from .sieve import UniverseSpec, run_sieve


def primes_universe(limit: int) -> UniverseSpec[int]:
    """Integers in [2, limit]; Next_1^t(x) = Next_1^{t-1}(x) + x crosses out multiples."""
    if limit < 2:
        raise OracleBoundError(f"limit must be at least 2, got {limit}")

    def successor(x: int) -> Optional[int]:
        return x + 1 if x < limit else None

    def multiple(current: int, origin: int) -> Optional[int]:
        image = current + origin
        return image if image <= limit else None

    return UniverseSpec(
        cardinality=limit - 1,
        first=lambda: 2,
        successor=successor,
        position=lambda x: x - 2,
        generators=[multiple],
        name=f"[2, {limit}]",
    )


def sieve_primes(limit: int) -> list[int]:
    return run_sieve(primes_universe(limit), ClosureMode.LAYERED).representatives


def matrix_universe(dims: Dims, settings: Settings = default_settings) -> UniverseSpec[MatrixCode]:
    """P_n^m in lexicographic order, generated by the row and column rotations."""
    layout = BoardLayout(dims, settings)

    def successor(code: MatrixCode) -> Optional[MatrixCode]:
        index = layout.flatten(code) + 1
        return layout.unflatten(index) if index < layout.total_bits else None

    return UniverseSpec(
        cardinality=layout.total_bits,
        first=lambda: (0,) * dims.m,
        successor=successor,
        position=layout.flatten,
        generators=[lambda code, _: f_r(code), lambda code, _: f_c(code, dims.n)],
        name=f"B_{dims}",
    )
