"""
enumerator.py

One lexicographically minimal representative per class of m x n Boolean matrices,
where two matrices are in the same class iff one is obtained from the other by
repeatedly moving the last row or the last column to the first place.
"""
import logging
from collections import Counter
from typing import Callable, Iterable

from .board import make_board
from .config import Settings, default_settings
from .datatypes import MatrixCode, RecordDict, ReportDict
from .exceptions import SinkError
from .matrices import Dims, PackedShifter, apply_shift, check_code, weight

logger = logging.getLogger(__name__)

PROGRESS_STEP = 1 << 18


class OrbitRecord:
    def __init__(self, class_index: int, representative: MatrixCode, orbit_size: int):
        self.class_index = class_index
        self.representative = representative
        self.orbit_size = orbit_size

    def __repr__(self) -> str:
        return repr(self.__dict__)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrbitRecord):
            return NotImplemented
        return self.__dict__ == other.__dict__

    @property
    def weight(self) -> int:
        return weight(self.representative)

    def as_dict(self) -> RecordDict:
        return {
            "class_index": self.class_index,
            "orbit_size": self.orbit_size,
            "weight": self.weight,
            "representative": list(self.representative),
        }


RecordSink = Callable[[OrbitRecord], None]


class EnumerationReport:
    def __init__(self, dims: Dims, records: list[OrbitRecord]):
        self.dims = dims
        self.records = records
        self.class_count = len(records)
        self.universe_size = 1 << dims.cells

    def __repr__(self) -> str:
        return f"EnumerationReport(dims={self.dims}, class_count={self.class_count})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EnumerationReport):
            return NotImplemented
        return self.dims == other.dims and self.records == other.records

    def as_dict(self) -> ReportDict:
        return {
            "rows": self.dims.m,
            "cols": self.dims.n,
            "class_count": self.class_count,
            "universe_size": self.universe_size,
            "records": [record.as_dict() for record in self.records],
        }


def orbit_of(code: MatrixCode, dims: Dims) -> set[MatrixCode]:
    code = check_code(code, dims.validate())
    return {
        apply_shift(code, i, j, dims.n) for i in range(dims.m) for j in range(dims.n)
    }


def stream_representatives(
    dims: Dims, sink: RecordSink, settings: Settings = default_settings
) -> int:
    """
    Scan the board in lexicographic order. Every code that is not crossed out starts
    a new class; its whole orbit, the code itself included, is then crossed out.
    Records reach the sink in discovery order. Returns the class count.
    """
    board = make_board(dims, settings)
    layout = board.layout
    shifter = PackedShifter(dims)
    logger.debug("enumerating %s over %d codes", dims, layout.total_bits)

    class_count = 0
    cursor = 0
    while (index := board.first_zero_at_or_after(cursor)) is not None:
        class_count += 1
        orbit = shifter.orbit_indices(index)
        board.set_many(orbit)
        record = OrbitRecord(class_count, layout.unflatten(index), len(orbit))
        try:
            sink(record)
        except Exception as exc:
            raise SinkError(f"record consumer failed on class {class_count}: {exc}") from exc
        if class_count % PROGRESS_STEP == 0:
            logger.info("%s: %d classes, cursor at %d/%d", dims, class_count, index, layout.total_bits)
        cursor = index + 1
    largest = layout.check_coordinate_bound()
    logger.debug("%s: %d classes, largest coordinate %d (mu %d)", dims, class_count, largest, layout.mu)
    return class_count


def enumerate_classes(dims: Dims, settings: Settings = default_settings) -> EnumerationReport:
    records: list[OrbitRecord] = []
    stream_representatives(dims, records.append, settings)
    return EnumerationReport(dims, records)


class ClassTally:
    """A record sink that keeps only counts."""

    def __init__(self) -> None:
        self.class_count = 0
        self.element_count = 0
        self.weights: Counter[int] = Counter()

    def __call__(self, record: OrbitRecord) -> None:
        self.class_count += 1
        self.element_count += record.orbit_size
        self.weights[record.weight] += 1

    def by_weight(self) -> dict[int, int]:
        return dict(sorted(self.weights.items()))


def classes_by_weight(records: Iterable[OrbitRecord]) -> dict[int, int]:
    tally = ClassTally()
    for record in records:
        tally(record)
    return tally.by_weight()
