from typing import Sequence, TypedDict

MatrixCode = tuple[int, ...]
BitMatrix = tuple[tuple[int, ...], ...]


class RecordDict(TypedDict):
    class_index: int
    orbit_size: int
    weight: int
    representative: Sequence[int]


class ReportDict(TypedDict):
    rows: int
    cols: int
    class_count: int
    universe_size: int
    records: Sequence[RecordDict]


class BreakdownDict(TypedDict):
    rows: int
    cols: int
    per_shift_fixed: dict[str, int]
    total: int
