from enum import Enum


class ClosureMode(Enum):
    LAYERED = "layered"
    FIXPOINT = "fixpoint"


class OutputFormat(Enum):
    TUPLE = "tuple"
    MATRIX = "matrix"
    JSON = "json"
    YAML = "yaml"

    @classmethod
    def get_format_list(cls) -> list[str]:
        return [x.value for x in OutputFormat]
