import json
import tempfile
from typing import Any, Callable

import yaml

from .config import Settings, default_settings
from .enumerator import EnumerationReport, OrbitRecord, stream_representatives
from .enums import OutputFormat
from .exceptions import SieveException
from .matrices import Dims, decode
from .oracles import BurnsideBreakdown

COPY_CHUNK = 1 << 16


class Formatter:
    def format_report(self, report: EnumerationReport) -> str:
        raise NotImplementedError("needs to be subclassed")

    def format_breakdown(self, breakdown: BurnsideBreakdown) -> str:
        raise NotImplementedError(f"{type(self).__name__} cannot render a breakdown")


class TupleFormatter(Formatter):
    """The representative file: a header line, then one tab-separated line per class."""

    def format_report(self, report: EnumerationReport) -> str:
        lines = [header(report.dims, report.class_count)]
        for record in report.records:
            lines.extend(self.format_record(record, report.dims))
        return "".join(line + "\n" for line in lines)

    def write_report(
        self, dims: Dims, write: Callable[[str], Any], settings: Settings = default_settings
    ) -> int:
        """
        Enumerate and write without holding the records. The body is spooled to a
        temporary file until the class count for the header is known.
        Returns the class count.
        """
        with tempfile.TemporaryFile("w+", encoding="ascii", newline="\n") as body:

            def sink(record: OrbitRecord) -> None:
                body.writelines(line + "\n" for line in self.format_record(record, dims))

            class_count = stream_representatives(dims, sink, settings)
            write(header(dims, class_count) + "\n")
            body.seek(0)
            while chunk := body.read(COPY_CHUNK):
                write(chunk)
        return class_count

    def format_record(self, record: OrbitRecord, dims: Dims) -> list[str]:
        code = ",".join(str(p) for p in record.representative)
        return [f"{record.class_index}\t{record.orbit_size}\t{code}"]

    def format_breakdown(self, breakdown: BurnsideBreakdown) -> str:
        result = ""
        for (i, j), fixed in breakdown.per_shift_fixed.items():
            result += f"shift={i},{j} fixed={fixed}\n"
        result += f"classes={breakdown.total}\n"
        return result


class MatrixFormatter(TupleFormatter):
    def format_record(self, record: OrbitRecord, dims: Dims) -> list[str]:
        lines = super().format_record(record, dims)
        for row in decode(record.representative, dims):
            lines.append("".join(str(bit) for bit in row))
        return lines


class YamlFormatter(Formatter):
    class _NoAliasDumper(yaml.SafeDumper):
        def ignore_aliases(self, data: Any) -> bool:
            return True

    def _dump(self, data: Any) -> str:
        return yaml.dump(data, Dumper=YamlFormatter._NoAliasDumper, sort_keys=False)

    def format_report(self, report: EnumerationReport) -> str:
        return self._dump(report.as_dict())

    def format_breakdown(self, breakdown: BurnsideBreakdown) -> str:
        return self._dump(breakdown.as_dict())


class JsonFormatter(Formatter):
    def format_report(self, report: EnumerationReport) -> str:
        return json.dumps(report.as_dict(), indent=4) + "\n"

    def format_breakdown(self, breakdown: BurnsideBreakdown) -> str:
        return json.dumps(breakdown.as_dict(), indent=4) + "\n"


def header(dims: Dims, class_count: int) -> str:
    return f"# rows={dims.m} cols={dims.n} classes={class_count}"


_formatters: dict[OutputFormat, type[Formatter]] = {
    OutputFormat.TUPLE: TupleFormatter,
    OutputFormat.MATRIX: MatrixFormatter,
    OutputFormat.JSON: JsonFormatter,
    OutputFormat.YAML: YamlFormatter,
}


def get_formatter(name: str) -> Formatter:
    try:
        return _formatters[OutputFormat(name.lower())]()
    except ValueError:
        options = ", ".join(OutputFormat.get_format_list())
        raise SieveException(f"format must be one of: {options}") from None
