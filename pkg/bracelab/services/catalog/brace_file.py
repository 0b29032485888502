"""
Plain-text file formats.

Brace file:
    brace <order> <left|right>
    <order lines: additive table>
    <blank line>
    <order lines: multiplicative table>
    # optional trailing comment lines

Solution export:
    solution <size>
    <size lines: sigma_x in one-line notation>
    <size lines: tau_y in one-line notation>

Serialization is ASCII with '\n' line endings, so it is byte-identical across platforms.
"""

import logging
from pathlib import Path
from typing import Iterable, List, Sequence, Tuple

from ...core.exceptions import BraceFileError
from ...models.structures import Chirality, FiniteBrace, SetSolution
from ..braces.validation import validate

logger = logging.getLogger(__name__)


def _rows(table: Sequence[Sequence[int]]) -> List[str]:
    return [" ".join(str(v) for v in row) for row in table]


def serialize_brace(brace: FiniteBrace, comments: Iterable[str] = ()) -> str:
    lines = [f"brace {brace.order} {brace.chirality.value}"]
    lines += _rows(brace.add_table)
    lines.append("")
    lines += _rows(brace.mul_table)
    lines += [f"# {c}" for c in comments]
    return "\n".join(lines) + "\n"


def _parse_row(line: str, lineno: int, width: int) -> Tuple[int, ...]:
    try:
        row = tuple(int(tok) for tok in line.split())
    except ValueError:
        raise BraceFileError(f"non-integer entry in {line!r}", lineno)
    if len(row) != width:
        raise BraceFileError(f"expected {width} entries, found {len(row)}", lineno)
    return row


def _content_lines(text: str) -> List[Tuple[int, str]]:
    """Numbered lines with trailing comments and blank lines removed."""
    lines = list(enumerate(text.splitlines(), start=1))
    while lines and (not lines[-1][1].strip() or lines[-1][1].lstrip().startswith("#")):
        lines.pop()
    return lines


def parse_brace(text: str) -> FiniteBrace:
    """Parse and validate a brace file. Raises BraceFileError or BraceValidationError."""
    lines = _content_lines(text)
    if not lines:
        raise BraceFileError("empty brace file")
    header = lines[0][1].split()
    if len(header) != 3 or header[0] != "brace":
        raise BraceFileError("header must be 'brace <order> <left|right>'", 1)
    try:
        order = int(header[1])
        chirality = Chirality(header[2])
    except ValueError:
        raise BraceFileError(f"bad header {lines[0][1]!r}", 1)
    if order < 1:
        raise BraceFileError(f"order must be positive, got {order}", 1)

    expected = 2 * order + 2
    if len(lines) != expected:
        raise BraceFileError(f"expected {expected} lines for order {order}, found {len(lines)}")
    blank_no, blank = lines[order + 1]
    if blank.strip():
        raise BraceFileError("expected a blank line between the tables", blank_no)

    add = [_parse_row(line, no, order) for no, line in lines[1:order + 1]]
    mul = [_parse_row(line, no, order) for no, line in lines[order + 2:]]
    return validate(order, add, mul, chirality)


def read_brace_file(path: Path) -> FiniteBrace:
    path = Path(path)
    try:
        text = path.read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as e:
        raise BraceFileError(f"cannot read {path}: {e}")
    return parse_brace(text)


def write_brace_file(path: Path, brace: FiniteBrace, comments: Iterable[str] = ()) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(serialize_brace(brace, comments).encode("ascii"))
    logger.debug(f"Wrote {path}")
    return path


def serialize_solution(sol: SetSolution) -> str:
    lines = [f"solution {sol.size}"] + _rows(sol.sigma) + _rows(sol.tau)
    return "\n".join(lines) + "\n"


def parse_solution(text: str) -> SetSolution:
    lines = _content_lines(text)
    if not lines:
        raise BraceFileError("empty solution file")
    header = lines[0][1].split()
    if len(header) != 2 or header[0] != "solution":
        raise BraceFileError("header must be 'solution <size>'", 1)
    try:
        size = int(header[1])
    except ValueError:
        raise BraceFileError(f"bad size {header[1]!r}", 1)
    if len(lines) != 2 * size + 1:
        raise BraceFileError(f"expected {2 * size + 1} lines for size {size}, found {len(lines)}")
    rows = [_parse_row(line, no, size) for no, line in lines[1:]]
    for no, row in zip((no for no, _ in lines[1:]), rows):
        if sorted(row) != list(range(size)):
            raise BraceFileError("row is not a permutation", no)
    return SetSolution(size=size, sigma=tuple(rows[:size]), tau=tuple(rows[size:]))
