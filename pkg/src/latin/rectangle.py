"""Latin rectangle representation, validation and normalisation"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Tuple

from ..exceptions import (
    ColumnRepeat,
    RowRepeat,
    ShapeInvalid,
    SymbolOutOfRange,
)
from ..graphs.bipartite_graph import BipartiteGraph

Cells = Tuple[Tuple[int, ...], ...]
Triple = Tuple[int, int, int]


@dataclass(frozen=True)
class LatinRectangle:
    """
    A k x n Latin rectangle over the symbols 1..n.

    Rows, columns and symbols are 1-based on every public method. Instances
    are normally built through validate(); the constructor trusts its input.
    """

    cells: Cells

    @property
    def k(self) -> int:
        return len(self.cells)

    @property
    def n(self) -> int:
        return len(self.cells[0])

    @property
    def is_square(self) -> bool:
        return self.k == self.n

    def entry(self, row: int, column: int) -> int:
        return self.cells[row - 1][column - 1]

    def column(self, column: int) -> Tuple[int, ...]:
        return tuple(row[column - 1] for row in self.cells)

    def triples(self) -> FrozenSet[Triple]:
        """The (row, column, symbol) triple set."""
        return frozenset(
            (i, j, symbol)
            for i, row in enumerate(self.cells, 1)
            for j, symbol in enumerate(row, 1)
        )

    def is_reduced(self) -> bool:
        """First row is (1..n) and first column is (1..k)."""
        return (
            self.cells[0] == tuple(range(1, self.n + 1))
            and self.column(1) == tuple(range(1, self.k + 1))
        )

    def __str__(self) -> str:
        return format_rectangle(self)


def validate(cells: Sequence[Sequence[int]]) -> LatinRectangle:
    """
    Check an array and wrap it as a LatinRectangle.

    Cells are scanned in row-major order and the first offending cell is
    reported with its 1-based (row, column).

    Args:
        cells: k rows of n symbols each, symbols in 1..n

    Returns:
        The validated rectangle

    Raises:
        ShapeInvalid, SymbolOutOfRange, RowRepeat, ColumnRepeat
    """
    rows = [tuple(int(symbol) for symbol in row) for row in cells]
    if not rows or not rows[0]:
        raise ShapeInvalid("a Latin rectangle needs at least one row and one column")

    k, n = len(rows), len(rows[0])
    for i, row in enumerate(rows, 1):
        if len(row) != n:
            raise ShapeInvalid(f"row {i} has {len(row)} entries, expected {n}", row=i)
    if k > n:
        raise ShapeInvalid(f"{k} rows exceed {n} columns")

    column_seen: List[set] = [set() for _ in range(n)]
    for i, row in enumerate(rows, 1):
        row_seen = set()
        for j, symbol in enumerate(row, 1):
            if not 1 <= symbol <= n:
                raise SymbolOutOfRange(
                    f"symbol {symbol} at ({i}, {j}) is outside 1..{n}", row=i, column=j
                )
            if symbol in row_seen:
                raise RowRepeat(f"symbol {symbol} repeats in row {i} at column {j}", row=i, column=j)
            if symbol in column_seen[j - 1]:
                raise ColumnRepeat(
                    f"symbol {symbol} repeats in column {j} at row {i}", row=i, column=j
                )
            row_seen.add(symbol)
            column_seen[j - 1].add(symbol)

    return LatinRectangle(tuple(rows))


def reduce_rectangle(rectangle: LatinRectangle) -> LatinRectangle:
    """
    Normalise a rectangle to reduced form.

    Columns are permuted so row 1 reads (1..n), then rows 2..k are sorted by
    their first entry. For k < n the first column is then an increasing
    sequence 1 = a_1 < a_2 < ... < a_k, which is mapped onto (1..k) by
    applying one permutation to both columns and symbols (fixing 1, and
    order-preserving on the remaining symbols). For squares that last step
    is the identity. The map is idempotent.
    """
    n = rectangle.n
    position = {symbol: j for j, symbol in enumerate(rectangle.cells[0])}
    order = [position[symbol] for symbol in range(1, n + 1)]
    rows = [tuple(row[j] for j in order) for row in rectangle.cells]
    rows = [rows[0]] + sorted(rows[1:], key=lambda row: row[0])

    leading = [row[0] for row in rows]
    if leading != list(range(1, rectangle.k + 1)):
        relabel = _first_column_relabeling(leading, n)
        relabeled = []
        for row in rows:
            image = [0] * n
            for j, symbol in enumerate(row, 1):
                image[relabel[j] - 1] = relabel[symbol]
            relabeled.append(tuple(image))
        rows = relabeled

    return LatinRectangle(tuple(rows))


def _first_column_relabeling(leading: List[int], n: int) -> Dict[int, int]:
    relabel = {symbol: i for i, symbol in enumerate(leading, 1)}
    rest = [symbol for symbol in range(1, n + 1) if symbol not in relabel]
    for offset, symbol in enumerate(rest, len(leading) + 1):
        relabel[symbol] = offset
    return relabel


def to_bipartite(rectangle: LatinRectangle) -> BipartiteGraph:
    """
    Build B(L): column-vertex c_i is adjacent to symbol-vertex s_j when
    symbol j occurs in column i. Graph indices are 0-based.
    """
    rows = [0] * rectangle.n
    for row in rectangle.cells:
        for j, symbol in enumerate(row):
            rows[j] |= 1 << (symbol - 1)
    return BipartiteGraph(rectangle.n, tuple(rows), rectangle.k)


def format_rectangle(rectangle: LatinRectangle) -> str:
    """Serialise in the LR text format ("LR <k> <n>" then k rows, LF endings)."""
    lines = [f"LR {rectangle.k} {rectangle.n}"]
    lines.extend(" ".join(str(symbol) for symbol in row) for row in rectangle.cells)
    return "\n".join(lines) + "\n"


def parse_rectangle(text: str) -> LatinRectangle:
    """Parse the LR text format and validate the result."""
    lines = text.strip("\n").split("\n")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "LR":
        raise ShapeInvalid(f"expected 'LR <k> <n>' header, got {lines[0]!r}")
    k, n = int(header[1]), int(header[2])
    body = [line.split() for line in lines[1:]]
    if len(body) != k or any(len(row) != n for row in body):
        raise ShapeInvalid(f"LR body does not have {k} rows of {n} symbols")
    return validate(body)
