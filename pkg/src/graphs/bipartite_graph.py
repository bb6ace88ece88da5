"""Balanced bipartite graphs stored as row bitmasks"""

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

from ..exceptions import ShapeInvalid

Edge = Tuple[int, int]


@dataclass(frozen=True)
class BipartiteGraph:
    """
    Balanced bipartite graph on column-vertices c_0..c_{n-1} and
    symbol-vertices s_0..s_{n-1}.

    rows[i] is the neighbourhood of c_i as a bitmask: bit j set means
    c_i ~ s_j. Vertex indices are 0-based. k is the common degree when the
    graph is regular and None otherwise.
    """

    n: int
    rows: Tuple[int, ...]
    k: Optional[int] = None

    def __post_init__(self):
        if self.n < 1:
            raise ShapeInvalid(f"graph order must be positive, got {self.n}")
        if len(self.rows) != self.n:
            raise ShapeInvalid(f"expected {self.n} rows, got {len(self.rows)}")
        if any(row < 0 or row >> self.n for row in self.rows):
            raise ShapeInvalid(f"row mask outside {self.n} symbol-vertices")
        if self.k is not None:
            if any(row.bit_count() != self.k for row in self.rows) or any(
                column.bit_count() != self.k for column in self.column_masks()
            ):
                raise ShapeInvalid(f"graph is not {self.k}-regular")

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[int]) -> "BipartiteGraph":
        """Build a graph and detect its degree when it is regular."""
        rows = tuple(rows)
        degrees = {row.bit_count() for row in rows}
        k = None
        if len(degrees) == 1:
            candidate = degrees.pop()
            if all(column.bit_count() == candidate for column in _transpose(rows, n)):
                k = candidate
        return cls(n, rows, k)

    @classmethod
    def empty(cls, n: int) -> "BipartiteGraph":
        return cls(n, (0,) * n, 0)

    @classmethod
    def complete(cls, n: int) -> "BipartiteGraph":
        return cls(n, ((1 << n) - 1,) * n, n)

    @classmethod
    def perfect_matching(cls, n: int) -> "BipartiteGraph":
        """The matching c_i ~ s_i."""
        return cls(n, tuple(1 << i for i in range(n)), 1)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def has_edge(self, column_vertex: int, symbol_vertex: int) -> bool:
        if not (0 <= column_vertex < self.n and 0 <= symbol_vertex < self.n):
            return False
        return bool(self.rows[column_vertex] >> symbol_vertex & 1)

    def edges(self) -> Iterator[Edge]:
        for i, row in enumerate(self.rows):
            while row:
                bit = row & -row
                yield i, bit.bit_length() - 1
                row ^= bit

    def column_masks(self) -> Tuple[int, ...]:
        """Neighbourhoods of the symbol-vertices."""
        return _transpose(self.rows, self.n)

    def transpose(self) -> "BipartiteGraph":
        """Swap the roles of the two sides."""
        return BipartiteGraph(self.n, self.column_masks(), self.k)

    def relabel(self, column_order: Sequence[int], symbol_order: Sequence[int]) -> "BipartiteGraph":
        """
        Apply vertex permutations: c_i becomes c_{column_order[i]} and s_j
        becomes s_{symbol_order[j]}.
        """
        rows = [0] * self.n
        for i, j in self.edges():
            rows[column_order[i]] |= 1 << symbol_order[j]
        return BipartiteGraph(self.n, tuple(rows), self.k)

    def component_count(self) -> int:
        """Number of connected components over all 2n vertices."""
        columns = self.column_masks()
        unseen_rows = self.full_mask
        unseen_columns = self.full_mask
        components = 0
        while unseen_rows or unseen_columns:
            components += 1
            if unseen_rows:
                start = unseen_rows & -unseen_rows
                frontier_rows, frontier_columns = start, 0
            else:
                start = unseen_columns & -unseen_columns
                frontier_rows, frontier_columns = 0, start
            while frontier_rows or frontier_columns:
                unseen_rows &= ~frontier_rows
                unseen_columns &= ~frontier_columns
                reached_columns = 0
                for i in _bits(frontier_rows):
                    reached_columns |= self.rows[i]
                reached_rows = 0
                for j in _bits(frontier_columns):
                    reached_rows |= columns[j]
                frontier_rows = reached_rows & unseen_rows
                frontier_columns = reached_columns & unseen_columns
        return components


def complement(graph: BipartiteGraph) -> BipartiteGraph:
    """Bipartite complement K_{n,n} - B."""
    k = None if graph.k is None else graph.n - graph.k
    return BipartiteGraph(graph.n, tuple(row ^ graph.full_mask for row in graph.rows), k)


def format_graph(graph: BipartiteGraph) -> str:
    """
    Serialise in the BGF text format: "BGF <n> <k>" then n lines of n
    characters, character j of line i is '1' iff c_i ~ s_j. Irregular graphs
    write '-' for k.
    """
    degree = "-" if graph.k is None else str(graph.k)
    lines = [f"BGF {graph.n} {degree}"]
    for row in graph.rows:
        lines.append("".join("1" if row >> j & 1 else "0" for j in range(graph.n)))
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> BipartiteGraph:
    """Parse the BGF text format."""
    lines = text.strip("\n").split("\n")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "BGF":
        raise ShapeInvalid(f"expected 'BGF <n> <k>' header, got {lines[0]!r}")
    n = int(header[1])
    body = lines[1:]
    if len(body) != n or any(len(line) != n or set(line) - {"0", "1"} for line in body):
        raise ShapeInvalid(f"BGF body does not have {n} lines of {n} binary characters")
    rows = tuple(sum(1 << j for j, char in enumerate(line) if char == "1") for line in body)
    if header[2] == "-":
        return BipartiteGraph(n, rows)
    return BipartiteGraph(n, rows, int(header[2]))


def _transpose(rows: Sequence[int], n: int) -> Tuple[int, ...]:
    columns = [0] * n
    for i, row in enumerate(rows):
        for j in _bits(row):
            columns[j] |= 1 << i
    return tuple(columns)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        bit = mask & -mask
        yield bit.bit_length() - 1
        mask ^= bit
