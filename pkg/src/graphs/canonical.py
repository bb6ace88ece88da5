"""
Canonical labelling of balanced bipartite graphs.

The canonical code of a graph is the lexicographically least row-major
biadjacency matrix over all column-vertex permutations, symbol-vertex
permutations and the side swap. Codes are tuples of n-bit integers whose
most significant bit is position 0, so tuple order is lexicographic order
on the matrix.

The search individualises one row at a time while refining an ordered
partition of the symbol-vertices. Rows with equal masks are interchangeable,
and sibling branches whose best completion equals the current best are in
the same automorphism orbit; both facts feed the automorphism group order
through the orbit-stabiliser theorem.
"""

from dataclasses import dataclass
from math import factorial
from typing import Dict, Sequence, Tuple

from ..exceptions import EmptyGraph
from .bipartite_graph import BipartiteGraph

Code = Tuple[int, ...]
# Ordered partition of the symbol-vertices: (mask, size) per cell
Cells = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical key of an unlabelled bipartite graph and |Aut(B)|."""

    key: bytes
    aut_order: int

    @property
    def n(self) -> int:
        return self.key[0]

    def code(self) -> Code:
        return decode_key(self.key)

    def to_graph(self) -> BipartiteGraph:
        """The canonical representative, labelled as the key spells it."""
        return BipartiteGraph.from_rows(self.n, code_to_rows(self.code(), self.n))


def canonical_form(graph: BipartiteGraph) -> CanonicalForm:
    """
    Canonical key and automorphism group order.

    Two graphs get equal keys iff they are isomorphic, where the side swap
    counts as an isomorphism. aut_order includes side swaps.
    """
    code, stabiliser = lexmin_code(graph.rows, graph.n)
    transposed, _ = lexmin_code(graph.column_masks(), graph.n)
    aut_order = stabiliser * (2 if transposed == code else 1)
    return CanonicalForm(encode_key(min(code, transposed), graph.n), aut_order)


def lexmin_code(rows: Sequence[int], n: int) -> Tuple[Code, int]:
    """
    Least code over row and column permutations (no side swap).

    Args:
        rows: Row masks, any consistent bit convention
        n: Number of columns

    Returns:
        (code, order of the side-preserving automorphism group)
    """
    return _search_best(tuple(rows), (((1 << n) - 1, n),))


def is_lexmin(rows: Sequence[int], n: int) -> bool:
    """True when the code rows (position 0 = MSB) are already least."""
    return lexmin_code(rows, n)[0] == tuple(rows)


def transpose_code(rows: Sequence[int], n: int) -> Code:
    """Transpose a code with r rows into n rows of r bits (row 0 = MSB)."""
    r = len(rows)
    transposed = [0] * n
    for i, row in enumerate(rows):
        for p in range(n):
            if row >> (n - 1 - p) & 1:
                transposed[p] |= 1 << (r - 1 - i)
    return tuple(transposed)


def encode_key(code: Code, n: int) -> bytes:
    width = (n + 7) // 8
    return bytes([n]) + b"".join(row.to_bytes(width, "big") for row in code)


def decode_key(key: bytes) -> Code:
    n = key[0]
    width = (n + 7) // 8
    body = key[1:]
    return tuple(int.from_bytes(body[i:i + width], "big") for i in range(0, len(body), width))


def code_to_rows(code: Code, n: int) -> Tuple[int, ...]:
    """Code rows (position 0 = MSB) to graph rows (symbol-vertex 0 = LSB)."""
    return tuple(int(format(row, f"0{n}b")[::-1], 2) for row in code)


def rows_to_code(rows: Sequence[int], n: int) -> Code:
    return code_to_rows(tuple(rows), n)


def edge_select(graph: BipartiteGraph) -> Tuple[int, int]:
    """
    First set bit of the first nonempty row.

    Applied to the canonical representative this gives a choice that is
    deterministic on isomorphism classes.

    Raises:
        EmptyGraph: the graph has no edges
    """
    for i, row in enumerate(graph.rows):
        if row:
            return i, (row & -row).bit_length() - 1
    raise EmptyGraph("edge_select needs at least one edge")


def _split_cells(cells: Cells, row: int) -> Cells:
    refined = []
    for cell, size in cells:
        zeros = cell & ~row
        if zeros == 0 or zeros == cell:
            refined.append((cell, size))
            continue
        zero_count = zeros.bit_count()
        refined.append((zeros, zero_count))
        refined.append((cell & row, size - zero_count))
    return tuple(refined)


def _row_code(row: int, cells: Cells) -> int:
    # within a cell the ones go to the right
    code = 0
    for cell, size in cells:
        code = (code << size) | ((1 << (row & cell).bit_count()) - 1)
    return code


def _candidates(rows: Tuple[int, ...], cells: Cells) -> Tuple[int, Dict[int, int]]:
    codes = [_row_code(row, cells) for row in rows]
    head = min(codes)
    groups: Dict[int, int] = {}
    for row, code in zip(rows, codes):
        if code == head:
            groups[row] = groups.get(row, 0) + 1
    return head, groups


def _without(rows: Tuple[int, ...], mask: int) -> Tuple[int, ...]:
    i = rows.index(mask)
    return rows[:i] + rows[i + 1:]


def _search_best(rows: Tuple[int, ...], cells: Cells) -> Tuple[Code, int]:
    if not rows:
        stabiliser = 1
        for _, size in cells:
            stabiliser *= factorial(size)
        return (), stabiliser

    head, groups = _candidates(rows, cells)
    branches = iter(groups.items())
    mask, multiplicity = next(branches)
    tail, stabiliser = _search_best(_without(rows, mask), _split_cells(cells, mask))
    orbit = multiplicity
    for mask, multiplicity in branches:
        rest, refined = _without(rows, mask), _split_cells(cells, mask)
        verdict = _compare(rest, refined, tail, 0)
        if verdict < 0:
            tail, stabiliser = _search_best(rest, refined)
            orbit = multiplicity
        elif verdict == 0:
            orbit += multiplicity
    return (head,) + tail, orbit * stabiliser


def _compare(rows: Tuple[int, ...], cells: Cells, target: Code, depth: int) -> int:
    """
    -1 if some completion beats target, 0 if one equals it, 1 otherwise.

    target is the least completion of a sibling, so an equal completion
    proves the two branches lie in one orbit and nothing smaller exists.
    """
    if not rows:
        return 0
    head, groups = _candidates(rows, cells)
    wanted = target[depth]
    if head != wanted:
        return -1 if head < wanted else 1
    for mask in groups:
        verdict = _compare(_without(rows, mask), _split_cells(cells, mask), target, depth + 1)
        if verdict <= 0:
            return verdict
    return 1
