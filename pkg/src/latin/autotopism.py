"""Autotopism and autoparatopism group orders by propagated backtracking"""

from typing import List, Optional, Tuple

from ..exceptions import NotSquare, check_budget
from ..utils.logger import setup_logger
from .permutation import CONJUGATES, IDENTITY_CONJUGATE, conjugate
from .rectangle import LatinRectangle

logger = setup_logger(__name__)

AUTOPARATOPISM_MAX_N = 8

# State slots: row, column and symbol maps followed by their inverses
ROWS, COLUMNS, SYMBOLS = 0, 1, 2


class IsotopismSearch:
    """
    Counts isotopisms (rho, sigma, tau) taking a source square onto a target,
    i.e. target[rho(r)][sigma(c)] == tau(source[r][c]) for every cell.

    Maps are built incrementally. Whenever two of the three images of a
    cell are known the third is forced, so one branching decision usually
    fixes most of the search state. Branching order is rho(0), sigma(0),
    then the remaining rows and columns.
    """

    def __init__(self, source: LatinRectangle, target: LatinRectangle, limit: Optional[int] = None):
        self.n = source.n
        self.limit = limit
        self.found = 0
        n = self.n
        self.source = [[symbol - 1 for symbol in row] for row in source.cells]
        self.target = [[symbol - 1 for symbol in row] for row in target.cells]

        # target lookups: column of symbol s in row x, row of symbol s in column y
        self.column_of = [[0] * n for _ in range(n)]
        self.row_of = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                s = self.target[x][y]
                self.column_of[x][s] = y
                self.row_of[y][s] = x

        self.cells_by_row = [[(r, c) for c in range(n)] for r in range(n)]
        self.cells_by_column = [[(r, c) for r in range(n)] for c in range(n)]
        self.cells_by_symbol: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
        for r in range(n):
            for c in range(n):
                self.cells_by_symbol[self.source[r][c]].append((r, c))
        self.cells_by = (self.cells_by_row, self.cells_by_column, self.cells_by_symbol)

        self.order = [(ROWS, 0), (COLUMNS, 0)]
        if n > 1:
            self.order.append((ROWS, 1))
        self.order += [(COLUMNS, c) for c in range(1, n)]
        self.order += [(ROWS, r) for r in range(2, n)]

    def count(self) -> int:
        n = self.n
        state = [[-1] * n for _ in range(6)]
        self.found = 0
        self._branch(state, 0)
        return self.found

    def _assign(self, state, which: int, index: int, value: int, queue) -> bool:
        forward, inverse = state[which], state[which + 3]
        current = forward[index]
        if current >= 0:
            return current == value
        if inverse[value] >= 0:
            return False
        forward[index] = value
        inverse[value] = index
        queue.extend(self.cells_by[which][index])
        return True

    def _propagate(self, state, queue) -> bool:
        rho, sigma, tau = state[ROWS], state[COLUMNS], state[SYMBOLS]
        while queue:
            r, c = queue.pop()
            a, b = rho[r], sigma[c]
            s = self.source[r][c]
            t = tau[s]
            if a >= 0 and b >= 0:
                if not self._assign(state, SYMBOLS, s, self.target[a][b], queue):
                    return False
            elif a >= 0 and t >= 0:
                if not self._assign(state, COLUMNS, c, self.column_of[a][t], queue):
                    return False
            elif b >= 0 and t >= 0:
                if not self._assign(state, ROWS, r, self.row_of[b][t], queue):
                    return False
        return True

    def _branch(self, state, position: int) -> None:
        while position < len(self.order):
            which, index = self.order[position]
            if state[which][index] < 0:
                break
            position += 1
        else:
            # every row and column is mapped, so every symbol is too
            self.found += 1
            return

        inverse = state[which + 3]
        for value in range(self.n):
            if inverse[value] >= 0:
                continue
            child = [slot[:] for slot in state]
            queue: List[Tuple[int, int]] = []
            self._assign(child, which, index, value, queue)
            if self._propagate(child, queue):
                self._branch(child, position + 1)
            if self.limit is not None and self.found >= self.limit:
                return


def count_isotopisms(source: LatinRectangle, target: LatinRectangle, limit: Optional[int] = None) -> int:
    """Number of isotopisms from source onto target (stops early at limit)."""
    for square in (source, target):
        if not square.is_square:
            raise NotSquare(f"isotopisms act on squares, got {square.k}x{square.n}")
    if source.n != target.n:
        return 0
    return IsotopismSearch(source, target, limit).count()


def autotopism_group_order(square: LatinRectangle, max_n: int = AUTOPARATOPISM_MAX_N) -> int:
    """|Atp(L)|, the number of isotopisms fixing the square."""
    check_budget("autotopism_group_order", square.n, max_n)
    return count_isotopisms(square, square)


def autoparatopism_group_order(square: LatinRectangle, max_n: int = AUTOPARATOPISM_MAX_N) -> int:
    """
    |Par(L)|, the number of paratopisms fixing the square.

    A paratopism with conjugate c fixes L exactly when it is an isotopism
    from conj(L, c) onto L, so the order is a sum over the six conjugates.
    Paratopisms are counted as formal (conjugate, maps) pairs, which makes
    the order of the 1x1 square equal to 6.
    """
    check_budget("autoparatopism_group_order", square.n, max_n)
    total = 0
    for selector in CONJUGATES:
        total += count_isotopisms(conjugate(square, selector), square)
    logger.debug(f"|Par| = {total} for square of order {square.n}")
    return total


def has_nontrivial_autoparatopism(square: LatinRectangle, max_n: int = AUTOPARATOPISM_MAX_N) -> bool:
    """Existence form of autoparatopism_group_order(square) > 1, aborting early."""
    check_budget("has_nontrivial_autoparatopism", square.n, max_n)
    for selector in CONJUGATES:
        needed = 2 if selector == IDENTITY_CONJUGATE else 1
        if count_isotopisms(conjugate(square, selector), square, limit=needed) >= needed:
            return True
    return False
