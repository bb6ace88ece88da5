"""Permutations, conjugates and paratopisms acting on Latin squares"""

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence, Tuple

from ..exceptions import DegreeMismatch, NotSquare
from .rectangle import LatinRectangle, Triple

# Conjugate selector: the output triple is (t[c[0]], t[c[1]], t[c[2]])
# over the coordinates (row, column, symbol) = (0, 1, 2).
Conjugate = Tuple[int, int, int]

IDENTITY_CONJUGATE: Conjugate = (0, 1, 2)
CONJUGATES: Tuple[Conjugate, ...] = tuple(permutations(range(3)))


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..m}, images[x - 1] is the image of x."""

    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_sequence(cls, images: Sequence[int]) -> "Permutation":
        return cls(tuple(int(x) for x in images))

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.degree + 1))

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other."""
        if other.degree != self.degree:
            raise DegreeMismatch(f"cannot compose degrees {self.degree} and {other.degree}")
        return Permutation(tuple(self(other(x)) for x in range(1, self.degree + 1)))


def conjugate(square: LatinRectangle, selector: Conjugate) -> LatinRectangle:
    """
    Permute the (row, column, symbol) roles of every triple.

    Raises:
        NotSquare: conjugation of a proper rectangle does not give a rectangle
    """
    if not square.is_square:
        raise NotSquare(f"conjugate needs a square, got {square.k}x{square.n}")
    return _from_triples(
        square.n, ((t[selector[0]], t[selector[1]], t[selector[2]]) for t in square.triples())
    )


@dataclass(frozen=True)
class Paratopism:
    """
    A conjugate selector followed by row, column and symbol permutations.

    A triple t maps to (rows(u[0]), columns(u[1]), symbols(u[2])) where
    u = (t[c[0]], t[c[1]], t[c[2]]).
    """

    conjugate: Conjugate
    rows: Permutation
    columns: Permutation
    symbols: Permutation

    def __post_init__(self):
        if self.conjugate not in CONJUGATES:
            raise ValueError(f"invalid conjugate selector {self.conjugate}")
        if not self.rows.degree == self.columns.degree == self.symbols.degree:
            raise DegreeMismatch("row, column and symbol permutations differ in degree")

    @classmethod
    def isotopism(cls, rows: Permutation, columns: Permutation, symbols: Permutation) -> "Paratopism":
        return cls(IDENTITY_CONJUGATE, rows, columns, symbols)

    @classmethod
    def identity(cls, degree: int) -> "Paratopism":
        identity = Permutation.identity(degree)
        return cls(IDENTITY_CONJUGATE, identity, identity, identity)

    @property
    def degree(self) -> int:
        return self.rows.degree

    @property
    def maps(self) -> Tuple[Permutation, Permutation, Permutation]:
        return self.rows, self.columns, self.symbols

    def apply_to_triple(self, triple: Triple) -> Triple:
        c = self.conjugate
        return (
            self.rows(triple[c[0]]),
            self.columns(triple[c[1]]),
            self.symbols(triple[c[2]]),
        )

    def compose(self, other: "Paratopism") -> "Paratopism":
        """self after other."""
        if other.degree != self.degree:
            raise DegreeMismatch(f"cannot compose degrees {self.degree} and {other.degree}")
        outer = self.conjugate
        selector = tuple(other.conjugate[outer[i]] for i in range(3))
        maps = [self.maps[i].compose(other.maps[outer[i]]) for i in range(3)]
        return Paratopism(selector, *maps)


def apply_paratopism(square: LatinRectangle, paratopism: Paratopism) -> LatinRectangle:
    """
    Image of a Latin square under a paratopism.

    Raises:
        NotSquare, DegreeMismatch
    """
    if not square.is_square:
        raise NotSquare(f"paratopisms act on squares, got {square.k}x{square.n}")
    if paratopism.degree != square.n:
        raise DegreeMismatch(f"paratopism degree {paratopism.degree} differs from order {square.n}")
    return _from_triples(square.n, (paratopism.apply_to_triple(t) for t in square.triples()))


def _from_triples(n: int, triples) -> LatinRectangle:
    cells = [[0] * n for _ in range(n)]
    for row, column, symbol in triples:
        cells[row - 1][column - 1] = symbol
    return LatinRectangle(tuple(tuple(row) for row in cells))
