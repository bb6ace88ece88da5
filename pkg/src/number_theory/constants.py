"""Published values of R_{k,n}, their factorizations and the extremal m(B) census"""

import hashlib
from dataclasses import dataclass
from math import factorial
from typing import Dict, List, Optional, Tuple

from ..exceptions import MissingConstant

# R_{k,n} for k = 1..n, indexed by n
PUBLISHED_REDUCED_TABLE: Dict[int, Tuple[str, ...]] = {
    1: (
        "1",
    ),
    2: (
        "1",
        "1",
    ),
    3: (
        "1",
        "1",
        "1",
    ),
    4: (
        "1",
        "3",
        "4",
        "4",
    ),
    5: (
        "1",
        "11",
        "46",
        "56",
        "56",
    ),
    6: (
        "1",
        "53",
        "1064",
        "6552",
        "9408",
        "9408",
    ),
    7: (
        "1",
        "309",
        "35792",
        "1293216",
        "11270400",
        "16942080",
        "16942080",
    ),
    8: (
        "1",
        "2119",
        "1673792",
        "420909504",
        "27206658048",
        "335390189568",
        "535281401856",
        "535281401856",
    ),
    9: (
        "1",
        "16687",
        "103443808",
        "207624560256",
        "112681643083776",
        "12952605404381184",
        "224382967916691456",
        "377597570964258816",
        "377597570964258816",
    ),
    10: (
        "1",
        "148329",
        "8154999232",
        "147174521059584",
        "746988383076286464",
        "870735405591003709440",
        "177144296983054185922560",
        "4292039421591854273003520",
        "7580721483160132811489280",
        "7580721483160132811489280",
    ),
    11: (
        "1",
        "1468457",
        "798030483328",
        "143968880078466048",
        "7533492323047902093312",
        "96299552373292505158778880",
        "240123216475173515502173552640",
        "86108204357787266780858343751680",
        "2905990310033882693113989027594240",
        "5363937773277371298119673540771840",
        "5363937773277371298119673540771840",
    ),
}

# sha256 of the "n k value\n" lines above, ordered by n then k
PUBLISHED_TABLE_SHA256 = "ca4226d359bd624cc74510bb2dc47cb4f38c2b87644ceb23f567671c43289a01"

R11_MODULUS = 21175
R11_RESIDUE = 8515

# Prime factorizations of R_n
PUBLISHED_FACTORIZATIONS: Dict[int, Tuple[Tuple[int, int], ...]] = {
    4: ((2, 2),),
    5: ((2, 3), (7, 1)),
    6: ((2, 6), (3, 1), (7, 2)),
    7: ((2, 10), (3, 1), (5, 1), (1103, 1)),
    8: ((2, 17), (3, 1), (1361291, 1)),
    9: ((2, 21), (3, 2), (5231, 1), (3824477, 1)),
    10: ((2, 28), (3, 2), (5, 1), (31, 1), (37, 1), (547135293937, 1)),
    11: ((2, 35), (3, 4), (5, 1), (2801, 1), (2206499, 1), (62368028479, 1)),
}

# (n, k) -> (least m(B), number of classes attaining it, largest m(B)).
# The largest value is attained by exactly one class in every row.
PUBLISHED_EXTREMAL: Dict[Tuple[int, int], Tuple[str, int, str]] = {
    (4, 2): ("1", 1, "2"),
    (5, 2): ("1", 1, "2"),
    (5, 3): ("4", 1, "6"),
    (6, 2): ("1", 1, "4"),
    (6, 3): ("8", 4, "24"),
    (6, 4): ("168", 1, "224"),
    (7, 2): ("1", 1, "4"),
    (7, 3): ("8", 3, "48"),
    (7, 4): ("456", 2, "576"),
    (7, 5): ("54528", 1, "55296"),
    (8, 2): ("1", 1, "8"),
    (8, 3): ("16", 18, "96"),
    (8, 4): ("1120", 1, "13824"),
    (8, 5): ("306432", 1, "402432"),
    (8, 6): ("251894784", 1, "258392064"),
    (9, 2): ("1", 1, "8"),
    (9, 3): ("16", 7, "288"),
    (9, 4): ("2720", 1, "32256"),
    (9, 5): ("1718784", 1, "2312192"),
    (9, 6): ("3585925120", 1, "3797508096"),
    (9, 7): ("22606854291456", 1, "22710505439232"),
    (10, 2): ("1", 1, "16"),
    (10, 3): ("24", 2, "576"),
    (10, 4): ("6992", 1, "129024"),
    (10, 5): ("9457472", 1, "216760320"),
    (10, 6): ("49712734208", 1, "71022182400"),
    (10, 7): ("920073219063808", 1, "962525641310208"),
    (10, 8): ("51072829020284387328", 1, "51411315765364654080"),
    (11, 2): ("1", 1, "16"),
    (11, 3): ("32", 25, "1152"),
    (11, 4): ("17040", 1, "331776"),
    (11, 5): ("49449728", 1, "1517322240"),
    (11, 6): ("656992907264", 1, "1274550681600"),
    (11, 7): ("36184087678025728", 1, "41312188744335360"),
    (11, 8): ("6674288352734540070912", 1, "6904895678779049902080"),
    (11, 9): ("3650989756490710602617978880", 1, "3665106903315598519509712896"),
}


def table_checksum(table: Optional[Dict[int, Tuple[str, ...]]] = None) -> str:
    table = PUBLISHED_REDUCED_TABLE if table is None else table
    lines = "".join(
        f"{n} {k} {value}\n"
        for n in sorted(table)
        for k, value in enumerate(table[n], 1)
    )
    return hashlib.sha256(lines.encode("ascii")).hexdigest()


@dataclass(frozen=True)
class ExtremalEntry:
    min_m: int
    min_count: int
    max_m: int


class PublishedConstants:
    """Lookup of the published tables for 1 <= k <= n <= 11"""

    def __init__(self, table: Optional[Dict[int, Tuple[str, ...]]] = None):
        source = PUBLISHED_REDUCED_TABLE if table is None else table
        self.table = source
        self._values: Dict[Tuple[int, int], int] = {
            (k, n): int(value)
            for n, row in source.items()
            for k, value in enumerate(row, 1)
        }

    @property
    def max_n(self) -> int:
        return max(self.table)

    def checksum_ok(self) -> bool:
        return table_checksum(self.table) == PUBLISHED_TABLE_SHA256

    def has(self, k: int, n: int) -> bool:
        return (k, n) in self._values

    def reduced_rectangles(self, k: int, n: int) -> int:
        """
        Published R_{k,n}.

        Raises:
            MissingConstant: (k, n) is outside the table
        """
        try:
            return self._values[(k, n)]
        except KeyError:
            raise MissingConstant(f"no published value for R_({k},{n})")

    def reduced_squares(self, n: int) -> int:
        return self.reduced_rectangles(n, n)

    def latin_squares(self, n: int) -> int:
        """L_n = n! (n-1)! R_n."""
        return factorial(n) * factorial(n - 1) * self.reduced_squares(n)

    def factorization(self, n: int) -> Tuple[Tuple[int, int], ...]:
        if n not in PUBLISHED_FACTORIZATIONS:
            raise MissingConstant(f"no published factorization of R_{n}")
        return PUBLISHED_FACTORIZATIONS[n]

    def extremal(self, k: int, n: int) -> ExtremalEntry:
        if (n, k) not in PUBLISHED_EXTREMAL:
            raise MissingConstant(f"no published extremal census for n={n} k={k}")
        min_m, min_count, max_m = PUBLISHED_EXTREMAL[(n, k)]
        return ExtremalEntry(int(min_m), min_count, int(max_m))

    def rows(self) -> List[Tuple[int, int, int]]:
        """(n, k, R_{k,n}) ordered by n then k."""
        return [(n, k, self._values[(k, n)]) for n in sorted(self.table) for k in range(1, n + 1)]
