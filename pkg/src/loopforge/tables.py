"""Cayley tables of finite groupoids, quasigroups and loops.

A table of order n is an n x n grid over the element set 0..n-1, stored as
an immutable numpy array; cell [x, y] holds the product x*y.  A table is a
quasigroup iff it is Latin (every row and column is a permutation), and a
loop iff it is Latin with a two-sided identity.

Text interchange format::

    line 1:        n
    lines 2..n+1:  n whitespace-separated integers (one table row each)

'#' starts a comment that runs to end of line; blank lines are ignored.
A file may hold several consecutive tables.
"""

import re

import numpy as np

LEFT = "left"
RIGHT = "right"

__all__ = [
    "CayleyTable",
    "TableFormatError",
    "parse_table",
    "parse_tables",
    "is_latin",
    "identity_of",
    "translation",
    "inverse_map",
    "left_division_table",
    "right_division_table",
    "identity_perm",
    "compose",
    "perm_inverse",
    "is_perm",
    "cyclic",
    "klein_four",
    "symmetric_3",
    "LEFT",
    "RIGHT",
]


class TableFormatError(ValueError):
    """Malformed table text; carries 1-based line/column of the offence."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)


class CayleyTable:
    """Immutable n x n operation table over elements 0..n-1."""

    __slots__ = ("cells", "name")

    def __init__(self, cells, name=None):
        arr = np.array(cells, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise ValueError(f"table must be a non-empty square grid, got shape {arr.shape}")
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            raise ValueError(f"cell values must lie in 0..{n - 1}")
        arr.setflags(write=False)
        self.cells = arr
        self.name = name

    @property
    def order(self) -> int:
        return self.cells.shape[0]

    def mul(self, x: int, y: int) -> int:
        return int(self.cells[x, y])

    def row(self, x: int) -> tuple:
        return tuple(int(v) for v in self.cells[x])

    def col(self, y: int) -> tuple:
        return tuple(int(v) for v in self.cells[:, y])

    def rows(self) -> tuple:
        return tuple(self.row(x) for x in range(self.order))

    def to_text(self) -> str:
        lines = [str(self.order)]
        lines.extend(" ".join(str(int(v)) for v in row) for row in self.cells)
        return "\n".join(lines) + "\n"

    def with_name(self, name) -> "CayleyTable":
        return CayleyTable(self.cells, name=name)

    def __eq__(self, other):
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.cells, other.cells)

    def __hash__(self):
        return hash((self.order, self.cells.tobytes()))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<CayleyTable{label} order={self.order}>"


def _tokenize(text):
    """Yield (token, line_no, col_no) after comment stripping, 1-based."""
    for line_no, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        for m in re.finditer(r"\S+", content):
            yield m.group(), line_no, m.start() + 1


def parse_tables(text: str) -> list:
    """Parse every table in *text*, in order of appearance."""
    tokens = list(_tokenize(text))
    tables = []
    pos = 0
    while pos < len(tokens):
        tok, line, col = tokens[pos]
        try:
            n = int(tok)
        except ValueError:
            raise TableFormatError(f"malformed header: expected an order, got {tok!r}", line, col)
        if n < 1:
            raise TableFormatError(f"malformed header: order must be >= 1, got {n}", line, col)
        pos += 1
        need = n * n
        if len(tokens) - pos < need:
            have = len(tokens) - pos
            raise TableFormatError(
                f"row count mismatch: table of order {n} needs {need} cells, found {have}",
                line, col,
            )
        cells = np.empty((n, n), dtype=np.int64)
        for k in range(need):
            tok, tl, tc = tokens[pos + k]
            try:
                v = int(tok)
            except ValueError:
                raise TableFormatError(f"non-integer cell {tok!r}", tl, tc)
            if not 0 <= v < n:
                raise TableFormatError(f"cell out of range: {v} not in 0..{n - 1}", tl, tc)
            cells[k // n, k % n] = v
        pos += need
        tables.append(CayleyTable(cells))
    return tables


def parse_table(text: str) -> CayleyTable:
    """Parse exactly one table from *text*."""
    tables = parse_tables(text)
    if not tables:
        raise TableFormatError("empty input: no table found", 1, 1)
    if len(tables) > 1:
        raise TableFormatError(f"expected one table, found {len(tables)}")
    return tables[0]


def is_latin(t: CayleyTable) -> bool:
    """True iff every row and every column is a permutation of 0..n-1."""
    n = t.order
    want = np.arange(n)
    return bool(
        np.all(np.sort(t.cells, axis=1) == want)
        and np.all(np.sort(t.cells, axis=0) == want[:, None])
    )


def identity_of(t: CayleyTable):
    """The two-sided identity element, or None if there is none."""
    n = t.order
    want = np.arange(n)
    for e in range(n):
        if np.array_equal(t.cells[e], want) and np.array_equal(t.cells[:, e], want):
            return e
    return None


def _require_latin(t, what):
    if not is_latin(t):
        raise ValueError(f"{what} requires a Latin table (a quasigroup)")


def translation(t: CayleyTable, x: int, side: str) -> tuple:
    """Translation map by x: left gives y -> x*y, right gives y -> y*x."""
    n = t.order
    if not 0 <= x < n:
        raise ValueError(f"element {x} out of range 0..{n - 1}")
    if side == LEFT:
        images = t.cells[x]
    elif side == RIGHT:
        images = t.cells[:, x]
    else:
        raise ValueError(f"side must be {LEFT!r} or {RIGHT!r}, got {side!r}")
    if len(set(images.tolist())) != n:
        raise ValueError(f"{side} translation by {x} is not bijective: table is not Latin")
    return tuple(int(v) for v in images)


def inverse_map(t: CayleyTable, side: str) -> tuple:
    """Inverse map of a loop: right sends x to the w with x*w = e, left to
    the w with w*x = e."""
    _require_latin(t, "inverse_map")
    e = identity_of(t)
    if e is None:
        raise ValueError("inverse_map undefined: table has no two-sided identity")
    if side == RIGHT:
        rows, cols = np.nonzero(t.cells == e)
        out = np.empty(t.order, dtype=np.int64)
        out[rows] = cols
    elif side == LEFT:
        rows, cols = np.nonzero(t.cells == e)
        out = np.empty(t.order, dtype=np.int64)
        out[cols] = rows
    else:
        raise ValueError(f"side must be {LEFT!r} or {RIGHT!r}, got {side!r}")
    return tuple(int(v) for v in out)


def left_division_table(t: CayleyTable) -> np.ndarray:
    """Array D with D[x, z] = the unique w satisfying x*w = z."""
    _require_latin(t, "left division")
    return np.argsort(t.cells, axis=1)


def right_division_table(t: CayleyTable) -> np.ndarray:
    """Array D with D[z, x] = the unique w satisfying w*x = z."""
    _require_latin(t, "right division")
    return np.argsort(t.cells, axis=0)


# permutations are plain tuples of images; application is postfix (x then p[x])

def identity_perm(n: int) -> tuple:
    return tuple(range(n))


def compose(f, g) -> tuple:
    """Apply f first, then g:  x -> g[f[x]]."""
    return tuple(g[v] for v in f)


def perm_inverse(p) -> tuple:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def is_perm(p, n: int) -> bool:
    return len(p) == n and sorted(p) == list(range(n))


# small standard loops, handy as fixtures and demo inputs

def cyclic(n: int) -> CayleyTable:
    """Cyclic group of order n: x*y = x+y mod n."""
    idx = np.arange(n)
    return CayleyTable((idx[:, None] + idx[None, :]) % n, name=f"C{n}")


def klein_four() -> CayleyTable:
    """Klein four-group: bitwise xor on {0,1,2,3}."""
    idx = np.arange(4)
    return CayleyTable(idx[:, None] ^ idx[None, :], name="V4")


def symmetric_3() -> CayleyTable:
    """Symmetric group on three points; elements are the six permutations
    of (0,1,2) in lexicographic order, product = apply left then right."""
    from itertools import permutations

    elems = sorted(permutations(range(3)))
    index = {p: i for i, p in enumerate(elems)}
    cells = [[index[compose(a, b)] for b in elems] for a in elems]
    return CayleyTable(cells, name="S3")
