"""Standard Young tableaux on skew shapes."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Literal, Mapping

from .errors import MalformedTableau, NotStandard, ShapeMismatch
from .shape import Cell, SkewShape

DescentSet = frozenset[int]
SymmetryKind = Literal["transpose", "reverse", "reverse_transpose"]


class Tableau:
    """A standard filling of a :class:`SkewShape` with ``1..n``.

    ``word`` lists the entries in the shape's row-reading order.  Instances are
    immutable and hashable; equality is entrywise on identical shapes.
    """

    __slots__ = ("shape", "word", "_pos", "_hash")

    def __init__(self, shape: SkewShape, entries: Mapping[Cell, int] | Iterable[int], check: bool = True):
        if isinstance(entries, Mapping):
            if set(entries) != shape.cells:
                raise ShapeMismatch("filled cells do not match the shape")
            word = tuple(entries[c] for c in shape.cell_list)
        else:
            word = tuple(entries)
            if len(word) != shape.n:
                raise ShapeMismatch(f"expected {shape.n} entries, got {len(word)}")
        self.shape = shape
        self.word = word
        self._pos = None
        self._hash = None
        if check:
            check_standard(self)

    @classmethod
    def _raw(cls, shape: SkewShape, ent: Mapping[Cell, int]) -> Tableau:
        t = cls.__new__(cls)
        t.shape = shape
        t.word = tuple(ent[c] for c in shape.cell_list)
        t._pos = None
        t._hash = None
        return t

    @property
    def n(self) -> int:
        return len(self.word)

    def __getitem__(self, cell: Cell) -> int:
        return self.word[self.shape.index[cell]]

    def entry_of(self, cell: Cell) -> int:
        return self[cell]

    @property
    def positions(self) -> tuple:
        """``positions[x]`` is the cell holding ``x``; index 0 is unused."""
        if self._pos is None:
            pos = [None] * (self.n + 1)
            for c, v in zip(self.shape.cell_list, self.word):
                pos[v] = c
            self._pos = tuple(pos)
        return self._pos

    def position_of(self, x: int) -> Cell:
        return self.positions[x]

    def entries(self) -> dict[Cell, int]:
        return dict(zip(self.shape.cell_list, self.word))

    def rows(self) -> list[list[int | None]]:
        """Row lists with ``None`` for the cells of mu."""
        out = []
        k = 0
        for i, l in enumerate(self.shape.lam, start=1):
            m = self.shape.mu_at(i)
            out.append([None] * m + list(self.word[k:k + l - m]))
            k += l - m
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tableau):
            return NotImplemented
        return self.shape == other.shape and self.word == other.word

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shape, self.word))
        return self._hash

    def __repr__(self) -> str:
        return f"Tableau({format_tableau(self)!r})"

    def __str__(self) -> str:
        return format_tableau(self)


def check_standard(t: Tableau) -> None:
    n = t.n
    if sorted(t.word) != list(range(1, n + 1)):
        raise NotStandard(f"entries are not a permutation of 1..{n}")
    ent = t.entries()
    for (r, c), v in ent.items():
        east = ent.get((r, c + 1))
        if east is not None and east < v:
            raise NotStandard(f"row decreases between {(r, c)} and {(r, c + 1)}", ((r, c), (r, c + 1)))
        south = ent.get((r + 1, c))
        if south is not None and south < v:
            raise NotStandard(f"column decreases between {(r, c)} and {(r + 1, c)}", ((r, c), (r + 1, c)))


def is_standard(shape: SkewShape, ent: Mapping[Cell, int]) -> bool:
    try:
        Tableau(shape, ent)
    except (NotStandard, ShapeMismatch):
        return False
    return True


def descent_set(t: Tableau) -> DescentSet:
    pos = t.positions
    return frozenset(i for i in range(1, t.n) if pos[i + 1][0] > pos[i][0])


@lru_cache(maxsize=4096)
def _gather(shape: SkewShape, kind: str) -> tuple[SkewShape, tuple[int, ...]]:
    """Target shape and, for each of its cells in reading order, the source index."""
    if kind == "transpose":
        target = shape.transpose()
        src = [(c, r) for r, c in target.cell_list]
    else:
        target = shape.reverse()
        src = [target.reverse_cell(c) for c in target.cell_list]
    return target, tuple(shape.index[c] for c in src)


def _from_word(shape: SkewShape, word: tuple[int, ...]) -> Tableau:
    t = Tableau.__new__(Tableau)
    t.shape = shape
    t.word = word
    t._pos = None
    t._hash = None
    return t


def symmetry(t: Tableau, kind: SymmetryKind) -> Tableau:
    """Transpose, reverse (180 degree rotation with i -> n+1-i), or both."""
    if kind == "transpose":
        shape, idx = _gather(t.shape, kind)
        w = t.word
        return _from_word(shape, tuple(w[i] for i in idx))
    if kind == "reverse":
        shape, idx = _gather(t.shape, kind)
        w = t.word
        m = t.n + 1
        return _from_word(shape, tuple(m - w[i] for i in idx))
    if kind == "reverse_transpose":
        return symmetry(symmetry(t, "reverse"), "transpose")
    raise ValueError(f"unknown symmetry {kind!r}")


def transpose(t: Tableau) -> Tableau:
    return symmetry(t, "transpose")


def reverse(t: Tableau) -> Tableau:
    return symmetry(t, "reverse")


@lru_cache(maxsize=4096)
def _syt_tuple(shape: SkewShape) -> tuple[Tableau, ...]:
    cells = shape.cells
    remaining = set(cells)
    ent: dict[Cell, int] = {}
    out = []

    def removable(cell):
        r, c = cell
        return (r + 1, c) not in remaining and (r, c + 1) not in remaining

    def place(m):
        if m == 0:
            out.append(Tableau._raw(shape, ent))
            return
        for cell in [c for c in remaining if removable(c)]:
            remaining.discard(cell)
            ent[cell] = m
            place(m - 1)
            remaining.add(cell)
        return

    place(shape.n)
    out.sort(key=lambda t: t.word)
    return tuple(out)


def enumerate_syt(shape: SkewShape) -> list[Tableau]:
    """Every standard tableau of ``shape``, ordered lexicographically by row-reading word."""
    return list(_syt_tuple(shape))


# -- text and structured I/O -----------------------------------------------

def parse_tableau(text: str, shape: SkewShape | None = None) -> Tableau:
    """Parse ``".,2,4/.,3,5/1,6"``: rows split by ``/``, ``.`` marks cells of mu."""
    if not text or any(ch.isspace() for ch in text):
        raise MalformedTableau(f"cannot parse tableau {text!r}")
    lam, mu, ent = [], [], {}
    for i, row in enumerate(text.split("/"), start=1):
        tokens = row.split(",")
        if row == "" or any(tok == "" for tok in tokens):
            raise MalformedTableau(f"row {i} of {text!r} is malformed")
        m = 0
        while m < len(tokens) and tokens[m] == ".":
            m += 1
        for j, tok in enumerate(tokens[m:], start=m + 1):
            if not tok.isdigit():
                raise MalformedTableau(f"bad entry {tok!r} in row {i}; '.' may only prefix a row")
            ent[(i, j)] = int(tok)
        lam.append(len(tokens))
        mu.append(m)
    try:
        parsed_shape = SkewShape(tuple(lam), tuple(mu))
    except ValueError as exc:
        raise MalformedTableau(f"tableau {text!r} does not have a canonical skew shape: {exc}") from exc
    if shape is not None and shape != parsed_shape:
        raise ShapeMismatch(f"tableau has shape {parsed_shape}, expected {shape}")
    return Tableau(parsed_shape, ent)


def format_tableau(t: Tableau) -> str:
    return "/".join(",".join("." if v is None else str(v) for v in row) for row in t.rows())


def render(t: Tableau) -> str:
    """ASCII drawing: entries right-aligned in fixed-width columns, cells of mu blank."""
    width = len(str(t.n))
    lines = []
    for row in t.rows():
        lines.append(" ".join(" " * width if v is None else str(v).rjust(width) for v in row).rstrip())
    return "\n".join(lines)


def to_record(t: Tableau) -> dict:
    return {
        "lambda": list(t.shape.lam),
        "mu": list(t.shape.mu),
        "rows": [[0 if v is None else v for v in row] for row in t.rows()],
    }


def from_record(rec: Mapping) -> Tableau:
    shape = SkewShape(tuple(rec["lambda"]), tuple(rec["mu"]))
    ent = {}
    for i, row in enumerate(rec["rows"], start=1):
        for j, v in enumerate(row, start=1):
            if v:
                ent[(i, j)] = v
    return Tableau(shape, ent)

