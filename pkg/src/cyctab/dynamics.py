"""Promotion, demotion and the paths traced by the migrating entry."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .errors import NotExteriorCorner
from .shape import Cell
from .tableau import Tableau

PathKind = Literal["promotion", "demotion", "pseudo"]


@dataclass(frozen=True)
class Path:
    kind: PathKind
    cells: tuple[Cell, ...]

    @property
    def source(self) -> Cell:
        return self.cells[0]

    @property
    def destination(self) -> Cell:
        return self.cells[-1]

    def steps(self) -> list[str]:
        """Compass direction of each step: 'N', 'S', 'E' or 'W'."""
        names = {(-1, 0): "N", (1, 0): "S", (0, 1): "E", (0, -1): "W"}
        return [names[(b[0] - a[0], b[1] - a[1])] for a, b in zip(self.cells, self.cells[1:])]

    def __len__(self) -> int:
        return len(self.cells)


def _promote(t: Tableau) -> tuple[dict[Cell, int], list[Cell]]:
    n = t.n
    ent = {c: (1 if v == n else v + 1) for c, v in t.entries().items()}
    cur = t.positions[n]
    path = [cur]
    while True:
        r, c = cur
        north = (r - 1, c)
        west = (r, c - 1)
        vn = ent.get(north, 0)
        vw = ent.get(west, 0)
        if vn == 0 and vw == 0:
            break
        nxt = north if vn > vw else west
        ent[cur], ent[nxt] = ent[nxt], 1
        cur = nxt
        path.append(cur)
    return ent, path


def _demote(t: Tableau) -> tuple[dict[Cell, int], list[Cell]]:
    n = t.n
    big = n + 1
    ent = {c: (n if v == 1 else v - 1) for c, v in t.entries().items()}
    cur = t.positions[1]
    path = [cur]
    while True:
        r, c = cur
        south = (r + 1, c)
        east = (r, c + 1)
        vs = ent.get(south, big)
        ve = ent.get(east, big)
        if vs == big and ve == big:
            break
        nxt = south if vs < ve else east
        ent[cur], ent[nxt] = ent[nxt], n
        cur = nxt
        path.append(cur)
    return ent, path


def promote(t: Tableau) -> Tableau:
    """Schuetzenberger promotion: n becomes 1 and slides northwest."""
    ent, _ = _promote(t)
    return Tableau._raw(t.shape, ent)


def demote(t: Tableau) -> Tableau:
    """Inverse of :func:`promote`: 1 becomes n and slides southeast."""
    ent, _ = _demote(t)
    return Tableau._raw(t.shape, ent)


def promotion_path(t: Tableau) -> Path:
    """Cells visited by the migrating entry while promoting ``t``, from pos(n) onward."""
    _, path = _promote(t)
    return Path("promotion", tuple(path))


def demotion_path(t: Tableau) -> Path:
    _, path = _demote(t)
    return Path("demotion", tuple(path))


def pseudo_promotion_path(t: Tableau, start: Cell) -> Path:
    """Walk from a southeast exterior corner to the larger of the north/west neighbors
    until reaching a northwest exterior corner."""
    shape = t.shape
    if start not in shape.exterior_corners("SE"):
        raise NotExteriorCorner(f"{start} is not a southeast exterior corner of {shape}")
    idx = shape.index
    word = t.word
    cur = start
    path = [cur]
    while True:
        r, c = cur
        north = (r - 1, c)
        west = (r, c - 1)
        vn = word[idx[north]] if north in idx else 0
        vw = word[idx[west]] if west in idx else 0
        if vn == 0 and vw == 0:
            break
        cur = north if vn > vw else west
        path.append(cur)
    return Path("pseudo", tuple(path))
