"""Southeast and northwest rotation and their inverses.

Both sides share one implementation.  A side is described by a small table:
which diagonal defines its boundary, which orthogonal directions lead to its
exterior corners, which entry anchors the rotation (n for SE, 1 for NW) and a
rank function that turns the side's unimodality into min-unimodality.
"""
from __future__ import annotations

from bisect import bisect_left, insort
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .errors import NotExteriorCorner
from .shape import Cell, Side, SkewShape, boundary_key, connected_components
from .tableau import Tableau


@dataclass(frozen=True)
class _SideSpec:
    name: str
    # directions walked from Y to reach the endpoint (south/east for SE)
    forward: tuple[tuple[int, int], tuple[int, int]]
    # directions toward the neighbors checked when inverting (north/west for SE)
    back: tuple[tuple[int, int], tuple[int, int]]


_SPEC = {
    "SE": _SideSpec("SE", ((1, 0), (0, 1)), ((-1, 0), (0, -1))),
    "NW": _SideSpec("NW", ((-1, 0), (0, -1)), ((1, 0), (0, 1))),
}


def _anchor(n: int, side: Side) -> int:
    return n if side == "SE" else 1


def _order(n: int, side: Side) -> range:
    """Entries in the order they join the candidate set."""
    return range(n, 0, -1) if side == "SE" else range(1, n + 1)


def _rank(side: Side) -> Callable[[int], int]:
    return (lambda v: v) if side == "SE" else (lambda v: -v)


def _step(cell: Cell, d: tuple[int, int]) -> Cell:
    return (cell[0] + d[0], cell[1] + d[1])


def _min_unimodal(seq: list) -> bool:
    if not seq:
        return True
    i = seq.index(min(seq))
    return all(a > b for a, b in zip(seq[:i], seq[1:i + 1])) and all(
        a < b for a, b in zip(seq[i:], seq[i + 1:])
    )


def is_unimodal(t: Tableau, s, side: Side) -> bool:
    """True when the entries ``s`` sit on one component's ``side`` boundary and read
    min-unimodally (SE) or max-unimodally (NW) from southwest to northeast."""
    s = list(s)
    if not s:
        return True
    shape = t.shape
    bd = shape.boundary_cells(side)
    comp = shape.component_of
    pos = t.positions
    cells = [pos[x] for x in s]
    if any(c not in bd for c in cells):
        return False
    if len({comp[c] for c in cells}) != 1:
        return False
    rank = _rank(side)
    seq = [rank(t[c]) for c in sorted(cells, key=boundary_key)]
    return _min_unimodal(seq)


@dataclass(frozen=True)
class RotationAnalysis:
    side: Side
    anchor_cell: Cell
    candidate_set: frozenset[int]
    candidate_cells: frozenset[Cell]
    min_or_max_cell: Cell
    endpoint: Cell
    central: frozenset[Cell]
    southwest: tuple[frozenset[Cell], ...]
    northeast: tuple[frozenset[Cell], ...]

    @property
    def rotated_cells(self) -> tuple[Cell, ...]:
        """Cells of the candidate set between the anchor and the endpoint, anchor first."""
        cells = sorted(self.candidate_cells, key=boundary_key)
        a = cells.index(self.anchor_cell)
        x = cells.index(self.endpoint)
        return tuple(cells[a:x + 1] if a <= x else cells[x:a + 1][::-1])


class _Grower:
    """Grows a set one entry at a time, each new entry ranking below all before it.

    Such a set stays unimodal exactly when every newcomer lands next to the
    previous minimum in boundary order, so each step is a bisection instead of
    a full rescan.  :func:`is_unimodal` is the literal definition.
    """

    def __init__(self, t: Tableau, side: Side):
        self.pos = t.positions
        self.bd = t.shape.boundary_cells(side)
        self.comp = t.shape.component_of
        self.keys: list = []
        self.min_key = None
        self.component = None

    def fits(self, x: int) -> bool:
        c = self.pos[x]
        if c not in self.bd:
            return False
        if self.component is None:
            return True
        if self.comp[c] != self.component:
            return False
        k = boundary_key(c)
        i = bisect_left(self.keys, k)
        m = bisect_left(self.keys, self.min_key)
        return i == m or i == m + 1

    def add(self, x: int) -> None:
        c = self.pos[x]
        k = boundary_key(c)
        insort(self.keys, k)
        self.min_key = k
        self.component = self.comp[c]


def _candidate_set(t: Tableau, side: Side) -> list[int]:
    g = _Grower(t, side)
    grown: list[int] = []
    for x in _order(t.n, side):
        if not g.fits(x):
            break
        g.add(x)
        grown.append(x)
    return grown


def candidate_set(t: Tableau, side: Side) -> frozenset[int]:
    return frozenset(_candidate_set(t, side))


def _endpoint(shape: SkewShape, y: Cell, anchor_cell: Cell, side: Side) -> Cell:
    ends = []
    for d in _SPEC[side].forward:
        if _step(y, d) not in shape:
            continue
        cur = y
        while _step(cur, d) in shape:
            cur = _step(cur, d)
        ends.append(cur)
    if not ends:
        return y
    if len(ends) == 1:
        return ends[0]
    # interior corner: keep the end lying toward the anchor along the boundary
    ky, ka = boundary_key(y), boundary_key(anchor_cell)
    for e in ends:
        if (boundary_key(e) > ky) == (ka > ky):
            return e
    raise AssertionError("no endpoint between Y and the anchor")


def _split(cells: frozenset[Cell], y: Cell):
    comps = connected_components(cells)
    k = next(i for i, c in enumerate(comps) if y in c)
    return comps[k], tuple(comps[:k]), tuple(comps[k + 1:])


def analyze(t: Tableau, side: Side) -> RotationAnalysis:
    rc = _candidate_set(t, side)
    pos = t.positions
    cells = frozenset(pos[x] for x in rc)
    y = pos[rc[-1]]
    anchor_cell = pos[_anchor(t.n, side)]
    x = _endpoint(t.shape, y, anchor_cell, side)
    cen, sw, ne = _split(cells, y)
    return RotationAnalysis(side, anchor_cell, frozenset(rc), cells, y, x, cen, sw, ne)


def _shift(t: Tableau, chain: list[Cell]) -> Tableau:
    """The entry in chain[0] moves to chain[-1]; every other entry moves one cell back."""
    if len(chain) < 2:
        return t
    ent = t.entries()
    vals = [ent[c] for c in chain]
    ent[chain[-1]] = vals[0]
    for i in range(1, len(chain)):
        ent[chain[i - 1]] = vals[i]
    return Tableau._raw(t.shape, ent)


def rotate(t: Tableau, side: Side) -> Tableau:
    """Rot_SE or Rot_NW."""
    rc = _candidate_set(t, side)
    if len(rc) < 2:
        return t
    pos = t.positions
    anchor_cell = pos[rc[0]]
    x = _endpoint(t.shape, pos[rc[-1]], anchor_cell, side)
    cells = sorted((pos[v] for v in rc), key=boundary_key)
    a = cells.index(anchor_cell)
    e = cells.index(x)
    return _shift(t, cells[a:e + 1] if a <= e else cells[e:a + 1][::-1])


def balance_points(shape: SkewShape, z: Cell, side: Side = "SE") -> tuple[Cell, Cell]:
    """Farthest boundary cells reached from the exterior corner ``z`` walking against
    each orthogonal direction: (northern, western) for SE, (southern, eastern) for NW."""
    if z not in shape.exterior_corners(side):
        raise NotExteriorCorner(f"{z} is not a {side} exterior corner of {shape}")
    return _balance_points(shape, z, side)


@lru_cache(maxsize=65536)
def _balance_points(shape: SkewShape, z: Cell, side: Side) -> tuple[Cell, Cell]:
    bd = shape.boundary_cells(side)
    out = []
    for d in _SPEC[side].back:
        cur = z
        while _step(cur, d) in bd:
            cur = _step(cur, d)
        out.append(cur)
    return out[0], out[1]


def _balanced(cells_ranked: list[tuple[tuple[int, int], int]], w: Cell) -> bool:
    kw = boundary_key(w)
    ne = [r for k, r in cells_ranked if k >= kw]
    sw = [r for k, r in cells_ranked if k <= kw][::-1]
    return all(a < b for a, b in zip(ne, ne[1:])) and all(a < b for a, b in zip(sw, sw[1:]))


def _recover_candidates(r: Tableau, side: Side) -> list[int]:
    shape = r.shape
    pos = r.positions
    rank = _rank(side)
    order = _order(r.n, side)
    anchor = order[0]
    p = pos[anchor]
    comp = shape.component_of[p]
    nb = [_step(p, d) for d in _SPEC[side].back]
    bps = _balance_points(shape, p, side)
    g = _Grower(r, side)
    grown = [anchor]
    cells: list[Cell] = []
    for x in order[1:]:
        c = pos[x]
        if not g.fits(x) or shape.component_of[c] != comp:
            break
        cells.append(c)
        has = [b in cells for b in nb]
        if all(has):
            break
        ranked = sorted((boundary_key(w), rank(r[w])) for w in cells)
        need = [bps[i] for i in range(2) if has[i]] or list(bps)
        if not all(_balanced(ranked, w) for w in need):
            break
        g.add(x)
        grown.append(x)
    return grown


def rotate_inverse(t: Tableau, side: Side) -> Tableau:
    """Inverse of :func:`rotate`, recovering the candidate set from the rotated tableau."""
    rc = _recover_candidates(t, side)
    if len(rc) < 2:
        return t
    pos = t.positions
    cells = frozenset(pos[x] for x in rc)
    p = pos[rc[0]]
    m = pos[rc[-1]]
    comps = connected_components(cells)
    same = any(p in c and m in c for c in comps)
    m_is_sw = boundary_key(m) < boundary_key(p)
    go_sw = m_is_sw != same
    ordered = sorted(cells, key=boundary_key)
    i = ordered.index(p)
    chain = ordered[:i + 1][::-1] if go_sw else ordered[i:]
    return _shift(t, chain)


@dataclass(frozen=True)
class InterferenceReport:
    disjoint: bool
    overlap: frozenset[int]
    stable: bool


def non_interference(t: Tableau) -> InterferenceReport:
    se = candidate_set(t, "SE")
    nw = candidate_set(t, "NW")
    stable = candidate_set(rotate(t, "NW"), "SE") == se and candidate_set(rotate(t, "SE"), "NW") == nw
    return InterferenceReport(not (se & nw), se & nw, stable)

