"""Skew shapes and their geometry.

Cells are ``(row, col)`` tuples, 1-based, with row 1 the northernmost row and
column 1 the westernmost.  Shapes are kept in canonical form: no empty rows and
no empty columns, so translated copies of the same diagram compare equal.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator, Literal

from .errors import (
    EmptyRow,
    MalformedShape,
    MuNotContained,
    NotAPartition,
    ShiftedColumns,
)

Cell = tuple[int, int]
Side = Literal["SE", "NW"]
SIDES: tuple[Side, Side] = ("SE", "NW")

EXTERIOR = "exterior-corner"
INTERIOR = "interior-corner"
PLAIN = "plain"

# diagonal neighbor that disqualifies a boundary cell, and the two orthogonal
# directions used for corner classification
_DIAG = {"SE": (1, 1), "NW": (-1, -1)}
_ORTHO = {"SE": ((1, 0), (0, 1)), "NW": ((-1, 0), (0, -1))}


def boundary_key(cell: Cell) -> tuple[int, int]:
    """Sort key realizing the southwest-to-northeast order along a boundary ribbon."""
    return (cell[1], -cell[0])


def _check_partition(parts: tuple[int, ...], name: str) -> None:
    for p in parts:
        if p < 1:
            raise NotAPartition(f"{name} has a non-positive part: {parts}")
    for a, b in zip(parts, parts[1:]):
        if b > a:
            raise NotAPartition(f"{name} is not weakly decreasing: {parts}")


def conjugate(parts: tuple[int, ...]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


@dataclass(frozen=True)
class SkewShape:
    """A canonical skew shape lambda/mu."""

    lam: tuple[int, ...]
    mu: tuple[int, ...] = ()
    _checked: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        lam = tuple(int(x) for x in self.lam)
        mu = tuple(int(x) for x in self.mu)
        while mu and mu[-1] == 0:
            mu = mu[:-1]
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        if not self._checked:
            validate_canonical(lam, mu)

    # -- basic data -------------------------------------------------------

    @property
    def num_rows(self) -> int:
        return len(self.lam)

    @property
    def num_cols(self) -> int:
        return self.lam[0] if self.lam else 0

    def mu_at(self, i: int) -> int:
        """Padded mu_i for a 1-based row index."""
        return self.mu[i - 1] if i <= len(self.mu) else 0

    @cached_property
    def cells(self) -> frozenset[Cell]:
        return frozenset(self.cell_list)

    @cached_property
    def cell_list(self) -> tuple[Cell, ...]:
        """Cells in row-reading order (row by row, west to east)."""
        return tuple(
            (i, j)
            for i in range(1, len(self.lam) + 1)
            for j in range(self.mu_at(i) + 1, self.lam[i - 1] + 1)
        )

    @cached_property
    def index(self) -> dict[Cell, int]:
        return {c: k for k, c in enumerate(self.cell_list)}

    @cached_property
    def n(self) -> int:
        return len(self.cell_list)

    def __contains__(self, cell) -> bool:
        return cell in self.cells

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return format_shape(self)

    # -- neighbors and components ----------------------------------------

    def neighbors(self, cell: Cell) -> Iterator[Cell]:
        r, c = cell
        for d in ((-1, 0), (1, 0), (0, -1), (0, 1)):
            nb = (r + d[0], c + d[1])
            if nb in self.cells:
                yield nb

    @cached_property
    def components(self) -> tuple[frozenset[Cell], ...]:
        """Edge-connected components, ordered southwest to northeast."""
        return tuple(connected_components(self.cells))

    @cached_property
    def component_of(self) -> dict[Cell, int]:
        return {c: k for k, comp in enumerate(self.components) for c in comp}

    # -- boundaries --------------------------------------------------------

    @lru_cache(maxsize=None)
    def boundary_cells(self, side: Side) -> frozenset[Cell]:
        dr, dc = _DIAG[side]
        return frozenset(c for c in self.cells if (c[0] + dr, c[1] + dc) not in self.cells)

    @lru_cache(maxsize=None)
    def exterior_corners(self, side: Side) -> frozenset[Cell]:
        return frozenset(c for c in self.boundary_cells(side) if self.classify_cell(c, side) == EXTERIOR)

    @lru_cache(maxsize=None)
    def interior_corners(self, side: Side) -> frozenset[Cell]:
        return frozenset(c for c in self.boundary_cells(side) if self.classify_cell(c, side) == INTERIOR)

    def classify_cell(self, cell: Cell, side: Side) -> str:
        present = sum((cell[0] + d[0], cell[1] + d[1]) in self.cells for d in _ORTHO[side])
        if present == 0:
            return EXTERIOR
        if present == 2:
            return INTERIOR
        return PLAIN

    def transpose(self) -> SkewShape:
        return self._transposed

    @cached_property
    def _transposed(self) -> SkewShape:
        return SkewShape(conjugate(self.lam), conjugate(self.mu), _checked=True)

    def reverse(self) -> SkewShape:
        """The shape rotated by 180 degrees."""
        return self._reversed

    @cached_property
    def _reversed(self) -> SkewShape:
        w = self.num_cols
        r = self.num_rows
        lam = tuple(w - self.mu_at(r - i) for i in range(r))
        mu = tuple(w - self.lam[r - 1 - i] for i in range(r))
        return SkewShape(lam, mu, _checked=True)

    def reverse_cell(self, cell: Cell) -> Cell:
        return (self.num_rows + 1 - cell[0], self.num_cols + 1 - cell[1])


def connected_components(cells) -> list[frozenset[Cell]]:
    """Edge-connected components of an arbitrary cell set, sorted southwest to northeast."""
    cells = set(cells)
    seen: set[Cell] = set()
    comps = []
    for start in sorted(cells, key=boundary_key):
        if start in seen:
            continue
        seen.add(start)
        stack = [start]
        comp = []
        while stack:
            r, c = stack.pop()
            comp.append((r, c))
            for nb in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        comps.append(frozenset(comp))
    comps.sort(key=lambda comp: min(boundary_key(c) for c in comp))
    return comps


@dataclass(frozen=True)
class BoundaryProfile:
    side: Side
    cells: tuple[tuple[Cell, ...], ...]  # one ordered tuple per component, SW to NE
    kind: dict[Cell, str]

    def corners(self, which: str) -> list[Cell]:
        return [c for comp in self.cells for c in comp if self.kind[c] == which]


def boundary(shape: SkewShape, side: Side) -> BoundaryProfile:
    """The southeast or northwest boundary, split by component, in ribbon order."""
    cells = shape.boundary_cells(side)
    per_comp = []
    for comp in shape.components:
        per_comp.append(tuple(sorted((c for c in comp if c in cells), key=boundary_key)))
    kind = {c: shape.classify_cell(c, side) for c in cells}
    return BoundaryProfile(side, tuple(per_comp), kind)


def has_square(shape: SkewShape) -> bool:
    cells = shape.cells
    return any(
        (r, c + 1) in cells and (r + 1, c) in cells and (r + 1, c + 1) in cells
        for r, c in cells
    )


def is_connected_ribbon(shape: SkewShape) -> bool:
    return len(shape.components) == 1 and not has_square(shape)


# -- canonical form and text I/O -------------------------------------------

def _is_skew(lam: tuple[int, ...], mu: tuple[int, ...]) -> None:
    _check_partition(lam, "lambda")
    _check_partition(mu, "mu")
    if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
        raise MuNotContained(f"mu={mu} is not contained in lambda={lam}")


def canonicalize(lam, mu=()) -> SkewShape:
    """Drop empty rows and empty columns of lambda/mu."""
    lam = tuple(lam)
    mu = tuple(mu)
    _is_skew(lam, mu)
    mu_p = mu + (0,) * (len(lam) - len(mu))
    cells = [(i, j) for i in range(len(lam)) for j in range(mu_p[i], lam[i])]
    if not cells:
        raise MalformedShape("the shape has no cells")
    rows = sorted({r for r, _ in cells})
    cols = sorted({c for _, c in cells})
    rmap = {r: k for k, r in enumerate(rows)}
    cmap = {c: k for k, c in enumerate(cols)}
    new_lam = [0] * len(rows)
    new_mu = [None] * len(rows)
    for r, c in cells:
        rr, cc = rmap[r], cmap[c]
        new_lam[rr] = max(new_lam[rr], cc + 1)
        new_mu[rr] = cc if new_mu[rr] is None else min(new_mu[rr], cc)
    return SkewShape(tuple(new_lam), tuple(new_mu), _checked=True)


def validate_canonical(lam: tuple[int, ...], mu: tuple[int, ...]) -> None:
    _is_skew(lam, mu)
    if not lam:
        raise MalformedShape("the shape has no cells")
    mu_p = mu + (0,) * (len(lam) - len(mu))
    for i, (l, m) in enumerate(zip(lam, mu_p), start=1):
        if l == m:
            raise EmptyRow(f"row {i} of {lam}/{mu} is empty", format_shape(canonicalize(lam, mu)))
    # consecutive row intervals must touch or overlap, otherwise a column is empty
    if mu_p[-1] != 0 or any(mu_p[i] > lam[i + 1] for i in range(len(lam) - 1)):
        raise ShiftedColumns(
            f"{lam}/{mu} has an empty column", format_shape(canonicalize(lam, mu))
        )


_SHAPE_RE = re.compile(r"^([1-9][0-9]*(?:,[1-9][0-9]*)*)/((?:[1-9][0-9]*(?:,[1-9][0-9]*)*)?)$")


def parse_shape(text: str) -> SkewShape:
    """Parse ``"LAMBDA/MU"``, e.g. ``"3,3,2/1,1"`` or ``"3/"``."""
    m = _SHAPE_RE.match(text)
    if m is None:
        raise MalformedShape(f"cannot parse shape {text!r}; expected e.g. '3,3,2/1,1' or '4/'")
    lam = tuple(int(x) for x in m.group(1).split(","))
    mu = tuple(int(x) for x in m.group(2).split(",")) if m.group(2) else ()
    return SkewShape(lam, mu)


def format_shape(shape: SkewShape) -> str:
    return ",".join(map(str, shape.lam)) + "/" + ",".join(map(str, shape.mu))


# -- enumeration -------------------------------------------------------------

def _compositions(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def _shapes_with_row_lengths(lengths: tuple[int, ...]) -> Iterator[SkewShape]:
    # build bottom-up: mu of the last row is 0 and each row above starts
    # somewhere in [mu_below, lam_below] so no column is left empty
    r = len(lengths)

    def rec(i, lam_rev, mu_rev):
        if i < 0:
            yield SkewShape(tuple(reversed(lam_rev)), tuple(reversed(mu_rev)), _checked=True)
            return
        mu_below, lam_below = mu_rev[-1], lam_rev[-1]
        for m in range(mu_below, lam_below + 1):
            l = m + lengths[i]
            if l >= lam_below:
                yield from rec(i - 1, lam_rev + [l], mu_rev + [m])

    yield from rec(r - 2, [lengths[-1]], [0])


@lru_cache(maxsize=None)
def _all_shapes(n: int) -> tuple[SkewShape, ...]:
    shapes = [s for comp in _compositions(n) for s in _shapes_with_row_lengths(comp)]
    shapes.sort(key=lambda s: (s.lam, s.mu))
    return tuple(shapes)


def enumerate_shapes(n: int, filter: str = "all") -> list[SkewShape]:
    """All canonical skew shapes with ``n`` cells; ``filter='non-ribbon'`` drops connected ribbons."""
    if n < 1:
        raise ValueError("n must be positive")
    shapes = list(_all_shapes(n))
    if filter == "non-ribbon":
        shapes = [s for s in shapes if not is_connected_ribbon(s)]
    elif filter != "all":
        raise ValueError(f"unknown filter {filter!r}")
    return shapes
