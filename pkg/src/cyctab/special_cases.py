"""Shape families with known cyclic descent maps, used as independent oracles."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .cyclic import cdes_table, phi_inverse, require_cdm_shape
from .dynamics import demote, promote
from .errors import WrongShapeClass
from .rotation import analyze, rotate
from .shape import SkewShape, enumerate_shapes, is_connected_ribbon, parse_shape
from .tableau import Tableau, descent_set, parse_tableau, transpose

# priority order; the first matching tag wins
TAGS = (
    "rectangle",
    "strip",
    "all_rect_components",
    "two_row_straight",
    "hook_plus_internal",
    "disconnected_ne_cell",
    "other",
)


@dataclass(frozen=True)
class ShapeClass:
    tag: str
    params: dict = field(default_factory=dict, hash=False, compare=False)


def _box(comp) -> tuple[int, int, int, int]:
    rows = [r for r, _ in comp]
    cols = [c for _, c in comp]
    return min(rows), max(rows), min(cols), max(cols)


def _is_rect(comp) -> bool:
    r0, r1, c0, c1 = _box(comp)
    return len(comp) == (r1 - r0 + 1) * (c1 - c0 + 1)


def _is_line(comp) -> bool:
    r0, r1, c0, c1 = _box(comp)
    return _is_rect(comp) and (r0 == r1 or c0 == c1)


def two_row_k(shape: SkewShape) -> int | None:
    """k when the shape is (n-k, k)/() with 2 <= k <= n/2."""
    if shape.mu or len(shape.lam) != 2:
        return None
    k = shape.lam[1]
    return k if 2 <= k <= shape.n / 2 else None


def hook_internal_k(shape: SkewShape) -> int | None:
    """k when the shape is (n-k, 2, 1^(k-2))/() with a first row of length at least 2."""
    lam = shape.lam
    if shape.mu or len(lam) < 2 or lam[1] != 2 or lam[0] < 2 or any(x != 1 for x in lam[2:]):
        return None
    return len(lam)


def _ne_cell(shape: SkewShape) -> bool:
    comps = shape.components
    if len(comps) != 2 or len(comps[1]) != 1:
        return False
    # the southwest part must be a straight shape: no cells of mu in its rows
    return all(shape.mu_at(r) == 0 for r, _ in comps[0])


def classify(shape: SkewShape) -> ShapeClass:
    comps = shape.components
    if len(comps) == 1 and _is_rect(comps[0]) and shape.num_rows > 1 and shape.num_cols > 1:
        return ShapeClass("rectangle", {"rows": shape.num_rows, "cols": shape.num_cols})
    if len(comps) > 1 and all(_is_line(c) for c in comps):
        return ShapeClass("strip", {"components": len(comps)})
    if len(comps) > 1 and all(_is_rect(c) for c in comps):
        return ShapeClass("all_rect_components", {"components": len(comps)})
    k = two_row_k(shape)
    if k is not None:
        return ShapeClass("two_row_straight", {"k": k})
    k = hook_internal_k(shape)
    if k is not None:
        return ShapeClass("hook_plus_internal", {"k": k})
    if _ne_cell(shape):
        return ShapeClass("disconnected_ne_cell", {"m": shape.n - 1})
    return ShapeClass("other")


# -- two rows ----------------------------------------------------------------

def cdes_two_row(t: Tableau) -> bool:
    """Whether n is a cyclic descent under the two-row rule."""
    shape = t.shape
    if shape.mu or len(shape.lam) != 2 or shape.lam[1] < 2:
        raise WrongShapeClass(f"{shape} is not a two-row straight shape with k >= 2")
    k = shape.lam[1]
    if t[(2, k)] != t[(2, k - 1)] + 1:
        return False
    return all(t[(2, i - 1)] > t[(1, i)] for i in range(2, k))


def two_row_endpoint_is_corner(t: Tableau) -> bool:
    """Predicted answer to: is the southeast rotation endpoint the cell (2, k)?"""
    k = t.shape.lam[1]
    return t[(2, k)] == t[(2, k - 1)] + 1 or (t[(2, k)] == t.n and t[(1, k)] == t[(2, k - 1)] + 1)


# -- hook plus internal cell --------------------------------------------------

def _require_hook(shape: SkewShape) -> int:
    k = hook_internal_k(shape)
    if k is None:
        raise WrongShapeClass(f"{shape} is not of the form (n-k, 2, 1^(k-2))")
    return k


def cdes_hook_internal(t: Tableau) -> bool:
    """n is a cyclic descent exactly when the entry T[2,2]-1 sits in the first column."""
    _require_hook(t.shape)
    return t.positions[t[(2, 2)] - 1][1] == 1


def _hook_cdes_set(t: Tableau) -> frozenset[int]:
    d = descent_set(t)
    return d | {t.n} if cdes_hook_internal(t) else d


def psi_hook_internal(t: Tableau) -> Tableau:
    """Inverse cyclic action on (n-k, 2, 1^(k-2)), built directly from the descent data."""
    k = _require_hook(t.shape)
    if 1 in descent_set(t):
        return transpose(psi_hook_internal(transpose(t)))
    n = t.n
    first_row = sorted(set(range(1, n + 1)) - _hook_cdes_set(t))
    a = t[(2, 2)] - 1
    r, c = t.positions[a]
    if r == 1:
        corner = a
    elif (r, c) != (k, 1):
        corner = t[(r + 1, c)] - 1
    else:
        corner = n
    rest = sorted(set(range(1, n + 1)) - set(first_row) - {corner})
    ent = {(1, j): v for j, v in enumerate(first_row, start=1)}
    ent[(2, 2)] = corner
    for i, v in enumerate(rest, start=2):
        ent[(i, 1)] = v
    return Tableau(t.shape, ent)


# -- the shape with a disconnected northeast cell -----------------------------

ER_SHAPE = "4,3,2/3"
ER_TABLEAU = ".,.,.,1/2,3,5/4,6"
ER_MAIN_IMAGE = ".,.,.,2/1,3,4/5,6"
ER_OTHER_IMAGE = ".,.,.,2/1,4,6/3,5"


# -- suite ---------------------------------------------------------------------

@dataclass
class CoincidenceReport:
    shape: SkewShape
    shape_class: ShapeClass
    checked: Counter = field(default_factory=Counter)
    violations: Counter = field(default_factory=Counter)
    examples: dict[str, Tableau] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, name: str, good: bool, t: Tableau | None = None) -> None:
        self.checked[name] += 1
        if not good:
            self.violations[name] += 1
            if t is not None:
                self.examples.setdefault(name, t)


def coincidence_suite(shape: SkewShape) -> CoincidenceReport:
    require_cdm_shape(shape)
    cls = classify(shape)
    rep = CoincidenceReport(shape, cls)
    n = shape.n
    table = cdes_table(shape)
    if cls.tag in ("rectangle", "strip", "all_rect_components"):
        for t, (image, c) in table.items():
            rep.record("rotations-trivial", rotate(t, "SE") == t and rotate(t, "NW") == t, t)
            rep.record("phi-is-promotion", image == promote(t), t)
            rep.record("cdes-via-demotion", (n in c) == ((n - 1) in descent_set(demote(t))), t)
    elif cls.tag == "two_row_straight":
        k = cls.params["k"]
        for t, (_, c) in table.items():
            rep.record("two-row-cdes", (n in c) == cdes_two_row(t), t)
            rep.record("two-row-endpoint", (analyze(t, "SE").endpoint == (2, k)) == two_row_endpoint_is_corner(t), t)
            rep.record("rotate-nw-trivial", rotate(t, "NW") == t, t)
    elif cls.tag == "hook_plus_internal":
        _add_hook_checks(rep, table, cls.params["k"])
    elif cls.tag == "disconnected_ne_cell":
        rep.notes.append("no coincidence expected with the single-cell construction")
        if shape == parse_shape(ER_SHAPE):
            t = parse_tableau(ER_TABLEAU)
            image, _ = table[t]
            rep.record("er-main-image", str(image) == ER_MAIN_IMAGE, t)
            rep.record("er-cdes-image", table[image][1] == frozenset({2, 4, 6}), t)
            rep.record("er-differs", str(image) != ER_OTHER_IMAGE, t)
    return rep


def _add_hook_checks(rep: CoincidenceReport, table: dict, k: int) -> None:
    n = rep.shape.n
    for t, (image, c) in table.items():
        rep.record("hook-cdes", (n in c) == cdes_hook_internal(t), t)
        rep.record("hook-cdes-size", len(c) == k, t)
        psi = psi_hook_internal(t)
        rep.record("psi-is-phi-inverse", psi == phi_inverse(t), t)
        rep.record("psi-phi-identity", psi_hook_internal(image) == t, t)
        if 1 not in descent_set(t):
            row = phi_inverse(t).rows()[0]
            rep.record("psi-first-row", row == sorted(set(range(1, n + 1)) - c), t)
        d = descent_set(t)
        if len(d) == k:
            row = t.rows()[0]
            rep.record("first-row-from-descents", sorted(row) == sorted(set(range(1, n + 1)) - {x + 1 for x in d}), t)


def family_shapes(n: int, tag: str) -> list[SkewShape]:
    return [s for s in enumerate_shapes(n) if not is_connected_ribbon(s) and classify(s).tag == tag]


__all__ = [
    "CoincidenceReport", "ShapeClass", "TAGS", "cdes_hook_internal", "cdes_two_row", "classify",
    "coincidence_suite", "family_shapes", "hook_internal_k", "psi_hook_internal", "two_row_endpoint_is_corner",
    "two_row_k",
]
