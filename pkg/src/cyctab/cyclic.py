"""The cyclic descent map: phi, cDes, axiom checks, orbits and path invariants."""
from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .dynamics import demote, demotion_path, promote, promotion_path, pseudo_promotion_path
from .errors import ConnectedRibbonShape
from .rotation import rotate, rotate_inverse
from .shape import SkewShape, boundary_key, is_connected_ribbon
from .tableau import DescentSet, Tableau, descent_set, enumerate_syt, format_tableau


@lru_cache(maxsize=4096)
def _ribbon(shape: SkewShape) -> bool:
    return is_connected_ribbon(shape)


def require_cdm_shape(shape: SkewShape) -> None:
    if _ribbon(shape):
        raise ConnectedRibbonShape(f"{shape} is a connected ribbon; no cyclic descent map exists")


def phi(t: Tableau) -> Tableau:
    """Rotate southeast, promote, then undo a northwest rotation."""
    require_cdm_shape(t.shape)
    return rotate_inverse(promote(rotate(t, "SE")), "NW")


def phi_inverse(t: Tableau) -> Tableau:
    require_cdm_shape(t.shape)
    return rotate_inverse(demote(rotate(t, "NW")), "SE")


def phi_steps(t: Tableau) -> tuple[Tableau, Tableau, Tableau]:
    """The three intermediate tableaux (after Rot_SE, after promotion, final)."""
    require_cdm_shape(t.shape)
    a = rotate(t, "SE")
    b = promote(a)
    return a, b, rotate_inverse(b, "NW")


def _cdes_from(t: Tableau, image: Tableau) -> DescentSet:
    d = descent_set(t)
    pos = image.positions
    if image.n > 1 and pos[2][0] > pos[1][0]:
        return d | {t.n}
    return d


def cdes(t: Tableau) -> DescentSet:
    """Descent set of ``t`` plus n exactly when 1 is a descent of phi(t)."""
    return _cdes_from(t, phi(t))


def shift_set(s, n: int, by: int = 1) -> frozenset[int]:
    """Add ``by`` to each element modulo n, keeping representatives in 1..n."""
    return frozenset((x - 1 + by) % n + 1 for x in s)


@dataclass
class CdmReport:
    shape: SkewShape
    tableau_count: int = 0
    extension_ok: bool = True
    equivariance_ok: bool = True
    non_escher_ok: bool = True
    counterexamples: dict[str, Tableau] = field(default_factory=dict)
    fiber_multiset: dict[frozenset[int], int] = field(default_factory=dict)
    fibers_rotation_invariant: bool = True
    rejected: str | None = None

    @property
    def ok(self) -> bool:
        return self.rejected is None and self.extension_ok and self.equivariance_ok and self.non_escher_ok and self.fibers_rotation_invariant

    @property
    def counterexample(self) -> tuple[Tableau, str] | None:
        for axiom, t in self.counterexamples.items():
            return t, axiom
        return None


def cdes_table(shape: SkewShape) -> dict[Tableau, tuple[Tableau, DescentSet]]:
    """phi and cDes for every tableau of ``shape``."""
    require_cdm_shape(shape)
    out = {}
    for t in enumerate_syt(shape):
        image = phi(t)
        out[t] = (image, _cdes_from(t, image))
    return out


def verify_cdm(shape: SkewShape) -> CdmReport:
    """Check extension, equivariance and non-Escher over all of SYT(shape)."""
    rep = CdmReport(shape)
    if _ribbon(shape):
        rep.rejected = "connected ribbon"
        rep.extension_ok = rep.equivariance_ok = rep.non_escher_ok = False
        rep.fibers_rotation_invariant = False
        return rep
    n = shape.n
    table = cdes_table(shape)
    rep.tableau_count = len(table)
    full = frozenset(range(1, n + 1))

    def fail(axiom: str, t: Tableau) -> None:
        rep.counterexamples.setdefault(axiom, t)

    fibers: Counter = Counter()
    for t, (image, c) in table.items():
        fibers[c] += 1
        if c - {n} != descent_set(t):
            rep.extension_ok = False
            fail("extension", t)
        if table[image][1] != shift_set(c, n):
            rep.equivariance_ok = False
            fail("equivariance", t)
        if not c or c == full:
            rep.non_escher_ok = False
            fail("non-escher", t)
    rep.fiber_multiset = dict(fibers)
    rep.fibers_rotation_invariant = all(fibers.get(shift_set(j, n), 0) == k for j, k in fibers.items())
    return rep


def fiber_multiset(shape: SkewShape) -> dict[frozenset[int], int]:
    return dict(Counter(c for _, c in cdes_table(shape).values()))


@dataclass(frozen=True)
class OrbitSummary:
    representative: Tableau
    size: int
    cdes_period: int
    trajectory_digest: str


def sequence_period(seq: list) -> int:
    """Least p >= 1 with seq[i + p] == seq[i] cyclically."""
    m = len(seq)
    for p in range(1, m + 1):
        if m % p == 0 and all(seq[i] == seq[(i + p) % m] for i in range(m)):
            return p
    return m


def orbit(t: Tableau, limit: int | None = None) -> OrbitSummary:
    """Follow phi from ``t`` until it returns.

    ``cdes_period`` is the period of the sequence of cyclic descent sets along the
    orbit, compared as plain sets.
    """
    require_cdm_shape(t.shape)
    h = hashlib.sha256()
    seq = []
    cur = t
    while True:
        nxt = phi(cur)
        seq.append(_cdes_from(cur, nxt))
        h.update(format_tableau(cur).encode())
        h.update(b"\n")
        cur = nxt
        if cur == t:
            break
        if limit is not None and len(seq) >= limit:
            raise RuntimeError(f"orbit longer than {limit}")
    return OrbitSummary(t, len(seq), sequence_period(seq), h.hexdigest())


def orbits(shape: SkewShape) -> list[list[Tableau]]:
    """Partition SYT(shape) into phi-orbits, each starting at its least tableau."""
    table = cdes_table(shape)
    seen = set()
    out = []
    for t in table:
        if t in seen:
            continue
        cyc = [t]
        seen.add(t)
        cur = table[t][0]
        while cur != t:
            cyc.append(cur)
            seen.add(cur)
            cur = table[cur][0]
        out.append(cyc)
    return out


# -- path invariants ---------------------------------------------------------

def _sw(a, b, strict: bool) -> bool:
    """Whether corner ``a`` is (strictly) southwest of corner ``b`` along the boundary order."""
    ka, kb = boundary_key(a), boundary_key(b)
    return ka < kb if strict else ka <= kb


@dataclass
class PathLemmaReport:
    shape: SkewShape
    tableau_count: int = 0
    checked: Counter = field(default_factory=Counter)
    violations: Counter = field(default_factory=Counter)
    examples: dict[str, Tableau] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, name: str, good: bool, t: Tableau) -> None:
        self.checked[name] += 1
        if not good:
            self.violations[name] += 1
            self.examples.setdefault(name, t)


def _same_component(shape: SkewShape, a, b) -> bool:
    comp = shape.component_of
    return comp[a] == comp[b]


def _pseudo_lemmas(t: Tableau, se: Tableau, rep: PathLemmaReport) -> None:
    shape = t.shape
    nw = rotate(t, "NW")
    interior = shape.interior_corners("NW")
    for z in shape.exterior_corners("SE"):
        p_path = pseudo_promotion_path(t, z)
        p = p_path.cells
        rep.record("rotse-same-pseudo-path", pseudo_promotion_path(se, z).cells == p, t)
        q_path = pseudo_promotion_path(nw, z)
        q = q_path.cells
        u = next((i for i, c in enumerate(p) if c in interior), None)
        if u is None:
            good = p == q
        else:
            tail_p = set(p_path.steps()[u:])
            tail_q = set(q_path.steps()[u:])
            good = p[:u + 1] == q[:u + 1] and len(tail_p) <= 1 and len(tail_q) <= 1
        rep.record("rotnw-almost-same-pseudo-path", good, t)


def check_paths(t: Tableau, table: dict | None = None, rep: PathLemmaReport | None = None) -> PathLemmaReport:
    """Run every path invariant on one tableau."""
    shape = t.shape
    require_cdm_shape(shape)
    rep = rep or PathLemmaReport(shape)
    n = t.n
    get = (lambda s: table[s][0]) if table is not None else phi
    pos = t.positions
    des = descent_set(t)
    t1 = get(t)
    t2 = get(t1)
    se = rotate(t, "SE")
    se1 = rotate(t1, "SE")

    # sources of consecutive phi-promotion paths
    if n >= 2 and _same_component(shape, pos[n - 1], pos[n]) and (n - 1) in des:
        p1 = promotion_path(se)
        p2 = promotion_path(se1)
        first = p1.steps()[0] if len(p1) > 1 else None
        if first == "N":
            good = _sw(p2.source, p1.source, strict=False)
        elif first == "W":
            good = _sw(p2.source, p1.source, strict=True)
        else:
            good = False
        rep.record("pro-source-location", good, t)

    # sources of consecutive phi-inverse demotion paths
    if n >= 2 and _same_component(shape, pos[1], pos[2]) and 1 not in des:
        q1 = demotion_path(rotate(t, "NW"))
        q2 = demotion_path(rotate(phi_inverse(t), "NW"))
        first = q1.steps()[0] if len(q1) > 1 else None
        if first == "S":
            good = _sw(q2.source, q1.source, strict=True)
        elif first == "E":
            good = _sw(q2.source, q1.source, strict=False)
        else:
            good = False
        rep.record("dem-source-location", good, t)

    # destinations: P1 against the pseudo path of S2 in pro(Rot_SE(T))
    pos2 = t2.positions
    if n >= 2 and _same_component(shape, pos2[1], pos2[2]) and 1 not in descent_set(t2):
        p1 = promotion_path(se)
        s2 = promotion_path(se1).source
        tp = promote(se)
        p2p = pseudo_promotion_path(tp, s2)
        steps = p2p.steps()
        last = steps[-1] if steps else None
        if last == "N":
            good = _sw(p1.destination, p2p.destination, strict=True)
        elif last == "W":
            good = _sw(p1.destination, p2p.destination, strict=False)
        else:
            good = False
        rep.record("pro-dest-location", good, t)

    if n >= 2:
        rep.record("double-promotion", ((n - 1) in des) == (1 in descent_set(t2)), t)

    _pseudo_lemmas(t, se, rep)
    rep.tableau_count += 1
    return rep


def path_lemma_suite(shape: SkewShape) -> PathLemmaReport:
    require_cdm_shape(shape)
    table = cdes_table(shape)
    rep = PathLemmaReport(shape)
    for t in table:
        check_paths(t, table, rep)
    return rep


def component_labels(t: Tableau) -> list[frozenset[int]]:
    """Entry set of each connected component, southwest to northeast."""
    return [frozenset(t[c] for c in comp) for comp in t.shape.components]


__all__ = [
    "CdmReport", "OrbitSummary", "PathLemmaReport", "cdes", "cdes_table", "check_paths",
    "component_labels", "fiber_multiset", "orbit", "orbits", "path_lemma_suite", "phi",
    "phi_inverse", "phi_steps", "require_cdm_shape", "sequence_period", "shift_set", "verify_cdm",
]
