import pytest
from hypothesis import given

import worked
from conftest import tableaux
from cyctab.errors import NotExteriorCorner
from cyctab.rotation import (
    analyze,
    balance_points,
    candidate_set,
    is_unimodal,
    non_interference,
    rotate,
    rotate_inverse,
)
from cyctab.shape import boundary_key, enumerate_shapes, parse_shape
from cyctab.tableau import descent_set, enumerate_syt, parse_tableau, reverse, transpose

SIDES = ("SE", "NW")


def literal_candidates(t, side):
    """Grow k from 1 and re-test the whole set each time."""
    n = t.n
    best = frozenset()
    for k in range(1, n + 1):
        s = frozenset(range(n - k + 1, n + 1)) if side == "SE" else frozenset(range(1, k + 1))
        if not is_unimodal(t, s, side):
            break
        best = s
    return best


def test_rotse_example():
    t = parse_tableau(worked.ROT_T)
    a = analyze(t, "SE")
    assert a.candidate_set == frozenset(range(10, 16))
    assert a.endpoint == t.position_of(11) == (2, 4)
    assert a.min_or_max_cell == t.position_of(10)
    assert str(rotate(t, "SE")) == worked.ROT_IMAGE


def test_rotse_fixed_example():
    t = parse_tableau(worked.ROT_FIXED)
    a = analyze(t, "SE")
    assert a.candidate_set == frozenset(range(11, 16))
    assert a.endpoint == t.position_of(15)
    assert rotate(t, "SE") == t


def test_single_exterior_corner_shapes():
    for text in ("3,3/", "4,4,4/3,1"):
        shape = parse_shape(text)
        (corner,) = shape.exterior_corners("SE")
        for t in enumerate_syt(shape):
            assert analyze(t, "SE").endpoint == corner
            assert rotate(t, "SE") == t
    assert parse_shape("3,3/").exterior_corners("SE") == {(2, 3)}


def test_is_unimodal_examples():
    t = parse_tableau(worked.ROT_T)
    assert is_unimodal(t, range(10, 16), "SE")
    assert not is_unimodal(t, range(9, 16), "SE")
    assert is_unimodal(t, {15}, "SE")
    assert is_unimodal(t, set(), "SE")


def test_theta_examples():
    for before, after in (worked.THETA_SW, worked.THETA_NE):
        r = parse_tableau(before)
        assert str(rotate_inverse(r, "SE")) == after
        assert rotate(parse_tableau(after), "SE") == r


def test_phi_chain_rotations():
    t, se, pro, out = (parse_tableau(x) for x in worked.PHI_CHAIN)
    assert rotate(t, "SE") == se
    assert rotate_inverse(pro, "NW") == out


@pytest.mark.parametrize("tab,cen,sw,ne", worked.DECOMPOSITIONS)
def test_decomposition_examples(tab, cen, sw, ne):
    t = parse_tableau(tab)
    a = analyze(t, "SE")

    def entries(cells):
        return {t[c] for c in cells}

    assert entries(a.central) == cen
    assert sorted(map(sorted, map(entries, a.southwest))) == sorted(map(sorted, sw))
    assert sorted(map(sorted, map(entries, a.northeast))) == sorted(map(sorted, ne))


def _hook_at(cells, y, side):
    """Whether ``cells`` is a hook whose corner is ``y``: a row and a column leaving y
    eastward/southward (SE) or westward/northward (NW)."""
    sign = 1 if side == "SE" else -1
    for r, c in cells:
        if r == y[0]:
            if sign * (c - y[1]) < 0:
                return False
        elif c == y[1]:
            if sign * (r - y[0]) < 0:
                return False
        else:
            return False
    rows = sorted(c for r, c in cells if r == y[0])
    cols = sorted(r for r, c in cells if c == y[1])
    return rows == list(range(rows[0], rows[-1] + 1)) and cols == list(range(cols[0], cols[-1] + 1))


def _is_column(comp):
    return len({c for _, c in comp}) == 1


def _is_row(comp):
    return len({r for r, _ in comp}) == 1


def check_analysis(t, side):
    a = analyze(t, side)
    n = t.n
    rc = a.candidate_set
    # the incremental candidate set equals the literal maximal-k definition
    assert rc == literal_candidates(t, side)
    k = len(rc)
    assert rc == (frozenset(range(n - k + 1, n + 1)) if side == "SE" else frozenset(range(1, k + 1)))
    assert a.candidate_cells == {t.position_of(x) for x in rc}
    y = a.min_or_max_cell
    assert y == t.position_of(min(rc) if side == "SE" else max(rc))
    assert a.endpoint in a.candidate_cells
    assert a.endpoint in t.shape.exterior_corners(side)
    assert a.endpoint[0] == y[0] or a.endpoint[1] == y[1]
    # central block is a hook at Y holding X; the others are columns (SW) and rows (NE)
    # for SE, and the other way round for NW
    assert y in a.central and a.endpoint in a.central
    assert _hook_at(a.central, y, side)
    sw_ok, ne_ok = (_is_column, _is_row) if side == "SE" else (_is_row, _is_column)
    assert all(sw_ok(c) for c in a.southwest)
    assert all(ne_ok(c) for c in a.northeast)
    ky = boundary_key(y)
    assert all(boundary_key(c) < ky for comp in a.southwest for c in comp)
    assert all(boundary_key(c) > ky for comp in a.northeast for c in comp)
    assert a.central | frozenset().union(*a.southwest, *a.northeast) == a.candidate_cells
    cells = a.candidate_cells
    if side == "SE":
        # no cell has both its northern and western neighbour in Rp_SE
        for r, c in t.shape.cells | cells:
            assert not ((r - 1, c) in cells and (r, c - 1) in cells)
    else:
        interior = t.shape.interior_corners("NW")
        for r, c in t.shape.cells:
            if (r, c) in interior:
                continue
            assert not ((r - 1, c) in cells and (r, c - 1) in cells)
    return a


def check_rotation(t, side):
    a = check_analysis(t, side)
    r = rotate(t, side)
    n = t.n
    assert r.shape == t.shape
    # standard, and only candidate entries move
    type(t)(r.shape, r.word)
    for cell in t.shape.cells - a.candidate_cells:
        assert r[cell] == t[cell]
    assert {r[c] for c in a.candidate_cells} == a.candidate_set
    assert rotate_inverse(r, side) == t
    assert rotate(rotate_inverse(t, side), side) == t
    keep = range(1, n - 1) if side == "SE" else range(2, n)
    d, dr = descent_set(t), descent_set(r)
    assert {i for i in d if i in keep} == {i for i in dr if i in keep}
    return r


@pytest.mark.parametrize("n", range(1, 7))
def test_rotation_exhaustive(n):
    for shape in enumerate_shapes(n):
        syt = enumerate_syt(shape)
        for side in SIDES:
            images = {check_rotation(t, side) for t in syt}
            assert images == set(syt)


@given(tableaux(min_n=7, max_n=9))
def test_rotation_random(t):
    for side in SIDES:
        check_rotation(t, side)


@pytest.mark.parametrize("n", range(1, 7))
def test_symmetry_identities(n):
    for shape in enumerate_shapes(n):
        for t in enumerate_syt(shape):
            se, nw = rotate(t, "SE"), rotate(t, "NW")
            tt, tr = transpose(t), reverse(t)
            assert rotate(tt, "SE") == transpose(se)
            assert rotate(tt, "NW") == transpose(nw)
            assert rotate(tr, "SE") == reverse(nw)
            assert rotate(tr, "NW") == reverse(se)


def test_candidate_growth_matches_literal_sampled():
    for shape in enumerate_shapes(7)[::11]:
        for t in enumerate_syt(shape)[::7]:
            for side in SIDES:
                assert candidate_set(t, side) == literal_candidates(t, side)


def balance_oracle(shape, z):
    """Northern point: the first cell due north of z with an eastern neighbour, else the top
    of z's column.  Western point: the first cell due west with a southern neighbour, else
    the west end of z's row."""
    r, c = z
    north = z
    while (north[0] - 1, c) in shape:
        north = (north[0] - 1, c)
        if (north[0], c + 1) in shape:
            break
    west = z
    while (r, west[1] - 1) in shape:
        west = (r, west[1] - 1)
        if (r + 1, west[1]) in shape:
            break
    return north, west


def test_balance_point_examples():
    hook = parse_shape("3,1/")
    assert balance_points(hook, (2, 1))[0] == (1, 1)
    assert balance_points(hook, (1, 3))[1] == (1, 1)
    assert balance_points(parse_shape("2,2/"), (2, 2)) == ((1, 2), (2, 1))
    rot_shape = parse_tableau(worked.ROT_T).shape
    assert balance_points(rot_shape, (2, 4)) == ((1, 4), (2, 2))


def test_balance_points_against_oracle():
    for n in range(1, 8):
        for shape in enumerate_shapes(n):
            for z in shape.exterior_corners("SE"):
                assert balance_points(shape, z) == balance_oracle(shape, z)


def test_balance_points_nw_by_reversal():
    for n in range(1, 7):
        for shape in enumerate_shapes(n):
            rc = shape.reverse_cell
            for z in shape.exterior_corners("NW"):
                south, east = balance_points(shape, z, "NW")
                assert (rc(south), rc(east)) == balance_points(shape.reverse(), rc(z))


def test_balance_points_reject_non_corner():
    with pytest.raises(NotExteriorCorner):
        balance_points(parse_shape("2,2/"), (1, 1))


def test_ribbon_interference():
    rep = non_interference(parse_tableau(worked.RIBBON_T))
    assert not rep.disjoint
    assert rep.overlap == {3, 4, 5}
    t = parse_tableau(worked.RIBBON_T)
    assert candidate_set(t, "NW") == {1, 2, 3, 4, 5}
    assert candidate_set(t, "SE") == {3, 4, 5, 6, 7}


@pytest.mark.parametrize("n", range(1, 7))
def test_non_interference_exhaustive(n):
    for shape in enumerate_shapes(n, "non-ribbon"):
        for t in enumerate_syt(shape):
            rep = non_interference(t)
            assert rep.disjoint and rep.stable and not rep.overlap


def test_different_components_are_disjoint():
    for shape in enumerate_shapes(6):
        if len(shape.components) < 2:
            continue
        comp = shape.component_of
        for t in enumerate_syt(shape):
            if comp[t.position_of(1)] != comp[t.position_of(t.n)]:
                assert non_interference(t).disjoint


def test_rotated_cells_runs_from_anchor_to_endpoint():
    t = parse_tableau(worked.ROT_T)
    a = analyze(t, "SE")
    cells = a.rotated_cells
    assert cells[0] == t.position_of(15) and cells[-1] == a.endpoint
    assert [t[c] for c in cells] == [15, 14, 10, 11]
