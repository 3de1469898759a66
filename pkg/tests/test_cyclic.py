from collections import Counter

import pytest
from hypothesis import given, settings

import worked
from conftest import tableaux
from cyctab.cyclic import (
    cdes,
    cdes_table,
    check_paths,
    component_labels,
    fiber_multiset,
    orbit,
    orbits,
    path_lemma_suite,
    phi,
    phi_inverse,
    phi_steps,
    sequence_period,
    shift_set,
    verify_cdm,
)
from cyctab.dynamics import promote, promotion_path, pseudo_promotion_path
from cyctab.errors import ConnectedRibbonShape
from cyctab.rotation import analyze, rotate
from cyctab.shape import enumerate_shapes, parse_shape
from cyctab.tableau import descent_set, enumerate_syt, parse_tableau, reverse, transpose

SMALL = [s for n in range(2, 7) for s in enumerate_shapes(n, "non-ribbon")]


def test_phi_example_chain():
    t = parse_tableau(worked.PHI_CHAIN[0])
    steps = phi_steps(t)
    assert tuple(map(str, steps)) == worked.PHI_CHAIN[1:]
    assert phi(t) == steps[-1]
    assert str(phi_inverse(steps[-1])) == worked.PHI_CHAIN[0]


def test_orbit_figure_first_arrow():
    t = parse_tableau(worked.ORBIT_START)
    assert cdes(t) == {1, 2, 4}
    assert str(phi(t)) == worked.ORBIT_NEXT


def test_orbit_table_332_11():
    shape = parse_shape("3,3,2/1,1")
    cyc = orbits(shape)
    assert sorted(map(len, cyc)) == [3, 6, 6, 6]
    assert sum(map(len, cyc)) == 21
    table = cdes_table(shape)
    for c in cyc:
        for i, t in enumerate(c):
            assert table[t][0] == c[(i + 1) % len(c)]
            assert phi_inverse(phi(t)) == t


@pytest.mark.parametrize("name", sorted(worked.TWELVE))
def test_twelve_cell_phi_chains(name):
    ex = worked.TWELVE[name]
    t = parse_tableau(ex["chain"][0])
    assert tuple(map(str, phi_steps(t))) == ex["chain"][1:]
    if "second" in ex:
        t1 = phi(t)
        assert tuple(map(str, phi_steps(t1))) == ex["second"]
        rot = rotate(t1, "SE")
        assert tuple(rot[c] for c in promotion_path(rot).cells) == ex["second_path"]


def test_pro_dest_pseudo_paths():
    for ex, last in ((worked.DEST_NORTH, "N"), (worked.DEST_WEST, "W")):
        t = parse_tableau(ex["chain"][0])
        tp = parse_tableau(ex["chain"][2])
        start = analyze(phi(t), "SE").endpoint
        p = pseudo_promotion_path(tp, start)
        assert tuple(tp[c] for c in p.cells) == ex["pseudo_path"]
        assert p.steps()[-1] == last


def test_source_location_first_steps():
    for ex, first in ((worked.SOURCE_NORTH, "N"), (worked.SOURCE_WEST, "W")):
        rot = parse_tableau(ex["chain"][1])
        assert promotion_path(rot).steps()[0] == first
        rep = check_paths(parse_tableau(ex["chain"][0]))
        assert rep.ok and rep.checked["pro-source-location"] == 1


def test_phi_squared_example():
    t = parse_tableau(worked.SOURCE_NORTH["chain"][0])
    assert str(phi(phi(t))) == ".,3,4,8/1,5,7,12/2,6,9/10,11"


def test_rectangle_fibers():
    shape = parse_shape("3,3/")
    fib = fiber_multiset(shape)
    want = {frozenset(s): 1 for s in ({1, 4}, {2, 5}, {3, 6}, {1, 3, 5}, {2, 4, 6})}
    assert fib == want
    assert cdes(parse_tableau("1,2,3/4,5,6")) == {3, 6}
    rep = verify_cdm(shape)
    assert rep.ok and rep.tableau_count == 5 and rep.fibers_rotation_invariant


def test_verify_332_11():
    rep = verify_cdm(parse_shape("3,3,2/1,1"))
    assert rep.ok and rep.tableau_count == 21
    assert rep.counterexample is None


def test_ribbon_rejected():
    shape = parse_shape("4/")
    rep = verify_cdm(shape)
    assert rep.rejected and not rep.ok and rep.tableau_count == 0
    with pytest.raises(ConnectedRibbonShape):
        phi(parse_tableau("1,2,3,4"))
    with pytest.raises(ConnectedRibbonShape):
        cdes(parse_tableau(worked.RIBBON_T))
    with pytest.raises(ConnectedRibbonShape):
        orbit(parse_tableau("1,2/3"))


def test_er_image():
    t = parse_tableau(".,.,.,1/2,3,5/4,6")
    image = phi(t)
    assert str(image) == ".,.,.,2/1,3,4/5,6"
    assert cdes(image) == {2, 4, 6}


def test_shift_set():
    assert shift_set({1, 4}, 6) == {2, 5}
    assert shift_set({6}, 6) == {1}
    assert shift_set({1, 2}, 5, by=-1) == {5, 1}


def test_sequence_period():
    assert sequence_period([1, 2, 1, 2]) == 2
    assert sequence_period([1, 2, 3]) == 3
    assert sequence_period(["a"]) == 1
    assert sequence_period([1, 1, 2, 1, 1, 2]) == 3


def test_orbit_examples():
    o = orbit(parse_tableau(worked.NOT_ZN))
    assert o.size == 20
    o = orbit(parse_tableau(worked.PERIOD_T))
    assert (o.size, o.cdes_period) == (6, 3)
    assert len(o.trajectory_digest) == 64


def test_orbit_limit():
    with pytest.raises(RuntimeError):
        orbit(parse_tableau(worked.NOT_ZN), limit=5)


@pytest.mark.parametrize("shape", SMALL, ids=str)
def test_axioms_small(shape):
    rep = verify_cdm(shape)
    assert rep.ok, rep.counterexamples


def _check_cdes_properties(t):
    n = t.n
    image = phi(t)
    c, ci = cdes(t), cdes(image)
    assert c - {n} == descent_set(t)
    for i in range(1, n + 1):
        assert (i in c) == (i % n + 1 in ci)
    assert 1 <= len(c) <= n - 1
    labels, moved = component_labels(t), component_labels(image)
    assert [shift_set(j, n) for j in labels] == moved
    assert phi(transpose(t)) == transpose(image)
    assert phi_inverse(reverse(t)) == reverse(image)
    assert phi_inverse(image) == t


@pytest.mark.parametrize("n", range(2, 7))
def test_cdes_properties_exhaustive(n):
    for shape in enumerate_shapes(n, "non-ribbon"):
        for t in enumerate_syt(shape):
            _check_cdes_properties(t)


@settings(max_examples=60, deadline=None)
@given(tableaux(min_n=7, max_n=9, non_ribbon=True))
def test_cdes_properties_random(t):
    _check_cdes_properties(t)


@settings(max_examples=25, deadline=None)
@given(tableaux(min_n=4, max_n=8, non_ribbon=True))
def test_orbit_properties(t):
    o = orbit(t)
    cur = t
    for _ in range(o.size):
        cur = phi(cur)
    assert cur == t
    assert orbit(phi(t)).size == o.size
    assert o.size % o.cdes_period == 0


@pytest.mark.parametrize("n", range(2, 7))
def test_fibers_rotation_invariant(n):
    for shape in enumerate_shapes(n, "non-ribbon"):
        fib = Counter(fiber_multiset(shape))
        for j, k in fib.items():
            assert fib[shift_set(j, n)] == k
        assert sum(fib.values()) == len(enumerate_syt(shape))


def test_path_suite_example_shape():
    rep = path_lemma_suite(parse_shape("4,4,3,2/1"))
    assert rep.ok, dict(rep.violations)
    for name in ("pro-source-location", "dem-source-location", "pro-dest-location", "double-promotion",
                 "rotse-same-pseudo-path", "rotnw-almost-same-pseudo-path"):
        assert rep.checked[name] > 0


@pytest.mark.parametrize("n", range(2, 7))
def test_path_suite_small(n):
    for shape in enumerate_shapes(n, "non-ribbon"):
        rep = path_lemma_suite(shape)
        assert rep.ok, (str(shape), dict(rep.violations))


def test_phi_equals_promote_on_rectangle():
    for t in enumerate_syt(parse_shape("3,3,3/")):
        assert phi(t) == promote(t)
