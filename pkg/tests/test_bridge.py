import json
import os

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from thinpos import bridge
from thinpos.bridge import BridgeTrisection, Matching

FIX = os.path.join(os.path.dirname(__file__), "fixtures")
M = Matching.of


def bt(a, b, c, certified=True):
    n = len(a)
    return BridgeTrisection(n, M(a), M(b), M(c), certified)


def test_matching_validation():
    assert M([(2, 1), (4, 3)]).pairs == ((1, 2), (3, 4))
    with pytest.raises(ValueError):
        M([(1, 2), (2, 3)])
    with pytest.raises(ValueError):
        Matching(2, ((1, 2),))


@pytest.mark.parametrize("m1,m2,n", [
    ([(1, 2), (3, 4)], [(2, 3), (4, 1)], 1),
    ([(1, 2), (3, 4)], [(1, 2), (3, 4)], 2),
    ([(1, 2), (3, 4), (5, 6)], [(1, 2), (3, 6), (4, 5)], 2),
])
def test_components_examples(m1, m2, n):
    assert bridge.components_of_union(M(m1), M(m2)) == n


def test_components_size_mismatch():
    with pytest.raises(ValueError):
        bridge.components_of_union(M([(1, 2)]), M([(1, 2), (3, 4)]))


def test_banded_examples():
    one = bridge.banded_link(bt([(1, 2)], [(1, 2)], [(1, 2)]))
    assert one.bands == () and one.excised == ((1, 2),)
    two = bridge.banded_link(bt([(1, 2), (3, 4)], [(1, 3), (2, 4)], [(2, 3), (1, 4)]))
    assert two.bands == ((3, 4),) and two.excised == ((1, 2),)
    same = bridge.banded_link(bt([(1, 2), (3, 4)], [(1, 2), (3, 4)], [(1, 2), (3, 4)]))
    assert same.bands == ()
    assert two.to_json()["link"] == {"beta": [[1, 3], [2, 4]], "gamma": [[1, 4], [2, 3]]}


def test_uncertified_is_refused():
    data = bt([(1, 2)], [(1, 2)], [(1, 2)], certified=False)
    for fn in (bridge.banded_link, bridge.branch_surface_euler):
        with pytest.raises(ValueError, match="quotient data not certified"):
            fn(data)


def test_surface_euler_examples():
    assert bridge.branch_surface_euler(bt([(1, 2)], [(1, 2)], [(1, 2)])) == 0
    assert bridge.branch_surface_euler(bt([(1, 2), (3, 4)], [(1, 2), (3, 4)], [(1, 2), (3, 4)])) == 0
    assert bridge.branch_surface_euler(bt([(1, 2), (3, 4)], [(1, 2), (3, 4)], [(2, 3), (1, 4)])) == -1


def test_annulus_fixture():
    with open(os.path.join(FIX, "annulus_hopf.json")) as fh:
        data = BridgeTrisection.from_json(json.load(fh))
    assert bridge.branch_surface_euler(data) == 0
    assert bridge.boundary_links(data).at_one == 2
    assert bridge.branched_cover_euler(2, 1, 0) == 2


def test_boundary_links():
    same = bt([(1, 2), (3, 4), (5, 6)], [(1, 2), (3, 4), (5, 6)], [(1, 2), (3, 4), (5, 6)])
    assert bridge.boundary_links(same) == bridge.BoundaryLinks(3, 3)
    assert bridge.boundary_links(bt([(1, 2)], [(1, 2)], [(1, 2)])) == bridge.BoundaryLinks(1, 1)


def test_cover_euler():
    assert bridge.branched_cover_euler(1, 7, 3) == 7
    assert bridge.branched_cover_euler(2, 1, 1) == 1
    with pytest.raises(ValueError):
        bridge.branched_cover_euler(0, 1, 1)


def test_one_handle_fixed_set():
    assert bridge.one_handle_fixed_set(2, 1, 2) == 1
    assert bridge.one_handle_fixed_set(1, 1, 1, True) == 2
    assert bridge.one_handle_fixed_set(1, 1, 1, False) == 1
    with pytest.raises(ValueError):
        bridge.one_handle_fixed_set(2, 1, 3)


def test_json_round_trip():
    data = bt([(1, 2), (3, 4)], [(1, 3), (2, 4)], [(2, 3), (1, 4)])
    assert BridgeTrisection.from_json(data.to_json()) == data
    with pytest.raises(ValueError):
        BridgeTrisection.from_json({"b": 1, "theta_alpha": [[1, 2]]})


def _random_matching(draw, b):
    pts = draw(st.permutations(list(range(1, 2 * b + 1))))
    return [(pts[i], pts[i + 1]) for i in range(0, 2 * b, 2)]


@st.composite
def trisections(draw):
    b = draw(st.integers(1, 7))
    return bt(*(_random_matching(draw, b) for _ in range(3)))


@given(trisections())
def test_components_match_oracles(data):
    a, c = data.theta_alpha.pairs, data.theta_gamma.pairs
    n = bridge.components_of_union(data.theta_alpha, data.theta_gamma)
    assert n == oracles.cycle_count_components(a, c) == oracles.graph_components(a, c)
    assert len(bridge.banded_link(data).bands) + n == data.b
    assert bridge.branch_surface_euler(data) == oracles.cw_surface_euler(data.b, a, c)
