import random

import pytest

import oracles
from thinpos import kirby, trisect
from thinpos.lattice import AbelianGroup
from thinpos.trisect import CutSystem, TorsionObstruction, TrisectionDiagram

GENERATORS = {
    "s4": trisect.s4(),
    "s1xs3": trisect.s1xs3(),
    "cp2": trisect.cp2(1),
    "cp2bar": trisect.cp2(-1),
    "X(1,0)": trisect.sphere_bundle_double_diagram(True, 1, 0),
    "Y(1,1)": trisect.sphere_bundle_double_diagram(False, 1, 1),
}


def diagram(g, a, b, c, **kw):
    return TrisectionDiagram(g, CutSystem.of(a, "alpha"), CutSystem.of(b, "beta"), CutSystem.of(c, "gamma"), **kw)


def test_pairing_and_form():
    assert trisect.pairing([1, 0], [0, 1]) == 1
    assert trisect.pairing([0, 1], [1, 0]) == -1
    assert trisect.symplectic_form(1) == [[0, 1], [-1, 0]]


@pytest.mark.parametrize("g,classes,ok", [
    (1, [[1, 0]], True),
    (1, [[2, 0]], False),
    (2, [[1, 0, 0, 0], [0, 0, 1, 0]], True),
    (2, [[1, 0, 0, 0], [0, 1, 0, 0]], False),
    (2, [[1, 0, 1, 0], [1, 0, -1, 0]], False),
    (2, [[1, 0, 0, 0]], False),
])
def test_validate_cut_system(g, classes, ok):
    assert (trisect.validate_cut_system(CutSystem.of(classes), g) == []) is ok


def test_diagnostic_wording():
    assert "non-primitive" in trisect.validate_cut_system(CutSystem.of([[2, 0]]), 1)[0]
    assert "J-pairing = 1" in trisect.validate_cut_system(CutSystem.of([[1, 0, 0, 0], [0, 1, 0, 0]]), 2)[0]


def test_pairwise_k():
    a = CutSystem.of([[1, 0]])
    assert trisect.pairwise_k(a, CutSystem.of([[0, 1]])) == 0
    assert trisect.pairwise_k(a, CutSystem.of([[1, 0]])) == 1
    a2 = CutSystem.of([[1, 0, 0, 0], [0, 0, 1, 0]])
    assert trisect.pairwise_k(a2, CutSystem.of([[0, 1, 0, 0], [0, 0, 1, 0]])) == 1
    with pytest.raises(TorsionObstruction, match="torsion obstruction"):
        trisect.pairwise_k(a, CutSystem.of([[1, 2]]))


def test_cp2_classes():
    d = trisect.cp2()
    assert (d.alpha.classes(), d.beta.classes(), d.gamma.classes()) == ([[1, 0]], [[0, 1]], [[1, 1]])
    rep = trisect.validate_trisection(d)
    assert (rep.genus, rep.k, rep.euler, rep.width_entry) == (1, (0, 0, 0), 3, 1)
    assert rep.h1.is_trivial


def test_small_generators():
    rep = trisect.validate_trisection(trisect.s1xs3())
    assert (rep.genus, rep.k, rep.euler, rep.h1) == (1, (1, 1, 1), 0, AbelianGroup(1))
    rep = trisect.validate_trisection(trisect.s4())
    assert (rep.genus, rep.k, rep.euler, rep.width_entry) == (0, (0, 0, 0), 2, 0)
    assert rep.caveats == [trisect.HOMOLOGY_CAVEAT]


@pytest.mark.parametrize("g", range(1, 5))
def test_bundle_doubles(g):
    rep = trisect.validate_trisection(trisect.sphere_bundle_double_diagram(True, g, 0))
    assert rep.ok and rep.genus == 2 * g + 2 and rep.euler == 4 - 4 * g
    assert rep.k == (2 * g,) * 3 and rep.h1 == AbelianGroup(2 * g)
    rep = trisect.validate_trisection(trisect.sphere_bundle_double_diagram(False, g, 1))
    assert rep.ok and rep.genus == g + 2 and rep.euler == 4 - 2 * g
    assert rep.h1 == AbelianGroup(g - 1, (2,))


@pytest.mark.parametrize("orientable,g,sumk", [(True, 1, 6), (False, 1, 3), (True, 2, 12)])
def test_bundle_double_k_sums(orientable, g, sumk):
    assert sum(trisect.validate_trisection(trisect.sphere_bundle_double_diagram(orientable, g, 1)).k) == sumk


def test_from_kirby_matches_handle_counts():
    rng = random.Random(3)
    for _ in range(40):
        c = rng.randint(0, 2)
        ones = tuple(f"x{i}" for i in range(c))
        k = rng.randint(0, 3)
        ids = [f"h{j}" for j in range(k)]
        links = {(i, j): rng.randint(-2, 2) for i in range(k) for j in range(i + 1, k)}
        hs = []
        for j in range(k):
            lk = {ids[o]: links[min(j, o), max(j, o)] for o in range(k) if o != j}
            hs.append(kirby.TwoHandle(ids[j], rng.randint(-3, 3), lk, {x: rng.randint(-2, 2) for x in ones}))
        base = kirby.KirbyDiagram(ones, tuple(hs))
        d = trisect.from_kirby(kirby.double(base))
        rep = trisect.validate_trisection(d)
        assert rep.ok, rep.diagnostics
        assert rep.euler == kirby.euler_characteristic(kirby.double(base))
        r = kirby.run_through_matrix(base)
        free, tors = oracles.cokernel(r, c, k) if k else (c, [])
        assert (rep.h1.free_rank, list(rep.h1.torsion)) == (free, tors)


def test_geometric_checks():
    bad = diagram(1, [[1, 0]], [[0, 1]], [[1, 1]], geometric={"ab": [[2]]})
    assert not trisect.validate_trisection(bad).ok
    good = diagram(1, [[1, 0]], [[0, 1]], [[1, 1]], geometric={"ab": [[3]]})
    assert trisect.validate_trisection(good).ok


def test_declared_k_mismatch():
    d = diagram(1, [[1, 0]], [[0, 1]], [[1, 1]], declared_k=(1, 0, 0))
    assert "declared k" in trisect.validate_trisection(d).diagnostics[0]


def test_standard_position():
    d = diagram(1, [[1, 0]], [[1, 0]], [[1, 0]], geometric={"ga": [[0]]})
    sp = trisect.standard_position_check(d, 1)
    assert sp.ok and sp.link == ()
    d = diagram(1, [[1, 0]], [[0, 1]], [[0, 1]], geometric={"ga": [[1]]})
    sp = trisect.standard_position_check(d, 0)
    assert sp.ok and sp.link == ("gamma1",)
    d = diagram(2, [[1, 0, 0, 0], [0, 0, 1, 0]], [[0, 1, 0, 0], [0, 0, 0, 1]], [[0, 1, 0, 0], [0, 0, 0, 1]],
                geometric={"ga": [[1, 0], [0, 2]]})
    sp = trisect.standard_position_check(d, 0)
    assert not sp.ok and "(2,2)" not in sp.diagnostics[0] and "gamma2" in sp.diagnostics[0]
    with pytest.raises(ValueError, match="geometric intersections required"):
        trisect.standard_position_check(diagram(1, [[1, 0]], [[0, 1]], [[1, 1]]), 0)
    for name, gen in GENERATORS.items():
        k = gen.declared_k[2]
        assert trisect.standard_position_check(gen, k).ok, name


def test_reverse_twice_is_identity():
    for d in GENERATORS.values():
        r = trisect.reverse(d)
        assert trisect.reverse(r) == d
        a, b = trisect.validate_trisection(d), trisect.validate_trisection(r)
        assert b.euler == a.euler and b.k == (a.k[1], a.k[0], a.k[2])


def test_connected_sum():
    c = trisect.connected_sum(trisect.cp2(), trisect.cp2())
    rep = trisect.validate_trisection(c)
    assert (rep.genus, rep.k, rep.euler) == (2, (0, 0, 0), 4)
    assert trisect.connected_sum(trisect.cp2(), trisect.s4()) == trisect.cp2()
    rep = trisect.validate_trisection(trisect.connected_sum(trisect.s1xs3(), trisect.s1xs3()))
    assert (rep.genus, rep.k, rep.euler) == (2, (2, 2, 2), -2)


def test_symmetry_checks():
    d = trisect.cp2()
    assert trisect.check_symmetry_action(d, [[-1, 0], [0, -1]], 2) == []
    assert trisect.check_symmetry_action(d, [[2, 0], [0, 1]], 2)
    swap = trisect.sphere_bundle_double_diagram(True, 1, 0)
    n = 2 * swap.genus
    minus = [[-int(i == j) for j in range(n)] for i in range(n)]
    assert trisect.check_symmetry_action(swap, minus, 3) == []
    rot = [[0, 1], [-1, 0]]
    assert any("span" in x for x in trisect.check_symmetry_action(d, rot, 4))
    with pytest.raises(ValueError):
        trisect.check_symmetry_action(d, [[1]], 2)


def test_json_round_trip():
    for d in GENERATORS.values():
        assert TrisectionDiagram.from_json(d.to_json()) == d
    with pytest.raises(ValueError):
        TrisectionDiagram.from_json({"genus": 1, "alpha": [[1, "0"]]})
