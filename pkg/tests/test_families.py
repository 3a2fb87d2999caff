import pytest

from cubicdom.families import (
    FamilyError,
    FamilySpec,
    build,
    complete_bipartite,
    cycle,
    edgeless,
    family_expected_i,
    petersen,
    prism,
    tkl,
    tkl_parameters,
)
from cubicdom.graph import bits, degree_profile, girth, has_four_cycle, is_cubic, is_subcubic
from cubicdom.solvers import independent_domination_number, oracle_independent_domination_number
from cubicdom.structure import weight_summary


def test_tkl_profiles():
    g = tkl(6, 0)
    assert g.order == 12
    assert degree_profile(g).as_tuple() == (0, 6, 0, 6)
    g = tkl(3, 2)
    assert g.order == 16
    assert degree_profile(g).as_tuple() == (0, 3, 6, 7)


def test_tkl_labelling_convention():
    g = tkl(3, 2)  # 11-cycle 0..10, pendants 11..13, chord vertices 14, 15
    assert all(g.has_edge(j, (j + 1) % 11) for j in range(11))
    assert [list(bits(g.neighbors(p))) for p in (11, 12, 13)] == [[0], [1], [2]]
    assert list(bits(g.neighbors(14))) == [3, 6]
    assert list(bits(g.neighbors(15))) == [7, 10]


@pytest.mark.parametrize("k,l", [(4, 0), (0, 4), (2, 2), (-1, 6)])
def test_tkl_rejects_small_parameters(k, l):
    with pytest.raises(FamilyError):
        tkl(k, l)


@pytest.mark.parametrize("k,l", tkl_parameters(24))
def test_tkl_shape(k, l):
    g = tkl(k, l)
    p = degree_profile(g)
    assert g.order == 2 * k + 5 * l
    assert p.as_tuple() == (0, k, 3 * l, k + 2 * l)
    assert is_subcubic(g) and g.is_connected() and not has_four_cycle(g)


def test_named_graphs():
    k33 = complete_bipartite(3, 3)
    assert (k33.order, is_cubic(k33), girth(k33)) == (6, True, 4)
    pg = petersen()
    assert (pg.order, is_cubic(pg), girth(pg), has_four_cycle(pg)) == (10, True, 5, False)
    c5k2 = prism(5)
    assert is_cubic(c5k2) and c5k2.order == 10 and has_four_cycle(c5k2)


def test_expected_i_against_oracle():
    assert family_expected_i(FamilySpec("tkl", (3, 2))) == 7
    assert family_expected_i(FamilySpec("complete_bipartite", (3, 3))) == 3
    assert family_expected_i(FamilySpec("cycle", (7,))) is None
    for spec in [FamilySpec("tkl", (5, 0)), FamilySpec("tkl", (3, 2)), FamilySpec("complete_bipartite", (3, 3)),
                 FamilySpec("complete_bipartite", (4, 4)), FamilySpec("prism5"), FamilySpec("edgeless", (5,))]:
        assert oracle_independent_domination_number(build(spec)) == family_expected_i(spec)
    assert independent_domination_number(cycle(7)).value == 3


def test_build_is_deterministic():
    for spec in [FamilySpec("tkl", (2, 3)), FamilySpec("petersen"), FamilySpec("cycle", (9,))]:
        assert build(spec) == build(spec)


def test_build_validates():
    with pytest.raises(FamilyError):
        FamilySpec("moebius", (8,))
    with pytest.raises(FamilyError):
        build(FamilySpec("cycle", ()))
    with pytest.raises(FamilyError):
        build(FamilySpec("cycle", (2,)))


def test_tkl_weights_match_bound_exactly():
    for k, l in tkl_parameters(20):
        g = tkl(k, l)
        assert 14 * (k + 2 * l) == weight_summary(g).total


def test_edgeless_weight():
    assert weight_summary(edgeless(2)).total == 28
