import math
from fractions import Fraction

import numpy as np
import pytest

from edgehrhart import poly
from edgehrhart.analysis import (PolygonTreeProfile, check_second_factoring_hypotheses,
                                 closed_form_series, ehrhart_roots_summary,
                                 polygon_tree_profile, polynomial_from_hstar, root_report,
                                 rv_step, square_free_factors, verify_first_factoring,
                                 verify_second_factoring)
from edgehrhart.errors import HypothesisViolated, InvalidParameter
from edgehrhart.graphcore import (SeparatingFaceSplit, bowtie_graph, complete_graph, cycle_graph,
                                  find_separating_faces, glue, ladder_graph, path_graph,
                                  polygon_tree_graph)
from edgehrhart.series import RationalSeries, ehrhart_polynomial, ehrhart_series

from corpus import bowtie_with_ladder, composites, g, random_polygon_trees

BOWTIE_NUM = [1, 1, 1, 2]


def rs(num, power):
    return RationalSeries(tuple(num), power)


# --- closed forms -------------------------------------------------------------

def test_closed_form_examples():
    assert closed_form_series("even_cycle", 3) == rs([1, 1, 1], 5)
    assert closed_form_series("odd_cycle", 2) == rs([1], 3)
    assert closed_form_series("ladder", 4) == rs([1, 3, 3, 1], 7)
    assert closed_form_series("edge") == rs([1], 1)
    prof = PolygonTreeProfile(7, {2: 2})
    assert closed_form_series("polygon_tree", prof) == rs([1, 2, 1], 5)


@pytest.mark.parametrize("family, param", [
    ("even_cycle", 1), ("odd_cycle", 0), ("ladder", 1), ("ladder", "3"), ("ladder", True),
    ("polygon_tree", 3), ("polygon_tree", PolygonTreeProfile(8, {2: 2})),
    ("polygon_tree", PolygonTreeProfile(1, {})), ("polygon_tree", PolygonTreeProfile(4, {1: 1})),
    ("polygon_tree", PolygonTreeProfile(4, {}, odd_cycle=4)), ("hexagon", None)])
def test_closed_form_rejects(family, param):
    with pytest.raises(InvalidParameter):
        closed_form_series(family, param)


@pytest.mark.parametrize("n", range(2, 7))
def test_even_cycles_match_pipeline(n):
    assert ehrhart_series(cycle_graph(2 * n)) == closed_form_series("even_cycle", n)


@pytest.mark.parametrize("n", range(2, 7))
def test_odd_cycles_match_pipeline(n):
    assert ehrhart_series(cycle_graph(2 * n - 1)) == closed_form_series("odd_cycle", n)


@pytest.mark.parametrize("k", range(2, 5))
def test_ladders_match_pipeline(k):
    assert ehrhart_series(ladder_graph(k)) == closed_form_series("ladder", k)


def test_edge_matches_pipeline():
    assert ehrhart_series(path_graph(2)) == closed_form_series("edge")


@pytest.mark.parametrize("gr", random_polygon_trees(6, max_edges=12, seed=5),
                         ids=lambda gr: f"e{gr.n_edges}")
def test_polygon_tree_induction(gr):
    """Gluing a 2n-cycle along an edge multiplies by [n] / (1 - t)^(2n - 2)."""
    base = ehrhart_series(gr)
    for n, anchor in ((2, 0), (3, gr.n_edges - 1)):
        edges = gr.labelled_edges()
        a, b = edges[anchor]
        chain = [a] + [f"q{i}" for i in range(2 * n - 2)] + [b]
        bigger = g(*[f"{u} {v}" for u, v in edges + list(zip(chain, chain[1:]))])
        want = rs(poly.mul(base.numerator, poly.geometric(n)),
                  base.denominator_power + 2 * n - 2)
        assert ehrhart_series(bigger) == want


def test_profile_recogniser():
    assert polygon_tree_profile(ladder_graph(3)) == PolygonTreeProfile(7, {2: 2})
    assert polygon_tree_profile(cycle_graph(6)) == PolygonTreeProfile(6, {3: 1})
    assert polygon_tree_profile(cycle_graph(5)) == PolygonTreeProfile(5, {}, odd_cycle=5)
    tri_sq = polygon_tree_graph([3, 4], [0])
    assert polygon_tree_profile(tri_sq) == PolygonTreeProfile(6, {2: 1}, odd_cycle=3)
    assert polygon_tree_profile(complete_graph(4)) is None
    assert polygon_tree_profile(bowtie_graph()) is None
    assert polygon_tree_profile(path_graph(3)) is None
    assert polygon_tree_profile(polygon_tree_graph([3, 3], [0])) is None
    assert polygon_tree_profile(glue(cycle_graph(4), cycle_graph(4), {"v0": "v0"})) is None


def test_profile_of_random_trees():
    for gr in random_polygon_trees(10):
        prof = polygon_tree_profile(gr)
        assert prof is not None and prof.bipartite
        prof.validate()
        assert prof.e - prof.f == gr.n_vertices - 1


def test_odd_extension_matches_pipeline():
    for lengths, anchors in (([3, 4], [0]), ([5, 4, 6], [1, 3]), ([4, 3], [2])):
        gr = polygon_tree_graph(lengths, anchors)
        prof = polygon_tree_profile(gr)
        assert not prof.bipartite
        assert ehrhart_series(gr) == closed_form_series("polygon_tree", prof)


def test_profile_to_dict():
    assert PolygonTreeProfile(7, {2: 2}).to_dict() == {"e": 7, "f2n": {"2": 2}, "odd_cycle": None}


# --- factoring ----------------------------------------------------------------

def test_first_factoring_bowtie_and_square():
    gr = glue(bowtie_graph(), cycle_graph(4), {"v0": "v6"}, prefix="w")
    rep = verify_first_factoring(gr)
    assert rep.equal
    assert rep.full == rs(poly.mul(BOWTIE_NUM, [1, 1]), 10)
    assert [p.series for p in rep.parts] == [rs(BOWTIE_NUM, 7), rs([1, 1], 3)]


def test_first_factoring_biconnected_is_reflexive():
    rep = verify_first_factoring(complete_graph(4))
    assert rep.equal and len(rep.parts) == 1 and rep.parts[0].series == rep.full


@pytest.mark.parametrize("k", [2, 3])
def test_bowtie_ladder_vertex(k):
    rep = verify_first_factoring(bowtie_with_ladder(k, "vertex"))
    assert rep.equal
    assert rep.full == rs(poly.mul(BOWTIE_NUM, poly.power([1, 1], k - 1)), 2 * k + 6)


@pytest.mark.parametrize("k", [2, 3])
def test_bowtie_ladder_edge(k):
    gr = bowtie_with_ladder(k, "edge")
    (split,) = [s for s in find_separating_faces(gr) if s.side_two_bipartite
                and len(s.side_one) == 8]
    rep = verify_second_factoring(gr, split)
    assert rep.equal
    assert rep.full == rs(poly.mul(BOWTIE_NUM, poly.power([1, 1], k - 1)), 2 * k + 5)


def test_two_squares_on_an_edge():
    gr = composites()["c4+c4@edge"]
    (split,) = find_separating_faces(gr)
    rep = verify_second_factoring(gr, split)
    assert rep.equal
    assert rep.full == rs([1, 2, 1], 5) == closed_form_series(
        "polygon_tree", PolygonTreeProfile(7, {2: 2}))
    assert rep.to_dict()["equal"] is True


@pytest.mark.parametrize("name", sorted(composites()))
def test_composites_factor(name):
    gr = composites()[name]
    assert verify_first_factoring(gr).equal
    for split in find_separating_faces(gr):
        try:
            check_second_factoring_hypotheses(gr, split)
        except HypothesisViolated:
            continue
        assert verify_second_factoring(gr, split).equal


def test_second_factoring_guards():
    tri_sq = composites()["triangle+c4@edge"]
    (split,) = find_separating_faces(tri_sq)
    swapped = SeparatingFaceSplit(split.shared_edge, split.side_two, split.side_one, False)
    with pytest.raises(HypothesisViolated) as info:
        verify_second_factoring(tri_sq, swapped)
    assert info.value.which == 2

    tail = g("p q", "q r", "r s", "s p", "s t", "t u")
    face = [f for f in find_separating_faces(tail) if f.shared_edge == 4]
    (split,) = face
    bad = SeparatingFaceSplit(4, split.side_one, split.side_two, True)
    if set(bad.side_two) != {4, 5}:
        bad = SeparatingFaceSplit(4, split.side_two, split.side_one, True)
    with pytest.raises(HypothesisViolated) as info:
        check_second_factoring_hypotheses(tail, bad)
    assert info.value.which == 3

    with pytest.raises(HypothesisViolated) as info:
        check_second_factoring_hypotheses(tri_sq, SeparatingFaceSplit(0, (0, 1), (0, 2), True))
    assert info.value.which == 1


# --- roots --------------------------------------------------------------------

def _i_ladder3(m):
    return math.comb(m + 4, 4) + 2 * math.comb(m + 3, 4) + math.comb(m + 2, 4)


def test_ladder3_roots():
    p = ehrhart_polynomial(ehrhart_series(ladder_graph(3)))
    assert [p(m) for m in range(6)] == [_i_ladder3(m) for m in range(6)]
    rep = root_report(p, PolygonTreeProfile(7, {2: 2}))
    assert rep.deflation_exact and rep.ok
    assert rep.integer_roots == (-2, -1)
    assert rep.critical_line == -1.5
    assert rep.max_deviation <= 1e-9
    others = [z for z in rep.roots if z.real not in (-1.0, -2.0)]
    assert len(others) == 2
    # numpy on the raw coefficient list as an independent check
    raw = np.roots([float(c) for c in p.coefficients()[::-1]])
    assert sorted(np.round(raw.real, 6)) == sorted(np.round([z.real for z in rep.roots], 6))


def test_square_double_root():
    p = ehrhart_polynomial(ehrhart_series(cycle_graph(4)))
    assert [p(m) for m in range(5)] == [(m + 1) ** 2 for m in range(5)]
    rep = root_report(p, PolygonTreeProfile(4, {2: 1}))
    assert rep.integer_roots == (-1, -1)
    assert rep.max_deviation == 0.0 and rep.ok
    assert rep.to_dict()["ok"] is True


def test_random_polygon_tree_roots():
    for gr in random_polygon_trees(10):
        p = ehrhart_polynomial(ehrhart_series(gr))
        rep = root_report(p, polygon_tree_profile(gr))
        assert rep.ok, rep.to_dict()
        assert len(rep.roots) == p.dim


def test_square_free_factors():
    p = poly.mul(poly.power([1, 1], 2), [2, 1])  # (x+1)^2 (x+2)
    fac = square_free_factors(p)
    assert fac == [([Fraction(2), Fraction(1)], 1), ([Fraction(1), Fraction(1)], 2)]


def test_roots_summary_any_graph():
    p = ehrhart_polynomial(ehrhart_series(bowtie_graph()))
    roots = ehrhart_roots_summary(p)
    assert len(roots) == 6
    for z in roots:
        assert abs(complex(poly.evaluate([complex(c) for c in p.coefficients()], z))) < 1e-9


def test_rv_step_examples():
    d = 4
    c = poly.binomial_poly(d, d)
    diff = rv_step(c, 1)
    assert len(diff) - 1 == d - 1
    assert diff == poly.sub(poly.binomial_poly(d - 1, d), c)
    assert rv_step([1, 1], -1) == [1, 2]


def test_polynomial_from_hstar_rebuilds_bowtie():
    p = ehrhart_polynomial(ehrhart_series(bowtie_graph()))
    rebuilt = polynomial_from_hstar(p.hstar, p.dim)
    for got, want in zip(rebuilt, p.coefficients()):
        assert abs(got - float(want)) < 1e-9
