import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from edgehrhart.errors import ResourceLimit
from edgehrhart.graphcore import bowtie_graph, cycle_graph, path_graph
from edgehrhart.oracle import count_lp, count_monoid, hyperedge_images, lp_feasible

from corpus import SMALL_CORPUS


def _columns(gr):
    return [[1 if v in e else 0 for e in gr.edges] for v in range(gr.n_vertices)]


@pytest.mark.parametrize("name", ["edge", "c4", "bowtie", "k4", "prism"])
def test_dilation_zero(name):
    gr = SMALL_CORPUS[name]
    assert count_lp(gr, 0).count == 1
    assert count_monoid(gr, 0).count == 1


def test_bowtie_counts():
    gr = bowtie_graph()
    assert count_lp(gr, 1).count == 8
    assert count_lp(gr, 2).count == 36
    assert count_monoid(gr, 2).count == 36
    assert count_lp(gr, 2).method == "lp-membership"


def test_c4_counts():
    gr = cycle_graph(4)
    assert count_lp(gr, 2).count == 9
    assert count_monoid(gr, 1).count == 4
    assert count_monoid(gr, 1).method == "monoid-enumeration"


def test_bowtie_hole_at_three():
    gr = bowtie_graph()
    with_theta = count_monoid(gr, 3).count
    without = count_monoid(gr, 3, with_theta=False).count
    assert with_theta - without == 1
    assert with_theta == count_lp(gr, 3).count


def test_lp_feasible_examples():
    c4 = cycle_graph(4)
    A = _columns(c4)
    rho0 = [1, 1, 0, 0]
    assert lp_feasible(A, rho0, 1)
    assert not lp_feasible(A, [2 * x for x in rho0], 1)
    bt = bowtie_graph()
    theta_image = [1, 1, 1, 0, 1, 1, 1]
    assert lp_feasible(_columns(bt), theta_image, 3)
    assert not lp_feasible(_columns(bt), theta_image, 2)


def test_lp_feasible_degenerate_inputs():
    assert lp_feasible([[1, 1]], [0], 0)
    assert not lp_feasible([[1, 0], [0, 1]], [-1, 2], 1)


def _brute_membership(A, z, m, grid=6):
    """Search lam on the grid (1/grid) Z_{>=0} with sum m."""
    n = len(A[0])
    total = m * grid
    for combo in itertools.combinations_with_replacement(range(n), total):
        lam = [0] * n
        for k in combo:
            lam[k] += 1
        if all(sum(a * l for a, l in zip(row, lam)) == grid * zi for row, zi in zip(A, z)):
            return True
    return False


def test_lp_agrees_with_grid_search_on_bowtie():
    gr = bowtie_graph()
    A = _columns(gr)
    # basic solutions of a graph incidence system are half-integral
    for z in itertools.product(range(3), repeat=gr.n_vertices):
        if sum(z) != 4:
            continue
        assert lp_feasible(A, z, 2) == _brute_membership(A, z, 2, grid=2)


@given(st.sampled_from(sorted(SMALL_CORPUS)), st.data())
def test_scale_consistency(name, data):
    gr = SMALL_CORPUS[name]
    A = _columns(gr)
    m = data.draw(st.integers(1, 3))
    z = [0] * gr.n_vertices
    for k in data.draw(st.lists(st.integers(0, gr.n_edges - 1), min_size=m, max_size=m)):
        for v in gr.edges[k]:
            z[v] += 1
    assert lp_feasible(A, z, m)
    for k in (2, 3):
        assert lp_feasible(A, [k * x for x in z], k * m)


@pytest.mark.parametrize("name", ["c5", "bowtie", "k4", "house"])
def test_candidate_bound(name):
    """Monoid points never exceed m in any coordinate."""
    gr = SMALL_CORPUS[name]
    items = hyperedge_images(gr)
    m = 3
    levels = [{(0,) * gr.n_vertices}]
    for d in range(1, m + 1):
        cur = set()
        for img, deg in items:
            if deg <= d:
                cur |= {tuple(a + b for a, b in zip(x, img)) for x in levels[d - deg]}
        levels.append(cur)
        assert all(max(z) <= d and sum(z) == 2 * d for z in cur)


@pytest.mark.parametrize("name", sorted(SMALL_CORPUS))
def test_one_dilation_is_edge_count(name):
    gr = SMALL_CORPUS[name]
    assert count_lp(gr, 1).count == gr.n_edges == count_monoid(gr, 1).count


def test_tree_counts_agree():
    gr = path_graph(5)
    for m in range(4):
        assert count_lp(gr, m).count == count_monoid(gr, m).count


def test_caps_and_guards():
    with pytest.raises(ResourceLimit):
        count_lp(SMALL_CORPUS["k5"], 4, cap=10)
    with pytest.raises(ResourceLimit):
        count_monoid(SMALL_CORPUS["k5"], 4, cap=10)
    with pytest.raises(ValueError):
        count_lp(bowtie_graph(), -1)
