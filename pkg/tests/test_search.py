"""Search oracle: exhaustive completeness, pruning safety, determinism."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antimagic.graphs import (
    Vertex,
    build_cycle,
    build_path,
    build_star,
    build_wheel,
    make_graph,
    product_graph,
)
from antimagic.labeling import verify_antimagic, vertex_sums
from antimagic.search import (
    CapacityError,
    SearchConfig,
    Status,
    Strategy,
    cross_validate,
    search_antimagic,
)


def naive_has_antimagic(g):
    """Unpruned full enumeration; the reference the pruned search must equal."""
    for perm in itertools.permutations(range(1, g.q + 1)):
        sums = {v: 0 for v in g.vertices}
        for e, lab in zip(g.edges, perm):
            sums[e[0]] += lab
            sums[e[1]] += lab
        values = list(sums.values())
        if len(set(values)) == len(values):
            return True
    return False


def test_p2_has_no_antimagic_labeling():
    result = search_antimagic(build_path(2))
    assert result.status is Status.NONE_EXISTS
    assert result.labeling is None


def test_c3_found_with_expected_sums():
    g = build_cycle(3)
    result = search_antimagic(g)
    assert result.status is Status.FOUND
    assert sorted(vertex_sums(g, result.labeling).values()) == [3, 4, 5]


def test_star_structure_forces_distinctness():
    g = build_star(4)
    result = search_antimagic(g)
    assert result.status is Status.FOUND
    sums = vertex_sums(g, result.labeling)
    assert sums[Vertex(0)] == 10
    assert all(sums[Vertex(0)] > sums[Vertex(i)] for i in range(1, 5))


@pytest.mark.parametrize("g", [
    build_path(3), build_cycle(4), build_cycle(5), build_wheel(3), build_star(5),
])
def test_small_graphs_found_and_sound(g):
    result = search_antimagic(g)
    assert result.status is Status.FOUND
    assert verify_antimagic(g, result.labeling).antimagic


def test_capacity_error_suggests_local_search():
    g = product_graph("wheel", 3, 1)  # q = 12 > default threshold 10
    with pytest.raises(CapacityError, match="local-search"):
        search_antimagic(g)


def test_local_search_finds_on_product():
    g = product_graph("wheel", 3, 1)
    config = SearchConfig(strategy=Strategy.LOCAL_SEARCH, max_iterations=500, seed=3)
    result = search_antimagic(g, config)
    assert result.status is Status.FOUND
    assert verify_antimagic(g, result.labeling).antimagic


def test_determinism_same_config_same_everything():
    g = product_graph("helm", 3, 1)
    config = SearchConfig(strategy=Strategy.LOCAL_SEARCH, max_iterations=300, seed=11)
    a = search_antimagic(g, config)
    b = search_antimagic(g, config)
    assert a.status == b.status
    assert a.stats == b.stats  # wall time excluded from equality
    if a.labeling is not None:
        assert a.labeling.labels == b.labeling.labels


def _graph_from_edge_set(pairs):
    vertices = {Vertex(a) for a, b in pairs} | {Vertex(b) for a, b in pairs}
    return make_graph("other", (), vertices, [(Vertex(a), Vertex(b)) for a, b in pairs])


@given(data=st.data())
@settings(max_examples=30, deadline=None)
def test_pruned_search_equals_naive_enumeration(data):
    all_pairs = list(itertools.combinations(range(5), 2))
    pairs = data.draw(st.lists(st.sampled_from(all_pairs), min_size=1, max_size=6,
                               unique=True))
    g = _graph_from_edge_set(pairs)
    assert g.q <= 6
    result = search_antimagic(g)
    assert (result.status is Status.FOUND) == naive_has_antimagic(g)
    if result.labeling is not None:
        assert verify_antimagic(g, result.labeling).antimagic


def test_exhaustive_order_is_lexicographic_first():
    g = build_path(3)
    result = search_antimagic(g)
    # first permutation (1, 2) on canonically ordered edges already works
    assert [result.labeling.labels[e] for e in g.edges] == [1, 2]


@pytest.mark.parametrize("family", ["wheel", "helm", "flower"])
def test_cross_validation_at_3_1(family):
    record = cross_validate(3, 1, family)
    assert record.scheme_antimagic
    assert record.search_status == "found"
    assert record.to_json_dict()["family"] == family
