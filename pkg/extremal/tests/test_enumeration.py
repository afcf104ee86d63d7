import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.models.graph import Graph
from core.tests.strategies import connected_graphs
from core.utils.graph6_utils import decode_graph6, encode_graph6, to_networkx
from extremal.utils.enumeration_utils import (
    EnumerationError,
    EnumerationMode,
    canonical_form,
    count_connected_by_orbits,
    count_connected_labeled,
    count_connected_unlabeled,
    count_unlabeled,
    enumerate_connected,
    graph_from_mask,
    sample_connected,
    unlabeled_connected_forms,
)

LABELED_COUNTS = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728, 6: 26704, 7: 1866256}
UNLABELED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


@pytest.mark.parametrize("n, expected", sorted(LABELED_COUNTS.items()))
def test_labeled_recount(n, expected):
    assert count_connected_labeled(n) == expected


@pytest.mark.parametrize("n", range(1, 6))
def test_labeled_enumeration_matches_recount(n):
    assert sum(1 for _ in enumerate_connected(n, EnumerationMode.LABELED)) == LABELED_COUNTS[n]


def test_labeled_enumeration_is_in_mask_order():
    triangles = [encode_graph6(g) for g in enumerate_connected(3)]
    # Masks 3, 5, 6, 7 in graph6 slot order
    assert triangles == ["Bo", "Bg", "BW", "Bw"]


def test_graph_from_mask_uses_slot_order():
    assert graph_from_mask(4, 0b100001).edges() == [(0, 1), (2, 3)]


@pytest.mark.parametrize("n", range(1, 7))
def test_unlabeled_counts(n):
    assert len(unlabeled_connected_forms(n)) == UNLABELED_COUNTS[n]


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_unlabeled_counts_large(n):
    assert len(unlabeled_connected_forms(n)) == UNLABELED_COUNTS[n]


@pytest.mark.parametrize("n", range(1, 6))
def test_dedup_recount_agrees(n):
    assert count_connected_unlabeled(n) == UNLABELED_COUNTS[n]


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 7])
def test_dedup_recount_agrees_with_growth(n):
    assert count_connected_unlabeled(n) == len(unlabeled_connected_forms(n)) == UNLABELED_COUNTS[n]


def test_dedup_recount_range():
    with pytest.raises(EnumerationError):
        count_connected_unlabeled(8)


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044), (8, 12346)])
def test_all_graphs_up_to_isomorphism(n, expected):
    assert count_unlabeled(n) == expected


@pytest.mark.parametrize("n, expected", sorted(UNLABELED_COUNTS.items()))
def test_orbit_recount(n, expected):
    assert count_connected_by_orbits(n) == expected


def test_unlabeled_forms_are_pairwise_non_isomorphic():
    graphs = [to_networkx(g) for g in enumerate_connected(5, EnumerationMode.UNLABELED)]
    for i, a in enumerate(graphs):
        assert nx.is_connected(a)
        for b in graphs[i + 1 :]:
            assert not nx.is_isomorphic(a, b)


def test_unlabeled_forms_are_canonical():
    for form in unlabeled_connected_forms(5):
        assert canonical_form(decode_graph6(form)) == form


@given(connected_graphs(max_n=7), st.randoms(use_true_random=False))
def test_canonical_form_ignores_labels(g, random):
    order = list(range(g.n))
    random.shuffle(order)
    assert canonical_form(g) == canonical_form(g.relabel(order))
    assert nx.is_isomorphic(to_networkx(decode_graph6(canonical_form(g))), to_networkx(g))


def test_canonical_form_separates_non_isomorphic_graphs():
    assert canonical_form(Graph.path(4)) != canonical_form(Graph.star(3))
    assert canonical_form(Graph.cycle(6)) != canonical_form(
        Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)])
    )


@pytest.mark.parametrize(
    "n, mode",
    [(0, EnumerationMode.LABELED), (8, EnumerationMode.LABELED), (9, EnumerationMode.UNLABELED)],
)
def test_range_checks(n, mode):
    with pytest.raises(EnumerationError):
        list(enumerate_connected(n, mode))


def test_sampled_mode_is_not_exhaustive():
    with pytest.raises(EnumerationError):
        list(enumerate_connected(4, EnumerationMode.SAMPLED))


def test_sampling_is_seeded_and_connected():
    first = [encode_graph6(g) for g in sample_connected(8, 200, seed=11)]
    second = [encode_graph6(g) for g in sample_connected(8, 200, seed=11)]
    assert first == second
    assert 0 < len(first) <= 200
    assert all(decode_graph6(line).is_connected() for line in first)
