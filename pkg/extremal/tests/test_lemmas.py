import numpy as np
import pytest

from core.models.graph import Graph
from extremal.utils.decorated_utils import CoreKind, CoreSpec, build_decorated
from extremal.utils.gap_utils import ClassificationError, ClassificationKind, classify
from extremal.utils.lemma_utils import (
    DecoratedBounds,
    classification_kind_for,
    decorated_chi_check,
    expected_chi,
    extremal_corpus,
    extremal_graphs,
    induction_step_check,
    lemma_big_check,
    pendant_closure_check,
    random_decorated,
    removal_heredity_check,
)

EXTREMAL_EXAMPLES = [
    Graph.path(2),
    Graph.star(4),
    Graph.cycle(5),
    Graph.complete(5),
    build_decorated(CoreSpec(CoreKind.COMPLETE, 4), [(0, [-1, 0]), (2, [-1])]),
    build_decorated(CoreSpec(CoreKind.CYCLE, 7), [(3, [-1, 0, 0])]),
]


@pytest.mark.parametrize("g", EXTREMAL_EXAMPLES)
def test_removal_lemmas_hold_on_examples(g):
    assert lemma_big_check(g)
    assert removal_heredity_check(g)
    assert induction_step_check(g)


@pytest.mark.parametrize("g", [Graph.cycle(4), Graph.petersen(), Graph.complete(1)])
def test_removal_lemmas_need_an_extremal_graph(g):
    with pytest.raises(ClassificationError):
        lemma_big_check(g)


def test_removal_lemmas_on_every_small_extremal_graph():
    graphs = list(extremal_graphs(6))
    assert graphs
    for g in graphs:
        assert classify(g).is_extremal_type
        assert lemma_big_check(g)
        assert removal_heredity_check(g)
        assert induction_step_check(g)


@pytest.mark.parametrize("g", [Graph.complete(4), Graph.cycle(7), Graph.path(5)])
def test_pendant_closure_examples(g):
    assert pendant_closure_check(g, trials=50, seed=1)


def test_pendant_closure_rejects_neither():
    with pytest.raises(ClassificationError):
        pendant_closure_check(Graph.cycle(6), trials=1, seed=0)


def test_pendant_closure_on_corpus():
    corpus = extremal_corpus(30, seed=4)
    assert len(corpus) == 30
    for index, g in enumerate(corpus):
        assert g.n <= 20
        assert pendant_closure_check(g, trials=5, seed=index)


def test_decorated_chi_suite():
    assert decorated_chi_check(trials=20, seed=2024)


@pytest.mark.slow
def test_decorated_chi_suite_at_full_size():
    assert decorated_chi_check(trials=200, seed=2024)


@pytest.mark.slow
def test_pendant_closure_on_full_corpus():
    corpus = extremal_corpus(200, seed=2024)
    assert len(corpus) == 200
    for index, g in enumerate(corpus):
        assert classify(g).is_extremal_type
        assert pendant_closure_check(g, trials=5, seed=index)


@pytest.mark.parametrize("kind", ["complete", "odd", "even"])
def test_random_decorated_respects_bounds(kind):
    rng = np.random.default_rng(8)
    bounds = DecoratedBounds(max_vertices=14, complete_orders=(2, 5), odd_cycle_lengths=(5, 9))
    for _ in range(20):
        core, g = random_decorated(kind, rng, bounds)
        assert g.n <= 14
        kind_expected, order = classification_kind_for(core)
        result = classify(g)
        assert (result.kind, result.core_order) == (kind_expected, order)
        if kind == "even":
            assert result.kind == ClassificationKind.NEITHER


def test_expected_chi():
    assert expected_chi(CoreSpec(CoreKind.COMPLETE, 6)) == 6
    assert expected_chi(CoreSpec(CoreKind.CYCLE, 9)) == 3
    assert expected_chi(CoreSpec(CoreKind.CYCLE, 8)) == 2


@pytest.mark.parametrize(
    "kwargs",
    [{"max_vertices": 21}, {"max_vertices": 8}, {"complete_orders": (1, 6)}, {"even_cycle_lengths": (3, 10)}],
)
def test_decorated_bounds_validation(kwargs):
    with pytest.raises(ClassificationError):
        DecoratedBounds(**kwargs)
