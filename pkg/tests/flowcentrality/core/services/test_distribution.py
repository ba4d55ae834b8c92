import math

import numpy as np
import pytest

from flowcentrality.core.domain.errors import BudgetExceededError
from flowcentrality.core.services.distribution import (
    Baselines,
    centrality_distribution,
    estimate_connected_subsets,
)
from flowcentrality.core.services.graphs import load_edge_list
from flowcentrality.core.services.verification import random_connected_graph


def test_square_pairs_are_interchangeable(c4):
    rows = centrality_distribution(c4, 2)
    assert [r.subset.members for r in rows] == [(0, 1), (0, 3), (1, 2), (2, 3)]
    for row in rows:
        assert row.value == pytest.approx(0.75)
        assert row.normalized == pytest.approx(1.0)
        assert row.degree == 2
        assert row.degree_normalized == 1.0
        assert row.closeness_sum is None and row.betweenness is None


def test_path_singletons_are_ranked(p3):
    rows = centrality_distribution(p3, 1)
    assert [r.subset.members for r in rows] == [(1,), (0,), (2,)]
    assert [r.normalized for r in rows] == pytest.approx([1.0, 0.5, 0.5])
    assert [r.degree_normalized for r in rows] == [1.0, 0.5, 0.5]


def test_whole_clique_minus_one(k4):
    rows = centrality_distribution(k4, 3)
    assert len(rows) == 4
    assert all(r.value == pytest.approx(1.0) for r in rows)


def test_all_baselines(p5):
    rows = centrality_distribution(p5, 1, baselines=Baselines.ALL)
    middle = rows[0]
    assert middle.subset.members == (2,)
    assert middle.betweenness == 4.0
    assert (middle.closeness_sum, middle.closeness_avg) == (6.0, 1.5)


def test_budget_is_enforced(k4):
    assert estimate_connected_subsets(k4, 3) > 1
    with pytest.raises(BudgetExceededError) as error:
        centrality_distribution(k4, 3, budget=1)
    assert error.value.budget == 1


def test_estimate_bounds_the_true_count(k4):
    assert estimate_connected_subsets(k4, 1) == 4
    assert estimate_connected_subsets(k4, 2) == math.ceil(4 * math.e * 3 / 2)


def test_worker_pool_gives_the_same_rows(rng):
    g = random_connected_graph(rng, 9, p=0.5, weighted=True)
    serial = centrality_distribution(g, 3, workers=1)
    parallel = centrality_distribution(g, 3, workers=2)
    assert serial == parallel


@pytest.mark.slow
def test_desk_scale_graph_is_deterministic_across_workers():
    rng = np.random.default_rng(2024)
    n = 200
    edges: set[tuple[int, int]] = {(i, i + 1) for i in range(n - 1)}
    while len(edges) < 600:
        a, b = sorted(int(v) for v in rng.choice(n, size=2, replace=False))
        edges.add((a, b))
    g = load_edge_list("\n".join(f"v{a},v{b}" for a, b in sorted(edges)))
    baseline = centrality_distribution(g, 3, workers=1)
    assert len(baseline) > 0
    assert centrality_distribution(g, 3, workers=4) == baseline
