from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from flowcentrality.config import FlowCentralityConfigurations
from flowcentrality.core.domain.errors import (
    BudgetExceededError,
    UnsupportedGraphError,
)
from flowcentrality.core.domain.graph import Graph, VertexSubset
from flowcentrality.core.domain.hike import Hike
from flowcentrality.core.services import linalg
from flowcentrality.core.services.graphs import load_edge_list
from flowcentrality.core.services.hikes import (
    HikeMonoid,
    enumerate_hikes,
    mobius_det_identity_check,
    sieve_count_formula,
    sieve_count_formula_subgraph,
    sieve_error_terms,
    theorem1_asymptotic_check,
)
from flowcentrality.core.services.verification import (
    complete_graph,
    cycle_graph,
    random_strongly_connected_digraph,
)

SQUARE = HikeMonoid(cycle_graph(4), 4)
# (0 1) (0 3) (1 2) (2 3) (0 1 2 3) (0 3 2 1)
EDGE_01, EDGE_03, EDGE_12, EDGE_23, FORWARD, BACKWARD = range(6)


def test_prime_table_order():
    assert [p.vertices for p in SQUARE.primes] == [
        (0, 1),
        (0, 3),
        (1, 2),
        (2, 3),
        (0, 1, 2, 3),
        (0, 3, 2, 1),
    ]
    assert SQUARE.prime_index(SQUARE.primes[EDGE_23]) == EDGE_23


def test_unknown_prime_is_rejected(k3):
    (triangle, *_) = [p for p in HikeMonoid(k3, 3).primes if p.length == 3]
    with pytest.raises(ValueError):
        HikeMonoid(k3, 2).prime_index(triangle)


def test_commutation_is_disjointness():
    assert SQUARE.commutes(EDGE_01, EDGE_23)
    assert not SQUARE.commutes(EDGE_01, EDGE_12)
    assert not SQUARE.commutes(EDGE_01, EDGE_01)
    assert not SQUARE.commutes(FORWARD, EDGE_01)


def test_normal_form_moves_commuting_letters():
    assert SQUARE.normalize((EDGE_23, EDGE_01)) == (EDGE_01, EDGE_23)
    assert SQUARE.normalize((EDGE_12, EDGE_01)) == (EDGE_12, EDGE_01)
    assert not SQUARE.can_append((EDGE_23,), EDGE_01)
    assert SQUARE.can_append((EDGE_01,), EDGE_23)
    assert SQUARE.hike((EDGE_23, EDGE_01)) == Hike(word=(EDGE_01, EDGE_23), length=4)


def test_multiply():
    left = SQUARE.hike((EDGE_23,))
    right = SQUARE.hike((EDGE_01,))
    assert SQUARE.multiply(left, right) == SQUARE.multiply(right, left)
    assert SQUARE.multiply(Hike.identity(), left) == left


@given(st.lists(st.integers(min_value=0, max_value=5), max_size=6))
def test_normal_forms_are_sound(word):
    normal = SQUARE.normalize(word)
    assert sorted(normal) == sorted(word)
    assert SQUARE.normalize(normal) == normal
    for i in range(len(normal)):
        assert SQUARE.can_append(normal[:i], normal[i])


@given(
    st.lists(st.integers(min_value=0, max_value=5), min_size=2, max_size=6),
    st.integers(min_value=0),
)
def test_swapping_commuting_letters_keeps_the_trace(word, position):
    i = position % (len(word) - 1)
    if SQUARE.commutes(word[i], word[i + 1]):
        swapped = word[:i] + [word[i + 1], word[i]] + word[i + 2 :]
        assert SQUARE.normalize(swapped) == SQUARE.normalize(word)


def test_mobius():
    assert SQUARE.mobius(Hike.identity()) == 1
    assert SQUARE.mobius(SQUARE.hike((EDGE_01,))) == -1
    assert SQUARE.mobius(SQUARE.hike((EDGE_01, EDGE_23))) == 1
    assert SQUARE.mobius(SQUARE.hike((EDGE_01, EDGE_01))) == 0
    assert SQUARE.mobius(SQUARE.hike((EDGE_01, EDGE_12))) == 0


def test_right_prime_divisors_and_walks():
    both = SQUARE.hike((EDGE_01, EDGE_23))
    assert SQUARE.right_prime_divisors(both) == {EDGE_01, EDGE_23}
    assert not SQUARE.is_walk(both)

    chained = SQUARE.hike((EDGE_03, EDGE_23))
    assert SQUARE.right_prime_divisors(chained) == {EDGE_23}
    assert SQUARE.is_walk(chained)
    assert not SQUARE.is_walk(Hike.identity())


def test_exact_weight():
    g = load_edge_list("a,b,2\nb,c,3\n")
    monoid = HikeMonoid(g, 2)
    assert [p.vertices for p in monoid.primes] == [(0, 1), (1, 2)]
    assert monoid.exact_weight(monoid.hike((0,))) == 4
    assert monoid.exact_weight(monoid.hike((0, 1))) == 36


@pytest.mark.parametrize(
    "graph, max_len",
    [
        (load_edge_list("a,b\nb,a\n", directed=True), 6),
        (complete_graph(3), 6),
        (cycle_graph(4), 6),
        (complete_graph(4), 5),
        (load_edge_list("a,a\na,b\n"), 6),
    ],
)
def test_hike_counts_match_the_zeta_function(graph, max_len):
    zeta = linalg.zeta_coefficients(graph, max_len, exact=True)
    assert HikeMonoid(graph, max_len).counts() == list(zeta.coeffs)


def test_hike_counts_of_small_graphs(two_cycle, k3):
    assert HikeMonoid(two_cycle, 6).counts() == [1, 0, 1, 0, 1, 0, 1]
    assert len(enumerate_hikes(cycle_graph(4), 4)[4]) == 16
    assert len(enumerate_hikes(k3, 2)[2]) == 3


def test_random_digraph_counts(rng):
    for _ in range(5):
        g = random_strongly_connected_digraph(rng, int(rng.integers(3, 6)))
        zeta = linalg.zeta_coefficients(g, 6, exact=True)
        assert HikeMonoid(g, 6).counts() == list(zeta.coeffs)


def test_enumeration_respects_the_budget(k3):
    settings = FlowCentralityConfigurations(HIKE_BUDGET=10)
    with pytest.raises(BudgetExceededError):
        HikeMonoid(k3, 6, settings).counts()


def test_weighted_graphs_cannot_be_enumerated():
    g = load_edge_list("a,b,2\n")
    with pytest.raises(UnsupportedGraphError):
        HikeMonoid(g, 4).counts()
    with pytest.raises(UnsupportedGraphError):
        sieve_error_terms(g, VertexSubset.of([0]), 2)


def test_sieve_counts_on_the_square():
    monoid = HikeMonoid(cycle_graph(4), 6)
    gamma = monoid.primes[EDGE_01]
    for ell, expected in [(0, 1), (1, 0), (2, 3), (4, 12)]:
        assert monoid.sieve_count_bruteforce(gamma, ell) == expected
        assert sieve_count_formula(monoid.graph, gamma, ell) == expected
    assert monoid.sieve_count_bruteforce(gamma, -1) == 0
    with pytest.raises(ValueError):
        monoid.sieve_count_bruteforce(gamma, 7)


def test_sieve_formula_matches_enumeration(rng):
    for _ in range(5):
        g = random_strongly_connected_digraph(rng, int(rng.integers(3, 6)))
        monoid = HikeMonoid(g, 6)
        for members in [(0,), (0, 1), tuple(range(g.n))]:
            h = VertexSubset.of(members)
            for ell in range(7):
                assert monoid.sieve_count_bruteforce_subgraph(h, ell) == (
                    sieve_count_formula_subgraph(g, h, ell)
                )


def test_walk_counts(two_cycle):
    monoid = HikeMonoid(two_cycle, 6)
    assert monoid.walk_count_bruteforce(monoid.primes[0], 6) == 1

    square = HikeMonoid(cycle_graph(4), 6)
    gamma = square.primes[EDGE_01]
    assert square.walk_count_bruteforce(gamma, 6) == 12
    assert square.walk_count_bruteforce(gamma, 3) == 0
    assert square.walk_count_bruteforce(gamma, 1) == 0


@pytest.mark.parametrize("k", range(2, 7))
def test_walks_factor_through_their_last_cycle(k):
    square = HikeMonoid(cycle_graph(4), 6)
    for gamma in square.primes:
        assert square.walk_factorization_holds(gamma, k)
    triangle = HikeMonoid(complete_graph(3), 6)
    for gamma in triangle.primes:
        assert triangle.walk_factorization_holds(gamma, k)


def test_self_avoiding_hikes():
    found = SQUARE.self_avoiding_hikes()
    assert [h.word for h in found] == [
        (),
        (EDGE_01,),
        (EDGE_03,),
        (EDGE_12,),
        (EDGE_23,),
        (EDGE_01, EDGE_23),
        (EDGE_03, EDGE_12),
        (FORWARD,),
        (BACKWARD,),
    ]
    within = SQUARE.self_avoiding_hikes(within=VertexSubset.of([0, 1, 2]))
    assert [h.word for h in within] == [(), (EDGE_01,), (EDGE_12,)]


@pytest.mark.parametrize(
    "graph",
    [
        complete_graph(3),
        cycle_graph(4),
        complete_graph(4),
        Graph(labels=("a", "b"), adj=np.zeros((2, 2))),
        load_edge_list("a,b,0.5\nb,c,3\nc,a\na,a,2\n"),
        load_edge_list("a,b\nb,c\nc,a\nb,a\n", directed=True),
    ],
)
def test_mobius_sum_is_the_characteristic_polynomial(graph):
    report = mobius_det_identity_check(graph)
    assert report.holds


def test_mobius_report_on_the_triangle(k3):
    report = mobius_det_identity_check(k3)
    assert report.observed.coeffs == (1, 0, -3, -2)
    assert report.divisors == 6


def test_rational_weights_stay_exact():
    report = mobius_det_identity_check(load_edge_list("a,b,0.5\n"))
    assert report.observed.coeffs == (1, 0, Fraction(-1, 4))


@pytest.mark.parametrize("graph", [complete_graph(3), complete_graph(4)])
def test_sieve_error_terms_decay(graph):
    h = VertexSubset.of([0, 1])
    ell = 30
    terms = sieve_error_terms(graph, h, ell)
    assert terms[0].divisor.is_identity and terms[0].residual == 0.0
    zeta = linalg.zeta_coefficients(graph, ell, exact=True)
    for term in terms:
        assert abs(term.residual) / float(zeta[ell]) < 1e-4
    total = sum(t.mobius * (t.main + t.residual) for t in terms)
    assert total == pytest.approx(float(sieve_count_formula_subgraph(graph, h, ell)))


def test_square_walks_intercept_three_quarters(c4):
    monoid = HikeMonoid(c4, 2)
    report = theorem1_asymptotic_check(c4, monoid.primes[EDGE_01], 20)
    assert report.centrality == pytest.approx(0.75)
    assert report.converged
    assert report.final_error == pytest.approx(0.0, abs=1e-12)
    assert all(row.count_sieved == row.predicted for row in report.rows)
    assert [row.supported for row in report.rows[:3]] == [True, False, True]
    assert report.rows[0].ratio_unshifted == pytest.approx(0.25)


def test_two_cycle_walks_intercept_everything(two_cycle):
    gamma = HikeMonoid(two_cycle, 2).primes[0]
    report = theorem1_asymptotic_check(two_cycle, gamma, 12)
    assert report.centrality == pytest.approx(1.0)
    assert report.converged
    assert report.f_limit == pytest.approx(0.5)


def test_clique_walks_converge(k4):
    gamma = HikeMonoid(k4, 2).primes[0]
    report = theorem1_asymptotic_check(k4, gamma, 40)
    assert report.centrality == pytest.approx(8 / 9)
    assert report.converged
    assert report.final_error < 1e-6
    assert report.rows[-1].f_value == pytest.approx(1 / linalg.eta(k4), rel=1e-6)


def test_walk_asymptotics_need_strong_connectivity():
    g = load_edge_list("a,b\nb,a\nb,c\n", directed=True)
    gamma = HikeMonoid(g, 2).primes[0]
    with pytest.raises(UnsupportedGraphError):
        theorem1_asymptotic_check(g, gamma, 10)


def test_periodic_walks_only_report_supported_lengths():
    g = load_edge_list("a,b\nb,c\nc,a\n", directed=True)
    (gamma,) = HikeMonoid(g, 3).primes
    report = theorem1_asymptotic_check(g, gamma, 12)
    assert report.multiplicity == 3
    assert report.converged
    assert [row.ell for row in report.rows if row.supported] == [0, 3, 6, 9]


def test_disjoint_hikes_multiply_their_lengths_and_signs():
    monoid = HikeMonoid(cycle_graph(6), 6)
    left_part = VertexSubset.of([0, 1, 2])
    right_part = VertexSubset.of([3, 4, 5])
    left_primes = monoid.primes_within(left_part)
    right_primes = monoid.primes_within(right_part)
    left = [h for h in monoid.hikes_by_length[4] if left_primes.issuperset(h.word)]
    right = [h for h in monoid.hikes_by_length[2] if right_primes.issuperset(h.word)]
    assert left and right
    for h1 in left:
        for h2 in right:
            product = monoid.multiply(h1, h2)
            assert product.length == h1.length + h2.length
            assert monoid.mobius(product) == monoid.mobius(h1) * monoid.mobius(h2)
            assert product == monoid.multiply(h2, h1)


@pytest.mark.parametrize("graph", [complete_graph(3), complete_graph(4)])
def test_scaled_error_terms_shrink_with_length(graph):
    lam, _ = linalg.spectral_radius(graph)
    h = VertexSubset.of(range(graph.n))

    def worst(ell: int) -> float:
        # lambda^(l(d) - ell) * |r(d)| = |f(ell - l(d)) - f(ell)|
        return max(
            lam ** (t.divisor.length - ell) * abs(t.residual)
            for t in sieve_error_terms(graph, h, ell)
        )

    assert worst(50) <= worst(10) / 10
