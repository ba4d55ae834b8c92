import pytest

from flowcentrality.core.domain.reports import VerificationStatus
from flowcentrality.core.services.graphs import load_edge_list
from flowcentrality.core.services.verification import (
    Suite,
    VerificationService,
    builtin_graphs,
    spectral_gap_ratio,
)


@pytest.fixture
def service(settings) -> VerificationService:
    return VerificationService(settings, seed=7, max_len=6, k_max=40)


def _statuses(rows) -> set[VerificationStatus]:
    return {row.status for row in rows}


def test_builtin_graphs_are_reproducible():
    first = builtin_graphs(3)
    assert list(first)[:4] == ["P3", "K3", "C4", "K4"]
    assert len(first) == 14
    assert first == builtin_graphs(3)


def test_spectral_gap_ratio(k3, c4):
    assert spectral_gap_ratio(k3) == pytest.approx(0.5)
    assert spectral_gap_ratio(c4) == pytest.approx(1.0)


@pytest.mark.parametrize("suite", [Suite.ZETA, Suite.MOBIUS, Suite.PROJECTOR])
def test_exact_suites_pass(service, suite):
    rows = service.run(suite)
    assert rows
    assert not any(row.failed for row in rows)


def test_sieve_suite_on_the_square(service):
    rows = service.run(Suite.SIEVE)
    assert not any(row.failed for row in rows)
    square = [r for r in rows if r.graph == "C4" and r.subject == "(1 2)" and r.ell == 4]
    assert [(r.expected, r.observed) for r in square] == [("12", "12")]
    assert square[0].centrality == pytest.approx(0.75)


def test_inclusion_exclusion_reports_discrepancies(service):
    rows = service.run(Suite.INCLUSION_EXCLUSION)
    assert not any(row.failed for row in rows)
    triangle = [r for r in rows if r.graph == "K3" and r.subject == "a | b"]
    assert triangle[0].status is VerificationStatus.DISCREPANCY
    assert float(triangle[0].observed) == pytest.approx(1.5)
    expansions = [r for r in rows if r.subject.startswith("expansion")]
    assert expansions and _statuses(expansions) == {VerificationStatus.PASS}


def test_overlapping_parts_are_united_without_duplicates(service):
    rows = [r for r in service.run(Suite.INCLUSION_EXCLUSION) if r.graph == "P3"]
    overlap = [r for r in rows if r.subject == "a;b | b;c"]
    assert len(overlap) == 1
    assert float(overlap[0].expected) == pytest.approx(1.0)
    assert float(overlap[0].observed) == pytest.approx(1.0)
    assert overlap[0].status is VerificationStatus.PASS


def test_projector_rows_on_the_path(service):
    rows = [r for r in service.run(Suite.PROJECTOR) if r.graph == "P3"]
    assert [r.subject for r in rows] == ["a->a", "a->b", "a->c", "b->b", "b->c", "c->c"]
    assert float(rows[3].observed) == pytest.approx(1.0)
    assert rows[0].centrality == pytest.approx(0.5)


@pytest.mark.slow
def test_walk_asymptotics_suite(service):
    rows = service.run(Suite.THEOREM1)
    assert not any(row.failed for row in rows)
    square = [
        r
        for r in rows
        if r.graph == "C4" and r.subject == "(1 2)" and r.status is VerificationStatus.PASS
    ]
    assert square and all(r.ratio == pytest.approx(0.75) for r in square)
    assert VerificationStatus.INFO in _statuses(rows)


def test_unsuitable_input_graphs_are_skipped(service):
    g = load_edge_list("a,b\nb,a\nb,c\n", directed=True)
    rows = service.run(Suite.THEOREM1, user_graph=g)
    skipped = [r for r in rows if r.graph == "input"]
    assert [r.status for r in skipped] == [VerificationStatus.SKIP]
