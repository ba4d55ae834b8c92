"""Hikes: traces of simple cycles under the commutation of disjoint cycles.

Words are kept in lexicographic normal form. A letter may follow a normal
word iff, walking backwards over the trailing letters it commutes with, none
of them is larger than it. Two letters commute exactly when their cycles
are vertex-disjoint, so a cycle never commutes with itself.

Every count here is exact: hikes are enumerated one by one and compared
against coefficients of series computed over the integers or rationals.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from fractions import Fraction
from functools import cached_property

import numpy as np

from ...config import FlowCentralityConfigurations, default_config
from ..domain.cycle import SimpleCyclePrime
from ..domain.errors import (
    BudgetExceededError,
    SpectrumError,
    UnsupportedGraphError,
)
from ..domain.graph import Graph, VertexSubset
from ..domain.hike import (
    AsymptoticReport,
    Hike,
    MobiusIdentityReport,
    SieveDiagnostics,
    SieveErrorTerm,
)
from ..domain.series import PowerSeries
from . import linalg
from .centrality import CentralityService
from .enumeration import simple_cycles
from .graphs import induced_subgraph, is_strongly_connected

logger = logging.getLogger(__name__)

Exact = int | Fraction


class HikeMonoid:
    """The hikes of a graph built on its prime table up to `max_len`.

    Hike words index into `primes`, which is sorted by (length, vertices).
    """

    def __init__(
        self,
        graph: Graph,
        max_len: int,
        settings: FlowCentralityConfigurations | None = None,
    ) -> None:
        if max_len < 0:
            raise ValueError(f"max_len must be non-negative, got {max_len}")
        self.graph = graph
        self.max_len = max_len
        self.settings = settings or default_config()
        self.primes: tuple[SimpleCyclePrime, ...] = (
            tuple(simple_cycles(graph, max_len)) if max_len and graph.n else ()
        )
        self._index = {p.vertices: i for i, p in enumerate(self.primes)}
        sets = [frozenset(p.vertices) for p in self.primes]
        size = len(self.primes)
        self._disjoint = np.zeros((size, size), dtype=bool)
        for a in range(size):
            for b in range(a + 1, size):
                self._disjoint[a, b] = self._disjoint[b, a] = sets[a].isdisjoint(sets[b])
        logger.debug("Prime table: %d simple cycles up to length %d", size, max_len)

    # letters

    def prime_index(self, gamma: SimpleCyclePrime) -> int:
        try:
            return self._index[gamma.vertices]
        except KeyError:
            raise ValueError(
                f"Cycle {gamma.vertices} is not a prime of length <= {self.max_len} "
                "on this graph"
            ) from None

    def commutes(self, a: int, b: int) -> bool:
        return bool(self._disjoint[a, b])

    def primes_within(self, h: VertexSubset) -> frozenset[int]:
        inside = set(h)
        return frozenset(
            i for i, p in enumerate(self.primes) if inside.issuperset(p.vertices)
        )

    def _length(self, word: Iterable[int]) -> int:
        return sum(self.primes[a].length for a in word)

    # normal forms

    def can_append(self, word: Sequence[int], a: int) -> bool:
        for b in reversed(word):
            if not self.commutes(a, b):
                return True
            if b > a:
                return False
        return True

    def normalize(self, word: Sequence[int]) -> tuple[int, ...]:
        """Lexicographically least word of the trace of `word`."""
        remaining = list(word)
        out: list[int] = []
        while remaining:
            best = None
            for i, a in enumerate(remaining):
                if all(self.commutes(a, b) for b in remaining[:i]):
                    if best is None or a < remaining[best]:
                        best = i
            out.append(remaining.pop(best))
        return tuple(out)

    def hike(self, word: Sequence[int]) -> Hike:
        normal = self.normalize(word)
        return Hike(word=normal, length=self._length(normal))

    def multiply(self, h1: Hike, h2: Hike) -> Hike:
        return self.hike(h1.word + h2.word)

    # arithmetic of a single hike

    def mobius(self, h: Hike) -> int:
        word = h.word
        for i, a in enumerate(word):
            for b in word[i + 1 :]:
                if not self.commutes(a, b):
                    return 0
        return -1 if len(word) % 2 else 1

    def right_prime_divisors(self, h: Hike) -> frozenset[int]:
        word = h.word
        return frozenset(
            a
            for i, a in enumerate(word)
            if all(self.commutes(a, b) for b in word[i + 1 :])
        )

    def is_walk(self, h: Hike) -> bool:
        return len(self.right_prime_divisors(h)) == 1

    @cached_property
    def _exact_adj(self) -> np.ndarray:
        return linalg.exact_matrix(self.graph, linalg.arithmetic_for(self.graph, exact=True))

    def exact_weight(self, h: Hike) -> Exact:
        weight: Exact = 1
        for a in h.word:
            for u, v in self.primes[a].arcs:
                weight *= self._exact_adj[u, v]
        return weight

    # enumeration

    def _check_budget(self) -> None:
        if not self.graph.unweighted:
            raise UnsupportedGraphError(
                "Hike enumeration counts unweighted hikes; the graph has weights"
            )
        zeta = linalg.zeta_coefficients(self.graph, self.max_len, exact=True)
        estimate = int(sum(zeta.coeffs))
        budget = self.settings.HIKE_BUDGET
        if estimate > budget:
            raise BudgetExceededError(
                f"Hikes up to length {self.max_len}", estimate, budget
            )
        logger.info("Enumerating %d hikes up to length %d", estimate, self.max_len)

    @cached_property
    def hikes_by_length(self) -> list[list[Hike]]:
        self._check_budget()
        words: list[list[tuple[int, ...]]] = [[] for _ in range(self.max_len + 1)]
        words[0].append(())
        stack: list[tuple[tuple[int, ...], int]] = [((), 0)]
        while stack:
            word, length = stack.pop()
            for a, prime in enumerate(self.primes):
                grown = length + prime.length
                if grown > self.max_len:
                    break
                if self.can_append(word, a):
                    child = word + (a,)
                    words[grown].append(child)
                    stack.append((child, grown))
        return [
            [Hike(word=w, length=ell) for w in sorted(group)]
            for ell, group in enumerate(words)
        ]

    @cached_property
    def _divisors_by_length(self) -> list[list[frozenset[int]]]:
        return [
            [self.right_prime_divisors(h) for h in group] for group in self.hikes_by_length
        ]

    def counts(self) -> list[int]:
        return [len(group) for group in self.hikes_by_length]

    def _require_length(self, ell: int) -> None:
        if not 0 <= ell <= self.max_len:
            raise ValueError(f"Length {ell} lies outside the enumerated range [0, {self.max_len}]")

    def sieve_count_bruteforce_subgraph(self, h: VertexSubset, ell: int) -> int:
        """Hikes of length ell without a right prime divisor inside h."""
        if ell < 0:
            return 0
        self._require_length(ell)
        sieve = self.primes_within(h)
        return sum(1 for divisors in self._divisors_by_length[ell] if divisors.isdisjoint(sieve))

    def sieve_count_bruteforce(self, gamma: SimpleCyclePrime, ell: int) -> int:
        return self.sieve_count_bruteforce_subgraph(
            gamma.vertex_set.complement(self.graph.n), ell
        )

    def walk_count_bruteforce(self, gamma: SimpleCyclePrime, k: int) -> int:
        """Hikes of length k whose only right prime divisor is gamma."""
        if k < gamma.length:
            return 0
        self._require_length(k)
        target = frozenset((self.prime_index(gamma),))
        return sum(1 for divisors in self._divisors_by_length[k] if divisors == target)

    def walk_factorization_holds(self, gamma: SimpleCyclePrime, k: int) -> bool:
        """Stripping gamma off each walk of length k is a bijection onto the sieved cofactors."""
        if k < gamma.length:
            return True
        self._require_length(k)
        index = self.prime_index(gamma)
        target = frozenset((index,))
        cofactors = []
        for h, divisors in zip(self.hikes_by_length[k], self._divisors_by_length[k]):
            if divisors != target:
                continue
            cofactor = Hike(word=h.word[:-1], length=k - gamma.length)
            if self.multiply(cofactor, Hike(word=(index,), length=gamma.length)) != h:
                return False
            cofactors.append(cofactor.word)
        ell = k - gamma.length
        sieve = self.primes_within(gamma.vertex_set.complement(self.graph.n))
        sieved = {
            h.word
            for h, divisors in zip(self.hikes_by_length[ell], self._divisors_by_length[ell])
            if divisors.isdisjoint(sieve)
        }
        return len(cofactors) == len(set(cofactors)) and set(cofactors) == sieved

    def self_avoiding_hikes(self, within: VertexSubset | None = None) -> list[Hike]:
        """Every set of pairwise disjoint primes, the identity included."""
        allowed = (
            self.primes_within(within) if within is not None else range(len(self.primes))
        )
        candidates = sorted(allowed)
        found: list[tuple[int, ...]] = []

        def grow(word: tuple[int, ...], start: int) -> None:
            found.append(word)
            for position in range(start, len(candidates)):
                a = candidates[position]
                if all(self.commutes(a, b) for b in word):
                    grow(word + (a,), position + 1)

        grow((), 0)
        return sorted(
            (Hike(word=w, length=self._length(w)) for w in found),
            key=lambda h: (h.length, h.word),
        )


def enumerate_hikes(
    g: Graph, max_len: int, settings: FlowCentralityConfigurations | None = None
) -> list[list[Hike]]:
    return HikeMonoid(g, max_len, settings).hikes_by_length


def _all_primes(g: Graph, settings: FlowCentralityConfigurations | None) -> HikeMonoid:
    return HikeMonoid(g, g.n, settings)


def sieve_count_formula_subgraph(g: Graph, h: VertexSubset, ell: int) -> Exact:
    """[z^ell] det(I - z A_h) / det(I - z A)."""
    if ell < 0:
        return 0
    det_h = linalg.char_poly(induced_subgraph(g, h), exact=True)
    zeta = linalg.zeta_coefficients(g, ell, exact=True)
    return det_h.multiply(zeta, ell)[ell]


def sieve_count_formula(g: Graph, gamma: SimpleCyclePrime, ell: int) -> Exact:
    return sieve_count_formula_subgraph(g, gamma.vertex_set.complement(g.n), ell)


def mobius_det_identity_check(
    g: Graph,
    max_len: int | None = None,
    settings: FlowCentralityConfigurations | None = None,
) -> MobiusIdentityReport:
    """Compare sum mu(d) W(d) z^l(d) over self-avoiding d with det(I - zA)."""
    max_len = g.n if max_len is None else max_len
    monoid = _all_primes(g, settings)
    arithmetic = linalg.arithmetic_for(g, exact=True)
    observed: list[Exact] = [0] * (max_len + 1)
    divisors = monoid.self_avoiding_hikes()
    for d in divisors:
        if d.length <= max_len:
            observed[d.length] += monoid.mobius(d) * monoid.exact_weight(d)
    expected = linalg.char_poly(g, exact=True, settings=settings).truncate(max_len)
    return MobiusIdentityReport(
        expected=expected,
        observed=PowerSeries(coeffs=tuple(observed), arithmetic=arithmetic),
        divisors=len(divisors),
    )


def sieve_error_terms(
    g: Graph,
    h: VertexSubset,
    ell: int,
    settings: FlowCentralityConfigurations | None = None,
) -> list[SieveErrorTerm]:
    if not g.unweighted:
        raise UnsupportedGraphError("The sieve error terms are defined for unweighted graphs")
    lam, _ = linalg.spectral_radius(g, settings=settings)
    zeta = linalg.zeta_coefficients(g, ell, exact=True)
    monoid = _all_primes(g, settings)
    terms = []
    for d in monoid.self_avoiding_hikes(within=h):
        prob = lam ** (-d.length)
        main = prob * float(zeta[ell])
        shifted = float(zeta[ell - d.length]) if d.length <= ell else 0.0
        terms.append(
            SieveErrorTerm(
                divisor=d, mobius=monoid.mobius(d), main=main, prob=prob, residual=shifted - main
            )
        )
    return terms


def theorem1_asymptotic_check(
    g: Graph,
    gamma: SimpleCyclePrime,
    k_max: int,
    tolerance: float = 0.01,
    settings: FlowCentralityConfigurations | None = None,
) -> AsymptoticReport:
    """Walks ending in gamma against c(gamma) times the hike count of the cofactor length.

    The ratio n_gamma(k) / zeta[k - l(gamma)] is the one expected to converge
    to c(gamma); the ratio against zeta[k] is reported alongside it.
    """
    settings = settings or default_config()
    if not is_strongly_connected(g):
        raise UnsupportedGraphError("The walk asymptotics need a strongly connected graph")
    spectrum = linalg.spectrum(g, exact=True, settings=settings)
    if not spectrum.simple:
        raise SpectrumError("The walk asymptotics need a simple Perron root")
    lam, scaling = spectrum.lam, spectrum.multiplicity
    centrality = CentralityService(g, settings, lam=lam).value(gamma.vertex_set.members)

    rest = gamma.vertex_set.complement(g.n)
    zeta = linalg.zeta_coefficients(g, k_max, exact=True, settings=settings)
    det_rest = linalg.char_poly(induced_subgraph(g, rest), exact=True, settings=settings)
    predicted = det_rest.multiply(zeta, k_max)
    monoid = _all_primes(g, settings)
    divisors = [
        (d.length, monoid.mobius(d) * monoid.exact_weight(d))
        for d in monoid.self_avoiding_hikes(within=rest)
    ]

    rows = []
    for k in range(gamma.length, k_max + 1):
        ell = k - gamma.length
        count = sum(
            (sign * zeta[ell - length] for length, sign in divisors if length <= ell),
            start=zeta.arithmetic.coerce(0),
        )
        supported = zeta[ell] != 0
        estimate = centrality * float(zeta[ell])
        rows.append(
            SieveDiagnostics(
                k=k,
                ell=ell,
                count_sieved=count,
                predicted=predicted[ell],
                prob_estimate=estimate,
                f_value=float(zeta[ell]) / lam ** (scaling * ell),
                residual=float(count) - estimate,
                ratio_shifted=float(Fraction(count) / Fraction(zeta[ell])) if supported else None,
                ratio_unshifted=float(Fraction(count) / Fraction(zeta[k])) if zeta[k] != 0 else None,
                supported=supported,
            )
        )

    final = next((r for r in reversed(rows) if r.supported), None)
    final_error = abs(final.ratio_shifted - centrality) if final is not None else None
    return AsymptoticReport(
        gamma=gamma,
        centrality=centrality,
        lam=lam,
        multiplicity=scaling,
        f_limit=1.0 / spectrum.eta if spectrum.eta else None,
        rows=tuple(rows),
        final_error=final_error,
        converged=final_error is not None and final_error <= tolerance,
    )
