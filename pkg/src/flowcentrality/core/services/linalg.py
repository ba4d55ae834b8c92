"""Determinants, characteristic polynomials and the dominant eigenpair.

The characteristic polynomial is always handled in the reversed form
det(I - zA) = sum_k c_k z^k, whose reciprocal is the hike zeta function.
"""

from __future__ import annotations

import logging
import warnings
from fractions import Fraction

import numpy as np
import scipy.linalg
from scipy.linalg import LinAlgWarning

from ...config import FlowCentralityConfigurations, default_config
from ..domain.errors import SpectrumError
from ..domain.graph import Graph, VertexSubset
from ..domain.series import Arithmetic, PowerSeries
from ..domain.spectrum import Spectrum
from .graphs import is_connected, is_strongly_connected

logger = logging.getLogger(__name__)


class PowerIterationDiverged(SpectrumError): ...


def determinant(m: np.ndarray) -> float:
    """LU determinant with partial pivoting; the 0x0 determinant is 1."""
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"Determinant needs a square matrix, got shape {m.shape}")
    if m.shape[0] == 0:
        return 1.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(m, check_finite=False)
    swaps = np.count_nonzero(piv != np.arange(piv.size))
    sign = -1.0 if swaps % 2 else 1.0
    return float(sign * np.prod(np.diag(lu)))


def arithmetic_for(
    g: Graph,
    exact: bool | None = None,
    settings: FlowCentralityConfigurations | None = None,
) -> Arithmetic:
    """Exact unless asked otherwise, or unasked and above EIGEN_CHARPOLY_MIN_N."""
    if exact is False:
        return Arithmetic.FLOAT
    if exact is None and g.n > (settings or default_config()).EIGEN_CHARPOLY_MIN_N:
        return Arithmetic.FLOAT
    if g.integral:
        return Arithmetic.INTEGER
    return Arithmetic.RATIONAL if exact else Arithmetic.FLOAT


def exact_matrix(g: Graph, arithmetic: Arithmetic) -> np.ndarray:
    """Object-dtype copy of the adjacency holding ints or Fractions."""
    if arithmetic is Arithmetic.INTEGER:
        convert = int
    else:
        def convert(x: float) -> Fraction:
            return Fraction(repr(float(x)))
    return np.array(
        [[convert(x) for x in row] for row in g.adj], dtype=object
    ).reshape(g.n, g.n)


def _faddeev_leverrier(a: np.ndarray, arithmetic: Arithmetic) -> list:
    n = a.shape[0]
    if arithmetic.exact:
        identity = np.zeros((n, n), dtype=object)
        for i in range(n):
            identity[i, i] = 1
        m = np.zeros((n, n), dtype=object)
    else:
        identity = np.eye(n)
        m = np.zeros((n, n))
    coeffs = [arithmetic.coerce(1)]
    for k in range(1, n + 1):
        m = a @ m + coeffs[-1] * identity
        trace = -np.trace(a @ m)
        if arithmetic is Arithmetic.INTEGER:
            quotient, remainder = divmod(int(trace), k)
            if remainder:
                raise ArithmeticError("Integer Faddeev-LeVerrier step is inexact")
            coeffs.append(quotient)
        elif arithmetic is Arithmetic.RATIONAL:
            coeffs.append(Fraction(trace) / k)
        else:
            coeffs.append(float(trace) / k)
    return coeffs


def eigenvalues(g: Graph) -> np.ndarray:
    if not g.directed or np.array_equal(g.adj, g.adj.T):
        return scipy.linalg.eigvalsh(g.adj).astype(np.complex128)
    return scipy.linalg.eigvals(g.adj)


def char_poly(
    g: Graph,
    exact: bool | None = None,
    settings: FlowCentralityConfigurations | None = None,
) -> PowerSeries:
    """Coefficients of det(I - zA); exact over integer weights."""
    settings = settings or default_config()
    arithmetic = arithmetic_for(g, exact, settings)
    if g.n == 0:
        return PowerSeries(coeffs=(1,), arithmetic=arithmetic)

    if arithmetic.exact:
        coeffs = _faddeev_leverrier(exact_matrix(g, arithmetic), arithmetic)
        return PowerSeries(coeffs=tuple(coeffs), arithmetic=arithmetic)

    if g.n > settings.CONDITION_WARNING_N:
        logger.warning(
            "Floating characteristic polynomial of a %d-vertex graph is "
            "ill-conditioned; coefficients carry large relative errors",
            g.n,
        )
    if g.n > settings.EIGEN_CHARPOLY_MIN_N:
        coeffs = np.real(np.poly(eigenvalues(g)))
    else:
        coeffs = _faddeev_leverrier(np.array(g.adj, dtype=np.float64), arithmetic)
    return PowerSeries(coeffs=tuple(float(c) for c in coeffs), arithmetic=arithmetic)


def series_inverse(p: PowerSeries, order: int) -> PowerSeries:
    """First `order + 1` coefficients of 1/p, for p with constant term 1."""
    if p[0] != 1:
        raise ArithmeticError("Series inversion needs a unit constant term")
    zero = p.arithmetic.coerce(0)
    degree = p.degree()
    h = [p.arithmetic.coerce(1)]
    for ell in range(1, order + 1):
        acc = zero
        for i in range(1, min(ell, degree) + 1):
            acc += p[i] * h[ell - i]
        h.append(-acc)
    return PowerSeries(coeffs=tuple(h[: order + 1]), arithmetic=p.arithmetic)


def zeta_coefficients(
    g: Graph,
    order: int,
    exact: bool | None = None,
    settings: FlowCentralityConfigurations | None = None,
) -> PowerSeries:
    """Coefficients of 1/det(I - zA): the number of hikes of each length."""
    if order < 0:
        raise ValueError(f"Series order must be non-negative, got {order}")
    return series_inverse(char_poly(g, exact=exact, settings=settings), order)


def power_iteration(
    adj: np.ndarray, max_iter: int, tol: float
) -> tuple[float, np.ndarray]:
    n = adj.shape[0]
    symmetric = np.array_equal(adj, adj.T)
    x = np.full(n, 1.0 / np.sqrt(n))
    for _ in range(max_iter):
        y = adj @ x
        norm = np.linalg.norm(y)
        if norm == 0:
            return 0.0, x
        y /= norm
        if np.linalg.norm(y - x) < tol:
            lam = float(y @ adj @ y) if symmetric else float(np.linalg.norm(adj @ y))
            return lam, y
        x = y
    raise PowerIterationDiverged(
        f"Power iteration did not converge in {max_iter} steps"
    )


def _dominant_counts(
    eigenvalues: np.ndarray, lam: float, tol: float
) -> tuple[int, bool]:
    moduli = np.abs(eigenvalues)
    multiplicity = int(np.count_nonzero(np.abs(moduli - lam) <= tol * lam))
    simple = int(np.count_nonzero(np.abs(eigenvalues - lam) <= tol * lam)) == 1
    return max(multiplicity, 1), simple


def _dominant(
    g: Graph, tol: float | None, settings: FlowCentralityConfigurations
) -> tuple[float, int, bool, np.ndarray]:
    tol = tol if tol is not None else settings.MULTIPLICITY_TOLERANCE
    if g.n == 0 or not g.adj.any():
        raise SpectrumError(
            "Spectral radius is 0: the centrality is undefined on this graph"
        )
    if not g.nonnegative:
        logger.warning("Negative weights present: c(H) is not bounded to [0, 1]")

    if g.n <= settings.ROOT_FALLBACK_MAX_N:
        roots = eigenvalues(g)
        lam = float(np.max(np.abs(roots)))
    else:
        try:
            lam, _ = power_iteration(
                g.adj, settings.POWER_ITERATION_MAX_ITER, settings.POWER_ITERATION_TOL
            )
        except PowerIterationDiverged as exc:
            raise SpectrumError(
                f"{exc}. The graph is likely periodic (e.g. bipartite); with "
                f"n={g.n} > {settings.ROOT_FALLBACK_MAX_N} the characteristic-root "
                "fallback is disabled. Raise FLOWCENTRALITY_ROOT_FALLBACK_MAX_N "
                "or add self-loops to break the periodicity."
            ) from exc
        logger.debug("Power iteration gave lambda=%.17g", lam)
        roots = eigenvalues(g)

    if lam <= tol:
        raise SpectrumError(
            "Spectral radius is 0: the centrality is undefined on this graph"
        )
    multiplicity, simple = _dominant_counts(roots, lam, tol)
    return lam, multiplicity, simple, roots


def spectral_radius(
    g: Graph,
    tol: float | None = None,
    settings: FlowCentralityConfigurations | None = None,
) -> tuple[float, int]:
    """Dominant eigenvalue and the number of roots sharing its modulus."""
    lam, multiplicity, _, _ = _dominant(g, tol, settings or default_config())
    return lam, multiplicity


def _eta_from(poly: PowerSeries, lam: float) -> float:
    return -poly.derivative().evaluate(1.0 / lam) / lam


def _eta_from_roots(roots: np.ndarray, lam: float) -> float:
    rest = np.delete(roots, int(np.argmin(np.abs(roots - lam))))
    return float(np.real(np.prod(1.0 - rest / lam)))


def _eta(poly: PowerSeries, roots: np.ndarray, lam: float) -> float:
    # floating coefficients lose the derivative to cancellation
    return _eta_from(poly, lam) if poly.arithmetic.exact else _eta_from_roots(roots, lam)


def eta(g: Graph, settings: FlowCentralityConfigurations | None = None) -> float:
    """prod_{i>1} (1 - lambda_i / lambda) over the roots already found for lambda.

    This is -(1/lambda) d/dz det(I - zA) at z = 1/lambda without building
    the polynomial, so it stays cheap on large graphs.
    """
    settings = settings or default_config()
    lam, _, simple, roots = _dominant(g, None, settings)
    if not simple:
        raise SpectrumError("eta needs a simple dominant eigenvalue (eta would be 0)")
    return _eta_from_roots(roots, lam)


def perron_limit(g: Graph, settings: FlowCentralityConfigurations | None = None) -> float:
    """Limit of zeta[l] / lambda^l, that is 1/eta."""
    return 1.0 / eta(g, settings=settings)


def dominant_eigenvector(
    g: Graph, settings: FlowCentralityConfigurations | None = None
) -> np.ndarray:
    """Entrywise-positive unit Perron vector of an irreducible graph."""
    if g.n == 0:
        raise SpectrumError("The empty graph has no dominant eigenvector")
    connected = (
        is_strongly_connected(g)
        if g.directed
        else is_connected(g, VertexSubset.full(g.n))
    )
    if not connected:
        raise SpectrumError(
            "The graph is not irreducible; compute the dominant eigenvector "
            "of each connected component separately"
        )
    if not g.nonnegative:
        raise SpectrumError("The Perron vector needs nonnegative weights")
    if g.n == 1:
        return np.ones(1)

    if not g.directed or np.array_equal(g.adj, g.adj.T):
        values, vectors = scipy.linalg.eigh(g.adj)
        vector = vectors[:, int(np.argmax(values))]
    else:
        values, vectors = scipy.linalg.eig(g.adj)
        vector = np.real(vectors[:, int(np.argmax(np.real(values)))])
    if vector.sum() < 0:
        vector = -vector
    return vector / np.linalg.norm(vector)


def spectrum(
    g: Graph,
    exact: bool | None = None,
    settings: FlowCentralityConfigurations | None = None,
) -> Spectrum:
    settings = settings or default_config()
    lam, multiplicity, simple, roots = _dominant(g, None, settings)
    poly = char_poly(g, exact=exact, settings=settings)
    try:
        vector = dominant_eigenvector(g, settings=settings)
    except SpectrumError:
        vector = None
    return Spectrum(
        lam=lam,
        multiplicity=multiplicity,
        simple=simple,
        eta=_eta(poly, roots, lam) if simple else None,
        dominant_vector=vector,
        char_poly=poly,
    )
