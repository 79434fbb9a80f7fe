"""Exact and definitional average-resistance computations.

Three independent routes coexist: closed-form expressions (ring formula,
hypercube binomial sum and recursion), spectral sums over closed-form
eigenvalue streams, and the electrical-network oracle that solves grounded
linear systems straight from the definition. Cross-checking them is the
package's core correctness argument.
"""

from __future__ import annotations

import math

import numpy as np

from .eigen import eigenvalues_symmetric
from .errors import InvalidFamily, Overflow, SizeExceeded
from .families import Explicit, GraphFamily, Hypercube, Ring, Torus
from .laplacian import build_laplacian
from .linsolve import GroundedSolver
from .spectrum import (
    MAX_EXACT_HYPERCUBE,
    ResistanceResult,
    hypercube_spectrum,
    spectral_rave,
    stream_from_eigenvalues,
    torus_spectrum,
)
from .summation import EPS, CompensatedSum

MAX_TERMS = 10**8
ORACLE_NODE_CAP = 256


def rave_ring_exact(m: int) -> ResistanceResult:
    """Closed-form ring average resistance m/12 - 1/(12 m)."""
    if m < 1:
        raise InvalidFamily(f"ring length must be >= 1, got {m}")
    value = m / 12.0 - 1.0 / (12.0 * m)
    return ResistanceResult(value, "closed_form", 1, 2.0 * EPS * abs(value))


def rave_torus(
    dims: list[int] | tuple[int, ...],
    threads: int = 1,
    max_terms: int = MAX_TERMS,
) -> ResistanceResult:
    """Spectral average resistance of a toroidal grid."""
    stream = torus_spectrum(dims)
    if stream.count > max_terms:
        raise SizeExceeded(f"{stream.count} spectral terms exceed the cap {max_terms}")
    return spectral_rave(stream, threads=threads)


def rave_hypercube_binomial(d: int) -> ResistanceResult:
    """Hypercube average resistance via the binomial sum.

    Evaluates 2^{-d} * sum_{m=1..d} C(d, m) / (2m) with compensated
    summation, m descending so the smallest terms enter last.
    """
    if d < 0:
        raise InvalidFamily(f"hypercube dimension must be >= 0, got {d}")
    if d > MAX_EXACT_HYPERCUBE:
        raise Overflow(
            f"binomial multiplicities for d={d} exceed the exact integer range"
        )
    acc = CompensatedSum()
    for m in range(d, 0, -1):
        acc.add(math.comb(d, m) / (2.0 * m))
    scale = float(2**d)
    return ResistanceResult(acc.value / scale, "closed_form", d, acc.err_bound / scale)


def rave_hypercube_recursive(d: int) -> ResistanceResult:
    """Hypercube average resistance via the dimension recursion.

    r(0) = 0 and r(k) = r(k-1)/2 + (1 - 2^{-k}) / (2k): adding a dimension
    halves the previous value and contributes one new spectral layer.
    """
    if d < 0:
        raise InvalidFamily(f"hypercube dimension must be >= 0, got {d}")
    value = 0.0
    for k in range(1, d + 1):
        value = 0.5 * value + (1.0 - 0.5**k) / (2.0 * k)
    return ResistanceResult(value, "recursion", d, 4.0 * EPS * value * max(d, 1))


def pairwise_reff(g: GraphFamily, u: int, v: int) -> float:
    """Effective resistance between two nodes of a unit-resistor network.

    Injects a unit current at u, extracts it at v, and reads the potential
    difference off the grounded solve.
    """
    n = g.node_count()
    if u == v:
        raise ValueError("pairwise resistance requires two distinct nodes")
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"nodes ({u}, {v}) outside [0, {n})")
    lap = build_laplacian(g)
    b = np.zeros(n)
    b[u] = 1.0
    b[v] = -1.0
    w = GroundedSolver(lap, ground=v).solve(b)
    return float(w[u] - w[v])


def rave_definition_oracle(g: GraphFamily, node_cap: int = ORACLE_NODE_CAP) -> ResistanceResult:
    """Definition-based oracle: all-pairs effective resistances, averaged.

    The definition sums ordered pairs with a 1/(2 N^2) prefactor; the loop
    below covers unordered pairs and doubles, which cancels the factor of
    two exactly. Pair resistances come from one grounded factorization and
    its basis-injection potentials.
    """
    n = g.node_count()
    if n > node_cap:
        raise SizeExceeded(f"{n} nodes exceed the oracle cap {node_cap}")
    if n == 1:
        return ResistanceResult(0.0, "oracle_definition", 0, 0.0)
    lap = build_laplacian(g)
    green = GroundedSolver(lap, ground=0).green_matrix()
    diag = np.diag(green)
    pair_reff = diag[:, None] + diag[None, :] - green - green.T
    iu = np.triu_indices(n, k=1)
    unordered = pair_reff[iu]
    total = 2.0 * float(np.sum(unordered))
    value = total / (2.0 * n * n)
    err = 2.0 * EPS * 2.0 * float(np.sum(np.abs(unordered))) / (2.0 * n * n)
    return ResistanceResult(value, "oracle_definition", n * (n - 1) // 2, err)


def rave(g: GraphFamily, threads: int = 1, max_terms: int = MAX_TERMS) -> ResistanceResult:
    """Average resistance of any family, using the natural method for each."""
    if isinstance(g, Ring):
        return rave_ring_exact(g.m)
    if isinstance(g, Torus):
        return rave_torus(g.dims, threads=threads, max_terms=max_terms)
    if isinstance(g, Hypercube):
        return rave_hypercube_binomial(g.d)
    if isinstance(g, Explicit):
        eigs = eigenvalues_symmetric(build_laplacian(g), tol=1e-13)
        return spectral_rave(stream_from_eigenvalues(eigs), threads=threads)
    raise InvalidFamily(f"unknown graph family {type(g).__name__}")


def hypercube_ad_direct(d: int) -> float:
    """Growth coefficient a_d = d * 2^{-(d+1)} * sum_{i=1..d} 2^i / i.

    Scales the hypercube upper-bound sum by the dimension; the sequence
    tends to 1, certifying that d times the average resistance does too.
    """
    if d < 0:
        raise InvalidFamily(f"dimension must be >= 0, got {d}")
    if d == 0:
        return 0.0
    acc = CompensatedSum()
    for i in range(1, d + 1):
        acc.add((2**i) / i)
    return d * acc.value / float(2 ** (d + 1))


def hypercube_ad_recursive(d: int) -> float:
    """Same coefficient via a_{k+1} = (1 + 1/k) a_k / 2 + 1/2, a_0 = 0."""
    if d < 0:
        raise InvalidFamily(f"dimension must be >= 0, got {d}")
    if d == 0:
        return 0.0
    a = 0.5  # a_1, the recursion seed past the vacuous k = 0 step
    for k in range(1, d):
        a = 0.5 * (1.0 + 1.0 / k) * a + 0.5
    return a
