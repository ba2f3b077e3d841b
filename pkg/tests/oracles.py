"""Independent reference implementations used only by the tests.

Probabilities are computed here from explicit complex state-vector
amplitudes: build the two-qubit vector, build each measurement's
eigenvectors, and square the inner product. No trigonometric closed
forms are shared with the package, so agreement is meaningful.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

import numpy as np

OUTCOMES = ((1, 1), (1, -1), (-1, 1), (-1, -1))


def eigenvector(beta, alpha, gamma, outcome):
    """Components (on u, on v) of the +-1 eigenvector with free phases."""
    beta = np.asarray(beta, dtype=float)
    alpha = np.asarray(alpha, dtype=float)
    gamma = np.asarray(gamma, dtype=float)
    if outcome == 1:
        return (
            np.exp(1j * alpha) * np.cos(beta),
            np.exp(1j * gamma) * np.sin(beta),
        )
    return (
        -np.exp(-1j * gamma) * np.sin(beta),
        np.exp(-1j * alpha) * np.cos(beta),
    )


def oracle_probabilities(c1, c2, beta1, delta1, beta2, delta2):
    """Joint probability of every outcome pair, from raw amplitudes.

    delta1 is the particle-1 phase difference (gamma - alpha) and
    delta2 the particle-2 one (alpha - gamma); arbitrary individual
    phases consistent with those differences give the same result, so
    each is realized with one phase pinned to zero and checked against
    a second, shifted realization in the tests.

    Returns a dict {(m, n): probability}, broadcasting over inputs.
    """
    c1 = np.asarray(c1, dtype=float)
    c2 = np.asarray(c2, dtype=float)
    out = {}
    for m, n in OUTCOMES:
        u1, v1 = eigenvector(beta1, 0.0, np.asarray(delta1, dtype=float), m)
        u2, v2 = eigenvector(beta2, np.asarray(delta2, dtype=float), 0.0, n)
        amplitude = c1 * np.conj(u1) * np.conj(u2) + c2 * np.conj(v1) * np.conj(v2)
        out[(m, n)] = np.abs(amplitude) ** 2
    return out


def oracle_correlation(c1, c2, beta1, delta1, beta2, delta2):
    probs = oracle_probabilities(c1, c2, beta1, delta1, beta2, delta2)
    return probs[(1, 1)] + probs[(-1, -1)] - probs[(1, -1)] - probs[(-1, 1)]


# ---------- local polytope reference ----------

CORRELATION_VERTICES = tuple(
    sorted(
        {
            (a1 * b1, a1 * b2, a2 * b1, a2 * b2)
            for a1, a2, b1, b2 in product((1, -1), repeat=4)
        }
    )
)


def chsh_facet_membership(e11, e12, e21, e22) -> bool:
    """H-representation check: inside the unit cube and all four
    one-minus CHSH combinations bounded by 2 in absolute value."""
    target = [Fraction(v) for v in (e11, e12, e21, e22)]
    if any(abs(t) > 1 for t in target):
        return False
    e11, e12, e21, e22 = target
    combos = (
        e11 + e12 + e21 - e22,
        e11 + e12 - e21 + e22,
        e11 - e12 + e21 + e22,
        -e11 + e12 + e21 + e22,
    )
    return all(abs(c) <= 2 for c in combos)


def random_local_mixture(rng: np.random.Generator):
    """A random convex combination of the correlation vertices, exact.

    Returns (target tuple of Fractions, weights) with weights summing
    to exactly 1, so the target is realizable by construction.
    """
    raw = [Fraction(int(k), 1) for k in rng.integers(0, 10, len(CORRELATION_VERTICES))]
    total = sum(raw)
    if total == 0:
        raw[0] = Fraction(1)
        total = Fraction(1)
    weights = [w / total for w in raw]
    target = tuple(
        sum(w * Fraction(v[i]) for w, v in zip(weights, CORRELATION_VERTICES))
        for i in range(4)
    )
    return target, weights
