"""Arithmetic in the algebra spanned by the basis Laplacians ``Q_2, ..., Q_n``.

An element is identified with its coordinate vector, which is exactly the
weight vector of the corresponding threshold graph, so elements are plain
:class:`~wtgraph.threshold.WeightVector` instances.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .exceptions import NotInAlgebra
from .numkernel import TOL, as_matrix, matrices_equal
from .threshold import WeightVector, check_basis_index, laplacian

AlgebraElement = WeightVector


def _check_same_order(a: WeightVector, b: WeightVector) -> None:
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: n={a.n} vs n={b.n}")


def decompose(m, tol: float | None = TOL) -> WeightVector:
    """Coordinates of ``m`` in the basis ``Q_2..Q_n``.

    The only possible candidate is read off the first row (``w_j = -m[1, j]``);
    it is accepted when its Laplacian reproduces ``m`` entrywise.

    Raises
    ------
    NotInAlgebra
        If ``m`` is not the Laplacian of a weighted threshold graph.
    """
    m = as_matrix(m)
    exact = m.dtype == object
    candidate = WeightVector(tuple(-x for x in m[0, 1:]), exact=exact)
    rebuilt = laplacian(candidate)
    if not matrices_equal(rebuilt, m, tol):
        bad = np.argwhere(~_entrywise_match(rebuilt, m, tol))[0] + 1
        raise NotInAlgebra(
            f"entry ({bad[0]}, {bad[1]}) does not match the Laplacian "
            f"of the threshold graph read from row 1"
        )
    return candidate


def _entrywise_match(a, b, tol):
    if tol is None or (a.dtype == object and b.dtype == object):
        return a == b
    fa, fb = a.astype(float), b.astype(float)
    return np.abs(fa - fb) <= tol * np.maximum(1.0, np.maximum(np.abs(fa), np.abs(fb)))


def basis_power(n: int, i: int, p: int) -> WeightVector:
    """``Q_i ** p`` in coordinates: ``i^(p-1)`` at ``i``, ``-(1 + i + ... + i^(p-2))`` below."""
    check_basis_index(n, i)
    if p < 1:
        raise ValueError(f"power must be >= 1, got {p}")
    geometric = sum(i**k for k in range(p - 1))
    w = [0] * (n - 1)
    w[i - 2] = i ** (p - 1)
    for j in range(2, i):
        w[j - 2] = -geometric
    return WeightVector(tuple(w), exact=True)


def basis_product(n: int, i: int, j: int) -> WeightVector:
    """``Q_i Q_j``: equals ``Q_min(i, j)`` for distinct indices, ``Q_i ** 2`` otherwise."""
    check_basis_index(n, i)
    check_basis_index(n, j)
    if i == j:
        return basis_power(n, i, 2)
    return WeightVector.unit(n, min(i, j))


def product(a: WeightVector, b: WeightVector) -> WeightVector:
    """Coordinates of ``Q_a Q_b`` from the closed-form product rule, in O(n).

    Coordinate ``i`` is ``i a_i b_i - sum_{j>i} (a_j b_j - a_i b_j - a_j b_i)``;
    the three suffix sums are accumulated from the right.
    """
    _check_same_order(a, b)
    exact = a.exact and b.exact
    zero = Fraction(0) if exact else 0.0
    wa, wb = a.weights, b.weights
    n = a.n
    out = [zero] * (n - 1)
    s_ab = s_a = s_b = zero
    for i in range(n, 1, -1):
        x, y = wa[i - 2], wb[i - 2]
        out[i - 2] = i * x * y - (s_ab - x * s_b - y * s_a)
        s_ab += x * y
        s_a += x
        s_b += y
    return WeightVector(tuple(out), exact=exact)


def add(a: WeightVector, b: WeightVector) -> WeightVector:
    _check_same_order(a, b)
    return WeightVector(tuple(x + y for x, y in zip(a.weights, b.weights)), exact=a.exact and b.exact)


def scale(c, a: WeightVector) -> WeightVector:
    exact = a.exact and isinstance(c, (int, Fraction))
    return WeightVector(tuple(c * x for x in a.weights), exact=exact)


def negate(a: WeightVector) -> WeightVector:
    return scale(-1, a)
