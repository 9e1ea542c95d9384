"""Closed-form eigensystem of weighted threshold Laplacians.

Every Laplacian of a weighted threshold graph on ``n`` nodes shares the
eigenvectors ``v_1..v_n`` returned by :func:`eigen_basis`, and its nontrivial
eigenvalues depend linearly on the weights::

    mu_i = i * w_i + sum_{j > i} w_j,        i = 2..n

The map ``W -> mu`` is upper triangular and invertible, so any real vector is
the spectrum of some weighted threshold graph (:func:`synthesize`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .numkernel import (
    TOL,
    Polynomial,
    coerce_scalars,
    format_scalar,
    is_exact_scalar,
    scalars_close,
)
from .threshold import WeightVector, _dump_json, _load_json, check_basis_index, degrees


@dataclass(frozen=True)
class Spectrum:
    """Nontrivial Laplacian eigenvalues ``(mu_2, ..., mu_n)`` indexed by node.

    The eigenvalue ``mu_1 = 0`` belonging to the all-ones vector is implied.
    """

    mu: tuple
    exact: bool | None = None

    def __post_init__(self):
        coerced = coerce_scalars(self.mu, self.exact)
        object.__setattr__(self, "mu", coerced)
        object.__setattr__(
            self, "exact", all(isinstance(x, Fraction) for x in coerced) if coerced else bool(self.exact)
        )

    @property
    def n(self) -> int:
        return len(self.mu) + 1

    def __len__(self):
        return len(self.mu)

    def __iter__(self):
        return iter(self.mu)

    def __getitem__(self, k):
        return self.mu[k]

    def __eq__(self, other):
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self.mu == other.mu

    def __hash__(self):
        return hash(self.mu)

    def __repr__(self):
        return f"Spectrum(({', '.join(format_scalar(x) for x in self.mu)}))"

    def full(self) -> list:
        """All ``n`` eigenvalues including the implied zero, sorted ascending."""
        zero = Fraction(0) if self.exact else 0.0
        return sorted((zero,) + self.mu)

    def to_json(self) -> str:
        return _dump_json("mu", self.n, self.mu)

    @classmethod
    def from_json(cls, text: str, exact: bool = False) -> "Spectrum":
        n, values = _load_json(text, "mu", exact)
        if len(values) != n - 1:
            raise ValueError(f"mu has {len(values)} entries, expected n - 1 = {n - 1}")
        return cls(tuple(values), exact=exact)


def same_multiset(a, b, tol: float | None = TOL) -> bool:
    """Compare two eigenvalue collections as multisets (sorted, then entrywise)."""
    a, b = sorted(a), sorted(b)
    if len(a) != len(b):
        return False
    return all(scalars_close(x, y, tol) for x, y in zip(a, b))


def are_cospectral(a: Spectrum, b: Spectrum, tol: float | None = TOL) -> bool:
    return a.n == b.n and same_multiset(a.mu, b.mu, tol)


# -- forward and inverse maps -------------------------------------------------

def spectrum_of(w: WeightVector) -> Spectrum:
    n = w.n
    zero = Fraction(0) if w.exact else 0.0
    mu = [zero] * (n - 1)
    suffix = zero
    for i in range(n, 1, -1):
        wi = w.weights[i - 2]
        mu[i - 2] = i * wi + suffix
        suffix = suffix + wi
    return Spectrum(tuple(mu), exact=w.exact)


def spectrum_via_degrees(w: WeightVector) -> Spectrum:
    """Eigenvalues as ``mu_i = d_i + w_i`` from the weighted degrees."""
    d = degrees(w)
    return Spectrum(tuple(d[i - 1] + w.weights[i - 2] for i in range(2, w.n + 1)), exact=w.exact)


def synthesize(mu: Spectrum) -> WeightVector:
    """The weight vector whose Laplacian has nontrivial eigenvalues ``mu`` (same index order).

    Back-substitution against the triangular spectrum map, carrying the
    suffix sum of already-recovered weights.
    """
    if not isinstance(mu, Spectrum):
        mu = Spectrum(tuple(mu))
    n = mu.n
    zero = Fraction(0) if mu.exact else 0.0
    w = [zero] * (n - 1)
    suffix = zero
    for i in range(n, 1, -1):
        wi = (mu.mu[i - 2] - suffix) / i
        w[i - 2] = wi
        suffix = suffix + wi
    return WeightVector(tuple(w), exact=mu.exact)


def _distinct_permutations(values):
    """Distinct orderings of ``values``, in lexicographic order of source positions."""
    values = list(values)
    k = len(values)
    used = [False] * k
    current = []

    def rec():
        if len(current) == k:
            yield tuple(current)
            return
        tried = []
        for idx in range(k):
            if used[idx] or any(values[idx] == t for t in tried):
                continue
            tried.append(values[idx])
            used[idx] = True
            current.append(values[idx])
            yield from rec()
            current.pop()
            used[idx] = False

    yield from rec()


def cospectral_mates(mu: Spectrum, limit: int) -> list[WeightVector]:
    """Up to ``limit`` distinct weight vectors sharing the eigenvalue multiset of ``mu``.

    Reorderings of ``mu`` are visited starting from the identity, and each
    is synthesized; the search stops once ``limit`` distinct mates exist.
    """
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    if not isinstance(mu, Spectrum):
        mu = Spectrum(tuple(mu))
    seen: set = set()
    mates: list[WeightVector] = []
    for order in _distinct_permutations(mu.mu):
        w = synthesize(Spectrum(order, exact=mu.exact))
        if w in seen:
            continue
        seen.add(w)
        mates.append(w)
        if len(mates) >= limit:
            break
    return mates


# -- structured matrices -----------------------------------------------------

@dataclass(frozen=True)
class SpectralMap:
    """The ``(n-1) x (n-1)`` matrix ``U`` with ``mu = U W`` and its inverse.

    Both are generated on demand from closed forms; the main code paths
    never materialize them.
    """

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"spectral map needs n >= 2, got {self.n}")

    def u_entry(self, i: int, j: int) -> Fraction:
        # 1-based indices into the (n-1)x(n-1) matrix
        if i == j:
            return Fraction(i + 1)
        return Fraction(1) if i < j else Fraction(0)

    def u_inv_entry(self, i: int, j: int) -> Fraction:
        if i == j:
            return Fraction(1, i + 1)
        return Fraction(-1, j * (j + 1)) if i < j else Fraction(0)

    def u(self) -> np.ndarray:
        return self._build(self.u_entry)

    def u_inv(self) -> np.ndarray:
        return self._build(self.u_inv_entry)

    def _build(self, entry) -> np.ndarray:
        k = self.n - 1
        out = np.empty((k, k), dtype=object)
        for i in range(1, k + 1):
            for j in range(1, k + 1):
                out[i - 1, j - 1] = entry(i, j)
        return out

    def row_sums(self) -> list[Fraction]:
        return [sum(row) for row in self.u()]


def spectral_map(n: int) -> SpectralMap:
    return SpectralMap(n)


@dataclass(frozen=True)
class EigenBasis:
    """Common orthogonal (not orthonormal) eigenvectors ``v_1..v_n``.

    ``v_1`` is all ones; for ``j >= 2``, ``v_j`` has ones before position
    ``j``, ``1 - j`` at ``j`` and zeros after.
    """

    n: int

    def vector(self, j: int) -> np.ndarray:
        if not 1 <= j <= self.n:
            raise IndexError(f"eigenvector index must satisfy 1 <= j <= {self.n}, got {j}")
        v = np.zeros(self.n, dtype=np.int64)
        if j == 1:
            v[:] = 1
            return v
        v[: j - 1] = 1
        v[j - 1] = 1 - j
        return v

    @property
    def vectors(self) -> list[np.ndarray]:
        return [self.vector(j) for j in range(1, self.n + 1)]

    def matrix(self) -> np.ndarray:
        """Eigenvectors as columns."""
        return np.column_stack(self.vectors)

    def basis_eigenvalue(self, i: int, j: int) -> int:
        """Eigenvalue of ``Q_i`` on ``v_j``: 1 for ``2 <= j < i``, ``i`` for ``j == i``, else 0."""
        check_basis_index(self.n, i)
        if 2 <= j < i:
            return 1
        return i if j == i else 0


def eigen_basis(n: int) -> EigenBasis:
    if n < 1:
        raise ValueError("n must be >= 1")
    return EigenBasis(n)


def eigenvalue_for(w: WeightVector, j: int):
    """Eigenvalue of ``laplacian(w)`` on ``v_j`` (zero for ``j = 1``)."""
    if j == 1:
        return Fraction(0) if w.exact else 0.0
    return spectrum_of(w).mu[j - 2]


def basis_char_poly(n: int, i: int) -> Polynomial:
    """Characteristic polynomial of ``Q_i``: ``(λ-1)^(i-2) (λ-i) λ^(n-i+1)``."""
    check_basis_index(n, i)
    roots = [1] * (i - 2) + [i] + [0] * (n - i + 1)
    return Polynomial.from_roots(roots)


def integral(mu: Spectrum) -> bool:
    return all(is_exact_scalar(x) and Fraction(x).denominator == 1 for x in mu.mu)
