"""Cospectrality of weighted threshold graphs.

Two tools live here.  :func:`affine_shift` realizes ``a Q + b (J - nI)`` on
weight vectors, which moves every nontrivial eigenvalue to ``a mu - b n``.
:func:`reconstruct` recovers a weight vector over an alphabet of at most
three values from its spectrum alone, peeling off the last node each step.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .exceptions import NormalizationUndefined, NotRealizable
from .numkernel import TOL, brute_force_isomorphic, coerce_scalars, format_scalar, scalars_close
from .spectral import Spectrum, same_multiset, spectrum_of
from .threshold import WeightVector, laplacian


@dataclass(frozen=True)
class AffineShift:
    a: object = 1
    b: object = 0

    def apply(self, x):
        return self.a * x - self.b

    def invert(self, y):
        if self.a == 0:
            raise ZeroDivisionError("affine shift with a = 0 is not invertible")
        return (y + self.b) / self.a


@dataclass(frozen=True)
class WeightAlphabet:
    """Sorted distinct weight values, one to three of them."""

    values: tuple

    def __post_init__(self):
        vals = coerce_scalars(self.values)
        distinct = sorted(set(vals))
        if not distinct:
            raise ValueError("alphabet must contain at least one value")
        if len(distinct) > 3:
            raise ValueError(f"alphabet has {len(distinct)} distinct values; at most 3 are supported")
        object.__setattr__(self, "values", tuple(distinct))

    @classmethod
    def parse(cls, text: str, exact: bool = False) -> "WeightAlphabet":
        tokens = [t for t in text.split(",") if t.strip()]
        return cls(coerce_scalars([t.strip() for t in tokens], exact))

    @property
    def exact(self) -> bool:
        return all(isinstance(v, Fraction) for v in self.values)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __str__(self):
        return ",".join(format_scalar(v) for v in self.values)


def affine_shift(w: WeightVector, s: AffineShift) -> WeightVector:
    """Weights of ``a Q_W + b (J - nI)``, namely ``a W - b``.

    ``b (J - nI)`` is itself the Laplacian of the threshold graph with every
    weight equal to ``-b``, so the sum stays in the same family.
    """
    exact = w.exact and all(isinstance(c, (int, Fraction)) for c in (s.a, s.b))
    return WeightVector(tuple(s.apply(x) for x in w.weights), exact=exact)


def shift_spectrum(mu: Spectrum, s: AffineShift) -> Spectrum:
    """Spectrum after :func:`affine_shift`: each ``mu_i`` becomes ``a mu_i - b n``."""
    n = mu.n
    exact = mu.exact and all(isinstance(c, (int, Fraction)) for c in (s.a, s.b))
    return Spectrum(tuple(s.a * x - s.b * n for x in mu.mu), exact=exact)


def normalize_alphabet(alpha: WeightAlphabet) -> tuple[AffineShift, WeightAlphabet]:
    """Shift sending the smallest value to -1 and the largest to 1."""
    if len(alpha) < 2:
        raise NormalizationUndefined("a single-value alphabet cannot be normalized")
    lo, hi = alpha.values[0], alpha.values[-1]
    width = hi - lo
    if alpha.exact:
        s = AffineShift(Fraction(2) / width, (hi + lo) / width)
    else:
        s = AffineShift(2.0 / width, (hi + lo) / width)
    mapped = [s.apply(x) for x in alpha.values]
    # pin the endpoints so float rounding cannot move them off +-1
    mapped[0], mapped[-1] = -1, 1
    if alpha.exact:
        mapped = [Fraction(x) for x in mapped]
    return s, WeightAlphabet(tuple(mapped))


def _take(pool: list, target, tol) -> list | None:
    """``pool`` without one occurrence of ``target``, or None if absent."""
    for k, x in enumerate(pool):
        if scalars_close(x, target, tol):
            return pool[:k] + pool[k + 1:]
    return None


def reconstruct(mu: Spectrum, alpha: WeightAlphabet | Iterable, tol: float | None = TOL) -> WeightVector:
    """Recover the weight vector over ``alpha`` whose Laplacian spectrum is ``mu``.

    Only the multiset of ``mu`` is used.  After normalizing the alphabet to
    ``{-1, x, 1}``, the last node's weight is 1 exactly when the largest
    eigenvalue equals ``n``, -1 exactly when the smallest equals ``-n``, and
    the middle value otherwise.  Its eigenvalue ``n w_n`` is removed, the
    remaining ones drop by ``w_n``, and the procedure repeats on ``n - 1``
    nodes.  Float comparisons use ``tol`` scaled by ``n``; exact input is
    compared exactly.

    Raises
    ------
    NotRealizable
        If no weight vector over ``alpha`` has this spectrum.
    """
    if not isinstance(alpha, WeightAlphabet):
        alpha = WeightAlphabet(tuple(alpha))
    if not isinstance(mu, Spectrum):
        mu = Spectrum(tuple(mu))
    n = mu.n
    exact = mu.exact and alpha.exact
    ctol = None if exact else tol * n

    if len(alpha) == 1:
        w = WeightVector((alpha.values[0],) * (n - 1), exact=exact)
        if not same_multiset(spectrum_of(w).mu, mu.mu, ctol):
            raise NotRealizable(
                f"spectrum does not match the all-{format_scalar(alpha.values[0])} weight vector"
            )
        return w

    shift, normed = normalize_alphabet(alpha)
    lo, hi = 0, len(alpha) - 1
    middle = 1 if len(alpha) == 3 else None
    if not exact:
        shift = AffineShift(float(shift.a), float(shift.b))
    pool = [shift.a * x - shift.b * n for x in mu.mu]
    if not exact:
        pool = [float(x) for x in pool]

    # choices[k] is the alphabet index chosen for node k + 2
    choices = [None] * (n - 1)

    def peel(k: int, pool: list) -> bool:
        if k == 1:
            return True
        candidates = []
        if scalars_close(max(pool), k, ctol):
            candidates.append(hi)
        if scalars_close(min(pool), -k, ctol):
            candidates.append(lo)
        if not candidates and middle is not None:
            candidates.append(middle)
        for idx in candidates:
            value = normed.values[idx]
            rest = _take(pool, k * value, ctol)
            if rest is None:
                continue
            choices[k - 2] = idx
            if peel(k - 1, [x - value for x in rest]):
                return True
        return False

    if not peel(n, pool):
        raise NotRealizable(f"no weight vector over {{{alpha}}} has this spectrum")
    w = WeightVector(tuple(alpha.values[idx] for idx in choices), exact=exact)
    if not same_multiset(spectrum_of(w).mu, mu.mu, ctol):
        raise NotRealizable("recovered weights do not reproduce the spectrum")
    return w


def counterexample_pair() -> tuple[WeightVector, WeightVector]:
    """Two non-isomorphic threshold graphs on 3 nodes, both with spectrum {0, 0, 6}."""
    return WeightVector((3, 0)), WeightVector((-1, 2))


def distinct_weight_values(*ws: WeightVector) -> set:
    return {x for w in ws for x in w.weights}


def isomorphic(a: WeightVector, b: WeightVector, tol: float | None = TOL) -> bool:
    """Whether ``G_a`` and ``G_b`` are isomorphic, by exhaustive relabelling (n <= 8)."""
    if a.n != b.n:
        return False
    return brute_force_isomorphic(laplacian(a), laplacian(b), tol)
