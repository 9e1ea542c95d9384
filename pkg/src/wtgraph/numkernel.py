"""Scalars, dense symmetric matrices and the independent numerical oracles.

Two scalar backends are supported. Float matrices are ``float64`` arrays;
exact matrices are ``object`` arrays holding :class:`fractions.Fraction`.
Everything else in the package builds on the helpers here, and the oracles
(:func:`eig_sym`, :func:`char_poly`, :func:`brute_force_isomorphic`) make no
use of threshold-graph structure, so they can cross-check the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

import numpy as np

from .exceptions import ConvergenceError, SizeLimitError

TOL = 1e-9
JACOBI_RTOL = 1e-12
JACOBI_MAX_SWEEPS = 100
ISOMORPHISM_MAX_ORDER = 8


# -- scalars -----------------------------------------------------------------

def to_fraction(x) -> Fraction:
    """Convert ``x`` (int, Fraction, float, or a "p/q" / decimal string) exactly."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, (bool, np.bool_)):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    return Fraction(float(x))


def is_exact_scalar(x) -> bool:
    return isinstance(x, (Rational, np.integer)) and not isinstance(x, (bool, np.bool_))


def coerce_scalars(values: Iterable, exact: bool | None = None) -> tuple:
    """Return ``values`` as a tuple in a single backend.

    With ``exact=None`` the backend is inferred: any float entry selects
    binary64, otherwise everything becomes a Fraction.
    """
    values = list(values)
    if exact is None:
        exact = all(is_exact_scalar(v) or isinstance(v, str) for v in values)
    if exact:
        return tuple(to_fraction(v) for v in values)
    return tuple(float(Fraction(v)) if isinstance(v, str) else float(v) for v in values)


def scalars_close(a, b, tol: float | None = TOL) -> bool:
    """Compare two scalars; ``tol=None`` demands exact equality.

    Exact scalars on both sides are always compared exactly.
    """
    if tol is None or (is_exact_scalar(a) and is_exact_scalar(b)):
        return a == b
    a, b = float(a), float(b)
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def format_scalar(x) -> str:
    """Render a scalar losslessly: "p/q" for exact values, 17 significant digits otherwise."""
    if is_exact_scalar(x):
        return str(Fraction(x))
    return format(float(x), ".17g")


def parse_scalar(token: str, exact: bool = False):
    token = token.strip()
    if exact:
        return Fraction(token)
    if "/" in token:
        return float(Fraction(token))
    return float(token)


# -- matrices ----------------------------------------------------------------

def is_exact_matrix(m: np.ndarray) -> bool:
    return m.dtype == object


def zeros(n: int, exact: bool = False) -> np.ndarray:
    if exact:
        out = np.empty((n, n), dtype=object)
        out.fill(Fraction(0))
        return out
    return np.zeros((n, n))


def identity(n: int, exact: bool = False) -> np.ndarray:
    out = zeros(n, exact)
    for k in range(n):
        out[k, k] = Fraction(1) if exact else 1.0
    return out


def ones(n: int, exact: bool = False) -> np.ndarray:
    if exact:
        out = np.empty((n, n), dtype=object)
        out.fill(Fraction(1))
        return out
    return np.ones((n, n))


def as_matrix(entries, exact: bool | None = None) -> np.ndarray:
    """Build a square matrix in one scalar backend (no symmetry requirement)."""
    if isinstance(entries, np.ndarray) and exact is None:
        exact = is_exact_matrix(entries) or np.issubdtype(entries.dtype, np.integer)
    rows = [list(r) for r in entries]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("matrix must be square and non-empty")
    flat = coerce_scalars([x for r in rows for x in r], exact)
    if isinstance(flat[0], Fraction):
        out = np.empty((n, n), dtype=object)
        for k, x in enumerate(flat):
            out[k // n, k % n] = x
        return out
    return np.array(flat, dtype=float).reshape(n, n)


def sym_matrix(entries, exact: bool | None = None) -> np.ndarray:
    """Like :func:`as_matrix`, but reject anything not exactly symmetric."""
    m = as_matrix(entries, exact)
    check_symmetric(m)
    return m


def check_symmetric(m: np.ndarray) -> None:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.array_equal(m, m.T):
        raise ValueError("matrix is not symmetric")


def _check_same_order(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")


def _common_backend(a: np.ndarray, b: np.ndarray):
    if is_exact_matrix(a) != is_exact_matrix(b):
        # mixing backends falls back to binary64
        return a.astype(float), b.astype(float)
    return a, b


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    _check_same_order(a, b)
    a, b = _common_backend(a, b)
    return a.dot(b)


def add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    _check_same_order(a, b)
    a, b = _common_backend(a, b)
    return a + b


def scale(c, a: np.ndarray) -> np.ndarray:
    if is_exact_matrix(a):
        if not is_exact_scalar(c):
            return float(c) * a.astype(float)
        return to_fraction(c) * a
    return float(c) * a


def matrices_equal(a: np.ndarray, b: np.ndarray, tol: float | None = TOL) -> bool:
    """Entrywise scalar comparison (exact when both sides are exact)."""
    if a.shape != b.shape:
        return False
    if tol is None or (is_exact_matrix(a) and is_exact_matrix(b)):
        return bool(np.all(a == b))
    fa, fb = a.astype(float), b.astype(float)
    bound = tol * np.maximum(1.0, np.maximum(np.abs(fa), np.abs(fb)))
    return bool(np.all(np.abs(fa - fb) <= bound))


def frobenius_norm(m: np.ndarray) -> float:
    return float(np.sqrt(np.sum(m.astype(float) ** 2)))


# -- symmetric eigensolver ---------------------------------------------------

def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def eig_sym(m: np.ndarray) -> list[float]:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.

    Sweeps continue until the off-diagonal Frobenius norm drops below
    ``JACOBI_RTOL * ||m||_F``.
    """
    check_symmetric(m)
    a = np.array(m, dtype=float)
    n = a.shape[0]
    target = JACOBI_RTOL * frobenius_norm(a)
    for _ in range(JACOBI_MAX_SWEEPS):
        off = _off_norm(a)
        if off <= target or off == 0.0:
            return sorted(np.diag(a).tolist())
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) * 1e150 < abs(diff):
                    # rotation angle below 1e-150: annihilate without rotating
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = diff / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    if _off_norm(a) <= target:
        return sorted(np.diag(a).tolist())
    raise ConvergenceError(
        f"Jacobi iteration did not converge in {JACOBI_MAX_SWEEPS} sweeps "
        f"(off-diagonal norm {_off_norm(a):.3e}, target {target:.3e})"
    )


# -- polynomials -------------------------------------------------------------

@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial, coefficients lowest degree first.

    Trailing zero coefficients are stripped, so equality is coefficientwise.
    """

    coeffs: tuple

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_roots(cls, roots: Sequence) -> "Polynomial":
        p = cls((Fraction(1),))
        for r in roots:
            p = p * cls((-to_fraction(r) if is_exact_scalar(r) else -r, Fraction(1)))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not self.coeffs or not other.coeffs:
            return Polynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return Polynomial(tuple(out))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def l1_norm(self) -> float:
        return float(sum(abs(c) for c in self.coeffs))

    def __str__(self) -> str:
        terms = []
        for k, c in reversed(list(enumerate(self.coeffs))):
            if c == 0:
                continue
            mono = "" if k == 0 else ("λ" if k == 1 else f"λ^{k}")
            coef = format_scalar(c)
            if mono and c == 1:
                coef = ""
            elif mono and c == -1:
                coef = "-"
            terms.append(f"{coef}{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def char_poly(m: np.ndarray) -> Polynomial:
    """Coefficients of det(λI − m) via the Faddeev–LeVerrier recurrence.

    Integer and Fraction input is handled exactly; float input in binary64.
    """
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    n = m.shape[0]
    exact = is_exact_matrix(m) or np.issubdtype(m.dtype, np.integer)
    a = as_matrix(m, exact=exact)
    eye = identity(n, exact)
    # coeffs[k] multiplies λ^k
    coeffs = [None] * (n + 1)
    coeffs[n] = Fraction(1) if exact else 1.0
    acc = zeros(n, exact)
    for k in range(1, n + 1):
        acc = a.dot(acc) + coeffs[n - k + 1] * eye
        tr = np.trace(a.dot(acc))
        coeffs[n - k] = -tr / k
    return Polynomial(tuple(coeffs))


# -- isomorphism oracle ------------------------------------------------------

def brute_force_isomorphic(a: np.ndarray, b: np.ndarray, tol: float | None = TOL) -> bool:
    """True iff some relabelling of ``a``'s nodes yields ``b`` entrywise.

    Exhaustive search over node bijections with early rejection of partial
    assignments; orders above eight are refused.
    """
    if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    n = a.shape[0]
    if n > ISOMORPHISM_MAX_ORDER:
        raise SizeLimitError(f"isomorphism oracle is limited to n <= {ISOMORPHISM_MAX_ORDER}, got {n}")
    exact = (is_exact_matrix(a) and is_exact_matrix(b)) or tol is None

    def same(x, y):
        return x == y if exact else scalars_close(x, y, tol)

    image = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        for cand in range(n):
            if used[cand] or not same(a[k, k], b[cand, cand]):
                continue
            if all(same(a[k, j], b[cand, image[j]]) for j in range(k)):
                image[k] = cand
                used[cand] = True
                if extend(k + 1):
                    return True
                used[cand] = False
        return False

    return extend(0)


# -- CSV ---------------------------------------------------------------------

def matrix_to_csv(m: np.ndarray) -> str:
    return "".join(",".join(format_scalar(x) for x in row) + "\n" for row in m)


def matrix_from_csv(text: str, exact: bool = False) -> np.ndarray:
    rows = [line for line in text.splitlines() if line.strip()]
    try:
        entries = [[parse_scalar(tok, exact) for tok in line.split(",")] for line in rows]
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed matrix CSV: {exc}") from None
    return as_matrix(entries, exact=exact)
