"""Weighted threshold graphs encoded by their weight vectors.

Nodes are labelled ``1..n`` in the order they are added; node ``i >= 2``
joins every earlier node with a link of weight ``w_i``.  ``WeightVector``
stores ``(w_2, ..., w_n)``; zero weights are kept as coordinates.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .numkernel import coerce_scalars, format_scalar, is_exact_scalar, zeros


@dataclass(frozen=True)
class WeightVector:
    """Weight vector ``(w_2, ..., w_n)`` of a weighted threshold graph.

    Entries are coerced to one backend on construction: Fractions when all
    inputs are ints/Fractions/"p/q" strings, binary64 otherwise.  Pass
    ``exact`` to force a backend.
    """

    weights: tuple
    exact: bool | None = None

    def __post_init__(self):
        coerced = coerce_scalars(self.weights, self.exact)
        object.__setattr__(self, "weights", coerced)
        object.__setattr__(
            self, "exact", all(isinstance(w, Fraction) for w in coerced) if coerced else bool(self.exact)
        )

    @classmethod
    def zeros(cls, n: int, exact: bool = True) -> "WeightVector":
        if n < 1:
            raise ValueError("a threshold graph has at least one node")
        return cls((0,) * (n - 1), exact=exact)

    @classmethod
    def unit(cls, n: int, i: int, exact: bool = True) -> "WeightVector":
        """The vector whose only nonzero weight is ``w_i = 1``."""
        check_basis_index(n, i)
        w = [0] * (n - 1)
        w[i - 2] = 1
        return cls(tuple(w), exact=exact)

    @property
    def n(self) -> int:
        return len(self.weights) + 1

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, k):
        return self.weights[k]

    def w(self, i: int):
        """Weight of node ``i`` (1-based, ``2 <= i <= n``)."""
        check_basis_index(self.n, i)
        return self.weights[i - 2]

    def __eq__(self, other):
        if not isinstance(other, WeightVector):
            return NotImplemented
        return self.weights == other.weights

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        return f"WeightVector(({', '.join(format_scalar(w) for w in self.weights)}))"

    def as_array(self) -> np.ndarray:
        return np.array(self.weights, dtype=object if self.exact else float)

    def to_json(self) -> str:
        return _dump_json("weights", self.n, self.weights)

    @classmethod
    def from_json(cls, text: str, exact: bool = False) -> "WeightVector":
        n, values = _load_json(text, "weights", exact)
        if len(values) != n - 1:
            raise ValueError(f"weights has {len(values)} entries, expected n - 1 = {n - 1}")
        return cls(tuple(values), exact=exact)


def check_basis_index(n: int, i: int) -> None:
    if not 2 <= i <= n:
        raise IndexError(f"basis index must satisfy 2 <= i <= n={n}, got {i}")


def _dump_json(key: str, n: int, values: Iterable) -> str:
    def token(x):
        return f'"{format_scalar(x)}"' if is_exact_scalar(x) else format_scalar(x)

    return '{"n": %d, "%s": [%s]}' % (n, key, ", ".join(token(v) for v in values))


def _load_json(text: str, key: str, exact: bool):
    parse = Fraction if exact else float
    try:
        data = json.loads(text, parse_float=parse, parse_int=parse)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON: {exc}") from None
    if not isinstance(data, dict) or "n" not in data or key not in data:
        raise ValueError(f'expected an object with keys "n" and "{key}"')
    n = data["n"]
    if n != int(n) or int(n) < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    values = coerce_scalars(data[key], exact)
    return int(n), values


# -- matrices ----------------------------------------------------------------


def adjacency(w: WeightVector) -> np.ndarray:
    """``A[m, k] = w_max(m, k)`` off the diagonal (1-based labels), zero diagonal."""
    n = w.n
    a = zeros(n, w.exact)
    for k in range(2, n + 1):
        wk = w.weights[k - 2]
        a[k - 1, : k - 1] = wk
        a[: k - 1, k - 1] = wk
    return a


def degrees(w: WeightVector) -> list:
    """Weighted degrees ``d_i = (i-1) w_i + sum_{j>i} w_j`` for ``i = 1..n``."""
    n = w.n
    zero = Fraction(0) if w.exact else 0.0
    out = [zero] * n
    suffix = zero
    for i in range(n, 0, -1):
        own = (i - 1) * w.weights[i - 2] if i >= 2 else zero
        out[i - 1] = own + suffix
        if i >= 2:
            suffix = suffix + w.weights[i - 2]
    return out


def laplacian(w: WeightVector) -> np.ndarray:
    q = zeros(w.n, w.exact) - adjacency(w)
    for i, d in enumerate(degrees(w)):
        q[i, i] = d
    return q


def basis_matrix(n: int, i: int, exact: bool = True) -> np.ndarray:
    """The Laplacian ``Q_i`` of the graph whose only nonzero weight is ``w_i = 1``."""
    check_basis_index(n, i)
    one = Fraction(1) if exact else 1.0
    q = zeros(n, exact)
    for k in range(i - 1):
        q[k, k] = one
        q[k, i - 1] = -one
        q[i - 1, k] = -one
    q[i - 1, i - 1] = (i - 1) * one
    return q


def to_dot(w: WeightVector) -> str:
    """Undirected DOT graph; one edge per nonzero weight, zero-weight pairs omitted."""
    lines = ["graph G {"]
    lines += [f"  {k};" for k in range(1, w.n + 1)]
    for k in range(2, w.n + 1):
        wk = w.weights[k - 2]
        if wk == 0:
            continue
        for j in range(1, k):
            lines.append(f'  {j} -- {k} [weight="{format_scalar(wk)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
