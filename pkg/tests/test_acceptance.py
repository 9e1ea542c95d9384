"""Exit criteria for the package.

Each test carries a ``criterion`` marker; a PASS/FAIL line per criterion is
printed in the terminal summary.
"""

import itertools
import random
import statistics
import subprocess
import sys
import time
from collections import defaultdict
from fractions import Fraction

import numpy as np
import pytest

from wtgraph import (
    Spectrum,
    WeightVector,
    basis_char_poly,
    basis_matrix,
    brute_force_isomorphic,
    char_poly,
    decompose,
    degrees,
    eig_sym,
    eigen_basis,
    laplacian,
    product,
    spectral_map,
    spectrum_of,
    synthesize,
)
from wtgraph.algebra import basis_power
from wtgraph.cospectral import AffineShift, affine_shift, counterexample_pair, reconstruct
from wtgraph.numkernel import add, identity, matmul, matrices_equal, ones, scale

from conftest import SIX_NODE_WEIGHTS, SQRT2, random_rational_weights, rational

SIX_NODE_LAPLACIAN = np.array([
    [3 - SQRT2, -1, 0, SQRT2, 0, -2],
    [-1, 3 - SQRT2, 0, SQRT2, 0, -2],
    [0, 0, 2 - SQRT2, SQRT2, 0, -2],
    [SQRT2, SQRT2, SQRT2, 2 - 3 * SQRT2, 0, -2],
    [0, 0, 0, 0, 2, -2],
    [-2, -2, -2, -2, -2, 10],
])
SIX_NODE_MU = np.array([4 - SQRT2, 2 - SQRT2, 2 - 4 * SQRT2, 2, 12])


@pytest.mark.criterion(1, "six-node example Laplacian and spectrum within 1e-12, runtime < 1 ms")
def test_c01_six_node_reproduction():
    w = WeightVector(SIX_NODE_WEIGHTS)
    timings = []
    for _ in range(5):
        t0 = time.perf_counter()
        q = laplacian(w)
        mu = spectrum_of(w)
        timings.append(time.perf_counter() - t0)
    assert np.max(np.abs(q - SIX_NODE_LAPLACIAN)) <= 1e-12
    assert np.max(np.abs(np.array(mu.mu) - SIX_NODE_MU)) <= 1e-12
    assert statistics.median(timings) < 1e-3


@pytest.mark.criterion(2, "closed-form spectrum matches Jacobi on 1000 random W within 1e-8, < 10 s")
def test_c02_oracle_cospectrality():
    rng = random.Random(2)
    t0 = time.perf_counter()
    worst = 0.0
    for _ in range(1000):
        n = rng.randint(2, 12)
        w = WeightVector(tuple(rng.uniform(-5, 5) for _ in range(n - 1)))
        closed = np.array(spectrum_of(w).full())
        numeric = np.array(eig_sym(laplacian(w)))
        worst = max(worst, float(np.max(np.abs(closed - numeric))))
    elapsed = time.perf_counter() - t0
    assert worst <= 1e-8, f"max deviation {worst:.3e}"
    assert elapsed < 10.0, f"took {elapsed:.2f} s"


@pytest.mark.criterion(3, "basis products and powers equal repeated matmul exactly, n <= 8, p <= 6")
def test_c03_algebra_identities():
    for n in range(2, 9):
        qs = {i: basis_matrix(n, i) for i in range(2, n + 1)}
        for i, j in itertools.combinations(range(2, n + 1), 2):
            assert matrices_equal(matmul(qs[i], qs[j]), qs[i], tol=None)
            assert matrices_equal(matmul(qs[j], qs[i]), qs[i], tol=None)
        for i in range(2, n + 1):
            acc = identity(n, exact=True)
            for p in range(1, 7):
                acc = matmul(acc, qs[i])
                assert matrices_equal(laplacian(basis_power(n, i, p)), acc, tol=None)


@pytest.mark.criterion(4, "product formula equals decompose(matmul) exactly")
def test_c04_product_formula():
    for n in range(1, 5):
        vectors = [WeightVector(v) for v in itertools.product(range(-2, 3), repeat=n - 1)]
        for a, b in itertools.product(vectors, repeat=2):
            assert product(a, b) == decompose(matmul(laplacian(a), laplacian(b)), tol=None)
    rng = random.Random(4)
    for _ in range(500):
        n = rng.randint(1, 10)
        a, b = random_rational_weights(rng, n), random_rational_weights(rng, n)
        assert product(a, b) == decompose(matmul(laplacian(a), laplacian(b)), tol=None)


@pytest.mark.criterion(5, "common eigenvectors: residual <= 1e-9 (1+|mu|) |v|, exact orthogonality")
def test_c05_eigenbasis():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 12)
        w = WeightVector(tuple(rng.uniform(-5, 5) for _ in range(n - 1)))
        q = laplacian(w)
        mu = (0.0,) + spectrum_of(w).mu
        basis = eigen_basis(n)
        for j in range(1, n + 1):
            v = basis.vector(j).astype(float)
            residual = np.max(np.abs(q @ v - mu[j - 1] * v))
            assert residual <= 1e-9 * (1 + abs(mu[j - 1])) * np.max(np.abs(v))
    for n in range(1, 13):
        vs = [[Fraction(int(x)) for x in v] for v in eigen_basis(n).vectors]
        for a, b in itertools.combinations(vs, 2):
            assert sum(x * y for x, y in zip(a, b)) == 0


@pytest.mark.criterion(6, "basis_char_poly equals Faddeev-LeVerrier exactly, 2 <= i <= n <= 8")
def test_c06_characteristic_polynomial():
    for n in range(2, 9):
        for i in range(2, n + 1):
            assert basis_char_poly(n, i) == char_poly(basis_matrix(n, i))


@pytest.mark.criterion(7, "synthesis round trip (1e-9 float, exact rational); U U^-1 = I for n <= 20")
def test_c07_inverse_synthesis():
    rng = random.Random(7)
    for _ in range(500):
        n = rng.randint(1, 12)
        mu = Spectrum(tuple(rng.uniform(-20, 20) for _ in range(n - 1)))
        back = spectrum_of(synthesize(mu))
        assert all(abs(x - y) <= 1e-9 for x, y in zip(back.mu, mu.mu))
        exact_mu = Spectrum(tuple(rational(rng) for _ in range(n - 1)))
        assert spectrum_of(synthesize(exact_mu)) == exact_mu
    for n in range(2, 21):
        sm = spectral_map(n)
        assert matrices_equal(matmul(sm.u(), sm.u_inv()), identity(n - 1, exact=True), tol=None)


@pytest.mark.criterion(8, "mu_i = d_i + w_i exactly for 500 random rational W")
def test_c08_degree_identity():
    rng = random.Random(8)
    for _ in range(500):
        w = random_rational_weights(rng, rng.randint(1, 12))
        d, mu = degrees(w), spectrum_of(w)
        assert all(mu.mu[i - 2] == d[i - 1] + w.w(i) for i in range(2, w.n + 1))


@pytest.mark.criterion(9, "affine shift: Laplacian and spectrum laws hold exactly")
def test_c09_affine_shift():
    rng = random.Random(9)
    for _ in range(200):
        n = rng.randint(1, 10)
        w = random_rational_weights(rng, n)
        a, b = rational(rng), rational(rng)
        shifted = affine_shift(w, AffineShift(a, b))
        j_minus_ni = add(ones(n, exact=True), scale(-n, identity(n, exact=True)))
        expected = add(scale(a, laplacian(w)), scale(b, j_minus_ni))
        assert matrices_equal(laplacian(shifted), expected, tol=None)
        assert spectrum_of(shifted).mu == tuple(a * x - b * n for x in spectrum_of(w).mu)


@pytest.mark.criterion(10, "three-weight reconstruction exact; cospectral => isomorphic for n <= 7, < 60 s")
def test_c10_three_weight_reconstruction():
    rng = random.Random(10)
    t0 = time.perf_counter()
    for _ in range(500):
        size = rng.randint(1, 3)
        alphabet = set()
        while len(alphabet) < size:
            alphabet.add(rational(rng, span=12, max_den=5))
        alphabet = sorted(alphabet)
        n = rng.randint(1, 10)
        w = WeightVector(tuple(rng.choice(alphabet) for _ in range(n - 1)))
        mu = list(spectrum_of(w).mu)
        rng.shuffle(mu)
        assert reconstruct(Spectrum(tuple(mu)), alphabet) == w

    pairs_checked = 0
    for n in range(1, 8):
        groups = defaultdict(list)
        for ws in itertools.product((-1, 0, 1), repeat=n - 1):
            w = WeightVector(ws)
            groups[tuple(sorted(spectrum_of(w).mu))].append(w)
        for members in groups.values():
            for a, b in itertools.combinations_with_replacement(members, 2):
                assert brute_force_isomorphic(laplacian(a), laplacian(b), tol=None)
                pairs_checked += 1
    assert pairs_checked >= sum(3 ** (n - 1) for n in range(1, 8))
    assert time.perf_counter() - t0 < 60.0


@pytest.mark.criterion(11, "counterexample pair: spectrum {0,0,6} exactly, not isomorphic")
def test_c11_counterexample():
    a, b = counterexample_pair()
    for w in (a, b):
        assert w.exact
        assert spectrum_of(w).full() == [0, 0, 6]
    assert not brute_force_isomorphic(laplacian(a), laplacian(b), tol=None)


def _wtgraph(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "wtgraph", *args], input=stdin, capture_output=True, check=False
    )


@pytest.mark.criterion(12, "CLI: exact synth | spectrum reproduces input bytes; member rejects P3 with exit 2")
def test_c12_cli_round_trip(tmp_path):
    source = tmp_path / "spectrum.json"
    source.write_bytes(b'{"n": 5, "mu": ["6", "0", "-5/3", "12"]}\n')
    synth = _wtgraph("--exact", "synth", "--spectrum", str(source))
    assert synth.returncode == 0, synth.stderr
    back = _wtgraph("--exact", "spectrum", "--weights", "-", stdin=synth.stdout)
    assert back.returncode == 0, back.stderr
    assert back.stdout == source.read_bytes()

    p3 = tmp_path / "p3.csv"
    p3.write_text("1,-1,0\n-1,1,-1\n0,-1,2\n")
    member = _wtgraph("member", "--matrix", str(p3))
    assert member.returncode == 2
    assert b"NotInAlgebra" in member.stderr
