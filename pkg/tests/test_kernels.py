import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from nakayama import _kernels_py, kernels

compiled = pytest.importorskip("nakayama._ckernels", reason="compiled kernels not built")


@pytest.mark.parametrize("p", [2, 3, 7, 65521, 2147483647])
@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 2**32), shape=st.tuples(st.integers(1, 7), st.integers(1, 7)))
def test_rref_backends_agree(p, seed, shape):
    rng = random.Random(seed)
    rows = [[rng.randrange(p) for _ in range(shape[1])] for _ in range(shape[0])]
    assert compiled.rref_modp(rows, shape[1], p) == _kernels_py.rref_modp(rows, shape[1], p)


@pytest.mark.parametrize("p", [2, 5, 101, 2147483647])
@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 2**32), n=st.integers(1, 5))
def test_det_backends_agree_with_leibniz(p, seed, n):
    rng = random.Random(seed)
    rows = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
    d = _kernels_py.det_modp(rows, p)
    assert compiled.det_modp(rows, p) == d
    assert d == oracles.leibniz_det(rows, oracles.Ops.modp(p))


def test_dispatch_reports_backend():
    assert kernels.BACKEND in ("cython", "python")
    rows = [[1, 2], [3, 4]]
    assert kernels.det_modp(rows, 7) == (1 * 4 - 2 * 3) % 7


def test_large_prime_uses_python_path():
    p = (1 << 61) - 1
    rows = [[p - 1, 2], [3, 5]]
    assert kernels.det_modp(rows, p) == (-(5) - 6) % p
