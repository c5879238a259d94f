"""The compiled kernels must agree with the pure-Python reference exactly."""

import random

import pytest

from reciprocity._kernels import pure

try:
    from reciprocity._kernels import _core as core
except ImportError:  # pragma: no cover - environment without the extension
    core = None

needs_core = pytest.mark.skipif(core is None, reason="compiled kernels not built")


def random_poly(rng, p, max_deg=8):
    return pure.normalize([rng.randrange(p) for _ in range(rng.randint(0, max_deg + 1))])


@needs_core
@pytest.mark.parametrize("p", [2, 3, 5, 7, 65537])
def test_poly_ops_agree(p):
    rng = random.Random(p)
    for _ in range(200):
        a = random_poly(rng, p)
        b = random_poly(rng, p)
        assert core.add(a, b, p) == pure.add(a, b, p)
        assert core.sub(a, b, p) == pure.sub(a, b, p)
        assert core.mul(a, b, p) == pure.mul(a, b, p)
        if b:
            assert core.divmod_poly(a, b, p) == pure.divmod_poly(a, b, p)
            assert core.gcd(a, b, p) == pure.gcd(a, b, p)
        x = rng.randrange(p)
        assert core.eval_at(a, x, p) == pure.eval_at(a, x, p)


@needs_core
@pytest.mark.parametrize("p", [3, 7, 31])
def test_modular_inverse_chain_agree(p):
    rng = random.Random(11 * p)
    m = pure.normalize([rng.randrange(p) for _ in range(4)] + [1])
    for _ in range(100):
        a = random_poly(rng, p, 3)
        try:
            expected = pure.invmod(a, m, p)
        except ZeroDivisionError:
            with pytest.raises(ZeroDivisionError):
                core.invmod(a, m, p)
            continue
        assert core.invmod(a, m, p) == expected
        assert core.powmod(a, 2 * p + 1, m, p) == pure.powmod(a, 2 * p + 1, m, p)
        assert core.mulmod(a, a, m, p) == pure.mulmod(a, a, m, p)


@needs_core
@pytest.mark.parametrize("p", [2, 5, 13])
def test_matrix_ops_agree(p):
    rng = random.Random(p + 99)
    for n in (1, 2, 3, 5, 8):
        a = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        b = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        assert core.mat_mul(a, b, p) == pure.mat_mul(a, b, p)
        assert core.mat_det(a, p) == pure.mat_det(a, p)
        if pure.mat_det(a, p) != 0:
            assert core.mat_inv(a, p) == pure.mat_inv(a, p)
        else:
            with pytest.raises(ZeroDivisionError):
                core.mat_inv(a, p)


@needs_core
def test_xgcd_identity():
    p = 7
    rng = random.Random(1234)
    for _ in range(100):
        a = random_poly(rng, p)
        b = random_poly(rng, p)
        g, s, t = core.xgcd(a, b, p)
        assert (g, s, t) == pure.xgcd(a, b, p)
        lhs = pure.add(pure.mul(s, a, p), pure.mul(t, b, p), p)
        assert lhs == g


def test_pure_backend_env(monkeypatch):
    # the selection shim honours RECIPROCITY_PURE
    import importlib
    import sys

    monkeypatch.setenv("RECIPROCITY_PURE", "1")
    saved = {k: v for k, v in sys.modules.items() if k.startswith("reciprocity._kernels")}
    for k in saved:
        del sys.modules[k]
    try:
        shim = importlib.import_module("reciprocity._kernels")
        assert shim.BACKEND == "python"
    finally:
        for k in list(sys.modules):
            if k.startswith("reciprocity._kernels"):
                del sys.modules[k]
        sys.modules.update(saved)
