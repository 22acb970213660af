"""Compiled and pure kernels must agree exactly."""

import random

import pytest

from triplepoint import _termkernel_py as pure

try:
    from triplepoint import _termkernel_c as compiled
except ImportError:
    compiled = None

from triplepoint.polyring import Ring

needs_compiled = pytest.mark.skipif(
    compiled is None, reason="compiled kernel not built"
)

R = Ring(("x", "y", "z", "t"))


def _rand_terms(rng):
    pairs = {}
    for _ in range(rng.randint(0, 6)):
        exp = tuple(rng.randint(0, 4) for _ in range(4))
        pairs[exp] = (rng.randint(-5, 5), rng.randint(-3, 3), rng.randint(1, 3))
    out = [
        (R.key(e), e) + pure.snorm(*c)
        for e, c in pairs.items()
        if pure.snorm(*c) != pure.SZERO
    ]
    out.sort(reverse=True)
    return out


@needs_compiled
def test_backends_agree_on_random_inputs():
    rng = random.Random(42)
    for _ in range(400):
        p = _rand_terms(rng)
        q = _rand_terms(rng)
        assert pure.add_terms(p, q) == compiled.add_terms(p, q)
        assert pure.mul_terms(p, q, R.kc) == compiled.mul_terms(p, q, R.kc)
        assert pure.neg_terms(p) == compiled.neg_terms(p)
        assert pure.monic_terms(list(p)) == compiled.monic_terms(list(p))
        divisors = [d for d in (_rand_terms(rng) for _ in range(2)) if d]
        if divisors:
            assert pure.reduce_terms(p, divisors, R.kc, True) == compiled.reduce_terms(
                p, divisors, R.kc, True
            )


@needs_compiled
def test_scalar_ops_agree():
    rng = random.Random(7)
    for _ in range(500):
        c1 = (rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(1, 9))
        c2 = (rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(1, 9))
        assert pure.sadd(c1, c2) == compiled.sadd(c1, c2)
        assert pure.smul(c1, c2) == compiled.smul(c1, c2)
        if c2[:2] != (0, 0):
            assert pure.sdiv(c1, c2) == compiled.sdiv(c1, c2)
