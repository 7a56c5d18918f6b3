import numpy as np
import pytest

from gf2nbasis import gf2x


@pytest.fixture(scope="session")
def kernels_warm():
    """Force kernel compilation before any timed assertion."""
    a = gf2x.BinaryPolynomial.from_int((1 << 200) | 12345)
    b = gf2x.BinaryPolynomial.from_int((1 << 150) | 54321)
    gf2x.mul_schoolbook(a, b)
    gf2x.mul_karatsuba(a, b, 1)
    gf2x.square(a)
    gf2x.poly_mod(a, b)
    gf2x.zech_build(4)
    return True


@pytest.fixture
def rng():
    return np.random.default_rng(0xC0FFEE)


def int_mul(a: int, b: int) -> int:
    """Reference carryless product on plain ints."""
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def int_mod(a: int, f: int) -> int:
    """Reference polynomial remainder on plain ints."""
    df = f.bit_length() - 1
    while a and a.bit_length() - 1 >= df:
        a ^= f << (a.bit_length() - 1 - df)
    return a
