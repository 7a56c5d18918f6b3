"""Polynomial arithmetic and Zech fields."""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gf2nbasis import gf2x
from gf2nbasis.errors import ParameterError
from gf2nbasis.gf2x import (
    BinaryPolynomial as P,
    is_irreducible,
    modpow,
    mul_karatsuba,
    mul_schoolbook,
    mulmod_cyclic,
    poly_gcd,
    poly_mod,
    square,
    zech_build,
)

from conftest import int_mod, int_mul

polys = st.integers(min_value=0, max_value=(1 << 700) - 1)


def test_freshman_dream():
    assert (P.from_int(0b11) * P.from_int(0b11)).to_int() == 0b101


def test_mul_annihilator():
    assert mul_schoolbook(P.from_int(0b1011), P.zero()).is_zero()
    assert mul_schoolbook(P.zero(), P.zero()).is_zero()


def test_mul_worked_example():
    # (x^3+x+1)(x^2+x) = x^5+x^4+x^3+x, by coefficient convolution mod 2
    assert mul_schoolbook(P.from_int(0b1011), P.from_int(0b110)).to_int() == 0b111010


def test_mul_degree_adds():
    a, b = P.from_int(0b1101), P.from_int(0b101)
    assert mul_schoolbook(a, b).degree == a.degree + b.degree


@given(polys, polys)
@settings(max_examples=200)
def test_mul_matches_int_oracle(a, b):
    assert mul_schoolbook(P.from_int(a), P.from_int(b)).to_int() == int_mul(a, b)


@given(polys, polys, st.integers(min_value=1, max_value=16))
@settings(max_examples=200)
def test_karatsuba_equals_schoolbook(a, b, threshold):
    pa, pb = P.from_int(a), P.from_int(b)
    assert mul_karatsuba(pa, pb, threshold) == mul_schoolbook(pa, pb)


def test_karatsuba_threshold_validated():
    with pytest.raises(ParameterError):
        mul_karatsuba(P.one(), P.one(), 0)


@given(polys)
@settings(max_examples=100)
def test_char2_addition(a):
    pa = P.from_int(a)
    assert (pa + pa).is_zero()


@given(polys, polys, polys)
@settings(max_examples=100)
def test_ring_identities(a, b, c):
    pa, pb, pc = P.from_int(a), P.from_int(b), P.from_int(c)
    assert pa * pb == pb * pa
    assert pa * (pb + pc) == pa * pb + pa * pc


@given(polys)
@settings(max_examples=100)
def test_square_is_self_product(a):
    pa = P.from_int(a)
    assert square(pa) == mul_schoolbook(pa, pa)


def test_hex_round_trip():
    assert P.from_hex("b").to_int() == 0b1011
    assert P.from_hex("b").to_hex() == "b"
    assert repr(P.from_hex("b")) == "x^3+x+1"
    assert P.zero().to_hex() == "0"


# --- cyclic multiplication -------------------------------------------------


def test_cyclic_wraparound():
    assert mulmod_cyclic(P.monomial(10), P.x(), 11) == P.one()


def test_cyclic_identity():
    a = P.from_int(0b10011)
    assert mulmod_cyclic(a, P.one(), 11) == a


def test_cyclic_square_fold():
    # (x + x^2)^2 mod (x^5 - 1) = x^2 + x^4
    assert mulmod_cyclic(P.from_int(0b110), P.from_int(0b110), 5).to_int() == 0b10100


def _fold_by_exponents(a: int, b: int, r: int) -> int:
    prod = int_mul(a, b)
    out = 0
    i = 0
    while prod:
        if prod & 1:
            out ^= 1 << (i % r)
        prod >>= 1
        i += 1
    return out


@pytest.mark.parametrize("r", [11, 23, 2251])
def test_cyclic_matches_exponent_folding(r, rng):
    for _ in range(150):
        a = int(rng.integers(0, 1 << 63)) % (1 << min(63, r))
        b = int(rng.integers(0, 1 << 63)) % (1 << min(63, r))
        got = mulmod_cyclic(P.from_int(a), P.from_int(b), r).to_int()
        assert got == _fold_by_exponents(a, b, r)


def test_cyclic_parameter_errors():
    with pytest.raises(ParameterError):
        mulmod_cyclic(P.one(), P.one(), 0)
    with pytest.raises(ParameterError):
        mulmod_cyclic(P.monomial(5), P.one(), 5)


# --- modular exponentiation and irreducibility ------------------------------


def test_modpow_trivial_exponents():
    m = P.from_int(0b1011)
    a = P.from_int(0b111001)
    assert modpow(a, 0, m) == P.one()
    assert modpow(a, 1, m) == poly_mod(a, m)


def test_modpow_frobenius_fixed_point():
    # every element of F_8 satisfies t^8 = t; independent int oracle agrees
    m = 0b1011
    for a in range(8):
        want = a
        for _ in range(3):
            want = int_mod(int_mul(want, want), m)
        assert want == a
        assert modpow(P.from_int(a), 8, P.from_int(m)) == P.from_int(a)


def test_modpow_zero_modulus():
    with pytest.raises(ParameterError):
        modpow(P.x(), 3, P.zero())
    with pytest.raises(ParameterError):
        modpow(P.x(), 3, P.one())


def _irreducible_by_trial_division(f: int) -> bool:
    d = f.bit_length() - 1
    for g in range(2, f):
        if g.bit_length() - 1 > d // 2:
            break
        if int_mod(f, g) == 0:
            return False
    return True


def test_irreducibility_examples():
    assert is_irreducible(P.from_int(0b111))
    assert not is_irreducible(P.from_int(0b101))  # (x+1)^2
    assert _irreducible_by_trial_division(0b100101)
    assert is_irreducible(P.from_int(0b100101))  # x^5+x^2+1
    with pytest.raises(ParameterError):
        is_irreducible(P.one())


def test_irreducibility_matches_trial_division():
    for f in range(4, 1 << 10):
        assert is_irreducible(P.from_int(f)) == _irreducible_by_trial_division(f), f


def test_poly_gcd():
    a = P.from_int(0b111) * P.from_int(0b1011)
    b = P.from_int(0b111) * P.from_int(0b110)
    assert poly_gcd(a, b) == P.from_int(0b111)  # x^3+x+1 shares nothing with x(x+1)


# --- Zech fields -------------------------------------------------------------


def test_zech_gf4_is_forced():
    f = zech_build(2)
    assert f.modulus.to_int() == 0b111
    assert f.mul(2, 2) == 3  # x*x = x+1
    assert f.mul(2, 3) == 1  # x*(x+1) = x^2+x = 1


def test_zech_table_sizes():
    f = zech_build(16)
    assert len(f.log_table) == 1 << 16
    assert len(f.antilog_table) == 1 << 16


def test_zech_bounds():
    with pytest.raises(ParameterError):
        zech_build(21)
    with pytest.raises(ParameterError):
        zech_build(1)


def test_zech_round_trip_and_zech_log():
    f = zech_build(6)
    for x in range(1, 1 << 6):
        assert f.antilog_table[f.log_table[x]] == x
    g = 2  # x is primitive by construction... checked via log
    assert f.log_table[g] == 1
    for i in range(1, f.order):
        z = f.zech_log(i)
        lhs = 1 ^ int(f.antilog_table[i])
        assert (z is None and lhs == 0) or int(f.antilog_table[z]) == lhs


def _vec_mul(f, a, b):
    a, b = np.broadcast_arrays(a, b)
    out = np.zeros(a.shape, dtype=np.int64)
    nz = (a != 0) & (b != 0)
    out[nz] = f.antilog_table[(f.log_table[a[nz]] + f.log_table[b[nz]]) % f.order]
    return out


@pytest.mark.parametrize("e", [2, 3, 4, 5])
def test_zech_field_axioms_exhaustive_small(e):
    f = zech_build(e)
    size = 1 << e
    a = np.arange(size)[:, None, None]
    b = np.arange(size)[None, :, None]
    c = np.arange(size)[None, None, :]
    assert np.array_equal(
        _vec_mul(f, _vec_mul(f, a, b), c), _vec_mul(f, a, _vec_mul(f, b, c))
    )
    assert np.array_equal(_vec_mul(f, a, b ^ c), _vec_mul(f, a, b) ^ _vec_mul(f, a, c))
    for x in range(1, size):
        assert f.mul(x, f.inverse(x)) == 1


@pytest.mark.parametrize("e", [9, 11])
def test_zech_field_axioms_random(e, rng):
    f = zech_build(e)
    n = 2000
    a = rng.integers(0, 1 << e, n)
    b = rng.integers(0, 1 << e, n)
    c = rng.integers(0, 1 << e, n)
    assert np.array_equal(
        _vec_mul(f, _vec_mul(f, a, b), c), _vec_mul(f, a, _vec_mul(f, b, c))
    )
    assert np.array_equal(_vec_mul(f, a, b ^ c), _vec_mul(f, a, b) ^ _vec_mul(f, a, c))
