"""Gaussian normal bases: construction, embedding multiplication, tables."""
import numpy as np
import pytest

from gf2nbasis import gauss
from gf2nbasis.errors import ImageError, NotNormalBasisError, ParameterError
from gf2nbasis.gauss import (
    GnbElement,
    build_params,
    embed_phi,
    gnb_exists,
    gnb_inverse,
    gnb_mul,
    gnb_pow,
    gnb_type_ok,
    lowest_type,
    mult_table,
    project_back,
)
from gf2nbasis.gf2x import BinaryPolynomial as P
from gf2nbasis.numtheory import is_prime


def test_gnb_exists_is_the_mod8_condition():
    assert not gnb_exists(256)
    assert gnb_exists(251)
    assert not gnb_exists(1000)
    assert gnb_exists(1)


def test_type_ok_anchors():
    assert gnb_type_ok(251, 2)
    assert not any(gnb_type_ok(250, k) for k in range(1, 9))
    assert gnb_type_ok(250, 9)
    assert gnb_type_ok(5, 2)


def test_fast_path_agrees_with_partition_certificate():
    for n in range(2, 120):
        for k in range(1, 11):
            assert gnb_type_ok(n, k) == gnb_type_ok(n, k, certify=True), (n, k)


def test_lowest_type_anchors():
    assert lowest_type(253, 10) == 10
    assert lowest_type(600, 10) is None
    assert lowest_type(268, 10) == 1


def test_build_params_subgroups():
    assert build_params(5, 2).subgroup == (1, 10)
    assert build_params(4, 3).subgroup == (1, 3, 9)


def test_build_params_error_names_certificate():
    with pytest.raises(NotNormalBasisError, match="composite"):
        build_params(250, 8)
    # r = 1013 is prime yet the cosets do not partition
    assert is_prime(506 * 2 + 1)
    with pytest.raises(NotNormalBasisError, match="partition"):
        build_params(506, 2)


def test_coset_index_is_a_partition():
    for n, k in [(5, 2), (6, 3), (12, 5), (29, 2)]:
        p = build_params(n, k)
        idx = p.coset_index[1:]
        counts = np.bincount(idx, minlength=n)
        assert (counts == k).all()


@pytest.fixture(scope="module")
def p52():
    return build_params(5, 2)


def test_embed_examples(p52):
    assert embed_phi(GnbElement.zero(p52)).is_zero()
    assert embed_phi(GnbElement.alpha(p52)).to_int() == (1 << 1) | (1 << 10)
    allones = embed_phi(GnbElement.one(p52)).to_int()
    assert allones == sum(1 << j for j in range(1, 11))


def test_project_is_a_section(p52, rng):
    for _ in range(200):
        a = GnbElement.random(p52, rng)
        assert project_back(embed_phi(a), p52) == a


def test_project_folds_the_constant(p52):
    assert project_back(P.one(), p52) == GnbElement.one(p52)


def test_project_rejects_non_image(p52):
    with pytest.raises(ImageError, match="image of phi"):
        project_back(P.from_int(0b110), p52)  # x + x^2 not coset constant
    with pytest.raises(ParameterError):
        project_back(P.monomial(11), p52)


def test_identity_and_squaring(p52, rng):
    one = GnbElement.one(p52)
    e0 = GnbElement.alpha(p52)
    assert gnb_mul(e0, e0) == GnbElement.unit(p52, 1)
    for _ in range(100):
        a = GnbElement.random(p52, rng)
        assert gnb_mul(one, a) == a
        assert gnb_mul(a, a) == a.shift()


def test_inverse(p52, rng):
    one = GnbElement.one(p52)
    assert gnb_inverse(one) == one
    e0 = GnbElement.alpha(p52)
    assert gnb_mul(gnb_inverse(e0), e0) == one
    with pytest.raises(ZeroDivisionError):
        gnb_inverse(GnbElement.zero(p52))
    for _ in range(50):
        a = GnbElement.random(p52, rng)
        if a.is_zero():
            continue
        inv = gnb_inverse(a)
        assert gnb_mul(a, inv) == one
        assert gnb_inverse(inv) == a


def test_pow(p52):
    e0 = GnbElement.alpha(p52)
    assert gnb_pow(e0, 0) == GnbElement.one(p52)
    assert gnb_pow(e0, 1) == e0
    assert gnb_pow(e0, 2) == e0.shift()
    assert gnb_pow(e0, 31) == GnbElement.one(p52)  # alpha^(2^5-1) = 1


def test_params_mismatch():
    a = GnbElement.alpha(build_params(5, 2))
    b = GnbElement.alpha(build_params(6, 3))
    with pytest.raises(ParameterError):
        gnb_mul(a, b)


def test_hex_round_trip(p52):
    a = GnbElement.from_hex(p52, "13")
    assert a.to_hex() == "13"
    assert len(GnbElement.one(p52).to_hex()) == 2  # ceil(5/4)
    with pytest.raises(ParameterError):
        GnbElement.from_hex(p52, "ff")  # needs more than 5 coordinate bits


def test_mult_table_complexities():
    assert mult_table(build_params(5, 2)).complexity == 9
    assert mult_table(build_params(6, 3)).complexity == 17
    assert mult_table(build_params(12, 5)).complexity == 51


def test_mult_table_apply_is_alpha_mul(p52, rng):
    t = mult_table(p52)
    e0 = GnbElement.alpha(p52)
    for _ in range(50):
        a = GnbElement.random(p52, rng)
        assert t.apply(a) == gnb_mul(e0, a)


# --- gamma-expansion oracle ---------------------------------------------------


def gamma_embed(a: GnbElement) -> int:
    """Element as a sum of literal coset sums in F_2[y]/(y^r - 1)."""
    p = a.params
    out = 0
    for j in range(1, p.r):
        if a.coords[p.coset_index[j]]:
            out |= 1 << j
    return out


def gamma_mul(u: int, v: int, r: int) -> int:
    """Cyclic convolution by rotate-xor on exponent bitmasks."""
    mask = (1 << r) - 1
    out = 0
    for i in range(r):
        if (u >> i) & 1:
            out ^= ((v << i) | (v >> (r - i))) & mask if i else v
    return out


def gamma_project(w: int, params) -> GnbElement:
    if w & 1:
        w ^= (1 << params.r) - 1
    coords = np.zeros(params.n, dtype=np.uint8)
    for i in range(params.n):
        coords[i] = (w >> int(params.coset_reps[i])) & 1
    # constancy
    for j in range(1, params.r):
        assert ((w >> j) & 1) == coords[params.coset_index[j]]
    return GnbElement(params, coords)


def small_bases(rmax=100):
    out = []
    for n in range(2, rmax):
        for k in range(1, rmax):
            r = n * k + 1
            if r > rmax:
                break
            if gnb_type_ok(n, k):
                out.append((n, k))
    return out


def test_gamma_oracle_equivalence(rng):
    bases = small_bases(100)
    assert (5, 2) in bases and (4, 3) in bases
    for n, k in bases:
        params = build_params(n, k)
        for _ in range(25):
            a = GnbElement.random(params, rng)
            b = GnbElement.random(params, rng)
            want = gamma_project(gamma_mul(gamma_embed(a), gamma_embed(b), params.r), params)
            assert gnb_mul(a, b) == want, (n, k)


def test_ring_properties_small(rng):
    for n, k in [(5, 2), (6, 3), (12, 5)]:
        params = build_params(n, k)
        for _ in range(100):
            a = GnbElement.random(params, rng)
            b = GnbElement.random(params, rng)
            c = GnbElement.random(params, rng)
            assert gnb_mul(a, b) == gnb_mul(b, a)
            assert gnb_mul(gnb_mul(a, b), c) == gnb_mul(a, gnb_mul(b, c))
            assert gnb_mul(a, b + c) == gnb_mul(a, b) + gnb_mul(a, c)
            assert gnb_mul(a, b).shift() == gnb_mul(a.shift(), b.shift())
