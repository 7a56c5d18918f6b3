"""n_q valuations and embedding-degree searches."""
from math import gcd

import pytest

from gf2nbasis.algebraic import compute_nq, enb_embedding_degree, multgroup_embedding_degree
from gf2nbasis.errors import ParameterError
from gf2nbasis.numtheory import euler_phi, factorize


def test_nq_worked_example():
    prof = compute_nq(10, 42989)
    assert prof.nq == 160
    assert prof.per_prime == ((2, 1, 2, 5), (5, 1, 0, 1))


def test_nq_binary_example():
    assert compute_nq(61, 2**16).nq == 61


def test_nq_coprime_case(rng):
    for _ in range(500):
        n = int(rng.integers(2, 10_000))
        e = int(rng.integers(2, 21))
        q = 1 << e
        if gcd(n, q - 1) == 1:
            assert compute_nq(n, q).nq == n


def test_nq_trivial_and_errors():
    assert compute_nq(1, 8).nq == 1
    with pytest.raises(ParameterError):
        compute_nq(10, 12)  # 12 = 2^2 * 3 is not a prime power
    with pytest.raises(ParameterError):
        compute_nq(0, 8)


def test_nq_profile_reassembles():
    prof = compute_nq(360, 2**12)
    out = 1
    for l, _, _, v in prof.per_prime:
        assert 360 % l == 0
        out *= l**v
    assert out == prof.nq


def test_property_bounds(rng):
    # squarefree q-1 implies nq <= n^3; in any case nq <= n^2 (q-1)^2
    for _ in range(2000):
        n = int(rng.integers(2, 10_000))
        e = int(rng.integers(2, 21))
        q = 1 << e
        prof = compute_nq(n, q)
        assert prof.nq <= n * n * (q - 1) * (q - 1)
        if all(v <= 1 for _, v in factorize(q - 1).factors):
            assert prof.nq <= n**3


def test_property_exponent_stability(rng):
    # e coprime to n*phi(n) leaves nq unchanged under q -> q^e
    checked = 0
    for _ in range(3000):
        n = int(rng.integers(2, 60))
        eq = int(rng.integers(2, 8))
        q = 1 << eq
        e = int(rng.integers(2, 6))
        if gcd(e, n * euler_phi(n)) != 1:
            continue
        if q**e >= 1 << 63:
            continue
        checked += 1
        assert compute_nq(n, q).nq == compute_nq(n, q**e).nq
    assert checked > 100


def test_embedding_degree_examples():
    assert enb_embedding_degree(507, 20).embed == 13
    assert enb_embedding_degree(507, 20).d == 39
    assert enb_embedding_degree(500, 20).embed is None
    assert enb_embedding_degree(512, 20).embed == 16


def test_multiplicative_examples():
    assert multgroup_embedding_degree(657, 20).embed == 9
    assert multgroup_embedding_degree(979, 20).embed == 11
    assert multgroup_embedding_degree(507, 20).embed is None
    # the two remark degrees have no elliptic embedding at all
    assert enb_embedding_degree(657, 20).embed is None
    assert enb_embedding_degree(979, 20).embed is None


def test_mechanism_tags():
    assert enb_embedding_degree(512, 20).mechanism == "elliptic"
    assert multgroup_embedding_degree(657, 20).mechanism == "multiplicative"


def test_search_preconditions():
    with pytest.raises(ParameterError):
        enb_embedding_degree(3, 20)
    with pytest.raises(ParameterError):
        enb_embedding_degree(507, 25)
    with pytest.raises(ParameterError):
        multgroup_embedding_degree(507, 1)
