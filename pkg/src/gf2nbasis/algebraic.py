"""Feasibility searches for normal bases from one-dimensional algebraic groups.

compute_nq evaluates, prime by prime, the valuation recipe that controls
whether a curve over F_q with a point of order n exists (the search only
needs n_q^2 <= q, kept in integers).  The two embedding-degree searches
walk the divisors e of n and test the mechanism condition for d = n/e:
elliptic uses n_q(d, 2^e)^2 <= 2^e, multiplicative uses d | 2^e - 1.
"""
from dataclasses import dataclass

from . import numtheory
from .errors import ParameterError

MECHANISM_ELLIPTIC = "elliptic"
MECHANISM_MULTIPLICATIVE = "multiplicative"


@dataclass(frozen=True)
class NqProfile:
    """Per-prime valuation breakdown of n_q for the pair (n, q)."""

    n: int
    q: int
    per_prime: tuple  # ((l, v_l(n), v_l(q-1), v_l(n_q)), ...)
    nq: int


@dataclass(frozen=True)
class EmbeddingResult:
    """Outcome of an embedding-degree search for F_2 -> F_{2^e} -> F_{2^n}."""

    n: int
    embed: int | None
    d: int | None
    mechanism: str


def _check_prime_power(q: int):
    if q < 2:
        raise ParameterError(f"q must be >= 2, got {q}")
    if len(numtheory.factorize(q).factors) != 1:
        raise ParameterError(f"q = {q} is not a prime power")


def compute_nq(n: int, q: int) -> NqProfile:
    """n_q from the per-prime valuations of n and q-1.

    For each prime l dividing n: v_l(n_q) = v_l(n) when l does not divide
    q-1, and max(2*v_l(q-1)+1, 2*v_l(n)) when it does.  Primes not
    dividing n contribute nothing.
    """
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    _check_prime_power(q)
    per_prime = []
    nq = 1
    for l, vn in numtheory.factorize(n).factors:
        vq = numtheory.valuation(q - 1, l)
        v = vn if vq == 0 else max(2 * vq + 1, 2 * vn)
        per_prime.append((l, vn, vq, v))
        nq *= l**v
    return NqProfile(n, q, tuple(per_prime), nq)


def _divisor_degrees(n: int, emax: int):
    if n < 4:
        raise ParameterError(f"n must be >= 4, got {n}")
    if not 2 <= emax <= 20:
        raise ParameterError(f"emax={emax} outside [2, 20]")
    for e in numtheory.divisors(n):
        if e < 2:
            continue
        if e > emax:
            break
        d = n // e
        if d >= 2:
            yield e, d


def enb_embedding_degree(n: int, emax: int = 20) -> EmbeddingResult:
    """Smallest divisor e <= emax of n with n_q(n/e, 2^e)^2 <= 2^e."""
    for e, d in _divisor_degrees(n, emax):
        nq = compute_nq(d, 1 << e).nq
        if nq * nq <= 1 << e:
            return EmbeddingResult(n, e, d, MECHANISM_ELLIPTIC)
    return EmbeddingResult(n, None, None, MECHANISM_ELLIPTIC)


def multgroup_embedding_degree(n: int, emax: int = 20) -> EmbeddingResult:
    """Smallest divisor e <= emax of n whose cofactor d divides 2^e - 1.

    d | 2^e - 1 puts a point of order d in the multiplicative group of
    F_{2^e}; evaluated as 2^e mod d = 1 so 2^e - 1 is never materialized.
    """
    for e, d in _divisor_degrees(n, emax):
        if pow(2, e, d) == 1:
            return EmbeddingResult(n, e, d, MECHANISM_MULTIPLICATIVE)
    return EmbeddingResult(n, None, None, MECHANISM_MULTIPLICATIVE)
