"""Integer number theory: primality, factorization, orders, divisors.

Everything the basis searches need fits in 63 bits (the largest values are
r = nk+1 for desk-scale n, k and 2^e - 1 with e <= 20), so plain machine
integers and a deterministic Miller-Rabin witness set suffice.
"""
from dataclasses import dataclass
from math import gcd

from .errors import ParameterError

# Deterministic for every m < 3.3e24, far beyond the 63-bit contract.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _small_primes(limit):
    sieve = bytearray([1]) * limit
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = b"\x00" * len(sieve[i * i :: i])
    return [i for i in range(limit) if sieve[i]]


_TRIAL_PRIMES = _small_primes(1 << 12)


def is_prime(m: int) -> bool:
    """Deterministic primality for m < 2^63."""
    if m < 2:
        return False
    for p in _MR_WITNESSES:
        if m % p == 0:
            return m == p
    d = m - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """A complete prime factorization: value = prod(p**e)."""

    value: int
    factors: tuple  # sorted ((prime, exponent), ...)

    @property
    def primes(self):
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0


def _brent_rho(n: int) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 1000):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")  # pragma: no cover


def factorize(m: int) -> Factorization:
    """Complete factorization by trial division plus a rho fallback."""
    if m <= 0:
        raise ParameterError(f"factorize needs a positive integer, got {m}")
    value = m
    counts = {}
    for p in _TRIAL_PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    stack = [m] if m > 1 else []
    while stack:
        n = stack.pop()
        if n == 1:
            continue
        if is_prime(n):
            counts[n] = counts.get(n, 0) + 1
            continue
        d = _brent_rho(n)
        stack.append(d)
        stack.append(n // d)
    return Factorization(value, tuple(sorted(counts.items())))


def mult_order(a: int, r: int) -> int:
    """Least t >= 1 with a^t = 1 (mod r), for prime r (factors r-1)."""
    if r < 2:
        raise ParameterError(f"modulus must be >= 2, got {r}")
    if gcd(a, r) != 1:
        raise ParameterError(f"gcd({a}, {r}) != 1; order undefined")
    t = r - 1
    if pow(a, t, r) != 1:
        # only possible when r is composite, which call sites exclude
        raise ParameterError(f"{r} is not prime; a^(r-1) != 1")
    for p in factorize(t).primes:
        while t % p == 0 and pow(a, t // p, r) == 1:
            t //= p
    return t


def divisors(n: int) -> list:
    """All positive divisors of n in ascending order."""
    if n < 1:
        raise ParameterError(f"divisors needs n >= 1, got {n}")
    ds = [1]
    for p, e in factorize(n).factors:
        ds = [d * p**i for d in ds for i in range(e + 1)]
    return sorted(ds)


def valuation(m: int, p: int) -> int:
    """The exponent of p in m (m >= 1)."""
    if m < 1:
        raise ParameterError(f"valuation needs m >= 1, got {m}")
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def euler_phi(n: int) -> int:
    """Euler's totient."""
    out = 1
    for p, e in factorize(n).factors:
        out *= (p - 1) * p ** (e - 1)
    return out
