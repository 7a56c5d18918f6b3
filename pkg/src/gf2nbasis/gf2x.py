"""Polynomials over GF(2) and small fields F_{2^e} behind Zech log tables.

A BinaryPolynomial packs its coefficients little-endian into 64-bit words,
so addition is a word-wise xor and the multiply kernels run on dense
machine words.  The hex form writes the packed bits as a plain lowercase
hex number, least significant nibble first in value ("b" = x^3+x+1).
"""
from __future__ import annotations

import numpy as np

from . import backend, numtheory
from ._bits import (
    bitlen_words,
    fold_cyclic,
    int_from_words,
    pack_bits,
    trim_words,
    unpack_bits,
    words_from_int,
    xor_words,
)
from .errors import ParameterError

#: operand word count at or below which mul_karatsuba calls the schoolbook
#: kernel directly; the crossover is empirical (see the bench command) and
#: 32 words is where splitting starts to pay for the compiled kernel here
KARATSUBA_THRESHOLD_WORDS = 32


class BinaryPolynomial:
    """Immutable polynomial over GF(2), packed into uint64 words."""

    __slots__ = ("_words", "_degree")

    def __init__(self, words):
        w = trim_words(np.asarray(words, dtype=np.uint64))
        w.setflags(write=False)
        self._words = w
        bl = bitlen_words(w)
        # explicit sentinel for the zero polynomial, never -1 arithmetic
        self._degree = bl - 1 if bl else None

    @classmethod
    def from_int(cls, value: int) -> "BinaryPolynomial":
        """Bit i of value is the coefficient of x^i."""
        return cls(words_from_int(value))

    @classmethod
    def from_hex(cls, text: str) -> "BinaryPolynomial":
        return cls.from_int(int(text, 16))

    @classmethod
    def from_bits(cls, bits) -> "BinaryPolynomial":
        """bits[i] (0/1) is the coefficient of x^i."""
        return cls(pack_bits(np.asarray(bits, dtype=np.uint8)))

    @classmethod
    def zero(cls) -> "BinaryPolynomial":
        return cls(np.zeros(0, dtype=np.uint64))

    @classmethod
    def one(cls) -> "BinaryPolynomial":
        return cls.from_int(1)

    @classmethod
    def x(cls) -> "BinaryPolynomial":
        return cls.from_int(2)

    @classmethod
    def monomial(cls, d: int) -> "BinaryPolynomial":
        if d < 0:
            raise ParameterError("monomial degree must be >= 0")
        return cls.from_int(1 << d)

    @property
    def degree(self):
        """Degree as an int, or None for the zero polynomial."""
        return self._degree

    @property
    def words(self) -> np.ndarray:
        """Read-only packed words (trimmed)."""
        return self._words

    def is_zero(self) -> bool:
        return self._degree is None

    def coefficient(self, i: int) -> int:
        w, b = divmod(i, 64)
        if w >= self._words.size:
            return 0
        return int(self._words[w] >> np.uint64(b)) & 1

    def bits(self, nbits=None) -> np.ndarray:
        if nbits is None:
            nbits = 0 if self._degree is None else self._degree + 1
        return unpack_bits(self._words, nbits)

    def to_int(self) -> int:
        return int_from_words(self._words)

    def to_hex(self) -> str:
        return format(self.to_int(), "x")

    def popcount(self) -> int:
        return int(self.bits().sum())

    def __add__(self, other):
        if not isinstance(other, BinaryPolynomial):
            return NotImplemented
        return BinaryPolynomial(xor_words(self._words, other._words))

    __sub__ = __add__

    def __mul__(self, other):
        if not isinstance(other, BinaryPolynomial):
            return NotImplemented
        return mul_karatsuba(self, other)

    def __mod__(self, other):
        if not isinstance(other, BinaryPolynomial):
            return NotImplemented
        return poly_mod(self, other)

    def __eq__(self, other):
        if not isinstance(other, BinaryPolynomial):
            return NotImplemented
        return self._words.size == other._words.size and bool(
            np.all(self._words == other._words)
        )

    def __hash__(self):
        return hash((BinaryPolynomial, self._words.tobytes()))

    def __bool__(self):
        return self._degree is not None

    def __repr__(self):
        if self._degree is None:
            return "0"
        terms = []
        for i in range(self._degree, -1, -1):
            if self.coefficient(i):
                terms.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
        return "+".join(terms)


def mul_schoolbook(a: BinaryPolynomial, b: BinaryPolynomial) -> BinaryPolynomial:
    """Quadratic carryless product (the reference kernel)."""
    return BinaryPolynomial(backend.mul_words(a.words, b.words))


def _xor_at(out: np.ndarray, off: int, src: np.ndarray):
    # clipped xor: words beyond the clip are zero padding from subproducts
    end = min(out.size, off + src.size)
    if end > off:
        out[off:end] ^= src[: end - off]


def _kara_words(a: np.ndarray, b: np.ndarray, threshold: int, base_mul) -> np.ndarray:
    la, lb = a.shape[0], b.shape[0]
    if la == 0 or lb == 0:
        return np.zeros(la + lb, dtype=np.uint64)
    if la <= threshold or lb <= threshold:
        return base_mul(a, b)
    h = (max(la, lb) + 1) // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    p0 = _kara_words(a0, b0, threshold, base_mul)
    p2 = _kara_words(a1, b1, threshold, base_mul)
    sa = a0.copy()
    sa[: a1.size] ^= a1
    sb = b0.copy()
    sb[: b1.size] ^= b1
    p1 = _kara_words(sa, sb, threshold, base_mul)
    out = np.zeros(la + lb, dtype=np.uint64)
    _xor_at(out, 0, p0)
    _xor_at(out, h, p0)
    _xor_at(out, h, p1)
    _xor_at(out, h, p2)
    _xor_at(out, 2 * h, p2)
    return out


def mul_karatsuba(
    a: BinaryPolynomial,
    b: BinaryPolynomial,
    threshold: int = KARATSUBA_THRESHOLD_WORDS,
    base_mul=None,
) -> BinaryPolynomial:
    """Karatsuba product, splitting word-aligned; equals mul_schoolbook.

    base_mul overrides the kernel used below the threshold (benchmarks
    compare backends with it); the active backend otherwise.
    """
    if threshold < 1:
        raise ParameterError(f"threshold must be >= 1, got {threshold}")
    if base_mul is None:
        base_mul = backend.mul_words
    return BinaryPolynomial(_kara_words(a.words, b.words, threshold, base_mul))


def mulmod_cyclic(a: BinaryPolynomial, b: BinaryPolynomial, r: int) -> BinaryPolynomial:
    """a*b reduced modulo x^r - 1 (exponents fold mod r)."""
    if r < 1:
        raise ParameterError(f"cyclic modulus length must be >= 1, got {r}")
    for p in (a, b):
        if p.degree is not None and p.degree >= r:
            raise ParameterError(f"operand degree {p.degree} not below r={r}")
    prod = _kara_words(a.words, b.words, KARATSUBA_THRESHOLD_WORDS, backend.mul_words)
    return BinaryPolynomial(fold_cyclic(prod, r))


def square(a: BinaryPolynomial) -> BinaryPolynomial:
    """a*a via bit spreading (freshman's dream)."""
    return BinaryPolynomial(backend.square_words(a.words))


def poly_mod(a: BinaryPolynomial, modulus: BinaryPolynomial) -> BinaryPolynomial:
    """Remainder of a modulo a nonzero modulus."""
    if modulus.degree is None:
        raise ParameterError("modulus is the zero polynomial")
    if a.degree is None or a.degree < modulus.degree:
        return a
    return BinaryPolynomial(backend.mod_words(a.words, modulus.words, modulus.degree))


def poly_gcd(a: BinaryPolynomial, b: BinaryPolynomial) -> BinaryPolynomial:
    while not b.is_zero():
        a, b = b, poly_mod(a, b)
    return a


def modpow(a: BinaryPolynomial, exponent: int, modulus: BinaryPolynomial) -> BinaryPolynomial:
    """a^exponent mod modulus by square-and-multiply."""
    if modulus.degree is None or modulus.degree < 1:
        raise ParameterError("modulus must have degree >= 1")
    if exponent < 0:
        raise ParameterError("exponent must be nonnegative")
    result = BinaryPolynomial.one()
    if exponent == 0:
        return result
    base = poly_mod(a, modulus)
    for bit in bin(exponent)[2:]:
        result = poly_mod(square(result), modulus)
        if bit == "1":
            result = poly_mod(mul_karatsuba(result, base), modulus)
    return result


def is_irreducible(f: BinaryPolynomial) -> bool:
    """Rabin's test: x^(2^d) = x mod f and gcd(x^(2^(d/p)) - x, f) = 1."""
    d = f.degree
    if d is None or d < 1:
        raise ParameterError("irreducibility is only defined for degree >= 1")
    x = poly_mod(BinaryPolynomial.x(), f)
    checkpoints = {d // p for p in numtheory.factorize(d).primes} if d > 1 else set()
    frob = {}
    cur = x
    for j in range(1, d + 1):
        cur = poly_mod(square(cur), f)
        if j in checkpoints:
            frob[j] = cur
    if cur != x:
        return False
    for j in checkpoints:
        g = poly_gcd(frob[j] + x, f)
        if g.degree != 0:
            return False
    return True


class ZechField:
    """GF(2^e) with log/antilog tables of 2^e entries each.

    Elements are ints in [0, 2^e); addition is xor, multiplication and
    inversion go through the tables.  Table size is the concrete cost that
    caps e at 20.
    """

    __slots__ = ("e", "modulus", "log_table", "antilog_table", "order")

    def __init__(self, e, modulus, log_table, antilog_table):
        self.e = e
        self.modulus = modulus
        self.log_table = log_table
        self.antilog_table = antilog_table
        self.order = (1 << e) - 1

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.antilog_table[(int(self.log_table[a]) + int(self.log_table[b])) % self.order])

    def inverse(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self.antilog_table[(self.order - int(self.log_table[a])) % self.order])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inverse(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if k == 0 else 0
        return int(self.antilog_table[(int(self.log_table[a]) * k) % self.order])

    def zech_log(self, i: int):
        """z with g^z = 1 + g^i, or None when 1 + g^i = 0."""
        v = int(self.antilog_table[i % self.order]) ^ 1
        return None if v == 0 else int(self.log_table[v])

    def __repr__(self):
        return f"ZechField(e={self.e}, modulus={self.modulus!r})"


def zech_build(e: int) -> ZechField:
    """Build GF(2^e) tables from the least primitive polynomial of degree e.

    The modulus is the lexicographically (numerically) smallest irreducible
    degree-e polynomial whose root x is primitive; candidates failing the
    order check are skipped, which keeps the tables reproducible.
    """
    if not 2 <= e <= 20:
        raise ParameterError(f"embedding degree e={e} outside [2, 20]")
    m = (1 << e) - 1
    proper = [m // p for p in numtheory.factorize(m).primes]
    x = BinaryPolynomial.x()
    one = BinaryPolynomial.one()
    for cand in range((1 << e) + 1, 1 << (e + 1), 2):
        f = BinaryPolynomial.from_int(cand)
        if not is_irreducible(f):
            continue
        if any(modpow(x, t, f) == one for t in proper):
            continue
        log_table, antilog_table = backend.zech_tables(e, cand)
        return ZechField(e, f, log_table, antilog_table)
    raise ParameterError(f"no primitive polynomial of degree {e} found")  # pragma: no cover
