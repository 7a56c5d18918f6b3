"""Gauss-period normal bases of F_{2^n}/F_2.

A basis of type (n, k) needs r = nk+1 prime and the n sets 2^i*K
(K the order-k subgroup of Z_r^*) to partition Z_r^*; that partition is
stored as a coset index array and doubles as the normality certificate.
Multiplication embeds coordinates into F_2[x]/(x^r - 1) (coefficients
constant on cosets, zero constant term), multiplies there, and projects
back; projecting folds the constant term using 1 + g + ... + g^(r-1) = 0
and checks coset constancy, so every product re-certifies the arithmetic.
"""
from __future__ import annotations

from math import gcd

import numpy as np

from . import numtheory
from ._bits import pack_bits
from .errors import ImageError, NotNormalBasisError, ParameterError
from .gf2x import BinaryPolynomial, mulmod_cyclic


def gnb_exists(n: int) -> bool:
    """Whether F_{2^n}/F_2 has a Gaussian normal basis of any type (8 does not divide n)."""
    if n < 1:
        raise ParameterError(f"extension degree must be >= 1, got {n}")
    return n % 8 != 0


def _check_nk(n: int, k: int):
    if n < 2:
        raise ParameterError(f"extension degree must be >= 2, got {n}")
    if k < 1:
        raise ParameterError(f"type must be >= 1, got {k}")
    if n * k + 1 >= 1 << 31:
        raise ParameterError(f"r = nk+1 = {n * k + 1} exceeds 2^31")


def _partition_ok(n: int, k: int, r: int) -> bool:
    seen = bytearray(r)
    count = 0
    for a in range(1, r):
        if pow(a, k, r) != 1:
            continue
        count += 1
        j = a
        for _ in range(n):
            if seen[j]:
                return False
            seen[j] = 1
            j = (j << 1) % r
    return count == k


def gnb_type_ok(n: int, k: int, certify: bool = False) -> bool:
    """Whether the type-(n,k) Gauss period generates a normal basis.

    The default path checks r = nk+1 prime and gcd(nk/ord_r(2), n) = 1;
    certify=True runs the explicit coset-partition walk instead (same
    answer, used for cross-checks).
    """
    _check_nk(n, k)
    r = n * k + 1
    if not numtheory.is_prime(r):
        return False
    if certify:
        return _partition_ok(n, k, r)
    e = numtheory.mult_order(2, r)
    return gcd((n * k) // e, n) == 1


def lowest_type(n: int, kmax: int = 10):
    """Smallest k <= kmax with a type-(n,k) basis, or None."""
    if n < 2:
        raise ParameterError(f"extension degree must be >= 2, got {n}")
    if kmax < 1:
        raise ParameterError(f"kmax must be >= 1, got {kmax}")
    for k in range(1, kmax + 1):
        if gnb_type_ok(n, k):
            return k
    return None


def _find_generator(r: int) -> int:
    proper = [(r - 1) // p for p in numtheory.factorize(r - 1).primes]
    for g in range(2, r):
        if all(pow(g, t, r) != 1 for t in proper):
            return g
    raise NotNormalBasisError(f"no generator of Z_{r}^* found")  # pragma: no cover


class GnbParams:
    """The combinatorial data of a type-(n,k) Gaussian normal basis.

    coset_index[j] = i exactly when j lies in 2^i * K; slot 0 is unused.
    coset_reps[i] = 2^i mod r is the representative used by project_back.
    """

    __slots__ = ("n", "k", "r", "subgroup", "coset_index", "coset_reps", "_mult_table")

    def __init__(self, n, k, r, subgroup, coset_index, coset_reps):
        self.n = n
        self.k = k
        self.r = r
        self.subgroup = subgroup
        self.coset_index = coset_index
        self.coset_reps = coset_reps
        self._mult_table = None

    def same_basis(self, other: "GnbParams") -> bool:
        return self is other or (self.n == other.n and self.k == other.k)

    def __repr__(self):
        return f"GnbParams(n={self.n}, k={self.k}, r={self.r})"


def build_params(n: int, k: int) -> GnbParams:
    """Construct the subgroup and coset index map, certifying normality."""
    _check_nk(n, k)
    r = n * k + 1
    if not numtheory.is_prime(r):
        raise NotNormalBasisError(f"(n={n}, k={k}): r = {r} is composite")
    g = _find_generator(r)
    gn = pow(g, n, r)
    subgroup = []
    a = 1
    for _ in range(k):
        subgroup.append(a)
        a = a * gn % r
    if a != 1 or len(set(subgroup)) != k:
        raise NotNormalBasisError(f"(n={n}, k={k}): subgroup of order {k} not found")
    coset_index = np.full(r, -1, dtype=np.int64)
    for a in subgroup:
        j = a
        for i in range(n):
            if coset_index[j] != -1:
                raise NotNormalBasisError(
                    f"(n={n}, k={k}): cosets 2^i*K fail to partition Z_{r}^*"
                )
            coset_index[j] = i
            j = (j << 1) % r
    coset_index[0] = 0  # unused slot; every j in 1..r-1 is covered (nk = r-1)
    coset_reps = np.array([pow(2, i, r) for i in range(n)], dtype=np.int64)
    coset_index.setflags(write=False)
    coset_reps.setflags(write=False)
    return GnbParams(n, k, r, tuple(sorted(subgroup)), coset_index, coset_reps)


class GnbElement:
    """Coordinates with respect to (alpha, alpha^2, ..., alpha^(2^(n-1)))."""

    __slots__ = ("params", "coords")

    def __init__(self, params: GnbParams, coords):
        c = np.ascontiguousarray(coords, dtype=np.uint8)
        if c.shape != (params.n,):
            raise ParameterError(f"need {params.n} coordinates, got shape {c.shape}")
        c = c & 1
        c.setflags(write=False)
        self.params = params
        self.coords = c

    @classmethod
    def zero(cls, params):
        return cls(params, np.zeros(params.n, dtype=np.uint8))

    @classmethod
    def one(cls, params):
        """The field identity: all-ones, since sum(alpha_i) = Tr(alpha) = 1."""
        return cls(params, np.ones(params.n, dtype=np.uint8))

    @classmethod
    def unit(cls, params, i: int):
        c = np.zeros(params.n, dtype=np.uint8)
        c[i % params.n] = 1
        return cls(params, c)

    @classmethod
    def alpha(cls, params):
        return cls.unit(params, 0)

    @classmethod
    def from_int(cls, params, value: int):
        """Bit i of value is coordinate i."""
        if value < 0 or value >> params.n:
            raise ParameterError(f"value needs more than n={params.n} coordinate bits")
        raw = np.frombuffer(value.to_bytes((params.n + 7) // 8, "little"), dtype=np.uint8)
        return cls(params, np.unpackbits(raw, bitorder="little")[: params.n])

    @classmethod
    def from_hex(cls, params, text: str):
        return cls.from_int(params, int(text, 16))

    @classmethod
    def random(cls, params, rng: np.random.Generator):
        return cls(params, rng.integers(0, 2, params.n, dtype=np.uint8))

    def is_zero(self) -> bool:
        return not self.coords.any()

    def to_int(self) -> int:
        return int_from_coords(self.coords)

    def to_hex(self) -> str:
        """Fixed-width hex, ceil(n/4) nibbles, coordinate 0 = least significant bit."""
        return format(self.to_int(), f"0{(self.params.n + 3) // 4}x")

    def shift(self, s: int = 1) -> "GnbElement":
        """Frobenius: squaring s times is a cyclic coordinate shift."""
        return GnbElement(self.params, np.roll(self.coords, s))

    def __add__(self, other):
        if not isinstance(other, GnbElement) or not self.params.same_basis(other.params):
            return NotImplemented
        return GnbElement(self.params, self.coords ^ other.coords)

    __sub__ = __add__

    def __mul__(self, other):
        if not isinstance(other, GnbElement):
            return NotImplemented
        return gnb_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, GnbElement):
            return NotImplemented
        return self.params.same_basis(other.params) and bool(
            np.array_equal(self.coords, other.coords)
        )

    def __hash__(self):
        return hash((self.params.n, self.params.k, self.coords.tobytes()))

    def __repr__(self):
        return f"GnbElement(n={self.params.n}, k={self.params.k}, {self.to_hex()})"


def int_from_coords(coords: np.ndarray) -> int:
    return int.from_bytes(np.packbits(coords, bitorder="little").tobytes(), "little")


def embed_phi(a: GnbElement) -> BinaryPolynomial:
    """The coset embedding into F_2[x]/(x^r - 1); zero constant term."""
    p = a.params
    coeffs = a.coords[p.coset_index]
    coeffs[0] = 0
    return BinaryPolynomial(pack_bits(coeffs))


def project_back(poly: BinaryPolynomial, params: GnbParams) -> GnbElement:
    """Invert embed_phi after constant-term folding; checks coset constancy."""
    if poly.degree is not None and poly.degree >= params.r:
        raise ParameterError(f"degree {poly.degree} not below r = {params.r}")
    coeffs = poly.bits(params.r)
    if coeffs[0]:
        coeffs ^= 1  # fold the constant term: 1 = sum of all r-th roots
    out = coeffs[params.coset_reps]
    if not np.array_equal(coeffs[1:], out[params.coset_index[1:]]):
        raise ImageError("not in image of phi: coefficients not constant on cosets")
    return GnbElement(params, out)


def gnb_mul(a: GnbElement, b: GnbElement) -> GnbElement:
    """Field product via the cyclic-ring embedding."""
    if not a.params.same_basis(b.params):
        raise ParameterError("operands come from different bases")
    prod = mulmod_cyclic(embed_phi(a), embed_phi(b), a.params.r)
    return project_back(prod, a.params)


def gnb_pow(a: GnbElement, exponent: int) -> GnbElement:
    """a^exponent by shift-squarings and gnb_mul."""
    if exponent < 0:
        raise ParameterError("exponent must be nonnegative")
    result = GnbElement.one(a.params)
    if exponent == 0:
        return result
    for bit in bin(exponent)[2:]:
        result = result.shift()
        if bit == "1":
            result = gnb_mul(result, a)
    return result


def gnb_inverse(a: GnbElement) -> GnbElement:
    """a^(2^n - 2) as the product of a^(2^i) for i = 1..n-1."""
    if a.is_zero():
        raise ZeroDivisionError("0 has no inverse")
    acc = a.shift()
    power = acc
    for _ in range(a.params.n - 2):
        power = power.shift()
        acc = gnb_mul(acc, power)
    return acc


def gnb_trace(a: GnbElement) -> int:
    """Absolute trace: the parity of the coordinate weight."""
    return int(a.coords.sum()) & 1


class MultTable:
    """Multiplication table of the basis: row i holds alpha_0 * alpha_i."""

    __slots__ = ("params", "rows", "complexity")

    def __init__(self, params, rows):
        self.params = params
        rows.setflags(write=False)
        self.rows = rows
        self.complexity = int(rows.sum())

    def apply(self, a: GnbElement) -> GnbElement:
        """alpha * a as one vector-matrix product over GF(2)."""
        mask = a.coords.view(bool)
        if not mask.any():
            return GnbElement.zero(self.params)
        out = np.bitwise_xor.reduce(self.rows[mask], axis=0)
        return GnbElement(self.params, out)


def mult_table(params: GnbParams) -> MultTable:
    """Build (and cache) the table; complexity is its total weight."""
    if params._mult_table is None:
        alpha = GnbElement.alpha(params)
        rows = np.empty((params.n, params.n), dtype=np.uint8)
        for i in range(params.n):
            rows[i] = gnb_mul(alpha, GnbElement.unit(params, i)).coords
        params._mult_table = MultTable(params, rows)
    return params._mult_table
