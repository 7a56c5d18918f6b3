"""Extension bases stacked on a Gaussian normal basis of F_{2^d}/F_2.

Three forms over a common base basis N with generator alpha:

  AS2     degree 2, generator a with a^2 + a = alpha (trace(alpha) = 1
          makes y^2+y+alpha irreducible); blocks (X0, X1) = X0 + a*X1.
  WITT4   degree 4 as two stacked degree-2 steps: b^2 + b = c2 where
          c2 = a when d is odd and c2 = alpha*a when d is even (both have
          absolute trace 1; verified computationally at build time);
          blocks (X00, X01, X10, X11) = (X00 + a*X01) + b*(X10 + a*X11).
  KUMMER3 degree 3, generator beta with beta^3 = alpha; needs d even
          (3 | 2^d - 1) and alpha a non-cube; blocks (X0, X1, X2).

Multiplying by alpha is a single vector-matrix product against the base
multiplication table, which is what keeps the operation counts at
3 muls + 1 table (AS2), <= 9 + <= 9 (WITT4), 6 + 2 (KUMMER3).
A polynomial-basis oracle (naive multivariate reduction over
F_2[z]/(minpoly alpha)) provides the independent verification path.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    ImageError,
    InternalInvariantError,
    KummerCubeError,
    KummerUnavailableError,
    ParameterError,
)
from .gauss import GnbElement, GnbParams, gnb_mul, gnb_pow, mult_table
from .gf2x import BinaryPolynomial, is_irreducible, mul_schoolbook, poly_mod

FORM_AS2 = "as2"
FORM_WITT4 = "witt4"
FORM_KUMMER3 = "kummer3"

_BLOCK_COUNT = {FORM_AS2: 2, FORM_WITT4: 4, FORM_KUMMER3: 3}


@dataclass
class OpCounters:
    """Per-call cost accumulator (caller-owned, never shared)."""

    base_muls: int = 0
    table_muls: int = 0
    base_adds: int = 0


class TowerParams:
    """A tower form over a base GNB, with its defining constants."""

    __slots__ = ("base", "form", "table", "c2", "_oracle")

    def __init__(self, base: GnbParams, form: str, table, c2=None):
        self.base = base
        self.form = form
        self.table = table
        self.c2 = c2  # AS2 pair (w0, w1) for WITT4, else None
        self._oracle = None

    @property
    def degree(self) -> int:
        return self.base.n * _BLOCK_COUNT[self.form]

    def __repr__(self):
        return f"TowerParams({self.form}, base=({self.base.n},{self.base.k}))"


class TowerElement:
    """2, 3, or 4 base-field coordinate blocks, block 0 first."""

    __slots__ = ("params", "blocks")

    def __init__(self, params: TowerParams, blocks):
        blocks = tuple(blocks)
        if len(blocks) != _BLOCK_COUNT[params.form]:
            raise ParameterError(
                f"{params.form} needs {_BLOCK_COUNT[params.form]} blocks, got {len(blocks)}"
            )
        for b in blocks:
            if not b.params.same_basis(params.base):
                raise ParameterError("block from a different base basis")
        self.params = params
        self.blocks = blocks

    @classmethod
    def zero(cls, params):
        z = GnbElement.zero(params.base)
        return cls(params, [z] * _BLOCK_COUNT[params.form])

    @classmethod
    def one(cls, params):
        blocks = [GnbElement.one(params.base)]
        blocks += [GnbElement.zero(params.base)] * (_BLOCK_COUNT[params.form] - 1)
        return cls(params, blocks)

    @classmethod
    def generator(cls, params):
        """The adjoined generator: a, b, or beta depending on the form."""
        blocks = [GnbElement.zero(params.base)] * _BLOCK_COUNT[params.form]
        gen_pos = {FORM_AS2: 1, FORM_WITT4: 2, FORM_KUMMER3: 1}[params.form]
        blocks[gen_pos] = GnbElement.one(params.base)
        return cls(params, blocks)

    @classmethod
    def random(cls, params, rng: np.random.Generator):
        return cls(
            params,
            [GnbElement.random(params.base, rng) for _ in range(_BLOCK_COUNT[params.form])],
        )

    @classmethod
    def from_hex_blocks(cls, params, text: str):
        parts = text.split(",")
        return cls(params, [GnbElement.from_hex(params.base, p.strip()) for p in parts])

    def to_hex_blocks(self) -> str:
        return ",".join(b.to_hex() for b in self.blocks)

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks)

    def __add__(self, other):
        if not isinstance(other, TowerElement) or other.params is not self.params:
            return NotImplemented
        return TowerElement(self.params, [x + y for x, y in zip(self.blocks, other.blocks)])

    __sub__ = __add__

    def __mul__(self, other):
        if not isinstance(other, TowerElement):
            return NotImplemented
        return tower_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, TowerElement):
            return NotImplemented
        return self.params.form == other.params.form and all(
            x == y for x, y in zip(self.blocks, other.blocks)
        )

    def __hash__(self):
        return hash((self.params.form, self.blocks))

    def __repr__(self):
        return f"TowerElement({self.params.form}, {self.to_hex_blocks()})"


def build_as2(base: GnbParams) -> TowerParams:
    """Degree-2 Artin-Schreier tower: a^2 + a = alpha.

    Irreducibility of y^2 + y + alpha needs trace 1, which holds for every
    Gauss period (the all-ones identity is the coordinate vector of 1).
    """
    return TowerParams(base, FORM_AS2, mult_table(base))


def _as2_square(tp, x0, x1):
    # (X0 + a*X1)^2 = (X0^2 + alpha*X1^2) + a*X1^2
    s0, s1 = x0.shift(), x1.shift()
    return s0 + tp.table.apply(s1), s1


def build_witt4(base: GnbParams) -> TowerParams:
    """Degree-4 tower of two Artin-Schreier steps: b^2 + b = c2.

    c2 = a for odd d (its absolute trace is d mod 2); c2 = alpha*a for
    even d (trace tower gives Tr(alpha*a) = Tr_{d->2}(alpha) = 1).  The
    trace of c2 is verified computationally, not assumed.
    """
    table = mult_table(base)
    tp = TowerParams(base, FORM_WITT4, table)
    zero = GnbElement.zero(base)
    if base.n % 2 == 1:
        c2 = (zero, GnbElement.one(base))
    else:
        c2 = (zero, GnbElement.alpha(base))
    tp.c2 = c2
    # absolute trace of c2 over F_2, summed along 2d conjugates
    t0, t1 = c2
    s0, s1 = c2
    for _ in range(2 * base.n - 1):
        t0, t1 = _as2_square(tp, t0, t1)
        s0, s1 = s0 + t0, s1 + t1
    if not (s0 == GnbElement.one(base) and s1.is_zero()):
        raise InternalInvariantError("absolute trace of c2 is not 1")
    return tp


def build_kummer3(base: GnbParams) -> TowerParams:
    """Degree-3 Kummer tower: beta^3 = alpha.

    Needs 3 | 2^d - 1, i.e. d even, and alpha not a cube; the non-cube
    certificate alpha^((2^d - 1)/3) != 1 replaces a primitivity hypothesis
    and is exactly what irreducibility of u^3 + alpha requires.
    """
    d = base.n
    if d % 2 == 1:
        raise KummerUnavailableError(f"Kummer unavailable: 3 does not divide 2^{d} - 1")
    alpha = GnbElement.alpha(base)
    if gnb_pow(alpha, ((1 << d) - 1) // 3) == GnbElement.one(base):
        raise KummerCubeError("normal element is a cube; basis not Kummer-eligible")
    return TowerParams(base, FORM_KUMMER3, mult_table(base))


def _check_pair(x: TowerElement, y: TowerElement, form: str):
    if x.params.form != form or y.params.form != form:
        raise ParameterError(f"operands are not {form} elements")
    if x.params is not y.params and not x.params.base.same_basis(y.params.base):
        raise ParameterError("operands come from different towers")


def _mul(tp, a, b, counters):
    counters.base_muls += 1
    return gnb_mul(a, b)


def _alpha(tp, a, counters):
    counters.table_muls += 1
    return tp.table.apply(a)


def _add(a, b, counters):
    counters.base_adds += 1
    return a + b


def _as2_mul_blocks(tp, x0, x1, y0, y1, counters):
    # Karatsuba with the reduction a^2 = a + alpha folded in:
    # result0 = P1 + alpha*P2, result1 = P3 + P1
    p1 = _mul(tp, x0, y0, counters)
    p2 = _mul(tp, x1, y1, counters)
    p3 = _mul(tp, _add(x0, x1, counters), _add(y0, y1, counters), counters)
    r0 = _add(p1, _alpha(tp, p2, counters), counters)
    r1 = _add(p3, p1, counters)
    return r0, r1


def as2_mul(x: TowerElement, y: TowerElement, counters: OpCounters | None = None) -> TowerElement:
    """Product in the degree-2 tower: 3 base muls + 1 table application."""
    _check_pair(x, y, FORM_AS2)
    c = counters if counters is not None else OpCounters()
    r0, r1 = _as2_mul_blocks(x.params, *x.blocks, *y.blocks, c)
    return TowerElement(x.params, (r0, r1))


def _c2_mul(tp, w0, w1, counters):
    # c2 * (W0 + a*W1) for the two shapes of c2
    if tp.base.n % 2 == 1:
        # a*(W0 + a*W1) = alpha*W1 + a*(W0 + W1)
        return _alpha(tp, w1, counters), _add(w0, w1, counters)
    # alpha*a*(W0 + a*W1) = alpha^2*W1 + a*alpha*(W0 + W1)
    return (
        _alpha(tp, _alpha(tp, w1, counters), counters),
        _alpha(tp, _add(w0, w1, counters), counters),
    )


def witt4_mul(x: TowerElement, y: TowerElement, counters: OpCounters | None = None) -> TowerElement:
    """Product in the degree-4 tower: Karatsuba over the degree-2 level.

    Three AS2 products (9 base muls, 3 tables) plus the b^2 = b + c2
    reduction, whose c2 factor costs table applications only.
    """
    _check_pair(x, y, FORM_WITT4)
    c = counters if counters is not None else OpCounters()
    tp = x.params
    x00, x01, x10, x11 = x.blocks
    y00, y01, y10, y11 = y.blocks
    q1 = _as2_mul_blocks(tp, x00, x01, y00, y01, c)
    q2 = _as2_mul_blocks(tp, x10, x11, y10, y11, c)
    sx = (_add(x00, x10, c), _add(x01, x11, c))
    sy = (_add(y00, y10, c), _add(y01, y11, c))
    q3 = _as2_mul_blocks(tp, sx[0], sx[1], sy[0], sy[1], c)
    cq = _c2_mul(tp, q2[0], q2[1], c)
    r00 = _add(q1[0], cq[0], c)
    r01 = _add(q1[1], cq[1], c)
    r10 = _add(q3[0], q1[0], c)
    r11 = _add(q3[1], q1[1], c)
    return TowerElement(tp, (r00, r01, r10, r11))


def kummer3_mul(x: TowerElement, y: TowerElement, counters: OpCounters | None = None) -> TowerElement:
    """Product in the degree-3 tower: 6 base muls + 2 table applications.

    Symmetric Karatsuba pairing of the convolution terms; the two
    wraparounds beta^3 = alpha are the two table applications.
    """
    _check_pair(x, y, FORM_KUMMER3)
    c = counters if counters is not None else OpCounters()
    tp = x.params
    x0, x1, x2 = x.blocks
    y0, y1, y2 = y.blocks
    p0 = _mul(tp, x0, y0, c)
    p1 = _mul(tp, x1, y1, c)
    p2 = _mul(tp, x2, y2, c)
    p01 = _mul(tp, _add(x0, x1, c), _add(y0, y1, c), c)
    p02 = _mul(tp, _add(x0, x2, c), _add(y0, y2, c), c)
    p12 = _mul(tp, _add(x1, x2, c), _add(y1, y2, c), c)
    c0 = _add(p0, _alpha(tp, _add(_add(p12, p1, c), p2, c), c), c)
    c1 = _add(_add(p01, p0, c), _add(p1, _alpha(tp, p2, c), c), c)
    c2 = _add(_add(p02, p0, c), _add(p2, p1, c), c)
    return TowerElement(tp, (c0, c1, c2))


def tower_mul(x: TowerElement, y: TowerElement, counters: OpCounters | None = None) -> TowerElement:
    """Dispatch on the tower form."""
    form = x.params.form
    if form == FORM_AS2:
        return as2_mul(x, y, counters)
    if form == FORM_WITT4:
        return witt4_mul(x, y, counters)
    return kummer3_mul(x, y, counters)


# ---------------------------------------------------------------------------
# independent polynomial-basis oracle


def _coords_int(a: GnbElement) -> int:
    return int.from_bytes(np.packbits(a.coords, bitorder="little").tobytes(), "little")


def minpoly_gauss_period(base: GnbParams) -> BinaryPolynomial:
    """Minimal polynomial of alpha, of degree d.

    Computed as the first linear dependency along the powers
    alpha^0..alpha^d (the Krylov sequence of the multiplication-by-alpha
    matrix on the identity vector); by normality it has degree exactly d,
    so it equals the characteristic polynomial of that matrix.
    """
    d = base.n
    alpha = GnbElement.alpha(base)
    power = GnbElement.one(base)
    pivots = {}  # leading bit -> (reduced vector, combination mask)
    for i in range(d + 1):
        v = _coords_int(power)
        cmask = 1 << i
        while v:
            t = v.bit_length() - 1
            if t not in pivots:
                pivots[t] = (v, cmask)
                break
            pv, pc = pivots[t]
            v ^= pv
            cmask ^= pc
        if v == 0:
            poly = BinaryPolynomial.from_int(cmask)
            if poly.degree != d or not is_irreducible(poly):
                raise InternalInvariantError(
                    "minimal polynomial of the Gauss period is broken"
                )
            return poly
        power = gnb_mul(power, alpha)
    raise InternalInvariantError("no dependency among alpha powers")  # pragma: no cover


class OracleTower:
    """Conversion maps and naive tower arithmetic over F_2[z]/(m)."""

    __slots__ = ("params", "m", "to_cols", "from_cols")

    def __init__(self, params: TowerParams):
        base = params.base
        d = base.n
        m = minpoly_gauss_period(base)
        z = BinaryPolynomial.x()
        cols = []
        cur = poly_mod(z, m)
        for _ in range(d):
            cols.append(cur.to_int())
            cur = poly_mod(mul_schoolbook(cur, cur), m)  # next conjugate
        self.params = params
        self.m = m
        self.to_cols = cols
        self.from_cols = _invert_gf2_columns(cols, d)
        # the all-ones coordinate vector is the field identity, so the
        # conjugate columns must sum to the constant 1 (trace of z)
        if _apply_cols(cols, (1 << d) - 1) != 1:
            raise InternalInvariantError("conversion map broken")

    def to_poly(self, a: GnbElement) -> BinaryPolynomial:
        """Coordinates -> polynomial in z (alpha_i maps to z^(2^i) mod m)."""
        return BinaryPolynomial.from_int(_apply_cols(self.to_cols, _coords_int(a)))

    def from_poly(self, p: BinaryPolynomial) -> GnbElement:
        """Polynomial -> coordinates, with a round-trip check."""
        v = p.to_int()
        mask = _apply_cols(self.from_cols, v)
        out = GnbElement.from_int(self.params.base, mask)
        if self.to_poly(out).to_int() != v:
            raise ImageError("oracle conversion mismatch")
        return out

    # naive ring helpers over F_2[z]/(m)
    def rmul(self, a: BinaryPolynomial, b: BinaryPolynomial) -> BinaryPolynomial:
        return poly_mod(mul_schoolbook(a, b), self.m)

    def zmul(self, a: BinaryPolynomial) -> BinaryPolynomial:
        return self.rmul(BinaryPolynomial.x(), a)


def _apply_cols(cols, mask: int) -> int:
    """Matrix times bit vector: xor of the columns selected by mask."""
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out ^= cols[i]
        mask >>= 1
        i += 1
    return out


def _invert_gf2_columns(cols, d: int):
    """Columns of M^-1, given the columns of an invertible GF(2) matrix."""
    # row view: bit i of rows[j] = M[j][i]
    rows = []
    for j in range(d):
        rv = 0
        for i in range(d):
            rv |= ((cols[i] >> j) & 1) << i
        rows.append([rv, 1 << j])  # augmented [M | I]
    pivot_row = [0] * d
    r = 0
    for c in range(d):
        piv = next((i for i in range(r, d) if (rows[i][0] >> c) & 1), None)
        if piv is None:
            raise InternalInvariantError("conversion matrix is singular")
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(d):
            if i != r and (rows[i][0] >> c) & 1:
                rows[i][0] ^= rows[r][0]
                rows[i][1] ^= rows[r][1]
        pivot_row[c] = r
        r += 1
    inv_rows = [rows[pivot_row[c]][1] for c in range(d)]
    # transpose back to columns for _apply_cols
    inv_cols = [0] * d
    for j in range(d):
        rv = inv_rows[j]
        i = 0
        while rv:
            if rv & 1:
                inv_cols[i] |= 1 << j
            rv >>= 1
            i += 1
    return inv_cols


def _oracle(params: TowerParams) -> OracleTower:
    if params._oracle is None:
        params._oracle = OracleTower(params)
    return params._oracle


def oracle_mul(x: TowerElement, y: TowerElement) -> TowerElement:
    """Multiply through the polynomial basis with naive reductions.

    Fully independent of the fast path: conversions use the minimal
    polynomial of alpha, products are schoolbook, reductions apply the
    tower relations term by term.
    """
    if x.params.form != y.params.form:
        raise ParameterError("operands are not the same tower form")
    tp = x.params
    orc = _oracle(tp)
    xs = [orc.to_poly(b) for b in x.blocks]
    ys = [orc.to_poly(b) for b in y.blocks]
    form = tp.form
    if form == FORM_AS2:
        out = _oracle_as2(orc, xs, ys)
    elif form == FORM_WITT4:
        out = _oracle_witt4(orc, tp, xs, ys)
    else:
        out = _oracle_kummer3(orc, xs, ys)
    return TowerElement(tp, [orc.from_poly(p) for p in out])


def _oracle_as2(orc, xs, ys):
    # u^2 = u + z
    a0, a1 = xs
    b0, b1 = ys
    t = orc.rmul(a1, b1)
    c0 = orc.rmul(a0, b0) + orc.zmul(t)
    c1 = orc.rmul(a0, b1) + orc.rmul(a1, b0) + t
    return [c0, c1]


def _oracle_witt4(orc, tp, xs, ys):
    # elements (A + w*B) with A, B pairs over u; w^2 = w + c2
    A = (xs[0], xs[1])
    B = (xs[2], xs[3])
    C = (ys[0], ys[1])
    D = (ys[2], ys[3])

    def r2mul(p, q):
        return _oracle_as2(orc, list(p), list(q))

    def r2add(p, q):
        return [p[0] + q[0], p[1] + q[1]]

    ac = r2mul(A, C)
    bd = r2mul(B, D)
    ad = r2mul(A, D)
    bc = r2mul(B, C)
    zero = BinaryPolynomial.zero()
    one = BinaryPolynomial.one()
    c2 = [zero, one] if tp.base.n % 2 == 1 else [zero, BinaryPolynomial.x()]
    lo = r2add(ac, r2mul(c2, bd))
    hi = r2add(r2add(ad, bc), bd)
    return [lo[0], lo[1], hi[0], hi[1]]


def _oracle_kummer3(orc, xs, ys):
    # v^3 = z
    a0, a1, a2 = xs
    b0, b1, b2 = ys
    c0 = orc.rmul(a0, b0) + orc.zmul(orc.rmul(a1, b2) + orc.rmul(a2, b1))
    c1 = orc.rmul(a0, b1) + orc.rmul(a1, b0) + orc.zmul(orc.rmul(a2, b2))
    c2 = orc.rmul(a0, b2) + orc.rmul(a1, b1) + orc.rmul(a2, b0)
    return [c0, c1, c2]
