"""Hot kernels compiled with numba.

All kernels operate on little-endian uint64 word arrays (bit i of word w
is the coefficient of x^(64w+i)).  Inputs need not be trimmed; outputs may
carry trailing zero words.  Shift amounts are cast to uint64 explicitly:
mixing int64 shifts with uint64 words would promote to float64 under
numpy typing rules.
"""
import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def _top_bit(w):
    t = -1
    while w != np.uint64(0):
        w >>= np.uint64(1)
        t += 1
    return t


@njit(cache=True)
def mul_words(a, b):
    """Carryless schoolbook product; output has len(a)+len(b) words."""
    la = a.shape[0]
    lb = b.shape[0]
    out = np.zeros(la + lb, dtype=np.uint64)
    if la == 0 or lb == 0:
        return out
    one = np.uint64(1)
    for j in range(lb):
        bw = b[j]
        if bw == np.uint64(0):
            continue
        for t in range(64):
            if (bw >> np.uint64(t)) & one:
                if t == 0:
                    for i in range(la):
                        out[j + i] ^= a[i]
                else:
                    ls = np.uint64(t)
                    rs = np.uint64(64 - t)
                    carry = np.uint64(0)
                    for i in range(la):
                        ai = a[i]
                        out[j + i] ^= (ai << ls) | carry
                        carry = ai >> rs
                    out[j + la] ^= carry
    return out


@njit(cache=True)
def _spread(x):
    # interleave the low 32 bits of x with zeros
    x = (x | (x << np.uint64(16))) & np.uint64(0x0000FFFF0000FFFF)
    x = (x | (x << np.uint64(8))) & np.uint64(0x00FF00FF00FF00FF)
    x = (x | (x << np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    x = (x | (x << np.uint64(2))) & np.uint64(0x3333333333333333)
    x = (x | (x << np.uint64(1))) & np.uint64(0x5555555555555555)
    return x


@njit(cache=True)
def square_words(a):
    """Squaring over GF(2): spread every bit; output has 2*len(a) words."""
    la = a.shape[0]
    out = np.empty(2 * la, dtype=np.uint64)
    lo_mask = np.uint64(0xFFFFFFFF)
    for i in range(la):
        out[2 * i] = _spread(a[i] & lo_mask)
        out[2 * i + 1] = _spread(a[i] >> np.uint64(32))
    return out


@njit(cache=True)
def mod_words(a, f, fdeg):
    """Remainder of a modulo f (deg f = fdeg >= 0); output (fdeg+63)//64 words.

    Plain long division: clear the top bit with f shifted up, rescan.
    Bits above the current top are zero throughout, so rescans never mask.
    """
    r = a.copy()
    la = r.shape[0]
    lf = f.shape[0]
    adeg = -1
    for w in range(la - 1, -1, -1):
        if r[w] != np.uint64(0):
            adeg = w * 64 + _top_bit(r[w])
            break
    while adeg >= fdeg:
        shift = adeg - fdeg
        wo = shift // 64
        bo = shift % 64
        if bo == 0:
            for i in range(lf):
                r[wo + i] ^= f[i]
        else:
            ls = np.uint64(bo)
            rs = np.uint64(64 - bo)
            carry = np.uint64(0)
            for i in range(lf):
                fi = f[i]
                r[wo + i] ^= (fi << ls) | carry
                carry = fi >> rs
            if carry != np.uint64(0):
                r[wo + lf] ^= carry
        adeg = -1
        for w in range(min(wo + lf, la - 1), -1, -1):
            if r[w] != np.uint64(0):
                adeg = w * 64 + _top_bit(r[w])
                break
    nout = (fdeg + 63) // 64
    if nout == 0:
        nout = 1
    out = np.zeros(nout, dtype=np.uint64)
    for i in range(min(nout, la)):
        out[i] = r[i]
    return out


@njit(cache=True)
def zech_tables(e, f_int):
    """Discrete-log tables for GF(2^e) w.r.t. the root of primitive f."""
    m = (1 << e) - 1
    log = np.full(1 << e, -1, dtype=np.int64)
    antilog = np.zeros(1 << e, dtype=np.int64)
    p = 1
    for i in range(m):
        antilog[i] = p
        log[p] = i
        p <<= 1
        if p >> e:
            p ^= f_int
    antilog[m] = 1
    return log, antilog
