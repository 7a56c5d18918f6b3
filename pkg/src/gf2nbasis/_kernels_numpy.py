"""Numpy fallback for the hot kernels (no numba required).

Same contracts as _kernels_numba; selected via GF2NBASIS_BACKEND=numpy or
automatically when numba is unavailable.  The Zech fill is an inherently
sequential recurrence and stays a Python loop here.
"""
import numpy as np

NAME = "numpy"

_U1 = np.uint64(1)


def mul_words(a, b):
    """Carryless schoolbook product; output has len(a)+len(b) words."""
    la = a.shape[0]
    lb = b.shape[0]
    out = np.zeros(la + lb, dtype=np.uint64)
    if la == 0 or lb == 0:
        return out
    offs = np.arange(la + 1)
    ext = np.zeros(la + 1, dtype=np.uint64)
    for t in range(64):
        j = np.nonzero((b >> np.uint64(t)) & _U1)[0]
        if j.size == 0:
            continue
        if t == 0:
            ext[:la] = a
            ext[la] = 0
        else:
            ext[:la] = a << np.uint64(t)
            ext[la] = 0
            ext[1 : la + 1] ^= a >> np.uint64(64 - t)
        np.bitwise_xor.at(out, j[:, None] + offs[None, :], ext[None, :])
    return out


def _spread(x):
    x = (x | (x << np.uint64(16))) & np.uint64(0x0000FFFF0000FFFF)
    x = (x | (x << np.uint64(8))) & np.uint64(0x00FF00FF00FF00FF)
    x = (x | (x << np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    x = (x | (x << np.uint64(2))) & np.uint64(0x3333333333333333)
    x = (x | (x << np.uint64(1))) & np.uint64(0x5555555555555555)
    return x


def square_words(a):
    """Squaring over GF(2): spread every bit; output has 2*len(a) words."""
    la = a.shape[0]
    out = np.empty(2 * la, dtype=np.uint64)
    out[0::2] = _spread(a & np.uint64(0xFFFFFFFF))
    out[1::2] = _spread(a >> np.uint64(32))
    return out


def _scan_degree(r, top_word):
    for w in range(min(top_word, r.shape[0] - 1), -1, -1):
        if r[w]:
            return w * 64 + int(r[w]).bit_length() - 1
    return -1


def mod_words(a, f, fdeg):
    """Remainder of a modulo f (deg f = fdeg >= 0); output (fdeg+63)//64 words."""
    r = a.copy()
    la = r.shape[0]
    lf = f.shape[0]
    adeg = _scan_degree(r, la - 1)
    while adeg >= fdeg:
        shift = adeg - fdeg
        wo, bo = divmod(shift, 64)
        if bo == 0:
            r[wo : wo + lf] ^= f
        else:
            r[wo : wo + lf] ^= f << np.uint64(bo)
            hi = f >> np.uint64(64 - bo)
            upto = min(la, wo + 1 + lf)
            r[wo + 1 : upto] ^= hi[: upto - wo - 1]
        adeg = _scan_degree(r, wo + lf)
    nout = max((fdeg + 63) // 64, 1)
    out = np.zeros(nout, dtype=np.uint64)
    n = min(nout, la)
    out[:n] = r[:n]
    return out


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
