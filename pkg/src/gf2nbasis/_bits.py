"""Shared helpers for bit-packed polynomial words (backend independent).

Coefficient vectors are packed little-endian into numpy uint64 arrays:
word 0 bit 0 is the constant term.
"""
import numpy as np

WORD_BITS = 64


def words_from_int(v: int) -> np.ndarray:
    """Pack a nonnegative int (bit i = coefficient of x^i) into words."""
    if v < 0:
        raise ValueError("negative packed value")
    if v == 0:
        return np.zeros(0, dtype=np.uint64)
    nbytes = (v.bit_length() + 7) // 8
    nbytes = ((nbytes + 7) // 8) * 8
    return np.frombuffer(v.to_bytes(nbytes, "little"), dtype="<u8").astype(np.uint64)


def int_from_words(words: np.ndarray) -> int:
    return int.from_bytes(np.ascontiguousarray(words, dtype="<u8").tobytes(), "little")


def pack_bits(bits: np.ndarray) -> np.ndarray:
    """Pack a uint8 0/1 array (index = exponent) into uint64 words."""
    packed = np.packbits(bits.astype(np.uint8, copy=False), bitorder="little")
    pad = (-packed.size) % 8
    if pad:
        packed = np.concatenate([packed, np.zeros(pad, dtype=np.uint8)])
    return packed.view("<u8").astype(np.uint64)


def unpack_bits(words: np.ndarray, nbits: int) -> np.ndarray:
    """Unpack words into a uint8 0/1 array of length nbits."""
    raw = np.ascontiguousarray(words, dtype="<u8").view(np.uint8)
    bits = np.unpackbits(raw, bitorder="little")
    if bits.size >= nbits:
        return bits[:nbits].copy()
    out = np.zeros(nbits, dtype=np.uint8)
    out[: bits.size] = bits
    return out


def bitlen_words(words: np.ndarray) -> int:
    """Number of significant bits (0 for the all-zero array)."""
    nz = np.nonzero(words)[0]
    if nz.size == 0:
        return 0
    top = int(nz[-1])
    return top * WORD_BITS + int(words[top]).bit_length()


def trim_words(words: np.ndarray) -> np.ndarray:
    """Drop trailing zero words."""
    nz = np.nonzero(words)[0]
    if nz.size == 0:
        return np.zeros(0, dtype=np.uint64)
    return np.ascontiguousarray(words[: int(nz[-1]) + 1], dtype=np.uint64)


def shift_right_words(words: np.ndarray, bits: int) -> np.ndarray:
    """The packed value >> bits, trimmed."""
    if bits < 0:
        raise ValueError("negative shift")
    wo, bo = divmod(bits, WORD_BITS)
    if wo >= words.size:
        return np.zeros(0, dtype=np.uint64)
    w = words[wo:]
    if bo == 0:
        return trim_words(w.copy())
    out = w >> np.uint64(bo)
    out[:-1] |= w[1:] << np.uint64(WORD_BITS - bo)
    return trim_words(out)


def mask_low_bits(words: np.ndarray, nbits: int) -> np.ndarray:
    """The low nbits of the packed value, trimmed."""
    nw = (nbits + WORD_BITS - 1) // WORD_BITS
    out = words[:nw].copy()
    if out.size < nw:
        out = np.concatenate([out, np.zeros(nw - out.size, dtype=np.uint64)])
    rem = nbits % WORD_BITS
    if rem and out.size == nw:
        out[-1] &= np.uint64((1 << rem) - 1)
    return trim_words(out)


def xor_words(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Pointwise xor of two packed values of any lengths, trimmed."""
    if a.size < b.size:
        a, b = b, a
    out = a.copy()
    out[: b.size] ^= b
    return trim_words(out)


def fold_cyclic(words: np.ndarray, r: int) -> np.ndarray:
    """Reduce the packed value modulo x^r - 1 (wrap exponents >= r)."""
    work = trim_words(words)
    while bitlen_words(work) > r:
        work = xor_words(mask_low_bits(work, r), shift_right_words(work, r))
    return work
