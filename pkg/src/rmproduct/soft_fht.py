"""Soft-input soft-output decoding of first-order RM codes.

The SISO component decoder works in three steps: transform the channel LLRs to
the Walsh spectrum, form max-log LLRs for the k = m+1 information bits from
fixed index partitions of the spectrum, then re-expand them to the n code
positions with the min-sum rule over each generator column's support.  A
brute-force soft-MAP over all 2^k codewords doubles as the exact max-log
oracle for the fast path and as the component decoder for small codes of
order above one.
"""

import numpy as np

from . import rm_core
from .fht import fht

MAX_TABLES_M = 16
MAX_BF_DIM = 16


class FirstOrderTables:
    """Precomputed index partitions and column supports for RM(m, 1).

    The first 2^m codewords (information words with the all-one row's bit at
    zero) split into equal halves by the value of each later information bit.
    The split depends only on the binary counting order of information words,
    so it is computed once per m and shared read-only by every decode.
    """

    def __init__(self, m: int):
        if not 1 <= m <= MAX_TABLES_M:
            raise rm_core.SizeLimitError(f"tables require 1 <= m <= {MAX_TABLES_M}, got {m}")
        code = rm_core.build_rm_code(m, 1)
        self.m = m
        self.n = code.n
        self.k = code.k
        self.generator = code.generator
        # bit b of the first-half index x is info bit b+1 (MSB first, bit 0 is
        # the all-one row's bit and is zero throughout the first half)
        x = np.arange(self.n)
        shifts = np.arange(m - 1, -1, -1)
        bits = (((x[None, :] >> shifts[:, None]) & 1) == 1)
        self.zero_masks = ~bits  # (m, n) bool
        self.zero_index_sets = [np.flatnonzero(~bits[b]) for b in range(m)]
        self.one_index_sets = [np.flatnonzero(bits[b]) for b in range(m)]
        self.column_supports = code.generator.astype(bool)  # (k, n)
        self.support_sizes = self.column_supports.sum(axis=0)
        # per-position min/sign chain length, summed: used by the op counters
        self.min_sum_ops = int(self.support_sizes.sum() - self.n)
        for table in (self.zero_masks, self.column_supports, self.support_sizes):
            table.setflags(write=False)  # shared read-only across decodes

    def info_words(self, indices, negative) -> np.ndarray:
        """Information words of spectrum entries: the sign picks the all-one
        row's bit, the index spells the remaining m bits (MSB first)."""
        indices = np.asarray(indices)
        shifts = np.arange(self.m - 1, -1, -1)
        out = np.empty((indices.shape[0], self.k), dtype=np.uint8)
        out[:, 0] = np.asarray(negative, dtype=np.uint8)
        out[:, 1:] = (indices[:, None] >> shifts[None, :]) & 1
        return out

    def encode_info(self, infos: np.ndarray) -> np.ndarray:
        """Map information words (count, m+1) to codewords (count, n)."""
        products = infos.astype(np.int32) @ self.generator.astype(np.int32)
        return (products & 1).astype(np.uint8)


def precompute_tables(m: int) -> FirstOrderTables:
    """Build the decoding tables for RM(m, 1)."""
    return FirstOrderTables(m)


def info_bit_llrs(spectrum, tables, counter=None) -> np.ndarray:
    """Max-log LLRs of the m+1 information bits from one Walsh spectrum."""
    return info_bit_llrs_batch(np.asarray(spectrum, dtype=np.float64)[None, :], tables, counter)[0]


def info_bit_llrs_batch(spectra, tables, counter=None) -> np.ndarray:
    """Max-log information-bit LLRs for each row of a (count, n) spectrum array.

    The first bit weighs the best positive spectrum entry against the best
    negative one; every other bit weighs the largest magnitudes over its two
    fixed index halves.
    """
    spectra = np.asarray(spectra, dtype=np.float64)
    rows, n = spectra.shape
    out = np.empty((rows, tables.k))
    out[:, 0] = spectra.max(axis=1) - (-spectra).max(axis=1)
    magnitudes = np.abs(spectra)
    for b in range(tables.m):
        zero_best = magnitudes[:, tables.zero_index_sets[b]].max(axis=1)
        one_best = magnitudes[:, tables.one_index_sets[b]].max(axis=1)
        out[:, b + 1] = zero_best - one_best
    if counter is not None:
        counter.compare += rows * (2 * (n - 1) + tables.m * (n - 2))
        counter.add_sub += rows * (1 + tables.m)
        counter.depth += (n.bit_length() - 1) + 1
    return out


def encoded_bit_llrs(info_llrs, tables, counter=None) -> np.ndarray:
    """Min-sum LLRs of the n code positions from one information-bit LLR vector."""
    return encoded_bit_llrs_batch(np.asarray(info_llrs, dtype=np.float64)[None, :], tables, counter)[0]


def encoded_bit_llrs_batch(info_llrs, tables, counter=None) -> np.ndarray:
    """Min-sum re-expansion for each row of a (count, m+1) LLR array.

    Per code position: product of signs times the smallest magnitude over the
    generator rows feeding that position, with sign(0) = +1.
    """
    info_llrs = np.asarray(info_llrs, dtype=np.float64)
    rows = info_llrs.shape[0]
    negatives = (info_llrs < 0.0).astype(np.uint8)
    parity = (negatives @ tables.generator) & 1
    signs = 1.0 - 2.0 * parity
    magnitudes = np.abs(info_llrs)
    least = np.full((rows, tables.n), np.inf)
    for b in range(tables.k):
        support = tables.column_supports[b]
        least[:, support] = np.minimum(least[:, support], magnitudes[:, b : b + 1])
    if counter is not None:
        counter.compare += rows * tables.min_sum_ops
        counter.sign_mult += rows * tables.min_sum_ops
        counter.depth += max(tables.k.bit_length() - 1, 1)
    return signs * least


def soft_fht_decode(llr, tables, counter=None) -> np.ndarray:
    """Full SISO pipeline for one LLR vector: updated LLRs over the n positions."""
    return soft_fht_decode_batch(np.asarray(llr, dtype=np.float64)[None, :], tables, counter)[0]


def soft_fht_decode_batch(llrs, tables, counter=None) -> np.ndarray:
    """Full SISO pipeline for each row of a (count, n) LLR array."""
    spectra = fht(llrs, counter)
    return encoded_bit_llrs_batch(info_bit_llrs_batch(spectra, tables, counter), tables, counter)


_CODEBOOKS: dict[tuple[int, int], tuple[np.ndarray, np.ndarray, np.ndarray]] = {}


def _codebook(code: rm_core.RmCode):
    """Cached (information words, codewords, +-1 codewords) enumeration."""
    if code.k > MAX_BF_DIM:
        raise rm_core.SizeLimitError(
            f"brute-force decoding caps at k <= {MAX_BF_DIM}, got k={code.k}"
        )
    key = (code.m, code.r)
    if key not in _CODEBOOKS:
        infos = rm_core.binary_words(code.k)
        codewords = rm_core.encode_batch(code, infos)
        _CODEBOOKS[key] = (infos, codewords, 1.0 - 2.0 * codewords.astype(np.float64))
    return _CODEBOOKS[key]


def brute_force_soft_map(llr, code, counter=None):
    """Exact max-log soft MAP of one LLR vector over any small binary code.

    Returns (information-bit LLRs, code-position LLRs), both by exhaustive
    correlation against all 2^k codewords.
    """
    info, coded = brute_force_soft_map_batch(np.asarray(llr, dtype=np.float64)[None, :], code, counter)
    return info[0], coded[0]


def brute_force_soft_map_batch(llrs, code, counter=None):
    """Exhaustive max-log soft MAP for each row of a (count, n) LLR array."""
    infos, codewords, signs = _codebook(code)
    llrs = np.asarray(llrs, dtype=np.float64)
    rows, n = llrs.shape
    scores = llrs @ signs.T  # (rows, 2^k) correlations
    count = scores.shape[1]
    info_llrs = np.empty((rows, code.k))
    for b in range(code.k):
        zero = infos[:, b] == 0
        info_llrs[:, b] = scores[:, zero].max(axis=1) - scores[:, ~zero].max(axis=1)
    coded_llrs = np.empty((rows, n))
    for j in range(n):
        zero = codewords[:, j] == 0
        coded_llrs[:, j] = scores[:, zero].max(axis=1) - scores[:, ~zero].max(axis=1)
    if counter is not None:
        counter.add_sub += rows * (count * (n - 1) + code.k + n)
        counter.compare += rows * (code.k + n) * (count - 2)
        counter.depth += (n.bit_length() - 1) + code.k + 1
    return info_llrs, coded_llrs


def brute_force_ml_decode_batch(llrs, code, counter=None) -> np.ndarray:
    """Exhaustive hard ML decisions (ties to the lowest codeword index)."""
    _, codewords, signs = _codebook(code)
    llrs = np.asarray(llrs, dtype=np.float64)
    scores = llrs @ signs.T
    best = np.argmax(scores, axis=1)
    if counter is not None:
        rows, n = llrs.shape
        counter.add_sub += rows * scores.shape[1] * (n - 1)
        counter.compare += rows * (scores.shape[1] - 1)
        counter.depth += (n.bit_length() - 1) + code.k
    return codewords[best]
