"""Fast Walsh-Hadamard transform and hard ML decoding of first-order RM codes."""

import numpy as np


def fht(values, counter=None):
    """Transform along the last axis by the Sylvester matrix [[1,1],[1,-1]]^(kron m).

    log2(n) butterfly stages, each doing exactly n additions/subtractions per
    row; applying it twice returns n times the input.  Does not mutate the
    input; returns a float64 array of the same shape.
    """
    a = np.asarray(values, dtype=np.float64)
    n = a.shape[-1]
    if n == 0 or n & (n - 1):
        raise ValueError(f"transform length must be a power of two, got {n}")
    m = n.bit_length() - 1
    out = a.reshape(-1, n)
    rows = out.shape[0]
    if m == 0:
        return out.copy().reshape(a.shape)
    for stage in range(m):
        half = 1 << stage
        pairs = out.reshape(rows, n // (2 * half), 2, half)
        out = np.stack(
            (pairs[:, :, 0, :] + pairs[:, :, 1, :], pairs[:, :, 0, :] - pairs[:, :, 1, :]),
            axis=2,
        ).reshape(rows, n)
    if counter is not None:
        counter.add_sub += rows * n * m
        counter.depth += m
    return out.reshape(a.shape)


def fht_ml_decode(llr, tables, counter=None):
    """Hard ML decoding of one LLR vector of a first-order RM code.

    Picks the spectrum entry of largest magnitude (ties to the smallest index,
    zero sign treated as positive) and returns (codeword, information word).
    """
    codewords, infos = fht_ml_decode_batch(np.asarray(llr, dtype=np.float64)[None, :], tables, counter)
    return codewords[0], infos[0]


def fht_ml_decode_batch(llrs, tables, counter=None):
    """Hard ML decoding of each row of a (count, n) LLR array."""
    llrs = np.asarray(llrs, dtype=np.float64)
    spectra = fht(llrs, counter)
    n = spectra.shape[-1]
    index = np.argmax(np.abs(spectra), axis=-1)
    peak = np.take_along_axis(spectra, index[:, None], axis=-1)[:, 0]
    infos = tables.info_words(index, peak < 0.0)
    if counter is not None:
        counter.compare += llrs.shape[0] * (n - 1)
        counter.depth += n.bit_length() - 1
    return tables.encode_info(infos), infos
