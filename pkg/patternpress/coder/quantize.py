import numpy as np

from ..exceptions import ZeroProbability

FREQUENCY_BITS = 32


def quantize(probs, frequency_bits=FREQUENCY_BITS):
    """
    Integer frequencies summing to ``2**frequency_bits``.

    Probabilities are scaled and rounded half-to-even, every symbol keeps at
    least one count, and the rounding deficit or surplus goes to the most
    probable symbol.

    Parameters
    ----------
    probs : array_like
        Non-negative probabilities summing to about 1.
    frequency_bits : int, default 32

    Returns
    -------
    ndarray of int64

    Examples
    --------
    >>> quantize([0.5, 0.5], frequency_bits=4).tolist()
    [8, 8]
    """
    probs = np.asarray(probs, dtype=float)
    total = 1 << frequency_bits
    if probs.size >= total:
        raise ValueError("too many symbols for the frequency precision")
    freqs = np.maximum(np.rint(probs * total).astype(np.int64), 1)
    top = int(np.argmax(probs))
    freqs[top] += total - int(freqs.sum())
    if freqs[top] < 1:
        raise ZeroProbability("quantization left the most probable symbol empty")
    return freqs
