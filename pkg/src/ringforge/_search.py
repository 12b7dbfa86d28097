"""Enumeration helpers shared by the exhaustive searches."""

import numpy as np

CHUNK = 1 << 15


def digit_block(base: int, length: int, start: int, stop: int) -> np.ndarray:
    """Rows ``start..stop-1`` of the lexicographic enumeration of
    ``range(base) ** length`` (first position most significant)."""
    idx = np.arange(start, stop, dtype=np.int64)
    if length == 0:
        return np.zeros((len(idx), 0), dtype=np.int64)
    weights = base ** np.arange(length - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // weights[None, :]) % base


def row_keys(rows: np.ndarray) -> np.ndarray:
    """View each row of a 2-D array as one opaque hashable scalar."""
    rows = np.ascontiguousarray(rows, dtype=np.int64)
    return rows.view(np.dtype((np.void, rows.dtype.itemsize * rows.shape[1]))).ravel()
