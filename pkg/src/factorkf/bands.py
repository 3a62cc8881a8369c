"""Banded m-by-m blocks stored as per-diagonal segments.

A block with bandwidth ``b`` keeps entries (i, j) with ``|i - j| <= b``.
They are stored as a flat vector holding one segment per diagonal offset,
ordered from offset ``-b`` to ``+b``; entries outside the band are never
stored.  A bandwidth of ``m - 1`` or larger stores the full block.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError


def band_entries(m: int, b: int) -> int:
    """Number of stored entries of an m-by-m block with bandwidth b."""
    if m < 1:
        raise DimensionError(f"block size must be >= 1, got {m}")
    b = min(b, m - 1)
    return m + 2 * sum(m - d for d in range(1, b + 1))


class BandLayout:
    """Index map between flat diagonal storage and dense m-by-m blocks.

    Attributes:
        m: block size.
        b: effective bandwidth (clipped to ``m - 1``).
        size: number of stored entries, ``band_entries(m, b)``.
        spans: one ``(offset, row0, col0, length, start)`` tuple per stored
            diagonal, where ``start`` indexes the flat storage.
    """

    def __init__(self, m: int, b: int):
        if m < 1:
            raise DimensionError(f"block size must be >= 1, got {m}")
        if b < 0:
            raise DimensionError(f"bandwidth must be >= 0, got {b}")
        self.m = m
        self.b = min(b, m - 1)
        spans = []
        start = 0
        for d in range(-self.b, self.b + 1):
            row0 = max(0, -d)
            col0 = max(0, d)
            length = m - abs(d)
            spans.append((d, row0, col0, length, start))
            start += length
        self.size = start
        self.spans = tuple(spans)
        # Contiguous tables for the compiled kernels.
        self.row0 = np.array([s[1] for s in spans], dtype=np.int64)
        self.col0 = np.array([s[2] for s in spans], dtype=np.int64)
        self.length = np.array([s[3] for s in spans], dtype=np.int64)
        self.start = np.array([s[4] for s in spans], dtype=np.int64)

    def __repr__(self):
        return f"BandLayout(m={self.m}, b={self.b}, size={self.size})"

    def to_dense(self, flat: np.ndarray) -> np.ndarray:
        """Expand flat storage (leading batch dims allowed) to dense blocks."""
        flat = np.asarray(flat)
        if flat.shape[-1] != self.size:
            raise DimensionError(
                f"expected {self.size} stored entries, got {flat.shape[-1]}")
        dense = np.zeros(flat.shape[:-1] + (self.m, self.m), dtype=flat.dtype)
        for _, i0, j0, ln, st in self.spans:
            idx = np.arange(ln)
            dense[..., i0 + idx, j0 + idx] = flat[..., st:st + ln]
        return dense

    def from_dense(self, dense: np.ndarray) -> np.ndarray:
        """Gather the in-band entries of dense blocks into flat storage."""
        dense = np.asarray(dense)
        if dense.shape[-2:] != (self.m, self.m):
            raise DimensionError(
                f"expected trailing shape ({self.m}, {self.m}), got {dense.shape[-2:]}")
        flat = np.zeros(dense.shape[:-2] + (self.size,), dtype=dense.dtype)
        for _, i0, j0, ln, st in self.spans:
            idx = np.arange(ln)
            flat[..., st:st + ln] = dense[..., i0 + idx, j0 + idx]
        return flat

    def identity(self, scale: float = 1.0, dtype=np.float64) -> np.ndarray:
        """Flat storage of ``scale * I``."""
        flat = np.zeros(self.size, dtype=dtype)
        for d, _, _, ln, st in self.spans:
            if d == 0:
                flat[st:st + ln] = scale
        return flat
