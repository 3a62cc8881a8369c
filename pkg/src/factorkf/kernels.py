"""Backend selection for the band kernels.

The compiled extension is preferred when it imports cleanly; otherwise the
pure-NumPy twin is used.  Selection happens at import time and can be forced
with the environment variable ``FACTORKF_KERNELS={compiled,python}`` or, for
benchmarks and tests, with :func:`force_backend`.

The compiled kernels only handle float64; other dtypes always go through
the NumPy implementation.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py

try:
    from . import _bandkernels
except ImportError:  # pragma: no cover - depends on the build environment
    _bandkernels = None

_requested = os.environ.get("FACTORKF_KERNELS", "auto")
if _requested == "python" or _bandkernels is None:
    _active = _kernels_py
elif _requested in ("auto", "compiled"):
    _active = _bandkernels
else:
    raise ValueError(
        f"FACTORKF_KERNELS must be 'auto', 'compiled' or 'python', got {_requested!r}")
if _requested == "compiled" and _bandkernels is None:
    raise ImportError("compiled kernels requested but the extension is not built")


def active_backend() -> str:
    """Name of the kernel backend in use ('compiled' or 'python')."""
    return _active.NAME


def available_backends() -> tuple[str, ...]:
    return ("compiled", "python") if _bandkernels is not None else ("python",)


def force_backend(name: str) -> None:
    """Override the backend; intended for benchmarks and parity tests."""
    global _active
    if name == "python":
        _active = _kernels_py
    elif name == "compiled":
        if _bandkernels is None:
            raise ImportError("compiled kernels are not built")
        _active = _bandkernels
    else:
        raise ValueError(f"unknown backend {name!r}")


def _impl(*arrays):
    if _active is _bandkernels and any(a.dtype != np.float64 for a in arrays):
        return _kernels_py
    return _active


def block_matvec(m11, m12, m21, m22, u, l, layout):
    return _impl(u).block_matvec(m11, m12, m21, m22, u, l, layout)


def block_matvec_bwd(m11, m12, m21, m22, u, l, dyu, dyl, layout):
    return _impl(u).block_matvec_bwd(m11, m12, m21, m22, u, l, dyu, dyl, layout)


def predict_cov(m11, m12, m21, m22, su, ss, sl, layout):
    return _impl(su).predict_cov(m11, m12, m21, m22, su, ss, sl, layout)


def predict_cov_bwd(m11, m12, m21, m22, su, ss, sl, dcu, dcl, dcs, layout):
    return _impl(su).predict_cov_bwd(
        m11, m12, m21, m22, su, ss, sl, dcu, dcl, dcs, layout)
