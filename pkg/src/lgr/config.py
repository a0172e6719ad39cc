"""Global numeric configuration.

All verification suites run in float64; training may switch to float32 for
speed. The active dtype is a process-wide setting so that every tensor
created inside a training run agrees on precision.
"""

import contextlib

import numpy as np

_DTYPES = {"float32": np.float32, "float64": np.float64}

_default_dtype = np.float64


def set_default_dtype(name):
    """Set the process-wide float dtype ('float32' or 'float64')."""
    global _default_dtype
    if name not in _DTYPES:
        raise ValueError(f"unknown dtype {name!r}, expected one of {sorted(_DTYPES)}")
    _default_dtype = _DTYPES[name]


def default_dtype():
    return _default_dtype


@contextlib.contextmanager
def precision(name):
    """Temporarily switch the default float dtype."""
    global _default_dtype
    old = _default_dtype
    set_default_dtype(name)
    try:
        yield
    finally:
        _default_dtype = old
