"""Batch kernel backends.

Two interchangeable implementations of the hot loops (full-field word
application, power maps, polynomial multiply/pow with reduction mod x^q - x):

* ``core`` -- Cython extension, used by default when it compiled;
* ``pure`` -- vectorized numpy fallback, always available.

Selection happens at import; set FFPERM_BACKEND=pure or =compiled to force
one, or call :func:`set_backend` at runtime (used by the benchmark).
"""

from __future__ import annotations

import os

from . import pure

try:
    from . import core as _core
except ImportError:
    _core = None

_BACKENDS = {"pure": pure}
if _core is not None:
    _BACKENDS["compiled"] = _core


def _select_default():
    forced = os.environ.get("FFPERM_BACKEND")
    if forced is not None:
        if forced not in _BACKENDS:
            raise ImportError(
                f"FFPERM_BACKEND={forced!r} not available; "
                f"choices: {sorted(_BACKENDS)}")
        return _BACKENDS[forced]
    return _BACKENDS.get("compiled", pure)


_active = _select_default()


def get():
    """The active backend module."""
    return _active


def name() -> str:
    return _active.NAME


def available() -> dict:
    """Mapping of backend name -> module for everything importable here."""
    return dict(_BACKENDS)


def set_backend(backend_name: str):
    """Switch the active backend; returns the previously active module."""
    global _active
    if backend_name not in _BACKENDS:
        raise ValueError(f"unknown backend {backend_name!r}; "
                         f"choices: {sorted(_BACKENDS)}")
    previous = _active
    _active = _BACKENDS[backend_name]
    return previous
