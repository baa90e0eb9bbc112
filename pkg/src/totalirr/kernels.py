"""Selection of the canonical-form kernel backend.

The compiled Cython kernel is used when available; otherwise the
pure-Python twin takes over.  Both expose ``certificate`` and
``certificates`` with identical semantics and bit-identical output.
Set ``TOTALIRR_BACKEND=python`` (or ``cython``) to force a backend.
"""

from __future__ import annotations

import os

from . import _canon_py

try:
    from . import _canon  # type: ignore[attr-defined]
except ImportError:
    _canon = None


def available_backends() -> dict[str, object]:
    backends: dict[str, object] = {"python": _canon_py}
    if _canon is not None:
        backends["cython"] = _canon
    return backends


def _select():
    forced = os.environ.get("TOTALIRR_BACKEND", "").strip().lower()
    backends = available_backends()
    if forced:
        if forced not in backends:
            raise RuntimeError(
                f"TOTALIRR_BACKEND={forced!r} requested but only "
                f"{sorted(backends)} available"
            )
        return backends[forced]
    return backends.get("cython", _canon_py)


_active = _select()

BACKEND_NAME: str = _active.BACKEND_NAME
certificate = _active.certificate
certificates = _active.certificates
