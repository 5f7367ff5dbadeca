"""Backend selection: compiled extension when available, pure Python otherwise.

The compiled module is preferred.  ``FASTNORM_BACKEND=python`` (or
``compiled``) in the environment forces a choice at import time, and
:func:`override` swaps the active backend within a scope (used by tests and
by the bench harness's backend-comparison mode).

Both backends export the same flat kernel names; :func:`scalar_kernel` and
:func:`loop_kernel` are the single resolution points the public wrappers and
the bench harness share, so the benchmark times exactly the exported kernels.
"""

from __future__ import annotations

import os
import threading
from contextlib import contextmanager

from fastnorm import _pykernels

try:
    from fastnorm import _kernels  # type: ignore[attr-defined]
except ImportError:
    _kernels = None

_MODULES = {"python": _pykernels}
if _kernels is not None:
    _MODULES["compiled"] = _kernels

_SUFFIX = {"single": "f32", "double": "f64"}

# Benchmarkable algorithms and the kernel families implementing them.
ALGORITHMS = ("naive", "quotient", "quotient_fast", "scaling")


def _initial_backend() -> str:
    forced = os.environ.get("FASTNORM_BACKEND", "").strip().lower()
    if forced:
        if forced not in _MODULES:
            raise ImportError(
                f"FASTNORM_BACKEND={forced!r} is not available; "
                f"choices here: {sorted(_MODULES)}"
            )
        return forced
    return "compiled" if "compiled" in _MODULES else "python"


_state = threading.local()
_DEFAULT = _initial_backend()


def backend_name() -> str:
    """Name of the active backend (``compiled`` or ``python``)."""
    return getattr(_state, "name", _DEFAULT)


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_MODULES))


def get_module(name: str | None = None):
    key = name or backend_name()
    try:
        return _MODULES[key]
    except KeyError:
        raise ValueError(
            f"backend {key!r} is not available; choices here: {sorted(_MODULES)}"
        ) from None


@contextmanager
def override(name: str):
    """Temporarily select a backend in the current thread."""
    get_module(name)  # validate early
    previous = getattr(_state, "name", None)
    _state.name = name
    try:
        yield
    finally:
        if previous is None:
            del _state.name
        else:
            _state.name = previous


def scalar_kernel(base: str, precision: str, backend: str | None = None):
    """Exported scalar kernel, e.g. ``scalar_kernel("normalize3", "double")``."""
    return getattr(get_module(backend), f"{base}_{_SUFFIX[precision]}")


def loop_kernel(base: str, precision: str, backend: str | None = None):
    """Exported timing loop, e.g. ``loop_kernel("loop_scaling3", "double")``."""
    return getattr(get_module(backend), f"{base}_{_SUFFIX[precision]}")


def algorithm_dims(algo: str) -> tuple[int, ...]:
    """Dimensions an algorithm exists for (the fast quotient is 3-D only)."""
    return (3,) if algo == "quotient_fast" else (2, 3, 4)


def scalar_base(algo: str, dim: int) -> str:
    """Kernel family name for a benchmarkable algorithm at a dimension."""
    if dim not in algorithm_dims(algo):
        raise ValueError(f"algorithm {algo!r} is not defined for dimension {dim}")
    if algo == "scaling":
        return f"normalize{dim}"
    if algo == "quotient_fast":
        return "quotient3_fast"
    if algo in ("quotient", "naive"):
        return f"{algo}{dim}"
    raise ValueError(f"unknown algorithm {algo!r}; choices: {ALGORITHMS}")


def loop_base(algo: str, dim: int) -> str:
    if dim not in algorithm_dims(algo):
        raise ValueError(f"algorithm {algo!r} is not defined for dimension {dim}")
    if algo == "quotient_fast":
        return "loop_quotient_fast3"
    if algo in ("scaling", "quotient", "naive"):
        return f"loop_{algo}{dim}"
    raise ValueError(f"unknown algorithm {algo!r}; choices: {ALGORITHMS}")


def takes_params(algo: str) -> bool:
    """Whether the algorithm's kernels receive the scaling constants."""
    return algo == "scaling"
