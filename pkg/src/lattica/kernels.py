"""Backend selection for the congruence kernels.

The compiled ``_ckernels`` extension is used when it was built; otherwise,
or when ``LATTICA_PURE_PYTHON`` is set to a non-empty value other than
``0``, the pure-Python module is used.  Both expose the same functions.
"""

import os

from . import _pykernels

_force_python = os.environ.get("LATTICA_PURE_PYTHON", "") not in ("", "0")

try:
    if _force_python:
        raise ImportError("pure Python requested")
    from . import _ckernels as _impl

    BACKEND = "cython"
except ImportError:
    _impl = _pykernels
    BACKEND = "python"

principal_closure = _impl.principal_closure
join_labels = _impl.join_labels
is_compatible = _impl.is_compatible
compatible_partitions = _impl.compatible_partitions


def available_backends():
    """Map backend name to module for every backend importable here."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels

        found["cython"] = _ckernels
    except ImportError:
        pass
    return found
