"""Search kernel backends.  The compiled extension is preferred; the pure
Python twin is the fallback and the behavioral reference."""

try:
    from planewheel._core import _search as _impl

    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on build environment
    from planewheel._core import search_py as _impl

    BACKEND = "python"

search = _impl.search


def backends():
    """All importable backends, for benchmarks and equivalence tests."""
    from planewheel._core import search_py

    out = {"python": search_py.search}
    if BACKEND == "compiled":
        out["compiled"] = _impl.search
    return out
