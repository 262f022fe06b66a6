"""Backend selection for the hot numeric kernels.

Two interchangeable kernel implementations exist: numba ``@njit`` direct
loops and a pure-numpy path built on strided slicing. The env var
``VIOLA_BACKEND`` picks one:

* ``auto`` (default) - numba when importable, numpy otherwise
* ``numba``          - require numba, fail loudly if missing
* ``numpy``          - force the pure-numpy fallback

All kernels are single-threaded regardless of backend, so results are
deterministic. ``VIOLA_THREADS`` is honored for numba's internal thread
pool as a belt-and-braces measure (it only matters if parallel kernels
are ever added).
"""

import os


def _select_backend() -> str:
    choice = os.environ.get("VIOLA_BACKEND", "auto").strip().lower()
    if choice not in ("auto", "numba", "numpy"):
        raise ValueError(
            f"VIOLA_BACKEND must be one of auto|numba|numpy, got {choice!r}"
        )
    if choice == "numpy":
        return "numpy"
    try:
        import numba  # noqa: F401
    except ImportError:
        if choice == "numba":
            raise ImportError("VIOLA_BACKEND=numba but numba is not installed")
        return "numpy"

    threads = os.environ.get("VIOLA_THREADS")
    if threads:
        try:
            import numba

            numba.set_num_threads(max(1, int(threads)))
        except (ValueError, RuntimeError):
            pass
    return "numba"


ACTIVE_BACKEND = _select_backend()
