"""Hot numeric kernels, numba-jitted with a pure-numpy fallback.

The JIT path is used when numba imports cleanly and the environment
variable LUMENSCAN_NUMBA is unset or truthy; set LUMENSCAN_NUMBA=0 to
force the numpy fallback (useful for debugging and for the benchmark
in benchmarks/bench_kernels.py, which times both paths side by side).
"""

import os

import numpy as np


def _flag_enabled() -> bool:
    raw = os.environ.get("LUMENSCAN_NUMBA", "1").strip().lower()
    return raw not in ("0", "false", "off", "no")


NUMBA_AVAILABLE = False
try:
    import numba  # noqa: F401

    NUMBA_AVAILABLE = True
except ImportError:
    pass

NUMBA_ENABLED = NUMBA_AVAILABLE and _flag_enabled()


# --- numpy reference implementations (always importable) ---

def row_distances_np(vec, rows):
    """Euclidean distance from ``vec`` to each row of ``rows``."""
    diff = rows - vec
    return np.sqrt(np.einsum("ij,ij->i", diff, diff))


def disk_is_free_np(kinds, tc, zc, r):
    """True when every lattice cell of the wrapped Chebyshev disk is 0.

    ``kinds`` is a (theta, z) int array; theta wraps, z is clipped.
    """
    theta_size, z_size = kinds.shape
    thetas = np.unique((tc + np.arange(-r, r + 1)) % theta_size)
    z_lo = max(zc - r, 0)
    z_hi = min(zc + r, z_size - 1)
    return bool((kinds[np.ix_(thetas, np.arange(z_lo, z_hi + 1))] == 0).all())


def paint_disk_np(kinds, type_ids, tc, zc, r, kind_code, type_id):
    """Stamp a wrapped Chebyshev disk with ``kind_code``/``type_id``."""
    theta_size, z_size = kinds.shape
    thetas = np.unique((tc + np.arange(-r, r + 1)) % theta_size)
    z_lo = max(zc - r, 0)
    z_hi = min(zc + r, z_size - 1)
    sel = np.ix_(thetas, np.arange(z_lo, z_hi + 1))
    kinds[sel] = kind_code
    type_ids[sel] = type_id


if NUMBA_ENABLED:
    from numba import njit

    @njit(cache=True)
    def _row_distances_jit(vec, rows):
        n, m = rows.shape
        out = np.empty(n)
        for i in range(n):
            acc = 0.0
            for j in range(m):
                d = rows[i, j] - vec[j]
                acc += d * d
            out[i] = np.sqrt(acc)
        return out

    @njit(cache=True)
    def _disk_is_free_jit(kinds, tc, zc, r):
        theta_size, z_size = kinds.shape
        z_lo = max(zc - r, 0)
        z_hi = min(zc + r, z_size - 1)
        span = min(2 * r + 1, theta_size)
        for dt in range(span):
            t = (tc - r + dt) % theta_size
            for z in range(z_lo, z_hi + 1):
                if kinds[t, z] != 0:
                    return False
        return True

    @njit(cache=True)
    def _paint_disk_jit(kinds, type_ids, tc, zc, r, kind_code, type_id):
        theta_size, z_size = kinds.shape
        z_lo = max(zc - r, 0)
        z_hi = min(zc + r, z_size - 1)
        span = min(2 * r + 1, theta_size)
        for dt in range(span):
            t = (tc - r + dt) % theta_size
            for z in range(z_lo, z_hi + 1):
                kinds[t, z] = kind_code
                type_ids[t, z] = type_id

    row_distances = _row_distances_jit
    disk_is_free = _disk_is_free_jit
    paint_disk = _paint_disk_jit
else:
    row_distances = row_distances_np
    disk_is_free = disk_is_free_np
    paint_disk = paint_disk_np


def warm_up():
    """Trigger JIT compilation (no-op on the numpy path)."""
    vec = np.zeros(3)
    rows = np.zeros((2, 3))
    row_distances(vec, rows)
    kinds = np.zeros((4, 4), dtype=np.int8)
    type_ids = np.full((4, 4), -1, dtype=np.int32)
    disk_is_free(kinds, 0, 0, 1)
    paint_disk(kinds, type_ids, 0, 0, 0, 0, -1)
