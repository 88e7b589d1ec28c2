"""Built-in reference trait signatures.

The default scheme places the healthy signature at the centre of the
unit trait cube and entity signatures on a sphere of radius 0.4 around
it: infection types sit at +/- 0.4 along single trait axes (so up to
2*M types), the two obstacle kinds at opposite diagonal corners of the
sphere.  Any two signatures are then strictly farther from each other
than from healthy, which keeps relative-distance scores of foreign
types below the 0.5 detection threshold with a comfortable margin.
"""

import numpy as np

SIGNATURE_RADIUS = 0.4


def default_healthy(trait_count: int) -> np.ndarray:
    return np.full(trait_count, 0.5)


def default_type_signatures(trait_count: int, type_count: int) -> list[np.ndarray]:
    """Signatures for ``type_count`` infection types (max 2 per trait axis)."""
    if type_count > 2 * trait_count:
        raise ValueError(
            f"default scheme supports at most {2 * trait_count} types for "
            f"{trait_count} traits; pass explicit signatures for more"
        )
    out = []
    for k in range(type_count):
        sig = default_healthy(trait_count)
        axis = k % trait_count
        sign = 1.0 if k < trait_count else -1.0
        sig[axis] += sign * SIGNATURE_RADIUS
        out.append(sig)
    return out


def default_obstacle_signatures(trait_count: int) -> tuple[np.ndarray, np.ndarray]:
    """(static, pathogen) signatures on the diagonal of the trait sphere."""
    step = SIGNATURE_RADIUS / np.sqrt(trait_count)
    static = default_healthy(trait_count) + step
    pathogen = default_healthy(trait_count) - step
    return static, pathogen
