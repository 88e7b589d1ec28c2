"""Cylindrical lumen wall modelled as a wrapped 2D lattice.

The wall is a theta x z grid of cells: the angular index wraps modulo
theta_size, the axial index does not.  Ground truth (healthy tissue,
infection clusters, obstacles) is generated deterministically from the
spec seed; the grid is immutable afterwards and safe to share between
runs.  Agents must only touch a grid through trait measurement and the
obstacle-kind check at their current target; full ground-truth access
(`ground_truth_at`) exists for tests and post-run metrics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

import numpy as np

from . import _kernels, signatures
from .errors import CapacityError, LatticeBoundsError

# cell kind codes stored in the lattice array; HEALTHY must stay 0
# (generation treats nonzero as occupied)
HEALTHY = 0
INFECTED = 1
STATIC_OBSTACLE = 2
PATHOGEN = 3

KIND_NAMES = {
    HEALTHY: "healthy",
    INFECTED: "infected",
    STATIC_OBSTACLE: "static_obstacle",
    PATHOGEN: "pathogen",
}

OBSTACLE_KINDS = (STATIC_OBSTACLE, PATHOGEN)

_PLACEMENT_ATTEMPTS = 2000


class LatticeCoord(NamedTuple):
    """Angular/axial cell index; theta wraps modulo the lattice size."""

    theta: int
    z: int


class CartesianPoint(NamedTuple):
    x: float
    y: float
    z: float


@dataclass(frozen=True)
class GroundTruth:
    """Hidden truth of one cell: its kind and noiseless-or-noisy traits."""

    kind: int
    type_id: Optional[int]
    true_traits: np.ndarray


@dataclass(frozen=True)
class ClusterSpec:
    """One batch of Chebyshev-disk clusters for a single infection type."""

    type_id: int
    count: int
    radius_min: int
    radius_max: int

    def validate(self, theta_size: int, z_size: int) -> None:
        if self.type_id < 0:
            raise ValueError("cluster type_id must be >= 0")
        if self.count < 0:
            raise ValueError("cluster count must be >= 0")
        if not 0 <= self.radius_min <= self.radius_max:
            raise ValueError("cluster radius range must satisfy 0 <= min <= max")
        if self.radius_max >= min(theta_size, z_size) / 2:
            raise ValueError(
                f"cluster radius {self.radius_max} too large for a "
                f"{theta_size}x{z_size} lattice (must be < min/2)"
            )


@dataclass(frozen=True)
class WorldSpec:
    """Everything needed to generate a world reproducibly."""

    theta_size: int = 32
    z_size: int = 64
    radius: float = 1.0
    trait_count: int = 6
    type_signatures: tuple = ()
    healthy_signature: Optional[np.ndarray] = None
    clusters: tuple = ()
    static_obstacles: int = 0
    pathogens: int = 0
    static_signature: Optional[np.ndarray] = None
    pathogen_signature: Optional[np.ndarray] = None
    trait_noise: float = 0.05
    seed: int = 0
    # explicit placements, mainly for constructing oracle worlds in tests;
    # when given they override the random draws (counts must match)
    cluster_centers: Optional[tuple] = None
    obstacle_cells: Optional[tuple] = None

    def resolved_healthy(self) -> np.ndarray:
        if self.healthy_signature is not None:
            return np.asarray(self.healthy_signature, dtype=float)
        return signatures.default_healthy(self.trait_count)

    def resolved_obstacle_signatures(self) -> tuple[np.ndarray, np.ndarray]:
        static, pathogen = signatures.default_obstacle_signatures(self.trait_count)
        if self.static_signature is not None:
            static = np.asarray(self.static_signature, dtype=float)
        if self.pathogen_signature is not None:
            pathogen = np.asarray(self.pathogen_signature, dtype=float)
        return static, pathogen

    def validate(self) -> None:
        if self.theta_size < 4 or self.z_size < 4:
            raise ValueError("lattice must be at least 4x4")
        if self.radius <= 0:
            raise ValueError("lumen radius must be positive")
        if self.trait_count < 1:
            raise ValueError("need at least one trait")
        if self.trait_noise < 0:
            raise ValueError("trait noise must be >= 0")
        vectors = [self.resolved_healthy(), *self.type_signatures,
                   *self.resolved_obstacle_signatures()]
        for sig in vectors:
            arr = np.asarray(sig, dtype=float)
            if arr.shape != (self.trait_count,):
                raise ValueError(
                    f"signature length {arr.shape} does not match "
                    f"trait_count {self.trait_count}"
                )
            if ((arr < 0) | (arr > 1)).any():
                raise ValueError("signature entries must lie in [0, 1]")
        for cluster in self.clusters:
            cluster.validate(self.theta_size, self.z_size)
            if cluster.type_id >= len(self.type_signatures):
                raise ValueError(
                    f"cluster type {cluster.type_id} has no signature "
                    f"(got {len(self.type_signatures)})"
                )
        if self.static_obstacles < 0 or self.pathogens < 0:
            raise ValueError("obstacle counts must be >= 0")


@dataclass
class WorldGrid:
    """Generated lattice; treat as immutable after generate_world."""

    theta_size: int
    z_size: int
    radius: float
    seed: int
    kinds: np.ndarray          # (theta, z) int8 kind codes
    type_ids: np.ndarray       # (theta, z) int32, -1 where not infected
    traits: np.ndarray         # (theta, z, M) float64 in [0, 1]
    cluster_log: list = field(default_factory=list)   # (type_id, center, radius)
    obstacle_log: list = field(default_factory=list)  # (kind, coord)

    @property
    def cell_count(self) -> int:
        return self.theta_size * self.z_size

    def check_coord(self, c: LatticeCoord) -> None:
        if not (0 <= c.theta < self.theta_size and 0 <= c.z < self.z_size):
            raise LatticeBoundsError(
                f"coordinate {tuple(c)} outside {self.theta_size}x{self.z_size} lattice"
            )

    def kind_at(self, c: LatticeCoord) -> int:
        self.check_coord(c)
        return int(self.kinds[c.theta, c.z])

    def true_traits_at(self, c: LatticeCoord) -> np.ndarray:
        self.check_coord(c)
        return self.traits[c.theta, c.z]


def embed_3d(c: LatticeCoord, grid: WorldGrid) -> CartesianPoint:
    """Map a lattice cell onto the lumen cylinder (unit axial spacing)."""
    grid.check_coord(c)
    angle = 2.0 * math.pi * c.theta / grid.theta_size
    return CartesianPoint(
        grid.radius * math.cos(angle),
        grid.radius * math.sin(angle),
        float(c.z),
    )


def ground_truth_at(grid: WorldGrid, c: LatticeCoord) -> GroundTruth:
    """Full oracle access; for tests and post-run metrics only."""
    grid.check_coord(c)
    kind = int(grid.kinds[c.theta, c.z])
    tid = int(grid.type_ids[c.theta, c.z])
    return GroundTruth(
        kind=kind,
        type_id=tid if kind == INFECTED else None,
        true_traits=grid.traits[c.theta, c.z].copy(),
    )


def _place_clusters(spec: WorldSpec, kinds, type_ids, rng, log) -> None:
    explicit = list(spec.cluster_centers) if spec.cluster_centers is not None else None
    idx = 0
    for cluster in spec.clusters:
        for _ in range(cluster.count):
            if cluster.radius_min == cluster.radius_max:
                r = cluster.radius_min
            else:
                r = int(rng.integers(cluster.radius_min, cluster.radius_max + 1))
            if explicit is not None:
                if idx >= len(explicit):
                    raise ValueError("fewer explicit cluster centers than clusters")
                tc, zc = explicit[idx]
                idx += 1
                if not (r <= zc < spec.z_size - r):
                    raise ValueError("explicit cluster center clips the z edge")
                if not _kernels.disk_is_free(kinds, tc, zc, r):
                    raise CapacityError("explicit cluster placement overlaps")
            else:
                # centres keep the whole disk inside the axial range so a
                # cluster is always the full (2r+1)^2 Chebyshev disk
                for attempt in range(_PLACEMENT_ATTEMPTS):
                    tc = int(rng.integers(0, spec.theta_size))
                    zc = int(rng.integers(r, spec.z_size - r))
                    if _kernels.disk_is_free(kinds, tc, zc, r):
                        break
                else:
                    raise CapacityError(
                        f"could not place a radius-{r} cluster on a "
                        f"{spec.theta_size}x{spec.z_size} lattice"
                    )
            _kernels.paint_disk(kinds, type_ids, tc, zc, r, INFECTED, cluster.type_id)
            log.append((cluster.type_id, LatticeCoord(tc, zc), r))


def _place_obstacles(spec: WorldSpec, kinds, rng, log) -> None:
    wanted = [(STATIC_OBSTACLE, spec.static_obstacles), (PATHOGEN, spec.pathogens)]
    if spec.obstacle_cells is not None:
        cells = [LatticeCoord(*c) for c in spec.obstacle_cells]
        if len(cells) != spec.static_obstacles + spec.pathogens:
            raise ValueError("explicit obstacle cells do not match obstacle counts")
        it = iter(cells)
        for kind, count in wanted:
            for _ in range(count):
                c = next(it)
                if kinds[c.theta, c.z] != HEALTHY:
                    raise CapacityError("explicit obstacle placement overlaps")
                kinds[c.theta, c.z] = kind
                log.append((kind, c))
        return
    free = np.flatnonzero((kinds == HEALTHY).ravel())
    total = spec.static_obstacles + spec.pathogens
    if total > free.size:
        raise CapacityError(
            f"{total} obstacles requested but only {free.size} free cells remain"
        )
    picks = rng.choice(free, size=total, replace=False)
    z_size = kinds.shape[1]
    i = 0
    for kind, count in wanted:
        for _ in range(count):
            flat = int(picks[i])
            i += 1
            c = LatticeCoord(flat // z_size, flat % z_size)
            kinds[c.theta, c.z] = kind
            log.append((kind, c))


def generate_world(spec: WorldSpec) -> WorldGrid:
    """Generate ground truth; bitwise reproducible for a given spec."""
    spec.validate()

    # quick capacity check before any sampling
    requested = sum(
        c.count * (2 * c.radius_max + 1) ** 2 for c in spec.clusters
    ) + spec.static_obstacles + spec.pathogens
    if requested > spec.theta_size * spec.z_size:
        raise CapacityError(
            f"spec may occupy up to {requested} cells but the lattice has "
            f"{spec.theta_size * spec.z_size}"
        )

    rng = np.random.default_rng(spec.seed)
    kinds = np.zeros((spec.theta_size, spec.z_size), dtype=np.int8)
    type_ids = np.full((spec.theta_size, spec.z_size), -1, dtype=np.int32)
    cluster_log: list = []
    obstacle_log: list = []

    _place_clusters(spec, kinds, type_ids, rng, cluster_log)
    _place_obstacles(spec, kinds, rng, obstacle_log)

    healthy = spec.resolved_healthy()
    static_sig, pathogen_sig = spec.resolved_obstacle_signatures()
    traits = np.empty((spec.theta_size, spec.z_size, spec.trait_count))
    traits[:] = healthy
    for type_id, sig in enumerate(spec.type_signatures):
        mask = (kinds == INFECTED) & (type_ids == type_id)
        traits[mask] = np.asarray(sig, dtype=float)
    traits[kinds == STATIC_OBSTACLE] = static_sig
    traits[kinds == PATHOGEN] = pathogen_sig
    if spec.trait_noise > 0:
        noise = rng.normal(0.0, spec.trait_noise, traits.shape)
        traits = np.clip(traits + noise, 0.0, 1.0)

    return WorldGrid(
        theta_size=spec.theta_size,
        z_size=spec.z_size,
        radius=spec.radius,
        seed=spec.seed,
        kinds=kinds,
        type_ids=type_ids,
        traits=traits,
        cluster_log=cluster_log,
        obstacle_log=obstacle_log,
    )
