"""One-dimensional spatial discretisation of an interval (0, L).

Two degree-of-freedom layouts are supported, chosen so the discrete
Laplacian has closed-form eigenpairs that are exactly orthonormal in the
discrete L2 inner product:

* Dirichlet: interior nodes ``x_j = j*dx`` (j = 1..n-1), sine eigenvectors.
* Neumann: cell centers ``x_j = (j+1/2)*dx`` (j = 0..n-1), cosine
  eigenvectors, including the constant zero-eigenvalue mode.

Quadrature is the uniform rule with weight dx per dof (midpoint rule on
cells; interior-node rule for Dirichlet). Integrating the constant 1 gives
L for Neumann and L - dx for Dirichlet; both totals are exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DIRICHLET = "dirichlet"
NEUMANN = "neumann"


@dataclass(frozen=True)
class Grid:
    """Uniform grid on (0, L) carrying dof positions and quadrature weights."""

    length: float
    n: int
    bc: str
    dof_positions: np.ndarray
    quad_weights: np.ndarray

    @property
    def dx(self) -> float:
        return self.length / self.n

    @property
    def ndof(self) -> int:
        return self.dof_positions.size

    @property
    def volume(self) -> float:
        """Total quadrature mass (the discrete measure of the domain)."""
        return float(self.quad_weights.sum())

    def laplacian_diagonals(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Sub-, main and super-diagonal of the discrete Laplacian.

        The operator is the standard second-difference Laplacian (negative
        semidefinite): homogeneous Dirichlet values beyond the boundary
        nodes, or a mirrored stencil across the boundary faces for Neumann.
        """
        m = self.ndof
        inv_dx2 = 1.0 / self.dx**2
        lower = np.full(m - 1, inv_dx2)
        upper = np.full(m - 1, inv_dx2)
        diag = np.full(m, -2.0 * inv_dx2)
        if self.bc == NEUMANN:
            diag[0] = -inv_dx2
            diag[-1] = -inv_dx2
        return lower, diag, upper

    def apply_laplacian(self, values: np.ndarray) -> np.ndarray:
        """Apply the discrete Laplacian to dof values (last axis)."""
        values = np.asarray(values, dtype=float)
        out = np.empty_like(values)
        inv_dx2 = 1.0 / self.dx**2
        out[..., 1:-1] = (
            values[..., :-2] - 2.0 * values[..., 1:-1] + values[..., 2:]
        ) * inv_dx2
        if self.bc == DIRICHLET:
            out[..., 0] = (values[..., 1] - 2.0 * values[..., 0]) * inv_dx2
            out[..., -1] = (values[..., -2] - 2.0 * values[..., -1]) * inv_dx2
        else:
            out[..., 0] = (values[..., 1] - values[..., 0]) * inv_dx2
            out[..., -1] = (values[..., -2] - values[..., -1]) * inv_dx2
        return out


@dataclass(frozen=True)
class SpectralBasis:
    """Eigenpairs of the discrete Laplacian, ordered by increasing eigenvalue.

    ``vectors[i]`` has unit discrete L2 norm; ``indices[i]`` is the 1-based
    mode index k. Both the discrete eigenvalue (exact for the difference
    operator) and its continuum counterpart ``(k*pi/L)^2`` resp.
    ``((k-1)*pi/L)^2`` are stored.
    """

    grid: Grid
    indices: np.ndarray
    lambda_discrete: np.ndarray
    lambda_continuum: np.ndarray
    vectors: np.ndarray

    def __len__(self) -> int:
        return self.indices.size


@dataclass(frozen=True)
class RegionMask:
    """Subset of dofs standing in for a subregion of the domain."""

    grid: Grid
    flags: np.ndarray
    measure: float


def build_grid(length: float, n: int, bc: str) -> Grid:
    """Construct a uniform grid on (0, length) with n cells.

    Dirichlet grids carry n-1 interior-node dofs, Neumann grids n
    cell-center dofs; every dof gets quadrature weight dx.
    """
    if length <= 0.0:
        raise ValueError(f"domain length must be positive, got {length}")
    if n < 4:
        raise ValueError(f"resolution n must be at least 4, got {n}")
    bc = bc.lower()
    if bc not in (DIRICHLET, NEUMANN):
        raise ValueError(f"bc must be 'dirichlet' or 'neumann', got {bc!r}")
    dx = length / n
    if bc == DIRICHLET:
        positions = dx * np.arange(1, n)
    else:
        positions = dx * (np.arange(n) + 0.5)
    weights = np.full(positions.size, dx)
    return Grid(float(length), int(n), bc, positions, weights)


def integrate(values: np.ndarray, grid: Grid) -> float:
    """Quadrature integral over the domain: sum of w_j * f_j."""
    values = np.asarray(values, dtype=float)
    if values.shape != (grid.ndof,):
        raise ValueError(
            f"field has shape {values.shape}, expected ({grid.ndof},)"
        )
    return float(np.dot(grid.quad_weights, values))


def mean_value(values: np.ndarray, grid: Grid) -> float:
    """Quadrature mean: integral divided by the discrete volume."""
    return integrate(values, grid) / grid.volume


def discrete_eigenbasis(grid: Grid, count: int) -> SpectralBasis:
    """First ``count`` eigenpairs of the discrete Laplacian, in closed form.

    Dirichlet: phi_k(x_j) ~ sin(k*pi*j/n), lambda_k = (4/dx^2) sin^2(k*pi/(2n)).
    Neumann: phi_k(x_j) ~ cos((k-1)*pi*(j+1/2)/n), with the k = 1 constant
    mode at eigenvalue 0. Vectors are normalised to unit discrete L2 norm.
    """
    if count < 1 or count > grid.ndof:
        raise ValueError(
            f"count must be between 1 and {grid.ndof} dofs, got {count}"
        )
    n = grid.n
    dx = grid.dx
    length = grid.length
    ks = np.arange(1, count + 1)
    if grid.bc == DIRICHLET:
        freq = ks  # sine frequency index
        j = np.arange(1, n)
        phase = np.pi * np.outer(freq, j) / n
        vectors = np.sqrt(2.0 / length) * np.sin(phase)
    else:
        freq = ks - 1  # cosine frequency index; k = 1 is the constant mode
        j = np.arange(n) + 0.5
        phase = np.pi * np.outer(freq, j) / n
        vectors = np.sqrt(2.0 / length) * np.cos(phase)
        vectors[freq == 0] = np.sqrt(1.0 / length)
    lam_disc = (4.0 / dx**2) * np.sin(np.pi * freq / (2.0 * n)) ** 2
    lam_cont = (np.pi * freq / length) ** 2
    return SpectralBasis(grid, ks, lam_disc, lam_cont, vectors)


def region_mask(grid: Grid, intervals: list[tuple[float, float]]) -> RegionMask:
    """Flag the dofs whose position lies in one of the closed intervals."""
    flags = np.zeros(grid.ndof, dtype=bool)
    for a, b in intervals:
        if b < a:
            raise ValueError(f"interval ({a}, {b}) has negative length")
        if a < -1e-12 * grid.length or b > grid.length * (1.0 + 1e-12):
            raise ValueError(
                f"interval ({a}, {b}) is not contained in [0, {grid.length}]"
            )
        flags |= (grid.dof_positions >= a) & (grid.dof_positions <= b)
    measure = float(grid.quad_weights[flags].sum())
    return RegionMask(grid, flags, measure)


def mask_distance_cells(mask: RegionMask) -> np.ndarray:
    """Graph distance, in whole cells, from each dof to the flagged set.

    Flagged dofs are at distance 0; a grid with an empty mask returns
    +inf everywhere.
    """
    flags = mask.flags
    m = flags.size
    dist = np.full(m, np.inf)
    dist[flags] = 0.0
    for i in range(1, m):
        dist[i] = min(dist[i], dist[i - 1] + 1.0)
    for i in range(m - 2, -1, -1):
        dist[i] = min(dist[i], dist[i + 1] + 1.0)
    return dist
