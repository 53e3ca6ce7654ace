"""Discretized slab domain, field transforms and dealiasing.

The domain is G x (-h, h) with G = (-1, 1)^2, periodic in x and y.  The
horizontal period is 2, so wavenumbers are integer multiples of pi.  Fields
are plain numpy arrays: scalars have shape (nx, ny) or (nx, ny, nz), vector
fields carry a leading component axis, e.g. (2, nx, ny, nz).  Transforms act
on the x, y axes only (per vertical level for 3D fields) and are normalized
so that coefficients are mode amplitudes.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property

import numpy as np
import scipy.fft


def fft_workers() -> int:
    """FFT thread count; override with the PESLAB_THREADS environment variable."""
    return int(os.environ.get("PESLAB_THREADS", "1"))


@dataclass(frozen=True)
class Grid:
    """Slab geometry and resolution: G = (-1,1)^2 times (-h, h).

    nx, ny are even horizontal collocation counts, nz >= 4 uniform vertical
    levels inclusive of z = +-h, so dz = 2h/(nz-1).
    """

    half_height: float
    nx: int
    ny: int
    nz: int

    def __post_init__(self):
        if not self.half_height > 0:
            raise ValueError(f"half_height must be positive, got {self.half_height}")
        for name in ("nx", "ny"):
            n = getattr(self, name)
            if n <= 0 or n % 2 != 0:
                raise ValueError(f"{name} must be a positive even integer, got {n}")
        if self.nz < 4:
            raise ValueError(f"nz must be >= 4, got {self.nz}")

    # -- physical coordinates ------------------------------------------------

    @cached_property
    def dx(self) -> float:
        return 2.0 / self.nx

    @cached_property
    def dy(self) -> float:
        return 2.0 / self.ny

    @cached_property
    def dz(self) -> float:
        return 2.0 * self.half_height / (self.nz - 1)

    @cached_property
    def x(self) -> np.ndarray:
        return -1.0 + self.dx * np.arange(self.nx)

    @cached_property
    def y(self) -> np.ndarray:
        return -1.0 + self.dy * np.arange(self.ny)

    @cached_property
    def z(self) -> np.ndarray:
        return np.linspace(-self.half_height, self.half_height, self.nz)

    @cached_property
    def cell_area(self) -> float:
        return self.dx * self.dy

    @cached_property
    def volume(self) -> float:
        return 4.0 * 2.0 * self.half_height

    def mesh2(self):
        """X, Y meshes of shape (nx, ny)."""
        return np.meshgrid(self.x, self.y, indexing="ij")

    def mesh3(self):
        """X, Y, Z meshes of shape (nx, ny, nz)."""
        return np.meshgrid(self.x, self.y, self.z, indexing="ij")

    # -- wavenumbers (kx, ky in pi * Z because the period is 2) ---------------

    @cached_property
    def kx(self) -> np.ndarray:
        return 2.0 * np.pi * scipy.fft.fftfreq(self.nx, d=self.dx)

    @cached_property
    def ky(self) -> np.ndarray:
        return 2.0 * np.pi * scipy.fft.fftfreq(self.ny, d=self.dy)

    @cached_property
    def kx2(self) -> np.ndarray:
        """kx broadcast to (nx, 1), for 2D spectral arrays."""
        return self.kx[:, None]

    @cached_property
    def ky2(self) -> np.ndarray:
        return self.ky[None, :]

    @cached_property
    def kx3(self) -> np.ndarray:
        """kx broadcast to (nx, 1, 1), for 3D spectral arrays."""
        return self.kx[:, None, None]

    @cached_property
    def ky3(self) -> np.ndarray:
        return self.ky[None, :, None]

    @cached_property
    def k_sq(self) -> np.ndarray:
        """|k|^2 on the (nx, ny) mode lattice."""
        return self.kx2**2 + self.ky2**2

    @cached_property
    def kx_deriv(self) -> np.ndarray:
        """kx with the Nyquist mode zeroed; used for odd-order derivatives."""
        k = self.kx.copy()
        k[self.nx // 2] = 0.0
        return k

    @cached_property
    def ky_deriv(self) -> np.ndarray:
        k = self.ky.copy()
        k[self.ny // 2] = 0.0
        return k

    @cached_property
    def dealias_mask(self) -> np.ndarray:
        """2/3-rule mask on the (nx, ny) mode lattice (True = keep)."""
        mx = scipy.fft.fftfreq(self.nx) * self.nx
        my = scipy.fft.fftfreq(self.ny) * self.ny
        keep_x = np.abs(mx) <= self.nx / 3.0
        keep_y = np.abs(my) <= self.ny / 3.0
        return keep_x[:, None] & keep_y[None, :]


# -- transforms ---------------------------------------------------------------
#
# forward*/inverse* divide by nx*ny so a single mode A*exp(i k.x) has
# coefficient A; inverse(forward(f)) == f to machine precision.


def forward2(grid: Grid, f: np.ndarray) -> np.ndarray:
    """Horizontal Fourier coefficients of a 2D field (..., nx, ny)."""
    return scipy.fft.fftn(f, axes=(-2, -1), workers=fft_workers()) / (grid.nx * grid.ny)


def inverse2(grid: Grid, c: np.ndarray) -> np.ndarray:
    return scipy.fft.ifftn(c * (grid.nx * grid.ny), axes=(-2, -1), workers=fft_workers()).real


def forward3(grid: Grid, f: np.ndarray) -> np.ndarray:
    """Per-level horizontal Fourier coefficients of a 3D field (..., nx, ny, nz)."""
    return scipy.fft.fftn(f, axes=(-3, -2), workers=fft_workers()) / (grid.nx * grid.ny)


def inverse3(grid: Grid, c: np.ndarray) -> np.ndarray:
    return scipy.fft.ifftn(c * (grid.nx * grid.ny), axes=(-3, -2), workers=fft_workers()).real


def dealias_spectral(grid: Grid, c: np.ndarray, three_d: bool) -> np.ndarray:
    """Zero every coefficient outside the 2/3 band; others unchanged."""
    mask = grid.dealias_mask[..., None] if three_d else grid.dealias_mask
    return c * mask


def dealias2(grid: Grid, f: np.ndarray) -> np.ndarray:
    """2/3-rule dealiasing of a physical 2D field."""
    c = scipy.fft.fftn(f, axes=(-2, -1), workers=fft_workers())
    c *= grid.dealias_mask
    return scipy.fft.ifftn(c, axes=(-2, -1), workers=fft_workers()).real


def dealias3(grid: Grid, f: np.ndarray) -> np.ndarray:
    """2/3-rule dealiasing of a physical 3D field, level by level."""
    c = scipy.fft.fftn(f, axes=(-3, -2), workers=fft_workers())
    c *= grid.dealias_mask[..., None]
    return scipy.fft.ifftn(c, axes=(-3, -2), workers=fft_workers()).real
