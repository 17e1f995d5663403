"""Floating-point oracles for sampled paths in Sp(2).

These work on a time-ordered array of 2x2 symplectic matrices and are used to
cross-check the exact engine, which only handles rotation sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import NotSymplectic, UnresolvedWinding

J = np.array([[0.0, -1.0], [1.0, 0.0]])
DET_TOL = 1e-9
DEGENERATE_TOL = 1e-6
WINDING_TOL = 1e-9
N_DIRECTIONS = 256  # directions sampled on the half circle


@dataclass(frozen=True)
class PlanarPathSample:
    samples: np.ndarray  # shape (steps, 2, 2)

    def __post_init__(self) -> None:
        arr = np.asarray(self.samples, dtype=float)
        if arr.ndim != 3 or arr.shape[1:] != (2, 2):
            raise ValueError("samples must have shape (steps, 2, 2)")
        if arr.shape[0] < 2:
            raise ValueError("a sampled path needs at least two samples")
        dets = np.linalg.det(arr)
        bad = np.flatnonzero(np.abs(dets - 1.0) > DET_TOL)
        if bad.size:
            i = int(bad[0])
            raise NotSymplectic(f"sample {i} has determinant {dets[i]!r}")
        if not np.allclose(arr[0], np.eye(2), atol=DET_TOL, rtol=0.0):
            raise ValueError("a sampled path must start at the identity")
        arr.setflags(write=False)
        object.__setattr__(self, "samples", arr)

    @property
    def endpoint(self) -> np.ndarray:
        return self.samples[-1]


def rotation_sample(x: float, steps: int = 1000) -> PlanarPathSample:
    """Samples of t -> e^{2 pi i x t} on [0, 1] (steps + 1 matrices)."""
    t = np.linspace(0.0, 1.0, steps + 1) * 2 * math.pi * x
    c, s = np.cos(t), np.sin(t)
    return PlanarPathSample(np.stack([np.stack([c, -s], -1), np.stack([s, c], -1)], -2))


def _exp_traceless(X: np.ndarray) -> np.ndarray:
    """exp of a batch of traceless 2x2 matrices, using X^2 = -det(X) I."""
    d = -np.linalg.det(X)
    r = np.sqrt(np.abs(d))
    small = r < 1e-12
    rs = np.where(small, 1.0, r)
    c = np.where(d > 0, np.cosh(r), np.cos(r))
    s = np.where(small, 1.0, np.where(d > 0, np.sinh(r), np.sin(r)) / rs)
    return c[..., None, None] * np.eye(2) + s[..., None, None] * X


def integrate_generator(A: np.ndarray, duration: float = 1.0) -> PlanarPathSample:
    """Solve dG/dt = J A(t) G with A piecewise constant on equal steps.

    ``A`` has shape (steps, 2, 2) and holds symmetric matrices.  Each step is
    an exact matrix exponential, so the samples stay symplectic.
    """
    A = np.asarray(A, dtype=float)
    h = duration / A.shape[0]
    E = _exp_traceless(h * (J @ A))
    out = np.empty((A.shape[0] + 1, 2, 2))
    out[0] = np.eye(2)
    for i in range(A.shape[0]):
        out[i + 1] = E[i] @ out[i]
    return PlanarPathSample(out)


def _step_angles(v: np.ndarray) -> np.ndarray:
    """Signed angle between consecutive vectors; v has shape (steps, 2, ...)."""
    a, b = v[:-1], v[1:]
    cross = a[:, 0] * b[:, 1] - a[:, 1] * b[:, 0]
    dot = a[:, 0] * b[:, 0] + a[:, 1] * b[:, 1]
    d = np.arctan2(cross, dot)
    if np.any(np.abs(d) >= math.pi / 2):
        raise UnresolvedWinding("adjacent samples rotate a vector by a quarter turn or more")
    return d


def winding_interval(path: PlanarPathSample, directions: int = N_DIRECTIONS) -> tuple[float, float]:
    """Range of the winding (turns) of Phi(t) z over unit vectors z."""
    th = np.linspace(0.0, math.pi, directions, endpoint=False)
    z = np.stack([np.cos(th), np.sin(th)])  # (2, D)
    w = _step_angles(path.samples @ z).sum(axis=0) / (2 * math.pi)
    return float(w.min()), float(w.max())


def is_degenerate(path: PlanarPathSample) -> bool:
    # for det P = 1, det(P - I) = 2 - tr P
    return abs(2.0 - float(np.trace(path.endpoint))) <= DEGENERATE_TOL


def planar_index_numeric(path: PlanarPathSample) -> tuple[int, bool]:
    """Index estimate from the winding interval, plus a degeneracy flag.

    Returns 2k when the interval contains the integer k and 2 floor(w) + 1
    otherwise.  For a degenerate endpoint the lower-semicontinuous index is
    the returned value or one less.
    """
    lo, hi = winding_interval(path)
    k = math.ceil(lo - WINDING_TOL)
    mu = 2 * k if k <= hi + WINDING_TOL else 2 * math.floor(lo) + 1
    return mu, is_degenerate(path)


def polar_winding(path: PlanarPathSample) -> float:
    """Total turn of the unitary part of the polar decomposition."""
    s = path.samples
    u = np.stack([s[:, 0, 0] + s[:, 1, 1], s[:, 1, 0] - s[:, 0, 1]], axis=1)
    return float(_step_angles(u).sum() / (2 * math.pi))


def planar_bott_numeric(path: PlanarPathSample, angles: Sequence[float],
                        tol: float = WINDING_TOL) -> list[int | None]:
    """Bott function values of a sampled planar path at angles given in turns.

    The path is replaced by a canonical representative of its homotopy class
    with fixed endpoints (determined by the endpoint and the lifted polar
    angle).  Entries are None where the answer is within ``tol`` of a jump, and
    a ValueError is raised if the endpoint is parabolic.
    """
    P = path.endpoint
    tr = float(np.trace(P))
    A = polar_winding(path)
    if abs(abs(tr) - 2.0) <= DEGENERATE_TOL:
        sign = 1.0 if tr > 0 else -1.0
        if not np.allclose(P, sign * np.eye(2), atol=1e-6, rtol=0.0):
            raise ValueError("endpoint is parabolic; the canonical form is not resolved")
        # +-I: a rotation by a whole or half number of turns
        x = round(A) if sign > 0 else math.floor(A) + 0.5
        return _rotation_bott(x, angles, tol)
    if tr > 2.0:
        return [2 * round(A)] * len(angles)
    if tr < -2.0:
        return [2 * math.floor(A) + 1] * len(angles)
    # elliptic: conjugate to a rotation; the sign of P[1,0] gives its sense
    base = math.acos(tr / 2.0) / (2 * math.pi)
    if P[1, 0] < 0:
        base = 1.0 - base
    return _rotation_bott(base + round(A - base), angles, tol)


def _rotation_bott(x: float, angles: Sequence[float], tol: float) -> list[int | None]:
    out: list[int | None] = []
    for phi in angles:
        t = phi % 1.0
        t = min(t, 1.0 - t)
        lo, hi = x - t, x + t
        if min(abs(lo - round(lo)), abs(hi - round(hi))) <= tol:
            out.append(None)
        else:
            out.append(math.ceil(lo) + math.ceil(hi) - 1)
    return out


def random_generator(rng: np.random.Generator, steps: int, scale: float) -> np.ndarray:
    """Piecewise-constant symmetric 2x2 matrices with Gaussian entries."""
    M = rng.normal(0.0, scale, size=(steps, 2, 2))
    return (M + np.swapaxes(M, 1, 2)) / 2


def random_psd(rng: np.random.Generator, steps: int, scale: float) -> np.ndarray:
    L = rng.normal(0.0, scale, size=(steps, 2, 2))
    return L @ np.swapaxes(L, 1, 2)

