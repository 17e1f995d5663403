"""Independent reference computations used by the tests.

These are written from the definitions in the most direct form possible and
share no code with the library beyond the data types.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np


def fold(angle: Fraction) -> Fraction:
    a = angle % 1
    return min(a, 1 - a)


def block_bott_oracle(x: Fraction, angle: Fraction) -> int:
    # lower-semicontinuous index of e^{-2 pi i t} * (rotation by x), per plane
    t = fold(Fraction(angle))
    return math.ceil(x - t) + math.ceil(x + t) - 1


def bott_oracle(planes: list[Fraction], angle: Fraction) -> int:
    return sum(block_bott_oracle(x, angle) for x in planes)


def cz_oracle(planes: list[Fraction]) -> int:
    # index of the iterate from the winding of each plane
    return sum(2 * math.ceil(x) - 1 for x in planes)


def sym(j: int, w: int, p: int) -> int:
    r = (j * w) % p
    return r - p if 2 * r > p else r


def k_a_oracle(p: int, weights: tuple[int, ...], j: int) -> Fraction:
    la = [sym(j, w, p) for w in weights]
    pos = len([w for w in la if w > 0])
    neg = len([w for w in la if w < 0])
    return neg - pos + 1 + Fraction(2 * sum(la), p)


def rotation_matrix(planes: list[Fraction]) -> np.ndarray:
    d = len(planes)
    P = np.zeros((2 * d, 2 * d))
    for i, x in enumerate(planes):
        th = 2 * math.pi * float(x)
        P[2 * i:2 * i + 2, 2 * i:2 * i + 2] = [[math.cos(th), -math.sin(th)],
                                               [math.sin(th), math.cos(th)]]
    return P


def eigen_multiplicities(P: np.ndarray, angle: Fraction, tol: float = 1e-7) -> tuple[int, int]:
    """(geometric, algebraic) multiplicity of e^{2 pi i angle} for a real matrix P."""
    z = complex(math.cos(2 * math.pi * float(angle)), math.sin(2 * math.pi * float(angle)))
    eta = int(np.sum(np.abs(np.linalg.eigvals(P) - z) < tol))
    sv = np.linalg.svd(P - z * np.eye(P.shape[0]), compute_uv=False)
    nu = int(np.sum(sv < tol))
    return nu, eta
