"""Polynomial roots on the unit circle via Aberth simultaneous iteration.

All roots are located at once: the Aberth update corrects each estimate by
a Newton step repelled from the other estimates, which keeps clustered and
multiple roots (the typical case for resultants of torus-zero polynomials,
e.g. (z-1)^2) from collapsing onto each other.  Estimates belonging to one
multiple root end up in a tight cluster around it; the cluster is collapsed
to its mean before reporting.

Only roots within ``circle_tol`` of the unit circle are returned.
"""

from __future__ import annotations

import numpy as np

from .errors import ConvergenceError, DegenerateInputError
from .poly import Poly1

__all__ = ["aberth_roots", "roots_on_unit_circle"]

_STOP_EPS = 1e-13
_STEP_EPS = 1e-14


def _horner_many(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    acc = np.zeros_like(z)
    for coeff in c[::-1]:
        acc = acc * z + coeff
    return acc


def _residual_bound(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    """sum_k |c_k| |z|^k, the scale against which |p(z)| counts as zero."""
    return _horner_many(np.abs(c).astype(np.complex128), np.abs(z).astype(np.complex128)).real


def aberth_roots(r: Poly1, max_iter: int = 200) -> np.ndarray:
    """All complex roots of r, multiplicities included.

    Raises ConvergenceError (carrying the last iterates) when some estimate
    still has a residual above the backward-error scale after max_iter
    sweeps.
    """
    if r.is_zero:
        raise DegenerateInputError("root finding needs a nonzero polynomial")
    c = r.coeffs
    # roots at the origin come off directly
    lead_zeros = 0
    while c[lead_zeros] == 0:
        lead_zeros += 1
    c = c[lead_zeros:]
    deg = c.size - 1
    zeros_at_origin = np.zeros(lead_zeros, dtype=np.complex128)
    if deg == 0:
        return zeros_at_origin

    cp = c[1:] * np.arange(1, deg + 1)

    # initial guesses on a slightly perturbed circle around a coefficient
    # balance radius
    r0 = (abs(c[0]) / abs(c[-1])) ** (1.0 / deg)
    r0 = min(max(r0, 0.25), 4.0)
    idx = np.arange(deg)
    theta = 2.0 * np.pi * (idx + 0.5) / deg + 0.39
    radii = r0 * (1.0 + 0.08 * np.sin(2.7 * idx + 1.0))
    z = radii * np.exp(1j * theta)

    for _ in range(max_iter):
        pv = _horner_many(c, z)
        bound = _residual_bound(c, z)
        if np.all(np.abs(pv) <= _STOP_EPS * bound):
            break
        dv = _horner_many(cp, z)
        dv = np.where(dv == 0, 1e-300, dv)
        newton = pv / dv
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        repel = np.sum(1.0 / diff, axis=1) - 1.0  # remove the diagonal's 1/1
        denom = 1.0 - newton * repel
        denom = np.where(np.abs(denom) < 1e-300, 1e-300, denom)
        step = newton / denom
        z = z - step
        if np.max(np.abs(step)) <= _STEP_EPS * np.max(1.0 + np.abs(z)):
            break

    pv = _horner_many(c, z)
    bound = _residual_bound(c, z)
    bad = np.abs(pv) > 1e6 * _STOP_EPS * np.maximum(bound, 1e-300)
    if np.any(bad):
        raise ConvergenceError(
            f"{int(bad.sum())} root estimate(s) failed to converge", iterates=z.copy()
        )
    return np.concatenate([zeros_at_origin, z])


def _collapse_clusters(points: np.ndarray, radius: float) -> np.ndarray:
    """Greedy merge of points closer than radius; clusters become their mean."""
    remaining = list(points)
    out = []
    while remaining:
        seed = remaining.pop(0)
        cluster = [seed]
        changed = True
        while changed:
            changed = False
            keep = []
            centre = np.mean(cluster)
            for q in remaining:
                if abs(q - centre) <= radius:
                    cluster.append(q)
                    changed = True
                else:
                    keep.append(q)
            remaining = keep
        out.append(np.mean(cluster))
    return np.asarray(out, dtype=np.complex128)


def roots_on_unit_circle(
    r: Poly1,
    circle_tol: float = 1e-6,
    resid_tol: float = 1e-10,
    cluster_tol: float = 1e-5,
    max_iter: int = 200,
) -> list[complex]:
    """Distinct roots rho of r with | |rho| - 1 | <= circle_tol.

    Each reported root satisfies |r(rho)| <= resid_tol * ||r||_coeff after
    cluster collapsing.  Degree-zero polynomials have no roots.
    """
    if r.is_zero:
        raise DegenerateInputError("root finding needs a nonzero polynomial")
    if r.degree == 0:
        return []
    roots = aberth_roots(r, max_iter=max_iter)
    near = roots[np.abs(np.abs(roots) - 1.0) <= circle_tol]
    if near.size == 0:
        return []
    merged = _collapse_clusters(near, cluster_tol)
    scale = float(np.linalg.norm(r.coeffs))
    vals = np.abs(_horner_many(r.coeffs, merged))
    good = merged[vals <= resid_tol * scale]
    order = np.argsort(np.angle(good) % (2.0 * np.pi))
    return [complex(v) for v in good[order]]
