"""Location of polynomial zeros on the unit torus and in the open bidisk.

Torus classification: the zero set of p on the two-torus is empty, finite,
or infinite.  The decision procedure works with the reflection p~ (same
modulus as p on the torus):

1. monomial factors z1^a z2^b never vanish on the torus and are stripped;
2. a polynomial in one variable only has zeros {rho} x T per circle root,
   so the verdict is Empty or Infinite outright;
3. p proportional to p~ signals a curve of torus zeros (Infinite);
4. otherwise every torus zero is a common root of p and p~, so its first
   coordinate is a unit-circle root of Res_z2(p, p~); slicing p there and
   taking unit-circle roots in z2 yields finitely many verified candidates.

The bidisk search is an honest heuristic: a coarse-to-fine polar grid over
the closed polydisk of radius 1-delta followed by damped Gauss-Newton on
the modulus.  It reports either a certified zero (residual below tolerance,
point inside the search region) or the smallest modulus seen.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Optional

import numpy as np

from ._kernels import eval_points
from .errors import DegenerateInputError, InconclusiveError
from .operators import reflect, slice_z1
from .poly import Poly1, Poly2, coeff_norm, proportional
from .resultant import INCONCLUSIVE_BAND, resultant_z2_detail
from .rootfind import roots_on_unit_circle

__all__ = [
    "TolConfig",
    "TorusZeroClass",
    "torus_zeros",
    "GridConfig",
    "BidiskZeroReport",
    "bidisk_zero_search",
]


@dataclass(frozen=True)
class TolConfig:
    circle_tol: float = 1e-6
    resid_tol: float = 1e-8
    proportional_tol: float = 1e-8
    cluster_tol: float = 1e-5


@dataclass(frozen=True)
class TorusZeroClass:
    """Classification of Z(p) on the unit torus.

    kind "finite" carries the points; kind "infinite" carries a witness for
    why the set is infinite:

    * proportional_reflection: p~ = lambda p, so |p| vanishes on a curve
      (data: lambda);
    * vanishing_resultant: p and p~ share a z2-involving factor
      (Bezout: two curves with infinitely many common points share one);
    * univariate_circle_roots: p depends on one variable with roots on the
      circle, each giving a line of torus zeros (data: the roots);
    * line_factor: a slice of p at a circle root vanished identically, so
      p contains the line z_i = rho (data: rho).
    """

    kind: Literal["empty", "finite", "infinite"]
    points: tuple[tuple[complex, complex], ...] = ()
    witness: Optional[str] = None
    witness_data: Optional[object] = None

    def to_json_dict(self) -> dict:
        if self.kind == "empty":
            return {"torus": "empty"}
        if self.kind == "finite":
            return {
                "torus": "finite",
                "points": [[z1.real, z1.imag, z2.real, z2.imag] for z1, z2 in self.points],
            }
        out = {"torus": "infinite", "witness": self.witness}
        if self.witness == "proportional_reflection":
            lam = complex(self.witness_data)
            out["lambda"] = [lam.real, lam.imag]
        elif self.witness == "univariate_circle_roots":
            variable, roots = self.witness_data
            out["variable"] = variable
            out["roots"] = [[r.real, r.imag] for r in roots]
        elif self.witness == "line_factor":
            variable, value = self.witness_data
            out["variable"] = variable
            out["value"] = [value.real, value.imag]
        return out


def _strip_monomial(p: Poly2) -> Poly2:
    """Divide out the largest monomial factor z1^a z2^b."""
    c = p.coeffs
    rows = np.nonzero(c.any(axis=1))[0]
    cols = np.nonzero(c.any(axis=0))[0]
    a, b = rows[0], cols[0]
    if a == 0 and b == 0:
        return p
    return Poly2(c[a:, b:])


def _univariate_torus(coeffs: Poly1, variable: str, tol: TolConfig) -> TorusZeroClass:
    roots = roots_on_unit_circle(
        coeffs,
        circle_tol=tol.circle_tol,
        cluster_tol=tol.cluster_tol,
    )
    if not roots:
        return TorusZeroClass("empty")
    return TorusZeroClass(
        "infinite",
        witness="univariate_circle_roots",
        witness_data=(variable, tuple(roots)),
    )


def torus_zeros(p: Poly2, tol: TolConfig = TolConfig()) -> TorusZeroClass:
    """Classify the zero set of p on the unit torus.

    Raises InconclusiveError when the resultant's zero test lands too close
    to its threshold to commit, and DegenerateInputError for constant p.
    """
    if p.is_zero:
        raise DegenerateInputError("the zero polynomial vanishes everywhere")
    core = _strip_monomial(p)
    m, n = core.bidegree
    if m == 0 and n == 0:
        # a pure monomial times a constant never vanishes on the torus
        return TorusZeroClass("empty")
    if n == 0:
        return _univariate_torus(Poly1(core.coeffs[:, 0]), "z1", tol)
    if m == 0:
        return _univariate_torus(Poly1(core.coeffs[0, :]), "z2", tol)

    mirror = reflect(core)
    lam = proportional(core, mirror, tol.proportional_tol)
    if lam is not None:
        return TorusZeroClass("infinite", witness="proportional_reflection", witness_data=lam)

    detail = resultant_z2_detail(core, mirror)
    if detail.is_zero:
        return TorusZeroClass("infinite", witness="vanishing_resultant")
    if detail.near_threshold:
        raise InconclusiveError(
            "torus classification refused: resultant within "
            f"{INCONCLUSIVE_BAND:.0f}x of its zero threshold"
        )
    res = Poly1(_trim_noise(detail.coeffs, detail.max_coeff))
    scale = coeff_norm(core)
    points: list[tuple[complex, complex]] = []
    for rho in roots_on_unit_circle(
        res, circle_tol=tol.circle_tol, cluster_tol=tol.cluster_tol
    ):
        sl = slice_z1(core, rho)
        if np.abs(sl.coeffs).max() <= tol.resid_tol * scale:
            return TorusZeroClass(
                "infinite", witness="line_factor", witness_data=("z1", rho)
            )
        for sigma in roots_on_unit_circle(
            sl, circle_tol=tol.circle_tol, cluster_tol=tol.cluster_tol
        ):
            if abs(core.evaluate(rho, sigma)) <= tol.resid_tol * scale:
                points.append((rho, sigma))
    if not points:
        return TorusZeroClass("empty")
    points.sort(key=lambda zz: (np.angle(zz[0]) % (2.0 * np.pi), np.angle(zz[1]) % (2.0 * np.pi)))
    return TorusZeroClass("finite", points=tuple(points))


def _trim_noise(coeffs: np.ndarray, max_coeff: float) -> np.ndarray:
    out = coeffs.copy()
    out[np.abs(out) <= 1e-10 * max_coeff] = 0.0
    return out


# ---------------------------------------------------------------------------
# bidisk search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GridConfig:
    delta: float = 1e-3
    radii: int = 64
    angles: int = 256
    coarse_radii: int = 16
    coarse_angles: int = 64
    refine_top: int = 48
    newton_steps: int = 60
    resid_tol: float = 1e-8

    def to_json_dict(self) -> dict:
        return {
            "delta": self.delta,
            "radii": self.radii,
            "angles": self.angles,
            "coarse_radii": self.coarse_radii,
            "coarse_angles": self.coarse_angles,
        }


@dataclass(frozen=True)
class BidiskZeroReport:
    kind: Literal["zero_found", "none_found_heuristic"]
    point: Optional[tuple[complex, complex]]
    min_modulus: float
    grid: GridConfig = field(default_factory=GridConfig)

    def to_json_dict(self) -> dict:
        if self.kind == "zero_found":
            z1, z2 = self.point
            return {
                "bidisk": "zero_found",
                "point": [z1.real, z1.imag, z2.real, z2.imag],
                "modulus": self.min_modulus,
            }
        return {
            "bidisk": "none_found_heuristic",
            "min_modulus": self.min_modulus,
            "grid": self.grid.to_json_dict(),
        }


def _polar_points(rmax: float, nr: int, na: int) -> np.ndarray:
    radii = np.linspace(0.0, rmax, nr)
    angles = np.linspace(0.0, 2.0 * np.pi, na, endpoint=False)
    return (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()


def _topk_product(p: Poly2, pts1: np.ndarray, pts2: np.ndarray, k: int, chunk: int = 64):
    """The k smallest |p| values over the product grid pts1 x pts2.

    Returns a list of (value, z1, z2) sorted by value.
    """
    n2 = pts2.size
    found: list[tuple[float, complex, complex]] = []
    for start in range(0, pts1.size, chunk):
        block = pts1[start : start + chunk]
        z1 = np.ascontiguousarray(np.broadcast_to(block[:, None], (block.size, n2)).ravel())
        z2 = np.ascontiguousarray(np.broadcast_to(pts2[None, :], (block.size, n2)).ravel())
        out = np.empty(z1.size, dtype=np.complex128)
        eval_points(p.coeffs, z1, z2, out)
        vals = np.abs(out)
        take = min(k, vals.size)
        sel = np.argpartition(vals, take - 1)[:take]
        found.extend((float(vals[s]), complex(z1[s]), complex(z2[s])) for s in sel)
    found.sort(key=lambda t: t[0])
    return found[:k]


def _distinct_candidates(tops, min_sep: float, limit: int):
    """Thin a value-sorted candidate list to representatives of separate basins."""
    kept = []
    for val, z1, z2 in tops:
        if any(abs(z1 - a) < min_sep and abs(z2 - b) < min_sep for _, a, b in kept):
            continue
        kept.append((val, z1, z2))
        if len(kept) >= limit:
            break
    return kept


def _local_cloud(centre: complex, rstep: float, astep: float, rmax: float) -> np.ndarray:
    """Small polar neighbourhood of a point, clipped to radius rmax."""
    r0 = abs(centre)
    a0 = np.angle(centre)
    rs = np.clip(np.linspace(r0 - rstep, r0 + rstep, 7), 0.0, rmax)
    as_ = np.linspace(a0 - astep, a0 + astep, 9)
    return (rs[:, None] * np.exp(1j * as_)[None, :]).ravel()


def _zoom(p: Poly2, z1c: complex, z2c: complex, rstep: float, astep: float, rmax: float):
    cloud1 = _local_cloud(z1c, rstep, astep, rmax)
    cloud2 = _local_cloud(z2c, rstep, astep, rmax)
    best = _topk_product(p, cloud1, cloud2, 1)[0]
    return best[1], best[2], best[0]


def _gauss_newton(p: Poly2, z1: complex, z2: complex, rmax: float, steps: int):
    d1 = p.derivative(1)
    d2p = p.derivative(2)
    z = np.array([z1, z2], dtype=np.complex128)
    for _ in range(steps):
        val = p.evaluate(z[0], z[1])
        if val == 0:
            break
        g = np.array([d1.evaluate(z[0], z[1]), d2p.evaluate(z[0], z[1])], dtype=np.complex128)
        g2 = float(np.real(np.vdot(g, g)))
        if g2 < 1e-300:
            break
        step = np.conj(g) * (val / g2)
        damp = 1.0
        base = abs(val)
        for _ in range(20):
            trial = z - damp * step
            trial = np.array(
                [t if abs(t) <= rmax else t * (rmax / abs(t)) for t in trial],
                dtype=np.complex128,
            )
            if abs(p.evaluate(trial[0], trial[1])) < base:
                z = trial
                break
            damp *= 0.5
        else:
            break
    return complex(z[0]), complex(z[1]), abs(p.evaluate(z[0], z[1]))


def bidisk_zero_search(p: Poly2, grid: GridConfig = GridConfig()) -> BidiskZeroReport:
    """Heuristic zero search on the closed polydisk of radius 1 - delta.

    "zero_found" is certified (modulus below resid_tol times the coefficient
    norm at a point inside the region); "none_found_heuristic" only reports
    the smallest modulus encountered and is not a proof of nonvanishing.
    """
    if p.is_zero:
        raise DegenerateInputError("the zero polynomial vanishes everywhere")
    rmax = 1.0 - grid.delta
    scale = coeff_norm(p)
    tol = grid.resid_tol * scale

    coarse = _polar_points(rmax, grid.coarse_radii, grid.coarse_angles)
    rstep = rmax / max(grid.coarse_radii - 1, 1)
    astep = 2.0 * np.pi / grid.coarse_angles
    fine_r = rmax / max(grid.radii - 1, 1)
    fine_a = 2.0 * np.pi / grid.angles

    tops = _topk_product(p, coarse, coarse, grid.refine_top)
    starts = _distinct_candidates(tops, min_sep=2.5 * rstep, limit=8)

    best = tops[0][0]
    best_pt = (tops[0][1], tops[0][2])
    for val, z1c, z2c in starts:
        z1c, z2c, val = _zoom(p, z1c, z2c, rstep, astep, rmax)
        z1c, z2c, val = _zoom(p, z1c, z2c, fine_r, fine_a, rmax)
        z1n, z2n, vn = _gauss_newton(p, complex(z1c), complex(z2c), rmax, grid.newton_steps)
        if vn < val:
            z1c, z2c, val = z1n, z2n, vn
        if val < best:
            best = val
            best_pt = (z1c, z2c)

    z1b, z2b = best_pt
    if best <= tol and abs(z1b) <= rmax + 1e-12 and abs(z2b) <= rmax + 1e-12:
        return BidiskZeroReport("zero_found", (complex(z1b), complex(z2b)), best, grid)
    return BidiskZeroReport("none_found_heuristic", None, best, grid)
