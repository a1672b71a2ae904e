"""Optimal polynomial approximants to 1/f in weighted coefficient norms.

For a polynomial f and a finite monomial basis e_1..e_N, the optimal
approximant p minimizes ||p*f - 1|| over span{e_i}.  The normal equations
G c = v with G[i,j] = <e_j f, e_i f> and v[i] = <1, e_i f> are solved by a
Cholesky factorization; badly conditioned systems fall back to a QR least
squares solve on the weighted coefficient matrix.  The reported distance is
always recomputed from the reconstructed residual p*f - 1 and must agree
with the solver's 1 - Re(v^H c) to one part in 1e9, which catches silent
cancellation.

``distance_scan`` produces the distance sequence over nested bases in one
pass by factoring the largest Gram matrix once; in graded order each
smaller basis is a prefix, so its Cholesky factor is the leading block.

``closed_form_distance`` carries the two families with exact distance
formulas (f = 1 - z1 and f = 1 - z1*z2), used as oracles in the tests.

``decay_diagnostic`` fits decay models to a distance-squared sequence and
labels it Decaying, Plateau, or Inconclusive.  The labels are advisory:
they corroborate, never replace, the zero-set classification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional, Sequence

import numpy as np
from scipy.optimize import least_squares
from scipy.special import zeta

from ._kernels import gram_fill
from .errors import DegenerateInputError, NumericalError
from .poly import Poly2
from .spaces import SpaceSpec, norm_squared, weight_grid

__all__ = [
    "BasisSpec",
    "GramSystem",
    "ApproximantResult",
    "basis_monomials",
    "assemble_gram",
    "solve_normal_equations",
    "distance_scan",
    "ScanRow",
    "closed_form_distance",
    "DecayConfig",
    "DecayVerdict",
    "decay_diagnostic",
    "evaluation_bound_certificate",
]

AGREE_TOL = 1e-9
PIVOT_REL_TOL = 1e-12
CONDITION_LIMIT = 1e12


# ---------------------------------------------------------------------------
# bases
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BasisSpec:
    """Monomial basis shape: total degree <= n, a bidegree box, or the
    diagonal powers (z1*z2)^m for m <= n."""

    kind: Literal["total", "box", "diagonal"]
    n: int
    n2: int = 0

    def __post_init__(self):
        if self.kind not in ("total", "box", "diagonal"):
            raise DegenerateInputError(f"unknown basis kind {self.kind!r}")
        if self.n < 0 or self.n2 < 0:
            raise DegenerateInputError("basis degree bounds must be nonnegative")

    @staticmethod
    def total(n: int) -> "BasisSpec":
        return BasisSpec("total", n)

    @staticmethod
    def box(n1: int, n2: int) -> "BasisSpec":
        return BasisSpec("box", n1, n2)

    @staticmethod
    def diagonal(n: int) -> "BasisSpec":
        return BasisSpec("diagonal", n)


def basis_monomials(spec: BasisSpec) -> list[tuple[int, int]]:
    """Monomial exponents in graded lexicographic order.

    Graded order makes the basis for a smaller bound a prefix of the basis
    for a larger one (within the same kind), which distance_scan exploits.
    """
    if spec.kind == "total":
        out = [
            (k, d - k)
            for d in range(spec.n + 1)
            for k in range(d + 1)
        ]
    elif spec.kind == "box":
        out = sorted(
            ((k, l) for k in range(spec.n + 1) for l in range(spec.n2 + 1)),
            key=lambda kl: (kl[0] + kl[1], kl[0]),
        )
    else:
        out = [(m, m) for m in range(spec.n + 1)]
    return out


# ---------------------------------------------------------------------------
# Gram assembly and solve
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GramSystem:
    f: Poly2
    space: SpaceSpec
    basis_spec: BasisSpec
    basis: list[tuple[int, int]]
    matrix: np.ndarray
    rhs: np.ndarray


@dataclass(frozen=True)
class ApproximantResult:
    p: Poly2
    distance_squared: float
    residual: Poly2
    basis_spec: BasisSpec
    method: str = "cholesky"

    @property
    def distance(self) -> float:
        return float(np.sqrt(self.distance_squared))


def _assemble(f: Poly2, basis: list[tuple[int, int]], space: SpaceSpec):
    if f.is_zero:
        raise DegenerateInputError("approximants to 1/f need a nonzero f")
    m, n = f.bidegree
    bk = np.array([k for k, _ in basis], dtype=np.int64)
    bl = np.array([l for _, l in basis], dtype=np.int64)
    fk, fl = np.nonzero(f.coeffs)
    fv = np.ascontiguousarray(f.coeffs[fk, fl])
    wtab = weight_grid(space, int(bk.max()) + m, int(bl.max()) + n)
    g = np.zeros((len(basis), len(basis)), dtype=np.complex128)
    gram_fill(bk, bl, fk.astype(np.int64), fl.astype(np.int64), fv, f.coeffs, wtab, g)
    v = np.zeros(len(basis), dtype=np.complex128)
    f00 = f[0, 0]
    for i, (k, l) in enumerate(basis):
        if k == 0 and l == 0:
            v[i] = np.conj(f00)
    return g, v


def assemble_gram(f: Poly2, spec: BasisSpec, space: SpaceSpec) -> GramSystem:
    basis = basis_monomials(spec)
    g, v = _assemble(f, basis, space)
    return GramSystem(f=f, space=space, basis_spec=spec, basis=basis, matrix=g, rhs=v)


def _poly_from_basis(basis: Sequence[tuple[int, int]], c: np.ndarray) -> Poly2:
    return Poly2.from_terms((k, l, c[i]) for i, (k, l) in enumerate(basis))


def _cholesky_factor(g: np.ndarray) -> np.ndarray:
    try:
        return np.linalg.cholesky(g)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"Gram matrix is not positive definite: {exc}") from exc


def _too_ill_conditioned(g: np.ndarray, low: np.ndarray) -> bool:
    """True when back substitution through this factor cannot be trusted.

    Either a pivot has collapsed relative to the trace or the squared pivot
    ratio exceeds the condition limit; both call for the least squares route.
    """
    pivots = np.real(np.diag(low)) ** 2
    trace = float(np.real(np.trace(g)))
    if pivots.min() < PIVOT_REL_TOL * trace:
        return True
    return bool(pivots.max() / pivots.min() > CONDITION_LIMIT)


def _solve_qr(f: Poly2, basis: Sequence[tuple[int, int]], space: SpaceSpec):
    """Least squares on the weighted coefficient matrix of p -> p*f.

    Returns (c, d2) where d2 is the squared least squares residual, which
    is the distance value along this route.
    """
    m, n = f.bidegree
    kmax = max(k for k, _ in basis) + m
    lmax = max(l for _, l in basis) + n
    w = weight_grid(space, kmax, lmax)
    sqw = np.sqrt(w).ravel()
    rows = (kmax + 1) * (lmax + 1)
    a = np.zeros((rows, len(basis)), dtype=np.complex128)
    for i, (k, l) in enumerate(basis):
        shifted = np.zeros((kmax + 1, lmax + 1), dtype=np.complex128)
        shifted[k : k + m + 1, l : l + n + 1] = f.coeffs
        a[:, i] = shifted.ravel()
    a *= sqw[:, None]
    t = np.zeros(rows, dtype=np.complex128)
    t[0] = sqw[0]  # the target 1 sits at exponent (0, 0)
    c, *_ = np.linalg.lstsq(a, t, rcond=None)
    d2 = float(np.linalg.norm(a @ c - t) ** 2)
    return c, d2


def _finalize(
    f: Poly2,
    space: SpaceSpec,
    basis: Sequence[tuple[int, int]],
    spec: BasisSpec,
    c: np.ndarray,
    d2_formula: float,
    method: str,
) -> ApproximantResult:
    p = _poly_from_basis(basis, c)
    residual = p * f - 1.0
    d2 = norm_squared(residual, space)
    if abs(d2 - d2_formula) > AGREE_TOL * max(1.0, abs(d2), abs(d2_formula)):
        raise NumericalError(
            "distance self-check failed: residual norm "
            f"{d2:.15e} vs solver value {d2_formula:.15e}"
        )
    d2 = min(max(d2, 0.0), 1.0)
    return ApproximantResult(
        p=p, distance_squared=d2, residual=residual, basis_spec=spec, method=method
    )


def solve_normal_equations(system: GramSystem) -> ApproximantResult:
    """Best approximant for the assembled system.

    The distance reported is the norm of the reconstructed residual; the
    solver's algebraic value serves as a cross-check only.
    """
    g, v = system.matrix, system.rhs
    low = _cholesky_factor(g)
    if _too_ill_conditioned(g, low):
        c, d2_formula = _solve_qr(system.f, system.basis, system.space)
        method = "qr"
    else:
        y = np.linalg.solve(low, v)
        c = np.linalg.solve(low.conj().T, y)
        method = "cholesky"
        d2_formula = 1.0 - float(np.real(np.vdot(v, c)))
    return _finalize(system.f, system.space, system.basis, system.basis_spec, c, d2_formula, method)


# ---------------------------------------------------------------------------
# distance sequences over nested bases
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScanRow:
    n: int
    basis_size: int
    distance_squared: float
    distance: float
    approximant: Optional[Poly2] = None


def distance_scan(
    f: Poly2,
    space: SpaceSpec,
    n_max: int,
    family: Literal["total", "diagonal"] = "total",
    keep_approximants: bool = False,
) -> list[ScanRow]:
    """Distances from 1 to the approximant spaces for n = 0..n_max.

    family picks the nested basis sequence: "total" for total degree <= n,
    "diagonal" for diagonal powers up to (z1*z2)^n.
    """
    if n_max < 0:
        raise DegenerateInputError("n_max must be nonnegative")
    if family == "total":
        full = BasisSpec.total(n_max)
        sizes = [(n + 1) * (n + 2) // 2 for n in range(n_max + 1)]
    elif family == "diagonal":
        full = BasisSpec.diagonal(n_max)
        sizes = [n + 1 for n in range(n_max + 1)]
    else:
        raise DegenerateInputError(f"unknown scan family {family!r}")
    system = assemble_gram(f, full, space)
    g, v, basis = system.matrix, system.rhs, system.basis
    low = _cholesky_factor(g)
    use_qr = _too_ill_conditioned(g, low)
    rows = []
    for n, size in enumerate(sizes):
        sub_basis = basis[:size]
        sub_spec = BasisSpec.total(n) if family == "total" else BasisSpec.diagonal(n)
        if use_qr:
            c, d2_formula = _solve_qr(f, sub_basis, space)
            method = "qr"
        else:
            lsub = low[:size, :size]
            y = np.linalg.solve(lsub, v[:size])
            c = np.linalg.solve(lsub.conj().T, y)
            method = "cholesky"
            d2_formula = 1.0 - float(np.real(np.vdot(v[:size], c)))
        result = _finalize(f, space, sub_basis, sub_spec, c, d2_formula, method)
        rows.append(
            ScanRow(
                n=n,
                basis_size=size,
                distance_squared=result.distance_squared,
                distance=result.distance,
                approximant=result.p if keep_approximants else None,
            )
        )
    return rows


# ---------------------------------------------------------------------------
# closed forms and certificates
# ---------------------------------------------------------------------------


def closed_form_distance(family: Literal["one_minus_z1", "one_minus_z1z2"], alpha: float, n: int) -> float:
    """Exact distance_squared for the two model polynomials.

    one_minus_z1:   d_n^2 = 1 / sum_{j=0}^{n+1} (j+1)^(-alpha)
    one_minus_z1z2: d_n^2 = 1 / sum_{m=0}^{n+1} (2m+1)^(-alpha)
                    (diagonal basis index n)

    Both follow from telescoping the residual orthogonality conditions:
    multiples of f shift coefficients along one line of the grid, so the
    optimal residual has coefficients proportional to the reciprocal
    weights along that line, normalized to hit -1 at the matching root.
    """
    if n < 0:
        raise DegenerateInputError("n must be nonnegative")
    j = np.arange(n + 2, dtype=np.float64)
    if family == "one_minus_z1":
        s = np.sum((j + 1.0) ** (-alpha))
    elif family == "one_minus_z1z2":
        s = np.sum((2.0 * j + 1.0) ** (-alpha))
    else:
        raise DegenerateInputError(f"no closed form for {family!r}")
    return float(1.0 / s)


def evaluation_bound_certificate(alpha: float, torus_zero: Optional[tuple[complex, complex]] = None) -> float:
    """Unconditional lower bound on every d_n when f vanishes on the torus.

    For alpha > 2 point evaluation at a torus point w is bounded on the
    space with norm constant sqrt(sum_j (j+1)^(1-alpha)) = sqrt(zeta(alpha-1)),
    so |p f - 1|(w) = 1 forces ||p f - 1|| >= 1/sqrt(zeta(alpha-1)).
    """
    if not alpha > 2.0:
        raise DegenerateInputError("the evaluation bound needs alpha > 2")
    if torus_zero is not None:
        w1, w2 = torus_zero
        if abs(abs(complex(w1)) - 1.0) > 1e-9 or abs(abs(complex(w2)) - 1.0) > 1e-9:
            raise DegenerateInputError("certificate point must lie on the unit torus")
    return float(1.0 / np.sqrt(zeta(alpha - 1.0)))


# ---------------------------------------------------------------------------
# decay diagnostics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DecayConfig:
    plateau_floor: float = 1e-3
    fit_tol: float = 5e-2
    drop_ratio: float = 0.5
    # a fitted positive limit is only believed when it accounts for most of
    # the final sequence value; log-slow decays otherwise masquerade as
    # plateaus over finite windows
    plateau_credibility: float = 0.8


@dataclass(frozen=True)
class DecayVerdict:
    label: Literal["decaying", "plateau", "inconclusive"]
    limit_estimate: Optional[float]
    fit_model: str
    fit_params: tuple[float, ...]
    fit_residual: float


def _rel_residual(data: np.ndarray, model_vals: np.ndarray) -> float:
    return float(np.linalg.norm(model_vals - data) / np.linalg.norm(data))


def _fit_log(n: np.ndarray, y: np.ndarray):
    def resid(theta):
        c, c0 = theta
        return c / np.log(n + c0) - y

    try:
        sol = least_squares(resid, x0=[y[0] * np.log(n[0] + 2.0), 2.0], bounds=([0.0, 1.05], [np.inf, 1e6]))
    except Exception:
        return None
    return ("c/log(n+c0)", tuple(sol.x), _rel_residual(y, resid(sol.x) + y))


def _fit_power(n: np.ndarray, y: np.ndarray):
    def resid(theta):
        c, beta = theta
        return c * n ** (-beta) - y

    try:
        sol = least_squares(resid, x0=[y[0], 0.5], bounds=([0.0, 1e-3], [np.inf, 20.0]))
    except Exception:
        return None
    return ("c*n^-beta", tuple(sol.x), _rel_residual(y, resid(sol.x) + y))


def _fit_plateau(n: np.ndarray, y: np.ndarray):
    def resid(theta):
        dinf, c, beta = theta
        return dinf + c * n ** (-beta) - y

    x0 = [max(y[-1] * 0.9, 1e-12), max(y[0] - y[-1], 1e-12), 0.7]
    try:
        sol = least_squares(
            resid, x0=x0, bounds=([0.0, 0.0, 1e-3], [np.inf, np.inf, 20.0])
        )
    except Exception:
        return None
    return ("dinf+c*n^-beta", tuple(sol.x), _rel_residual(y, resid(sol.x) + y))


def decay_diagnostic(ds: Sequence[float], config: DecayConfig = DecayConfig()) -> DecayVerdict:
    """Label a distance-squared sequence by its apparent asymptotics.

    The sequence must be non-increasing (up to 1e-10 slack) with at least 8
    entries.  Two zero-asymptote models and one positive-limit model are
    fitted; the positive limit is reported only when its fit is good and the
    limit is a credible floor for the observed tail.
    """
    y = np.asarray(ds, dtype=np.float64)
    if y.size < 8:
        raise DegenerateInputError("decay diagnostic needs at least 8 values")
    if np.any(np.diff(y) > 1e-10):
        raise DegenerateInputError("distance sequence must be non-increasing")
    if np.any(y <= 0):
        raise DegenerateInputError("distance sequence must be positive")
    n = np.arange(1.0, y.size + 1.0)  # shift away from zero for the models
    fits = [f for f in (_fit_log(n, y), _fit_power(n, y), _fit_plateau(n, y)) if f is not None]
    if not fits:
        return DecayVerdict("inconclusive", None, "none", (), float("inf"))
    zero_fits = [f for f in fits if f[0] != "dinf+c*n^-beta"]
    plateau_fit = next((f for f in fits if f[0] == "dinf+c*n^-beta"), None)
    best_zero = min(zero_fits, key=lambda f: f[2]) if zero_fits else None

    last = float(y[-1])
    first = float(y[0])
    if plateau_fit is not None:
        dinf = plateau_fit[1][0]
        if (
            plateau_fit[2] < config.fit_tol
            and dinf > config.plateau_floor
            and dinf >= config.plateau_credibility * last
        ):
            return DecayVerdict("plateau", float(dinf), plateau_fit[0], plateau_fit[1], plateau_fit[2])
    if best_zero is not None and best_zero[2] < config.fit_tol and last < first * config.drop_ratio:
        return DecayVerdict("decaying", 0.0, best_zero[0], best_zero[1], best_zero[2])
    ref = min(fits, key=lambda f: f[2])
    return DecayVerdict("inconclusive", None, ref[0], ref[1], ref[2])
