"""Numerical checks of the carrying-simplex existence/uniqueness hypotheses.

Each checker returns a :class:`ConditionResult` whose ``id`` matches the
report contract (C0..C5 core hypotheses, Eq3a/Eq3b column/row-sum bounds,
Eq4 the spectral-radius bound on the box (0, q], InvPos inverse positivity,
Model the family-specific closed-form criterion).  Continuum conditions are
sampled and honestly labeled ``pass_sampled``; a fail always carries a
witness that reproduces the violation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .cone import OrderInterval, as_state, support
from .models import (
    CompetitionModel,
    LeslieGowerModel,
    MayOsterModel,
    ModelEvaluationError,
    ModelParameterError,
    NeuralNetModel,
)

STRICT_TIE_MARGIN = 1e-12  # strict inequalities fail at 0; ties below this are reported


class SpectralConvergenceError(RuntimeError):
    """Power iteration did not settle; carries the best estimate and bracket."""

    def __init__(self, message: str, best: float, bracket: tuple[float, float]):
        super().__init__(message)
        self.best = best
        self.bracket = bracket


@dataclass
class ConditionResult:
    id: str
    verdict: str  # "pass" | "pass_sampled" | "fail" | "inconclusive"
    worst: float | None = None
    witness: object = None
    samples: int = 0
    seed: int | None = None
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.verdict in ("pass", "pass_sampled")

    def to_record(self) -> dict:
        record = {
            "id": self.id,
            "verdict": self.verdict,
            "worst": _jsonable(self.worst),
            "witness": _jsonable(self.witness),
            "samples": self.samples,
            "seed": self.seed,
        }
        if self.note:
            record["note"] = self.note
        return record


@dataclass
class CriteriaReport:
    conditions: list[ConditionResult]
    seed: int
    metadata: dict = field(default_factory=dict)

    def __getitem__(self, cond_id: str) -> ConditionResult:
        for c in self.conditions:
            if c.id == cond_id:
                return c
        raise KeyError(cond_id)

    @property
    def any_fail(self) -> bool:
        return any(c.verdict == "fail" for c in self.conditions)

    @property
    def any_inconclusive(self) -> bool:
        return any(c.verdict == "inconclusive" for c in self.conditions)

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.conditions)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "metadata": _jsonable(self.metadata),
            "conditions": [c.to_record() for c in self.conditions],
        }


def _jsonable(obj):
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


# ---------------------------------------------------------------------------
# competition matrix and spectral radius
# ---------------------------------------------------------------------------


def competition_matrix(model: CompetitionModel, x) -> np.ndarray:
    """M(x) with entries -(x_i / G_i(x)) * dG_i/dx_j; broadcasts over batches.

    Defined only where every growth factor is positive; then
    T'(x) = diag(G(x)) (I - M(x)).
    """
    x = np.asarray(x, dtype=float)
    g = model.growth(x)
    if np.any(g <= 0.0) or not np.all(np.isfinite(g)):
        raise ValueError("competition matrix undefined (nonpositive growth factor)")
    gp = model.growth_jacobian(x)
    return -(x / g)[..., :, None] * gp


def char_poly_coefficients(M: np.ndarray) -> np.ndarray:
    """Characteristic polynomial coefficients by the Faddeev-LeVerrier recursion.

    Returns ``c`` with ``c[0] = 1`` so the polynomial is
    sum_k c[k] * lambda^(n-k); no eigendecomposition is involved.
    """
    M = np.asarray(M, dtype=float)
    n = M.shape[0]
    coeffs = np.empty(n + 1)
    coeffs[0] = 1.0
    aux = M.copy()
    coeffs[1] = -np.trace(aux)
    for k in range(2, n + 1):
        aux = M @ (aux + coeffs[k - 1] * np.eye(n))
        coeffs[k] = -np.trace(aux) / k
    return coeffs


def spectral_radius_charpoly(M: np.ndarray) -> float:
    """Largest root modulus of the characteristic polynomial (companion roots)."""
    M = _check_square(M)
    if M.shape[0] == 1:
        return abs(float(M[0, 0]))
    roots = np.roots(char_poly_coefficients(M))
    return float(np.max(np.abs(roots)))


def power_iteration(
    M: np.ndarray, tol: float = 1e-12, max_iter: int = 10_000
) -> tuple[float, np.ndarray, bool]:
    """Dominant eigenvalue of an entrywise-nonnegative matrix.

    Iterates with the shift M + I, which makes the dominant eigenvalue of a
    nonnegative matrix strictly dominant in modulus, and stops on Rayleigh
    quotient drift below ``tol``.  Returns (rho, vector, converged).
    """
    M = _check_square(M)
    if np.any(M < 0.0):
        raise ValueError("power iteration requires an entrywise-nonnegative matrix")
    n = M.shape[0]
    v = np.full(n, 1.0 / n)
    lam = float(v @ (M @ v) / (v @ v))
    for _ in range(max_iter):
        w = M @ v + v  # shifted multiply, (M + I) v
        norm = float(np.linalg.norm(w))
        if norm == 0.0:
            return 0.0, v, True
        v = w / norm
        lam_new = float(v @ (M @ v) / (v @ v))
        drift = abs(lam_new - lam)
        lam = lam_new
        if drift < tol * max(1.0, abs(lam)):
            return lam, v, True
    return lam, v, False


def spectral_radius(M: np.ndarray, tol: float = 1e-12, max_iter: int = 10_000) -> float:
    """Spectral radius rho(M).

    Small matrices (n <= 4) go through the characteristic polynomial;
    larger nonnegative matrices use shifted power iteration (their dominant
    eigenvalue is real and equals the radius); anything else falls back to a
    dense eigensolve.
    """
    M = _check_square(M)
    n = M.shape[0]
    if n <= 4:
        return spectral_radius_charpoly(M)
    if np.all(M >= 0.0):
        rho, _, converged = power_iteration(M, tol=tol, max_iter=max_iter)
        if not converged:
            raise SpectralConvergenceError(
                f"power iteration did not converge in {max_iter} iterations",
                best=rho,
                bracket=(rho - tol * max(1.0, rho), rho + tol * max(1.0, rho)),
            )
        return rho
    return float(np.max(np.abs(np.linalg.eigvals(M))))


def _check_square(M) -> np.ndarray:
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix has non-finite entries")
    return M


def gershgorin_row_check(model: CompetitionModel, x) -> bool:
    """True iff every row sum of M(x) is < 1 (sum over j of M_ij)."""
    M = competition_matrix(model, as_state(x, model.n))
    return bool(np.all(M.sum(axis=1) < 1.0))


def gershgorin_col_check(model: CompetitionModel, x) -> bool:
    """True iff every column sum of M(x) is < 1 (sum over i of M_ij)."""
    M = competition_matrix(model, as_state(x, model.n))
    return bool(np.all(M.sum(axis=0) < 1.0))


# ---------------------------------------------------------------------------
# sampling helpers
# ---------------------------------------------------------------------------


def default_region(q: np.ndarray, factor: float = 1.5) -> OrderInterval:
    """The standing enclosure [0, 1.5 q] of the global attractor."""
    return OrderInterval(np.zeros_like(q), factor * np.asarray(q, dtype=float))


def _region_samples(
    region: OrderInterval,
    samples: int,
    rng: np.random.Generator,
    include_origin: bool = False,
) -> np.ndarray:
    """Box samples plus points on every axis segment (and optionally 0)."""
    n = region.n
    n_axis = max(1, samples // (5 * n)) if n > 1 else max(1, samples // 5)
    n_box = max(0, samples - n * n_axis - (1 if include_origin else 0))
    parts = [region.sample(rng, n_box)]
    for i in range(n):
        t = rng.random(n_axis)
        axis_pts = np.zeros((n_axis, n))
        axis_pts[:, i] = region.lower[i] + (0.01 + 0.99 * t) * (
            region.upper[i] - region.lower[i]
        )
        parts.append(axis_pts)
    if include_origin:
        parts.append(np.zeros((1, n)))
    return np.vstack(parts)


def _grid_points(q: np.ndarray, resolution: int) -> np.ndarray:
    """Regular grid over (0, q]: k * q / m per axis, k = 1..m."""
    axes = [q_i * np.arange(1, resolution + 1) / resolution for q_i in q]
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=-1)


# ---------------------------------------------------------------------------
# condition checkers
# ---------------------------------------------------------------------------


def check_c0(model: CompetitionModel) -> ConditionResult:
    """Origin repulsion: every growth factor at 0 exceeds 1.

    The map Jacobian at the origin is diag(G(0)), so these values are also
    its eigenvalues; all > 1 is the repellor evidence reported.
    """
    g0 = model.growth(np.zeros(model.n))
    worst = float(np.min(g0))
    witness = {"growth_at_origin": g0, "origin_jacobian_eigenvalues": g0}
    if worst > 1.0:
        return ConditionResult("C0", "pass", worst=worst, witness=witness)
    i = int(np.argmin(g0))
    witness["i"] = i + 1
    return ConditionResult(
        "C0",
        "fail",
        worst=worst,
        witness=witness,
        note=f"G_{i + 1}(0) = {worst} is not > 1",
    )


def check_attractor_bound(
    model: CompetitionModel, q: np.ndarray, steps: int = 200
) -> ConditionResult:
    """Empirical boundedness: the orbit of 2q enters [0, 1.1 q].

    This stands in for the global-attractor hypothesis, which is implied by
    the retrotone and axial conditions but is not directly certifiable by
    sampling.
    """
    x = 2.0 * q
    bound = 1.1 * q
    escape = 10.0 * np.max(q)
    for k in range(1, steps + 1):
        x = model.step(x)
        if np.any(x > escape):
            return ConditionResult(
                "C1",
                "fail",
                worst=float(np.max(x)),
                witness={"step": k, "x": x},
                samples=k,
                note="orbit escaped the evaluation box",
            )
        if np.all(x <= bound):
            return ConditionResult(
                "C1",
                "pass_sampled",
                worst=float(np.max(x / np.where(q > 0, q, 1.0))),
                witness={"entered_at_step": k, "x": x},
                samples=k,
            )
    return ConditionResult(
        "C1",
        "fail",
        worst=float(np.max(x / np.where(q > 0, q, 1.0))),
        witness={"step": steps, "x": x},
        samples=steps,
        note=f"orbit from 2q did not enter [0, 1.1q] within {steps} steps",
    )


def check_sublinearity(
    model: CompetitionModel,
    region: OrderInterval | None = None,
    samples: int = 10_000,
    seed: int = 42,
) -> ConditionResult:
    """Decreasing returns to scale: lambda T(x) strictly below T(lambda x).

    Strict inequality is required on the support of x (off-support
    coordinates are identically zero on both sides); equality counts as a
    failure, margins below 1e-12 are counted as near-ties.
    """
    rng = np.random.default_rng(seed)
    if region is None:
        region = default_region(model.verified_axial_fixed_points())
    pts = _region_samples(region, samples, rng)
    keep = pts.sum(axis=1) > 0.0
    pts = pts[keep]
    lam = np.clip(rng.random(pts.shape[0]) * (1.0 - 1e-6), 1e-9, None)

    lhs = lam[:, None] * model.step(pts)
    rhs = model.step(lam[:, None] * pts)
    diff = rhs - lhs
    on_support = pts > 0.0
    margins = np.where(on_support, diff, np.inf).min(axis=1)

    worst_idx = int(np.argmin(margins))
    worst = float(margins[worst_idx])
    near_ties = int(np.count_nonzero((margins > 0.0) & (margins < STRICT_TIE_MARGIN)))
    note = f"near-ties (< {STRICT_TIE_MARGIN:g}): {near_ties}" if near_ties else ""
    if worst <= 0.0:
        return ConditionResult(
            "C2",
            "fail",
            worst=worst,
            witness={"x": pts[worst_idx], "lambda": float(lam[worst_idx])},
            samples=int(pts.shape[0]),
            seed=seed,
            note=note,
        )
    return ConditionResult(
        "C2",
        "pass_sampled",
        worst=worst,
        witness={"x": pts[worst_idx], "lambda": float(lam[worst_idx])},
        samples=int(pts.shape[0]),
        seed=seed,
        note=note,
    )


def check_retrotone(
    model: CompetitionModel,
    region: OrderInterval | None = None,
    samples: int = 10_000,
    seed: int = 42,
    min_accepted: int = 100,
) -> ConditionResult:
    """Backward monotonicity: T(x) majorizing T(y) forces x to strictly majorize y.

    Pairs are rejection-sampled from a common facet closure until T(x) > T(y)
    in the cone order; the accepted pairs are then checked.
    """
    rng = np.random.default_rng(seed)
    if region is None:
        region = default_region(model.verified_axial_fixed_points())
    n = region.n

    xs = region.sample(rng, samples)
    ys = region.sample(rng, samples)
    # push a share of the pairs onto common proper facets
    facet_share = rng.random(samples) < 0.3
    if n > 1:
        masks = rng.random((samples, n)) < 0.5
        masks[~facet_share] = True
        empty = ~masks.any(axis=1)
        masks[empty] = True
        xs = np.where(masks, xs, 0.0)
        ys = np.where(masks, ys, 0.0)

    tx = model.step(xs)
    ty = model.step(ys)
    accepted = np.all(tx >= ty, axis=1) & np.any(tx > ty, axis=1)
    xs, ys = xs[accepted], ys[accepted]
    n_acc = int(xs.shape[0])
    if n_acc < min_accepted:
        return ConditionResult(
            "C3",
            "inconclusive",
            samples=n_acc,
            seed=seed,
            note=f"only {n_acc} pairs satisfied the majorization filter "
            f"(need {min_accepted})",
        )

    diffs = xs - ys
    strict_margin = np.where(xs > 0.0, diffs, np.inf).min(axis=1)
    dominated = np.all(diffs >= 0.0, axis=1)
    violated = (strict_margin <= 0.0) | ~dominated
    order_margin = diffs.min(axis=1)
    margins = np.minimum(strict_margin, np.where(dominated, np.inf, order_margin))

    worst_idx = int(np.argmin(margins))
    worst = float(margins[worst_idx])
    witness = {"x": xs[worst_idx], "y": ys[worst_idx]}
    near_ties = int(
        np.count_nonzero((strict_margin > 0.0) & (strict_margin < STRICT_TIE_MARGIN))
    )
    note = f"near-ties (< {STRICT_TIE_MARGIN:g}): {near_ties}" if near_ties else ""
    if np.any(violated):
        return ConditionResult(
            "C3", "fail", worst=worst, witness=witness, samples=n_acc, seed=seed, note=note
        )
    return ConditionResult(
        "C3",
        "pass_sampled",
        worst=worst,
        witness=witness,
        samples=n_acc,
        seed=seed,
        note=note,
    )


def check_axial(
    model: CompetitionModel, steps: int = 1_000, tol: float = 1e-8
) -> ConditionResult:
    """Axial fixed points exist, satisfy T(q_i e_i) = q_i e_i, and attract
    on their axis (checked from 0.1 q_i and 2 q_i)."""
    try:
        q = model.verified_axial_fixed_points()
    except (ModelParameterError, ModelEvaluationError) as exc:
        return ConditionResult("C4", "fail", witness=str(exc), note="no axial fixed point")

    worst_gap = 0.0
    for i in range(model.n):
        for start in (0.1 * q[i], 2.0 * q[i]):
            x = start
            point = np.zeros(model.n)
            for _ in range(steps):
                point[i] = x
                x = float(model.step(point)[i])
                if abs(x - q[i]) < tol:
                    break
            gap = abs(x - q[i])
            worst_gap = max(worst_gap, gap)
            if gap >= tol:
                return ConditionResult(
                    "C4",
                    "fail",
                    worst=gap,
                    witness={"i": i + 1, "start": float(start), "final": x, "q_i": float(q[i])},
                    samples=steps,
                    note="axis trajectory did not converge to the axial fixed point",
                )
    return ConditionResult(
        "C4", "pass_sampled", worst=worst_gap, witness={"q": q}, samples=2 * model.n * steps
    )


def check_c5(
    model: CompetitionModel,
    region: OrderInterval | None = None,
    samples: int = 10_000,
    seed: int = 42,
) -> ConditionResult:
    """Strictly negative growth Jacobian on the support of every sampled point."""
    rng = np.random.default_rng(seed)
    if region is None:
        region = default_region(model.verified_axial_fixed_points())
    pts = _region_samples(region, samples, rng, include_origin=True)
    jac = model.growth_jacobian(pts)

    worst = -np.inf
    worst_witness = None
    near_ties = 0
    for k in range(pts.shape[0]):
        idx = np.flatnonzero(pts[k] != 0.0)
        if idx.size == 0:
            continue  # empty support: vacuous
        sub = jac[k][np.ix_(idx, idx)]
        entry = float(sub.max())
        if entry > worst:
            worst = entry
            i_loc, j_loc = np.unravel_index(int(np.argmax(sub)), sub.shape)
            worst_witness = {
                "x": pts[k],
                "i": int(idx[i_loc]) + 1,
                "j": int(idx[j_loc]) + 1,
                "value": entry,
            }
        if -STRICT_TIE_MARGIN < entry < 0.0:
            near_ties += 1
    note = f"near-ties (> -{STRICT_TIE_MARGIN:g}): {near_ties}" if near_ties else ""
    verdict = "pass_sampled" if worst < 0.0 else "fail"
    return ConditionResult(
        "C5",
        verdict,
        worst=worst,
        witness=worst_witness,
        samples=int(pts.shape[0]),
        seed=seed,
        note=note,
    )


def check_inverse_positivity(model: CompetitionModel, points) -> ConditionResult:
    """[T'(x)] restricted to the support of x has an entrywise-positive inverse."""
    worst = np.inf
    worst_witness = None
    count = 0
    for x in points:
        x = as_state(x, model.n)
        idx = np.flatnonzero(x != 0.0)
        if idx.size == 0:
            continue
        count += 1
        sub = model.step_jacobian(x)[np.ix_(idx, idx)]
        try:
            inv = np.linalg.inv(sub)
        except np.linalg.LinAlgError:
            return ConditionResult(
                "InvPos",
                "fail",
                witness={"x": x, "reason": "singular principal submatrix"},
                samples=count,
            )
        entry = float(inv.min())
        if entry < worst:
            worst = entry
            worst_witness = {"x": x, "min_inverse_entry": entry}
        if entry <= 0.0:
            return ConditionResult(
                "InvPos", "fail", worst=entry, witness=worst_witness, samples=count
            )
    return ConditionResult(
        "InvPos", "pass_sampled", worst=worst, witness=worst_witness, samples=count
    )


def check_spectral_grid(
    model: CompetitionModel,
    grid_resolution: int = 16,
    refine: bool = True,
) -> ConditionResult:
    """Spectral radius of the competition matrix stays below 1 on (0, q].

    Evaluates rho(M(x)) on a regular grid (origin excluded by one grid
    step), optionally refines at 4x density around the argmax, and labels
    the verdict as sampled.
    """
    q = model.verified_axial_fixed_points()
    pts = _grid_points(q, grid_resolution)
    rhos = np.array([spectral_radius(competition_matrix(model, x)) for x in pts])
    worst_idx = int(np.argmax(rhos))
    worst = float(rhos[worst_idx])
    witness = pts[worst_idx]
    total = int(pts.shape[0])

    if refine:
        step = q / grid_resolution
        offsets = np.linspace(-1.0, 1.0, 9)
        axes = [
            np.clip(witness[i] + offsets * step[i], step[i] / 4.0, q[i])
            for i in range(model.n)
        ]
        mesh = np.meshgrid(*axes, indexing="ij")
        refined = np.stack([m.ravel() for m in mesh], axis=-1)
        rhos_ref = np.array(
            [spectral_radius(competition_matrix(model, x)) for x in refined]
        )
        total += int(refined.shape[0])
        k = int(np.argmax(rhos_ref))
        if rhos_ref[k] > worst:
            worst = float(rhos_ref[k])
            witness = refined[k]

    verdict = "pass_sampled" if worst < 1.0 else "fail"
    return ConditionResult("Eq4", verdict, worst=worst, witness=witness, samples=total)


def check_gershgorin_grid(
    model: CompetitionModel, grid_resolution: int = 16
) -> tuple[ConditionResult, ConditionResult]:
    """Column-sum (Eq3a) and row-sum (Eq3b) bounds of M(x) over the (0, q] grid."""
    q = model.verified_axial_fixed_points()
    pts = _grid_points(q, grid_resolution)
    M = competition_matrix(model, pts)
    col_sums = M.sum(axis=1)  # (N, n): column j sums per point
    row_sums = M.sum(axis=2)

    results = []
    for cond_id, sums in (("Eq3a", col_sums), ("Eq3b", row_sums)):
        flat = int(np.argmax(sums))
        point_idx, line_idx = np.unravel_index(flat, sums.shape)
        worst = float(sums[point_idx, line_idx])
        verdict = "pass_sampled" if worst < 1.0 else "fail"
        results.append(
            ConditionResult(
                cond_id,
                verdict,
                worst=worst,
                witness={"x": pts[point_idx], "index": int(line_idx) + 1},
                samples=int(pts.shape[0]),
            )
        )
    return results[0], results[1]


def family_criterion(model: CompetitionModel) -> ConditionResult:
    """Closed-form sufficient criterion for the three explicit families.

    May-Oster additionally gets the axis-based non-existence test, giving a
    three-way exists / not-exists / indeterminate verdict.
    """
    if isinstance(model, MayOsterModel):
        q = model.axial_fixed_points()
        row_values = q * model.A.sum(axis=1)
        col_values = q @ model.A
        witness = {"row_values": row_values, "col_values": col_values}
        worst = float(min(row_values.max(), col_values.max()))
        if row_values.max() < 1.0 or col_values.max() < 1.0:
            return ConditionResult(
                "Model", "pass", worst=worst, witness=witness,
                note="unique carrying simplex guaranteed",
            )
        if row_values.max() > 2.0 or col_values.max() > 2.0:
            return ConditionResult(
                "Model", "fail", worst=worst, witness=witness,
                note="no carrying simplex (axis criterion exceeded)",
            )
        return ConditionResult(
            "Model", "inconclusive", worst=worst, witness=witness,
            note="between the existence and non-existence thresholds",
        )
    if isinstance(model, LeslieGowerModel):
        if np.any(model.C <= 1.0):
            i = int(np.argwhere(model.C <= 1.0)[0][0])
            return ConditionResult(
                "Model", "fail", worst=float(model.C[i]),
                witness={"i": i + 1, "C_i": float(model.C[i])},
                note="axis collapses to the origin (C_i <= 1)",
            )
        upper = 1.0 + np.diag(model.A) / model.A.sum(axis=1)
        witness = {"C": model.C, "upper_bounds": upper}
        margin = float((upper - model.C).min())
        if np.all(model.C < upper):
            return ConditionResult(
                "Model", "pass", worst=margin, witness=witness,
                note="unique carrying simplex guaranteed",
            )
        return ConditionResult(
            "Model", "fail", worst=margin, witness=witness,
            note="sufficient criterion not met; existence undetermined",
        )
    if isinstance(model, NeuralNetModel):
        q = model.axial_fixed_points()
        bound = float(1.0 / np.max(q * model.A.sum(axis=1)))
        witness = {"gain": model.gamma, "gain_bound": bound}
        if model.gamma < bound:
            return ConditionResult(
                "Model", "pass", worst=bound, witness=witness,
                note="unique carrying simplex guaranteed",
            )
        return ConditionResult(
            "Model", "fail", worst=bound, witness=witness,
            note="gain exceeds the sufficient bound; existence undetermined",
        )
    return ConditionResult(
        "Model", "inconclusive", note="no closed-form criterion for this family"
    )


# ---------------------------------------------------------------------------
# full report
# ---------------------------------------------------------------------------


def run_criteria(
    model: CompetitionModel,
    grid_resolution: int = 16,
    samples: int = 10_000,
    seed: int = 42,
    refine: bool = True,
    inverse_positivity_points: int = 100,
) -> CriteriaReport:
    """Run every condition checker and collect a structured report."""
    conditions = [check_c0(model)]

    q = None
    try:
        q = model.verified_axial_fixed_points()
    except (ModelParameterError, ModelEvaluationError):
        pass

    def needs_q(cond_id: str) -> ConditionResult:
        return ConditionResult(
            cond_id, "inconclusive", note="requires axial fixed points"
        )

    def guarded(cond_id, fn):
        try:
            return fn()
        except (ModelEvaluationError, ValueError, SpectralConvergenceError) as exc:
            return ConditionResult(cond_id, "inconclusive", note=str(exc))

    region = default_region(q) if q is not None else None

    conditions.append(
        guarded("C1", lambda: check_attractor_bound(model, q))
        if q is not None
        else needs_q("C1")
    )
    conditions.append(
        guarded("C2", lambda: check_sublinearity(model, region, samples, seed))
        if region is not None
        else needs_q("C2")
    )
    conditions.append(
        guarded("C3", lambda: check_retrotone(model, region, samples, seed))
        if region is not None
        else needs_q("C3")
    )
    conditions.append(check_axial(model))
    conditions.append(
        guarded("C5", lambda: check_c5(model, region, samples, seed))
        if region is not None
        else needs_q("C5")
    )

    if q is not None:
        try:
            eq3a, eq3b = check_gershgorin_grid(model, grid_resolution)
        except (ModelEvaluationError, ValueError, SpectralConvergenceError) as exc:
            eq3a = ConditionResult("Eq3a", "inconclusive", note=str(exc))
            eq3b = ConditionResult("Eq3b", "inconclusive", note=str(exc))
        conditions.append(eq3a)
        conditions.append(eq3b)
        conditions.append(
            guarded("Eq4", lambda: check_spectral_grid(model, grid_resolution, refine))
        )
        rng = np.random.default_rng(seed)
        probe = list(rng.random((inverse_positivity_points, model.n)) * q)
        probe.append(q.copy())
        for i in range(model.n):
            axis_pt = np.zeros(model.n)
            axis_pt[i] = q[i]
            probe.append(axis_pt)
        inv = guarded("InvPos", lambda: check_inverse_positivity(model, probe))
        inv.seed = seed
        conditions.append(inv)
    else:
        conditions.extend([needs_q("Eq3a"), needs_q("Eq3b"), needs_q("Eq4"), needs_q("InvPos")])

    conditions.append(family_criterion(model))

    return CriteriaReport(
        conditions=conditions,
        seed=seed,
        metadata={"grid_resolution": grid_resolution, "samples": samples},
    )
