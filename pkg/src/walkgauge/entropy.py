"""Walk entropy, inequality certification, and the walk-regularity trichotomy.

The walk entropy of a graph at inverse temperature beta is the Shannon
entropy of p_i = (e^{beta A})_ii / tr(e^{beta A}). Its maximum value ln n
is attained at beta = 1 exactly for walk-regular graphs, which is what
``classify`` and ``max_entropy_equivalence_check`` certify: the exact
integer procedure decides, the numerics corroborate.

Numerical conventions:

* The entropy deficit ln n - S is computed directly as the KL divergence
  of p from uniform (sum p_i ln(n p_i) with log1p), which stays accurate
  when p is nearly uniform instead of cancelling two O(ln n) terms.
* ``diag_variance`` of an evaluation point is the diagonal variance of the
  Z-normalized exponential e^{beta A}/Z, i.e. the population variance of
  p. The raw diagonal variance of e^{beta A} grows without bound in beta
  whenever 2*lambda_2 > lambda_1, so only the normalized form has the
  decay-to-zero behaviour (regular graphs) that the profile checks assert.
  ``diagonal_variance`` itself applies the raw definition to whatever
  vector it is given.
* ``gap_estimate`` is a numeric lower bound on the *tail* entropy gap,
  ln n - max(S at the largest grid beta, S at the beta -> infinity
  limit). The deficit vanishes as beta -> 0 for every graph, so only the
  tail separates non-regular graphs (gap stays positive) from regular
  ones (gap tends to zero).
* x ln x is 0 at x = 0 throughout.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import TheoremViolationError
from .graphs import Graph, adjacency_matrix, is_connected, is_regular
from .spectral import (
    BETA_CAP,
    Spectrum,
    eigendecompose,
    exp_diagonal,
    partition_function,
)
from .walks import WalkRegularityDecision, is_walk_regular_exact

__all__ = [
    "CheckResult",
    "EntropyPoint",
    "EntropyProfile",
    "MaxEntropyEquivalenceReport",
    "WalkClass",
    "WalkClassLabel",
    "bg_constant",
    "bg_bound_check",
    "classify",
    "default_grid",
    "diagonal_variance",
    "entropy_profile",
    "entropy_via_z",
    "limit_infinity_entropy",
    "profile_to_csv",
    "run_invariant_battery",
    "sigma_d_profile",
    "max_entropy_equivalence_check",
    "walk_entropy",
]

#: beta = 1 max-entropy test tolerance, in nats
MAX_ENTROPY_TOL = 1e-9


def default_grid() -> np.ndarray:
    """41 logarithmically spaced beta values covering [1e-3, 40]."""
    return np.logspace(math.log10(1e-3), math.log10(40.0), 41)


def bg_constant(n: int) -> float:
    """Borwein-Girgensohn constant c_n: 2 for n <= 4, e(1 - 1/n) for n >= 5."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return 2.0 if n <= 4 else math.e * (1.0 - 1.0 / n)


def bg_bound_check(z: Sequence[float], n: int) -> float:
    """Slack of the Borwein-Girgensohn inequality for the log-diagonal z.

    Returns sum z_i e^{z_i} - (c_n/n) sum z_i^2, which the inequality
    asserts is nonnegative whenever sum z_i >= 0. Raises ValueError when
    that hypothesis fails (beyond a -1e-8 float allowance), since the
    bound is then not asserted.
    """
    z = np.asarray(z, dtype=float)
    if math.fsum(z) < -1e-8:
        raise ValueError("hypothesis not met: sum(z) < 0, bound not asserted")
    with np.errstate(over="ignore"):
        lhs = math.fsum(z * np.exp(z))
    return lhs - bg_constant(n) / n * math.fsum(z * z)


def diagonal_variance(m_diag: Sequence[float]) -> float:
    """Diagonal variance: population variance over sum of absolute values.

    Zero iff all entries are equal; rejects an all-zero vector, for which
    the normalization is undefined.
    """
    v = np.asarray(m_diag, dtype=float)
    denom = float(np.abs(v).sum())
    if denom == 0.0:
        raise ValueError("diagonal variance undefined for the all-zero vector")
    return float(np.var(v)) / denom


@dataclass(frozen=True, eq=False)
class EntropyPoint:
    """One beta evaluation: distribution, entropy, and certified residuals."""

    beta: float
    p: np.ndarray
    entropy: float
    ln_z: float
    diag_variance: float
    hadamard_slack: float
    bg_slack: float
    deficit: float


def _entropy_from_z(ed, ln_z: float) -> float:
    """ln Z - (1/Z) sum z_i e^{z_i}, grouped so float error stays linear
    in ln Z instead of quadratic (z and ln Z are both ~beta*lam_1)."""
    delta = ed.z - ln_z
    p_z = np.exp(delta)
    return ln_z * (1.0 - math.fsum(p_z)) - math.fsum(p_z * delta)


def _point_from_spectrum(s: Spectrum, beta: float) -> EntropyPoint:
    beta_eff = min(beta, BETA_CAP)
    ed = exp_diagonal(s, beta_eff)
    ln_z = partition_function(s, beta_eff).log
    n = s.n
    ysum = math.fsum(ed.scaled_y)
    p = ed.scaled_y / ysum
    rel = (n * ed.scaled_y - ysum) / ysum
    deficit = math.fsum(p * np.log1p(rel))
    entropy = math.log(n) - deficit
    hadamard = math.fsum(ed.z)
    bg_slack = bg_bound_check(ed.z, n)
    # every point is self-certifying: the two entropy routes must agree
    # and the proved inequalities must hold, else something is broken.
    # the z route stores log-scale values truncated at ulp(beta*lam_1), so
    # its intrinsic error grows like eps*(ln Z)^2; the tolerance follows it
    via_z = _entropy_from_z(ed, ln_z)
    tol = 1e-9 + 2e-15 * ln_z * ln_z
    if abs(via_z - entropy) > tol:
        raise TheoremViolationError(
            f"entropy identity violated at beta={beta!r}: "
            f"direct {entropy!r} vs via-z {via_z!r}"
        )
    if hadamard < -1e-8:
        raise TheoremViolationError(
            f"Hadamard inequality violated at beta={beta!r}: sum z = {hadamard!r}"
        )
    if bg_slack < -1e-8:
        raise TheoremViolationError(
            f"Borwein-Girgensohn inequality violated at beta={beta!r}: "
            f"slack = {bg_slack!r}"
        )
    return EntropyPoint(
        beta=beta,
        p=p,
        entropy=entropy,
        ln_z=ln_z,
        diag_variance=float(np.var(p)),
        hadamard_slack=hadamard,
        bg_slack=bg_slack,
        deficit=deficit,
    )


def walk_entropy(
    g: Graph, beta: float, *, spectrum: Spectrum | None = None
) -> EntropyPoint:
    """Evaluate the walk entropy point of ``g`` at inverse temperature beta.

    beta = 0 gives the uniform point with S = ln n; beta above 1e4 is
    evaluated at the capped value, which coincides with the beta -> inf
    limit to double precision. Pass a precomputed ``spectrum`` to avoid
    re-decomposing the same adjacency matrix across many beta values.
    """
    if beta < 0:
        raise ValueError("beta must be >= 0")
    if spectrum is None:
        spectrum = eigendecompose(adjacency_matrix(g))
    return _point_from_spectrum(spectrum, beta)


def entropy_via_z(
    g: Graph, beta: float, *, spectrum: Spectrum | None = None
) -> float:
    """Walk entropy through the identity S = ln Z - (1/Z) sum z_i e^{z_i}.

    An independent evaluation route used to cross-check walk_entropy:
    (1/Z) sum z_i e^{z_i} is evaluated as sum exp(z_i - ln Z) z_i, grouped
    around ln Z so it stays finite and accurate at any beta.
    """
    if beta < 0:
        raise ValueError("beta must be >= 0")
    if spectrum is None:
        spectrum = eigendecompose(adjacency_matrix(g))
    beta_eff = min(beta, BETA_CAP)
    ed = exp_diagonal(spectrum, beta_eff)
    ln_z = partition_function(spectrum, beta_eff).log
    return _entropy_from_z(ed, ln_z)


def _shannon(p: np.ndarray) -> float:
    mask = p > 0
    return -math.fsum(p[mask] * np.log(p[mask]))


def _limit_distribution(s: Spectrum) -> tuple[np.ndarray, bool]:
    """beta -> infinity distribution of p and an ambiguity flag.

    Regular graphs (the uniform vector lies in the top eigenspace) get the
    exact uniform distribution. A simple top eigenvalue gives the squared
    Perron vector. A degenerate top eigenvalue on a non-regular graph is
    outside the connected-graph theory: the normalized top-eigenspace
    projector diagonal is returned and flagged.
    """
    n = s.n
    if s.uniform_in_top_eigenspace():
        return np.full(n, 1.0 / n), False
    if s.top_multiplicity() == 1:
        p = s.perron**2
        return p / p.sum(), False
    d = s.top_projector_diagonal()
    return d / d.sum(), True


def limit_infinity_entropy(s: Spectrum) -> float:
    """Limit of the walk entropy as beta -> infinity.

    Equals -sum phi_1(i)^2 ln phi_1(i)^2 for a simple top eigenvalue, and
    ln n exactly iff the graph is regular. Entries where phi_1 vanishes
    contribute zero (x ln x -> 0).
    """
    p, _ = _limit_distribution(s)
    return _shannon(p)


@dataclass(frozen=True, eq=False)
class EntropyProfile:
    """A beta sweep: per-point records plus both temperature limits."""

    graph_id: str
    n: int
    edgeless: bool
    grid: tuple[float, ...]
    points: tuple[EntropyPoint, ...]
    limit_zero: float
    limit_infinity: float
    limit_distribution: np.ndarray
    sup_estimate: float
    gap_estimate: float
    notes: tuple[str, ...] = ()

    def deficits(self) -> np.ndarray:
        return np.array([pt.deficit for pt in self.points])

    def to_dict(self) -> dict:
        return {
            "graph": self.graph_id,
            "n": self.n,
            "grid": list(self.grid),
            "points": [
                {
                    "beta": pt.beta,
                    "entropy": pt.entropy,
                    "deficit": pt.deficit,
                    "ln_Z": pt.ln_z,
                    "sigma_d2": pt.diag_variance,
                    "hadamard_slack": pt.hadamard_slack,
                    "bg_slack": pt.bg_slack,
                }
                for pt in self.points
            ],
            "limit_zero": self.limit_zero,
            "limit_infinity": self.limit_infinity,
            "sup_estimate": self.sup_estimate,
            "gap_estimate": self.gap_estimate,
            "notes": list(self.notes),
        }


CSV_COLUMNS = ("beta", "entropy", "deficit", "ln_Z", "sigma_d2",
               "hadamard_slack", "bg_slack")


def _csv_row(values) -> str:
    return ",".join("%.17g" % v if isinstance(v, float) else str(v) for v in values)


def profile_to_csv(profile: EntropyProfile) -> str:
    """Fixed-schema CSV of a profile; stable to the last bit for golden files.

    Rows are the beta = 0 limit, the grid points in ascending order, and
    the beta = inf limit. Floats are printed with 17 significant digits.
    """
    n = profile.n
    lines = [",".join(CSV_COLUMNS)]
    lines.append(
        _csv_row(("0", math.log(n), 0.0, math.log(n), 0.0, 0.0, 0.0))
    )
    for pt in profile.points:
        lines.append(
            _csv_row(
                (
                    float(pt.beta),
                    pt.entropy,
                    pt.deficit,
                    pt.ln_z,
                    pt.diag_variance,
                    pt.hadamard_slack,
                    pt.bg_slack,
                )
            )
        )
    if profile.edgeless:
        ln_z_inf, had_inf, bg_inf = math.log(n), 0.0, 0.0
    else:
        ln_z_inf, had_inf, bg_inf = math.inf, math.inf, math.inf
    lines.append(
        _csv_row(
            (
                "inf",
                profile.limit_infinity,
                math.log(n) - profile.limit_infinity,
                ln_z_inf,
                float(np.var(profile.limit_distribution)),
                had_inf,
                bg_inf,
            )
        )
    )
    return "\n".join(lines) + "\n"


def _validate_grid(grid) -> np.ndarray:
    arr = np.asarray(grid, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("beta grid must be a non-empty 1-d sequence")
    if np.any(arr <= 0):
        raise ValueError("beta grid values must be positive")
    if np.any(np.diff(arr) <= 0):
        raise ValueError("beta grid must be strictly increasing")
    return arr


def entropy_profile(
    g: Graph,
    grid: Sequence[float] | None = None,
    *,
    refine: bool = True,
    graph_id: str | None = None,
    spectrum: Spectrum | None = None,
) -> EntropyProfile:
    """Sweep the walk entropy over a beta grid and attach both limits.

    ``refine`` adds three rounds of trisection around the grid argmax of
    the entropy to tighten sup_estimate. gap_estimate is the tail gap
    ln n - max(S at the largest grid beta, S at the beta -> inf limit);
    see the module docstring for why the infimum over all beta is not a
    usable notion.
    """
    arr = _validate_grid(default_grid() if grid is None else grid)
    s = spectrum if spectrum is not None else eigendecompose(adjacency_matrix(g))
    points = tuple(_point_from_spectrum(s, b) for b in arr)
    n = g.n
    limit_zero = math.log(n)
    p_inf, ambiguous = _limit_distribution(s)
    limit_infinity = _shannon(p_inf)

    entropies = [pt.entropy for pt in points]
    refined_sup = max(entropies)
    if refine and len(arr) >= 2:
        i = int(np.argmax(entropies))
        lo = arr[max(i - 1, 0)]
        hi = arr[min(i + 1, len(arr) - 1)]
        for _ in range(3):
            m1 = lo + (hi - lo) / 3.0
            m2 = hi - (hi - lo) / 3.0
            s1 = _point_from_spectrum(s, m1).entropy
            s2 = _point_from_spectrum(s, m2).entropy
            refined_sup = max(refined_sup, s1, s2)
            if s1 >= s2:
                hi = m2
            else:
                lo = m1

    sup_estimate = max(refined_sup, limit_zero, limit_infinity)
    gap_estimate = math.log(n) - max(points[-1].entropy, limit_infinity)

    notes = []
    if not is_connected(g):
        notes.append("graph is disconnected: connected-graph results apply per component")
    if ambiguous:
        notes.append(
            "top eigenvalue is degenerate on a non-regular graph: "
            "beta->inf limit uses the top-eigenspace projector diagonal"
        )
    return EntropyProfile(
        graph_id=graph_id or repr(g),
        n=n,
        edgeless=g.edge_count == 0,
        grid=tuple(float(b) for b in arr),
        points=points,
        limit_zero=limit_zero,
        limit_infinity=limit_infinity,
        limit_distribution=p_inf,
        sup_estimate=sup_estimate,
        gap_estimate=gap_estimate,
        notes=tuple(notes),
    )


def sigma_d_profile(
    g: Graph, grid: Sequence[float] | None = None
) -> tuple[tuple[float, float], ...]:
    """(beta, sigma_d^2) pairs for the Z-normalized exponential diagonal.

    The value at each beta is the diagonal variance of e^{beta A}/Z(beta),
    equal to the population variance of p(beta). It is zero at every beta
    iff the graph is walk-regular, decays to zero for beta -> inf iff the
    graph is regular (simple top eigenvalue), and tends to the variance of
    the squared Perron vector otherwise. Edgeless graphs give zero.
    """
    arr = _validate_grid(default_grid() if grid is None else grid)
    s = eigendecompose(adjacency_matrix(g))
    out = []
    for b in arr:
        pt = _point_from_spectrum(s, b)
        out.append((float(b), pt.diag_variance))
    return tuple(out)


class WalkClassLabel(str, enum.Enum):
    WALK_REGULAR = "WalkRegular"
    REGULAR_NOT_WALK_REGULAR = "RegularNotWalkRegular"
    NON_REGULAR = "NonRegular"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True, eq=False)
class WalkClass:
    """Trichotomy label with exact witness and numeric corroboration."""

    label: WalkClassLabel
    decision: WalkRegularityDecision
    profile: EntropyProfile
    deficit_beta1: float
    notes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "label": self.label.value,
            "decision": self.decision.to_dict(),
            "deficit_beta1": self.deficit_beta1,
            "gap_estimate": self.profile.gap_estimate,
            "notes": list(self.notes),
        }


def classify(
    g: Graph,
    grid: Sequence[float] | None = None,
    *,
    max_entropy_tol: float = MAX_ENTROPY_TOL,
) -> WalkClass:
    """Classify ``g`` as WalkRegular, RegularNotWalkRegular or NonRegular.

    The exact integer walk-count procedure decides the label; an entropy
    profile is attached as numeric corroboration and cross-checked against
    the label (``max_entropy_tol`` is the beta = 1 deficit threshold). A
    corroboration mismatch beyond tolerance raises TheoremViolationError:
    it would mean either broken arithmetic or a precision pathology and is
    never ignored. The non-regular corroboration reads the tail gap, so a
    custom ``grid`` should extend to large beta as the default one does.
    """
    decision = is_walk_regular_exact(g)
    regular = is_regular(g)
    if not regular:
        label = WalkClassLabel.NON_REGULAR
    elif decision.walk_regular:
        label = WalkClassLabel.WALK_REGULAR
    else:
        label = WalkClassLabel.REGULAR_NOT_WALK_REGULAR

    s = eigendecompose(adjacency_matrix(g))
    profile = entropy_profile(g, grid, spectrum=s)
    deficit_beta1 = _point_from_spectrum(s, 1.0).deficit
    deficits = profile.deficits()

    problems = []
    if np.any(deficits < -1e-12):
        problems.append(f"negative deficit {deficits.min():.3e} on the grid")
    if label is WalkClassLabel.WALK_REGULAR:
        if deficits.max() > max_entropy_tol:
            problems.append(
                f"walk-regular graph with grid deficit {deficits.max():.3e}"
            )
        if deficit_beta1 > max_entropy_tol:
            problems.append(
                f"walk-regular graph with deficit {deficit_beta1:.3e} at beta=1"
            )
    elif label is WalkClassLabel.REGULAR_NOT_WALK_REGULAR:
        if deficit_beta1 <= max_entropy_tol:
            problems.append(
                f"not walk-regular but beta=1 deficit only {deficit_beta1:.3e}"
            )
        if deficits[0] >= 1e-3:
            problems.append(f"small-beta end deficit {deficits[0]:.3e} >= 1e-3")
        if s.top_multiplicity() == 1 and deficits[-1] >= 1e-3:
            problems.append(f"large-beta end deficit {deficits[-1]:.3e} >= 1e-3")
    else:
        if profile.gap_estimate < 1e-6:
            problems.append(
                f"non-regular graph with gap estimate {profile.gap_estimate:.3e}"
            )
        if deficit_beta1 <= max_entropy_tol:
            problems.append(
                f"non-regular but beta=1 deficit only {deficit_beta1:.3e}"
            )
    if problems:
        raise TheoremViolationError(
            f"classification corroboration failed for {profile.graph_id}: "
            + "; ".join(problems)
        )
    return WalkClass(
        label=label,
        decision=decision,
        profile=profile,
        deficit_beta1=deficit_beta1,
        notes=profile.notes,
    )


@dataclass(frozen=True)
class MaxEntropyEquivalenceReport:
    """Both sides of the max-entropy-at-beta-1 biconditional."""

    exact_walk_regular: bool
    deficit_beta1: float
    numeric_max_entropy: bool
    agree: bool
    connected: bool
    notes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "exact_walk_regular": self.exact_walk_regular,
            "deficit_beta1": self.deficit_beta1,
            "numeric_max_entropy": self.numeric_max_entropy,
            "agree": self.agree,
            "connected": self.connected,
            "notes": list(self.notes),
        }


def max_entropy_equivalence_check(
    g: Graph, *, tol: float = MAX_ENTROPY_TOL
) -> MaxEntropyEquivalenceReport:
    """Check: walk-regular (exact integers) iff ln n - S(1) <= tol.

    The equivalence is proved for connected graphs; a disconnected input
    still runs and the report carries a warning note. Disagreement raises
    TheoremViolationError.
    """
    decision = is_walk_regular_exact(g)
    pt = walk_entropy(g, 1.0)
    numeric = pt.deficit <= tol
    connected = is_connected(g)
    notes = () if connected else (
        "graph is disconnected: the biconditional is stated for connected graphs",
    )
    report = MaxEntropyEquivalenceReport(
        exact_walk_regular=decision.walk_regular,
        deficit_beta1=pt.deficit,
        numeric_max_entropy=numeric,
        agree=decision.walk_regular == numeric,
        connected=connected,
        notes=notes,
    )
    if not report.agree:
        raise TheoremViolationError(
            "max-entropy biconditional violated: exact walk_regular="
            f"{decision.walk_regular} but deficit(1)={pt.deficit!r}"
        )
    return report


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def run_invariant_battery(
    g: Graph,
    grid: Sequence[float] | None = None,
    *,
    eq_tol: float = MAX_ENTROPY_TOL,
) -> list[CheckResult]:
    """Run the full per-graph invariant battery.

    Checks: the two-formula entropy identity, the Hadamard inequality
    sum z_i >= 0, the Borwein-Girgensohn inequality, the beta = 1
    max-entropy biconditional (at tolerance ``eq_tol``), and class
    consistency of the sigma_d profile. Returns one CheckResult per check.
    """
    arr = _validate_grid(default_grid() if grid is None else grid)
    s = eigendecompose(adjacency_matrix(g))
    points = [_point_from_spectrum(s, b) for b in arr]
    results: list[CheckResult] = []

    worst = 0.0
    for b, pt in zip(arr, points):
        alt = entropy_via_z(g, b, spectrum=s)
        worst = max(worst, abs(alt - pt.entropy))
    results.append(
        CheckResult(
            "two-formula-identity",
            worst <= 1e-9,
            f"max |S_direct - S_via_z| = {worst:.3e} (tol 1e-9)",
        )
    )

    min_had = min(pt.hadamard_slack for pt in points)
    results.append(
        CheckResult(
            "hadamard",
            min_had >= -1e-8,
            f"min sum z_i = {min_had:.3e} (must be >= -1e-8)",
        )
    )

    min_bg = min(pt.bg_slack for pt in points)
    results.append(
        CheckResult(
            "borwein-girgensohn",
            min_bg >= -1e-8,
            f"min slack = {min_bg:.3e} (must be >= -1e-8)",
        )
    )

    try:
        report = max_entropy_equivalence_check(g, tol=eq_tol)
        detail = (
            f"exact={report.exact_walk_regular}, "
            f"numeric={report.numeric_max_entropy}, "
            f"deficit(1)={report.deficit_beta1:.6e}"
        )
        if report.notes:
            detail += " [" + "; ".join(report.notes) + "]"
        results.append(CheckResult("max-entropy-iff-walk-regular", True, detail))
    except TheoremViolationError as exc:
        results.append(CheckResult("max-entropy-iff-walk-regular", False, str(exc)))

    results.append(_sigma_d_consistency(g, arr, points, s))
    return results


def _sigma_d_consistency(
    g: Graph, arr: np.ndarray, points: list[EntropyPoint], s: Spectrum
) -> CheckResult:
    sigmas = np.array([pt.diag_variance for pt in points])
    decision = is_walk_regular_exact(g)
    regular = is_regular(g)
    if decision.walk_regular:
        ok = bool(sigmas.max() <= 1e-12)
        return CheckResult(
            "sigma-d-consistency",
            ok,
            f"walk-regular: max sigma_d2 = {sigmas.max():.3e} (tol 1e-12)",
        )
    if regular:
        ok = bool(np.all(sigmas > 0))
        detail = f"regular-not-walk-regular: min sigma_d2 = {sigmas.min():.3e} > 0"
        if arr[-1] >= 40 and s.top_multiplicity() == 1:
            decayed = sigmas[-1] < sigmas.max() * 1e-2
            ok = ok and bool(decayed)
            detail += f"; decay sigma(betamax)={sigmas[-1]:.3e} < 1e-2*max={sigmas.max():.3e}"
        return CheckResult("sigma-d-consistency", ok, detail)
    if is_connected(g):
        floor = float(sigmas.min())
        ok = floor > 0.0
        return CheckResult(
            "sigma-d-consistency",
            ok,
            f"non-regular connected: grid floor sigma_d2 >= {floor:.3e}",
        )
    ok = bool(np.all(sigmas >= 0))
    return CheckResult(
        "sigma-d-consistency",
        ok,
        f"non-regular disconnected: min sigma_d2 = {sigmas.min():.3e} >= 0",
    )
