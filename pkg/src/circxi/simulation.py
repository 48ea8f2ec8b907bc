"""Data-generating models and the Monte Carlo experiment driver.

Every model draws the predictor uniformly on the circle; noise is
wrapped normal, specified by its unwrapped sd in radians. Replicates
are seeded independently via SeedSequence spawn keys derived from the
master seed, the row index, and the replicate index, so results are
bit-reproducible and independent of evaluation order.
"""

import json
import math
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from circxi.angles import CircularSample, TiesPolicy, cyclic_rank_profile, resolve_ties
from circxi.coefficient import xi_circular
from circxi.competitors import fl_correlation, js_correlation
from circxi.errors import DegenerateSample
from circxi.linear import CutPair, angle_grid, cut_scan, xi_borel_cut
from circxi.null import test_normal, test_permutation

__all__ = [
    "MODEL_KINDS",
    "MEASURES",
    "TESTS",
    "ModelSpec",
    "ExperimentPlan",
    "ExperimentResult",
    "generate",
    "run_experiment",
    "emit_tables",
    "emit_curves",
    "table_plan",
]

MODEL_KINDS = (
    "independence",
    "rotation",
    "doubling",
    "quadrupling",
    "antipodal_mixture",
    "localized_bump",
    "step_arc",
)
MEASURES = ("xi", "borel0", "borel_avg", "scan", "js", "fl")
TESTS = ("normal", "permutation")

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ModelSpec:
    kind: str
    sigma_rad: float = 0.0

    def __post_init__(self):
        if self.kind not in MODEL_KINDS:
            raise ValueError(f"unknown model kind {self.kind!r}")
        if self.sigma_rad < 0:
            raise ValueError("sigma_rad must be >= 0")


@dataclass(frozen=True)
class ExperimentPlan:
    """One experiment: every model crossed with every sample size."""

    models: tuple
    ns: tuple = (200,)
    replicates: int = 1000
    seed: int = 0
    measures: tuple = ("xi",)
    tests: tuple = ()
    level: float = 0.05
    permutations: int = 499
    grid_size: int = 8

    def __post_init__(self):
        if not 0 < self.level < 1:
            raise ValueError("level must lie in (0, 1)")
        if self.replicates < 1:
            raise ValueError("replicates must be >= 1")
        for m in self.measures:
            if m not in MEASURES:
                raise ValueError(f"unknown measure {m!r}")
        for t in self.tests:
            if t not in TESTS:
                raise ValueError(f"unknown test {t!r}")
        object.__setattr__(self, "models", tuple(self.models))
        object.__setattr__(self, "ns", tuple(self.ns))


@dataclass
class ExperimentResult:
    plan: ExperimentPlan
    rows: list
    failures: dict
    runtime_seconds: float


def generate(model, n, seed):
    """Draw one sample from the model; angles are returned in turns.

    seed may be an integer or a SeedSequence. Ties (possible for
    step_arc at sigma = 0, astronomically unlikely elsewhere) are
    resolved by tiny seeded jitter.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    ss = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    rng = np.random.default_rng(ss)
    x = rng.uniform(0.0, _TWO_PI, n)
    eps = rng.normal(0.0, model.sigma_rad, n) if model.sigma_rad > 0 else 0.0
    kind = model.kind
    if kind == "independence":
        y = rng.uniform(0.0, _TWO_PI, n)
    elif kind == "rotation":
        y = x + math.pi / 4.0 + eps
    elif kind == "doubling":
        y = 2.0 * x + eps
    elif kind == "quadrupling":
        y = 4.0 * x + eps
    elif kind == "antipodal_mixture":
        z = rng.integers(0, 2, n) * math.pi
        y = x + z + eps
    elif kind == "localized_bump":
        y = x + 1.25 * np.exp(2.0 * np.cos(x - math.pi)) / math.exp(2.0) + eps
    else:  # step_arc
        y = np.where(x < math.pi, math.pi / 4.0, 5.0 * math.pi / 4.0) + eps
    sample = CircularSample(np.mod(x / _TWO_PI, 1.0), np.mod(y / _TWO_PI, 1.0))
    jitter_seed = int(rng.integers(0, 2**63))
    return resolve_ties(sample, TiesPolicy(mode="jitter", seed=jitter_seed))


def _evaluate_replicate(sample, plan, perm_seed, failures_key, failures):
    profile = cyclic_rank_profile(sample)
    out = {}
    measures = plan.measures
    if "xi" in measures:
        out["xi"] = xi_circular(profile).raw
    if "borel0" in measures:
        out["borel0"] = xi_borel_cut(sample, CutPair(0.0, 0.0, "angle_grid"))
    if "borel_avg" in measures or "scan" in measures:
        report = cut_scan(sample, angle_grid(plan.grid_size))
        if "borel_avg" in measures:
            out["borel_avg"] = report.mean
        if "scan" in measures:
            out["scan_mean"] = report.mean
            out["scan_sd"] = report.sd
            out["scan_min"] = report.min
            out["scan_max"] = report.max
    for name, fn in (("js", js_correlation), ("fl", fl_correlation)):
        if name in measures:
            try:
                out[name] = abs(fn(sample))
            except DegenerateSample:
                out[name] = math.nan
                failures[failures_key] = failures.get(failures_key, 0) + 1
    if "normal" in plan.tests:
        p = test_normal(xi_circular(profile)).p_value
        out["normal_reject"] = 1.0 if p <= plan.level else 0.0
    if "permutation" in plan.tests:
        p = test_permutation(sample, B=plan.permutations, seed=perm_seed,
                             profile=profile).p_value
        out["permutation_reject"] = 1.0 if p <= plan.level else 0.0
    return out


def run_experiment(plan):
    """Run the plan; deterministic given (plan, seed)."""
    t0 = time.perf_counter()
    failures = {}
    rows = []
    row_index = 0
    for model in plan.models:
        for n in plan.ns:
            per_rep = []
            for rep in range(plan.replicates):
                ss = np.random.SeedSequence(plan.seed, spawn_key=(row_index, rep))
                gen_ss, perm_ss = ss.spawn(2)
                sample = generate(model, n, gen_ss)
                key = (model.kind, model.sigma_rad, n)
                per_rep.append(_evaluate_replicate(sample, plan, perm_ss, key, failures))
            row = {"model": model.kind, "sigma": model.sigma_rad, "n": n}
            for col in per_rep[0]:
                vals = np.array([r[col] for r in per_rep], dtype=float)
                vals = vals[~np.isnan(vals)]
                if col.endswith("_reject"):
                    row[col.replace("_reject", "_rate")] = float(np.mean(vals))
                else:
                    row[f"{col}_mean"] = float(np.mean(vals))
                    row[f"{col}_sd"] = float(np.std(vals, ddof=1)) if len(vals) > 1 else 0.0
            rows.append(row)
            row_index += 1
    failures = {f"{k[0]},sigma={k[1]},n={k[2]}": v for k, v in failures.items()}
    return ExperimentResult(plan=plan, rows=rows, failures=failures,
                            runtime_seconds=time.perf_counter() - t0)


def _columns(rows):
    cols = ["model", "sigma", "n"]
    for row in rows:
        for c in row:
            if c not in cols:
                cols.append(c)
    return cols


def emit_tables(result, format="tsv"):
    """Serialize the aggregate table; tsv shows 3 decimals, json full precision."""
    rows = result.rows
    if format == "json":
        doc = {
            "plan": asdict(result.plan),
            "rows": rows,
            "failures": result.failures,
            "runtime_seconds": result.runtime_seconds,
        }
        return (json.dumps(doc, indent=2) + "\n").encode()
    cols = _columns(rows)
    lines = ["\t".join(cols)]
    for row in rows:
        cells = []
        for c in cols:
            v = row.get(c, "")
            if isinstance(v, float) and c != "sigma":
                cells.append(f"{v:.3f}")
            else:
                cells.append(str(v))
        lines.append("\t".join(cells))
    return ("\n".join(lines) + "\n").encode()


def emit_curves(result):
    """Long-format (model, sigma, n, measure, mean) records for plotting."""
    lines = ["model\tsigma\tn\tmeasure\tmean"]
    for row in result.rows:
        for col, v in row.items():
            if col.endswith("_mean") or col.endswith("_rate"):
                lines.append(f"{row['model']}\t{row['sigma']}\t{row['n']}\t{col}\t{v!r}")
    return ("\n".join(lines) + "\n").encode()


def table_plan(table, seed=0, replicates=1000, permutations=499):
    """Preset experiment plans for the four reported tables."""
    if table == 1:
        models = [ModelSpec(k, s) for k in
                  ("independence", "rotation", "doubling", "quadrupling",
                   "antipodal_mixture", "localized_bump")
                  for s in ((0.0,) if k == "independence" else (0.0, 0.5))]
        return ExperimentPlan(models=tuple(models), ns=(200,), replicates=replicates,
                              seed=seed, measures=("xi", "borel0", "borel_avg", "js", "fl"))
    if table == 2:
        models = (ModelSpec("independence", 0.0), ModelSpec("doubling", 0.5),
                  ModelSpec("quadrupling", 0.5), ModelSpec("antipodal_mixture", 0.0),
                  ModelSpec("localized_bump", 0.2), ModelSpec("step_arc", 0.2))
        return ExperimentPlan(models=models, ns=(200,), replicates=replicates,
                              seed=seed, measures=("scan",))
    if table == 3:
        return ExperimentPlan(models=(ModelSpec("independence", 0.0),),
                              ns=(30, 50, 100, 200), replicates=replicates,
                              seed=seed, measures=("xi",),
                              tests=("normal", "permutation"),
                              permutations=permutations)
    if table == 4:
        models = tuple(ModelSpec(k, s)
                       for k in ("rotation", "doubling", "quadrupling", "antipodal_mixture")
                       for s in (0.0, 0.2, 0.5, 1.0))
        return ExperimentPlan(models=models, ns=(200,), replicates=replicates,
                              seed=seed, measures=("xi",),
                              tests=("normal", "permutation"),
                              permutations=permutations)
    raise ValueError("table must be 1, 2, 3, or 4")
