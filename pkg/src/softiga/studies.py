"""Study harness: reference solves with caching, softness-parameter sweeps,
convergence-rate fits, domain-size fits, three-body method tables, and a
wall-time benchmark.  Every study is driven by a ``StudyConfig`` (YAML file
plus CLI overrides) and emits CSV/JSON artifacts with documented headers:

- eta-sweep:      ``eta,err1,...,errk``
- convergence:    ``n,h,eta,err1,...,errk`` plus fits ``eta,mode,slope,intercept,points,valid``
- domain-study:   ``x_eps,h,err1`` plus fit ``eta,slope,intercept,points``
- three-body:     ``method,p,eta,lambda1..k,err1..k`` (+ optional JSON), mode
                  grids ``x,y,value``
- bench:          ``method,dimension,p,eta,n,wall_time,wall_time_mean,wall_time_rsd,iterations``
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import scipy.sparse as sp
import yaml

from . import tables
from .assemble import (SOFTNESS_DEGREES, SoftnessConfig, assemble_2d,
                       assemble_mass, assemble_potential, assemble_softness,
                       assemble_stiffness, export_coo, soft_stiffness)
from .meshing import GradedMeshSpec, gauss_rule, graded_mesh, uniform_mesh
from .model import PotentialShape, ProblemSpec, gamma_hat_field
from .solve import (EigenResult, SoftnessTooLarge, sample_eigenfunction,
                    solve_smallest)
from .splines import SplineSpace, open_knot_vector

__all__ = [
    "ConfigError",
    "ReferenceMissing",
    "StudyConfig",
    "ConvergenceFit",
    "load_config",
    "run_reference",
    "solve_study",
    "eta_sweep",
    "convergence_study",
    "domain_study",
    "three_body",
    "bench",
    "run_study",
]

ERROR_FLOOR = 5e-12
FLOOR_WINDOW = 10.0  # fit windows exclude points within 10x of the floor


class ConfigError(ValueError):
    """Invalid or inconsistent study configuration (exit code 2)."""


class ReferenceMissing(FileNotFoundError):
    """A reference file was named but does not exist (exit code 4)."""


@dataclass
class StudyConfig:
    """One study, fully specified.  Unset quadrature orders default to
    p+3 (all matrices) and p+5 (potential matrix)."""

    study: str = "solve"
    dimension: int = 1
    x_eps: float = 20.0
    shape: str = "lorentzian_cube"
    beta: float = 5.0
    mass_ratio: float = 1.0
    gamma0: float | None = None
    p: int = 1
    n: int = 400
    growth: float = 0.0
    eta: float = 0.0
    eta_grid: list[float] | None = None
    k: int = 2
    quad_order: int | None = None
    quad_order_potential: int | None = None
    dense_threshold: int = 2000
    tol: float = 1e-10
    seed: int = 0
    out: str = "out"
    reference: dict | str | None = None
    reference_cache: str | None = None
    json_output: bool = False
    export_matrices: str | None = None
    # convergence study
    n_grid: list[int] | None = None
    error_floor: float = ERROR_FLOOR
    # domain study
    xeps_grid: list[float] | None = None
    h_grid: list[float] | None = None
    # three-body
    eta_soft_fem: float | None = None
    eta_soft_iga: float | None = None
    grid_points: int = 0
    # bench
    repeats: int = 3

    def resolved_quad(self) -> int:
        return self.quad_order if self.quad_order else self.p + 3

    def resolved_quad_potential(self) -> int:
        return self.quad_order_potential if self.quad_order_potential else self.p + 5

    def problem(self) -> ProblemSpec:
        try:
            shape = PotentialShape(self.shape)
        except ValueError as exc:
            raise ConfigError(f"unknown potential shape {self.shape!r}") from exc
        try:
            return ProblemSpec(dimension=self.dimension, x_eps=self.x_eps,
                               shape=shape, beta=self.beta,
                               mass_ratio=self.mass_ratio, gamma0=self.gamma0)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc

    def validate(self) -> None:
        known = {"solve", "reference", "eta-sweep", "convergence",
                 "domain-study", "three-body", "bench"}
        if self.study not in known:
            raise ConfigError(f"unknown study {self.study!r}; pick one of {sorted(known)}")
        self.problem()
        if self.p < 1:
            raise ConfigError(f"degree must be >= 1, got {self.p}")
        if self.n < 1:
            raise ConfigError(f"element count must be >= 1, got {self.n}")
        if self.k < 1:
            raise ConfigError(f"need k >= 1 eigenpairs, got {self.k}")
        if self.eta < 0 or any(e < 0 for e in self.eta_grid or []):
            raise ConfigError("softness parameters must be >= 0")
        if self.tol <= 0:
            raise ConfigError("tolerance must be positive")
        if self.study == "convergence" and len(self.n_grid or []) < 4:
            raise ConfigError("convergence study needs at least 4 mesh sizes")
        if self.study == "domain-study":
            xg = self.xeps_grid or []
            if len(xg) < 2 or any(b <= a for a, b in zip(xg, xg[1:])):
                raise ConfigError("domain study needs an increasing x_eps grid")
            if not self.h_grid:
                raise ConfigError("domain study needs an h grid")


_LIST_FIELDS = {"eta_grid", "n_grid", "xeps_grid", "h_grid"}


def load_config(path=None, overrides: dict | None = None) -> StudyConfig:
    """Load a YAML mapping and apply CLI overrides; unknown keys fail fast."""
    data: dict = {}
    if path is not None:
        p = Path(path)
        if not p.exists():
            raise ConfigError(f"config file not found: {p}")
        loaded = yaml.safe_load(p.read_text())
        if loaded is None:
            loaded = {}
        if not isinstance(loaded, dict):
            raise ConfigError(f"config root must be a mapping, got {type(loaded).__name__}")
        data.update(loaded)
    data.update({k: v for k, v in (overrides or {}).items() if v is not None})
    names = {f.name for f in dataclasses.fields(StudyConfig)}
    unknown = set(data) - names
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    for key in _LIST_FIELDS & set(data):
        if data[key] is not None and not isinstance(data[key], (list, tuple)):
            raise ConfigError(f"{key} must be a list")
    try:
        cfg = StudyConfig(**data)
    except TypeError as exc:
        raise ConfigError(str(exc)) from exc
    cfg.validate()
    return cfg


# ---------------------------------------------------------------------------
# operators and single solves

@dataclass
class Operators1D:
    space: SplineSpace
    stiffness: sp.csr_matrix
    mass: sp.csr_matrix
    potential: sp.csr_matrix
    softness: sp.csr_matrix | None

    def system(self, eta: float) -> tuple[sp.csr_matrix, sp.csr_matrix]:
        if eta == 0.0:
            return (self.stiffness + self.potential).tocsr(), self.mass
        if self.softness is None:
            raise ConfigError(
                f"softness penalty needs degree in {SOFTNESS_DEGREES}")
        a = soft_stiffness(self.stiffness, self.softness, SoftnessConfig(eta))
        return (a + self.potential).tocsr(), self.mass


def build_operators_1d(spec: ProblemSpec, p: int, n: int, growth: float = 0.0,
                       quad_order: int | None = None,
                       quad_order_potential: int | None = None) -> Operators1D:
    mesh = graded_mesh(GradedMeshSpec(spec.x_eps, n, growth)) if growth > 0 \
        else uniform_mesh(spec.x_eps, n)
    space = open_knot_vector(p, mesh)
    rule = gauss_rule(quad_order or p + 3)
    rule_pot = gauss_rule(quad_order_potential or p + 5)
    kappa = spec.kappa().kx
    K = assemble_stiffness(space, rule, kappa)
    M = assemble_mass(space, rule)
    Q = assemble_potential(space, rule_pot, lambda x: gamma_hat_field(spec, x))
    S = assemble_softness(space, kappa) if p in SOFTNESS_DEGREES else None
    return Operators1D(space, K, M, Q, S)


@dataclass
class Case2D:
    space_x: SplineSpace
    space_y: SplineSpace
    result: EigenResult


def run_case_1d(spec: ProblemSpec, p: int, n: int, eta: float, k: int,
                growth: float = 0.0, quad_order: int | None = None,
                quad_order_potential: int | None = None, tol: float = 1e-10,
                dense_threshold: int = 2000) -> tuple[Operators1D, EigenResult]:
    ops = build_operators_1d(spec, p, n, growth, quad_order, quad_order_potential)
    a, m = ops.system(eta)
    res = solve_smallest(a, m, k=k, tol=tol, gamma0=spec.shift,
                         dense_threshold=dense_threshold)
    return ops, res


def run_case_2d(spec: ProblemSpec, p: int, n: int, eta: float, k: int,
                growth: float, quad_order: int | None = None,
                quad_order_potential: int | None = None, tol: float = 1e-10,
                dense_threshold: int = 2000) -> Case2D:
    mesh = graded_mesh(GradedMeshSpec(spec.x_eps, n, growth)) if growth > 0 \
        else uniform_mesh(spec.x_eps, n)
    space = open_knot_vector(p, mesh)
    a, m, _ = assemble_2d(space, space, spec, gauss_rule(quad_order or p + 3),
                          SoftnessConfig(eta),
                          rule_potential=gauss_rule(quad_order_potential or p + 5))
    res = solve_smallest(a, m, k=k, tol=tol, gamma0=spec.shift,
                         dense_threshold=dense_threshold)
    return Case2D(space, space, res)


# ---------------------------------------------------------------------------
# references

@dataclass
class Reference:
    eigenvalues: list[float]
    path: Path
    cached: bool


def _spec_payload(spec: ProblemSpec) -> dict:
    return {
        "dimension": spec.dimension,
        "x_eps": spec.x_eps,
        "shape": spec.shape.value,
        "beta": spec.beta,
        "mass_ratio": spec.mass_ratio,
        "gamma0": spec.shift,
    }


def run_reference(spec: ProblemSpec, p_ref: int, n_ref: int, k: int,
                  cache_dir, growth: float = 0.0,
                  quad_order: int | None = None,
                  quad_order_potential: int | None = None,
                  dense_threshold: int = 2000) -> Reference:
    """High-degree solve used as the error reference, cached by content hash.

    Eigenvalues are persisted (and returned) rounded to 12 significant
    digits, so cache hits and fresh computations agree exactly.
    """
    payload = dict(_spec_payload(spec), p_ref=p_ref, n_ref=n_ref, k=k,
                   growth=growth, quad_order=quad_order or p_ref + 3,
                   quad_order_potential=quad_order_potential or p_ref + 5)
    digest = hashlib.sha256(
        json.dumps(payload, sort_keys=True).encode()).hexdigest()[:16]
    cache_dir = Path(cache_dir)
    path = cache_dir / f"reference-{digest}.json"
    if path.exists():
        stored = json.loads(path.read_text())
        return Reference(eigenvalues=[float(v) for v in stored["eigenvalues"]],
                         path=path, cached=True)
    if spec.dimension == 1:
        _, res = run_case_1d(spec, p_ref, n_ref, 0.0, k, growth=growth,
                             quad_order=quad_order,
                             quad_order_potential=quad_order_potential,
                             dense_threshold=dense_threshold)
    else:
        res = run_case_2d(spec, p_ref, n_ref, 0.0, k, growth=growth,
                          quad_order=quad_order,
                          quad_order_potential=quad_order_potential,
                          dense_threshold=dense_threshold).result
    values = [float(f"{v:.12g}") for v in res.eigenvalues]
    tables.write_json(path, dict(payload, eigenvalues=values))
    return Reference(eigenvalues=values, path=path, cached=False)


def _resolve_reference(cfg: StudyConfig, spec: ProblemSpec,
                       min_p: int, min_n: int) -> list[float]:
    """Reference eigenvalues from a file path or an inline compute spec."""
    ref = cfg.reference
    if ref is None:
        raise ConfigError("this study needs a 'reference' entry "
                          "(a file path or {p_ref, n_ref, [growth_ref]})")
    if isinstance(ref, str):
        path = Path(ref)
        if not path.exists():
            raise ReferenceMissing(f"reference file not found: {path}")
        stored = json.loads(path.read_text())
        values = stored["eigenvalues"] if isinstance(stored, dict) else stored
        return [float(v) for v in values]
    if not isinstance(ref, dict):
        raise ConfigError("reference must be a path or a mapping")
    try:
        p_ref = int(ref["p_ref"])
        n_ref = int(ref["n_ref"])
    except KeyError as exc:
        raise ConfigError(f"inline reference needs {exc} set") from exc
    if p_ref < min_p + 2:
        raise ConfigError(f"reference degree {p_ref} must be >= study degree + 2 = {min_p + 2}")
    if n_ref <= min_n:
        raise ConfigError(f"reference mesh {n_ref} must be finer than the study's {min_n}")
    growth = float(ref.get("growth_ref", cfg.growth if spec.dimension == 2 else 0.0))
    cache = Path(cfg.reference_cache or Path(cfg.out) / "reference_cache")
    return run_reference(spec, p_ref, n_ref, cfg.k, cache, growth=growth,
                         dense_threshold=cfg.dense_threshold).eigenvalues


# ---------------------------------------------------------------------------
# fits

@dataclass
class ConvergenceFit:
    """Least-squares slope of log10(e) vs log10(h) over the points above the
    floor window; ``valid`` is False when fewer than 2 points survive."""

    eta: float
    mode: int
    h: list[float]
    errors: list[float]
    slope: float
    intercept: float
    points: int
    valid: bool


def fit_order(h, errors, eta: float = 0.0, mode: int = 1,
              floor: float = ERROR_FLOOR) -> ConvergenceFit:
    h = np.asarray(h, dtype=float)
    errors = np.asarray(errors, dtype=float)
    mask = np.isfinite(errors) & (errors > FLOOR_WINDOW * floor)
    if mask.sum() < 2:
        return ConvergenceFit(eta, mode, h.tolist(), errors.tolist(),
                              slope=float("nan"), intercept=float("nan"),
                              points=int(mask.sum()), valid=False)
    slope, intercept = np.polyfit(np.log10(h[mask]), np.log10(errors[mask]), 1)
    return ConvergenceFit(eta, mode, h.tolist(), errors.tolist(),
                          slope=float(slope), intercept=float(intercept),
                          points=int(mask.sum()), valid=True)


# ---------------------------------------------------------------------------
# studies

@dataclass
class StudyOutput:
    kind: str
    csv_path: Path | None
    rows: list
    extra: dict = field(default_factory=dict)


def solve_study(cfg: StudyConfig) -> StudyOutput:
    """Single discretization solve; prints eigenvalues, optional artifacts."""
    spec = cfg.problem()
    if spec.dimension == 1:
        ops, res = run_case_1d(spec, cfg.p, cfg.n, cfg.eta, cfg.k,
                               growth=cfg.growth, quad_order=cfg.quad_order,
                               quad_order_potential=cfg.quad_order_potential,
                               tol=cfg.tol, dense_threshold=cfg.dense_threshold)
        if cfg.export_matrices:
            out = Path(cfg.export_matrices)
            out.mkdir(parents=True, exist_ok=True)
            a, m = ops.system(cfg.eta)
            export_coo(a, out / "stiffness.txt")
            export_coo(m, out / "mass.txt")
    else:
        res = run_case_2d(spec, cfg.p, cfg.n, cfg.eta, cfg.k,
                          growth=cfg.growth, quad_order=cfg.quad_order,
                          quad_order_potential=cfg.quad_order_potential,
                          tol=cfg.tol, dense_threshold=cfg.dense_threshold).result
    rows = [[j + 1, float(v)] for j, v in enumerate(res.eigenvalues)]
    path = tables.write_csv(Path(cfg.out) / "eigenvalues.csv",
                            ["mode", "lambda"], rows)
    if cfg.json_output:
        tables.write_json(Path(cfg.out) / "eigenvalues.json", {
            "method": method_name(cfg.p, cfg.eta), "p": cfg.p, "eta": cfg.eta,
            "eigenvalues": [float(v) for v in res.eigenvalues],
        })
    return StudyOutput("solve", path, rows,
                       extra={"result": res, "iterations": res.iterations})


def method_name(p: int, eta: float) -> str:
    base = "fem" if p == 1 else "iga"
    return f"soft{base}" if eta != 0.0 else base


def eta_sweep(cfg: StudyConfig) -> StudyOutput:
    """Errors of the k lowest eigenvalues over a softness-parameter grid.

    Softness values that lose positive definiteness are recorded as rows of
    NaNs rather than aborting the sweep.
    """
    spec = cfg.problem()
    etas = cfg.eta_grid if cfg.eta_grid is not None else [cfg.eta]
    reference = _resolve_reference(cfg, spec, cfg.p, cfg.n)
    ops = build_operators_1d(spec, cfg.p, cfg.n, cfg.growth,
                             cfg.quad_order, cfg.quad_order_potential)
    rows = []
    for eta in etas:
        try:
            a, m = ops.system(eta)
            res = solve_smallest(a, m, k=cfg.k, tol=cfg.tol, gamma0=spec.shift,
                                 dense_threshold=cfg.dense_threshold)
            errs = [abs(res.eigenvalues[j] - reference[j]) for j in range(cfg.k)]
        except SoftnessTooLarge:
            errs = [float("nan")] * cfg.k
        rows.append([eta, *errs])
    header = ["eta"] + [f"err{j + 1}" for j in range(cfg.k)]
    path = tables.write_csv(Path(cfg.out) / "eta_sweep.csv", header, rows)
    return StudyOutput("eta-sweep", path, rows, extra={"reference": reference})


def convergence_study(cfg: StudyConfig) -> StudyOutput:
    """Errors across mesh refinements for each eta, with fitted orders."""
    spec = cfg.problem()
    etas = cfg.eta_grid if cfg.eta_grid is not None else [cfg.eta]
    ns = cfg.n_grid or []
    reference = _resolve_reference(cfg, spec, cfg.p, max(ns))
    rows = []
    errs_by_eta = {eta: [] for eta in etas}
    hs = []
    for n in ns:
        ops = build_operators_1d(spec, cfg.p, n, cfg.growth,
                                 cfg.quad_order, cfg.quad_order_potential)
        h = float(np.max(ops.space.mesh.element_sizes))
        hs.append(h)
        for eta in etas:
            a, m = ops.system(eta)
            res = solve_smallest(a, m, k=cfg.k, tol=cfg.tol, gamma0=spec.shift,
                                 dense_threshold=cfg.dense_threshold)
            errs = [abs(res.eigenvalues[j] - reference[j]) for j in range(cfg.k)]
            errs_by_eta[eta].append(errs)
            rows.append([n, h, eta, *errs])
    header = ["n", "h", "eta"] + [f"err{j + 1}" for j in range(cfg.k)]
    path = tables.write_csv(Path(cfg.out) / "convergence.csv", header, rows)
    fits = [fit_order(hs, [e[j] for e in errs_by_eta[eta]], eta=eta,
                      mode=j + 1, floor=cfg.error_floor)
            for eta in etas for j in range(cfg.k)]
    fit_rows = [[f.eta, f.mode, f.slope, f.intercept, f.points, int(f.valid)]
                for f in fits]
    fits_path = tables.write_csv(Path(cfg.out) / "convergence_fits.csv",
                                 ["eta", "mode", "slope", "intercept",
                                  "points", "valid"], fit_rows)
    return StudyOutput("convergence", path, rows,
                       extra={"fits": fits, "fits_path": fits_path,
                              "reference": reference})


def _envelope_prefix(errors: np.ndarray, floor: float) -> np.ndarray:
    """Indices of the truncation-dominated prefix: each point must decay by
    at least 2x from its predecessor and stay above the floor window."""
    keep = [0]
    for i in range(1, errors.size):
        if errors[i] < 0.5 * errors[i - 1] and errors[i] > FLOOR_WINDOW * floor:
            keep.append(i)
        else:
            break
    return np.asarray(keep)


def domain_study(cfg: StudyConfig) -> StudyOutput:
    """Truncation error vs domain half-width at fixed eta, with the
    exponential envelope fit log10(e) = slope * x_eps + intercept."""
    spec0 = cfg.problem()
    xg = [float(v) for v in cfg.xeps_grid or []]
    hg = [float(v) for v in cfg.h_grid or []]
    reference = _resolve_reference(cfg, spec0, cfg.p,
                                   int(round(2 * max(xg) / min(hg))))
    rows = []
    envelope = []
    for xe in xg:
        spec = dataclasses.replace(spec0, x_eps=xe)
        best = np.inf
        for h in hg:
            n = int(round(2 * xe / h))
            _, res = run_case_1d(spec, cfg.p, n, cfg.eta, 1,
                                 quad_order=cfg.quad_order,
                                 quad_order_potential=cfg.quad_order_potential,
                                 tol=cfg.tol, dense_threshold=cfg.dense_threshold)
            err = abs(res.eigenvalues[0] - reference[0])
            rows.append([xe, h, err])
            best = min(best, err)
        envelope.append(best)
    path = tables.write_csv(Path(cfg.out) / "domain_study.csv",
                            ["x_eps", "h", "err1"], rows)
    env = np.asarray(envelope)
    keep = _envelope_prefix(env, cfg.error_floor)
    if keep.size >= 2:
        slope, intercept = np.polyfit(np.asarray(xg)[keep], np.log10(env[keep]), 1)
        fit = {"eta": cfg.eta, "slope": float(slope),
               "intercept": float(intercept), "points": int(keep.size)}
    else:
        fit = {"eta": cfg.eta, "slope": float("nan"),
               "intercept": float("nan"), "points": int(keep.size)}
    fit_path = tables.write_csv(Path(cfg.out) / "domain_fit.csv",
                                ["eta", "slope", "intercept", "points"],
                                [[fit["eta"], fit["slope"], fit["intercept"],
                                  fit["points"]]])
    return StudyOutput("domain-study", path, rows,
                       extra={"fit": fit, "fit_path": fit_path,
                              "envelope": envelope, "reference": reference})


THREE_BODY_METHODS = ("fem", "softfem", "iga", "softiga")


def three_body(cfg: StudyConfig) -> StudyOutput:
    """Eigenvalue table for FEM/softFEM/IGA/softIGA on the graded 2D mesh,
    plus sampled eigenfunction grids of the most accurate method."""
    spec = cfg.problem()
    if spec.dimension != 2:
        raise ConfigError("three-body study needs dimension: 2")
    reference = _resolve_reference(cfg, spec, 2, cfg.n)
    eta_fem = cfg.eta_soft_fem if cfg.eta_soft_fem is not None else 1.0 / 12
    eta_iga = cfg.eta_soft_iga if cfg.eta_soft_iga is not None else 1.0 / 720
    methods = [("fem", 1, 0.0), ("softfem", 1, eta_fem),
               ("iga", 2, 0.0), ("softiga", 2, eta_iga)]
    rows = []
    payload = []
    samples = None
    for name, p, eta in methods:
        case = run_case_2d(spec, p, cfg.n, eta, cfg.k, growth=cfg.growth,
                           quad_order=cfg.quad_order,
                           quad_order_potential=cfg.quad_order_potential,
                           tol=cfg.tol, dense_threshold=cfg.dense_threshold)
        lam = [float(v) for v in case.result.eigenvalues]
        errs = [abs(lam[j] - reference[j]) for j in range(cfg.k)]
        rows.append([name, p, eta, *lam, *errs])
        payload.append({"method": name, "p": p, "eta": eta,
                        "eigenvalues": lam, "errors": errs})
        if name == "softiga":
            samples = case
    header = (["method", "p", "eta"]
              + [f"lambda{j + 1}" for j in range(cfg.k)]
              + [f"err{j + 1}" for j in range(cfg.k)])
    path = tables.write_csv(Path(cfg.out) / "three_body.csv", header, rows)
    extra = {"reference": reference, "payload": payload}
    if cfg.json_output:
        extra["json_path"] = tables.write_json(
            Path(cfg.out) / "three_body.json", payload)
    if cfg.grid_points > 0 and samples is not None:
        xs = np.linspace(-spec.x_eps, spec.x_eps, cfg.grid_points)
        grids = []
        for j in range(cfg.k):
            vals = sample_eigenfunction((samples.space_x, samples.space_y),
                                        samples.result.vectors[:, j], (xs, xs))
            grid_rows = [[x, y, vals[i, l]]
                         for i, x in enumerate(xs) for l, y in enumerate(xs)]
            grids.append(tables.write_csv(Path(cfg.out) / f"mode{j + 1}.csv",
                                          ["x", "y", "value"], grid_rows))
        extra["mode_grids"] = grids
    return StudyOutput("three-body", path, rows, extra=extra)


def bench(cfg: StudyConfig) -> StudyOutput:
    """Wall time of assemble+solve for the four methods at several sizes.

    Runs serially; per size the methods are interleaved across repetition
    cycles (so ambient load drift hits all methods alike) after one untimed
    warm-up, and the best time, mean, and relative standard deviation are
    reported.
    """
    spec = cfg.problem()
    sizes = cfg.n_grid or [cfg.n]
    eta_fem = cfg.eta_soft_fem if cfg.eta_soft_fem is not None else 1.0 / 12
    eta_iga = cfg.eta_soft_iga if cfg.eta_soft_iga is not None else 1.0 / 720
    methods = [("fem", 1, 0.0), ("softfem", 1, eta_fem),
               ("iga", 2, 0.0), ("softiga", 2, eta_iga)]

    def run_once(p, n, eta):
        if spec.dimension == 1:
            _, res = run_case_1d(spec, p, n, eta, cfg.k, growth=cfg.growth,
                                 tol=cfg.tol,
                                 dense_threshold=cfg.dense_threshold)
            return res
        return run_case_2d(spec, p, n, eta, cfg.k, growth=cfg.growth,
                           tol=cfg.tol,
                           dense_threshold=cfg.dense_threshold).result

    rows = []
    for n in sizes:
        times = {name: [] for name, _, _ in methods}
        cpu = {name: [] for name, _, _ in methods}
        iters = {}
        for name, p, eta in methods:  # warm-up, untimed
            run_once(p, n, eta)
        for _ in range(max(1, cfg.repeats)):
            for name, p, eta in methods:
                t0 = time.perf_counter()
                c0 = time.process_time()
                res = run_once(p, n, eta)
                cpu[name].append(time.process_time() - c0)
                times[name].append(time.perf_counter() - t0)
                iters[name] = res.iterations
        for name, p, eta in methods:
            stamps = np.asarray(times[name])
            rsd = float(stamps.std() / stamps.mean()) if stamps.size > 1 else 0.0
            rows.append([name, spec.dimension, p, eta, n, float(stamps.min()),
                         float(stamps.mean()), rsd, float(min(cpu[name])),
                         iters[name]])
    header = ["method", "dimension", "p", "eta", "n", "wall_time",
              "wall_time_mean", "wall_time_rsd", "cpu_time", "iterations"]
    path = tables.write_csv(Path(cfg.out) / "bench.csv", header, rows)
    return StudyOutput("bench", path, rows)


def reference_study(cfg: StudyConfig) -> StudyOutput:
    """Compute (or fetch) the reference eigenvalues named by the config."""
    spec = cfg.problem()
    cache = Path(cfg.reference_cache or Path(cfg.out) / "reference_cache")
    ref = run_reference(spec, cfg.p, cfg.n, cfg.k, cache, growth=cfg.growth,
                        quad_order=cfg.quad_order,
                        quad_order_potential=cfg.quad_order_potential,
                        dense_threshold=cfg.dense_threshold)
    rows = [[j + 1, v] for j, v in enumerate(ref.eigenvalues)]
    return StudyOutput("reference", ref.path, rows,
                       extra={"cached": ref.cached, "values": ref.eigenvalues})


_STUDIES = {
    "solve": solve_study,
    "reference": reference_study,
    "eta-sweep": eta_sweep,
    "convergence": convergence_study,
    "domain-study": domain_study,
    "three-body": three_body,
    "bench": bench,
}


def run_study(cfg: StudyConfig) -> StudyOutput:
    cfg.validate()
    return _STUDIES[cfg.study](cfg)
