"""Parameter sweeps of g2(0) by both methods and figure-dataset emission.

Sweep axes are in the internal Hamiltonian convention; ``axis_flip``
negates the emitted axis values for delta sweeps (the published figures
plot the detuning with the opposite sign).  CSV rows carry sentinel
strings ``err:<code>`` where a per-point solver failed; metadata lives in
a sibling JSON file, never inline.
"""

from __future__ import annotations

import csv
import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import __version__
from .amplitude import (ResonanceSingularityError, UndefinedCorrelationError,
                        g2_cavity, steady_amplitudes)
from .fock import FockBasis, two_mode_ops
from .lindblad import EmptyModeError, SingularLiouvillianError, g2_mode, \
    liouvillian, steady_state
from .model import SystemParams, strong_params, weak_params

AXES = ("delta", "lambda", "J", "g")
_AXIS_FIELD = {"delta": "delta", "lambda": "lambda_gain",
               "J": "hop_J", "g": "g_om"}

ROW_FIELDS = ("axis_value", "g2_1_amp", "g2_2_amp", "g2_1_me", "g2_2_me",
              "n1", "n2")


@dataclass(frozen=True)
class SweepSpec:
    axis: str
    range: tuple[float, float]
    points: int
    base: SystemParams
    method: str = "both"            # amplitude | lindblad | both
    cavity: str = "both"            # "1" | "2" | "both"
    axis_flip: bool = False
    cutoff: int = 3

    def __post_init__(self):
        if self.axis not in AXES:
            raise ValueError("axis must be one of %s" % (AXES,))
        if self.method not in ("amplitude", "lindblad", "both"):
            raise ValueError("bad method %r" % self.method)
        if self.points < 2:
            raise ValueError("points must be >= 2")
        if self.range[0] >= self.range[1]:
            raise ValueError("range must satisfy lo < hi")


@dataclass
class SweepResult:
    rows: list[dict]
    metadata: dict


def _worker_count() -> int:
    env = os.environ.get("BLOCKADE_THREADS")
    if env:
        return max(1, int(env))
    return min(4, os.cpu_count() or 1)


def _point(spec: SweepSpec, value: float) -> dict:
    value = float(value)        # builtin float: round-trippable repr in CSVs
    p = spec.base.replace(**{_AXIS_FIELD[spec.axis]: value})
    row: dict = {"axis_value": -value if (spec.axis_flip and spec.axis == "delta")
                 else value}
    want_1 = spec.cavity in ("1", "both")
    want_2 = spec.cavity in ("2", "both")

    if spec.method in ("amplitude", "both"):
        try:
            s = steady_amplitudes(p)
        except (ResonanceSingularityError, ValueError) as exc:
            s = None
            err = "err:%s" % type(exc).__name__
        for cav, key in ((1, "g2_1_amp"), (2, "g2_2_amp")):
            if (cav == 1 and not want_1) or (cav == 2 and not want_2):
                row[key] = ""
                continue
            if s is None:
                row[key] = err
                continue
            try:
                row[key] = g2_cavity(s, cav)
            except UndefinedCorrelationError:
                row[key] = "err:UndefinedCorrelationError"
    else:
        row["g2_1_amp"] = row["g2_2_amp"] = ""

    if spec.method in ("lindblad", "both"):
        try:
            basis = FockBasis(spec.cutoff, spec.cutoff)
            rho = steady_state(liouvillian(p, basis))
            ops = two_mode_ops(basis)
            for cav, want in ((1, want_1), (2, want_2)):
                keys = ("g2_%d_me" % cav, "n%d" % cav)
                if not want:
                    row[keys[0]] = row[keys[1]] = ""
                    continue
                try:
                    row[keys[0]], row[keys[1]] = g2_mode(rho, ops[cav - 1])
                except EmptyModeError:
                    row[keys[0]] = row[keys[1]] = "err:EmptyModeError"
        except (SingularLiouvillianError, ValueError) as exc:
            err = "err:%s" % type(exc).__name__
            row["g2_1_me"] = row["g2_2_me"] = row["n1"] = row["n2"] = err
    else:
        row["g2_1_me"] = row["g2_2_me"] = row["n1"] = row["n2"] = ""
    return row


def run_sweep(spec: SweepSpec) -> SweepResult:
    """Evaluate g2(0) over the axis grid; deterministic given the spec."""
    values = np.linspace(spec.range[0], spec.range[1], spec.points)
    t0 = time.perf_counter()
    with ThreadPoolExecutor(max_workers=_worker_count()) as pool:
        rows = list(pool.map(lambda v: _point(spec, v), values))
    meta = {
        "params": spec.base.to_dict(),
        "axis": spec.axis,
        "range": list(spec.range),
        "points": spec.points,
        "method": spec.method,
        "cavity": spec.cavity,
        "axis_flip": spec.axis_flip,
        "cutoff": spec.cutoff,
        "code_version": __version__,
        "wall_time_s": time.perf_counter() - t0,
    }
    return SweepResult(rows=rows, metadata=meta)


def write_csv(result: SweepResult, csv_path, meta_path=None) -> None:
    """CSV with a header row; floats in shortest round-trip decimals.

    Metadata goes to a sibling ``.json`` file unless ``meta_path`` is given.
    """
    with open(csv_path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(ROW_FIELDS)
        for row in result.rows:
            w.writerow([repr(float(v)) if isinstance(v, float) else v
                        for v in (row[k] for k in ROW_FIELDS)])
    if meta_path is None:
        meta_path = os.path.splitext(str(csv_path))[0] + ".json"
    with open(meta_path, "w") as fh:
        json.dump(result.metadata, fh, indent=2)


# Figure bindings.  Detuning ranges below are on the *emitted* axis; the
# internal sweep range is negated where flip is set.  Curve-value sets not
# printed in the captions are repo choices, recorded in the metadata.
_WEAK_LAMBDA_OPT = 0.93e-6
_WEAK_LAMBDA_OPT_CAV2 = 0.4e-6
_STRONG_LAMBDA_OPT = 1.1e-6
_STRONG_LAMBDA_OPT_CAV2 = 0.01e-6
_KAPPA = 0.002

FIGURE_IDS = ("2a", "2b", "3a", "3b", "4a", "4b", "5a", "5b")


def _figure_plan(figure_id: str) -> dict:
    weak, strong = weak_params(), strong_params()
    plans = {
        # analytic + master-equation curves, flipped delta axis
        "2a": dict(base=weak, axis="delta", rng=(-0.01, 0.01), flip=True,
                   method="both", cavity="1", curves=[
                       ("lambda_gain", v) for v in
                       (0.0, _WEAK_LAMBDA_OPT, 2 * _WEAK_LAMBDA_OPT)]),
        "2b": dict(base=weak, axis="delta", rng=(-0.01, 0.01), flip=True,
                   method="both", cavity="2", curves=[
                       ("lambda_gain", v) for v in
                       (0.0, _WEAK_LAMBDA_OPT_CAV2, 2 * _WEAK_LAMBDA_OPT_CAV2)]),
        "3a": dict(base=weak.replace(lambda_gain=_WEAK_LAMBDA_OPT),
                   axis="delta", rng=(-0.01, 0.01), flip=True,
                   method="amplitude", cavity="1",
                   curves=[("g_om", v) for v in (0.0, 0.02, 0.042)]),
        "3b": dict(base=weak.replace(lambda_gain=_WEAK_LAMBDA_OPT),
                   axis="delta", rng=(-0.01, 0.01), flip=True,
                   method="amplitude", cavity="1",
                   curves=[("hop_J", v) for v in
                           (0.0, 0.5 * _KAPPA, 0.95 * _KAPPA)]),
        "4a": dict(base=strong.replace(lambda_gain=_STRONG_LAMBDA_OPT),
                   axis="delta", rng=(-0.02, 0.1), flip=True,
                   method="both", cavity="1",
                   curves=[("lambda_gain", v) for v in
                           (0.0, _STRONG_LAMBDA_OPT, 2 * _STRONG_LAMBDA_OPT)]),
        "4b": dict(base=strong, axis="delta", rng=(-0.02, 0.1), flip=True,
                   method="both", cavity="2",
                   curves=[("lambda_gain", v) for v in
                           (0.0, _STRONG_LAMBDA_OPT_CAV2,
                            2 * _STRONG_LAMBDA_OPT_CAV2)]),
        # gain sweep at the first strong optimal detuning (reporting axis
        # 2.4e-2 -> internal -2.4e-2)
        "5a": dict(base=strong.replace(delta=-2.4e-2), axis="lambda",
                   rng=(-5e-6, 5e-6), flip=False, method="amplitude",
                   cavity="1", curves=[("g_om", v) for v in (0.0, 0.1, 0.2)]),
        "5b": dict(base=strong.replace(lambda_gain=_STRONG_LAMBDA_OPT),
                   axis="delta", rng=(-0.02, 0.1), flip=True,
                   method="amplitude", cavity="1",
                   curves=[("hop_J", v) for v in
                           (0.0, 4 * _KAPPA, 8 * _KAPPA)]),
    }
    if figure_id not in plans:
        raise ValueError("unknown figure id %r (choose from %s)"
                         % (figure_id, FIGURE_IDS))
    return plans[figure_id]


def figure_dataset(figure_id: str, outdir, points: int = 401,
                   cutoff: int = 3) -> list[str]:
    """Emit one CSV per curve of a published-figure panel plus metadata.

    Returns the written file paths (CSVs first, metadata JSON last).
    """
    plan = _figure_plan(figure_id)
    os.makedirs(outdir, exist_ok=True)
    lo, hi = plan["rng"]
    internal_rng = (-hi, -lo) if (plan["flip"] and plan["axis"] == "delta") \
        else (lo, hi)
    written = []
    curve_meta = []
    for i, (fld, val) in enumerate(plan["curves"]):
        base = plan["base"].replace(**{fld: val})
        spec = SweepSpec(axis=plan["axis"], range=internal_rng, points=points,
                         base=base, method=plan["method"],
                         cavity=plan["cavity"], axis_flip=plan["flip"],
                         cutoff=cutoff)
        result = run_sweep(spec)
        name = "fig%s_curve%d_%s_%s.csv" % (figure_id, i, fld, repr(val))
        path = os.path.join(outdir, name)
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(ROW_FIELDS)
            for row in result.rows:
                w.writerow([repr(float(v)) if isinstance(v, float) else v
                            for v in (row[k] for k in ROW_FIELDS)])
        written.append(path)
        curve_meta.append({"file": name, "varied": fld, "value": val,
                           "params": base.to_dict()})
    meta = {
        "figure": figure_id,
        "axis": plan["axis"],
        "emitted_range": [lo, hi],
        "axis_flip": plan["flip"],
        "points": points,
        "method": plan["method"],
        "cavity": plan["cavity"],
        "cutoff": cutoff,
        "code_version": __version__,
        "curve_values_are_repo_choice": figure_id in ("3a", "3b", "5a", "5b"),
        "curves": curve_meta,
    }
    meta_path = os.path.join(outdir, "fig%s_metadata.json" % figure_id)
    with open(meta_path, "w") as fh:
        json.dump(meta, fh, indent=2)
    written.append(meta_path)
    return written
