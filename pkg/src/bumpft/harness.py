"""Comparison harness: k-sweeps of numeric vs asymptotic F(k), decay fits, I/O.

A sweep pairs the quadrature oracle with the closed-form asymptotics at
each frequency and records both values with error diagnostics.  Relative
error is only meaningful away from the oscillation zeros of F, so
consumers measure it at *envelope points*: records whose |F| is the
maximum of a centered five-point window.

``fit_decay`` performs linear least squares of

    log|envelope| ~ log C - p log k - c sqrt(k)

on the envelope points with k >= 20, recovering the decay-law
parameters (p, c) of the canonical transform and their analogues for
other parameter choices.
"""

from __future__ import annotations

import io
import json
import math
import os
from dataclasses import asdict, dataclass
from typing import IO, Iterable, Literal, Sequence

import numpy as np

from .bump import BumpParams, eval_bump
from .oscquad import fourier_transform_numeric, integrate_adaptive
from .saddle import asymptotic_ft

__all__ = [
    "SweepRecord",
    "DecayFit",
    "run_sweep",
    "envelope_points",
    "fit_decay",
    "normalization",
    "emit",
    "load_records",
]

# rel_err denominator floor: documents rather than hides the zeros of F
REL_ERR_FLOOR = 1e-300

# decay fits only use the asymptotic regime
FIT_KMIN = 20.0
FIT_MIN_POINTS = 10

CSV_HEADER = "k,f_numeric,f_asymptotic,abs_err,rel_err,quad_abs_error,n_evals"


@dataclass(frozen=True)
class SweepRecord:
    """One row of a numeric-vs-asymptotic comparison sweep."""

    k: float
    f_numeric: float
    f_asymptotic: float
    abs_err: float
    rel_err: float
    quad_abs_error: float
    n_evals: int


@dataclass(frozen=True)
class DecayFit:
    """Result of fitting log|envelope| = log C - p log k - c sqrt(k)."""

    p_exponent: float
    c_root: float
    log_amplitude: float
    residual_rms: float


def _k_grid(k_min: float, k_max: float, n_points: int, spacing: str) -> np.ndarray:
    if not (math.isfinite(k_min) and math.isfinite(k_max)):
        raise ValueError("k_min and k_max must be finite")
    if k_min <= 0.0:
        raise ValueError(f"k_min must be > 0 (asymptotics need k > 0), got {k_min}")
    if k_max < k_min:
        raise ValueError(f"need k_min <= k_max, got [{k_min}, {k_max}]")
    if n_points < 2:
        raise ValueError(f"n_points must be >= 2, got {n_points}")
    if spacing == "linear":
        return np.linspace(k_min, k_max, n_points)
    if spacing == "log":
        return np.geomspace(k_min, k_max, n_points)
    raise ValueError(f"spacing must be 'linear' or 'log', got {spacing!r}")


def run_sweep(
    params: BumpParams,
    k_min: float,
    k_max: float,
    n_points: int,
    spacing: Literal["linear", "log"] = "linear",
    tol: float = 1e-12,
) -> list[SweepRecord]:
    """Sweep k over the grid, pairing quadrature with the asymptotic formula.

    Raises RuntimeError with the offending k if any quadrature row fails
    to converge; rows are returned in ascending k.
    """
    records = []
    for k in _k_grid(k_min, k_max, n_points, spacing):
        k = float(k)
        quad = fourier_transform_numeric(params, k, tol)
        if not quad.converged:
            raise RuntimeError(
                f"quadrature failed to converge at k={k:.17g} "
                f"(abs_error={quad.abs_error:.3e}, n_panels={quad.n_panels})"
            )
        f_asym = asymptotic_ft(params, k)
        abs_err = abs(quad.value - f_asym)
        records.append(
            SweepRecord(
                k=k,
                f_numeric=quad.value,
                f_asymptotic=f_asym,
                abs_err=abs_err,
                rel_err=abs_err / max(abs(quad.value), REL_ERR_FLOOR),
                quad_abs_error=quad.abs_error,
                n_evals=quad.n_evals,
            )
        )
    return records


def envelope_points(values: Sequence[float]) -> np.ndarray:
    """Mask of records whose |value| is the maximum of its centered 5-window.

    Only interior indices with a full window qualify, so sequences
    shorter than 5 have no envelope points.
    """
    a = np.abs(np.asarray(values, dtype=float))
    mask = np.zeros(len(a), dtype=bool)
    for i in range(2, len(a) - 2):
        if a[i] == a[i - 2 : i + 3].max():
            mask[i] = True
    return mask


def fit_decay(
    records: Iterable[SweepRecord],
    use: Literal["numeric", "asymptotic"] = "numeric",
) -> DecayFit:
    """Fit the decay law to the envelope of one sweep branch.

    Uses records with k >= 20, extracts envelope points, and requires at
    least 10 of them.
    """
    recs = [r for r in records if r.k >= FIT_KMIN]
    if use == "numeric":
        vals = np.array([r.f_numeric for r in recs])
    elif use == "asymptotic":
        vals = np.array([r.f_asymptotic for r in recs])
    else:
        raise ValueError(f"use must be 'numeric' or 'asymptotic', got {use!r}")
    ks = np.array([r.k for r in recs])
    mask = envelope_points(vals)
    ke, ve = ks[mask], np.abs(vals[mask])
    keep = ve > 0.0
    ke, ve = ke[keep], ve[keep]
    if len(ke) < FIT_MIN_POINTS:
        raise ValueError(
            f"need at least {FIT_MIN_POINTS} envelope points with k >= "
            f"{FIT_KMIN:g}, found {len(ke)}"
        )
    design = np.column_stack([np.ones_like(ke), -np.log(ke), -np.sqrt(ke)])
    coef, *_ = np.linalg.lstsq(design, np.log(ve), rcond=None)
    resid = design @ coef - np.log(ve)
    return DecayFit(
        p_exponent=float(coef[1]),
        c_root=float(coef[2]),
        log_amplitude=float(coef[0]),
        residual_rms=float(np.sqrt(np.mean(resid**2))),
    )


def normalization(params: BumpParams, tol: float = 1e-12) -> float:
    """int_0^1 f_{alpha,beta}(x) dx, for cross-parameter spectrum comparison."""
    result = integrate_adaptive(lambda x: eval_bump(params, x), 0.0, 1.0, tol)
    if not result.converged:
        raise RuntimeError(
            f"normalization quadrature failed to converge "
            f"(abs_error={result.abs_error:.3e})"
        )
    return result.value


# ----------------------------------------------------------------------
# serialization
# ----------------------------------------------------------------------

def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _records_csv(records: Sequence[SweepRecord]) -> str:
    lines = [CSV_HEADER]
    for r in records:
        lines.append(
            ",".join(
                [
                    _fmt(r.k),
                    _fmt(r.f_numeric),
                    _fmt(r.f_asymptotic),
                    _fmt(r.abs_err),
                    _fmt(r.rel_err),
                    _fmt(r.quad_abs_error),
                    str(r.n_evals),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def _fit_csv(fit: DecayFit) -> str:
    header = "p_exponent,c_root,log_amplitude,residual_rms"
    row = ",".join(
        _fmt(v)
        for v in (fit.p_exponent, fit.c_root, fit.log_amplitude, fit.residual_rms)
    )
    return header + "\n" + row + "\n"


def emit(
    obj: Sequence[SweepRecord] | DecayFit,
    format: Literal["csv", "json"] = "csv",
    destination: str | os.PathLike | IO[str] | None = None,
) -> None:
    """Write sweep records or a decay fit as CSV or JSON.

    ``destination`` is a path or an open text stream.  Floats are
    written with 17 significant digits so that parsing the output
    reproduces the records bit-exactly; output bytes are deterministic
    for identical inputs.
    """
    if format not in ("csv", "json"):
        raise ValueError(f"format must be 'csv' or 'json', got {format!r}")
    if isinstance(obj, DecayFit):
        text = _fit_csv(obj) if format == "csv" else json.dumps(asdict(obj), indent=2) + "\n"
    else:
        records = list(obj)
        if format == "csv":
            text = _records_csv(records)
        else:
            text = json.dumps([asdict(r) for r in records], indent=2) + "\n"

    if destination is None or destination == "-":
        import sys

        sys.stdout.write(text)
    elif hasattr(destination, "write"):
        destination.write(text)
    else:
        try:
            with open(destination, "w", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise OSError(f"cannot write {destination}: {exc}") from exc


def _records_from_rows(rows: Iterable[dict]) -> list[SweepRecord]:
    return [
        SweepRecord(
            k=float(row["k"]),
            f_numeric=float(row["f_numeric"]),
            f_asymptotic=float(row["f_asymptotic"]),
            abs_err=float(row["abs_err"]),
            rel_err=float(row["rel_err"]),
            quad_abs_error=float(row["quad_abs_error"]),
            n_evals=int(row["n_evals"]),
        )
        for row in rows
    ]


def load_records(source: str | os.PathLike | IO[str]) -> list[SweepRecord]:
    """Read sweep records back from a CSV or JSON file written by ``emit``."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        try:
            with open(source, "r") as fh:
                text = fh.read()
        except OSError as exc:
            raise OSError(f"cannot read {source}: {exc}") from exc
    stripped = text.lstrip()
    if stripped.startswith("["):
        return _records_from_rows(json.loads(text))
    import csv

    reader = csv.DictReader(io.StringIO(text))
    return _records_from_rows(reader)
