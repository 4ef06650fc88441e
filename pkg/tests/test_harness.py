"""Tests for the sweep engine, envelope extraction, decay fit, and I/O."""

import io
import json
import math

import numpy as np
import pytest

from bumpft import (
    CANONICAL_AMPLITUDE,
    BumpParams,
    DecayFit,
    SweepRecord,
    emit,
    envelope_points,
    fit_decay,
    fourier_transform_numeric,
    load_records,
    normalization,
    run_sweep,
)

CANON = BumpParams.canonical()


def _phase(k):
    return k - math.sqrt(k) - 3.0 * math.pi / 8.0


def _envelope(k):
    return CANONICAL_AMPLITUDE * k**-0.75 * math.exp(-math.sqrt(k))


def _peak_k(n):
    # k where the canonical phase hits n*pi, i.e. cos = +-1 exactly
    target = n * math.pi + 3.0 * math.pi / 8.0
    root = (1.0 + math.sqrt(1.0 + 4.0 * target)) / 2.0
    return root * root


def _record(k, value):
    return SweepRecord(
        k=k, f_numeric=value, f_asymptotic=value, abs_err=0.0, rel_err=0.0,
        quad_abs_error=0.0, n_evals=0,
    )


def synthetic_decay_records(k_lo=20.0, k_hi=300.0):
    """Analytic decay-law samples whose local maxima sit exactly on the envelope."""
    records = []
    n = 0
    while _peak_k(n) < k_lo:
        n += 1
    while _peak_k(n) <= k_hi:
        kp = _peak_k(n)
        for dk in (-0.9, -0.45, 0.0, 0.45, 0.9):
            k = kp + dk
            records.append(_record(k, _envelope(k) * math.cos(_phase(k))))
        n += 1
    return records


class TestRunSweep:
    def test_rows_ascending_and_consistent(self):
        recs = run_sweep(CANON, 1.0, 20.0, 12, "linear", 1e-12)
        assert len(recs) == 12
        ks = [r.k for r in recs]
        assert ks == sorted(ks)
        for r in recs:
            assert r.abs_err == abs(r.f_numeric - r.f_asymptotic)
            assert r.rel_err == r.abs_err / max(abs(r.f_numeric), 1e-300)
            assert r.quad_abs_error <= 1e-12
            assert r.n_evals > 0

    def test_log_spacing(self):
        recs = run_sweep(CANON, 1.0, 100.0, 5, "log", 1e-10)
        ks = np.array([r.k for r in recs])
        ratios = ks[1:] / ks[:-1]
        assert np.allclose(ratios, ratios[0], rtol=1e-12)

    def test_degenerate_sweep(self):
        recs = run_sweep(CANON, 10.0, 10.0, 2, "linear", 1e-12)
        assert len(recs) == 2
        for r in recs:
            assert math.isfinite(r.f_numeric) and math.isfinite(r.f_asymptotic)

    def test_validation(self):
        with pytest.raises(ValueError):
            run_sweep(CANON, 0.0, 10.0, 5)
        with pytest.raises(ValueError):
            run_sweep(CANON, 10.0, 5.0, 5)
        with pytest.raises(ValueError):
            run_sweep(CANON, 1.0, 10.0, 1)
        with pytest.raises(ValueError):
            run_sweep(CANON, 1.0, 10.0, 5, "cubic")

    def test_generalized_trend_downward(self):
        from scipy.stats import spearmanr

        recs = run_sweep(BumpParams(3.0, 1.0), 10.0, 200.0, 50, "log", 1e-12)
        vals = np.array([r.f_numeric for r in recs])
        rel = np.array([r.rel_err for r in recs])
        ks = np.array([r.k for r in recs])
        mask = envelope_points(vals)
        assert mask.sum() >= 5
        assert spearmanr(ks[mask], rel[mask]).statistic < 0.0


class TestEnvelopePoints:
    def test_simple_peaks(self):
        vals = [0.0, 1.0, 0.5, -3.0, 0.2, 2.0, 0.1, 0.0, 0.0]
        mask = envelope_points(vals)
        assert list(np.where(mask)[0]) == [3, 5]

    def test_short_sequences_have_none(self):
        assert not envelope_points([1.0, 2.0, 3.0, 4.0]).any()

    def test_monotone_has_no_interior_peaks(self):
        assert not envelope_points(np.exp(-np.linspace(0, 5, 40))).any()


class TestFitDecay:
    def test_recovers_analytic_law(self):
        # the fitter must recover (p=3/4, c=1) from analytically generated
        # samples of the decay law, no quadrature involved
        fit = fit_decay(synthetic_decay_records(), use="numeric")
        assert abs(fit.p_exponent - 0.75) < 1e-6
        assert abs(fit.c_root - 1.0) < 1e-6
        assert abs(fit.log_amplitude - math.log(CANONICAL_AMPLITUDE)) < 1e-6
        assert fit.residual_rms < 1e-9

    def test_asymptotic_branch_selection(self):
        recs = [
            SweepRecord(k=r.k, f_numeric=0.0, f_asymptotic=r.f_numeric,
                        abs_err=0.0, rel_err=0.0, quad_abs_error=0.0, n_evals=0)
            for r in synthetic_decay_records()
        ]
        fit = fit_decay(recs, use="asymptotic")
        assert abs(fit.p_exponent - 0.75) < 1e-6

    def test_low_k_records_are_ignored(self):
        recs = synthetic_decay_records()
        polluted = [_record(2.0 + 0.1 * i, 1e6) for i in range(40)] + recs
        fit = fit_decay(polluted, use="numeric")
        assert abs(fit.p_exponent - 0.75) < 1e-6

    def test_insufficient_envelope_points(self):
        with pytest.raises(ValueError):
            fit_decay(synthetic_decay_records(20.0, 60.0)[:20], use="numeric")

    def test_bad_branch_name(self):
        with pytest.raises(ValueError):
            fit_decay(synthetic_decay_records(), use="midpoint")


class TestNormalization:
    def test_canonical_value(self):
        assert abs(normalization(CANON, 1e-12) - 0.22199690808403972) < 1e-12

    def test_collapses_for_large_beta(self):
        assert normalization(BumpParams(2.0, 20.0), 1e-14) < 1e-9

    def test_twice_normalization_is_zero_frequency_transform(self):
        half = normalization(CANON, 1e-12)
        full = fourier_transform_numeric(CANON, 0.0, 1e-12).value
        assert abs(2.0 * half - full) < 1e-11


class TestEmitAndLoad:
    def _some_records(self):
        return run_sweep(CANON, 2.0, 12.0, 6, "linear", 1e-10)

    def test_csv_header_only_when_empty(self):
        buf = io.StringIO()
        emit([], format="csv", destination=buf)
        assert buf.getvalue() == (
            "k,f_numeric,f_asymptotic,abs_err,rel_err,quad_abs_error,n_evals\n"
        )

    def test_single_record_two_lines(self):
        buf = io.StringIO()
        emit(self._some_records()[:1], format="csv", destination=buf)
        lines = buf.getvalue().splitlines()
        assert len(lines) == 2

    def test_csv_round_trip_bit_exact(self):
        recs = self._some_records()
        buf = io.StringIO()
        emit(recs, format="csv", destination=buf)
        parsed = load_records(io.StringIO(buf.getvalue()))
        assert parsed == recs

    def test_json_round_trip_bit_exact(self):
        recs = self._some_records()
        buf = io.StringIO()
        emit(recs, format="json", destination=buf)
        parsed = load_records(io.StringIO(buf.getvalue()))
        assert parsed == recs

    def test_byte_determinism(self):
        recs = self._some_records()
        bufs = []
        for _ in range(2):
            buf = io.StringIO()
            emit(recs, format="csv", destination=buf)
            bufs.append(buf.getvalue())
        assert bufs[0] == bufs[1]

    def test_file_destination(self, tmp_path):
        path = tmp_path / "sweep.csv"
        recs = self._some_records()
        emit(recs, format="csv", destination=path)
        assert load_records(path) == recs

    def test_fit_json(self):
        fit = DecayFit(p_exponent=0.75, c_root=1.0, log_amplitude=0.8, residual_rms=0.01)
        buf = io.StringIO()
        emit(fit, format="json", destination=buf)
        data = json.loads(buf.getvalue())
        assert data["p_exponent"] == 0.75
        assert set(data) == {"p_exponent", "c_root", "log_amplitude", "residual_rms"}

    def test_missing_file_reports_path(self, tmp_path):
        with pytest.raises(OSError, match="no_such"):
            load_records(tmp_path / "no_such.csv")

    def test_bad_format(self):
        with pytest.raises(ValueError):
            emit([], format="xml", destination=io.StringIO())
