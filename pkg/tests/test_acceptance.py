"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.
"""

import contextlib
import csv
import math

import numpy as np
import pytest

from hazardrisk import (
    EnvironmentReading,
    SamplerConfig,
    assess,
    generate_dataset,
    normalize_marginals,
    scenario_statistics,
)
from hazardrisk.cli import main


@contextlib.contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {name}: FAIL")
        raise
    print(f"ACCEPTANCE {name}: PASS")


@pytest.fixture(scope="module")
def case_study(catalog, joint_table):
    samples = generate_dataset(SamplerConfig(seed=42, samples_per_scenario=100), catalog)
    scores = [
        assess(
            EnvironmentReading(mu=r.mu, sight_distance=r.sight_ft), catalog, joint_table
        ).risk_score
        for r in samples.records
    ]
    stats = scenario_statistics(samples, scores)
    return samples, scores, stats


def by_labels(stats, f, v):
    return next(
        s
        for s in stats
        if s.scenario.friction_band.label == f and s.scenario.visibility_band.label == v
    )


def test_criterion_1_marginal_normalization(catalog):
    with criterion("1 marginal normalization"):
        friction = normalize_marginals(list(catalog.friction_bands))
        visibility = normalize_marginals(list(catalog.visibility_bands))
        assert [p for _, p in friction.probs] == pytest.approx(
            [0.4466, 0.2730, 0.1862, 0.0943], abs=5e-4
        )
        assert [p for _, p in visibility.probs] == pytest.approx(
            [0.7142, 0.1890, 0.0706, 0.0262], abs=5e-4
        )


def test_criterion_2_joint_probability_scores(joint_table):
    with criterion("2 joint probability scores"):
        # Brute-force recomputation from the crash-rate tables.
        rf = {"Dry": 1.90, "Wet": 3.75, "Snow": 5.50, "Icy": 9.00}
        rv = {"Clear": 0.685, "Rain/Snow": 1.85, "Dense Fog": 4.95, "Very Dense Fog": 18.70}
        pf = {k: v / sum(rf.values()) for k, v in rf.items()}
        pv = {k: v / sum(rv.values()) for k, v in rv.items()}

        def bin_score(p):
            return 1 if p <= 0.01 else 2 if p <= 0.02 else 3 if p <= 0.05 else 4 if p <= 0.1 else 5

        spot_checks = {
            ("Dry", "Clear"): 1,
            ("Icy", "Very Dense Fog"): 5,
            ("Dry", "Very Dense Fog"): 4,
            ("Wet", "Dense Fog"): 3,
            ("Snow", "Dense Fog"): 4,
        }
        for (f, v), expected in spot_checks.items():
            assert bin_score(pf[f] * pv[v]) == expected  # oracle self-check
            assert joint_table.lookup(f, v).probability_score == expected


def test_criterion_3_severity_pipeline(catalog, joint_table):
    with criterion("3 severity pipeline spot checks"):
        def flat_advisory(mu, s, v_design=75.0):
            v = (-3.67 + math.sqrt(13.47 + 0.12 * s / mu)) / (0.06 / mu)
            return min(v_design, 15 / 22 * v)

        a = assess(EnvironmentReading(mu=0.8, sight_distance=500), catalog, joint_table)
        assert a.speed_profile.v_advisory == pytest.approx(52.1, abs=0.1)
        assert a.speed_profile.v_advisory == pytest.approx(flat_advisory(0.8, 500), abs=0.1)
        assert a.severity_score == 3

        b = assess(EnvironmentReading(mu=0.1, sight_distance=150), catalog, joint_table)
        assert b.speed_profile.v_advisory == pytest.approx(11.6, abs=0.1)
        assert b.speed_profile.v_advisory == pytest.approx(flat_advisory(0.1, 150), abs=0.1)
        assert b.severity_score == 5


def test_criterion_4_case_study_statistics(case_study):
    with criterion("4 case-study statistical reproduction"):
        _, _, stats = case_study
        assert by_labels(stats, "Dry", "Clear").mean == 1.0
        assert by_labels(stats, "Dry", "Clear").std == 0.0
        assert by_labels(stats, "Icy", "Very Dense Fog").mean == 25.0
        assert by_labels(stats, "Icy", "Very Dense Fog").std == 0.0
        assert by_labels(stats, "Dry", "Very Dense Fog").mean == pytest.approx(20.0, abs=1.0)
        assert by_labels(stats, "Dry", "Dense Fog").mean == pytest.approx(5.6, abs=1.0)
        assert by_labels(stats, "Icy", "Rain/Snow").mean == pytest.approx(8.4, abs=1.5)
        benign = [
            ("Dry", "Clear"),
            ("Dry", "Rain/Snow"),
            ("Wet", "Clear"),
            ("Snow", "Clear"),
            ("Wet", "Rain/Snow"),
            ("Icy", "Clear"),
            ("Snow", "Rain/Snow"),
        ]
        for f, v in benign:
            assert by_labels(stats, f, v).mean <= 5.0, (f, v)


def test_criterion_5_ordering_property(case_study):
    with criterion("5 mean-risk ordering"):
        _, _, stats = case_study
        top_four = stats[-4:]
        assert all(
            s.scenario.visibility_band.label == "Very Dense Fog" for s in top_four
        )
        vdf = {s.scenario.friction_band.label: s.mean for s in top_four}
        assert vdf["Wet"] == vdf["Snow"] == vdf["Icy"] == 25.0
        assert vdf["Dry"] < 25.0


def test_criterion_6_property_suites(catalog, joint_table, case_study, tmp_path):
    with criterion("6 property suites"):
        from hazardrisk import (
            fhwa_safe_speed,
            normalize_marginals as norm,
            risk_level,
            score_probability,
            score_severity,
        )
        from hazardrisk.bands import Dimension, HazardBand

        # Bin partitions: exhaustive boundary sweeps, no gaps or overlaps.
        p_scores = [score_probability(p) for p in np.linspace(0, 1, 100_001)]
        assert p_scores == sorted(p_scores) and set(p_scores) == {1, 2, 3, 4, 5}
        s_scores = [score_severity(r) for r in np.linspace(0, 100, 100_001)]
        assert s_scores == sorted(s_scores) and set(s_scores) == {1, 2, 3, 4, 5}
        assert len([risk_level(s) for s in range(1, 26)]) == 25

        # Monotonicity of the safe-speed formula over random valid inputs.
        rng = np.random.default_rng(123)
        mus = rng.uniform(0.05, 1.0, 10_000)
        sights = rng.uniform(1.0, 6562.0, 10_000)
        for mu, s in zip(mus, sights):
            assert fhwa_safe_speed(mu, 0, s * 1.01) > fhwa_safe_speed(mu, 0, s)
            assert fhwa_safe_speed(min(mu * 1.01, 1.0 + 1e-9), 0, s) > fhwa_safe_speed(mu, 0, s) or mu * 1.01 > 1

        # Scale invariance of normalization under random positive rescaling.
        for scale in rng.uniform(1e-3, 1e3, 100):
            bands = [
                HazardBand(Dimension.FRICTION, b.label, b.lower, b.upper, b.crash_rate * scale)
                for b in catalog.friction_bands
            ]
            base = norm(list(catalog.friction_bands))
            scaled = norm(bands)
            for (_, p1), (_, p2) in zip(base.probs, scaled.probs):
                assert abs(p1 - p2) < 1e-12

        # All 1,600 samples inside their band bounds.
        samples, _, _ = case_study
        by_id = {s.scenario_id: s for s in samples.scenarios}
        sampling = {b.label: b for b in catalog.sampling_visibility_bands}
        assert len(samples.records) == 1600
        for record in samples.records:
            scenario = by_id[record.scenario_id]
            fband = scenario.friction_band
            vband = sampling[scenario.visibility_band.label]
            assert fband.lower <= record.mu <= fband.upper
            assert vband.lower <= record.sight_ft <= vband.upper

        # samples.csv audit: risk = probability x severity on every row.
        out = tmp_path / "audit"
        assert main(["simulate", "--seed", "42", "--out", str(out)]) == 0
        with open(out / "samples.csv", newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert len(rows) == 1600
        for row in rows:
            assert int(row["risk_score"]) == int(row["prob_score"]) * int(row["severity_score"])


def test_criterion_7_determinism(tmp_path):
    with criterion("7 byte-identical reruns"):
        out1, out2 = tmp_path / "run1", tmp_path / "run2"
        flags = ["simulate", "--seed", "42", "--samples", "100"]
        assert main(flags + ["--out", str(out1)]) == 0
        assert main(flags + ["--out", str(out2)]) == 0
        names = sorted(p.name for p in out1.iterdir())
        assert names == sorted(p.name for p in out2.iterdir())
        for name in names:
            assert (out1 / name).read_bytes() == (out2 / name).read_bytes(), name
