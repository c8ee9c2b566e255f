"""CSV/JSON report emission for the case-study pipeline.

All files are UTF-8 with LF line endings and `.` decimal separators; floats
are written with 6 significant digits so repeated runs are byte-identical.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Iterable

from .bands import BandCatalog, Dimension, HazardBand
from .probability import JointProbabilityTable, MarginalDistribution
from .risk import Assessment, risk_matrix
from .sampler import ScenarioStats

SAMPLES_COLUMNS = [
    "scenario_id",
    "friction_label",
    "visibility_label",
    "mu",
    "sight_ft",
    "joint_prob",
    "prob_score",
    "v_fhwa_mph",
    "v_scaled_mph",
    "v_advisory_mph",
    "reduction_pct",
    "severity_score",
    "risk_score",
    "risk_level",
]

REPLAY_COLUMNS = ["timestamp"] + SAMPLES_COLUMNS[1:]


def fmt(value) -> str:
    """Stable scalar formatting: floats at 6 significant digits."""
    if isinstance(value, float):
        return format(value, ".6g")
    return str(value)


def _write_csv(path: Path, header: list[str], rows: Iterable[list]) -> int:
    count = 0
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([fmt(v) for v in row])
            count += 1
    return count


def assessment_row(assessment: Assessment) -> list:
    p = assessment.speed_profile
    return [
        assessment.friction_label,
        assessment.visibility_label,
        assessment.reading.mu,
        assessment.reading.sight_distance,
        assessment.joint_probability,
        assessment.probability_score,
        p.v_fhwa,
        p.v_scaled,
        p.v_advisory,
        p.reduction_pct,
        assessment.severity_score,
        assessment.risk_score,
        assessment.risk_level.value,
    ]


def assessment_record(assessment: Assessment) -> dict:
    """JSON-friendly view of one assessment."""
    p = assessment.speed_profile
    return {
        "friction_label": assessment.friction_label,
        "visibility_label": assessment.visibility_label,
        "mu": assessment.reading.mu,
        "sight_ft": assessment.reading.sight_distance,
        "grade": assessment.reading.grade,
        "design_speed_mph": assessment.reading.design_speed,
        "joint_prob": assessment.joint_probability,
        "prob_score": assessment.probability_score,
        "v_fhwa_mph": p.v_fhwa,
        "v_scaled_mph": p.v_scaled,
        "v_advisory_mph": p.v_advisory,
        "reduction_pct": p.reduction_pct,
        "severity_score": assessment.severity_score,
        "risk_score": assessment.risk_score,
        "risk_level": assessment.risk_level.value,
    }


def write_samples(path: Path, rows: Iterable[tuple[int, Assessment]]) -> int:
    return _write_csv(
        path,
        SAMPLES_COLUMNS,
        ([scenario_id] + assessment_row(a) for scenario_id, a in rows),
    )


def write_scenario_stats(path: Path, stats: list[ScenarioStats]) -> int:
    header = [
        "scenario_id",
        "friction_label",
        "visibility_label",
        "practicality",
        "mean_risk",
        "std_risk",
        "lower_3sigma",
        "upper_3sigma",
        "min_risk",
        "max_risk",
    ]
    rows = (
        [
            s.scenario.scenario_id,
            s.scenario.friction_band.label,
            s.scenario.visibility_band.label,
            s.scenario.practicality,
            s.mean,
            s.std,
            s.lower_3sigma,
            s.upper_3sigma,
            s.min,
            s.max,
        ]
        for s in stats
    )
    return _write_csv(path, header, rows)


def write_heatmap(path: Path) -> int:
    matrix = risk_matrix()
    header = ["severity_score"] + [f"prob_{p}" for p in range(1, 6)]
    rows = (
        [s + 1] + [matrix[s][p][0] for p in range(5)]
        for s in range(5)
    )
    return _write_csv(path, header, rows)


def write_marginals(
    path: Path,
    catalog: BandCatalog,
    p_f: MarginalDistribution,
    p_v: MarginalDistribution,
) -> int:
    def rows():
        for band, dist in [(b, p_f) for b in catalog.friction_bands] + [
            (b, p_v) for b in catalog.visibility_bands
        ]:
            yield [
                band.dimension.value,
                band.label,
                band.lower,
                band.upper,
                band.crash_rate,
                dist[band.label],
            ]

    header = ["dimension", "label", "lower", "upper", "crash_rate", "probability"]
    return _write_csv(path, header, rows())


def write_joint(path: Path, table: JointProbabilityTable) -> int:
    header = [
        "friction_label",
        "visibility_label",
        "raw_joint",
        "normalized_joint",
        "probability_score",
    ]
    rows = (
        [e.friction_label, e.visibility_label, e.raw_joint, e.normalized_joint, e.probability_score]
        for e in table.entries
    )
    return _write_csv(path, header, rows)


def write_manifest(
    path: Path,
    command: str,
    version: str,
    config: dict,
    outputs: dict[str, int],
) -> None:
    manifest = {
        "command": command,
        "version": version,
        "config": config,
        "outputs": [
            {"path": name, "rows": rows} for name, rows in sorted(outputs.items())
        ],
    }
    with open(path, "w", newline="\n", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
