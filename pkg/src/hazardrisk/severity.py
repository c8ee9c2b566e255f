"""Severity: safe advisory speed from friction, sight distance, grade, and
design speed, and ordinal scoring of the required percent speed reduction."""

from __future__ import annotations

import math
from dataclasses import dataclass

# Severity score bins on percent speed reduction, left-closed.
_SEVERITY_THRESHOLDS = ((6.67, 1), (20.0, 2), (100.0 / 3.0, 3), (200.0 / 3.0, 4))

# Nebraska-DOT scaling of the raw safe speed.
SPEED_SCALE = 15.0 / 22.0


@dataclass(frozen=True)
class SpeedProfile:
    """The advisory-speed chain: raw safe speed, scaled speed, final advisory
    capped at design speed, and percent reduction from design speed."""

    v_fhwa: float
    v_scaled: float
    v_advisory: float
    v_design: float
    reduction_pct: float


def fhwa_safe_speed(mu: float, grade: float, sight_distance: float) -> float:
    """Safe speed (mph) for the available sight distance on a surface with the
    given friction coefficient and decimal grade."""
    if mu + grade <= 0:
        raise ValueError(f"mu + grade must be > 0, got {mu + grade}")
    if sight_distance < 0:
        raise ValueError(f"sight distance must be >= 0, got {sight_distance}")
    mg = mu + grade
    v = (-3.67 + math.sqrt(13.47 + 0.12 * sight_distance / mg)) / (0.06 / mg)
    return max(v, 0.0)


def advisory_speed(v_fhwa: float, v_design: float) -> SpeedProfile:
    """Scale the raw safe speed and cap at design speed; the advisory never
    exceeds what the road design or current conditions allow."""
    if v_fhwa < 0:
        raise ValueError(f"safe speed must be >= 0, got {v_fhwa}")
    if v_design <= 0:
        raise ValueError(f"design speed must be > 0, got {v_design}")
    v_scaled = SPEED_SCALE * v_fhwa
    v_advisory = min(v_design, v_scaled)
    # Clamp: the division can overshoot 100 by one ulp when v_advisory is 0.
    reduction_pct = min(100.0, max(0.0, 100.0 * (v_design - v_advisory) / v_design))
    return SpeedProfile(
        v_fhwa=v_fhwa,
        v_scaled=v_scaled,
        v_advisory=v_advisory,
        v_design=v_design,
        reduction_pct=reduction_pct,
    )


def score_severity(reduction_pct: float) -> int:
    """Ordinal 1-5 severity score of a percent speed reduction."""
    if not 0 <= reduction_pct <= 100:
        raise ValueError(f"reduction percent must be in [0, 100], got {reduction_pct}")
    for threshold, score in _SEVERITY_THRESHOLDS:
        if reduction_pct < threshold:
            return score
    return 5


def speed_profile(
    mu: float, grade: float, sight_distance: float, v_design: float
) -> SpeedProfile:
    """Full advisory-speed chain for one reading."""
    return advisory_speed(fhwa_safe_speed(mu, grade, sight_distance), v_design)
