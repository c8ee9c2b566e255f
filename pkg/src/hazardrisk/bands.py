"""Hazard band catalog: friction and visibility bands, reading classification,
and the 16-scenario grid.

Two visibility catalogs coexist: the literature bands that carry crash rates
(used for probability lookup) and the sensor-aligned bands that cover the
instrument's full 33-6562 ft envelope (used for classifying readings and for
sampling). The two share band labels, which is how probability scores attach
to classified readings.
"""

from __future__ import annotations

import csv
from bisect import bisect_right
from dataclasses import dataclass
from enum import Enum
from pathlib import Path


class Dimension(str, Enum):
    FRICTION = "friction"
    VISIBILITY = "visibility"


@dataclass(frozen=True)
class HazardBand:
    """A labeled interval of friction coefficient or sight distance with its
    empirical crash rate (crashes per 10^6 vehicle miles traveled)."""

    dimension: Dimension
    label: str
    lower: float
    upper: float
    crash_rate: float

    def __post_init__(self):
        if not self.lower < self.upper:
            raise ValueError(
                f"band {self.label!r}: lower ({self.lower}) must be < upper ({self.upper})"
            )
        if self.crash_rate <= 0:
            raise ValueError(f"band {self.label!r}: crash_rate must be > 0")
        if self.dimension is Dimension.FRICTION and not (0 <= self.lower and self.upper <= 1):
            raise ValueError(f"band {self.label!r}: friction bounds must lie in [0, 1]")
        if self.dimension is Dimension.VISIBILITY and not (0 <= self.lower and self.upper <= 6562):
            raise ValueError(f"band {self.label!r}: visibility bounds must lie in [0, 6562] ft")

    @property
    def midpoint(self) -> float:
        return (self.lower + self.upper) / 2.0


@dataclass(frozen=True)
class EnvironmentReading:
    """One environment observation: friction coefficient, sight distance in
    feet, decimal road grade, and the roadway design speed in mph."""

    mu: float
    sight_distance: float
    grade: float = 0.0
    design_speed: float = 75.0

    def __post_init__(self):
        if not 0 < self.mu <= 1:
            raise ValueError(f"mu must be in (0, 1], got {self.mu}")
        if self.sight_distance < 0:
            raise ValueError(f"sight_distance must be >= 0, got {self.sight_distance}")
        if self.mu + self.grade <= 0:
            raise ValueError(f"mu + grade must be > 0, got {self.mu + self.grade}")
        if self.design_speed <= 0:
            raise ValueError(f"design_speed must be > 0, got {self.design_speed}")


@dataclass(frozen=True)
class Scenario:
    """One friction-band x visibility-band pairing of the 16-scenario grid."""

    scenario_id: int
    friction_band: HazardBand
    visibility_band: HazardBand
    practicality: str


def _check_bands(bands: tuple[HazardBand, ...], dimension: Dimension, name: str) -> None:
    if len(bands) != 4:
        raise ValueError(f"{name}: expected exactly 4 bands, got {len(bands)}")
    for band in bands:
        if band.dimension is not dimension:
            raise ValueError(f"{name}: band {band.label!r} has wrong dimension")
    for lo, hi in zip(bands, bands[1:]):
        if hi.lower < lo.upper:
            raise ValueError(f"{name}: bands {lo.label!r} and {hi.label!r} overlap or are unsorted")


@dataclass(frozen=True)
class BandCatalog:
    """Friction bands plus the two visibility band sets, each sorted ascending
    by lower bound."""

    friction_bands: tuple[HazardBand, ...]
    visibility_bands: tuple[HazardBand, ...]
    sampling_visibility_bands: tuple[HazardBand, ...]

    def __post_init__(self):
        _check_bands(self.friction_bands, Dimension.FRICTION, "friction_bands")
        _check_bands(self.visibility_bands, Dimension.VISIBILITY, "visibility_bands")
        _check_bands(
            self.sampling_visibility_bands, Dimension.VISIBILITY, "sampling_visibility_bands"
        )
        sampling = self.sampling_visibility_bands
        for lo, hi in zip(sampling, sampling[1:]):
            if hi.lower != lo.upper:
                raise ValueError(
                    f"sampling_visibility_bands: gap between {lo.label!r} and {hi.label!r}"
                )


# Crash rates: friction by surface condition, visibility by range band
# (crashes per 10^6 VMT, transportation-safety literature values).
_DEFAULT_FRICTION = (
    ("Icy", 0.05, 0.15, 9.00),
    ("Snow", 0.20, 0.30, 5.50),
    ("Wet", 0.40, 0.60, 3.75),
    ("Dry", 0.70, 0.90, 1.90),
)
_DEFAULT_VISIBILITY = (
    ("Very Dense Fog", 33.0, 164.0, 18.70),
    ("Dense Fog", 164.0, 328.0, 4.95),
    ("Rain/Snow", 328.0, 656.0, 1.85),
    ("Clear", 1640.0, 6562.0, 0.685),
)
# Sensor-aligned bands covering the instrument envelope contiguously;
# crash rates carried over by label for probability lookup.
_DEFAULT_SAMPLING_VISIBILITY = (
    ("Very Dense Fog", 33.0, 164.0, 18.70),
    ("Dense Fog", 164.0, 1000.0, 4.95),
    ("Rain/Snow", 1000.0, 4000.0, 1.85),
    ("Clear", 4000.0, 6500.0, 0.685),
)

# Grid rows in presentation order: friction from best to worst grip,
# visibility from clearest to densest, friction-major.
_PRACTICALITY = {
    ("Dry", "Clear"): "Common (normal driving)",
    ("Dry", "Rain/Snow"): "Rare (brief post-rain dry roads)",
    ("Dry", "Dense Fog"): "Possible (radiation fog on dry pavement)",
    ("Dry", "Very Dense Fog"): "Very Rare (extreme fog, no residual moisture)",
    ("Wet", "Clear"): "Common (roads slowly drying after rain)",
    ("Wet", "Rain/Snow"): "Common (ongoing precipitation)",
    ("Wet", "Dense Fog"): "Possible (humid/fog during or after rain)",
    ("Wet", "Very Dense Fog"): "Uncommon (heavy fog while wet)",
    ("Snow", "Clear"): "Common (post-snowfall clear skies)",
    ("Snow", "Rain/Snow"): "Rare (mixed sleet/rain over snow)",
    ("Snow", "Dense Fog"): "Rare (cold fog over snow-laden roads)",
    ("Snow", "Very Dense Fog"): "Common (active snowfall with low visibility)",
    ("Icy", "Clear"): "Possible (morning black ice before melting)",
    ("Icy", "Rain/Snow"): "Rare (freezing rain conditions)",
    ("Icy", "Dense Fog"): "Rare (ice fog in extreme cold)",
    ("Icy", "Very Dense Fog"): "Common (snow/ice with blowing snow)",
}


def _make_bands(rows, dimension: Dimension) -> tuple[HazardBand, ...]:
    return tuple(
        HazardBand(dimension, label, lower, upper, rate) for label, lower, upper, rate in rows
    )


def default_catalog() -> BandCatalog:
    """Built-in band catalog with the default crash rates."""
    return BandCatalog(
        friction_bands=_make_bands(_DEFAULT_FRICTION, Dimension.FRICTION),
        visibility_bands=_make_bands(_DEFAULT_VISIBILITY, Dimension.VISIBILITY),
        sampling_visibility_bands=_make_bands(
            _DEFAULT_SAMPLING_VISIBILITY, Dimension.VISIBILITY
        ),
    )


def load_catalog(path: str | Path) -> BandCatalog:
    """Load a band catalog from a crash-rate CSV.

    Expected header: ``dimension,label,lower,upper,crash_rate`` with dimension
    in {friction, visibility, sampling_visibility}.
    """
    groups: dict[str, list] = {"friction": [], "visibility": [], "sampling_visibility": []}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        required = {"dimension", "label", "lower", "upper", "crash_rate"}
        if reader.fieldnames is None or not required.issubset(reader.fieldnames):
            raise ValueError(
                f"crash-rate config {path}: header must contain {sorted(required)}"
            )
        for lineno, row in enumerate(reader, start=2):
            dim = row["dimension"].strip().lower()
            if dim not in groups:
                raise ValueError(f"crash-rate config {path} line {lineno}: unknown dimension {dim!r}")
            groups[dim].append(
                (
                    row["label"].strip(),
                    float(row["lower"]),
                    float(row["upper"]),
                    float(row["crash_rate"]),
                )
            )
    for dim, rows in groups.items():
        if not rows:
            raise ValueError(f"crash-rate config {path}: no {dim} bands defined")
        rows.sort(key=lambda r: r[1])
    return BandCatalog(
        friction_bands=_make_bands(groups["friction"], Dimension.FRICTION),
        visibility_bands=_make_bands(groups["visibility"], Dimension.VISIBILITY),
        sampling_visibility_bands=_make_bands(
            groups["sampling_visibility"], Dimension.VISIBILITY
        ),
    )


def _band_cuts(bands: tuple[HazardBand, ...]) -> list[float]:
    # Cut between adjacent bands at the midpoint of the gap (the shared
    # boundary when contiguous); a value equal to a cut goes to the upper band.
    return [(lo.upper + hi.lower) / 2.0 for lo, hi in zip(bands, bands[1:])]


def classify_value(value: float, bands: tuple[HazardBand, ...]) -> HazardBand:
    """Map a continuous value to exactly one band of a sorted band list.

    Bands are extended to contiguous coverage of the whole axis: gaps split at
    their midpoints and values beyond the outermost bands map to the nearest
    outer band.
    """
    return bands[bisect_right(_band_cuts(bands), value)]


def classify(
    reading: EnvironmentReading, catalog: BandCatalog
) -> tuple[HazardBand, HazardBand]:
    """Classify a reading into its friction band and its (sensor-aligned)
    visibility band."""
    friction_band = classify_value(reading.mu, catalog.friction_bands)
    visibility_band = classify_value(reading.sight_distance, catalog.sampling_visibility_bands)
    return friction_band, visibility_band


def scenario_grid(catalog: BandCatalog) -> list[Scenario]:
    """All 16 friction x visibility scenarios in presentation order
    (friction-major, best conditions first)."""
    scenarios = []
    sid = 1
    for fband in reversed(catalog.friction_bands):
        for vband in reversed(catalog.visibility_bands):
            practicality = _PRACTICALITY.get((fband.label, vband.label), "")
            scenarios.append(Scenario(sid, fband, vband, practicality))
            sid += 1
    return scenarios
