"""Crash probability: marginal normalization of crash rates, joint probability
of independent friction/visibility hazards, and ordinal probability scoring."""

from __future__ import annotations

from dataclasses import dataclass

from .bands import Dimension, HazardBand

# Probability score thresholds on the normalized joint probability.
# Intervals are left-open/right-closed except the lowest, which is closed
# at both ends.
_PROBABILITY_THRESHOLDS = ((0.010, 1), (0.020, 2), (0.050, 3), (0.100, 4))


@dataclass(frozen=True)
class MarginalDistribution:
    """Normalized crash probabilities for one hazard dimension, in band order."""

    dimension: Dimension
    probs: tuple[tuple[str, float], ...]

    def __getitem__(self, label: str) -> float:
        for band_label, p in self.probs:
            if band_label == label:
                return p
        raise KeyError(label)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.probs)


@dataclass(frozen=True)
class JointEntry:
    friction_label: str
    visibility_label: str
    raw_joint: float
    normalized_joint: float
    probability_score: int


@dataclass(frozen=True)
class JointProbabilityTable:
    """Joint crash probabilities for all friction x visibility pairs,
    friction-major in marginal order."""

    entries: tuple[JointEntry, ...]

    def lookup(self, friction_label: str, visibility_label: str) -> JointEntry:
        for entry in self.entries:
            if (entry.friction_label, entry.visibility_label) == (
                friction_label,
                visibility_label,
            ):
                return entry
        raise KeyError((friction_label, visibility_label))


def normalize_marginals(bands: list[HazardBand]) -> MarginalDistribution:
    """Rescale a band list's crash rates into a probability distribution,
    preserving order."""
    if not bands:
        raise ValueError("cannot normalize an empty band list")
    dimensions = {band.dimension for band in bands}
    if len(dimensions) != 1:
        raise ValueError("all bands must share one dimension")
    if any(band.crash_rate <= 0 for band in bands):
        raise ValueError("crash rates must all be > 0")
    total = sum(band.crash_rate for band in bands)
    probs = tuple((band.label, band.crash_rate / total) for band in bands)
    return MarginalDistribution(dimension=dimensions.pop(), probs=probs)


def joint_probability(
    p_f: MarginalDistribution, p_v: MarginalDistribution
) -> JointProbabilityTable:
    """Joint probability table under independence of friction and visibility.

    Raw products are renormalized over all pairs; an identity when both
    marginals sum to one, but it restores a proper distribution when a
    user-supplied table is unnormalized. Scores are assigned from the
    normalized values.
    """
    if p_f.dimension is not Dimension.FRICTION or p_v.dimension is not Dimension.VISIBILITY:
        raise ValueError("expected a friction marginal and a visibility marginal")
    if len(p_f.probs) != 4 or len(p_v.probs) != 4:
        raise ValueError("expected 4 bands per marginal")
    raw = {
        (fl, vl): pf * pv
        for fl, pf in p_f.probs
        for vl, pv in p_v.probs
    }
    total = sum(raw.values())
    entries = tuple(
        JointEntry(
            friction_label=fl,
            visibility_label=vl,
            raw_joint=raw[(fl, vl)],
            normalized_joint=raw[(fl, vl)] / total,
            probability_score=score_probability(raw[(fl, vl)] / total),
        )
        for fl, _ in p_f.probs
        for vl, _ in p_v.probs
    )
    return JointProbabilityTable(entries=entries)


def score_probability(p: float) -> int:
    """Ordinal 1-5 probability score of a normalized joint probability."""
    if not 0 <= p <= 1:
        raise ValueError(f"probability must be in [0, 1], got {p}")
    for threshold, score in _PROBABILITY_THRESHOLDS:
        if p <= threshold:
            return score
    return 5
