"""Three-phase sinusoidal signal model.

A scenario is a fundamental angular frequency plus an ordered list of phasor
segments.  Each segment fixes per-phase amplitudes and phase offsets; the
structural -2pi/3 and +2pi/3 displacements of phases b and c are applied at
evaluation time only, never stored.  All angles are radians; amplitudes are
per-unit.
"""

from __future__ import annotations

import json
import math
from bisect import bisect_right
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi

#: Structural phase displacements of phases a, b, c.
STRUCTURAL_SHIFTS = (0.0, -TWO_PI / 3.0, TWO_PI / 3.0)


class ScenarioError(ValueError):
    """Invalid scenario data or scenario document."""


def wrap_angle(angle: float) -> float:
    """Wrap an angle to the interval (-pi, pi]."""
    return math.pi - (math.pi - angle) % TWO_PI


@dataclass(frozen=True)
class ScenarioSegment:
    """One piecewise-constant phasor regime of a three-phase signal.

    ``start_angle`` is the electrical angle (omega*t) at which the segment
    begins.  ``phase_offsets`` hold only the per-phase offsets; the structural
    shifts of phases b and c are added by :func:`evaluate`.
    """

    start_angle: float
    amplitudes: tuple[float, float, float]
    phase_offsets: tuple[float, float, float]

    def __post_init__(self):
        if len(self.amplitudes) != 3 or len(self.phase_offsets) != 3:
            raise ScenarioError("amplitudes and phase_offsets must each hold three values")
        if min(self.amplitudes) < 0.0:
            raise ScenarioError(f"negative amplitude: {tuple(self.amplitudes)}")
        object.__setattr__(self, "start_angle", float(self.start_angle))
        object.__setattr__(self, "amplitudes", tuple(float(a) for a in self.amplitudes))
        # stored offsets live in (-pi, pi]
        object.__setattr__(
            self, "phase_offsets", tuple(wrap_angle(float(p)) for p in self.phase_offsets)
        )


@dataclass(frozen=True)
class PhasorScenario:
    """A fundamental frequency plus segments sorted by start angle."""

    omega: float
    segments: tuple[ScenarioSegment, ...]

    def __post_init__(self):
        if not self.omega > 0.0:
            raise ScenarioError(f"omega must be positive, got {self.omega}")
        segments = tuple(self.segments)
        if not segments:
            raise ScenarioError("scenario needs at least one segment")
        if segments[0].start_angle != 0.0:
            raise ScenarioError("first segment must start at angle 0")
        starts = [s.start_angle for s in segments]
        if any(b <= a for a, b in zip(starts, starts[1:])):
            raise ScenarioError("segment start angles must be strictly increasing")
        object.__setattr__(self, "omega", float(self.omega))
        object.__setattr__(self, "segments", segments)

    @property
    def frequency_hz(self) -> float:
        return self.omega / TWO_PI


@dataclass(frozen=True)
class SampleFrame:
    """One sampled (v_a, v_b, v_c) triple at electrical angle ``angle``."""

    angle: float
    values: np.ndarray

    def __post_init__(self):
        if self.angle < 0.0:
            raise ScenarioError(f"sample angle must be >= 0, got {self.angle}")
        object.__setattr__(self, "values", np.asarray(self.values, dtype=float))


def total_phases(segment: ScenarioSegment) -> np.ndarray:
    """Per-phase offsets with the structural shifts folded in."""
    return np.asarray(segment.phase_offsets) + np.asarray(STRUCTURAL_SHIFTS)


def evaluate(segment: ScenarioSegment, angle):
    """Instantaneous (v_a, v_b, v_c) of a segment at electrical angle ``angle``.

    v_k = V_k cos(angle + phi_k + s_k) with s = (0, -2pi/3, +2pi/3).  ``angle``
    may be a scalar or a 1-D array; for arrays the phase axis comes first and
    the result has shape (3, n).
    """
    amps = np.asarray(segment.amplitudes)
    phases = total_phases(segment)
    theta = np.asarray(angle, dtype=float)
    if theta.ndim == 0:
        return amps * np.cos(theta + phases)
    return amps[:, np.newaxis] * np.cos(theta[np.newaxis, :] + phases[:, np.newaxis])


def segment_at(scenario: PhasorScenario, angle: float) -> ScenarioSegment:
    """The segment active at ``angle``: largest start_angle <= angle.

    Boundaries are closed on the left, so a switch angle belongs to the newer
    segment.
    """
    if angle < 0.0:
        raise ScenarioError(f"angle must be >= 0, got {angle}")
    starts = [s.start_angle for s in scenario.segments]
    return scenario.segments[bisect_right(starts, angle) - 1]


def evaluate_scenario(scenario: PhasorScenario, angles) -> np.ndarray:
    """Evaluate a scenario on an angle grid, honoring segment switches.

    Returns an array of shape (3, len(angles)).
    """
    angles = np.asarray(angles, dtype=float)
    starts = np.array([s.start_angle for s in scenario.segments])
    index = np.searchsorted(starts, angles, side="right") - 1
    out = np.empty((3, angles.size))
    for k, segment in enumerate(scenario.segments):
        mask = index == k
        if mask.any():
            out[:, mask] = evaluate(segment, angles[mask])
    return out


def sample_angles(samples_per_period: int, periods: float) -> np.ndarray:
    """Uniform angle grid with step 2pi/samples_per_period covering [0, 2pi*periods]."""
    steps = math.ceil(samples_per_period * periods - 1e-9)
    return np.arange(steps + 1) * (TWO_PI / samples_per_period)


def sample_series(
    scenario: PhasorScenario, samples_per_period: int, periods: float
) -> list[SampleFrame]:
    """Uniformly sampled frames of a scenario.

    The grid step is 2pi/samples_per_period and the grid covers
    [0, 2pi*periods]; for N samples per period and an integral N*periods the
    series holds N*periods + 1 frames.
    """
    if samples_per_period < 4:
        raise ScenarioError(
            f"samples_per_period must be at least 4, got {samples_per_period}"
        )
    if not periods > 0.0:
        raise ScenarioError(f"periods must be positive, got {periods}")
    angles = sample_angles(samples_per_period, periods)
    values = evaluate_scenario(scenario, angles)
    return [SampleFrame(angle, values[:, i]) for i, angle in enumerate(angles)]


def _require(mapping, key, where):
    if not isinstance(mapping, dict):
        raise ScenarioError(f"{where} must be a JSON object")
    if key not in mapping:
        raise ScenarioError(f"missing field {key!r} in {where}")
    return mapping[key]


def _as_number(value, what):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioError(f"{what} must be a number, got {value!r}")
    return float(value)


def _as_triple(value, what):
    if not isinstance(value, list) or len(value) != 3:
        raise ScenarioError(f"{what} must be an array of three numbers")
    return tuple(_as_number(v, what) for v in value)


def parse_scenario(text: str) -> PhasorScenario:
    """Parse a scenario JSON document.

    Expected shape::

        {"frequency_hz": 50.0,
         "segments": [{"start_periods": 0.0,
                       "amplitudes_pu": [1.0, 1.0, 1.0],
                       "phase_offsets_deg": [-50.0, -50.0, -50.0]}, ...]}

    ``start_periods`` maps to start_angle = 2pi*start_periods and the offsets
    are converted from degrees to radians.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"malformed scenario document: {exc}") from exc
    freq = _as_number(_require(doc, "frequency_hz", "scenario"), "frequency_hz")
    if not freq > 0.0:
        raise ScenarioError(f"frequency_hz must be positive, got {freq}")
    raw_segments = _require(doc, "segments", "scenario")
    if not isinstance(raw_segments, list) or not raw_segments:
        raise ScenarioError("segments must be a non-empty array")
    segments = []
    for i, raw in enumerate(raw_segments):
        where = f"segments[{i}]"
        start = _as_number(_require(raw, "start_periods", where), f"{where}.start_periods")
        if start < 0.0:
            raise ScenarioError(f"{where}.start_periods must be >= 0, got {start}")
        amplitudes = _as_triple(_require(raw, "amplitudes_pu", where), f"{where}.amplitudes_pu")
        offsets_deg = _as_triple(
            _require(raw, "phase_offsets_deg", where), f"{where}.phase_offsets_deg"
        )
        segments.append(
            ScenarioSegment(
                start_angle=TWO_PI * start,
                amplitudes=amplitudes,
                phase_offsets=tuple(math.radians(d) for d in offsets_deg),
            )
        )
    return PhasorScenario(omega=TWO_PI * freq, segments=tuple(segments))


def load_scenario(path) -> PhasorScenario:
    """Read and parse a scenario file."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_scenario(fh.read())
