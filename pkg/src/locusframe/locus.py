"""Locus-aligned basis construction.

The instantaneous vector of a sinusoidal three-phase triple traces a closed
planar curve in abc space: a circle when balanced, an ellipse in general, and
a line segment in the degenerate case.  Sampling the trajectory at an
orientation angle theta_o and a quarter period later yields two vectors e1,
e2 that span the locus plane and satisfy

    v(theta) = cos(theta - theta_o) e1 + sin(theta - theta_o) e2.

The third basis vector is the plane normal scaled to norm sqrt(3), which is
independent of theta_o.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .waveform import (
    SampleFrame,
    ScenarioSegment,
    evaluate,
    total_phases,
    wrap_angle,
    TWO_PI,
)

#: orientation that samples the trajectory when phase a peaks (Clarke-compatible)
PHASE_A_PEAK = "phase-a-peak"
#: orientation that aligns e1 with the semi-major axis of the locus
MAX_NORM = "max-norm"

#: relative cross-product threshold at or below which a locus counts as linear
DEGENERACY_RTOL = 1e-9
#: absolute norm floor below which a basis vector counts as null
DEGENERACY_ATOL = 1e-12
#: profiles with a_amplitude <= CIRCLE_RTOL * c_level count as circular
CIRCLE_RTOL = 1e-9
#: tolerance on the quarter-period separation of two measurement frames
QUARTER_PERIOD_TOL = 1e-9
#: minimum samples per period accepted by basis_from_stream
MIN_STREAM_RATE = 64

_NORMAL_SCALE = math.sqrt(3.0)


class LocusError(Exception):
    """Base class for locus construction and measurement failures."""


class DegenerateLocusError(LocusError):
    """The locus is a line segment; no plane normal exists."""


class UndefinedOrientationError(LocusError):
    """Phase a has zero amplitude, so its peak defines no orientation."""


class CircularLocusError(LocusError):
    """The locus is a circle; no orientation maximizes the norm."""


class MeasurementError(LocusError):
    """Base class for sample-based estimation failures."""


class NotQuarterPeriodError(MeasurementError):
    """Two measurement frames are not a quarter period apart."""


class InsufficientSpanError(MeasurementError):
    """A sampled series does not cover the required angle window."""


class InsufficientRateError(MeasurementError):
    """A sampled series is below the minimum sampling rate."""


@dataclass(frozen=True)
class NormProfile:
    """Coefficients of ||v(theta)||^2 = c_level - a_amplitude * sin(2*theta + psi)."""

    c_level: float
    a_amplitude: float
    psi: float


@dataclass(frozen=True)
class LocusBasis:
    """Locus-aligned basis: e1, e2 span the locus plane, e3 is the scaled normal.

    ``degeneracy`` is ||e1 x e2|| / (||e1|| ||e2||) in [0, 1]; values near zero
    flag a (nearly) linear locus.
    """

    e1: np.ndarray
    e2: np.ndarray
    e3: np.ndarray
    theta_o: float
    degeneracy: float


def basis_vectors(segment: ScenarioSegment, theta_o: float):
    """In-plane basis: the segment evaluated at theta_o and a quarter period later."""
    return evaluate(segment, theta_o), evaluate(segment, theta_o + 0.5 * math.pi)


def degeneracy_metric(e1, e2) -> float:
    """||e1 x e2|| / (||e1|| ||e2||), clipped to [0, 1]; 0 when either norm vanishes."""
    e1 = np.asarray(e1, dtype=float)
    e2 = np.asarray(e2, dtype=float)
    n1 = np.linalg.norm(e1)
    n2 = np.linalg.norm(e2)
    if n1 == 0.0 or n2 == 0.0:
        return 0.0
    return min(1.0, float(np.linalg.norm(np.cross(e1, e2)) / (n1 * n2)))


def normal_vector(e1, e2) -> np.ndarray:
    """Unit normal of span(e1, e2), scaled to norm sqrt(3).

    Raises DegenerateLocusError when e1 and e2 are (nearly) collinear or one of
    them (nearly) vanishes, i.e. the locus is a line segment and defines no
    plane.
    """
    e1 = np.asarray(e1, dtype=float)
    e2 = np.asarray(e2, dtype=float)
    n1 = np.linalg.norm(e1)
    n2 = np.linalg.norm(e2)
    cross = np.cross(e1, e2)
    cross_norm = np.linalg.norm(cross)
    if n1 <= DEGENERACY_ATOL or n2 <= DEGENERACY_ATOL or cross_norm <= DEGENERACY_RTOL * n1 * n2:
        raise DegenerateLocusError(
            f"linear locus: |e1 x e2| = {cross_norm:.3e} with |e1| = {n1:.3e}, |e2| = {n2:.3e}"
        )
    return _NORMAL_SCALE * cross / cross_norm


def theta_phase_a_peak(segment: ScenarioSegment) -> float:
    """Orientation at which phase a peaks: -phi_a, wrapped to (-pi, pi]."""
    if segment.amplitudes[0] == 0.0:
        raise UndefinedOrientationError("phase a has zero amplitude; its peak is undefined")
    return wrap_angle(-segment.phase_offsets[0])


def norm_profile(segment: ScenarioSegment) -> NormProfile:
    """Closed-form coefficients of the squared norm of the rotating vector.

    With total phases q_k (structural shifts included),

        ||v(theta)||^2 = sum_k V_k^2 cos^2(theta + q_k)
                       = C - A sin(2 theta + psi),

    where C = sum V_k^2 / 2, A = hypot(N, D) / 2, psi = atan2(-N, D), and
    N = sum V_k^2 cos(2 q_k), D = sum V_k^2 sin(2 q_k).  A is always >= 0;
    psi is 0 by convention when N = D = 0 (circular locus).
    """
    squares = np.asarray(segment.amplitudes) ** 2
    doubled = 2.0 * total_phases(segment)
    n_coef = float(np.sum(squares * np.cos(doubled)))
    d_coef = float(np.sum(squares * np.sin(doubled)))
    c_level = float(np.sum(squares)) / 2.0
    a_amplitude = 0.5 * math.hypot(n_coef, d_coef)
    psi = math.atan2(-n_coef, d_coef) if a_amplitude > 0.0 else 0.0
    return NormProfile(c_level=c_level, a_amplitude=a_amplitude, psi=psi)


def theta_max_norm(segment: ScenarioSegment) -> float:
    """Orientation maximizing ||v(theta)||: -pi/4 - psi/2, wrapped to (-pi, pi].

    This aligns e1 with the semi-major axis of the elliptical locus and makes
    e1, e2 orthogonal.  Raises CircularLocusError when the norm profile is
    flat, in which case every orientation is equivalent and callers should
    fall back to the phase-a peak.
    """
    profile = norm_profile(segment)
    if profile.a_amplitude <= CIRCLE_RTOL * profile.c_level:
        raise CircularLocusError(
            f"circular locus: swing {profile.a_amplitude:.3e} below threshold"
        )
    return wrap_angle(-0.25 * math.pi - 0.5 * profile.psi)


def resolve_orientation(segment: ScenarioSegment, orientation) -> float:
    """Orientation angle for a segment.

    ``orientation`` is PHASE_A_PEAK, MAX_NORM, or an explicit angle in radians
    (wrapped to (-pi, pi]).  MAX_NORM falls back to the phase-a peak when the
    locus is circular.
    """
    if isinstance(orientation, str):
        if orientation == PHASE_A_PEAK:
            return theta_phase_a_peak(segment)
        if orientation == MAX_NORM:
            try:
                return theta_max_norm(segment)
            except CircularLocusError:
                return theta_phase_a_peak(segment)
        raise ValueError(f"unknown orientation {orientation!r}")
    return wrap_angle(float(orientation))


def basis_from_vectors(e1, e2, theta_o: float) -> LocusBasis:
    """Complete a locus basis from two in-plane vectors (adds e3 and metadata)."""
    e1 = np.asarray(e1, dtype=float)
    e2 = np.asarray(e2, dtype=float)
    return LocusBasis(
        e1=e1,
        e2=e2,
        e3=normal_vector(e1, e2),
        theta_o=theta_o,
        degeneracy=degeneracy_metric(e1, e2),
    )


def build_basis(segment: ScenarioSegment, orientation=PHASE_A_PEAK) -> LocusBasis:
    """Resolve the orientation, then build the full locus basis for a segment."""
    theta_o = resolve_orientation(segment, orientation)
    e1, e2 = basis_vectors(segment, theta_o)
    return basis_from_vectors(e1, e2, theta_o)


def basis_from_samples(frame1: SampleFrame, frame2: SampleFrame):
    """In-plane basis from two measured triples a quarter period apart.

    e1 and e2 are the measured values verbatim; the implied orientation angle
    is frame1.angle.  Raises NotQuarterPeriodError when the angular separation
    differs from pi/2 by more than QUARTER_PERIOD_TOL.
    """
    gap = frame2.angle - frame1.angle
    if abs(gap - 0.5 * math.pi) > QUARTER_PERIOD_TOL:
        raise NotQuarterPeriodError(
            f"frames are {gap!r} rad apart; expected pi/2 within {QUARTER_PERIOD_TOL}"
        )
    return frame1.values.copy(), frame2.values.copy()


def basis_from_stream(series: Sequence[SampleFrame], t1_angle: float):
    """Estimate the in-plane basis from a uniformly sampled series.

    Linearly interpolates the series at t1_angle and t1_angle + pi/2; the
    implied orientation angle is t1_angle.  The series must cover
    [t1_angle, t1_angle + pi/2] (InsufficientSpanError) and carry at least
    MIN_STREAM_RATE samples per period (InsufficientRateError).
    """
    t2_angle = t1_angle + 0.5 * math.pi
    if len(series) < 2:
        raise InsufficientSpanError("series holds fewer than two samples")
    angles = np.array([frame.angle for frame in series])
    step = angles[1] - angles[0]
    if step <= 0.0 or np.any(np.abs(np.diff(angles) - step) > 1e-9):
        raise ValueError("series is not uniformly sampled")
    rate = TWO_PI / step
    if rate < MIN_STREAM_RATE - 1e-9:
        raise InsufficientRateError(
            f"{rate:.1f} samples per period; need at least {MIN_STREAM_RATE}"
        )
    if t1_angle < angles[0] - 1e-12 or t2_angle > angles[-1] + 1e-12:
        raise InsufficientSpanError(
            f"series spans [{angles[0]:.6f}, {angles[-1]:.6f}] rad, "
            f"estimation needs [{t1_angle:.6f}, {t2_angle:.6f}]"
        )
    values = np.stack([frame.values for frame in series], axis=1)
    e1 = np.array([np.interp(t1_angle, angles, values[k]) for k in range(3)])
    e2 = np.array([np.interp(t2_angle, angles, values[k]) for k in range(3)])
    return e1, e2
