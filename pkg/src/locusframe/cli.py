"""Command-line front end for scenario validation, matrices, and pipelines.

Subcommands:

* ``validate``: parse a scenario file and summarize it.
* ``matrix``: print the forward and inverse frame matrices for one segment.
* ``simulate``: run the transform pipelines over a sampled grid, write CSVs.
* ``measure``: estimate the frame matrix from sampled data and report the
  deviation from the analytic one.

Exit codes: 0 success, 2 validation error, 3 degenerate locus, 4 measurement
error.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from . import locus, transform, waveform
from .locus import MAX_NORM, PHASE_A_PEAK
from .waveform import TWO_PI, ScenarioError

#: frame tokens accepted by simulate --frames
SIMULATE_FRAMES = ("abc", "locus123", "clarke", "dq0")

_CSV_HEADERS = {
    "abc": "t,Va,Vb,Vc",
    "locus123": "t,V1,V2,V3",
    "clarke_ab0": "t,Valpha,Vbeta,V0",
    "dq0": "t,Vd,Vq,V0",
}


def parse_orientation(text: str):
    """argparse type for --orientation: a named choice or ``angle:<radians>``."""
    if text in (PHASE_A_PEAK, MAX_NORM):
        return text
    if text.startswith("angle:"):
        try:
            return float(text[len("angle:"):])
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad angle in {text!r}") from None
    raise argparse.ArgumentTypeError(
        f"orientation must be {PHASE_A_PEAK}, {MAX_NORM}, or angle:<radians>, got {text!r}"
    )


def parse_frames(text: str):
    """argparse type for --frames: comma-separated subset of SIMULATE_FRAMES."""
    tokens = [token.strip() for token in text.split(",") if token.strip()]
    if not tokens:
        raise argparse.ArgumentTypeError("no frames requested")
    for token in tokens:
        if token not in SIMULATE_FRAMES:
            raise argparse.ArgumentTypeError(
                f"unknown frame {token!r}; choose from {', '.join(SIMULATE_FRAMES)}"
            )
    return tokens


def orientation_label(orientation) -> str:
    """File-name label of an orientation choice.

    ``classical`` for the phase-a peak, ``desired`` for max-norm, and
    ``angle<millirad>`` for an explicit angle, e.g. ``angle-1048``.
    """
    if orientation == PHASE_A_PEAK:
        return "classical"
    if orientation == MAX_NORM:
        return "desired"
    millirad = round(waveform.wrap_angle(float(orientation)) * 1000.0)
    return f"angle{millirad}"


def matrix_lines(matrix) -> list[str]:
    """Rows of a 3x3 matrix, each entry sign-aligned with 3 decimals."""
    matrix = np.asarray(matrix, dtype=float)
    return ["".join(f"{entry:8.3f}" for entry in row) for row in matrix]


def write_series_csv(path, series: transform.TransformedSeries) -> None:
    """Write a series as CSV: header row, then %.6f values, comma-separated."""
    header = _CSV_HEADERS[series.frame_kind]
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(header + "\n")
        coords = series.coords
        for i, angle in enumerate(series.angles):
            handle.write(
                f"{angle:.6f},{coords[0, i]:.6f},{coords[1, i]:.6f},{coords[2, i]:.6f}\n"
            )


def _segment_degeneracy(segment) -> float:
    # canonical probe orientation; the metric is zero for a linear locus
    # no matter where it is probed
    try:
        theta = locus.theta_phase_a_peak(segment)
    except locus.UndefinedOrientationError:
        theta = 0.0
    return locus.degeneracy_metric(*locus.basis_vectors(segment, theta))


def _pick_segment(scenario, index_1based: int | None):
    """Segment by 1-based CLI index; None means the last segment."""
    count = len(scenario.segments)
    if index_1based is None:
        return count - 1
    if not 1 <= index_1based <= count:
        raise ScenarioError(
            f"segment index {index_1based} out of range 1..{count}"
        )
    return index_1based - 1


def cmd_validate(args) -> int:
    scenario = waveform.load_scenario(args.scenario)
    print(f"scenario: {scenario.frequency_hz:.6f} Hz, {len(scenario.segments)} segment(s)")
    for k, segment in enumerate(scenario.segments, start=1):
        amps = " ".join(f"{a:.6f}" for a in segment.amplitudes)
        offs = " ".join(f"{math.degrees(p):.6f}" for p in segment.phase_offsets)
        metric = _segment_degeneracy(segment)
        flag = "  [degenerate]" if metric <= locus.DEGENERACY_RTOL else ""
        print(
            f"  segment {k}: start {segment.start_angle / TWO_PI:.6f} periods, "
            f"amplitudes {amps}, offsets_deg {offs}, degeneracy {metric:.6f}{flag}"
        )
    return 0


def cmd_matrix(args) -> int:
    scenario = waveform.load_scenario(args.scenario)
    index = _pick_segment(scenario, args.segment if args.segment is not None else 1)
    basis = locus.build_basis(scenario.segments[index], args.orientation)
    frame = transform.assemble(basis, normalized=args.normalized)
    suffix = ", normalized" if args.normalized else ""
    print(f"segment {index + 1}, orientation {orientation_label(args.orientation)}{suffix}")
    print(f"theta_o = {frame.theta_o:.6f} rad")
    print(
        f"|e1| = {np.linalg.norm(basis.e1):.6f}  |e2| = {np.linalg.norm(basis.e2):.6f}  "
        f"degeneracy = {basis.degeneracy:.6f}"
    )
    print("forward:")
    for line in matrix_lines(frame.forward):
        print(line)
    print("inverse:")
    for line in matrix_lines(frame.inverse):
        print(line)
    return 0


def cmd_simulate(args) -> int:
    scenario = waveform.load_scenario(args.scenario)
    periods = args.periods
    if periods is None:
        periods = scenario.segments[-1].start_angle / TWO_PI + 1.0
    index = _pick_segment(scenario, args.segment)
    os.makedirs(args.out, exist_ok=True)

    outputs = []
    if "abc" in args.frames:
        outputs.append(("V_abc.csv", transform.abc_series(scenario, args.rate, periods)))
    if "locus123" in args.frames or "dq0" in args.frames:
        series123, dq0, _ = transform.pipeline_locus(
            scenario,
            args.orientation,
            args.rate,
            periods,
            segment_index=index,
            normalized=args.normalized,
        )
        label = orientation_label(args.orientation)
        if "locus123" in args.frames:
            outputs.append((f"V_123_{label}.csv", series123))
        if "dq0" in args.frames:
            outputs.append((f"V_dq0_{label}.csv", dq0))
    if "clarke" in args.frames:
        ab0, clarke_dq0 = transform.pipeline_clarke_park(scenario, args.rate, periods)
        outputs.append(("V_ab0_clarke.csv", ab0))
        if "dq0" in args.frames:
            outputs.append(("V_dq0_clarke.csv", clarke_dq0))

    for name, series in outputs:
        path = os.path.join(args.out, name)
        write_series_csv(path, series)
        print(f"wrote {path}")
    return 0


def cmd_measure(args) -> int:
    scenario = waveform.load_scenario(args.scenario)
    series = waveform.sample_series(scenario, args.rate, args.periods)
    if args.noise > 0.0:
        rng = np.random.default_rng(args.seed)
        series = [
            waveform.SampleFrame(
                frame.angle, frame.values + rng.normal(0.0, args.noise, size=3)
            )
            for frame in series
        ]

    os.makedirs(args.out, exist_ok=True)
    path = os.path.join(args.out, "V_abc_measured.csv")
    angles = np.array([frame.angle for frame in series])
    coords = np.stack([frame.values for frame in series], axis=1)
    write_series_csv(path, transform.TransformedSeries("abc", angles, coords))

    e1, e2 = locus.basis_from_stream(series, args.t1_angle)
    measured = transform.assemble(locus.basis_from_vectors(e1, e2, args.t1_angle))

    probes = np.array([args.t1_angle, args.t1_angle + 0.5 * math.pi])
    exact = waveform.evaluate_scenario(scenario, probes)
    analytic = transform.assemble(
        locus.basis_from_vectors(exact[:, 0], exact[:, 1], args.t1_angle)
    )
    deviation = float(np.max(np.abs(measured.forward - analytic.forward)))

    print(f"samples per period: {args.rate}")
    print(f"t1 angle: {args.t1_angle:.6f} rad")
    print(f"noise sigma: {args.noise:.6f} (seed {args.seed})")
    print(f"wrote {path}")
    print(f"max forward deviation: {deviation:.6e}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="locusframe",
        description="Locus-aligned reference-frame transforms for three-phase scenarios.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_validate = sub.add_parser("validate", help="parse and summarize a scenario file")
    p_validate.add_argument("scenario", help="scenario JSON file")
    p_validate.set_defaults(func=cmd_validate)

    p_matrix = sub.add_parser("matrix", help="print the frame matrices for one segment")
    p_matrix.add_argument("scenario", help="scenario JSON file")
    p_matrix.add_argument(
        "--orientation",
        type=parse_orientation,
        default=PHASE_A_PEAK,
        help="phase-a-peak, max-norm, or angle:<radians> (default phase-a-peak)",
    )
    p_matrix.add_argument(
        "--segment", type=int, default=None, help="1-based segment index (default 1)"
    )
    p_matrix.add_argument(
        "--normalized",
        action="store_true",
        help="rescale the in-plane basis vectors to unit norm",
    )
    p_matrix.set_defaults(func=cmd_matrix)

    p_simulate = sub.add_parser("simulate", help="run the pipelines and write CSV files")
    p_simulate.add_argument("scenario", help="scenario JSON file")
    p_simulate.add_argument(
        "--frames",
        type=parse_frames,
        default=list(SIMULATE_FRAMES),
        help="comma-separated subset of abc,locus123,clarke,dq0 (default all)",
    )
    p_simulate.add_argument(
        "--orientation", type=parse_orientation, default=PHASE_A_PEAK,
        help="orientation for the locus frame (default phase-a-peak)",
    )
    p_simulate.add_argument(
        "--segment",
        type=int,
        default=None,
        help="1-based index of the segment the basis is built from (default: last)",
    )
    p_simulate.add_argument(
        "--normalized", action="store_true",
        help="rescale the in-plane basis vectors to unit norm",
    )
    p_simulate.add_argument(
        "--rate", type=int, default=1000, help="samples per period (default 1000)"
    )
    p_simulate.add_argument(
        "--periods",
        type=float,
        default=None,
        help="periods to simulate (default: cover every segment plus one period)",
    )
    p_simulate.add_argument("--out", default=".", help="output directory (default .)")
    p_simulate.set_defaults(func=cmd_simulate)

    p_measure = sub.add_parser(
        "measure", help="estimate the frame matrix from sampled data"
    )
    p_measure.add_argument("scenario", help="scenario JSON file")
    p_measure.add_argument(
        "--rate", type=int, default=1000, help="samples per period (default 1000)"
    )
    p_measure.add_argument(
        "--t1-angle",
        type=float,
        default=0.0,
        dest="t1_angle",
        help="angle of the first basis measurement in radians (default 0)",
    )
    p_measure.add_argument(
        "--noise", type=float, default=0.0,
        help="Gaussian noise standard deviation, per unit (default 0)",
    )
    p_measure.add_argument(
        "--seed", type=int, default=0, help="noise generator seed (default 0)"
    )
    p_measure.add_argument(
        "--periods", type=float, default=1.0,
        help="periods to sample (default 1)",
    )
    p_measure.add_argument("--out", default=".", help="output directory (default .)")
    p_measure.set_defaults(func=cmd_measure)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except locus.MeasurementError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except locus.LocusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
