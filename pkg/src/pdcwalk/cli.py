"""
Command-line entry point.

    pdcwalk run --family single --mode pdc --theta pi/4 --initial up --steps 30
    pdcwalk sweep --theta 0 pi/2 pi/4 --steps 30 --out results/

Exit status is 0 on success, 2 on bad arguments and 3 on I/O failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, replace
from pathlib import Path

from .angle import Angle, AngleParseError, angle_parse
from .entangled import BellChoice, BellKind, entangled_evolve
from .observables import (
    TABLE1_ANGLES,
    classify,
    curve_over_steps,
    distribution_report,
    position_probabilities,
)
from .oracle import classical_sigma
from .reports import dist_rows, plot_lines, plot_stems, write_table
from .walk import CoinMode, InitialSpin, evolve

__all__ = ["RunSpec", "cmd_run", "cmd_sweep", "main", "build_parser"]

EXIT_ARGS = 2
EXIT_IO = 3

EMIT_CHOICES = ("dist", "entropy", "sigma", "plot")
_SINGLE_INITIAL = {"up": InitialSpin.UP, "down": InitialSpin.DOWN}
_BELL_INITIAL = {"bell1": BellKind.PHI_PLUS_LIKE, "bell2": BellKind.PSI_PLUS_LIKE}
_MODES = {"pdc": CoinMode.POSITION_DEPENDENT, "pic": CoinMode.POSITION_INDEPENDENT}


@dataclass(frozen=True)
class RunSpec:
    family: str = "single"
    mode: str = "pdc"
    theta: Angle = Angle(0)
    initial: str = "up"
    steps: int = 30
    outputs: frozenset = frozenset({"dist", "entropy", "sigma"})
    output_dir: Path = Path(".")
    format: str = "csv"
    compare_pic: bool = False
    eta: Angle = Angle(1, 4)

    def validate(self):
        """Raise ``ValueError`` naming the offending flag."""
        if self.family not in ("single", "entangled"):
            raise ValueError(f"--family must be single or entangled, got {self.family!r}")
        if self.mode not in _MODES:
            raise ValueError(f"--mode must be pdc or pic, got {self.mode!r}")
        allowed = _SINGLE_INITIAL if self.family == "single" else _BELL_INITIAL
        if self.initial not in allowed:
            raise ValueError(
                f"--initial {self.initial!r} is not valid for --family {self.family}; "
                f"choose from {', '.join(allowed)}"
            )
        if self.steps < 0:
            raise ValueError(f"--steps must be non-negative, got {self.steps}")
        if self.format not in ("csv", "json"):
            raise ValueError(f"--format must be csv or json, got {self.format!r}")
        unknown = set(self.outputs) - set(EMIT_CHOICES)
        if unknown:
            raise ValueError(f"--emit has unknown entries {sorted(unknown)}")


def _run_walk(spec: RunSpec, mode: str):
    if spec.family == "single":
        return evolve(_SINGLE_INITIAL[spec.initial], spec.theta, _MODES[mode], spec.steps,
                      record=True)
    choice = BellChoice(_BELL_INITIAL[spec.initial], eta=spec.eta.radians)
    return entangled_evolve(choice, spec.theta, _MODES[mode], spec.steps, record=True)


def _write_outputs(spec: RunSpec, final, history) -> None:
    out = Path(spec.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    ext = spec.format
    as_json = ext == "json"
    probs = position_probabilities(final)

    if "dist" in spec.outputs:
        rows = dist_rows(probs, final.steps_taken, same_parity=spec.family == "single")
        write_table(out / f"dist.{ext}", ("x", "probability"), rows, as_json)

    s_pos = curve_over_steps(history, "entropy_position")
    s_coin = curve_over_steps(history, "entropy_coin")
    sigma = curve_over_steps(history, "sigma")
    if "entropy" in spec.outputs:
        rows = [(t, sp, sc) for (t, sp), (_, sc) in zip(s_pos, s_coin)]
        write_table(out / f"entropy.{ext}", ("step", "s_position", "s_coin"), rows, as_json)
    if "sigma" in spec.outputs:
        write_table(out / f"sigma.{ext}", ("step", "sigma"), sigma, as_json)

    if "plot" in spec.outputs:
        _write_plots(spec, out, probs, s_pos, s_coin, sigma)


def _write_plots(spec, out, probs, s_pos, s_coin, sigma):
    label = spec.mode.upper()
    overlay = spec.compare_pic and spec.mode != "pic"
    if overlay:
        pic_final, pic_hist = _run_walk(spec, "pic")
        pic_probs = position_probabilities(pic_final)
        pic_pos = curve_over_steps(pic_hist, "entropy_position")
        pic_coin = curve_over_steps(pic_hist, "entropy_coin")
        pic_sigma = curve_over_steps(pic_hist, "sigma")

    title = f"theta={spec.theta}, T={spec.steps}"
    stems = [(label, probs, "solid")]
    if overlay:
        stems.append(("PIC", pic_probs, "dashed"))
    plot_stems(out / "dist.svg", stems, title)

    lines = [(f"{label} S_P", s_pos, "tab:blue", "solid"),
             (f"{label} S_C", s_coin, "tab:blue", "dashed")]
    if overlay:
        lines += [("PIC S_P", pic_pos, "tab:red", "solid"),
                  ("PIC S_C", pic_coin, "tab:red", "dashed")]
    plot_lines(out / "entropy.svg", lines, "entropy (nats)", title)

    classical = [(t, classical_sigma(t)) for t, _ in sigma]
    lines = [(label, sigma, "tab:blue", "solid"),
             ("classical sqrt(T)", classical, "tab:red", "dashed")]
    if overlay:
        lines.append(("PIC", pic_sigma, "tab:red", "dotted"))
    plot_lines(out / "sigma.svg", lines, "sigma", title)


def cmd_run(spec: RunSpec, stdout=None) -> int:
    """Run one walk, write the requested files and print the walk class."""
    stdout = stdout or sys.stdout
    try:
        spec.validate()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS
    final, history = _run_walk(spec, spec.mode)
    try:
        _write_outputs(spec, final, history)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    print(classify(spec.theta), file=stdout)
    return 0


def cmd_sweep(angles: list[Angle], spec: RunSpec, stdout=None) -> int:
    """
    Run ``spec`` once per angle, each into ``<out>/<angle slug>/``, and write
    ``<out>/summary.csv``.
    """
    stdout = stdout or sys.stdout
    if not angles:
        print("error: --theta needs at least one angle", file=sys.stderr)
        return EXIT_ARGS
    try:
        spec.validate()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS

    summary = []
    for theta in angles:
        sub = replace(spec, theta=theta, output_dir=Path(spec.output_dir) / theta.slug())
        final, history = _run_walk(sub, sub.mode)
        try:
            _write_outputs(sub, final, history)
        except OSError as exc:
            print(f"error: cannot write output: {exc}", file=sys.stderr)
            return EXIT_IO
        rep = distribution_report(final, theta)
        walk_class = classify(theta)
        summary.append((theta.canonical(), str(walk_class), rep.flip_site,
                        rep.s_position, rep.sigma, rep.support_width))
        print(f"{theta.canonical()}\t{walk_class}", file=stdout)

    try:
        write_table(Path(spec.output_dir) / "summary.csv",
                    ("angle", "class", "flip_site", "S_P(T)", "sigma(T)", "support_width"),
                    summary)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return 0


def _angle_arg(text: str) -> Angle:
    try:
        return angle_parse(text)
    except AngleParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit_arg(text: str) -> frozenset:
    items = frozenset(t.strip() for t in text.split(",") if t.strip())
    bad = items - set(EMIT_CHOICES)
    if bad:
        raise argparse.ArgumentTypeError(
            f"unknown entries {sorted(bad)}; choose from {','.join(EMIT_CHOICES)}"
        )
    return items


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pdcwalk",
        description="Quantum walks with position-dependent coins.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=("single", "entangled"), default="single")
    common.add_argument("--mode", choices=tuple(_MODES), default="pdc")
    common.add_argument("--initial", choices=(*_SINGLE_INITIAL, *_BELL_INITIAL), default=None,
                        help="up/down for --family single, bell1/bell2 for entangled")
    common.add_argument("--steps", type=int, default=30)
    common.add_argument("--out", type=Path, default=Path("."), dest="output_dir")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--compare-pic", action="store_true",
                        help="overlay the position-independent walk in plots")
    common.add_argument("--emit", type=_emit_arg, default=frozenset({"dist", "entropy", "sigma"}),
                        help="comma list of dist,entropy,sigma,plot")
    common.add_argument("--eta", type=_angle_arg, default=None,
                        help="entanglement angle as a multiple of pi (entangled only)")

    run = sub.add_parser("run", parents=[common], help="run a single walk")
    run.add_argument("--theta", type=_angle_arg, required=True)

    sweep = sub.add_parser("sweep", parents=[common], help="run one walk per angle")
    sweep.add_argument("--theta", type=_angle_arg, nargs="+", default=None)
    sweep.add_argument("--table1", action="store_true",
                       help="sweep the ten reference angles of the walk classes")
    return parser


def _spec_from_args(parser, args, theta) -> RunSpec:
    initial = args.initial or ("up" if args.family == "single" else "bell1")
    if args.eta is not None and args.family != "entangled":
        parser.error("--eta is only valid with --family entangled")
    if args.steps < 0:
        parser.error(f"argument --steps: must be non-negative, got {args.steps}")
    spec = RunSpec(
        family=args.family,
        mode=args.mode,
        theta=theta,
        initial=initial,
        steps=args.steps,
        outputs=args.emit,
        output_dir=args.output_dir,
        format=args.format,
        compare_pic=args.compare_pic,
        eta=args.eta or Angle(1, 4),
    )
    try:
        spec.validate()
    except ValueError as exc:
        parser.error(str(exc))
    return spec


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "run":
        return cmd_run(_spec_from_args(parser, args, args.theta))

    angles = list(args.theta or [])
    if args.table1:
        angles += [a for a in TABLE1_ANGLES if a not in angles]
    if not angles:
        parser.error("argument --theta: sweep needs at least one angle (or --table1)")
    return cmd_sweep(angles, _spec_from_args(parser, args, angles[0]))


if __name__ == "__main__":
    sys.exit(main())
