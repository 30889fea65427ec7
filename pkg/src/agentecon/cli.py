"""Command-line entry point.

Exit status: 0 on success, 1 on a model/domain or output error, 2 on a usage
or configuration error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .calibration import calibrate, human_output_at, load_anchor_document
from .config import ConfigDocument, load_config, parse_assignments
from .errors import AgentEconError, ConfigParseError, ConfigValidationError, ParameterError
from .models import MODEL_IDS, ai_producer_output, cobb_douglas
from .optimizer import optimize_human_share
from .output import chart_for_report, report_table, write_csv, write_svg_chart
from .scenario import Comparison, RunReport, ScenarioSpec, Sweep, experiment_catalog, run_scenario

PROG = "agentecon"


class UsageError(Exception):
    pass


def _model_id(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a model id: {text!r}") from None
    if value not in MODEL_IDS:
        raise argparse.ArgumentTypeError(f"model id must be one of {MODEL_IDS}")
    return value


def _model_pair(text: str) -> tuple[int, int]:
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected two model ids, e.g. 2,1")
    return _model_id(parts[0]), _model_id(parts[1])


def _float_list(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("at least one value required")
    return values


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="TOML configuration document")
    common.add_argument(
        "--set",
        dest="sets",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="override one parameter (repeatable)",
    )

    parser = argparse.ArgumentParser(prog=PROG, description="Human/AI-agent production model simulator")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("simulate", parents=[common], help="output trajectory of one model")
    p.add_argument("--model", type=_model_id, required=True)
    p.add_argument("--horizon", type=_positive_int, default=20)
    p.add_argument("--csv", type=Path, help="also write the series to this CSV file")

    p = sub.add_parser("compare", parents=[common], help="compare two models year by year")
    p.add_argument("--models", type=_model_pair, required=True, metavar="A,B", help="model A against baseline B")
    p.add_argument("--horizon", type=_positive_int, default=20)
    p.add_argument("--metric", choices=("percent_gain", "absolute_gap"), default="percent_gain")
    p.add_argument("--csv", type=Path)

    p = sub.add_parser("optimize", parents=[common], help="human resource share maximizing Model 2 output")
    p.add_argument("--t", type=float, default=20.0, help="year at which output is maximized (default 20)")
    p.add_argument("--lo", type=float, default=0.01)
    p.add_argument("--hi", type=float, default=0.999)
    p.add_argument("--tol", type=float, default=1e-4)
    p.add_argument("--csv", type=Path, help="write the share/output profile")

    p = sub.add_parser("calibrate", parents=[common], help="back-solve efficiencies from anchor observations")
    p.add_argument("--anchors", type=Path, help="TOML file with [anchors.*] and [calibration] blocks")

    p = sub.add_parser("sweep", parents=[common], help="trajectories across values of one parameter")
    p.add_argument("--param", required=True)
    p.add_argument("--values", type=_float_list, required=True, metavar="V1,V2,...")
    p.add_argument("--model", type=_model_id, default=4)
    p.add_argument("--horizon", type=_positive_int, default=20)
    p.add_argument("--csv", type=Path)

    p = sub.add_parser("figures", parents=[common], help="run the built-in figure catalog (CSV + SVG)")
    p.add_argument("--out", type=Path, default=Path("out"))

    p = sub.add_parser("run", parents=[common], help="run the [[scenarios]] of a config document")
    p.add_argument("--out", type=Path, default=Path("out"))
    return parser


def _document(args: argparse.Namespace) -> ConfigDocument:
    doc = load_config(args.config)
    if args.sets:
        doc = doc.with_sets(parse_assignments(args.sets))
    return doc


def _print_report(report: RunReport, percent: bool = False) -> None:
    header, rows = report_table(report)
    print("\t".join(header))
    n_series = len(report.series)
    for row in rows:
        cells = [row[0]]
        for j, cell in enumerate(row[1:]):
            value = float(cell)
            if percent and j >= n_series:
                cells.append(f"{100 * value:.4f}%")
            else:
                cells.append(f"{value:.6e}")
        print("\t".join(cells))


def _emit(report: RunReport, csv_path: Path | None, percent: bool = False) -> None:
    _print_report(report, percent)
    if csv_path is not None:
        write_csv(report, csv_path)


def cmd_simulate(args: argparse.Namespace) -> None:
    doc = _document(args)
    spec = ScenarioSpec(f"model{args.model}", (args.model,), args.horizon)
    _emit(run_scenario(spec, doc.parameters), args.csv)


def cmd_compare(args: argparse.Namespace) -> None:
    doc = _document(args)
    a, b = args.models
    models = (a,) if a == b else (a, b)
    spec = ScenarioSpec(f"compare{a}{b}", models, args.horizon, comparison=Comparison((a, b), args.metric))
    _emit(run_scenario(spec, doc.parameters), args.csv, percent=args.metric == "percent_gain")


def cmd_optimize(args: argparse.Namespace) -> None:
    doc = _document(args)
    result = optimize_human_share(doc.parameters, t=args.t, interval=(args.lo, args.hi), tol=args.tol)
    print(f"best_share\t{result.best_share:.4f}")
    print(f"best_output\t{result.best_output:.6e}")
    print(f"t\t{result.t:g}")
    if args.csv is not None:
        write_csv(RunReport(ScenarioSpec("optimize", (2,), quantity="allocation"), allocation=result), args.csv)


def cmd_calibrate(args: argparse.Namespace) -> None:
    doc = _document(args)
    if args.anchors is not None:
        try:
            anchors, setup = load_anchor_document(args.anchors)
        except OSError as exc:
            raise ConfigParseError(f"cannot read {args.anchors}: {exc.strerror}") from exc
        except ParameterError as exc:
            raise ConfigValidationError(exc.key, str(exc).split(": ", 1)[-1]) from exc
    else:
        anchors, setup = doc.anchors, doc.calibration
    alpha = doc.parameters.alpha
    eff = calibrate(anchors, setup, alpha)
    human, ai = anchors[setup.human_anchor], anchors[setup.ai_anchor]
    scen = setup.scenario
    y_human = cobb_douglas(eff.phi0, human.N, human.R, alpha)
    y_ai = human_output_at(ai, eff.phiH, alpha, scen.omega) + ai_producer_output(
        eff.phiA, scen.A, scen.omega * ai.R, scen.delta, scen.s, alpha
    )
    print(f"alpha\t{alpha:g}")
    print(f"phi0\t{eff.phi0:.6f}\t(anchor {human.year_label})")
    print(f"phiH\t{eff.phiH:.6f}")
    print(f"phiA\t{eff.phiA:.6f}\t(anchor {ai.year_label}, omega={scen.omega:g}, s={scen.s:g}, delta={scen.delta:g}, A={scen.A:g})")
    print(f"check\t{human.year_label}: {y_human:.6e} vs {human.Y:.6e}; {ai.year_label}: {y_ai:.6e} vs {ai.Y:.6e}")


def cmd_sweep(args: argparse.Namespace) -> None:
    doc = _document(args)
    try:
        sweep = Sweep(args.param, args.values)
    except ParameterError as exc:
        raise UsageError(str(exc)) from exc
    spec = ScenarioSpec(f"sweep_{args.param}", (args.model,), args.horizon, sweep=sweep)
    _emit(run_scenario(spec, doc.parameters), args.csv)


def _write_figure(report: RunReport, out: Path) -> list[Path]:
    name = report.spec.name
    return [write_csv(report, out / f"{name}.csv"), write_svg_chart(chart_for_report(report), out / f"{name}.svg")]


def cmd_figures(args: argparse.Namespace) -> None:
    doc = _document(args)
    for spec in experiment_catalog():
        for path in _write_figure(run_scenario(spec, doc.parameters), args.out):
            print(path)


def cmd_run(args: argparse.Namespace) -> None:
    doc = _document(args)
    if not doc.scenarios:
        raise UsageError("the configuration defines no [[scenarios]]")
    for spec in doc.scenarios:
        report = run_scenario(spec, doc.parameters)
        if report.allocation is None and not report.series:
            continue
        for path in _write_figure(report, args.out):
            print(path)


COMMANDS = {
    "simulate": cmd_simulate,
    "compare": cmd_compare,
    "optimize": cmd_optimize,
    "calibrate": cmd_calibrate,
    "sweep": cmd_sweep,
    "figures": cmd_figures,
    "run": cmd_run,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        COMMANDS[args.command](args)
    except (UsageError, ConfigParseError, ConfigValidationError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 2
    except (AgentEconError, ValueError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
