# -*- coding: utf-8 -*-
"""
    IlliqDep.cli
    ~~~~~~~~~~~~

    Command-line front end: ``analyze`` a return series, ``simulate`` an
    experiment config, ``plot`` a saved report again.

    Exit codes: ``0`` on completion (whatever the test decisions), ``2`` on
    any ``IlliqDepError`` with a JSON error document on stderr.

    :copyright: 2026 by IlliqDep developers
    :license: MIT, see LICENSE for more details.
"""

__all__ = ['main', 'build_parser', 'EXIT_OK', 'EXIT_ERROR', ]


import argparse
import json
import logging
import os
import os.path
import sys

import IlliqDep.api as api
import IlliqDep.error as error

from ._compat import DEBUG
from .analyzer import AnalysisReport, Analyzer
from .kernel import KernelFamily, KernelSmoother
from .montecarlo import (
    SimulationSpec,
    format_exceedance_table,
    format_rejection_table,
    run_experiment, )

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 2

EMIT_CHOICES = ("json", "csv", "svg")


def _int_list(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma separated integers")


def _emit_list(text):
    emit = [v.strip() for v in text.split(",") if v.strip()]
    for v in emit:
        if v not in EMIT_CHOICES:
            raise argparse.ArgumentTypeError(
                "unknown output %r, choose from %s" % (v, ",".join(EMIT_CHOICES)))
    return emit


def build_parser():
    parser = argparse.ArgumentParser(
        prog="illiqdep",
        description="Dependence analysis of trade/no-trade sequences.")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="more logging (repeat for debug output)")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    analyze = commands.add_parser(
        "analyze", help="analyze a CSV of daily returns")
    analyze.add_argument("--input", required=True,
                         help="CSV with a return column, optionally dated")
    analyze.add_argument("--max-lag", type=int, default=None,
                         help="profile lags (default %d)"
                         % api.DEFAULT_PLOT_LAGS)
    analyze.add_argument("--test-lags", type=int, default=None,
                         help="portmanteau lags (default %d)"
                         % api.DEFAULT_TEST_LAGS)
    analyze.add_argument("--alpha", type=float, default=None,
                         help="test level (default %g)" % api.DEFAULT_ALPHA)
    analyze.add_argument("--bandwidth", type=float, default=None,
                         help="kernel bandwidth in (0, 1) (default: rate "
                         "rule %g * n^(-1/3))" % api.DEFAULT_BANDWIDTH_CONSTANT)
    analyze.add_argument("--kernel", default=None,
                         choices=[k.value for k in KernelFamily],
                         help="kernel (default %s)" % api.DEFAULT_KERNEL)
    analyze.add_argument("--threshold", type=float, default=None,
                         help="|r| <= threshold counts as no trade")
    analyze.add_argument("--emit", type=_emit_list,
                         default=list(EMIT_CHOICES),
                         help="outputs among json,csv,svg (default all)")
    analyze.add_argument("--cusum-lags", type=_int_list, default=[],
                         help="comma separated lags for CUSUM trajectories")
    analyze.add_argument("--out", default=".", help="output directory")
    analyze.add_argument("-v", "--verbose", action="count", default=0,
                         dest="sub_verbose", help=argparse.SUPPRESS)
    analyze.set_defaults(handler=cmd_analyze)

    simulate = commands.add_parser(
        "simulate", help="run a Monte Carlo experiment")
    simulate.add_argument("--config", required=True,
                          help="JSON config file or bundled name (%s)"
                          % ", ".join(sorted(api.EXPERIMENTS)))
    simulate.add_argument("--out", default=None,
                          help="write results JSON to this file")
    simulate.add_argument("--seed", type=int, default=None,
                          help="override the config seed")
    simulate.add_argument("--replications", type=int, default=None,
                          help="override the config replication count")
    simulate.add_argument("--workers", type=int, default=1,
                          help="worker processes (capped by "
                          "ILLIQDEP_THREADS)")
    simulate.add_argument("--timing", action="store_true",
                          help="include the wall-clock time in the JSON")
    simulate.add_argument("-v", "--verbose", action="count", default=0,
                          dest="sub_verbose", help=argparse.SUPPRESS)
    simulate.set_defaults(handler=cmd_simulate)

    plot = commands.add_parser(
        "plot", help="render the plots of a saved report again")
    plot.add_argument("--report", required=True, help="report.json")
    plot.add_argument("--out", default=".", help="output directory")
    plot.add_argument("-v", "--verbose", action="count", default=0,
                      dest="sub_verbose", help=argparse.SUPPRESS)
    plot.set_defaults(handler=cmd_plot)

    return parser


def _output_dir(path):
    if not os.path.isdir(path):
        try:
            os.makedirs(path)
        except OSError as e:
            raise error.InvalidInput("cannot create %s: %s" % (path, e),
                                     path=path)
    return path


def _render(report, out):
    files = [
        api.render_profile(report.stationary_profile,
                           os.path.join(out, "dependence_stationary.svg")),
        api.render_profile(report.feasible_profile,
                           os.path.join(out, "dependence_feasible.svg")),
        api.render_probability(report.bits, report.p_hat,
                               os.path.join(out, "probability.svg"),
                               title=report.source_id or None), ]
    return files


def _print_test(test, label):
    print("%-20s stat=%9.4f  df=%d  crit=%8.4f  p=%.4g  %s" % (
        label, test.statistic, test.df, test.critical_value, test.p_value,
        "reject" if test.reject else "accept"))
    for note in test.warnings:
        print("%-20s note: %s" % ("", note))


def cmd_analyze(args):
    """
    :returns: ``AnalysisReport``; files are written under ``args.out``.
    """
    from .api.report import (
        write_cusum_csv,
        write_json,
        write_probability_csv,
        write_profile_csv, )

    smoother = KernelSmoother(args.kernel, args.bandwidth)
    analyzer = Analyzer(max_lag=args.max_lag, test_lags=args.test_lags,
                        alpha=args.alpha, threshold=args.threshold,
                        smoother=smoother, cusum_lags=args.cusum_lags)
    report = analyzer(api.read_returns(args.input))

    out = _output_dir(args.out)
    if "json" in args.emit:
        write_json(os.path.join(out, "report.json"), report.to_dict())
    if "csv" in args.emit:
        write_profile_csv(os.path.join(out, "profile_stationary.csv"),
                          report.stationary_profile)
        write_profile_csv(os.path.join(out, "profile_feasible.csv"),
                          report.feasible_profile)
        write_probability_csv(os.path.join(out, "probability.csv"),
                              report.bits, report.p_hat, report.clipped)
        for trajectory in report.cusum:
            write_cusum_csv(os.path.join(out, "cusum_h%d.csv" % trajectory.h),
                            trajectory)
    if "svg" in args.emit:
        _render(report, out)

    print(report.summary())
    _print_test(report.stationary_test, report.stationary_test.variant.value)
    _print_test(report.feasible_test, report.feasible_test.variant.value)
    for trajectory in report.cusum:
        print("%-20s h=%d  sup=%.6g  sqrt(n)*sup=%.4f" % (
            "cusum", trajectory.h, trajectory.sup, trajectory.scaled_sup))
    return report


def _load_spec(name):
    path = api.EXPERIMENTS.get(name) or name
    if not os.path.isfile(path):
        raise error.InvalidSpec("no config file or bundled experiment %r"
                                % name, field="(file)")
    return SimulationSpec.from_file(path)


def cmd_simulate(args):
    """
    :returns: ``SimulationResult``; tables go to stdout.
    """
    from .api.report import write_json

    spec = _load_spec(args.config)
    overrides = {}
    if args.seed is not None:
        overrides['seed'] = args.seed
    if args.replications is not None:
        overrides['replications'] = args.replications
    if overrides:
        spec = spec.replace(**overrides)

    result = run_experiment(spec, workers=args.workers)
    if args.out:
        write_json(args.out, result.to_dict(include_runtime=args.timing))

    print(format_rejection_table(result))
    table = format_exceedance_table(result)
    if table:
        print("")
        print(table)
    return result


def cmd_plot(args):
    """
    :returns: ``list`` of written SVG paths.
    """
    from .api.report import load_report

    report = AnalysisReport.from_dict(load_report(args.report))
    files = _render(report, _output_dir(args.out))
    for path in files:
        print(path)
    return files


def _configure_logging(verbosity):
    if DEBUG or verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(
        level=level, stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def main(argv=None):
    """
    :param argv: arguments without the program name, defaults to
        ``sys.argv[1:]``.
    :returns: exit code.
    """
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose + args.sub_verbose)
    try:
        args.handler(args)
    except error.IlliqDepError as e:
        logger.debug("command failed", exc_info=True)
        sys.stderr.write(json.dumps(e.to_dict(), sort_keys=True,
                                    default=str) + "\n")
        return EXIT_ERROR
    return EXIT_OK
