"""
Subcommands of the ``lopsp-maps`` command line.

Results go to stdout, diagnostics to stderr. Exit codes: 0 on success, 1 when
a check fails, 2 on usage, parse or validation errors.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from components.errors import LopspError, UnknownOperation
from components.maps.barycentric import barycentric_subdivision
from components.maps.map_core import dual, genus, is_k_connected
from components.operations.apply import apply_lopsp
from components.operations.c3_checks import c3_necessary_check
from components.operations.catalog import CATALOG, get_operation
from components.operations.classify import classify
from components.operations.lopsp_model import LopspOperation, find_cut_path
from components.io_cli.rotsys import load_map, load_rotsys, print_rotsys, save_rotsys
from components.verification.counterexamples import counterexample_torus, describe_counterexample, kis_multigraph_demo
from components.verification.reports import CorpusSpec, VerificationReport
from components.verification.suites import SUITES, run_suite
from config.settings import (
    APP_NAME,
    APP_VERSION,
    CUT_PATH_STRATEGIES,
    DEFAULT_CUT_PATH,
    VERIFY_MAX_VERTICES,
    VERIFY_SEED,
)
from utils.error_handling import EXIT_CHECK_FAILED, EXIT_OK, ErrorAction, exit_code_for, handle_errors
from utils.report_tools import export_report_csv, summarize_report

logger = logging.getLogger(__name__)


def _stderr(message: str) -> None:
    print(message, file=sys.stderr)


def resolve_operation(spec: str) -> LopspOperation:
    """A catalog name or the path of a ``.lopsp`` file."""
    path = Path(spec)
    if path.suffix or path.exists():
        doc = load_rotsys(path)
        if not isinstance(doc, LopspOperation):
            raise UnknownOperation(f"{spec} describes a map, not an operation (no 'special:' line)")
        return doc
    return get_operation(spec)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding='utf-8')
    else:
        sys.stdout.write(text)


@handle_errors(action=ErrorAction.RERAISE, reporter=_stderr)
def cmd_apply(args) -> int:
    o = resolve_operation(args.op)
    g = load_map(args.graph)
    r = apply_lopsp(o, g, find_cut_path(o, args.cut_path))
    if args.emit_bary:
        save_rotsys(r.b_result, args.emit_bary)
    _emit(print_rotsys(r.result), args.out)
    v, e, f = r.result.counts()
    _stderr(f"V={v} E={e} F={f} genus={genus(r.result)}")
    return EXIT_OK


@handle_errors(action=ErrorAction.RERAISE, reporter=_stderr)
def cmd_classify(args) -> int:
    o = resolve_operation(args.op)
    cls = classify(o)
    verdict = c3_necessary_check(o) if args.c3 else None
    if args.json:
        payload = {'op': o.name, 'class': cls.tag.value, 'evidence': cls.evidence}
        if verdict is not None:
            payload['c3_check'] = {'passed': verdict.passed, 'gluing': verdict.gluing,
                                   'cycle': list(verdict.cycle_vertices)}
        print(json.dumps(payload, sort_keys=True, default=str))
    else:
        print(cls.describe())
        if verdict is not None:
            print(verdict.describe())
    return EXIT_OK


@handle_errors(action=ErrorAction.RERAISE, reporter=_stderr)
def cmd_check(args) -> int:
    ok = is_k_connected(load_map(args.graph), args.k)
    print(f"{args.k}-connected={'true' if ok else 'false'}")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


@handle_errors(action=ErrorAction.RERAISE, reporter=_stderr)
def cmd_genus(args) -> int:
    print(genus(load_map(args.graph)))
    return EXIT_OK


@handle_errors(action=ErrorAction.RERAISE, reporter=_stderr)
def cmd_dual(args) -> int:
    _emit(print_rotsys(dual(load_map(args.graph))), args.out)
    return EXIT_OK


@handle_errors(action=ErrorAction.RERAISE, reporter=_stderr)
def cmd_bary(args) -> int:
    _emit(print_rotsys(barycentric_subdivision(load_map(args.graph))), args.out)
    return EXIT_OK


@handle_errors(action=ErrorAction.RERAISE, reporter=_stderr)
def cmd_catalog(args) -> int:
    if args.dump:
        target = Path(args.dump)
        for name in CATALOG:
            save_rotsys(get_operation(name), target / f"{name}.lopsp")
        print(f"wrote {len(CATALOG)} operations to {target}")
        return EXIT_OK
    for name, entry in CATALOG.items():
        v, e, f = entry.cube_counts
        print(f"{name:<12} {entry.tag.value:<18} cube=({v},{e},{f})")
    return EXIT_OK


@handle_errors(action=ErrorAction.RERAISE, reporter=_stderr)
def cmd_demo(args) -> int:
    if args.which == 'multigraph':
        demo = kis_multigraph_demo()
        print(f"host={demo.host.name} host_3_connected={str(demo.host_is_3_connected).lower()}")
        print(f"result_3_connected={str(demo.result_is_3_connected).lower()} cut={sorted(demo.cut)}")
        if args.out:
            save_rotsys(demo.application.result, args.out)
        return EXIT_OK
    o = resolve_operation(args.op)
    facts = describe_counterexample(o)
    for key, value in facts.items():
        print(f"{key}={value}")
    if args.out:
        save_rotsys(apply_lopsp(o, counterexample_torus()).result, args.out)
    return EXIT_OK


@handle_errors(action=ErrorAction.RERAISE, reporter=_stderr)
def cmd_verify(args) -> int:
    if args.schema:
        print(VerificationReport.schema_json(indent=2))
        return EXIT_OK
    spec = CorpusSpec(max_vertices=args.max_vertices, seed=args.seed)
    report = run_suite(args.suite, spec)
    if args.json:
        Path(args.json).write_text(report.json(indent=2), encoding='utf-8')
    if args.csv:
        export_report_csv(report, args.csv)
    print(summarize_report(report))
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=APP_NAME, description="Local orientable operations on embedded graphs")
    parser.add_argument('--version', action='version', version=f"{APP_NAME} {APP_VERSION}")
    parser.add_argument('--log-level', default=None, help="DEBUG, INFO, WARNING, ERROR")
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('apply', help="apply an operation to a map")
    p.add_argument('--op', required=True, help="catalog name or .lopsp file")
    p.add_argument('--graph', required=True)
    p.add_argument('--cut-path', choices=CUT_PATH_STRATEGIES, default=DEFAULT_CUT_PATH)
    p.add_argument('--out')
    p.add_argument('--emit-bary')
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser('classify', help="classify an operation")
    p.add_argument('--op', required=True)
    p.add_argument('--json', action='store_true')
    p.add_argument('--c3', action='store_true', help="also run the necessary c3 check")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser('check', help="test k-connectivity")
    p.add_argument('--graph', required=True)
    p.add_argument('--k', type=int, required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser('genus')
    p.add_argument('--graph', required=True)
    p.set_defaults(func=cmd_genus)

    for name, func in (('dual', cmd_dual), ('bary', cmd_bary)):
        p = sub.add_parser(name)
        p.add_argument('--graph', required=True)
        p.add_argument('--out')
        p.set_defaults(func=func)

    p = sub.add_parser('catalog', help="list or dump the named operations")
    group = p.add_mutually_exclusive_group()
    group.add_argument('--list', action='store_true')
    group.add_argument('--dump', metavar='DIR')
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser('demo', help="connectivity counterexamples")
    p.add_argument('which', choices=('counterexample', 'multigraph'))
    p.add_argument('--op', default='join')
    p.add_argument('--out')
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser('verify', help="run a theorem suite")
    p.add_argument('--suite', choices=SUITES, default='all')
    p.add_argument('--max-vertices', type=int, default=VERIFY_MAX_VERTICES)
    p.add_argument('--seed', type=int, default=VERIFY_SEED)
    p.add_argument('--json', metavar='FILE')
    p.add_argument('--csv', metavar='FILE')
    p.add_argument('--schema', action='store_true', help="print the JSON report schema")
    p.set_defaults(func=cmd_verify)
    return parser


def dispatch(args: argparse.Namespace) -> int:
    try:
        return args.func(args)
    except (LopspError, OSError, ValueError) as e:
        return exit_code_for(e)


def run(argv: Optional[List[str]] = None) -> int:
    return dispatch(build_parser().parse_args(argv))
