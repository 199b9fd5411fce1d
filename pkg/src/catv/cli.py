#!/usr/bin/env python3
"""
Command-line interface for catv
"""

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional

from . import __version__
from .base import CatvError, DSLSemanticError, exit_code_for, logger
from .comma import build_comma, forgetful, transformation_to_section
from .config import set_cap
from .dsl import check_workspace, load_workspace
from .ends import compute_coend, compute_end, fubini_check, oracle_coend_size, oracle_end
from .fincat import is_faithful
from .natural import PartitionSpan, check_heuristic_naturality, derive_partition, selected_morphisms, single_class_generators
from .report import Report
from .utils.dot import comma_dot, naturality_dot, write_dot
from .variance import enumerate_variances, factor_positive_integer, is_normal_subgroup

SINGLE_CLASS = "single-class"

COMMANDS = [
    "check", "factor", "factor-int", "natural", "end", "coend",
    "fubini", "comma", "partition", "enumerate-variances",
]


def create_parser() -> argparse.ArgumentParser:
    """Create and configure the argument parser."""

    parser = argparse.ArgumentParser(
        prog='catv',
        description='Finite categories with variances: factorizations, heuristic naturality, comma categories, ends and coends.',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog='''
Examples:
  catv check fixtures/s4.catv
  catv factor fixtures/s4.catv --variance V --mor "(1234)"
  catv partition "F(x,y,y) -> G(x,x,y)"
  catv end fixtures/s3hom.catv --functor Hom --span Diag
  catv natural fixtures/two.catv --trans alpha --dot alpha.dot

Exit codes:
  0 the check passed, 1 a mathematical check failed, 2 the input is invalid.
        '''
    )

    parser.add_argument('command', nargs='?', choices=COMMANDS, metavar='COMMAND',
                        help='One of: ' + ', '.join(COMMANDS))
    parser.add_argument('target', nargs='?',
                        help='Workspace file (.catv); for "partition" the expression, for "factor-int" the integer')

    # General Options
    general = parser.add_argument_group('General Options')
    general.add_argument(
        '-v', '--version',
        action='version',
        version=f'%(prog)s {__version__}',
        help='Show program version and exit'
    )
    general.add_argument(
        '-V', '--verbose',
        action='store_true',
        help='Print various debugging information'
    )
    general.add_argument(
        '-q', '--quiet',
        action='store_true',
        help='Activate quiet mode'
    )
    general.add_argument(
        '--json',
        action='store_true',
        help='Emit a machine-readable report on standard output'
    )
    general.add_argument(
        '--cap',
        type=int,
        metavar='N',
        help='Size cap for materialised products, comma categories and searches (default: $CATV_CAP or 1000000)'
    )

    # Selection Options
    select = parser.add_argument_group('Selection Options')
    select.add_argument('--variance', metavar='NAME', help='Variance to use')
    select.add_argument('--mor', metavar='LABEL', help='Morphism to factor')
    select.add_argument('--functor', metavar='NAME', help='Functor whose end/coend (or comma source) is wanted')
    select.add_argument('--target-functor', metavar='NAME', help='Comma category: the functor G in F↓G')
    select.add_argument('--span', metavar='NAME', action='append',
                        help='Span to use (repeat twice for fubini)')
    select.add_argument('--trans', metavar='NAME', help='Transformation to check')
    select.add_argument('--category', metavar='NAME', help='Category to search variances on')
    select.add_argument('--generators', metavar='LABEL', action='append',
                        help=f'Restrict to these R-morphisms (repeatable) or "{SINGLE_CLASS}" for partition spans')

    # Output Options
    output = parser.add_argument_group('Output Options')
    output.add_argument('--dot', metavar='FILE', help='Write a DOT digraph of the diagram (natural, comma)')
    output.add_argument('--oracle', action='store_true', help='Cross-check end/coend against brute force')
    output.add_argument('--e-size', type=int, metavar='K', help='enumerate-variances: only |E| = K')
    output.add_argument('--m-size', type=int, metavar='K', help='enumerate-variances: only |M| = K')
    output.add_argument('--primes', metavar='P,Q,...', default='2',
                        help='factor-int: primes of the covariant part (default: 2)')

    return parser


def _emit(args, payload: Dict[str, Any], lines: List[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        for line in lines:
            print(line)


def _require(args, *names: str) -> None:
    missing = [n for n in names if not getattr(args, n.replace('-', '_'))]
    if missing:
        raise DSLSemanticError(f"{args.command} needs --{', --'.join(missing)}")


def _single_span(args) -> str:
    _require(args, 'span')
    if len(args.span) != 1:
        raise DSLSemanticError(f"{args.command} takes a single --span")
    return args.span[0]


def _generators(span, args) -> Optional[List[int]]:
    if not args.generators:
        return None
    if args.generators == [SINGLE_CLASS]:
        if not isinstance(span, PartitionSpan):
            raise DSLSemanticError(f"--generators {SINGLE_CLASS} needs a partition span, {span.name} is not one")
        return sorted(single_class_generators(span))
    R = span.apex
    return [R.find_morphism(label) for label in args.generators]


def _report_result(args, report: Report, extra: Optional[Dict[str, Any]] = None, lines: Optional[List[str]] = None) -> int:
    payload = report.to_dict()
    if extra:
        payload.update(extra)
    text = list(lines or [])
    if not args.quiet or not report.ok:
        text.append(report.render())
    text.append("✅ ok" if report.ok else "❌ failed")
    _emit(args, payload, text)
    return 0 if report.ok else 1


def cmd_check(args) -> int:
    ws = load_workspace(args.target)
    report = check_workspace(ws)
    summary = (
        f"{len(ws.categories)} categories, {len(ws.variances)} variances, {len(ws.functors)} functors, "
        f"{len(ws.spans)} spans, {len(ws.transformations)} transformations"
    )
    return _report_result(args, report, {"summary": summary}, [summary])


def cmd_factor(args) -> int:
    _require(args, 'variance', 'mor')
    ws = load_workspace(args.target)
    v = ws.variance(args.variance)
    c = v.owner
    f = c.find_morphism(args.mor)
    fac = v.factor(f)
    m, o = c.morphism_label, c.object_label
    rows = {
        "f": m(f),
        "f^e": m(fac.term_e),
        "f^m": m(fac.term_m),
        "f_m": m(fac.start_m),
        "f_e": m(fac.start_e),
        "f_s": o(fac.start_obj),
        "f_t": o(fac.term_obj),
        "role": v.role(f),
    }
    lines = [f"{key} = {value}" for key, value in rows.items()]
    _emit(args, rows, lines)
    return 0


def cmd_factor_int(args) -> int:
    try:
        n = int(args.target)
        primes = [int(p) for p in args.primes.split(',') if p.strip()]
    except (TypeError, ValueError):
        raise DSLSemanticError("factor-int needs an integer and --primes P,Q,...") from None
    e, m = factor_positive_integer(n, primes)
    _emit(args, {"n": n, "primes": primes, "e": e, "m": m}, [f"{n} = {m} * {e}", f"e = {e}", f"m = {m}"])
    return 0


def cmd_natural(args) -> int:
    _require(args, 'trans')
    ws = load_workspace(args.target)
    t = ws.transformation(args.trans)
    gens = _generators(t.span, args)
    report = check_heuristic_naturality(t, gens)
    if args.dot:
        R = t.apex
        failed = {R.find_morphism(w[0]) for w in report.witnesses("naturality")}
        shown = sorted(failed) if failed else [f for f in selected_morphisms(R, gens) if not R.is_identity(f)]
        write_dot(naturality_dot(t, shown, failed), args.dot)
        logger.info("naturality diagram written to %s", args.dot)
    return _report_result(args, report)


def cmd_end(args) -> int:
    _require(args, 'functor')
    ws = load_workspace(args.target)
    F = ws.functor(args.functor)
    span = ws.span(_single_span(args))
    gens = _generators(span, args)
    result = compute_end(F, span, gens=gens)
    payload = result.to_dict()
    lines = [f"size={result.size}"] + [result.render_element(i) for i in range(result.size)]
    code = 0
    if args.oracle:
        expected = oracle_end(F, span)
        agrees = expected == result.tuples()
        payload["oracle"] = {"size": len(expected), "agrees": agrees}
        lines.append(f"oracle size={len(expected)} {'agrees' if agrees else 'DISAGREES'}")
        code = 0 if agrees else 1
    _emit(args, payload, lines)
    return code


def cmd_coend(args) -> int:
    _require(args, 'functor')
    ws = load_workspace(args.target)
    F = ws.functor(args.functor)
    span = ws.span(_single_span(args))
    result = compute_coend(F, span, gens=_generators(span, args))
    payload = result.to_dict()
    lines = [f"size={result.size}"] + payload["classes"] + [f"note: {n}" for n in result.notes]
    code = 0
    if args.oracle:
        expected = oracle_coend_size(F, span)
        payload["oracle"] = {"size": expected, "agrees": expected == result.size}
        lines.append(f"oracle size={expected} {'agrees' if expected == result.size else 'DISAGREES'}")
        code = 0 if expected == result.size else 1
    _emit(args, payload, lines)
    return code


def cmd_fubini(args) -> int:
    _require(args, 'functor', 'span')
    if len(args.span) != 2:
        raise DSLSemanticError("fubini needs --span twice: one for each factor")
    ws = load_workspace(args.target)
    F = ws.functor(args.functor)
    witness = fubini_check(F, ws.span(args.span[0]), ws.span(args.span[1]))
    lines = [
        f"end over L1xL2: size={witness.total.size}",
        f"iterated end: size={witness.iterated.size}",
        "mapping " + " ".join(str(j) for j in witness.mapping.tolist()),
    ]
    return _report_result(args, witness.report, witness.to_dict(), lines)


def cmd_comma(args) -> int:
    ws = load_workspace(args.target)
    t = ws.transformation(args.trans) if args.trans else None
    if t is not None:
        F, G, span = t.F, t.G, t.span
    else:
        _require(args, 'functor', 'target-functor')
        F, G, span = ws.functor(args.functor), ws.functor(args.target_functor), ws.span(_single_span(args))
    cc = build_comma(F, G, span)
    U = forgetful(cc)
    report = Report(f"comma category {cc.name}")
    report.checked += 1
    if not is_faithful(U):
        report.add("faithful", (cc.name,), "forgetful functor is not faithful")
    lines = [f"objects={cc.n_objects}", f"morphisms={cc.n_morphisms}"]
    extra: Dict[str, Any] = {"objects": cc.n_objects, "morphisms": cc.n_morphisms}
    if t is not None:
        report.checked += 1
        try:
            S = transformation_to_section(t, cc)
        except CatvError as e:
            report.add("section", getattr(e, "witness", None) or (t.name,), str(e))
        else:
            lines.append("section " + " ".join(cc.object_label(S.on_object(x)) for x in span.apex.objects()))
    if args.dot:
        write_dot(comma_dot(cc), args.dot)
        logger.info("comma category written to %s", args.dot)
    return _report_result(args, report.finish(), extra, lines)


def cmd_partition(args) -> int:
    p = derive_partition(args.target)
    _emit(args, {"classes": [sorted(c) for c in p.classes], "rendered": p.render()}, [p.render()])
    return 0


def cmd_enumerate_variances(args) -> int:
    ws = load_workspace(args.target)
    if args.category:
        c = ws.category(args.category)
    elif len(ws.categories) == 1:
        c = next(iter(ws.categories.values()))
    else:
        raise DSLSemanticError("enumerate-variances needs --category when the workspace has several")
    search = enumerate_variances(c, e_size=args.e_size, m_size=args.m_size)
    group = c.is_one_object and c.is_groupoid()
    rows = []
    lines = []
    for E, M in search.pairs:
        row: Dict[str, Any] = {
            "E": sorted(c.morphism_label(f) for f in E),
            "M": sorted(c.morphism_label(f) for f in M),
        }
        if group:
            row["E_normal"] = is_normal_subgroup(c, E)
            row["M_normal"] = is_normal_subgroup(c, M)
        rows.append(row)
        text = f"E={{{', '.join(row['E'])}}} M={{{', '.join(row['M'])}}}"
        if group:
            text += f" normal(E)={'yes' if row['E_normal'] else 'no'} normal(M)={'yes' if row['M_normal'] else 'no'}"
        lines.append(text)
    lines.append(f"{len(search.pairs)} variance(s) on {c.name}" + ("" if search.complete else " (search cut by cap)"))
    _emit(args, {"category": c.name, "complete": search.complete, "variances": rows}, lines)
    return 0 if search.complete else 1


HANDLERS = {
    "check": cmd_check,
    "factor": cmd_factor,
    "factor-int": cmd_factor_int,
    "natural": cmd_natural,
    "end": cmd_end,
    "coend": cmd_coend,
    "fubini": cmd_fubini,
    "comma": cmd_comma,
    "partition": cmd_partition,
    "enumerate-variances": cmd_enumerate_variances,
}


def run(argv: Optional[List[str]] = None) -> int:
    """Parse ``argv`` and dispatch; returns the exit code instead of exiting."""
    parser = create_parser()
    args = parser.parse_args(argv)

    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(level)

    # Without a command print only the examples
    if not args.command:
        if not args.quiet:
            print((parser.epilog or '').strip("\n"))
        return 2
    if not args.target:
        parser.error(f"{args.command} needs a target")

    try:
        set_cap(args.cap)
        return HANDLERS[args.command](args)
    except CatvError as e:
        code = exit_code_for(e)
        if args.json:
            print(json.dumps({"error": str(e), "kind": type(e).__name__, "exit": code}, indent=2, ensure_ascii=False))
        else:
            print(f"❌ Error: {e}", file=sys.stderr)
        if args.verbose:
            import traceback
            traceback.print_exc()
        return code
    finally:
        set_cap(None)


def main() -> None:
    """Main entry point for the CLI."""
    sys.exit(run())


if __name__ == '__main__':
    main()
