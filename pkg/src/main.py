# src/main.py

import argparse
import json
import logging
import sys
from dataclasses import replace

from certificate import build_certificate, validate_certificate
from cnf_export import export_cnf, solve_cnf
from coloring_io import load_coloring, load_json, save_coloring, save_to_json
from config import AppConfig
from constructions import lower_bound_coloring, verify_good
from errors import BudgetExceededError, NoWitnessError, RamseyError
from formula import ramsey_value, regime_table
from host_model import PartiteShape
from search import find_good_coloring

logger = logging.getLogger("ramsey")

EXIT_OK = 0
EXIT_PATTERN = 1
EXIT_USAGE = 2
EXIT_NO_WITNESS = 3
EXIT_BUDGET = 4


def _add_shape_arguments(parser):
    parser.add_argument('--parts', type=int, nargs='+', default=None,
                        help='Explicit part sizes, e.g. --parts 2 2 2')
    parser.add_argument('--j', type=int, default=None, help='Number of parts')
    parser.add_argument('--t', type=int, default=None, help='Slots per part')


def _with_overrides(options, **overrides):
    """Copy of `options` with the given non-None fields replaced, validated again."""
    overrides = {name: value for name, value in overrides.items() if value is not None}
    try:
        return replace(options, **overrides)
    except ValueError as e:
        raise RamseyError(str(e)) from e


def _shape_from(args):
    if args.parts:
        return PartiteShape(tuple(args.parts))
    if args.j is None or args.t is None:
        raise RamseyError("give either --parts or both --j and --t")
    return PartiteShape.uniform(args.j, args.t)


def parse_arguments(argv=None):
    """Parse command line arguments for the application."""
    parser = argparse.ArgumentParser(
        description='Verify multipartite Ramsey numbers m_j(nK_2, C_7)')
    parser.add_argument('--config', type=str, default=None,
                        help='JSON configuration file (default: built-in settings)')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='More logging (repeat for debug output)')
    parser.add_argument('-q', '--quiet', action='store_true',
                        help='Only log errors')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('formula', help='Evaluate m_j(nK_2, C_7)')
    p.add_argument('--j', type=int, required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--strict', action='store_true',
                   help='Report self-contradictory published cells as paper-ambiguous')

    p = sub.add_parser('table', help='Print the formula grid')
    p.add_argument('--j-max', type=int, required=True)
    p.add_argument('--n-max', type=int, required=True)
    p.add_argument('--strict', action='store_true')
    p.add_argument('--format', choices=['tsv', 'json'], default='tsv')

    p = sub.add_parser('construct', help='Write the verified lower-bound coloring')
    p.add_argument('--j', type=int, required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--slots', type=int, default=3,
                   help='Slots per part of the all-blue host for j = 2 (default: 3)')
    p.add_argument('--out', type=str, default=None, help='Output directory')

    p = sub.add_parser('verify', help='Check a coloring file for red nK_2 / blue C_L')
    p.add_argument('file', type=str)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--L', type=int, default=7)

    p = sub.add_parser('certify', help='Build a certificate for one (j, n) cell')
    p.add_argument('--j', type=int, required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--budget', type=float, default=None,
                   help='Time budget in seconds for the upper-bound search')
    p.add_argument('--out', type=str, default=None, help='Certificate file (default: stdout)')

    p = sub.add_parser('validate', help='Re-check a certificate file')
    p.add_argument('file', type=str)

    p = sub.add_parser('search', help='Search a host for a good coloring')
    _add_shape_arguments(p)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--L', type=int, default=7)
    p.add_argument('--symmetry', choices=['none', 'lex_leader'], default=None)
    p.add_argument('--dominance', action='store_true', default=None)
    p.add_argument('--edge-order', choices=['natural', 'degree_guided'], default=None)
    p.add_argument('--node-budget', type=int, default=None)
    p.add_argument('--time-budget', type=float, default=None)
    p.add_argument('--workers', type=int, default=None)
    p.add_argument('--out', type=str, default=None, help='Directory for a found coloring')

    p = sub.add_parser('export-cnf', help='Write the DIMACS formula for a host')
    _add_shape_arguments(p)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--L', type=int, default=7)
    p.add_argument('--out', type=str, required=True, help='DIMACS output file')
    p.add_argument('--solve', action='store_true',
                   help='Also solve the formula in-process and report the verdict')

    return parser.parse_args(argv)


def cmd_formula(args, config):
    result = ramsey_value(args.j, args.n, strict=args.strict)
    if result.value is None:
        print("paper-ambiguous")
    elif result.value.is_infinite:
        print("infinite")
    else:
        line = result.describe()
        print(f"{line} [paper-ambiguous]" if result.ambiguous else line)
    return EXIT_OK


def cmd_table(args, config):
    table = regime_table(args.j_max, args.n_max, strict=args.strict)
    sys.stdout.write(table.to_tsv() if args.format == 'tsv' else table.to_json() + "\n")
    return EXIT_OK


def cmd_construct(args, config):
    coloring = lower_bound_coloring(args.j, args.n, infinite_slots=args.slots, limits=config.limits)
    if coloring is None:
        raise NoWitnessError(f"value 1: empty host, m_{args.j}({args.n}K_2, C_7) has no witness")
    result = ramsey_value(args.j, args.n)
    directory = args.out or config.output.get_output_dir()
    save_coloring(coloring, directory, f"coloring_j{args.j}_n{args.n}")
    print(f"{result.regime} coloring on parts {list(coloring.shape.part_sizes)}, verified good")
    return EXIT_OK


def cmd_verify(args, config):
    coloring = load_coloring(args.file, config.limits)
    report = verify_good(coloring, args.n, args.L)
    print(json.dumps(report.to_json(), indent=2))
    if report.is_good:
        print("good")
        return EXIT_OK
    reasons = []
    if report.stripe_found:
        reasons.append(f"stripe: nu(red)={report.nu_red} >= {args.n}")
    if report.cycle_witness is not None:
        refs = " ".join(f"p{r.part}s{r.slot}" for r in report.cycle_witness.refs(coloring.shape))
        reasons.append(f"cycle: blue C_{args.L} {list(report.cycle_witness.vertices)} = {refs}")
    print("not good (" + "; ".join(reasons) + ")")
    return EXIT_PATTERN


def cmd_certify(args, config):
    search = _with_overrides(config.certify.search, time_budget=args.budget)
    certify = replace(config.certify, search=search)
    certificate, upper = build_certificate(args.j, args.n, certify, config.limits)
    if args.out:
        save_to_json(certificate, args.out)
    else:
        print(json.dumps(certificate, indent=2))
    logger.info("claimed %s, upper bound %s", certificate["claimed_value"],
                certificate["upper_bound"]["method"])
    return EXIT_OK


def cmd_validate(args, config):
    problems = validate_certificate(load_json(args.file), config.limits)
    if problems:
        for problem in problems:
            print(f"❌ {problem}")
        return EXIT_PATTERN
    print("valid")
    return EXIT_OK


def cmd_search(args, config):
    options = _with_overrides(
        config.search, symmetry=args.symmetry, dominance=args.dominance, edge_order=args.edge_order,
        node_budget=args.node_budget, time_budget=args.time_budget, workers=args.workers)
    shape = _shape_from(args)
    result = find_good_coloring(shape, args.n, args.L, options, config.limits)
    print(f"{result.verdict} after {result.nodes_explored} nodes ({result.wall_time:.2f}s)")
    if result.found:
        if args.out:
            save_coloring(result.coloring, args.out, f"good_{'-'.join(map(str, shape.part_sizes))}_n{args.n}")
        else:
            print(json.dumps(result.coloring.to_json()))
        return EXIT_OK
    if result.exhausted:
        print(json.dumps(result.certificate.to_json(), indent=2))
        return EXIT_PATTERN
    raise BudgetExceededError("search budget exhausted before a verdict")


def cmd_export_cnf(args, config):
    shape = _shape_from(args)
    export = export_cnf(shape, args.n, args.L, config.cnf, config.limits)
    dimacs_path, map_path = export.write(args.out)
    print(f"✅ DIMACS saved to: {dimacs_path} (variable map: {map_path})")
    print(f"{export.num_vars} variables, {export.cycle_clauses} cycle clauses, "
          f"{export.stripe_clauses} stripe clauses")
    if args.solve:
        coloring = solve_cnf(export)
        print("satisfiable" if coloring is not None else "unsatisfiable")
    return EXIT_OK


COMMANDS = {
    'formula': cmd_formula,
    'table': cmd_table,
    'construct': cmd_construct,
    'verify': cmd_verify,
    'certify': cmd_certify,
    'validate': cmd_validate,
    'search': cmd_search,
    'export-cnf': cmd_export_cnf,
}


def main(argv=None):
    # Parse command line arguments
    args = parse_arguments(argv)

    level = logging.ERROR if args.quiet else logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    config = AppConfig.load(args.config)
    try:
        return COMMANDS[args.command](args, config)
    except RamseyError as e:
        logger.error("%s", e)
        print(f"❌ {e}", file=sys.stderr)
        return e.exit_code


if __name__ == '__main__':
    sys.exit(main())
