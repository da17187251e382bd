"""
Command-line entry point for the workbench
Usage: python workbench.py <command> [options]

Exit status: 0 on success, 1 when a verification fails (rejected proof,
failed local check, refutation found), 2 on usage or input errors.
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional
import argparse
import json
import logging
import sys
import os

import pandas as pd

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import (
    BUDGET_PROFILES, COUNTING_MODES, DEFAULT_COUNTING_MODE, COUNTING_CONVENTION_ID,
    ENUMERATION_HARD_CEILING, OMEGA_SAMPLE_COUNT, active_profile_name,
)
from utils.log import setup_logging
from ordinals import (
    OrdinalError, ZERO, parse_ordinal, format_ordinal, compare, fund_seq, mesh, step_down,
    Reached, NotOnPath,
)
from fgh import EvalBudget, fgh_eval, feps_star, feps_inverse, outcome_to_dict
from syntax import FormulaParseError
from kernel import (
    ProofFormatError, EnumerationCapError, Accepted, Refutation, THEORIES,
    check, get_theory, parse_proof, render_proof, proof_length, enumerate_consistency,
)
from gentzen import GenerationError, GENERATOR_THEORY, checked, size_report
from infinitary import (
    ReductionPreconditionError, TermFormatError, FastGrowing, Surrogate, LocalError,
    OK, certificate_check, fixture_suite, locally_correct, read_term, reduce_trace,
    trace_spot_check, worked_chain, worked_chain_mutant,
)
from data import database

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# Errors that mean the input could not be understood
INPUT_ERRORS = (
    OrdinalError, FormulaParseError, ProofFormatError, TermFormatError,
    EnumerationCapError, ReductionPreconditionError, KeyError, OSError,
)


# ============================================================================
# RUN CONFIGURATION
# ============================================================================

@dataclass
class RunConfig:
    command: str
    profile: str
    budgets: Dict[str, int]
    counting: str = DEFAULT_COUNTING_MODE
    fmt: str = 'json'
    out: Optional[str] = None
    save: bool = False

    def __post_init__(self):
        if any(v <= 0 for v in self.budgets.values()):
            raise ValueError("budgets must be positive")
        if self.budgets['enumeration_cap'] > ENUMERATION_HARD_CEILING:
            self.budgets['enumeration_cap'] = ENUMERATION_HARD_CEILING

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> 'RunConfig':
        profile = args.profile or active_profile_name()
        budgets = dict(BUDGET_PROFILES[profile])
        if getattr(args, 'max_steps', None):
            budgets['max_steps'] = args.max_steps
        if getattr(args, 'max_value', None):
            budgets['max_value'] = args.max_value
        return cls(args.command, profile, budgets, args.counting, args.format, args.out, args.save)

    @property
    def eval_budget(self) -> EvalBudget:
        return EvalBudget(self.budgets['max_steps'], self.budgets['max_value'])

    def meta(self) -> dict:
        """Embedded in every report"""
        return {
            'counting_convention': COUNTING_CONVENTION_ID,
            'counting_mode': self.counting,
            'profile': self.profile,
            'budgets': dict(self.budgets),
        }


@dataclass
class Result:
    status: int
    report: dict
    raw: Optional[str] = None          # printed as is instead of the rendered report
    rows: List[dict] = field(default_factory=list)


# ============================================================================
# ORDINAL AND FGH COMMANDS
# ============================================================================

def cmd_ordinal(args, config: RunConfig) -> Result:
    op = args.ordinal_command
    if op == 'parse':
        a = parse_ordinal(args.a)
        text = format_ordinal(a)
        return Result(EXIT_OK, {'summary': text, 'canonical': text,
                                'is_limit': a.is_limit, 'is_successor': a.is_successor})
    if op == 'compare':
        result = compare(parse_ordinal(args.a), parse_ordinal(args.b)).value
        return Result(EXIT_OK, {'summary': result, 'result': result})
    if op == 'fundseq':
        value = format_ordinal(fund_seq(parse_ordinal(args.a), args.n))
        return Result(EXIT_OK, {'summary': value, 'value': value})
    if op == 'mesh':
        meshes = mesh(parse_ordinal(args.b), parse_ordinal(args.a))
        return Result(EXIT_OK, {'summary': str(meshes).lower(), 'mesh': meshes})

    outcome = step_down(parse_ordinal(args.b), parse_ordinal(args.a), args.k,
                        config.budgets['step_down_budget'])
    report = {'outcome': type(outcome).__name__}
    if isinstance(outcome, Reached):
        report['path'] = [format_ordinal(x) for x in outcome.path.steps]
        report['summary'] = 'Reached ' + ' > '.join(report['path'])
        return Result(EXIT_OK, report)
    if isinstance(outcome, NotOnPath):
        report['last'] = format_ordinal(outcome.last)
        report['summary'] = f"NotOnPath {report['last']}"
    else:
        report['steps_used'] = outcome.steps_used
        report['summary'] = f"BudgetExhausted {outcome.steps_used}"
    return Result(EXIT_FAILED, report)


def _outcome_report(outcome) -> dict:
    report = outcome_to_dict(outcome)
    summary = report['outcome']
    if 'value' in report:
        summary += f" {report['value']}"
    report['summary'] = summary
    return report


def cmd_fgh(args, config: RunConfig) -> Result:
    op = args.fgh_command
    if op == 'eval':
        outcome = fgh_eval(parse_ordinal(args.a), args.n, config.eval_budget)
        return Result(EXIT_OK, _outcome_report(outcome))
    if op == 'feps-star':
        return Result(EXIT_OK, _outcome_report(feps_star(args.x, config.eval_budget)))
    value = feps_inverse(args.x)
    return Result(EXIT_OK, {'summary': str(value), 'value': value})


# ============================================================================
# PROOF COMMANDS
# ============================================================================

def _open_session():
    database.create_tables()
    return database.get_session()


def cmd_generate(args, config: RunConfig) -> Result:
    kind = 'ti' if args.command == 'gen-ti' else 'feps'
    try:
        proof = checked(kind, args.n)
    except GenerationError as e:
        return Result(EXIT_FAILED, {'summary': str(e), 'kind': kind, 'n': args.n, 'accepted': False})

    text = render_proof(proof)
    size = proof_length(proof, config.counting)
    report = {
        'kind': kind,
        'n': args.n,
        'theory': GENERATOR_THEORY[kind],
        'proof_length': size,
        'lines': len(proof),
        'sha256': database.proof_digest(text),
        'accepted': True,
        'summary': f"{kind} n={args.n}: {size} symbols, {len(proof)} lines",
    }
    if config.save:
        session = _open_session()
        try:
            database.save_proof_record(session, kind, args.n, config.counting,
                                       size, len(proof), text, True)
        finally:
            session.close()

    if not config.out:
        return Result(EXIT_OK, report, raw=text)
    with open(config.out, 'w', encoding='utf-8') as f:
        f.write(text)
    report['out'] = config.out
    return Result(EXIT_OK, report)


def cmd_check_proof(args, config: RunConfig) -> Result:
    with open(args.file, encoding='utf-8') as f:
        proof = parse_proof(f.read())
    verdict = check(proof, get_theory(args.theory))
    report = {
        'theory': args.theory,
        'lines': len(proof),
        'proof_length': proof_length(proof, config.counting),
        'verdict': type(verdict).__name__,
    }
    if isinstance(verdict, Accepted):
        report['summary'] = f"Accepted {len(proof)} lines"
        return Result(EXIT_OK, report)
    report.update(line=verdict.line, reason=verdict.reason)
    report['summary'] = f"Rejected at line {verdict.line}: {verdict.reason}"
    logger.warning("%s rejected at line %d: %s", args.file, verdict.line, verdict.reason)
    return Result(EXIT_FAILED, report)


def cmd_measure(args, config: RunConfig) -> Result:
    if args.start > args.stop:
        raise ValueError("--from must not exceed --to")
    try:
        size = size_report(range(args.start, args.stop + 1), args.kind, config.counting)
    except GenerationError as e:
        return Result(EXIT_FAILED, {'summary': str(e), 'kind': args.kind})

    rows = size.to_frame().to_dict(orient='records')
    report = {
        'kind': size.kind,
        'degree': size.degree,
        'constant': size.constant,
        'bound_holds': size.bound_holds,
        'rows': rows,
        'summary': (f"{size.kind} n={args.start}..{args.stop}: degree {size.degree:.3f}, "
                    f"C={size.constant}, bound {'holds' if size.bound_holds else 'fails'}"),
    }
    if config.save:
        session = _open_session()
        try:
            report['run_id'] = database.save_size_report(session, size)
        finally:
            session.close()
    return Result(EXIT_OK if size.bound_holds else EXIT_FAILED, report, rows=rows)


def cmd_consistency(args, config: RunConfig) -> Result:
    theory = get_theory(args.theory)
    verdict = enumerate_consistency(theory, args.max_symbols, config.budgets['enumeration_cap'])
    report = {'theory': args.theory, 'max_symbols': args.max_symbols,
              'verdict': type(verdict).__name__}
    if isinstance(verdict, Refutation):
        report['proof'] = render_proof(verdict.proof).splitlines()
        report['proof_length'] = proof_length(verdict.proof, config.counting)
        report['summary'] = f"Refutation of {report['proof_length']} symbols"
        return Result(EXIT_FAILED, report)
    report['summary'] = f"NoRefutationUpTo {verdict.n}"
    return Result(EXIT_OK, report)


# ============================================================================
# REDUCTION
# ============================================================================

def named_terms() -> dict:
    """Fixture name -> (term, offset)"""
    terms = {f.name: (f.term, f.mu) for f in fixture_suite()}
    terms['worked-chain'] = (worked_chain(), ZERO)
    terms['worked-chain-mutant'] = (worked_chain_mutant(), ZERO)
    return terms


def cmd_reduce(args, config: RunConfig) -> Result:
    if args.list:
        names = sorted(named_terms())
        return Result(EXIT_OK, {'summary': ' '.join(names), 'fixtures': names})

    if args.term:
        with open(args.term, encoding='utf-8') as f:
            term, mu = read_term(f.read()), ZERO
    elif args.fixture:
        term, mu = named_terms()[args.fixture]
    else:
        raise ValueError("reduce needs --fixture, --term or --list")
    if args.mu is not None:
        mu = parse_ordinal(args.mu)

    step_budget = config.budgets['step_down_budget']
    local = locally_correct(term, OMEGA_SAMPLE_COUNT, step_budget)
    report = {'mu': format_ordinal(mu), 'height': format_ordinal(term.height),
              'locally_correct': isinstance(local, OK)}
    if not isinstance(local, OK):
        report.update(fail_path=list(local.path), reason=local.reason,
                      summary=f"Fail at {list(local.path)}: {local.reason}")
        return Result(EXIT_FAILED, report)
    if args.check_only:
        report['summary'] = 'OK'
        return Result(EXIT_OK, report)

    if args.hierarchy == 'G':
        hierarchy = Surrogate(max_steps=config.budgets['max_steps'])
    else:
        hierarchy = FastGrowing(config.eval_budget)
    trace = reduce_trace(term, mu, hierarchy, config.budgets['reduction_budget'], step_budget)
    certificates_ok = all(certificate_check(c, hierarchy, step_budget)
                          for c in trace.certificates())
    spot = trace_spot_check(trace)

    report.update(trace.verdict_dict())
    report.update(
        hierarchy=trace.hierarchy,
        steps=len(trace.steps),
        certificates_ok=certificates_ok,
        nonstrict_steps_keep_sequent=trace.nonstrict_steps_keep_sequent(),
        spot_check={'checked': spot.checked, 'skipped': spot.skipped,
                    'violations': spot.violations},
        summary=f"{type(trace.verdict).__name__} after {len(trace.steps)} steps",
    )
    failed = (isinstance(trace.verdict, LocalError) or not certificates_ok
              or not spot.ok or not report['nonstrict_steps_keep_sequent'])
    status = EXIT_FAILED if failed else EXIT_OK
    rows = [s.to_dict() for s in trace.steps]
    if config.fmt == 'json':
        report['config'] = config.meta()
        return Result(status, report, raw=trace.to_json_lines() + json.dumps(report, sort_keys=True) + '\n')
    return Result(status, report, rows=rows)


# ============================================================================
# OUTPUT
# ============================================================================

def render(result: Result, config: RunConfig) -> str:
    report = dict(result.report)
    report['config'] = config.meta()
    if config.fmt == 'json':
        return json.dumps(report, sort_keys=True, indent=2) + '\n'

    meta = [f"# counting_convention={COUNTING_CONVENTION_ID}",
            f"# counting_mode={config.counting}",
            f"# profile={config.profile}"]
    meta += [f"# {name}={value}" for name, value in sorted(config.budgets.items())]
    if config.fmt == 'text':
        return report.get('summary', '') + '\n' + '\n'.join(meta) + '\n'

    if result.rows:
        frame = pd.DataFrame(result.rows)
        scalars = {k: v for k, v in report.items()
                   if k not in ('rows', 'config', 'summary') and not isinstance(v, (list, dict))}
        meta += [f"# {k}={v}" for k, v in sorted(scalars.items())]
    else:
        flat = {k: v for k, v in report.items() if k not in ('config', 'summary')}
        frame = pd.json_normalize(flat)
    return '\n'.join(meta) + '\n' + frame.to_csv(index=False)


# ============================================================================
# ARGUMENT PARSING
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--profile', choices=sorted(BUDGET_PROFILES),
                        help='budget profile (default from WORKBENCH_BUDGET_PROFILE)')
    common.add_argument('--counting', choices=COUNTING_MODES, default=DEFAULT_COUNTING_MODE,
                        help='symbol counting mode for proof lengths')
    common.add_argument('--format', choices=('json', 'csv', 'text'), default='json',
                        help='report format')
    common.add_argument('--out', help='write the report (or the generated proof) here')
    common.add_argument('--verbose', action='store_true', help='DEBUG logging')
    common.add_argument('--save', action='store_true', help='store results in the database')

    parser = argparse.ArgumentParser(
        description='Ordinal, fast-growing hierarchy and proof-size workbench')
    commands = parser.add_subparsers(dest='command', required=True)

    ordinal = commands.add_parser('ordinal', help='ordinal calculator')
    ordinal_ops = ordinal.add_subparsers(dest='ordinal_command', required=True)
    p = ordinal_ops.add_parser('parse', parents=[common])
    p.add_argument('a')
    p = ordinal_ops.add_parser('compare', parents=[common])
    p.add_argument('a')
    p.add_argument('b')
    p = ordinal_ops.add_parser('fundseq', parents=[common])
    p.add_argument('a')
    p.add_argument('n', type=int)
    p = ordinal_ops.add_parser('stepdown', parents=[common], help='certify a <_k b')
    p.add_argument('b')
    p.add_argument('a')
    p.add_argument('k', type=int)
    p = ordinal_ops.add_parser('mesh', parents=[common], help='does b mesh with a')
    p.add_argument('b')
    p.add_argument('a')

    fgh = commands.add_parser('fgh', help='fast-growing hierarchy evaluator')
    fgh_ops = fgh.add_subparsers(dest='fgh_command', required=True)
    p = fgh_ops.add_parser('eval', parents=[common])
    p.add_argument('a')
    p.add_argument('n', type=int)
    p.add_argument('--max-steps', type=int)
    p.add_argument('--max-value', type=int)
    for name in ('feps-star', 'inverse'):
        p = fgh_ops.add_parser(name, parents=[common])
        p.add_argument('x', type=int)

    for name in ('gen-ti', 'gen-feps'):
        p = commands.add_parser(name, parents=[common], help='generate and check a proof')
        p.add_argument('n', type=int)

    p = commands.add_parser('check-proof', parents=[common], help='check a proof file')
    p.add_argument('file')
    p.add_argument('--theory', choices=sorted(THEORIES), default='pa-o-f')

    p = commands.add_parser('measure', parents=[common], help='proof sizes over a range of n')
    p.add_argument('--from', dest='start', type=int, required=True)
    p.add_argument('--to', dest='stop', type=int, required=True)
    p.add_argument('--kind', choices=('ti', 'feps'), default='ti')

    p = commands.add_parser('consistency-search', parents=[common],
                            help='exhaustive search for a short refutation')
    p.add_argument('--theory', choices=sorted(THEORIES), required=True)
    p.add_argument('--max-symbols', type=int, required=True)

    p = commands.add_parser('reduce', parents=[common], help='walk a rank-0 proof term')
    p.add_argument('--fixture', help='name of a built-in proof term')
    p.add_argument('--term', help='s-expression proof term file')
    p.add_argument('--mu', help='offset ordinal')
    p.add_argument('--hierarchy', choices=('F', 'G'), default='F')
    p.add_argument('--check-only', action='store_true', help='local correctness only')
    p.add_argument('--list', action='store_true', help='list built-in proof terms')
    return parser


HANDLERS: Dict[str, Callable[..., Result]] = {
    'ordinal': cmd_ordinal,
    'fgh': cmd_fgh,
    'gen-ti': cmd_generate,
    'gen-feps': cmd_generate,
    'check-proof': cmd_check_proof,
    'measure': cmd_measure,
    'consistency-search': cmd_consistency,
    'reduce': cmd_reduce,
}


def main(argv: List[str] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    setup_logging('DEBUG' if args.verbose else None)
    try:
        config = RunConfig.from_args(args)
        result = HANDLERS[args.command](args, config)
    except INPUT_ERRORS + (ValueError,) as e:
        message = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        print(f"error: {message}", file=sys.stderr)
        return EXIT_USAGE

    text = result.raw if result.raw is not None else render(result, config)
    if config.out and args.command not in ('gen-ti', 'gen-feps'):
        with open(config.out, 'w', encoding='utf-8') as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return result.status


if __name__ == '__main__':
    sys.exit(main())
