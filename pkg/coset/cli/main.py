# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

"""
Command-line front end. Exit status is 0 when every check passes, 1 when a
theorem check or comparison fails, and 2 on usage or input errors.
"""

import os
import sys
import time

from typing import NoReturn, Optional

from ..char.table import SplittingError, check_structure_constants, check_table
from ..char.tablefile import TableFormatError, compare_tables, export_table, load_table, table_file_from, validate_table
from ..group.catalog import GroupSpecError, catalog_sweep_list
from ..group.perm import ElementCapExceeded, NotNormalError, Permutation, is_solvable
from ..lab import theorems
from ..lab.context import GroupLab, NormalSubgroup
from ..lab.cosets import classify_coset
from ..lab.lattice import chief_series_through
from ..lab.records import PreconditionError, render_value
from ..lab.search import TheoremViolation, equivalence_sweep, search
from ..util.common import die, hr, msg, printerr
from ..util.config import LabConfig, parse_switch
from .examples import run_examples
from .report import AnalysisReport, ReportBlock, render_text, table_hash

__all__ = ['main']


def usage(progname: str, status: int = 0) -> NoReturn:
  die(
    f'usage: {progname} [global options] COMMAND ...\n'
    '\n'
    'commands:\n'
    '  info SPEC                               classes, normal subgroups and chief factors\n'
    '  table SPEC [--export PATH] [--check PATH]\n'
    '  verify SPEC --normal ORDER|#INDEX --coset LABEL|ORDER[:SIZE]\n'
    '              --thm a|b|c|2.2|lemma31 [--class-c LABEL] [--extension ROW]\n'
    '  search (--max-order N | --specs SPEC...) [--equivalence]\n'
    '  examples [--include-stretch] [--trace]\n'
    '\n'
    'global options:\n'
    '  --seed N  --element-cap N  --parallel on|off  --output PATH  --json  --timing  --color  -v',
    status=status,
  )


def _pop_arg(args: list[str], flag: str) -> str:
  args.pop(0)
  if not args:
    die(f'error: {flag} requires an argument', status=2)
  return args.pop(0)

def _pop_int(args: list[str], flag: str) -> int:
  value = _pop_arg(args, flag)
  try:
    return int(value)
  except ValueError:
    die(f'error: {flag} argument must be an integer', status=2)


############################################################################
# Selectors

def _describe_normal(lab: GroupLab, idx: int, n: NormalSubgroup) -> str:
  return f'#{idx}: order {n.order}, classes {" ".join(lab.label(i) for i in sorted(n.classes))}'

def select_normal(lab: GroupLab, selector: str) -> NormalSubgroup:
  subgroups = lab.normal_subgroups
  if selector.startswith('#'):
    try:
      return subgroups[int(selector[1:])]
    except (ValueError, IndexError):
      raise LookupError(f'no normal subgroup {selector}; there are {len(subgroups)}') from None
  try:
    order = int(selector)
  except ValueError:
    raise LookupError(f'bad normal subgroup selector {selector!r}') from None
  matches = [(i, n) for i, n in enumerate(subgroups) if n.order == order]
  if len(matches) != 1:
    listing = '\n'.join('  ' + _describe_normal(lab, i, n) for i, n in enumerate(subgroups))
    raise LookupError(f'{len(matches)} normal subgroups of order {order}; choose one by index:\n{listing}')
  return matches[0][1]

def select_coset(lab: GroupLab, n: NormalSubgroup, selector: str) -> Permutation:
  "Representative of the class given by label, or by element order and optional class size, outside n"
  cd = lab.classes
  if selector in cd.labels:
    k = cd.label_index(selector)
    if k in n.classes:
      raise LookupError(f'class {selector} lies inside the normal subgroup')
    return cd.reps[k]
  order, _, size = selector.partition(':')
  try:
    order_ = int(order)
    size_ = int(size) if size else None
  except ValueError:
    raise LookupError(f'bad coset selector {selector!r}') from None
  matches = [
    i for i in range(len(cd))
    if i not in n.classes and cd.orders[i] == order_ and (size_ is None or cd.sizes[i] == size_)
  ]
  if len(matches) != 1:
    listing = '\n'.join(f'  {cd.labels[i]}: order {cd.orders[i]}, size {cd.sizes[i]}' for i in matches)
    raise LookupError(f'{len(matches)} classes outside N match {selector!r}' + (f'; choose by label:\n{listing}' if matches else ''))
  return cd.reps[matches[0]]


############################################################################
# Commands

def cmd_info(lab: GroupLab, report: AnalysisReport) -> None:
  cd = lab.classes
  report.add(ReportBlock('group', data={
    'order': lab.order,
    'degree': lab.group.degree,
    'solvable': is_solvable(lab.group),
    'classes': len(cd),
    'labels': ' '.join(cd.labels),
    'sizes': ' '.join(map(str, cd.sizes)),
    'orders': ' '.join(map(str, cd.orders)),
    'exponent': cd.exponent,
  }))
  subgroups = lab.normal_subgroups
  report.add(ReportBlock('normal subgroups', data={
    f'#{i}': f'order {n.order}, classes {" ".join(lab.label(j) for j in sorted(n.classes))}'
    for i, n in enumerate(subgroups)
  }))
  factors = chief_series_through(lab, lab.whole_group())
  report.add(ReportBlock('chief series', data={
    f'{f.lower.order} < {f.upper.order}': 'abelian' if f.abelian else f.recognition.name
    for f in factors
  }))


def cmd_table(lab: GroupLab, report: AnalysisReport, export: Optional[str], check: Optional[str]) -> None:
  t = lab.table
  report.table_hash = table_hash(t)
  block = report.add(ReportBlock('character table', data={
    'degrees': ' '.join(map(str, t.degrees)),
    'prime': t.prime,
  }))
  problems = check_table(t) + check_structure_constants(t)
  block.data['problems'] = problems
  block.status = 'fail' if problems else 'pass'
  if export is not None:
    with open(export, 'w') as fp:
      fp.write(export_table(t))
    block.data['exported'] = export
  if check is not None:
    tf = load_table(check)
    problems = validate_table(tf)
    diff = compare_tables(tf, table_file_from(t)) if not problems else None
    report.add(ReportBlock(f'check against {check}', data={
      'problems': problems + (diff.problems if diff is not None else []),
      'column_map': render_value(diff.column_map) if diff is not None else None,
    }, status='pass' if not problems and diff.matches else 'fail'))


def cmd_verify(lab: GroupLab, report: AnalysisReport, normal: str, coset: str, thm: str,
               class_c: Optional[str], extension: Optional[int]) -> None:
  n = select_normal(lab, normal)
  x = select_coset(lab, n, coset)
  analysis = classify_coset(lab, n, x)
  block = report.add(ReportBlock(f'theorem {thm}', data={'normal_order': n.order, 'x': str(x)}))
  block.cosets.append(analysis.to_dict())
  match thm:
    case 'a':
      result = theorems.verify_thmA(lab, n, x)
    case 'b':
      result = theorems.verify_thmB(lab, n, x, corollary=True)
    case 'c':
      result = theorems.verify_thmC(lab, n, x)
    case '2.2':
      result = theorems.verify_single_class_criterion(lab, n, x)
    case 'lemma31':
      if class_c is None:
        raise LookupError('--thm lemma31 requires --class-c LABEL')
      c = lab.classes.label_index(class_c)
      result = theorems.lemma31_check(lab, lab.classes.class_of[x], c, extension=extension)
    case _:
      raise LookupError(f'unknown theorem {thm!r}')
  block.theorems.append(result.to_dict())
  block.status = result.status


def cmd_search(config: LabConfig, report: AnalysisReport, specs: list[str], equivalence: bool) -> None:
  result = search(specs, config)
  for g in result.groups:
    block = report.add(ReportBlock(g.spec, data={'order': g.order}))
    block.cosets = [a.to_dict() for a in g.analyses]
    block.theorems = [r.to_dict() for r in g.reports]
    if g.error is not None:
      block.data['error'] = g.error
    block.status = 'pass' if g.error is None and all(r.passed for r in g.reports) else 'fail'
  report.summary = result.summary()
  if equivalence:
    sweep = equivalence_sweep(specs, config)
    block = report.add(ReportBlock('equivalence sweep', data=sweep.summary()))
    block.checks = [
      {'label': f'{d.spec} [{d.check}] N of order {d.normal_order}, x = {d.x}', 'lhs': d.detail, 'rhs': 'agreement', 'holds': False}
      for d in sweep.discrepancies
    ]
    block.data['errors'] = [f'{g.spec}: {g.error}' for g in sweep.groups if g.error is not None]
    block.status = 'pass' if sweep.passed else 'fail'
    report.summary['discrepancies'] = len(sweep.discrepancies)


def cmd_examples(config: LabConfig, report: AnalysisReport, include_stretch: bool, trace: bool) -> None:
  tracer = None
  if trace:
    try:
      from ..util.trace import TraceLog
    except ImportError:
      die('error: --trace requires the snoop package (pip install pycoset[snoop])', status=2)
    tracer = TraceLog()
  for block in run_examples(config, include_stretch=include_stretch, tracer=tracer):
    report.add(block)
  report.summary = {
    'blocks': len(report.blocks),
    'passed': sum(b.status == 'pass' for b in report.blocks),
    'failed': sum(b.failed for b in report.blocks),
  }


############################################################################
# Entry point

def main(argv: Optional[list[str]] = None) -> int:
  prog_name = os.path.basename(sys.argv[0])
  args = list(sys.argv[1:] if argv is None else argv)
  overrides = {}
  output = None
  as_json = False
  timing = False
  color = False
  verbose = False
  while args and args[0].startswith('-'):
    match args[0]:
      case '-h' | '--help':
        usage(prog_name)
      case '--seed':
        overrides['seed'] = _pop_int(args, '--seed')
      case '--element-cap':
        overrides['element_cap'] = _pop_int(args, '--element-cap')
      case '--parallel':
        try:
          overrides['parallel'] = parse_switch(_pop_arg(args, '--parallel'))
        except ValueError as err:
          die(f'error: --parallel: {err}', status=2)
      case '--output':
        output = _pop_arg(args, '--output')
      case '--json':
        as_json = True
        args.pop(0)
      case '--timing':
        timing = True
        args.pop(0)
      case '--color':
        color = True
        args.pop(0)
      case '-v':
        verbose = True
        args.pop(0)
      case flag:
        die(f'error: unknown option {flag}', status=2)
  if not args:
    usage(prog_name, status=2)

  try:
    config = LabConfig.from_env().with_overrides(**overrides)
  except ValueError as err:
    die(f'error: {err}', status=2)

  command = args.pop(0)
  report = AnalysisReport(command, config.to_dict())
  start_time = time.perf_counter()
  try:
    match command:
      case 'info' | 'table' | 'verify':
        if not args or args[0].startswith('-'):
          die(f'error: {command} requires a group spec', status=2)
        spec = args.pop(0)
        lab = GroupLab.from_spec(spec, config)
        report.group = str(lab.name)
        opts = _command_options(args, command)
        match command:
          case 'info':
            cmd_info(lab, report)
          case 'table':
            cmd_table(lab, report, opts.get('--export'), opts.get('--check'))
          case 'verify':
            for required in ('--normal', '--coset', '--thm'):
              if required not in opts:
                die(f'error: verify requires {required}', status=2)
            extension = opts.get('--extension')
            if extension is not None and not extension.isdigit():
              die('error: --extension argument must be a row index', status=2)
            cmd_verify(lab, report, opts['--normal'], opts['--coset'], opts['--thm'],
                       opts.get('--class-c'), int(extension) if extension is not None else None)
      case 'search':
        specs: Optional[list[str]] = None
        equivalence = False
        while args:
          match args[0]:
            case '--max-order':
              specs = [str(s) for s in catalog_sweep_list(_pop_int(args, '--max-order'))]
            case '--specs':
              args.pop(0)
              specs = []
              while args and not args[0].startswith('--'):
                specs.append(args.pop(0))
            case '--equivalence':
              equivalence = True
              args.pop(0)
            case flag:
              die(f'error: unknown search option {flag}', status=2)
        if specs is None:
          die('error: search requires --max-order N or --specs', status=2)
        cmd_search(config, report, specs, equivalence)
      case 'examples':
        include_stretch = trace = False
        for flag in args:
          match flag:
            case '--include-stretch':
              include_stretch = True
            case '--trace':
              trace = True
            case _:
              die(f'error: unknown examples option {flag}', status=2)
        cmd_examples(config, report, include_stretch, trace)
      case _:
        die(f'error: unknown command {command!r}', status=2)
  except (GroupSpecError, TableFormatError, NotNormalError, PreconditionError, LookupError, KeyError, OSError) as err:
    die(f'error: {err}', status=2)
  except ElementCapExceeded as err:
    die(f'error: {err}; raise --element-cap to proceed', status=2)
  except TheoremViolation as err:
    printerr(hr())
    printerr(f'THEOREM VIOLATION: {err}')
    printerr(hr())
    return 1
  except SplittingError as err:
    die(f'error: character table computation failed: {err}', status=1)

  if timing:
    report.execution_time = time.perf_counter() - start_time
  if output is not None:
    with open(output, 'w') as fp:
      fp.write(report.to_json())
    msg(f'report written to {output}')
  if as_json:
    sys.stdout.write(report.to_json())
  else:
    render_text(report, sys.stdout, color=color, verbose=verbose)
  return 0 if report.passed else 1


def _command_options(args: list[str], command: str) -> dict[str, str]:
  allowed = {
    'info': (),
    'table': ('--export', '--check'),
    'verify': ('--normal', '--coset', '--thm', '--class-c', '--extension'),
  }[command]
  opts = {}
  while args:
    flag = args[0]
    if flag not in allowed:
      die(f'error: unknown {command} option {flag}', status=2)
    opts[flag] = _pop_arg(args, flag)
  return opts


if __name__ == '__main__':
  sys.exit(main())
