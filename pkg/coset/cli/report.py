# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

"""
Structured reports written by the command-line tool. The JSON form is
described by `coset/report.schema.json`; the text form is for terminals.
"""

import hashlib
import json
from dataclasses import dataclass, field

from typing import Any, Optional, TextIO

from .. import __version__
from ..char.table import CharTable
from ..char.tablefile import export_table
from ..util.common import c

__all__ = ['REPORT_FORMAT', 'ReportBlock', 'AnalysisReport', 'table_hash', 'render_text']


REPORT_FORMAT = 1


def table_hash(t: CharTable) -> str:
  "sha256 of the exported text form of the table"
  return hashlib.sha256(export_table(t).encode()).hexdigest()


############################################################################
# Report schema

@dataclass
class ReportBlock:
  title: str
  status: str = 'info'  # pass, fail, not-applicable or info
  data: dict[str, Any] = field(default_factory=dict)
  checks: list[dict[str, Any]] = field(default_factory=list)  # Identity.to_dict() records
  cosets: list[dict[str, Any]] = field(default_factory=list)  # CosetAnalysis.to_dict() records
  theorems: list[dict[str, Any]] = field(default_factory=list)  # TheoremReport.to_dict() records
  trace: Optional[str] = None

  @property
  def failed(self) -> bool:
    return self.status == 'fail'

  def to_dict(self) -> dict[str, Any]:
    out = {
      'title': self.title,
      'status': self.status,
      'data': self.data,
      'checks': self.checks,
      'cosets': self.cosets,
      'theorems': self.theorems,
    }
    if self.trace is not None:
      out['trace'] = self.trace
    return out

  @classmethod
  def from_dict(cls, d: dict[str, Any]) -> 'ReportBlock':
    return cls(
      title=d['title'],
      status=d['status'],
      data=d.get('data', {}),
      checks=d.get('checks', []),
      cosets=d.get('cosets', []),
      theorems=d.get('theorems', []),
      trace=d.get('trace'),
    )


@dataclass
class AnalysisReport:
  command: str
  config: dict[str, Any]
  group: Optional[str] = None
  table_hash: Optional[str] = None
  blocks: list[ReportBlock] = field(default_factory=list)
  summary: dict[str, Any] = field(default_factory=dict)
  version: str = __version__
  execution_time: Optional[float] = None  # In seconds; only with --timing

  @property
  def passed(self) -> bool:
    return not any(b.failed for b in self.blocks)

  def add(self, block: ReportBlock) -> ReportBlock:
    self.blocks.append(block)
    return block

  def to_dict(self) -> dict[str, Any]:
    out = {
      'format': REPORT_FORMAT,
      'version': self.version,
      'command': self.command,
      'group': self.group,
      'config': self.config,
      'table_hash': self.table_hash,
      'passed': self.passed,
      'summary': self.summary,
      'blocks': [b.to_dict() for b in self.blocks],
    }
    if self.execution_time is not None:
      out['execution_time'] = self.execution_time
    return out

  @classmethod
  def from_dict(cls, d: dict[str, Any]) -> 'AnalysisReport':
    if d.get('format') != REPORT_FORMAT:
      raise ValueError(f'unsupported report format {d.get("format")!r}')
    return cls(
      command=d['command'],
      config=d['config'],
      group=d.get('group'),
      table_hash=d.get('table_hash'),
      blocks=[ReportBlock.from_dict(b) for b in d.get('blocks', [])],
      summary=d.get('summary', {}),
      version=d['version'],
      execution_time=d.get('execution_time'),
    )

  def to_json(self) -> str:
    return json.dumps(self.to_dict(), indent=2) + '\n'

  @classmethod
  def from_json(cls, text: str) -> 'AnalysisReport':
    return cls.from_dict(json.loads(text))


############################################################################
# Text rendering

_STATUS_COLOR = {'pass': 'green', 'fail': 'red', 'not-applicable': 'yellow', 'info': 'cyan'}

def _status(status: str, color: bool) -> str:
  tag = status.upper()
  if not color:
    return f'[{tag}]'
  return f'{c(_STATUS_COLOR.get(status), bold=status == "fail")}[{tag}]{c()}'

def _identity_line(ident: dict[str, Any], color: bool) -> str:
  mark = _status('pass' if ident['holds'] else 'fail', color)
  return f'      {mark} {ident["label"]}: {ident["lhs"]}  vs  {ident["rhs"]}'


def render_text(report: AnalysisReport, file: TextIO, *, color: bool = False, verbose: bool = False) -> None:
  "Human-readable rendering; every identity shows both sides, verbatim"
  def out(line: str = '') -> None:
    print(line, file=file)

  out(f'pycoset {report.version}: {report.command}' + (f' {report.group}' if report.group else ''))
  if report.table_hash:
    out(f'  table sha256 {report.table_hash}')
  for block in report.blocks:
    out()
    out(f'{_status(block.status, color)} {block.title}')
    for key, value in block.data.items():
      out(f'  {key}: {value}')
    for ident in block.checks:
      out(_identity_line(ident, color))
    for coset in block.cosets:
      classes = '+'.join(coset['classes'])
      out(f'  N of order {coset["normal_order"]}, x in {coset["x_class"]}: {coset["verdict"]} ({classes})')
    for thm in block.theorems:
      out(f'  theorem {thm["theorem"]}: {_status(thm["status"], color)}' + (f' {thm["reason"]}' if thm['reason'] else ''))
      for cond in thm['conditions']:
        if cond['passed'] and not verbose:
          continue
        out(f'    {_status("pass" if cond["passed"] else "fail", color)} {cond["name"]}' + (f': {cond["detail"]}' if cond['detail'] else ''))
        for ident in cond['identities']:
          if verbose or not ident['holds']:
            out(_identity_line(ident, color))
    if block.trace:
      out(block.trace)
  if report.summary:
    out()
    out('summary: ' + ', '.join(f'{k}={v}' for k, v in report.summary.items()))
  if report.execution_time is not None:
    out(f'execution time: {report.execution_time:.2f}s')
