# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

"""
Sweeps over catalog groups: coset classification with the theorem checks run
on every hit, and the three-way equivalence sweep on positive and negative
instances alike. Groups may be processed in worker processes; results are
always assembled in input order.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from typing import Any, Iterable, Optional

from ..group.catalog import GroupSpec
from ..group.perm import is_solvable, normal_closure
from ..util.common import debug
from ..util.config import LabConfig
from .context import GroupLab, NormalSubgroup
from .cosets import classes_met, classify_coset, coset_representatives
from .records import CosetAnalysis, InSingleClass, InTwoClasses, TheoremReport
from .theorems import evaluate_conditions, find_extending_characters, verify_single_class_criterion, verify_thmA

__all__ = [
  'TheoremViolation', 'GroupSearch', 'SearchResult', 'search',
  'Discrepancy', 'GroupSweep', 'SweepResult', 'equivalence_sweep',
]


class TheoremViolation(AssertionError):
  "The conclusion of a theorem used as a black box failed on a concrete instance"


def _searchable(lab: GroupLab) -> list[NormalSubgroup]:
  return [n for n in lab.normal_subgroups if 1 < n.order < lab.order]


def _map_groups(worker, specs: list[str], config: LabConfig) -> list:
  if config.parallel and len(specs) > 1:
    with ProcessPoolExecutor() as pool:
      return list(pool.map(worker, specs, [config] * len(specs)))
  return [worker(spec, config) for spec in specs]


############################################################################
# Search

@dataclass
class GroupSearch:
  spec: str
  order: Optional[int] = None
  analyses: list[CosetAnalysis] = field(default_factory=list)
  reports: list[TheoremReport] = field(default_factory=list)
  error: Optional[str] = None

  def to_dict(self) -> dict[str, Any]:
    return {
      'spec': self.spec,
      'order': self.order,
      'error': self.error,
      'analyses': [a.to_dict() for a in self.analyses],
      'theorems': [r.to_dict() for r in self.reports],
    }


@dataclass
class SearchResult:
  groups: list[GroupSearch] = field(default_factory=list)

  @property
  def analyses(self) -> list[CosetAnalysis]:
    return [a for g in self.groups for a in g.analyses]

  @property
  def passed(self) -> bool:
    return all(g.error is None and all(r.passed for r in g.reports) for g in self.groups)

  def summary(self) -> dict[str, int]:
    out = {'groups': len(self.groups), 'cosets': 0, 'single-class': 0, 'two-classes': 0, 'spread': 0}
    for a in self.analyses:
      out['cosets'] += 1
      out[a.kind] += 1
    out['theorem_failures'] = sum(not r.passed for g in self.groups for r in g.reports)
    out['errors'] = sum(g.error is not None for g in self.groups)
    return out

  def to_dict(self) -> dict[str, Any]:
    return {'summary': self.summary(), 'groups': [g.to_dict() for g in self.groups]}


def _check_two_classes(lab: GroupLab, n: NormalSubgroup, analysis: CosetAnalysis) -> None:
  "Equal class sizes when a nontrivial character extends, and solvable <C> whenever KC = D with |K| = |D|"
  cd = lab.classes
  k, d = analysis.verdict.k, analysis.verdict.d
  if any(theta != 0 for theta, _ in find_extending_characters(lab, n)) and cd.sizes[k] != cd.sizes[d]:
    raise TheoremViolation(
      f'{lab.name}: coset of {analysis.x} over N of order {n.order} has a nontrivial extendible '
      f'character but |K| = {cd.sizes[k]} != |D| = {cd.sizes[d]}'
    )
  sc = cd.structure_constants
  for c in sorted(n.classes - {0}):
    support = sc.support(k, c)
    if len(support) != 1:
      continue
    (target,) = support
    if target != k and cd.sizes[target] == cd.sizes[k]:
      generated = normal_closure(lab.group, [cd.reps[c]])
      if not is_solvable(generated):
        raise TheoremViolation(
          f'{lab.name}: K C = D with |K| = |D| for C = {lab.label(c)}, but <C> of order {generated.order} is not solvable'
        )


def _search_group(spec: str, config: LabConfig) -> GroupSearch:
  result = GroupSearch(spec)
  try:
    lab = GroupLab.from_spec(spec, config)
    result.order = lab.order
    for n in _searchable(lab):
      for x in coset_representatives(lab, n):
        analysis = classify_coset(lab, n, x)
        result.analyses.append(analysis)
        match analysis.verdict:
          case InSingleClass():
            if not is_solvable(n.group):
              raise TheoremViolation(
                f'{lab.name}: coset of {x} lies in one class but N of order {n.order} is not solvable'
              )
          case InTwoClasses():
            result.reports.append(verify_thmA(lab, n, x))
            _check_two_classes(lab, n, analysis)
  except TheoremViolation:
    raise
  except Exception as err:
    result.error = f'{type(err).__name__}: {err}'
  debug(f'search {spec}: {len(result.analyses)} cosets, error={result.error}')
  return result


def search(specs: Iterable[GroupSpec | str], config: Optional[LabConfig] = None) -> SearchResult:
  """
  Classify one coset per G/N-class of nontrivial cosets, for every proper
  nontrivial normal subgroup of every group. Failures other than a
  TheoremViolation are recorded on the group and do not stop the sweep.
  """
  if config is None:
    config = LabConfig()
  return SearchResult(_map_groups(_search_group, [str(s) for s in specs], config))


############################################################################
# Equivalence sweep

@dataclass(frozen=True)
class Discrepancy:
  spec: str
  check: str  # 'A' or '2.2'
  normal_order: int
  x: str
  detail: str

  def to_dict(self) -> dict[str, Any]:
    return {'spec': self.spec, 'check': self.check, 'normal_order': self.normal_order, 'x': self.x, 'detail': self.detail}


@dataclass
class GroupSweep:
  spec: str
  instances_a: int = 0
  instances_22: int = 0
  positives_a: int = 0
  discrepancies: list[Discrepancy] = field(default_factory=list)
  error: Optional[str] = None

  def to_dict(self) -> dict[str, Any]:
    return {
      'spec': self.spec,
      'instances_a': self.instances_a,
      'positives_a': self.positives_a,
      'instances_2.2': self.instances_22,
      'error': self.error,
      'discrepancies': [d.to_dict() for d in self.discrepancies],
    }


@dataclass
class SweepResult:
  groups: list[GroupSweep] = field(default_factory=list)

  @property
  def discrepancies(self) -> list[Discrepancy]:
    return [d for g in self.groups for d in g.discrepancies]

  @property
  def passed(self) -> bool:
    return not self.discrepancies and all(g.error is None for g in self.groups)

  def summary(self) -> dict[str, int]:
    return {
      'groups': len(self.groups),
      'instances_a': sum(g.instances_a for g in self.groups),
      'positives_a': sum(g.positives_a for g in self.groups),
      'instances_2.2': sum(g.instances_22 for g in self.groups),
      'discrepancies': len(self.discrepancies),
      'errors': sum(g.error is not None for g in self.groups),
    }

  def to_dict(self) -> dict[str, Any]:
    return {'summary': self.summary(), 'groups': [g.to_dict() for g in self.groups]}


def _sweep_group(spec: str, config: LabConfig) -> GroupSweep:
  result = GroupSweep(spec)
  try:
    lab = GroupLab.from_spec(spec, config)
    for n in _searchable(lab):
      for x in coset_representatives(lab, n):
        k = lab.classes.class_of[x]
        for d in range(len(lab.classes)):
          if d == k:
            continue
          a, b, c = evaluate_conditions(lab, n, x, d)
          result.instances_a += 1
          result.positives_a += a
          if not a == b == c:
            result.discrepancies.append(Discrepancy(
              spec, 'A', n.order, str(x), f'D = {lab.label(d)}: (a)={a} (b)={b} (c)={c}',
            ))
        report = verify_single_class_criterion(lab, n, x)
        result.instances_22 += 1
        if not report.passed:
          met = [lab.label(i) for i in classes_met(lab, n, x)]
          result.discrepancies.append(Discrepancy(spec, '2.2', n.order, str(x), f'classes met {met}'))
  except Exception as err:
    result.error = f'{type(err).__name__}: {err}'
  debug(f'sweep {spec}: {result.instances_a} instances, {len(result.discrepancies)} discrepancies')
  return result


def equivalence_sweep(specs: Iterable[GroupSpec | str], config: Optional[LabConfig] = None) -> SweepResult:
  "For every (N, x) and every class D other than that of x, compare the three conditions; also the single-class criterion"
  if config is None:
    config = LabConfig()
  return SweepResult(_map_groups(_sweep_group, [str(s) for s in specs], config))
