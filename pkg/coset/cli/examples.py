# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

"""
The acceptance suite: worked instances of cosets in two classes, each checked
against its expected class sizes, element orders and extendible characters.
"""

from contextlib import nullcontext
from dataclasses import dataclass

from typing import Callable, Optional

from ..group.perm import is_solvable
from ..lab import theorems
from ..lab.context import GroupLab, NormalSubgroup
from ..lab.cosets import classify_coset
from ..lab.records import Identity, InTwoClasses, PreconditionError, TheoremReport, render_value
from ..util.config import LabConfig
from .report import ReportBlock

__all__ = ['Example', 'EXAMPLES', 'STRETCH_EXAMPLES', 'select_normal', 'select_class', 'run_example', 'run_examples']


_TRACED = ('verify_thmA', 'verify_thmB', 'verify_thmC', 'find_extending_characters')


def select_normal(lab: GroupLab, order: int) -> NormalSubgroup:
  matches = [n for n in lab.normal_subgroups if n.order == order]
  if len(matches) != 1:
    raise LookupError(f'{lab.name} has {len(matches)} normal subgroups of order {order}')
  return matches[0]

def select_class(lab: GroupLab, n: NormalSubgroup, order: int, size: Optional[int] = None) -> list[int]:
  "Classes outside n with the given element order (and class size), in index order"
  cd = lab.classes
  return [
    i for i in range(len(cd))
    if i not in n.classes and cd.orders[i] == order and (size is None or cd.sizes[i] == size)
  ]


@dataclass(frozen=True)
class Example:
  title: str
  spec: str
  normal_order: int
  x_order: int
  x_size: Optional[int]
  d_order: int
  sizes: tuple[int, int]  # |K|, |D|
  extender_degrees: tuple[int, ...]  # degrees of the extendible characters of N, trivial one included
  theorems: tuple[str, ...]  # expected to pass
  solvable: bool
  stretch: bool = False


EXAMPLES: tuple[Example, ...] = (
  Example('central involution over the Klein group in C2 x Alt(4)', 'direct:(cyclic:2),(alt:4)',
          normal_order=4, x_order=2, x_size=1, d_order=2, sizes=(1, 3),
          extender_degrees=(1,), theorems=('A',), solvable=True),
  Example('order-3 cosets of Q8 in SL(2,3)', 'sl:2:3',
          normal_order=8, x_order=3, x_size=4, d_order=6, sizes=(4, 4),
          extender_degrees=(1, 2), theorems=('A', 'B'), solvable=True),
  Example('order-3 cosets of AGL(1,8) in AGammaL(1,8)', 'agammal1:8',
          normal_order=56, x_order=3, x_size=28, d_order=6, sizes=(28, 28),
          extender_degrees=(1, 7), theorems=('A', 'B'), solvable=True),
  Example('order-4 coset of PSL(2,9) in PGammaL(2,9)', 'pgammal:2:9',
          normal_order=360, x_order=4, x_size=180, d_order=8, sizes=(180, 180),
          extender_degrees=(1, 9), theorems=('A', 'B', 'C'), solvable=False),
)

STRETCH_EXAMPLES: tuple[Example, ...] = (
  Example('order-6 cosets of PSL(2,27) in PGammaL(2,27)', 'pgammal:2:27',
          normal_order=9828, x_order=6, x_size=None, d_order=12, sizes=(0, 0),
          extender_degrees=(1, 27), theorems=('A', 'B', 'C'), solvable=False, stretch=True),
)


def _theorem(name: str) -> Callable[..., TheoremReport]:
  match name:
    case 'A':
      return theorems.verify_thmA
    case 'B':
      return lambda lab, n, x: theorems.verify_thmB(lab, n, x, corollary=True)
    case 'C':
      return theorems.verify_thmC
    case _:
      raise ValueError(f'unknown theorem {name!r}')


def _instances(lab: GroupLab, n: NormalSubgroup, ex: Example) -> list[int]:
  "Classes K for which the example claims Nx = K u D with D of the expected order"
  cd = lab.classes
  out = []
  for k in select_class(lab, n, ex.x_order, ex.x_size):
    analysis = classify_coset(lab, n, cd.reps[k])
    if isinstance(analysis.verdict, InTwoClasses) and cd.orders[analysis.verdict.d] == ex.d_order:
      out.append(k)
  return out


def run_example(lab: GroupLab, ex: Example, *, tracer=None) -> list[ReportBlock]:
  "One block per coset instance; expectations are recorded as checks next to the theorem reports"
  cd = lab.classes
  n = select_normal(lab, ex.normal_order)
  instances = _instances(lab, n, ex)
  expected_count = 2 if ex.stretch else len(select_class(lab, n, ex.x_order, ex.x_size))
  blocks = []
  header = ReportBlock(f'{ex.title}: instances', data={'spec': ex.spec, 'normal_order': n.order})
  header.checks.append(Identity('cosets in two classes with D of the expected order', len(instances), expected_count).to_dict())
  header.checks.append(Identity('N is solvable', is_solvable(n.group), ex.solvable).to_dict())
  degrees = sorted(lab.subgroup_lab(n).table.degrees[theta] for theta, _ in theorems.find_extending_characters(lab, n))
  header.checks.append(Identity('degrees of extendible characters of N', degrees, list(ex.extender_degrees)).to_dict())
  # classes of the same element order in the remaining cosets do not give two-class cosets
  image = lab.coset_image(n)
  covered = set()
  for k in instances:
    covered |= image.conjugacy_orbit(image.coset_of[cd.reps[k]])
  for k in ([] if ex.stretch else select_class(lab, n, ex.x_order)):
    if image.coset_of[cd.reps[k]] in covered:
      continue
    verdict = classify_coset(lab, n, cd.reps[k])
    header.checks.append(Identity(
      f'coset of {lab.label(k)} in two classes with D of order {ex.d_order}',
      isinstance(verdict.verdict, InTwoClasses) and cd.orders[verdict.verdict.d] == ex.d_order, False,
    ).to_dict())
  header.status = 'pass' if all(i['holds'] for i in header.checks) else 'fail'
  blocks.append(header)

  for k in instances:
    x = cd.reps[k]
    analysis = classify_coset(lab, n, x)
    d = analysis.verdict.d
    block = ReportBlock(f'{ex.title}: K = {lab.label(k)}, D = {lab.label(d)}', data=render_value({
      'spec': ex.spec, 'normal_order': n.order, 'x': str(x),
    }))
    block.cosets.append(analysis.to_dict())
    if ex.stretch:
      block.checks.append(Identity('|K| = |D|', cd.sizes[k], cd.sizes[d]).to_dict())
    else:
      block.checks.append(Identity('(|K|, |D|)', [cd.sizes[k], cd.sizes[d]], list(ex.sizes)).to_dict())
    block.checks.append(Identity('order of d', cd.orders[d], ex.d_order).to_dict())

    if 'B' not in ex.theorems:
      try:
        theorems.verify_thmB(lab, n, x)
      except PreconditionError:
        raised = True
      else:
        raised = False
      block.checks.append(Identity('no nontrivial character of N extends', raised, True).to_dict())

    ok = all(i['holds'] for i in block.checks)
    context = tracer.patched(vars(theorems), _TRACED) if tracer is not None else nullcontext()
    with context:
      if tracer is not None:
        tracer.reset()
      for name in ex.theorems:
        report = _theorem(name)(lab, n, x)
        block.theorems.append(report.to_dict())
        ok = ok and report.passed
    if not ok and tracer is not None:
      block.trace = tracer.get_output()
    block.status = 'pass' if ok else 'fail'
    blocks.append(block)
  return blocks


def run_examples(config: LabConfig, *, include_stretch: bool = False, tracer=None) -> list[ReportBlock]:
  blocks = []
  for ex in EXAMPLES + (STRETCH_EXAMPLES if include_stretch else ()):
    lab = GroupLab.from_spec(ex.spec, config)
    blocks.extend(run_example(lab, ex, tracer=tracer))
  return blocks
