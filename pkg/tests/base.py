# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

import os
import unittest
from contextlib import contextmanager

from typing import Any, ContextManager, Iterable, Optional, Sequence, overload

from coset.char.cyclotomic import Cyclotomic, as_cyclotomic
from coset.char.tablefile import TableFile, load_table
from coset.lab.context import GroupLab
from coset.lab.records import TheoremReport
from coset.util.config import LabConfig

__all__ = ['LabTestCase', 'DATA_DIR', 'lab_for']


DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')

_LABS: dict[str, GroupLab] = {}

def lab_for(spec: str) -> GroupLab:
  "Shared per-process lab, so classes and tables are computed once per test run"
  lab = _LABS.get(spec)
  if lab is None:
    lab = _LABS[spec] = GroupLab.from_spec(spec, LabConfig())
  return lab


class LabTestCase(unittest.TestCase):

  def lab(self, spec: str) -> GroupLab:
    return lab_for(spec)

  def assertExactEqual(self, first: Any, second: Any, msg: Optional[str] = None):  # noqa: N802
    "Exact equality of cyclotomic values (ints and Fractions are promoted)"
    a, b = as_cyclotomic(first), as_cyclotomic(second)
    if a is NotImplemented or b is NotImplemented:
      raise self.failureException(f'{first!r} and {second!r} are not exact values')
    if a != b:
      raise self.failureException(msg or f'{a} != {b}')

  def assertRowEqual(self, row: Sequence[Cyclotomic], expected: Sequence[Any], msg: Optional[str] = None):  # noqa: N802
    if len(row) != len(expected):
      raise self.failureException(f'row lengths differ ({len(row)} vs {len(expected)})')
    for i, (a, b) in enumerate(zip(row, expected)):
      if as_cyclotomic(b) != a:
        raise self.failureException(msg or f'values at class {i} differ: {a} != {as_cyclotomic(b)}')

  def assertPassed(self, report: TheoremReport, msg: Optional[str] = None):  # noqa: N802
    if not report.passed:
      failed = [(c.name, c.witness) for c in report.conditions if not c.passed]
      raise self.failureException(msg or f'theorem {report.theorem} ({report.status}): failed {failed}')

  def assertFailed(self, report: TheoremReport, names: Iterable[str] = (), msg: Optional[str] = None):  # noqa: N802
    if report.passed:
      raise self.failureException(msg or f'theorem {report.theorem} unexpectedly passed')
    for name in names:
      if report.condition(name).passed:
        raise self.failureException(msg or f'condition {name} unexpectedly passed')

  def loadTestData(self, name: str) -> TableFile:  # noqa: N802
    "A golden table from tests/data/golden, by group spec (':' written as '_')"
    filename = os.path.join(DATA_DIR, 'golden', name.replace(':', '_') + '.tbl')
    return load_table(filename)

  @contextmanager
  def randomSeed(self, seed: int):  # noqa: N802
    import random
    state = random.getstate()
    random.seed(seed)
    try:
      yield
    finally:
      random.setstate(state)

  @overload
  def assertUnmodified[T](self, arg: T, /, *, deep: bool = False) -> ContextManager[T]: ...
  @overload
  def assertUnmodified[*Ts](self, *args: *Ts, deep: bool = False) -> ContextManager[tuple[*Ts]]: ...

  @contextmanager
  def assertUnmodified(self, *args, deep = False):  # noqa: N802
    if not args:
      raise TypeError("assertUnmodified() requires at least one argument")
    import copy
    copy_fn = copy.deepcopy if deep else copy.copy
    arg_copies = [copy_fn(a) for a in args]
    if len(args) == 1:
      yield args[0]
    else:
      yield args
    for a, a_copy in zip(args, arg_copies):
      self.assertEqual(a, a_copy, msg=f"argument modified, from {a_copy!r} to {a!r}")
