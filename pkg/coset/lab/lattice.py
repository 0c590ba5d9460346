# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

"""
Normal subgroups (as intersections of character kernels) and chief series.
"""

from dataclasses import dataclass
from itertools import combinations

from typing import Any, Optional

from ..group.classes import conjugacy_classes
from ..group.perm import PermGroup, coset_action, normal_closure
from ..util.common import debug
from .context import GroupLab, NormalSubgroup
from .simple import Recognition, recognize

__all__ = [
  'normal_subgroups', 'normal_subgroups_bruteforce',
  'ChiefFactor', 'chief_series_through', 'is_simple',
]


def _subgroup_from_classes(lab: GroupLab, classes: frozenset[int]) -> NormalSubgroup:
  cd = lab.classes
  group = normal_closure(lab.group, [cd.reps[i] for i in sorted(classes)])
  if group.order != sum(cd.sizes[i] for i in classes):
    raise AssertionError(f'classes {sorted(classes)} do not form a subgroup')
  return NormalSubgroup(frozenset(classes), group)

def _sort_key(n: NormalSubgroup) -> tuple:
  return (n.order, sorted(n.classes))


def normal_subgroups(lab: GroupLab) -> list[NormalSubgroup]:
  "All normal subgroups, sorted by (order, classes); the trivial subgroup first and G last"
  t = lab.table
  everything = frozenset(range(len(lab.classes)))
  found = {everything}
  found.update(t.kernel_of(row) for row in range(len(t)))
  while True:
    new = {a & b for a, b in combinations(found, 2)} - found
    if not new:
      break
    found |= new
  out = sorted((_subgroup_from_classes(lab, c) for c in found), key=_sort_key)
  debug(f'{lab.name}: normal subgroup orders {[n.order for n in out]}')
  return out


def normal_subgroups_bruteforce(lab: GroupLab) -> list[frozenset[int]]:
  "Class sets of all normal subgroups, by closing up one class at a time from the trivial subgroup"
  cd = lab.classes
  start = frozenset({0})
  found = {start}
  queue = [start]
  while queue:
    s = queue.pop()
    for c in range(len(cd)):
      if c in s:
        continue
      closure = normal_closure(lab.group, [cd.reps[i] for i in sorted(s | {c})])
      classes = cd.classes_in(closure)
      if classes not in found:
        found.add(classes)
        queue.append(classes)
  return sorted(found, key=lambda s: (sum(cd.sizes[i] for i in s), sorted(s)))


############################################################################
# Chief series

def _is_abelian_over(upper: PermGroup, lower: PermGroup) -> bool:
  gens = upper.generators
  return all(
    a.inverse() * b.inverse() * a * b in lower
    for i, a in enumerate(gens) for b in gens[i + 1:]
  )


def is_simple(q: PermGroup, cap: int) -> bool:
  "True iff q is nontrivial and every nonidentity class generates q as a normal subgroup"
  if q.order == 1:
    return False
  cd = conjugacy_classes(q, cap)
  return all(normal_closure(q, [rep]).order == q.order for rep in cd.reps[1:])


@dataclass
class ChiefFactor:
  upper: NormalSubgroup
  lower: NormalSubgroup
  abelian: bool
  simple: Optional[bool] = None
  class_count: Optional[int] = None
  recognition: Optional[Recognition] = None

  @property
  def order(self) -> int:
    return self.upper.order // self.lower.order

  def to_dict(self) -> dict[str, Any]:
    return {
      'upper_order': self.upper.order,
      'lower_order': self.lower.order,
      'order': self.order,
      'abelian': self.abelian,
      'simple': self.simple,
      'recognition': self.recognition.to_dict() if self.recognition is not None else None,
    }


def _factor(lab: GroupLab, upper: NormalSubgroup, lower: NormalSubgroup) -> ChiefFactor:
  if _is_abelian_over(upper.group, lower.group):
    return ChiefFactor(upper, lower, abelian=True)
  cap = lab.config.element_cap
  if lower.order == 1:
    q = upper.group
  else:
    q = coset_action(upper.group, lower.group, cap).quotient
  class_count = len(conjugacy_classes(q, cap))
  factor = ChiefFactor(upper, lower, abelian=False, simple=is_simple(q, cap), class_count=class_count)
  factor.recognition = recognize(q.order, class_count)
  debug(f'{lab.name}: chief factor of order {factor.order} recognized as {factor.recognition.name}')
  return factor


def chief_series_through(lab: GroupLab, n: NormalSubgroup) -> list[ChiefFactor]:
  """
  Factors of a chief series 1 = N_0 < ... < N_k = N < ... < G, listed bottom-up.
  Each step goes to a normal subgroup of smallest order properly containing
  the previous one, first inside N and then inside G.
  """
  subgroups = lab.normal_subgroups
  factors = []
  current = subgroups[0]
  for target in (n, subgroups[-1]):
    while current.classes != target.classes:
      above = [s for s in subgroups if current.classes < s.classes <= target.classes]
      nxt = min(above, key=_sort_key)
      factors.append(_factor(lab, nxt, current))
      current = nxt
  return factors
