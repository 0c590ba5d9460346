# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

"""
Lookup recognition of non-abelian simple groups of order at most 60 000, by
order and number of conjugacy classes. This is a table lookup, not a proof of
isomorphism; orders shared by two groups are resolved by class count, and
anything the table cannot resolve is reported as unrecognized.
"""

from dataclasses import dataclass

from typing import Any, Optional

__all__ = ['LieDescription', 'SimpleGroup', 'Recognition', 'SIMPLE_GROUPS', 'MAX_RECOGNIZED_ORDER', 'recognize']


MAX_RECOGNIZED_ORDER = 60_000


@dataclass(frozen=True)
class LieDescription:
  name: str
  characteristic: int
  steinberg_degree: int


@dataclass(frozen=True)
class SimpleGroup:
  name: str
  order: int
  class_count: int
  lie: tuple[LieDescription, ...] = ()
  note: str = ''

  @property
  def is_lie_type(self) -> bool:
    return bool(self.lie)

  def odd_characteristic(self) -> Optional[LieDescription]:
    "First description as a group of Lie type in odd characteristic, if any"
    for desc in self.lie:
      if desc.characteristic % 2:
        return desc
    return None


def _psl2(q: int, p: int, *aliases: LieDescription) -> SimpleGroup:
  order = q * (q * q - 1) // (1 if p == 2 else 2)
  classes = q + 1 if p == 2 else (q + 5) // 2
  return SimpleGroup(f'PSL(2,{q})', order, classes, (LieDescription(f'PSL(2,{q})', p, q), *aliases))


SIMPLE_GROUPS: tuple[SimpleGroup, ...] = (
  SimpleGroup('Alt(5)', 60, 5, (LieDescription('PSL(2,4)', 2, 4), LieDescription('PSL(2,5)', 5, 5))),
  _psl2(7, 7, LieDescription('PSL(3,2)', 2, 8)),
  _psl2(9, 3),
  _psl2(8, 2),
  _psl2(11, 11),
  _psl2(13, 13),
  _psl2(17, 17),
  SimpleGroup('Alt(7)', 2520, 9, note='alternating'),
  _psl2(19, 19),
  _psl2(16, 2),
  SimpleGroup('PSL(3,3)', 5616, 12, (LieDescription('PSL(3,3)', 3, 27),)),
  SimpleGroup('PSU(3,3)', 6048, 14, (LieDescription('PSU(3,3)', 3, 27),)),
  _psl2(23, 23),
  _psl2(25, 5),
  SimpleGroup('M11', 7920, 10, note='sporadic'),
  _psl2(27, 3),
  _psl2(29, 29),
  _psl2(31, 31),
  SimpleGroup('Alt(8)', 20160, 14, (LieDescription('PSL(4,2)', 2, 64),)),
  SimpleGroup('PSL(3,4)', 20160, 10, (LieDescription('PSL(3,4)', 2, 64),)),
  _psl2(37, 37),
  SimpleGroup('PSp(4,3)', 25920, 20, (LieDescription('PSp(4,3)', 3, 81), LieDescription('PSU(4,2)', 2, 64))),
  SimpleGroup('Sz(8)', 29120, 11, (LieDescription('Sz(8)', 2, 64),)),
  _psl2(32, 2),
  _psl2(41, 41),
  _psl2(43, 43),
  _psl2(47, 47),
  _psl2(49, 7),
)

_ALIASES = {'PSL(2,9)': 'Alt(6)', 'PSL(2,7)': 'PSL(3,2)'}


@dataclass(frozen=True)
class Recognition:
  """
  Outcome of a lookup. `group` is None when unrecognized; `ambiguous` records
  that the order alone matched more than one table entry.
  """
  order: int
  class_count: int
  group: Optional[SimpleGroup]
  power: int = 1  # the factor is group^power
  ambiguous: bool = False

  @property
  def recognized(self) -> bool:
    return self.group is not None

  @property
  def name(self) -> str:
    if self.group is None:
      return 'unrecognized'
    base = self.group.name
    if base in _ALIASES:
      base = f'{base} = {_ALIASES[base]}'
    return base if self.power == 1 else f'({base})^{self.power}'

  @property
  def is_lie_type(self) -> bool:
    return self.group is not None and self.group.is_lie_type

  @property
  def odd_lie(self) -> Optional[LieDescription]:
    return self.group.odd_characteristic() if self.group is not None else None

  @property
  def characteristic(self) -> Optional[int]:
    if self.group is None or not self.group.lie:
      return None
    odd = self.odd_lie
    return odd.characteristic if odd is not None else self.group.lie[0].characteristic

  def to_dict(self) -> dict[str, Any]:
    odd = self.odd_lie
    return {
      'name': self.name,
      'recognized': self.recognized,
      'ambiguous': self.ambiguous,
      'lie_type': self.is_lie_type,
      'characteristic': self.characteristic,
      'odd_characteristic': odd is not None,
      'steinberg_degree': odd.steinberg_degree if odd is not None else None,
    }


def _integer_root(n: int, k: int) -> Optional[int]:
  r = round(n ** (1 / k))
  for cand in (r - 1, r, r + 1):
    if cand > 0 and cand ** k == n:
      return cand
  return None


def recognize(order: int, class_count: int) -> Recognition:
  """
  Recognize a characteristically simple factor S^k of the given order and
  class count (a direct power has class count c^k when S has c classes).
  """
  for power in range(1, 8):
    s_order = _integer_root(order, power)
    s_classes = _integer_root(class_count, power)
    if s_order is None or s_order > MAX_RECOGNIZED_ORDER:
      continue
    matches = [s for s in SIMPLE_GROUPS if s.order == s_order]
    if not matches:
      continue
    ambiguous = len(matches) > 1
    resolved = [s for s in matches if s.class_count == s_classes]
    if len(resolved) == 1:
      return Recognition(order, class_count, resolved[0], power, ambiguous)
    return Recognition(order, class_count, None, power, ambiguous)
  return Recognition(order, class_count, None)
