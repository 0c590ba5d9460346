# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

"""
Verdict records produced by the theorem lab. Exact values are kept as
Cyclotomic objects and rendered in their canonical text form by `to_dict()`.
"""

from dataclasses import dataclass, field

from typing import Any, Literal, Optional

from ..char.cyclotomic import Cyclotomic

__all__ = [
  'PreconditionError',
  'Identity', 'Condition', 'TheoremReport', 'Status',
  'InSingleClass', 'InTwoClasses', 'Spread', 'Verdict', 'CosetAnalysis',
  'render_value',
]


class PreconditionError(ValueError):
  pass


def render_value(v: Any) -> Any:
  "JSON-friendly rendering of exact values (and containers of them)"
  if isinstance(v, Cyclotomic):
    return str(v)
  if isinstance(v, (list, tuple)):
    return [render_value(x) for x in v]
  if isinstance(v, (set, frozenset)):
    return sorted(render_value(x) for x in v)
  if isinstance(v, dict):
    return {str(k): render_value(x) for k, x in v.items()}
  if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
    return v
  return str(v)


@dataclass
class Identity:
  "Both sides of one exact identity"
  label: str
  lhs: Any
  rhs: Any

  @property
  def holds(self) -> bool:
    return self.lhs == self.rhs

  def to_dict(self) -> dict[str, Any]:
    return {
      'label': self.label,
      'lhs': render_value(self.lhs),
      'rhs': render_value(self.rhs),
      'holds': self.holds,
    }


@dataclass
class Condition:
  name: str
  passed: bool
  detail: str = ''
  witness: Optional[dict[str, Any]] = None
  identities: list[Identity] = field(default_factory=list)

  def __post_init__(self):
    if not self.passed and not self.witness:
      failed = [i for i in self.identities if not i.holds]
      if not failed:
        raise ValueError(f'failed condition {self.name!r} carries no witness')
      self.witness = {'identity': failed[0].label}

  @classmethod
  def from_identities(cls, name: str, identities: list[Identity], detail: str = '') -> 'Condition':
    "Condition that passes iff every identity holds; the first failing identity is the witness"
    failed = [i for i in identities if not i.holds]
    witness = None
    if failed:
      witness = {'identity': failed[0].label, 'lhs': render_value(failed[0].lhs), 'rhs': render_value(failed[0].rhs)}
    return cls(name, not failed, detail, witness, identities)

  def to_dict(self) -> dict[str, Any]:
    return {
      'name': self.name,
      'passed': self.passed,
      'detail': self.detail,
      'witness': render_value(self.witness),
      'identities': [i.to_dict() for i in self.identities],
    }


type Status = Literal['pass', 'fail', 'not-applicable']

@dataclass
class TheoremReport:
  theorem: str
  conditions: list[Condition] = field(default_factory=list)
  applicable: bool = True
  reason: str = ''
  data: dict[str, Any] = field(default_factory=dict)

  @property
  def passed(self) -> bool:
    return self.applicable and all(c.passed for c in self.conditions)

  @property
  def status(self) -> Status:
    if not self.applicable:
      return 'not-applicable'
    return 'pass' if self.passed else 'fail'

  def add(self, condition: Condition) -> Condition:
    self.conditions.append(condition)
    return condition

  def condition(self, name: str) -> Condition:
    for c in self.conditions:
      if c.name == name:
        return c
    raise KeyError(f'report for {self.theorem} has no condition {name!r}')

  def to_dict(self) -> dict[str, Any]:
    return {
      'theorem': self.theorem,
      'status': self.status,
      'reason': self.reason,
      'data': render_value(self.data),
      'conditions': [c.to_dict() for c in self.conditions],
    }


############################################################################
# Coset verdicts

@dataclass(frozen=True)
class InSingleClass:
  k: int

  @property
  def classes(self) -> tuple[int, ...]:
    return (self.k,)

@dataclass(frozen=True)
class InTwoClasses:
  k: int  # class of the representative x
  d: int

  @property
  def classes(self) -> tuple[int, ...]:
    return (self.k, self.d)

@dataclass(frozen=True)
class Spread:
  classes: tuple[int, ...]  # at least three, the class of x first

type Verdict = InSingleClass | InTwoClasses | Spread


def _verdict_name(v: Verdict) -> str:
  match v:
    case InSingleClass():
      return 'single-class'
    case InTwoClasses():
      return 'two-classes'
    case Spread():
      return 'spread'


@dataclass
class CosetAnalysis:
  group: str
  normal_classes: frozenset[int]
  normal_order: int
  x: Any  # Permutation
  x_class: int
  verdict: Verdict
  size_k: int
  size_d: Optional[int]
  centralizer_order: int  # |C_{G/N}(Nx)|
  labels: tuple[str, ...] = ()

  @property
  def kind(self) -> str:
    return _verdict_name(self.verdict)

  def _label(self, i: int) -> str:
    return self.labels[i] if self.labels else str(i)

  def to_dict(self) -> dict[str, Any]:
    return {
      'group': self.group,
      'normal_order': self.normal_order,
      'normal_classes': [self._label(i) for i in sorted(self.normal_classes)],
      'x': str(self.x),
      'x_class': self._label(self.x_class),
      'verdict': self.kind,
      'classes': [self._label(i) for i in self.verdict.classes],
      'size_k': self.size_k,
      'size_d': self.size_d,
      'centralizer_order': self.centralizer_order,
    }
