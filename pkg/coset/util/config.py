# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

import os
from dataclasses import dataclass, asdict, replace

from typing import Any, Mapping, Optional

__all__ = [
  'DEFAULT_SEED', 'DEFAULT_ELEMENT_CAP', 'DEFAULT_RETRY_BUDGET',
  'LabConfig', 'parse_switch',
]


DEFAULT_SEED = 20240217
DEFAULT_ELEMENT_CAP = 100_000
DEFAULT_RETRY_BUDGET = 64


def parse_switch(value: str) -> bool:
  "Parse an on/off style switch value (as used by --parallel and PYCOSET_PARALLEL)"
  match value.strip().lower():
    case 'on' | '1' | 'yes' | 'true':
      return True
    case 'off' | '0' | 'no' | 'false':
      return False
    case _:
      raise ValueError(f'expected on or off, got {value!r}')


@dataclass(frozen=True)
class LabConfig:
  "Settings shared by every computation; recorded verbatim in reports"
  seed: int = DEFAULT_SEED
  element_cap: int = DEFAULT_ELEMENT_CAP
  parallel: bool = False
  retry_budget: int = DEFAULT_RETRY_BUDGET

  def __post_init__(self):
    if self.element_cap < 1:
      raise ValueError('element cap must be positive')
    if self.retry_budget < 1:
      raise ValueError('retry budget must be positive')

  @classmethod
  def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> 'LabConfig':
    """
    Defaults, overridden by PYCOSET_SEED, PYCOSET_ELEMENT_CAP and PYCOSET_PARALLEL
    when present. Command-line flags are applied afterwards via `with_overrides()`.
    """
    if environ is None:
      environ = os.environ
    kwargs: dict[str, Any] = {}
    try:
      if 'PYCOSET_SEED' in environ:
        kwargs['seed'] = int(environ['PYCOSET_SEED'])
      if 'PYCOSET_ELEMENT_CAP' in environ:
        kwargs['element_cap'] = int(environ['PYCOSET_ELEMENT_CAP'])
      if 'PYCOSET_PARALLEL' in environ:
        kwargs['parallel'] = parse_switch(environ['PYCOSET_PARALLEL'])
    except ValueError as err:
      raise ValueError(f'invalid environment setting: {err}') from None
    return cls(**kwargs)

  def with_overrides(self, **overrides: Any) -> 'LabConfig':
    "Return a copy with every non-None override applied"
    return replace(self, **{k: v for k, v in overrides.items() if v is not None})

  def to_dict(self) -> dict[str, Any]:
    return asdict(self)
