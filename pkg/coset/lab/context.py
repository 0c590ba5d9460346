# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

"""
Per-group cache shared by the theorem-lab operations: classes, character
table, normal subgroups, and the derived data of each normal subgroup.
"""

from dataclasses import dataclass
from functools import cached_property

from typing import Optional

from ..char.table import CharTable, character_table
from ..group.catalog import GroupSpec, make, parse_spec
from ..group.classes import ClassData, conjugacy_classes
from ..group.perm import CosetActionImage, NotNormalError, PermGroup, coset_action, is_normal
from ..util.config import LabConfig

__all__ = ['NormalSubgroup', 'GroupLab']


@dataclass(frozen=True, eq=False)
class NormalSubgroup:
  classes: frozenset[int]  # classes of the ambient group contained in it
  group: PermGroup

  @property
  def order(self) -> int:
    return self.group.order

  def __repr__(self) -> str:
    return f'NormalSubgroup(order={self.order}, classes={sorted(self.classes)})'


class GroupLab:
  "A group together with lazily computed classes, table and normal subgroups"

  def __init__(self, group: PermGroup, config: Optional[LabConfig] = None):
    self.group = group
    self.config = config if config is not None else LabConfig()
    self._sub_labs: dict[frozenset[int], GroupLab] = {}
    self._images: dict[frozenset[int], CosetActionImage] = {}

  @classmethod
  def from_spec(cls, spec: GroupSpec | str, config: Optional[LabConfig] = None) -> 'GroupLab':
    if isinstance(spec, str):
      spec = parse_spec(spec)
    return cls(make(spec), config)

  @property
  def name(self) -> str:
    return self.group.name or repr(self.group)

  @property
  def order(self) -> int:
    return self.group.order

  @cached_property
  def classes(self) -> ClassData:
    return conjugacy_classes(self.group, self.config.element_cap)

  @cached_property
  def table(self) -> CharTable:
    return character_table(self.group, self.classes, self.config)

  @cached_property
  def normal_subgroups(self) -> list[NormalSubgroup]:
    from .lattice import normal_subgroups
    return normal_subgroups(self)

  def label(self, i: int) -> str:
    return self.classes.labels[i]

  def resolve_normal(self, n: 'NormalSubgroup | PermGroup') -> NormalSubgroup:
    "Accept a subgroup given either way; the normality check is explicit"
    if isinstance(n, NormalSubgroup):
      return n
    if not is_normal(self.group, n):
      raise NotNormalError(f'{n!r} is not a normal subgroup of {self.name}')
    classes = self.classes.classes_in(n)
    if sum(self.classes.sizes[i] for i in classes) != n.order:
      raise AssertionError(f'classes inside {n!r} do not add up to its order')
    return NormalSubgroup(classes, n)

  def trivial_subgroup(self) -> NormalSubgroup:
    return self.normal_subgroups[0]

  def whole_group(self) -> NormalSubgroup:
    return self.normal_subgroups[-1]

  def subgroup_lab(self, n: NormalSubgroup) -> 'GroupLab':
    lab = self._sub_labs.get(n.classes)
    if lab is None:
      lab = self._sub_labs[n.classes] = GroupLab(n.group, self.config)
    return lab

  def coset_image(self, n: NormalSubgroup) -> CosetActionImage:
    image = self._images.get(n.classes)
    if image is None:
      image = self._images[n.classes] = coset_action(self.group, n.group, self.config.element_cap)
    return image

  def __repr__(self) -> str:
    return f'GroupLab({self.name})'

