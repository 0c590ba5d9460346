# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

"""
Conjugacy classes, power maps and class-algebra structure constants.

Classes are sorted by (element order, class size, canonical representative),
where the canonical representative is the smallest element of the class in
the permutation total order. Class 0 is therefore always the identity class.
"""

import math
from dataclasses import dataclass
from functools import cached_property
from string import ascii_lowercase

import numpy as np

from ..util.common import debug
from ..util.config import DEFAULT_ELEMENT_CAP
from .perm import Permutation, PermGroup

__all__ = [
  'ClassData', 'StructureConstants',
  'conjugacy_classes', 'structure_constant', 'class_product_support',
]


def _letters(k: int) -> str:
  "0 -> 'a', 25 -> 'z', 26 -> 'ba', ..."
  out = ascii_lowercase[k % 26]
  k //= 26
  while k:
    out = ascii_lowercase[k % 26] + out
    k //= 26
  return out


@dataclass(frozen=True, eq=False)
class StructureConstants:
  """
  Structure constants of the class algebra: `a[i, j, k]` is the number of pairs
  (x, y) in C_i x C_j with x y equal to a fixed element of C_k, so that
  C_i^ C_j^ = sum_k a[i, j, k] C_k^.
  """
  a: np.ndarray

  def __call__(self, i: int, j: int, k: int) -> int:
    return int(self.a[i, j, k])

  def support(self, i: int, j: int) -> frozenset[int]:
    return frozenset(int(k) for k in np.flatnonzero(self.a[i, j]))


class ClassData:
  "Conjugacy classes of a group, with lookup tables and power maps"

  def __init__(self, group: PermGroup, classes: list[tuple[Permutation, ...]], cap: int):
    self.group = group
    self.cap = cap
    self.classes: tuple[tuple[Permutation, ...], ...] = tuple(classes)
    self.reps: tuple[Permutation, ...] = tuple(min(cls) for cls in classes)
    self.sizes: tuple[int, ...] = tuple(len(cls) for cls in classes)
    self.orders: tuple[int, ...] = tuple(rep.order() for rep in self.reps)
    self.class_of: dict[Permutation, int] = {
      x: i for i, cls in enumerate(classes) for x in cls
    }
    self.inverse_class: tuple[int, ...] = tuple(self.class_of[rep.inverse()] for rep in self.reps)
    self._powers: dict[tuple[int, int], int] = {}

  def __len__(self) -> int:
    return len(self.classes)

  @property
  def order(self) -> int:
    return self.group.order

  @cached_property
  def exponent(self) -> int:
    return math.lcm(*self.orders)

  @cached_property
  def labels(self) -> tuple[str, ...]:
    "Labels like '1a', '2a', '4b': element order plus a letter in class order"
    seen: dict[int, int] = {}
    out = []
    for o in self.orders:
      k = seen.get(o, 0)
      seen[o] = k + 1
      out.append(f'{o}{_letters(k)}')
    return tuple(out)

  def label_index(self, label: str) -> int:
    try:
      return self.labels.index(label)
    except ValueError:
      raise KeyError(f'no class labelled {label!r}') from None

  def centralizer_order(self, i: int) -> int:
    return self.order // self.sizes[i]

  def power_map(self, i: int, k: int) -> int:
    "Class of rep_i^k"
    k %= self.orders[i]
    key = (i, k)
    cls = self._powers.get(key)
    if cls is None:
      cls = self._powers[key] = self.class_of[self.reps[i] ** k]
    return cls

  def classes_in(self, subgroup: PermGroup) -> frozenset[int]:
    "Indices of the classes whose representative lies in subgroup (all of it, if normal)"
    return frozenset(i for i, rep in enumerate(self.reps) if rep in subgroup)

  @cached_property
  def structure_constants(self) -> StructureConstants:
    r = len(self.classes)
    a = np.zeros((r, r, r), dtype=np.int64)
    elements = self.group.elements(self.cap)
    class_of = self.class_of
    n = len(elements)
    inverses = [x.inverse() for x in elements]
    ci = np.fromiter((class_of[x] for x in elements), dtype=np.int64, count=n)
    for k, z in enumerate(self.reps):
      cj = np.fromiter((class_of[x_inv * z] for x_inv in inverses), dtype=np.int64, count=n)
      np.add.at(a[:, :, k], (ci, cj), 1)
    debug(f'structure constants for {self.group!r}: {r} classes')
    return StructureConstants(a)

  def __repr__(self) -> str:
    return f'ClassData({self.group!r}, classes={len(self.classes)})'


def conjugacy_classes(g: PermGroup, cap: int = DEFAULT_ELEMENT_CAP) -> ClassData:
  elements = g.elements(cap)
  assigned: set[Permutation] = set()
  gen_pairs = [(s, s.inverse()) for s in g.generators]
  classes: list[tuple[Permutation, ...]] = []
  for x in elements:
    if x in assigned:
      continue
    orbit = [x]
    assigned.add(x)
    i = 0
    while i < len(orbit):
      y = orbit[i]
      i += 1
      for s, s_inv in gen_pairs:
        z = s * y * s_inv
        if z not in assigned:
          assigned.add(z)
          orbit.append(z)
    classes.append(tuple(sorted(orbit)))
  classes.sort(key=lambda cls: (cls[0].order(), len(cls), cls[0].images))
  return ClassData(g, classes, cap)


def structure_constant(cd: ClassData, i: int, j: int, k: int) -> int:
  return cd.structure_constants(i, j, k)

def class_product_support(cd: ClassData, i: int, j: int) -> frozenset[int]:
  "Classes met by the set product C_i C_j"
  return cd.structure_constants.support(i, j)
