# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

"""
Permutations and permutation groups on the points {0, ..., degree-1}.

Composition uses the left-action convention throughout the package:
`(a * b)(i) == a(b(i))`, i.e., the right-hand factor is applied first.

Groups are represented by a base and strong generating set, built with a
deterministic (stack-driven) variant of the Schreier-Sims algorithm using the
fixed base 0, 1, ..., degree-1. Trivial levels are never materialized.
"""

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from typing import Iterable, Iterator, Optional, Sequence

from ..util.config import DEFAULT_ELEMENT_CAP

__all__ = [
  'DegreeMismatch', 'ElementCapExceeded', 'NotNormalError',
  'Permutation', 'compose',
  'PermGroup', 'CosetActionImage',
  'build_group', 'elements', 'normal_closure', 'derived_subgroup', 'derived_series', 'is_solvable',
  'coset_action', 'centralizer_order', 'is_normal',
]


class DegreeMismatch(ValueError):
  pass

class ElementCapExceeded(RuntimeError):
  def __init__(self, order: int, cap: int):
    super().__init__(f'group order {order} exceeds the element cap of {cap}')
    self.order = order
    self.cap = cap

class NotNormalError(ValueError):
  pass


class Permutation:
  """
  Immutable permutation of {0, ..., degree-1}, stored as its tuple of images.
  Permutations are totally ordered by comparing image tuples lexicographically.
  """
  __slots__ = ('images', '_hash')

  images: tuple[int, ...]

  def __init__(self, images: Iterable[int], *, check: bool = True):
    images = tuple(images)
    if check:
      if not images:
        raise ValueError('permutation degree must be positive')
      if sorted(images) != list(range(len(images))):
        raise ValueError(f'not a permutation of 0..{len(images)-1}: {images!r}')
    self.images = images
    self._hash = hash(images)

  @classmethod
  def identity(cls, degree: int) -> 'Permutation':
    return cls(range(degree))

  @classmethod
  def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> 'Permutation':
    "Product of disjoint cycles, e.g. `Permutation.from_cycles(4, (0, 1), (2, 3))`"
    images = list(range(degree))
    seen = set()
    for cycle in cycles:
      if seen.intersection(cycle):
        raise ValueError('cycles must be disjoint')
      seen.update(cycle)
      for i, j in zip(cycle, cycle[1:]):
        images[i] = j
      if cycle:
        images[cycle[-1]] = cycle[0]
    return cls(images)

  @property
  def degree(self) -> int:
    return len(self.images)

  def __call__(self, point: int) -> int:
    return self.images[point]

  def __mul__(self, other: 'Permutation') -> 'Permutation':
    if not isinstance(other, Permutation):
      return NotImplemented
    if len(other.images) != len(self.images):
      raise DegreeMismatch(f'cannot compose permutations of degree {self.degree} and {other.degree}')
    return Permutation(map(self.images.__getitem__, other.images), check=False)

  def inverse(self) -> 'Permutation':
    inv = [0] * len(self.images)
    for i, j in enumerate(self.images):
      inv[j] = i
    return Permutation(inv, check=False)

  __invert__ = inverse

  def __pow__(self, k: int) -> 'Permutation':
    base = self if k >= 0 else self.inverse()
    k = abs(k)
    result = Permutation.identity(self.degree)
    while k:
      if k & 1:
        result = result * base
      base = base * base
      k >>= 1
    return result

  def conjugate(self, g: 'Permutation') -> 'Permutation':
    "Return g * self * g^-1"
    return g * self * g.inverse()

  def is_identity(self) -> bool:
    return all(i == j for i, j in enumerate(self.images))

  def first_moved(self) -> Optional[int]:
    for i, j in enumerate(self.images):
      if i != j:
        return i
    return None

  def cycles(self) -> list[tuple[int, ...]]:
    "Nontrivial cycles, each starting at its smallest point"
    seen = set()
    out = []
    for i in range(len(self.images)):
      if i in seen or self.images[i] == i:
        continue
      cycle = [i]
      j = self.images[i]
      while j != i:
        seen.add(j)
        cycle.append(j)
        j = self.images[j]
      out.append(tuple(cycle))
    return out

  def order(self) -> int:
    return math.lcm(*(len(cyc) for cyc in self.cycles())) if not self.is_identity() else 1

  def commutes_with(self, other: 'Permutation') -> bool:
    return self * other == other * self

  def __eq__(self, other: object) -> bool:
    if not isinstance(other, Permutation):
      return NotImplemented
    return self.images == other.images

  def __lt__(self, other: 'Permutation') -> bool:
    return self.images < other.images

  def __hash__(self) -> int:
    return self._hash

  def __str__(self) -> str:
    cycles = self.cycles()
    if not cycles:
      return '()'
    return ''.join('(' + ' '.join(map(str, cyc)) + ')' for cyc in cycles)

  def __repr__(self) -> str:
    return f'Permutation({self.images!r})'


def compose(a: Permutation, b: Permutation) -> Permutation:
  "Composition `a * b`, applying b first (left-action convention)"
  return a * b


############################################################################
# Schreier-Sims

@dataclass(eq=False)
class _Level:
  point: int
  generators: list[Permutation] = field(default_factory=list)
  transversal: dict[int, Permutation] = field(default_factory=dict)  # gamma -> u with u(point) == gamma
  _inverses: dict[int, Permutation] = field(default_factory=dict)

  def inverse_rep(self, gamma: int) -> Optional[Permutation]:
    u_inv = self._inverses.get(gamma)
    if u_inv is None:
      u = self.transversal.get(gamma)
      if u is None:
        return None
      u_inv = self._inverses[gamma] = u.inverse()
    return u_inv


class _StabChain:
  """
  Stabilizer chain for the base 0, 1, ..., degree-1; level k is created only
  once a strong generator is assigned to it.
  """
  def __init__(self, degree: int):
    self.degree = degree
    self.levels: dict[int, _Level] = {}

  def sift(self, g: Permutation) -> Permutation:
    "Strip g through the chain; returns the residue (identity iff g is a member)"
    while True:
      b = g.first_moved()
      if b is None:
        return g
      level = self.levels.get(b)
      if level is None:
        return g
      u_inv = level.inverse_rep(g(b))
      if u_inv is None:
        return g
      g = u_inv * g

  def _level(self, k: int) -> _Level:
    level = self.levels.get(k)
    if level is None:
      ident = Permutation.identity(self.degree)
      level = self.levels[k] = _Level(k, transversal={k: ident})
    return level

  def add(self, g: Permutation) -> bool:
    "Extend the group by g; returns False if g was already a member"
    if self.sift(g).is_identity():
      return False
    stack: list[tuple[bool, int, Permutation]] = [(True, 0, g)]  # (is_add, level, perm)
    while stack:
      is_add, k, pi = stack.pop()
      if is_add:
        if k >= self.degree or self.sift(pi).is_identity():
          continue
        level = self._level(k)
        level.generators.append(pi)
        for sigma in list(level.transversal.values()):
          stack.append((False, k, pi * sigma))
      else:
        level = self._level(k)
        j = pi(k)
        u_inv = level.inverse_rep(j)
        if u_inv is None:
          level.transversal[j] = pi
          for tau in level.generators:
            stack.append((False, k, tau * pi))
        else:
          residue = u_inv * pi
          if not residue.is_identity():
            stack.append((True, k + 1, residue))
    return True

  def order(self) -> int:
    return math.prod(len(level.transversal) for level in self.levels.values())

  def base(self) -> list[int]:
    return sorted(k for k, level in self.levels.items() if len(level.transversal) > 1)

  def strong_generators(self) -> list[Permutation]:
    out = []
    for k in sorted(self.levels):
      out.extend(self.levels[k].generators)
    return out


############################################################################
# Groups

class PermGroup:
  """
  Permutation group given by generators. Order and membership come from the
  stabilizer chain; elements are enumerated lazily (breadth-first over the
  sorted generators, so the enumeration order is deterministic).
  """
  def __init__(
    self,
    generators: Iterable[Permutation],
    *,
    degree: Optional[int] = None,
    name: Optional[str] = None,
  ):
    gens = list(generators)
    if degree is None:
      if not gens:
        raise ValueError('a group without generators needs an explicit degree')
      degree = gens[0].degree
    for g in gens:
      if g.degree != degree:
        raise DegreeMismatch(f'generator {g} has degree {g.degree}, expected {degree}')
    self.degree = degree
    self.name = name
    self.generators: tuple[Permutation, ...] = tuple(sorted({g for g in gens if not g.is_identity()}))
    self._chain = _StabChain(degree)
    for g in self.generators:
      self._chain.add(g)
    self._elements: Optional[tuple[Permutation, ...]] = None

  @classmethod
  def _from_chain(cls, generators: Iterable[Permutation], chain: _StabChain, name: Optional[str] = None) -> 'PermGroup':
    grp = cls.__new__(cls)
    grp.degree = chain.degree
    grp.name = name
    grp.generators = tuple(sorted({g for g in generators if not g.is_identity()}))
    grp._chain = chain
    grp._elements = None
    return grp

  @cached_property
  def order(self) -> int:
    return self._chain.order()

  @property
  def base(self) -> list[int]:
    return self._chain.base()

  @property
  def strong_generators(self) -> list[Permutation]:
    return self._chain.strong_generators()

  @property
  def transversal_sizes(self) -> list[int]:
    return [len(self._chain.levels[k].transversal) for k in self.base]

  @cached_property
  def identity(self) -> Permutation:
    return Permutation.identity(self.degree)

  def __contains__(self, x: object) -> bool:
    if not isinstance(x, Permutation) or x.degree != self.degree:
      return False
    return self._chain.sift(x).is_identity()

  def contains(self, x: Permutation) -> bool:
    return x in self

  def elements(self, cap: int = DEFAULT_ELEMENT_CAP) -> tuple[Permutation, ...]:
    if self._elements is None:
      if self.order > cap:
        raise ElementCapExceeded(self.order, cap)
      seen = {self.identity}
      out = [self.identity]
      queue = deque(out)
      while queue:
        g = queue.popleft()
        for s in self.generators:
          h = g * s
          if h not in seen:
            seen.add(h)
            out.append(h)
            queue.append(h)
      self._elements = tuple(out)
    return self._elements

  def __iter__(self) -> Iterator[Permutation]:
    return iter(self.elements())

  def is_subgroup_of(self, other: 'PermGroup') -> bool:
    return all(g in other for g in self.generators)

  def __repr__(self) -> str:
    label = self.name or f'<{len(self.generators)} generators>'
    return f'PermGroup({label}, degree={self.degree}, order={self.order})'


def build_group(gens: Sequence[Permutation], *, name: Optional[str] = None) -> PermGroup:
  if not gens:
    raise ValueError('at least one generator is required')
  return PermGroup(gens, name=name)

def elements(g: PermGroup, cap: int = DEFAULT_ELEMENT_CAP) -> tuple[Permutation, ...]:
  return g.elements(cap)


def normal_closure(g: PermGroup, seed: Iterable[Permutation], *, name: Optional[str] = None) -> PermGroup:
  "Smallest normal subgroup of g containing every element of seed"
  chain = _StabChain(g.degree)
  gens: list[Permutation] = []
  for s in seed:
    if s.degree != g.degree:
      raise DegreeMismatch(f'seed element {s} has degree {s.degree}, expected {g.degree}')
    if chain.add(s):
      gens.append(s)
  i = 0
  while i < len(gens):
    t = gens[i]
    i += 1
    for s in g.generators:
      conj = t.conjugate(s)
      if chain.add(conj):
        gens.append(conj)
  return PermGroup._from_chain(gens, chain, name=name)

def is_normal(g: PermGroup, n: PermGroup) -> bool:
  "True iff n is a subgroup of g closed under conjugation by the generators of g"
  if n.degree != g.degree or not n.is_subgroup_of(g):
    return False
  return all(t.conjugate(s) in n for s in g.generators for t in n.generators)

def derived_subgroup(g: PermGroup) -> PermGroup:
  gens = g.generators
  commutators = [a.inverse() * b.inverse() * a * b for i, a in enumerate(gens) for b in gens[i+1:]]
  return normal_closure(g, commutators)

def derived_series(g: PermGroup) -> list[PermGroup]:
  "G, G', G'', ... up to the first term equal to its own derived subgroup"
  series = [g]
  while series[-1].order > 1:
    h = derived_subgroup(series[-1])
    if h.order == series[-1].order:
      break
    series.append(h)
  return series

def is_solvable(g: PermGroup) -> bool:
  return derived_series(g)[-1].order == 1


@dataclass(frozen=True, eq=False)
class CosetActionImage:
  """
  Action of a group on the cosets of a normal subgroup, by left multiplication.
  Coset 0 is the subgroup itself; the other cosets are numbered in order of
  first appearance in the group's element enumeration.
  """
  group: PermGroup
  normal: PermGroup
  coset_of: dict[Permutation, int]
  section: tuple[Permutation, ...]  # coset index -> representative
  generator_images: tuple[Permutation, ...]

  @property
  def index(self) -> int:
    return len(self.section)

  def image(self, x: Permutation) -> Permutation:
    "The permutation of coset indices induced by x"
    return Permutation((self.coset_of[x * r] for r in self.section), check=False)

  @cached_property
  def quotient(self) -> PermGroup:
    return PermGroup(self.generator_images, degree=self.index)

  def conjugacy_orbit(self, coset: int) -> frozenset[int]:
    "Cosets conjugate to the given one in the quotient group"
    orbit = {coset}
    queue = [coset]
    while queue:
      i = queue.pop()
      for s in self.group.generators:
        j = self.coset_of[self.section[i].conjugate(s)]
        if j not in orbit:
          orbit.add(j)
          queue.append(j)
    return frozenset(orbit)

  def centralizer_order(self, coset: int) -> int:
    "|C_{G/N}(Nx)| for the coset Nx with the given index"
    return self.index // len(self.conjugacy_orbit(coset))


def coset_action(g: PermGroup, n: PermGroup, cap: int = DEFAULT_ELEMENT_CAP) -> CosetActionImage:
  if not is_normal(g, n):
    raise NotNormalError(f'{n!r} is not a normal subgroup of {g!r}')
  n_elements = n.elements(cap)
  coset_of: dict[Permutation, int] = {}
  section: list[Permutation] = []
  for x in g.elements(cap):
    if x in coset_of:
      continue
    idx = len(section)
    section.append(x)
    for m in n_elements:
      coset_of[m * x] = idx
  gen_images = tuple(
    Permutation((coset_of[s * r] for r in section), check=False)
    for s in g.generators
  )
  return CosetActionImage(g, n, coset_of, tuple(section), gen_images)


def centralizer_order(g: PermGroup, x: Permutation, cap: int = DEFAULT_ELEMENT_CAP) -> int:
  if x not in g:
    raise ValueError(f'{x} is not an element of {g!r}')
  return sum(1 for y in g.elements(cap) if x.commutes_with(y))
