# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

"""
Named group constructors. Every group is emitted as explicit permutation
generators; matrices and field elements only appear while building them.

Spec string grammar::

  spec   := name (':' int)*  |  'direct:' factor (',' factor)+
  factor := '(' spec ')'

e.g. ``cyclic:3``, ``sl:2:3``, ``pgammal:2:27``, ``direct:(cyclic:2),(alt:4)``.
"""

import math
import re
from dataclasses import dataclass
from itertools import product

from sympy import factorint

from typing import Callable, Iterable, Optional

from .fields import GF, finite_field
from .perm import Permutation, PermGroup

__all__ = [
  'GroupSpecError', 'GroupSpec', 'parse_spec', 'make', 'spec_order', 'catalog_sweep_list',
  'FAMILIES',
]


class GroupSpecError(ValueError):
  pass


@dataclass(frozen=True)
class GroupSpec:
  name: str
  params: tuple[int, ...] = ()
  factors: tuple['GroupSpec', ...] = ()

  def __str__(self) -> str:
    if self.name == 'direct':
      return 'direct:' + ','.join(f'({f})' for f in self.factors)
    return ':'.join([self.name, *map(str, self.params)])


_NAME_RE = re.compile(r'[a-z][a-z0-9]*')

def _split_factors(body: str, text: str) -> list[str]:
  parts = []
  depth = 0
  start = None
  for i, ch in enumerate(body):
    if ch == '(':
      if depth == 0:
        start = i + 1
      depth += 1
    elif ch == ')':
      depth -= 1
      if depth < 0:
        raise GroupSpecError(f'unbalanced parentheses in {text!r}')
      if depth == 0:
        parts.append(body[start:i])
    elif depth == 0 and ch != ',':
      raise GroupSpecError(f'direct product factors must be parenthesized in {text!r}')
  if depth != 0:
    raise GroupSpecError(f'unbalanced parentheses in {text!r}')
  return parts

def parse_spec(text: str) -> GroupSpec:
  text = text.strip()
  if text.startswith('direct:'):
    parts = _split_factors(text[len('direct:'):], text)
    if len(parts) < 2:
      raise GroupSpecError(f'direct product needs at least two factors: {text!r}')
    spec = GroupSpec('direct', factors=tuple(parse_spec(p) for p in parts))
  else:
    name, *params = text.split(':')
    if not _NAME_RE.fullmatch(name):
      raise GroupSpecError(f'bad group name in {text!r}')
    try:
      spec = GroupSpec(name, tuple(int(p) for p in params))
    except ValueError:
      raise GroupSpecError(f'group parameters must be integers: {text!r}') from None
  _check_params(spec)
  return spec


############################################################################
# Constructors

def _cyclic(n: int) -> PermGroup:
  if n == 1:
    return PermGroup([], degree=1)
  return PermGroup([Permutation.from_cycles(n, tuple(range(n)))])

def _sym(n: int) -> PermGroup:
  if n == 1:
    return PermGroup([], degree=1)
  gens = [Permutation.from_cycles(n, (0, 1))]
  if n > 2:
    gens.append(Permutation.from_cycles(n, tuple(range(n))))
  return PermGroup(gens)

def _alt(n: int) -> PermGroup:
  if n < 3:
    return PermGroup([], degree=n)
  return PermGroup([Permutation.from_cycles(n, (0, 1, i)) for i in range(2, n)])

def _dihedral(n: int) -> PermGroup:
  rotation = Permutation.from_cycles(n, tuple(range(n)))
  reflection = Permutation([(-i) % n for i in range(n)])
  return PermGroup([rotation, reflection])


type Matrix = tuple[tuple[int, int], tuple[int, int]]

def _vectors(field: GF) -> list[tuple[int, int]]:
  "Nonzero vectors of F_q^2, ordered by (first, second) coordinate code"
  return [v for v in product(range(field.q), repeat=2) if v != (0, 0)]

def _matrix_perm(field: GF, m: Matrix, vectors: list[tuple[int, int]], index: dict[tuple[int, int], int]) -> Permutation:
  "Permutation of nonzero vectors induced by v -> m v (column vectors)"
  (a, b), (c, d) = m
  add, mul = field.add, field.mul
  return Permutation(
    index[(add(mul(a, x), mul(b, y)), add(mul(c, x), mul(d, y)))]
    for x, y in vectors
  )

def _special_linear(field: GF, mats: Iterable[Matrix]) -> PermGroup:
  vectors = _vectors(field)
  index = {v: i for i, v in enumerate(vectors)}
  return PermGroup([_matrix_perm(field, m, vectors, index) for m in mats])

def _sl2(q: int) -> PermGroup:
  field = finite_field(q)
  w = field.primitive
  mats = [((1, 1), (0, 1)), ((1, 0), (1, 1)), ((w, 0), (0, field.inv(w)))]
  return _special_linear(field, mats)

def _q8() -> PermGroup:
  # i = [[0,-1],[1,0]], j = [[1,1],[1,-1]] in SL(2,3); i^2 = j^2 = (ij)^2 = -1
  return _special_linear(finite_field(3), [((0, 2), (1, 0)), ((1, 1), (1, 2))])

def _affine(q: int, semilinear: bool) -> PermGroup:
  field = finite_field(q)
  w = field.primitive
  gens = [
    Permutation(field.add(x, 1) for x in field),
    Permutation(field.mul(w, x) for x in field),
  ]
  if semilinear and field.f > 1:
    gens.append(Permutation(field.frobenius(x) for x in field))
  return PermGroup(gens)


_INFINITY = 0  # projective point 0 is infinity; point 1 + a is the field element a

def _mobius_perm(field: GF, a: int, b: int, c: int, d: int) -> Permutation:
  "Permutation of the projective line induced by x -> (a x + b) / (c x + d)"
  def image(x: Optional[int]) -> Optional[int]:
    if x is None:
      return None if c == 0 else field.div(a, c)
    num = field.add(field.mul(a, x), b)
    den = field.add(field.mul(c, x), d)
    return None if den == 0 else field.div(num, den)
  points: list[Optional[int]] = [None, *field]
  return Permutation(
    _INFINITY if (y := image(x)) is None else 1 + y
    for x in points
  )

def _projective(q: int, kind: str) -> PermGroup:
  field = finite_field(q)
  w = field.primitive
  one, minus_one = 1, field.neg(1)
  scale = field.mul(w, w) if kind == 'psl' else w
  gens = [
    _mobius_perm(field, one, one, 0, one),        # x -> x + 1
    _mobius_perm(field, scale, 0, 0, one),        # x -> scale * x
    _mobius_perm(field, 0, minus_one, one, 0),    # x -> -1 / x
  ]
  if kind == 'pgammal' and field.f > 1:
    gens.append(Permutation([_INFINITY, *(1 + field.frobenius(x) for x in field)]))
  return PermGroup(gens)

def _direct(factors: list[PermGroup]) -> PermGroup:
  degree = sum(g.degree for g in factors)
  gens = []
  offset = 0
  for g in factors:
    for s in g.generators:
      images = list(range(degree))
      images[offset:offset + g.degree] = [offset + i for i in s.images]
      gens.append(Permutation(images))
    offset += g.degree
  return PermGroup(gens, degree=degree)


def _prime_power(q: int) -> tuple[int, int]:
  factors = factorint(q)
  if q < 2 or len(factors) != 1:
    raise GroupSpecError(f'{q} is not a prime power')
  (p, f), = factors.items()
  return int(p), int(f)


@dataclass(frozen=True)
class _Family:
  arity: int
  build: Callable[..., PermGroup]
  order: Callable[..., int]
  check: Callable[..., Optional[str]]

def _check_field(q: int) -> Optional[str]:
  try:
    finite_field(q)
  except ValueError as err:
    return str(err)
  return None

def _check_rank2(n: int, q: int) -> Optional[str]:
  if n != 2:
    return 'only dimension 2 is supported'
  return _check_field(q)

def _at_least(k: int) -> Callable[[int], Optional[str]]:
  return lambda n: None if n >= k else f'parameter must be at least {k}'

FAMILIES: dict[str, _Family] = {
  'cyclic': _Family(1, _cyclic, lambda n: n, _at_least(1)),
  'sym': _Family(1, _sym, math.factorial, _at_least(1)),
  'alt': _Family(1, _alt, lambda n: max(1, math.factorial(n) // 2), _at_least(1)),
  'dihedral': _Family(1, _dihedral, lambda n: 2 * n, _at_least(3)),
  'q8': _Family(0, _q8, lambda: 8, lambda: None),
  'sl': _Family(2, lambda n, q: _sl2(q), lambda n, q: q * (q * q - 1), _check_rank2),
  'agl1': _Family(1, lambda q: _affine(q, False), lambda q: q * (q - 1), _check_field),
  'agammal1': _Family(1, lambda q: _affine(q, True), lambda q: q * (q - 1) * _prime_power(q)[1], _check_field),
  'psl': _Family(2, lambda n, q: _projective(q, 'psl'), lambda n, q: q * (q * q - 1) // math.gcd(2, q - 1), _check_rank2),
  'pgl': _Family(2, lambda n, q: _projective(q, 'pgl'), lambda n, q: q * (q * q - 1), _check_rank2),
  'pgammal': _Family(
    2, lambda n, q: _projective(q, 'pgammal'), lambda n, q: q * (q * q - 1) * _prime_power(q)[1], _check_rank2,
  ),
}


def _check_params(spec: GroupSpec) -> None:
  if spec.name == 'direct':
    return  # factors were checked when parsed
  family = FAMILIES.get(spec.name)
  if family is None:
    raise GroupSpecError(f'unknown group family {spec.name!r}')
  if len(spec.params) != family.arity:
    raise GroupSpecError(f'{spec.name} takes {family.arity} parameter(s), got {len(spec.params)}')
  problem = family.check(*spec.params)
  if problem is not None:
    raise GroupSpecError(f'bad parameters for {spec}: {problem}')


def spec_order(spec: GroupSpec | str) -> int:
  "Documented order of the group named by spec (without building it)"
  if isinstance(spec, str):
    spec = parse_spec(spec)
  if spec.name == 'direct':
    return math.prod(spec_order(f) for f in spec.factors)
  return FAMILIES[spec.name].order(*spec.params)


def make(spec: GroupSpec | str) -> PermGroup:
  if isinstance(spec, str):
    spec = parse_spec(spec)
  else:
    _check_params(spec)
  if spec.name == 'direct':
    group = _direct([make(f) for f in spec.factors])
  else:
    group = FAMILIES[spec.name].build(*spec.params)
  group.name = str(spec)
  if group.order != spec_order(spec):
    raise AssertionError(f'{spec} has order {group.order}, expected {spec_order(spec)}')
  return group


_SWEEP_CANDIDATES = [
  *(f'cyclic:{n}' for n in range(1, 13)),
  *(f'dihedral:{n}' for n in range(3, 13)),
  *(f'sym:{n}' for n in range(3, 6)),
  'alt:4', 'alt:5', 'q8', 'sl:2:3', 'sl:2:5',
  'direct:(cyclic:2),(cyclic:2)',
  'direct:(cyclic:2),(cyclic:4)',
  'direct:(cyclic:2),(sym:3)',
  'direct:(cyclic:3),(sym:3)',
  'direct:(cyclic:2),(q8)',
  'direct:(cyclic:2),(alt:4)',
  'direct:(cyclic:2),(sym:4)',
  'direct:(cyclic:2),(alt:5)',
  'direct:(sym:3),(sym:3)',
  *(f'agl1:{q}' for q in (4, 5, 7, 8, 9)),
  *(f'agammal1:{q}' for q in (4, 8, 9)),
  *(f'psl:2:{q}' for q in (4, 5, 7, 8, 9, 11)),
  *(f'pgl:2:{q}' for q in (5, 7)),
  *(f'pgammal:2:{q}' for q in (4, 8, 9, 27)),
]

def catalog_sweep_list(max_order: int) -> list[GroupSpec]:
  "All sweep catalog specs of order <= max_order, sorted by (order, spec string)"
  specs = [parse_spec(s) for s in _SWEEP_CANDIDATES]
  specs = [s for s in specs if spec_order(s) <= max_order]
  return sorted(specs, key=lambda s: (spec_order(s), str(s)))
