# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

"""
Exact irreducible character tables (Burnside-Dixon).

The class matrices M_i, with (M_i)_{jk} = a(i, j, k), act on the centre of the
group algebra; their common eigenvectors over F_p are the central characters
omega with omega_j = |C_j| chi(g_j) / chi(1). We split the whole space into
common eigenspaces using seeded random combinations of the M_i, recover the
degree of each character from its central character, and lift every value
chi(g) from F_p to Z[z_o] (o = order of g) by discrete Fourier inversion over
the power map: the multiplicity of z_o^j as an eigenvalue of g is
(1/o) sum_k chi(g^k) z^(-jk).

p is the smallest prime p = 1 (mod e), e = exp(G), with p > 2 sqrt(|G|) and p
not dividing |G|. The first bound makes the degree recoverable from its square.
"""

import math
from fractions import Fraction
from functools import cached_property

import numpy as np
from sympy import divisors, isprime, primitive_root

from typing import Optional, Sequence

from ..group.classes import ClassData, conjugacy_classes
from ..group.perm import PermGroup
from ..util.common import debug
from ..util.config import LabConfig
from .cyclotomic import Cyclotomic
from .modp import charpoly_mod, inv_mod, matmul_mod, mod_p, nullspace_mod, roots_mod, rref_mod

__all__ = [
  'SplittingError', 'CharTable',
  'dixon_prime', 'character_table', 'fusion_map', 'restrict_and_decompose',
  'product_row', 'norm', 'inner_product', 'class_multiplication_coefficient',
  'check_table', 'check_structure_constants',
]


class SplittingError(RuntimeError):
  pass


type ClassFunction = Sequence[Cyclotomic]


def dixon_prime(exponent: int, order: int) -> int:
  p = exponent + 1
  while not (isprime(p) and p * p > 4 * order and order % p != 0):
    p += exponent
  return p


############################################################################
# Central characters mod p

def _split_block(basis: np.ndarray, pivots: list[int], m: np.ndarray, p: int) -> Optional[list[tuple[np.ndarray, list[int]]]]:
  "Eigenspaces of m restricted to the invariant subspace spanned by basis rows; None if m is scalar there"
  restricted = mod_p(m @ basis.T, p)[pivots, :]
  eigenvalues = roots_mod(charpoly_mod(restricted, p), p)
  if len(eigenvalues) <= 1:
    return None
  ident = np.eye(len(pivots), dtype=np.int64)
  pieces = []
  for lam in eigenvalues:
    coords = nullspace_mod(restricted - lam * ident, p)
    pieces.append(rref_mod(matmul_mod(coords, basis, p), p))
  if sum(sub.shape[0] for sub, _ in pieces) != basis.shape[0]:
    raise SplittingError(f'class matrix combination is not diagonalizable mod {p}')
  return pieces


def _central_characters(constants: np.ndarray, p: int, seed: int, retry_budget: int) -> list[np.ndarray]:
  r = constants.shape[0]
  mats = mod_p(constants, p)
  rng = np.random.default_rng(seed)
  blocks = [(np.eye(r, dtype=np.int64), list(range(r)))]
  found = []
  while blocks:
    basis, pivots = blocks.pop()
    if basis.shape[0] == 1:
      found.append(mod_p(basis[0] * inv_mod(basis[0, 0], p), p))
      continue
    for attempt in range(retry_budget):
      coeffs = rng.integers(0, p, size=r, dtype=np.int64)
      m = mod_p(np.tensordot(coeffs, mats, axes=1), p)
      pieces = _split_block(basis, pivots, m, p)
      if pieces is not None:
        debug(f'split block of dimension {basis.shape[0]} into {[sub.shape[0] for sub, _ in pieces]} (attempt {attempt + 1})')
        blocks.extend(pieces)
        break
    else:
      raise SplittingError(f'could not split an eigenspace of dimension {basis.shape[0]} in {retry_budget} attempts')
  return found


############################################################################
# Lifting

def _degree(omega: np.ndarray, cd: ClassData, p: int) -> int:
  "chi(1) from its central character: sum_i omega_i omega_{i*} / |C_i| = |G| / chi(1)^2"
  s = 0
  for i, size in enumerate(cd.sizes):
    s = (s + int(omega[i]) * int(omega[cd.inverse_class[i]]) * inv_mod(size, p)) % p
  square = cd.order * inv_mod(s, p) % p
  candidates = [d for d in divisors(cd.order) if d * d <= cd.order and (d * d - square) % p == 0]
  if len(candidates) != 1:
    raise SplittingError(f'cannot recover a character degree from {square} mod {p}')
  return int(candidates[0])


class _Lifter:
  "Discrete Fourier inversion of mod-p class functions into cyclotomic values"

  def __init__(self, cd: ClassData, p: int):
    self.cd = cd
    self.p = p
    self.z = pow(int(primitive_root(p)), (p - 1) // cd.exponent, p)
    self._kernels: dict[int, np.ndarray] = {}

  def _kernel(self, o: int) -> np.ndarray:
    "W[j, k] = z_o^(-jk) / o mod p"
    w = self._kernels.get(o)
    if w is None:
      p = self.p
      z_o = pow(self.z, self.cd.exponent // o, p)
      powers = np.array([pow(z_o, k, p) for k in range(o)], dtype=np.int64)
      jk = (-np.outer(np.arange(o), np.arange(o))) % o
      w = self._kernels[o] = mod_p(powers[jk] * inv_mod(o, p), p)
    return w

  def lift(self, values: np.ndarray, degree: int) -> tuple[Cyclotomic, ...]:
    out = []
    for i, o in enumerate(self.cd.orders):
      chi_powers = np.array([values[self.cd.power_map(i, k)] for k in range(o)], dtype=np.int64)
      mult = matmul_mod(self._kernel(o), chi_powers, self.p)
      if int(mult.max()) > degree or int(mult.sum()) != degree:
        raise SplittingError(f'eigenvalue multiplicities {mult.tolist()} on class {i} do not lift to degree {degree}')
      out.append(Cyclotomic(o, {j: int(m) for j, m in enumerate(mult) if m}))
    return tuple(out)


############################################################################
# Tables

class CharTable:
  """
  Irreducible characters of a group: `rows[chi][i]` is chi on class i. Rows
  are sorted by (degree, canonical values) with the principal character first.
  """

  def __init__(self, classes: ClassData, rows: Sequence[Sequence[Cyclotomic]], *, prime: Optional[int] = None):
    self.classes = classes
    self.group: PermGroup = classes.group
    self.rows: tuple[tuple[Cyclotomic, ...], ...] = tuple(tuple(row) for row in rows)
    self.degrees: tuple[int, ...] = tuple(int(row[0].to_fraction()) for row in self.rows)
    self.conductor = classes.exponent
    self.prime = prime

  def __len__(self) -> int:
    return len(self.rows)

  @property
  def order(self) -> int:
    return self.classes.order

  @cached_property
  def conjugate_rows(self) -> tuple[tuple[Cyclotomic, ...], ...]:
    return tuple(tuple(v.conjugate() for v in row) for row in self.rows)

  def kernel_of(self, row: int) -> frozenset[int]:
    "Classes on which the character takes its degree"
    chi = self.rows[row]
    return frozenset(i for i, v in enumerate(chi) if v == chi[0])

  def rows_over_trivial(self, normal_classes: frozenset[int]) -> list[int]:
    "Irr(G/N): rows whose kernel contains N"
    return [t for t in range(len(self.rows)) if normal_classes <= self.kernel_of(t)]

  def rows_over(self, normal_classes: frozenset[int]) -> list[int]:
    "Irr(G|N): rows whose kernel does not contain N"
    return [t for t in range(len(self.rows)) if not normal_classes <= self.kernel_of(t)]

  def value_key(self, row: int) -> tuple:
    return tuple(v.key(self.conductor) for v in self.rows[row])

  def __repr__(self) -> str:
    return f'CharTable({self.group!r}, degrees={list(self.degrees)})'


def _row_sort_key(row: tuple[Cyclotomic, ...], e: int) -> tuple:
  degree = row[0].to_fraction()
  principal = all(v == 1 for v in row)
  return (degree, not principal, tuple(v.key(e) for v in row))


def character_table(
  g: PermGroup,
  cd: Optional[ClassData] = None,
  config: Optional[LabConfig] = None,
) -> CharTable:
  if config is None:
    config = LabConfig()
  if cd is None:
    cd = conjugacy_classes(g, config.element_cap)
  e = cd.exponent
  p = dixon_prime(e, cd.order)
  debug(f'character table of {g!r}: exponent {e}, prime {p}')
  omegas = _central_characters(cd.structure_constants.a, p, config.seed, config.retry_budget)
  if len(omegas) != len(cd):
    raise SplittingError(f'found {len(omegas)} central characters for {len(cd)} classes')
  lifter = _Lifter(cd, p)
  rows = []
  for omega in omegas:
    d = _degree(omega, cd, p)
    values = np.array(
      [d * int(omega[i]) * inv_mod(size, p) % p for i, size in enumerate(cd.sizes)],
      dtype=np.int64,
    )
    rows.append(lifter.lift(values, d))
  rows.sort(key=lambda row: _row_sort_key(row, e))
  return CharTable(cd, rows, prime=p)


############################################################################
# Class functions

def fusion_map(t_g: CharTable, t_n: CharTable) -> tuple[int, ...]:
  "G-class of each class of the normal subgroup"
  class_of = t_g.classes.class_of
  return tuple(class_of[rep] for rep in t_n.classes.reps)


def _as_fraction(value: Cyclotomic, what: str) -> Fraction:
  if not value.is_rational():
    raise ArithmeticError(f'{what} is not rational: {value}')
  return value.to_fraction()


def restrict_and_decompose(t_g: CharTable, n: PermGroup, t_n: CharTable, row: int) -> dict[int, int]:
  "Multiplicities <chi_N, theta> over theta in Irr(N), nonzero ones only"
  if t_n.group is not n and t_n.group.order != n.order:
    raise ValueError(f'table of {t_n.group!r} does not belong to {n!r}')
  fusion = fusion_map(t_g, t_n)
  chi = t_g.rows[row]
  restricted = [chi[k] for k in fusion]
  out = {}
  for theta in range(len(t_n)):
    ip = _as_fraction(inner_product(t_n, restricted, t_n.rows[theta]), 'restriction multiplicity')
    if ip.denominator != 1 or ip < 0:
      raise ArithmeticError(f'<chi_{row} restricted, theta_{theta}> = {ip} is not a nonnegative integer')
    if ip:
      out[theta] = int(ip)
  return out


def product_row(t: CharTable, r1: int, r2: int) -> tuple[Cyclotomic, ...]:
  return tuple(a * b for a, b in zip(t.rows[r1], t.rows[r2]))


def inner_product(t: CharTable, u: ClassFunction, v: ClassFunction) -> Cyclotomic:
  "(1/|G|) sum_i |C_i| u_i conj(v_i)"
  total = sum((size * a * b.conjugate() for size, a, b in zip(t.classes.sizes, u, v)), Cyclotomic())
  return total / t.order


def norm(t: CharTable, v: ClassFunction) -> Fraction:
  return _as_fraction(inner_product(t, v, v), 'norm')


def class_multiplication_coefficient(t: CharTable, i: int, j: int, k: int) -> int:
  "a(i, j, k) from the table: |C_i||C_j|/|G| sum_chi chi(g_i) chi(g_j) conj(chi(g_k)) / chi(1)"
  total = Cyclotomic()
  for row, conj_row, degree in zip(t.rows, t.conjugate_rows, t.degrees):
    total += row[i] * row[j] * conj_row[k] / degree
  value = _as_fraction(total * t.classes.sizes[i] * t.classes.sizes[j] / t.order, 'class multiplication coefficient')
  if value.denominator != 1 or value < 0:
    raise ArithmeticError(f'class multiplication coefficient a({i}, {j}, {k}) = {value}')
  return int(value)


############################################################################
# Validation

def check_table(t: CharTable) -> list[str]:
  "All violated table invariants, as human-readable witnesses (empty if the table is valid)"
  problems = []
  r = len(t.classes)
  if len(t.rows) != r:
    problems.append(f'{len(t.rows)} rows for {r} classes')
  if not all(v == 1 for v in t.rows[0]):
    problems.append('row 0 is not the principal character')
  if sum(d * d for d in t.degrees) != t.order:
    problems.append(f'sum of squared degrees is {sum(d * d for d in t.degrees)}, expected {t.order}')
  for row, d in enumerate(t.degrees):
    if t.order % d:
      problems.append(f'degree {d} of row {row} does not divide {t.order}')
  for row, chi in enumerate(t.rows):
    for i, v in enumerate(chi):
      if not v.is_integral():
        problems.append(f'value {v} of row {row} at class {i} is not an algebraic integer')
  for a in range(len(t.rows)):
    for b in range(a, len(t.rows)):
      ip = inner_product(t, t.rows[a], t.rows[b])
      if ip != (1 if a == b else 0):
        problems.append(f'rows {a} and {b} have inner product {ip}')
  for i in range(r):
    for j in range(i, r):
      total = sum((row[i] * conj[j] for row, conj in zip(t.rows, t.conjugate_rows)), Cyclotomic())
      expected = t.classes.centralizer_order(i) if i == j else 0
      if total != expected:
        problems.append(f'columns {i} and {j} have sum {total}, expected {expected}')
  return problems


def check_structure_constants(t: CharTable) -> list[str]:
  "Counted structure constants that disagree with the character formula"
  counted = t.classes.structure_constants
  r = len(t.classes)
  problems = []
  for i in range(r):
    for j in range(i, r):
      for k in range(r):
        value = class_multiplication_coefficient(t, i, j, k)
        if value != counted(i, j, k):
          problems.append(f'a({i}, {j}, {k}): counted {counted(i, j, k)}, from characters {value}')
  return problems
