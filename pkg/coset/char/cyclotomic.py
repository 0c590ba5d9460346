# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

"""
Exact arithmetic in cyclotomic fields Q(z_e).

A value is stored with its own conductor e as rational coefficients on the
power basis 1, z, ..., z^(phi(e)-1), i.e., reduced modulo the cyclotomic
polynomial Phi_e. The reduced form is unique for a given conductor. Rational
values always use conductor 1. Binary operations embed both operands into the
lcm of their conductors (z_e = z_E^(E/e)).
"""

import math
from fractions import Fraction
from functools import lru_cache

from sympy import cyclotomic_poly, totient

from typing import Iterable, Mapping, Union

__all__ = ['Cyclotomic', 'Scalar', 'as_cyclotomic', 'zeta']


type Scalar = Union[int, Fraction]


@lru_cache(maxsize=None)
def _phi_coeffs(e: int) -> tuple[int, ...]:
  "Coefficients of Phi_e, lowest degree first"
  return tuple(int(c) for c in reversed(cyclotomic_poly(e, polys=True).all_coeffs()))

@lru_cache(maxsize=None)
def _reduced_powers(e: int) -> tuple[dict[int, int], ...]:
  "Reduced forms of z^0, ..., z^(e-1) modulo Phi_e (integer coefficients, since Phi_e is monic)"
  phi = _phi_coeffs(e)
  deg = len(phi) - 1
  assert deg == int(totient(e))
  out = []
  cur: dict[int, int] = {0: 1}
  for _ in range(e):
    out.append(cur)
    nxt: dict[int, int] = {}
    top = 0
    for j, c in cur.items():
      if j + 1 == deg:
        top = c
      else:
        nxt[j + 1] = c
    if top:
      for i in range(deg):
        v = nxt.get(i, 0) - top * phi[i]
        if v:
          nxt[i] = v
        else:
          nxt.pop(i, None)
    cur = nxt
  return tuple(out)


class Cyclotomic:
  __slots__ = ('conductor', 'coeffs')
  __hash__ = None  # equality embeds into a common conductor; use key() for dict keys

  conductor: int
  coeffs: tuple[tuple[int, Fraction], ...]  # (exponent, coefficient), sorted, nonzero

  def __init__(self, conductor: int = 1, terms: Mapping[int, Scalar] | Iterable[tuple[int, Scalar]] = (), *, reduced: bool = False):
    if conductor < 1:
      raise ValueError('conductor must be positive')
    items = terms.items() if isinstance(terms, Mapping) else terms
    acc: dict[int, Fraction] = {}
    if reduced:
      for k, c in items:
        if c:
          acc[k] = acc.get(k, 0) + Fraction(c)
    else:
      powers = _reduced_powers(conductor)
      for k, c in items:
        if not c:
          continue
        c = Fraction(c)
        for j, m in powers[k % conductor].items():
          acc[j] = acc.get(j, 0) + m * c
    coeffs = tuple(sorted((k, c) for k, c in acc.items() if c))
    if all(k == 0 for k, _ in coeffs):
      conductor = 1
    self.conductor = conductor
    self.coeffs = coeffs

  @classmethod
  def rational(cls, q: Scalar) -> 'Cyclotomic':
    return cls(1, {0: q}, reduced=True)

  @classmethod
  def zeta(cls, e: int, k: int = 1) -> 'Cyclotomic':
    return cls(e, {k: 1})

  def terms(self) -> dict[int, Fraction]:
    return dict(self.coeffs)

  def embed(self, e: int) -> dict[int, Fraction]:
    "Reduced coefficients of this value written in conductor e (a multiple of the own conductor)"
    if e % self.conductor:
      raise ValueError(f'cannot embed conductor {self.conductor} into {e}')
    if e == self.conductor or self.conductor == 1:
      return self.terms()
    m = e // self.conductor
    return Cyclotomic(e, ((k * m, c) for k, c in self.coeffs)).terms()

  def key(self, e: int) -> tuple[tuple[int, Fraction], ...]:
    "Hashable canonical form in conductor e"
    return tuple(sorted(self.embed(e).items()))

  sort_key = key

  # Arithmetic

  def _lift(self, other: 'Cyclotomic') -> tuple[int, dict[int, Fraction], dict[int, Fraction]]:
    e = math.lcm(self.conductor, other.conductor)
    return e, self.embed(e), other.embed(e)

  def __add__(self, other: 'Cyclotomic | Scalar') -> 'Cyclotomic':
    other = as_cyclotomic(other)
    if other is NotImplemented:
      return NotImplemented
    e, a, b = self._lift(other)
    for k, c in b.items():
      a[k] = a.get(k, 0) + c
    return Cyclotomic(e, a, reduced=True)

  __radd__ = __add__

  def __neg__(self) -> 'Cyclotomic':
    return Cyclotomic(self.conductor, ((k, -c) for k, c in self.coeffs), reduced=True)

  def __sub__(self, other: 'Cyclotomic | Scalar') -> 'Cyclotomic':
    other = as_cyclotomic(other)
    if other is NotImplemented:
      return NotImplemented
    return self + (-other)

  def __rsub__(self, other: Scalar) -> 'Cyclotomic':
    return (-self) + other

  def __mul__(self, other: 'Cyclotomic | Scalar') -> 'Cyclotomic':
    if isinstance(other, (int, Fraction)):
      return Cyclotomic(self.conductor, ((k, c * other) for k, c in self.coeffs), reduced=True)
    if not isinstance(other, Cyclotomic):
      return NotImplemented
    e, a, b = self._lift(other)
    prod: dict[int, Fraction] = {}
    for k1, c1 in a.items():
      for k2, c2 in b.items():
        k = (k1 + k2) % e
        prod[k] = prod.get(k, 0) + c1 * c2
    return Cyclotomic(e, prod)

  __rmul__ = __mul__

  def __truediv__(self, other: Scalar) -> 'Cyclotomic':
    if not isinstance(other, (int, Fraction)):
      return NotImplemented
    if other == 0:
      raise ZeroDivisionError('division of a cyclotomic by zero')
    return Cyclotomic(self.conductor, ((k, c / other) for k, c in self.coeffs), reduced=True)

  def __pow__(self, n: int) -> 'Cyclotomic':
    if n < 0:
      raise ValueError('negative powers are not supported')
    result = Cyclotomic.rational(1)
    base = self
    while n:
      if n & 1:
        result = result * base
      base = base * base
      n >>= 1
    return result

  def galois(self, j: int) -> 'Cyclotomic':
    "Image under the field automorphism z -> z^j (j coprime to the conductor)"
    if math.gcd(j, self.conductor) != 1:
      raise ValueError(f'{j} is not coprime to the conductor {self.conductor}')
    return Cyclotomic(self.conductor, ((k * j, c) for k, c in self.coeffs))

  def conjugate(self) -> 'Cyclotomic':
    return self.galois(-1)

  def abs_square(self) -> 'Cyclotomic':
    return self * self.conjugate()

  # Predicates and conversions

  def is_zero(self) -> bool:
    return not self.coeffs

  def __bool__(self) -> bool:
    return bool(self.coeffs)

  def is_rational(self) -> bool:
    return self.conductor == 1

  def is_integral(self) -> bool:
    return all(c.denominator == 1 for _, c in self.coeffs)

  def to_fraction(self) -> Fraction:
    if not self.is_rational():
      raise ValueError(f'{self} is not rational')
    return self.coeffs[0][1] if self.coeffs else Fraction(0)

  def __eq__(self, other: object) -> bool:
    other = as_cyclotomic(other)
    if other is NotImplemented:
      return NotImplemented
    if self.is_rational() and other.is_rational():
      return self.coeffs == other.coeffs
    e, a, b = self._lift(other)
    return a == b

  def __str__(self) -> str:
    if not self.coeffs:
      return '0'
    out = ''
    for k, c in self.coeffs:
      if k == 0:
        mono = str(abs(c))
      else:
        z = f'z{self.conductor}' + (f'^{k}' if k != 1 else '')
        mono = z if abs(c) == 1 else f'{abs(c)}*{z}'
      if not out:
        out = ('-' if c < 0 else '') + mono
      else:
        out += (' - ' if c < 0 else ' + ') + mono
    return out

  def sparse(self, e: int) -> str:
    "Sparse text form [k:c,...] in conductor e"
    return '[' + ','.join(f'{k}:{c}' for k, c in sorted(self.embed(e).items())) + ']'

  def __repr__(self) -> str:
    return f'Cyclotomic({self.conductor}, {{{", ".join(f"{k}: {str(c)!r}" for k, c in self.coeffs)}}})'


def as_cyclotomic(x: object) -> Cyclotomic:
  if isinstance(x, Cyclotomic):
    return x
  if isinstance(x, (int, Fraction)):
    return Cyclotomic.rational(x)
  return NotImplemented

def zeta(e: int, k: int = 1) -> Cyclotomic:
  return Cyclotomic.zeta(e, k)
