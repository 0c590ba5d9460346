# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

"""
Small finite fields F_q, q = p^f, with table-driven arithmetic.

Element codes are integers 0..q-1: the code of c_0 + c_1 t + ... + c_{f-1} t^{f-1}
is c_0 + c_1 p + ... + c_{f-1} p^{f-1}. This is the "polynomial-coefficient
order" used for points of affine and projective lines.
"""

from functools import lru_cache

import numpy as np
from sympy import factorint
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_rem

__all__ = ['IRREDUCIBLE_MODULI', 'GF', 'finite_field']


# Coefficients, highest degree first
IRREDUCIBLE_MODULI: dict[int, tuple[int, ...]] = {
  4: (1, 1, 1),            # t^2 + t + 1
  8: (1, 0, 1, 1),         # t^3 + t + 1
  9: (1, 0, 1),            # t^2 + 1
  16: (1, 0, 0, 1, 1),     # t^4 + t + 1
  25: (1, 0, 2),           # t^2 + 2
  27: (1, 0, 2, 1),        # t^3 - t + 1
  32: (1, 0, 0, 1, 0, 1),  # t^5 + t^2 + 1
  49: (1, 0, 1),           # t^2 + 1
}


class GF:
  "Finite field with precomputed addition and multiplication tables"

  def __init__(self, q: int):
    factors = factorint(q)
    if q < 2 or len(factors) != 1:
      raise ValueError(f'{q} is not a prime power')
    (p, f), = factors.items()
    self.q = q
    self.p = int(p)
    self.f = int(f)
    if self.f == 1:
      self.modulus: tuple[int, ...] = (1, 0)
    else:
      if q not in IRREDUCIBLE_MODULI:
        raise ValueError(f'no field construction available for q = {q}')
      self.modulus = IRREDUCIBLE_MODULI[q]
      if not gf_irreducible_p(list(self.modulus), self.p, ZZ):
        raise AssertionError(f'modulus for F_{q} is reducible')
    self.add_table, self.mul_table = self._build_tables()
    self.neg_table = np.array([int(np.flatnonzero(self.add_table[a] == 0)[0]) for a in range(q)], dtype=np.int64)
    self.inv_table = np.zeros(q, dtype=np.int64)
    for a in range(1, q):
      self.inv_table[a] = int(np.flatnonzero(self.mul_table[a] == 1)[0])
    self.primitive = self._find_primitive()

  def _digits(self, code: int) -> list[int]:
    "Coefficient list (highest degree first, stripped) as used by galoistools"
    coeffs = []
    for _ in range(self.f):
      coeffs.append(code % self.p)
      code //= self.p
    coeffs.reverse()
    while coeffs and coeffs[0] == 0:
      coeffs.pop(0)
    return coeffs

  def _code(self, coeffs: list[int]) -> int:
    code = 0
    for c in coeffs:
      code = code * self.p + int(c)
    return code

  def _build_tables(self) -> tuple[np.ndarray, np.ndarray]:
    q, p = self.q, self.p
    digits = [self._digits(a) for a in range(q)]
    add = np.zeros((q, q), dtype=np.int64)
    mul = np.zeros((q, q), dtype=np.int64)
    for a in range(q):
      for b in range(a, q):
        da = [0] * (self.f - len(digits[a])) + digits[a]
        db = [0] * (self.f - len(digits[b])) + digits[b]
        add[a, b] = add[b, a] = self._code([(x + y) % p for x, y in zip(da, db)])
        prod = gf_rem(gf_mul(digits[a], digits[b], p, ZZ), list(self.modulus), p, ZZ)
        mul[a, b] = mul[b, a] = self._code(prod)
    return add, mul

  def _find_primitive(self) -> int:
    for a in range(2 if self.q > 2 else 1, self.q):
      if self.order(a) == self.q - 1:
        return a
    raise AssertionError(f'no primitive element found in F_{self.q}')

  def add(self, a: int, b: int) -> int:
    return int(self.add_table[a, b])

  def sub(self, a: int, b: int) -> int:
    return int(self.add_table[a, self.neg_table[b]])

  def neg(self, a: int) -> int:
    return int(self.neg_table[a])

  def mul(self, a: int, b: int) -> int:
    return int(self.mul_table[a, b])

  def inv(self, a: int) -> int:
    if a == 0:
      raise ZeroDivisionError('zero has no inverse')
    return int(self.inv_table[a])

  def div(self, a: int, b: int) -> int:
    return self.mul(a, self.inv(b))

  def pow(self, a: int, k: int) -> int:
    if k < 0:
      a, k = self.inv(a), -k
    result = 1
    while k:
      if k & 1:
        result = self.mul(result, a)
      a = self.mul(a, a)
      k >>= 1
    return result

  def frobenius(self, a: int) -> int:
    return self.pow(a, self.p)

  def order(self, a: int) -> int:
    "Multiplicative order of a nonzero element"
    if a == 0:
      raise ValueError('zero has no multiplicative order')
    k, x = 1, a
    while x != 1:
      x = self.mul(x, a)
      k += 1
    return k

  def __iter__(self):
    return iter(range(self.q))

  def __repr__(self) -> str:
    return f'GF({self.q})'


@lru_cache(maxsize=None)
def finite_field(q: int) -> GF:
  return GF(q)
