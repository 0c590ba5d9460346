# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

import unittest
from fractions import Fraction

from hypothesis import given, strategies as st

from coset.char.cyclotomic import Cyclotomic, zeta

from .base import LabTestCase


def cyclotomics(conductor: int):
  coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
  return st.dictionaries(st.integers(0, conductor - 1), coeffs, max_size=4).map(lambda d: Cyclotomic(conductor, d))

conductors = st.sampled_from([1, 3, 4, 5, 6, 8, 12, 15])


class CyclotomicTest(LabTestCase):
  def test_roots_of_unity(self):
    self.assertExactEqual(zeta(4) ** 2, -1)
    self.assertExactEqual(zeta(3) ** 3, 1)
    self.assertExactEqual(zeta(3) + zeta(3, 2), -1)
    self.assertExactEqual(zeta(6), zeta(12, 2))

  def test_canonical_form(self):
    a = Cyclotomic(12, {4: 1})
    b = zeta(3)
    self.assertEqual(a, b)
    self.assertEqual(a.terms(), {0: -1, 2: 1})
    self.assertEqual(b.terms(), {1: 1})
    self.assertTrue(Cyclotomic(5, {0: 1, 1: 1, 2: 1, 3: 1, 4: 1}).is_zero())

  def test_golden_ratio(self):
    phi = Cyclotomic(30, {12: -1, 18: -1})
    self.assertExactEqual(phi * phi, phi + 1)
    self.assertTrue(phi.is_integral())
    self.assertExactEqual(phi.conjugate(), phi)
    self.assertExactEqual(phi.galois(7), 1 - phi)

  def test_rational(self):
    half = Cyclotomic.rational(Fraction(1, 2))
    self.assertTrue(half.is_rational())
    self.assertFalse(half.is_integral())
    self.assertEqual(half.to_fraction(), Fraction(1, 2))
    with self.assertRaises(ValueError):
      zeta(3).to_fraction()

  def test_abs_square(self):
    self.assertExactEqual((1 + zeta(4)).abs_square(), 2)
    self.assertExactEqual(zeta(7, 3).abs_square(), 1)

  def test_sparse(self):
    self.assertEqual(Cyclotomic().sparse(6), '[]')
    self.assertEqual(zeta(3).sparse(6), '[0:-1,1:1]')
    self.assertEqual(zeta(4).sparse(4), '[1:1]')
    self.assertEqual(str(Cyclotomic.rational(-2)), '-2')

  def test_unhashable(self):
    with self.assertRaises(TypeError):
      hash(zeta(3))
    self.assertEqual(zeta(3).key(6), zeta(6, 2).key(6))

  @given(conductors.flatmap(lambda e: st.tuples(cyclotomics(e), cyclotomics(e), cyclotomics(e))))
  def test_ring_axioms(self, abc):
    a, b, c = abc
    self.assertEqual(a * (b + c), a * b + a * c)
    self.assertEqual((a + b) - b, a)
    self.assertEqual(a * b, b * a)

  @given(conductors.flatmap(cyclotomics), conductors.flatmap(cyclotomics))
  def test_mixed_conductors(self, a, b):
    self.assertEqual((a + b).conjugate(), a.conjugate() + b.conjugate())
    self.assertEqual((a * b).conjugate(), a.conjugate() * b.conjugate())

  @given(conductors.flatmap(cyclotomics))
  def test_abs_square_is_real(self, a):
    s = a.abs_square()
    self.assertEqual(s, s.conjugate())


if __name__ == '__main__':
  unittest.main()
