# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

import math
import unittest

from hypothesis import given, strategies as st

from coset.group.catalog import make
from coset.group.perm import (
  DegreeMismatch, ElementCapExceeded, NotNormalError, Permutation, build_group,
  centralizer_order, compose, coset_action, derived_series, is_normal, is_solvable, normal_closure,
)

from .base import LabTestCase


def permutations(degree: int):
  return st.permutations(range(degree)).map(Permutation)


class PermutationTest(LabTestCase):
  def test_left_action(self):
    a = Permutation.from_cycles(3, (0, 1))
    b = Permutation.from_cycles(3, (1, 2))
    ab = compose(a, b)
    for i in range(3):
      self.assertEqual(ab(i), a(b(i)))
    self.assertEqual(ab, Permutation((1, 2, 0)))

  def test_degree_mismatch(self):
    with self.assertRaises(DegreeMismatch):
      Permutation.identity(3) * Permutation.identity(4)

  def test_not_a_permutation(self):
    with self.assertRaises(ValueError):
      Permutation((0, 0, 1))

  def test_cycles_and_order(self):
    p = Permutation.from_cycles(6, (0, 1, 2), (3, 4))
    self.assertEqual(p.cycles(), [(0, 1, 2), (3, 4)])
    self.assertEqual(p.order(), 6)
    self.assertEqual(str(p), '(0 1 2)(3 4)')
    self.assertEqual(Permutation.identity(4).order(), 1)

  @given(permutations(6), permutations(6))
  def test_inverse(self, p, q):
    self.assertTrue((p * p.inverse()).is_identity())
    self.assertEqual((p * q).inverse(), q.inverse() * p.inverse())

  @given(permutations(5), permutations(5), permutations(5))
  def test_associative(self, p, q, r):
    self.assertEqual((p * q) * r, p * (q * r))

  @given(permutations(5), st.integers(-7, 7))
  def test_power(self, p, k):
    expected = Permutation.identity(5)
    step = p if k >= 0 else p.inverse()
    for _ in range(abs(k)):
      expected = expected * step
    self.assertEqual(p ** k, expected)

  @given(permutations(5), permutations(5))
  def test_conjugate_preserves_order(self, p, g):
    self.assertEqual(p.conjugate(g).order(), p.order())


class PermGroupTest(LabTestCase):
  def test_orders(self):
    self.assertEqual(make('sym:4').order, 24)
    self.assertEqual(make('alt:5').order, 60)
    self.assertEqual(make('pgammal:2:9').order, 1440)

  def test_stabilizer_chain(self):
    for spec in ('sym:4', 'psl:2:7', 'agammal1:8'):
      g = make(spec)
      self.assertEqual(math.prod(g.transversal_sizes), g.order)
      self.assertTrue(all(s in g for s in g.strong_generators))
      self.assertTrue(all(x in g for x in g.generators))

  def test_membership(self):
    a4 = make('alt:4')
    self.assertIn(Permutation.from_cycles(4, (0, 1, 2)), a4)
    self.assertNotIn(Permutation.from_cycles(4, (0, 1)), a4)

  def test_elements_are_the_group(self):
    g = make('sym:4')
    elements = g.elements()
    self.assertEqual(len(elements), 24)
    self.assertEqual(len(set(elements)), 24)
    self.assertTrue(elements[0].is_identity())
    self.assertEqual(elements, make('sym:4').elements())

  def test_element_cap(self):
    with self.assertRaises(ElementCapExceeded):
      make('sym:5').elements(cap=100)

  def test_normal_closure(self):
    s4 = make('sym:4')
    v4 = normal_closure(s4, [Permutation.from_cycles(4, (0, 1), (2, 3))])
    self.assertEqual(v4.order, 4)
    self.assertTrue(is_normal(s4, v4))
    a4 = normal_closure(s4, [Permutation.from_cycles(4, (0, 1, 2))])
    self.assertEqual(a4.order, 12)
    transposition = build_group([Permutation.from_cycles(4, (0, 1))])
    self.assertFalse(is_normal(s4, transposition))

  def test_solvable(self):
    self.assertTrue(is_solvable(make('sym:4')))
    self.assertFalse(is_solvable(make('alt:5')))
    self.assertEqual(len(derived_series(make('agammal1:8'))), 4)
    self.assertEqual([h.order for h in derived_series(make('sl:2:3'))], [24, 8, 2, 1])

  def test_coset_action(self):
    s4 = make('sym:4')
    v4 = normal_closure(s4, [Permutation.from_cycles(4, (0, 1), (2, 3))])
    image = coset_action(s4, v4)
    self.assertEqual(image.index, 6)
    self.assertEqual(image.quotient.order, 6)
    transposition = Permutation.from_cycles(4, (0, 1))
    coset = image.coset_of[transposition]
    self.assertEqual(len(image.conjugacy_orbit(coset)), 3)
    self.assertEqual(image.centralizer_order(coset), 2)
    with self.assertRaises(NotNormalError):
      coset_action(s4, build_group([transposition]))

  def test_centralizer_order(self):
    s4 = make('sym:4')
    self.assertEqual(centralizer_order(s4, Permutation.from_cycles(4, (0, 1, 2, 3))), 4)
    self.assertEqual(centralizer_order(s4, Permutation.from_cycles(4, (0, 1))), 4)


if __name__ == '__main__':
  unittest.main()
