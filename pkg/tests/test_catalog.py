# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

import unittest

from hypothesis import given, strategies as st

from coset.group.catalog import GroupSpec, GroupSpecError, catalog_sweep_list, make, parse_spec, spec_order
from coset.group.fields import IRREDUCIBLE_MODULI, finite_field
from coset.group.perm import is_solvable

from .base import LabTestCase


class FieldTest(LabTestCase):
  def test_prime_field(self):
    f = finite_field(7)
    self.assertEqual(f.mul(3, 5), 1)
    self.assertEqual(f.inv(3), 5)
    self.assertEqual(f.neg(2), 5)
    self.assertEqual(f.order(f.primitive), 6)

  def test_extension_fields(self):
    for q in IRREDUCIBLE_MODULI:
      f = finite_field(q)
      self.assertEqual(f.order(f.primitive), q - 1, q)
      for a in range(1, q):
        self.assertEqual(f.mul(a, f.inv(a)), 1)

  @given(st.sampled_from([8, 9, 27]), st.data())
  def test_field_axioms(self, q, data):
    f = finite_field(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    self.assertEqual(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)))
    self.assertEqual(f.sub(f.add(a, b), b), a)

  def test_frobenius_is_automorphism(self):
    f = finite_field(9)
    for a in f:
      for b in f:
        self.assertEqual(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)))

  def test_not_a_prime_power(self):
    with self.assertRaises(ValueError):
      finite_field(12)


class SpecTest(LabTestCase):
  def test_parse(self):
    self.assertEqual(parse_spec('sym:4'), GroupSpec('sym', (4,)))
    self.assertEqual(parse_spec('q8'), GroupSpec('q8'))
    spec = parse_spec('direct:(cyclic:2),(alt:4)')
    self.assertEqual(spec.factors, (GroupSpec('cyclic', (2,)), GroupSpec('alt', (4,))))
    self.assertEqual(str(spec), 'direct:(cyclic:2),(alt:4)')

  def test_bad_specs(self):
    for text in ('', 'nosuch:3', 'sym', 'sym:x', 'psl:3:4', 'agl1:6', 'direct:(sym:3)', 'direct:sym:3,sym:4', 'dihedral:2'):
      with self.subTest(text=text), self.assertRaises(GroupSpecError):
        parse_spec(text)

  def test_orders(self):
    expected = {
      'cyclic:5': 5, 'sym:4': 24, 'alt:5': 60, 'dihedral:4': 8, 'q8': 8, 'sl:2:3': 24,
      'agl1:8': 56, 'agammal1:8': 168, 'psl:2:9': 360, 'pgl:2:9': 720,
      'pgammal:2:9': 1440, 'pgammal:2:27': 58968, 'direct:(cyclic:2),(alt:4)': 24,
    }
    for text, order in expected.items():
      with self.subTest(spec=text):
        self.assertEqual(spec_order(text), order)
    for text in ('agl1:8', 'agammal1:8', 'psl:2:9', 'pgammal:2:9', 'sl:2:3', 'direct:(cyclic:2),(alt:4)'):
      with self.subTest(spec=text):
        self.assertEqual(make(text).order, expected[text])

  def test_degrees(self):
    self.assertEqual(make('sl:2:3').degree, 8)
    self.assertEqual(make('pgammal:2:9').degree, 10)
    self.assertEqual(make('agammal1:8').degree, 8)

  def test_names(self):
    self.assertEqual(make('sym:3').name, 'sym:3')

  def test_solvability(self):
    self.assertTrue(is_solvable(make('agammal1:8')))
    self.assertFalse(is_solvable(make('psl:2:7')))

  def test_sweep_list(self):
    specs = catalog_sweep_list(24)
    orders = [spec_order(s) for s in specs]
    self.assertEqual(orders, sorted(orders))
    self.assertTrue(all(o <= 24 for o in orders))
    names = {str(s) for s in specs}
    self.assertIn('sl:2:3', names)
    self.assertIn('direct:(cyclic:2),(alt:4)', names)
    self.assertNotIn('alt:5', names)


if __name__ == '__main__':
  unittest.main()
