# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

import unittest

from coset.lab.lattice import chief_series_through, is_simple, normal_subgroups_bruteforce
from coset.lab.simple import MAX_RECOGNIZED_ORDER, recognize
from coset.group.catalog import make

from .base import LabTestCase


class NormalSubgroupTest(LabTestCase):
  def test_orders(self):
    self.assertEqual([n.order for n in self.lab('sl:2:3').normal_subgroups], [1, 2, 8, 24])
    self.assertEqual([n.order for n in self.lab('sym:4').normal_subgroups], [1, 4, 12, 24])
    self.assertEqual([n.order for n in self.lab('alt:5').normal_subgroups], [1, 60])
    self.assertEqual([n.order for n in self.lab('pgammal:2:9').normal_subgroups], [1, 360, 720, 720, 720, 1440])

  def test_against_bruteforce(self):
    for spec in ('sym:4', 'sl:2:3', 'direct:(cyclic:2),(alt:4)', 'dihedral:6', 'agammal1:8'):
      with self.subTest(spec=spec):
        lab = self.lab(spec)
        self.assertEqual([n.classes for n in lab.normal_subgroups], normal_subgroups_bruteforce(lab))

  def test_trivial_and_whole(self):
    lab = self.lab('sym:4')
    self.assertEqual(lab.trivial_subgroup().order, 1)
    self.assertEqual(lab.whole_group().order, 24)

  def test_simple(self):
    self.assertTrue(is_simple(make('alt:5'), 1000))
    self.assertTrue(is_simple(make('cyclic:7'), 1000))
    self.assertFalse(is_simple(make('sym:4'), 1000))
    self.assertFalse(is_simple(make('cyclic:1'), 1000))


class ChiefSeriesTest(LabTestCase):
  def test_solvable(self):
    lab = self.lab('sl:2:3')
    q8 = [n for n in lab.normal_subgroups if n.order == 8][0]
    factors = chief_series_through(lab, q8)
    self.assertEqual([f.order for f in factors], [2, 4, 3])
    self.assertTrue(all(f.abelian for f in factors))

  def test_through_psl29(self):
    lab = self.lab('pgammal:2:9')
    n = [n for n in lab.normal_subgroups if n.order == 360][0]
    factors = chief_series_through(lab, n)
    self.assertEqual([f.order for f in factors], [360, 2, 2])
    bottom = factors[0]
    self.assertFalse(bottom.abelian)
    self.assertTrue(bottom.simple)
    self.assertEqual(bottom.recognition.characteristic, 3)
    self.assertEqual(bottom.recognition.odd_lie.steinberg_degree, 9)
    self.assertIn('Alt(6)', bottom.recognition.name)


class RecognitionTest(LabTestCase):
  def test_lookup(self):
    r = recognize(9828, 16)
    self.assertEqual(r.name, 'PSL(2,27)')
    self.assertEqual(r.characteristic, 3)
    self.assertEqual(r.odd_lie.steinberg_degree, 27)

  def test_even_characteristic(self):
    r = recognize(504, 9)
    self.assertTrue(r.is_lie_type)
    self.assertIsNone(r.odd_lie)

  def test_collisions(self):
    self.assertEqual(recognize(20160, 14).name, 'Alt(8)')
    self.assertEqual(recognize(20160, 10).name, 'PSL(3,4)')
    r = recognize(20160, 12)
    self.assertFalse(r.recognized)
    self.assertTrue(r.ambiguous)

  def test_alt5_has_odd_description(self):
    r = recognize(60, 5)
    self.assertEqual(r.characteristic, 5)

  def test_powers(self):
    r = recognize(3600, 25)
    self.assertEqual(r.power, 2)
    self.assertEqual(r.name, '(Alt(5))^2')

  def test_unrecognized(self):
    self.assertEqual(recognize(1000, 10).name, 'unrecognized')
    self.assertFalse(recognize(MAX_RECOGNIZED_ORDER + 1, 3).recognized)


if __name__ == '__main__':
  unittest.main()
