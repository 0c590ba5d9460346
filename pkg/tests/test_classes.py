# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

import unittest

from coset.group.classes import class_product_support, conjugacy_classes, structure_constant
from coset.group.catalog import make

from .base import LabTestCase


class ClassesTest(LabTestCase):
  def test_sizes(self):
    self.assertEqual(sorted(self.lab('alt:4').classes.sizes), [1, 3, 4, 4])
    self.assertEqual(sorted(self.lab('sl:2:3').classes.sizes), [1, 1, 4, 4, 4, 4, 6])
    self.assertEqual(sorted(self.lab('sym:4').classes.sizes), [1, 3, 6, 6, 8])

  def test_canonical_order(self):
    cd = self.lab('sl:2:3').classes
    self.assertEqual(cd.labels, ('1a', '2a', '3a', '3b', '4a', '6a', '6b'))
    self.assertEqual(cd.orders, (1, 2, 3, 3, 4, 6, 6))
    self.assertTrue(cd.reps[0].is_identity())
    for i, cls in enumerate(cd.classes):
      self.assertEqual(cd.reps[i], min(cls))

  def test_deterministic(self):
    a = conjugacy_classes(make('sym:4'))
    b = conjugacy_classes(make('sym:4'))
    self.assertEqual(a.reps, b.reps)
    self.assertEqual(a.sizes, b.sizes)

  def test_class_equation(self):
    for spec in ('sym:4', 'sl:2:3', 'agammal1:8'):
      cd = self.lab(spec).classes
      self.assertEqual(sum(cd.sizes), cd.order)
      for i in range(len(cd)):
        self.assertEqual(cd.order % cd.sizes[i], 0)

  def test_labels(self):
    cd = self.lab('alt:5').classes
    self.assertEqual(cd.labels, ('1a', '2a', '3a', '5a', '5b'))
    self.assertEqual(cd.label_index('5b'), 4)
    with self.assertRaises(KeyError):
      cd.label_index('7a')

  def test_power_map(self):
    cd = self.lab('sl:2:3').classes
    for i in range(len(cd)):
      self.assertEqual(cd.power_map(i, cd.orders[i]), 0)
      self.assertEqual(cd.power_map(i, -1), cd.inverse_class[i])
    self.assertEqual(cd.orders[cd.power_map(cd.label_index('6a'), 3)], 2)

  def test_structure_constants_sym3(self):
    cd = self.lab('sym:3').classes
    t = cd.label_index('2a')
    r = cd.label_index('3a')
    # K^ K^ = 3 * 1 + 3 * C3^ for K the transpositions
    self.assertEqual(structure_constant(cd, t, t, 0), 3)
    self.assertEqual(structure_constant(cd, t, t, r), 3)
    self.assertEqual(structure_constant(cd, t, t, t), 0)
    self.assertEqual(class_product_support(cd, t, t), frozenset({0, r}))

  def test_structure_constant_identities(self):
    cd = self.lab('sl:2:3').classes
    sc = cd.structure_constants
    r = len(cd)
    for i in range(r):
      for j in range(r):
        # a(i,j,k) summed against |C_k| counts all pairs
        self.assertEqual(sum(sc(i, j, k) * cd.sizes[k] for k in range(r)), cd.sizes[i] * cd.sizes[j])
        self.assertEqual(sc(i, j, 0), cd.sizes[i] if j == cd.inverse_class[i] else 0)

  def test_classes_in(self):
    lab = self.lab('sym:4')
    a4 = [n for n in lab.normal_subgroups if n.order == 12][0]
    self.assertEqual(sorted(lab.classes.sizes[i] for i in a4.classes), [1, 3, 8])


if __name__ == '__main__':
  unittest.main()
