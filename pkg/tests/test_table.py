# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

import unittest

from coset.char.cyclotomic import zeta
from coset.char.table import (
  character_table, check_structure_constants, check_table, class_multiplication_coefficient,
  dixon_prime, fusion_map, inner_product, norm, product_row, restrict_and_decompose,
)
from coset.char.tablefile import compare_tables, table_file_from
from coset.group.catalog import catalog_sweep_list, make
from coset.util.config import LabConfig

from .base import LabTestCase


GOLDEN = ('sym:3', 'sym:4', 'alt:4', 'alt:5', 'q8', 'dihedral:4', 'sl:2:3')


class DixonTest(LabTestCase):
  def test_prime(self):
    self.assertEqual(dixon_prime(6, 6), 7)
    self.assertEqual(dixon_prime(30, 60), 31)
    p = dixon_prime(12, 24)
    self.assertEqual(p % 12, 1)
    self.assertGreater(p * p, 4 * 24)

  def test_degrees(self):
    self.assertEqual(self.lab('sl:2:3').table.degrees, (1, 1, 1, 2, 2, 2, 3))
    self.assertEqual(self.lab('alt:5').table.degrees, (1, 3, 3, 4, 5))
    self.assertEqual(self.lab('sym:4').table.degrees, (1, 1, 2, 3, 3))
    self.assertEqual(sorted(self.lab('agammal1:8').table.degrees), [1, 1, 1, 3, 3, 7, 7, 7])

  def test_principal_first(self):
    for spec in GOLDEN:
      with self.subTest(spec=spec):
        t = self.lab(spec).table
        self.assertRowEqual(t.rows[0], [1] * len(t.classes))

  def test_invariants(self):
    for spec in GOLDEN + ('agammal1:8', 'direct:(cyclic:2),(alt:4)', 'psl:2:7'):
      with self.subTest(spec=spec):
        t = self.lab(spec).table
        self.assertEqual(check_table(t), [])

  def test_structure_constants_from_characters(self):
    for spec in ('sym:4', 'sl:2:3', 'alt:5'):
      with self.subTest(spec=spec):
        self.assertEqual(check_structure_constants(self.lab(spec).table), [])

  def test_catalog_tables(self):
    for spec in catalog_sweep_list(2000):
      with self.subTest(spec=str(spec)):
        t = self.lab(str(spec)).table
        self.assertEqual(check_table(t), [])
        if t.order <= 1000:
          self.assertEqual(check_structure_constants(t), [])

  def test_golden(self):
    for spec in GOLDEN:
      with self.subTest(spec=spec):
        diff = compare_tables(self.loadTestData(spec), table_file_from(self.lab(spec).table))
        self.assertTrue(diff.matches, diff.problems)

  def test_alt4_values(self):
    lab = self.lab('alt:4')
    cd = lab.classes
    t = lab.table
    a, b = cd.label_index('3a'), cd.label_index('3b')
    linear = [row for row in t.rows if row[0] == 1 and row[a] != 1]
    self.assertEqual(len(linear), 2)
    for row in linear:
      self.assertIn(row[a], (zeta(3), zeta(3, 2)))
      self.assertExactEqual(row[b], row[a].conjugate())

  def test_seed_independent(self):
    g = make('sl:2:3')
    t1 = character_table(g, config=LabConfig(seed=1))
    t2 = character_table(g, config=LabConfig(seed=99))
    self.assertEqual([t1.value_key(r) for r in range(len(t1))], [t2.value_key(r) for r in range(len(t2))])

  def test_inner_products(self):
    t = self.lab('sym:4').table
    for i in range(len(t)):
      self.assertEqual(norm(t, t.rows[i]), 1)
    sq = product_row(t, 3, 3)
    self.assertEqual(norm(t, sq), 4)
    self.assertExactEqual(inner_product(t, sq, t.rows[0]), 1)

  def test_class_multiplication(self):
    lab = self.lab('sym:3')
    t = lab.table
    k = lab.classes.label_index('2a')
    c = lab.classes.label_index('3a')
    self.assertEqual(class_multiplication_coefficient(t, k, k, 0), 3)
    self.assertEqual(class_multiplication_coefficient(t, k, k, c), 3)
    self.assertEqual(class_multiplication_coefficient(t, k, c, k), 2)

  def test_kernels(self):
    lab = self.lab('sym:4')
    t = lab.table
    sizes = lab.classes.sizes
    kernel_orders = sorted(sum(sizes[i] for i in t.kernel_of(r)) for r in range(len(t)))
    self.assertEqual(kernel_orders, [1, 1, 4, 12, 24])

  def test_restriction(self):
    lab = self.lab('sl:2:3')
    q8 = [n for n in lab.normal_subgroups if n.order == 8][0]
    t_n = lab.subgroup_lab(q8).table
    fusion = fusion_map(lab.table, t_n)
    self.assertEqual(len(fusion), 5)
    degrees = lab.table.degrees
    for row in range(len(lab.table)):
      decomposition = restrict_and_decompose(lab.table, q8.group, t_n, row)
      self.assertEqual(sum(m * t_n.degrees[th] for th, m in decomposition.items()), degrees[row])
    # the degree-3 character restricts to the sum of the three nontrivial linear characters
    top = restrict_and_decompose(lab.table, q8.group, t_n, 6)
    self.assertEqual(sorted(top), [1, 2, 3])


if __name__ == '__main__':
  unittest.main()
