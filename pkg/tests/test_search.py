# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

import unittest

from coset.group.catalog import catalog_sweep_list
from coset.lab.records import InTwoClasses
from coset.lab.search import equivalence_sweep, search
from coset.util.config import LabConfig

from .base import LabTestCase


class SearchTest(LabTestCase):
  def test_empty(self):
    result = search([])
    self.assertEqual(result.groups, [])
    self.assertTrue(result.passed)
    self.assertEqual(result.summary()['cosets'], 0)

  def test_sym3(self):
    result = search(['sym:3'])
    self.assertTrue(result.passed)
    summary = result.summary()
    self.assertEqual(summary['groups'], 1)
    self.assertEqual(summary['cosets'], 1)
    self.assertEqual(summary['single-class'], 1)
    self.assertEqual(summary['two-classes'], 0)
    self.assertEqual(result.groups[0].order, 6)

  def test_sl23(self):
    result = search(['sl:2:3'])
    self.assertTrue(result.passed)
    hits = [a for a in result.analyses if isinstance(a.verdict, InTwoClasses) and a.normal_order == 8]
    self.assertEqual(len(hits), 2)
    for a in hits:
      self.assertEqual((a.size_k, a.size_d), (4, 4))
    self.assertTrue(all(r.theorem == 'A' and r.passed for r in result.groups[0].reports))

  def test_pgammal29(self):
    result = search(['pgammal:2:9'])
    self.assertTrue(result.passed)
    hits = [a for a in result.analyses if isinstance(a.verdict, InTwoClasses)]
    self.assertEqual(len(hits), 1)
    (hit,) = hits
    self.assertEqual(hit.normal_order, 360)
    self.assertEqual(hit.x.order(), 4)
    self.assertEqual((hit.size_k, hit.size_d), (180, 180))

  def test_errors_are_recorded(self):
    result = search(['sym:3', 'nosuch:3'])
    self.assertFalse(result.passed)
    self.assertIsNone(result.groups[0].error)
    self.assertIn('nosuch', result.groups[1].error)
    self.assertEqual(result.summary()['errors'], 1)

  def test_parallel_matches_serial(self):
    specs = [str(s) for s in catalog_sweep_list(24)][:8]
    serial = search(specs, LabConfig())
    parallel = search(specs, LabConfig(parallel=True))
    self.assertEqual(serial.to_dict(), parallel.to_dict())
    self.assertEqual([g.spec for g in parallel.groups], specs)


  def test_catalog_theorems_hold(self):
    result = search([str(s) for s in catalog_sweep_list(200)])
    summary = result.summary()
    self.assertEqual(summary['theorem_failures'], 0)
    self.assertEqual(summary['errors'], 0)
    self.assertTrue(result.passed)

class EquivalenceSweepTest(LabTestCase):
  def test_small_groups(self):
    specs = ['sym:3', 'sym:4', 'alt:4', 'q8', 'dihedral:4', 'sl:2:3', 'direct:(cyclic:2),(alt:4)']
    result = equivalence_sweep(specs)
    self.assertEqual(result.discrepancies, [])
    self.assertTrue(result.passed)
    summary = result.summary()
    self.assertEqual(summary['groups'], len(specs))
    self.assertGreater(summary['positives_a'], 0)
    self.assertGreater(summary['instances_a'], summary['positives_a'])
    self.assertGreater(summary['instances_2.2'], 0)

  def test_nonsolvable(self):
    result = equivalence_sweep(['alt:5', 'sym:5'])
    self.assertTrue(result.passed)
    # Alt(5) is simple, so only Sym(5) contributes
    self.assertEqual(result.groups[0].instances_a, 0)
    self.assertGreater(result.groups[1].instances_a, 0)

  def test_catalog_sweep(self):
    specs = [str(s) for s in catalog_sweep_list(200)]
    result = equivalence_sweep(specs)
    self.assertEqual(result.discrepancies, [])
    self.assertEqual(result.summary()['errors'], 0)
    self.assertTrue(result.passed)

  def test_serializes(self):
    d = equivalence_sweep(['sym:3']).to_dict()
    self.assertEqual(d['summary']['discrepancies'], 0)
    self.assertEqual(d['groups'][0]['spec'], 'sym:3')


if __name__ == '__main__':
  unittest.main()
