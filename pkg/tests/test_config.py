# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

import unittest

from coset.util.config import DEFAULT_SEED, LabConfig, parse_switch


class ConfigTest(unittest.TestCase):
  def test_defaults(self):
    config = LabConfig.from_env({})
    self.assertEqual(config, LabConfig())
    self.assertEqual(config.seed, DEFAULT_SEED)
    self.assertFalse(config.parallel)

  def test_environment(self):
    config = LabConfig.from_env({'PYCOSET_SEED': '5', 'PYCOSET_ELEMENT_CAP': '1000', 'PYCOSET_PARALLEL': 'on'})
    self.assertEqual((config.seed, config.element_cap, config.parallel), (5, 1000, True))

  def test_bad_environment(self):
    for environ in ({'PYCOSET_SEED': 'abc'}, {'PYCOSET_ELEMENT_CAP': '0'}, {'PYCOSET_PARALLEL': 'sometimes'}):
      with self.subTest(environ=environ), self.assertRaises(ValueError):
        LabConfig.from_env(environ)

  def test_overrides(self):
    base = LabConfig.from_env({'PYCOSET_SEED': '5'})
    config = base.with_overrides(seed=None, element_cap=50)
    self.assertEqual((config.seed, config.element_cap), (5, 50))
    self.assertEqual(base.element_cap, LabConfig().element_cap)

  def test_to_dict(self):
    self.assertEqual(set(LabConfig().to_dict()), {'seed', 'element_cap', 'parallel', 'retry_budget'})

  def test_parse_switch(self):
    for value in ('on', 'ON', ' yes', '1', 'true'):
      self.assertTrue(parse_switch(value))
    for value in ('off', 'no', '0', 'False'):
      self.assertFalse(parse_switch(value))
    with self.assertRaises(ValueError):
      parse_switch('maybe')


if __name__ == '__main__':
  unittest.main()
