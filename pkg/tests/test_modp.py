# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

import unittest

import numpy as np
from hypothesis import given, settings, strategies as st

from coset.char.modp import charpoly_mod, inv_mod, matmul_mod, nullspace_mod, roots_mod, rref_mod

from .base import LabTestCase


P = 31

def matrices(n: int):
  return st.lists(st.integers(0, P - 1), min_size=n * n, max_size=n * n).map(
    lambda xs: np.array(xs, dtype=np.int64).reshape(n, n)
  )


class ModPTest(LabTestCase):
  def test_inverse(self):
    for a in range(1, P):
      self.assertEqual(a * inv_mod(a, P) % P, 1)
    with self.assertRaises(ZeroDivisionError):
      inv_mod(0, P)

  def test_rref(self):
    a = np.array([[2, 4, 6], [1, 2, 3], [0, 1, 1]])
    r, pivots = rref_mod(a, 7)
    self.assertEqual(pivots, [0, 1])
    self.assertArrayEqual(r, np.array([[1, 0, 1], [0, 1, 1]]))

  def test_nullspace(self):
    a = np.array([[1, 1, 0], [0, 1, 1]])
    basis = nullspace_mod(a, 5)
    self.assertEqual(basis.shape, (1, 3))
    self.assertFalse(np.any(matmul_mod(a, basis.T, 5)))

  def test_charpoly_small(self):
    # [[0, 1], [1, 0]] has t^2 - 1
    self.assertEqual(charpoly_mod(np.array([[0, 1], [1, 0]]), P), [P - 1, 0, 1])
    self.assertEqual(charpoly_mod(np.array([[3]]), P), [P - 3, 1])

  def test_charpoly_beyond_characteristic(self):
    # dimension larger than p: identity matrix over F_3 has (t - 1)^5
    coeffs = charpoly_mod(np.eye(5, dtype=np.int64), 3)
    self.assertEqual(coeffs, [2, 2, 2, 1, 1, 1])
    self.assertEqual(roots_mod(coeffs, 3), [1])

  @settings(max_examples=30)
  @given(matrices(4))
  def test_cayley_hamilton(self, a):
    coeffs = charpoly_mod(a, P)
    total = np.zeros_like(a)
    power = np.eye(4, dtype=np.int64)
    for c in coeffs:
      total = (total + c * power) % P
      power = matmul_mod(power, a, P)
    self.assertFalse(np.any(total))

  @given(matrices(3))
  def test_nullspace_is_kernel(self, a):
    basis = nullspace_mod(a, P)
    r, pivots = rref_mod(a, P)
    self.assertEqual(len(pivots) + basis.shape[0], 3)
    if basis.size:
      self.assertFalse(np.any(matmul_mod(a, basis.T, P)))

  def test_roots(self):
    # (t - 2)(t - 5) = t^2 - 7t + 10
    self.assertEqual(roots_mod([10, -7 % P, 1], P), [2, 5])

  def assertArrayEqual(self, first, second):  # noqa: N802
    self.assertEqual(first.shape, second.shape)
    self.assertTrue(np.array_equal(first, second), f'{first} != {second}')


if __name__ == '__main__':
  unittest.main()
