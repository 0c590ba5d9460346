# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

"""
Dense linear algebra over the prime field F_p on int64 numpy arrays.

Every function reduces its inputs modulo p and returns canonical residues in
[0, p). Callers keep p small enough that p^2 times the matrix dimension fits
in an int64.
"""

import numpy as np

__all__ = ['mod_p', 'inv_mod', 'matmul_mod', 'rref_mod', 'nullspace_mod', 'charpoly_mod', 'roots_mod']


def mod_p(a: np.ndarray, p: int) -> np.ndarray:
  return np.asarray(a % p, dtype=np.int64)

def inv_mod(a: int, p: int) -> int:
  a = int(a) % p
  if a == 0:
    raise ZeroDivisionError(f'0 has no inverse modulo {p}')
  return pow(a, p - 2, p)

def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
  return mod_p(a @ b, p)


def rref_mod(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
  "Reduced row echelon form over F_p; returns (R, pivot columns). Zero rows of R are dropped."
  r_mat = mod_p(np.array(a, dtype=np.int64, copy=True), p)
  m, n = r_mat.shape
  pivots: list[int] = []
  row = 0
  for col in range(n):
    if row >= m:
      break
    nz = np.flatnonzero(r_mat[row:, col])
    if nz.size == 0:
      continue
    piv = row + int(nz[0])
    if piv != row:
      r_mat[[row, piv]] = r_mat[[piv, row]]
    r_mat[row] = mod_p(r_mat[row] * inv_mod(r_mat[row, col], p), p)
    factors = r_mat[:, col].copy()
    factors[row] = 0
    r_mat = mod_p(r_mat - np.outer(factors, r_mat[row]), p)
    pivots.append(col)
    row += 1
  return r_mat[:row], pivots


def nullspace_mod(a: np.ndarray, p: int) -> np.ndarray:
  "Basis of the right null space {x : a x = 0} over F_p, one basis vector per row"
  a = mod_p(np.atleast_2d(a), p)
  n = a.shape[1]
  r_mat, pivots = rref_mod(a, p)
  pivot_set = set(pivots)
  free = [j for j in range(n) if j not in pivot_set]
  basis = np.zeros((len(free), n), dtype=np.int64)
  for i, f in enumerate(free):
    basis[i, f] = 1
    for row, pc in enumerate(pivots):
      basis[i, pc] = (-r_mat[row, f]) % p
  return basis


def charpoly_mod(a: np.ndarray, p: int) -> list[int]:
  """
  Characteristic polynomial det(t I - a) over F_p, as coefficients lowest
  degree first. Uses the division-free Berkowitz recursion: peel off the first
  row and column, and multiply the Toeplitz matrices of the successive corners.
  """
  a = mod_p(a, p)
  n = a.shape[0]
  toeplitz = []
  while a.shape[0] > 1:
    m = a.shape[0]
    corner, r_row, c_col, sub = int(a[0, 0]), a[0, 1:], a[1:, 0], a[1:, 1:]
    diags = [1, -corner % p]
    v = c_col
    for _ in range(m - 1):
      diags.append(-int(r_row @ v) % p)
      v = matmul_mod(sub, v, p)
    t = np.zeros((m + 1, m), dtype=np.int64)
    for j in range(m):
      t[j:, j] = diags[:m + 1 - j]
    toeplitz.append(t)
    a = sub
  vec = np.array([1, -int(a[0, 0]) % p] if n else [1], dtype=np.int64)
  for t in reversed(toeplitz):
    vec = matmul_mod(t, vec, p)
  return [int(c) for c in reversed(vec)]

def roots_mod(coeffs: list[int], p: int) -> list[int]:
  "Distinct roots in F_p of the polynomial with the given coefficients (lowest degree first)"
  xs = np.arange(p, dtype=np.int64)
  acc = np.zeros(p, dtype=np.int64)
  for c in reversed(coeffs):
    acc = (acc * xs + c) % p
  return [int(x) for x in np.flatnonzero(acc == 0)]
