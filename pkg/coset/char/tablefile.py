# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

"""
Plain-text character table format (also used for golden files).

Example::

  # comments run to the end of the line
  format 1
  group sym:3
  order 6
  exponent 6
  classes 1a 2a 3a
  sizes 1 3 2
  orders 1 2 3
  power 2 : 0 0 2
  power 3 : 0 1 0
  chi 1 : [0:1] [0:1] [0:1]
  chi 1 : [0:1] [0:-1] [0:1]
  chi 2 : [0:2] [] [0:-1]

Values are sparse lists `[k:c,...]` meaning sum c * z_e^k for e = exponent, or
plain rationals (`-1`, `1/2`). `[]` is zero. Exported values are written in
the canonical reduced form; parsed values may use any exponent k.
`classes` and `power` lines are optional.
"""

import math
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from sympy import primefactors

from typing import Optional, Sequence

from .cyclotomic import Cyclotomic
from .table import CharTable

__all__ = [
  'FORMAT_VERSION', 'TableFormatError', 'TableFile', 'TableDiff',
  'table_file_from', 'format_table', 'export_table', 'parse_table', 'load_table',
  'validate_table', 'compare_tables',
]


FORMAT_VERSION = 1


class TableFormatError(ValueError):
  def __init__(self, message: str, line: int, column: int):
    super().__init__(f'line {line}, column {column}: {message}')
    self.message = message
    self.line = line
    self.column = column


@dataclass
class TableFile:
  order: int
  exponent: int
  sizes: tuple[int, ...]
  orders: tuple[int, ...]
  rows: tuple[tuple[Cyclotomic, ...], ...]
  degrees: tuple[int, ...]
  group: Optional[str] = None
  labels: Optional[tuple[str, ...]] = None
  powers: dict[int, tuple[int, ...]] = field(default_factory=dict)


def table_file_from(t: CharTable) -> TableFile:
  cd = t.classes
  powers = {
    p: tuple(cd.power_map(i, p) for i in range(len(cd)))
    for p in primefactors(t.order)
  }
  return TableFile(
    order=t.order,
    exponent=t.conductor,
    sizes=cd.sizes,
    orders=cd.orders,
    rows=t.rows,
    degrees=t.degrees,
    group=t.group.name,
    labels=cd.labels,
    powers=powers,
  )


def format_table(tf: TableFile) -> str:
  e = tf.exponent
  lines = [f'format {FORMAT_VERSION}']
  if tf.group is not None:
    lines.append(f'group {tf.group}')
  lines.append(f'order {tf.order}')
  lines.append(f'exponent {e}')
  if tf.labels is not None:
    lines.append('classes ' + ' '.join(tf.labels))
  lines.append('sizes ' + ' '.join(map(str, tf.sizes)))
  lines.append('orders ' + ' '.join(map(str, tf.orders)))
  for p, images in sorted(tf.powers.items()):
    lines.append(f'power {p} : ' + ' '.join(map(str, images)))
  for degree, row in zip(tf.degrees, tf.rows):
    lines.append(f'chi {degree} : ' + ' '.join(v.sparse(e) for v in row))
  return '\n'.join(lines) + '\n'

def export_table(t: CharTable) -> str:
  return format_table(table_file_from(t))


############################################################################
# Parsing

_TOKEN_RE = re.compile(r'\S+')

def _tokens(line: str) -> list[tuple[str, int]]:
  "Whitespace-separated tokens with their 1-based columns, comments removed"
  hash_pos = line.find('#')
  if hash_pos >= 0:
    line = line[:hash_pos]
  return [(m.group(), m.start() + 1) for m in _TOKEN_RE.finditer(line)]

def _int(token: str, lineno: int, column: int, what: str) -> int:
  try:
    return int(token)
  except ValueError:
    raise TableFormatError(f'expected an integer {what}, got {token!r}', lineno, column) from None

def _value(token: str, e: int, lineno: int, column: int) -> Cyclotomic:
  if not token.startswith('['):
    try:
      return Cyclotomic.rational(Fraction(token))
    except (ValueError, ZeroDivisionError):
      raise TableFormatError(f'bad character value {token!r}', lineno, column) from None
  if not token.endswith(']'):
    raise TableFormatError(f'unterminated value {token!r} (values may not contain spaces)', lineno, column)
  terms: dict[int, Fraction] = {}
  body = token[1:-1]
  if body:
    for part in body.split(','):
      k, sep, c = part.partition(':')
      try:
        if not sep:
          raise ValueError
        k, c = int(k), Fraction(c)
      except (ValueError, ZeroDivisionError):
        raise TableFormatError(f'bad term {part!r} in value {token!r}', lineno, column) from None
      terms[k] = terms.get(k, 0) + c
  return Cyclotomic(e, terms)

def _after_colon(tokens: list[tuple[str, int]], lineno: int) -> tuple[tuple[str, int], list[tuple[str, int]]]:
  "Split `KEYWORD ARG : items...` into (ARG, items)"
  if len(tokens) < 3 or tokens[2][0] != ':':
    column = tokens[2][1] if len(tokens) > 2 else tokens[-1][1] + len(tokens[-1][0])
    raise TableFormatError(f"expected '{tokens[0][0]} N : ...'", lineno, column)
  return tokens[1], tokens[3:]


def parse_table(text: str) -> TableFile:
  header: dict[str, list[tuple[str, int]]] = {}
  header_lines: dict[str, int] = {}
  powers: dict[int, tuple[int, ...]] = {}
  raw_rows: list[tuple[int, tuple[str, int], list[tuple[str, int]]]] = []
  lineno = 0
  for lineno, line in enumerate(text.splitlines(), start=1):
    tokens = _tokens(line)
    if not tokens:
      continue
    keyword, column = tokens[0]
    match keyword:
      case 'format' | 'group' | 'order' | 'exponent' | 'classes' | 'sizes' | 'orders':
        if raw_rows:
          raise TableFormatError(f'{keyword!r} after the first character row', lineno, column)
        if keyword in header:
          raise TableFormatError(f'duplicate {keyword!r} line', lineno, column)
        if len(tokens) < 2:
          raise TableFormatError(f'{keyword!r} needs a value', lineno, column + len(keyword))
        header[keyword] = tokens[1:]
        header_lines[keyword] = lineno
      case 'power':
        (p_tok, p_col), items = _after_colon(tokens, lineno)
        p = _int(p_tok, lineno, p_col, 'prime')
        if p in powers:
          raise TableFormatError(f'duplicate power map for {p}', lineno, p_col)
        powers[p] = tuple(_int(tok, lineno, col, 'class index') for tok, col in items)
        header_lines[f'power {p}'] = lineno
      case 'chi':
        deg_tok, items = _after_colon(tokens, lineno)
        raw_rows.append((lineno, deg_tok, items))
      case _:
        raise TableFormatError(f'unknown keyword {keyword!r}', lineno, column)

  end = lineno + 1
  for required in ('format', 'order', 'exponent', 'sizes', 'orders'):
    if required not in header:
      raise TableFormatError(f'missing {required!r} line', end, 1)

  def single(key: str) -> tuple[str, int]:
    tokens = header[key]
    if len(tokens) != 1:
      raise TableFormatError(f'{key!r} takes exactly one value', header_lines[key], tokens[1][1])
    return tokens[0]

  tok, col = single('format')
  version = _int(tok, header_lines['format'], col, 'format version')
  if version != FORMAT_VERSION:
    raise TableFormatError(f'unsupported format version {version}', header_lines['format'], col)
  tok, col = single('order')
  order = _int(tok, header_lines['order'], col, 'group order')
  tok, col = single('exponent')
  e = _int(tok, header_lines['exponent'], col, 'exponent')
  if order < 1 or e < 1:
    raise TableFormatError('order and exponent must be positive', header_lines['order'], 1)
  group = ' '.join(tok for tok, _ in header['group']) if 'group' in header else None
  sizes = tuple(_int(tok, header_lines['sizes'], col, 'class size') for tok, col in header['sizes'])
  orders = tuple(_int(tok, header_lines['orders'], col, 'element order') for tok, col in header['orders'])
  for key, values in (('sizes', sizes), ('orders', orders)):
    for value, (_, col) in zip(values, header[key]):
      if value < 1:
        raise TableFormatError(f'{key} entries must be positive, got {value}', header_lines[key], col)
  r = len(sizes)
  if len(orders) != r:
    raise TableFormatError(f'{len(orders)} element orders for {r} classes', header_lines['orders'], 1)
  labels = None
  if 'classes' in header:
    labels = tuple(tok for tok, _ in header['classes'])
    if len(labels) != r:
      raise TableFormatError(f'{len(labels)} class labels for {r} classes', header_lines['classes'], 1)
  for p, images in powers.items():
    line = header_lines[f'power {p}']
    if len(images) != r:
      raise TableFormatError(f'power map for {p} has {len(images)} entries for {r} classes', line, 1)
    if any(not 0 <= k < r for k in images):
      raise TableFormatError(f'power map for {p} refers to a missing class', line, 1)

  rows = []
  degrees = []
  for line, (deg_tok, deg_col), items in raw_rows:
    degrees.append(_int(deg_tok, line, deg_col, 'degree'))
    if len(items) != r:
      column = items[-1][1] if items else deg_col
      raise TableFormatError(f'character row has {len(items)} values for {r} classes', line, column)
    rows.append(tuple(_value(tok, e, line, col) for tok, col in items))

  return TableFile(
    order=order, exponent=e, sizes=sizes, orders=orders,
    rows=tuple(rows), degrees=tuple(degrees),
    group=group, labels=labels, powers=powers,
  )


def load_table(path: str) -> TableFile:
  with open(path, 'r') as fp:
    return parse_table(fp.read())


############################################################################
# Validation

def _inner(sizes: Sequence[int], order: int, u: Sequence[Cyclotomic], v: Sequence[Cyclotomic]) -> Cyclotomic:
  return sum((size * a * b.conjugate() for size, a, b in zip(sizes, u, v)), Cyclotomic()) / order


def validate_table(tf: TableFile) -> list[str]:
  "Every violated invariant, with a witness; empty when the table is a valid character table"
  problems = []
  r = len(tf.sizes)
  if sum(tf.sizes) != tf.order:
    problems.append(f'class sizes sum to {sum(tf.sizes)}, expected {tf.order}')
  if r and (tf.sizes[0] != 1 or tf.orders[0] != 1):
    problems.append('class 0 is not the identity class')
  for i, size in enumerate(tf.sizes):
    if size < 1 or tf.order % size:
      problems.append(f'class {i} has size {size}, which does not divide {tf.order}')
  if any(size < 1 for size in tf.sizes) or any(o < 1 for o in tf.orders):
    return problems
  if r and math.lcm(*tf.orders) != tf.exponent:
    problems.append(f'element orders have lcm {math.lcm(*tf.orders)}, but the exponent is {tf.exponent}')
  for p, images in sorted(tf.powers.items()):
    for i, k in enumerate(images):
      o = tf.orders[i]
      if tf.orders[k] != o // math.gcd(o, p):
        problems.append(f'power map {p}: class {i} of order {o} maps to class {k} of order {tf.orders[k]}')
  if len(tf.rows) != r:
    problems.append(f'{len(tf.rows)} character rows for {r} classes')
  if not any(all(v == 1 for v in row) for row in tf.rows):
    problems.append('no principal character')
  for t, (degree, row) in enumerate(zip(tf.degrees, tf.rows)):
    if row[0] != degree:
      problems.append(f'row {t} declares degree {degree} but has value {row[0]} at the identity')
    if degree < 1 or tf.order % degree:
      problems.append(f'degree {degree} of row {t} does not divide {tf.order}')
    for i, v in enumerate(row):
      if not v.is_integral():
        problems.append(f'value {v} of row {t} at class {i} is not an algebraic integer')
  if sum(d * d for d in tf.degrees) != tf.order:
    problems.append(f'sum of squared degrees is {sum(d * d for d in tf.degrees)}, expected {tf.order}')
  for a in range(len(tf.rows)):
    for b in range(a, len(tf.rows)):
      ip = _inner(tf.sizes, tf.order, tf.rows[a], tf.rows[b])
      if ip != (1 if a == b else 0):
        problems.append(f'row orthogonality: rows {a} and {b} have inner product {ip}')
  conj_rows = [[v.conjugate() for v in row] for row in tf.rows]
  for i in range(r):
    for j in range(i, r):
      total = sum((row[i] * conj[j] for row, conj in zip(tf.rows, conj_rows)), Cyclotomic())
      expected = tf.order // tf.sizes[i] if i == j else 0
      if total != expected:
        problems.append(f'column orthogonality: columns {i} and {j} sum to {total}, expected {expected}')
  return problems


############################################################################
# Comparison

@dataclass
class TableDiff:
  "Result of comparing two tables up to row order and relabelling of classes"
  matches: bool
  column_map: Optional[tuple[int, ...]] = None  # class of the first table -> class of the second
  row_map: Optional[tuple[int, ...]] = None
  problems: list[str] = field(default_factory=list)


def _signatures(tf: TableFile) -> list[tuple[int, int]]:
  return list(zip(tf.orders, tf.sizes))

def compare_tables(a: TableFile, b: TableFile) -> TableDiff:
  """
  Find a bijection of classes (preserving element order and class size) and
  of rows under which the two tables agree exactly.
  """
  if a.order != b.order:
    return TableDiff(False, problems=[f'group orders differ: {a.order} vs {b.order}'])
  sig_a, sig_b = _signatures(a), _signatures(b)
  if Counter(sig_a) != Counter(sig_b):
    return TableDiff(False, problems=['classes differ in element orders or sizes'])
  if len(a.rows) != len(b.rows):
    return TableDiff(False, problems=[f'row counts differ: {len(a.rows)} vs {len(b.rows)}'])

  e = math.lcm(a.exponent, b.exponent)
  ka = [[v.key(e) for v in row] for row in a.rows]
  kb = [[v.key(e) for v in row] for row in b.rows]
  r = len(sig_a)
  candidates = [[j for j in range(r) if sig_b[j] == sig_a[i]] for i in range(r)]
  mapping: list[int] = []
  used = [False] * r

  def consistent() -> bool:
    n = len(mapping)
    left = Counter(tuple(row[c] for c in range(n)) for row in ka)
    right = Counter(tuple(row[c] for c in mapping) for row in kb)
    return left == right

  def extend() -> bool:
    i = len(mapping)
    if i == r:
      return True
    for j in candidates[i]:
      if used[j]:
        continue
      mapping.append(j)
      used[j] = True
      if consistent() and extend():
        return True
      mapping.pop()
      used[j] = False
    return False

  if not extend():
    return TableDiff(False, problems=['no relabelling of classes makes the rows agree up to order'])

  full_b = [tuple(row[c] for c in mapping) for row in kb]
  taken = [False] * len(full_b)
  row_map = []
  for row in ka:
    s = next(s for s in range(len(full_b)) if not taken[s] and full_b[s] == tuple(row))
    taken[s] = True
    row_map.append(s)
  return TableDiff(True, column_map=tuple(mapping), row_map=tuple(row_map))
