# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

"""
Executable checks for cosets lying in one or two conjugacy classes.

Notation: N is normal in G, x is not in N, K = x^G, D = d^G, and C is a class
of G (usually inside N). Irr(G/N) are the rows whose kernel contains N and
Irr(G|N) the others. Every comparison is exact.
"""

from fractions import Fraction

from typing import Optional

from ..char.cyclotomic import Cyclotomic
from ..char.table import class_multiplication_coefficient, fusion_map, norm, product_row, restrict_and_decompose
from ..group.perm import PermGroup, Permutation, is_solvable, normal_closure
from .context import GroupLab, NormalSubgroup
from .cosets import classes_met, classify_coset
from .lattice import chief_series_through
from .records import Condition, Identity, InTwoClasses, PreconditionError, TheoremReport

__all__ = [
  'normal_product', 'evaluate_conditions', 'verify_thmA', 'verify_single_class_criterion',
  'find_extending_characters', 'verify_thmB', 'lemma31_check', 'verify_thmC',
]


def _two_classes(lab: GroupLab, n: NormalSubgroup, x: Permutation) -> InTwoClasses:
  analysis = classify_coset(lab, n, x)
  if not isinstance(analysis.verdict, InTwoClasses):
    raise PreconditionError(f'coset of {x} meets classes {[lab.label(i) for i in analysis.verdict.classes]}, not exactly two')
  return analysis.verdict

def _quotient_centralizer(lab: GroupLab, n: NormalSubgroup, x: Permutation) -> int:
  image = lab.coset_image(n)
  return image.centralizer_order(image.coset_of[x])

def _labels(lab: GroupLab, classes) -> list[str]:
  return [lab.label(i) for i in sorted(classes)]


def normal_product(lab: GroupLab, n: NormalSubgroup, k: int) -> frozenset[int]:
  "Classes of the set product NK, from the supports of C K over the classes C inside N"
  sc = lab.classes.structure_constants
  out: set[int] = set()
  for c in n.classes:
    out |= sc.support(c, k)
  return frozenset(out)


def _character_conditions(lab: GroupLab, n: NormalSubgroup, k: int, d: int, centralizer: int) -> list[Condition]:
  t = lab.table
  sizes = lab.classes.sizes
  sk, sd = sizes[k], sizes[d]
  c1 = [
    Identity(f'chi_{row}(x) = chi_{row}(d)', t.rows[row][k], t.rows[row][d])
    for row in t.rows_over_trivial(n.classes)
  ]
  c2 = [
    Identity(f'{sk} chi_{row}(x) + {sd} chi_{row}(d) = 0', sk * t.rows[row][k] + sd * t.rows[row][d], 0)
    for row in t.rows_over(n.classes)
  ]
  c3 = [Identity('|C_{G/N}(Nx)| = |G|/(|K|+|D|)', centralizer, Fraction(lab.order, sk + sd))]
  return [
    Condition.from_identities('c1', c1, 'chi(x) = chi(d) on Irr(G/N)'),
    Condition.from_identities('c2', c2, '|K| chi(x) + |D| chi(d) = 0 on Irr(G|N)'),
    Condition.from_identities('c3', c3, 'centralizer of Nx in G/N'),
  ]


def evaluate_conditions(lab: GroupLab, n: NormalSubgroup, x: Permutation, d: int) -> tuple[bool, bool, bool]:
  """
  The three equivalent conditions for the pair of classes (x^G, D), each
  evaluated on its own: (a) from the coset scan, (b) from structure-constant
  supports, (c) from the character table and the centralizer in G/N.
  """
  k = lab.classes.class_of[x]
  if d == k:
    raise PreconditionError('D must differ from the class of x')
  a = set(classes_met(lab, n, x)) == {k, d}
  b = normal_product(lab, n, k) == normal_product(lab, n, d) == frozenset({k, d})
  c = all(cond.passed for cond in _character_conditions(lab, n, k, d, _quotient_centralizer(lab, n, x)))
  return a, b, c


def _support_from_characters(lab: GroupLab, k: int, c: int) -> frozenset[int]:
  t = lab.table
  return frozenset(i for i in range(len(lab.classes)) if class_multiplication_coefficient(t, k, c, i))


def verify_thmA(lab: GroupLab, n: 'NormalSubgroup | PermGroup', x: Permutation) -> TheoremReport:
  n = lab.resolve_normal(n)
  verdict = _two_classes(lab, n, x)
  k, d = verdict.k, verdict.d
  cd = lab.classes
  sk, sd = cd.sizes[k], cd.sizes[d]
  centralizer = _quotient_centralizer(lab, n, x)
  report = TheoremReport('A', data={
    'K': lab.label(k), 'D': lab.label(d), 'size_K': sk, 'size_D': sd,
    'normal_order': n.order, 'centralizer_order': centralizer,
  })

  met = classes_met(lab, n, x)
  report.add(Condition.from_identities('a', [
    Identity('classes met by Nx', _labels(lab, met), _labels(lab, {k, d})),
  ], 'Nx lies in K u D but not in K'))

  kd = _labels(lab, {k, d})
  report.add(Condition.from_identities('b', [
    Identity('NK', _labels(lab, normal_product(lab, n, k)), kd),
    Identity('ND', _labels(lab, normal_product(lab, n, d)), kd),
  ], 'NK = ND = K u D'))

  for cond in _character_conditions(lab, n, k, d, centralizer):
    report.add(cond)

  t = lab.table
  by_characters = sum(
    (t.rows[row][k].abs_square() for row in t.rows_over_trivial(n.classes)),
    Cyclotomic(),
  )
  report.add(Condition.from_identities('c3_characters', [
    Identity('sum over Irr(G/N) of |chi(x)|^2', by_characters, centralizer),
  ], 'centralizer of Nx from the characters of G/N'))

  # (c) => (b): supports of K C for C inside N, from the character formula alone
  nk_chars: set[int] = set()
  nd_chars: set[int] = set()
  for c in n.classes:
    nk_chars |= _support_from_characters(lab, k, c)
    nd_chars |= _support_from_characters(lab, d, c)
  report.add(Condition.from_identities('b_from_characters', [
    Identity('NK from characters', _labels(lab, nk_chars), kd),
    Identity('ND from characters', _labels(lab, nd_chars), kd),
  ], 'set products re-derived from the character table'))

  sc = cd.structure_constants
  m1 = sum(sc(c, k, k) for c in n.classes)
  m2 = sum(sc(c, k, d) for c in n.classes)
  report.data.update(m1=m1, m2=m2)
  report.add(Condition.from_identities('m1_equals_m2', [
    Identity('coefficients of K and D in K^ N^', m1, m2),
  ], 'K^ N^ = m1 K^ + m2 D^ with m1 = m2'))
  return report


def verify_single_class_criterion(lab: GroupLab, n: 'NormalSubgroup | PermGroup', x: Permutation) -> TheoremReport:
  "Nx lies in one class iff chi(x) = 0 for every chi in Irr(G|N); both sides evaluated independently"
  n = lab.resolve_normal(n)
  if x in n.group:
    raise PreconditionError(f'{x} lies in the normal subgroup')
  t = lab.table
  cd = lab.classes
  k = cd.class_of[x]
  set_side = len(classes_met(lab, n, x)) == 1
  vanishing = [row for row in t.rows_over(n.classes) if not t.rows[row][k]]
  character_side = len(vanishing) == len(t.rows_over(n.classes))
  report = TheoremReport('2.2', data={
    'K': lab.label(k), 'single_class': set_side, 'vanishes_on_irr_g_n': character_side,
  })
  report.add(Condition.from_identities('biconditional', [
    Identity('Nx in one class <=> chi(x) = 0 on Irr(G|N)', set_side, character_side),
  ]))
  if character_side:
    centralizer = _quotient_centralizer(lab, n, x)
    report.add(Condition.from_identities('centralizers', [
      Identity('|C_G(x)| = |C_{G/N}(Nx)|', cd.centralizer_order(k), centralizer),
    ]))
    report.add(Condition.from_identities('kc_equals_k', [
      Identity(f'K C for C = {lab.label(c)} from characters', _labels(lab, _support_from_characters(lab, k, c)), [lab.label(k)])
      for c in sorted(n.classes)
    ], 'KC = K for every class C inside N'))
  return report


def find_extending_characters(lab: GroupLab, n: 'NormalSubgroup | PermGroup') -> list[tuple[int, tuple[int, ...]]]:
  "(theta, extensions of theta) for every theta in Irr(N) that extends to G, in row order of N's table"
  n = lab.resolve_normal(n)
  t = lab.table
  t_n = lab.subgroup_lab(n).table
  fusion = fusion_map(t, t_n)
  out = []
  for theta, theta_row in enumerate(t_n.rows):
    exts = tuple(
      chi for chi in range(len(t))
      if t.degrees[chi] == t_n.degrees[theta]
      and all(t.rows[chi][g_cls] == value for g_cls, value in zip(fusion, theta_row))
    )
    if exts:
      out.append((theta, exts))
  return out


def _find_row(lab: GroupLab, values: tuple[Cyclotomic, ...]) -> Optional[int]:
  for row, chi in enumerate(lab.table.rows):
    if all(a == b for a, b in zip(chi, values)):
      return row
  return None


def verify_thmB(
  lab: GroupLab,
  n: 'NormalSubgroup | PermGroup',
  x: Permutation,
  theta: Optional[int] = None,
  *,
  corollary: bool = False,
) -> TheoremReport:
  n = lab.resolve_normal(n)
  verdict = _two_classes(lab, n, x)
  k, d = verdict.k, verdict.d
  extenders = dict(find_extending_characters(lab, n))
  nontrivial = [th for th in extenders if th != 0]
  if theta is None:
    if not nontrivial:
      raise PreconditionError('no nontrivial irreducible character of N extends to G')
    theta = nontrivial[0]
  elif theta not in extenders or theta == 0:
    raise PreconditionError(f'theta_{theta} is not a nontrivial extendible character of N')

  t = lab.table
  sub = lab.subgroup_lab(n)
  sk, sd = lab.classes.sizes[k], lab.classes.sizes[d]
  exts = extenders[theta]
  report = TheoremReport('B', data={
    'K': lab.label(k), 'D': lab.label(d), 'size_K': sk, 'size_D': sd,
    'theta': theta, 'theta_degree': sub.table.degrees[theta], 'extensions': list(exts),
    'extendible': sorted(extenders),
  })

  report.add(Condition.from_identities('sizes_equal', [Identity('|K| = |D|', sk, sd)]))

  values = []
  identity_sums = []
  for chi in exts:
    vx, vd = t.rows[chi][k], t.rows[chi][d]
    values.append(Identity(f'|chi_{chi}(x)|^2 = 1', vx.abs_square(), 1))
    values.append(Identity(f'chi_{chi}(x) = -chi_{chi}(d)', vx, -vd))
    identity_sums.append(Identity(
      f'|K| |chi_{chi}(x)|^2 + |D| |chi_{chi}(d)|^2 = |K| + |D|',
      sk * vx.abs_square() + sd * vd.abs_square(), sk + sd,
    ))
  report.add(Condition.from_identities('extension_values', values, 'values of every extension on x and d'))
  report.add(Condition.from_identities('coset_norm_sum', identity_sums, 'sum of |chi|^2 over K u D'))

  decompositions = [restrict_and_decompose(t, n.group, sub.table, row) for row in range(len(t))]
  over_theta = [row for row, dec in enumerate(decompositions) if theta in dec]
  hat = exts[0]
  products = [product_row(t, hat, beta) for beta in t.rows_over_trivial(n.classes)]
  matched = [_find_row(lab, p) for p in products]
  gallagher = [Identity(f'norm of chi_{hat} * beta_{i}', norm(t, p), 1) for i, p in enumerate(products)]
  gallagher.append(Identity('products that are irreducible rows', sum(m is not None for m in matched), len(products)))
  gallagher.append(Identity('distinct products', len(set(matched)), len(products)))
  gallagher.append(Identity('rows over theta', sorted(m for m in matched if m is not None), over_theta))
  report.add(Condition.from_identities('gallagher', gallagher, 'Irr(G|theta) = {theta^ beta : beta in Irr(G/N)}'))

  vanishing = []
  for row, dec in enumerate(decompositions):
    if 0 not in dec and theta not in dec:
      vanishing.append(Identity(f'chi_{row}(x) = 0', t.rows[row][k], 0))
      vanishing.append(Identity(f'chi_{row}(d) = 0', t.rows[row][d], 0))
  report.add(Condition.from_identities('vanishing', vanishing, 'rows over neither 1_N nor theta vanish on x and d'))

  report.add(Condition.from_identities('unique_extender', [
    Identity('nontrivial extendible characters of N', nontrivial, [theta]),
  ]))

  if corollary:
    report.add(Condition.from_identities('quotient_values_equal', [
      Identity(f'chi_{row}(x) = chi_{row}(d)', t.rows[row][k], t.rows[row][d])
      for row in t.rows_over_trivial(n.classes)
    ], 'chi(x) = chi(d) on Irr(G/N)'))
    report.add(Condition.from_identities(
      'rows_over_theta', values + gallagher, 'extension values and the form of the rows over theta',
    ))
    report.add(Condition.from_identities('vanishing_off_theta', vanishing, 'chi(x) = chi(d) = 0 off 1_N and theta'))
  return report


def lemma31_check(
  lab: GroupLab,
  k: int,
  c: int,
  *,
  d: Optional[int] = None,
  a: Optional[int] = None,
  b: Optional[int] = None,
  extension: Optional[int] = None,
) -> TheoremReport:
  """
  The product KC against the character identity
  |K||C| chi(x) chi(c) = chi(1) (a |K| chi(x) + b |D| chi(d)), a |K| + b |D| = |K||C|.
  With d, a and b given, the identity is checked as stated and the support of
  KC is re-derived from it. `extension` is a row extending a character of the
  normal subgroup containing C, for which chi(c) = (a - b) chi(1) / |C|.
  """
  cd = lab.classes
  t = lab.table
  sc = cd.structure_constants
  support = sc.support(k, c)
  sk, sc_size = cd.sizes[k], cd.sizes[c]
  report = TheoremReport('lemma31', data={'K': lab.label(k), 'C': lab.label(c), 'support': _labels(lab, support)})

  given = d is not None and a is not None and b is not None
  if not given:
    others = sorted(support - {k})
    if len(support) > 2 or len(others) > 1:
      report.applicable = False
      report.reason = f'KC meets {len(support)} classes'
      return report
    d = others[0] if others else None
    a = sc(k, c, k)
    b = sc(k, c, d) if d is not None else 0
  sd = cd.sizes[d] if d is not None else 0
  report.data.update(D=lab.label(d) if d is not None else None, a=a, b=b)

  if support == {k}:
    report.data['branch'] = 'KC = K'
  elif d is not None and support == {d}:
    report.data['branch'] = 'KC = D'
  else:
    report.data['branch'] = 'KC = K u D'

  report.add(Condition.from_identities('counting', [
    Identity('a|K| + b|D| = |K||C|', a * sk + b * sd, sk * sc_size),
  ]))

  identities = []
  for row, chi in enumerate(t.rows):
    lhs = sk * sc_size * chi[k] * chi[c]
    rhs = t.degrees[row] * (a * sk * chi[k] + (b * sd * chi[d] if d is not None else 0))
    identities.append(Identity(f'row {row}', lhs, rhs))
  report.add(Condition.from_identities('character_identity', identities))

  # Converse: coefficients of K^ C^ from the left-hand side divided by chi(1), via column orthogonality
  derived = {}
  for i in range(len(cd)):
    total = Cyclotomic()
    for deg, row, conj in zip(t.degrees, t.rows, t.conjugate_rows):
      total += (sk * sc_size * row[k] * row[c] * conj[i]) / deg
    value = total / lab.order
    if value:
      derived[i] = value.to_fraction()
  expected = {k: a} if a else {}
  if d is not None and b:
    expected[d] = b
  report.add(Condition.from_identities('converse', [
    Identity('coefficients re-derived from the identity', derived, expected),
    Identity('support re-derived from the identity', _labels(lab, derived), _labels(lab, support)),
  ]))

  if d is not None and sk == sd:
    if report.data['branch'] == 'KC = K u D':
      report.add(Condition.from_identities('equal_sizes', [Identity('a + b = |C|', a + b, sc_size)]))
    elif report.data['branch'] == 'KC = D' and k != 0 and c != 0:
      generated = normal_closure(lab.group, [cd.reps[c]])
      report.add(Condition('generated_by_C_solvable', is_solvable(generated),
                           f'<C> has order {generated.order}',
                           None if is_solvable(generated) else {'order': generated.order}))

  if extension is not None and d is not None:
    chi = t.rows[extension]
    report.add(Condition.from_identities('extension_value_on_C', [
      Identity(f'chi_{extension}(c) = (a - b) chi(1) / |C|', chi[c], Fraction((a - b) * t.degrees[extension], sc_size)),
    ]))
  return report


def _steinberg_row(lab: GroupLab, n: NormalSubgroup, degree: int) -> tuple[Optional[int], list[int]]:
  t_n = lab.subgroup_lab(n).table
  rows = [row for row, deg in enumerate(t_n.degrees) if deg == degree]
  return (rows[0] if len(rows) == 1 else None), rows


def verify_thmC(lab: GroupLab, n: 'NormalSubgroup | PermGroup', x: Permutation) -> TheoremReport:
  n = lab.resolve_normal(n)
  verdict = _two_classes(lab, n, x)
  k, d = verdict.k, verdict.d
  sizes = lab.classes.sizes
  report = TheoremReport('C', data={
    'K': lab.label(k), 'D': lab.label(d), 'size_K': sizes[k], 'size_D': sizes[d], 'normal_order': n.order,
  })
  if is_solvable(n.group):
    report.applicable = False
    report.reason = 'N is solvable'
    return report

  report.add(Condition.from_identities('sizes_equal', [Identity('|K| = |D|', sizes[k], sizes[d])]))

  factors = chief_series_through(lab, n)
  inside = [f for f in factors if f.upper.classes <= n.classes]
  report.data['chief_factors'] = [f.to_dict() for f in inside]
  nonabelian = [f for f in inside if not f.abelian]
  bad = [f for f in nonabelian if f.recognition is None or f.recognition.odd_lie is None]
  report.add(Condition(
    'odd_lie_type', not bad,
    'non-abelian chief factors inside N are simple groups of Lie type in odd characteristic (powers allowed)',
    {'factor': bad[0].to_dict()} if bad else None,
  ))

  theta = None
  if len(factors) and factors[0].upper.classes == n.classes and nonabelian and not bad:
    recognition = nonabelian[0].recognition
    degree = recognition.odd_lie.steinberg_degree ** recognition.power
    theta, candidates = _steinberg_row(lab, n, degree)
    report.data['steinberg_degree'] = degree
    report.add(Condition.from_identities('steinberg_unique', [
      Identity(f'rows of N of degree {degree}', len(candidates), 1),
    ]))
    extenders = [th for th, _ in find_extending_characters(lab, n) if th != 0]
    report.add(Condition.from_identities('steinberg_extends', [
      Identity('nontrivial extendible characters of N', extenders, [theta] if theta is not None else []),
    ], 'the Steinberg character is the unique nontrivial extendible character'))

  try:
    b_report = verify_thmB(lab, n, x, theta, corollary=True)
  except PreconditionError as err:
    report.add(Condition('theorem_b', False, str(err), {'error': str(err)}))
  else:
    for cond in b_report.conditions:
      cond.name = f'B.{cond.name}'
      report.add(cond)
  return report
