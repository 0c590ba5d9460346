# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

"""
Classification of a coset Nx by the conjugacy classes of G it meets.
"""

from ..group.perm import PermGroup, Permutation
from .context import GroupLab, NormalSubgroup
from .records import CosetAnalysis, InSingleClass, InTwoClasses, PreconditionError, Spread

__all__ = ['classes_met', 'classify_coset', 'coset_representatives']


def classes_met(lab: GroupLab, n: NormalSubgroup, x: Permutation) -> list[int]:
  "Classes of G meeting Nx: the class of x first, then the others in index order"
  class_of = lab.classes.class_of
  k = class_of[x]
  met = {class_of[m * x] for m in n.group.elements(lab.config.element_cap)}
  met.discard(k)
  return [k, *sorted(met)]


def classify_coset(lab: GroupLab, n: 'NormalSubgroup | PermGroup', x: Permutation) -> CosetAnalysis:
  n = lab.resolve_normal(n)
  if x not in lab.group:
    raise ValueError(f'{x} is not an element of {lab.name}')
  if x in n.group:
    raise PreconditionError(f'{x} lies in the normal subgroup; the coset Nx is N itself')
  cd = lab.classes
  met = classes_met(lab, n, x)
  k = met[0]
  match met:
    case [_]:
      verdict = InSingleClass(k)
    case [_, d]:
      verdict = InTwoClasses(k, d)
    case _:
      verdict = Spread(tuple(met))
  image = lab.coset_image(n)
  return CosetAnalysis(
    group=lab.name,
    normal_classes=n.classes,
    normal_order=n.order,
    x=x,
    x_class=k,
    verdict=verdict,
    size_k=cd.sizes[k],
    size_d=cd.sizes[verdict.d] if isinstance(verdict, InTwoClasses) else None,
    centralizer_order=image.centralizer_order(image.coset_of[x]),
    labels=cd.labels,
  )


def coset_representatives(lab: GroupLab, n: NormalSubgroup) -> list[Permutation]:
  """
  One representative per G/N-conjugacy class of nontrivial cosets: the
  canonical representative of the smallest-index G-class meeting those cosets.
  """
  image = lab.coset_image(n)
  covered: set[int] = set()
  reps = []
  for i, rep in enumerate(lab.classes.reps):
    if i in n.classes:
      continue
    coset = image.coset_of[rep]
    if coset in covered:
      continue
    covered |= image.conjugacy_orbit(coset)
    reps.append(rep)
  return reps
