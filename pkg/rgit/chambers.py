#!/usr/bin/python
#
# Copyright 2026, the rgit developers.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Walls and chambers of the hypersimplex of linearizations."""

import dataclasses
import functools
import itertools
import logging

from fractions import Fraction

from rgit import config
from rgit import errors
from rgit import exactgeom
from rgit import moment
from rgit import stability


MAXIMUM_POINTS = 7
MAXIMUM_NAIVE_POINTS = 5

SIGN_SYMBOLS = {-1: "-", 0: "0", 1: "+"}

logger = logging.getLogger(__name__)


def _sign(value):
  if value > 0:
    return 1
  if value < 0:
    return -1
  return 0


@dataclasses.dataclass(frozen=True)
class Wall(object):
  """Wall sum_{i in J} alpha_i = d of the hypersimplex with sum n.

  Attributes:
    subset (tuple[int]): J, 1-based and containing the label 1.
    d (int): rank bound.
    m (int): number of weights.
    n (int): weight sum.
    relevant (bool): True if the wall meets the interior.
    facet (bool): True if the wall is a facet alpha_i = 1.
  """

  subset: tuple
  d: int
  m: int
  n: int
  relevant: bool
  facet: bool

  @property
  def key(self):
    """str: index set key such as "12"."""
    return moment.subset_key(self.subset)

  @property
  def hyperplane(self):
    """Hyperplane: the canonical wall hyperplane."""
    return exactgeom.Hyperplane.canonical(
        moment.indicator(self.subset, self.m), self.d)

  def value(self, alpha):
    """Computes sum_J alpha - d."""
    alpha = exactgeom.QVec(alpha)
    return sum(
        (alpha[index - 1] for index in self.subset), Fraction(0)) - self.d

  def sign(self, alpha):
    return _sign(self.value(alpha))

  def to_dict(self):
    return {
        "J": list(self.subset),
        "d": self.d,
        "relevant": self.relevant,
        "facet": self.facet}


def _interior_constraints(m, n):
  """Constraints of variables (alpha, t): t <= alpha_i <= 1 - t, sum = n."""
  dimension = m + 1
  constraints = []
  for index in range(m):
    lower = [0] * dimension
    lower[index] = 1
    lower[m] = -1
    constraints.append(exactgeom.Constraint.greater_equal(lower, 0))

    upper = [0] * dimension
    upper[index] = 1
    upper[m] = 1
    constraints.append(exactgeom.Constraint.less_equal(upper, 1))

  total = [1] * m + [0]
  constraints.append(exactgeom.Constraint.equal(total, n))
  constraints.append(
      exactgeom.Constraint.less_equal(exactgeom.QVec.unit(dimension, m), 1))
  return constraints


def _wall_row(subset, m, scale=1, slack=0):
  row = [0] * (m + 1)
  for index in subset:
    row[index - 1] = scale
  row[m] = slack
  return row


def _maximize_margin(m, n, extra):
  objective = exactgeom.QVec.unit(m + 1, m)
  result = exactgeom.lp_maximize(
      objective, _interior_constraints(m, n) + list(extra))
  if result.status != "optimal" or result.value <= 0:
    return None
  return result


def _is_relevant(subset, d, m, n):
  equation = exactgeom.Constraint.equal(_wall_row(subset, m), d)
  return _maximize_margin(m, n, [equation]) is not None


def _canonical_subset(subset, d, m, n):
  subset = tuple(sorted(subset))
  if 1 in subset:
    return subset, d
  complement = tuple(
      label for label in range(1, m + 1) if label not in subset)
  return complement, n - d


@functools.lru_cache(maxsize=None)
def _walls(m, n):
  result = []
  labels = range(2, m + 1)
  for size in range(0, m - 1):
    for rest in itertools.combinations(labels, size):
      subset = (1,) + rest
      low = max(1, n - (m - len(subset)))
      high = min(len(subset), n - 1)
      for d in range(low, high + 1):
        facet = (
            (len(subset) == 1 and d == 1) or
            (m - len(subset) == 1 and d == n - 1))
        relevant = _is_relevant(subset, d, m, n)
        result.append(Wall(subset, d, m, n, relevant, facet))

  result.sort(key=lambda wall: (len(wall.subset), wall.subset, wall.d))
  logger.debug("{0:d} walls for m={1:d} n={2:d}".format(len(result), m, n))
  return tuple(result)


def walls(m, n):
  """Lists the canonical walls sum_J alpha = d, 1 <= d <= n - 1.

  Every wall is represented by the side J containing the label 1.

  Args:
    m (int): number of weights.
    n (int): weight sum, 1 <= n < m.

  Returns:
    list[Wall]: walls ordered by size of J, then J, then d.

  Raises:
    InputError: if n <= 0 or n >= m.
  """
  if not isinstance(m, int) or not isinstance(n, int) or n < 1 or n >= m:
    raise errors.InputError("require 1 <= n < m, got m={0!s} n={1!s}".format(
        m, n))
  return list(_walls(m, n))


def relevant_walls(m, n):
  """Lists the walls meeting the interior of the hypersimplex."""
  return [wall for wall in walls(m, n) if wall.relevant]


def find_wall(m, n, subset, d=1):
  """Looks up the canonical wall for an index set, either side."""
  subset, d = _canonical_subset(subset, d, m, n)
  for wall in walls(m, n):
    if wall.subset == subset and wall.d == d:
      return wall
  raise errors.InputError("no wall for J={0!s} d={1:d}".format(subset, d))


class ChamberSignature(object):
  """Signs of sum_J alpha - d over the relevant walls."""

  def __init__(self, entries):
    """Initializes a signature.

    Args:
      entries (iterable[tuple[Wall, int]]): wall and sign pairs.
    """
    super(ChamberSignature, self).__init__()
    self.entries = tuple(entries)

  @property
  def walls(self):
    return tuple(wall for wall, _ in self.entries)

  @property
  def signs(self):
    """tuple[int]: the signs in wall order."""
    return tuple(sign for _, sign in self.entries)

  def sign_of(self, wall):
    for other, sign in self.entries:
      if other == wall:
        return sign
    raise errors.InputError("wall {0:s} is not in the signature".format(
        wall.key))

  def flipped(self, wall):
    """Copies the signature with the sign of one wall negated."""
    self.sign_of(wall)
    return ChamberSignature(
        (other, -sign if other == wall else sign)
        for other, sign in self.entries)

  def is_open(self):
    """Determines if no sign is zero."""
    return all(self.signs)

  def __eq__(self, other):
    if not isinstance(other, ChamberSignature):
      return NotImplemented
    return self.entries == other.entries

  def __hash__(self):
    return hash(self.entries)

  def __str__(self):
    return "".join(SIGN_SYMBOLS[sign] for sign in self.signs)

  def to_dict(self):
    return {wall.key: SIGN_SYMBOLS[sign] for wall, sign in self.entries}


def locate(weights):
  """Locates a linearization relative to the relevant walls.

  Args:
    weights (WeightVector): weights in the hypersimplex.

  Returns:
    tuple[ChamberSignature, list[Wall]]: the signature and the walls
        through the point.

  Raises:
    NotEffectiveError: if the weights are outside the hypersimplex.
  """
  weights.require_effective()
  entries = [
      (wall, wall.sign(weights.alpha))
      for wall in relevant_walls(weights.m, weights.n)]
  on_walls = [wall for wall, sign in entries if sign == 0]
  return ChamberSignature(entries), on_walls


def facet_walls_through(weights):
  """Lists the facet walls alpha_i = 1 through a point."""
  return [
      wall for wall in walls(weights.m, weights.n)
      if wall.facet and wall.sign(weights.alpha) == 0]


def classification_table(weights):
  """Classifies every coincidence configuration at a point, n = 2.

  Returns:
    list[tuple[ConfigurationP1, StabilityClass]]: in restricted growth
        string order.
  """
  configurations = stability.configurations(weights.m)
  verdicts = config.ordered_map(
      lambda configuration: stability.sl2_classify(configuration, weights),
      configurations)
  return [
      (configuration, verdict.stability)
      for configuration, verdict in zip(configurations, verdicts)]


@dataclasses.dataclass(frozen=True)
class Chamber(object):
  """Open chamber with an interior witness point.

  Attributes:
    signature (ChamberSignature): signs of the relevant walls.
    witness (QVec): a rational point inside the chamber.
    classification_table (tuple): configuration and class pairs at the
        witness, or None when not computed.
  """

  signature: ChamberSignature
  witness: exactgeom.QVec
  classification_table: tuple = None

  def to_dict(self, tables=False):
    result = {
        "signature": self.signature.to_dict(),
        "witness": [
            exactgeom.rational_to_string(value) for value in self.witness]}
    if tables and self.classification_table is not None:
      result["table"] = {
          str(configuration): stability_class.value
          for configuration, stability_class in self.classification_table}
    return result


def _strict_witness(m, n, entries):
  """Finds a point with every sign strict, or None."""
  extra = [
      exactgeom.Constraint.greater_equal(
          _wall_row(wall.subset, m, scale=sign, slack=-1), sign * wall.d)
      for wall, sign in entries]
  result = _maximize_margin(m, n, extra)
  if result is None:
    return None
  return result.point[:m]


def _make_chamber(m, n, entries, witness, tables):
  table = None
  if tables:
    table = tuple(classification_table(stability.WeightVector(witness, n)))
  return Chamber(ChamberSignature(entries), witness, table)


def _check_chamber_range(m, n, maximum):
  if n != 2:
    raise errors.InputError("chamber enumeration requires n = 2")
  if not isinstance(m, int) or m < 3 or m > maximum:
    raise errors.InputError(
        "chamber enumeration requires 3 <= m <= {0:d}, got {1!s}".format(
            maximum, m))


def enumerate_chambers(m, n=2, tables=True):
  """Enumerates the open chambers by incremental wall insertion.

  Every partial sign vector is extended by both signs of the next wall and
  kept only if an LP finds a point satisfying all signs strictly.

  Args:
    m (int): number of weights, 3 to 7.
    n (Optional[int]): weight sum, only 2 is supported.
    tables (Optional[bool]): True to attach classification tables.

  Returns:
    list[Chamber]: chambers sorted by signature.

  Raises:
    InputError: if m or n is out of range.
  """
  _check_chamber_range(m, n, MAXIMUM_POINTS)
  wall_list = relevant_walls(m, n)

  frontier = [()]
  for wall in wall_list:
    candidates = [
        entries + ((wall, sign),) for entries in frontier for sign in (-1, 1)]
    witnesses = config.ordered_map(
        lambda entries: _strict_witness(m, n, entries), candidates)
    frontier = [
        entries for entries, witness in zip(candidates, witnesses)
        if witness is not None]
    logger.debug("Inserted wall {0:s}: {1:d} regions".format(
        wall.key, len(frontier)))

  witnesses = config.ordered_map(
      lambda entries: _strict_witness(m, n, entries), frontier)
  chambers = [
      _make_chamber(m, n, entries, witness, tables)
      for entries, witness in zip(frontier, witnesses)]
  chambers.sort(key=lambda chamber: chamber.signature.signs)
  logger.info("{0:d} chambers for m={1:d}".format(len(chambers), m))
  return chambers


def enumerate_chambers_naive(m, n=2, tables=False):
  """Enumerates the open chambers by testing every sign vector.

  Args:
    m (int): number of weights, 3 to 5.
    n (Optional[int]): weight sum, only 2 is supported.
    tables (Optional[bool]): True to attach classification tables.

  Returns:
    list[Chamber]: chambers sorted by signature.
  """
  _check_chamber_range(m, n, MAXIMUM_NAIVE_POINTS)
  wall_list = relevant_walls(m, n)

  candidates = [
      tuple(zip(wall_list, signs))
      for signs in itertools.product((-1, 1), repeat=len(wall_list))]
  witnesses = config.ordered_map(
      lambda entries: _strict_witness(m, n, entries), candidates)
  return [
      _make_chamber(m, n, entries, witness, tables)
      for entries, witness in zip(candidates, witnesses)
      if witness is not None]


def adjacent(chamber, wall, tables=True):
  """Crosses one wall of a chamber.

  Args:
    chamber (Chamber): the chamber.
    wall (Wall): a relevant wall of the signature.
    tables (Optional[bool]): True to attach a classification table.

  Returns:
    Chamber: the chamber with the sign of the wall flipped, or None if no
        such chamber exists.

  Raises:
    InputError: if the wall is not relevant or not in the signature.
  """
  if not wall.relevant:
    raise errors.InputError("wall {0:s} is not relevant".format(wall.key))

  signature = chamber.signature.flipped(wall)
  m = wall.m
  witness = _strict_witness(m, wall.n, signature.entries)
  if witness is None:
    logger.debug("Crossing {0:s} leaves the hypersimplex".format(wall.key))
    return None
  return _make_chamber(m, wall.n, signature.entries, witness, tables)


def crossings(start, direction, wall_list):
  """Computes where the ray start + t * direction crosses walls.

  Walls through the start point are skipped.

  Args:
    start (QVec): start point.
    direction (QVec): direction.
    wall_list (list[Wall]): walls to test.

  Returns:
    list[tuple[Fraction, list[Wall]]]: crossing parameters t > 0 in
        increasing order with the walls crossed there.
  """
  start = exactgeom.QVec(start)
  direction = exactgeom.QVec(direction)
  hits = {}
  for wall in wall_list:
    value = wall.value(start)
    slope = sum(
        (direction[index - 1] for index in wall.subset), Fraction(0))
    if value == 0 or slope == 0:
      continue
    parameter = -value / slope
    if parameter > 0:
      hits.setdefault(parameter, []).append(wall)

  for parameter in sorted(hits):
    logger.debug("Crossing at t={0!s}: {1:s}".format(
        parameter, ",".join(wall.key for wall in hits[parameter])))
  return [(parameter, hits[parameter]) for parameter in sorted(hits)]
