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
"""Stability of torus orbits and of point configurations under SL(n)."""

import dataclasses
import enum
import itertools
import logging

from fractions import Fraction

import sympy

from rgit import errors
from rgit import exactgeom
from rgit import moment


logger = logging.getLogger(__name__)


class StabilityClass(enum.Enum):
  """Stability class of a point."""

  STABLE = "stable"
  STRICTLY_SEMISTABLE = "strictly_semistable"
  UNSTABLE = "unstable"

  @property
  def sign(self):
    """int: sign of the numerical function for the class."""
    return _SIGNS[self]

  @property
  def is_semistable(self):
    return self != StabilityClass.UNSTABLE


_SIGNS = {
    StabilityClass.STABLE: -1,
    StabilityClass.STRICTLY_SEMISTABLE: 0,
    StabilityClass.UNSTABLE: 1}


@dataclasses.dataclass(frozen=True)
class StabilityVerdict(object):
  """Stability class with the numerical function data.

  Attributes:
    stability (StabilityClass): the class.
    sign (int): -1, 0 or +1, the sign of the numerical function.
    sq_magnitude (Fraction): exact squared magnitude.
    witnesses (tuple[tuple[int]]): critical or violating index sets, 1-based.
    direction (QVec): separating one-parameter subgroup, if known.
  """

  stability: StabilityClass
  sign: int
  sq_magnitude: Fraction
  witnesses: tuple = ()
  direction: exactgeom.QVec = None

  def __post_init__(self):
    if self.stability.sign != self.sign:
      raise RuntimeError("sign {0:d} does not match class {1:s}".format(
          self.sign, self.stability.value))
    object.__setattr__(self, "witnesses", tuple(
        tuple(sorted(witness)) for witness in self.witnesses))

  @classmethod
  def from_class(cls, stability, sq_magnitude, witnesses=(), direction=None):
    return cls(
        stability, stability.sign, exactgeom.to_rational(sq_magnitude),
        witnesses, direction)

  def to_dict(self):
    """Converts the verdict to its JSON form."""
    return {
        "class": self.stability.value,
        "sign": self.sign,
        "sq_magnitude": exactgeom.rational_to_string(self.sq_magnitude),
        "witnesses": [list(witness) for witness in self.witnesses]}


@dataclasses.dataclass(frozen=True)
class WeightVector(object):
  """Linearization weights alpha with sum n.

  Attributes:
    alpha (QVec): non-negative weights.
    n (int): target rank, the sum of the weights.
  """

  alpha: exactgeom.QVec
  n: int = 2

  def __post_init__(self):
    object.__setattr__(self, "alpha", exactgeom.QVec(self.alpha))
    if not isinstance(self.n, int) or self.n < 1:
      raise errors.InputError("rank must be a positive integer")
    if self.alpha.dimension < 2:
      raise errors.InputError("at least two weights are required")
    if self.alpha.total() != self.n:
      raise errors.InputError("weights sum to {0!s}, expected {1:d}".format(
          self.alpha.total(), self.n))
    if any(value < 0 for value in self.alpha):
      raise errors.NotEffectiveError("negative weight in {0:s}".format(
          self.to_string()))

  @classmethod
  def effective(cls, alpha, n=2):
    """Creates a weight vector that must lie in the hypersimplex."""
    weights = cls(alpha, n)
    weights.require_effective()
    return weights

  @property
  def m(self):
    """int: number of weights."""
    return self.alpha.dimension

  @property
  def is_effective(self):
    """bool: True if 0 <= alpha_i <= 1 for every i."""
    return all(value <= 1 for value in self.alpha)

  def require_effective(self):
    """Checks the weights lie in the hypersimplex.

    Raises:
      NotEffectiveError: if some weight exceeds one.
    """
    if not self.is_effective:
      raise errors.NotEffectiveError(
          "weights {0:s} are not effective: some weight exceeds 1".format(
              self.to_string()))

  def subset_sum(self, subset):
    """Sums the weights over a 1-based index set."""
    return sum((self.alpha[index - 1] for index in subset), Fraction(0))

  def zero_labels(self):
    """Retrieves the 1-based labels with weight zero."""
    return [index + 1 for index, value in enumerate(self.alpha) if value == 0]

  def to_list(self):
    return [exactgeom.rational_to_string(value) for value in self.alpha]

  def to_string(self):
    return ",".join(self.to_list())


def _format_block(block):
  if all(label < 10 for label in block):
    return "".join(str(label) for label in block)
  return ",".join(str(label) for label in block)


class ConfigurationP1(object):
  """Configuration of labeled points on P1, up to its coincidence partition.

  Attributes:
    blocks (tuple[tuple[int]]): coincidence classes, each sorted, ordered by
        their smallest label.
    points (tuple[tuple[Fraction]]): optional homogeneous coordinates.
  """

  def __init__(self, blocks, points=None):
    """Initializes a configuration.

    Args:
      blocks (iterable[iterable[int]]): coincidence classes of the labels
          1..m.
      points (Optional[list[tuple]]): homogeneous coordinates per label.

    Raises:
      InputError: if the blocks do not partition 1..m or disagree with the
          coordinates.
    """
    super(ConfigurationP1, self).__init__()
    blocks = [tuple(sorted(int(label) for label in block)) for block in blocks]
    if any(not block for block in blocks):
      raise errors.InputError("empty coincidence block")

    labels = sorted(label for block in blocks for label in block)
    if labels != list(range(1, len(labels) + 1)):
      raise errors.InputError(
          "blocks must partition the labels 1..m, got {0!s}".format(labels))

    self.blocks = tuple(sorted(blocks))
    self.points = None
    if points is not None:
      points = tuple(
          tuple(exactgeom.to_rational(value) for value in point)
          for point in points)
      if len(points) != len(labels):
        raise errors.InputError("one point per label is required")
      if ConfigurationP1.from_points(points).blocks != self.blocks:
        raise errors.InputError("points disagree with the coincidence blocks")
      self.points = points

  @classmethod
  def from_points(cls, points):
    """Builds the configuration of explicit points (a:b) of P1.

    Raises:
      InputError: if a point is (0:0) or not a pair.
    """
    points = [
        tuple(exactgeom.to_rational(value) for value in point)
        for point in points]
    for point in points:
      if len(point) != 2 or not any(point):
        raise errors.InputError("invalid point of P1: {0!s}".format(point))

    blocks = []
    for label, point in enumerate(points, start=1):
      for block in blocks:
        other = points[block[0] - 1]
        if point[0] * other[1] == point[1] * other[0]:
          block.append(label)
          break
      else:
        blocks.append([label])

    configuration = cls(blocks)
    configuration.points = tuple(points)
    return configuration

  @classmethod
  def generic(cls, m):
    """Builds the configuration of m distinct points."""
    return cls([[label] for label in range(1, m + 1)])

  @property
  def m(self):
    """int: number of points."""
    return sum(len(block) for block in self.blocks)

  def block_of(self, label):
    """Retrieves the block containing a label."""
    for block in self.blocks:
      if label in block:
        return block
    raise errors.InputError("unknown label: {0:d}".format(label))

  def forget(self, label):
    """Forgets one point and renumbers the labels above it.

    Args:
      label (int): the label to drop.

    Returns:
      ConfigurationP1: configuration of the remaining m - 1 points.
    """
    self.block_of(label)
    if self.m < 2:
      raise errors.InputError("cannot forget the only point")

    blocks = []
    for block in self.blocks:
      remaining = [
          other if other < label else other - 1
          for other in block if other != label]
      if remaining:
        blocks.append(remaining)
    return ConfigurationP1(blocks)

  def refines(self, other):
    """Determines if every block lies inside a block of other."""
    if self.m != other.m:
      return False
    return all(
        set(block) <= set(other.block_of(block[0])) for block in self.blocks)

  def to_matrix(self):
    """Realizes the configuration as a 2 x m matrix.

    Block k, counted from zero, maps to the column (1, k).
    """
    columns = [None] * self.m
    for position, block in enumerate(self.blocks):
      for label in block:
        columns[label - 1] = (1, position)
    return [[column[0] for column in columns],
            [column[1] for column in columns]]

  def __eq__(self, other):
    if not isinstance(other, ConfigurationP1):
      return NotImplemented
    return self.blocks == other.blocks

  def __hash__(self):
    return hash(self.blocks)

  def __str__(self):
    return "|".join(_format_block(block) for block in self.blocks)

  def __repr__(self):
    return "ConfigurationP1({0:s})".format(str(self))


def set_partitions(labels):
  """Generates all set partitions in restricted growth string order.

  Args:
    labels (int|iterable[int]): m, meaning 1..m, or the labels themselves.

  Yields:
    list[list[int]]: blocks, ordered by their first label.
  """
  if isinstance(labels, int):
    labels = list(range(1, labels + 1))
  labels = list(labels)
  if not labels:
    return

  def _extend(growth, maximum):
    if len(growth) == len(labels):
      blocks = [[] for _ in range(maximum + 1)]
      for label, block in zip(labels, growth):
        blocks[block].append(label)
      yield blocks
      return

    for block in range(maximum + 2):
      yield from _extend(growth + [block], max(maximum, block))

  yield from _extend([0], 0)


def configurations(m):
  """Lists every coincidence configuration of m points in canonical order."""
  return [ConfigurationP1(blocks) for blocks in set_partitions(m)]


class SLnConfig(object):
  """Configuration of m points of P^(n-1) as an n x m matrix."""

  def __init__(self, matrix):
    """Initializes a configuration.

    Args:
      matrix (list[list]): n x m rational matrix with nonzero columns.

    Raises:
      InputError: if the matrix is ragged, empty or has a zero column.
    """
    super(SLnConfig, self).__init__()
    rows = [
        tuple(exactgeom.to_rational(value) for value in row) for row in matrix]
    if not rows or not rows[0]:
      raise errors.InputError("empty configuration matrix")
    if any(len(row) != len(rows[0]) for row in rows):
      raise errors.InputError("ragged configuration matrix")

    self.rows = tuple(rows)
    for index in range(self.m):
      if not any(row[index] for row in self.rows):
        raise errors.InputError("column {0:d} is zero".format(index + 1))

    self._ranks = None

  @classmethod
  def from_configuration(cls, configuration):
    return cls(configuration.to_matrix())

  @property
  def n(self):
    return len(self.rows)

  @property
  def m(self):
    return len(self.rows[0])

  def _sympy_columns(self, subset):
    return sympy.Matrix([
        [sympy.Rational(row[index - 1].numerator, row[index - 1].denominator)
         for index in subset]
        for row in self.rows])

  def rank(self, subset=None):
    """Computes the rank of a set of columns, all of them by default."""
    if subset is None:
      subset = range(1, self.m + 1)
    subset = tuple(sorted(subset))
    if not subset:
      return 0
    return self._sympy_columns(subset).rank()

  def ranks(self):
    """Computes the rank of every nonempty column subset.

    Returns:
      dict[frozenset[int], int]: rank per 1-based column subset.
    """
    if self._ranks is None:
      ranks = {}
      labels = range(1, self.m + 1)
      for size in range(1, self.m + 1):
        for subset in itertools.combinations(labels, size):
          ranks[frozenset(subset)] = self.rank(subset)
      self._ranks = ranks
    return dict(self._ranks)

  def flats(self):
    """Lists the closed column sets of rank below n.

    Returns:
      list[tuple[tuple[int], int]]: flats with their ranks, in size then
          lexicographic order.
    """
    ranks = self.ranks()
    result = []
    for subset, rank in ranks.items():
      if rank >= self.n:
        continue
      closed = all(
          ranks[subset | {label}] > rank
          for label in range(1, self.m + 1) if label not in subset)
      if closed:
        result.append((tuple(sorted(subset)), rank))
    return sorted(result, key=lambda item: (len(item[0]), item[0]))

  def to_matrix(self):
    return [list(row) for row in self.rows]


def _check_weights(weights, m, n):
  if weights.m != m:
    raise errors.InputError("expected {0:d} weights, got {1:d}".format(
        m, weights.m))
  if weights.n != n:
    raise errors.InputError("weights sum to {0:d}, expected {1:d}".format(
        weights.n, n))


def _wall_distance(excess, size, m):
  """Squared distance to the wall sum_B alpha = 1 inside sum alpha = 2.

  Only proper blocks, 0 < size < m, define a wall.
  """
  if not 0 < size < m:
    raise ValueError("no wall for a block of {0:d} of {1:d} labels".format(
        size, m))
  return excess * excess * Fraction(m, size * (m - size))


def sl2_classify(configuration, weights):
  """Classifies a configuration of points on P1 by its coincidence blocks.

  A configuration is semistable when every block weighs at most 1 and
  stable when every block weighs less; a label with zero weight makes it
  at best strictly semistable.

  Args:
    configuration (ConfigurationP1): the configuration.
    weights (WeightVector): weights with sum 2.

  Returns:
    StabilityVerdict: the verdict; witnesses are the blocks weighing 1 or
        more.
  """
  _check_weights(weights, configuration.m, 2)

  block_weights = [
      (block, weights.subset_sum(block)) for block in configuration.blocks]
  m = configuration.m

  violated = [(block, total) for block, total in block_weights if total > 1]
  if violated:
    if len(configuration.blocks) == 1:
      # All points coincide: unstable for every weight, no wall to cross.
      magnitude = (weights.n - 1) ** 2
    else:
      magnitude = min(
          _wall_distance(total - 1, len(block), m)
          for block, total in violated)
    return StabilityVerdict.from_class(
        StabilityClass.UNSTABLE, magnitude,
        [block for block, _ in violated])

  critical = [block for block, total in block_weights if total == 1]
  zero_labels = weights.zero_labels()
  if critical or zero_labels:
    witnesses = critical + [
        (label,) for label in zero_labels
        if (label,) not in critical]
    return StabilityVerdict.from_class(
        StabilityClass.STRICTLY_SEMISTABLE, 0, witnesses)

  magnitude = min(
      _wall_distance(1 - total, len(block), m)
      for block, total in block_weights)
  return StabilityVerdict.from_class(StabilityClass.STABLE, magnitude)


def sln_classify(configuration, weights):
  """Classifies a configuration of points of P^(n-1) by matroid ranks.

  Semistable when every flat J of rank d < n has sum_J alpha <= d, stable
  when all of these are strict. Enumerates all 2^m column subsets.

  Args:
    configuration (SLnConfig): the configuration.
    weights (WeightVector): weights with sum n.

  Returns:
    StabilityVerdict: the verdict; witnesses are the flats at or over their
        rank.

  Raises:
    RankDeficientError: if the matrix has rank below n.
  """
  _check_weights(weights, configuration.m, configuration.n)
  if configuration.rank() < configuration.n:
    raise errors.RankDeficientError(
        "configuration has rank {0:d} < {1:d}".format(
            configuration.rank(), configuration.n))

  slacks = [
      (flat, weights.subset_sum(flat) - rank)
      for flat, rank in configuration.flats()]
  logger.debug("{0:d} flats for a {1:d} x {2:d} configuration".format(
      len(slacks), configuration.n, configuration.m))

  violated = [(flat, slack) for flat, slack in slacks if slack > 0]
  if violated:
    magnitude = min(slack * slack for _, slack in violated)
    return StabilityVerdict.from_class(
        StabilityClass.UNSTABLE, magnitude, [flat for flat, _ in violated])

  critical = [flat for flat, slack in slacks if slack == 0]
  zero_labels = weights.zero_labels()
  if critical or zero_labels:
    witnesses = critical + [
        (label,) for label in zero_labels if (label,) not in critical]
    return StabilityVerdict.from_class(
        StabilityClass.STRICTLY_SEMISTABLE, 0, witnesses)

  margins = [slack * slack for _, slack in slacks]
  margins.extend(value * value for value in weights.alpha)
  return StabilityVerdict.from_class(StabilityClass.STABLE, min(margins))


def _check_effective_dimension(effective_dimension, ambient_dimension):
  if effective_dimension is None:
    return ambient_dimension
  if effective_dimension < 1 or effective_dimension > ambient_dimension:
    raise errors.InputError("effective dimension out of range: {0:d}".format(
        effective_dimension))
  return effective_dimension


def torus_classify(polytope, mu, effective_dimension=None):
  """Classifies a torus orbit by the position of mu in its weight polytope.

  Args:
    polytope (Polytope): weight polytope of the orbit closure.
    mu (QVec): linearization shift.
    effective_dimension (Optional[int]): dimension of the effective
        character space, such as m - 1 for the slice sum alpha = n. A
        polytope of that dimension counts as full-dimensional. Defaults to
        the ambient dimension.

  Returns:
    StabilityVerdict: the verdict; witnesses are the vertex sets (1-based)
        of the facets through or violated by mu.

  Raises:
    InputError: if the polytope is empty or the dimensions differ.
  """
  mu = exactgeom.QVec(mu)
  effective_dimension = _check_effective_dimension(
      effective_dimension, polytope.ambient_dimension)
  status = exactgeom.membership(mu, polytope)

  def _witnesses(predicate):
    return [
        tuple(index + 1 for index in sorted(facet.vertex_indices))
        for facet in polytope.facets if predicate(facet.slack(mu))]

  if status == exactgeom.Membership.OUTSIDE:
    distance = exactgeom.signed_sq_distance_to_boundary(mu, polytope)
    return StabilityVerdict.from_class(
        StabilityClass.UNSTABLE, distance.sq_magnitude,
        _witnesses(lambda slack: slack < 0))

  if status == exactgeom.Membership.ON_BOUNDARY:
    return StabilityVerdict.from_class(
        StabilityClass.STRICTLY_SEMISTABLE, 0,
        _witnesses(lambda slack: slack == 0))

  if status == exactgeom.Membership.INTERIOR_FULL_DIM:
    distance = exactgeom.signed_sq_distance_to_boundary(mu, polytope)
    return StabilityVerdict.from_class(
        StabilityClass.STABLE, distance.sq_magnitude)

  if polytope.affine_dimension == effective_dimension:
    distance = exactgeom.signed_sq_distance_to_boundary(
        mu, polytope, within_affine_hull=True)
    return StabilityVerdict.from_class(
        StabilityClass.STABLE, distance.sq_magnitude)

  return StabilityVerdict.from_class(StabilityClass.STRICTLY_SEMISTABLE, 0)


def gm_verdicts(configuration, weights):
  """Classifies a configuration in both the SL(n) and the torus model.

  The torus model is the orbit of the Pluecker point, whose weight polytope
  is the matroid polytope, inside the slice sum alpha = n.

  Args:
    configuration (SLnConfig|ConfigurationP1): the configuration.
    weights (WeightVector): weights with sum n.

  Returns:
    tuple[StabilityVerdict, StabilityVerdict]: SL(n) and torus verdicts.
  """
  if isinstance(configuration, ConfigurationP1):
    configuration = SLnConfig.from_configuration(configuration)

  sln_verdict = sln_classify(configuration, weights)
  polytope = moment.matroid_polytope(
      moment.plucker(configuration.to_matrix()))
  torus_verdict = torus_classify(
      polytope, weights.alpha, effective_dimension=configuration.m - 1)
  return sln_verdict, torus_verdict


def gm_check(configuration, weights):
  """Compares the SL(n) verdict with the torus verdict on the Grassmannian.

  Args:
    configuration (SLnConfig|ConfigurationP1): the configuration.
    weights (WeightVector): weights with sum n.

  Returns:
    bool: True if both models give the same class.
  """
  sln_verdict, torus_verdict = gm_verdicts(configuration, weights)
  agree = sln_verdict.stability == torus_verdict.stability
  if not agree:
    logger.warning("Models disagree for weights {0:s}: {1:s} != {2:s}".format(
        weights.to_string(), sln_verdict.stability.value,
        torus_verdict.stability.value))
  return agree


def _nullspace(rows, dimension):
  if not rows:
    return [exactgeom.QVec.unit(dimension, index)
            for index in range(dimension)]
  matrix = sympy.Matrix([
      [sympy.Rational(value.numerator, value.denominator) for value in row]
      for row in rows])
  return [
      exactgeom.QVec(exactgeom.to_rational(value) for value in vector)
      for vector in matrix.nullspace()]


def oracle_1ps(weight_set, mu, effective_dimension=None):
  """Classifies by brute force over candidate one-parameter subgroups.

  Pairs mu-shifted weights with the facet normals of their hull, found by
  enumerating point subsets, and with all pairwise weight differences. The
  numerical value h(l) = max_w <l, w - mu> decides the class: some h < 0
  means unstable, some h = 0 strictly semistable.

  Args:
    weight_set (WeightSet): the characters of the orbit.
    mu (QVec): linearization shift.
    effective_dimension (Optional[int]): as for torus_classify.

  Returns:
    StabilityVerdict: the verdict. For unstable points direction holds a
        subgroup pairing negatively with every weight. The magnitude is the
        best value among the candidates.
  """
  mu = exactgeom.QVec(mu)
  weights = sorted({character - mu for character in weight_set})
  dimension = mu.dimension
  effective_dimension = _check_effective_dimension(
      effective_dimension, dimension)

  base = weights[0]
  differences = [weight - base for weight in weights[1:]]
  equations = _nullspace(differences, dimension)
  affine_dimension = dimension - len(equations)

  for normal in equations:
    value = normal.dot(base)
    if value != 0:
      direction = normal * (-1 if value > 0 else 1)
      return StabilityVerdict.from_class(
          StabilityClass.UNSTABLE, value * value / normal.squared_norm(),
          direction=direction)

  candidates = []
  if affine_dimension > 0:
    for subset in itertools.combinations(range(len(weights)), affine_dimension):
      first = weights[subset[0]]
      rows = [weights[index] - first for index in subset[1:]] + equations
      normals = _nullspace(rows, dimension)
      if len(normals) != 1:
        continue

      normal = normals[0]
      level = normal.dot(first)
      values = [normal.dot(weight) for weight in weights]
      if all(value >= level for value in values):
        normal = -normal
        level = -level
      elif not all(value <= level for value in values):
        continue
      candidates.append(normal)

    for first, second in itertools.permutations(weights, 2):
      candidates.append(first - second)

  scored = []
  for direction in candidates:
    height = max(direction.dot(weight) for weight in weights)
    scored.append((height, direction))

  negative = [item for item in scored if item[0] < 0]
  if negative:
    height, direction = max(
        negative,
        key=lambda item: (item[0] * item[0] / item[1].squared_norm(), item[1]))
    return StabilityVerdict.from_class(
        StabilityClass.UNSTABLE, height * height / direction.squared_norm(),
        direction=direction)

  if any(height == 0 for height, _ in scored):
    return StabilityVerdict.from_class(StabilityClass.STRICTLY_SEMISTABLE, 0)

  if affine_dimension not in (dimension, effective_dimension):
    return StabilityVerdict.from_class(StabilityClass.STRICTLY_SEMISTABLE, 0)

  magnitude = min(
      height * height / direction.squared_norm()
      for height, direction in scored)
  return StabilityVerdict.from_class(StabilityClass.STABLE, magnitude)
