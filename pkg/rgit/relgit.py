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
"""Relative stability for pair linearizations pi* L^n + M.

A FiberedModel bundles a finite set of total points mapping onto base
points with a base oracle (G on X) and a fiber oracle (G0 on the fibers).
relative_classify combines both verdicts according to the mode of the pair
linearization:

  finite, base without strictly semistable points: semistable exactly when
      fiber semistable over a stable base point.
  finite, otherwise: only the inclusions are guaranteed, the rest is either
      unknown or taken from the model's direct oracle. Below the model's
      stabilization bound nothing is guaranteed.
  limit: semistable equals stable equals fiber semistable over a
      semistable base point; refused when the base has strictly semistable
      points unless a deformation path is given.
"""

import collections
import dataclasses
import enum
import itertools
import logging
import math

from fractions import Fraction

from rgit import chambers
from rgit import config
from rgit import errors
from rgit import exactgeom
from rgit import stability


logger = logging.getLogger(__name__)

StabilityClass = stability.StabilityClass

FiberDescription = collections.namedtuple(
    "FiberDescription", ["semistable_points", "stabilizer_order"])


class Mode(enum.Enum):
  """Mode of a pair linearization."""

  FINITE = "finite"
  LIMIT = "limit"


CONTRACT_EQUALITY = "equality"
CONTRACT_INCLUSION = "inclusion"
CONTRACT_LIMIT = "limit"
CONTRACT_PATH = "path"


@dataclasses.dataclass(frozen=True)
class PairLinearization(object):
  """Pair (L, M) taken as pi* L^n + M or in the limit n to infinity.

  Attributes:
    base (object): base linearization L, understood by the base oracle.
    fiber (object): fiber linearization M, understood by the fiber oracle.
    mode (Mode): finite or limit.
    n (int): power of L in finite mode.
    path (object): optional deformation target of L resolving a base on a
        wall in limit mode.
  """

  base: object
  fiber: object
  mode: Mode = Mode.FINITE
  n: int = None
  path: object = None

  def __post_init__(self):
    if self.mode == Mode.FINITE:
      if not isinstance(self.n, int) or self.n < 1:
        raise errors.InputError("finite mode requires a positive power")
    elif self.n is not None:
      raise errors.InputError("limit mode takes no power")

  @classmethod
  def finite(cls, base, fiber, n):
    return cls(base, fiber, Mode.FINITE, n)

  @classmethod
  def limit(cls, base, fiber, path=None):
    return cls(base, fiber, Mode.LIMIT, None, path)


@dataclasses.dataclass
class FiberedModel(object):
  """Finite model of an equivariant morphism pi: Y -> X.

  Attributes:
    base_points (list): points of X.
    total_points (list): points of Y.
    projection (callable): maps a point of Y to a point of X.
    base_oracle (callable): (point of X, L) to StabilityClass.
    fiber_oracle (callable): (point of Y, M) to StabilityClass.
    direct_oracle (callable): optional (point of Y, PairLinearization) to
        StabilityClass, classifying the pair linearization directly.
    stabilization_bound (callable): optional PairLinearization to the power
        N0 after which finite mode no longer changes.
    stabilizer_order (callable): point of X to the order of its stabilizer.
  """

  base_points: list
  total_points: list
  projection: object
  base_oracle: object
  fiber_oracle: object
  direct_oracle: object = None
  stabilization_bound: object = None
  stabilizer_order: object = lambda point: 1


@dataclasses.dataclass(frozen=True)
class PointVerdict(object):
  """Verdict for one total point.

  Attributes:
    point (object): the point of Y.
    stability (StabilityClass): the class, None if undecided.
    fiber_class (StabilityClass): fiber oracle class.
    base_class (StabilityClass): base oracle class of the image.
    guaranteed (bool): True if the class follows from the combination rule.
    direct (StabilityClass): direct oracle class, if the model has one.
  """

  point: object
  stability: StabilityClass
  fiber_class: StabilityClass
  base_class: StabilityClass
  guaranteed: bool
  direct: StabilityClass = None

  def to_dict(self):
    def _value(stability_class):
      return None if stability_class is None else stability_class.value

    return {
        "point": str(self.point),
        "class": _value(self.stability),
        "fiber_class": _value(self.fiber_class),
        "base_class": _value(self.base_class),
        "guaranteed": self.guaranteed}


@dataclasses.dataclass(frozen=True)
class RelativeVerdict(object):
  """Verdicts for all total points.

  Attributes:
    mode (Mode): mode of the pair linearization.
    contract (str): equality, inclusion, limit or path.
    points (tuple[PointVerdict]): per total point, in model order.
    n (int): power in finite mode.
    stabilization_bound (int): N0 if the model reports one.
  """

  mode: Mode
  contract: str
  points: tuple
  n: int = None
  stabilization_bound: int = None

  def semistable_points(self):
    return [
        verdict.point for verdict in self.points
        if verdict.stability is not None and verdict.stability.is_semistable]

  def stable_points(self):
    return [
        verdict.point for verdict in self.points
        if verdict.stability == StabilityClass.STABLE]

  def undecided_points(self):
    return [
        verdict.point for verdict in self.points if verdict.stability is None]

  def to_dict(self):
    result = {
        "mode": self.mode.value,
        "contract": self.contract,
        "points": [verdict.to_dict() for verdict in self.points],
        "semistable": [str(point) for point in self.semistable_points()],
        "stable": [str(point) for point in self.stable_points()]}
    if self.n is not None:
      result["n"] = self.n
    if self.stabilization_bound is not None:
      result["stabilization_bound"] = self.stabilization_bound
    return result


def _finite_inclusion(fiber_class, base_class):
  """Applies the inclusion contract; returns None when undecided."""
  if base_class == StabilityClass.UNSTABLE:
    return StabilityClass.UNSTABLE
  if fiber_class == StabilityClass.UNSTABLE:
    return StabilityClass.UNSTABLE
  if (fiber_class == StabilityClass.STABLE and
      base_class == StabilityClass.STABLE):
    return StabilityClass.STABLE
  return None


def relative_classify(model, linearization):
  """Classifies every total point for a pair linearization.

  Args:
    model (FiberedModel): the fibered model.
    linearization (PairLinearization): the pair linearization.

  Returns:
    RelativeVerdict: the verdicts in model order.

  Raises:
    BoundaryAmbiguousError: in limit mode without a path when some base
        point is strictly semistable.
  """
  base_classes = config.ordered_map(
      lambda point: model.base_oracle(point, linearization.base),
      model.base_points)
  base_by_point = dict(zip(model.base_points, base_classes))
  wall_free = StabilityClass.STRICTLY_SEMISTABLE not in base_classes

  bound = None
  if (model.stabilization_bound is not None and
      linearization.mode == Mode.FINITE):
    bound = model.stabilization_bound(linearization)
  # Both inclusions only hold once the power reaches the bound.
  stabilized = bound is None or linearization.n >= bound

  if linearization.mode == Mode.LIMIT:
    if wall_free:
      contract = CONTRACT_LIMIT
    elif linearization.path is not None:
      contract = CONTRACT_PATH
    else:
      raise errors.BoundaryAmbiguousError(
          "base linearization has strictly semistable points")
  elif wall_free and stabilized:
    contract = CONTRACT_EQUALITY
  else:
    contract = CONTRACT_INCLUSION

  if contract == CONTRACT_PATH and model.direct_oracle is None:
    raise errors.BoundaryAmbiguousError(
        "model cannot follow a deformation path")

  def _classify(point):
    base_class = base_by_point[model.projection(point)]
    fiber_class = model.fiber_oracle(point, linearization.fiber)
    direct = None
    if model.direct_oracle is not None:
      direct = model.direct_oracle(point, linearization)

    if contract == CONTRACT_EQUALITY:
      if base_class == StabilityClass.STABLE:
        result = fiber_class
      else:
        result = StabilityClass.UNSTABLE
      return PointVerdict(point, result, fiber_class, base_class, True, direct)

    if contract == CONTRACT_LIMIT:
      if base_class.is_semistable and fiber_class.is_semistable:
        result = StabilityClass.STABLE
      else:
        result = StabilityClass.UNSTABLE
      return PointVerdict(point, result, fiber_class, base_class, True, direct)

    if contract == CONTRACT_PATH:
      return PointVerdict(
          point, direct, fiber_class, base_class, False, direct)

    result = None
    if stabilized:
      result = _finite_inclusion(fiber_class, base_class)
    if result is not None:
      return PointVerdict(point, result, fiber_class, base_class, True, direct)
    return PointVerdict(point, direct, fiber_class, base_class, False, direct)

  verdicts = config.ordered_map(_classify, model.total_points)
  logger.info("Relative verdict: {0:s} contract over {1:d} points".format(
      contract, len(verdicts)))
  return RelativeVerdict(
      linearization.mode, contract, tuple(verdicts), linearization.n, bound)


def fiber_description(model, linearization, point):
  """Describes the fiber over a base point.

  Returns:
    FiberDescription: fiber semistable points and the stabilizer order.
  """
  fiber = [
      total for total in model.total_points
      if model.projection(total) == point]
  semistable = [
      total for total in fiber
      if model.fiber_oracle(total, linearization.fiber).is_semistable]
  return FiberDescription(semistable, model.stabilizer_order(point))


def product_model(fiber_points, fiber_oracle, base_points, base_oracle):
  """Builds X0 x X with G0 acting on X0 only.

  Args:
    fiber_points (list): points of X0.
    fiber_oracle (callable): (point of X0, L0) to StabilityClass.
    base_points (list): points of X.
    base_oracle (callable): (point of X, L) to StabilityClass.

  Returns:
    FiberedModel: total points are the pairs (x0, x).
  """
  return FiberedModel(
      base_points=list(base_points),
      total_points=list(itertools.product(fiber_points, base_points)),
      projection=lambda point: point[1],
      base_oracle=base_oracle,
      fiber_oracle=lambda point, weights: fiber_oracle(point[0], weights))


def _lift(alpha, label):
  """Inserts a zero weight at a 1-based label."""
  values = list(alpha)
  values.insert(label - 1, Fraction(0))
  return exactgeom.QVec(values)


def _check_wall_free(weights):
  """Checks a base weight vector lies in an open chamber.

  Raises:
    WallBaseError: if some proper subset sums to 1 or a weight is zero.
  """
  weights.require_effective()
  if weights.zero_labels():
    raise errors.WallBaseError(
        "base weights {0:s} lie on a facet alpha_i = 0".format(
            weights.to_string()))

  labels = range(1, weights.m + 1)
  for size in range(1, weights.m):
    for subset in itertools.combinations(labels, size):
      if weights.subset_sum(subset) == 1:
        raise errors.WallBaseError(
            "base weights {0:s} lie on the wall J={1:s}".format(
                weights.to_string(), ",".join(str(label) for label in subset)))


def _check_label(m, label):
  if not isinstance(m, int) or m < 4:
    raise errors.InputError("at least 4 points are required")
  if not isinstance(label, int) or label < 1 or label > m:
    raise errors.InputError("label out of range: {0!s}".format(label))


def _pair_weights(alpha, label, fiber_weight, n):
  """Normalizes n lift(alpha) + M to sum 2."""
  values = _lift(alpha, label) * n + fiber_weight
  scale = 2 / (2 * n + fiber_weight.total())
  return stability.WeightVector(values * scale)


def _path_weights(base, target):
  """Moves base a little towards target, past the walls through base."""
  direction = target.alpha - base.alpha
  hits = chambers.crossings(
      base.alpha, direction, chambers.walls(base.m, base.n))
  limit = Fraction(1)
  if hits:
    limit = min(limit, hits[0][0])
  perturbed = stability.WeightVector(base.alpha + direction * (limit / 2))

  if perturbed.zero_labels() or chambers.locate(perturbed)[1]:
    raise errors.BoundaryAmbiguousError(
        "deformation path stays on a wall")
  return perturbed


def forgetful_model(m, label, alpha, fiber_weight=None):
  """Models the map forgetting one point of a configuration on P1.

  Args:
    m (int): number of points upstairs.
    label (int): the forgotten label.
    alpha (WeightVector): base weights over the other m - 1 points.
    fiber_weight (Optional[QVec]): weights of M over m points, the unit
        vector at label by default.

  Returns:
    FiberedModel: total points are configurations of m points, base points
        configurations of m - 1 points; every fiber is P1 with trivial G0.
  """
  _check_label(m, label)
  if alpha.m != m - 1 or alpha.n != 2:
    raise errors.InputError("base weights must be m - 1 weights with sum 2")

  if fiber_weight is None:
    fiber_weight = exactgeom.QVec.unit(m, label - 1)
  fiber_weight = exactgeom.QVec(fiber_weight)
  if fiber_weight.dimension != m or any(value < 0 for value in fiber_weight):
    raise errors.InputError("fiber weights must be m non-negative values")
  if fiber_weight[label - 1] <= 0:
    raise errors.InputError("fiber weight at the label must be positive")

  def _fiber(linearization):
    if linearization.fiber is None:
      return fiber_weight
    return exactgeom.QVec(linearization.fiber)

  def _base_oracle(point, weights):
    return stability.sl2_classify(point, weights).stability

  def _fiber_oracle(point, weights):
    return StabilityClass.STABLE

  def _direct_oracle(point, linearization):
    if linearization.mode == Mode.FINITE:
      weights = _pair_weights(
          linearization.base.alpha, label, _fiber(linearization),
          linearization.n)
      return stability.sl2_classify(point, weights).stability

    base = linearization.base
    if linearization.path is not None:
      base = _path_weights(base, linearization.path)
    base_class = stability.sl2_classify(point.forget(label), base).stability
    if base_class.is_semistable:
      return StabilityClass.STABLE
    return StabilityClass.UNSTABLE

  def _stabilization_bound(linearization):
    lifted = _lift(linearization.base.alpha, label)
    fiber = _fiber(linearization)
    half = fiber.total() / 2
    bound = 1
    labels = range(1, m + 1)
    for size in range(1, m + 1):
      for subset in itertools.combinations(labels, size):
        slope = sum((lifted[index - 1] for index in subset), Fraction(0)) - 1
        offset = sum(
            (fiber[index - 1] for index in subset), Fraction(0)) - half
        if slope != 0:
          bound = max(bound, math.floor(-offset / slope) + 1)
    return bound

  return FiberedModel(
      base_points=stability.configurations(m - 1),
      total_points=stability.configurations(m),
      projection=lambda point: point.forget(label),
      base_oracle=_base_oracle,
      fiber_oracle=_fiber_oracle,
      direct_oracle=_direct_oracle,
      stabilization_bound=_stabilization_bound,
      stabilizer_order=lambda point: 2)


def _classify_all(m, weights):
  return list(zip(
      stability.configurations(m),
      (verdict.stability for verdict in config.ordered_map(
          lambda configuration: stability.sl2_classify(configuration, weights),
          stability.configurations(m)))))


def _walls_crossed(hits, eps):
  crossed = []
  for parameter, wall_list in hits:
    if parameter <= eps:
      crossed.extend(wall_list)
  return crossed


@dataclasses.dataclass(frozen=True)
class ForgetfulReport(object):
  """Outcome of a forgetful map check.

  When eps moves the weights out of the hypersimplex, weights is None,
  nothing is classified and boundary_labels names the weights outside
  [0, 1].
  """

  m: int
  label: int
  alpha: stability.WeightVector
  eps: Fraction
  weights: object
  threshold: Fraction
  equality_verified: bool
  semistable: tuple
  stable: tuple
  preimage: tuple
  crossed_walls: tuple
  boundary_labels: tuple = ()

  def to_dict(self):
    weights = None
    if self.weights is not None:
      weights = self.weights.to_list()
    return {
        "m": self.m,
        "i": self.label,
        "alpha": self.alpha.to_list(),
        "eps": exactgeom.rational_to_string(self.eps),
        "weights": weights,
        "threshold": exactgeom.rational_to_string(self.threshold),
        "equality_verified": self.equality_verified,
        "semistable": [str(point) for point in self.semistable],
        "stable": [str(point) for point in self.stable],
        "preimage": [str(point) for point in self.preimage],
        "crossed_walls": [wall.to_dict() for wall in self.crossed_walls],
        "boundary": list(self.boundary_labels)}


def _forgetful_path(alpha, label):
  m = alpha.m + 1
  start = _lift(alpha.alpha, label)
  direction = exactgeom.QVec(
      1 if index == label else Fraction(-1, m - 1)
      for index in range(1, m + 1))
  return start, direction


def epsilon_threshold(alpha, label):
  """Computes the supremum of eps keeping the lifted weights in one chamber.

  Args:
    alpha (WeightVector): wall-free weights over m - 1 points.
    label (int): the label of the added point, 1..m.

  Returns:
    Fraction: the first wall crossing of eps -> lifted weights, capped where
        a weight reaches zero.

  Raises:
    WallBaseError: if alpha lies on a wall.
  """
  m = alpha.m + 1
  _check_label(m, label)
  _check_wall_free(alpha)

  start, direction = _forgetful_path(alpha, label)
  hits = chambers.crossings(start, direction, chambers.walls(m, 2))
  threshold = (m - 1) * min(alpha.alpha)
  if hits:
    threshold = min(threshold, hits[0][0])
  return threshold


def forgetful_instance(m, label, alpha, eps):
  """Checks the forgetful map description of the semistable locus.

  Builds the weights (alpha_j - eps/(m-1) for j != i, eps at i) and
  compares semistable, stable and the preimage of the base stable locus.

  Args:
    m (int): number of points.
    label (int): the added label i.
    alpha (WeightVector): wall-free weights over m - 1 points.
    eps (Fraction): positive deformation parameter.

  Returns:
    ForgetfulReport: the report.

  Raises:
    WallBaseError: if alpha lies on a wall.
    InputError: if eps is not positive.
  """
  _check_label(m, label)
  if alpha.m != m - 1:
    raise errors.InputError("expected {0:d} base weights".format(m - 1))
  eps = exactgeom.to_rational(eps)
  if eps <= 0:
    raise errors.InputError("eps must be positive")

  threshold = epsilon_threshold(alpha, label)
  start, direction = _forgetful_path(alpha, label)
  values = start + direction * eps

  preimage = tuple(
      point for point in stability.configurations(m)
      if stability.sl2_classify(point.forget(label), alpha).stability ==
      StabilityClass.STABLE)
  hits = chambers.crossings(start, direction, chambers.walls(m, 2))
  crossed = tuple(_walls_crossed(hits, eps))

  outside = tuple(
      index for index, value in enumerate(values, start=1)
      if value < 0 or value > 1)
  if outside:
    logger.info("eps={0!s} leaves the hypersimplex at labels {1!s}".format(
        eps, list(outside)))
    return ForgetfulReport(
        m, label, alpha, eps, None, threshold, False, (), (), preimage,
        crossed, outside)

  weights = stability.WeightVector(values)
  table = _classify_all(m, weights)
  semistable = tuple(point for point, value in table if value.is_semistable)
  stable = tuple(
      point for point, value in table if value == StabilityClass.STABLE)

  verified = set(semistable) == set(stable) == set(preimage)
  if not verified:
    logger.info("Equality fails at eps={0!s}, threshold {1!s}".format(
        eps, threshold))

  return ForgetfulReport(
      m, label, alpha, eps, weights, threshold, verified, semistable, stable,
      preimage, crossed)


@dataclasses.dataclass(frozen=True)
class FacetReport(object):
  """Outcome of a facet map check."""

  m: int
  label: int
  alpha: stability.WeightVector
  table: tuple
  no_stable: bool
  coincident_unstable: bool

  @property
  def verified(self):
    return self.no_stable and self.coincident_unstable

  def to_dict(self):
    return {
        "m": self.m,
        "i": self.label,
        "alpha": self.alpha.to_list(),
        "table": {str(point): value.value for point, value in self.table},
        "no_stable": self.no_stable,
        "coincident_unstable": self.coincident_unstable,
        "verified": self.verified}


def _check_facet_point(m, label, alpha):
  _check_label(m, label)
  if alpha.m != m or alpha.n != 2:
    raise errors.InputError("expected {0:d} weights with sum 2".format(m))
  if alpha.alpha[label - 1] != 1:
    raise errors.InputError("weight of label {0:d} must be 1".format(label))
  if any(value <= 0 for value in alpha.alpha):
    raise errors.InputError("facet point must have positive weights")


def facet_instance(m, label, alpha):
  """Classifies every configuration at a point of the facet alpha_i = 1.

  Args:
    m (int): number of points.
    label (int): i.
    alpha (WeightVector): weights with alpha_i = 1 and all others positive.

  Returns:
    FacetReport: the table and the two checks.

  Raises:
    InputError: if alpha is not interior to the facet.
  """
  _check_facet_point(m, label, alpha)
  table = tuple(_classify_all(m, alpha))
  no_stable = all(value != StabilityClass.STABLE for _, value in table)
  coincident_unstable = all(
      value == StabilityClass.UNSTABLE
      for point, value in table if len(point.block_of(label)) > 1)
  return FacetReport(m, label, alpha, table, no_stable, coincident_unstable)


@dataclasses.dataclass(frozen=True)
class NeighborhoodReport(object):
  """Outcome of a check near a facet point."""

  m: int
  label: int
  alpha: stability.WeightVector
  eps: Fraction
  weights: stability.WeightVector
  threshold: Fraction
  equality_verified: bool
  semistable: tuple
  stable: tuple
  predicted: tuple
  crossed_walls: tuple

  @property
  def moduli_dim(self):
    """int: dimension of the quotient, a projective space."""
    return self.m - 3

  def to_dict(self):
    return {
        "m": self.m,
        "i": self.label,
        "alpha": self.alpha.to_list(),
        "eps": exactgeom.rational_to_string(self.eps),
        "weights": self.weights.to_list(),
        "threshold": exactgeom.rational_to_string(self.threshold),
        "equality_verified": self.equality_verified,
        "semistable": [str(point) for point in self.semistable],
        "stable": [str(point) for point in self.stable],
        "predicted": [str(point) for point in self.predicted],
        "crossed_walls": [wall.to_dict() for wall in self.crossed_walls],
        "moduli_dim": self.moduli_dim}


def facet_neighborhood_instance(m, label, alpha, eps):
  """Checks the semistable locus just inside the facet alpha_i = 1.

  Uses the weights (alpha_j + eps/(m-1) for j != i, 1 - eps at i). The
  predicted locus holds the configurations where i is alone and the other
  points do not all coincide.

  Args:
    m (int): number of points.
    label (int): i.
    alpha (WeightVector): facet point with alpha_i = 1.
    eps (Fraction): positive deformation parameter.

  Returns:
    NeighborhoodReport: the report.
  """
  _check_facet_point(m, label, alpha)
  eps = exactgeom.to_rational(eps)
  if eps <= 0:
    raise errors.InputError("eps must be positive")

  direction = exactgeom.QVec(
      -1 if index == label else Fraction(1, m - 1)
      for index in range(1, m + 1))
  hits = chambers.crossings(alpha.alpha, direction, chambers.walls(m, 2))
  threshold = Fraction(1)
  if hits:
    threshold = min(threshold, hits[0][0])

  weights = stability.WeightVector(alpha.alpha + direction * eps)
  table = _classify_all(m, weights)
  semistable = tuple(point for point, value in table if value.is_semistable)
  stable = tuple(
      point for point, value in table if value == StabilityClass.STABLE)
  predicted = tuple(
      point for point, _ in table
      if point.block_of(label) == (label,) and len(point.blocks) > 2)
  verified = set(semistable) == set(stable) == set(predicted)

  return NeighborhoodReport(
      m, label, alpha, eps, weights, threshold, verified, semistable, stable,
      predicted, tuple(_walls_crossed(hits, eps)))
