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
"""Spatial polygons with fixed side lengths."""

import dataclasses
import logging

from fractions import Fraction

from rgit import chambers
from rgit import errors
from rgit import exactgeom
from rgit import stability


logger = logging.getLogger(__name__)


class SideLengths(object):
  """Positive side lengths of an m-gon, m >= 3."""

  def __init__(self, sides):
    """Initializes the side lengths.

    Raises:
      InputError: if there are fewer than 3 sides or a side is not positive.
    """
    super(SideLengths, self).__init__()
    self.sides = tuple(exactgeom.to_rational(side) for side in sides)
    if len(self.sides) < 3:
      raise errors.InputError("a polygon needs at least 3 sides")
    if any(side <= 0 for side in self.sides):
      raise errors.InputError("side lengths must be positive")

  @property
  def m(self):
    return len(self.sides)

  def weights(self):
    """Computes the weights 2 r / sum(r)."""
    perimeter = sum(self.sides, Fraction(0))
    return stability.WeightVector(
        [2 * side / perimeter for side in self.sides])

  def to_list(self):
    return [exactgeom.rational_to_string(side) for side in self.sides]


@dataclasses.dataclass(frozen=True)
class PolygonReport(object):
  """Existence and degeneration data of a polygon space.

  Attributes:
    sides (SideLengths): the side lengths.
    exists (bool): True if closed polygons exist.
    degenerate (bool): True if lined polygons exist.
    alpha (WeightVector): normalized weights.
    signature (ChamberSignature): signs of the relevant walls, None if no
        polygon exists.
    on_walls (tuple[Wall]): relevant walls through alpha.
    facet_walls (tuple[Wall]): facet walls alpha_i = 1 through alpha.
    moduli_dim (int): complex dimension of the polygon space, None unless
        alpha is off every wall.
  """

  sides: SideLengths
  exists: bool
  degenerate: bool
  alpha: stability.WeightVector
  signature: chambers.ChamberSignature = None
  on_walls: tuple = ()
  facet_walls: tuple = ()
  moduli_dim: int = None

  def to_dict(self):
    signature = None
    if self.signature is not None:
      signature = self.signature.to_dict()
    return {
        "sides": self.sides.to_list(),
        "exists": self.exists,
        "degenerate": self.degenerate,
        "alpha": self.alpha.to_list(),
        "chamber": signature,
        "on_walls": [wall.to_dict() for wall in self.on_walls],
        "facet_walls": [wall.to_dict() for wall in self.facet_walls],
        "moduli_dim": self.moduli_dim}


def analyze(sides):
  """Decides existence and degeneration of polygons with given sides.

  Args:
    sides (SideLengths): the side lengths.

  Returns:
    PolygonReport: the report.
  """
  alpha = sides.weights()
  if not alpha.is_effective:
    return PolygonReport(sides, False, False, alpha)

  signature, on_walls = chambers.locate(alpha)
  facet_walls = chambers.facet_walls_through(alpha)
  degenerate = bool(on_walls or facet_walls)
  moduli_dim = None
  if not degenerate:
    moduli_dim = sides.m - 3

  return PolygonReport(
      sides, True, degenerate, alpha, signature, tuple(on_walls),
      tuple(facet_walls), moduli_dim)


@dataclasses.dataclass(frozen=True)
class Crossing(object):
  """One wall crossing along a path of side lengths."""

  t: Fraction
  walls: tuple
  before: chambers.ChamberSignature
  after: chambers.ChamberSignature

  def to_dict(self):
    return {
        "t": exactgeom.rational_to_string(self.t),
        "walls": [wall.to_dict() for wall in self.walls],
        "before": self.before.to_dict(),
        "after": self.after.to_dict()}


def _check_endpoint(report):
  if not report.exists:
    raise errors.NotEffectiveError(
        "no polygon with sides {0:s}".format(",".join(report.sides.to_list())))
  if report.degenerate:
    raise errors.WallBaseError(
        "sides {0:s} lie on a wall".format(",".join(report.sides.to_list())))


def wall_crossing_path(start, end):
  """Lists the walls crossed by the straight path between two weights.

  Args:
    start (SideLengths): sides at t = 0.
    end (SideLengths): sides at t = 1, same count.

  Returns:
    list[Crossing]: crossings in increasing t, with every wall crossed at
        the same t in one entry.

  Raises:
    InputError: if the side counts differ.
    NotEffectiveError: if an endpoint admits no polygon.
    WallBaseError: if an endpoint lies on a wall.
  """
  if start.m != end.m:
    raise errors.InputError("side counts differ: {0:d} != {1:d}".format(
        start.m, end.m))

  start_report = analyze(start)
  end_report = analyze(end)
  _check_endpoint(start_report)
  _check_endpoint(end_report)

  origin = start_report.alpha.alpha
  direction = end_report.alpha.alpha - origin
  hits = [
      (parameter, wall_list)
      for parameter, wall_list in chambers.crossings(
          origin, direction, chambers.relevant_walls(start.m, 2))
      if parameter < 1]

  def _signature(parameter):
    weights = stability.WeightVector(origin + direction * parameter)
    return chambers.locate(weights)[0]

  parameters = [Fraction(0)] + [parameter for parameter, _ in hits]
  parameters.append(Fraction(1))
  result = []
  for index, (parameter, wall_list) in enumerate(hits):
    before = _signature((parameters[index] + parameter) / 2)
    after = _signature((parameter + parameters[index + 2]) / 2)
    result.append(Crossing(parameter, tuple(wall_list), before, after))
    logger.debug("Crossing {0:s} at t={1!s}".format(
        ",".join(wall.key for wall in wall_list), parameter))

  return result
