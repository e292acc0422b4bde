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
"""SVG rendering of plane sections through the hypersimplex with m = 4.

A section is the set of points center + s * d1 + t * d2 in the
hypersimplex. It is computed exactly in (s, t) coordinates and only turned
into floats when it is drawn with matplotlib.
"""

import functools
import io
import itertools
import logging

from fractions import Fraction

import matplotlib

from matplotlib import patches
from matplotlib.figure import Figure

from rgit import chambers
from rgit import errors
from rgit import exactgeom
from rgit import stability


# Blank space around the section, as a fraction of its larger extent.
MARGIN = 0.05

logger = logging.getLogger(__name__)


class LinearForm(object):
  """Affine function a * s + b * t + c on the section plane."""

  def __init__(self, a, b, c):
    super(LinearForm, self).__init__()
    self.a = Fraction(a)
    self.b = Fraction(b)
    self.c = Fraction(c)

  def __call__(self, point):
    return self.a * point[0] + self.b * point[1] + self.c

  def is_constant(self):
    return self.a == 0 and self.b == 0


def _intersect(first, second):
  """Intersects the lines first = 0 and second = 0, None if parallel."""
  determinant = first.a * second.b - first.b * second.a
  if determinant == 0:
    return None
  s = (first.b * second.c - second.b * first.c) / determinant
  t = (second.a * first.c - first.a * second.c) / determinant
  return (s, t)


def _centroid(points):
  count = len(points)
  return (
      sum((point[0] for point in points), Fraction(0)) / count,
      sum((point[1] for point in points), Fraction(0)) / count)


def _counter_clockwise(points):
  """Sorts points counter-clockwise around their centroid, exactly."""
  center = _centroid(points)

  def _half(vector):
    if vector[1] > 0 or (vector[1] == 0 and vector[0] > 0):
      return 0
    return 1

  def _compare(first, second):
    u = (first[0] - center[0], first[1] - center[1])
    v = (second[0] - center[0], second[1] - center[1])
    if _half(u) != _half(v):
      return _half(u) - _half(v)
    cross = u[0] * v[1] - u[1] * v[0]
    if cross > 0:
      return -1
    if cross < 0:
      return 1
    return 0

  return sorted(points, key=functools.cmp_to_key(_compare))


def _area2(polygon):
  return sum(
      (first[0] * second[1] - second[0] * first[1]
       for first, second in zip(polygon, polygon[1:] + polygon[:1])),
      Fraction(0))


def _clip(polygon, form, sign):
  """Clips a convex polygon to sign * form >= 0."""
  result = []
  for first, second in zip(polygon, polygon[1:] + polygon[:1]):
    first_value = sign * form(first)
    second_value = sign * form(second)
    if first_value >= 0:
      result.append(first)
    if (first_value > 0 and second_value < 0) or (
        first_value < 0 and second_value > 0):
      ratio = first_value / (first_value - second_value)
      result.append((
          first[0] + ratio * (second[0] - first[0]),
          first[1] + ratio * (second[1] - first[1])))

  deduplicated = []
  for point in result:
    if not deduplicated or deduplicated[-1] != point:
      deduplicated.append(point)
  if len(deduplicated) > 1 and deduplicated[0] == deduplicated[-1]:
    deduplicated.pop()
  return deduplicated


class SliceSection(object):
  """Exact section of the hypersimplex with m = 4, n = 2 by a plane.

  Attributes:
    polygon (list[tuple[Fraction]]): vertices, counter-clockwise.
    traces (list[tuple[Wall, tuple]]): wall traces clipped to the polygon.
    containing_walls (list[Wall]): walls containing the whole plane.
    cells (list[tuple[str, list]]): signature label and polygon per cell.
  """

  def __init__(self, center, first_direction, second_direction):
    """Initializes a section.

    Args:
      center (QVec): point with coordinate sum 2.
      first_direction (QVec): direction with coordinate sum 0.
      second_direction (QVec): direction with coordinate sum 0.

    Raises:
      InputError: if the vectors are not in R^4 or violate the sums.
      DegenerateSliceError: if the directions are dependent or the plane
          misses the interior of the hypersimplex.
    """
    super(SliceSection, self).__init__()
    self.center = exactgeom.QVec(center)
    self.first_direction = exactgeom.QVec(first_direction)
    self.second_direction = exactgeom.QVec(second_direction)

    for vector in (self.center, self.first_direction, self.second_direction):
      if vector.dimension != 4:
        raise errors.InputError("section vectors must have 4 coordinates")
    if self.center.total() != 2:
      raise errors.InputError("center coordinates must sum to 2")
    if self.first_direction.total() != 0 or self.second_direction.total() != 0:
      raise errors.InputError("direction coordinates must sum to 0")

    first = self.first_direction
    second = self.second_direction
    if all(first[i] * second[j] == first[j] * second[i]
           for i, j in itertools.combinations(range(4), 2)):
      raise errors.DegenerateSliceError("section directions are dependent")

    self.polygon = self._section_polygon()
    self.traces = []
    self.containing_walls = []
    self._trace_walls()
    self.cells = self._cells()

  def coordinate_form(self, index):
    """Returns the form giving coordinate index of the plane point."""
    return LinearForm(
        self.first_direction[index], self.second_direction[index],
        self.center[index])

  def wall_form(self, wall):
    """Returns the form sum_J p - d of the plane point."""
    forms = [self.coordinate_form(index - 1) for index in wall.subset]
    return LinearForm(
        sum((form.a for form in forms), Fraction(0)),
        sum((form.b for form in forms), Fraction(0)),
        sum((form.c for form in forms), Fraction(0)) - wall.d)

  def point(self, coordinates):
    """Maps plane coordinates (s, t) to a point of R^4."""
    return (
        self.center + self.first_direction * coordinates[0] +
        self.second_direction * coordinates[1])

  def _section_polygon(self):
    constraints = []
    for index in range(4):
      form = self.coordinate_form(index)
      constraints.append(form)
      constraints.append(LinearForm(-form.a, -form.b, 1 - form.c))

    for form in constraints:
      if form.is_constant() and form.c < 0:
        raise errors.DegenerateSliceError("section misses the hypersimplex")

    lines = [form for form in constraints if not form.is_constant()]
    vertices = set()
    for first, second in itertools.combinations(lines, 2):
      point = _intersect(first, second)
      if point is not None and all(form(point) >= 0 for form in constraints):
        vertices.add(point)

    if len(vertices) < 3:
      raise errors.DegenerateSliceError(
          "section meets the hypersimplex in {0:d} points".format(
              len(vertices)))

    polygon = _counter_clockwise(sorted(vertices))
    logger.debug("Section polygon with {0:d} vertices".format(len(polygon)))
    return polygon

  def _trace_walls(self):
    for wall in chambers.relevant_walls(4, 2):
      form = self.wall_form(wall)
      if form.is_constant():
        if form.c == 0:
          self.containing_walls.append(wall)
        continue

      points = []
      for first, second in zip(
          self.polygon, self.polygon[1:] + self.polygon[:1]):
        first_value = form(first)
        second_value = form(second)
        if first_value == 0:
          points.append(first)
        elif first_value * second_value < 0:
          ratio = first_value / (first_value - second_value)
          points.append((
              first[0] + ratio * (second[0] - first[0]),
              first[1] + ratio * (second[1] - first[1])))

      points = sorted(set(points))
      if len(points) == 2:
        self.traces.append((wall, tuple(points)))

  def _cells(self):
    cells = [self.polygon]
    for wall, _ in self.traces:
      form = self.wall_form(wall)
      split = []
      for cell in cells:
        for sign in (1, -1):
          part = _clip(cell, form, sign)
          if len(part) >= 3 and _area2(part) != 0:
            split.append(part)
      cells = split

    labeled = []
    for cell in cells:
      center = _centroid(cell)
      weights = stability.WeightVector(self.point(center))
      signature, _ = chambers.locate(weights)
      labeled.append((str(signature), cell))
    return sorted(labeled, key=lambda item: (item[0], _centroid(item[1])))


class SVGWriter(object):
  """Draws a SliceSection with matplotlib and saves it as SVG.

  Every drawn artist carries a gid, so the section outline, the wall
  traces and the chamber labels can be found in the document by id.
  """

  FIGURE_SIZE = (4, 4)

  RC_PARAMS = {
      "svg.fonttype": "none",
      "svg.hashsalt": "rgit",
      "font.family": "monospace"}

  def __init__(self, section):
    super(SVGWriter, self).__init__()
    self.section = section

  def _figure(self):
    figure = Figure(figsize=self.FIGURE_SIZE)
    axes = figure.add_axes((0, 0, 1, 1))
    axes.set_axis_off()
    axes.set_aspect("equal")

    polygon = [
        (float(point[0]), float(point[1])) for point in self.section.polygon]
    outline = patches.Polygon(
        polygon, closed=True, facecolor="#f4f4f4", edgecolor="#000000",
        linewidth=1.5)
    outline.set_gid("section")
    axes.add_patch(outline)

    for wall, (first, second) in sorted(
        self.section.traces, key=lambda item: item[0].key):
      axes.plot(
          [float(first[0]), float(second[0])],
          [float(first[1]), float(second[1])],
          color="#c0392b", linewidth=1, gid="wall-{0:s}".format(wall.key))

    for index, (label, cell) in enumerate(self.section.cells):
      s, t = _centroid(cell)
      axes.text(
          float(s), float(t), label, fontsize=9, horizontalalignment="center",
          verticalalignment="center", gid="chamber-{0:d}".format(index))

    for offset, wall in enumerate(self.section.containing_walls):
      axes.text(
          0.02, 0.97 - 0.05 * offset,
          "plane lies in wall {0:s}".format(wall.key), fontsize=8,
          transform=axes.transAxes, verticalalignment="top",
          gid="contained-{0:s}".format(wall.key))

    s_values = [point[0] for point in polygon]
    t_values = [point[1] for point in polygon]
    span = max(max(s_values) - min(s_values), max(t_values) - min(t_values))
    margin = span * MARGIN
    axes.set_xlim(min(s_values) - margin, max(s_values) + margin)
    axes.set_ylim(min(t_values) - margin, max(t_values) + margin)
    return figure

  def write(self, out):
    """Writes the SVG document.

    Args:
      out (file): text stream.
    """
    with matplotlib.rc_context(self.RC_PARAMS):
      figure = self._figure()
      figure.savefig(out, format="svg", metadata={"Date": None})


def render_svg(center, first_direction, second_direction):
  """Renders the section through center spanned by two directions.

  Returns:
    str: the SVG document.

  Raises:
    DegenerateSliceError: if the section is degenerate.
  """
  section = SliceSection(center, first_direction, second_direction)
  out = io.StringIO()
  SVGWriter(section).write(out)
  return out.getvalue()
