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
"""Exact rational convex geometry: vectors, hyperplanes, polytopes and LP."""

import collections
import dataclasses
import enum
import logging
import math
import numbers

from fractions import Fraction
from functools import reduce

import sympy

from rgit import errors
from rgit import simplex


logger = logging.getLogger(__name__)

SignedDistance = collections.namedtuple(
    "SignedDistance", ["sign", "sq_magnitude"])

NearestPoint = collections.namedtuple(
    "NearestPoint", ["point", "sq_distance"])


def to_rational(value):
  """Converts a value into an exact rational.

  Args:
    value (int|Fraction|str|numbers.Rational): value such as 3, "1/2" or
        "-0.25".

  Returns:
    Fraction: the value.

  Raises:
    InputError: if the value is not an exact rational, floats included.
  """
  if isinstance(value, Fraction):
    return value

  if isinstance(value, bool) or isinstance(value, float):
    raise errors.InputError(
        "Unsupported rational value: {0!r}".format(value))

  if isinstance(value, int):
    return Fraction(value)

  if isinstance(value, str):
    try:
      return Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
      raise errors.InputError("Invalid rational: {0:s}".format(value))

  if isinstance(value, sympy.Rational):
    return Fraction(int(value.p), int(value.q))

  if isinstance(value, numbers.Rational):
    return Fraction(int(value.numerator), int(value.denominator))

  raise errors.InputError("Unsupported rational value: {0!r}".format(value))


def rational_to_string(value):
  """Formats a rational as "p/q", or "p" for integers."""
  return str(to_rational(value))


def _lcm(first, second):
  return first * second // math.gcd(first, second)


def primitive_scale(values):
  """Computes the positive factor turning values into coprime integers.

  Args:
    values (iterable[Fraction]): values, not all zero.

  Returns:
    Fraction: factor k > 0 such that k * values are coprime integers.
  """
  values = [to_rational(value) for value in values]
  denominator = reduce(_lcm, (value.denominator for value in values), 1)
  integers = [int(value * denominator) for value in values]
  divisor = reduce(math.gcd, (abs(value) for value in integers), 0)
  if divisor == 0:
    raise errors.InputError("Zero vector has no primitive scale.")
  return Fraction(denominator, divisor)


class QVec(object):
  """Immutable vector of exact rationals."""

  __slots__ = ("_coordinates",)

  def __init__(self, coordinates=()):
    """Initializes a vector.

    Args:
      coordinates (iterable): values accepted by to_rational.
    """
    if isinstance(coordinates, QVec):
      coordinates = coordinates._coordinates
    else:
      coordinates = tuple(to_rational(value) for value in coordinates)
    object.__setattr__(self, "_coordinates", coordinates)

  def __setattr__(self, name, value):
    raise AttributeError("QVec is immutable")

  @classmethod
  def zero(cls, dimension):
    """Creates the zero vector."""
    return cls([0] * dimension)

  @classmethod
  def unit(cls, dimension, index):
    """Creates the unit vector with a one at the 0-based index."""
    coordinates = [0] * dimension
    coordinates[index] = 1
    return cls(coordinates)

  @property
  def dimension(self):
    """int: number of coordinates."""
    return len(self._coordinates)

  def __len__(self):
    return len(self._coordinates)

  def __iter__(self):
    return iter(self._coordinates)

  def __getitem__(self, index):
    if isinstance(index, slice):
      return QVec(self._coordinates[index])
    return self._coordinates[index]

  def __eq__(self, other):
    if not isinstance(other, QVec):
      return NotImplemented
    return self._coordinates == other._coordinates

  def __lt__(self, other):
    if not isinstance(other, QVec):
      return NotImplemented
    return self._coordinates < other._coordinates

  def __hash__(self):
    return hash(self._coordinates)

  def __repr__(self):
    return "QVec({0:s})".format(
        ", ".join(str(value) for value in self._coordinates))

  def _check_dimension(self, other):
    if len(other) != len(self._coordinates):
      raise errors.InputError("dimension mismatch: {0:d} != {1:d}".format(
          len(self._coordinates), len(other)))

  def __add__(self, other):
    other = QVec(other)
    self._check_dimension(other)
    return QVec(a + b for a, b in zip(self._coordinates, other))

  def __sub__(self, other):
    other = QVec(other)
    self._check_dimension(other)
    return QVec(a - b for a, b in zip(self._coordinates, other))

  def __neg__(self):
    return QVec(-value for value in self._coordinates)

  def __mul__(self, scalar):
    scalar = to_rational(scalar)
    return QVec(value * scalar for value in self._coordinates)

  __rmul__ = __mul__

  def __truediv__(self, scalar):
    scalar = to_rational(scalar)
    return QVec(value / scalar for value in self._coordinates)

  def dot(self, other):
    """Computes the exact inner product."""
    other = QVec(other)
    self._check_dimension(other)
    return sum(
        (a * b for a, b in zip(self._coordinates, other)), Fraction(0))

  def squared_norm(self):
    """Computes the exact squared Euclidean norm."""
    return self.dot(self)

  def is_zero(self):
    """Determines if all coordinates are zero."""
    return not any(self._coordinates)

  def total(self):
    """Computes the sum of the coordinates."""
    return sum(self._coordinates, Fraction(0))


@dataclasses.dataclass(frozen=True)
class Hyperplane(object):
  """Hyperplane <normal, x> = offset.

  Attributes:
    normal (QVec): nonzero normal vector.
    offset (Fraction): right-hand side.
  """

  normal: QVec
  offset: Fraction

  def __post_init__(self):
    object.__setattr__(self, "normal", QVec(self.normal))
    object.__setattr__(self, "offset", to_rational(self.offset))
    if self.normal.is_zero():
      raise errors.InputError("Hyperplane normal must be nonzero.")

  @classmethod
  def canonical(cls, normal, offset):
    """Creates the canonical representative of a hyperplane.

    The normal becomes a coprime integer vector with a positive first
    nonzero entry.

    Args:
      normal (QVec): nonzero normal.
      offset (Fraction): right-hand side.

    Returns:
      Hyperplane: canonical hyperplane.
    """
    normal = QVec(normal)
    scale = primitive_scale(normal)
    for value in normal:
      if value != 0:
        if value < 0:
          scale = -scale
        break
    return cls(normal * scale, to_rational(offset) * scale)

  def evaluate(self, point):
    """Computes <normal, point> - offset."""
    return self.normal.dot(point) - self.offset

  def contains(self, point):
    """Determines if the point lies on the hyperplane."""
    return self.evaluate(point) == 0


@dataclasses.dataclass(frozen=True)
class Facet(object):
  """Facet inequality <normal, x> <= offset of a polytope.

  Attributes:
    normal (QVec): coprime integer normal, parallel to the affine hull.
    offset (Fraction): right-hand side.
    vertex_indices (frozenset[int]): indices of the vertices on the facet.
  """

  normal: QVec
  offset: Fraction
  vertex_indices: frozenset

  def slack(self, point):
    """Computes offset - <normal, point>, non-negative inside."""
    return self.offset - self.normal.dot(point)

  @property
  def hyperplane(self):
    """Hyperplane: canonical supporting hyperplane."""
    return Hyperplane.canonical(self.normal, self.offset)

  @property
  def orientation(self):
    """int: +1 if the polytope lies on the <= side of the hyperplane."""
    if self.hyperplane.normal == self.normal:
      return 1
    return -1


class Membership(enum.Enum):
  """Position of a point relative to a polytope."""

  OUTSIDE = "outside"
  ON_BOUNDARY = "on_boundary"
  INTERIOR_FULL_DIM = "interior_full_dim"
  RELATIVE_INTERIOR_ONLY = "relative_interior_only"


class Polytope(object):
  """Convex polytope with both its V- and H-representation.

  Use convex_hull to construct one.
  """

  def __init__(
      self, vertices, facets, equations, ambient_dimension, affine_dimension):
    """Initializes a polytope.

    Args:
      vertices (list[QVec]): irredundant vertices, sorted.
      facets (list[Facet]): facet inequalities.
      equations (list[Hyperplane]): equations of the affine hull.
      ambient_dimension (int): dimension of the ambient space.
      affine_dimension (int): dimension of the affine hull.
    """
    super(Polytope, self).__init__()
    self._vertices = tuple(vertices)
    self._facets = tuple(facets)
    self._equations = tuple(equations)
    self._ambient_dimension = ambient_dimension
    self._affine_dimension = affine_dimension
    self._faces = None

  @property
  def vertices(self):
    """tuple[QVec]: vertices in lexicographic order."""
    return self._vertices

  @property
  def facets(self):
    """tuple[Facet]: facet inequalities."""
    return self._facets

  @property
  def equations(self):
    """tuple[Hyperplane]: equations of the affine hull."""
    return self._equations

  @property
  def ambient_dimension(self):
    """int: dimension of the ambient space."""
    return self._ambient_dimension

  @property
  def affine_dimension(self):
    """int: dimension of the affine hull."""
    return self._affine_dimension

  def is_full_dimensional(self):
    """Determines if the affine hull is the whole ambient space."""
    return self._affine_dimension == self._ambient_dimension

  def contains(self, point):
    """Determines if the point lies in the polytope."""
    return membership(point, self) != Membership.OUTSIDE

  def faces(self):
    """Retrieves all nonempty faces, the polytope itself included.

    Returns:
      list[frozenset[int]]: vertex index sets, smallest faces first.
    """
    if self._faces is None:
      facet_sets = {facet.vertex_indices for facet in self._facets}
      faces = set(facet_sets)
      frontier = set(facet_sets)
      while frontier:
        found = set()
        for face in frontier:
          for facet_set in facet_sets:
            intersection = face & facet_set
            if intersection and intersection not in faces:
              found.add(intersection)
        faces |= found
        frontier = found

      faces.add(frozenset(range(len(self._vertices))))
      self._faces = sorted(faces, key=lambda face: (len(face), sorted(face)))

    return list(self._faces)

  def __eq__(self, other):
    if not isinstance(other, Polytope):
      return NotImplemented
    return (
        self._ambient_dimension == other.ambient_dimension and
        set(self._vertices) == set(other.vertices))

  def __hash__(self):
    return hash((self._ambient_dimension, frozenset(self._vertices)))

  def __repr__(self):
    return "Polytope(vertices={0:d}, facets={1:d}, affine_dim={2:d})".format(
        len(self._vertices), len(self._facets), self._affine_dimension)


@dataclasses.dataclass(frozen=True)
class Constraint(object):
  """Linear constraint <coefficients, x> sense rhs.

  Attributes:
    coefficients (QVec): coefficient vector.
    sense (str): one of "<=", ">=" or "==".
    rhs (Fraction): right-hand side.
  """

  coefficients: QVec
  sense: str
  rhs: Fraction

  SENSES = ("<=", ">=", "==")

  def __post_init__(self):
    object.__setattr__(self, "coefficients", QVec(self.coefficients))
    object.__setattr__(self, "rhs", to_rational(self.rhs))
    if self.sense not in self.SENSES:
      raise errors.InputError(
          "Unsupported constraint sense: {0!s}".format(self.sense))

  @classmethod
  def less_equal(cls, coefficients, rhs):
    return cls(coefficients, "<=", rhs)

  @classmethod
  def greater_equal(cls, coefficients, rhs):
    return cls(coefficients, ">=", rhs)

  @classmethod
  def equal(cls, coefficients, rhs):
    return cls(coefficients, "==", rhs)

  @property
  def dimension(self):
    """int: number of variables."""
    return self.coefficients.dimension

  def is_equality(self):
    """Determines if the constraint is an equation."""
    return self.sense == "=="

  def normalized(self):
    """Rewrites the constraint as a . x - b >= 0 (or == 0).

    Returns:
      tuple[QVec, Fraction]: a and b.
    """
    if self.sense == "<=":
      return -self.coefficients, -self.rhs
    return self.coefficients, self.rhs

  def is_satisfied(self, point):
    """Determines if the point satisfies the constraint."""
    value = self.coefficients.dot(point)
    if self.sense == "<=":
      return value <= self.rhs
    if self.sense == ">=":
      return value >= self.rhs
    return value == self.rhs


@dataclasses.dataclass(frozen=True)
class Feasible(object):
  """Feasibility verdict with a witness point."""

  witness: QVec

  feasible = True


@dataclasses.dataclass(frozen=True)
class Infeasible(object):
  """Infeasibility verdict with a Farkas certificate.

  The certificate holds one multiplier per constraint, non-negative for
  inequalities, such that combining the normalized constraints
  a . x - b >= 0 gives the constant -1.
  """

  certificate: QVec

  feasible = False


@dataclasses.dataclass(frozen=True)
class LPResult(object):
  """Result of an exact linear program.

  Attributes:
    status (str): "optimal", "unbounded" or "infeasible".
    point (QVec): optimal point or None.
    value (Fraction): optimal value or None.
  """

  status: str
  point: QVec = None
  value: Fraction = None


def _check_constraints(constraints):
  constraints = list(constraints)
  if not constraints:
    raise errors.InputError("At least one constraint is required.")

  dimension = constraints[0].dimension
  for constraint in constraints:
    if constraint.dimension != dimension:
      raise errors.InputError("dimension mismatch: {0:d} != {1:d}".format(
          dimension, constraint.dimension))
  return constraints, dimension


def _standard_form(constraints, dimension):
  """Builds standard form rows over x = u - v and one slack per inequality.

  Returns:
    tuple[list[list[Fraction]], list[Fraction], int]: rows, right-hand sides
        and the number of columns.
  """
  inequalities = [
      index for index, constraint in enumerate(constraints)
      if not constraint.is_equality()]
  number_of_columns = 2 * dimension + len(inequalities)

  rows = []
  rhs = []
  for index, constraint in enumerate(constraints):
    coefficients, value = constraint.normalized()
    row = list(coefficients) + [-coefficient for coefficient in coefficients]
    row.extend([Fraction(0)] * len(inequalities))
    if not constraint.is_equality():
      row[2 * dimension + inequalities.index(index)] = Fraction(-1)
    rows.append(row)
    rhs.append(value)

  return rows, rhs, number_of_columns


def _split_solution(solution, dimension):
  return QVec(
      solution[index] - solution[dimension + index]
      for index in range(dimension))


def _farkas_certificate(constraints, dimension):
  """Solves the alternative system for a Farkas certificate.

  Variables are y+ for every constraint and y- for equations; the rows
  require sum y_k a_k = 0 and sum y_k b_k = 1.
  """
  equations = [
      index for index, constraint in enumerate(constraints)
      if constraint.is_equality()]
  normalized = [constraint.normalized() for constraint in constraints]
  number_of_columns = len(constraints) + len(equations)

  def _column_values(coordinate):
    values = [
        coefficients[coordinate] for coefficients, _ in normalized]
    values.extend(-normalized[index][0][coordinate] for index in equations)
    return values

  rows = [_column_values(coordinate) for coordinate in range(dimension)]
  rhs = [Fraction(0)] * dimension

  offsets = [value for _, value in normalized]
  offsets.extend(-normalized[index][1] for index in equations)
  rows.append(offsets)
  rhs.append(Fraction(1))

  status, solution, _ = simplex.solve(rows, rhs, number_of_columns)
  if status != simplex.OPTIMAL:
    raise RuntimeError("Farkas alternative unexpectedly infeasible.")

  multipliers = list(solution[:len(constraints)])
  for offset, index in enumerate(equations):
    multipliers[index] -= solution[len(constraints) + offset]
  return QVec(multipliers)


def lp_feasible(constraints):
  """Decides feasibility of a system of linear constraints exactly.

  Args:
    constraints (list[Constraint]): constraints over one dimension.

  Returns:
    Feasible|Infeasible: verdict with a witness or a Farkas certificate.

  Raises:
    InputError: if the constraints do not share one dimension.
  """
  constraints, dimension = _check_constraints(constraints)
  rows, rhs, number_of_columns = _standard_form(constraints, dimension)
  status, solution, _ = simplex.solve(rows, rhs, number_of_columns)

  if status == simplex.OPTIMAL:
    return Feasible(_split_solution(solution, dimension))

  return Infeasible(_farkas_certificate(constraints, dimension))


def lp_maximize(objective, constraints):
  """Maximizes a linear objective exactly.

  Args:
    objective (QVec): objective coefficients.
    constraints (list[Constraint]): constraints.

  Returns:
    LPResult: optimal point and value, or the unbounded/infeasible status.
  """
  constraints, dimension = _check_constraints(constraints)
  objective = QVec(objective)
  if objective.dimension != dimension:
    raise errors.InputError("dimension mismatch: {0:d} != {1:d}".format(
        dimension, objective.dimension))

  rows, rhs, number_of_columns = _standard_form(constraints, dimension)
  costs = [-value for value in objective] + list(objective)
  costs.extend([Fraction(0)] * (number_of_columns - 2 * dimension))

  status, solution, value = simplex.solve(
      rows, rhs, number_of_columns, costs=costs)
  if status != simplex.OPTIMAL:
    return LPResult(status)

  return LPResult(status, _split_solution(solution, dimension), -value)


def verify_certificate(constraints, certificate):
  """Verifies a Farkas certificate by substitution.

  Args:
    constraints (list[Constraint]): the constraints.
    certificate (QVec): one multiplier per constraint.

  Returns:
    bool: True if the combination is the negative constant -1 or less.
  """
  constraints = list(constraints)
  if len(certificate) != len(constraints):
    return False

  dimension = constraints[0].dimension
  combined = QVec.zero(dimension)
  offset = Fraction(0)
  for multiplier, constraint in zip(certificate, constraints):
    if not constraint.is_equality() and multiplier < 0:
      return False
    coefficients, value = constraint.normalized()
    combined += coefficients * multiplier
    offset += multiplier * value

  return combined.is_zero() and offset > 0


def _sympy_matrix(rows):
  return sympy.Matrix([
      [sympy.Rational(value.numerator, value.denominator) for value in row]
      for row in rows])


def _primitive_integers(values):
  scale = primitive_scale(values)
  return tuple(int(value * scale) for value in values)


class _AffineStructure(object):
  """Affine hull data of a point set with at least two distinct points."""

  def __init__(self, points):
    super(_AffineStructure, self).__init__()
    base = points[0]
    differences = [point - base for point in points[1:]]
    matrix = _sympy_matrix(differences)

    _, pivots = matrix.T.rref()
    self.base = base
    self.basis = [differences[index] for index in pivots]
    self.independent = [0] + [index + 1 for index in pivots]
    self.dimension = len(pivots)

    _, coordinates = _sympy_matrix(self.basis).rref()
    self.coordinates = list(coordinates)

    equations = []
    for vector in matrix.nullspace():
      normal = QVec(to_rational(value) for value in vector)
      equations.append(Hyperplane.canonical(normal, normal.dot(base)))
    self.equations = sorted(
        equations, key=lambda equation: (equation.normal, equation.offset))

    self._projector = None
    if self.dimension < base.dimension:
      basis_matrix = _sympy_matrix(self.basis)
      projector = (
          basis_matrix.T * (basis_matrix * basis_matrix.T).inv() *
          basis_matrix)
      self._projector = [
          [to_rational(projector[row, column])
           for column in range(base.dimension)]
          for row in range(base.dimension)]

  def project_direction(self, vector):
    """Orthogonally projects a vector onto the direction space."""
    if self._projector is None:
      return QVec(vector)
    return QVec(QVec(row).dot(vector) for row in self._projector)


def _double_description(points, initial, dimension):
  """Enumerates the facets of a full-dimensional integer point set.

  Runs the double description method on the cone of valid inequalities
  {(b, a) : b - a . p >= 0 for every point p}, whose extreme rays are the
  facets.

  Args:
    points (list[tuple[int]]): points in Z^dimension.
    initial (list[int]): indices of dimension + 1 affinely independent
        points.
    dimension (int): dimension of the points.

  Returns:
    list[tuple[int]]: facet rays (b, a_1, ..., a_dimension).
  """
  cone_dimension = dimension + 1
  rows = [(1,) + tuple(-value for value in point) for point in points]

  inverse = sympy.Matrix([rows[index] for index in initial]).inv()
  rays = []
  for column in range(cone_dimension):
    ray = _primitive_integers([
        to_rational(inverse[row, column]) for row in range(cone_dimension)])
    zero_set = frozenset(
        initial[index] for index in range(cone_dimension) if index != column)
    rays.append((ray, zero_set))

  initial_set = set(initial)
  for index, row in enumerate(rows):
    if index in initial_set:
      continue

    values = [sum(a * b for a, b in zip(row, ray)) for ray, _ in rays]
    if all(value >= 0 for value in values):
      rays = [
          (ray, zero_set | {index}) if value == 0 else (ray, zero_set)
          for (ray, zero_set), value in zip(rays, values)]
      continue

    updated = []
    positive = []
    negative = []
    for position, ((ray, zero_set), value) in enumerate(zip(rays, values)):
      if value > 0:
        updated.append((ray, zero_set))
        positive.append(position)
      elif value == 0:
        updated.append((ray, zero_set | {index}))
      else:
        negative.append(position)

    for first in positive:
      first_ray, first_zero = rays[first]
      for second in negative:
        second_ray, second_zero = rays[second]
        common = first_zero & second_zero
        if len(common) < cone_dimension - 2:
          continue

        adjacent = True
        for position, (_, zero_set) in enumerate(rays):
          if position not in (first, second) and common <= zero_set:
            adjacent = False
            break
        if not adjacent:
          continue

        first_value = values[first]
        second_value = values[second]
        combined = [
            first_value * b - second_value * a
            for a, b in zip(first_ray, second_ray)]
        updated.append((_primitive_integers(combined), common | {index}))

    rays = updated
    logger.debug("Double description step {0:d}: {1:d} rays".format(
        index, len(rays)))

  return [ray for ray, _ in rays]


def convex_hull(points):
  """Computes the convex hull of a finite point set.

  Args:
    points (list[QVec]): nonempty list of points of one dimension.

  Returns:
    Polytope: the hull, with vertices, facets and affine hull equations.

  Raises:
    InputError: if the list is empty or the dimensions differ.
  """
  points = [QVec(point) for point in points]
  if not points:
    raise errors.InputError("convex hull of an empty point set")

  ambient_dimension = points[0].dimension
  for point in points:
    if point.dimension != ambient_dimension:
      raise errors.InputError("dimension mismatch: {0:d} != {1:d}".format(
          ambient_dimension, point.dimension))

  unique = sorted(set(points))
  if len(unique) == 1:
    equations = [
        Hyperplane.canonical(QVec.unit(ambient_dimension, index), value)
        for index, value in enumerate(unique[0])]
    return Polytope(unique, [], equations, ambient_dimension, 0)

  structure = _AffineStructure(unique)
  dimension = structure.dimension

  projected = [
      [point[coordinate] for coordinate in structure.coordinates]
      for point in unique]
  denominator = reduce(
      _lcm, (value.denominator for row in projected for value in row), 1)
  integer_points = [
      tuple(int(value * denominator) for value in row) for row in projected]

  rays = _double_description(integer_points, structure.independent, dimension)

  facet_data = []
  for ray in rays:
    lifted = [Fraction(0)] * ambient_dimension
    for coordinate, value in zip(structure.coordinates, ray[1:]):
      lifted[coordinate] = Fraction(value)
    normal = structure.project_direction(lifted)
    normal = normal * primitive_scale(normal)

    values = [normal.dot(point) for point in unique]
    offset = max(values)
    tight = frozenset(
        index for index, value in enumerate(values) if value == offset)
    facet_data.append((normal, offset, tight))

  tight_sets = [
      frozenset(
          position for position, (_, _, tight) in enumerate(facet_data)
          if index in tight)
      for index in range(len(unique))]
  vertex_indices = [
      index for index in range(len(unique))
      if not any(
          other != index and tight_sets[index] <= tight_sets[other]
          for other in range(len(unique)))]

  vertices = [unique[index] for index in vertex_indices]
  renumber = {old: new for new, old in enumerate(vertex_indices)}
  facets = [
      Facet(normal, offset, frozenset(
          renumber[index] for index in tight if index in renumber))
      for normal, offset, tight in facet_data]
  facets.sort(key=lambda facet: (facet.normal, facet.offset))

  logger.debug("Convex hull: {0:d} points, {1:d} vertices, {2:d} facets".format(
      len(unique), len(vertices), len(facets)))

  return Polytope(
      vertices, facets, structure.equations, ambient_dimension, dimension)


def _check_point(point, polytope):
  point = QVec(point)
  if point.dimension != polytope.ambient_dimension:
    raise errors.InputError("dimension mismatch: {0:d} != {1:d}".format(
        point.dimension, polytope.ambient_dimension))
  if not polytope.vertices:
    raise errors.InputError("empty polytope")
  return point


def membership(point, polytope):
  """Locates a point relative to a polytope, exactly.

  Args:
    point (QVec): the point.
    polytope (Polytope): the polytope.

  Returns:
    Membership: the position of the point.

  Raises:
    InputError: if the dimensions do not match.
  """
  point = _check_point(point, polytope)
  for equation in polytope.equations:
    if not equation.contains(point):
      return Membership.OUTSIDE

  slacks = [facet.slack(point) for facet in polytope.facets]
  if any(slack < 0 for slack in slacks):
    return Membership.OUTSIDE
  if any(slack == 0 for slack in slacks):
    return Membership.ON_BOUNDARY
  if polytope.is_full_dimensional():
    return Membership.INTERIOR_FULL_DIM
  return Membership.RELATIVE_INTERIOR_ONLY


def _project_onto_affine_span(points, point):
  """Orthogonally projects a point onto the affine span of points."""
  base = points[0]
  differences = [other - base for other in points[1:]]
  differences = [difference for difference in differences
                 if not difference.is_zero()]
  if not differences:
    return base

  _, pivots = _sympy_matrix(differences).T.rref()
  basis = _sympy_matrix([differences[index] for index in pivots])
  offset = _sympy_matrix([point - base]).T
  coefficients = (basis * basis.T).inv() * (basis * offset)
  shift = basis.T * coefficients
  return base + QVec(
      to_rational(shift[index, 0]) for index in range(base.dimension))


def nearest_point(point, polytope):
  """Finds the nearest point of a polytope by face enumeration.

  The answer is the orthogonal projection onto the affine span of some face
  that lies in the polytope and satisfies <p - q, v - q> <= 0 for every
  vertex v.

  Args:
    point (QVec): the point.
    polytope (Polytope): the polytope.

  Returns:
    NearestPoint: the nearest point and the squared distance.

  Raises:
    InputError: if the polytope is empty or the dimensions do not match.
  """
  point = _check_point(point, polytope)
  if membership(point, polytope) != Membership.OUTSIDE:
    return NearestPoint(point, Fraction(0))

  for face in polytope.faces():
    face_vertices = [polytope.vertices[index] for index in sorted(face)]
    candidate = _project_onto_affine_span(face_vertices, point)
    if membership(candidate, polytope) == Membership.OUTSIDE:
      continue

    direction = point - candidate
    if all(direction.dot(vertex - candidate) <= 0
           for vertex in polytope.vertices):
      return NearestPoint(candidate, direction.squared_norm())

  raise RuntimeError("No face satisfied the variational inequality.")


def signed_sq_distance_to_boundary(point, polytope, within_affine_hull=False):
  """Computes the signed squared distance of a point to the boundary.

  Args:
    point (QVec): the point.
    polytope (Polytope): the polytope.
    within_affine_hull (Optional[bool]): True to measure interior distances
        inside the affine hull of a lower-dimensional polytope instead of
        reporting it as boundary.

  Returns:
    SignedDistance: sign +1 outside, 0 on the boundary and -1 inside, with
        the exact squared Euclidean distance.
  """
  status = membership(point, polytope)
  if status == Membership.OUTSIDE:
    nearest = nearest_point(point, polytope)
    return SignedDistance(1, nearest.sq_distance)

  if status == Membership.ON_BOUNDARY or not polytope.facets:
    return SignedDistance(0, Fraction(0))

  if (status == Membership.RELATIVE_INTERIOR_ONLY and
      not within_affine_hull):
    return SignedDistance(0, Fraction(0))

  point = QVec(point)
  distance = min(
      facet.slack(point) ** 2 / facet.normal.squared_norm()
      for facet in polytope.facets)
  return SignedDistance(-1, distance)
