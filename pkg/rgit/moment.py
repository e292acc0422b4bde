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
"""Moment polytope models: hypersimplices, Pluecker vectors and matroids."""

import itertools
import logging

from fractions import Fraction

import sympy

from rgit import errors
from rgit import exactgeom


logger = logging.getLogger(__name__)


def _check_ranks(m, n):
  if not isinstance(m, int) or not isinstance(n, int):
    raise errors.InputError("m and n must be integers")
  if n < 1 or n >= m:
    raise errors.InputError(
        "require 1 <= n < m, got m={0:d} n={1:d}".format(m, n))


def subset_key(subset):
  """Formats a 1-based index set as a key such as "13" or "1,10"."""
  subset = sorted(subset)
  if all(index < 10 for index in subset):
    return "".join(str(index) for index in subset)
  return ",".join(str(index) for index in subset)


def indicator(subset, m):
  """Creates the indicator vector e_J of a 1-based index set.

  Args:
    subset (iterable[int]): 1-based indices.
    m (int): dimension.

  Returns:
    QVec: vector with ones at the indices in the subset.
  """
  coordinates = [0] * m
  for index in subset:
    if index < 1 or index > m:
      raise errors.InputError("index out of range: {0:d}".format(index))
    coordinates[index - 1] = 1
  return exactgeom.QVec(coordinates)


def hypersimplex(m, n):
  """Builds the hypersimplex {0 <= a_i <= 1, sum a = n}.

  Args:
    m (int): number of coordinates.
    n (int): coordinate sum, 1 <= n < m.

  Returns:
    Polytope: the hypersimplex.

  Raises:
    InputError: if n <= 0 or n >= m.
  """
  _check_ranks(m, n)
  points = [
      indicator(subset, m)
      for subset in itertools.combinations(range(1, m + 1), n)]
  return exactgeom.convex_hull(points)


class PluckerVector(object):
  """Pluecker coordinates of an n x m matrix of rank n.

  Attributes:
    m (int): number of columns.
    n (int): number of rows.
    entries (dict[tuple[int], Fraction]): minor per 1-based column subset,
        in lexicographic subset order.
  """

  def __init__(self, m, n, entries):
    """Initializes a Pluecker vector.

    Args:
      m (int): number of columns.
      n (int): number of rows.
      entries (dict[tuple[int], Fraction]): minors per column subset.

    Raises:
      InputError: if all entries are zero.
    """
    super(PluckerVector, self).__init__()
    self.m = m
    self.n = n
    self.entries = {
        tuple(subset): exactgeom.to_rational(value)
        for subset, value in sorted(entries.items())}
    if not any(self.entries.values()):
      raise errors.InputError("Pluecker vector with all entries zero")

  def __getitem__(self, subset):
    return self.entries[tuple(sorted(subset))]

  def support(self):
    """Retrieves the column subsets with a nonzero minor."""
    return [subset for subset, value in self.entries.items() if value != 0]

  def to_dict(self):
    """Converts the vector to a {"13": "p/q"} mapping."""
    return {
        subset_key(subset): exactgeom.rational_to_string(value)
        for subset, value in self.entries.items()}


def plucker(matrix):
  """Computes the Pluecker coordinates of a configuration matrix.

  Args:
    matrix (list[list]): n x m rational matrix.

  Returns:
    PluckerVector: the maximal minors.

  Raises:
    InputError: if the matrix is ragged or empty.
    RankDeficientError: if the rank is less than n.
  """
  rows = [[exactgeom.to_rational(value) for value in row] for row in matrix]
  if not rows or not rows[0]:
    raise errors.InputError("empty configuration matrix")
  n = len(rows)
  m = len(rows[0])
  if any(len(row) != m for row in rows):
    raise errors.InputError("ragged configuration matrix")

  if n > m:
    raise errors.RankDeficientError(
        "rank is at most {0:d} < {1:d}".format(m, n))

  sympy_matrix = sympy.Matrix([
      [sympy.Rational(value.numerator, value.denominator) for value in row]
      for row in rows])
  if sympy_matrix.rank() < n:
    raise errors.RankDeficientError(
        "configuration matrix has rank {0:d} < {1:d}".format(
            sympy_matrix.rank(), n))

  entries = {}
  for subset in itertools.combinations(range(m), n):
    minor = sympy_matrix.extract(list(range(n)), list(subset)).det()
    entries[tuple(index + 1 for index in subset)] = exactgeom.to_rational(
        sympy.Rational(minor))

  return PluckerVector(m, n, entries)


class MatroidData(object):
  """Matroid given by its bases.

  Attributes:
    m (int): size of the ground set {1..m}.
    n (int): rank.
    bases (frozenset[tuple[int]]): bases as sorted 1-based tuples.
  """

  def __init__(self, m, n, bases):
    """Initializes a matroid and checks the basis exchange axiom.

    Raises:
      InputError: if there are no bases or the exchange axiom fails.
    """
    super(MatroidData, self).__init__()
    self.m = m
    self.n = n
    self.bases = frozenset(tuple(sorted(basis)) for basis in bases)
    if not self.bases:
      raise errors.InputError("matroid without bases")

    for basis in self.bases:
      if len(basis) != n:
        raise errors.InputError("basis {0!s} is not of size {1:d}".format(
            basis, n))

    self._check_exchange()

  def _check_exchange(self):
    for first, second in itertools.permutations(self.bases, 2):
      first_set = set(first)
      second_set = set(second)
      for removed in first_set - second_set:
        if not any(
            tuple(sorted((first_set - {removed}) | {added})) in self.bases
            for added in second_set - first_set):
          raise errors.InputError(
              "basis exchange fails for {0!s} and {1!s}".format(
                  first, second))

  def rank(self, subset):
    """Computes the rank of a subset of the ground set."""
    subset = set(subset)
    return max(len(subset & set(basis)) for basis in self.bases)


def matroid(plucker_vector):
  """Derives the matroid of bases {J : p_J != 0}."""
  return MatroidData(
      plucker_vector.m, plucker_vector.n, plucker_vector.support())


def matroid_polytope(plucker_vector):
  """Builds conv{e_J : p_J != 0}, the torus orbit closure moment image."""
  points = [
      indicator(subset, plucker_vector.m)
      for subset in plucker_vector.support()]
  return exactgeom.convex_hull(points)


class WeightSet(object):
  """Characters of a diagonal torus action.

  Attributes:
    characters (list[QVec]): characters of one rank.
    rank (int): dimension of the character lattice.
  """

  def __init__(self, characters):
    """Initializes a weight set.

    Raises:
      InputError: if there are no characters or their ranks differ.
    """
    super(WeightSet, self).__init__()
    self.characters = [exactgeom.QVec(character) for character in characters]
    if not self.characters:
      raise errors.InputError("empty weight set")

    self.rank = self.characters[0].dimension
    for character in self.characters:
      if character.dimension != self.rank:
        raise errors.InputError("dimension mismatch: {0:d} != {1:d}".format(
            self.rank, character.dimension))

  def __len__(self):
    return len(self.characters)

  def __iter__(self):
    return iter(self.characters)


def weight_polytope(support, weight_set):
  """Builds the convex hull of the characters in the support.

  Args:
    support (iterable[int]): 1-based character indices.
    weight_set (WeightSet): the characters.

  Returns:
    Polytope: the weight polytope.

  Raises:
    InputError: if the support is empty or an index is out of range.
  """
  support = sorted(set(support))
  if not support:
    raise errors.InputError("empty support")

  for index in support:
    if index < 1 or index > len(weight_set):
      raise errors.InputError("character index out of range: {0:d}".format(
          index))

  return exactgeom.convex_hull(
      [weight_set.characters[index - 1] for index in support])


class LatticeMap(object):
  """Integer matrix acting on character lattices."""

  def __init__(self, matrix):
    super(LatticeMap, self).__init__()
    self.matrix = [[int(value) for value in row] for row in matrix]
    if not self.matrix or not self.matrix[0]:
      raise errors.InputError("empty lattice map")
    self.columns = len(self.matrix[0])
    if any(len(row) != self.columns for row in self.matrix):
      raise errors.InputError("ragged lattice map")

  @classmethod
  def identity(cls, dimension):
    return cls([
        [1 if row == column else 0 for column in range(dimension)]
        for row in range(dimension)])

  def apply(self, vector):
    """Maps a vector.

    Raises:
      InputError: if the vector dimension differs from the column count.
    """
    vector = exactgeom.QVec(vector)
    if vector.dimension != self.columns:
      raise errors.InputError("dimension mismatch: {0:d} != {1:d}".format(
          self.columns, vector.dimension))
    return exactgeom.QVec(
        sum((value * coordinate for value, coordinate in zip(row, vector)),
            Fraction(0))
        for row in self.matrix)


def pushforward(polytope, lattice_map):
  """Maps a polytope linearly: conv{f(v) : v vertex}.

  Raises:
    InputError: if the map does not accept the polytope dimension.
  """
  if lattice_map.columns != polytope.ambient_dimension:
    raise errors.InputError("dimension mismatch: {0:d} != {1:d}".format(
        lattice_map.columns, polytope.ambient_dimension))
  return exactgeom.convex_hull(
      [lattice_map.apply(vertex) for vertex in polytope.vertices])


def tensor_linearization(base, fiber, n):
  """Models the fractional linearization (1/n)(pi* L^n + M).

  Args:
    base (Polytope): weight polytope of the base linearization.
    fiber (Polytope): weight polytope of the fiber linearization.
    n (int): power of the base linearization, 1 or more.

  Returns:
    Polytope: the Minkowski sum base + fiber / n.

  Raises:
    InputError: if the dimensions differ or n < 1.
  """
  if not isinstance(n, int) or n < 1:
    raise errors.InputError("power must be a positive integer")
  if base.ambient_dimension != fiber.ambient_dimension:
    raise errors.InputError("dimension mismatch: {0:d} != {1:d}".format(
        base.ambient_dimension, fiber.ambient_dimension))

  scale = Fraction(1, n)
  points = [
      first + second * scale
      for first in base.vertices for second in fiber.vertices]
  logger.debug("Minkowski sum of {0:d} x {1:d} vertices".format(
      len(base.vertices), len(fiber.vertices)))
  return exactgeom.convex_hull(points)
