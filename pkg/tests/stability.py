#!/usr/bin/python
# -*- coding: utf-8 -*-
"""Tests for stability of configurations and torus orbits."""

import unittest

from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from rgit import errors
from rgit import exactgeom
from rgit import moment
from rgit import stability

import test_lib


StabilityClass = stability.StabilityClass

_INTEGER_WEIGHTS = st.lists(
    st.integers(0, 6), min_size=4, max_size=5).filter(
        lambda values: sum(values) > 0 and 2 * max(values) <= sum(values))

_LATTICE_POINTS = st.lists(
    st.tuples(st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=5)

_SHIFTS = st.tuples(
    st.fractions(min_value=-1, max_value=3, max_denominator=2),
    st.fractions(min_value=-1, max_value=3, max_denominator=2))


_COLUMNS_P2 = st.lists(
    st.tuples(*[st.integers(-2, 2)] * 3).filter(any), min_size=4, max_size=5)

_SPACES = st.integers(3, 5).flatmap(lambda dimension: st.tuples(
    st.lists(
        st.lists(st.integers(0, 1), min_size=dimension, max_size=dimension),
        min_size=1, max_size=6),
    st.lists(
        st.fractions(min_value=-1, max_value=2, max_denominator=2),
        min_size=dimension, max_size=dimension)))

_ORDER = {
    StabilityClass.UNSTABLE: 0,
    StabilityClass.STRICTLY_SEMISTABLE: 1,
    StabilityClass.STABLE: 2}


def _normalize(values, n=2):
  """Scales non-negative integers to weights with sum n."""
  total = sum(values)
  return stability.WeightVector(
      [Fraction(n * value, total) for value in values], n)


def _draw_weights(data, m, n):
  """Draws effective weights over m labels with sum n."""
  values = data.draw(st.lists(
      st.integers(0, 6), min_size=m, max_size=m).filter(
          lambda values: sum(values) > 0 and n * max(values) <= sum(values)))
  return _normalize(values, n)


def _determinant(matrix):
  """Computes the determinant of a 3 x 3 matrix."""
  (a, b, c), (d, e, f), (g, h, i) = matrix
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _configuration_p2(columns):
  """Builds a configuration of P2, skipping those of rank below 3."""
  configuration = stability.SLnConfig([list(row) for row in zip(*columns)])
  assume(configuration.rank() == 3)
  return configuration


class WeightVectorTest(unittest.TestCase):
  """The unit test for the WeightVector object."""

  def testInitialize(self):
    """Test the initialize functionality."""
    weights = test_lib.weights_of("1/2", "1/2", "1/2", "1/2")
    self.assertEqual(weights.m, 4)
    self.assertEqual(weights.n, 2)
    self.assertTrue(weights.is_effective)
    self.assertEqual(weights.to_list(), ["1/2", "1/2", "1/2", "1/2"])
    self.assertEqual(weights.subset_sum((1, 3)), 1)
    self.assertEqual(weights.zero_labels(), [])

  def testErrors(self):
    """Test that invalid weights are rejected."""
    with self.assertRaises(errors.InputError):
      test_lib.weights_of(1, 1, 1)

    with self.assertRaises(errors.NotEffectiveError):
      test_lib.weights_of("-1/2", "3/2", 1)

    with self.assertRaises(errors.InputError):
      test_lib.weights_of(2)

    with self.assertRaises(errors.InputError):
      test_lib.weights_of(0, 0, n=0)

  def testEffective(self):
    """Test the effective functionality."""
    weights = test_lib.weights_of("3/2", "1/2", 0)
    self.assertFalse(weights.is_effective)
    self.assertEqual(weights.zero_labels(), [3])

    with self.assertRaises(errors.NotEffectiveError):
      weights.require_effective()

    with self.assertRaises(errors.NotEffectiveError):
      stability.WeightVector.effective([Fraction(3, 2), Fraction(1, 2), 0])


class ConfigurationP1Test(unittest.TestCase):
  """The unit test for the ConfigurationP1 object."""

  def testInitialize(self):
    """Test the initialize functionality."""
    configuration = stability.ConfigurationP1([[4], [2, 1], [3]])
    self.assertEqual(configuration.blocks, ((1, 2), (3,), (4,)))
    self.assertEqual(configuration.m, 4)
    self.assertEqual(str(configuration), "12|3|4")
    self.assertEqual(configuration.block_of(2), (1, 2))
    self.assertEqual(configuration, test_lib.partition_of("12|3|4"))

    with self.assertRaises(errors.InputError):
      stability.ConfigurationP1([[1], [3]])

    with self.assertRaises(errors.InputError):
      stability.ConfigurationP1([[1], []])

  def testFromPoints(self):
    """Test the from_points functionality."""
    configuration = stability.ConfigurationP1.from_points(
        [(1, 0), (2, 0), (0, 1), (1, 1)])
    self.assertEqual(str(configuration), "12|3|4")

    with self.assertRaises(errors.InputError):
      stability.ConfigurationP1.from_points([(0, 0), (1, 0)])

    with self.assertRaises(errors.InputError):
      stability.ConfigurationP1([[1, 2], [3]], points=[(1, 0), (0, 1), (1, 1)])

  def testForget(self):
    """Test the forget functionality."""
    configuration = test_lib.partition_of("12|3|4")
    self.assertEqual(str(configuration.forget(1)), "1|2|3")
    self.assertEqual(str(configuration.forget(3)), "12|3")
    self.assertEqual(str(test_lib.partition_of("13|2|4").forget(2)), "12|3")

  def testRefines(self):
    """Test the refines functionality."""
    generic = stability.ConfigurationP1.generic(4)
    coarse = test_lib.partition_of("12|3|4")
    self.assertTrue(generic.refines(coarse))
    self.assertFalse(coarse.refines(generic))

  def testLargeLabels(self):
    """Test the string form with labels of two digits."""
    configuration = stability.ConfigurationP1(
        [[label] for label in range(1, 10)] + [[10]])
    merged = stability.ConfigurationP1(
        [[1, 10]] + [[label] for label in range(2, 10)])
    self.assertTrue(str(configuration).endswith("|9|10"))
    self.assertTrue(str(merged).startswith("1,10|2"))


class SetPartitionsTest(unittest.TestCase):
  """The unit test for the set partition enumeration."""

  def testOrder(self):
    """Test the restricted growth string order."""
    partitions = list(stability.set_partitions(3))
    self.assertEqual(partitions, [
        [[1, 2, 3]], [[1, 2], [3]], [[1, 3], [2]], [[1], [2, 3]],
        [[1], [2], [3]]])

  def testCounts(self):
    """Test the Bell numbers."""
    self.assertEqual(len(stability.configurations(4)), 15)
    self.assertEqual(len(stability.configurations(5)), 52)
    self.assertEqual(str(stability.configurations(4)[0]), "1234")
    self.assertEqual(list(stability.set_partitions([])), [])


class SL2ClassifyTest(unittest.TestCase):
  """The unit test for the sl2_classify function."""

  def setUp(self):
    """Sets up the needed objects used throughout the test."""
    self._weights = test_lib.weights_of("1/2", "1/2", "1/2", "1/2")

  def testStable(self):
    """Test distinct points."""
    verdict = stability.sl2_classify(
        stability.ConfigurationP1.generic(4), self._weights)

    self.assertEqual(verdict.stability, StabilityClass.STABLE)
    self.assertEqual(verdict.sign, -1)
    self.assertEqual(verdict.sq_magnitude, Fraction(1, 3))
    self.assertEqual(verdict.witnesses, ())

  def testStrictlySemistable(self):
    """Test a double point of weight one."""
    verdict = stability.sl2_classify(
        test_lib.partition_of("12|3|4"), self._weights)

    self.assertEqual(verdict.stability, StabilityClass.STRICTLY_SEMISTABLE)
    self.assertEqual(verdict.to_dict(), {
        "class": "strictly_semistable", "sign": 0, "sq_magnitude": "0",
        "witnesses": [[1, 2]]})

  def testUnstable(self):
    """Test a triple point."""
    verdict = stability.sl2_classify(
        test_lib.partition_of("123|4"), self._weights)

    self.assertEqual(verdict.stability, StabilityClass.UNSTABLE)
    self.assertEqual(verdict.sign, 1)
    self.assertEqual(verdict.sq_magnitude, Fraction(1, 3))
    self.assertEqual(verdict.witnesses, ((1, 2, 3),))

    verdict = stability.sl2_classify(
        test_lib.partition_of("1234"), self._weights)
    self.assertEqual(verdict.sq_magnitude, 1)

  def testAllCoincident(self):
    """Test that coinciding points are unstable for every weight."""
    for values in (["1/2"] * 4, ["4/5", "2/5", "2/5", "2/5"]):
      verdict = stability.sl2_classify(
          test_lib.partition_of("1234"), test_lib.weights_of(*values))

      self.assertEqual(verdict.stability, StabilityClass.UNSTABLE)
      self.assertEqual(verdict.sq_magnitude, 1)
      self.assertEqual(verdict.witnesses, ((1, 2, 3, 4),))

  def testZeroWeight(self):
    """Test that a zero weight is at best strictly semistable."""
    verdict = stability.sl2_classify(
        stability.ConfigurationP1.generic(4),
        test_lib.weights_of("2/3", "2/3", "2/3", 0))
    self.assertEqual(verdict.stability, StabilityClass.STRICTLY_SEMISTABLE)
    self.assertEqual(verdict.witnesses, ((4,),))

    verdict = stability.sl2_classify(
        stability.ConfigurationP1.generic(4),
        test_lib.weights_of(1, "1/2", "1/2", 0))
    self.assertEqual(verdict.witnesses, ((1,), (4,)))

  def testMismatch(self):
    """Test that the weight count must match."""
    with self.assertRaises(errors.InputError):
      stability.sl2_classify(
          stability.ConfigurationP1.generic(3), self._weights)

  @given(st.lists(
      st.tuples(st.integers(-3, 3), st.integers(-3, 3)).filter(any),
      min_size=4, max_size=6), st.data())
  @settings(max_examples=40, deadline=None)
  def testScaledPoints(self, points, data):
    """Test that rescaling homogeneous coordinates keeps the class."""
    scales = data.draw(st.lists(
        st.integers(-4, 4).filter(bool), min_size=len(points),
        max_size=len(points)))
    weights = _draw_weights(data, len(points), 2)
    configuration = stability.ConfigurationP1.from_points(points)
    scaled = stability.ConfigurationP1.from_points([
        (scale * x, scale * y) for scale, (x, y) in zip(scales, points)])

    self.assertEqual(scaled, configuration)
    self.assertEqual(
        stability.sl2_classify(scaled, weights),
        stability.sl2_classify(configuration, weights))

  @given(_INTEGER_WEIGHTS, st.data())
  @settings(max_examples=60, deadline=None)
  def testRelabeling(self, values, data):
    """Test that permuting labels and weights together keeps the class."""
    weights = _normalize(values)
    configuration = data.draw(
        st.sampled_from(stability.configurations(weights.m)))
    permutation = data.draw(st.permutations(range(weights.m)))

    relabeled = stability.ConfigurationP1([
        [permutation[label - 1] + 1 for label in block]
        for block in configuration.blocks])
    alpha = [None] * weights.m
    for index, target in enumerate(permutation):
      alpha[target] = weights.alpha[index]

    expected = stability.sl2_classify(configuration, weights)
    verdict = stability.sl2_classify(
        relabeled, stability.WeightVector(alpha))
    self.assertEqual(verdict.stability, expected.stability)
    self.assertEqual(verdict.sq_magnitude, expected.sq_magnitude)

  @given(_INTEGER_WEIGHTS, st.data())
  @settings(max_examples=60, deadline=None)
  def testRefinement(self, values, data):
    """Test that separating coincident points never lowers the class."""
    weights = _normalize(values)
    partitions = stability.configurations(weights.m)
    coarse = data.draw(st.sampled_from(partitions))
    fine = data.draw(st.sampled_from([
        configuration for configuration in partitions
        if configuration.refines(coarse)]))

    coarse_class = stability.sl2_classify(coarse, weights).stability
    fine_class = stability.sl2_classify(fine, weights).stability
    self.assertGreaterEqual(_ORDER[fine_class], _ORDER[coarse_class])


class SLnClassifyTest(unittest.TestCase):
  """The unit test for the sln_classify function."""

  def testP1(self):
    """Test three distinct points on P1."""
    configuration = stability.SLnConfig([[1, 0, 1], [0, 1, 1]])
    verdict = stability.sln_classify(
        configuration, test_lib.weights_of("2/3", "2/3", "2/3"))

    self.assertEqual(verdict.stability, StabilityClass.STABLE)
    self.assertEqual(verdict.sq_magnitude, Fraction(1, 9))

  def testGenericP2(self):
    """Test four points of P2 in general position."""
    configuration = stability.SLnConfig(
        [[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]])
    weights = test_lib.weights_of("3/4", "3/4", "3/4", "3/4", n=3)
    verdict = stability.sln_classify(configuration, weights)

    self.assertEqual(configuration.n, 3)
    self.assertEqual(configuration.m, 4)
    self.assertEqual(verdict.stability, StabilityClass.STABLE)
    self.assertEqual(verdict.sq_magnitude, Fraction(1, 16))

  def testCollinearP2(self):
    """Test three collinear points of P2."""
    configuration = stability.SLnConfig(
        [[1, 0, 1, 0], [0, 1, 1, 0], [0, 0, 0, 1]])
    self.assertIn(((1, 2, 3), 2), configuration.flats())

    verdict = stability.sln_classify(
        configuration, test_lib.weights_of("3/4", "3/4", "3/4", "3/4", n=3))
    self.assertEqual(verdict.stability, StabilityClass.UNSTABLE)
    self.assertEqual(verdict.witnesses, ((1, 2, 3),))
    self.assertEqual(verdict.sq_magnitude, Fraction(1, 16))

    verdict = stability.sln_classify(
        configuration, test_lib.weights_of("2/3", "2/3", "2/3", 1, n=3))
    self.assertEqual(verdict.stability, StabilityClass.STRICTLY_SEMISTABLE)
    self.assertEqual(verdict.witnesses, ((4,), (1, 2, 3)))

  def testRankDeficient(self):
    """Test that a degenerate configuration is rejected."""
    configuration = stability.SLnConfig([[1, 1, 1], [1, 1, 1]])
    with self.assertRaises(errors.RankDeficientError):
      stability.sln_classify(
          configuration, test_lib.weights_of("2/3", "2/3", "2/3"))

    with self.assertRaises(errors.InputError):
      stability.SLnConfig([[1, 0], [0, 0]])

  def testAgreesWithSL2(self):
    """Test that both classifiers agree on every configuration of P1."""
    weight_vectors = [
        test_lib.weights_of("1/2", "1/2", "1/2", "1/2"),
        test_lib.weights_of("4/5", "2/5", "2/5", "2/5"),
        test_lib.weights_of(1, "1/3", "1/3", "1/3"),
        test_lib.weights_of("2/3", "2/3", "2/3", 0)]
    for weights in weight_vectors:
      for configuration in stability.configurations(4):
        if len(configuration.blocks) < 2:
          continue
        expected = stability.sl2_classify(configuration, weights)
        verdict = stability.sln_classify(
            stability.SLnConfig.from_configuration(configuration), weights)
        self.assertEqual(verdict.stability, expected.stability, msg=str(
            configuration))

  @given(_COLUMNS_P2, st.data())
  @settings(max_examples=30, deadline=None)
  def testProjectiveInvariance(self, columns, data):
    """Test that a change of coordinates and column scaling keep the class."""
    configuration = _configuration_p2(columns)
    weights = _draw_weights(data, configuration.m, 3)
    transform = data.draw(st.lists(
        st.lists(st.integers(-2, 2), min_size=3, max_size=3),
        min_size=3, max_size=3))
    assume(_determinant(transform) != 0)
    scales = data.draw(st.lists(
        st.integers(-3, 3).filter(bool), min_size=configuration.m,
        max_size=configuration.m))

    moved = stability.SLnConfig([
        [scale * sum(
            row[index] * configuration.rows[index][column]
            for index in range(3))
         for column, scale in enumerate(scales)]
        for row in transform])

    expected = stability.sln_classify(configuration, weights)
    verdict = stability.sln_classify(moved, weights)
    self.assertEqual(verdict.stability, expected.stability)
    self.assertEqual(verdict.witnesses, expected.witnesses)

  @given(_COLUMNS_P2, st.data())
  @settings(max_examples=30, deadline=None)
  def testRelabeling(self, columns, data):
    """Test that permuting columns and weights together keeps the class."""
    configuration = _configuration_p2(columns)
    weights = _draw_weights(data, configuration.m, 3)
    permutation = data.draw(st.permutations(range(configuration.m)))

    permuted = stability.SLnConfig([
        [row[index] for index in permutation] for row in configuration.rows])
    permuted_weights = stability.WeightVector(
        [weights.alpha[index] for index in permutation], 3)

    expected = stability.sln_classify(configuration, weights)
    verdict = stability.sln_classify(permuted, permuted_weights)
    self.assertEqual(verdict.stability, expected.stability)
    self.assertEqual(verdict.sq_magnitude, expected.sq_magnitude)


class TorusClassifyTest(unittest.TestCase):
  """The unit test for the torus_classify function."""

  def setUp(self):
    """Sets up the needed objects used throughout the test."""
    self._weight_set = moment.WeightSet([[0, 0], [1, 0], [0, 1], [1, 1]])
    self._square = moment.weight_polytope([1, 2, 3, 4], self._weight_set)
    self._segment = moment.weight_polytope([1, 4], self._weight_set)

  def testSquare(self):
    """Test shifts relative to the unit square."""
    verdict = stability.torus_classify(self._square, ["1/2", "1/2"])
    self.assertEqual(verdict.stability, StabilityClass.STABLE)
    self.assertEqual(verdict.sq_magnitude, Fraction(1, 4))

    verdict = stability.torus_classify(self._square, [1, "1/2"])
    self.assertEqual(verdict.stability, StabilityClass.STRICTLY_SEMISTABLE)
    self.assertEqual(verdict.witnesses, ((3, 4),))

    verdict = stability.torus_classify(self._square, [2, 0])
    self.assertEqual(verdict.stability, StabilityClass.UNSTABLE)
    self.assertEqual(verdict.sq_magnitude, 1)
    self.assertEqual(verdict.witnesses, ((3, 4),))

  def testEffectiveDimension(self):
    """Test a lower-dimensional polytope in its effective space."""
    verdict = stability.torus_classify(self._segment, ["1/2", "1/2"])
    self.assertEqual(verdict.stability, StabilityClass.STRICTLY_SEMISTABLE)

    verdict = stability.torus_classify(
        self._segment, ["1/2", "1/2"], effective_dimension=1)
    self.assertEqual(verdict.stability, StabilityClass.STABLE)
    self.assertEqual(verdict.sq_magnitude, Fraction(1, 2))

    with self.assertRaises(errors.InputError):
      stability.torus_classify(
          self._segment, ["1/2", "1/2"], effective_dimension=3)

  def testOracle(self):
    """Test the one-parameter subgroup oracle on the square."""
    verdict = stability.oracle_1ps(self._weight_set, ["1/2", "1/2"])
    self.assertEqual(verdict.stability, StabilityClass.STABLE)

    verdict = stability.oracle_1ps(self._weight_set, [1, "1/2"])
    self.assertEqual(verdict.stability, StabilityClass.STRICTLY_SEMISTABLE)

    mu = exactgeom.QVec([2, 0])
    verdict = stability.oracle_1ps(self._weight_set, mu)
    self.assertEqual(verdict.stability, StabilityClass.UNSTABLE)
    self.assertTrue(all(
        verdict.direction.dot(character - mu) < 0
        for character in self._weight_set))

  @given(_LATTICE_POINTS, _SHIFTS)
  @settings(max_examples=60, deadline=None)
  def testOracleAgreesWithPolytope(self, points, mu):
    """Test that the oracle and the polytope give the same class."""
    weight_set = moment.WeightSet(points)
    polytope = moment.weight_polytope(range(1, len(points) + 1), weight_set)

    expected = stability.torus_classify(polytope, mu)
    verdict = stability.oracle_1ps(weight_set, mu)
    self.assertEqual(verdict.stability, expected.stability)
    self.assertEqual(verdict.sign, expected.sign)

  @given(_SPACES)
  @settings(max_examples=40, deadline=None)
  def testOracleAgreesInHigherDimensions(self, space):
    """Test the oracle against the polytope in dimensions 3 to 5."""
    points, mu = space
    weight_set = moment.WeightSet(points)
    polytope = moment.weight_polytope(range(1, len(points) + 1), weight_set)

    expected = stability.torus_classify(polytope, mu)
    verdict = stability.oracle_1ps(weight_set, mu)
    self.assertEqual(verdict.stability, expected.stability)
    if verdict.stability == StabilityClass.UNSTABLE:
      shifted = exactgeom.QVec(mu)
      self.assertTrue(all(
          verdict.direction.dot(character - shifted) < 0
          for character in weight_set))


class GelfandMacPhersonTest(unittest.TestCase):
  """The unit test for the comparison of both models."""

  def testAgreement(self):
    """Test a configuration with a double point."""
    weights = test_lib.weights_of("1/2", "1/2", "1/2", "1/2")
    sln_verdict, torus_verdict = stability.gm_verdicts(
        test_lib.partition_of("12|3|4"), weights)

    self.assertEqual(sln_verdict.stability, StabilityClass.STRICTLY_SEMISTABLE)
    self.assertEqual(
        torus_verdict.stability, StabilityClass.STRICTLY_SEMISTABLE)
    self.assertTrue(stability.gm_check(
        stability.ConfigurationP1.generic(4), weights))

  @given(_INTEGER_WEIGHTS, st.data())
  @settings(max_examples=60, deadline=None)
  def testAgreementOnP1(self, values, data):
    """Test that both models agree for configurations of P1."""
    weights = _normalize(values)
    configurations = [
        configuration for configuration in stability.configurations(weights.m)
        if len(configuration.blocks) >= 2]
    configuration = data.draw(st.sampled_from(configurations))

    sln_verdict, torus_verdict = stability.gm_verdicts(configuration, weights)
    self.assertEqual(sln_verdict.stability, torus_verdict.stability)

  def testAgreementOnAllPartitions(self):
    """Test both models on every coincidence partition up to six points."""
    weight_vectors = [
        test_lib.weights_of(*["1/2"] * 4),
        test_lib.weights_of("4/5", "2/5", "2/5", "2/5"),
        test_lib.weights_of(*["2/5"] * 5),
        test_lib.weights_of("4/5", "2/5", "2/5", "1/5", "1/5"),
        test_lib.weights_of(1, "1/2", "1/4", "1/4", 0),
        test_lib.weights_of(1, *["1/5"] * 5)]
    for weights in weight_vectors:
      for configuration in stability.configurations(weights.m):
        if len(configuration.blocks) < 2:
          continue
        sln_verdict, torus_verdict = stability.gm_verdicts(
            configuration, weights)
        self.assertEqual(
            sln_verdict.stability, torus_verdict.stability,
            msg="{0!s} at {1:s}".format(configuration, weights.to_string()))

  @given(_COLUMNS_P2, st.data())
  @settings(max_examples=25, deadline=None)
  def testAgreementOnP2(self, columns, data):
    """Test that both models agree for configurations of P2."""
    configuration = _configuration_p2(columns)
    weights = _draw_weights(data, configuration.m, 3)

    sln_verdict, torus_verdict = stability.gm_verdicts(configuration, weights)
    self.assertEqual(sln_verdict.stability, torus_verdict.stability)


if __name__ == "__main__":
  unittest.main()
