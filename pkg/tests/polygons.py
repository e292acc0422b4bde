#!/usr/bin/python
# -*- coding: utf-8 -*-
"""Tests for spatial polygon spaces."""

import unittest

from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from rgit import errors
from rgit import polygons


_SIDES = st.lists(st.integers(1, 9), min_size=4, max_size=6)

_SIDE_PAIRS = st.integers(4, 5).flatmap(lambda m: st.tuples(
    st.lists(st.integers(1, 9), min_size=m, max_size=m),
    st.lists(st.integers(1, 9), min_size=m, max_size=m)))

_SCALES = st.fractions(min_value=0, max_value=10, max_denominator=7).filter(
    lambda scale: scale > 0)


def _scaled(sides, scale):
  return polygons.SideLengths([side * scale for side in sides])


def _without_sides(report):
  document = report.to_dict()
  del document["sides"]
  return document


class SideLengthsTest(unittest.TestCase):
  """The unit test for the SideLengths object."""

  def testWeights(self):
    """Test the weights function."""
    sides = polygons.SideLengths([2, 1, 1, 1])

    self.assertEqual(sides.m, 4)
    self.assertEqual(sides.weights().to_list(), ["4/5", "2/5", "2/5", "2/5"])
    self.assertEqual(sides.to_list(), ["2", "1", "1", "1"])

  def testInvalid(self):
    """Test invalid side lengths."""
    with self.assertRaises(errors.InputError):
      polygons.SideLengths([1, 1])

    with self.assertRaises(errors.InputError):
      polygons.SideLengths([1, 0, 1])


class AnalyzeTest(unittest.TestCase):
  """The unit test for the analyze function."""

  def testGeneric(self):
    """Test a quadrilateral in an open chamber."""
    report = polygons.analyze(polygons.SideLengths([2, 1, 1, 1]))

    self.assertTrue(report.exists)
    self.assertFalse(report.degenerate)
    self.assertEqual(report.moduli_dim, 1)
    self.assertEqual(report.to_dict(), {
        "sides": ["2", "1", "1", "1"],
        "exists": True,
        "degenerate": False,
        "alpha": ["4/5", "2/5", "2/5", "2/5"],
        "chamber": {"12": "+", "13": "+", "14": "+"},
        "on_walls": [],
        "facet_walls": [],
        "moduli_dim": 1})

  def testLongSide(self):
    """Test side lengths without a closed polygon."""
    report = polygons.analyze(polygons.SideLengths([5, 1, 1, 1]))

    self.assertFalse(report.exists)
    self.assertIsNone(report.signature)
    self.assertIsNone(report.moduli_dim)
    self.assertEqual(report.alpha.to_list(), ["5/4", "1/4", "1/4", "1/4"])

  def testRhombus(self):
    """Test equal sides which admit lined polygons."""
    report = polygons.analyze(polygons.SideLengths([1, 1, 1, 1]))

    self.assertTrue(report.exists)
    self.assertTrue(report.degenerate)
    self.assertIsNone(report.moduli_dim)
    self.assertEqual(
        [wall.key for wall in report.on_walls], ["12", "13", "14"])

  def testTriangles(self):
    """Test triangles, rigid and flat."""
    report = polygons.analyze(polygons.SideLengths([1, 1, 1]))
    self.assertFalse(report.degenerate)
    self.assertEqual(report.moduli_dim, 0)

    report = polygons.analyze(polygons.SideLengths([1, 1, 2]))
    self.assertTrue(report.exists)
    self.assertTrue(report.degenerate)
    self.assertEqual(report.on_walls, ())
    self.assertEqual([wall.key for wall in report.facet_walls], ["12"])

  @given(_SIDES, _SCALES)
  @settings(max_examples=40, deadline=None)
  def testScaleInvariance(self, sides, scale):
    """Test that rescaling all sides keeps the report."""
    expected = polygons.analyze(polygons.SideLengths(sides))
    report = polygons.analyze(_scaled(sides, scale))

    self.assertEqual(_without_sides(report), _without_sides(expected))


class WallCrossingPathTest(unittest.TestCase):
  """The unit test for the wall_crossing_path function."""

  def testCrossing(self):
    """Test a path crossing two walls at once."""
    crossings = polygons.wall_crossing_path(
        polygons.SideLengths([2, 1, 1, 1]),
        polygons.SideLengths([1, 1, 1, "3/2"]))

    self.assertEqual(len(crossings), 1)
    crossing = crossings[0]
    self.assertEqual(crossing.t, Fraction(9, 14))
    self.assertEqual([wall.key for wall in crossing.walls], ["12", "13"])
    self.assertEqual(str(crossing.before), "+++")
    self.assertEqual(str(crossing.after), "--+")
    self.assertEqual(crossing.to_dict()["t"], "9/14")

  def testSameChamber(self):
    """Test a path inside one chamber."""
    crossings = polygons.wall_crossing_path(
        polygons.SideLengths([2, 1, 1, 1]),
        polygons.SideLengths(["5/2", 1, 1, 1]))
    self.assertEqual(crossings, [])

  def testInvalidEndpoints(self):
    """Test endpoints without a generic polygon."""
    generic = polygons.SideLengths([2, 1, 1, 1])

    with self.assertRaises(errors.WallBaseError):
      polygons.wall_crossing_path(polygons.SideLengths([1, 1, 1, 1]), generic)

    with self.assertRaises(errors.NotEffectiveError):
      polygons.wall_crossing_path(generic, polygons.SideLengths([5, 1, 1, 1]))

    with self.assertRaises(errors.InputError):
      polygons.wall_crossing_path(generic, polygons.SideLengths([1, 1, 1]))

  @given(_SIDE_PAIRS, _SCALES, _SCALES)
  @settings(max_examples=30, deadline=None)
  def testScaleInvariance(self, pair, first_scale, second_scale):
    """Test that rescaling either endpoint keeps the crossings."""
    start, end = pair
    try:
      expected = polygons.wall_crossing_path(
          polygons.SideLengths(start), polygons.SideLengths(end))
    except (errors.NotEffectiveError, errors.WallBaseError):
      assume(False)

    crossings = polygons.wall_crossing_path(
        _scaled(start, first_scale), _scaled(end, second_scale))
    self.assertEqual(
        [crossing.to_dict() for crossing in crossings],
        [crossing.to_dict() for crossing in expected])


if __name__ == "__main__":
  unittest.main()
