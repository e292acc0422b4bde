#!/usr/bin/python
# -*- coding: utf-8 -*-
"""Tests for the inline value parsers."""

import unittest

from fractions import Fraction

from rgit import errors
from rgit import parsers


class MatrixLexerTest(unittest.TestCase):
  """The unit test for the MatrixLexer object."""

  def testLex(self):
    """Test lexing rows."""
    lexer_object = parsers.MatrixLexer()
    lexer_object.feed(" 1 , 1/2;0.25,-3 ")
    lexer_object.close()

    self.assertEqual(lexer_object.error, 0)
    self.assertEqual(lexer_object.state, "SEPARATOR")
    self.assertTrue(lexer_object.empty())
    self.assertEqual(lexer_object.rows, [
        [Fraction(1), Fraction(1, 2)], [Fraction(1, 4), Fraction(-3)]])

  def testError(self):
    """Test that unexpected characters are reported with their offset."""
    lexer_object = parsers.MatrixLexer()
    lexer_object.feed("1,,2")
    lexer_object.close()

    self.assertEqual(lexer_object.error, 1)
    self.assertEqual(
        lexer_object.errors,
        ["Unexpected ',' at offset 2 in state INITIAL"])
    self.assertEqual(lexer_object.rows, [[Fraction(1), Fraction(2)]])


class ParseRationalsTest(unittest.TestCase):
  """The unit test for the rational and matrix parsers."""

  def testParseRational(self):
    """Test the parse_rational function."""
    self.assertEqual(parsers.parse_rational("-3/4"), Fraction(-3, 4))
    self.assertEqual(parsers.parse_rational("2"), Fraction(2))

    with self.assertRaises(errors.InputError):
      parsers.parse_rational("1,2")

  def testParseRationals(self):
    """Test the parse_rationals function."""
    self.assertEqual(
        parsers.parse_rationals("1/2,1/2,1/2,1/2"), [Fraction(1, 2)] * 4)

    with self.assertRaises(errors.InputError):
      parsers.parse_rationals("1;2")

  def testParseMatrix(self):
    """Test the parse_matrix function."""
    self.assertEqual(
        parsers.parse_matrix("1,0,1,1;0,1,1,2"),
        [[1, 0, 1, 1], [0, 1, 1, 2]])
    self.assertEqual(
        parsers.parse_matrix([[1, "1/2"]]), [[Fraction(1), Fraction(1, 2)]])

  def testMalformed(self):
    """Test malformed values."""
    for text in ("", "1/2,", "1,,2", "a", "1;"):
      with self.assertRaises(errors.InputError):
        parsers.parse_matrix(text)


class ParsePartitionTest(unittest.TestCase):
  """The unit test for the parse_partition function."""

  def testDigits(self):
    """Test blocks of single digit labels."""
    self.assertEqual(
        parsers.parse_partition("12|3|4"), [[1, 2], [3], [4]])
    self.assertEqual(parsers.parse_partition(" 1 | 234 "), [[1], [2, 3, 4]])

  def testCommas(self):
    """Test blocks of comma-separated labels."""
    self.assertEqual(
        parsers.parse_partition("1,10|2,3"), [[1, 10], [2, 3]])

  def testJSON(self):
    """Test JSON arrays of blocks."""
    self.assertEqual(
        parsers.parse_partition("[[1, 2], [3], [4]]"), [[1, 2], [3], [4]])
    self.assertEqual(parsers.parse_partition([[2], [1]]), [[2], [1]])

  def testMalformed(self):
    """Test malformed partitions."""
    for text in ("12||3", "12|", "[[1, 2]", "a|b"):
      with self.assertRaises(errors.InputError):
        parsers.parse_partition(text)

    with self.assertRaises(errors.InputError):
      parsers.parse_partition([["a"]])


if __name__ == "__main__":
  unittest.main()
