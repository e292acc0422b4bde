#!/usr/bin/python
# -*- coding: utf-8 -*-
"""Tests for the runtime configuration."""

import os
import unittest

from unittest import mock

from rgit import config
from rgit import errors

import test_lib


class ThreadCountTest(unittest.TestCase):
  """The unit test for the get_thread_count function."""

  def testDefault(self):
    """Test the default without the environment variable."""
    with mock.patch.dict(os.environ, clear=True):
      self.assertEqual(config.get_thread_count(), 1)

  def testValue(self):
    """Test a configured thread count."""
    with test_lib.thread_count(4):
      self.assertEqual(config.get_thread_count(), 4)

  def testInvalid(self):
    """Test invalid thread counts."""
    for value in ("0", "-2", "many"):
      with mock.patch.dict(os.environ, {config.THREADS_VARIABLE: value}):
        with self.assertRaises(errors.InputError):
          config.get_thread_count()


class OrderedMapTest(unittest.TestCase):
  """The unit test for the ordered_map function."""

  def testOrder(self):
    """Test that results keep the order of the items."""
    items = list(range(20))
    for count in (1, 3, 8):
      with test_lib.thread_count(count):
        self.assertEqual(
            config.ordered_map(lambda item: item * item, items),
            [item * item for item in items])

  def testEmpty(self):
    """Test an empty item list."""
    with test_lib.thread_count(4):
      self.assertEqual(config.ordered_map(str, []), [])


if __name__ == "__main__":
  unittest.main()
