"""Shared test case."""

import io
import os
import unittest

from unittest import mock

from fractions import Fraction

from rgit import config
from rgit import stability


class BaseTestCase(unittest.TestCase):
  """The base test case."""

  _TEST_DATA_PATH = os.path.join(os.getcwd(), "test_data")

  # Show full diff results, part of TestCase so does not follow our naming
  # conventions.
  maxDiff = None

  def _GetTestFilePath(self, path_segments):
    """Retrieves the path of a test file in the test data directory.

    Args:
      path_segments (list[str]): path segments inside the test data
          directory.

    Returns:
      str: path of the test file.
    """
    # Note that we need to pass the individual path segments to os.path.join
    # and not a list.
    return os.path.join(self._TEST_DATA_PATH, *path_segments)

  def _ReadTestFile(self, path_segments):
    """Reads a test file as UTF-8 text.

    Args:
      path_segments (list[str]): path segments inside the test data
          directory.

    Returns:
      str: the file contents.
    """
    path = self._GetTestFilePath(path_segments)
    with open(path, "r", encoding="utf-8") as file_object:
      return file_object.read()

  def _SkipIfPathNotExists(self, path):
    """Skips the test if the path does not exist.

    Args:
      path (str): path of a test file.

    Raises:
      SkipTest: if the path does not exist and the test should be skipped.
    """
    if not os.path.exists(path):
      filename = os.path.basename(path)
      raise unittest.SkipTest("missing test file: {0:s}".format(filename))


def weights_of(*values, n=2):
  """Creates a weight vector from values such as "1/2" or 1.

  Args:
    values (list[str|int]): the weights.
    n (Optional[int]): the weight sum.

  Returns:
    WeightVector: the weights.
  """
  return stability.WeightVector([Fraction(value) for value in values], n)


def partition_of(text):
  """Creates a configuration on P1 from blocks such as "12|3|4"."""
  return stability.ConfigurationP1(
      [[int(label) for label in block] for block in text.split("|")])


def thread_count(count):
  """Patches the worker thread cap.

  Args:
    count (int): number of worker threads.

  Returns:
    mock._patch: patcher usable as a context manager.
  """
  return mock.patch.dict(os.environ, {config.THREADS_VARIABLE: str(count)})


def run_command(main, arguments):
  """Runs a command line entry point and captures its standard output.

  Args:
    main (callable): entry point taking argv and stdout.
    arguments (list[str]): command line arguments.

  Returns:
    tuple[int, str]: exit code and output.
  """
  output = io.StringIO()
  exit_code = main(arguments, stdout=output)
  return exit_code, output.getvalue()
