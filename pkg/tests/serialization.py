#!/usr/bin/python
# -*- coding: utf-8 -*-
"""Tests for canonical JSON artifacts and their schemas."""

import io
import os
import tempfile
import unittest

from rgit import errors
from rgit import schemas
from rgit import serialization

import test_lib


class SerializationTest(test_lib.BaseTestCase):
  """The unit test for the serialization functions."""

  def testDumps(self):
    """Test that keys are sorted and the text ends in a newline."""
    text = serialization.dumps({"b": 1, "a": [1, 2]})
    self.assertEqual(
        text, "{\n  \"a\": [\n    1,\n    2\n  ],\n  \"b\": 1\n}\n")

  def testErrorDocument(self):
    """Test the error payload."""
    document = serialization.error_document(
        errors.NotEffectiveError("weight exceeds 1"))
    self.assertEqual(
        document, {"error": "NotEffective", "message": "weight exceeds 1"})

  def testLoadJob(self):
    """Test reading job files."""
    path = self._GetTestFilePath(["jobs", "walls.json"])
    self._SkipIfPathNotExists(path)

    job = serialization.load_job(path)
    self.assertEqual(job["command"], "walls")

    with self.assertRaises(errors.InputError):
      serialization.load_job(self._GetTestFilePath(["jobs", "missing.json"]))

  def testLoadInvalidJob(self):
    """Test reading a file that is not JSON."""
    with tempfile.TemporaryDirectory() as temporary_directory:
      path = os.path.join(temporary_directory, "job.json")
      with open(path, "w", encoding="utf-8") as file_object:
        file_object.write("{")

      with self.assertRaises(errors.InputError):
        serialization.load_job(path)

  def testWriteArtifact(self):
    """Test writing to a stream and to a file."""
    stream = io.StringIO()
    serialization.write_artifact("text\n", stream=stream)
    self.assertEqual(stream.getvalue(), "text\n")

    with tempfile.TemporaryDirectory() as temporary_directory:
      path = os.path.join(temporary_directory, "artifact.json")
      serialization.write_artifact("text\n", output=path, stream=stream)

      with open(path, "r", encoding="utf-8") as file_object:
        self.assertEqual(file_object.read(), "text\n")
    self.assertEqual(stream.getvalue(), "text\n")


class SchemasTest(unittest.TestCase):
  """The unit test for the schema validation functions."""

  def testValidateJob(self):
    """Test job validation."""
    schemas.validate_job({"command": "walls", "input": {"m": 4, "n": 2}})

    with self.assertRaises(errors.InputError):
      schemas.validate_job({"command": "unknown"})

    with self.assertRaises(errors.InputError):
      schemas.validate_job({"command": "walls", "input": {"m": 0}})

    with self.assertRaises(errors.InputError):
      schemas.validate_job({"command": "walls", "input": {"size": 4}})

  def testValidateOutput(self):
    """Test artifact validation."""
    schemas.validate_output("classify", {
        "class": "stable", "sign": -1, "sq_magnitude": "1/3",
        "witnesses": []})

    with self.assertRaises(RuntimeError):
      schemas.validate_output("classify", {
          "class": "stable", "sign": -1, "sq_magnitude": "0.5",
          "witnesses": []})


if __name__ == "__main__":
  unittest.main()
