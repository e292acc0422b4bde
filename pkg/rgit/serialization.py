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
"""Canonical JSON artifacts."""

import json
import logging

from rgit import errors


logger = logging.getLogger(__name__)


def dumps(document):
  """Serializes a document as canonical JSON with sorted keys.

  Args:
    document (dict|list): JSON compatible document.

  Returns:
    str: the JSON text ending in a newline.
  """
  return json.dumps(document, sort_keys=True, indent=2) + "\n"


def error_document(error):
  """Builds the payload reported for an error."""
  return {"error": error.name, "message": str(error)}


def load_job(path):
  """Reads a JSON job file.

  Raises:
    InputError: if the file cannot be read or is not JSON.
  """
  try:
    with open(path, "r", encoding="utf-8") as file_object:
      return json.load(file_object)
  except (IOError, OSError) as exception:
    raise errors.InputError("Unable to read job {0:s}: {1!s}".format(
        path, exception))
  except ValueError as exception:
    raise errors.InputError("Invalid JSON in job {0:s}: {1!s}".format(
        path, exception))


def write_artifact(text, output=None, stream=None):
  """Writes an artifact to a file or to a stream.

  Args:
    text (str): the artifact.
    output (Optional[str]): path of the output file.
    stream (Optional[file]): stream used when no output path is given.
  """
  if output:
    logger.info("Writing {0:s}".format(output))
    with open(output, "w", encoding="utf-8", newline="\n") as file_object:
      file_object.write(text)
  elif stream is not None:
    stream.write(text)
