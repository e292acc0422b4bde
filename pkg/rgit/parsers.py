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
"""Parsers for the inline value syntax of the command line tool.

  rationals:  1/2,1/2,1/2,1/2 or -3/4, 0.25, 2
  matrices:   1,0,1,1;0,1,1,2 (rows separated by ;)
  partitions: 12|3|4 or 1,2|3|4 or [[1,2],[3],[4]]
"""

import json

from rgit import errors
from rgit import exactgeom
from rgit import lexer


class MatrixLexer(lexer.Lexer):
  """Lexes rows of comma-separated rationals."""

  tokens = [
      ["INITIAL", r"\s+", "SPACE", None],
      ["INITIAL", r"[-+]?\d+(?:\.\d+)?(?:/\d+)?", "NUMBER", "SEPARATOR"],
      ["SEPARATOR", r"\s*,\s*", "COMMA", "INITIAL"],
      ["SEPARATOR", r"\s*;\s*", "ROW", "INITIAL"],
      ["SEPARATOR", r"\s+$", "SPACE", None],
  ]

  def __init__(self, verbose=0):
    super(MatrixLexer, self).__init__(verbose=verbose)
    self.rows = [[]]

  def NUMBER(self, token, match):
    self.rows[-1].append(exactgeom.to_rational(match.group(0)))

  def ROW(self, token, match):
    self.rows.append([])


class PartitionLexer(lexer.Lexer):
  """Lexes coincidence blocks separated by bars.

  Without commas every digit is one label; with commas every block is a
  comma-separated list of labels.
  """

  tokens = [
      ["INITIAL", r"\s+", "SPACE", None],
      ["INITIAL", r"\d+(?:\s*,\s*\d+)*", "LABELS", "BLOCK"],
      ["BLOCK", r"\s*\|\s*", "BAR", "INITIAL"],
      ["BLOCK", r"\s+$", "SPACE", None],
  ]

  def __init__(self, comma_mode=False, verbose=0):
    super(PartitionLexer, self).__init__(verbose=verbose)
    self.comma_mode = comma_mode
    self.blocks = []

  def LABELS(self, token, match):
    text = match.group(0)
    if self.comma_mode:
      labels = [int(label) for label in text.split(",")]
    else:
      labels = [int(digit) for digit in text]
    self.blocks.append(labels)


def _run(lexer_object, text, final_states):
  lexer_object.feed(text)
  lexer_object.close()
  if lexer_object.error:
    raise errors.InputError("Invalid value {0!r}: {1:s}".format(
        text, lexer_object.errors[0]))
  if lexer_object.state not in final_states:
    raise errors.InputError("Invalid value {0!r}: incomplete input".format(
        text))
  return lexer_object


def parse_rational(text):
  """Parses one rational such as "-3/4"."""
  values = parse_rationals(text)
  if len(values) != 1:
    raise errors.InputError("Expected one rational, got {0!r}".format(text))
  return values[0]


def parse_rationals(text):
  """Parses a comma-separated list of rationals."""
  rows = parse_matrix(text)
  if len(rows) != 1:
    raise errors.InputError("Expected one list, got {0!r}".format(text))
  return rows[0]


def parse_matrix(text):
  """Parses rows of rationals separated by ";".

  Returns:
    list[list[Fraction]]: the rows, possibly ragged.

  Raises:
    InputError: if the text is malformed or empty.
  """
  if isinstance(text, list):
    return [[exactgeom.to_rational(value) for value in row] for row in text]

  lexer_object = _run(MatrixLexer(), text, ("SEPARATOR",))
  return lexer_object.rows


def parse_partition(text):
  """Parses a coincidence partition.

  Args:
    text (str|list): "12|3|4", "1,2|3|4" or a JSON array of arrays.

  Returns:
    list[list[int]]: the blocks.

  Raises:
    InputError: if the text is malformed.
  """
  if isinstance(text, str) and text.strip().startswith("["):
    try:
      text = json.loads(text)
    except ValueError as exception:
      raise errors.InputError("Invalid partition {0!r}: {1!s}".format(
          text, exception))

  if isinstance(text, list):
    try:
      return [[int(label) for label in block] for block in text]
    except (TypeError, ValueError):
      raise errors.InputError("Invalid partition {0!r}".format(text))

  lexer_object = _run(
      PartitionLexer(comma_mode="," in text), text, ("BLOCK",))
  return lexer_object.blocks
