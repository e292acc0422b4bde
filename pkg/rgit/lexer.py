#!/usr/bin/python
#
# Copyright 2013, Michael Cohen <scudette@gmail.com>.
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
"""A table driven lexer for short command line values.

Subclasses define tokens, a list of rules:

  [state, regular expression, action, next state]

A rule applies when the lexer is in its state and the expression matches
at the current offset. The action names a method of the subclass that is
called with the match; unknown actions are ignored. A next state of None
keeps the current state.
"""

import logging
import re


logger = logging.getLogger(__name__)


class Lexer(object):
  """Lexer over a text buffer.

  Attributes:
    error (int): number of unexpected characters seen.
    errors (list[str]): messages describing the unexpected characters.
    processed (int): number of characters consumed.
    state (str): current state.
  """

  tokens = []
  state = "INITIAL"

  _compiled = None

  def __init__(self, verbose=0):
    """Initializes a lexer.

    Args:
      verbose (Optional[int]): 1 logs the actions, 2 or more also logs
          every attempted rule.
    """
    super(Lexer, self).__init__()
    self._buffer = ""
    self.error = 0
    self.errors = []
    self.processed = 0
    self.state = self.__class__.state
    self.verbose = verbose

  @classmethod
  def _GetRules(cls):
    """Compiles the token table once per class."""
    if cls.__dict__.get("_compiled") is None:
      cls._compiled = [
          (state, re.compile(pattern), action, next_state)
          for state, pattern, action, next_state in cls.tokens]
    return cls._compiled

  def feed(self, data):
    """Feeds the lexer.

    Args:
      data (str): text to lex.
    """
    self._buffer += data

  def empty(self):
    """Determines if all fed text was consumed."""
    return self.processed >= len(self._buffer)

  def next_token(self):
    """Consumes the next token.

    Returns:
      str: the action of the matched rule, "ERROR" if no rule matched, or
          None once the buffer is exhausted.
    """
    if self.empty():
      return None

    for state, regex, action, next_state in self._GetRules():
      if state != self.state:
        continue

      if self.verbose > 1:
        logger.debug("{0:s}: trying {1:s} at {2:d}".format(
            self.state, regex.pattern, self.processed))

      match = regex.match(self._buffer, self.processed)
      if not match or match.end() == self.processed:
        continue

      self.processed = match.end()
      if self.verbose > 0:
        logger.debug("{0:s} {1!r}".format(action, match.group(0)))

      handler = getattr(self, action, None)
      if handler is not None:
        handler(action, match)

      if next_state:
        self.state = next_state
      return action

    self.ERROR("Unexpected {0!r} at offset {1:d} in state {2:s}".format(
        self._buffer[self.processed], self.processed, self.state))
    self.processed += 1
    return "ERROR"

  def ERROR(self, message):
    """Records an unexpected character.

    Args:
      message (str): description of the error.
    """
    self.errors.append(message)
    self.error += 1
    if self.verbose > 0:
      logger.debug("Error: {0:s}".format(message))

  def close(self):
    """Lexes the remaining text."""
    while self.next_token():
      pass
