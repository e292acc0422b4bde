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
"""The error objects."""


class Error(Exception):
  """Base error.

  Attributes:
    name (str): machine-readable error name, reported by the command line
        tool in the "error" field.
  """

  name = "Error"


class InputError(Error, ValueError):
  """Malformed input: wrong dimensions, bad syntax or out of range values."""

  name = "InputError"


class DomainError(Error):
  """Input that is well formed but mathematically not admissible."""

  name = "DomainError"


class NotEffectiveError(DomainError):
  """A weight vector outside the effective cone slice."""

  name = "NotEffective"


class WallBaseError(DomainError):
  """A base linearization that lies on a wall."""

  name = "WallBase"


class BoundaryAmbiguousError(DomainError):
  """A limit linearization over a base with strictly semistable points."""

  name = "BoundaryAmbiguous"


class RankDeficientError(DomainError):
  """A configuration matrix whose rank is less than its row count."""

  name = "RankDeficient"


class DegenerateSliceError(DomainError):
  """A slice plane that is degenerate or misses the polytope interior."""

  name = "DegenerateSlice"
