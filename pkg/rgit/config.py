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
"""Runtime configuration.

You can control the runtime using the following environment variables:

RGIT_THREADS: The maximum number of worker threads used for batch
  computations such as chamber enumeration, classification tables and
  relative verdicts. Defaults to 1. Output order never depends on it.
"""

import logging
import os

from concurrent import futures

from rgit import errors


THREADS_VARIABLE = "RGIT_THREADS"

LOG_FORMAT = "[%(levelname)s] %(name)s: %(message)s"

logger = logging.getLogger(__name__)


def get_thread_count():
  """Retrieves the worker thread cap.

  Returns:
    int: number of worker threads, 1 or more.

  Raises:
    InputError: if RGIT_THREADS is not a positive integer.
  """
  value = os.environ.get(THREADS_VARIABLE, "").strip()
  if not value:
    return 1

  try:
    threads = int(value, 10)
  except ValueError:
    raise errors.InputError(
        "{0:s} must be a positive integer, got: {1:s}".format(
            THREADS_VARIABLE, value))

  if threads < 1:
    raise errors.InputError(
        "{0:s} must be a positive integer, got: {1:d}".format(
            THREADS_VARIABLE, threads))

  return threads


def ordered_map(function, items):
  """Applies a function to every item, in parallel when configured.

  Args:
    function (callable): pure function of one argument.
    items (iterable): the arguments.

  Returns:
    list: results in the order of items.
  """
  items = list(items)
  threads = min(get_thread_count(), max(len(items), 1))
  if threads == 1:
    return [function(item) for item in items]

  logger.debug("Mapping {0:d} items over {1:d} threads".format(
      len(items), threads))
  with futures.ThreadPoolExecutor(max_workers=threads) as executor:
    return list(executor.map(function, items))


def configure_logging(verbose=0):
  """Configures logging to stderr.

  Args:
    verbose (int): verbosity level, 0 warnings, 1 info, 2 or more debug.
  """
  if verbose > 1:
    level = logging.DEBUG
  elif verbose == 1:
    level = logging.INFO
  else:
    level = logging.WARNING

  logging.basicConfig(format=LOG_FORMAT, level=level)
