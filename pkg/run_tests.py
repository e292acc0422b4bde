#!/usr/bin/python
#
# Script to run tests.
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
"""Script to run the tests.

Usage: run_tests.py [module], for example run_tests.py chambers to only run
the tests in tests/chambers.py.
"""

import sys
import unittest


if __name__ == "__main__":
  pattern = "*.py"
  if len(sys.argv) > 1:
    pattern = "{0:s}.py".format(sys.argv[1])

  test_suite = unittest.TestLoader().discover("tests", pattern=pattern)
  test_results = unittest.TextTestRunner(verbosity=2).run(test_suite)
  if not test_results.wasSuccessful():
    sys.exit(1)
