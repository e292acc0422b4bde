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
"""Install the rgit python module.

You can control the runtime of the installed tool using the following
environment variables:

RGIT_THREADS: The maximum number of worker threads used for batch
  computations. Defaults to 1.

"""

import os
import re
import sys
import time

from setuptools import setup, Command

# Change PYTHONPATH.
sys.path.insert(0, '.')


version_tuple = (sys.version_info[0], sys.version_info[1])
if version_tuple < (3, 8):
  print((
      'Unsupported Python version: {0:s}, version 3.8 or higher '
      'required.').format(sys.version))
  sys.exit(1)


class GoldenCommand(Command):
  """Regenerates the golden command line artifacts.

  This is normally only run after an intended change of an artifact format.
  """

  user_options = [("golden-path=", None, (
      "Directory of the golden artifacts, test_data/golden by default."))]

  def initialize_options(self):
    self.golden_path = None

  def finalize_options(self):
    if not self.golden_path:
      self.golden_path = os.path.join("test_data", "golden")

  def run(self):
    import generate_golden

    if not os.path.isdir(self.golden_path):
      raise RuntimeError("Missing: {0:s}".format(self.golden_path))

    for filename, arguments in generate_golden.GOLDEN_JOBS:
      generate_golden.generate_golden(
          os.path.join(self.golden_path, filename), arguments)


class UpdateCommand(Command):
  """Stamps a new release version.

  This is normally only run by packagers to make a new release.
  """

  version = time.strftime("%Y%m%d")

  user_options = []

  def initialize_options(self):
    pass

  def finalize_options(self):
    pass

  files = {
      "setup.cfg": [
          ("version = [0-9]+", "version = %s" % version),
      ],
      "rgit/__init__.py": [
          ('__version__ = "[^"]+"', '__version__ = "%s"' % version),
      ],
  }

  def run(self):
    for filename, rules in iter(self.files.items()):
      filename = os.path.join(*filename.split("/"))

      with open(filename, "r", encoding="utf-8") as file_object:
        data = file_object.read()

      for search, replace in rules:
        data = re.sub(search, replace, data)

      with open(filename, "w", encoding="utf-8") as file_object:
        file_object.write(data)

    print("Updated version to: {0:s}".format(self.version))


class ProjectBuilder(object):
  """Class to help build the project."""

  def build(self):
    """Build everything."""
    setup_args = dict(
        cmdclass={
            "golden": GoldenCommand,
            "update": UpdateCommand})

    setup(**setup_args)


if __name__ == "__main__":
  ProjectBuilder().build()
