#!/usr/bin/python
#
# Script to generate the golden command line artifacts.
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

import io
import os
import sys

from rgit import cli


GOLDEN_JOBS = [
    ("walls_4_2.json", ["walls", "--m", "4", "--n", "2"]),
    ("classify_12_3_4.json", [
        "classify", "--partition", "12|3|4", "--weights", "1/2,1/2,1/2,1/2"]),
    ("polygon_2111.json", ["polygon", "analyze", "--sides", "2,1,1,1"]),
    ("polygon_5111.json", ["polygon", "analyze", "--sides", "5,1,1,1"]),
    ("polygon_path.json", [
        "polygon", "path", "--from", "2,1,1,1", "--to", "1,1,1,3/2"]),
]


def generate_golden(target, arguments):
    """ Runs the command line tool and stores its artifact """
    print("Generating %s from: rgit %s" % (target, " ".join(arguments)))

    output = io.StringIO()
    exit_code = cli.main(arguments, stdout=output)
    if exit_code != 0:
        raise RuntimeError("rgit %s failed with exit code %d: %s" % (
            " ".join(arguments), exit_code, output.getvalue()))

    with open(target, "w", encoding="utf-8", newline="\n") as fd:
        fd.write(output.getvalue())

if __name__ == "__main__":
    if len(sys.argv) > 2:
        print("Usage: ./generate_golden.py [path_to_golden]")
        sys.exit(1)

    golden_path = os.path.join("test_data", "golden")
    if len(sys.argv) == 2:
        golden_path = sys.argv[1]

    if not os.path.isdir(golden_path):
        print("No such directory: %s" % golden_path)
        sys.exit(1)

    for filename, arguments in GOLDEN_JOBS:
        generate_golden(os.path.join(golden_path, filename), arguments)
