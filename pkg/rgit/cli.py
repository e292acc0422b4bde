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
"""Command line tool for stability, walls, chambers and polygon spaces."""

import argparse
import json
import logging
import sys

from rgit import chambers
from rgit import config
from rgit import errors
from rgit import moment
from rgit import parsers
from rgit import polygons
from rgit import relgit
from rgit import render
from rgit import schemas
from rgit import serialization
from rgit import stability


EXIT_SUCCESS = 0

# Checked in order, the first matching class wins.
EXIT_CODES = [
    (errors.DomainError, 2),
    (errors.InputError, 1),
    (errors.Error, 1),
]

DEFAULT_CENTER = "1/2,1/2,1/2,1/2"

logger = logging.getLogger(__name__)


class ArgumentParser(argparse.ArgumentParser):
  """Argument parser that reports usage errors as InputError."""

  def error(self, message):
    raise errors.InputError(message)


def exit_code(error):
  """Maps an error to the process exit code."""
  for error_class, code in EXIT_CODES:
    if isinstance(error, error_class):
      return code
  return 1


def _weights(text, n=None):
  """Parses weights; the sum is the rank unless n is given."""
  values = parsers.parse_rationals(text)
  if n is None:
    total = sum(values)
    if total != int(total):
      raise errors.InputError("weights must sum to an integer")
    n = int(total)
  return stability.WeightVector(values, n)


def _configuration(options):
  if options.partition is not None:
    return stability.ConfigurationP1(parsers.parse_partition(options.partition))
  return stability.SLnConfig(parsers.parse_matrix(options.matrix))


def _run_classify(options):
  if options.characters is not None:
    if options.mu is None:
      raise errors.InputError("--characters requires --mu")
    weight_set = moment.WeightSet(parsers.parse_matrix(options.characters))
    polytope = moment.weight_polytope(
        range(1, len(weight_set) + 1), weight_set)
    verdict = stability.torus_classify(
        polytope, parsers.parse_rationals(options.mu),
        effective_dimension=options.effective_dim)
    return "classify", verdict.to_dict()

  if options.weights is None:
    raise errors.InputError("--weights is required")

  configuration = _configuration(options)
  if isinstance(configuration, stability.ConfigurationP1):
    verdict = stability.sl2_classify(
        configuration, _weights(options.weights, 2))
  else:
    verdict = stability.sln_classify(
        configuration, _weights(options.weights, configuration.n))
  return "classify", verdict.to_dict()


def _run_walls(options):
  wall_list = chambers.walls(options.m, options.n)
  return "walls", {
      "m": options.m,
      "n": options.n,
      "walls": [wall.to_dict() for wall in wall_list]}


def _run_chambers(options):
  chamber_list = chambers.enumerate_chambers(
      options.m, options.n, tables=options.tables)
  return "chambers", {
      "m": options.m,
      "n": options.n,
      "count": len(chamber_list),
      "chambers": [
          chamber.to_dict(tables=options.tables) for chamber in chamber_list]}


def _run_locate(options):
  weights = _weights(options.weights)
  signature, on_walls = chambers.locate(weights)
  return "locate", {
      "weights": weights.to_list(),
      "signature": signature.to_dict(),
      "on_walls": [wall.to_dict() for wall in on_walls]}


def _run_gm_check(options):
  configuration = _configuration(options)
  n = 2
  if isinstance(configuration, stability.SLnConfig):
    n = configuration.n
  sln_verdict, torus_verdict = stability.gm_verdicts(
      configuration, _weights(options.weights, n))
  return "gm-check", {
      "agree": sln_verdict.stability == torus_verdict.stability,
      "sln": sln_verdict.to_dict(),
      "torus": torus_verdict.to_dict()}


def _run_relative(options):
  for name in ("m", "i", "weights"):
    if getattr(options, name) is None:
      raise errors.InputError("--{0:s} is required".format(name))

  if options.kind == "facet":
    report = relgit.facet_instance(
        options.m, options.i, _weights(options.weights, 2))
    return "relative", report.to_dict()

  if options.kind == "neighborhood":
    if options.eps is None:
      raise errors.InputError("--eps is required")
    report = relgit.facet_neighborhood_instance(
        options.m, options.i, _weights(options.weights, 2),
        parsers.parse_rational(options.eps))
    return "relative", report.to_dict()

  alpha = _weights(options.weights, 2)
  if options.mode is None:
    if options.eps is None:
      raise errors.InputError("--eps or --mode is required")
    report = relgit.forgetful_instance(
        options.m, options.i, alpha, parsers.parse_rational(options.eps))
    return "relative", report.to_dict()

  model = relgit.forgetful_model(options.m, options.i, alpha)
  if options.mode == "finite":
    if options.power is None:
      raise errors.InputError("--mode finite requires --power")
    linearization = relgit.PairLinearization.finite(alpha, None, options.power)
  else:
    path = None
    if options.path is not None:
      path = _weights(options.path, 2)
    linearization = relgit.PairLinearization.limit(alpha, None, path)

  verdict = relgit.relative_classify(model, linearization)
  return "relative", verdict.to_dict()


def _run_polygon(options):
  if options.action == "analyze":
    if options.sides is None:
      raise errors.InputError("--sides is required")
    report = polygons.analyze(
        polygons.SideLengths(parsers.parse_rationals(options.sides)))
    return "polygon analyze", report.to_dict()

  if options.start is None or options.end is None:
    raise errors.InputError("--from and --to are required")
  crossings = polygons.wall_crossing_path(
      polygons.SideLengths(parsers.parse_rationals(options.start)),
      polygons.SideLengths(parsers.parse_rationals(options.end)))
  return "polygon path", {
      "crossings": [crossing.to_dict() for crossing in crossings]}


def _run_render(options):
  svg = render.render_svg(
      parsers.parse_rationals(options.center),
      parsers.parse_rationals(options.d1),
      parsers.parse_rationals(options.d2))
  return None, svg


HANDLERS = {
    "classify": _run_classify,
    "walls": _run_walls,
    "chambers": _run_chambers,
    "locate": _run_locate,
    "gm-check": _run_gm_check,
    "relative": _run_relative,
    "polygon": _run_polygon,
    "render": _run_render,
}


def build_parser():
  """Builds the argument parser."""
  parser = ArgumentParser(
      prog="rgit", description=(
          "Exact stability, walls and chambers of weighted point "
          "configurations."))
  parser.add_argument(
      "-v", "--verbose", action="count", default=0,
      help="increase verbosity, repeat for debug output")
  parser.add_argument(
      "--output", metavar="PATH", default=None,
      help="write the artifact to PATH instead of stdout")
  parser.add_argument(
      "--job", metavar="FILE", default=None,
      help="run the JSON job in FILE")

  commands = parser.add_subparsers(dest="command", parser_class=ArgumentParser)

  classify = commands.add_parser("classify", help="classify one point")
  classify.add_argument("--weights", default=None)
  group = classify.add_mutually_exclusive_group()
  group.add_argument("--partition", default=None)
  group.add_argument("--matrix", default=None)
  group.add_argument("--characters", default=None)
  classify.add_argument("--mu", default=None)
  classify.add_argument("--effective-dim", type=int, default=None)

  walls = commands.add_parser("walls", help="list walls")
  walls.add_argument("--m", type=int, required=True)
  walls.add_argument("--n", type=int, default=2)

  chamber_parser = commands.add_parser("chambers", help="enumerate chambers")
  chamber_parser.add_argument("--m", type=int, required=True)
  chamber_parser.add_argument("--n", type=int, default=2)
  chamber_parser.add_argument("--tables", action="store_true", default=False)

  locate = commands.add_parser("locate", help="locate weights")
  locate.add_argument("--weights", required=True)

  gm_check = commands.add_parser(
      "gm-check", help="compare the SL(n) and torus verdicts")
  gm_check.add_argument("--weights", required=True)
  group = gm_check.add_mutually_exclusive_group(required=True)
  group.add_argument("--partition", default=None)
  group.add_argument("--matrix", default=None)

  relative = commands.add_parser("relative", help="relative stability")
  relative.add_argument(
      "--kind", choices=["forgetful", "facet", "neighborhood"],
      default="forgetful")
  relative.add_argument("--m", type=int, default=None)
  relative.add_argument("--i", type=int, default=None)
  relative.add_argument("--weights", default=None)
  relative.add_argument("--eps", default=None)
  relative.add_argument("--mode", choices=["finite", "limit"], default=None)
  relative.add_argument("--power", type=int, default=None)
  relative.add_argument("--path", default=None)

  polygon = commands.add_parser("polygon", help="spatial polygon spaces")
  polygon.add_argument("action", choices=["analyze", "path"])
  polygon.add_argument("--sides", default=None)
  polygon.add_argument("--from", dest="start", default=None)
  polygon.add_argument("--to", dest="end", default=None)

  render_parser = commands.add_parser("render", help="render a section")
  render_parser.add_argument("--center", default=DEFAULT_CENTER)
  render_parser.add_argument("--d1", required=True)
  render_parser.add_argument("--d2", required=True)

  return parser


def _format_value(key, value):
  if isinstance(value, list):
    if key == "partition":
      return json.dumps(value)
    if value and isinstance(value[0], list):
      return ";".join(",".join(str(item) for item in row) for row in value)
    return ",".join(str(item) for item in value)
  return str(value)


def job_arguments(job):
  """Converts a validated job into command line arguments."""
  job_input = job.get("input", {})
  arguments = [job["command"]]
  if job["command"] == "polygon":
    arguments.append(job_input.get("action", "analyze"))

  for key in sorted(job_input):
    value = job_input[key]
    if key == "action":
      continue
    flag = "--{0:s}".format(key.replace("_", "-"))
    if isinstance(value, bool):
      if value:
        arguments.append(flag)
      continue
    # Values such as -1,1,0,0 would otherwise be taken for options.
    arguments.append("{0:s}={1:s}".format(flag, _format_value(key, value)))
  return arguments


def run(options):
  """Runs a parsed command.

  Returns:
    str: the artifact, canonical JSON or SVG.
  """
  if not options.command:
    raise errors.InputError("a command is required")

  name, document = HANDLERS[options.command](options)
  if name is None:
    return document

  schemas.validate_output(name, document)
  return serialization.dumps(document)


def main(argv=None, stdout=None):
  """Runs the command line tool.

  Args:
    argv (Optional[list[str]]): arguments, sys.argv[1:] by default.
    stdout (Optional[file]): artifact stream, sys.stdout by default.

  Returns:
    int: the exit code, 0 on success, 1 on malformed input and 2 on domain
        errors.
  """
  stdout = stdout or sys.stdout
  parser = build_parser()
  output = None
  try:
    options = parser.parse_args(argv)
    config.configure_logging(options.verbose)
    output = options.output

    if options.job:
      job = serialization.load_job(options.job)
      schemas.validate_job(job)
      output = job.get("output", output)
      verbose = options.verbose
      options = parser.parse_args(job_arguments(job))
      options.verbose = verbose

    text = run(options)

  except errors.Error as exception:
    logger.debug("Command failed: {0!s}".format(exception))
    document = serialization.error_document(exception)
    stdout.write(serialization.dumps(document))
    return exit_code(exception)

  serialization.write_artifact(text, output, stdout)
  return EXIT_SUCCESS


if __name__ == "__main__":
  sys.exit(main())
