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
"""JSON schemas of job files and command line artifacts."""

import jsonschema

from rgit import errors


COMMANDS = (
    "classify", "walls", "chambers", "locate", "gm-check", "relative",
    "polygon", "render")

RATIONAL = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}

RATIONAL_INPUT = {"type": ["string", "integer"]}

RATIONALS_INPUT = {
    "oneOf": [
        {"type": "string"},
        {"type": "array", "items": RATIONAL_INPUT, "minItems": 1}]}

MATRIX_INPUT = {
    "oneOf": [
        {"type": "string"},
        {"type": "array", "items": {"type": "array", "items": RATIONAL_INPUT},
         "minItems": 1}]}

PARTITION_INPUT = {
    "oneOf": [
        {"type": "string"},
        {"type": "array", "items": {
            "type": "array", "items": {"type": "integer", "minimum": 1}}}]}

POSITIVE_INTEGER = {"type": "integer", "minimum": 1}


def _input(properties):
  return {
      "type": "object",
      "properties": properties,
      "additionalProperties": False}


INPUT_SCHEMAS = {
    "classify": _input({
        "weights": RATIONALS_INPUT,
        "partition": PARTITION_INPUT,
        "matrix": MATRIX_INPUT,
        "characters": MATRIX_INPUT,
        "mu": RATIONALS_INPUT,
        "effective_dim": POSITIVE_INTEGER}),
    "walls": _input({"m": POSITIVE_INTEGER, "n": POSITIVE_INTEGER}),
    "chambers": _input({
        "m": POSITIVE_INTEGER, "n": POSITIVE_INTEGER,
        "tables": {"type": "boolean"}}),
    "locate": _input({"weights": RATIONALS_INPUT}),
    "gm-check": _input({
        "weights": RATIONALS_INPUT,
        "partition": PARTITION_INPUT,
        "matrix": MATRIX_INPUT}),
    "relative": _input({
        "kind": {"enum": ["forgetful", "facet", "neighborhood"]},
        "m": POSITIVE_INTEGER,
        "i": POSITIVE_INTEGER,
        "weights": RATIONALS_INPUT,
        "eps": RATIONAL_INPUT,
        "mode": {"enum": ["finite", "limit"]},
        "power": POSITIVE_INTEGER,
        "path": RATIONALS_INPUT}),
    "polygon": _input({
        "action": {"enum": ["analyze", "path"]},
        "sides": RATIONALS_INPUT,
        "from": RATIONALS_INPUT,
        "to": RATIONALS_INPUT}),
    "render": _input({
        "center": RATIONALS_INPUT,
        "d1": RATIONALS_INPUT,
        "d2": RATIONALS_INPUT}),
}

JOB_SCHEMA = {
    "type": "object",
    "required": ["command"],
    "properties": {
        "command": {"enum": list(COMMANDS)},
        "input": {"type": "object"},
        "output": {"type": "string"}},
    "additionalProperties": False}

VERDICT_SCHEMA = {
    "type": "object",
    "required": ["class", "sign", "sq_magnitude", "witnesses"],
    "properties": {
        "class": {"enum": ["stable", "strictly_semistable", "unstable"]},
        "sign": {"enum": [-1, 0, 1]},
        "sq_magnitude": RATIONAL,
        "witnesses": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer"}}}},
    "additionalProperties": False}

WALL_SCHEMA = {
    "type": "object",
    "required": ["J", "d", "relevant", "facet"],
    "properties": {
        "J": {"type": "array", "items": {"type": "integer"}},
        "d": {"type": "integer"},
        "relevant": {"type": "boolean"},
        "facet": {"type": "boolean"}},
    "additionalProperties": False}

SIGNATURE_SCHEMA = {
    "type": "object",
    "additionalProperties": {"enum": ["-", "0", "+"]}}

RATIONAL_LIST = {"type": "array", "items": RATIONAL}

WALLS_SCHEMA = {
    "type": "object",
    "required": ["m", "n", "walls"],
    "properties": {
        "m": {"type": "integer"},
        "n": {"type": "integer"},
        "walls": {"type": "array", "items": WALL_SCHEMA}},
    "additionalProperties": False}

CHAMBERS_SCHEMA = {
    "type": "object",
    "required": ["m", "n", "count", "chambers"],
    "properties": {
        "m": {"type": "integer"},
        "n": {"type": "integer"},
        "count": {"type": "integer"},
        "chambers": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["signature", "witness"],
                "properties": {
                    "signature": SIGNATURE_SCHEMA,
                    "witness": RATIONAL_LIST,
                    "table": {
                        "type": "object",
                        "additionalProperties": {
                            "enum": [
                                "stable", "strictly_semistable",
                                "unstable"]}}},
                "additionalProperties": False}}},
    "additionalProperties": False}

LOCATE_SCHEMA = {
    "type": "object",
    "required": ["weights", "signature", "on_walls"],
    "properties": {
        "weights": RATIONAL_LIST,
        "signature": SIGNATURE_SCHEMA,
        "on_walls": {"type": "array", "items": WALL_SCHEMA}},
    "additionalProperties": False}

GM_CHECK_SCHEMA = {
    "type": "object",
    "required": ["agree", "sln", "torus"],
    "properties": {
        "agree": {"type": "boolean"},
        "sln": VERDICT_SCHEMA,
        "torus": VERDICT_SCHEMA},
    "additionalProperties": False}

RELATIVE_SCHEMA = {
    "type": "object",
    "anyOf": [
        {"required": ["equality_verified", "threshold", "preimage"]},
        {"required": ["equality_verified", "threshold", "predicted"]},
        {"required": ["table", "no_stable", "coincident_unstable"]},
        {"required": ["mode", "contract", "points"]}]}

POLYGON_SCHEMA = {
    "type": "object",
    "required": [
        "sides", "exists", "degenerate", "alpha", "chamber", "on_walls",
        "facet_walls", "moduli_dim"],
    "properties": {
        "sides": RATIONAL_LIST,
        "exists": {"type": "boolean"},
        "degenerate": {"type": "boolean"},
        "alpha": RATIONAL_LIST,
        "chamber": {"oneOf": [SIGNATURE_SCHEMA, {"type": "null"}]},
        "on_walls": {"type": "array", "items": WALL_SCHEMA},
        "facet_walls": {"type": "array", "items": WALL_SCHEMA},
        "moduli_dim": {"type": ["integer", "null"]}},
    "additionalProperties": False}

PATH_SCHEMA = {
    "type": "object",
    "required": ["crossings"],
    "properties": {
        "crossings": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["t", "walls", "before", "after"],
                "properties": {
                    "t": RATIONAL,
                    "walls": {"type": "array", "items": WALL_SCHEMA},
                    "before": SIGNATURE_SCHEMA,
                    "after": SIGNATURE_SCHEMA},
                "additionalProperties": False}}},
    "additionalProperties": False}

ERROR_SCHEMA = {
    "type": "object",
    "required": ["error", "message"],
    "properties": {
        "error": {"type": "string"},
        "message": {"type": "string"}},
    "additionalProperties": False}

OUTPUT_SCHEMAS = {
    "classify": VERDICT_SCHEMA,
    "walls": WALLS_SCHEMA,
    "chambers": CHAMBERS_SCHEMA,
    "locate": LOCATE_SCHEMA,
    "gm-check": GM_CHECK_SCHEMA,
    "relative": RELATIVE_SCHEMA,
    "polygon analyze": POLYGON_SCHEMA,
    "polygon path": PATH_SCHEMA,
    "error": ERROR_SCHEMA,
}


def validate_job(job):
  """Validates a job document.

  Raises:
    InputError: if the job or its input does not match the schema.
  """
  try:
    jsonschema.validate(instance=job, schema=JOB_SCHEMA)
    jsonschema.validate(
        instance=job.get("input", {}), schema=INPUT_SCHEMAS[job["command"]])
  except jsonschema.ValidationError as exception:
    raise errors.InputError("Invalid job: {0:s}".format(exception.message))


def validate_output(name, document):
  """Validates an artifact against its published schema.

  Raises:
    RuntimeError: if the artifact does not match.
  """
  try:
    jsonschema.validate(instance=document, schema=OUTPUT_SCHEMAS[name])
  except jsonschema.ValidationError as exception:
    raise RuntimeError("Artifact {0:s} violates its schema: {1:s}".format(
        name, exception.message))
