# Copyright 2026 micut authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""JSON records emitted by the CLI."""

import dataclasses
from fractions import Fraction
import json
import os

import jsonschema

from . import cache
from . import game
from .graph import Graph

SCHEMA_DIR = os.path.join(
    os.path.dirname(os.path.abspath(__file__)), 'schemas')

shared_cache = cache.InMemoryCache()


@cache.cached(shared_cache)
def load_schema(name):
  path = os.path.join(SCHEMA_DIR, f'{name}.json')
  with open(path, 'r') as schema:
    return json.load(schema)


def validate(record, name):
  """Validate a record against a packaged schema and return it."""
  jsonschema.validate(record, load_schema(name))
  return record


def rational(value: Fraction):
  """Integers stay integers; other rationals become "p/q" strings."""
  value = Fraction(value)
  if value.denominator == 1:
    return value.numerator

  return f'{value.numerator}/{value.denominator}'


def dumps(record) -> str:
  """Canonical JSON text (sorted keys), newline terminated."""
  return json.dumps(record, sort_keys=True, indent=2) + '\n'


def solution_record(solution):
  record = {
      'set': solution.sorted_members,
      'value': solution.value,
      'algorithm': solution.algorithm,
  }
  if solution.seed is not None:
    record['seed'] = solution.seed

  return validate(record, 'solution')


def trace_record(g: Graph, trace: game.DynamicsTrace, params: game.GameParams,
                 schedule, seed):
  """Dynamics trace plus the checks run on its final profile."""
  polar = params.pi_A > g.edge_count * params.pi_B
  bound = g.node_count * g.edge_count**2
  record = {
      'steps': trace.step_count,
      'frustration_sequence': [rational(v) for v in trace.frustration_sequence],
      'initial_frustration': rational(trace.initial_frustration),
      'final_profile': str(trace.final_profile),
      'moves': list(trace.moves),
      'schedule': game.Schedule(schedule).value,
      'seed': seed,
      'pi_A': rational(params.pi_A),
      'pi_B': rational(params.pi_B),
      'nash': game.is_nash(g, trace.final_profile, params),
      'polar_case': polar,
      'polar_equilibrium': (game.is_polar_equilibrium(g, trace.final_profile)
                            if polar else None),
      'step_bound_nm2': bound,
      'within_step_bound': trace.step_count <= bound,
  }
  return validate(record, 'trace')


def certificate_record(certificate):
  record = dataclasses.asdict(certificate)
  record['optimal_set'] = list(certificate.optimal_set)
  record['ok'] = certificate.ok
  return validate(record, 'certificate')


def summary_record(record):
  return validate(record, 'summary')


def verify_record(record):
  return validate(record, 'verify')


def bench_record(record):
  return validate(record, 'bench')
