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
"""Seeded property suites checked against exhaustive oracles.

Item k of a run with seed s draws its input from random.Random(s + k), so
`--count 1 --seed <failure seed>` reproduces a single failure.
"""

import collections
import concurrent.futures
from fractions import Fraction
import logging
import random
import typing

from . import game
from . import generators
from . import reductions
from . import sat
from . import solvers
from .logs import log_context

__all__ = [
    'SUITES',
    'SuiteError',
    'run_suite',
]

# Maximum clause count of the instances drawn by the eq12 and majority suites.
DEFAULT_MAX_CLAUSES = 10

# Parameter sets sampled per graph by the potential suite.
PARAMETER_SAMPLES = 3

# Contributions to the objective per gadget case.
EXPECTED_CONTRIBUTIONS = {
    reductions.CASE_BOTH: [4],
    reductions.CASE_FIRST: [3, 4],
    reductions.CASE_SECOND: [3, 4],
    reductions.CASE_NONE: [2, 3],
}


class SuiteError(ValueError):
  """Unknown suite or invalid suite parameters."""


class ItemResult(typing.NamedTuple):
  """Outcome of one suite item."""

  seed: int
  failure: typing.Optional[str]
  stats: typing.Dict[str, int]


def _random_params(rng):
  """Random valid payoff matrix with small rational entries."""
  pi_aa = Fraction(rng.randint(-5, 5))
  pi_bb = Fraction(rng.randint(-5, 5))
  return game.GameParams(
      pi_AA=pi_aa,
      pi_AB=pi_bb + Fraction(rng.randint(1, 20), rng.randint(1, 4)),
      pi_BA=pi_aa + Fraction(rng.randint(1, 20), rng.randint(1, 4)),
      pi_BB=pi_bb)


def _check_eq12(rng, max_n):
  instance, attempts = generators.random_residual_instance(
      max_n, DEFAULT_MAX_CLAUSES, rng)
  certificate = reductions.check_certificate(
      instance, trials=3, seed=rng.randrange(2**32))
  stats = {
      'draws': attempts,
      'sets_checked': certificate.sets_checked,
      certificate.mode: 1,
  }
  if certificate.ok:
    return None, stats

  failed = [
      name for name in ('counts_hold', 'size_bounds_hold', 'degree_bound_holds',
                        'eq1_holds', 'eq2_holds', 'beta_holds',
                        'alpha21_holds', 'chief_selection_holds',
                        'gadget_cases_hold', 'recovered_optimal')
      if not getattr(certificate, name)
  ]
  return (f'instance {sat.serialize_instance(instance)!r} failed '
          f'{", ".join(failed)}'), stats


def _check_thm1(rng, max_n):
  n = rng.randint(2, max(2, max_n))
  g = generators.noncomplete_graph(n, rng.random(), rng)
  report = reductions.check_mis_recovery(g)
  if report.holds:
    return None, {'mis_size': report.mis_size}

  return (f'graph {g!r}: recovered {sorted(report.recovered)} '
          f'(size {len(report.recovered)}, cut {report.cut_value}), maximum '
          f'independent set size {report.mis_size}, expected cut '
          f'{report.expected_cut_value}'), {}


def _check_gadget(rng, max_n):
  del rng, max_n
  table = reductions.gadget_case_table()
  if table.holds and table.contributions == EXPECTED_CONTRIBUTIONS:
    return None, {'sets': len(table.rows)}

  return f'gadget contributions {table.contributions}', {}


def _check_polar(rng, max_n):
  n = rng.randint(2, max(2, max_n))
  g = generators.graph_without_isolated(n, rng.random(), rng)
  params = game.polar_params(g)
  for profile in game.all_profiles(g):
    if game.is_nash(g, profile, params) != game.is_polar_equilibrium(
        g, profile):
      return f'graph {g!r}: profile {profile} breaks the polar equivalence', {}

  # Minimum frustration is pi_B * (m - best cut), attained by optimal cuts.
  optimum, b_sets = solvers.frustration_optimum_b_sets(g)
  best = solvers.exact_micut(g)
  if optimum != g.edge_count - best.value or best.members not in b_sets:
    return (f'graph {g!r}: minimum frustration {optimum} does not match the '
            f'optimal cut {best.sorted_members} of value {best.value}'), {}

  return None, {'profiles': 2**n}


def _check_potential(rng, max_n):
  n = rng.randint(1, max(1, max_n))
  g = generators.gnp_graph(n, rng.random(), rng.randrange(2**32))
  for _ in range(PARAMETER_SAMPLES):
    params = _random_params(rng)
    for profile in game.all_profiles(g):
      if game.is_nash(g, profile, params) != game.is_local_min_frustration(
          g, profile, params):
        return (f'graph {g!r}, params {params}: Nash and local frustration '
                f'minimum checks disagree on profile {profile}'), {}

  return None, {'profiles': PARAMETER_SAMPLES * 2**n}


def _check_dynamics(rng, max_n):
  n = rng.randint(1, max(1, max_n))
  g = generators.gnp_graph(n, rng.random(), rng.randrange(2**32))
  params = _random_params(rng)
  schedule = rng.choice(list(game.Schedule))
  start = game.random_profile(g, rng)
  trace = game.best_response_dynamics(
      g, start, params, schedule=schedule, seed=rng.randrange(2**32))

  previous = trace.initial_frustration
  for step, value in enumerate(trace.frustration_sequence, 1):
    if value >= previous:
      return (f'graph {g!r}: frustration did not decrease at step {step} '
              f'({previous} -> {value})'), {}
    previous = value

  if not game.is_nash(g, trace.final_profile, params):
    return f'graph {g!r}: final profile {trace.final_profile} is not Nash', {}

  return None, {
      'steps': trace.step_count,
      'over_step_bound': int(trace.step_count > n * g.edge_count**2),
  }


def _check_majority(rng, max_n):
  instance, _ = generators.random_residual_instance(max_n, DEFAULT_MAX_CLAUSES,
                                                    rng)
  satisfied = sat.evaluate(instance, sat.majority_heuristic(instance))
  bound = instance.variable_count // 2
  if satisfied >= bound:
    return None, {'slack': satisfied - bound}

  return (f'instance {sat.serialize_instance(instance)!r}: majority '
          f'assignment satisfies {satisfied} < {bound} clauses'), {}


SUITES = {
    'eq12': _check_eq12,
    'thm1': _check_thm1,
    'gadget': _check_gadget,
    'polar': _check_polar,
    'potential': _check_potential,
    'dynamics': _check_dynamics,
    'majority': _check_majority,
}

# Suites whose single item covers the whole input space.
_DETERMINISTIC = frozenset(['gadget'])


def _run_item(suite: str, seed: int, max_n: int) -> ItemResult:
  with log_context(suite=suite, seed=seed):
    failure, stats = SUITES[suite](random.Random(seed), max_n)
    if failure:
      logging.error('Suite %s failed for seed %d: %s', suite, seed, failure)
    return ItemResult(seed, failure, stats)


def run_suite(suite: str,
              count: int = 100,
              max_n: int = 6,
              seed: int = 0,
              workers: int = 1) -> dict:
  """Run a property suite and return its report.

  With workers > 1 items run in a process pool; results are aggregated in
  item order either way.
  """
  if suite not in SUITES:
    raise SuiteError(f'Unknown suite {suite!r}, expected one of '
                     f'{", ".join(sorted(SUITES))}')
  if count < 0 or max_n < 0 or workers < 1:
    raise SuiteError('--count and --max-n must be nonnegative and --workers '
                     'positive')

  if suite in _DETERMINISTIC:
    count = 1
  seeds = [seed + k for k in range(count)]
  logging.info('Running suite %s: %d items, max n %d, seed %d', suite, count,
               max_n, seed)

  if workers > 1 and count > 1:
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
      results = list(
          pool.map(_run_item, [suite] * count, seeds, [max_n] * count))
  else:
    results = [_run_item(suite, item_seed, max_n) for item_seed in seeds]

  stats = collections.Counter()
  failures = []
  for result in results:
    stats.update(result.stats)
    if result.failure:
      failures.append({'seed': result.seed, 'reason': result.failure})

  return {
      'suite': suite,
      'count': count,
      'max_n': max_n,
      'seed': seed,
      'passed': not failures,
      'checked': len(results),
      'failures': failures,
      'stats': dict(sorted(stats.items())),
  }
