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
"""Maximum independent cut solvers."""

from dataclasses import dataclass
import logging
import random
import typing

from . import config
from . import game
from .graph import (Graph, NodeSet, cut_size, is_maximal_independent,
                    maximal_independent_sets)

__all__ = [
    'ALGORITHMS',
    'IndependentCutSolution',
    'SolverError',
    'exact_micut',
    'frustration_optimum_b_sets',
    'greedy_micut',
    'local_search_micut',
    'solution_from_set',
    'solve',
]

ALGORITHMS = ('exact', 'greedy', 'local')


class SolverError(ValueError):
  """Solver cannot run on the given input."""


@dataclass(frozen=True)
class IndependentCutSolution:
  """A maximal independent set C and the number of edges it cuts."""

  members: NodeSet
  value: int
  algorithm: str
  seed: typing.Optional[int] = None

  @property
  def sorted_members(self) -> typing.List[int]:
    return sorted(self.members)


def solution_from_set(g: Graph,
                      nodes: typing.Iterable[int],
                      algorithm: str,
                      seed: typing.Optional[int] = None
                     ) -> IndependentCutSolution:
  """Wrap a node set, checking it is a maximal independent set."""
  members = frozenset(nodes)
  if not is_maximal_independent(g, members):
    raise SolverError(
        f'{algorithm} produced {sorted(members)}, which is not a maximal '
        'independent set')

  return IndependentCutSolution(members, cut_size(g, members), algorithm, seed)


def _rank(g, members):
  """Sort key: larger cut first, then the smaller sorted member list."""
  return (-cut_size(g, members), sorted(members))


def _check_nonempty(g):
  if g.node_count == 0:
    raise SolverError('Graph has no nodes')


def exact_micut(g: Graph,
                limit: typing.Optional[int] = None) -> IndependentCutSolution:
  """Optimum over all maximal independent sets.

  Ties go to the lexicographically smallest sorted member list.
  """
  _check_nonempty(g)
  limit = config.exact_limit if limit is None else limit
  config.check_limit(g.node_count, limit, 'Graph')

  best = min(maximal_independent_sets(g), key=lambda s: _rank(g, s))
  return solution_from_set(g, best, 'exact')


def greedy_micut(g: Graph) -> IndependentCutSolution:
  """Repeatedly take the undecided node with most undecided neighbors.

  Ties go to the smallest index; the picked node's neighbors are excluded.
  """
  _check_nonempty(g)
  undecided = set(g.nodes)
  chosen = set()
  while undecided:
    node = min(undecided,
               key=lambda v: (-len(g.neighbors(v) & undecided), v))
    chosen.add(node)
    undecided -= g.neighbors(node)
    undecided.discard(node)

  return solution_from_set(g, chosen, 'greedy')


def _complete(g, members):
  """Add uncovered nodes (in index order) until the set is maximal."""
  members = set(members)
  for node in g.nodes:
    if node not in members and not g.neighbors(node) & members:
      members.add(node)

  return members


def local_search_micut(g: Graph,
                       seed: int = 0,
                       restarts: int = 1) -> IndependentCutSolution:
  """Best-response dynamics under polar payoffs from random starts.

  Nash profiles of the polar game are the profiles whose B players form a
  maximal independent set (up to isolated players, who are indifferent and
  get added afterwards). The best B-set over all restarts is returned.
  """
  _check_nonempty(g)
  if restarts < 1:
    raise SolverError(f'restarts must be positive, got {restarts}')

  params = game.polar_params(g, 1)
  rng = random.Random(seed)
  best = None
  for restart in range(restarts):
    start = game.random_profile(g, rng)
    trace = game.best_response_dynamics(
        g,
        start,
        params,
        schedule=game.Schedule.RANDOM,
        seed=rng.randrange(2**32))
    members = _complete(g, trace.final_profile.b_set)
    logging.debug('Restart %d: %d moves, cut %d', restart, trace.step_count,
                  cut_size(g, members))
    if best is None or _rank(g, members) < _rank(g, best):
      best = members

  return solution_from_set(g, best, 'local', seed)


def solve(g: Graph,
          algorithm: str,
          seed: int = 0,
          restarts: int = 1,
          limit: typing.Optional[int] = None) -> IndependentCutSolution:
  """Dispatch to a solver by name."""
  if algorithm == 'exact':
    return exact_micut(g, limit=limit)
  if algorithm == 'greedy':
    return greedy_micut(g)
  if algorithm == 'local':
    return local_search_micut(g, seed=seed, restarts=restarts)

  raise SolverError(f'Unknown algorithm {algorithm!r}, expected one of '
                    f'{", ".join(ALGORITHMS)}')


def frustration_optimum_b_sets(
    g: Graph) -> typing.Tuple[int, typing.Set[NodeSet]]:
  """Global frustration minimum under polar payoffs (pi_B = 1).

  Returns the minimum and the B-sets of all profiles attaining it. Exhaustive
  over 2^n profiles, for cross-checking exact_micut on small graphs.
  """
  _check_nonempty(g)
  config.check_limit(g.node_count, config.profile_limit, 'Graph')
  params = game.polar_params(g, 1)
  best_value = None
  best_sets = set()
  for profile in game.all_profiles(g):
    value = game.frustration(g, profile, params)
    if best_value is None or value < best_value:
      best_value = value
      best_sets = {profile.b_set}
    elif value == best_value:
      best_sets.add(profile.b_set)

  return int(best_value), best_sets
