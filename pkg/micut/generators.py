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
"""Seeded instance generators."""

import random
import typing

import networkx as nx

from . import sat
from .graph import Graph, is_complete

__all__ = [
    'GRAPH_KINDS',
    'GeneratorError',
    'cycle_graph',
    'gnp_graph',
    'graph_without_isolated',
    'noncomplete_graph',
    'path_graph',
    'random_instance',
    'random_residual_instance',
    'star_graph',
]

GRAPH_KINDS = ('gnp-graph', 'cycle', 'path', 'star')

_MAX_ATTEMPTS = 1000


class GeneratorError(ValueError):
  """Invalid generator parameters."""


def _check_nodes(n, minimum=1):
  if not isinstance(n, int) or n < minimum:
    raise GeneratorError(f'--n must be an integer >= {minimum}, got {n!r}')


def path_graph(n: int) -> Graph:
  _check_nodes(n)
  return Graph.from_networkx(nx.path_graph(n))


def cycle_graph(n: int) -> Graph:
  _check_nodes(n, minimum=3)
  return Graph.from_networkx(nx.cycle_graph(n))


def star_graph(n: int) -> Graph:
  """Center 1 joined to leaves 2..n."""
  _check_nodes(n)
  return Graph.from_networkx(nx.star_graph(n - 1))


def gnp_graph(n: int, p: float, seed: int) -> Graph:
  """Erdos-Renyi G(n, p)."""
  _check_nodes(n)
  if not 0.0 <= p <= 1.0:
    raise GeneratorError(f'--p must be in [0, 1], got {p}')

  return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def noncomplete_graph(n: int, p: float, rng: random.Random) -> Graph:
  """G(n, p) redrawn until it is not complete (n >= 2)."""
  _check_nodes(n, minimum=2)
  for _ in range(_MAX_ATTEMPTS):
    g = gnp_graph(n, p, rng.randrange(2**32))
    if not is_complete(g):
      return g

  edges = set(nx.complete_graph(range(1, n + 1)).edges)
  edges.discard((1, 2))
  return Graph(n, edges)


def graph_without_isolated(n: int, p: float, rng: random.Random) -> Graph:
  """G(n, p) with every isolated node joined to a random other node."""
  _check_nodes(n, minimum=2)
  g = gnp_graph(n, p, rng.randrange(2**32))
  edges = set(g.edges)
  for node in g.nodes:
    if g.degree(node) == 0 and not any(node in edge for edge in edges):
      other = rng.choice([v for v in g.nodes if v != node])
      edges.add((min(node, other), max(node, other)))

  return Graph(n, edges)


def random_instance(n: int, m: int, rng: random.Random) -> sat.Max2SatInstance:
  """Random 3-OCC instance with n variables and m clauses.

  Each clause joins literals of two different variables (so no tautologies),
  drawn among literals still under the occurrence bound. A draw that runs out
  of capacity is restarted.
  """
  if not isinstance(n, int) or n < 0 or not isinstance(m, int) or m < 0:
    raise GeneratorError(f'--n and --m must be nonnegative, got {n}, {m}')
  if m and n < 2:
    raise GeneratorError('Clauses need at least 2 variables')
  if 2 * m > 2 * sat.OCCURRENCE_BOUND * n:
    raise GeneratorError(
        f'{m} clauses exceed the occurrence capacity of {n} variables '
        f'(at most {sat.OCCURRENCE_BOUND * n})')

  literals = [k for v in range(1, n + 1) for k in (v, -v)]
  for _ in range(_MAX_ATTEMPTS):
    remaining = {literal: sat.OCCURRENCE_BOUND for literal in literals}
    clauses = []
    while len(clauses) < m:
      first_choices = [k for k in literals if remaining[k]]
      if not first_choices:
        break
      first = rng.choice(first_choices)
      second_choices = [
          k for k in literals if remaining[k] and abs(k) != abs(first)
      ]
      if not second_choices:
        break
      second = rng.choice(second_choices)
      remaining[first] -= 1
      remaining[second] -= 1
      clauses.append((first, second))

    if len(clauses) == m:
      return sat.Max2SatInstance(n, tuple(clauses))

  raise GeneratorError(f'Could not place {m} clauses on {n} variables')


def random_residual_instance(
    max_n: int,
    max_m: int,
    rng: random.Random) -> typing.Tuple[sat.Max2SatInstance, int]:
  """Preprocessed instance with at least one clause.

  Draws raw instances with up to max_n variables and max_m clauses and keeps
  the first whose residual is nonempty. Returns the residual and the number
  of draws it took.
  """
  if max_n < 2 or max_m < 1:
    raise GeneratorError('Need max_n >= 2 and max_m >= 1')

  for attempt in range(1, _MAX_ATTEMPTS + 1):
    n = rng.randint(2, max_n)
    m = rng.randint(1, min(max_m, sat.OCCURRENCE_BOUND * n))
    residual = sat.preprocess(random_instance(n, m, rng)).residual
    if residual.clause_count:
      return residual, attempt

  raise GeneratorError(
      f'No nonempty residual in {_MAX_ATTEMPTS} draws with n <= {max_n}, '
      f'm <= {max_m}')
