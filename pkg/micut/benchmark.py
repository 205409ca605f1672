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
"""Solver comparison over a directory of DIMACS graphs."""

import csv
import io
import logging
import os
import time
import typing

from . import config
from . import solvers
from .graph import GraphError, parse_graph

__all__ = [
    'BenchError',
    'CSV_FIELDS',
    'bench',
    'to_csv',
]

CSV_FIELDS = ('instance', 'node_count', 'edge_count', 'algorithm', 'status',
              'value', 'gap', 'seconds')


class BenchError(ValueError):
  """Benchmark input is unusable."""


def _graph_files(directory):
  if not os.path.isdir(directory):
    raise BenchError(f'{directory} is not a directory')

  names = sorted(
      name for name in os.listdir(directory)
      if not name.startswith('.') and
      os.path.isfile(os.path.join(directory, name)))
  if not names:
    raise BenchError(f'{directory} contains no graph files')

  return names


def _run(g, algorithm, seed, restarts, limit):
  start = time.perf_counter()
  try:
    solution = solvers.solve(
        g, algorithm, seed=seed, restarts=restarts, limit=limit)
  except config.LimitExceededError as e:
    logging.warning('Skipping %s: %s', algorithm, e)
    return 'over-limit', None, None

  return 'ok', solution.value, time.perf_counter() - start


def bench(directory: str,
          algorithms: typing.Sequence[str] = solvers.ALGORITHMS,
          seed: int = 0,
          restarts: int = 1,
          limit: typing.Optional[int] = None,
          timing: bool = True) -> typing.List[dict]:
  """One row per (graph file, algorithm), files in name order.

  gap is the exact optimum minus the algorithm's value, when the exact solver
  is among `algorithms` and ran within its limit.
  """
  for algorithm in algorithms:
    if algorithm not in solvers.ALGORITHMS:
      raise BenchError(f'Unknown algorithm {algorithm!r}')

  rows = []
  for name in _graph_files(directory):
    path = os.path.join(directory, name)
    try:
      with open(path, 'rb') as f:
        g = parse_graph(f)
    except GraphError as e:
      raise BenchError(f'{name}: {e}') from e

    logging.info('Benchmarking %s (%d nodes, %d edges)', name, g.node_count,
                 g.edge_count)
    results = {
        algorithm: _run(g, algorithm, seed, restarts, limit)
        for algorithm in algorithms
    }
    exact_value = results.get('exact', (None, None, None))[1]
    for algorithm in algorithms:
      status, value, seconds = results[algorithm]
      rows.append({
          'instance': name,
          'node_count': g.node_count,
          'edge_count': g.edge_count,
          'algorithm': algorithm,
          'status': status,
          'value': value,
          'gap': (exact_value - value
                  if exact_value is not None and value is not None else None),
          'seconds': round(seconds, 6) if timing and seconds is not None else
                     None,
      })

  return rows


def to_csv(rows: typing.Iterable[dict]) -> str:
  """CSV text with a header row; missing values are empty."""
  out = io.StringIO()
  writer = csv.DictWriter(out, fieldnames=CSV_FIELDS, lineterminator='\n')
  writer.writeheader()
  for row in rows:
    writer.writerow({
        key: '' if row[key] is None else row[key] for key in CSV_FIELDS
    })

  return out.getvalue()
