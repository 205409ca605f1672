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
"""Benchmark tests."""

import os
import tempfile
import unittest

from . import benchmark
from . import graph
from . import tests


class BenchmarkTest(unittest.TestCase):
  """Benchmark tests."""

  def setUp(self):
    tmp_dir = tempfile.TemporaryDirectory()
    self.addCleanup(tmp_dir.cleanup)
    self.directory = tmp_dir.name

  def _write(self, name, g):
    with open(os.path.join(self.directory, name), 'w') as f:
      f.write(graph.serialize_graph(g))

  def _write_small_graphs(self):
    self._write('p3.dimacs', tests.path_graph(3))
    self._write('c5.dimacs', tests.cycle_graph(5))
    self._write('k3.dimacs', tests.triangle())

  def test_exact_and_greedy(self):
    """Test values and gaps on small graphs."""
    self._write_small_graphs()
    rows = benchmark.bench(self.directory, ['exact', 'greedy'], timing=False)
    self.assertEqual([
        ('c5.dimacs', 'exact', 4, 0),
        ('c5.dimacs', 'greedy', 4, 0),
        ('k3.dimacs', 'exact', 2, 0),
        ('k3.dimacs', 'greedy', 2, 0),
        ('p3.dimacs', 'exact', 2, 0),
        ('p3.dimacs', 'greedy', 2, 0),
    ], [(r['instance'], r['algorithm'], r['value'], r['gap']) for r in rows])
    self.assertTrue(all(r['seconds'] is None for r in rows))

  def test_restarts(self):
    """Test that more restarts never do worse."""
    rng_graphs = tests.random_graphs(4, 12, seed=5)
    for index, g in enumerate(rng_graphs):
      self._write(f'g{index}.dimacs', g)

    one = benchmark.bench(self.directory, ['local'], seed=2, restarts=1)
    ten = benchmark.bench(self.directory, ['local'], seed=2, restarts=10)
    for row_one, row_ten in zip(one, ten):
      self.assertLessEqual(row_one['value'], row_ten['value'])
      self.assertIsNone(row_one['gap'])
      self.assertGreaterEqual(row_one['seconds'], 0)

  def test_over_limit(self):
    """Test that the exact solver is skipped over its limit."""
    self._write('p5.dimacs', tests.path_graph(5))
    rows = benchmark.bench(self.directory, ['exact', 'greedy'], limit=3)
    self.assertEqual('over-limit', rows[0]['status'])
    self.assertIsNone(rows[0]['value'])
    self.assertEqual('ok', rows[1]['status'])
    self.assertIsNone(rows[1]['gap'])

  def test_csv(self):
    """Test CSV output."""
    self._write('p3.dimacs', tests.path_graph(3))
    rows = benchmark.bench(self.directory, ['exact'], timing=False)
    self.assertEqual(
        'instance,node_count,edge_count,algorithm,status,value,gap,seconds\n'
        'p3.dimacs,3,2,exact,ok,2,0,\n', benchmark.to_csv(rows))

  def test_errors(self):
    """Test unusable inputs."""
    with self.assertRaises(benchmark.BenchError):
      benchmark.bench(self.directory)
    with self.assertRaises(benchmark.BenchError):
      benchmark.bench(os.path.join(self.directory, 'missing'))

    self._write('p3.dimacs', tests.path_graph(3))
    with self.assertRaises(benchmark.BenchError):
      benchmark.bench(self.directory, ['annealing'])

    with open(os.path.join(self.directory, 'bad.dimacs'), 'w') as f:
      f.write('p edge 2 1\ne 1 3\n')
    with self.assertRaises(benchmark.BenchError) as e:
      benchmark.bench(self.directory, ['greedy'])
    self.assertIn('bad.dimacs: line 2', str(e.exception))


if __name__ == '__main__':
  unittest.main()
