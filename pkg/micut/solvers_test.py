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
"""Maximum independent cut solver tests."""

import unittest

from . import config
from . import graph
from . import solvers
from . import tests
from .graph import Graph


class ExactTest(unittest.TestCase):
  """Exact solver tests."""

  def test_small_graphs(self):
    """Test optima and tie-breaking."""
    solution = solvers.exact_micut(tests.path_graph(3))
    self.assertEqual([1, 3], solution.sorted_members)
    self.assertEqual(2, solution.value)
    self.assertEqual('exact', solution.algorithm)

    solution = solvers.exact_micut(tests.triangle())
    self.assertEqual([1], solution.sorted_members)
    self.assertEqual(2, solution.value)

    solution = solvers.exact_micut(tests.cycle_graph(5))
    self.assertEqual([1, 3], solution.sorted_members)
    self.assertEqual(4, solution.value)

  def test_limit(self):
    """Test the exhaustive limit."""
    self.addCleanup(config.set_limits, **config.snapshot())
    with self.assertRaises(config.LimitExceededError):
      solvers.exact_micut(tests.path_graph(31))
    with self.assertRaises(config.LimitExceededError):
      solvers.exact_micut(tests.path_graph(5), limit=4)

    config.set_limits(exact_limit=40)
    self.assertEqual(30, solvers.exact_micut(tests.path_graph(31)).value)

  def test_empty_graph(self):
    """Test that every solver rejects the graph without nodes."""
    for algorithm in solvers.ALGORITHMS:
      with self.subTest(algorithm=algorithm):
        with self.assertRaises(solvers.SolverError):
          solvers.solve(Graph(0), algorithm)

  def test_frustration_optimum(self):
    """Test that optimal cuts minimize polar frustration."""
    optimum, b_sets = solvers.frustration_optimum_b_sets(tests.path_graph(3))
    self.assertEqual(0, optimum)
    self.assertEqual({frozenset([1, 3]), frozenset([2])}, b_sets)

    for g in tests.random_graphs(10, 8, seed=9):
      if any(g.degree(node) == 0 for node in g.nodes):
        continue
      optimum, b_sets = solvers.frustration_optimum_b_sets(g)
      best = solvers.exact_micut(g)
      self.assertEqual(g.edge_count - best.value, optimum)
      self.assertIn(best.members, b_sets)

  def test_frustration_optimum_limit(self):
    """Test that the profile sweep has its own, smaller cap."""
    self.addCleanup(config.set_limits, **config.snapshot())
    self.assertEqual(20, config.profile_limit)
    with self.assertRaises(config.LimitExceededError) as e:
      solvers.frustration_optimum_b_sets(tests.path_graph(21))
    self.assertEqual(20, e.exception.limit)

    config.set_limits(profile_limit=2)
    with self.assertRaises(config.LimitExceededError):
      solvers.frustration_optimum_b_sets(tests.path_graph(3))
    # exact_micut keeps its own limit.
    self.assertEqual(2, solvers.exact_micut(tests.path_graph(3)).value)


class HeuristicTest(unittest.TestCase):
  """Greedy and local search tests."""

  def test_greedy(self):
    """Test the greedy rule."""
    solution = solvers.greedy_micut(tests.star_graph(5))
    self.assertEqual([1], solution.sorted_members)
    self.assertEqual(4, solution.value)

    solution = solvers.greedy_micut(tests.path_graph(3))
    self.assertEqual([2], solution.sorted_members)
    self.assertEqual(2, solution.value)

    solution = solvers.greedy_micut(Graph(3))
    self.assertEqual([1, 2, 3], solution.sorted_members)
    self.assertEqual(0, solution.value)

  def test_local_search(self):
    """Test local search on small graphs."""
    for seed in range(5):
      self.assertEqual(
          2, solvers.local_search_micut(tests.path_graph(3), seed=seed).value)

    solution = solvers.local_search_micut(Graph(1))
    self.assertEqual([1], solution.sorted_members)
    self.assertEqual(0, solution.value)

    solution = solvers.local_search_micut(
        tests.cycle_graph(5), seed=42, restarts=10)
    self.assertEqual(4, solution.value)
    self.assertEqual(42, solution.seed)

    with self.assertRaises(solvers.SolverError):
      solvers.local_search_micut(Graph(1), restarts=0)

  def test_isolated_nodes(self):
    """Test that local search output is maximal with isolated nodes."""
    g = Graph(5, [(1, 2), (2, 3)])
    for seed in range(5):
      solution = solvers.local_search_micut(g, seed=seed)
      self.assertTrue(graph.is_maximal_independent(g, solution.members))
      self.assertLessEqual({4, 5}, solution.members)

  def test_heuristics_bounded_by_exact(self):
    """Test heuristics against the exact optimum."""
    for index, g in enumerate(tests.random_graphs(15, 10, seed=1)):
      exact = solvers.exact_micut(g).value
      self.assertLessEqual(solvers.greedy_micut(g).value, exact)
      one = solvers.local_search_micut(g, seed=index, restarts=1).value
      more = solvers.local_search_micut(g, seed=index, restarts=5).value
      self.assertLessEqual(one, more)
      self.assertLessEqual(more, exact)

  def test_deterministic(self):
    """Test that equal seeds give equal solutions."""
    g = tests.random_graphs(1, 12, seed=8)[0]
    self.assertEqual(
        solvers.local_search_micut(g, seed=3, restarts=4),
        solvers.local_search_micut(g, seed=3, restarts=4))


class SolveTest(unittest.TestCase):
  """Dispatch tests."""

  def test_solve(self):
    """Test dispatch by name."""
    self.assertEqual('greedy',
                     solvers.solve(tests.path_graph(3), 'greedy').algorithm)
    with self.assertRaises(solvers.SolverError):
      solvers.solve(tests.path_graph(3), 'annealing')

  def test_solution_from_set(self):
    """Test solution validation."""
    g = tests.path_graph(3)
    self.assertEqual(2, solvers.solution_from_set(g, [2], 'exact').value)
    with self.assertRaises(solvers.SolverError):
      solvers.solution_from_set(g, [1], 'exact')
    with self.assertRaises(solvers.SolverError):
      solvers.solution_from_set(g, [1, 2], 'exact')


if __name__ == '__main__':
  unittest.main()
