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
"""Generator tests."""

import random
import unittest

from . import generators
from . import graph
from . import sat


class GraphGeneratorTest(unittest.TestCase):
  """Graph generator tests."""

  def test_families(self):
    """Test the deterministic families."""
    self.assertEqual(graph.Graph(4, [(1, 2), (2, 3), (3, 4)]),
                     generators.path_graph(4))
    self.assertEqual(graph.Graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]),
                     generators.cycle_graph(5))
    self.assertEqual(graph.Graph(5, [(1, 2), (1, 3), (1, 4), (1, 5)]),
                     generators.star_graph(5))
    self.assertEqual(0, generators.path_graph(1).edge_count)

    with self.assertRaises(generators.GeneratorError):
      generators.cycle_graph(2)
    with self.assertRaises(generators.GeneratorError):
      generators.path_graph(0)

  def test_gnp(self):
    """Test seeded G(n, p)."""
    self.assertEqual(
        generators.gnp_graph(10, 0.3, 7), generators.gnp_graph(10, 0.3, 7))
    self.assertEqual(45, generators.gnp_graph(10, 1.0, 1).edge_count)
    self.assertEqual(0, generators.gnp_graph(10, 0.0, 1).edge_count)
    with self.assertRaises(generators.GeneratorError):
      generators.gnp_graph(10, 1.5, 0)

  def test_noncomplete(self):
    """Test that drawn graphs are never complete."""
    rng = random.Random(3)
    for n in range(2, 6):
      self.assertFalse(
          graph.is_complete(generators.noncomplete_graph(n, 1.0, rng)))

  def test_without_isolated(self):
    """Test that every node gets a neighbor."""
    rng = random.Random(3)
    for n in range(2, 9):
      g = generators.graph_without_isolated(n, 0.1, rng)
      self.assertTrue(all(g.degree(node) for node in g.nodes))


class InstanceGeneratorTest(unittest.TestCase):
  """Instance generator tests."""

  def test_random_instance(self):
    """Test that instances respect the occurrence bound."""
    instance = generators.random_instance(4, 6, random.Random(7))
    self.assertEqual(4, instance.variable_count)
    self.assertEqual(6, instance.clause_count)
    self.assertTrue(
        all(count <= sat.OCCURRENCE_BOUND
            for count in sat.literal_occurrences(instance).values()))
    self.assertFalse(any(sat.is_tautology(c) for c in instance.clauses))
    self.assertEqual(instance,
                     generators.random_instance(4, 6, random.Random(7)))

  def test_capacity(self):
    """Test filling every literal to the bound."""
    instance = generators.random_instance(2, 6, random.Random(1))
    self.assertEqual(6, instance.clause_count)
    self.assertEqual({1: 3, -1: 3, 2: 3, -2: 3},
                     dict(sat.literal_occurrences(instance)))

  def test_invalid(self):
    """Test invalid instance parameters."""
    with self.assertRaises(generators.GeneratorError):
      generators.random_instance(2, 7, random.Random(0))
    with self.assertRaises(generators.GeneratorError):
      generators.random_instance(1, 1, random.Random(0))
    with self.assertRaises(generators.GeneratorError):
      generators.random_instance(-1, 0, random.Random(0))
    self.assertEqual(0,
                     generators.random_instance(0, 0,
                                                random.Random(0)).clause_count)

  def test_random_residual_instance(self):
    """Test drawing preprocessed instances."""
    rng = random.Random(2)
    for _ in range(10):
      instance, attempts = generators.random_residual_instance(6, 10, rng)
      self.assertTrue(sat.is_residual(instance))
      self.assertGreater(instance.clause_count, 0)
      self.assertLessEqual(instance.variable_count, 6)
      self.assertLessEqual(instance.clause_count, 10)
      self.assertGreaterEqual(attempts, 1)

    with self.assertRaises(generators.GeneratorError):
      generators.random_residual_instance(1, 10, rng)


if __name__ == '__main__':
  unittest.main()
