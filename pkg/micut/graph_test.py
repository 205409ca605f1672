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
"""Graph tests."""

import io
import unittest

import networkx as nx

from . import graph
from . import tests
from .graph import Graph


class GraphTest(unittest.TestCase):
  """Graph construction tests."""

  def test_construct(self):
    """Test edge normalization."""
    g = Graph(3, [(2, 1), (1, 2), (3, 2)])
    self.assertEqual(3, g.node_count)
    self.assertEqual(2, g.edge_count)
    self.assertEqual([(1, 2), (2, 3)], g.sorted_edges())
    self.assertEqual(frozenset([1, 3]), g.neighbors(2))
    self.assertEqual(2, g.degree(2))
    self.assertEqual(tests.path_graph(3), g)
    self.assertEqual(hash(tests.path_graph(3)), hash(g))

  def test_invalid(self):
    """Test invalid graphs."""
    with self.assertRaises(graph.GraphError):
      Graph(-1)
    with self.assertRaises(graph.GraphError):
      Graph(2, [(1, 1)])
    with self.assertRaises(graph.GraphError):
      Graph(2, [(1, 3)])

  def test_empty(self):
    """Test the graph without nodes."""
    g = Graph(0)
    self.assertEqual(0, g.edge_count)
    self.assertEqual(0, graph.max_degree(g))
    self.assertEqual([frozenset()], list(graph.maximal_independent_sets(g)))

  def test_from_networkx(self):
    """Test relabelling networkx graphs."""
    self.assertEqual(tests.path_graph(4), Graph.from_networkx(nx.path_graph(4)))
    self.assertEqual(
        tests.star_graph(3),
        Graph.from_networkx(nx.Graph([('a', 'b'), ('a', 'c')])))

  def test_node_set(self):
    """Test node set validation."""
    g = tests.path_graph(3)
    self.assertEqual(frozenset([1, 3]), graph.node_set(g, [1, 3, 1]))
    with self.assertRaises(graph.GraphError):
      graph.node_set(g, [4])
    with self.assertRaises(graph.GraphError):
      graph.node_set(g, [0])


class ParseTest(unittest.TestCase):
  """DIMACS parsing tests."""

  def test_parse(self):
    """Test parsing a small graph."""
    text = 'c a path\np edge 3 2\ne 1 2\n\ne 3 2\n'
    self.assertEqual(tests.path_graph(3), graph.parse_graph(text))
    self.assertEqual(tests.path_graph(3), graph.parse_graph(text.encode()))
    self.assertEqual(tests.path_graph(3),
                     graph.parse_graph(io.BytesIO(text.encode())))

  def test_parse_empty_graph(self):
    """Test parsing a graph without nodes."""
    self.assertEqual(Graph(0), graph.parse_graph('p edge 0 0\n'))

  def test_duplicate_edges(self):
    """Test that duplicate edges merge."""
    g = graph.parse_graph('p edge 2 2\ne 1 2\ne 2 1\n')
    self.assertEqual(1, g.edge_count)

  def test_edge_count_mismatch(self):
    """Test that a wrong edge count only warns."""
    with self.assertLogs(level='WARNING') as logs:
      g = graph.parse_graph('p edge 3 5\ne 1 2\n')

    self.assertEqual(1, g.edge_count)
    self.assertIn('declares 5 edges', logs.output[0])

  def test_errors(self):
    """Test parse errors and their line numbers."""
    cases = [
        ('p edge 3 1\ne 1 4\n', 2, 'out of range'),
        ('p edge 3 1\ne 2 2\n', 2, 'self-loop'),
        ('e 1 2\n', 1, 'before'),
        ('c nothing\n', 0, 'missing'),
        ('p edge 3 1\np edge 3 1\n', 2, 'duplicate'),
        ('p edge 3 x\n', 1, 'non-integer'),
        ('p col 3 1\n', 1, 'malformed header'),
        ('p edge 3 1\nx 1 2\n', 2, 'unknown line type'),
        ('p edge 3 1\ne 1\n', 2, 'expected 2 fields'),
        (b'p edge 2 1\ne 1 \xff2\n', 2, 'non-ASCII byte 0xff'),
        (io.BytesIO(b'c \x80\n'), 1, 'non-ASCII byte 0x80'),
    ]
    for text, line_number, message in cases:
      with self.subTest(text=text):
        with self.assertRaises(graph.ParseError) as e:
          graph.parse_graph(text)
        self.assertEqual(line_number, e.exception.line_number)
        self.assertIn(message, str(e.exception))
        self.assertTrue(str(e.exception).startswith(f'line {line_number}:'))

  def test_serialize(self):
    """Test DIMACS output."""
    self.assertEqual('c a path\np edge 3 2\ne 1 2\ne 2 3\n',
                     graph.serialize_graph(tests.path_graph(3), ['a path']))
    g = tests.cycle_graph(5)
    self.assertEqual(g, graph.parse_graph(graph.serialize_graph(g)))


class IndependenceTest(unittest.TestCase):
  """Independence and cut tests."""

  def test_independent(self):
    """Test independence predicates."""
    g = tests.path_graph(3)
    self.assertTrue(graph.is_independent(g, [1, 3]))
    self.assertFalse(graph.is_independent(g, [1, 2]))
    self.assertTrue(graph.is_independent(g, []))

    self.assertTrue(graph.is_maximal_independent(g, [1, 3]))
    self.assertTrue(graph.is_maximal_independent(g, [2]))
    self.assertFalse(graph.is_maximal_independent(g, [1]))
    self.assertFalse(graph.is_maximal_independent(g, [1, 2]))

  def test_cut_size(self):
    """Test cut counting."""
    g = tests.cycle_graph(5)
    self.assertEqual(0, graph.cut_size(g, []))
    self.assertEqual(4, graph.cut_size(g, [1, 3]))
    self.assertEqual(graph.cut_size(g, [1, 3]),
                     graph.cut_size(g, graph.complement_of(g, [1, 3])))
    self.assertEqual(4, graph.cut_size(tests.star_graph(5), [1]))

  def test_maximal_independent_sets(self):
    """Test maximal independent set enumeration."""
    self.assertCountEqual(
        [frozenset([1, 3]), frozenset([2])],
        graph.maximal_independent_sets(tests.path_graph(3)))
    self.assertCountEqual(
        [frozenset([1]), frozenset([2]), frozenset([3])],
        graph.maximal_independent_sets(tests.triangle()))
    # C5 has five maximal independent sets, all of size 2.
    sets = list(graph.maximal_independent_sets(tests.cycle_graph(5)))
    self.assertEqual(5, len(sets))
    self.assertTrue(all(len(s) == 2 for s in sets))

    for g in tests.random_graphs(10, 8, seed=3):
      for s in graph.maximal_independent_sets(g):
        self.assertTrue(graph.is_maximal_independent(g, s))

  def test_is_complete(self):
    """Test completeness."""
    self.assertTrue(graph.is_complete(tests.triangle()))
    self.assertTrue(graph.is_complete(Graph(1)))
    self.assertFalse(graph.is_complete(tests.path_graph(3)))
    self.assertEqual(4, graph.max_degree(tests.star_graph(5)))


if __name__ == '__main__':
  unittest.main()
