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
"""Simple undirected graphs, independence predicates and DIMACS I/O."""

import logging
import typing

import networkx as nx

__all__ = [
    'Graph',
    'GraphError',
    'NodeSet',
    'ParseError',
    'complement_of',
    'cut_size',
    'is_complete',
    'is_independent',
    'is_maximal_independent',
    'max_degree',
    'maximal_independent_sets',
    'node_set',
    'parse_graph',
    'serialize_graph',
]

NodeSet = typing.FrozenSet[int]


class GraphError(ValueError):
  """Invalid graph or node set."""


class ParseError(GraphError):
  """Malformed DIMACS input."""

  def __init__(self, line_number, message):
    self.line_number = line_number
    super().__init__(f'line {line_number}: {message}')


class Graph:
  """Simple undirected graph on nodes 1..node_count.

  Immutable once constructed. Edges are stored as (u, v) pairs with u < v.
  """

  __slots__ = ('_graph', '_edges', '_neighbors')

  def __init__(self, node_count: int, edges: typing.Iterable = ()):
    if not isinstance(node_count, int) or node_count < 0:
      raise GraphError(f'Invalid node count: {node_count!r}')

    normalized = set()
    for u, v in edges:
      if u == v:
        raise GraphError(f'Self-loop on node {u}')
      for endpoint in (u, v):
        if not 1 <= endpoint <= node_count:
          raise GraphError(
              f'Edge endpoint {endpoint} out of range 1..{node_count}')
      normalized.add((min(u, v), max(u, v)))

    graph = nx.Graph()
    graph.add_nodes_from(range(1, node_count + 1))
    graph.add_edges_from(normalized)
    self._graph = nx.freeze(graph)
    self._edges = frozenset(normalized)
    self._neighbors = {
        node: frozenset(graph.adj[node]) for node in range(1, node_count + 1)
    }

  @classmethod
  def from_networkx(cls, graph: nx.Graph) -> 'Graph':
    """Build from a networkx graph, relabelling sorted nodes to 1..n."""
    labels = {node: index for index, node in enumerate(sorted(graph.nodes), 1)}
    return cls(
        len(labels),
        ((labels[u], labels[v]) for u, v in graph.edges if u != v))

  @property
  def node_count(self) -> int:
    return len(self._neighbors)

  @property
  def edge_count(self) -> int:
    return len(self._edges)

  @property
  def edges(self) -> typing.FrozenSet[typing.Tuple[int, int]]:
    return self._edges

  @property
  def nodes(self) -> range:
    return range(1, self.node_count + 1)

  @property
  def nx_graph(self) -> nx.Graph:
    """Frozen networkx view (nodes 1..n)."""
    return self._graph

  def sorted_edges(self) -> typing.List[typing.Tuple[int, int]]:
    """Edges sorted by (min endpoint, max endpoint)."""
    return sorted(self._edges)

  def neighbors(self, node: int) -> typing.FrozenSet[int]:
    return self._neighbors[node]

  def degree(self, node: int) -> int:
    return len(self._neighbors[node])

  def canonical_text(self) -> str:
    return serialize_graph(self)

  def __eq__(self, other):
    if not isinstance(other, Graph):
      return NotImplemented

    return (self.node_count == other.node_count and
            self._edges == other._edges)

  def __hash__(self):
    return hash((self.node_count, self._edges))

  def __repr__(self):
    return f'Graph(node_count={self.node_count}, edges={self.sorted_edges()})'


def node_set(g: Graph, members: typing.Iterable[int]) -> NodeSet:
  """Validated node set of `g`."""
  result = frozenset(members)
  for node in result:
    if not isinstance(node, int) or not 1 <= node <= g.node_count:
      raise GraphError(f'Node {node!r} is not in 1..{g.node_count}')

  return result


def _to_text(data) -> str:
  if hasattr(data, 'read'):
    data = data.read()

  if isinstance(data, (bytes, bytearray)):
    try:
      return data.decode('ascii')
    except UnicodeDecodeError as e:
      raise ParseError(
          data.count(b'\n', 0, e.start) + 1,
          f'non-ASCII byte {data[e.start]:#04x}') from None

  return data


def _parse_ints(line_number, fields, count):
  """Parse `count` integers from `fields`."""
  if len(fields) != count:
    raise ParseError(line_number,
                     f'expected {count} fields, got {len(fields)}')
  try:
    return [int(field) for field in fields]
  except ValueError:
    raise ParseError(line_number, f'non-integer field in {fields}') from None


def parse_graph(text) -> Graph:
  """Parse a graph in DIMACS edge format.

  Accepts str, bytes or a readable file object. Duplicate edges (in either
  orientation) are merged.
  """
  node_count = None
  declared_edges = 0
  edge_lines = 0
  edges = set()

  for line_number, raw_line in enumerate(_to_text(text).splitlines(), 1):
    fields = raw_line.split()
    if not fields or fields[0] == 'c':
      continue

    if fields[0] == 'p':
      if node_count is not None:
        raise ParseError(line_number, 'duplicate problem line')
      if len(fields) != 4 or fields[1] != 'edge':
        raise ParseError(line_number,
                         f'malformed header {raw_line.strip()!r}, expected '
                         '"p edge <n> <m>"')
      node_count, declared_edges = _parse_ints(line_number, fields[2:], 2)
      if node_count < 0 or declared_edges < 0:
        raise ParseError(line_number, 'negative count in header')
      continue

    if fields[0] == 'e':
      if node_count is None:
        raise ParseError(line_number, 'edge before "p edge" header')
      u, v = _parse_ints(line_number, fields[1:], 2)
      for endpoint in (u, v):
        if not 1 <= endpoint <= node_count:
          raise ParseError(
              line_number,
              f'endpoint {endpoint} out of range 1..{node_count}')
      if u == v:
        raise ParseError(line_number, f'self-loop on node {u}')
      edge_lines += 1
      edges.add((min(u, v), max(u, v)))
      continue

    raise ParseError(line_number, f'unknown line type {fields[0]!r}')

  if node_count is None:
    raise ParseError(0, 'missing "p edge <n> <m>" header')

  if edge_lines != declared_edges:
    logging.warning('Header declares %d edges, found %d edge lines',
                    declared_edges, edge_lines)

  return Graph(node_count, edges)


def serialize_graph(g: Graph, comments: typing.Iterable[str] = ()) -> str:
  """Serialize to DIMACS, edges sorted by (min endpoint, max endpoint)."""
  lines = [f'c {comment}'.rstrip() for comment in comments]
  lines.append(f'p edge {g.node_count} {g.edge_count}')
  lines.extend(f'e {u} {v}' for u, v in g.sorted_edges())
  return '\n'.join(lines) + '\n'


def is_independent(g: Graph, s: typing.Iterable[int]) -> bool:
  """Whether no edge of `g` has both endpoints in `s`."""
  s = frozenset(s)
  return all(not g.neighbors(node) & s for node in s)


def is_maximal_independent(g: Graph, s: typing.Iterable[int]) -> bool:
  """Whether `s` is independent and every other node has a neighbor in it."""
  s = frozenset(s)
  if not is_independent(g, s):
    return False

  return all(g.neighbors(node) & s for node in g.nodes if node not in s)


def cut_size(g: Graph, s: typing.Iterable[int]) -> int:
  """Number of edges with exactly one endpoint in `s`."""
  s = frozenset(s)
  return sum(1 for u, v in g.edges if (u in s) != (v in s))


def max_degree(g: Graph) -> int:
  return max((g.degree(node) for node in g.nodes), default=0)


def complement_of(g: Graph, s: typing.Iterable[int]) -> NodeSet:
  """Nodes of `g` not in `s`."""
  return frozenset(g.nodes) - frozenset(s)


def is_complete(g: Graph) -> bool:
  n = g.node_count
  return g.edge_count == n * (n - 1) // 2


def maximal_independent_sets(g: Graph) -> typing.Iterator[NodeSet]:
  """Enumerate every maximal independent set of `g`.

  These are the maximal cliques of the complement graph; networkx enumerates
  them by pivoting backtracking. Order is unspecified.
  """
  if g.node_count == 0:
    yield frozenset()
    return

  for clique in nx.find_cliques(nx.complement(g.nx_graph)):
    yield frozenset(clique)
