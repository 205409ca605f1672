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
"""Hardness reductions to the maximum independent cut problem.

Two constructions are provided:

* reduce_mis_to_micut: maximum independent set on G (n nodes) to maximum
  independent cut on G', which adds an n^2 clique joined to every original
  node. Optimal cuts of G' are maximum independent sets of G.
* reduce_2sat_to_micut: 3-OCC-MAX-2SAT to maximum independent cut with
  degree at most 4. Chief nodes X_i = 2i - 1 and ~X_i = 2i are joined by an
  edge; each clause j adds a gadget of three accessory nodes forming a
  triangle, with Y_j1 pendant to the first literal's chief and Y_j2 to the
  second's. Then OPT(f(I)) = n + 3m + OPT(I) and every maximal independent
  set C satisfies v(C) <= n + 3m + u(g(C)), an L-reduction with alpha = 21
  and beta = 1.

check_certificate verifies these identities on a concrete instance against
exhaustive oracles.
"""

from dataclasses import dataclass, field
import hashlib
import logging
import random
import typing

from . import cache
from . import config
from . import sat
from . import solvers
from .graph import (Graph, NodeSet, is_complete, is_independent,
                    is_maximal_independent, max_degree,
                    maximal_independent_sets)

__all__ = [
    'CertificateViolationError',
    'Gadget',
    'GadgetCaseTable',
    'MisRecoveryReport',
    'ReductionCertificate',
    'ReductionError',
    'SatReduction',
    'brute_force_mis',
    'check_certificate',
    'check_mis_recovery',
    'chief_node',
    'classify_gadget',
    'gadget_case_table',
    'instance_id',
    'mis_cut_value',
    'recover_assignment',
    'recover_mis',
    'reduce_2sat_to_micut',
    'reduce_mis_to_micut',
    'reduction_comments',
]

# Gadget cases by which chief nodes are in the cut side.
CASE_BOTH = 'i'
CASE_FIRST = 'ii'
CASE_SECOND = 'iii'
CASE_NONE = 'iv'

_oracle_cache = cache.InMemoryCache()


class ReductionError(ValueError):
  """Input violates a reduction's precondition."""


class CertificateViolationError(Exception):
  """A recovered solution contradicts the reduction's guarantees."""


@dataclass(frozen=True)
class Gadget:
  """Accessory triangle attached to the two chief nodes of a clause."""

  clause_index: int
  chief_1: int
  chief_2: int
  accessory_1: int
  accessory_2: int
  accessory_3: int

  def edges(self) -> typing.Tuple[typing.Tuple[int, int], ...]:
    y1, y2, y3 = self.accessory_1, self.accessory_2, self.accessory_3
    return ((y1, y2), (y2, y3), (y1, y3), (self.chief_1, y1),
            (self.chief_2, y2))


class SatReduction(typing.NamedTuple):
  """Graph built from a MAX-2SAT instance, with its node map."""

  graph: Graph
  gadgets: typing.Tuple[Gadget, ...]
  chief_nodes: typing.Dict[int, int]


@dataclass(frozen=True)
class GadgetCaseTable:
  """Every maximal independent set of the single-clause graph, classified."""

  rows: typing.Tuple[typing.Tuple[typing.Tuple[int, ...], str, int, bool], ...]
  contributions: typing.Dict[str, typing.List[int]]
  holds: bool


@dataclass(frozen=True)
class MisRecoveryReport:
  """Outcome of recovering a maximum independent set from an optimal cut."""

  node_count: int
  mis_size: int
  recovered: NodeSet
  cut_value: int
  expected_cut_value: int

  @property
  def holds(self) -> bool:
    return (len(self.recovered) == self.mis_size and
            self.cut_value == self.expected_cut_value)


@dataclass
class ReductionCertificate:
  """Checked identities for one 3-OCC-MAX-2SAT instance.

  Every boolean is the outcome of an explicit check.
  """

  instance_id: str
  variable_count: int
  clause_count: int
  residual: bool
  node_count: int
  edge_count: int
  max_degree: int
  opt_instance: int
  opt_constructed: int
  mapped_value: int
  constructed_value: int
  mode: str
  sets_checked: int
  trials: int
  seed: int
  counts_hold: bool = False
  size_bounds_hold: bool = False
  degree_bound_holds: bool = False
  eq1_holds: bool = False
  eq2_holds: bool = False
  beta_holds: bool = False
  alpha21_holds: bool = False
  alpha32_holds: bool = False
  chief_selection_holds: bool = False
  gadget_cases_hold: bool = False
  recovered_optimal: bool = False
  optimal_set: typing.Tuple[int, ...] = ()
  counterexamples: typing.List[dict] = field(default_factory=list)

  @property
  def ok(self) -> bool:
    """All checks passed. The alpha bounds only apply to residual inputs."""
    flags = [
        self.counts_hold, self.size_bounds_hold, self.degree_bound_holds,
        self.eq1_holds, self.eq2_holds, self.beta_holds,
        self.chief_selection_holds, self.gadget_cases_hold,
        self.recovered_optimal
    ]
    if self.residual:
      flags.append(self.alpha21_holds)
    return all(flags)


def instance_id(i: sat.Max2SatInstance) -> str:
  """Content hash of the canonical m2sat text."""
  return hashlib.sha256(i.canonical_text().encode()).hexdigest()


@cache.cached(_oracle_cache)
def _sat_optimum(i: sat.Max2SatInstance) -> typing.Tuple[sat.Assignment, int]:
  return sat.brute_force_opt(i)


@cache.cached(_oracle_cache)
def _micut_optimum(g: Graph) -> solvers.IndependentCutSolution:
  return solvers.exact_micut(g, limit=config.certificate_limit)


def _independent_cut(g: Graph, members: NodeSet) -> int:
  # Every edge at an independent set's node crosses the cut.
  return sum(g.degree(node) for node in members)


def _lexicographic_best(g, sets, key_size):
  best = None
  best_key = None
  for members in sets:
    size = key_size(g, members)
    if best is None or size > best_key or (size == best_key and
                                           sorted(members) < sorted(best)):
      best, best_key = members, size
  return best


def reduce_mis_to_micut(g: Graph) -> Graph:
  """Add n^2 nodes forming a clique, each joined to every original node."""
  n = g.node_count
  if n < 2 or is_complete(g):
    raise ReductionError(
        'The independent set reduction needs a graph that is not complete '
        '(so its maximum independent set has at least 2 nodes)')

  total = n * n + n
  edges = set(g.edges)
  for u in range(n + 1, total + 1):
    for v in range(u + 1, total + 1):
      edges.add((u, v))
    for v in g.nodes:
      edges.add((v, u))

  return Graph(total, edges)


def brute_force_mis(g: Graph, limit: typing.Optional[int] = None) -> NodeSet:
  """Maximum independent set; lexicographically smallest among ties."""
  limit = config.mis_limit if limit is None else limit
  config.check_limit(g.node_count, limit, 'Graph')
  # Maximum independent sets are maximal, so the enumeration covers them.
  return _lexicographic_best(g, maximal_independent_sets(g),
                             lambda _, members: len(members))


def mis_cut_value(g: Graph, s: typing.Iterable[int]) -> int:
  """Cut value in reduce_mis_to_micut(g) of an independent set s of g."""
  n = g.node_count
  return sum(n * n + g.degree(node) for node in s)


def recover_mis(g: Graph,
                c: solvers.IndependentCutSolution,
                verify: bool = True) -> NodeSet:
  """Read a maximum independent set of g off an optimal cut of G'.

  An optimal cut never uses an added node: such a node is adjacent to all
  others, so it would be the whole cut side, worth n^2 + n - 1, while any two
  independent original nodes are worth at least 2n^2.
  """
  n = g.node_count
  added = sorted(node for node in c.members if node > n)
  if added:
    raise CertificateViolationError(
        f'Cut side contains added nodes {added}; the solution is not optimal')

  if not is_independent(g, c.members):
    raise CertificateViolationError(
        f'{sorted(c.members)} is not independent in the source graph')

  if verify and n <= config.mis_limit:
    expected = len(brute_force_mis(g))
    if len(c.members) != expected:
      raise CertificateViolationError(
          f'Recovered set has {len(c.members)} nodes, the maximum independent '
          f'set has {expected}')

  return frozenset(c.members)


def check_mis_recovery(g: Graph) -> MisRecoveryReport:
  """Solve G' exactly and compare the recovered set with the MIS oracle."""
  constructed = reduce_mis_to_micut(g)
  solution = _micut_optimum(constructed)
  recovered = recover_mis(g, solution, verify=False)
  return MisRecoveryReport(
      node_count=g.node_count,
      mis_size=len(brute_force_mis(g)),
      recovered=recovered,
      cut_value=solution.value,
      expected_cut_value=mis_cut_value(g, recovered))


def chief_node(literal: int) -> int:
  """Chief node of a literal: X_k = 2k - 1, ~X_k = 2k."""
  k = abs(literal)
  return 2 * k - 1 if literal > 0 else 2 * k


def reduce_2sat_to_micut(i: sat.Max2SatInstance,
                         require_residual: bool = False) -> SatReduction:
  """Build the degree-4 graph with 2n + 3m nodes and n + 5m edges.

  Accessory nodes of clause j (0-based) are 2n + 3j + 1..2n + 3j + 3.
  """
  for index, clause in enumerate(i.clauses, 1):
    if sat.is_tautology(clause):
      raise ReductionError(
          f'Clause {index} is tautological; run preprocess first')

  if require_residual and not sat.is_residual(i):
    raise ReductionError('Every variable must occur in both polarities; run '
                         'preprocess first')

  n = i.variable_count
  edges = {(2 * k - 1, 2 * k) for k in range(1, n + 1)}
  gadgets = []
  for j, (first, second) in enumerate(i.clauses):
    base = 2 * n + 3 * j
    gadget = Gadget(
        clause_index=j + 1,
        chief_1=chief_node(first),
        chief_2=chief_node(second),
        accessory_1=base + 1,
        accessory_2=base + 2,
        accessory_3=base + 3)
    edges.update(gadget.edges())
    gadgets.append(gadget)

  chief_nodes = {}
  for k in range(1, n + 1):
    chief_nodes[k] = chief_node(k)
    chief_nodes[-k] = chief_node(-k)

  return SatReduction(
      Graph(2 * n + 3 * i.clause_count, edges), tuple(gadgets), chief_nodes)


def reduction_comments(i: sat.Max2SatInstance,
                       reduction: SatReduction) -> typing.List[str]:
  """DIMACS comment block recording the chief and accessory node map."""
  comments = [
      f'reduction 3-OCC-MAX-2SAT n={i.variable_count} m={i.clause_count}',
  ]
  for k in range(1, i.variable_count + 1):
    comments.append(f'chief x{k} {reduction.chief_nodes[k]} '
                    f'~x{k} {reduction.chief_nodes[-k]}')
  for gadget, clause in zip(reduction.gadgets, i.clauses):
    literals = ' '.join(sat.format_literal(literal) for literal in clause)
    comments.append(
        f'gadget {gadget.clause_index} ({literals}) chiefs {gadget.chief_1} '
        f'{gadget.chief_2} accessory {gadget.accessory_1} '
        f'{gadget.accessory_2} {gadget.accessory_3}')
  return comments


def _assignment_from_set(variable_count, members):
  return sat.Assignment(
      tuple(chief_node(k) in members for k in range(1, variable_count + 1)))


def recover_assignment(i: sat.Max2SatInstance,
                       c: typing.Iterable[int],
                       graph: typing.Optional[Graph] = None) -> sat.Assignment:
  """x_k is true iff X_k is in C."""
  members = frozenset(c)
  if graph is None:
    graph = reduce_2sat_to_micut(i).graph
  if not is_maximal_independent(graph, members):
    raise ReductionError(f'{sorted(members)} is not a maximal independent set '
                         'of the constructed graph')

  return _assignment_from_set(i.variable_count, members)


def classify_gadget(gadget: Gadget,
                    members: NodeSet) -> typing.Tuple[str, int]:
  """Case label and number of the gadget's 5 edges cut by `members`."""
  first = gadget.chief_1 in members
  second = gadget.chief_2 in members
  if first and second:
    case = CASE_BOTH
  elif first:
    case = CASE_FIRST
  elif second:
    case = CASE_SECOND
  else:
    case = CASE_NONE

  contribution = sum(
      1 for u, v in gadget.edges() if (u in members) != (v in members))
  return case, contribution


def _gadget_case_ok(gadget, members, case, contribution):
  """Whether a classified gadget matches the case analysis."""
  y3 = gadget.accessory_3 in members
  if case == CASE_BOTH:
    return contribution == 4 and y3
  if case in (CASE_FIRST, CASE_SECOND):
    return contribution in (3, 4)
  return contribution == (2 if y3 else 3)


def gadget_case_table() -> GadgetCaseTable:
  """Classify every maximal independent set of the (x1 v x2) graph."""
  instance = sat.Max2SatInstance(2, ((1, 2),))
  reduction = reduce_2sat_to_micut(instance)
  gadget = reduction.gadgets[0]
  rows = []
  holds = True
  for members in maximal_independent_sets(reduction.graph):
    case, contribution = classify_gadget(gadget, members)
    holds = holds and _gadget_case_ok(gadget, members, case, contribution)
    rows.append((tuple(sorted(members)), case, contribution,
                 gadget.accessory_3 in members))

  rows.sort()
  contributions = {}
  for _, case, contribution, _ in rows:
    contributions.setdefault(case, set()).add(contribution)

  return GadgetCaseTable(
      rows=tuple(rows),
      contributions={
          case: sorted(values) for case, values in sorted(contributions.items())
      },
      holds=holds)


def _sampled_sets(g, trials, seed):
  """Maximal independent sets from seeded local search runs."""
  if g.node_count == 0:
    return
  rng = random.Random(seed)
  for _ in range(trials):
    yield solvers.local_search_micut(
        g, seed=rng.randrange(2**32), restarts=1).members


def check_certificate(i: sat.Max2SatInstance,
                      trials: int = 10,
                      seed: int = 0) -> ReductionCertificate:
  """Construct f(I) and check the reduction's identities on it.

  The bound v(C) <= n + 3m + u(g(C)) and beta = 1 are checked on every
  maximal independent set of f(I) when it has at most
  config.enumeration_limit nodes (mode "exhaustive"), and on `trials` sets
  from seeded local search otherwise ("sampled").
  """
  reduction = reduce_2sat_to_micut(i)
  g = reduction.graph
  n, m = i.variable_count, i.clause_count
  offset = n + 3 * m
  _, opt_instance = _sat_optimum(i)

  exhaustive = g.node_count <= config.enumeration_limit
  mode = 'exhaustive' if exhaustive else 'sampled'
  logging.info('Checking certificate for n=%d m=%d (%d nodes, %s)', n, m,
               g.node_count, mode)

  counterexamples = []
  sets_checked = 0
  eq1_holds = True
  gadget_cases_hold = True
  max_gap = None
  best = None
  best_value = -1
  best_sets = []

  def check(members, track_best):
    nonlocal sets_checked, eq1_holds, gadget_cases_hold, max_gap
    nonlocal best, best_value, best_sets
    sets_checked += 1
    v = _independent_cut(g, members)
    assignment = _assignment_from_set(n, members)
    u = sat.evaluate(i, assignment)
    gap = v - u
    max_gap = gap if max_gap is None else max(max_gap, gap)
    if v > offset + u:
      eq1_holds = False
      counterexamples.append({
          'check': 'eq1',
          'set': sorted(members),
          'assignment': assignment.to_bits(),
          'v': v,
          'u': u,
      })

    for gadget in reduction.gadgets:
      case, contribution = classify_gadget(gadget, members)
      if not _gadget_case_ok(gadget, members, case, contribution):
        gadget_cases_hold = False
        counterexamples.append({
            'check': 'gadget',
            'set': sorted(members),
            'clause': gadget.clause_index,
            'case': case,
            'contribution': contribution,
        })

    if not track_best:
      return
    if v > best_value:
      best, best_value, best_sets = members, v, [members]
    elif v == best_value:
      best_sets.append(members)
      if sorted(members) < sorted(best):
        best = members

  if exhaustive:
    for members in maximal_independent_sets(g):
      check(members, track_best=True)
    opt_constructed = best_value
  else:
    solution = _micut_optimum(g)
    best, best_value, best_sets = solution.members, solution.value, [
        solution.members
    ]
    opt_constructed = solution.value

  for members in _sampled_sets(g, trials, seed):
    check(members, track_best=False)

  chief_selection_holds = all(
      (chief_node(k) in members) != (chief_node(-k) in members)
      for members in best_sets
      for k in range(1, n + 1))
  if not chief_selection_holds:
    counterexamples.append({
        'check': 'chief_selection',
        'sets': [sorted(members) for members in best_sets],
    })

  mapped_value = sat.evaluate(i, _assignment_from_set(n, best))
  eq2_holds = opt_constructed == offset + opt_instance
  if not eq2_holds:
    counterexamples.append({
        'check': 'eq2',
        'set': sorted(best),
        'opt_constructed': opt_constructed,
        'opt_instance': opt_instance,
    })

  # OPT(I) - u <= OPT(f(I)) - v for every C, i.e. max(v - u) is bounded.
  beta_holds = max_gap is None or max_gap <= opt_constructed - opt_instance

  max_deg = max_degree(g)
  certificate = ReductionCertificate(
      instance_id=instance_id(i),
      variable_count=n,
      clause_count=m,
      residual=sat.is_residual(i),
      node_count=g.node_count,
      edge_count=g.edge_count,
      max_degree=max_deg,
      opt_instance=opt_instance,
      opt_constructed=opt_constructed,
      mapped_value=mapped_value,
      constructed_value=best_value,
      mode=mode,
      sets_checked=sets_checked,
      trials=trials,
      seed=seed,
      counts_hold=(g.node_count == 2 * n + 3 * m and
                   g.edge_count == n + 5 * m),
      size_bounds_hold=(g.node_count <= 11 * n and g.edge_count <= 16 * n),
      degree_bound_holds=max_deg <= 4,
      eq1_holds=eq1_holds,
      eq2_holds=eq2_holds,
      beta_holds=beta_holds,
      alpha21_holds=opt_constructed <= 21 * opt_instance,
      alpha32_holds=opt_constructed <= 32 * opt_instance,
      chief_selection_holds=chief_selection_holds,
      gadget_cases_hold=gadget_cases_hold,
      recovered_optimal=mapped_value == opt_instance,
      optimal_set=tuple(sorted(best)),
      counterexamples=counterexamples)

  if not certificate.ok:
    logging.error('Certificate check failed for instance %s',
                  certificate.instance_id)
  return certificate
