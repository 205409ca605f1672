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
"""The networked anti-coordination game.

Every edge is a 2x2 game between its endpoints; a player picks one action for
all her games and earns the sum of the matrix entries. The frustration
function pi_A * n_BB + pi_B * n_AA is the negated potential of the game.
"""

from dataclasses import dataclass
import enum
from fractions import Fraction
import itertools
import logging
import random
import typing

from .graph import Graph, is_maximal_independent

__all__ = [
    'Action',
    'ActionProfile',
    'DynamicsTrace',
    'GameError',
    'GameParams',
    'Schedule',
    'all_profiles',
    'best_response_dynamics',
    'frustration',
    'frustration_counts',
    'is_local_min_frustration',
    'is_nash',
    'is_polar_equilibrium',
    'payoff_gain',
    'player_payoff',
    'polar_params',
    'profile_from_set',
    'random_profile',
]


class GameError(ValueError):
  """Invalid payoffs or profile."""


class Action(str, enum.Enum):
  """Player action."""

  A = 'A'
  B = 'B'

  @property
  def other(self) -> 'Action':
    return Action.B if self is Action.A else Action.A


class Schedule(str, enum.Enum):
  """Activation order for best-response dynamics."""

  ROUND_ROBIN = 'roundrobin'
  RANDOM = 'random'


def _rational(value, name) -> Fraction:
  if isinstance(value, float):
    # Floats are taken at their decimal spelling, not their binary value.
    value = repr(value)
  try:
    return Fraction(value)
  except (TypeError, ValueError, ZeroDivisionError):
    raise GameError(f'{name} is not a rational number: {value!r}') from None


@dataclass(frozen=True)
class GameParams:
  """Payoff matrix of the 2x2 anti-coordination game.

  pi_XY is the payoff of a player choosing X against a neighbor choosing Y.
  """

  pi_AA: Fraction
  pi_AB: Fraction
  pi_BA: Fraction
  pi_BB: Fraction

  def __post_init__(self):
    for name in ('pi_AA', 'pi_AB', 'pi_BA', 'pi_BB'):
      object.__setattr__(self, name, _rational(getattr(self, name), name))

    if not self.pi_BA > self.pi_AA:
      raise GameError(f'Need pi_BA > pi_AA, got {self.pi_BA} <= {self.pi_AA}')
    if not self.pi_AB > self.pi_BB:
      raise GameError(f'Need pi_AB > pi_BB, got {self.pi_AB} <= {self.pi_BB}')

  @classmethod
  def from_relative(cls, pi_A, pi_B) -> 'GameParams':
    """Matrix with pi_AA = pi_BB = 0 realizing the given relative payoffs."""
    pi_A = _rational(pi_A, 'pi_A')
    pi_B = _rational(pi_B, 'pi_B')
    if pi_A <= 0 or pi_B <= 0:
      raise GameError(
          f'Relative payoffs must be positive, got pi_A={pi_A}, pi_B={pi_B}')

    return cls(pi_AA=Fraction(0), pi_AB=pi_A, pi_BA=pi_B, pi_BB=Fraction(0))

  @property
  def pi_A(self) -> Fraction:
    """Gain of the A player at (A, B) over deviating to B."""
    return self.pi_AB - self.pi_BB

  @property
  def pi_B(self) -> Fraction:
    """Gain of the B player at (A, B) over deviating to A."""
    return self.pi_BA - self.pi_AA

  def entry(self, own: Action, other: Action) -> Fraction:
    if own is Action.A:
      return self.pi_AA if other is Action.A else self.pi_AB

    return self.pi_BA if other is Action.A else self.pi_BB


@dataclass(frozen=True)
class ActionProfile:
  """One action per node; actions[0] belongs to node 1."""

  actions: typing.Tuple[Action, ...]

  def __post_init__(self):
    try:
      actions = tuple(Action(a) for a in self.actions)
    except ValueError:
      raise GameError(f'Invalid actions: {self.actions!r}') from None
    object.__setattr__(self, 'actions', actions)

  @classmethod
  def from_string(cls, text: str) -> 'ActionProfile':
    """Parse a string over {A, B}, node 1 first."""
    if any(c not in 'AB' for c in text):
      raise GameError(f'Profile must be a string over A/B, got {text!r}')

    return cls(tuple(Action(c) for c in text))

  @classmethod
  def uniform(cls, node_count: int, action: Action) -> 'ActionProfile':
    return cls((Action(action),) * node_count)

  @property
  def node_count(self) -> int:
    return len(self.actions)

  @property
  def b_set(self) -> typing.FrozenSet[int]:
    return frozenset(
        node for node, a in enumerate(self.actions, 1) if a is Action.B)

  def __getitem__(self, node: int) -> Action:
    if not 1 <= node <= len(self.actions):
      raise KeyError(node)

    return self.actions[node - 1]

  def flip(self, node: int) -> 'ActionProfile':
    actions = list(self.actions)
    actions[node - 1] = actions[node - 1].other
    return ActionProfile(tuple(actions))

  def __str__(self):
    return ''.join(a.value for a in self.actions)


@dataclass(frozen=True)
class DynamicsTrace:
  """Outcome of a best-response run.

  frustration_sequence holds the frustration after each accepted move.
  """

  step_count: int
  frustration_sequence: typing.Tuple[Fraction, ...]
  final_profile: ActionProfile
  initial_frustration: Fraction
  moves: typing.Tuple[int, ...] = ()


def _check_profile(g: Graph, s: ActionProfile):
  if s.node_count != g.node_count:
    raise GameError(f'Profile has {s.node_count} actions, graph has '
                    f'{g.node_count} nodes')


def profile_from_set(g: Graph, b_nodes: typing.Iterable[int]) -> ActionProfile:
  """Profile whose B players are exactly `b_nodes`."""
  b_nodes = frozenset(b_nodes)
  return ActionProfile(
      tuple(Action.B if node in b_nodes else Action.A for node in g.nodes))


def random_profile(g: Graph, rng: random.Random) -> ActionProfile:
  return ActionProfile(
      tuple(rng.choice((Action.A, Action.B)) for _ in g.nodes))


def all_profiles(g: Graph) -> typing.Iterator[ActionProfile]:
  """All 2^n profiles, all-A first."""
  for actions in itertools.product((Action.A, Action.B), repeat=g.node_count):
    yield ActionProfile(actions)


def _payoff(g, actions, node, own, p):
  """Payoff of `node` playing `own` against the neighbors' actions."""
  return sum((p.entry(own, actions[j - 1]) for j in g.neighbors(node)),
             Fraction(0))


def player_payoff(g: Graph, s: ActionProfile, i: int,
                  p: GameParams) -> Fraction:
  """Sum of player i's payoffs over her partial games."""
  _check_profile(g, s)
  return _payoff(g, s.actions, i, s[i], p)


def payoff_gain(g: Graph, s: ActionProfile, i: int, p: GameParams) -> Fraction:
  """Change in player i's payoff if she flips her action."""
  _check_profile(g, s)
  return (_payoff(g, s.actions, i, s[i].other, p) -
          _payoff(g, s.actions, i, s[i], p))


def frustration_counts(g: Graph,
                       s: ActionProfile) -> typing.Tuple[int, int]:
  """(n_AA, n_BB): edges between two A players and between two B players."""
  _check_profile(g, s)
  n_aa = n_bb = 0
  for u, v in g.edges:
    if s[u] is s[v]:
      if s[u] is Action.A:
        n_aa += 1
      else:
        n_bb += 1

  return n_aa, n_bb


def frustration(g: Graph, s: ActionProfile, p: GameParams) -> Fraction:
  """pi_A * n_BB + pi_B * n_AA."""
  n_aa, n_bb = frustration_counts(g, s)
  return p.pi_A * n_bb + p.pi_B * n_aa


def is_nash(g: Graph, s: ActionProfile, p: GameParams) -> bool:
  """Whether no player strictly gains by flipping her action."""
  _check_profile(g, s)
  return all(
      _payoff(g, s.actions, i, s[i].other, p) <= _payoff(
          g, s.actions, i, s[i], p) for i in g.nodes)


def _incident_frustration(g, actions, node, own, p):
  """Frustration of the edges at `node` when it plays `own`."""
  same = sum(1 for j in g.neighbors(node) if actions[j - 1] is own)
  return same * (p.pi_A if own is Action.B else p.pi_B)


def is_local_min_frustration(g: Graph, s: ActionProfile,
                             p: GameParams) -> bool:
  """Whether no single flip strictly decreases frustration.

  A flip only changes the edges at the flipped node, so only those are
  compared.
  """
  _check_profile(g, s)
  return all(
      _incident_frustration(g, s.actions, i, s[i].other, p) >=
      _incident_frustration(g, s.actions, i, s[i], p) for i in g.nodes)


def _improving(g, actions, node, p):
  own = actions[node - 1]
  return _payoff(g, actions, node, own.other, p) > _payoff(
      g, actions, node, own, p)


def best_response_dynamics(g: Graph,
                           s0: ActionProfile,
                           p: GameParams,
                           schedule: Schedule = Schedule.ROUND_ROBIN,
                           seed: int = 0) -> DynamicsTrace:
  """Asynchronous best-response dynamics until a Nash profile is reached.

  With two actions a best response is a flip, taken only when it strictly
  improves the mover's payoff. `roundrobin` sweeps nodes 1..n cyclically;
  `random` picks uniformly among the currently improvable players using
  random.Random(seed). Each move strictly lowers frustration, so the run
  terminates.
  """
  _check_profile(g, s0)
  schedule = Schedule(schedule)
  rng = random.Random(seed)
  actions = list(s0.actions)
  initial = frustration(g, s0, p)
  sequence = []
  moves = []

  def apply(node):
    actions[node - 1] = actions[node - 1].other
    moves.append(node)
    sequence.append(frustration(g, ActionProfile(tuple(actions)), p))

  if schedule is Schedule.ROUND_ROBIN:
    improved = True
    while improved:
      improved = False
      for node in g.nodes:
        if _improving(g, actions, node, p):
          apply(node)
          improved = True
  else:
    while True:
      candidates = [
          node for node in g.nodes if _improving(g, actions, node, p)
      ]
      if not candidates:
        break
      apply(rng.choice(candidates))

  logging.debug('Dynamics (%s, seed %d) stopped after %d moves',
                schedule.value, seed, len(moves))
  return DynamicsTrace(
      step_count=len(moves),
      frustration_sequence=tuple(sequence),
      final_profile=ActionProfile(tuple(actions)),
      initial_frustration=initial,
      moves=tuple(moves))


def is_polar_equilibrium(g: Graph, s: ActionProfile) -> bool:
  """Whether the B players form a maximal independent set."""
  _check_profile(g, s)
  return is_maximal_independent(g, s.b_set)


def polar_params(g: Graph, pi_B=1) -> GameParams:
  """Payoffs with pi_A = (m + 1) * pi_B.

  Then pi_A > m * pi_B: one B-B edge outweighs every A-A edge, and Nash
  profiles are those whose B players form a maximal independent set.
  """
  pi_B = _rational(pi_B, 'pi_B')
  if pi_B <= 0:
    raise GameError(f'pi_B must be positive, got {pi_B}')

  return GameParams.from_relative((g.edge_count + 1) * pi_B, pi_B)
