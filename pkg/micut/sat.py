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
"""3-OCC-MAX-2SAT instances.

A literal is a nonzero integer: k stands for x_k and -k for its negation, as
in the m2sat file format. A clause is a pair of literals.
"""

import collections
from dataclasses import dataclass, field
import logging
import typing

import numpy as np

from . import config

__all__ = [
    'Assignment',
    'InstanceError',
    'InstanceParseError',
    'Max2SatInstance',
    'OCCURRENCE_BOUND',
    'PreconditionError',
    'PreprocessReport',
    'brute_force_opt',
    'evaluate',
    'format_literal',
    'is_residual',
    'is_tautology',
    'literal_occurrences',
    'majority_heuristic',
    'parse_instance',
    'preprocess',
    'serialize_instance',
]

# Each literal occurs in at most this many clauses.
OCCURRENCE_BOUND = 3

Clause = typing.Tuple[int, int]


class InstanceError(ValueError):
  """Invalid MAX-2SAT instance."""


class InstanceParseError(InstanceError):
  """Malformed m2sat input."""

  def __init__(self, line_number, message):
    self.line_number = line_number
    super().__init__(f'line {line_number}: {message}')


class PreconditionError(InstanceError):
  """Instance is not preprocessed."""


def format_literal(literal: int) -> str:
  """Human readable literal, e.g. x3 or ~x3."""
  if literal > 0:
    return f'x{literal}'

  return f'~x{-literal}'


def is_tautology(clause: Clause) -> bool:
  """Whether the clause pairs a literal with its own negation."""
  return clause[0] == -clause[1]


@dataclass(frozen=True)
class Max2SatInstance:
  """Variables 1..variable_count and an ordered list of 2-literal clauses."""

  variable_count: int
  clauses: typing.Tuple[Clause, ...] = ()

  def __post_init__(self):
    if not isinstance(self.variable_count,
                      int) or self.variable_count < 0:
      raise InstanceError(f'Invalid variable count: {self.variable_count!r}')

    clauses = tuple(tuple(clause) for clause in self.clauses)
    object.__setattr__(self, 'clauses', clauses)
    for index, clause in enumerate(clauses, 1):
      if len(clause) != 2:
        raise InstanceError(
            f'Clause {index} has {len(clause)} literals, expected 2')
      for literal in clause:
        if not isinstance(literal, int) or literal == 0 or abs(
            literal) > self.variable_count:
          raise InstanceError(f'Clause {index}: literal {literal!r} out of '
                              f'range for {self.variable_count} variables')

    for literal, count in literal_occurrences(self).items():
      if count > OCCURRENCE_BOUND:
        raise InstanceError(f'Literal {format_literal(literal)} occurs '
                            f'{count} > {OCCURRENCE_BOUND} times')

  @property
  def clause_count(self) -> int:
    return len(self.clauses)

  def canonical_text(self) -> str:
    return serialize_instance(self)


@dataclass(frozen=True)
class Assignment:
  """Truth values for variables 1..n (values[0] is x_1)."""

  values: typing.Tuple[bool, ...] = ()

  def __post_init__(self):
    object.__setattr__(self, 'values', tuple(bool(v) for v in self.values))

  @classmethod
  def from_mapping(cls, mapping: typing.Mapping[int, bool],
                   variable_count: int) -> 'Assignment':
    """Build from {variable: value}; must be total over 1..variable_count."""
    missing = [v for v in range(1, variable_count + 1) if v not in mapping]
    if missing:
      raise InstanceError(f'Assignment is missing variables {missing}')

    return cls(tuple(mapping[v] for v in range(1, variable_count + 1)))

  @classmethod
  def from_bits(cls, bits: str) -> 'Assignment':
    """Build from a string of 0/1, variable 1 first."""
    if any(bit not in '01' for bit in bits):
      raise InstanceError(f'Invalid assignment bits: {bits!r}')

    return cls(tuple(bit == '1' for bit in bits))

  @property
  def variable_count(self) -> int:
    return len(self.values)

  def __getitem__(self, variable: int) -> bool:
    if not 1 <= variable <= len(self.values):
      raise KeyError(variable)

    return self.values[variable - 1]

  def literal_value(self, literal: int) -> bool:
    value = self[abs(literal)]
    return value if literal > 0 else not value

  def to_bits(self) -> str:
    return ''.join('1' if v else '0' for v in self.values)

  def as_dict(self) -> typing.Dict[int, bool]:
    return {index: value for index, value in enumerate(self.values, 1)}


@dataclass(frozen=True)
class PreprocessReport:
  """Outcome of removing tautologies and forcing single-polarity variables.

  Residual variables are renumbered 1..n'; variable_map[i - 1] is the
  original index of residual variable i.
  """

  removed_tautologies: int
  forced_variables: typing.Dict[int, bool]
  residual: Max2SatInstance
  variable_map: typing.Tuple[int, ...]
  guaranteed_true: int
  source_variable_count: int = field(default=0)

  def lift(self, residual_assignment: Assignment) -> Assignment:
    """Extend an assignment of the residual to the original variables."""
    if residual_assignment.variable_count != self.residual.variable_count:
      raise InstanceError(
          f'Assignment covers {residual_assignment.variable_count} variables, '
          f'residual has {self.residual.variable_count}')

    values = dict(self.forced_variables)
    for index, original in enumerate(self.variable_map, 1):
      values[original] = residual_assignment[index]

    return Assignment.from_mapping(values, self.source_variable_count)


def literal_occurrences(i: Max2SatInstance) -> typing.Counter:
  """Occurrence count of every literal (a clause can count one twice)."""
  return collections.Counter(
      literal for clause in i.clauses for literal in clause)


def is_residual(i: Max2SatInstance) -> bool:
  """Whether the instance satisfies the preprocessing assumptions."""
  if any(is_tautology(clause) for clause in i.clauses):
    return False

  occurrences = literal_occurrences(i)
  return all(occurrences[v] and occurrences[-v]
             for v in range(1, i.variable_count + 1))


def _to_text(data) -> str:
  if hasattr(data, 'read'):
    data = data.read()

  if isinstance(data, (bytes, bytearray)):
    try:
      return data.decode('ascii')
    except UnicodeDecodeError as e:
      raise InstanceParseError(
          data.count(b'\n', 0, e.start) + 1,
          f'non-ASCII byte {data[e.start]:#04x}') from None

  return data


def _parse_int_fields(line_number, fields):
  try:
    return [int(f) for f in fields]
  except ValueError:
    raise InstanceParseError(line_number,
                             f'non-integer field in {fields}') from None


def parse_instance(text) -> Max2SatInstance:
  """Parse an instance in m2sat format.

  Header `p m2sat <n> <m>`, then m lines of two nonzero integers. Comment
  lines start with `c`.
  """
  header = None
  clauses = []
  clause_lines = []

  for line_number, raw_line in enumerate(_to_text(text).splitlines(), 1):
    fields = raw_line.split()
    if not fields or fields[0] == 'c':
      continue

    if fields[0] == 'p':
      if header is not None:
        raise InstanceParseError(line_number, 'duplicate problem line')
      if len(fields) != 4 or fields[1] != 'm2sat':
        raise InstanceParseError(
            line_number, f'malformed header {raw_line.strip()!r}, expected '
            '"p m2sat <n> <m>"')
      header = _parse_int_fields(line_number, fields[2:])
      if min(header) < 0:
        raise InstanceParseError(line_number, 'negative count in header')
      continue

    if header is None:
      raise InstanceParseError(line_number, 'clause before "p m2sat" header')

    literals = _parse_int_fields(line_number, fields)
    if len(literals) != 2:
      raise InstanceParseError(
          line_number, f'expected 2 literals per clause, got {len(literals)}')
    for literal in literals:
      if literal == 0 or abs(literal) > header[0]:
        raise InstanceParseError(
            line_number,
            f'literal {literal} out of range for {header[0]} variables')
    clauses.append(tuple(literals))
    clause_lines.append(line_number)

  if header is None:
    raise InstanceParseError(0, 'missing "p m2sat <n> <m>" header')

  variable_count, clause_count = header
  if clause_count != len(clauses):
    logging.warning('Header declares %d clauses, found %d clause lines',
                    clause_count, len(clauses))

  counts = collections.Counter()
  for clause, line_number in zip(clauses, clause_lines):
    counts.update(clause)
    for literal in clause:
      if counts[literal] > OCCURRENCE_BOUND:
        total = sum(c.count(literal) for c in clauses)
        raise InstanceParseError(
            line_number, f'literal {format_literal(literal)} occurs {total} > '
            f'{OCCURRENCE_BOUND} times')

  return Max2SatInstance(variable_count, tuple(clauses))


def serialize_instance(i: Max2SatInstance,
                       comments: typing.Iterable[str] = ()) -> str:
  """Serialize to m2sat text."""
  lines = [f'c {comment}'.rstrip() for comment in comments]
  lines.append(f'p m2sat {i.variable_count} {i.clause_count}')
  lines.extend(f'{a} {b}' for a, b in i.clauses)
  return '\n'.join(lines) + '\n'


def preprocess(i: Max2SatInstance) -> PreprocessReport:
  """Apply the standard simplifications until none applies.

  Tautological clauses are removed. A variable whose negation never occurs is
  forced true, one whose positive literal never occurs is forced false, and
  every clause containing a forced variable is then satisfied and removed.
  """
  clauses = [clause for clause in i.clauses if not is_tautology(clause)]
  removed_tautologies = i.clause_count - len(clauses)
  forced = {}
  satisfied = 0
  active = set(range(1, i.variable_count + 1))

  while True:
    occurrences = collections.Counter(
        literal for clause in clauses for literal in clause)
    newly_forced = set()
    for variable in sorted(active):
      if not occurrences[-variable]:
        forced[variable] = True
      elif not occurrences[variable]:
        forced[variable] = False
      else:
        continue
      newly_forced.add(variable)

    if not newly_forced:
      break

    active -= newly_forced
    # A forced variable only occurs in its true polarity, so every clause
    # containing it is satisfied.
    kept = [
        clause for clause in clauses
        if not any(abs(literal) in newly_forced for literal in clause)
    ]
    satisfied += len(clauses) - len(kept)
    clauses = kept

  variable_map = tuple(sorted(active))
  renumber = {original: index for index, original in enumerate(variable_map, 1)}
  residual = Max2SatInstance(
      len(variable_map),
      tuple(
          tuple(renumber[abs(literal)] * (1 if literal > 0 else -1)
                for literal in clause)
          for clause in clauses))

  logging.debug('Preprocessed %d clauses: %d tautologies, %d forced '
                'variables, %d clauses left', i.clause_count,
                removed_tautologies, len(forced), residual.clause_count)

  return PreprocessReport(
      removed_tautologies=removed_tautologies,
      forced_variables=forced,
      residual=residual,
      variable_map=variable_map,
      guaranteed_true=removed_tautologies + satisfied,
      source_variable_count=i.variable_count)


def evaluate(i: Max2SatInstance, a: Assignment) -> int:
  """Number of clauses with at least one true literal."""
  if a.variable_count != i.variable_count:
    raise InstanceError(f'Assignment covers {a.variable_count} variables, '
                        f'instance has {i.variable_count}')

  return sum(1 for clause in i.clauses
             if a.literal_value(clause[0]) or a.literal_value(clause[1]))


def brute_force_opt(
    i: Max2SatInstance,
    limit: typing.Optional[int] = None) -> typing.Tuple[Assignment, int]:
  """Optimal assignment by exhaustive search over all 2^n assignments.

  Ties go to the lexicographically smallest assignment (false < true,
  variable 1 most significant).
  """
  limit = config.sat_limit if limit is None else limit
  n = i.variable_count
  config.check_limit(n, limit, 'MAX-2SAT instance variables')

  # Row k is the k-th assignment in lexicographic order, so variable v holds
  # bit (n - v) of k.
  index = np.arange(1 << n, dtype=np.int64)
  counts = np.zeros(1 << n, dtype=np.int32)
  for clause in i.clauses:
    satisfied = np.zeros(1 << n, dtype=bool)
    for literal in clause:
      bit = (index >> (n - abs(literal))) & 1
      satisfied |= (bit == 1) if literal > 0 else (bit == 0)
    counts += satisfied

  # argmax returns the first maximum, i.e. the lexicographically smallest.
  best = int(np.argmax(counts))
  values = tuple(bool((best >> (n - v)) & 1) for v in range(1, n + 1))
  return Assignment(values), int(counts[best])


def majority_heuristic(i: Max2SatInstance) -> Assignment:
  """Set each variable to its more frequent polarity (ties go to true).

  On a preprocessed instance this satisfies at least floor(n / 2) clauses.
  """
  if not is_residual(i):
    raise PreconditionError(
        'majority_heuristic needs every variable to occur in both polarities '
        'and no tautological clause; run preprocess first')

  occurrences = literal_occurrences(i)
  return Assignment(
      tuple(occurrences[v] >= occurrences[-v]
            for v in range(1, i.variable_count + 1)))
