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
"""Solver limits and defaults."""
import logging

import yaml

# Node cap for exact_micut.
exact_limit = 30

# Variable cap for the MAX-2SAT brute force oracle.
sat_limit = 20

# Node cap for the maximum independent set oracle.
mis_limit = 30

# Node cap for the enumeration behind reduction certificates and the
# independent set recovery check (constructed graphs are larger than their
# sources).
certificate_limit = 64

# Above this many nodes, certificates sample maximal independent sets for
# the cut bound instead of enumerating all of them.
enumeration_limit = 48

# Node cap for sweeps over all 2^n action profiles.
profile_limit = 20

default_seed = 0
default_restarts = 10

_KEYS = (
    'exact_limit',
    'sat_limit',
    'mis_limit',
    'certificate_limit',
    'enumeration_limit',
    'profile_limit',
    'default_seed',
    'default_restarts',
)


class LimitExceededError(Exception):
  """Input is over an exhaustive search limit."""

  def __init__(self, what, size, limit):
    self.what = what
    self.size = size
    self.limit = limit
    super().__init__(f'{what} has size {size}, over the exhaustive limit of '
                     f'{limit}')


def check_limit(size, limit, what):
  """Raise LimitExceededError if `size` is over `limit`."""
  if size > limit:
    raise LimitExceededError(what, size, limit)


def set_limits(**kwargs):
  """Override settings by name."""
  for key, value in kwargs.items():
    if key not in _KEYS:
      raise ValueError(f'Unknown config key: {key}')

    if value is None:
      continue

    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
      raise ValueError(f'{key} must be a nonnegative integer, got {value!r}')

    globals()[key] = value


def load(path):
  """Load settings from a YAML file."""
  with open(path) as f:
    try:
      data = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
      raise ValueError(f'{path}: invalid YAML: {e}') from e

  if not isinstance(data, dict):
    raise ValueError(f'{path}: expected a mapping of settings')

  logging.info('Loading config from %s', path)
  set_limits(**data)


def snapshot():
  """Current settings as a dict."""
  return {key: globals()[key] for key in _KEYS}
