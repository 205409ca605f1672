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
"""Memoization of oracle results."""
import functools
import inspect
import threading
import typing

_MISSING = object()


class Cache:
  """Cache Interface"""

  def get(self, key, default=None):
    raise NotImplementedError

  def set(self, key, value):
    raise NotImplementedError

  def clear(self):
    raise NotImplementedError


class InMemoryCache(Cache):
  """In memory cache implementation, bounded by entry count."""

  key_val_map: typing.Dict[typing.Hashable, typing.Any]

  def __init__(self, max_entries=4096):
    self.max_entries = max_entries
    self.key_val_map = {}
    self._lock = threading.Lock()

  def get(self, key, default=None):
    with self._lock:
      return self.key_val_map.get(key, default)

  def set(self, key, value):
    with self._lock:
      if len(self.key_val_map) >= self.max_entries:
        # Evict the oldest entry (dicts preserve insertion order).
        self.key_val_map.pop(next(iter(self.key_val_map)))
      self.key_val_map[key] = value

  def clear(self):
    with self._lock:
      self.key_val_map.clear()

  def __len__(self):
    return len(self.key_val_map)


def _key_part(value):
  """Hashable key for an argument.

  Graphs and instances provide `canonical_text()`; their serialized form is
  the key, so equal inputs share an entry regardless of identity.
  """
  canonical = getattr(value, 'canonical_text', None)
  if callable(canonical):
    return (type(value).__name__, canonical())

  if isinstance(value, (set, frozenset)):
    return tuple(sorted(value))

  if isinstance(value, list):
    return tuple(value)

  return value


def cached(cache: Cache):
  """Function decorator to cache results.

  Args:
    cache: Cache object to store results. Each function has a unique key
      prefix, so the same cache can be shared across functions.
  """

  def decorator(func):
    unique_f_key = ('FUNC_MODULE_NAME', inspect.getmodule(func).__name__,
                    func.__qualname__)
    sig = inspect.signature(func)

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
      bound_args = sig.bind(*args, **kwargs)
      # A changed default must produce a new key.
      bound_args.apply_defaults()
      cache_key = (*((name, _key_part(value))
                     for name, value in bound_args.arguments.items()),
                   unique_f_key)
      cached_value = cache.get(cache_key, _MISSING)
      if cached_value is not _MISSING:
        return cached_value

      value = func(*args, **kwargs)
      cache.set(cache_key, value)
      return value

    return wrapper

  return decorator
