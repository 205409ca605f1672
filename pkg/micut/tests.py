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
"""Test helpers: expectation files and small graph fixtures."""
import os
import pprint
import random

from . import generators

TEST_DATA_DIR = os.path.join(
    os.path.dirname(os.path.abspath(__file__)), 'testdata')


def ExpectationTest(test_data_dir):  # pylint: disable=invalid-name
  """Mixin comparing results with `<TestClass>_<name>.txt` literals.

  Set TESTS_GENERATE=1 to rewrite the files from the current results.
  """

  class Mixin:
    """Mixin."""

    def _expected_path(self, expected_name):
      return os.path.join(test_data_dir,
                          f'{type(self).__name__}_{expected_name}.txt')

    def expect_equal(self, expected_name, actual):
      """Check `actual` against the stored Python literal."""
      path = self._expected_path(expected_name)
      if os.getenv('TESTS_GENERATE'):
        with open(path, 'w') as f:
          f.write(pprint.pformat(actual, indent=4) + '\n')

      with open(path) as f:
        expected = eval(f.read(), {})  # pylint: disable=eval-used
      self.assertEqual(expected, actual)

  return Mixin


path_graph = generators.path_graph
cycle_graph = generators.cycle_graph
star_graph = generators.star_graph


def triangle():
  return generators.cycle_graph(3)


def random_graphs(count, max_n, seed, p=0.4):
  """`count` seeded G(n, p) graphs with 1..max_n nodes."""
  rng = random.Random(seed)
  return [
      generators.gnp_graph(rng.randint(1, max_n), p, rng.randrange(2**32))
      for _ in range(count)
  ]
