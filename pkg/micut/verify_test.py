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
"""Property suite tests."""

import unittest
from unittest import mock

from . import verify


def _fail_odd_seeds(rng, max_n):
  del max_n
  value = rng.random()
  return (f'drew {value}' if value > 0.5 else None), {'draws': 1}


class VerifyTest(unittest.TestCase):
  """Property suite tests."""

  def _assert_passes(self, suite, **kwargs):
    report = verify.run_suite(suite, **kwargs)
    self.assertTrue(report['passed'], report['failures'])
    self.assertEqual([], report['failures'])
    return report

  def test_eq12(self):
    """Test the reduction identity suite."""
    report = self._assert_passes('eq12', count=3, max_n=4, seed=1)
    self.assertEqual(3, report['checked'])
    self.assertEqual(3, report['stats']['exhaustive'])

  def test_thm1(self):
    """Test the independent set recovery suite."""
    self._assert_passes('thm1', count=3, max_n=5)

  def test_gadget(self):
    """Test the gadget suite runs once."""
    report = self._assert_passes('gadget', count=50)
    self.assertEqual(1, report['checked'])
    self.assertEqual(8, report['stats']['sets'])

  def test_polar(self):
    """Test the polar characterization suite."""
    self._assert_passes('polar', count=3, max_n=6)

  def test_potential(self):
    """Test the Nash and local minimum suite."""
    self._assert_passes('potential', count=3, max_n=6)

  def test_dynamics(self):
    """Test the dynamics suite."""
    report = self._assert_passes('dynamics', count=5, max_n=10)
    self.assertIn('steps', report['stats'])

  def test_majority(self):
    """Test the majority bound suite."""
    self._assert_passes('majority', count=10, max_n=6)

  def test_deterministic(self):
    """Test that equal seeds give equal reports."""
    self.assertEqual(
        verify.run_suite('dynamics', count=4, max_n=8, seed=9),
        verify.run_suite('dynamics', count=4, max_n=8, seed=9))

  def test_workers(self):
    """Test that a process pool aggregates in item order."""
    self.assertEqual(
        verify.run_suite('majority', count=4, max_n=5, seed=3),
        verify.run_suite('majority', count=4, max_n=5, seed=3, workers=2))

  def test_failures(self):
    """Test that failures carry their reproduction seeds."""
    with mock.patch.dict(verify.SUITES, {'majority': _fail_odd_seeds}):
      with self.assertLogs(level='ERROR'):
        report = verify.run_suite('majority', count=20, seed=100)
      single = verify.run_suite(
          'majority', count=1, seed=report['failures'][0]['seed'])

    self.assertFalse(report['passed'])
    self.assertEqual(20, report['stats']['draws'])
    self.assertTrue(
        all(100 <= f['seed'] < 120 for f in report['failures']))
    self.assertEqual(report['failures'][:1], single['failures'])

  def test_invalid(self):
    """Test invalid suite parameters."""
    with self.assertRaises(verify.SuiteError):
      verify.run_suite('unknown')
    with self.assertRaises(verify.SuiteError):
      verify.run_suite('dynamics', count=-1)


if __name__ == '__main__':
  unittest.main()
