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
"""Logging tests."""

import io
import json
import logging
import unittest
from unittest import mock

from google.cloud.logging import handlers as google_handlers

from . import logs


class LogsTest(unittest.TestCase):
  """Logging tests."""

  def setUp(self):
    root = logging.getLogger()
    self.addCleanup(root.setLevel, root.level)
    self.addCleanup(setattr, root, 'handlers', list(root.handlers))

  def _setup(self, **kwargs):
    stderr = io.StringIO()
    with mock.patch('sys.stderr', stderr):
      logs.setup_logging('micut-test', **kwargs)
    return stderr

  def test_json_output(self):
    """Test JSON lines with context fields."""
    stderr = self._setup(json_output=True)
    self.assertIsInstance(logging.getLogger().handlers[0],
                          google_handlers.StructuredLogHandler)
    with logs.log_context(suite='eq12', seed=7):
      logging.info('Checked %d sets', 3)
    logging.warning('Outside')

    lines = stderr.getvalue().splitlines()
    first, second = [json.loads(line) for line in lines]
    self.assertEqual('INFO', first['severity'])
    self.assertEqual('Checked 3 sets', first['message'])
    self.assertEqual('micut-test', first['service'])
    self.assertEqual('eq12', first['suite'])
    self.assertEqual(7, first['seed'])
    self.assertNotIn('suite', second)

  def test_error_location(self):
    """Test that errors carry their report location."""
    stderr = self._setup(json_output=True)
    logging.error('Broken')

    record = json.loads(stderr.getvalue())
    self.assertEqual('ERROR', record['severity'])
    self.assertEqual('test_error_location',
                     record['reportLocation']['functionName'])

  def test_level(self):
    """Test that records below the level are dropped."""
    stderr = self._setup(level=logging.WARNING)
    logging.info('Hidden')
    logging.warning('Shown')

    output = stderr.getvalue()
    self.assertNotIn('Hidden', output)
    self.assertIn('WARNING', output)
    self.assertIn('Shown', output)


if __name__ == '__main__':
  unittest.main()
