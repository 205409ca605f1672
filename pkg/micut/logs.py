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
"""Logging helpers."""

import contextlib
import logging
import sys
import threading

from google.cloud.logging import handlers as google_handlers

_state = threading.local()


class _ContextFilter:
  """
  A logging filter that attaches structured fields to every record.

  Fields come from the service name, the active log_context() and, for
  errors, the location the record was emitted from.
  """

  def __init__(self, service_name: str) -> None:
    self.service_name = service_name

  def filter(self, record: logging.LogRecord) -> bool:
    """Add the context fields to json_fields."""
    if not hasattr(record, 'json_fields'):
      record.json_fields = {}

    record.json_fields['service'] = self.service_name
    record.json_fields.update(getattr(_state, 'fields', {}))

    if record.levelno >= logging.ERROR:
      record.json_fields['reportLocation'] = {
          'filePath': record.pathname,
          'lineNumber': record.lineno,
          'functionName': record.funcName,
      }

    return True


@contextlib.contextmanager
def log_context(**fields):
  """Attach `fields` to all records logged from this thread in the block."""
  previous = getattr(_state, 'fields', {})
  _state.fields = {**previous, **fields}
  try:
    yield
  finally:
    _state.fields = previous


def setup_logging(service_name, level=logging.INFO, json_output=False):
  """Set up stderr logging with context fields.

  With json_output, Cloud Logging's structured handler writes one JSON object
  per record (severity, message and json_fields). It needs no client.
  """
  if json_output:
    handler = google_handlers.StructuredLogHandler(stream=sys.stderr)
  else:
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(
        logging.Formatter('%(asctime)s %(levelname)s %(name)s: %(message)s'))
  handler.addFilter(_ContextFilter(service_name))

  root = logging.getLogger()
  for existing in list(root.handlers):
    root.removeHandler(existing)
  root.addHandler(handler)
  root.setLevel(level)
