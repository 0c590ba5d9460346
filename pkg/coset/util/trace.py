# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

"""
Optional execution tracing of theorem-lab verifiers, via snoop.

Importing this module raises ImportError when snoop is not installed; callers
treat that as "tracing unavailable".
"""

import re
from contextlib import contextmanager
from io import StringIO

from snoop import Config as SnoopConfig

from typing import Any, Callable, Iterator, MutableMapping, Sequence


__all__ = ['strip_ansi_escapes', 'TraceLog']


_CSI_RE = re.compile(r'\033\[[0-9:;<=>?]*[ !"#$%&\'()*+,-./]*[@A-Z\[\]^_`a-z{|}~]')

def strip_ansi_escapes(txt: str) -> str:
  return _CSI_RE.sub('', txt)

_RESET = '\033[0m'
_FRAME = '\033[0;36m'
_WIDTH = 76


def _rule(left: str, title: str = '') -> str:
  if title:
    title = f' {title} '
  pad = _WIDTH - 1 - len(title)
  return f'{_FRAME}{left}{"─" * (pad // 2)}{title}{"─" * (pad - pad // 2)}{_RESET}\n'


class TraceLog:
  """
  In-memory snoop output for a set of wrapped verifiers.

  `patched()` swaps functions in a namespace (a module's `vars()`) for traced
  wrappers while the block runs; `get_output()` returns what was captured
  since the last `reset()`, framed and listing the traced names.
  """
  def __init__(self, *, depth: int = 1):
    self._buffer = StringIO()
    self._snoop = SnoopConfig(
      out=self._buffer, prefix=f'{_FRAME}┃{_RESET}', columns='', color=True, replace_watch_extras=(),
    ).snoop
    self.depth = depth
    self.traced: list[str] = []

  def reset(self) -> None:
    self._buffer.seek(0)
    self._buffer.truncate()

  def get_output(self, *, color: bool = False, header: bool = True) -> str:
    out = self._buffer.getvalue()
    if header:
      out = _rule('┎', 'EXECUTION TRACE: ' + ', '.join(self.traced)) + out + _rule('┖')
    return out if color else strip_ansi_escapes(out)

  def trace[F: Callable[..., Any]](self, func: F, *, watch: Sequence[str] = ()) -> F:
    return self._snoop(watch=watch, depth=self.depth)(func)

  @contextmanager
  def patched(self, namespace: MutableMapping[str, Any], names: Sequence[str]) -> Iterator['TraceLog']:
    saved = {name: namespace[name] for name in names}
    self.traced = list(names)
    try:
      namespace.update({name: self.trace(func) for name, func in saved.items()})
      yield self
    finally:
      namespace.update(saved)
