# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

"""
Common auxiliary functions for the command-line front end and the library.
"""

from typing import Optional, TextIO, Literal, NoReturn

import os
import sys
import textwrap

__all__ = [
  'printerr', 'die', 'msg', 'hr', 'c', 'Color',
  'debug', 'debug_enabled',
]


def printerr(*args, **kwargs) -> None:
  """
  Shorthand for `print()` but with `file=sys.stderr` as default (instead of `sys.stdout`).
  """
  kwargs.setdefault('file', sys.stderr)
  print(*args, **kwargs)

def die(*args, **kwargs) -> NoReturn:
  """
  Print message and exit.

  The exit code will be set to the `status=` kwarg value, or `1` if not specified.
  Also, if the `file=` kwarg is missing, it will be set to `sys.stderr`.
  All other arguments are passed on to the `print()` builtin.
  """
  status = kwargs.pop('status', 1)
  printerr(*args, **kwargs)
  sys.exit(status)

def msg(s: str = '', file: Optional[TextIO] = None) -> None:
  "Simple alias for print() builtin (to stderr by default), to allow future customization."
  print(s, file=file if file is not None else sys.stderr)

def hr(n: int = 76, file: Optional[TextIO] = None, ch: str = '*') -> str:
  "Return a simple horizontal rule; optionally output to file stream."
  rv = ch * n
  if file is not None:
    msg(rv, file=file)
  return rv

_COLORMAP = {
  'black': 30,
  'red': 31,
  'green': 32,
  'yellow': 33,
  'blue': 34,
  'magenta': 35,
  'cyan': 36,
  'white': 37,
}

Color = Literal['black', 'red', 'green', 'yellow', 'blue', 'magenta', 'cyan', 'white']

if sys.platform != "win32":
  def c(fg: Optional[Color] = None, *, bold: bool = False) -> str:
    "ANSI escape for a foreground color; no color resets"
    if fg is None:
      return '\033[0m'
    return f'\033[{"1;" if bold else ""}{_COLORMAP[fg]}m'
else:
  def c(fg: Optional[Color] = None, *, bold: bool = False) -> str:
    return ''


def debug_enabled() -> bool:
  return os.environ.get('PYCOSET_DEBUG', None) == '1'

if debug_enabled():
  def debug(text: str) -> None:
    print(textwrap.indent(text, 'DBG: '), file=sys.stderr)
else:
  def debug(text: str) -> None:
    pass
