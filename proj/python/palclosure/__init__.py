"""Iterated palindromic closure on words and free groups, plus the suffix
automaton and minimal compact suffix automaton of Pal(u).

The heavy lifting lives in the compiled extension module ``_palclosure``.
"""

from _palclosure import *  # noqa: F401,F403
from _palclosure import __version__  # noqa: F401
