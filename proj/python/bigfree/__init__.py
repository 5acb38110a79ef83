"""Exact computations in the big free group BF(omega).

Words, vectors and points are written in the same text grammar as the
``bigfree`` command line tool::

    >>> from bigfree import Word, word_dist
    >>> str(word_dist(Word("a1 a2"), Word("a1 a3")))
    '[0,1,1]'
"""

from ._bigfree import *  # noqa: F401,F403
