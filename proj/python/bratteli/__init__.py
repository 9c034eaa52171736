"""Exact combinatorics and stochastic simulation on branching graphs.

The package wraps the C++ core: lattice path counting, leveled branching
graphs with exact path-count dimensions, Fuss-Catalan generating functions,
central Markov chains with rational certificates, and Monte Carlo experiments
on the tree walks. Counts are Python ints of arbitrary size; probabilities
are floats, with exact rational strings available from the chain models.
"""

from bratteli._core import *  # noqa: F401,F403
from bratteli._core import __version__  # noqa: F401
