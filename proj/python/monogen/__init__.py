"""Local generation of monotonic languages by simplicial complexes."""

from ._monogen import *  # noqa: F401,F403
from ._monogen import __doc__  # noqa: F401
