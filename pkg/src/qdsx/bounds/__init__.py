from .analytic import *  # noqa: F403
from .sweeps import *  # noqa: F403
from .types import *  # noqa: F403
