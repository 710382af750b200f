from .devices import *  # noqa: F403
from .measurements import *  # noqa: F403
from .types import *  # noqa: F403
