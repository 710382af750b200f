from .distribution import *  # noqa: F403
from .messaging import *  # noqa: F403
from .trial import *  # noqa: F403
from .types import *  # noqa: F403
