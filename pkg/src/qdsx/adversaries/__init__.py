from .forging import *  # noqa: F403
from .repudiation import *  # noqa: F403
from .types import *  # noqa: F403
