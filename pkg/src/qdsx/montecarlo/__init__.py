from .oracles import *  # noqa: F403
from .runner import *  # noqa: F403
from .settings import *  # noqa: F403
from .stats import *  # noqa: F403
from .types import *  # noqa: F403
