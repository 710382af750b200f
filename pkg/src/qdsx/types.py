from .adversaries.types import *  # noqa: F403
from .bounds.types import *  # noqa: F403
from .cli.types import *  # noqa: F403
from .montecarlo.types import *  # noqa: F403
from .optics.types import *  # noqa: F403
from .protocol.types import *  # noqa: F403
