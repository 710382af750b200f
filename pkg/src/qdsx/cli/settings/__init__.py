from .experiment import *  # noqa: F403
from .generate import *  # noqa: F403
