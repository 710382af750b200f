from .run import *  # noqa: F403
