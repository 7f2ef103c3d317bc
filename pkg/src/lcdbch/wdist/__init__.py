from .weights import *  # noqa: F401,F403
