from .code import *  # noqa: F401,F403
from .closed import *  # noqa: F401,F403
