from .core import *  # noqa: F401,F403
from .closed import *  # noqa: F401,F403
from .exceptions import *  # noqa: F401,F403
