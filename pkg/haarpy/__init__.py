import sys
import logging

from .config import here, Config
from .models import MomentQuery
from .haar import moment, moment_symbolic
from .weingarten import wg_moment
from .monte_carlo import mc_moment

__all__ = [
    "logger",
    "Config",
    "MomentQuery",
    "moment",
    "moment_symbolic",
    "wg_moment",
    "mc_moment",
]

logger = logging.getLogger("haarpy")

# custom `commands.py` next to the working directory
sys.path.insert(0, here)
