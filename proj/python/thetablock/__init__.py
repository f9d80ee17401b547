from ._tbcore import *  # noqa: F401,F403
