from ._sfkit import *  # noqa: F401,F403
