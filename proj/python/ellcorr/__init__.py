from ._ellcorr import *  # noqa: F401,F403
