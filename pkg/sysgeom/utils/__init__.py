# encoding: utf-8

from .planar import *  # noqa: F401, F403
