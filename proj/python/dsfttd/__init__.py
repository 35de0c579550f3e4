# SPDX-License-Identifier: Apache-2.0
"""Wideband THz hybrid beamforming with dynamic-subarray fixed TTD front ends."""

from ._dsfttd import *  # noqa: F401,F403
from ._dsfttd import __version__  # noqa: F401
