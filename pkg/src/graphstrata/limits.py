"""Desk-scale size guards shared by the enumeration and group machinery."""

import math

DEFAULT_MAX_DIM = 6
MAX_PERM_DEGREE = 10
MAX_GROUP_ORDER = math.factorial(MAX_PERM_DEGREE)


class SizeLimitError(ValueError):
    """Input exceeds the configured desk-scale bounds."""
