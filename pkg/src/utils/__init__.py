"""
Utility modules for the tropical Grassmannian fan toolkit
"""

from .concurrency import balanced_reduce, parallel_map
from .version import get_version, get_version_info, version_banner

__all__ = [
    "balanced_reduce",
    "get_version",
    "get_version_info",
    "parallel_map",
    "version_banner",
]
