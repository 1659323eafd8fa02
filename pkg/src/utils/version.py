"""
Version lookup for the command-line banner
"""

from pathlib import Path
from typing import Dict, Optional

_cached_version: Optional[str] = None

VERSION_FILE = Path(__file__).parent.parent.parent / "version.txt"


def get_version() -> str:
    """
    Read the package version from version.txt.

    Raises:
        FileNotFoundError: version.txt is missing or unreadable
        ValueError: the file is empty or not MAJOR.MINOR.PATCH
    """
    global _cached_version

    if _cached_version is not None:
        return _cached_version

    if not VERSION_FILE.exists():
        raise FileNotFoundError(f"Version file not found: {VERSION_FILE}")

    try:
        version = VERSION_FILE.read_text(encoding="utf-8").strip()
    except OSError as e:
        raise FileNotFoundError(f"Failed to read version file: {e}")

    if not version:
        raise ValueError("Version file is empty")

    parts = version.split(".")
    if len(parts) != 3 or not all(part.isdigit() for part in parts):
        raise ValueError(
            f"Invalid version format: {version}. Expected semantic versioning (e.g., '1.0.0')"
        )

    _cached_version = version
    return version


def get_version_info() -> Dict[str, object]:
    """Version split into its numeric components"""
    version = get_version()
    major, minor, patch = version.split(".")
    return {
        "version": version,
        "major": int(major),
        "minor": int(minor),
        "patch": int(patch),
        "full": f"v{version}",
    }


def version_banner() -> str:
    """One-line banner printed by `tropgrass --version`"""
    return f"tropgrass {get_version_info()['full']}"
