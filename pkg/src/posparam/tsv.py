"""
TSV form of Plücker vectors and region assignments.

One entry per line, index and value separated by a tab. Subsets and region
indices are comma-joined ("1,2,4", "2,5") or, for single-digit indices, written
together ("124"), values exact rationals ("7/3").
"""

from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Tuple, Union

from src.exceptions import SerializationException
from src.posparam.parameterization import PlueckerVector, RegionAssignment


def _parse_index(key: str) -> Tuple[int, ...]:
    # "124" is shorthand for "1,2,4" when every index is a single digit
    parts = key.split(",") if "," in key else list(key)
    return tuple(int(part) for part in parts)


def _parse_lines(text: str, source: str) -> List[Tuple[Tuple[int, ...], Fraction]]:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            key, value = line.split("\t")
            index = _parse_index(key.strip())
            rows.append((index, Fraction(value.strip())))
        except (ValueError, ZeroDivisionError) as e:
            raise SerializationException(
                f"Malformed TSV line {lineno}: {raw!r}", path=source, original_error=e
            )
    if not rows:
        raise SerializationException("TSV input has no entries", path=source)
    return rows


def format_plucker_tsv(d: PlueckerVector) -> str:
    return "".join(f"{','.join(map(str, K))}\t{v}\n" for K, v in d.entries)


def parse_plucker_tsv(text: str, source: str = "<input>") -> PlueckerVector:
    """Read a full Plücker vector; k and n are the subset size and largest index"""
    rows = _parse_lines(text, source)
    k = len(rows[0][0])
    n = max(max(K) for K, _ in rows)
    try:
        return PlueckerVector.from_mapping(k, n, dict(rows))
    except Exception as e:
        raise SerializationException(
            f"Invalid Plücker vector: {e}", path=source, original_error=e
        )


def format_regions_tsv(x: RegionAssignment) -> str:
    return "".join(f"{i},{j}\t{v}\n" for (i, j), v in x.values)


def read_text(path: Union[str, Path]) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise SerializationException(f"Cannot read {path}", path=str(path), original_error=e)


def region_values(text: str, source: str = "<input>") -> Dict[Tuple[int, int], Fraction]:
    """Parse a region TSV into {(i, j): value}"""
    out: Dict[Tuple[int, int], Fraction] = {}
    for index, value in _parse_lines(text, source):
        if len(index) != 2:
            raise SerializationException(f"Region index {index} is not a pair", path=source)
        out[(index[0], index[1])] = value
    return out
