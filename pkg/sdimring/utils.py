"""
Helper functions and run-wide defaults
"""

import os
from datetime import datetime
from typing import Iterable, List

OUTPUT = "./output"
REPORT_DIR = f"{OUTPUT}/reports"
EXPORT_DIR = f"{OUTPUT}/graphs"

# guards for exact computation
DEFAULT_VERTEX_BUDGET = 512
DEFAULT_ORACLE_CAP = 12
DEFAULT_NODE_BUDGET = 10_000_000


def get_current_time() -> str:
    """
    Generate a timestamp as filename suffix
    """
    now = datetime.now()
    return now.strftime("%Y%m%d-%H%M%S")


def ensure_folder(path: str) -> None:
    """
    Make sure dir exists, if not, create one (parents included)
    """
    if path and not os.path.isdir(path):
        os.makedirs(path, exist_ok=True)


def ensure_parent(file_path: str) -> None:
    """
    Make sure the directory holding `file_path` exists
    """
    ensure_folder(os.path.dirname(file_path))


def iter_bits(mask: int) -> Iterable[int]:
    """
    Yield the indices of set bits in ascending order
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_list(mask: int) -> List[int]:
    return list(iter_bits(mask))
