from __future__ import annotations

# -------------------------------------------------
# Tool identity
# -------------------------------------------------
TOOL_NAME = "curve-census"
TOOL_VERSION = "0.1.0"

# Bumped whenever the census record layout or canonical encoding changes.
CENSUS_FORMAT_VERSION = 1

# Storage key layout for cached censuses
CENSUS_KEY_TEMPLATE = "census/k{k}.jsonl"


def census_key(k: int) -> str:
    return CENSUS_KEY_TEMPLATE.format(k=int(k))


# -------------------------------------------------
# Public Contract
# -------------------------------------------------
__all__ = [
    "TOOL_NAME",
    "TOOL_VERSION",
    "CENSUS_FORMAT_VERSION",
    "CENSUS_KEY_TEMPLATE",
    "census_key",
]
