"""Formatting helpers shared by the command line tool and its tests."""

from __future__ import annotations

from typing import Any

__all__ = ["sig12", "round_floats"]


def sig12(x: float) -> float:
    """Round to 12 significant digits, the precision quoted in reports."""
    return float(f"{float(x):.12g}")


def round_floats(obj: Any) -> Any:
    """Recursively round every float in a JSON-style structure to 12 digits."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return sig12(obj)
    if isinstance(obj, dict):
        return {k: round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(v) for v in obj]
    return obj
