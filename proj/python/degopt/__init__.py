"""Degree sequence optimization: exact solvers, gadgets and oracles.

Instance arguments accept a dict, a JSON string, or a path to an instance
file. Typed helpers (``treedepth``, ``solve_separable``) take 0-based edge
lists; instance files are 1-based.
"""

from __future__ import annotations

import json
import os
from typing import Any, Optional, Sequence, Union

from ._core import (
    Error,
    InputError,
    LimitError,
    PreconditionError,
    ValueOverflowError,
    heuristic_forest,
    solve_separable,
    treedepth,
)
from . import _core

InstanceLike = Union[dict, str, os.PathLike]

__all__ = [
    "Error",
    "InputError",
    "LimitError",
    "PreconditionError",
    "ValueOverflowError",
    "canonicalize",
    "digest",
    "emit_ip",
    "heuristic_forest",
    "run_cli",
    "solve_colored",
    "solve_multi",
    "solve_separable",
    "treedepth",
    "treedepth_report",
]


def _text(instance: InstanceLike) -> str:
    if isinstance(instance, dict):
        return json.dumps(instance)
    if isinstance(instance, os.PathLike) or (isinstance(instance, str) and not instance.lstrip().startswith("{")):
        with open(instance, encoding="utf-8") as fh:
            return fh.read()
    return instance


def run_cli(args: Sequence[str]) -> tuple[int, str, str]:
    """Run ``degopt <args>`` in-process; returns (exit code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])


def solve_multi(instance: InstanceLike, m: Optional[int] = None, *, unprescribed: bool = False,
                brute: bool = False, threads: int = 1, max_criteria: int = 4) -> dict[str, Any]:
    return json.loads(_core.solve_multi(_text(instance), m, unprescribed, brute, threads, max_criteria))


def solve_colored(instance: InstanceLike, *, forest: Optional[Sequence[int]] = None, method: str = "auto",
                  brute: bool = False, threads: int = 1) -> dict[str, Any]:
    """forest: 0-based parents with -1 for roots. method: auto, exact or heuristic."""
    parents = None if forest is None else list(forest)
    return json.loads(_core.solve_colored(_text(instance), parents, method, brute, threads))


def treedepth_report(instance: InstanceLike, heuristic: bool = False) -> dict[str, Any]:
    return json.loads(_core.treedepth_report(_text(instance), heuristic))


def emit_ip(instance: InstanceLike) -> str:
    return _core.emit_ip(_text(instance))


def canonicalize(instance: InstanceLike) -> str:
    return _core.canonicalize(_text(instance))


def digest(instance: InstanceLike) -> str:
    return _core.digest(_text(instance))
