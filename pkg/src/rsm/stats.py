"""Lightweight per-call counters (flow calls, branch nodes)."""

from __future__ import annotations

import contextlib
import time
from contextvars import ContextVar
from dataclasses import dataclass, field


@dataclass
class Stats:
    flow_calls: int = 0
    branch_nodes: int = 0
    started: float = field(default_factory=time.perf_counter)

    def as_dict(self) -> dict:
        return {
            "flow_calls": self.flow_calls,
            "branch_nodes": self.branch_nodes,
            "wall_time": round(time.perf_counter() - self.started, 6),
        }


_current: ContextVar[Stats | None] = ContextVar("rsm_stats", default=None)


def bump(name: str, amount: int = 1) -> None:
    stats = _current.get()
    if stats is not None:
        setattr(stats, name, getattr(stats, name) + amount)


@contextlib.contextmanager
def collect():
    """Collect counters for everything run inside the ``with`` block."""
    stats = Stats()
    token = _current.set(stats)
    try:
        yield stats
    finally:
        _current.reset(token)
