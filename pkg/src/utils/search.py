"""
Search budgets and three-valued search results shared by the exact searches and deciders
"""

import enum
import logging
import threading
import time
from dataclasses import dataclass
from typing import Any, Generic, Optional, TypeVar

from utils.exceptions import BudgetExhausted

logger = logging.getLogger(__name__)

T = TypeVar("T")


class SearchStatus(str, enum.Enum):
    """Outcome of an exact search"""
    FOUND = "found"
    NONE = "none"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SearchResult(Generic[T]):
    """
    Result of an exact search

    Attributes:
        status: FOUND with a certificate, NONE when the search space was exhausted,
            UNKNOWN when the budget ran out first
        certificate: The certificate for FOUND results
        nodes: Number of search nodes expanded
        elapsed: Wall-clock seconds spent
        reason: Short human-readable explanation
    """
    status: SearchStatus
    certificate: Optional[T] = None
    nodes: int = 0
    elapsed: float = 0.0
    reason: str = ""

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND


class SearchBudget:
    """
    Node and time budget for a backtracking search.

    `tick()` is called once per expanded node and raises `BudgetExhausted` when either
    limit is passed. The counter is lock-protected so one budget can be shared by worker
    threads exploring different subtrees.
    """

    def __init__(self, max_nodes: Optional[int] = None, time_limit: Optional[float] = None):
        self.max_nodes = max_nodes
        self.time_limit = time_limit
        self.nodes = 0
        self._start = time.perf_counter()
        self._lock = threading.Lock()

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self._start

    def tick(self, count: int = 1) -> None:
        with self._lock:
            self.nodes += count
            nodes = self.nodes
        if self.max_nodes is not None and nodes > self.max_nodes:
            raise BudgetExhausted(f"node budget of {self.max_nodes} exhausted")
        # clock reads are comparatively expensive
        if self.time_limit is not None and nodes % 256 == 0 and self.elapsed > self.time_limit:
            raise BudgetExhausted(f"time limit of {self.time_limit}s exhausted")

    def result(self, status: SearchStatus, certificate: Any = None, reason: str = "") -> SearchResult:
        outcome = SearchResult(status=status, certificate=certificate, nodes=self.nodes,
                               elapsed=self.elapsed, reason=reason)
        logger.info(f"Search finished: {status.value} after {self.nodes} nodes "
                    f"in {outcome.elapsed:.4f} seconds{f' ({reason})' if reason else ''}")
        return outcome
