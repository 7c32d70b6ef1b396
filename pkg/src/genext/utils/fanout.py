"""Bounded parallel map over independent tasks using LangGraph's Send API."""

import logging
import operator
from collections.abc import Callable, Sequence
from typing import Annotated, Any, Generic, TypedDict, TypeVar

from langgraph.graph import END, START, StateGraph
from langgraph.types import Send

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class TaskWorkerState(TypedDict):
    """State for a single task worker spawned by Send."""

    index: int
    item: Any


class SweepState(TypedDict):
    """State for one parallel sweep."""

    items: list[Any]
    results: Annotated[list[tuple[int, Any]], operator.add]


class ParallelSweep(Generic[T, R]):
    """Apply a worker to every item, in parallel, returning results in input order."""

    def __init__(self, worker: Callable[[T], R], name: str = "sweep") -> None:
        """Initialize the sweep and compile its graph.

        Args:
            worker: Pure function applied to each item.
            name: Label used in log lines.
        """
        self.worker = worker
        self.name = name

        def run_task(state: TaskWorkerState) -> dict[str, list[tuple[int, Any]]]:
            """Run one task in an isolated Send worker."""
            return {"results": [(state["index"], worker(state["item"]))]}

        def dispatch(state: SweepState) -> list[Send]:
            """Generate one Send instruction per independent item."""
            return [
                Send("run_task", {"index": idx, "item": item})
                for idx, item in enumerate(state["items"])
            ]

        workflow = StateGraph(SweepState)
        workflow.add_node("run_task", run_task)
        workflow.add_conditional_edges(START, dispatch, ["run_task"])
        workflow.add_edge("run_task", END)
        self.graph: Any = workflow.compile()

    def run(self, items: Sequence[T], workers: int = 1) -> list[R]:
        """
        Map the worker over ``items``.

        Args:
            items: Independent task payloads.
            workers: Maximum concurrent tasks; 1 runs sequentially in-process.

        Returns:
            Results in the order of ``items``.
        """
        if not items:
            return []
        if workers <= 1 or len(items) == 1:
            logger.debug("ℹ️ %s: %s tasks sequentially", self.name, len(items))
            return [self.worker(item) for item in items]

        logger.debug("ℹ️ %s: %s tasks, max_concurrency=%s", self.name, len(items), workers)
        final = self.graph.invoke(
            {"items": list(items), "results": []},
            config={"max_concurrency": workers, "recursion_limit": 25},
        )
        ordered = sorted(final["results"], key=operator.itemgetter(0))
        return [result for _, result in ordered]
