"""Search loops: archive-driven DRSR and the SR/MOSR baselines."""

from .context import RunContext, build_context
from .drsr import DrsrEngine, run_drsr
from .generational import GenerationalEngine, MosrEngine, SrEngine, run_mosr, run_sr
from .interfaces import SearchEngine
from .pipeline import OffspringPipeline
from .selection import (
    crowded_tournament,
    crowding_distance,
    dominates,
    environmental_selection,
    fast_non_dominated_sort,
    objectives,
    rank_and_crowding,
    sr_next_generation,
    tournament_select,
)
from .trace import RunTrace, TraceRecord, archive_from_population, record_snapshot

__all__ = [
    "DrsrEngine",
    "GenerationalEngine",
    "MosrEngine",
    "OffspringPipeline",
    "RunContext",
    "RunTrace",
    "SearchEngine",
    "SrEngine",
    "TraceRecord",
    "archive_from_population",
    "build_context",
    "crowded_tournament",
    "crowding_distance",
    "dominates",
    "environmental_selection",
    "fast_non_dominated_sort",
    "objectives",
    "rank_and_crowding",
    "record_snapshot",
    "run_drsr",
    "run_mosr",
    "run_sr",
    "sr_next_generation",
    "tournament_select",
]
