"""
Theorem sweep over enumerated connected graphs.

Work is split into contiguous chunks (mask ranges for labeled graphs, slices
of the canonical list for unlabeled ones). Partial summaries come back in
chunk order and are merged by addition and concatenation, so the result does
not depend on how many workers ran.
"""

from __future__ import annotations

import logging
import multiprocessing as mp
import os
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from core.models.graph import Graph
from core.utils.coloring_utils import chromatic_number
from core.utils.graph6_utils import decode_graph6, encode_graph6
from extremal.utils.enumeration_utils import (
    EnumerationError,
    EnumerationMode,
    check_range,
    count_connected_by_orbits,
    count_connected_labeled,
    labeled_connected,
    sample_connected,
    slot_count,
    unlabeled_connected_forms,
)
from extremal.utils.gap_utils import classify, gap

logger = logging.getLogger(__name__)

TABLE_COLUMNS = ("n", "mode", "connected", "extremal", "counterexamples")
DEFAULT_CHUNK_SIZE = 4096


@dataclass
class EnumerationSummary:
    n: int
    mode: str
    connected_count: int = 0
    extremal_count: int = 0
    counterexamples: list[str] = field(default_factory=list)
    bound_violations: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.counterexamples and not self.bound_violations

    def merge(self, other: EnumerationSummary) -> EnumerationSummary:
        if (self.n, self.mode) != (other.n, other.mode):
            raise EnumerationError(f"Cannot merge summaries for {other.n}/{other.mode} into {self.n}/{self.mode}")
        self.connected_count += other.connected_count
        self.extremal_count += other.extremal_count
        self.counterexamples.extend(other.counterexamples)
        self.bound_violations.extend(other.bound_violations)
        return self

    def as_row(self) -> str:
        return "\t".join(
            str(value)
            for value in (self.n, self.mode, self.connected_count, self.extremal_count, len(self.counterexamples))
        )


def theorem_violation(g: Graph) -> tuple[bool, bool, bool]:
    """Return ``(extremal, counterexample, bound_violation)`` for one connected graph."""
    chi, _ = chromatic_number(g)
    report = gap(g, chi=chi)
    extremal = report.gap == 0
    return extremal, extremal != classify(g).is_extremal_type, report.gap < 0


def check_graphs(n: int, mode: str, graphs: Iterable[Graph]) -> EnumerationSummary:
    summary = EnumerationSummary(n=n, mode=mode)
    for g in graphs:
        extremal, counterexample, violation = theorem_violation(g)
        summary.connected_count += 1
        summary.extremal_count += extremal
        if counterexample:
            summary.counterexamples.append(encode_graph6(g))
        if violation:
            summary.bound_violations.append(encode_graph6(g))
    return summary


def recheck_counterexample(line: str) -> bool:
    """True when the graph6 line still violates the equivalence on its own."""
    _, counterexample, _ = theorem_violation(decode_graph6(line))
    return counterexample


# Worker entry points must be importable module-level callables


def _check_mask_chunk(task: tuple[int, int, int]) -> EnumerationSummary:
    n, start, stop = task
    return check_graphs(n, EnumerationMode.LABELED, labeled_connected(n, start, stop))


def _check_form_chunk(task: tuple[int, str, tuple[str, ...]]) -> EnumerationSummary:
    n, mode, forms = task
    return check_graphs(n, mode, (decode_graph6(form) for form in forms))


def available_jobs() -> int:
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


@contextmanager
def worker_map(jobs: int | None) -> Iterator[Callable]:
    """Yield an order-preserving map; a process pool when more than one job is asked for."""
    jobs = jobs or available_jobs()
    if jobs <= 1:
        yield map
        return

    methods = mp.get_all_start_methods()
    ctx = mp.get_context("fork" if "fork" in methods else None)
    pool = ctx.Pool(processes=jobs)
    try:
        yield pool.imap
        pool.close()
    finally:
        pool.terminate()
        pool.join()


def _merge(n: int, mode: str, parts: Iterable[EnumerationSummary]) -> EnumerationSummary:
    summary = EnumerationSummary(n=n, mode=mode)
    for part in parts:
        summary.merge(part)
    return summary


def _mask_tasks(n: int, chunk_size: int) -> list[tuple[int, int, int]]:
    total = 1 << slot_count(n)
    return [(n, start, min(start + chunk_size, total)) for start in range(0, total, chunk_size)]


def _form_tasks(n: int, mode: str, forms: tuple[str, ...], chunk_size: int):
    return [(n, mode, forms[start : start + chunk_size]) for start in range(0, len(forms), chunk_size)]


def _log_summary(summary: EnumerationSummary) -> None:
    logger.info(
        "n=%d %s: %d connected, %d extremal",
        summary.n,
        summary.mode,
        summary.connected_count,
        summary.extremal_count,
    )
    for line in summary.counterexamples:
        logger.error("Counterexample to the extremal characterization at n=%d: %s", summary.n, line)
    for line in summary.bound_violations:
        logger.error("Graph below the connected-graph edge bound at n=%d: %s", summary.n, line)


def check_theorem(
    n_max: int,
    mode: str = EnumerationMode.LABELED,
    jobs: int | None = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> list[EnumerationSummary]:
    """
    Sweep every connected graph with 1..n_max vertices.

    A graph is a counterexample when exactly one of (gap == 0) and
    (classify != Neither) holds; a negative gap is recorded separately.
    Labeled counts are checked against the exponential-formula recount,
    unlabeled ones against the Burnside orbit count.
    """
    if mode not in (EnumerationMode.LABELED, EnumerationMode.UNLABELED):
        raise EnumerationError(f"check_theorem sweeps labeled or unlabeled graphs, not {mode!r}")
    check_range(n_max, mode)

    summaries = []
    with worker_map(jobs) as run:
        for n in range(1, n_max + 1):
            if mode == EnumerationMode.LABELED:
                summary = _merge(n, mode, run(_check_mask_chunk, _mask_tasks(n, chunk_size)))
                expected = count_connected_labeled(n)
                if summary.connected_count != expected:
                    raise EnumerationError(
                        f"n={n}: enumeration found {summary.connected_count} labeled connected graphs, "
                        f"recount gives {expected}"
                    )
            else:
                forms = unlabeled_connected_forms(n)
                expected = count_connected_by_orbits(n)
                if len(forms) != expected:
                    raise EnumerationError(
                        f"n={n}: enumeration found {len(forms)} unlabeled connected graphs, "
                        f"orbit count gives {expected}"
                    )
                summary = _merge(n, mode, run(_check_form_chunk, _form_tasks(n, mode, forms, chunk_size)))
            _log_summary(summary)
            summaries.append(summary)
    return summaries


def sample_theorem(
    n: int, samples: int, seed: int, jobs: int | None = 1, chunk_size: int = DEFAULT_CHUNK_SIZE
) -> EnumerationSummary:
    """Check ``samples`` uniform random edge subsets of K_n (connected ones only)."""
    forms = tuple(encode_graph6(g) for g in sample_connected(n, samples, seed))
    mode = EnumerationMode.SAMPLED
    with worker_map(jobs) as run:
        summary = _merge(n, mode, run(_check_form_chunk, _form_tasks(n, mode, forms, chunk_size)))
    _log_summary(summary)
    return summary


def summary_table(summaries: Iterable[EnumerationSummary]) -> str:
    lines = ["\t".join(TABLE_COLUMNS)]
    lines.extend(summary.as_row() for summary in summaries)
    return "\n".join(lines) + "\n"
