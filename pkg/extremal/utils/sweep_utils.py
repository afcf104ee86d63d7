import logging

from django.db import transaction

from extremal.models import SweepRecord, SweepRun
from extremal.serializers.sweep_serializer import SweepRecordSerializer, SweepRunSerializer

logger = logging.getLogger(__name__)


@transaction.atomic
def record_sweep(summaries, mode, max_n, jobs, seed=None, samples=None):
    """
    Store one sweep and its per-n summaries

    Args:
        summaries: EnumerationSummary list, in n order
        mode: labeled, unlabeled or sampled
        max_n: Largest vertex count swept
        jobs: Worker count used for the run
        seed: Seed for sampled sweeps
        samples: Number of random edge subsets for sampled sweeps
    """
    run = SweepRun.objects.create(
        mode=mode,
        max_n=max_n,
        jobs=jobs,
        seed=seed if samples else None,
        samples=samples,
        passed=all(summary.holds for summary in summaries),
    )
    SweepRecord.objects.bulk_create(
        [
            SweepRecord(
                run=run,
                n=summary.n,
                connected_count=summary.connected_count,
                extremal_count=summary.extremal_count,
                counterexamples=summary.counterexamples,
                bound_violations=summary.bound_violations,
            )
            for summary in summaries
        ]
    )
    logger.info("Recorded sweep %s", run_summary(run))
    return run


def run_summary(run):
    """Serialized run with its records; the payload written to the log when a sweep is stored"""
    return SweepRunSerializer(run).data


def get_run_data(run):
    """
    Serialized records of a run, keyed by n

    Args:
        run: The SweepRun object
    """
    return {record["n"]: record for record in SweepRecordSerializer(run.records.all(), many=True).data}


def compare_runs(previous_run, run):
    """
    Per-n differences between two runs; an n present in only one run is reported with None on the other side
    """
    old_data = get_run_data(previous_run)
    new_data = get_run_data(run)

    changes = {}
    for n in sorted(set(old_data) | set(new_data)):
        old_record, new_record = old_data.get(n), new_data.get(n)
        if old_record is None or new_record is None:
            changes[n] = {"record": {"old": old_record, "new": new_record}}
            continue
        diff = SweepRecord.diff(dict(old_record), dict(new_record))
        if diff:
            changes[n] = diff
    return changes


def drift_since_previous(run):
    """Changes against the previous comparable run, logged per n. Empty when there is nothing to compare"""
    previous_run = run.previous()
    if previous_run is None:
        logger.info("No earlier %s sweep to n=%d to compare with", run.mode, run.max_n)
        return {}

    changes = compare_runs(previous_run, run)
    for n, diff in changes.items():
        for field, values in diff.items():
            logger.error("Sweep drift at n=%d in %s: %s -> %s", n, field, values["old"], values["new"])
    return changes
