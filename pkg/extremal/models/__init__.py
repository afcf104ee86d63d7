from .sweep_record import SweepRecord
from .sweep_run import SweepRun

__all__ = ["SweepRecord", "SweepRun"]
