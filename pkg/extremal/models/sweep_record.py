import uuid

from django.core.serializers.json import DjangoJSONEncoder
from django.db import models

from extremal.models.sweep_run import SweepRun


class SweepRecord(models.Model):
    id = models.UUIDField(primary_key=True, default=uuid.uuid4, editable=False)
    run = models.ForeignKey(SweepRun, on_delete=models.CASCADE, related_name="records")
    n = models.PositiveSmallIntegerField()
    connected_count = models.PositiveIntegerField()
    extremal_count = models.PositiveIntegerField()
    counterexamples = models.JSONField(default=list, encoder=DjangoJSONEncoder)
    bound_violations = models.JSONField(default=list, encoder=DjangoJSONEncoder)

    class Meta:
        db_table = "sweep_records"
        unique_together = ("run", "n")
        ordering = ["n"]

    def __str__(self):
        return f"n={self.n}: {self.connected_count} connected, {self.extremal_count} extremal"

    @staticmethod
    def diff(previous_data, new_data):
        """
        Fields whose values differ between two serialized records.
        Returns a dictionary of changed fields with their old and new values
        """
        if not previous_data or not new_data:
            return {}

        diff_data = {}
        for key in set(previous_data.keys()) | set(new_data.keys()):
            old_value = previous_data.get(key)
            new_value = new_data.get(key)
            if old_value != new_value:
                diff_data[key] = {"old": old_value, "new": new_value}
        return diff_data
