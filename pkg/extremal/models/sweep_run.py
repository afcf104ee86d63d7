import uuid

from django.db import models

from extremal.utils.enumeration_utils import EnumerationMode


class SweepRun(models.Model):
    id = models.UUIDField(primary_key=True, default=uuid.uuid4, editable=False)
    mode = models.CharField(max_length=20, choices=EnumerationMode.choices)
    max_n = models.PositiveSmallIntegerField()
    jobs = models.PositiveSmallIntegerField(default=1)
    seed = models.BigIntegerField(null=True, blank=True)
    samples = models.PositiveIntegerField(null=True, blank=True)
    passed = models.BooleanField(default=True)
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        db_table = "sweep_runs"
        ordering = ["-created_at"]
        indexes = [
            models.Index(fields=["mode", "max_n"], name="sweep_runs_mode_max_n_idx"),
        ]

    def __str__(self):
        return f"{self.mode} sweep to n={self.max_n} at {self.created_at}"

    def previous(self):
        """Most recent earlier run with the same mode, range and sample settings"""
        return (
            SweepRun.objects.filter(
                mode=self.mode,
                max_n=self.max_n,
                seed=self.seed,
                samples=self.samples,
                created_at__lt=self.created_at,
            )
            .exclude(pk=self.pk)
            .order_by("-created_at")
            .first()
        )
