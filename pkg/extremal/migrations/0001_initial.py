# Generated by Django 5.2.1

import uuid

import django.core.serializers.json
import django.db.models.deletion
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name="SweepRun",
            fields=[
                ("id", models.UUIDField(default=uuid.uuid4, editable=False, primary_key=True, serialize=False)),
                (
                    "mode",
                    models.CharField(
                        choices=[("labeled", "Labeled"), ("unlabeled", "Unlabeled"), ("sampled", "Sampled")],
                        max_length=20,
                    ),
                ),
                ("max_n", models.PositiveSmallIntegerField()),
                ("jobs", models.PositiveSmallIntegerField(default=1)),
                ("seed", models.BigIntegerField(blank=True, null=True)),
                ("samples", models.PositiveIntegerField(blank=True, null=True)),
                ("passed", models.BooleanField(default=True)),
                ("created_at", models.DateTimeField(auto_now_add=True)),
            ],
            options={
                "db_table": "sweep_runs",
                "ordering": ["-created_at"],
                "indexes": [models.Index(fields=["mode", "max_n"], name="sweep_runs_mode_max_n_idx")],
            },
        ),
        migrations.CreateModel(
            name="SweepRecord",
            fields=[
                ("id", models.UUIDField(default=uuid.uuid4, editable=False, primary_key=True, serialize=False)),
                ("n", models.PositiveSmallIntegerField()),
                ("connected_count", models.PositiveIntegerField()),
                ("extremal_count", models.PositiveIntegerField()),
                (
                    "counterexamples",
                    models.JSONField(default=list, encoder=django.core.serializers.json.DjangoJSONEncoder),
                ),
                (
                    "bound_violations",
                    models.JSONField(default=list, encoder=django.core.serializers.json.DjangoJSONEncoder),
                ),
                (
                    "run",
                    models.ForeignKey(
                        on_delete=django.db.models.deletion.CASCADE,
                        related_name="records",
                        to="extremal.sweeprun",
                    ),
                ),
            ],
            options={
                "db_table": "sweep_records",
                "ordering": ["n"],
                "unique_together": {("run", "n")},
            },
        ),
    ]
