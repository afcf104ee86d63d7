from rest_framework import serializers

from extremal.models import SweepRecord, SweepRun


class SweepRecordSerializer(serializers.ModelSerializer):
    class Meta:
        model = SweepRecord
        fields = ("n", "connected_count", "extremal_count", "counterexamples", "bound_violations")
        read_only_fields = fields


class SweepRunSerializer(serializers.ModelSerializer):
    records = SweepRecordSerializer(many=True, read_only=True)

    class Meta:
        model = SweepRun
        fields = ("id", "mode", "max_n", "jobs", "seed", "samples", "passed", "created_at", "records")
        read_only_fields = fields
