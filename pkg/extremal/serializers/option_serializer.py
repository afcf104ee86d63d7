from django.conf import settings
from rest_framework import serializers

from core.models.graph import GraphError
from extremal.utils.decorated_utils import parse_tree_spec
from extremal.utils.enumeration_utils import MAX_LABELED_N, MAX_N, EnumerationMode
from extremal.utils.lemma_utils import MAX_DECORATED_VERTICES


class VerifyOptionsSerializer(serializers.Serializer):
    max_n = serializers.IntegerField(min_value=1, max_value=MAX_N)
    mode = serializers.ChoiceField(
        choices=[EnumerationMode.LABELED, EnumerationMode.UNLABELED], required=False, allow_null=True
    )
    jobs = serializers.IntegerField(min_value=0, required=False, allow_null=True)
    sample = serializers.IntegerField(min_value=1, required=False, allow_null=True)
    seed = serializers.IntegerField(min_value=0, required=False, allow_null=True)
    record = serializers.BooleanField(default=False)

    def validate(self, data):
        if data.get("sample"):
            if data.get("mode") == EnumerationMode.UNLABELED:
                raise serializers.ValidationError({"sample": "--sample draws labeled edge subsets; drop --mode unlabeled"})
            data["mode"] = EnumerationMode.SAMPLED
        elif data.get("mode") is None:
            data["mode"] = EnumerationMode.LABELED

        if data["mode"] == EnumerationMode.LABELED and data["max_n"] > MAX_LABELED_N:
            raise serializers.ValidationError(
                {"max_n": f"Labeled sweeps stop at {MAX_LABELED_N}; use --sample for larger n"}
            )

        if data.get("jobs") is None:
            data["jobs"] = settings.GRAPH_LAB["DEFAULT_JOBS"]
        if data.get("seed") is None:
            data["seed"] = settings.GRAPH_LAB["DEFAULT_SEED"]
        return data


class CheckLemmasOptionsSerializer(serializers.Serializer):
    trials = serializers.IntegerField(min_value=1, required=False, allow_null=True)
    seed = serializers.IntegerField(min_value=0, required=False, allow_null=True)
    max_n = serializers.IntegerField(min_value=2, max_value=7, required=False, allow_null=True)
    max_vertices = serializers.IntegerField(min_value=11, max_value=MAX_DECORATED_VERTICES, required=False, allow_null=True)

    def validate(self, data):
        defaults = settings.GRAPH_LAB
        for key, setting in (
            ("trials", "DEFAULT_TRIALS"),
            ("seed", "DEFAULT_SEED"),
            ("max_n", "LEMMA_MAX_N"),
            ("max_vertices", "DECORATED_MAX_VERTICES"),
        ):
            if data.get(key) is None:
                data[key] = defaults[setting]
        return data


class GenOptionsSerializer(serializers.Serializer):
    KIND_CHOICES = ["typeA", "typeB", "cycle"]

    kind = serializers.ChoiceField(choices=KIND_CHOICES)
    core = serializers.IntegerField(min_value=1)
    trees = serializers.CharField(allow_blank=True, default="")
    seed = serializers.IntegerField(min_value=0, required=False, allow_null=True)
    count = serializers.IntegerField(min_value=1, default=1)

    def validate(self, data):
        kind, core = data["kind"], data["core"]
        if kind == "typeB" and core == 3:
            raise serializers.ValidationError(
                {"core": "A 3-cycle is the triangle K_3, which classifies as TypeA; use --kind typeA --core 3"}
            )
        if kind == "typeB" and (core < 5 or core % 2 == 0):
            raise serializers.ValidationError({"core": "typeB needs an odd cycle length of at least 5"})
        if kind == "cycle" and core < 3:
            raise serializers.ValidationError({"core": "A cycle needs at least 3 vertices"})

        try:
            entries = parse_tree_spec(data["trees"])
        except GraphError as e:
            raise serializers.ValidationError({"trees": str(e)})
        for anchor, _ in entries:
            if anchor is not None and anchor >= core:
                raise serializers.ValidationError({"trees": f"Anchor {anchor} is not a core vertex (0..{core - 1})"})

        data["tree_entries"] = entries
        if data.get("seed") is None:
            data["seed"] = settings.GRAPH_LAB["DEFAULT_SEED"]
        return data
