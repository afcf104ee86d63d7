from rest_framework import serializers

from core.utils.format_utils import GraphFormat, parse_graphs
from core.utils.graph6_utils import GraphFormatError


class GraphSourceSerializer(serializers.Serializer):
    """Validates raw graph input and parses it into ``graphs``."""

    text = serializers.CharField(allow_blank=True, trim_whitespace=False)
    format = serializers.ChoiceField(choices=GraphFormat.choices, required=False, allow_null=True)
    require_connected = serializers.BooleanField(default=False)

    def validate(self, data):
        try:
            graphs = parse_graphs(data["text"], data.get("format"))
        except GraphFormatError as e:
            raise serializers.ValidationError({"text": str(e)})

        if not graphs:
            raise serializers.ValidationError({"text": "Input contains no graphs"})

        if data["require_connected"]:
            for index, g in enumerate(graphs, start=1):
                if g.n < 1 or not g.is_connected():
                    raise serializers.ValidationError({"text": f"Graph {index} ({g}) is not connected"})

        data["graphs"] = graphs
        return data
