# schubert_app/serializers.py
"""JSON shapes for everything the commands print, export or cache.

Coefficients are decimal strings so that no consumer silently rounds them.
``canonical_json`` is the only way output is rendered: sorted keys, two-space
indent, DRF's encoder.
"""

import json

from rest_framework import serializers
from rest_framework.utils.encoders import JSONEncoder

from .exceptions import InvalidPermutation
from .weyl import Permutation


class BigIntegerStringField(serializers.Field):
    default_error_messages = {"invalid": "Expected an integer or a decimal string."}

    def to_representation(self, value):
        return str(int(value))

    def to_internal_value(self, data):
        if isinstance(data, bool):
            self.fail("invalid")
        try:
            return int(str(data), 10)
        except ValueError:
            self.fail("invalid")


class PermutationField(serializers.Field):
    default_error_messages = {"invalid": "Expected a permutation in one-line notation."}

    def to_representation(self, value):
        return value.to_list()

    def to_internal_value(self, data):
        if not isinstance(data, (list, tuple)):
            self.fail("invalid")
        try:
            return Permutation(tuple(data))
        except (InvalidPermutation, TypeError, ValueError):
            self.fail("invalid")


class TermSerializer(serializers.Serializer):
    perm = PermutationField()
    coeff = BigIntegerStringField()


class CohClassSerializer(serializers.Serializer):
    window = serializers.IntegerField()
    convention = serializers.CharField()
    terms = TermSerializer(many=True, source="term_list")


class KClassSerializer(serializers.Serializer):
    window = serializers.IntegerField()
    basis = serializers.CharField(source="basis.value")
    convention = serializers.SerializerMethodField()
    terms = TermSerializer(many=True, source="term_list")

    def get_convention(self, obj):
        return "dimension"


class CoefficientMapSerializer(serializers.Serializer):
    """A bare {perm: coeff} association such as a Chevalley expansion."""

    window = serializers.IntegerField()
    terms = serializers.SerializerMethodField()

    def get_terms(self, obj):
        ordered = sorted(obj["terms"].items(), key=lambda item: item[0].sort_key)
        return [{"perm": w.to_list(), "coeff": str(c)} for w, c in ordered]


class PolySerializer(serializers.Serializer):
    text = serializers.SerializerMethodField()
    terms = serializers.SerializerMethodField()

    def get_text(self, obj):
        return str(obj)

    def get_terms(self, obj):
        return [{"exponents": list(exps), "coeff": str(c)} for exps, c in obj.sorted_terms()]


class RationalSerializer(serializers.Serializer):
    numerator = serializers.SerializerMethodField()
    denominator = serializers.SerializerMethodField()

    def get_numerator(self, obj):
        return str(obj.p)

    def get_denominator(self, obj):
        return str(obj.q)


class HilbertPolySerializer(serializers.Serializer):
    text = serializers.SerializerMethodField()
    coefficients = RationalSerializer(many=True)

    def get_text(self, obj):
        return str(obj)


class GrassTermSerializer(serializers.Serializer):
    index = serializers.ListField(child=serializers.IntegerField(), source="index.indices")
    coeff = BigIntegerStringField()


def grass_terms(terms):
    ordered = sorted(terms.items(), key=lambda item: item[0].sort_key)
    return GrassTermSerializer([{"index": k, "coeff": c} for k, c in ordered], many=True).data


def partition_terms(terms):
    ordered = sorted(terms.items(), key=lambda item: (item[0].area, item[0].parts))
    return [
        {"partition": list(p.parts), "convention": p.convention.value, "coeff": str(c)}
        for p, c in ordered
    ]


class ConeResultSerializer(serializers.Serializer):
    d = serializers.IntegerField()
    c2 = BigIntegerStringField()
    c1 = BigIntegerStringField()
    c0 = BigIntegerStringField()
    window = serializers.ListField(child=serializers.IntegerField())
    gaps = serializers.IntegerField()
    violates_signs = serializers.BooleanField()
    hilbert = HilbertPolySerializer()


class ReportSerializer(serializers.Serializer):
    suite = serializers.CharField()
    parameters = serializers.JSONField()
    passed = serializers.BooleanField()
    counts = serializers.JSONField()
    notes = serializers.ListField(child=serializers.CharField())
    witnesses = serializers.JSONField(source="sorted_witnesses")

    def to_representation(self, instance):
        data = super().to_representation(instance)
        data["pass"] = data.pop("passed")
        return data


class PosetSerializer(serializers.Serializer):
    elements = serializers.SerializerMethodField()
    covers = serializers.SerializerMethodField()

    def get_elements(self, obj):
        return [str(x) for x in obj.elements]

    def get_covers(self, obj):
        return [[str(low), str(up)] for low, up in obj.cover_pairs]


class TableEntrySerializer(serializers.Serializer):
    v = PermutationField()
    w = PermutationField()
    x = PermutationField()
    coeff = BigIntegerStringField()


class TablePayloadSerializer(serializers.Serializer):
    theory = serializers.ChoiceField(choices=["H", "K"])
    window = serializers.IntegerField(min_value=1)
    basis = serializers.CharField()
    engine_version = serializers.CharField()
    entries = TableEntrySerializer(many=True)

    def validate(self, attrs):
        for entry in attrs["entries"]:
            if not (entry["v"].window == entry["w"].window == entry["x"].window == attrs["window"]):
                raise serializers.ValidationError("table entry outside the table's window")
        return attrs


def table_entries(table):
    """Flatten {(v, w): {x: c}} into sorted entry dicts."""
    entries = []
    for (v, w), products in table.items():
        for x, c in products.items():
            if c:
                entries.append({"v": v, "w": w, "x": x, "coeff": c})
    entries.sort(key=lambda e: (e["v"].sort_key, e["w"].sort_key, e["x"].sort_key))
    return entries


def table_from_entries(entries):
    table = {}
    for entry in entries:
        table.setdefault((entry["v"], entry["w"]), {})[entry["x"]] = entry["coeff"]
    return table


def canonical_json(data):
    return json.dumps(data, cls=JSONEncoder, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def to_dot(poset, name="bruhat"):
    lines = [f"digraph {name} {{"]
    for element in poset.elements:
        lines.append(f'  "{element}";')
    for low, up in poset.cover_pairs:
        lines.append(f'  "{low}" -> "{up}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
