import json

from django.test import SimpleTestCase

from schubert_app import cohomology, ktheory
from schubert_app.grassmann import GrassIndex, grass_poset
from schubert_app.reports import VerificationReport
from schubert_app.serializers import (
    CohClassSerializer,
    KClassSerializer,
    PosetSerializer,
    ReportSerializer,
    TablePayloadSerializer,
    canonical_json,
    grass_terms,
    table_entries,
    table_from_entries,
    to_dot,
)
from schubert_app.weyl import Permutation, bruhat_poset


def perm(text):
    return Permutation.from_string(text)


class ClassSerializerTests(SimpleTestCase):
    def test_cohomology_class(self):
        alpha = cohomology.CohClass(3, {perm("2,1,3"): 1, perm("1,3,2"): 10 ** 30})
        data = CohClassSerializer(alpha).data
        self.assertEqual(data["convention"], "dimension")
        self.assertEqual(data["terms"], [
            {"perm": [1, 3, 2], "coeff": str(10 ** 30)},
            {"perm": [2, 1, 3], "coeff": "1"},
        ])

    def test_k_class_keeps_its_basis(self):
        data = KClassSerializer(ktheory.k_class(perm("2,1"), "I")).data
        self.assertEqual(data["basis"], "I")
        self.assertEqual(data["window"], 2)

    def test_grass_terms(self):
        terms = {GrassIndex(2, 4, (2, 3)): 1, GrassIndex(2, 4, (1, 4)): 1}
        self.assertEqual([t["index"] for t in grass_terms(terms)], [[1, 4], [2, 3]])


class CanonicalJsonTests(SimpleTestCase):
    def test_sorted_keys_and_trailing_newline(self):
        text = canonical_json({"b": 1, "a": [1, 2]})
        self.assertTrue(text.endswith("\n"))
        self.assertLess(text.index('"a"'), text.index('"b"'))

    def test_report_uses_pass_key(self):
        report = VerificationReport("mobius", {"n": 3})
        report.check(False, "subword", {"v": [1, 2], "w": [2, 1]})
        data = json.loads(canonical_json(ReportSerializer(report).data))
        self.assertFalse(data["pass"])
        self.assertNotIn("passed", data)
        self.assertEqual(data["witnesses"], [{"check": "subword", "v": [1, 2], "w": [2, 1]}])


class TablePayloadTests(SimpleTestCase):
    def test_entries_round_trip(self):
        table = cohomology.structure_constants(2)
        entries = table_entries(table)
        self.assertEqual(len(entries), 3)
        self.assertEqual(table_from_entries(entries), {key: value for key, value in table.items() if value})

    def test_validation(self):
        payload = {
            "theory": "H",
            "window": 2,
            "basis": "schubert",
            "engine_version": "1.0.0",
            "entries": [{"v": [2, 1], "w": [2, 1], "x": [2, 1], "coeff": "1"}],
        }
        serializer = TablePayloadSerializer(data=payload)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.validated_data["entries"][0]["x"], perm("2,1"))

        payload["entries"][0]["x"] = [1, 2, 3]
        self.assertFalse(TablePayloadSerializer(data=payload).is_valid())
        payload["entries"][0]["x"] = [1, 1]
        self.assertFalse(TablePayloadSerializer(data=payload).is_valid())


class PosetExportTests(SimpleTestCase):
    def test_json_shape(self):
        data = PosetSerializer(bruhat_poset(2)).data
        self.assertEqual(data["elements"], ["1,2", "2,1"])
        self.assertEqual(data["covers"], [["1,2", "2,1"]])

    def test_dot(self):
        text = to_dot(grass_poset(1, 2), "grassmannian_1_2")
        self.assertEqual(text, 'digraph grassmannian_1_2 {\n  "1";\n  "2";\n  "1" -> "2";\n}\n')
