import random

import pytest
from hypothesis import given, strategies as st

from sdc.errors import DiagramSyntaxError, DiagramValidationError, SchemaError
from sdc.formats import emit_json, parse_dsl, parse_json
from sdc.model import StateKind, ViolationCode

from conftest import random_valid_diagram


class TestParseJson:
    def test_school_fixture(self, school, fixtures_dir):
        parsed = parse_json((fixtures_dir / "school.json").read_bytes())
        assert parsed == school

    def test_empty_object_is_schema_error(self):
        with pytest.raises(SchemaError):
            parse_json(b"{}")

    def test_unknown_field_is_schema_error(self, school):
        import json
        doc = json.loads(emit_json(school))
        doc["color"] = "blue"
        with pytest.raises(SchemaError):
            parse_json(json.dumps(doc))

    def test_dangling_start_is_validation_error(self, school, fixtures_dir):
        text = (fixtures_dir / "school.json").read_text().replace(
            '"start": "Outside"', '"start": "Pool"')
        with pytest.raises(DiagramValidationError) as info:
            parse_json(text.encode())
        assert ViolationCode.MISSING_START in info.value.report.codes()

    def test_malformed_json_reports_position(self):
        with pytest.raises(DiagramSyntaxError) as info:
            parse_json(b'{"title": "X",\n  "oops"')
        assert info.value.line == 2

    def test_position_must_be_pair(self):
        with pytest.raises(SchemaError):
            parse_json(b'{"title": "", "start": "A",'
                       b' "states": [{"name": "A", "x": 1}], "transitions": []}')

    def test_kind_defaults_to_unclassified(self):
        d = parse_json(b'{"title": "", "start": "A",'
                       b' "states": [{"name": "A"}], "transitions": []}')
        assert d.states[0].kind is StateKind.UNCLASSIFIED

    def test_bad_kind_rejected(self):
        with pytest.raises(SchemaError):
            parse_json(b'{"title": "", "start": "A",'
                       b' "states": [{"name": "A", "kind": "imaginary"}],'
                       b' "transitions": []}')


class TestEmitJson:
    def test_golden_bytes(self, school, fixtures_dir):
        assert emit_json(school) == (fixtures_dir / "school.json").read_bytes()

    def test_minimal_diagram(self):
        d = parse_dsl("state Start @start")
        assert emit_json(d) == (
            b'{\n  "title": "",\n  "start": "Start",\n  "states": [\n'
            b'    {\n      "name": "Start",\n      "kind": "unclassified"\n    }\n'
            b'  ],\n  "transitions": []\n}\n')

    def test_deterministic(self, school):
        assert emit_json(school) == emit_json(school)

    def test_positions_round_trip(self):
        d = parse_json(b'{"title": "", "start": "A",'
                       b' "states": [{"name": "A", "kind": "concrete",'
                       b' "x": 12.5, "y": -3.0}], "transitions": []}')
        assert d.states[0].position == (12.5, -3.0)
        assert parse_json(emit_json(d)) == d


class TestRoundTrip:
    @given(st.integers(0, 10_000))
    def test_json_identity(self, seed):
        d = random_valid_diagram(random.Random(seed))
        assert parse_json(emit_json(d)) == d

    def test_thousand_seeded_diagrams(self):
        for seed in range(1000):
            d = random_valid_diagram(random.Random(seed))
            assert parse_json(emit_json(d)) == d

    @pytest.mark.parametrize("name", ["school", "dragon"])
    def test_dsl_and_json_fixtures_agree(self, fixtures_dir, name):
        from_dsl = parse_dsl((fixtures_dir / f"{name}.sd").read_text())
        from_json = parse_json((fixtures_dir / f"{name}.json").read_bytes())
        assert from_dsl == from_json


class TestParseDsl:
    def test_smallest_program(self):
        d = parse_dsl("state Outside @start\nstate Hallway\n"
                      "GoInside: Outside -> Hallway")
        assert d.state_names() == ("Outside", "Hallway")
        assert d.start == "Outside"
        assert d.transitions[0].name == "GoInside"

    def test_comments_and_blank_lines(self):
        d = parse_dsl("\n// a comment\nstate A @start\n\n// another\n")
        assert d.state_names() == ("A",)

    def test_kind_flags(self):
        d = parse_dsl("state A @start #concrete\nstate B #abstract\nstate C")
        assert [s.kind for s in d.states] == [
            StateKind.CONCRETE, StateKind.ABSTRACT, StateKind.UNCLASSIFIED]

    def test_title(self):
        assert parse_dsl("title My Game\nstate A @start").title == "My Game"

    def test_lone_transition_is_dangling(self):
        with pytest.raises(DiagramValidationError) as info:
            parse_dsl("GoInside: Outside -> Hallway")
        assert ViolationCode.DANGLING_ENDPOINT in info.value.report.codes()

    @pytest.mark.parametrize("text, line", [
        ("state A @start\nwat", 2),
        ("state", 1),
        ("state A @start\nGo: A ->", 2),
        ("state A @start\nGo: -> A", 2),
        ("state A @start\nstate A @start", 2),
        ("state A @start #concrete #abstract", 1),
        ("title A\ntitle B", 2),
        ("state A #special", 1),
    ])
    def test_syntax_errors_carry_line_numbers(self, text, line):
        with pytest.raises(DiagramSyntaxError) as info:
            parse_dsl(text)
        assert info.value.line == line

    def test_bad_identifier_is_validation_not_syntax(self):
        with pytest.raises(DiagramValidationError) as info:
            parse_dsl("state lowercase @start")
        assert info.value.report.codes() == [ViolationCode.BAD_IDENTIFIER]
