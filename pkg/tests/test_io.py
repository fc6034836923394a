import io
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from liftweber import InstanceError, Point, ProblemInstance, oracle_solve, solve
from liftweber.io import (
    ParseError,
    dumps,
    generate_instance,
    instance_to_dict,
    num,
    parse_instance,
    parse_locations,
    report_to_dict,
)

from conftest import EXAMPLE1_CSV, EXAMPLE1_LP, EXAMPLE1_LT


class TestParseInstance:
    def test_csv_example1(self, example1):
        inst = parse_instance(io.StringIO(EXAMPLE1_CSV), "csv")
        assert inst == example1

    def test_csv_header_and_blank_lines(self, example1):
        text = "x,y,w\n\n" + EXAMPLE1_CSV + "\n"
        assert parse_instance(io.StringIO(text), "csv") == example1

    def test_csv_header_reorders_columns(self):
        inst = parse_instance(io.StringIO("w,x,y\n2,5,3\n"), "csv")
        assert inst.points[0].location == Point(5, 3) and inst.points[0].weight == 2

    def test_json_single(self):
        inst = parse_instance(io.StringIO('{"points":[{"x":5,"y":3,"w":2}]}'))
        assert inst.m == 1
        assert inst.points[0].location == Point(5, 3) and inst.points[0].weight == 2

    def test_json_metadata(self):
        inst = parse_instance(io.StringIO(
            '{"name": "ex", "description": "d", "points":[{"x":1,"y":1,"w":1}]}'
        ))
        assert (inst.name, inst.description) == ("ex", "d")

    def test_sniff_by_suffix(self, tmp_path, example1):
        p = tmp_path / "inst.csv"
        p.write_text(EXAMPLE1_CSV)
        assert parse_instance(p) == example1
        q = tmp_path / "inst.json"
        q.write_text(dumps(instance_to_dict(example1)))
        assert parse_instance(q) == example1

    def test_zero_weight(self):
        with pytest.raises(InstanceError, match="non-positive weight at point 0"):
            parse_instance(io.StringIO("1,2,0"), "csv")

    def test_negative_weight_json(self):
        with pytest.raises(InstanceError, match="non-positive weight at point 1"):
            parse_instance(io.StringIO('{"points":[{"x":0,"y":0,"w":1},{"x":0,"y":0,"w":-2}]}'))

    @pytest.mark.parametrize("text", ["", "x,y,w\n", '{"points": []}'])
    def test_empty(self, text):
        with pytest.raises(InstanceError, match="empty instance"):
            parse_instance(io.StringIO(text), "csv" if "{" not in text else "json")

    def test_malformed_number_reports_line_and_field(self):
        with pytest.raises(ParseError, match=r"line 2, field 'y'"):
            parse_instance(io.StringIO("1,1,1\n2,abc,1\n"), "csv")

    def test_malformed_first_row_not_taken_as_header(self):
        with pytest.raises(ParseError, match=r"line 1, field 'y'"):
            parse_instance(io.StringIO("1,abc,1\n2,2,1\n"), "csv")

    def test_short_row(self):
        with pytest.raises(ParseError, match="line 1"):
            parse_instance(io.StringIO("1,2\n"), "csv")

    @pytest.mark.parametrize("text", ["{", '{"pts": []}', '{"points":[{"x":"a","y":0,"w":1}]}',
                                      '{"points":[{"x":true,"y":0,"w":1}]}', '{"points":[3]}'])
    def test_bad_json(self, text):
        with pytest.raises(ParseError):
            parse_instance(io.StringIO(text), "json")

    def test_non_finite(self):
        with pytest.raises(ParseError):
            parse_instance(io.StringIO("nan,1,1\n"), "csv")

    def test_merge_tol(self):
        inst = parse_instance(io.StringIO("0,1,1\n5,1.0000001,1\n"), "csv", merge_tol=1e-6)
        assert inst.distinct_ordinates() == [1.0]


class TestLocations:
    def test_json_objects(self):
        locs = parse_locations(io.StringIO('{"locations":[{"x":4,"y":4},{"x":0,"y":1}]}'))
        assert locs == [Point(4, 4), Point(0, 1)]

    def test_json_pairs(self):
        assert parse_locations(io.StringIO("[[1, 2]]"), "json") == [Point(1, 2)]

    def test_csv(self):
        assert parse_locations(io.StringIO("x,y\n0,2\n"), "csv") == [Point(0, 2)]

    def test_empty(self):
        with pytest.raises(InstanceError, match="no permissible locations"):
            parse_locations(io.StringIO('{"locations": []}'))


instances = st.builds(
    ProblemInstance.from_lists,
    st.lists(st.tuples(st.floats(-1e6, 1e6), st.floats(-1e6, 1e6)), min_size=3, max_size=3),
    st.lists(st.floats(1e-6, 1e6), min_size=3, max_size=3),
)


class TestSerialization:
    @given(instances)
    def test_round_trip(self, inst):
        text = dumps(instance_to_dict(inst))
        assert parse_instance(io.StringIO(text)) == inst

    @pytest.mark.parametrize("v, expected", [(4.0, 4), (-0.0, 0), (0.5, 0.5), (1e300, 1e300)])
    def test_num(self, v, expected):
        out = num(v)
        assert out == expected and type(out) is type(expected)

    def test_report_shape(self, example1):
        report = solve(example1)
        doc = report_to_dict(report, oracle=oracle_solve(example1), match=True)
        assert doc["optimum"] == [4, 4] and doc["optimum_value"] == 50
        assert [c["source"] for c in doc["candidates"]] == [
            "procedure1:4", "procedure1:1", "procedure1:2"
        ]
        assert [c["objective"] for c in doc["candidates"]] == [50, 70, 62]
        assert doc["procedure2"] == {"case": "excluded", "k": 3}
        assert doc["oracle"]["match"] is True and doc["oracle"]["optimum_value"] == 50
        assert json.loads(dumps(doc)) == doc

    def test_report_without_candidates(self, example1):
        doc = report_to_dict(solve(example1), all_candidates=False)
        assert "candidates" not in doc and "oracle" not in doc

    def test_interval_serialized(self):
        doc = report_to_dict(solve(ProblemInstance.from_lists([(1, 2), (6, 2)], [1, 1])))
        assert doc["candidates"][0]["interval"] == [1, 6]
        assert doc["candidates"][0]["point"] == [3.5, 2]


class TestGenerate:
    def test_deterministic(self):
        a = generate_instance(4, (-5, 5), (1, 5), seed=1)
        b = generate_instance(4, (-5, 5), (1, 5), seed=1)
        assert a == b
        assert a != generate_instance(4, (-5, 5), (1, 5), seed=2)

    def test_single(self):
        inst = generate_instance(1, seed=3)
        assert inst.m == 1 and solve(inst).optimum_value == 0

    def test_ranges_respected(self):
        inst = generate_instance(200, (-2, 3), (2, 4), seed=0)
        assert set(inst.abscissae.tolist()) <= set(range(-2, 4))
        assert set(inst.weights.tolist()) <= {2, 3, 4}

    @pytest.mark.parametrize("kw", [dict(m=0), dict(m=3, coord_range=(2, 1)),
                                    dict(m=3, weight_range=(0, 3)), dict(m=3, weight_range=(3, 2))])
    def test_invalid(self, kw):
        with pytest.raises(ValueError):
            generate_instance(**kw)
