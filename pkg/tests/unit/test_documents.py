import json

import pytest

from constructible.cells import Cell, ConstructibleSet
from exceptions import InvalidDocumentError, InvalidVariableNameError
from groebner.ideal import Ideal
from infinitesimal.chart import ChartConnection, base_ring
from parsers.documents import (
    chart_from_dict,
    chart_to_dict,
    constructible_from_dict,
    constructible_to_dict,
    dumps,
    load_chart,
    load_constructible,
    load_presentation,
    presentation_from_dict,
    presentation_to_dict,
    read_document,
    write_document,
)

AXIS = {"variables": ["x", "y"], "A": [["-y"], ["x"]], "y": ["1", "0"]}


class TestReadWrite:

    def test_missing_file(self, temp_dir):
        with pytest.raises(InvalidDocumentError):
            read_document(temp_dir / "no_existe.json")

    def test_invalid_json(self, temp_dir):
        path = temp_dir / "roto.json"
        path.write_text("{", encoding="utf-8")
        with pytest.raises(InvalidDocumentError):
            read_document(path)

    def test_not_an_object(self, write_json):
        with pytest.raises(InvalidDocumentError):
            read_document(write_json("lista.json", [1, 2]))

    def test_write_is_atomic_and_deterministic(self, temp_dir):
        path = temp_dir / "salida.json"
        write_document(path, {"b": 1, "a": "ξ"})
        text = path.read_text(encoding="utf-8")
        assert text == dumps({"b": 1, "a": "ξ"})
        assert text.endswith("\n")
        assert "ξ" in text
        assert not (temp_dir / "salida.json.tmp").exists()


class TestPresentationDocuments:

    def test_load(self, write_json, axis_presentation):
        pres = load_presentation(write_json("axis.json", AXIS))
        assert pres == axis_presentation

    def test_round_trip(self, axis_presentation):
        data = presentation_to_dict(axis_presentation)
        assert data == AXIS
        assert presentation_from_dict(data) == axis_presentation

    def test_free_module(self):
        pres = presentation_from_dict({"variables": ["x"], "A": [], "y": ["x", "x^2"]})
        assert (pres.p, pres.q) == (2, 0)

    @pytest.mark.parametrize("data", [
        {"A": [["x"]], "y": ["1"]},
        {"variables": ["x"], "A": [["x"]]},
        {"variables": ["x"], "A": [["x", "1"], ["x"]], "y": ["1", "0"]},
        {"variables": ["x"], "A": [["x"]], "y": ["1", "0"]},
        {"variables": ["x"], "A": [], "y": []},
        {"variables": ["x"], "A": [["x +"]], "y": ["1"]},
        {"variables": ["x"], "A": [[3]], "y": ["1"]},
        {"variables": "x", "A": [["x"]], "y": ["1"]},
        {"variables": ["x"], "A": "x", "y": ["1"]},
    ])
    def test_invalid(self, data):
        with pytest.raises(InvalidDocumentError):
            presentation_from_dict(data)

    def test_error_names_location(self):
        with pytest.raises(InvalidDocumentError) as exc_info:
            presentation_from_dict({"variables": ["x"], "A": [["1", "z"]], "y": ["1"]})
        assert "A[0][1]" in str(exc_info.value)

    def test_reserved_variable(self):
        with pytest.raises(InvalidVariableNameError):
            presentation_from_dict({"variables": ["i"], "A": [["1"]], "y": ["1"]})


class TestConstructibleDocuments:

    def test_round_trip(self, ring_xy):
        x, y = ring_xy.gens
        s = ConstructibleSet(ring_xy, (
            Cell(y, Ideal(ring_xy, [x])),
            Cell(ring_xy.one, Ideal(ring_xy, [x ** 2 + 1, y - 1])),
        ))
        data = constructible_to_dict(s)
        assert data["cells"][0] == {"f": "y", "ideal": ["x"]}
        assert constructible_from_dict(data) == s

    def test_load(self, write_json):
        s = load_constructible(write_json("cells.json", {
            "variables": ["x", "y"],
            "cells": [{"f": "y", "ideal": ["x"]}],
        }))
        assert s.contains([0, 1])
        assert not s.contains([0, 0])

    def test_ideal_defaults_to_zero(self):
        s = constructible_from_dict({"variables": ["x"], "cells": [{"f": "x"}]})
        assert s.cells[0].ideal.is_zero()

    @pytest.mark.parametrize("cells", [
        [{"f": "0", "ideal": []}],
        [{"ideal": ["x"]}],
        ["x"],
        [{"f": "x", "ideal": "x"}],
    ])
    def test_invalid(self, cells):
        with pytest.raises(InvalidDocumentError):
            constructible_from_dict({"variables": ["x"], "cells": cells})


class TestChartDocuments:

    def test_round_trip(self):
        ring = base_ring(1)
        x1 = ring.gens[0]
        chart = ChartConnection(n=1, p=2, q=1, a=[[[x1, ring.one]]], f=[[x1 ** 2, ring.zero]])
        data = chart_to_dict(chart)
        assert data == {"n": 1, "p": 2, "q": 1, "a": [[["x1", "1"]]], "f": [["x1^2", "0"]]}
        assert chart_from_dict(json.loads(json.dumps(data))) == chart

    def test_load(self, write_json):
        chart = load_chart(write_json("chart.json", {
            "n": 1, "p": 1, "q": 0, "a": [[]], "f": [["x1"]],
        }))
        assert (chart.n, chart.p, chart.q) == (1, 1, 0)

    @pytest.mark.parametrize("data", [
        {"n": 0, "p": 1, "q": 0, "a": [], "f": []},
        {"n": True, "p": 1, "q": 0, "a": [[]], "f": [["x1"]]},
        {"n": 1, "p": 1, "q": 0, "a": [[]], "f": [[1]]},
        {"n": 1, "p": 1, "q": 0, "a": [[]], "f": ["x1"]},
        {"n": 1, "p": 1, "q": 0, "f": [["x1"]]},
    ])
    def test_invalid(self, data):
        with pytest.raises(InvalidDocumentError):
            chart_from_dict(data)
