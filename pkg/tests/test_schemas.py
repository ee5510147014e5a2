# tests/test_schemas.py

import pytest
from pydantic import ValidationError

from betarec.automata import STAR
from betarec.realsets import PaddingMode, equivalent_sets, interval_set
from betarec.schemas import (
    AutomatonModel,
    BaseReport,
    RealSetModel,
    TransducerModel,
    symbol_from_json,
    symbol_to_json,
)
from betarec.transducers import LetterTransducer, build_fractional_converter, build_normalizer


def test_symbols():
    assert symbol_to_json((1, STAR)) == [1, "*"]
    assert symbol_from_json([-1, "*"]) == (-1, STAR)


def test_set_document(binary):
    x = interval_set(binary, 0, 1)
    text = RealSetModel.from_domain(x).model_dump_json()
    back = RealSetModel.model_validate_json(text).to_domain()
    assert back.base == binary
    assert back.padding_mode == PaddingMode.ZERO_PADDED
    assert back.machine == x.machine
    assert equivalent_sets(back, x)


def test_dump_is_stable(golden):
    x = interval_set(golden, 0, 1)
    assert RealSetModel.from_domain(x).model_dump_json() == RealSetModel.from_domain(x).model_dump_json()


def test_automaton_rejects_unknown_symbol():
    doc = AutomatonModel(n_states=1, alphabet=[[0]], edges=[(0, [1], 0)], initial=[0], accepting=[0])
    with pytest.raises(ValueError):
        doc.to_domain()


def test_automaton_validation():
    with pytest.raises(ValidationError):
        AutomatonModel.model_validate({"n_states": "many", "alphabet": [], "edges": [], "initial": [], "accepting": []})


def test_converter_document(golden):
    t = build_fractional_converter(golden, [0, 1])
    doc = TransducerModel.from_domain(t, golden)
    assert doc.base == golden.describe()
    assert len(doc.state_values) == t.n_states
    back = TransducerModel.model_validate_json(doc.model_dump_json()).to_domain()
    assert back == t
    assert back.state_values == t.state_values


def test_normalizer_document(golden):
    t = build_normalizer(golden, [-1, 0, 1])
    doc = TransducerModel.from_domain(t, golden)
    back = TransducerModel.model_validate_json(doc.model_dump_json()).to_domain()
    assert back.edges == t.edges
    assert back.initial_function == t.initial_function
    assert back.state_values == t.state_values


def test_values_need_base(golden):
    t = build_fractional_converter(golden, [0, 1])
    with pytest.raises(ValueError):
        TransducerModel.from_domain(t)
    doc = TransducerModel.from_domain(t, golden).model_copy(update={"base": None})
    with pytest.raises(ValueError):
        doc.to_domain()


def test_plain_transducer_needs_no_base(golden):
    t = build_fractional_converter(golden, [0, 1])
    plain = LetterTransducer(t.n_states, t.input_alphabet, t.output_alphabet, t.edges, t.initial, t.accepting)
    doc = TransducerModel.from_domain(plain)
    assert doc.base is None
    assert doc.to_domain() == plain


def test_base_report(golden, tribonacci):
    report = BaseReport.from_domain(golden)
    assert report.summary() == "pisot=true parry=simple dstar=(10)"
    assert report.renyi == "11"
    assert report.to_domain() == golden
    assert BaseReport.from_domain(tribonacci).dstar == "(110)"
