"""Tests for the encoder text format: grammar, diagnostics, round-trip."""

import pytest
from conftest import encoders, make_encoder
from hypothesis import given

from pearlmem import (
    EncoderSemanticError,
    EncoderSyntaxError,
    ParseError,
    SourceText,
    parse,
    render,
)


def gates_of(enc):
    return [(g.source, g.target, g.degree) for g in enc.strings]


def test_parse_commuting_pair():
    enc = parse("CNOT(1,2)(1) CNOT(1,3)(D)")
    assert gates_of(enc) == [(1, 2, 0), (1, 3, 1)]
    assert enc.frame_width == 3  # defaults to the largest index used


def test_parse_negative_exponent():
    enc = parse("CNOT(2,3)(D^-2)")
    assert gates_of(enc) == [(2, 3, -2)]


def test_parse_header_and_comments():
    text = """
    # leading comment
    qubits 5
    CNOT(1,2)(D^2)   # trailing comment
    CNOT(2,1)(D^0)
    """
    enc = parse(text)
    assert enc.frame_width == 5
    assert gates_of(enc) == [(1, 2, 2), (2, 1, 0)]


def test_parse_tokens_may_be_spaced_apart():
    enc = parse("CNOT ( 1 , 2 ) ( D ^ 3 )")
    assert gates_of(enc) == [(1, 2, 3)]


def test_parse_preserves_textual_order():
    enc = parse("CNOT(2,3)(D) CNOT(1,2)(D) CNOT(2,3)(D^2)")
    assert gates_of(enc) == [(2, 3, 1), (1, 2, 1), (2, 3, 2)]


def test_single_qubit_cnot_is_semantic_error():
    with pytest.raises(EncoderSemanticError) as exc:
        parse("CNOT(1,1)(1)", name="bad.pne")
    assert "bad.pne:1:1" in str(exc.value)


def test_qubit_index_below_one():
    with pytest.raises(EncoderSemanticError) as exc:
        parse("CNOT(0,2)(1)")
    assert exc.value.line == 1
    assert exc.value.column == 6


def test_qubit_index_beyond_declared_width():
    with pytest.raises(EncoderSemanticError) as exc:
        parse("qubits 2\nCNOT(1,3)(D)")
    assert exc.value.line == 2
    assert "exceeds declared frame width 2" in exc.value.message


def test_zero_frame_width_rejected():
    with pytest.raises(EncoderSemanticError):
        parse("qubits 0")


@pytest.mark.parametrize("text", ["CNOT(1,2)(2)", "CNOT(1,2)(0)", "CNOT(1,2)(D^x)"])
def test_malformed_delay_is_syntax_error(text):
    with pytest.raises(EncoderSyntaxError):
        parse(text)


def test_unexpected_character_positions():
    with pytest.raises(EncoderSyntaxError) as exc:
        parse("CNOT(1,2)(1)\n  %")
    assert (exc.value.line, exc.value.column) == (2, 3)


def test_truncated_gate_reports_end_of_input():
    with pytest.raises(EncoderSyntaxError) as exc:
        parse("CNOT(1,2")
    assert "end of input" in exc.value.message


def test_unknown_gate_name():
    with pytest.raises(EncoderSyntaxError) as exc:
        parse("XNOT(1,2)(1)")
    assert "expected 'CNOT'" in exc.value.message


@pytest.mark.parametrize("name", ["H", "P", "CPHASE"])
def test_reserved_gates_rejected(name):
    with pytest.raises(EncoderSyntaxError) as exc:
        parse(f"{name}(1)")
    assert "not supported" in exc.value.message


def test_header_after_gates_is_rejected():
    with pytest.raises(EncoderSyntaxError):
        parse("CNOT(1,2)(1) qubits 3")


def test_source_text_name_appears_in_errors():
    src = SourceText("CNOT(1,2)(", name="enc.pne")
    with pytest.raises(ParseError) as exc:
        parse(src)
    assert str(exc.value).startswith("enc.pne:")


def test_render_single_gate():
    assert render(make_encoder([(1, 2, 0)])) == "qubits 2\nCNOT(1,2)(1)"


def test_render_empty_encoder():
    enc = make_encoder([])
    assert render(enc) == "qubits 1"
    assert parse(render(enc)) == enc


def test_render_degree_notation():
    enc = make_encoder([(1, 2, 1), (2, 1, -2), (1, 2, 0)])
    assert render(enc) == "qubits 2\nCNOT(1,2)(D)\nCNOT(2,1)(D^-2)\nCNOT(1,2)(1)"


@given(encoders(max_strings=8, max_width=6, degree_range=(-5, 5)))
def test_round_trip(enc):
    assert parse(render(enc)) == enc
