import pytest

from revgf2.circuit import (
    BasisState,
    Circuit,
    apply,
    check_permutation,
    cnot,
    compose,
    emit_netlist,
    gate_not,
    inverse,
    parse_netlist,
    report,
    swap,
)
from revgf2.errors import LayoutMismatch, WidthTooLarge


def toy_circuit():
    c = Circuit({"a": 2, "b": 1})
    c.add(gate_not(("a", 0)))
    c.add(cnot([(("a", 0), 1)], ("b", 0)))
    c.add(cnot([(("a", 0), 1), (("a", 1), 0)], ("b", 0)))
    c.add(swap(("a", 0), ("a", 1)))
    return c


def test_gate_validation():
    with pytest.raises(ValueError):
        cnot([(("a", 0), 1)], ("a", 0))  # control equals target
    with pytest.raises(ValueError):
        swap(("a", 0), ("a", 0))


def test_layout_checked_on_add():
    c = Circuit({"a": 2})
    with pytest.raises(LayoutMismatch):
        c.add(gate_not(("b", 0)))
    with pytest.raises(LayoutMismatch):
        c.add(gate_not(("a", 5)))


def test_apply_polarity():
    c = Circuit({"a": 1, "b": 1})
    c.add(cnot([(("a", 0), 0)], ("b", 0)))  # fires on |0>
    out = apply(c, BasisState.zeros(c.layout))
    assert out.get_reg("b") == 1
    out = apply(c, BasisState.from_values(c.layout, a=1))
    assert out.get_reg("b") == 0


def test_inverse_is_identity():
    c = toy_circuit()
    both = compose(c, inverse(c))
    for packed in range(1 << both.width):
        state = BasisState.from_int(both.layout, packed)
        assert apply(both, state).as_int() == packed


def test_check_permutation():
    assert check_permutation(toy_circuit())
    with pytest.raises(WidthTooLarge):
        check_permutation(Circuit({"a": 30}), max_width=20)


def test_report_counts_and_depth():
    rep = report(toy_circuit())
    assert rep.width == 3
    assert rep.gate_counts == {"NOT": 1, "CNOT": 2, "SWAP": 1}
    assert rep.control_arity == {1: 1, 2: 1}
    assert rep.total_gates == 4
    # every gate touches a[0], so no two can share a layer
    assert rep.depth == 4
    flat = rep.to_json()
    assert flat["gates_total"] == 4 and flat["cnot_arity_2"] == 1


def test_netlist_round_trip():
    c = toy_circuit()
    text = emit_netlist(c)
    back = parse_netlist(text)
    assert back.layout == c.layout
    assert back.gates == c.gates
    assert "CNOT +a[0] -a[1] > b[0]" in text


def test_state_packing_round_trip():
    layout = {"x": 3, "y": 2}
    for packed in range(1 << 5):
        assert BasisState.from_int(layout, packed).as_int() == packed
