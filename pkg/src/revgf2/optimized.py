"""The optimized, synchronized extended Euclidean inversion.

Space comes from two ideas: the degree identity deg(a) + deg(B) = m lets
each remainder share an m-wire register with its coefficient partner
(packed from opposite ends, leading coefficients implicit since the
degree bank knows where they are), and quotients are capped at
3*ceil(log m) bits since larger ones are rare.

Control comes from synchronization: a fixed round-robin of four scheduled
operation slots (o1a read-quotient-bit, o1b conditional-subtract, o1c
shift, o2 shift-off-leading-zeros), an advance-counter step between slots,
a flag wire marking sequence boundaries, and a halting counter that
early finishers tick so the global schedule can run to a fixed length.

The scheduled steps are modeled as named reversible primitives over the
packed layout: each acts bit-exactly on the machine state, and the layout
(not the model) is what the qubit-budget audit measures.  Gate costs for
the boundary-conditioned steps are estimates composed from the building
blocks, reported separately.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field as dc_field

from .blocks import log2_ceil
from .errors import CycleBudgetExceeded, PackOverflow, ZeroElement
from .field import FieldSpec
from .poly import degree, euclid_quotients, poly_divmod

# Scheduled operation indices, in counter-cycle order.
O1A, O1B, O1C, O2 = 0, 1, 2, 3
OP_NAMES = {O1A: "o1a", O1B: "o1b", O1C: "o1c", O2: "o2"}


# --- register sharing ------------------------------------------------------


def _coeff(p: int, e: int) -> int:
    return (p >> e) & 1 if e >= 0 else 0


def pack(a: int, A: int, m: int) -> int:
    """Pack a coefficient/remainder pair into one m-bit register.

    A sits at the high-order end (most significant coefficient first), a at
    the low end in the opposite direction; both leading 1-coefficients are
    implicit because the degree bank locates them.  The zero polynomial
    contributes no bits.  Requires deg(a) + deg(A) <= m.
    """
    bits_a = degree(a) if a else 0
    bits_A = degree(A) if A else 0
    if bits_a + bits_A > m:
        raise PackOverflow(f"deg(a)+deg(A) = {bits_a + bits_A} exceeds m = {m}")
    packed = 0
    for i in range(bits_A):  # A's sub-leading coefficients, from the top down
        packed |= _coeff(A, bits_A - 1 - i) << (m - 1 - i)
    for i in range(bits_a):  # a's sub-leading coefficients, from the bottom up
        packed |= _coeff(a, bits_a - 1 - i) << i
    return packed


def unpack(packed: int, dega: int | None, degA: int | None, m: int) -> tuple[int, int]:
    """Inverse of pack given the degree-bank values (None encodes the zero
    polynomial)."""
    if dega is None:
        a = 0
    else:
        a = 1 << dega
        for i in range(dega):
            a |= ((packed >> i) & 1) << (dega - 1 - i)
    if degA is None:
        A = 0
    else:
        A = 1 << degA
        for i in range(degA):
            A |= ((packed >> (m - 1 - i)) & 1) << (degA - 1 - i)
    return a, A


# --- layout and budget -----------------------------------------------------


def quotient_capacity(m: int) -> int:
    """The bounded quotient register width, 3*ceil(log m) bits."""
    return 3 * log2_ceil(m)


def default_cycles(m: int) -> int:
    """Global round budget: at most 2m Euclid iterations of at most 2m+2
    shift/XOR sub-steps each.  Loose by design; validated exhaustively at
    desk scale."""
    return 2 * m * (2 * m + 2)


def halting_counter_width(m: int, cycles: int | None = None) -> int:
    if cycles is None:
        cycles = default_cycles(m)
    return cycles.bit_length()  # ceil(log2(cycles + 1))


def machine_layout(m: int, H: int | None = None) -> dict[str, int]:
    """The optimized inverter's register map; its width is the audited
    qubit budget."""
    if H is None:
        H = halting_counter_width(m)
    L = log2_ceil(m)
    return {
        "rAa": m,  # A and a, shared in opposing directions
        "rBb": m,  # B and b, shared in opposing directions
        "q": 3 * L,
        "degA": L,
        "degB": L,
        "dega": L,
        "degb": L,
        "deg_anc": 4,  # one increment/decrement ancilla per degree register
        "f": 1,
        "c": 2,
        "h": H,
    }


def qubit_budget(m: int, H: int = 0) -> int:
    """The closed-form width 2m + 7*ceil(log m) + 7 + H."""
    return 2 * m + 7 * log2_ceil(m) + 7 + H


def budget_breakdown(m: int, H: int = 0) -> dict[str, int]:
    L = log2_ceil(m)
    return {
        "data (A,B,a,b)": 2 * m,
        "quotient q": 3 * L,
        "degrees": 4 * L + 4,
        "flag f, counter c": 3,
        "halting counter H": H,
    }


# --- the synchronized machine ----------------------------------------------


@dataclass
class SyncState:
    """One input's view of the synchronized machine.

    A/B are the remainder pair (B doubles as the evolving partial
    remainder during a division), a/b the coefficient pair.  degB is the
    working alignment: it starts at the true degree of B and is stepped
    down by the shifts, returning to the true degree of the new remainder
    at each iteration boundary.
    """

    m: int
    A: int
    B: int
    a: int = 1
    b: int = 0
    degA: int = 0
    degB: int = 0
    dega: int = 0
    degb: int | None = None  # None while b is still the zero polynomial
    q: int = 0
    q_len: int = 0
    q_overflow: bool = False
    f: int = 1
    c: int = O1A
    h: int = 0
    done: bool = False
    iterations: int = 0
    fired: list = dc_field(default_factory=list)

    @staticmethod
    def initial(c_elem: int, modulus: int, m: int) -> "SyncState":
        if c_elem == 0:
            raise ZeroElement("cannot invert 0")
        st = SyncState(m=m, A=c_elem, B=modulus, degA=degree(c_elem), degB=degree(modulus))
        if st.A == 1:
            st.done = True
        return st

    def packed_registers(self) -> tuple[int, int]:
        """Fig-7 packing of both shared registers (boundary states only)."""
        r1 = pack(self.a, self.A, self.m)
        r2 = pack(self.b, self.B, self.m)
        return r1, r2


def advance_counter(state: SyncState) -> None:
    """ac: c <- (c + f) mod 4; a bijection on the (f, c) wires."""
    state.c = (state.c + state.f) % 4


def o1_first_predicate(state: SyncState) -> bool:
    """First in a sequence of quotient reads: empty quotient register."""
    return state.q_len == 0


def o1_last_predicate(state: SyncState) -> bool:
    """Last quotient bit: the working alignment has reached deg(A)."""
    return state.degA == state.degB


def o2_first_predicate(state: SyncState) -> bool:
    return state.degA == state.degB


def o2_last_predicate(state: SyncState) -> bool:
    """The bit now in the high-order slot is 1: the remainder is aligned."""
    return _coeff(state.B, state.degB) == 1


def step_o1(state: SyncState, phase: str) -> None:
    """One sub-step of the adaptive long division.

    phase "a": the bit at the working alignment becomes the next quotient
    bit; on the last read of a division the final conditional subtract,
    the quotient uncompute, and the coefficient co-update fold in here
    (parts b and c are flag-suppressed afterwards).
    phase "b": conditioned on the new quotient bit, subtract the aligned
    divisor from B, and fold the same update into the coefficient pair.
    phase "c": shift B one slot toward the high-order end.
    """
    if phase == "a":
        bit = _coeff(state.B, state.degB)
        state.q = (state.q << 1) | bit
        state.q_len += 1
        if state.q_len > quotient_capacity(state.m):
            state.q_overflow = True
        if o1_last_predicate(state):
            if bit:
                state.B ^= state.A
                state.b ^= state.a
            _uncompute_quotient(state)
    elif phase == "b":
        bit = state.q & 1
        if bit:
            shift = state.degB - state.degA
            state.B ^= state.A << shift
            state.b ^= state.a << shift
    elif phase == "c":
        state.degB -= 1
    else:
        raise ValueError(f"unknown o1 phase {phase!r}")


def _uncompute_quotient(state: SyncState) -> None:
    """Clear q via q = floor((b + q a)/a); valid because deg(b) < deg(a)."""
    if not state.q_overflow:
        check, _ = poly_divmod(state.b, state.a)
        assert check == state.q, "quotient uncompute mismatch"
    state.q = 0
    state.q_len = 0


def step_o2(state: SyncState) -> None:
    """Shift one leading zero off the remainder; on the shift that brings a
    1 into the high-order slot, the iteration boundary is reached and the
    Euclidean pairs swap."""
    if o2_first_predicate(state):
        state.f ^= 1
    state.degB -= 1
    if o2_last_predicate(state):
        state.f ^= 1
        _swap_pairs(state)


def _swap_pairs(state: SyncState) -> None:
    """(a,A)(b,B) -> (b+qa, B+qA)(a,A): the registers trade roles and the
    degree bank is refreshed for the next iteration."""
    new_a, new_A = state.b, state.B
    new_b, new_B = state.a, state.A
    state.a, state.A, state.b, state.B = new_a, new_A, new_b, new_B
    state.dega, state.degA, state.degb, state.degB = (
        degree(state.a),
        state.degB,  # already stepped down to the remainder's true degree
        state.dega,
        state.degA,
    )
    state.iterations += 1
    if state.A == 1:
        state.done = True


def scheduled_fire(state: SyncState, op_id: int) -> bool:
    """Apply the slot's operation if the counter selects it; returns
    whether the operation acted."""
    if state.done or state.c != op_id:
        return False
    if op_id == O1A:
        step_o1(state, "a")
    elif op_id == O1B:
        if state.q_len == 0:
            return False  # flag-suppressed tail of a finished division
        step_o1(state, "b")
    elif op_id == O1C:
        if state.q_len == 0:
            return False
        step_o1(state, "c")
    else:
        if state.q_len != 0:
            return False  # mid-division pass-through
        step_o2(state)
    return True


def run_round(state: SyncState, record: bool = False) -> None:
    """One global round: the four operation slots, each followed by the
    advance-counter step; early finishers tick the halting counter."""
    for op_id in (O1A, O1B, O1C, O2):
        fired = scheduled_fire(state, op_id)
        if record and fired:
            state.fired.append(OP_NAMES[op_id])
        advance_counter(state)
    if state.done:
        state.h += 1


@dataclass
class SyncTrace:
    """Per-input outcome of a synchronized run."""

    input: int
    inverse: int
    h: int
    iterations: int
    quotient_overflow: bool
    rounds: int

    def final_signature(self, state: SyncState) -> tuple:
        return (
            state.a,
            state.A,
            state.b,
            state.B,
            state.dega,
            state.degA,
            state.degb,
            state.degB,
            state.q,
            state.f,
            state.c,
            state.h,
        )


def run_synchronized(
    inputs, field: FieldSpec, cycles: int | None = None
) -> dict[int, SyncTrace]:
    """Drive every input through the identical global schedule.

    Each input is simulated independently under the shared clock; the
    sequence of scheduled slots is a function of the clock only, so all
    inputs advance in lockstep.  Raises CycleBudgetExceeded if any input
    has not reached the termination state within `cycles` rounds.
    """
    if cycles is None:
        cycles = default_cycles(field.m)
    results: dict[int, SyncTrace] = {}
    for c_elem in inputs:
        state = SyncState.initial(c_elem, field.modulus, field.m)
        for _ in range(cycles):
            run_round(state)
        if not state.done:
            raise CycleBudgetExceeded(
                f"input {bin(c_elem)} unfinished after {cycles} rounds"
            )
        trace = SyncTrace(
            input=c_elem,
            inverse=state.a,
            h=state.h,
            iterations=state.iterations,
            quotient_overflow=state.q_overflow,
            rounds=cycles,
        )
        trace.final_state = state  # kept for injectivity checks
        results[c_elem] = trace
    return results


def optimized_invert(c_elem: int, field: FieldSpec, cycles: int | None = None) -> int:
    """Inverse of a single element via the synchronized machine.

    A lone basis state may stop as soon as it reaches the termination
    state; the fixed-length schedule only matters when inputs share a
    clock, which run_synchronized models.
    """
    if cycles is None:
        cycles = default_cycles(field.m)
    state = SyncState.initial(c_elem, field.modulus, field.m)
    for _ in range(cycles):
        if state.done:
            return state.a
        run_round(state)
    if not state.done:
        raise CycleBudgetExceeded(f"input {bin(c_elem)} unfinished after {cycles} rounds")
    return state.a


def check_quotient_bound(field: FieldSpec, sample=None) -> float:
    """Fraction of inputs whose Euclid trace contains a quotient that does
    not fit the 3*ceil(log m)-bit register (a fidelity-loss event)."""
    capacity = quotient_capacity(field.m)
    if sample is None:
        sample = field.nonzero_elements()
    flagged = 0
    total = 0
    for c_elem in sample:
        total += 1
        quotients = euclid_quotients(c_elem, field.modulus)
        if any(q.bit_length() > capacity for q in quotients):
            flagged += 1
    return flagged / total if total else 0.0


# --- trace rendering (Fig-8 style tableau) ---------------------------------


def _working_row(state: SyncState) -> dict:
    m = state.m
    return {
        "A": format(state.A, "b"),
        "B": format(state.B, "b"),
        "a": format(state.a, "b"),
        "b": format(state.b, "b"),
        "degA": state.degA,
        "degB": state.degB,
        "q": format(state.q, "b") if state.q_len else "0",
        "f": state.f,
        "c": OP_NAMES[state.c],
        "h": state.h,
        "done": state.done,
    }


def trace_table(
    c_elem: int,
    modulus: int,
    m: int,
    cycles: int | None = None,
    stop_after_first_iteration: bool = False,
) -> list[dict]:
    """Row-per-fired-operation table of the synchronized run.

    With stop_after_first_iteration the table covers a single long
    division (used to replay a division of B by A without any field
    structure: initialize with modulus = B)."""
    if cycles is None:
        cycles = default_cycles(m)
    state = SyncState.initial(c_elem, modulus, m)
    rows = [dict(_working_row(state), op="init")]
    for _ in range(cycles):
        for op_id in (O1A, O1B, O1C, O2):
            fired = scheduled_fire(state, op_id)
            advance_counter(state)
            if fired:
                rows.append(dict(_working_row(state), op=OP_NAMES[op_id]))
        if state.done:
            state.h += 1
            break
        if stop_after_first_iteration and state.iterations >= 1:
            break
    return rows


def copy_state(state: SyncState) -> SyncState:
    return copy.deepcopy(state)
