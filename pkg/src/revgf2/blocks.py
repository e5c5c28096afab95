"""Builders for the reversible building blocks: SWAP, shifts, counters,
degree computation, conditional XOR, and the modular multiply-accumulate.

Width conventions follow the usual ceil(log m) collapse: the same
ceil(log2 m)-wire register serves for values up to m-1, m, or m+1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuit import Circuit, Gate, cnot, gate_not, swap
from .errors import BadParameter
from .field import FieldSpec


def log2_ceil(m: int) -> int:
    """ceil(log2 m); the degree-register width for GF(2^m)."""
    if m < 1:
        raise BadParameter("log2_ceil needs a positive argument")
    return max(1, (m - 1).bit_length())


@dataclass(frozen=True)
class BlockSpec:
    """Field degree plus its derived degree-register width."""

    m: int

    def __post_init__(self):
        if self.m < 2:
            raise BadParameter("blocks require m >= 2")

    @property
    def logm(self) -> int:
        return log2_ceil(self.m)


def build_swap() -> Circuit:
    """Two-wire bit transposition from 3 CNOT gates."""
    c = Circuit({"q": 2})
    c.add(cnot([(("q", 0), 1)], ("q", 1)))
    c.add(cnot([(("q", 1), 1)], ("q", 0)))
    c.add(cnot([(("q", 0), 1)], ("q", 1)))
    return c


def _shift_swaps(n: int, direction: str, reg: str = "r"):
    """Adjacent-wire swap chain for a one-position cyclic rotation.

    "left" rotates toward higher indices (multiply by z); "right" is the
    inverse rotation.
    """
    if direction == "left":
        pairs = [(i, i + 1) for i in range(n - 2, -1, -1)]
    elif direction == "right":
        pairs = [(i, i + 1) for i in range(n - 1)]
    else:
        raise BadParameter(f"direction must be left or right, not {direction!r}")
    return [((reg, i), (reg, j)) for i, j in pairs]


def build_cyclic_shift(n: int, direction: str = "left") -> Circuit:
    """Cyclic rotation of an n-wire register by one position (n-1 SWAPs)."""
    if n < 2:
        raise BadParameter("cyclic shift needs n >= 2")
    c = Circuit({"r": n})
    for w1, w2 in _shift_swaps(n, direction):
        c.add(swap(w1, w2))
    return c


def _controlled_swap_gates(w1, w2, controls):
    """CSWAP as CNOT / multi-controlled NOT / CNOT (only the middle gate
    carries the controls)."""
    return [
        cnot([(w2, 1)], w1),
        cnot(list(controls) + [(w1, 1)], w2),
        cnot([(w2, 1)], w1),
    ]


def build_controlled_shift(n: int, k: int, direction: str = "left") -> Circuit:
    """|theta>|s> <-> |theta rotated by s>|s> with an n-wire data register
    and a k-wire shift register.

    Control bit j gates a block of 2^j single-position rotations; no
    ancillas are used (controlled swaps are CNOT/Toffoli triples).
    """
    if n < 2 or k < 1:
        raise BadParameter("controlled shift needs n >= 2 and k >= 1")
    c = Circuit({"data": n, "shift": k})
    for j in range(k):
        for _ in range(1 << j):
            for w1, w2 in _shift_swaps(n, direction, reg="data"):
                c.extend(_controlled_swap_gates(w1, w2, [(("shift", j), 1)]))
    return c


def _increment_gates(reg: str, w: int, anc: str, extra_controls=()):
    """Gate list for +1 mod 2^(w+1) on reg[0..w-1] with anc[0] as the
    most-significant result bit.  Optional extra controls condition the
    whole increment (used by the degree circuit's gated decrements)."""
    extra = list(extra_controls)
    gates = []
    for j in range(w, 0, -1):
        target = (anc, 0) if j == w else (reg, j)
        controls = extra + [((reg, i), 1) for i in range(j)]
        gates.append(cnot(controls, target))
    if extra:
        gates.append(cnot(extra, (reg, 0)))
    else:
        gates.append(gate_not((reg, 0)))
    return gates


def build_increment(w: int) -> Circuit:
    """|k> <-> |k+1> on a w-wire register plus one ancilla that holds the
    most-significant result bit (and stays 0 for k <= 2^w - 2)."""
    if w < 1:
        raise BadParameter("increment needs w >= 1")
    c = Circuit({"k": w, "anc": 1})
    c.extend(_increment_gates("k", w, "anc"))
    return c


def build_decrement(w: int) -> Circuit:
    """The increment circuit run backwards; for inputs in [1, 2^w - 1] the
    ancilla returns to 0, so one ancilla serves every decrement in a row."""
    if w < 1:
        raise BadParameter("decrement needs w >= 1")
    c = Circuit({"k": w, "anc": 1})
    c.extend(reversed(_increment_gates("k", w, "anc")))
    return c


def build_degree(m: int) -> Circuit:
    """Compute deg(A) of a nonzero A into a ceil(log m)-wire register.

    The degree register is initialized to m-1; then, for each prefix
    length t, a decrement fires when the top t coefficients of A are all
    zero (0-controls), leaving deg(A).  One shared ancilla serves all the
    decrements, so the block costs ceil(log m)+1 qubits beyond |A>.
    """
    spec = BlockSpec(m)
    L = spec.logm
    c = Circuit({"a": m, "deg": L, "anc": 1})
    init = m - 1
    for j in range(L):
        if (init >> j) & 1:
            c.add(gate_not(("deg", j)))
    for t in range(1, m):
        prefix = [(("a", m - 1 - s), 0) for s in range(t)]
        c.extend(reversed(_increment_gates("deg", L, "anc", extra_controls=prefix)))
    return c


def build_conditional_xor(m: int) -> Circuit:
    """|q>|A>|B> <-> |q>|A>|B xor A if q=1>: m Toffoli gates."""
    if m < 1:
        raise BadParameter("conditional xor needs m >= 1")
    c = Circuit({"ctl": 1, "a": m, "b": m})
    for i in range(m):
        c.add(cnot([(("ctl", 0), 1), (("a", i), 1)], ("b", i)))
    return c


def _times_z_gates(reg: str, m: int, modulus: int):
    """In-place y <- y*z mod f on an m-wire register: cyclic left rotation,
    then XOR the (classical) modulus tail conditioned on the wrapped-around
    leading bit."""
    gates = [swap(w1, w2) for w1, w2 in _shift_swaps(m, "left", reg=reg)]
    for j in range(1, m):
        if (modulus >> j) & 1:
            gates.append(cnot([((reg, 0), 1)], (reg, j)))
    return gates


def build_mul_accumulate(field: FieldSpec) -> Circuit:
    """|x>|y>|t> <-> |x>|y>|t xor (x*y mod f)>.

    Shift-and-add: at step i the y register holds y*z^i mod f and a bank of
    Toffolis accumulates x_i * (y*z^i mod f) into t; the z-multiplications
    are undone afterwards so y comes back intact.  Costs 3m data wires and
    no ancillas; the modulus is classical.
    """
    m = field.m
    c = Circuit({"x": m, "y": m, "t": m})
    mulz = _times_z_gates("y", m, field.modulus)
    for i in range(m):
        for j in range(m):
            c.add(cnot([(("x", i), 1), (("y", j), 1)], ("t", j)))
        if i < m - 1:
            c.extend(mulz)
    for _ in range(m - 1):
        c.extend(reversed(mulz))
    return c


BLOCK_BUILDERS = {
    "swap": lambda args: build_swap(),
    "shiftl": lambda args: build_cyclic_shift(args["n"], "left"),
    "shiftr": lambda args: build_cyclic_shift(args["n"], "right"),
    "cshift": lambda args: build_controlled_shift(args["n"], args["k"]),
    "inc": lambda args: build_increment(args["w"]),
    "dec": lambda args: build_decrement(args["w"]),
    "deg": lambda args: build_degree(args["m"]),
    "cxor": lambda args: build_conditional_xor(args["m"]),
    "mulacc": lambda args: build_mul_accumulate(args["field"]),
}
