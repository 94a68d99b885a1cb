"""Netlist simulation and exhaustive verification.

Simulation walks the gate list over a wire-value dict.  Verification
compares a netlist against a reference function on every input
assignment; register widths here are small enough that nothing cleverer
is warranted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import Trit
from .truthtables import (
    MultiOutputFunction,
    TernaryFunction,
    all_inputs,
    default_var_names,
)


class VerificationError(RuntimeError):
    """A netlist disagreed with its reference function."""

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


@dataclass(frozen=True)
class SimResult:
    outputs: dict[str, Trit]
    state: dict[str, Trit]


def simulate(netlist, inputs) -> SimResult:
    """Run the netlist on one input assignment.

    inputs is either a sequence ordered like netlist.input_names or a
    mapping from input name to value.
    """
    if isinstance(inputs, dict):
        assignment = {name: Trit(inputs[name]) for name in netlist.input_names}
        if len(inputs) != len(netlist.input_names):
            extra = set(inputs) - set(netlist.input_names)
            raise ValueError(f"unexpected input wires: {sorted(extra)}")
    else:
        vals = tuple(inputs)
        if len(vals) != len(netlist.input_names):
            raise ValueError(
                f"expected {len(netlist.input_names)} inputs, got {len(vals)}"
            )
        assignment = {n: Trit(v) for n, v in zip(netlist.input_names, vals)}

    state = dict(assignment)
    for wire, init in netlist.ancilla_init.items():
        state[wire] = init
    for gate in netlist.gates:
        gate.apply(state)
    outputs = {name: state[wire] for name, wire in netlist.outputs.items()}
    return SimResult(outputs=outputs, state=state)


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    checked: int
    counterexample: Optional[tuple[Trit, ...]] = None
    output_name: Optional[str] = None
    expected: Optional[Trit] = None
    got: Optional[Trit] = None

    def message(self):
        if self.ok:
            return f"ok ({self.checked} assignments)"
        row = "".join(str(int(t)) for t in self.counterexample)
        return (
            f"mismatch on output {self.output_name!r} at input {row}: "
            f"expected {int(self.expected)}, got {int(self.got)}"
        )


def _output_pairs(netlist, fn):
    """Match netlist outputs to reference outputs.

    By name when the two name sets coincide, otherwise positionally in
    declaration order (tables read from disk carry anonymous outputs).
    """
    net_names = list(netlist.outputs)
    ref_names = list(fn.output_names)
    if len(net_names) != len(ref_names):
        raise ValueError(
            f"output count mismatch: netlist has {len(net_names)}, "
            f"reference has {len(ref_names)}"
        )
    if set(net_names) == set(ref_names):
        return [(n, n) for n in net_names]
    return list(zip(net_names, ref_names))


def exhaustive_check(netlist, fn) -> CheckResult:
    """Compare a netlist with a reference over all input assignments.

    fn may be a MultiOutputFunction or a single TernaryFunction.
    Returns the first mismatch in lexicographic input order, if any.
    """
    if isinstance(fn, TernaryFunction):
        fn = MultiOutputFunction(fn.name, fn.arity, default_var_names(fn.arity), (fn,))
    if len(netlist.input_names) != fn.arity:
        raise ValueError(
            f"arity mismatch: netlist has {len(netlist.input_names)} inputs, "
            f"reference has {fn.arity}"
        )
    pairs = _output_pairs(netlist, fn)
    checked = 0
    for row in all_inputs(fn.arity):
        res = simulate(netlist, row)
        checked += 1
        for net_name, ref_name in pairs:
            want = fn.output(ref_name)(row)
            got = res.outputs[net_name]
            if got != want:
                return CheckResult(
                    ok=False,
                    checked=checked,
                    counterexample=row,
                    output_name=net_name,
                    expected=want,
                    got=got,
                )
    return CheckResult(ok=True, checked=checked)
