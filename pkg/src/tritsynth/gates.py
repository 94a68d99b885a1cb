"""Gate primitives and netlists for ternary reversible circuits.

A netlist is a straight-line sequence of gates over named wires.  Wires
come in two flavors: primary inputs and ancilla wires with a fixed
initial value.  Output wires are designated by name.  Most gates here
are bijections on the full register; MAX and MIN are the deliberate
exceptions and are flagged as non-reversible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .core import (
    BUFFER,
    DUAL_SHIFT,
    SELF_SHIFT,
    SINGLE_SHIFT,
    ShiftOp,
    Trit,
    shift_by_name,
)


class Gate:
    """Base class; concrete gates implement apply() on a wire-value dict."""

    kind = "gate"
    reversible = True

    def wires(self):
        raise NotImplementedError

    def apply(self, state):
        raise NotImplementedError

    def _check_distinct(self):
        ws = list(self.wires())
        if len(set(ws)) != len(ws):
            raise ValueError(f"{self.kind} gate wires must be distinct: {ws}")

    def to_dict(self):
        raise NotImplementedError


@dataclass(frozen=True)
class MSGate(Gate):
    """Single-shift on target iff control holds 2."""

    control: str
    target: str
    kind = "ms"

    def __post_init__(self):
        self._check_distinct()

    def wires(self):
        return (self.control, self.target)

    def apply(self, state):
        if state[self.control] == 2:
            state[self.target] = SINGLE_SHIFT.apply(state[self.target])

    def to_dict(self):
        return {"kind": self.kind, "control": self.control, "target": self.target}


@dataclass(frozen=True)
class Feynman(Gate):
    """Controlled add: target becomes (control + target) mod 3."""

    control: str
    target: str
    kind = "feynman"

    def __post_init__(self):
        self._check_distinct()

    def wires(self):
        return (self.control, self.target)

    def apply(self, state):
        state[self.target] = Trit((state[self.control] + state[self.target]) % 3)

    def to_dict(self):
        return {"kind": self.kind, "control": self.control, "target": self.target}


@dataclass(frozen=True)
class Toffoli(Gate):
    """Single-shift on target iff both controls hold 2."""

    control_a: str
    control_b: str
    target: str
    kind = "toffoli"

    def __post_init__(self):
        self._check_distinct()

    def wires(self):
        return (self.control_a, self.control_b, self.target)

    def apply(self, state):
        if state[self.control_a] == 2 and state[self.control_b] == 2:
            state[self.target] = SINGLE_SHIFT.apply(state[self.target])

    def to_dict(self):
        return {
            "kind": self.kind,
            "control_a": self.control_a,
            "control_b": self.control_b,
            "target": self.target,
        }


def _validate_shifts(shifts):
    if len(shifts) != 3:
        raise ValueError("need one shift per control value")
    for s in shifts:
        if not isinstance(s, ShiftOp):
            raise TypeError(f"not a shift: {s!r}")


@dataclass(frozen=True)
class GTG(Gate):
    """General ternary gate: the control value selects which of three
    shifts acts on the target."""

    control: str
    target: str
    shifts: tuple[ShiftOp, ShiftOp, ShiftOp]
    kind = "gtg"

    def __post_init__(self):
        self._check_distinct()
        _validate_shifts(self.shifts)

    def wires(self):
        return (self.control, self.target)

    def apply(self, state):
        op = self.shifts[state[self.control]]
        state[self.target] = op.apply(state[self.target])

    def to_dict(self):
        return {
            "kind": self.kind,
            "control": self.control,
            "target": self.target,
            "shifts": [s.name for s in self.shifts],
        }


@dataclass(frozen=True)
class MultiGTG(Gate):
    """GTG lifted to several controls.  shifts[v] acts on the target iff
    every control holds the same value v; mixed controls leave it alone."""

    controls: tuple[str, ...]
    target: str
    shifts: tuple[ShiftOp, ShiftOp, ShiftOp]
    kind = "multigtg"

    def __post_init__(self):
        if not self.controls:
            raise ValueError("need at least one control")
        self._check_distinct()
        _validate_shifts(self.shifts)

    def wires(self):
        return self.controls + (self.target,)

    def apply(self, state):
        v = state[self.controls[0]]
        if all(state[c] == v for c in self.controls[1:]):
            state[self.target] = self.shifts[v].apply(state[self.target])

    def to_dict(self):
        return {
            "kind": self.kind,
            "controls": list(self.controls),
            "target": self.target,
            "shifts": [s.name for s in self.shifts],
        }


@dataclass(frozen=True)
class C2NOT(Gate):
    """Single-shift on target iff the controls hold {1,2} in either order."""

    control_a: str
    control_b: str
    target: str
    kind = "c2not"

    def __post_init__(self):
        self._check_distinct()

    def wires(self):
        return (self.control_a, self.control_b, self.target)

    def apply(self, state):
        a, b = state[self.control_a], state[self.control_b]
        if {int(a), int(b)} == {1, 2}:
            state[self.target] = SINGLE_SHIFT.apply(state[self.target])

    def to_dict(self):
        return {
            "kind": self.kind,
            "control_a": self.control_a,
            "control_b": self.control_b,
            "target": self.target,
        }


@dataclass(frozen=True)
class MaxGate(Gate):
    """target := max(inputs, target).  Erases information; not reversible."""

    inputs: tuple[str, ...]
    target: str
    kind = "max"
    reversible = False

    def __post_init__(self):
        if not self.inputs:
            raise ValueError("need at least one input")
        self._check_distinct()

    def wires(self):
        return self.inputs + (self.target,)

    def apply(self, state):
        state[self.target] = max(state[w] for w in self.wires())

    def to_dict(self):
        return {"kind": self.kind, "inputs": list(self.inputs), "target": self.target}


@dataclass(frozen=True)
class MinGate(Gate):
    """target := min(inputs, target).  Erases information; not reversible."""

    inputs: tuple[str, ...]
    target: str
    kind = "min"
    reversible = False

    def __post_init__(self):
        if not self.inputs:
            raise ValueError("need at least one input")
        self._check_distinct()

    def wires(self):
        return self.inputs + (self.target,)

    def apply(self, state):
        state[self.target] = min(state[w] for w in self.wires())

    def to_dict(self):
        return {"kind": self.kind, "inputs": list(self.inputs), "target": self.target}


_GATE_KINDS = {
    "ms": MSGate,
    "feynman": Feynman,
    "toffoli": Toffoli,
    "gtg": GTG,
    "multigtg": MultiGTG,
    "c2not": C2NOT,
    "max": MaxGate,
    "min": MinGate,
}


def gate_from_dict(d):
    kind = d.get("kind")
    if kind not in _GATE_KINDS:
        raise ValueError(f"unknown gate kind {kind!r}")
    d = dict(d)
    d.pop("kind")
    if "shifts" in d:
        d["shifts"] = tuple(shift_by_name(n) for n in d["shifts"])
    if "controls" in d:
        d["controls"] = tuple(d["controls"])
    if "inputs" in d:
        d["inputs"] = tuple(d["inputs"])
    return _GATE_KINDS[kind](**d)


@dataclass
class Netlist:
    """Wires, gates, and designated outputs.

    input_names are free wires; ancilla_init maps ancilla wires to their
    fixed starting trit.  outputs maps result names to wire names.
    """

    input_names: tuple[str, ...]
    ancilla_init: dict[str, Trit] = field(default_factory=dict)
    gates: list[Gate] = field(default_factory=list)
    outputs: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        seen = set(self.input_names)
        if len(seen) != len(self.input_names):
            raise ValueError("duplicate input names")
        for w in self.ancilla_init:
            if w in seen:
                raise ValueError(f"ancilla name collides with input: {w}")
            seen.add(w)

    def all_wires(self):
        return tuple(self.input_names) + tuple(self.ancilla_init)

    def add_ancilla(self, prefix, init):
        """Mint a fresh ancilla wire with the given initial value."""
        init = Trit(init)
        n = 0
        existing = set(self.all_wires())
        while f"{prefix}{n}" in existing:
            n += 1
        name = f"{prefix}{n}"
        self.ancilla_init[name] = init
        return name

    def append(self, gate):
        missing = [w for w in gate.wires() if w not in set(self.all_wires())]
        if missing:
            raise ValueError(f"gate uses unknown wires: {missing}")
        self.gates.append(gate)

    @property
    def reversible(self):
        return all(g.reversible for g in self.gates)

    @property
    def ancilla_count(self):
        return len(self.ancilla_init)

    def to_json(self, indent=None):
        doc = {
            "inputs": list(self.input_names),
            "ancillas": {w: int(v) for w, v in self.ancilla_init.items()},
            "gates": [g.to_dict() for g in self.gates],
            "outputs": dict(self.outputs),
        }
        return json.dumps(doc, indent=indent)

    @classmethod
    def from_json(cls, text):
        doc = json.loads(text)
        nl = cls(
            input_names=tuple(doc["inputs"]),
            ancilla_init={w: Trit(v) for w, v in doc["ancillas"].items()},
            outputs=dict(doc["outputs"]),
        )
        for gd in doc["gates"]:
            nl.append(gate_from_dict(gd))
        return nl


# Cost accounting.  The flat model prices every controlled gate at the
# cost of its uncontrolled core plus a fixed control surcharge and
# treats the irreversible collectors as free wiring; the strict model
# scales with fan-in and drops the pairing discount.

@dataclass(frozen=True)
class CostModel:
    name: str
    ms: int = 1
    feynman: int = 4
    toffoli: int = 5
    gtg: int = 5
    multigtg_flat: bool = True
    multigtg_unit: int = 5
    c2not: int = 8
    collector_unit: int = 0
    fuse_c2not_pairs: bool = True

    def gate_cost(self, gate):
        if isinstance(gate, MSGate):
            return self.ms
        if isinstance(gate, Feynman):
            return self.feynman
        if isinstance(gate, Toffoli):
            return self.toffoli
        if isinstance(gate, GTG):
            return self.gtg
        if isinstance(gate, MultiGTG):
            if self.multigtg_flat:
                return self.multigtg_unit
            return self.multigtg_unit * len(gate.controls)
        if isinstance(gate, C2NOT):
            return self.c2not
        if isinstance(gate, (MaxGate, MinGate)):
            return self.collector_unit * len(gate.inputs)
        raise TypeError(f"no cost for {gate!r}")

    def netlist_cost(self, netlist):
        total = 0
        c2not_groups: dict[tuple[str, str, str], int] = {}
        for g in netlist.gates:
            if self.fuse_c2not_pairs and isinstance(g, C2NOT):
                key = (g.control_a, g.control_b, g.target)
                c2not_groups[key] = c2not_groups.get(key, 0) + 1
            else:
                total += self.gate_cost(g)
        for count in c2not_groups.values():
            total += ((count + 1) // 2) * self.c2not
        return total


PAPER_COST = CostModel(name="paper")
STRICT_COST = CostModel(
    name="strict",
    multigtg_flat=False,
    collector_unit=5,
    fuse_c2not_pairs=False,
)
# Flat pricing with the pairing discount switched off; reports carry this
# next to the headline number so the discount is never hidden.
HONEST_COST = CostModel(name="honest", fuse_c2not_pairs=False)

COST_MODELS = {"paper": PAPER_COST, "strict": STRICT_COST}


def netlist_depth(netlist):
    """Greedy ASAP leveling: a gate sits one level above the deepest
    earlier gate it shares a wire with."""
    level: dict[str, int] = {}
    depth = 0
    for g in netlist.gates:
        lv = 1 + max((level.get(w, 0) for w in g.wires()), default=0)
        for w in g.wires():
            level[w] = lv
        depth = max(depth, lv)
    return depth
