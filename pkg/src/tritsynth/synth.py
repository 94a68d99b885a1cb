"""Netlist synthesis from truth tables.

Two pipelines.  Affine columns (f = c + sum of coefficient*input mod 3)
become Feynman chains accumulating onto an input wire where possible,
onto a constant-initialized ancilla otherwise.  Everything else goes
through minterm extraction, rewrite-rule reduction, and a direct
factor-by-factor mapping onto controlled shift gates:

  unprimed projection or fused group  one MultiGTG onto a zero ancilla
  primed projection                   two MultiGTGs, one per firing level
  crossed pair, 1-valued              one C2NOT
  crossed pair, 2-valued              two C2NOTs
  constant                            ancilla initialized to the constant

Multi-factor terms collect their factor wires through a MIN into an
ancilla started at 2; terms are then OR-combined by chaining MAX gates
into the first term's wire.  The alternative shared-accumulator mode
drops all the collectors when every term is a single factor and no two
terms ever fire on the same assignment, writing every firing shift onto
one output ancilla.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .core import (
    BUFFER,
    DUAL_SHIFT,
    SELF_SHIFT,
    SINGLE_SHIFT,
    ProjFamily,
    ShiftOp,
    Trit,
)
from .expr import Const, Expr, Fused, Pair, Proj, Term, minterm_extract
from .gates import (
    C2NOT,
    COST_MODELS,
    GTG,
    HONEST_COST,
    Feynman,
    MaxGate,
    MinGate,
    MultiGTG,
    Netlist,
    netlist_depth,
)
from .sim import VerificationError, exhaustive_check
from .simplify import RewriteTrace, simplify
from .truthtables import (
    MultiOutputFunction,
    TernaryFunction,
    all_inputs,
    builtin,
    default_var_names,
    linear_detect,
)

__all__ = [
    "SynthOptions",
    "SynthReport",
    "synth",
    "max_ancilla",
    "synth_sum_n",
    "synth_prod_n",
    "synth_mul3",
]


@dataclass(frozen=True)
class SynthOptions:
    combine: str = "max"
    cost_model: str = "paper"
    verify: bool = True

    def __post_init__(self):
        if self.combine not in ("max", "shared"):
            raise ValueError(f"combine must be 'max' or 'shared', got {self.combine!r}")
        if self.cost_model not in COST_MODELS:
            raise ValueError(f"unknown cost model {self.cost_model!r}")


@dataclass
class SynthReport:
    name: str
    netlist: Netlist
    max_ancilla: int
    reduced_ancilla: int
    cost: int
    cost_honest: int
    depth: int
    cost_model: str
    paths: dict[str, str]
    expressions: dict[str, Expr]
    traces: dict[str, RewriteTrace]
    verified: bool


def max_ancilla(fn: MultiOutputFunction) -> int:
    """Worst-case ancilla budget: one wire per factor of every minterm,
    before any reduction."""
    return sum(out.nonzero_rows() * fn.arity for out in fn.outputs)


_FIRE = {ProjFamily.L: SINGLE_SHIFT, ProjFamily.J: DUAL_SHIFT}


def _standard_profile(family, level):
    shifts = [None, None, None]
    level = int(level)
    shifts[level] = _FIRE[family]
    shifts[(level + 1) % 3] = BUFFER
    shifts[(level + 2) % 3] = SELF_SHIFT
    return tuple(shifts)


def _buffer_profile(family, level):
    shifts = [BUFFER, BUFFER, BUFFER]
    shifts[int(level)] = _FIRE[family]
    return tuple(shifts)


def _emit_factor_gates(nl, factor, var_names, target, profile):
    """Append the gates that add the factor's value onto target.

    target must hold 0 whenever any of these gates fires.  profile
    picks the idle shifts of the MultiGTGs: "standard" parks SelfShift
    on the second idle level, "buffer" keeps every idle level inert and
    is required whenever the target wire is shared with other firings.
    """
    if isinstance(factor, (Proj, Fused)):
        controls = tuple(var_names[v] for v in factor.vars_used())
        fam = factor.family
        if not fam.primed:
            prof = _standard_profile if profile == "standard" else _buffer_profile
            nl.append(MultiGTG(controls, target, prof(fam, factor.level)))
        else:
            # Fires on the two complementary levels; the second gate must
            # not disturb what the first deposited, so both stay inert
            # away from their own firing level.
            base = fam.base
            for lv in ((factor.level + 1) % 3, (factor.level + 2) % 3):
                nl.append(MultiGTG(controls, target, _buffer_profile(base, lv)))
    elif isinstance(factor, Pair):
        wa, wb = var_names[factor.var_a], var_names[factor.var_b]
        nl.append(C2NOT(wa, wb, target))
        if factor.family is ProjFamily.J:
            nl.append(C2NOT(wa, wb, target))
    elif isinstance(factor, Const):
        raise ValueError("constants carry no gates; initialize an ancilla instead")
    else:
        raise TypeError(f"cannot map factor {factor!r}")


def _emit_factor(nl, factor, var_names):
    if isinstance(factor, Const):
        return nl.add_ancilla("anc", factor.value_)
    anc = nl.add_ancilla("anc", 0)
    _emit_factor_gates(nl, factor, var_names, anc, "standard")
    return anc


def _emit_term(nl, term, var_names):
    if len(term.factors) == 1:
        return _emit_factor(nl, term.factors[0], var_names)
    factor_wires = tuple(_emit_factor(nl, f, var_names) for f in term.factors)
    t = nl.add_ancilla("anc", 2)
    nl.append(MinGate(factor_wires, t))
    return t


def _emit_expr_max(nl, expr, var_names):
    if not expr.terms:
        return nl.add_ancilla("anc", 0)
    term_wires = [_emit_term(nl, t, var_names) for t in expr.terms]
    acc = term_wires[0]
    for w in term_wires[1:]:
        nl.append(MaxGate((w,), acc))
    return acc


def _emit_expr_shared(nl, expr, var_names):
    """One accumulator for the whole expression, or None if unsafe.

    Safe only when every term is a single non-constant factor and no
    two terms fire on the same assignment, so each firing writes the
    term's value onto a wire that still holds 0.
    """
    terms = expr.terms
    if not terms:
        return nl.add_ancilla("anc", 0)
    if any(len(t.factors) != 1 for t in terms):
        return None
    if len(terms) == 1 and isinstance(terms[0].factors[0], Const):
        return nl.add_ancilla("anc", terms[0].factors[0].value_)
    if any(isinstance(t.factors[0], Const) for t in terms):
        return None
    firing = [
        frozenset(row for row in all_inputs(expr.arity) if t.value(row) != 0)
        for t in terms
    ]
    for i in range(len(firing)):
        for j in range(i + 1, len(firing)):
            if firing[i] & firing[j]:
                return None
    acc = nl.add_ancilla("anc", 0)
    for t in terms:
        _emit_factor_gates(nl, t.factors[0], var_names, acc, "buffer")
    return acc


def _emit_linear(nl, c, lams, claimed, later_reads):
    """Feynman chain for an affine column.

    Accumulates in place on the first coefficient-1 input wire that no
    later affine output still needs to read; falls back to an ancilla
    initialized to the constant term.
    """
    names = nl.input_names
    wire_idx = None
    for i, lam in enumerate(lams):
        if lam == 1 and i not in claimed and i not in later_reads:
            wire_idx = i
            break
    if wire_idx is None:
        acc = nl.add_ancilla("anc", c)
        for i, lam in enumerate(lams):
            for _ in range(int(lam)):
                nl.append(Feynman(names[i], acc))
        return acc
    claimed.add(wire_idx)
    w = names[wire_idx]
    for i, lam in enumerate(lams):
        if i == wire_idx:
            continue
        for _ in range(int(lam)):
            nl.append(Feynman(names[i], w))
    if c != 0:
        # Unconditional add: same shift on every control value, so any
        # other wire serves as the (unread) control.
        dummy = next((n for n in names if n != w), None)
        if dummy is None:
            dummy = nl.add_ancilla("anc", 0)
        bump = ShiftOp(Trit(1), c)
        nl.append(GTG(dummy, w, (bump, bump, bump)))
    return w


def _as_multi(fn):
    if isinstance(fn, TernaryFunction):
        return MultiOutputFunction(fn.name, fn.arity, default_var_names(fn.arity), (fn,))
    return fn


def synth(fn: Union[MultiOutputFunction, TernaryFunction], options: Optional[SynthOptions] = None) -> SynthReport:
    """Build a verified netlist for every output of fn."""
    fn = _as_multi(fn)
    opts = options or SynthOptions()
    var_names = tuple(fn.var_names)
    nl = Netlist(input_names=var_names)

    linear_outs = []
    generic_outs = []
    for out in fn.outputs:
        hit = linear_detect(out)
        if hit is None:
            generic_outs.append(out)
        else:
            linear_outs.append((out, hit))

    paths: dict[str, str] = {}
    expressions: dict[str, Expr] = {}
    traces: dict[str, RewriteTrace] = {}
    out_wires: dict[str, str] = {}

    # Generic outputs first: their gates only read the input wires,
    # while affine accumulation may overwrite them.
    for out in generic_outs:
        reduced, trace = simplify(minterm_extract(out))
        expressions[out.name] = reduced
        traces[out.name] = trace
        wire = None
        if opts.combine == "shared":
            wire = _emit_expr_shared(nl, reduced, var_names)
        if wire is None:
            paths[out.name] = "sum-of-products"
            wire = _emit_expr_max(nl, reduced, var_names)
        else:
            paths[out.name] = "sum-of-products/shared"
        out_wires[out.name] = wire

    claimed: set[int] = set()
    for k, (out, (c, lams)) in enumerate(linear_outs):
        later_reads = {
            i
            for _, (_, later_lams) in linear_outs[k + 1 :]
            for i, lam in enumerate(later_lams)
            if lam != 0
        }
        out_wires[out.name] = _emit_linear(nl, c, lams, claimed, later_reads)
        paths[out.name] = "linear"

    for out in fn.outputs:
        nl.outputs[out.name] = out_wires[out.name]

    verified = False
    if opts.verify:
        res = exhaustive_check(nl, fn)
        if not res.ok:
            raise VerificationError(
                f"netlist for {fn.name!r} failed: {res.message()}",
                res.counterexample,
            )
        verified = True

    model = COST_MODELS[opts.cost_model]
    return SynthReport(
        name=fn.name,
        netlist=nl,
        max_ancilla=max_ancilla(fn),
        reduced_ancilla=nl.ancilla_count,
        cost=model.netlist_cost(nl),
        cost_honest=HONEST_COST.netlist_cost(nl),
        depth=netlist_depth(nl),
        cost_model=model.name,
        paths=paths,
        expressions=expressions,
        traces=traces,
        verified=verified,
    )


# Hand-shaped builders for the scaling families.  These skip table
# enumeration entirely, so they stay cheap at widths where 3**n rows
# would not.

def _finish_report(name, nl, max_anc, paths, expressions, traces, cost_model, verify, reference):
    verified = False
    if verify:
        res = exhaustive_check(nl, reference())
        if not res.ok:
            raise VerificationError(f"netlist for {name!r} failed: {res.message()}", res.counterexample)
        verified = True
    model = COST_MODELS[cost_model]
    return SynthReport(
        name=name,
        netlist=nl,
        max_ancilla=max_anc,
        reduced_ancilla=nl.ancilla_count,
        cost=model.netlist_cost(nl),
        cost_honest=HONEST_COST.netlist_cost(nl),
        depth=netlist_depth(nl),
        cost_model=model.name,
        paths=paths,
        expressions=expressions,
        traces=traces,
        verified=verified,
    )


def synth_sum_n(n: int, *, verify: bool = True, cost_model: str = "paper") -> SynthReport:
    """Mod-3 sum of n inputs: a Feynman chain onto the first wire."""
    if n < 2:
        raise ValueError(f"need at least 2 inputs, got {n}")
    names = default_var_names(n)
    nl = Netlist(input_names=names)
    for i in range(1, n):
        nl.append(Feynman(names[i], names[0]))
    out = f"sum{n}"
    nl.outputs[out] = names[0]
    # 2 of every 3 sums are nonzero, each minterm carrying n factors.
    max_anc = 2 * 3 ** (n - 1) * n
    return _finish_report(
        out, nl, max_anc, {out: "linear"}, {}, {}, cost_model, verify,
        lambda: TernaryFunction.from_callable(out, n, lambda *xs: sum(xs) % 3),
    )


def _emit_min2_block(nl, u, v):
    """min(u, v) onto a fresh wire: fused level-1 hit, crossed pair,
    fused level-2 hit, collected by MAX."""
    t = nl.add_ancilla("anc", 0)
    nl.append(MultiGTG((u, v), t, _standard_profile(ProjFamily.L, 1)))
    p = nl.add_ancilla("anc", 0)
    nl.append(C2NOT(u, v, p))
    j = nl.add_ancilla("anc", 0)
    nl.append(MultiGTG((u, v), j, _standard_profile(ProjFamily.J, 2)))
    nl.append(MaxGate((p,), t))
    nl.append(MaxGate((j,), t))
    return t


def _emit_gf3mul_block(nl, u, v):
    """(u * v) mod 3 onto a fresh wire."""
    t = nl.add_ancilla("anc", 0)
    nl.append(MultiGTG((u, v), t, _standard_profile(ProjFamily.L, 1)))
    f2 = nl.add_ancilla("anc", 0)
    nl.append(MultiGTG((u, v), f2, _standard_profile(ProjFamily.L, 2)))
    p = nl.add_ancilla("anc", 0)
    nl.append(C2NOT(u, v, p))
    nl.append(C2NOT(u, v, p))
    nl.append(MaxGate((f2,), t))
    nl.append(MaxGate((p,), t))
    return t


def synth_prod_n(n: int, *, verify: bool = True, cost_model: str = "paper") -> SynthReport:
    """Minimum of n inputs: a balanced tree of two-input min blocks."""
    if n < 2:
        raise ValueError(f"need at least 2 inputs, got {n}")
    names = default_var_names(n)
    nl = Netlist(input_names=names)
    level = list(names)
    while len(level) > 1:
        nxt = []
        for i in range(0, len(level) - 1, 2):
            nxt.append(_emit_min2_block(nl, level[i], level[i + 1]))
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    out = f"prod{n}"
    nl.outputs[out] = level[0]
    # Minterms exist exactly where every input is nonzero.
    max_anc = 2 ** n * n
    return _finish_report(
        out, nl, max_anc, {out: "blocks"}, {}, {}, cost_model, verify,
        lambda: TernaryFunction.from_callable(out, n, lambda *xs: min(xs)),
    )


def synth_mul3(*, verify: bool = True, cost_model: str = "paper") -> SynthReport:
    """Three-input mod-3 product with carry.

    The product cascades two two-input multiply blocks; the carry column
    is not affine and has no block decomposition, so it runs through the
    generic pipeline.
    """
    fn = builtin("mul3")
    names = tuple(fn.var_names)
    nl = Netlist(input_names=names)
    t1 = _emit_gf3mul_block(nl, names[0], names[1])
    t2 = _emit_gf3mul_block(nl, t1, names[2])
    carry = fn.output("mul3c")
    reduced, trace = simplify(minterm_extract(carry))
    cw = _emit_expr_max(nl, reduced, names)
    nl.outputs["mul3"] = t2
    nl.outputs["mul3c"] = cw
    return _finish_report(
        "mul3", nl, max_ancilla(fn),
        {"mul3": "blocks", "mul3c": "sum-of-products"},
        {"mul3c": reduced}, {"mul3c": trace},
        cost_model, verify, lambda: fn,
    )
