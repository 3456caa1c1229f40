"""Replayable derivation scripts.

A DerivationScript is the machine-checkable skeleton of one prose
elimination argument: a sequence of steps, each either

  * an ArithClaim  -- an exact integer (in)equality whose sides are
    expressions over the lattice (pairings, genus, chi, Brill-Noether
    numbers, ...), re-evaluated and checked on every run; or
  * an AxiomUse    -- a citation of a registered cohomological fact,
    recorded but not checked.

A script concludes either in a Contradiction (its final step must be an
arithmetic claim that verifies while being flagged as impossible given a
named fact: the "P and not P" shape) or in an Established statement.

Expressions are JSON values (ints or {"op": ...} dicts), so scripts and
reports serialize losslessly.  Because claims recompute from the gram
matrix at run time, corrupting any lattice entry makes claims fail.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Any, Sequence

from ..axioms import is_registered
from ..errors import MalformedScriptError, WorkbenchError
from ..invariants import brill_noether as _bn
from ..invariants import chi_line, genus_of, hodge_lower, twist_chi
from ..lattice import DivClass, Lattice
from .constraints import check_rel

RELATIONS = ("=", "<=", "<", ">=", ">")

Expr = Any  # int, or a dict {"op": str, ...}


def _coords(value) -> DivClass:
    return DivClass(value)


def _minimax(p: int, q: int) -> int:
    """min over integer a of max(a + p, q - a), computed exactly.

    The function is convex piecewise-linear with slopes -1 and +1, so the
    minimum sits at the crossing a ~ (q - p) / 2; evaluating both integer
    neighbours of the crossing is exact.
    """
    lo = (q - p) // 2
    candidates = (lo, lo + 1)
    return min(max(a + p, q - a) for a in candidates)


def evaluate(expr: Expr, lat: Lattice) -> int:
    """Evaluate an expression to an exact integer against a lattice."""
    if isinstance(expr, bool):
        raise MalformedScriptError("boolean is not a valid expression")
    if isinstance(expr, int):
        return expr
    if not isinstance(expr, dict) or "op" not in expr:
        raise MalformedScriptError(f"bad expression: {expr!r}")
    op = expr["op"]
    if op == "pair":
        return lat.pair(_coords(expr["a"]), _coords(expr["b"]))
    if op == "self":
        return lat.self_int(_coords(expr["a"]))
    if op == "deg":
        return lat.deg(_coords(expr["a"]))
    if op == "genus":
        return genus_of(lat.self_int(_coords(expr["a"])))
    if op == "genus_value":
        return genus_of(evaluate(expr["sq"], lat))
    if op == "chi_line":
        return chi_line(lat.self_int(_coords(expr["a"])))
    if op == "chi_of":
        return chi_line(evaluate(expr["sq"], lat))
    if op == "chi_bundle":
        sq = lat.self_int(_coords(expr["c1"]))
        return 2 * int(expr["rank"]) + chi_line(sq) - 2 - evaluate(expr["c2"], lat)
    if op == "c2_twist":
        c1 = _coords(expr["c1"])
        by = _coords(expr["by"])
        return evaluate(expr["c2"], lat) + lat.pair(c1, by) + lat.self_int(by)
    if op == "brill_noether":
        return _bn(evaluate(expr["g"], lat), evaluate(expr["r"], lat),
                   evaluate(expr["d"], lat))
    if op == "twist_chi":
        return twist_chi(evaluate(expr["l"], lat), evaluate(expr["ch"], lat),
                         evaluate(expr["g"], lat), evaluate(expr["d"], lat))
    if op == "lm_h0":
        g = evaluate(expr["g"], lat)
        r = evaluate(expr["r"], lat)
        d = evaluate(expr["d"], lat)
        return g - d + 1 + 2 * r
    if op == "hodge_lower":
        return hodge_lower(evaluate(expr["a"], lat), evaluate(expr["b"], lat))
    if op == "minimax":
        return _minimax(evaluate(expr["p"], lat), evaluate(expr["q"], lat))
    if op == "add":
        return sum(evaluate(x, lat) for x in expr["args"])
    if op == "mul":
        total = 1
        for x in expr["args"]:
            total *= evaluate(x, lat)
        return total
    if op == "sub":
        return evaluate(expr["x"], lat) - evaluate(expr["y"], lat)
    if op == "neg":
        return -evaluate(expr["x"], lat)
    if op == "mod":
        return evaluate(expr["x"], lat) % int(expr["m"])
    if op == "linf":
        return max(abs(int(c)) for c in expr["a"])
    if op == "odd_diag":
        return sum(lat.gram[i][i] % 2 for i in range(lat.rank))
    if op == "sig_pos":
        return lat.signature()[0]
    if op == "sig_neg":
        return lat.signature()[1]
    raise MalformedScriptError(f"unknown expression op {op!r}")


# ---- helpers for writing expressions in builders ----------------------------

def pair_of(a: DivClass, b: DivClass) -> Expr:
    return {"op": "pair", "a": list(a.coords), "b": list(b.coords)}


def self_of(a: DivClass) -> Expr:
    return {"op": "self", "a": list(a.coords)}


def deg_of(a: DivClass) -> Expr:
    return {"op": "deg", "a": list(a.coords)}


def genus_expr(a: DivClass) -> Expr:
    return {"op": "genus", "a": list(a.coords)}


# ---- steps -------------------------------------------------------------------

@dataclass(frozen=True)
class ArithClaim:
    """label: short stable name; lhs rel rhs is checked exactly.

    ``contradicts``: when set, the claim is asserting something that the
    named fact forbids -- the verified claim plus the cited fact form the
    final "P and not P" of a contradiction script.
    """

    label: str
    lhs: Expr
    rel: str
    rhs: Expr
    cite: str = ""
    contradicts: str = ""

    kind = "arith"

    def __post_init__(self):
        if self.rel not in RELATIONS:
            raise MalformedScriptError(f"unknown relation {self.rel!r}")


@dataclass(frozen=True)
class AxiomUse:
    axiom_id: str
    note: str = ""
    cite: str = ""

    kind = "axiom"

    def __post_init__(self):
        if not is_registered(self.axiom_id):
            raise MalformedScriptError(f"unregistered axiom id {self.axiom_id!r}")


Step = ArithClaim | AxiomUse


@dataclass(frozen=True)
class Conclusion:
    kind: str  # "contradiction" | "established"
    statement: str = ""

    def __post_init__(self):
        if self.kind not in ("contradiction", "established"):
            raise MalformedScriptError(f"unknown conclusion kind {self.kind!r}")
        if self.kind == "established" and not self.statement:
            raise MalformedScriptError("an established conclusion needs a statement")


CONTRADICTION = Conclusion("contradiction")


def established(statement: str) -> Conclusion:
    return Conclusion("established", statement)


@dataclass(frozen=True)
class DerivationScript:
    tag: str
    lattice: Lattice
    steps: tuple[Step, ...]
    conclusion: Conclusion
    description: str = ""

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        for st in self.steps:
            if not isinstance(st, (ArithClaim, AxiomUse)):
                raise MalformedScriptError(f"bad step {st!r}")
        if self.conclusion.kind == "contradiction":
            if not self.steps or not isinstance(self.steps[-1], ArithClaim) \
                    or not self.steps[-1].contradicts:
                raise MalformedScriptError(
                    "a contradiction script must end with an arithmetic claim "
                    "flagged with the fact it contradicts")

    def with_lattice(self, lat: Lattice) -> "DerivationScript":
        return replace(self, lattice=lat)


# ---- running -----------------------------------------------------------------

@dataclass(frozen=True)
class StepReport:
    index: int
    kind: str
    label: str
    status: str  # "Verified" | "AxiomUsed" | "FAILED"
    detail: str = ""


@dataclass(frozen=True)
class DerivationReport:
    tag: str
    success: bool
    conclusion: Conclusion
    steps: tuple[StepReport, ...]
    failed: tuple[int, ...] = field(default=())

    def summary(self) -> str:
        n_ax = sum(1 for s in self.steps if s.status == "AxiomUsed")
        n_ver = sum(1 for s in self.steps if s.status == "Verified")
        head = "Success" if self.success else "FAILED"
        return (f"{self.tag}: {head} "
                f"({n_ver} claims verified, {n_ax} axioms cited"
                + (f", {len(self.failed)} failed" if self.failed else "") + ")")


def run_script(script: DerivationScript) -> DerivationReport:
    """Re-check every arithmetic claim of a script against its lattice.

    Evaluation errors (odd squares after a corrupted gram entry, bad
    expressions) count as FAILED steps, never escape as exceptions.
    Success requires zero FAILED steps; a contradiction conclusion
    additionally requires its final flagged claim to have verified.
    """
    reports: list[StepReport] = []
    failed: list[int] = []
    for i, st in enumerate(script.steps):
        if isinstance(st, AxiomUse):
            reports.append(StepReport(i, "axiom", st.axiom_id, "AxiomUsed", st.note))
            continue
        try:
            lhs = evaluate(st.lhs, script.lattice)
            rhs = evaluate(st.rhs, script.lattice)
        except WorkbenchError as exc:
            failed.append(i)
            reports.append(StepReport(i, "arith", st.label, "FAILED",
                                      f"evaluation error: {exc}"))
            continue
        if check_rel(st.rel, lhs, rhs):
            detail = f"{lhs} {st.rel} {rhs}"
            if st.contradicts:
                detail += f"; impossible given {st.contradicts}"
            reports.append(StepReport(i, "arith", st.label, "Verified", detail))
        else:
            failed.append(i)
            reports.append(StepReport(i, "arith", st.label, "FAILED",
                                      f"claim {lhs} {st.rel} {rhs} is false"))
    success = not failed
    if script.conclusion.kind == "contradiction" and success:
        success = reports[-1].status == "Verified"
    return DerivationReport(tag=script.tag, success=success,
                            conclusion=script.conclusion,
                            steps=tuple(reports), failed=tuple(failed))


# ---- JSON --------------------------------------------------------------------

def step_to_json(st: Step) -> dict:
    if isinstance(st, AxiomUse):
        return {"kind": "axiom", "id": st.axiom_id, "note": st.note, "cite": st.cite}
    out = {"kind": "arith", "label": st.label, "lhs": st.lhs, "rel": st.rel,
           "rhs": st.rhs, "cite": st.cite}
    if st.contradicts:
        out["contradicts"] = st.contradicts
    return out


_ARITH_KEYS = {"kind", "label", "lhs", "rel", "rhs", "cite", "contradicts"}
_AXIOM_KEYS = {"kind", "id", "note", "cite"}


def step_from_json(data: dict) -> Step:
    if not isinstance(data, dict) or "kind" not in data:
        raise MalformedScriptError(f"bad step: {data!r}")
    if data["kind"] == "axiom":
        extra = set(data) - _AXIOM_KEYS
        if extra:
            raise MalformedScriptError(f"unexpected step keys: {sorted(extra)}")
        return AxiomUse(axiom_id=data["id"], note=data.get("note", ""),
                        cite=data.get("cite", ""))
    if data["kind"] == "arith":
        extra = set(data) - _ARITH_KEYS
        if extra:
            raise MalformedScriptError(f"unexpected step keys: {sorted(extra)}")
        try:
            return ArithClaim(label=data["label"], lhs=data["lhs"],
                              rel=data["rel"], rhs=data["rhs"],
                              cite=data.get("cite", ""),
                              contradicts=data.get("contradicts", ""))
        except KeyError as exc:
            raise MalformedScriptError(f"arith step missing key {exc}") from None
    raise MalformedScriptError(f"unknown step kind {data['kind']!r}")


def script_to_json(script: DerivationScript) -> dict:
    return {
        "tag": script.tag,
        "description": script.description,
        "lattice": {
            "gram": [list(row) for row in script.lattice.gram],
            "labels": list(script.lattice.labels),
            "ample": list(script.lattice.ample.coords),
            "k3": script.lattice.k3,
        },
        "steps": [step_to_json(st) for st in script.steps],
        "conclusion": {"kind": script.conclusion.kind,
                       "statement": script.conclusion.statement},
    }


_SCRIPT_KEYS = {"tag", "description", "lattice", "steps", "conclusion"}
_SCRIPT_LATTICE_KEYS = {"gram", "labels", "ample", "k3"}


def script_from_json(data: dict) -> DerivationScript:
    if not isinstance(data, dict):
        raise MalformedScriptError("script JSON must be an object")
    extra = set(data) - _SCRIPT_KEYS
    if extra:
        raise MalformedScriptError(f"unexpected script keys: {sorted(extra)}")
    try:
        lat_data = data["lattice"]
        extra = set(lat_data) - _SCRIPT_LATTICE_KEYS
        if extra:
            raise MalformedScriptError(f"unexpected lattice keys: {sorted(extra)}")
        lat = Lattice(gram=lat_data["gram"], labels=lat_data["labels"],
                      ample=DivClass(lat_data["ample"]), k3=lat_data.get("k3", False))
        steps = tuple(step_from_json(st) for st in data["steps"])
        conc = data["conclusion"]
        conclusion = Conclusion(conc["kind"], conc.get("statement", ""))
        return DerivationScript(tag=data["tag"], lattice=lat, steps=steps,
                                conclusion=conclusion,
                                description=data.get("description", ""))
    except (KeyError, TypeError) as exc:
        raise MalformedScriptError(f"malformed script JSON: {exc}") from None


def report_to_json(report: DerivationReport) -> dict:
    return {
        "tag": report.tag,
        "status": "Success" if report.success else "FAILED",
        "conclusion": {"kind": report.conclusion.kind,
                       "statement": report.conclusion.statement},
        "steps": [
            {"index": s.index, "kind": s.kind, "label": s.label,
             "status": s.status, "detail": s.detail}
            for s in report.steps
        ],
    }
