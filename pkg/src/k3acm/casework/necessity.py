"""End-to-end replay of the rank-2 classification over a chosen lattice.

verify_necessity drives the whole argument for one polarized rank-2
presentation (h, B): classify B, reduce the presentation if it is one of
the two substitution cases, enumerate the bounded survivor classes of
the matching constraint system, run the elimination script attached to
every survivor, and resolve the three small-tail families |t| <= 1 that
the enumeration excludes by construction.  The result is VERIFIED only
if every piece succeeds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..classifier import (AcmStatus, Assumption, is_initialized_acm)
from ..errors import BadParametersError, NotAcmInputError
from ..lattice import DivClass, Lattice
from .casebook import script_by_tag
from .constraints import enumerate_case
from .presets import (PRESET_PRESENTATION, QUARTIC_PRESENTATIONS, lemma_case)
from .scripts import DerivationReport, run_script, report_to_json

# presentations that reduce to another one through a basis substitution
_REDUCTIONS = {
    (0, 3): ("reduction-B20-Bh3", DivClass((1, -1)), (-2, 1)),
    (2, 5): ("reduction-B22-Bh5", DivClass((2, -1)), (-2, 3)),
}

_PRESET_FOR = {QUARTIC_PRESENTATIONS[key]: pid
               for pid, key in PRESET_PRESENTATION.items()}

# survivor (s, t) -> elimination script, per constraint system
_SCRIPT_FOR = {
    ("i-a", (3, -2)): "case-B2neg2-Bh1",
    ("i-b", (2, 2)): "case-B2neg2-Bh2",
    ("i-b", (4, -2)): "case-B2neg2-Bh2-mirror",
    ("i-c", (4, -2)): "case-B2neg2-Bh3",
    ("ii", (1, 2)): "case-B20-Bh4",
    ("ii", (5, -2)): "case-B20-Bh4-mirror",
    ("iii", (0, 2)): "case-B24",
    ("iii", (6, -2)): "case-B24-mirror",
}

_SUPPORT_FOR = {"iii": ("gonality-2B",)}


@dataclass(frozen=True)
class SurvivorMatch:
    survivor: tuple[int, int]
    script_tag: str
    report: DerivationReport


@dataclass(frozen=True)
class ReductionRow:
    """One small-tail family |t| <= 1, resolved without enumeration."""

    t: int
    rule: str
    note: str


@dataclass(frozen=True)
class NecessityReport:
    lattice: Lattice
    profile: tuple[int, int]
    classification: str
    substitution: tuple[str, tuple[int, int]] | None
    substitution_report: DerivationReport | None
    preset_id: str
    survivors: tuple[tuple[int, int], ...]
    matches: tuple[SurvivorMatch, ...]
    supports: tuple[DerivationReport, ...]
    reductions: tuple[ReductionRow, ...]
    unmatched: tuple[tuple[int, int], ...]
    status: str  # "VERIFIED" or "INCOMPLETE"

    @property
    def verified(self) -> bool:
        return self.status == "VERIFIED"


def _tail_rows() -> tuple[ReductionRow, ...]:
    return (
        ReductionRow(
            t=-1, rule="dual-twist",
            note="c1 = s h - B: the dual bundle twisted back has "
                 "c1 = (2k - s) h + B, landing in the t = 1 family"),
        ReductionRow(
            t=0, rule="h-multiple",
            note="c1 = s h: twisting by h-multiples reduces to the split "
                 "classification of c1 proportional to the polarization"),
        ReductionRow(
            t=1, rule="hypothesis-twist",
            note="c1 = s h + B: twisting by h-multiples reduces to the "
                 "admitted pencil-bundle family with c1 = B or h + B"),
    )


def verify_necessity(lat: Lattice, b: DivClass,
                     assumptions: Sequence[Assumption] = (),
                     box: int = 32) -> NecessityReport:
    """Replay the classification for the presentation (h, B) of lat.

    Needs the rank-2 presentation with ample h = (1, 0), B = (0, 1) and
    h^2 = 4.  Raises NotAcmInputError if B does not classify as an
    initialized aCM class under the given assumptions.
    """
    if lat.rank != 2 or lat.ample.coords != (1, 0):
        raise BadParametersError(
            "the classification replay needs the rank-2 polarized "
            "presentation with basis (h, B)")
    if b.coords != (0, 1):
        raise BadParametersError(
            "the distinguished class must be the second basis vector")
    if lat.gram[0][0] != 4:
        raise BadParametersError("the polarization must have square 4")
    cls = is_initialized_acm(lat, b, assumptions)
    if cls.status not in (AcmStatus.ACM, AcmStatus.ACM_ULRICH):
        raise NotAcmInputError(
            f"B classifies as {cls.status.value}; the replay needs an "
            "initialized aCM class"
            + (f" (missing: {', '.join(str(m) for m in cls.missing)})"
               if cls.missing else ""))
    profile = (lat.self_int(b), lat.deg(b))
    substitution = None
    substitution_report = None
    work_profile = profile
    if profile in _REDUCTIONS:
        tag, sub_class, target = _REDUCTIONS[profile]
        substitution_report = run_script(script_by_tag(tag))
        substitution = (tag, target)
        work_profile = target
    if work_profile not in _PRESET_FOR:
        raise BadParametersError(
            f"no constraint system covers the presentation {work_profile}")
    preset_id = _PRESET_FOR[work_profile]
    spec = lemma_case(preset_id, box=box)
    survivors = tuple(enumerate_case(spec))
    matches = []
    unmatched = []
    for survivor in survivors:
        key = (preset_id, survivor)
        if key not in _SCRIPT_FOR:
            unmatched.append(survivor)
            continue
        tag = _SCRIPT_FOR[key]
        matches.append(SurvivorMatch(survivor=survivor, script_tag=tag,
                                     report=run_script(script_by_tag(tag))))
    supports = tuple(run_script(script_by_tag(t))
                     for t in _SUPPORT_FOR.get(preset_id, ()))
    rows = _tail_rows()
    ok = (not unmatched
          and all(m.report.success for m in matches)
          and all(s.success for s in supports)
          and (substitution_report is None or substitution_report.success))
    return NecessityReport(
        lattice=lat, profile=profile, classification=cls.status.value,
        substitution=substitution, substitution_report=substitution_report,
        preset_id=preset_id, survivors=survivors, matches=tuple(matches),
        supports=supports, reductions=rows,
        unmatched=tuple(unmatched),
        status="VERIFIED" if ok else "INCOMPLETE")


def necessity_to_json(report: NecessityReport) -> dict:
    out = {
        "profile": list(report.profile),
        "classification": report.classification,
        "preset": report.preset_id,
        "survivors": [list(s) for s in report.survivors],
        "matches": [
            {"survivor": list(m.survivor), "script": m.script_tag,
             "report": report_to_json(m.report)}
            for m in report.matches
        ],
        "supports": [report_to_json(s) for s in report.supports],
        "reductions": [
            {"t": r.t, "rule": r.rule, "note": r.note}
            for r in report.reductions
        ],
        "unmatched": [list(s) for s in report.unmatched],
        "status": report.status,
    }
    if report.substitution is not None:
        out["substitution"] = {
            "script": report.substitution[0],
            "target": list(report.substitution[1]),
            "report": report_to_json(report.substitution_report),
        }
    return out
