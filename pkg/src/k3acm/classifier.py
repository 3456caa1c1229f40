"""Classifier for initialized aCM line bundles on the quartic surface.

A nontrivial class B with nonempty linear system is initialized aCM
exactly when (B^2, H.B) falls in one of four windows:

    (a) B^2 = -2 and 1 <= H.B <= 3
    (b) B^2 =  0 and 3 <= H.B <= 4
    (c) B^2 =  2 and H.B = 5
    (d) B^2 =  4, H.B = 6, and both |B - H| and |2H - B| are empty.

Case (d) is the Ulrich window; its two emptiness conditions cannot be
decided by lattice data alone, so the classifier either certifies them
through the effectivity oracle (user assumptions included) or reports
exactly which facts are missing.  Everything is a pure function of
(B^2, H.B) and the assumption set; no geometry is consulted.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    ConflictingAssumptionsError,
    NotAcmInputError,
    NotEffectiveCandidateError,
    TrivialClassError,
)
from .lattice import DivClass, Lattice


class AssumptionKind(enum.Enum):
    EFFECTIVE = "Effective"
    EMPTY = "Empty"
    IRREDUCIBLE_CURVE = "IrreducibleCurve"
    ELLIPTIC_PENCIL = "EllipticPencil"
    BASE_POINT_FREE = "BasePointFree"


# kinds that assert the linear system is nonempty
_NONEMPTY_KINDS = {
    AssumptionKind.EFFECTIVE,
    AssumptionKind.IRREDUCIBLE_CURVE,
    AssumptionKind.ELLIPTIC_PENCIL,
}


@dataclass(frozen=True)
class Assumption:
    """A user-supplied geometric fact about one divisor class."""

    subject: DivClass
    kind: AssumptionKind
    note: str = ""


class Effectivity(enum.Enum):
    EFFECTIVE = "Effective"
    EMPTY = "Empty"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Verdict:
    value: Effectivity
    reason: str = ""

    def __post_init__(self):
        if self.value is not Effectivity.UNKNOWN and not self.reason:
            raise ValueError("decided verdicts must carry a reason")


class AcmStatus(enum.Enum):
    NOT_ACM = "NotAcm"
    ACM = "Acm"
    ACM_ULRICH = "AcmUlrich"
    NEEDS_ASSUMPTION = "NeedsAssumption"


@dataclass(frozen=True)
class AcmClassification:
    status: AcmStatus
    case_tag: str  # one of "a", "b", "c", "d", "none"
    missing: tuple[Assumption, ...] = field(default=())


def _conflict_check(assumptions: Sequence[Assumption]) -> None:
    empty = {a.subject.coords for a in assumptions
             if a.kind is AssumptionKind.EMPTY}
    nonempty = {a.subject.coords for a in assumptions
                if a.kind in _NONEMPTY_KINDS}
    clash = empty & nonempty
    if clash:
        raise ConflictingAssumptionsError(
            f"classes asserted both effective and empty: {sorted(clash)}")


def effectivity(lat: Lattice, d: DivClass,
                assumptions: Sequence[Assumption] = ()) -> Verdict:
    """Decide |D| nonempty / empty / unknown from lattice data + assumptions.

    Decision rules, in order:
      Effective: D = 0; or an assumption asserts a member of |D|; or
                 D^2 >= -2 with positive ample degree (Riemann-Roch).
      Empty:     an Empty assumption; or D != 0 with nonpositive ample
                 degree (an effective class meets an ample class positively).
      Unknown otherwise.

    The Riemann-Roch rule outranks an Empty assumption, so bad assumptions
    can never make a provably effective class come out Empty.
    """
    _conflict_check(assumptions)
    if d.is_zero():
        return Verdict(Effectivity.EFFECTIVE, "zero-class")
    for a in assumptions:
        if a.subject == d and a.kind in _NONEMPTY_KINDS:
            return Verdict(Effectivity.EFFECTIVE, f"assumed-{a.kind.value}")
    if lat.self_int(d) >= -2 and lat.deg(d) > 0:
        return Verdict(Effectivity.EFFECTIVE, "riemann-roch-positive-degree")
    for a in assumptions:
        if a.subject == d and a.kind is AssumptionKind.EMPTY:
            return Verdict(Effectivity.EMPTY, "assumed-Empty")
    if lat.deg(d) <= 0:
        return Verdict(Effectivity.EMPTY, "nonpositive-ample-degree")
    return Verdict(Effectivity.UNKNOWN)


def is_initialized_acm(lat: Lattice, b: DivClass,
                       assumptions: Sequence[Assumption] = ()) -> AcmClassification:
    """Classify B against the four-case window (pure in (B^2, H.B))."""
    if b.is_zero():
        raise TrivialClassError("the zero class is excluded from classification")
    verdict = effectivity(lat, b, assumptions)
    if verdict.value is Effectivity.EMPTY:
        raise NotEffectiveCandidateError(
            f"|B| is empty ({verdict.reason}); B = {b}")
    b2 = lat.self_int(b)
    hb = lat.deg(b)
    if b2 == -2 and 1 <= hb <= 3:
        return AcmClassification(AcmStatus.ACM, "a")
    if b2 == 0 and 3 <= hb <= 4:
        return AcmClassification(AcmStatus.ACM, "b")
    if b2 == 2 and hb == 5:
        return AcmClassification(AcmStatus.ACM, "c")
    if b2 == 4 and hb == 6:
        h = lat.ample
        need = (b - h, 2 * h - b)
        verdicts = [effectivity(lat, q, assumptions) for q in need]
        if any(v.value is Effectivity.EFFECTIVE for v in verdicts):
            # an Ulrich candidate with a section of B-H or 2H-B is not initialized aCM
            return AcmClassification(AcmStatus.NOT_ACM, "none")
        missing = tuple(
            Assumption(q, AssumptionKind.EMPTY,
                       "emptiness needed for the Ulrich window")
            for q, v in zip(need, verdicts)
            if v.value is Effectivity.UNKNOWN)
        if missing:
            return AcmClassification(AcmStatus.NEEDS_ASSUMPTION, "d", missing)
        return AcmClassification(AcmStatus.ACM_ULRICH, "d")
    return AcmClassification(AcmStatus.NOT_ACM, "none")


def acm_companions(lat: Lattice, b: DivClass, classification: AcmClassification,
                   assumptions: Sequence[Assumption] = ()) -> list[tuple[DivClass, str]]:
    """Companion aCM classes of a classified B.

    -B is always aCM (but never initialized: its system is empty), and the
    complements H-B / 2H-B / 3H-B are again *initialized* aCM in the
    windows below.  Each initialized companion is re-classified here and
    must land back in the table; a failure means corrupt input.
    """
    if classification.status not in (AcmStatus.ACM, AcmStatus.ACM_ULRICH):
        raise NotAcmInputError(
            f"companions need an Acm/AcmUlrich input, got {classification.status.value}")
    h = lat.ample
    b2 = lat.self_int(b)
    hb = lat.deg(b)
    out: list[tuple[DivClass, str]] = [(-b, "dual-acm-not-initialized")]
    initialized: list[tuple[DivClass, str]] = []
    if b2 == -2 and 1 <= hb <= 2:
        initialized.append((h - b, "complement-in-h"))
    if b2 == 2 or (b2 == 0 and hb == 4) or (b2 == -2 and hb == 3):
        initialized.append((2 * h - b, "complement-in-2h"))
    if b2 == 4:
        initialized.append((3 * h - b, "complement-in-3h"))
    for comp, _rule in initialized:
        redo = is_initialized_acm(lat, comp, assumptions)
        if redo.status not in (AcmStatus.ACM, AcmStatus.ACM_ULRICH):
            raise NotAcmInputError(
                f"companion {comp} failed re-classification "
                f"({redo.status.value}); lattice data is inconsistent")
    out.extend(initialized)
    return out


class PencilVerdict(enum.Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"


def is_elliptic_pencil_class(lat: Lattice, d: DivClass,
                             assumptions: Sequence[Assumption] = ()) -> tuple[PencilVerdict, str]:
    """Is |D| an elliptic pencil?

    A pencil class must have square zero, so nonzero square is a definite
    No.  Square zero with degree 3 against the quartic polarization is a
    definite Yes; otherwise only an assumption decides.
    """
    _conflict_check(assumptions)
    if lat.self_int(d) != 0:
        return PencilVerdict.NO, "nonzero-self-intersection"
    if lat.deg(d) == 3:
        return PencilVerdict.YES, "square-zero-degree-3"
    for a in assumptions:
        if a.subject == d and a.kind is AssumptionKind.ELLIPTIC_PENCIL:
            return PencilVerdict.YES, "assumed-EllipticPencil"
    return PencilVerdict.UNKNOWN, ""


def derived_assumptions(lat: Lattice, b: DivClass,
                        classification: AcmClassification,
                        assumptions: Sequence[Assumption] = ()) -> list[Assumption]:
    """Facts about B and its companions that follow from the case table.

    Used to seed the destabilizing-pair engine: B and every initialized
    companion are effective; those with square >= 2 are base point free,
    and the square-0 ones have nonempty moving part (recorded as Effective
    plus BasePointFree for squares >= 2 only).
    """
    out = list(assumptions)

    def add(subject: DivClass, kind: AssumptionKind, note: str):
        for a in out:
            if a.subject == subject and a.kind is kind:
                return
        out.append(Assumption(subject, kind, note))

    add(b, AssumptionKind.EFFECTIVE, "classified initialized aCM")
    if lat.self_int(b) >= 2:
        add(b, AssumptionKind.BASE_POINT_FREE,
            "initialized aCM with square >= 2 is base point free")
    for comp, rule in acm_companions(lat, b, classification, assumptions):
        if rule == "dual-acm-not-initialized":
            continue
        add(comp, AssumptionKind.EFFECTIVE, f"companion ({rule})")
        if lat.self_int(comp) >= 2:
            add(comp, AssumptionKind.BASE_POINT_FREE,
                "companion with square >= 2 is base point free")
    return out
