"""Shipped lattices and the five bounded enumeration presets.

The quartic presentations are the rank-2 sublattices spanned by the
hyperplane class h (h^2 = 4) and one initialized aCM class B, one per
admissible (B^2, h.B) window.  The rank-8 lattice is the Picard lattice
of the quartic double cover of a degree-2 del Pezzo surface.

Each enumeration preset bounds the coefficients of C = s*h + t*B for a
smooth genus >= 3 curve class C carrying an initialized aCM pencil
bundle, using exactly the inequalities of the elimination argument.
"""

from __future__ import annotations

from ..classifier import Assumption, AssumptionKind
from ..errors import BadParametersError
from ..lattice import DivClass, Lattice
from .constraints import (CaseSpec, abs_t_at_least, hodge_lower_bound, linear,
                          quadratic)

# (B^2, h.B) per presentation key
QUARTIC_PRESENTATIONS: dict[str, tuple[int, int]] = {
    "b2neg2-bh1": (-2, 1),
    "b2neg2-bh2": (-2, 2),
    "b2neg2-bh3": (-2, 3),
    "b20-bh3": (0, 3),
    "b20-bh4": (0, 4),
    "b22-bh5": (2, 5),
    "b24-bh6": (4, 6),
}


def quartic_lattice(b2: int, hb: int) -> Lattice:
    """Rank-2 quartic sublattice <h, B> with h^2 = 4, B^2 = b2, h.B = hb."""
    return Lattice(gram=[[4, hb], [hb, b2]], labels=("h", "B"),
                   ample=DivClass((1, 0)), k3=True)


def quartic_preset(key: str) -> Lattice:
    try:
        b2, hb = QUARTIC_PRESENTATIONS[key]
    except KeyError:
        raise BadParametersError(
            f"unknown quartic presentation {key!r}; "
            f"choose from {sorted(QUARTIC_PRESENTATIONS)}") from None
    return quartic_lattice(b2, hb)


def ulrich_assumptions(lat: Lattice) -> tuple[Assumption, Assumption]:
    """The two emptiness facts the square-4 window needs: |B-h| = |2h-B| = empty."""
    h = lat.ample
    b = DivClass((0, 1))
    return (
        Assumption(b - h, AssumptionKind.EMPTY,
                   "Ulrich window input: |B-h| is empty"),
        Assumption(2 * h - b, AssumptionKind.EMPTY,
                   "Ulrich window input: |2h-B| is empty"),
    )


# ---- the double-cover example lattice ------------------------------------------

def delpezzo_lattice() -> Lattice:
    """Rank-8 Picard lattice of the quartic double cover of a degree-2 del Pezzo.

    Basis: the pullback l of a plane line (l^2 = 2) and the pullbacks
    e1..e7 of the exceptional curves (ei^2 = -2, mutually orthogonal).
    The polarization is h = 3l - e1 - ... - e7.
    """
    rank = 8
    gram = [[0] * rank for _ in range(rank)]
    gram[0][0] = 2
    for i in range(1, rank):
        gram[i][i] = -2
    labels = ("l",) + tuple(f"e{i}" for i in range(1, 8))
    ample = DivClass((3,) + (-1,) * 7)
    return Lattice(gram=gram, labels=labels, ample=ample, k3=True)


def delpezzo_pencil_f() -> DivClass:
    """f = 2l - e1 - e2 - e3 - e4, an elliptic pencil class."""
    return DivClass((2, -1, -1, -1, -1, 0, 0, 0))


def delpezzo_pencil_fj(j: int) -> DivClass:
    """f_j = l - e_j for 1 <= j <= 7, an elliptic pencil class."""
    if not 1 <= j <= 7:
        raise BadParametersError(f"exceptional index must be 1..7, got {j}")
    coords = [1] + [0] * 7
    coords[j] = -1
    return DivClass(coords)


def delpezzo_assumptions() -> tuple[Assumption, ...]:
    """Pencil facts for f and f_j (j = 5, 6, 7): square 0 and degree 4,
    so the degree-3 criterion cannot certify them; they are pencils
    because the lattice is even and the classes are primitive isotropic."""
    out = [Assumption(delpezzo_pencil_f(), AssumptionKind.ELLIPTIC_PENCIL,
                      "f = 2l - e1 - e2 - e3 - e4 is an elliptic pencil")]
    for j in (5, 6, 7):
        out.append(Assumption(delpezzo_pencil_fj(j), AssumptionKind.ELLIPTIC_PENCIL,
                              f"f{j} = l - e{j} is an elliptic pencil"))
    return tuple(out)


# ---- the five enumeration presets -----------------------------------------------

PRESET_IDS = ("i-a", "i-b", "i-c", "ii", "iii")

# preset id -> presentation key of the lattice it runs on
PRESET_PRESENTATION = {
    "i-a": "b2neg2-bh1",
    "i-b": "b2neg2-bh2",
    "i-c": "b2neg2-bh3",
    "ii": "b20-bh4",
    "iii": "b24-bh6",
}

_H = DivClass((1, 0))
_B = DivClass((0, 1))


def _genus_floor(hb: int, b2: int):
    return quadratic(4, 2 * hb, b2, 0, 0, ">=", 4,
                     cite="the curve has genus >= 3, i.e. C^2 >= 4")


def _degree_cap(hb: int):
    return linear(4, hb, "<=", 12, axiom_id="AX-SECTIONS-BOUND",
                  cite=f"an initialized aCM pencil bundle forces "
                       f"C.H = 4s+{hb}t <= 12")


def _tail_cut():
    return abs_t_at_least(
        2, cite="|t| >= 2; the |t| <= 1 classes are settled by the "
                "companion-closure reduction")


def lemma_case(preset_id: str, box: int = 32) -> CaseSpec:
    """One of the five bounded (s, t) searches, with its exact constraint set."""
    if preset_id == "i-a":
        lat = quartic_preset("b2neg2-bh1")
        cons = (
            _genus_floor(1, -2),
            _degree_cap(1),
            linear(1, -2, ">=", 0, axiom_id="AX-NEF-BPF",
                   cite="C.B = s-2t >= 0: the irreducible curve C meets "
                        "the effective class B nonnegatively"),
            linear(3, 3, ">=", 1, axiom_id="AX-HODGE-INDEX",
                   cite="C.(h-B) = 3(s+t) > 0: h-B is an elliptic pencil "
                        "and C^2 > 0"),
            _tail_cut(),
        )
    elif preset_id == "i-b":
        lat = quartic_preset("b2neg2-bh2")
        cons = (
            _genus_floor(2, -2),
            _degree_cap(2),
            linear(2, -2, ">=", 0, axiom_id="AX-NEF-BPF",
                   cite="C.B = 2s-2t >= 0"),
            linear(2, 4, ">=", 0, axiom_id="AX-NEF-BPF",
                   cite="C.(h-B) = 2s+4t >= 0: the companion h-B is again "
                        "an initialized aCM class of the same shape"),
            _tail_cut(),
        )
    elif preset_id == "i-c":
        lat = quartic_preset("b2neg2-bh3")
        cons = (
            _genus_floor(3, -2),
            _degree_cap(3),
            linear(3, -2, ">=", 0, axiom_id="AX-NEF-BPF",
                   cite="C.B = 3s-2t >= 0"),
            hodge_lower_bound(lat, _H, _B, 2 * _H - _B, 4,
                              axiom_id="AX-HODGE-INDEX",
                              cite="C.(2h-B) = 5s+8t >= 3 by the index "
                                   "bound with C^2 >= 4, (2h-B)^2 = 2"),
            _tail_cut(),
        )
    elif preset_id == "ii":
        lat = quartic_preset("b20-bh4")
        cons = (
            _genus_floor(4, 0),
            _degree_cap(4),
            linear(4, 0, ">=", 1, axiom_id="AX-HODGE-INDEX",
                   cite="C.B = 4s > 0: the moving part of |B| is nonempty "
                        "and C^2 > 0"),
            linear(4, 8, ">=", 1, axiom_id="AX-HODGE-INDEX",
                   cite="C.(2h-B) = 4s+8t > 0 for the substituted pencil "
                        "class 2h-B"),
            _tail_cut(),
        )
    elif preset_id == "iii":
        lat = quartic_preset("b24-bh6")
        cons = (
            _genus_floor(6, 4),
            _degree_cap(6),
            hodge_lower_bound(lat, _H, _B, _B, 4,
                              axiom_id="AX-HODGE-INDEX",
                              cite="C.B = 6s+4t >= 4 by the index bound "
                                   "with C^2 >= 4, B^2 = 4"),
            hodge_lower_bound(lat, _H, _B, 3 * _H - _B, 4,
                              axiom_id="AX-HODGE-INDEX",
                              cite="C.(3h-B) = 6s+14t >= 4 for the "
                                   "companion 3h-B of square 4"),
            _tail_cut(),
        )
    else:
        raise BadParametersError(
            f"unknown preset {preset_id!r}; choose from {PRESET_IDS}")
    return CaseSpec(lattice=lat, constraints=cons, box=box, tag=preset_id)


def lemma51_presets(box: int = 32) -> list[CaseSpec]:
    """All five bounded searches, in report order."""
    return [lemma_case(pid, box) for pid in PRESET_IDS]
