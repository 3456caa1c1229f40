"""Elimination of destabilizing line-bundle pairs.

A non-simple rank-2 pencil bundle E with c1 = C, c2 = d sits in

    0 -> M -> E -> N (x) J_Z' -> 0,

with M, N movable, M + N = C, M.N + len(Z') = d and (after swapping)
M^2 >= N^2.  The engine sweeps the possible values n^2 = N^2 and, within
each branch, the possible pairing profiles (h.N, B.N) of N against the
rank-2 basis, then kills every candidate with one of the named
elimination rules.  Every record carries machine-verified integer
claims.

Modes:
  "exact"     the pencil-trick sequence: Z' is empty, M.N = d,
              h^1(M) = h^1(N) = 0, M - N is effective or zero, and E is
              an indecomposable initialized aCM bundle;
  "general"   the plain non-simple sequence: len(Z') >= 0, M.N <= d, E
              indecomposable initialized aCM;
  "gonality"  the pencil-degree floor: suppose a pencil of degree < d
              existed and force M.N >= d in every branch (E here is a
              pencil bundle with no indecomposability available).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from ..classifier import (AcmStatus, Assumption, AssumptionKind,
                          _NONEMPTY_KINDS, is_initialized_acm)
from ..errors import (BadParametersError, BoxTooSmallError, PreconditionError,
                      TrivialClassError, NotEffectiveCandidateError,
                      WorkbenchError)
from ..invariants import hodge_lower
from ..lattice import DivClass, Lattice
from .constraints import check_rel
from .scripts import ArithClaim, evaluate, step_to_json

MODES = ("exact", "general", "gonality")


@dataclass(frozen=True)
class PairElimination:
    """One eliminated configuration of the destabilizing pair.

    profile is (h.N, B.N) for candidate records and None for the
    branch-level window-infeasible and beyond-cap records.
    """

    c: DivClass
    d: int
    n_square: int
    len_zprime: int
    outcome: str
    trace: tuple[ArithClaim, ...]
    profile: tuple[int, int] | None = None
    note: str = ""

    @property
    def resolved(self) -> bool:
        return self.outcome != "unresolved"


class _Env:
    """Known classes, sorted by what the elimination rules may assume."""

    def __init__(self, lat: Lattice, c: DivClass,
                 assumptions: Sequence[Assumption]):
        self.lat = lat
        self.effective: list[DivClass] = []
        self.movable: list[DivClass] = []       # h^0 >= 2, moving part nonempty
        self.bpf_positive: list[DivClass] = []  # base point free, square >= 2
        self.acm: list[DivClass] = []           # h^1 vanishes in every twist
        bpf = {a.subject.coords for a in assumptions
               if a.kind is AssumptionKind.BASE_POINT_FREE}
        pencil = {a.subject.coords for a in assumptions
                  if a.kind is AssumptionKind.ELLIPTIC_PENCIL}
        nonempty = {a.subject.coords for a in assumptions
                    if a.kind in _NONEMPTY_KINDS}
        # the curve class itself is an irreducible member with C^2 >= 4
        for coords in sorted(nonempty | bpf | {c.coords}):
            sub = DivClass(coords)
            sq = lat.self_int(sub)
            self.effective.append(sub)
            if (coords in bpf or coords in pencil or coords == c.coords
                    or sq == 0):
                self.movable.append(sub)
            if (coords in bpf or coords == c.coords) and sq >= 2:
                self.bpf_positive.append(sub)
            try:
                cls = is_initialized_acm(lat, sub, assumptions)
            except (TrivialClassError, NotEffectiveCandidateError):
                continue
            if cls.status in (AcmStatus.ACM, AcmStatus.ACM_ULRICH):
                self.acm.append(sub)


def _claim(lat: Lattice, label: str, lhs, rel: str, rhs, cite: str = "",
           contradicts: str = "") -> ArithClaim:
    claim = ArithClaim(label=label, lhs=lhs, rel=rel, rhs=rhs, cite=cite,
                       contradicts=contradicts)
    if not check_rel(rel, evaluate(lhs, lat), evaluate(rhs, lat)):
        raise WorkbenchError(f"engine produced a false claim: {label}")
    return claim


def _pairing(p: DivClass, x: int, y: int) -> int:
    """P.N from the profile (h.N, B.N) = (x, y), for P = p1*h + p2*B."""
    return p.coords[0] * x + p.coords[1] * y


def _profile_of(lat: Lattice, p: DivClass) -> tuple[int, int]:
    return (lat.pair(DivClass((1, 0)), p), lat.pair(DivClass((0, 1)), p))


def _self_expr(d: DivClass) -> dict:
    return {"op": "self", "a": list(d.coords)}


def enumerate_destabilizing(lat: Lattice, c: DivClass, d: int,
                            assumptions: Sequence[Assumption] = (),
                            mode: str = "exact") -> list[PairElimination]:
    """Sweep every destabilizing-pair branch for (C, d) and kill each one.

    Needs the rank-2 polarized presentation with basis (h, B).  Returns
    one record per (n^2, profile) candidate plus a window-infeasible
    record for each empty branch and a closing beyond-cap record; the
    outcome "unresolved" marks a candidate no rule covers (never the
    case in the shipped replays).
    """
    if mode not in MODES:
        raise BadParametersError(f"unknown mode {mode!r}; choose from {MODES}")
    if lat.rank != 2 or lat.ample.coords != (1, 0):
        raise BadParametersError(
            "the destabilizing sweep needs the rank-2 polarized "
            "presentation with basis (h, B)")
    c2 = lat.self_int(c)
    if c2 < 4:
        raise PreconditionError(f"C^2 = {c2} < 4: the curve class must have "
                                "genus at least 3")
    if d < 1:
        raise PreconditionError(f"pencil degree d = {d} must be >= 1")
    env = _Env(lat, c, assumptions)
    cap = c2 // 4
    out: list[PairElimination] = []
    for n2 in range(0, cap + 1, 2):
        out.extend(_branch(lat, env, c, d, n2, mode))
    sentinel = cap + 2 if cap % 2 == 0 else cap + 1
    out.append(_beyond_cap(lat, c, d, sentinel))
    return out


def _cn_window(d: int, n2: int, mode: str) -> tuple[int, int]:
    if mode == "exact":
        return d + n2, d + n2
    if mode == "general":
        return 1 + n2, d + n2
    return 1 + n2, d - 1 + n2  # gonality: a pencil of degree <= d-1 assumed


def _profiles(lat: Lattice, env: _Env, c: DivClass, d: int, n2: int,
              mode: str) -> tuple[list[tuple[int, int, int]], tuple[int, int]]:
    """Window-passing (h.N, B.N, C.N) triples plus the C.N window."""
    hc = lat.deg(c)
    cn_lo, cn_hi = _cn_window(d, n2, mode)
    xmin = 3
    if n2 > 0:
        xmin = max(xmin, hodge_lower(4, n2))
    xmax = hc - 3  # h.M >= 3: M is movable and nonzero too
    if mode == "exact":
        xmax = min(xmax, hc // 2)  # M - N effective or zero: h.N <= h.M
    s, t = c.coords
    ybox = abs(cn_hi) + 4 * (abs(s) + abs(t) + 1) * (hc + 4) + 16
    hits: list[tuple[int, int, int]] = []
    for x in range(xmin, xmax + 1):
        for y in range(-ybox, ybox + 1):
            cn = s * x + t * y
            if not cn_lo <= cn <= cn_hi:
                continue
            if not _windows_pass(lat, env, c, x, y, cn, n2):
                continue
            if abs(y) == ybox:
                raise BoxTooSmallError(
                    f"profile scan hit the bound |B.N| = {ybox}")
            hits.append((x, y, cn))
    return hits, (cn_lo, cn_hi)


def _windows_pass(lat: Lattice, env: _Env, c: DivClass, x: int, y: int,
                  cn: int, n2: int) -> bool:
    c2 = lat.self_int(c)
    # N is base point free, hence nef
    for eff in env.effective:
        if _pairing(eff, x, y) < 0:
            return False
    if n2 == 0:
        # N is a fiber multiple; base-point-free positive classes meet it >= 2
        for p in env.bpf_positive:
            if _pairing(p, x, y) < 2:
                return False
    else:
        # square-0 movable classes meet the 2-connected members of |N| in >= 2
        for p in env.movable:
            if lat.self_int(p) == 0 and _pairing(p, x, y) < 2:
                return False
        # Hodge index against C and every positive-square known
        if cn < hodge_lower(c2, n2):
            return False
        for p in env.effective:
            p2 = lat.self_int(p)
            if p2 > 0 and _pairing(p, x, y) < hodge_lower(p2, n2):
                return False
    mn = cn - n2
    if mn < 1:
        return False
    m2 = c2 - 2 * cn + n2
    if m2 < n2:  # normalization M^2 >= N^2
        return False
    if n2 > 0 and m2 > 0 and mn * mn < m2 * n2:  # Hodge index on (M, N)
        return False
    return True


def _branch(lat: Lattice, env: _Env, c: DivClass, d: int, n2: int,
            mode: str) -> list[PairElimination]:
    hits, (cn_lo, cn_hi) = _profiles(lat, env, c, d, n2, mode)
    if not hits:
        return [_infeasible(lat, env, c, d, n2, cn_lo, cn_hi)]
    return [_kill_profile(lat, env, c, d, n2, mode, x, y, cn)
            for x, y, cn in hits]


def _infeasible(lat: Lattice, env: _Env, c: DivClass, d: int, n2: int,
                cn_lo: int, cn_hi: int) -> PairElimination:
    """No profile passed the windows; certify the binding clash."""
    c2 = lat.self_int(c)
    trace: list[ArithClaim] = []
    note = ""
    # C a multiple of one known movable class: its pairing floor scales
    for p in env.movable:
        if p == c:
            continue
        k = _multiple_of(c, p)
        if k is None:
            continue
        p2 = lat.self_int(p)
        floor = 0
        if n2 == 0 and p in env.bpf_positive:
            floor = 2
        if n2 > 0 and p2 > 0:
            floor = max(floor, hodge_lower(p2, n2))
        if n2 > 0 and p2 == 0:
            floor = max(floor, 2)
        if k * floor > cn_hi:
            trace.append(_claim(
                lat, "forced pairing exceeds the degree budget",
                k * floor, ">", cn_hi,
                cite=f"C = {k}({p}) forces C.N >= {k}*{floor} with "
                     f"{p}.N >= {floor}, but M.N + N^2 <= {cn_hi}",
                contradicts="the degree accounting M.N + len(Z') = c2"))
            note = "pairing floor through the movable multiple"
            break
    if not trace and n2 > 0 and hodge_lower(c2, n2) > cn_hi:
        trace.append(_claim(
            lat, "Hodge floor on C.N exceeds the degree budget",
            {"op": "hodge_lower", "a": _self_expr(c), "b": n2}, ">", cn_hi,
            cite=f"C^2 = {c2} and N^2 = {n2} force "
                 f"C.N >= ceil(sqrt({c2 * n2}))",
            contradicts="the degree accounting M.N + len(Z') = c2"))
        note = "Hodge index against C"
    if not trace and n2 > 0:
        mn_hi = cn_hi - n2
        trace.append(_claim(
            lat, "the M.N floor exceeds the degree budget",
            n2, ">", mn_hi,
            cite=f"M^2 >= N^2 = {n2} forces M.N >= {n2} through the Hodge "
                 f"index, but M.N <= {mn_hi}",
            contradicts="the degree accounting M.N + len(Z') = c2"))
        note = "Hodge index against M"
    if not trace:
        trace.append(_claim(
            lat, "empty profile window", cn_lo, "<=", cn_hi,
            cite="no integer profile satisfies the nef, base-point-free "
                 "and Hodge windows inside this degree budget"))
        note = "exhaustive window sweep"
    return PairElimination(c=c, d=d, n_square=n2, len_zprime=0,
                           outcome="window-infeasible", trace=tuple(trace),
                           note=note)


def _multiple_of(c: DivClass, p: DivClass) -> int | None:
    """k >= 2 with C = k*P, else None."""
    for k in (2, 3, 4):
        if (p * k).coords == c.coords:
            return k
    return None


def _beyond_cap(lat: Lattice, c: DivClass, d: int, n2: int) -> PairElimination:
    trace = (_claim(
        lat, "four times N^2 exceeds C^2",
        4 * n2, ">", _self_expr(c),
        cite=f"M^2 >= N^2 >= {n2} and M.N >= N^2 give "
             f"C^2 = (M + N)^2 >= 4 N^2 = {4 * n2}",
        contradicts="the Hodge-index cap on the square of N"),)
    return PairElimination(c=c, d=d, n_square=n2, len_zprime=0,
                           outcome="beyond-hodge-cap", trace=trace,
                           note="all larger squares at once")


def _kill_profile(lat: Lattice, env: _Env, c: DivClass, d: int, n2: int,
                  mode: str, x: int, y: int, cn: int) -> PairElimination:
    mn = cn - n2
    lz = d - mn if mode == "general" else 0
    base = [_claim(lat, "profile bookkeeping",
                   {"op": "add", "args": [mn, n2]}, "=", cn,
                   cite=f"M.N = C.N - N^2 = {cn} - {n2} at "
                        f"(h.N, B.N) = ({x}, {y})")]

    def rec(outcome: str, claims: list[ArithClaim],
            note: str = "") -> PairElimination:
        return PairElimination(c=c, d=d, n_square=n2, len_zprime=lz,
                               outcome=outcome, trace=tuple(base + claims),
                               profile=(x, y), note=note)

    killed = _kill_classlike(lat, env, c, d, n2, mode, x, y, cn, rec)
    if killed is None and n2 == 0:
        killed = _kill_fiber(lat, env, c, d, mode, x, y, cn, rec)
    if killed is not None:
        return killed
    return rec("unresolved", [],
               note="no registered elimination rule covers this profile")


def _split_class(lat: Lattice, c: DivClass, n2: int,
                 x: int, y: int) -> DivClass | None:
    """C/2 when the profile certifies N = C/2 (signature argument)."""
    if any(co % 2 for co in c.coords):
        return None
    half = DivClass(tuple(co // 2 for co in c.coords))
    if lat.self_int(half) != n2 or (x, y) != _profile_of(lat, half):
        return None
    return half


def _q_data(lat: Lattice, p: DivClass, x: int, y: int, n2: int):
    """Square, degree and N-pairing of Q = P - N from the profile.

    nonzero certifies Q != 0: the pairing vectors against the basis
    differ, which a nondegenerate form cannot absorb.
    """
    pn = _pairing(p, x, y)
    q2 = lat.self_int(p) - 2 * pn + n2
    hq = lat.deg(p) - x
    nq = pn - n2
    nonzero = lat.self_int(p) != n2 or (x, y) != _profile_of(lat, p)
    return pn, q2, hq, nq, nonzero


def _kill_classlike(lat: Lattice, env: _Env, c: DivClass, d: int, n2: int,
                    mode: str, x: int, y: int, cn: int,
                    rec: Callable) -> PairElimination | None:
    """Rules that only use effectivity and connectedness of known classes."""
    half = _split_class(lat, c, n2, x, y)
    if half is not None and mode in ("exact", "general"):
        return rec("split-indecomposable", [_claim(
            lat, "the halved class matches the profile of N",
            _self_expr(half), "=", n2,
            cite=f"N and {half} = C/2 share square and basis pairings, so "
                 "N = C/2 by nondegeneracy and E is an extension of C/2 by "
                 "itself with Z' empty, i.e. decomposable",
            contradicts="AX-INDECOMP: E is indecomposable")],
            note=f"N = {half}")
    if mode == "exact" and 2 * x == lat.deg(c):
        # M - N is effective (or zero, excluded above) of degree 0
        return rec("effective-difference-degree-zero", [_claim(
            lat, "the difference M - N has ample degree zero",
            lat.deg(c) - 2 * x, "=", 0,
            cite="M - N is effective and nonzero here, yet h.(M - N) = 0",
            contradicts="AX-AMPLE-POSITIVE: ample degree of a nonzero "
                        "effective class is positive")])
    for p in env.effective:
        pn, q2, hq, nq, nonzero = _q_data(lat, p, x, y, n2)
        if not nonzero:
            continue
        if hq == 0 and q2 == -2:
            return rec("ample-orthogonal-neg2", [_claim(
                lat, "a (-2)-class orthogonal to h",
                {"op": "add", "args": [_self_expr(p), -2 * pn, n2]}, "=", -2,
                cite=f"({p} - N)^2 = -2 while h.({p} - N) = 0; a (-2)-class "
                     "is effective up to sign",
                contradicts="AX-AMPLE-POSITIVE: ample degree of a nonzero "
                            "effective class is positive")], note=f"P = {p}")
        if hq == 0 and q2 >= 0:
            return rec("isotropic-orthogonal-ample", [_claim(
                lat, "nonnegative square orthogonal to h",
                {"op": "add", "args": [_self_expr(p), -2 * pn, n2]}, ">=", 0,
                cite=f"({p} - N)^2 >= 0 with h.({p} - N) = 0 forces the "
                     "class to vanish, but it is nonzero",
                contradicts="AX-HODGE-INDEX: the form has signature "
                            "(1, rho - 1)")], note=f"P = {p}")
        if q2 >= 0 and 1 <= abs(hq) <= 2:
            name = f"{p} - N" if hq > 0 else f"N - ({p})"
            return rec("very-ample-degree-floor", [_claim(
                lat, "degree below the very ample floor",
                abs(hq), "<", 3,
                cite=f"({name})^2 = {q2} >= 0 and h.({name}) = {abs(hq)}; a "
                     "nonzero class of nonnegative square and positive "
                     "degree moves in a pencil",
                contradicts="AX-VA-DEGREE3: degree floor under a very ample "
                            "polarization")], note=f"P = {p}")
    for p in env.bpf_positive:
        pn, q2, hq, nq, nonzero = _q_data(lat, p, x, y, n2)
        if not nonzero:
            continue
        if q2 >= -2 and hq >= 1 and nq <= 1:
            return rec("two-connected-violation", [_claim(
                lat, "a piece meeting N at most once",
                pn - n2, "<=", 1,
                cite=f"Q = {p} - N is effective (Q^2 = {q2} >= -2, "
                     f"h.Q = {hq} >= 1) and N.Q = {nq}",
                contradicts=f"AX-2CONNECTED: members of |{p}| are "
                            "2-connected")], note=f"P = {p}")
        if (q2 >= -2 and hq <= -1 and n2 >= 2
                and pn - lat.self_int(p) <= 1):
            return rec("two-connected-violation", [_claim(
                lat, "a piece meeting its complement at most once",
                pn - lat.self_int(p), "<=", 1,
                cite=f"Q = N - ({p}) is effective and {p}.Q = "
                     f"{pn - lat.self_int(p)}",
                contradicts="AX-2CONNECTED: members of |N| are 2-connected")],
                note=f"P = {p}")
    for p in env.acm:
        pn, q2, hq, nq, nonzero = _q_data(lat, p, x, y, n2)
        if not nonzero:
            continue
        if q2 == -2 and hq >= 1 and nq <= 0:
            return rec("one-connected-h1", [_claim(
                lat, "a decomposition with nonpositive linking",
                pn - n2, "<=", 0,
                cite=f"{p} = N + ({p} - N) with ({p} - N)^2 = -2, "
                     f"h.({p} - N) = {hq} and N.({p} - N) = {nq}",
                contradicts="AX-1CONNECTED-H1 with AX-ACM-VANISH: h^1 of "
                            "the aCM class vanishes")], note=f"P = {p}")
    return None


def _kill_fiber(lat: Lattice, env: _Env, c: DivClass, d: int, mode: str,
                x: int, y: int, cn: int,
                rec: Callable) -> PairElimination | None:
    """Rules for N^2 = 0: N = rF over an elliptic pencil F with h.F >= 3."""
    if mode in ("exact", "gonality"):
        rs = [1]  # h^1(N) = r - 1 = 0 forces r = 1
    else:
        rs = [r for r in range(1, x // 3 + 1)
              if x % r == 0 and (y == 0 or y % r == 0) and cn % r == 0]
    claims: list[ArithClaim] = []
    rules: list[str] = []
    for r in rs:
        kill = _kill_fiber_r(lat, env, c, d, mode, x, y, cn, r)
        if kill is None:
            return None
        rule, cl = kill
        rules.append(rule)
        claims.extend(cl)
    if not rules:
        return None
    outcome = rules[0] if len(set(rules)) == 1 else "pencil-branches-exhausted"
    return rec(outcome, claims,
               note=f"fiber multiplicities {rs} all eliminated")


def _kill_fiber_r(lat: Lattice, env: _Env, c: DivClass, d: int, mode: str,
                  x: int, y: int, cn: int, r: int):
    """Eliminate N = rF for one multiplicity r; None if no rule applies."""
    if r >= 2:
        if cn != d:
            return None  # Z' nonempty: the h^1 forcing needs the plain sequence
        claim = _claim(
            lat, f"h^1 of the fiber multiple is r - 1 = {r - 1}",
            r - 1, ">=", 1,
            cite=f"M.N = C.N = {cn} = c2 leaves Z' empty, so the quotient is "
                 f"the line bundle of N = {r}F with h^1 = r - 1, while "
                 "h^1(E) = 0 and h^2(M) = 0 force h^1(N) = 0",
            contradicts="AX-ELLIPTIC-H1 against the AX-LES vanishing")
        return "pencil-multiple-h1", [claim]
    # r = 1: N itself is an elliptic pencil
    h = DivClass((1, 0))
    for p in env.movable:
        if lat.self_int(p) != 0 or p == c:
            continue
        if (h + p * 2).coords != c.coords:
            continue
        pn = _pairing(p, x, y)
        if pn <= 1:
            claim = _claim(
                lat, "the distinguished movable class meets the fiber at "
                     "most once",
                pn, "<=", 1,
                cite=f"{p}.N = {pn}: a fiber meeting the movable class of "
                     "the initialized pencil bundle fewer than twice forces "
                     "either h^0 <= 1 or a section of the negative twist",
                contradicts="AX-PENCIL-RESTRICT: the fiber pairing is >= 2")
            return "pencil-restrict-degree", [claim]
    if mode == "exact":
        # the twisted h^1 clash, available while E is initialized aCM
        c2 = lat.self_int(c)
        m2 = c2 - 2 * cn
        hm = lat.deg(c) - x
        mh2 = m2 - 2 * hm + 4
        if mh2 <= -4 and x - 4 < 0:
            claims = [
                _claim(lat, "square of the twisted kernel class",
                       {"op": "add",
                        "args": [_self_expr(c), -2 * cn, -2 * hm,
                                 _self_expr(h)]}, "<=", -4,
                       cite=f"(M - h)^2 = {mh2}, so chi(M - h) = "
                            f"{2 + mh2 // 2} < 0 and h^1 of the twist M(-1) "
                            "is positive"),
                _claim(lat, "the quotient twist has negative degree",
                       x - 4, "<", 0,
                       cite=f"h.(N - h) = {x - 4} < 0 kills the sections of "
                            "N(-1)",
                       contradicts="AX-ACM-VANISH with AX-LES: h^1(M(-1)) "
                                   "<= h^0(N(-1)) + h^1(E(-1)) = 0"),
            ]
            return "twist-h1-vanishing", claims
    return None


def elimination_to_json(rec: PairElimination) -> dict:
    out = {
        "curve": list(rec.c.coords),
        "d": rec.d,
        "n_square": rec.n_square,
        "profile": list(rec.profile) if rec.profile is not None else None,
        "len_zprime": rec.len_zprime,
        "outcome": rec.outcome,
        "resolved": rec.resolved,
        "trace": [step_to_json(cl) for cl in rec.trace],
    }
    if rec.note:
        out["note"] = rec.note
    return out
