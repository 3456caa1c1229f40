"""Constraint systems: the five preset enumerations and a brute-force oracle."""

import math
import random
import time

import pytest

from k3acm import BadParametersError, BoxTooSmallError, DivClass
from k3acm.casework import (CaseSpec, Constraint, ConstraintKind, PRESET_IDS,
                            abs_t_at_least, check_rel, custom, enumerate_case,
                            hodge_lower_bound, lemma51_presets, lemma_case,
                            linear, quadratic, quartic_lattice)

EXPECTED = {
    "i-a": [(3, -2)],
    "i-b": [(2, 2), (4, -2)],
    "i-c": [(4, -2)],
    "ii": [(1, 2), (5, -2)],
    "iii": [(0, 2), (6, -2)],
}


def test_check_rel():
    assert check_rel("<=", 2, 2)
    assert check_rel("<", 1, 2)
    assert check_rel("=", 3, 3)
    assert check_rel(">=", 3, 3)
    assert check_rel(">", 3, 2)
    assert not check_rel(">", 2, 2)
    with pytest.raises(BadParametersError):
        check_rel("!=", 1, 2)


def test_constraint_kinds():
    assert linear(2, 3, "<=", 12).holds(3, 2)
    assert not linear(2, 3, "<=", 12).holds(4, 2)
    q = quadratic(1, 0, 1, 0, 0, "=", 25)
    assert q.holds(3, 4) and q.holds(5, 0) and not q.holds(3, 3)
    lat = quartic_lattice(-2, 3)
    hodge = hodge_lower_bound(lat, DivClass((1, 0)), DivClass((0, 1)),
                              target=DivClass((2, -1)), c2min=8)
    # (s h + t B).(2h - B) = 5s + 8t must reach ceil(sqrt(8 * 2)) = 4
    assert hodge.holds(4, -2)
    assert not hodge.holds(0, 0)
    assert abs_t_at_least(2).holds(0, -2)
    assert not abs_t_at_least(2).holds(0, 1)
    parity = custom("congruence", 1, 1, 0, 2, 1)
    assert parity.holds(2, 1) and not parity.holds(1, 1)
    with pytest.raises(BadParametersError):
        custom("no-such-predicate", 1)
    with pytest.raises(BadParametersError):
        linear(1, 1, "~", 0)


def test_box_floor():
    with pytest.raises(BadParametersError):
        CaseSpec(lattice=quartic_lattice(-2, 1), constraints=(), box=8)


def test_boundary_touch_raises():
    spec = CaseSpec(lattice=quartic_lattice(-2, 1),
                    constraints=(linear(1, 0, ">=", 30),
                                 linear(0, 1, "=", 0)),
                    box=32)
    with pytest.raises(BoxTooSmallError):
        enumerate_case(spec)


def test_preset_solution_sets():
    for pid in PRESET_IDS:
        assert enumerate_case(lemma_case(pid)) == EXPECTED[pid], pid


def test_preset_solutions_are_box_stable():
    for pid in PRESET_IDS:
        assert (enumerate_case(lemma_case(pid, box=64))
                == enumerate_case(lemma_case(pid, box=32)))


def test_presets_run_fast():
    start = time.perf_counter()
    for spec in lemma51_presets(box=32):
        enumerate_case(spec)
    assert time.perf_counter() - start < 1.0


def test_lemma51_presets_cover_the_five_cases():
    tags = [spec.tag for spec in lemma51_presets()]
    assert tags == list(PRESET_IDS)


def test_unknown_preset_id():
    with pytest.raises(BadParametersError):
        lemma_case("no-such-case")


def _oracle_holds(con: Constraint, s: int, t: int) -> bool:
    """Re-evaluate a constraint from its payload, independently of holds()."""
    p = con.payload
    if con.kind is ConstraintKind.LINEAR:
        a, b, rel, c = p
        value, bound = a * s + b * t, c
    elif con.kind is ConstraintKind.QUADRATIC:
        qss, qst, qtt, a, b, rel, c = p
        value = qss * s * s + qst * s * t + qtt * t * t + a * s + b * t
        bound = c
    elif con.kind is ConstraintKind.HODGE_LOWER:
        a, b, c2min, d2 = p
        value, rel = a * s + b * t, ">="
        bound = math.ceil(math.sqrt(c2min * d2))
    elif con.kind is ConstraintKind.ABS_T_AT_LEAST:
        value, rel, bound = abs(t), ">=", p[0]
    else:
        name, a, b, c, m, r = p
        assert name == "congruence"
        return (a * s + b * t + c) % m == r
    return {"<=": value <= bound, "<": value < bound, "=": value == bound,
            ">=": value >= bound, ">": value > bound}[rel]


def _random_spec(rng: random.Random) -> CaseSpec:
    cons = []
    for _ in range(rng.randint(1, 4)):
        kind = rng.randrange(5)
        if kind == 0:
            cons.append(linear(rng.randint(-3, 3), rng.randint(-3, 3),
                               rng.choice(["<=", "<", "=", ">=", ">"]),
                               rng.randint(-8, 8)))
        elif kind == 1:
            cons.append(quadratic(rng.randint(-2, 2), rng.randint(-2, 2),
                                  rng.randint(-2, 2), rng.randint(-2, 2),
                                  rng.randint(-2, 2),
                                  rng.choice(["<=", ">="]),
                                  rng.randint(-6, 6)))
        elif kind == 2:
            cons.append(Constraint(ConstraintKind.HODGE_LOWER,
                                   (rng.randint(-2, 2), rng.randint(-2, 2),
                                    rng.randint(1, 6), rng.randint(1, 6))))
        elif kind == 3:
            cons.append(abs_t_at_least(rng.randint(0, 3)))
        else:
            m = rng.randint(2, 4)
            cons.append(custom("congruence", rng.randint(-2, 2),
                               rng.randint(-2, 2), rng.randint(0, 2), m,
                               rng.randrange(m)))
    return CaseSpec(lattice=quartic_lattice(-2, 1),
                    constraints=tuple(cons), box=16)


def test_enumerate_case_matches_brute_force_on_random_specs():
    rng = random.Random(41)
    for _ in range(100):
        spec = _random_spec(rng)
        expected = [(s, t)
                    for s in range(-spec.box, spec.box + 1)
                    for t in range(-spec.box, spec.box + 1)
                    if all(_oracle_holds(c, s, t) for c in spec.constraints)]
        touches = any(abs(s) == spec.box or abs(t) == spec.box
                      for s, t in expected)
        if touches:
            with pytest.raises(BoxTooSmallError):
                enumerate_case(spec)
        else:
            assert enumerate_case(spec) == sorted(expected)
