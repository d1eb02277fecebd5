#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import random
from itertools import combinations

import pytest
from sympy import Matrix, expand

from lib.exceptions import InconsistentDegreeMatrixError, InputFormatError, SeriesError
from lib.geometry_audit import ci_series, unproject_term
from lib.matrix_file import load_matrix_file
from lib.pfaffian_calculus import (
    cancelled_terms,
    check_formats,
    format_verdict,
    is_jerry,
    is_member,
    is_tom,
    maximal_pfaffians,
    membership_degree_advisories,
    mount_unprojection_matrix,
    parse_degree_matrix,
    pfaffian_numerator,
    pfaffian_syzygies,
    reduce,
    solve_entry_weights,
    triangular_ideal,
    unprojection_equations,
    verify_unprojection,
)
from lib.series_core import add, numerator_over
from models.geometry_models import WeightedPlane
from models.pfaffian_models import GradedRing, SkewDegreeMatrix5, SkewMatrix5, TriangularIdeal
from models.series_models import IntPolynomial, WeightVector


@pytest.fixture
def model(matrices_dir):
    return load_matrix_file(matrices_dir / "model_jer45.txt")


@pytest.fixture
def tom1(matrices_dir):
    return load_matrix_file(matrices_dir / "tom1.txt")


@pytest.fixture
def jer45(matrices_dir):
    return load_matrix_file(matrices_dir / "jer45_codim4.txt")


def _brute_pfaffian(M: SkewMatrix5, indices):
    """Expansion along the first index, for any even number of indices"""
    if not indices:
        return M.ring.poly_ring().one
    first, rest = indices[0], indices[1:]
    total = M.ring.zero()
    for pos, j in enumerate(rest):
        others = rest[:pos] + rest[pos + 1:]
        total += (-1) ** pos * M.entry(first, j) * _brute_pfaffian(M, others)
    return total


def _cofactor_det(rows):
    """Laplace expansion along the first row, on ring elements"""
    if len(rows) == 1:
        return rows[0][0]
    total = 0
    for col, entry in enumerate(rows[0]):
        if entry:
            minor = [row[:col] + row[col + 1:] for row in rows[1:]]
            total += (-1) ** col * entry * _cofactor_det(minor)
    return total


def _random_poly(rng: random.Random, graded: GradedRing):
    gens = list(graded.gens().values())
    p = graded.zero()
    for _ in range(rng.randint(0, 2)):
        term = rng.randint(-3, 3)
        for g in rng.sample(gens, rng.randint(0, 2)):
            term = term * g
        p += term
    return p


def _random_member(rng: random.Random, I: TriangularIdeal):
    return sum((g * _random_poly(rng, I.ring) for g in I.generator_polys()), I.ring.zero())


def _random_matrix(rng: random.Random, graded: GradedRing) -> SkewMatrix5:
    rows = [[_random_poly(rng, graded) for _ in range(length)] for length in (4, 3, 2, 1)]
    return SkewMatrix5.from_rows(graded, rows)


# ==================== Degree calculus ====================

def test_entry_weights_half_integral():
    weights = solve_entry_weights(parse_degree_matrix("1,1,2,2;1,2,2;2,2;3"))
    assert [str(q) for q in weights.q] == ["1/2", "1/2", "1/2", "3/2", "3/2"]
    assert weights.pfaffian_degrees == (4, 4, 4, 3, 3)
    assert weights.k == 9
    assert weights.syzygy_degrees == (5, 5, 5, 6, 6)


def test_plane_unprojection_numerator():
    weights = solve_entry_weights(parse_degree_matrix("1,1,2,2;1,2,2;2,2;3"))
    numerator = pfaffian_numerator(weights.pfaffian_degrees, weights.k)
    assert numerator == IntPolynomial.from_terms({0: 1, 3: -2, 4: -3, 5: 3, 6: 2, 9: -1})
    series = add(ci_series(WeightVector.of([1] * 6), [3, 3]), unproject_term(WeightedPlane.of(), 3))
    assert numerator_over(series, [1] * 6 + [3]) == numerator


def test_weighted_plane_unprojection_numerator():
    weights = solve_entry_weights(parse_degree_matrix("1,3,3,3;3,3,3;5,5;5"))
    assert weights.pfaffian_degrees == (8, 8, 6, 6, 6)
    assert weights.k == 17
    numerator = pfaffian_numerator(weights.pfaffian_degrees, weights.k)
    assert numerator == IntPolynomial.from_terms({0: 1, 6: -3, 8: -2, 9: 2, 11: 3, 17: -1})
    series = add(ci_series(WeightVector.of([1, 1, 1, 3, 3, 3]), [6, 6]), unproject_term(WeightedPlane.of(1, 1, 3), 5))
    assert numerator_over(series, [1, 1, 1, 3, 3, 3, 5]) == numerator


def test_inconsistent_degree_matrix():
    with pytest.raises(InconsistentDegreeMatrixError) as info:
        solve_entry_weights(parse_degree_matrix("1,1,2,2;1,2,2;2,2;4"))
    assert info.value.violations == [(4, 5, 4, 3)]


@pytest.mark.parametrize("text", ["1,1,2,2;1,2,2;2,2", "1,1,2;1,2,2;2,2;3", "1,1,2,a;1,2,2;2,2;3", ""])
def test_degree_matrix_rejects(text):
    with pytest.raises(InputFormatError):
        parse_degree_matrix(text)


def test_symmetric_degree_matrix():
    weights = solve_entry_weights(parse_degree_matrix("2,2,2,2;2,2,2;2,2;2"))
    assert weights.q == (1, 1, 1, 1, 1)
    assert weights.pfaffian_degrees == (4, 4, 4, 4, 4)
    assert weights.k == 10


def test_degree_matrix_text_round_trip():
    assert parse_degree_matrix(" 1,3,3,3 ; 3,3,3 ; 5,5 ; 5 ").to_text() == "1,3,3,3;3,3,3;5,5;5"


def test_pfaffian_numerator_cancellation():
    assert pfaffian_numerator((3, 3, 3, 3, 3), 6) == IntPolynomial.from_terms({0: 1, 6: -1})
    assert cancelled_terms((3, 3, 3, 3, 3), 6) == {3: 5}
    assert cancelled_terms((8, 8, 6, 6, 6), 17) == {}
    assert pfaffian_numerator((1,) * 5, 2) == IntPolynomial.from_terms({0: 1, 2: -1})
    assert cancelled_terms((1,) * 5, 2) == {1: 5}
    with pytest.raises(SeriesError):
        pfaffian_numerator((4, 9), 9)


# ==================== Pfaffians ====================

def test_model_s_pfaffians(model):
    M = model.matrix
    p = model.polys
    g = model.ring.gens()
    x, y, z, s = g["x"], g["y"], g["z"], g["s"]
    A, B, C, D, E, F = (p[name] for name in "ABCDEF")
    pf = maximal_pfaffians(M)
    assert pf[0] == s * x - (B * F - C * E)
    assert pf[1] == s * y - (A * F - C * D)
    assert pf[2] == s * z - (A * E - B * D)


def test_model_degrees_are_consistent(model):
    degrees = model.matrix.degree_matrix()
    assert degrees.to_text() == "1,1,2,2;1,2,2;2,2;3"
    assert solve_entry_weights(degrees).pfaffian_degrees == (4, 4, 4, 3, 3)
    maximal_pfaffians(model.matrix, degrees)


def test_degree_violation_is_reported(model):
    wrong = SkewDegreeMatrix5(entries=(1, 1, 2, 2, 1, 2, 2, 2, 2, 4))
    with pytest.raises(InconsistentDegreeMatrixError) as info:
        maximal_pfaffians(model.matrix, wrong)
    assert info.value.violations == [(4, 5, "3", 4)]


def test_random_pfaffians_against_brute_force():
    rng = random.Random(20240517)
    graded = GradedRing.of(a=1, b=1, c=1)
    for trial in range(100):
        M = _random_matrix(rng, graded)
        pf = maximal_pfaffians(M)
        for i in range(1, 6):
            rest = tuple(r for r in range(1, 6) if r != i)
            assert pf[i - 1] == _brute_pfaffian(M, rest)
            assert _cofactor_det([[M.entry(r, c) for c in rest] for r in rest]) == pf[i - 1] ** 2
            if trial < 3:
                sub = Matrix(4, 4, lambda r, c: M.entry(rest[r], rest[c]).as_expr())
                assert expand(sub.det(method="berkowitz") - pf[i - 1].as_expr() ** 2) == 0
        assert all(not syz for syz in pfaffian_syzygies(M, pf))


def test_constant_matrix_pfaffians():
    graded = GradedRing.of(a=1)
    R = graded.poly_ring()
    M = SkewMatrix5.from_rows(graded, [[R(a + b) for b in range(a + 1, 6)] for a in range(1, 5)])
    pf = maximal_pfaffians(M)
    for i in range(1, 6):
        j, k, l, m = (r for r in range(1, 6) if r != i)
        assert pf[i - 1] == (j + k) * (l + m) - (j + l) * (k + m) + (j + m) * (k + l)


def test_zero_matrix():
    graded = GradedRing.of(x=1, y=1)
    M = SkewMatrix5.zero(graded)
    assert all(not p for p in maximal_pfaffians(M))
    I = triangular_ideal(graded, [graded.gen("x")])
    assert all(is_tom(M, I, i) for i in range(1, 6))
    assert is_jerry(M, I, 1, 2)


def test_syzygies_vanish_on_samples(model, tom1, jer45):
    for doc in (model, tom1, jer45):
        assert all(not syz for syz in pfaffian_syzygies(doc.matrix))


# ==================== Ideals ====================

def test_reduce_modulo_plane_ideal(jer45):
    R = jer45.ring
    g = R.gens()
    p3, q3 = jer45.polys["p3"], jer45.polys["q3"]
    I_E = triangular_ideal(R, [g["x"], g["u"] + p3, g["t"] + q3])
    assert I_E.leading() == ("x", "u", "t")
    for generator in I_E.generator_polys():
        assert is_member(generator, I_E)
    assert reduce(g["t"] * g["u"], I_E) == q3 * p3
    assert reduce(jer45.polys["F"], I_E) == g["v"] - p3
    assert not is_member(g["w"], I_E)
    assert reduce(R.poly_ring().one, I_E) == 1


def test_random_members_reduce_to_zero(jer45):
    rng = random.Random(11)
    g = jer45.ring.gens()
    I_E = triangular_ideal(jer45.ring, [g["x"], g["u"] + jer45.polys["p3"], g["t"] + jer45.polys["q3"]])
    for _ in range(100):
        assert not reduce(_random_member(rng, I_E), I_E)


def test_triangular_orientation_prefers_unshared_variables():
    R = GradedRing.of(x=2, y=1, z=1)
    g = R.gens()
    I = triangular_ideal(R, [g["x"] - g["y"] ** 2, g["y"] - g["z"]])
    assert I.leading() == ("x", "z")
    assert is_member(g["x"] - g["z"] ** 2, I)
    assert not is_member(g["x"] - g["z"], I)
    assert I.substitution_order() == ["x", "z"]


def test_chained_substitution():
    R = GradedRing.of(x=1, y=1, z=1)
    g = R.gens()
    I = TriangularIdeal(ring=R, generators=(("x", g["y"] ** 2), ("y", g["z"])))
    assert I.substitution_order() == ["y", "x"]
    assert reduce(g["x"], I) == g["z"] ** 2
    assert is_member(g["x"] - g["z"] ** 2, I)


def test_cyclic_ideal_rejected():
    R = GradedRing.of(x=1, y=1)
    g = R.gens()
    with pytest.raises(InputFormatError):
        triangular_ideal(R, [g["x"] - g["y"], g["y"] - g["x"]])
    with pytest.raises(ValueError):
        TriangularIdeal(ring=R, generators=(("x", g["y"]), ("y", g["x"])))


def test_ideal_without_linear_variable():
    R = GradedRing.of(x=1, y=1)
    g = R.gens()
    with pytest.raises(InputFormatError):
        triangular_ideal(R, [g["x"] * g["y"]])


# ==================== Formats ====================

def test_model_is_jerry_45(model):
    M, I = model.matrix, model.ideal
    assert is_jerry(M, I, 4, 5)
    assert not any(is_tom(M, I, i) for i in range(1, 6))


def test_tom1_sample(tom1):
    M, I = tom1.matrix, tom1.ideal
    assert is_tom(M, I, 1)
    assert not is_jerry(M, I, 4, 5)
    assert M.degree_matrix().to_text() == "1,3,3,3;3,3,3;5,5;5"


def test_jer45_sample(jer45):
    assert is_jerry(jer45.matrix, jer45.ideal, 4, 5)
    assert not is_tom(jer45.matrix, jer45.ideal, 1)


def test_random_tom_and_jerry_instances(model):
    rng = random.Random(3)
    graded, I = model.ring, model.ideal
    for _ in range(30):
        rows = [[_random_poly(rng, graded) for _ in range(length)] for length in (4, 3, 2, 1)]
        # every entry in row or column 4 or 5 lies in I
        jerry = [[rows[0][0], rows[0][1], _random_member(rng, I), _random_member(rng, I)],
                 [rows[1][0], _random_member(rng, I), _random_member(rng, I)],
                 [_random_member(rng, I), _random_member(rng, I)],
                 [_random_member(rng, I)]]
        M = SkewMatrix5.from_rows(graded, jerry)
        assert is_jerry(M, I, 4, 5)
        for a, b in combinations(range(1, 6), 2):
            if {a, b} & {4, 5}:
                assert is_member(M.entry(a, b), I)

        tom = [rows[0], [_random_member(rng, I) for _ in range(3)],
               [_random_member(rng, I) for _ in range(2)], [_random_member(rng, I)]]
        assert is_tom(SkewMatrix5.from_rows(graded, tom), I, 1)


def test_format_verdict_offending(tom1):
    verdict = format_verdict(tom1.matrix, tom1.ideal, 4, 5)
    assert verdict.label() == "Jer_45"
    assert not verdict.holds
    assert (1, 4) in verdict.offending
    assert (1, 5) in verdict.offending


def test_check_formats_lists_everything(model):
    verdicts = check_formats(model.matrix, model.ideal)
    assert len(verdicts) == 5 + 10
    holding = [v.label() for v in verdicts if v.holds]
    assert holding == ["Jer_45"]


def test_bad_indices(model):
    with pytest.raises(ValueError):
        is_tom(model.matrix, model.ideal, 6)
    with pytest.raises(ValueError):
        is_jerry(model.matrix, model.ideal, 4, 4)


def test_membership_degree_advisories(tom1):
    notes = membership_degree_advisories(tom1.matrix, tom1.ideal, i=3)
    assert notes == ["m12 has degree 1 < 3 and is nonzero, so it cannot lie in I"]
    assert membership_degree_advisories(tom1.matrix, tom1.ideal, i=1) == []
    verdict = format_verdict(tom1.matrix, tom1.ideal, 3)
    assert not verdict.holds
    assert verdict.advisories == tuple(notes)


# ==================== Unprojection ====================

def test_unprojection_relations(model):
    R = model.ring
    g = R.gens()
    p = model.polys
    f_row = (p["A"], p["B"], p["C"])
    g_row = (p["D"], p["E"], p["F"])
    xs = (g["x"], g["y"], g["z"])
    relations = unprojection_equations(f_row, g_row, xs, g["s"])
    for rel, x in zip(relations, xs):
        assert rel.coeff(g["s"] * x) == 1
    assert verify_unprojection(R, f_row, g_row, xs, g["s"])

    pf = maximal_pfaffians(mount_unprojection_matrix(R, f_row, g_row, xs, g["s"]))
    f = sum((a * x for a, x in zip(f_row, xs)), R.zero())
    assert pf[4] == f


def test_unprojection_on_random_forms():
    rng = random.Random(7)
    R = GradedRing.of(x=1, y=1, z=1, u=1, v=1, s=2)
    g = R.gens()
    quad = [a * b for a, b in combinations([g["u"], g["v"], g["x"]], 2)]
    for _ in range(10):
        f_row = [sum((rng.randint(-2, 2) * m for m in quad), R.zero()) for _ in range(3)]
        g_row = [sum((rng.randint(-2, 2) * m for m in quad), R.zero()) for _ in range(3)]
        assert verify_unprojection(R, f_row, g_row, (g["x"], g["y"], g["z"]), g["s"])
