from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest

import csstress.engine as engine_module
from csstress import (
    FormSequence,
    LengthMismatch,
    LinearForm,
    LsopNotFound,
    NotCs,
    NotPure,
    NotSubcomplex,
    Polynomial,
    SimplicialComplex,
    apply_derivative,
    canonical_forms,
    cm_certificate,
    cross_polytope,
    cross_polytope_boundary,
    generic_lsop,
    is_stress,
    is_symmetric,
    lsop_check,
    pair_sum,
    polygon,
    restrict_stress_space,
    special_lsop,
    stress_space,
)
from oracles import brute_stress_dim, same_span


def coeff_rows(forms, labels):
    return [
        {v: f.coefficient(v) for v in labels if f.coefficient(v)}
        for f in forms
    ]


# -- l.s.o.p. construction ------------------------------------------------------


def test_special_lsop_is_deterministic(octahedron):
    a = special_lsop(octahedron, seed=1)
    b = special_lsop(octahedron, seed=1)
    assert list(a) == list(b)
    assert a.kind == "special_lsop"
    assert a.seed == 1
    assert a.attempts >= 1
    assert len(a) == 3
    assert all(f.parity == "minus" for f in a)
    c = special_lsop(octahedron, seed=2)
    assert list(c) != list(a)


def test_special_lsop_coefficients_are_bounded(octahedron):
    seq = special_lsop(octahedron, seed=5)
    for f in seq:
        for v, c in f.items():
            assert abs(c) <= 10**6
            assert c.denominator == 1


def test_special_lsop_passes_rank_check(corpus):
    for inst in corpus:
        cx = inst.complex
        if not (cx.cs and cx.is_pure()):
            continue
        seq = special_lsop(cx, seed=11)
        assert lsop_check(cx, list(seq)), inst.name
        assert seq.attempts <= 8


def test_special_lsop_requires_cs():
    simplex = SimplicialComplex([(1, 2, 3)])
    with pytest.raises(NotCs):
        special_lsop(simplex, seed=1)


def test_special_lsop_requires_pure():
    mixed = SimplicialComplex.from_facets(
        [(1, 2), (-1, -2), (3,), (-3,)]
    )
    with pytest.raises(NotPure):
        special_lsop(mixed, seed=1)


def test_lsop_retry_budget_is_eight(octahedron, monkeypatch):
    calls = []
    monkeypatch.setattr(
        engine_module, "lsop_check",
        lambda cx, forms: calls.append(1) and False,
    )
    with pytest.raises(LsopNotFound) as err:
        engine_module.special_lsop(octahedron, seed=1)
    assert err.value.attempts == 8
    assert len(calls) == 8


def test_lsop_check_rejects_repeats(octahedron):
    seq = special_lsop(octahedron, seed=1)
    degenerate = [seq[0]] * 3
    assert not lsop_check(octahedron, degenerate)
    with pytest.raises(LengthMismatch):
        lsop_check(octahedron, [seq[0]])


def test_generic_lsop_on_simplex():
    simplex = SimplicialComplex([(1, 2, 3)])
    seq = generic_lsop(simplex, seed=1)
    assert seq.kind == "custom"
    assert len(seq) == 3
    assert lsop_check(simplex, list(seq))


def test_canonical_forms_of_square():
    forms = canonical_forms(cross_polytope(2))
    assert forms.kind == "canonical_polytope"
    assert list(forms) == [
        LinearForm({1: 1, -1: -1}),
        LinearForm({2: 1, -2: -1}),
        LinearForm.all_ones([-2, -1, 1, 2]),
    ]


def test_form_sequence_kind_validation():
    minus = LinearForm({1: 1, -1: -1})
    plus = LinearForm.all_ones([1, -1])
    with pytest.raises(ValueError):
        FormSequence([plus], "special_lsop")
    with pytest.raises(ValueError):
        FormSequence([], "special_lsop")
    with pytest.raises(ValueError):
        FormSequence([plus, minus], "canonical_polytope")
    with pytest.raises(ValueError):
        FormSequence([minus], "bogus")
    assert len(FormSequence([minus, plus], "canonical_polytope")) == 2


# -- stress spaces ---------------------------------------------------------------


def test_octahedron_stress_dimensions(octahedron):
    seq = special_lsop(octahedron, seed=1)
    dims = [stress_space(octahedron, seq, i).dim for i in range(4)]
    assert dims == [1, 3, 3, 1]
    s2 = stress_space(octahedron, seq, 2)
    assert s2.plus_dim == 3 and s2.minus_dim == 0
    with pytest.raises(ValueError):
        stress_space(octahedron, seq, -1)


def test_stress_dims_vanish_above_top_degree(octahedron):
    seq = special_lsop(octahedron, seed=1)
    assert stress_space(octahedron, seq, 4).dim == 0
    assert stress_space(octahedron, seq, 5).dim == 0


def test_stress_basis_elements_are_stresses(octahedron):
    seq = special_lsop(octahedron, seed=1)
    for i in range(4):
        space = stress_space(octahedron, seq, i)
        for w in space.basis:
            assert is_stress(octahedron, seq, w)
            assert space.contains(w)
            vec = space.vectorize(w)
            assert vec is not None


def test_stress_dims_match_first_principles(octahedron, hexagon, noncm):
    labels_oct = octahedron.ground_set
    seq = special_lsop(octahedron, seed=3)
    rows = coeff_rows(list(seq), labels_oct)
    for i in range(4):
        ours = stress_space(octahedron, seq, i).dim
        assert ours == brute_stress_dim(octahedron.facets, rows, i)

    forms = canonical_forms(hexagon)
    rows = coeff_rows(list(forms), hexagon.boundary.ground_set)
    for i in range(3):
        ours = stress_space(hexagon.boundary, forms, i).dim
        assert ours == brute_stress_dim(hexagon.boundary.facets, rows, i)

    seq = special_lsop(noncm, seed=3)
    rows = coeff_rows(list(seq), noncm.ground_set)
    for i in range(3):
        ours = stress_space(noncm, seq, i).dim
        assert ours == brute_stress_dim(noncm.facets, rows, i)


def test_noncm_dimensions_exceed_h(noncm):
    seq = special_lsop(noncm, seed=1)
    dims = [stress_space(noncm, seq, i).dim for i in range(3)]
    assert dims == [1, 2, 0]
    assert list(noncm.fhg_vectors().h) == [1, 2, -1]
    # every degree-1 stress is symmetric here
    s1 = stress_space(noncm, seq, 1)
    assert s1.minus_dim == 0
    assert all(is_symmetric(w) for w in s1.basis)


def test_hexagon_affine_dimensions(hexagon):
    forms = canonical_forms(hexagon)
    cx = hexagon.boundary
    table = [stress_space(cx, forms, i) for i in range(3)]
    assert [s.dim for s in table] == [1, 3, 0]
    assert table[1].plus_dim == 2 and table[1].minus_dim == 1
    # the affine degree-1 dim equals g_1 = h_1 - h_0
    assert table[1].dim == cx.fhg_vectors().g[1]


def test_minus_dims_follow_h_on_cs_cm_instances(corpus):
    for inst in corpus:
        cx = inst.complex
        if not (cx.cs and cx.is_pure()):
            continue
        vec = cx.fhg_vectors()
        if inst.expected.get("cm") is not True:
            continue
        d = vec.d
        seq = special_lsop(cx, seed=1)
        for i in range(d + 1):
            s = stress_space(cx, seq, i)
            assert s.dim == vec.h[i], (inst.name, i)
            assert s.minus_dim == Fraction(vec.h[i] - comb(d, i), 2), (
                inst.name, i,
            )
            assert s.plus_dim + s.minus_dim == s.dim


def test_split_absent_without_definite_parity():
    simplex = SimplicialComplex([(1, 2, 3)])
    seq = generic_lsop(simplex, seed=1)
    s = stress_space(simplex, seq, 1)
    assert s.plus_dim is None and s.minus_dim is None
    assert s.plus_basis is None and s.minus_basis is None


def test_top_stress_of_octahedron_is_the_pair_sum_product(octahedron):
    # minus-parity forms annihilate any polynomial in the pair sums, so
    # the one-dimensional top space is spanned by y_1 y_2 y_3
    seq = special_lsop(octahedron, seed=1)
    w = pair_sum(1) * pair_sum(2) * pair_sum(3)
    space = stress_space(octahedron, seq, 3)
    assert space.dim == 1
    assert is_stress(octahedron, seq, w)
    assert space.contains(w)
    assert is_symmetric(w)


def test_is_stress_rejects_off_complex_support(octahedron):
    seq = special_lsop(octahedron, seed=1)
    w = Polynomial.variable(1) * Polynomial.variable(-1)
    assert not is_stress(octahedron, seq, w)
    assert is_stress(octahedron, seq, Polynomial.zero())


def test_is_stress_requires_annihilation(octahedron):
    seq = special_lsop(octahedron, seed=1)
    w = Polynomial.variable(1)
    assert any(
        not apply_derivative(f, w).is_zero() for f in seq
    )
    assert not is_stress(octahedron, seq, w)


# -- restriction ------------------------------------------------------------------


def test_restriction_to_self_is_identity(octahedron):
    seq = special_lsop(octahedron, seed=1)
    s = stress_space(octahedron, seq, 2)
    assert restrict_stress_space(s, octahedron) is s


def test_restriction_to_equator_square(octahedron):
    square = SimplicialComplex.from_facets(
        [(1, 2), (2, -1), (-1, -2), (-2, 1)], expect_cs=True
    )
    seq = special_lsop(octahedron, seed=1)
    s2 = stress_space(octahedron, seq, 2)
    restricted = restrict_stress_space(s2, square)
    direct = stress_space(square, seq, 2)
    assert restricted.dim == direct.dim
    ours = [
        [w.coefficient(m) for m in direct.columns]
        for w in restricted.basis
    ]
    theirs = [list(v) for v in direct.vector_basis.vectors]
    assert same_span(ours, theirs)


def test_restriction_requires_subcomplex(octahedron):
    other = SimplicialComplex([(1, 7)])
    seq = special_lsop(octahedron, seed=1)
    s = stress_space(octahedron, seq, 1)
    with pytest.raises(NotSubcomplex):
        restrict_stress_space(s, other)


# -- Cohen-Macaulay certificates ----------------------------------------------------


def test_certificate_on_octahedron(octahedron):
    cert = cm_certificate(octahedron, seed=1)
    assert cert["dims"] == [1, 3, 3, 1]
    assert cert["h"] == [1, 3, 3, 1]
    assert cert["is_cm_witnessed"] is True
    assert cert["definitive_non_cm"] is False
    assert cert["kind"] == "special_lsop"
    assert cert["seed"] == 1


def test_certificate_on_disjoint_edges(noncm):
    cert = cm_certificate(noncm, seed=1)
    assert cert["dims"] == [1, 2, 0]
    assert cert["h"] == [1, 2, -1]
    assert cert["is_cm_witnessed"] is False
    assert cert["definitive_non_cm"] is True


def test_certificate_on_simplex_uses_generic_forms():
    simplex = SimplicialComplex([(1, 2, 3)])
    cert = cm_certificate(simplex, seed=1)
    assert cert["dims"] == [1, 0, 0, 0]
    assert cert["is_cm_witnessed"] is True
    assert cert["kind"] == "custom"
