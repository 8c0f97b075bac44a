from __future__ import annotations

import itertools
import random

import pytest

from _support import mat, poly, random_matrix, random_monic, ring
from jclean import (
    Matrix,
    NoFactorization,
    Polynomial,
    Unsupported,
    Verdict,
    charpoly,
    classify_2x2,
    classify_3x3,
    field_case,
    poly_in_class,
    quadratic_root_criterion,
    roots_in_cosets,
    sc_factorize,
)
from jclean.factorizer import quadratic_factors, split_degree
from jclean.oracle import all_matrices, brute_force_clean_check

INTEGER_3X3 = [[-2, 2, -1], [-4, 4, -2], [-1, 1, 0]]


# -- sc_factorize ------------------------------------------------------------


def test_factorize_examples() -> None:
    f = sc_factorize(poly("Z", "t^3 - 2*t^2 + t"))
    assert (f.h0, f.h1) == (poly("Z", "t"), poly("Z", "t^2 - 2*t + 1"))
    assert (f.p, f.q) == (1, 2)
    f = sc_factorize(poly("Zn:4", "t^2 + t + 2"))
    assert (f.h0, f.h1) == (poly("Zn:4", "t + 2"), poly("Zn:4", "t + 3"))
    f = sc_factorize(poly("Zloc:2", "t^2 - t + 2/9"))
    assert (f.h0, f.h1) == (poly("Zloc:2", "t - 2/3"), poly("Zloc:2", "t - 1/3"))
    with pytest.raises(NoFactorization):
        sc_factorize(poly("Zn:2", "t^2 + t + 1"))


def test_no_factorization_over_z2_is_exhaustive() -> None:
    h = poly("Zn:2", "t^2 + t + 1")
    R = h.ring
    for a, b in itertools.product(R.elements(), repeat=2):
        assert Polynomial(R, [a, 1]) * Polynomial(R, [b, 1]) != h


def test_degenerate_splittings() -> None:
    f = sc_factorize(poly("Zn:8", "t^3 + 2*t + 4"))
    assert (f.p, f.q) == (3, 0) and f.h1 == 1
    f = sc_factorize(poly("Zn:8", "t^2 + 6*t + 1"))
    assert (f.p, f.q) == (0, 2) and f.h0 == 1


def test_split_degree() -> None:
    assert split_degree(poly("Zn:4", "t^2 + t + 2")) == 1
    assert split_degree(poly("Z", "t^3 - 2*t^2 + t")) == 1
    assert split_degree(poly("Zn:2", "t^2 + t + 1")) is None


def test_integers_need_literal_products() -> None:
    with pytest.raises(NoFactorization):
        sc_factorize(poly("Z", "t^2 - t + 2"))
    f = sc_factorize(poly("Z", "t^4 - 2*t^3 + t^2"))
    assert (f.h0, f.h1) == (poly("Z", "t^2"), poly("Z", "t^2 - 2*t + 1"))


def test_localized_search_and_limits() -> None:
    f = sc_factorize(poly("Zloc:2", "t^3 - t^2 - 2*t"))  # t (t + 1) (t - 2)
    assert (f.p, f.q) == (2, 1)
    assert f.product == poly("Zloc:2", "t^3 - t^2 - 2*t")
    # t^2 - t + 2 is t(t-1) mod 2 but has no rational roots
    with pytest.raises(NoFactorization):
        sc_factorize(poly("Zloc:2", "t^2 - t + 2"))
    with pytest.raises(Unsupported):
        sc_factorize(poly("Zloc:2", "t^4 - 2*t^3 + t^2 + 2"))
    # degenerate classes need no search, whatever the degree
    f = sc_factorize(poly("Zloc:3", "t^5 + 3*t + 6"))
    assert (f.p, f.q) == (5, 0)


@pytest.mark.parametrize("spec", ["Zn:4", "Zn:8", "Zn:9", "Zn:27", "Zn:64", "series(Zn:4,2)", "series(Fp:3,3)"])
def test_every_success_satisfies_its_invariants(spec: str) -> None:
    R = ring(spec)
    rng = random.Random(spec)
    successes = 0
    for _ in range(300):
        h = random_monic(R, rng.randint(1, 5), rng)
        try:
            f = sc_factorize(h)
        except NoFactorization:
            continue
        successes += 1
        assert f.h0 * f.h1 == h
        assert poly_in_class(f.h0, 0) and poly_in_class(f.h1, 1)
        assert f.bezout.holds()
    assert successes > 0


def test_hensel_lifting_builds_a_true_split_over_high_powers() -> None:
    R = ring("Zn:1024")
    t = Polynomial.t(R)
    g = t**3 + Polynomial(R, [2, 6, 14])
    k = (t - 1) ** 2 + Polynomial(R, [10, 4])
    f = sc_factorize(g * k)
    assert (f.h0, f.h1) == (g, k)


# -- coset roots -------------------------------------------------------------


def test_coset_root_examples() -> None:
    Z4 = ring("Zn:4")
    # 2 is not a root of t^2 + t over Z/4: 4 + 2 = 6 = 2 (mod 4)
    assert roots_in_cosets(poly(Z4, "t^2 + t")) == ((Z4(0),), (Z4(3),))
    assert roots_in_cosets(poly(Z4, "t^2 + t + 2")) == ((Z4(2),), (Z4(1),))
    assert roots_in_cosets(poly("Z", "t - 5")) == ((), ())
    Zl = ring("Zloc:2")
    assert roots_in_cosets(poly(Zl, "t^2 - t + 2/9")) == ((Zl("2/3"),), (Zl("1/3"),))
    with pytest.raises(Unsupported):
        roots_in_cosets(poly(Zl, "t^4 + 1"))


@pytest.mark.parametrize("spec", ["Zn:4", "Zn:8", "Zn:9", "series(Zn:4,2)"])
def test_coset_roots_match_full_evaluation(spec: str) -> None:
    R = ring(spec)
    rng = random.Random(spec)
    for _ in range(100):
        f = random_monic(R, rng.randint(1, 4), rng)
        in_j, in_one = roots_in_cosets(f)
        assert set(in_j) == {r for r in R.elements() if r.in_jacobson() and f(r).is_zero()}
        assert set(in_one) == {r for r in R.elements() if (r - 1).in_jacobson() and f(r).is_zero()}


# -- field case --------------------------------------------------------------


def test_field_case_examples() -> None:
    assert not field_case(mat("Fp:2", [[1, 1], [1, 0]]))
    assert field_case(mat("Fp:3", [[0, 1, 0], [0, 0, 1], [0, 0, 0]]))
    assert field_case(mat("Fp:2", [[1, 0], [0, 0]]))
    with pytest.raises(ValueError):
        field_case(mat("Zn:4", [[1]]))


@pytest.mark.parametrize("spec", ["Fp:2", "Fp:3"])
def test_field_case_agrees_with_factorizer(spec: str) -> None:
    for A in all_matrices(ring(spec), 2):
        try:
            sc_factorize(charpoly(A))
            ok = True
        except NoFactorization:
            ok = False
        assert field_case(A) == ok


# -- 2x2 and 3x3 classifiers -------------------------------------------------


def test_classify_2x2_examples() -> None:
    c = classify_2x2(mat("Zn:4", [[0, 2], [1, 3]]))
    assert c.verdict is Verdict.SPLIT_ROOTS and c.witnesses["roots"] == (2, 1)
    assert classify_2x2(Matrix.zeros(ring("Zn:9"), 2)).verdict is Verdict.JSHARP
    assert classify_2x2(Matrix.identity(ring("Z"), 2)).verdict is Verdict.ONE_MINUS_JSHARP
    assert classify_2x2(mat("Zn:2", [[1, 1], [1, 0]])).verdict is Verdict.NOT_CLEAN
    with pytest.raises(ValueError):
        classify_2x2(Matrix.zeros(ring("Z"), 3))


def test_localized_fixture_with_corrected_sign() -> None:
    # det must be +2/9 for chi = t^2 - t + 2/9, so the (2,1) entry is -2/9
    A = mat("Zloc:2", [[1, 1], ["-2/9", 0]])
    c = classify_2x2(A)
    assert c.verdict is Verdict.SPLIT_ROOTS
    assert c.witnesses["roots"] == (A.ring("2/3"), A.ring("1/3"))


def test_localized_fixture_as_printed_has_irrational_roots() -> None:
    A = mat("Zloc:2", [[1, 1], ["2/9", 0]])
    assert charpoly(A) == poly("Zloc:2", "t^2 - t - 2/9")
    assert roots_in_cosets(charpoly(A)) == ((), ())
    assert classify_2x2(A).verdict is Verdict.NOT_CLEAN


def test_classify_3x3_examples() -> None:
    c = classify_3x3(mat("Z", INTEGER_3X3))
    assert c.verdict is Verdict.SPLIT_ROOTS and c.witnesses == {"case": 4, "root": ring("Z")(0)}
    assert classify_3x3(Matrix.identity(ring("Z"), 3)).witnesses["case"] == 2
    assert classify_3x3(Matrix.zeros(ring("Z"), 3)).witnesses["case"] == 1
    c = classify_3x3(Matrix.diag(ring("Zn:4"), [1, 2, 0]))
    assert c.verdict is Verdict.SPLIT_ROOTS and c.witnesses["case"] == 3
    assert classify_3x3(Matrix.diag(ring("Zloc:3"), [1, 1, 2])).verdict is Verdict.NOT_CLEAN


def test_classify_over_split_ring_combines_components() -> None:
    # over Z/6 = Z/2 x Z/3 the components may fall into different cases
    A = Matrix.diag(ring("Zn:6"), [3, 0])
    c = classify_2x2(A)
    assert c.is_clean
    assert c.verdict is Verdict.COMPONENTWISE
    assert brute_force_clean_check(A)


@pytest.mark.parametrize("spec, n", [("Zn:2", 2), ("Zn:3", 2), ("Zn:4", 2), ("Zn:2", 3), ("Zn:6", 2)])
def test_classifier_matches_brute_force(spec: str, n: int) -> None:
    classify = classify_2x2 if n == 2 else classify_3x3
    for A in all_matrices(ring(spec), n):
        assert classify(A).is_clean == brute_force_clean_check(A)


def test_classifier_over_localized_agrees_with_factorizer() -> None:
    R = ring("Zloc:3")
    rng = random.Random(3)
    for _ in range(200):
        n = rng.choice((2, 3))
        A = random_matrix(R, n, rng)
        classify = classify_2x2 if n == 2 else classify_3x3
        try:
            sc_factorize(charpoly(A))
            expected = True
        except NoFactorization:
            expected = False
        assert classify(A).is_clean == expected


# -- quadratic root criterion ------------------------------------------------


def test_quadratic_criterion_examples() -> None:
    assert quadratic_root_criterion(poly("Zloc:2", "t^2 - t + 2/9")) == ring("Zloc:2")("2/3")
    assert quadratic_root_criterion(poly("Zn:4", "t^2 + 3*t + 2")) == 2
    assert quadratic_root_criterion(poly("Z", "t^2 - t + 1")) is None
    with pytest.raises(ValueError):
        quadratic_root_criterion(poly("Zn:4", "t^2 + 2"))


@pytest.mark.parametrize("spec", ["Zn:4", "Zn:8", "Zn:9", "Zloc:2"])
def test_quadratic_criterion_factors_land_in_classes(spec: str) -> None:
    R = ring(spec)
    rng = random.Random(spec)

    def radical_element():
        if R.is_finite:
            return rng.choice(R.jacobson_elements())
        return R(f"{2 * rng.randint(-4, 4)}/{2 * rng.randint(0, 3) + 1}")

    found = 0
    for _ in range(300):
        a, r = radical_element() - 1, radical_element()
        b = -r * (a + r) if rng.random() < 0.6 else R(rng.randint(-7, 7))
        f = Polynomial(R, [b, a, 1])
        root = quadratic_root_criterion(f)
        if root is None:
            continue
        found += 1
        h0, h1 = quadratic_factors(f, root)
        assert h0 * h1 == f
        assert poly_in_class(h0, 0) and poly_in_class(h1, 1)
    assert found > 0
