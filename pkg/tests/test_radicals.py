import random
from fractions import Fraction

import pytest

from corpus import a2, field_algebra, q_corpus
from novikov import GF, QQ, AlgebraTable, Subspace
from novikov.constructions import (example1_algebra, gd_construct, split_idempotents,
                                   truncated_poly, truncated_poly_derivation,
                                   weighted_euler_derivation, zero_algebra)
from novikov.errors import (CharTwoError, NotAnIdealError,
                            NotCommutativeAssociativeError, NotLieSolvableError,
                            PreconditionError, SmallCharacteristicError)
from novikov.exactlin import vec_add, vec_is_zero
from novikov.ideals import chain, classify, commutator_ideal
from novikov.radicals import (baer_radical, bound_certificates, check_certificate,
                              lqr_radical, nilradical_commutative,
                              quasi_inverse_lift, quasiregular_solve)


def span(A, *vecs):
    return Subspace.span(A.field, list(vecs), A.dim)


def gd_tpoly(n, weights=None):
    B = truncated_poly(n)
    weights = weights or list(range(1, n))
    return gd_construct(B, weighted_euler_derivation(B, weights))


# ---------------------------------------------------------------------------
# nilradical of commutative associative algebras
# ---------------------------------------------------------------------------

def test_nilradical_unital_truncated():
    A = truncated_poly(3, unital=True)
    N = nilradical_commutative(A)
    assert N == span(A, A.basis_vector(1), A.basis_vector(2))


def test_nilradical_split_semisimple():
    assert nilradical_commutative(split_idempotents(2)).is_zero()


def test_nilradical_nonunital_truncated_is_everything():
    A = truncated_poly(4)
    assert nilradical_commutative(A) == A.full_space()


def test_nilradical_rejects_noncommutative():
    bad = AlgebraTable.from_products(QQ, 2, {(0, 1): (0, 1)})
    with pytest.raises(NotCommutativeAssociativeError):
        nilradical_commutative(bad)


def test_nilradical_rejects_small_characteristic():
    F = GF(3)
    A = truncated_poly(4, field=F)  # dim 3 = p
    with pytest.raises(SmallCharacteristicError):
        nilradical_commutative(A)


def test_nilradical_small_prime_large_enough():
    F = GF(5)
    A = truncated_poly(4, field=F)
    assert nilradical_commutative(A) == A.full_space()


def test_nilradical_mixed_sum():
    from novikov.constructions import direct_sum
    A = direct_sum(split_idempotents(1), truncated_poly(3))
    N = nilradical_commutative(A)
    assert N == span(A, A.basis_vector(1), A.basis_vector(2))


def test_nilradical_trace_route_matches_enumeration():
    # both routes are available over GF(p) with p > dim: they must agree
    from novikov.constructions import direct_sum
    from novikov.oracle import bruteforce_nilpotents
    for p in (5, 7):
        F = GF(p)
        samples = [
            truncated_poly(3, field=F),
            truncated_poly(4, field=F),
            truncated_poly(3, unital=True, field=F),
            split_idempotents(2, field=F),
            direct_sum(split_idempotents(1, field=F), truncated_poly(3, field=F)),
            zero_algebra(2, field=F),
        ]
        for A in samples:
            trace_route = nilradical_commutative(A)
            enumeration = Subspace.span(F, bruteforce_nilpotents(A, budget=400),
                                        A.dim)
            assert trace_route == enumeration


# ---------------------------------------------------------------------------
# radical preconditions
# ---------------------------------------------------------------------------

def test_radical_rejects_characteristic_two():
    A = AlgebraTable.from_products(GF(2), 2, {(0, 0): (0, 1)})
    with pytest.raises(CharTwoError):
        baer_radical(A)
    with pytest.raises(CharTwoError):
        lqr_radical(A)


def test_radical_rejects_non_novikov():
    bad = AlgebraTable.from_products(QQ, 2, {(0, 0): (0, 1), (0, 1): (1, 0)})
    with pytest.raises(PreconditionError):
        baer_radical(bad)


def test_radical_rejects_non_lie_solvable():
    # over GF(5) the derived product on F[t]/(t^5) with d = d/dt is a simple
    # noncommutative Novikov algebra, so its commutator chain never vanishes
    F = GF(5)
    B = truncated_poly(5, unital=True, field=F)
    d = truncated_poly_derivation(B, True, (0, 1, 0, 0, 0))
    cols = []
    for k in range(5):  # d/dt: t^k -> k t^{k-1}
        col = [F.zero] * 5
        if k:
            col[k - 1] = F.of_int(k)
        cols.append(tuple(col))
    from novikov.exactlin import Matrix
    ddt = Matrix.from_columns(F, cols, nrows=5)
    A = gd_construct(B, ddt)
    assert classify(A).lie_solvable is None
    with pytest.raises(NotLieSolvableError):
        baer_radical(A)


# ---------------------------------------------------------------------------
# baer radical
# ---------------------------------------------------------------------------

def test_baer_radical_of_a2_is_everything():
    rep = baer_radical(a2())
    assert rep.radical == a2().full_space()
    assert "A/[A,A] nilradical preimage" in rep.route
    assert rep.witnesses and rep.witnesses[0].claim == "tower"


def test_baer_radical_of_split_is_zero():
    rep = baer_radical(split_idempotents(2))
    assert rep.radical.is_zero()


def test_baer_radical_of_gd_square_free():
    B, d = example1_algebra(2)
    A = gd_construct(B, d)
    assert baer_radical(A).radical == A.full_space()


def test_baer_radical_of_unital_truncated():
    A = truncated_poly(3, unital=True)
    rep = baer_radical(A)
    assert rep.radical == span(A, A.basis_vector(1), A.basis_vector(2))


def test_baer_radical_small_char_fallback_route():
    F = GF(3)
    A = truncated_poly(4, field=F)  # commutative, quotient dim 3 = p
    rep = baer_radical(A)
    assert rep.radical == A.full_space()
    assert "enumeration" in rep.route


# ---------------------------------------------------------------------------
# left-quasiregular radical
# ---------------------------------------------------------------------------

def test_lqr_radical_of_a2():
    rep = lqr_radical(a2())
    assert rep.radical == a2().full_space()
    assert "finite-dimensional coincidence" in rep.route
    assert all(c.claim == "quasireg" for c in rep.witnesses)


def test_lqr_radical_of_split_is_zero():
    assert lqr_radical(split_idempotents(2)).radical.is_zero()


def test_lqr_radical_of_unital_truncated_matches_field_quotient():
    A = truncated_poly(3, unital=True)
    rep = lqr_radical(A)
    assert rep.radical == span(A, A.basis_vector(1), A.basis_vector(2))


def test_baer_equals_lqr_on_corpus():
    for name, A in q_corpus():
        assert baer_radical(A).radical == lqr_radical(A).radical, name


def test_lemma4_equivalence_membership_iff_r_nilpotent():
    rng = random.Random(59)
    for name, A in q_corpus():
        rad = baer_radical(A).radical
        elements = A.basis_vectors() + [A.random_element(rng) for _ in range(100)]
        for x in elements:
            assert rad.contains(x) == (A.r_nilpotency_index(x) is not None), name


def test_everything_left_quasiregular_when_radical_is_all():
    rng = random.Random(71)
    for name, A in q_corpus():
        if lqr_radical(A).radical != A.full_space():
            continue
        for x in A.basis_vectors() + [A.random_element(rng) for _ in range(10)]:
            assert quasiregular_solve(A, x, side="left") is not None, name


def test_three_way_agreement_on_corpus():
    rng = random.Random(61)
    for name, A in q_corpus():
        radical_is_all = baer_radical(A).radical == A.full_space()
        solvable = classify(A).solvable is not None
        sampled = A.basis_vectors() + [A.random_element(rng) for _ in range(10)]
        all_r_nil = all(A.r_nilpotency_index(x) is not None for x in sampled)
        assert radical_is_all == solvable == all_r_nil, name


# ---------------------------------------------------------------------------
# quasiregularity solving
# ---------------------------------------------------------------------------

def test_quasiregular_solve_commutative_truncated():
    A = truncated_poly(3)
    t = A.basis_vector(0)
    y = quasiregular_solve(A, t, side="left")
    assert y == (Fraction(-1), Fraction(-1))  # -t - t^2
    assert vec_add(QQ, t, y) == A.multiply(y, t)


def test_quasiregular_solve_gd():
    A = gd_tpoly(4)
    t = A.basis_vector(0)
    y = quasiregular_solve(A, t, side="left")
    assert y == (Fraction(-1), Fraction(-1), Fraction(-1))


def test_quasiregular_solve_zero():
    A = gd_tpoly(4)
    assert quasiregular_solve(A, A.zero_vector(), side="left") == A.zero_vector()
    assert quasiregular_solve(A, A.zero_vector(), side="right") == A.zero_vector()


def test_idempotent_not_quasiregular():
    A = field_algebra()
    e = A.basis_vector(0)
    assert quasiregular_solve(A, e, side="left") is None
    assert quasiregular_solve(A, e, side="right") is None


def test_right_quasiregular_solve_verifies():
    A = truncated_poly(4)
    t = A.basis_vector(0)
    y = quasiregular_solve(A, t, side="right")
    assert y is not None
    assert vec_add(QQ, t, y) == A.multiply(t, y)


# ---------------------------------------------------------------------------
# quasi-inverse lifting
# ---------------------------------------------------------------------------

def test_lift_on_gd_tpoly4():
    A = gd_tpoly(4)
    t = A.basis_vector(0)
    y, cert = quasi_inverse_lift(A, t)
    assert y == (Fraction(-1), Fraction(-1), Fraction(-1))
    assert vec_add(QQ, t, y) == A.multiply(y, t)
    K = commutator_ideal(A, A.full_space())
    assert len(cert.data["steps"]) <= chain(A, "right", base=K).index
    assert check_certificate(A, cert)


def test_lift_zero_element_needs_no_steps():
    A = gd_tpoly(4)
    y, cert = quasi_inverse_lift(A, A.zero_vector())
    assert vec_is_zero(y)
    assert cert.data["steps"] == []


def test_lift_commutative_case_is_direct():
    A = truncated_poly(3)
    t = A.basis_vector(0)
    y, cert = quasi_inverse_lift(A, t)
    assert y == quasiregular_solve(A, t, side="left")
    assert cert.data["steps"] == []


def test_lift_none_for_non_quasiregular():
    A = field_algebra()
    assert quasi_inverse_lift(A, A.basis_vector(0)) is None


def test_lift_needs_multiple_corrections_on_deep_commutator_ideal():
    # t F[t]/(t^9): the commutator ideal starts at t^3 and its own cube is
    # still nonzero, so the correction loop must run twice
    B = truncated_poly(9)
    A = gd_construct(B, weighted_euler_derivation(B, list(range(1, 9))),
                     check=False)
    K = commutator_ideal(A, A.full_space())
    assert chain(A, "right", base=K).index == 3
    t = A.basis_vector(0)
    y, cert = quasi_inverse_lift(A, t)
    assert len(cert.data["steps"]) == 2
    assert [s["n"] for s in cert.data["steps"]] == [1, 2]
    assert vec_add(QQ, t, y) == A.multiply(y, t)
    assert y == quasiregular_solve(A, t, side="left")
    assert check_certificate(A, cert)


def test_lift_agrees_with_solve_on_corpus():
    rng = random.Random(67)
    for name, A in q_corpus():
        K = commutator_ideal(A, A.full_space())
        bound = chain(A, "right", base=K).index
        for x in A.basis_vectors() + [A.random_element(rng) for _ in range(5)]:
            direct = quasiregular_solve(A, x, side="left")
            lifted = quasi_inverse_lift(A, x)
            assert (direct is None) == (lifted is None), name
            if lifted is None:
                continue
            y, cert = lifted
            assert vec_add(A.field, x, y) == A.multiply(y, x), name
            assert len(cert.data["steps"]) <= bound, name


# ---------------------------------------------------------------------------
# bound certificates
# ---------------------------------------------------------------------------

def test_s_sequence_from_one():
    A = gd_tpoly(4)
    t3 = A.basis_vector(2)
    I = span(A, t3)  # the commutator ideal
    cert = bound_certificates(A, t3, 1, ideal=I, claim="theorem1")
    assert cert.data["s_sequence"] == [1, 4]
    assert cert.data["holds"]
    # the arithmetic s_k = 2 s_{k-1} + 2 is forced
    s = 1
    for expected in (4, 10, 22):
        s = 2 * s + 2
        assert s == expected


def test_power_collapse_certificate_on_octic_truncation():
    A = gd_tpoly(8)
    t = A.basis_vector(0)
    sq4 = A.multiply(A.left_normed_power(t, 4), A.left_normed_power(t, 4))
    assert vec_is_zero(sq4)
    cert = bound_certificates(A, t, 4, claim="lemma1")
    assert cert.data["holds"]
    assert cert.data["vanishing_exponent"] == 10
    assert check_certificate(A, cert)


def test_ideal_square_membership_on_a2():
    A = a2()
    e1 = A.basis_vector(0)
    I = span(A, A.basis_vector(1))
    cert = bound_certificates(A, e1, 2, ideal=I, claim="lemma3")
    assert cert.data["holds"]
    assert cert.data["membership_exponent"] == 6
    assert check_certificate(A, cert)


def test_theorem1_memberships_until_zero_power():
    A = a2()
    e1 = A.basis_vector(0)
    I = span(A, A.basis_vector(1))
    cert = bound_certificates(A, e1, 2, ideal=I, claim="theorem1")
    ks = [m["k"] for m in cert.data["memberships"]]
    assert ks == [1, 2]
    assert cert.data["memberships"][-1]["ideal_power_dim"] == 0
    assert cert.data["holds"]
    assert check_certificate(A, cert)


def test_certificate_preconditions():
    A = a2()
    e1 = A.basis_vector(0)
    with pytest.raises(PreconditionError):
        bound_certificates(A, e1, 1, claim="lemma1")  # (e1^1)^2 = e2 != 0
    with pytest.raises(PreconditionError):
        bound_certificates(A, e1, 1, ideal=span(A, A.basis_vector(1)),
                           claim="lemma3")  # e1 not in the ideal
    with pytest.raises(NotAnIdealError):
        bound_certificates(A, e1, 2, ideal=span(A, e1), claim="lemma3")
    with pytest.raises(PreconditionError):
        bound_certificates(A, e1, 2, claim="lemma3")  # no ideal given


def test_certificate_sweep_on_corpus():
    # every admissible (x, n, I) over the corpus certifies cleanly
    certified = 0
    for name, A in q_corpus():
        ideals = [A.zero_space(), A.full_space(),
                  commutator_ideal(A, A.full_space())]
        for x in A.basis_vectors():
            for n in range(1, A.dim + 2):
                xn = A.left_normed_power(x, n)
                for I in ideals:
                    if not I.contains(xn):
                        continue
                    for claim in ("lemma3", "theorem1"):
                        cert = bound_certificates(A, x, n, ideal=I, claim=claim)
                        assert cert.data["holds"], (name, claim, n)
                        certified += 1
    assert certified > 300


def test_tampered_certificates_fail_verification():
    A = a2()
    e1 = A.basis_vector(0)
    I = span(A, A.basis_vector(1))
    cert = bound_certificates(A, e1, 2, ideal=I, claim="lemma3")
    cert.data["membership_exponent"] = 5
    assert not check_certificate(A, cert)
    cert = bound_certificates(A, e1, 2, ideal=I, claim="lemma3")
    cert.data["n"] = 1  # precondition now fails; the verifier reports False
    assert not check_certificate(A, cert)
    lifted = quasi_inverse_lift(gd_tpoly(4), gd_tpoly(4).basis_vector(0))
    y, lcert = lifted
    lcert.data["quasi_inverse"] = gd_tpoly(4).basis_vector(1)
    assert not check_certificate(gd_tpoly(4), lcert)
