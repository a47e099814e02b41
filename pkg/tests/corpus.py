"""Shared algebra corpus for the test suite.

``q_corpus`` is the rational-field population (all dims <= 6, every member
a verified Novikov algebra, hence Lie-solvable in characteristic zero);
``gf3_population`` and ``gf2_population`` are the small prime-field
populations used against the brute-force oracle.
"""

import random
from functools import lru_cache

from novikov import GF, QQ, AlgebraTable, Subspace
from novikov.constructions import (direct_sum, example1_algebra, gd_construct,
                                   random_commutative_pair, split_idempotents,
                                   truncated_poly, truncated_poly_derivation,
                                   weighted_euler_derivation, zero_algebra)
from novikov.core import verify_identity
from novikov.ideals import classify, ideal_closure, quotient


def a2(field=QQ):
    """dim 2, e1 e1 = e2, everything else zero."""
    return AlgebraTable.from_products(field, 2, {(0, 0): (0, 1)})


def field_algebra(field=QQ):
    """1-dimensional e e = e."""
    return AlgebraTable.from_products(field, 1, {(0, 0): (1,)})


@lru_cache(maxsize=None)
def q_corpus():
    items = []

    def add(name, algebra):
        items.append((name, algebra))

    for n in range(2, 7):
        add(f"tpoly{n}", truncated_poly(n))
    for n in range(2, 6):
        add(f"tpoly{n}u", truncated_poly(n, unital=True))
    add("field_q", field_algebra())
    add("q_x_q", split_idempotents(2))
    add("zero1", zero_algebra(1))
    add("zero3", zero_algebra(3))

    B4 = truncated_poly(4)
    gd4 = gd_construct(B4, weighted_euler_derivation(B4, [1, 2, 3]))
    add("gd_tpoly4_euler", gd4)
    B5 = truncated_poly(5)
    add("gd_tpoly5_2euler",
        gd_construct(B5, weighted_euler_derivation(B5, [2, 4, 6, 8])))
    add("gd_tpoly5_shift",
        gd_construct(B5, truncated_poly_derivation(B5, False, (1, 1, 0, 0))))
    B3u = truncated_poly(3, unital=True)
    gd3u = gd_construct(B3u, truncated_poly_derivation(B3u, True, (0, 1, 0)))
    add("gd_tpoly3u", gd3u)
    B4u = truncated_poly(4, unital=True)
    add("gd_tpoly4u",
        gd_construct(B4u, truncated_poly_derivation(B4u, True, (0, 1, 1, 0))))
    E1, d1 = example1_algebra(1)
    add("gd_sqfree1", gd_construct(E1, d1))
    E2, d2 = example1_algebra(2)
    gd_e2 = gd_construct(E2, d2)
    add("gd_sqfree2", gd_e2)

    add("a2_plus_field", direct_sum(a2(), field_algebra()))
    add("a2_plus_a2", direct_sum(a2(), a2()))
    add("gd4_plus_field", direct_sum(gd4, field_algebra()))
    add("gd4_plus_zero", direct_sum(gd4, zero_algebra(2)))
    add("tpoly3u_plus_q", direct_sum(truncated_poly(3, unital=True), field_algebra()))

    # quotients of the above by principal ideal closures
    q1, _ = quotient(gd4, ideal_closure(gd4, Subspace.span(QQ, [gd4.basis_vector(2)], 3)))
    add("gd4_mod_t3", q1)
    q2, _ = quotient(gd_e2, ideal_closure(gd_e2, Subspace.span(QQ, [gd_e2.basis_vector(2)], 3)))
    add("gd_sqfree2_mod_top", q2)
    q3, _ = quotient(a2(), Subspace.span(QQ, [a2().basis_vector(1)], 2))
    add("a2_mod_e2", q3)

    # seeded structured random commutative pairs and their products
    rng = random.Random(90125)
    for idx in range(6):
        B, d = random_commutative_pair(rng, max_dim=5)
        add(f"rand_comm{idx}", B)
        add(f"gd_rand{idx}", gd_construct(B, d))

    for name, algebra in items:
        assert algebra.dim <= 6, name
        assert verify_identity(algebra, "novikov").ok, name
    assert len(items) >= 30
    return tuple(items)


def _gf_population(p):
    F = GF(p)
    items = [
        ("zero1", zero_algebra(1, field=F)),
        ("zero2", zero_algebra(2, field=F)),
        ("zero3", zero_algebra(3, field=F)),
        ("a2", a2(field=F)),
        ("field", field_algebra(field=F)),
        ("split2", split_idempotents(2, field=F)),
        ("split3", split_idempotents(3, field=F)),
        ("tpoly3", truncated_poly(3, field=F)),
        ("tpoly4", truncated_poly(4, field=F)),
        ("tpoly2u", truncated_poly(2, unital=True, field=F)),
        ("tpoly3u", truncated_poly(3, unital=True, field=F)),
        ("a2_plus_field", direct_sum(a2(field=F), field_algebra(field=F))),
        ("tpoly2_plus_field", direct_sum(truncated_poly(2, field=F),
                                         field_algebra(field=F))),
    ]
    B = truncated_poly(4, field=F)
    items.append(("gd_tpoly4", gd_construct(
        B, weighted_euler_derivation(B, [F.of_int(k) for k in (1, 2, 3)]))))
    B2u = truncated_poly(2, unital=True, field=F)
    items.append(("gd_tpoly2u", gd_construct(
        B2u, truncated_poly_derivation(B2u, True, (0, 1)))))
    B3u = truncated_poly(3, unital=True, field=F)
    items.append(("gd_tpoly3u", gd_construct(
        B3u, truncated_poly_derivation(B3u, True, (0, 1, 0)))))
    return items


@lru_cache(maxsize=None)
def gf3_population():
    """Lie-solvable Novikov algebras over GF(3), dim <= 3."""
    out = []
    for name, algebra in _gf_population(3):
        if algebra.dim > 3:
            continue
        if not verify_identity(algebra, "novikov").ok:
            continue
        if classify(algebra).lie_solvable is None:
            continue
        out.append((name, algebra))
    assert len(out) >= 10
    return tuple(out)


@lru_cache(maxsize=None)
def gf2_commutative_population():
    """Commutative associative algebras over GF(2), dim <= 3."""
    out = []
    for name, algebra in _gf_population(2):
        if algebra.dim > 3:
            continue
        if (verify_identity(algebra, "commutative").ok
                and verify_identity(algebra, "associative").ok):
            out.append((name, algebra))
    assert len(out) >= 8
    return tuple(out)
