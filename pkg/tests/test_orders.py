import random

import pytest

from starinv import (
    GF,
    ConditionFailure,
    CornerViolation,
    DimensionMismatch,
    ExactMatrix,
    NotRickart,
    OneMPAboveForm,
    OrderViolation,
    PlusBlockData,
    above_1mp,
    above_mp1,
    b_1mp_inverse_check,
    dagger,
    is_member,
    leq_1mp,
    leq_1mp_routes,
    leq_diamond,
    leq_minus,
    leq_mp1,
    leq_plus,
    lp,
    lp_family_member,
    matrix_star_ring,
    order_axiom_suite,
    plus_block_compose,
    rp,
    rp_family_member,
    zn_ring,
)

from conftest import M, random_rational_matrix, random_singular_matrix, z

DIAG10 = M([[1, 0], [0, 0]])
EYE2 = ExactMatrix.identity(2)


class TestLpRp:
    def test_frozen_example(self):
        a = M([[1, 1], [0, 0]])
        assert lp(a) == DIAG10
        assert rp(a) == M([["1/2", "1/2"], ["1/2", "1/2"]])

    def test_zero_and_invertible(self):
        zero = ExactMatrix.zeros(2, 2)
        assert lp(zero) == zero and rp(zero) == zero
        a = M([[2, 1], [1, 1]])
        assert lp(a) == EYE2 and rp(a) == EYE2

    def test_matches_canonical_projections(self):
        rng = random.Random(21)
        for _ in range(40):
            a = random_rational_matrix(rng, 3, 3)
            d = dagger(a)
            assert lp(a) == a * d
            assert rp(a) == d * a

    def test_zn_scan(self):
        assert lp(z(3)) == z(3)
        assert rp(z(3)) == z(3)

    def test_gf2_not_rickart(self):
        a = M([[1, 1], [0, 0]], GF(2))
        assert lp(a) == M([[1, 0], [0, 0]], GF(2))  # column Gram is fine
        with pytest.raises(NotRickart):
            rp(a)  # row Gram vanishes over GF(2)


class TestAnnihilatorFamilies:
    def test_trivial_member(self):
        a = DIAG10
        assert lp_family_member(a, ExactMatrix.zeros(2, 2)) == lp(a)

    def test_frozen_example(self):
        a = DIAG10
        e = lp_family_member(a, M([[0, 5], [0, 0]]))
        assert e == M([[1, 5], [0, 0]])
        assert e * e == e

    def test_rp_member(self):
        a = DIAG10
        e = rp_family_member(a, M([[0, 0], [5, 0]]))
        assert e == M([[1, 0], [5, 0]])
        assert e * e == e

    def test_corner_violation(self):
        with pytest.raises(CornerViolation):
            lp_family_member(DIAG10, M([[0, 0], [5, 0]]))

    def test_z6_family_is_singleton(self):
        ring = zn_ring(6)
        assert ring.lp_members(z(3)) == (z(3),)
        assert lp_family_member(z(3), z(0)) == z(3)


class TestMinusOrder:
    def test_reflexive(self):
        a = M([[1, 2], [3, 4]])
        v = leq_minus(a, a)
        assert v.holds and v.method == "rank"

    def test_projection_below_identity(self):
        v = leq_minus(DIAG10, EYE2)
        assert v.holds
        w = v.witness
        assert w.p * EYE2 == DIAG10 and EYE2 * w.q == DIAG10

    def test_rank_holds_but_not_1mp(self):
        b = M([[1, 1], [0, 1]])
        assert leq_minus(DIAG10, b).holds
        assert not leq_1mp(DIAG10, b).holds

    def test_fails(self):
        assert not leq_minus(EYE2, DIAG10).holds

    def test_zn_exhaustive_against_oracle(self):
        ring = zn_ring(6)
        for a in ring.elements:
            for b in ring.elements:
                assert leq_minus(a, b).holds == ring.rel_minus(a, b)

    def test_not_regular_raises(self):
        from starinv import NotRegular

        with pytest.raises(NotRegular):
            leq_minus(z(2, 8), z(1, 8))

    def test_matrix_route_matches_oracle_on_m2gf2(self):
        ring = matrix_star_ring(2)
        for a in ring.elements:
            for b in ring.elements:
                assert leq_minus(a, b).holds == ring.rel_minus(a, b)

    def test_square_required(self):
        with pytest.raises(DimensionMismatch):
            leq_minus(M([[1, 0, 0], [0, 0, 0]]), M([[1, 0, 0], [0, 1, 0]]))


class TestOneMPOrder:
    def test_holds_example(self):
        v = leq_1mp(DIAG10, EYE2)
        assert v.holds and v.method == "minus-dagger"
        x = v.witness.x
        assert x * DIAG10 == x * EYE2 and DIAG10 * x == EYE2 * x

    def test_fails_with_reason(self):
        v = leq_1mp(DIAG10, M([[1, 1], [0, 1]]))
        assert not v.holds
        assert v.reason == "dagger(a)*b != dagger(a)*a"

    def test_reflexive(self):
        a = M([[1, 2], [2, 4]])
        assert leq_1mp(a, a).holds

    def test_z6_above_set(self):
        above = {b.value for b in zn_ring(6).elements if leq_1mp(z(2), b).holds}
        assert above == {2, 5}

    def test_zn_matches_oracle(self):
        ring = zn_ring(6)
        for a in ring.elements:
            if ring.dagger_of(a) is None:
                continue
            for b in ring.elements:
                assert leq_1mp(a, b).holds == ring.rel_1mp(a, b)

    def test_matrix_route_matches_oracle_on_m2gf2(self):
        ring = matrix_star_ring(2)
        for a in ring.mp_invertible:
            for b in ring.elements:
                assert leq_1mp(a, b).holds == ring.rel_1mp(a, b)

    def test_three_routes_agree_randomized(self):
        rng = random.Random(23)
        hits = 0
        for _ in range(120):
            a = random_rational_matrix(rng, 3, 3)
            b = random_rational_matrix(rng, 3, 3)
            routes = leq_1mp_routes(a, b)
            assert len(set(routes.values())) == 1
            hits += routes["definition"]
        # random pairs are almost never comparable; make sure generated ones are
        for _ in range(40):
            a = random_singular_matrix(rng, 3, rng.randint(1, 2))
            d = dagger(a)
            p = a * d
            q = d * a
            eye = ExactMatrix.identity(3)
            b4 = (eye - p) * random_rational_matrix(rng, 3, 3) * (eye - q)
            dd = (eye - q) * random_rational_matrix(rng, 3, 3) * p
            b = above_1mp(a, OneMPAboveForm(b4, dd))
            routes = leq_1mp_routes(a, b)
            assert routes == {"definition": True, "minus-dagger": True, "shared-inner": True}


class TestMP1Order:
    def test_reflexive_and_duality(self):
        a = M([[1, 2], [2, 4]])
        assert leq_mp1(a, a).holds

    def test_transpose_dual_of_1mp_examples(self):
        assert leq_mp1(DIAG10, EYE2).holds
        assert not leq_mp1(DIAG10, M([[1, 0], [1, 1]])).holds

    def test_witness_satisfies_definition(self):
        v = leq_mp1(DIAG10, EYE2)
        x = v.witness.x
        assert is_member(DIAG10, x, {1, 2, 4})
        assert x * DIAG10 == x * EYE2 and DIAG10 * x == EYE2 * x

    def test_zn_matches_oracle(self):
        ring = zn_ring(6)
        for a in ring.elements:
            if ring.dagger_of(a) is None:
                continue
            for b in ring.elements:
                assert leq_mp1(a, b).holds == ring.rel_mp1(a, b)

    def test_matrix_route_matches_oracle_on_m2gf2(self):
        ring = matrix_star_ring(2)
        for a in ring.mp_invertible:
            for b in ring.elements:
                assert leq_mp1(a, b).holds == ring.rel_mp1(a, b)


class TestDiamondOrder:
    def test_holds_example(self):
        v = leq_diamond(DIAG10, EYE2)
        assert v.holds and v.method == "equational"
        assert v.witness.left_projection == DIAG10

    def test_reflexive(self):
        a = M([[1, 2], [3, 4]])
        assert leq_diamond(a, a).holds

    def test_fails_product_example(self):
        assert not leq_diamond(DIAG10, M([[2, 0], [0, 1]])).holds

    def test_zn_matches_oracle(self):
        ring = zn_ring(6)
        for a in ring.elements:
            for b in ring.elements:
                assert leq_diamond(a, b).holds == ring.rel_diamond(a, b)

    def test_matrix_route_matches_oracle_on_m2gf2(self):
        ring = matrix_star_ring(2)
        for a in ring.elements:
            for b in ring.elements:
                assert leq_diamond(a, b).holds == ring.rel_diamond(a, b)


class TestPlusOrder:
    def test_diamond_pair_via_canonical(self):
        v = leq_plus(DIAG10, EYE2)
        assert v.holds and v.method == "canonical"

    def test_minus_pair_holds(self):
        b = M([[1, 1], [0, 1]])
        assert leq_minus(DIAG10, b).holds
        v = leq_plus(DIAG10, b)
        assert v.holds
        qt, q = v.witness.q_tilde, v.witness.q
        assert qt * b * q == DIAG10

    def test_reflexive(self):
        a = M([[1, 2], [3, 4]])
        assert leq_plus(a, a).holds

    def test_containment_fail(self):
        v = leq_plus(EYE2, DIAG10)
        assert not v.holds and v.method == "containment"

    def test_ladder_matches_oracle_on_m2gf2(self):
        # complete calibration: for elements with canonical projections the
        # ladder must agree with the exhaustive idempotent-pair scan
        ring = matrix_star_ring(2)
        decided = 0
        for a in ring.elements:
            try:
                lp(a), rp(a)
            except NotRickart:
                with pytest.raises(NotRickart):
                    leq_plus(a, ring.one)
                continue
            for b in ring.elements:
                v = leq_plus(a, b)
                assert v.method != "undecided-negative"
                assert v.holds == ring.rel_plus(a, b)
                decided += 1
        assert decided > 0

    def test_zn_matches_oracle(self):
        ring = zn_ring(6)
        for a in ring.elements:
            for b in ring.elements:
                assert leq_plus(a, b).holds == ring.rel_plus(a, b)

    def test_zero_below_everything(self):
        rng = random.Random(29)
        zero = ExactMatrix.zeros(2, 2)
        for _ in range(20):
            b = random_rational_matrix(rng, 2, 2)
            assert leq_plus(zero, b).holds
            assert leq_minus(zero, b).holds
            assert leq_1mp(zero, b).holds
            assert leq_mp1(zero, b).holds
            assert leq_diamond(zero, b).holds


class TestAbove1MP:
    def test_trivial_form(self):
        a = M([[1, 2], [2, 4]])
        zero = ExactMatrix.zeros(2, 2)
        assert above_1mp(a, OneMPAboveForm(zero, zero)) == a

    def test_frozen_example(self):
        b4 = M([[0, 0], [0, 1]])
        zero = ExactMatrix.zeros(2, 2)
        assert above_1mp(DIAG10, OneMPAboveForm(b4, zero)) == EYE2

    def test_corner_violation(self):
        with pytest.raises(CornerViolation):
            above_1mp(DIAG10, OneMPAboveForm(M([[1, 0], [0, 0]]), ExactMatrix.zeros(2, 2)))

    def test_z6_above_set_via_corners(self):
        ring = zn_ring(6)
        a = z(2)
        d = ring.dagger_of(a)
        p = a * d
        q = d * a
        assert p == z(4) and q == z(4)
        one = ring.one
        c22 = ring.corner(one - p, one - q)
        c21 = ring.corner(one - q, p)
        assert c22 == frozenset({z(0), z(3)})
        assert c21 == frozenset({z(0)})
        image = {above_1mp(a, OneMPAboveForm(b4, dd)) for b4 in c22 for dd in c21}
        assert image == {b for b in ring.elements if leq_1mp(a, b).holds} == {z(2), z(5)}

    def test_postcondition_randomized(self):
        rng = random.Random(37)
        eye = ExactMatrix.identity(3)
        for _ in range(50):
            a = random_singular_matrix(rng, 3, rng.randint(1, 2))
            d = dagger(a)
            p = a * d
            q = d * a
            b4 = (eye - p) * random_rational_matrix(rng, 3, 3) * (eye - q)
            dd = (eye - q) * random_rational_matrix(rng, 3, 3) * p
            b = above_1mp(a, OneMPAboveForm(b4, dd))
            assert leq_1mp(a, b).holds


class TestAboveMP1:
    def test_trivial_form(self):
        a = M([[1, 2], [2, 4]])
        zero = ExactMatrix.zeros(2, 2)
        assert above_mp1(a, OneMPAboveForm(zero, zero)) == a

    def test_nilpotent_example(self):
        a = M([[0, 1], [0, 0]])
        b4 = M([[0, 0], [1, 0]])
        d = M([[0, 0], [0, 1]])
        b = above_mp1(a, OneMPAboveForm(b4, d))
        assert b == M([[-1, 1], [1, 0]])
        assert leq_mp1(a, b).holds

    def test_transpose_transport(self):
        rng = random.Random(41)
        eye = ExactMatrix.identity(3)
        for _ in range(30):
            a = random_singular_matrix(rng, 3, rng.randint(1, 2))
            d = dagger(a)
            p = a * d
            q = d * a
            b4 = (eye - p) * random_rational_matrix(rng, 3, 3) * (eye - q)
            dd = q * random_rational_matrix(rng, 3, 3) * (eye - p)
            b = above_mp1(a, OneMPAboveForm(b4, dd))
            # same construction through the transpose anti-isomorphism
            b_t = above_1mp(a.star, OneMPAboveForm(b4.star, dd.star))
            assert b == b_t.star

    def test_corner_violation(self):
        with pytest.raises(CornerViolation):
            above_mp1(DIAG10, OneMPAboveForm(M([[1, 0], [0, 0]]), ExactMatrix.zeros(2, 2)))


class TestUpperInverseCheck:
    def test_dagger_of_b_passes(self):
        b4 = M([[0, 0], [0, 3]])
        d = M([[0, 0], [5, 0]])
        b = above_1mp(DIAG10, OneMPAboveForm(b4, d))
        assert b_1mp_inverse_check(DIAG10, b, dagger(b))

    def test_bad_x3_fails_both_routes(self):
        b4 = M([[0, 0], [0, 3]])
        d = M([[0, 0], [5, 0]])
        b = above_1mp(DIAG10, OneMPAboveForm(b4, d))
        # x3 chosen so that b4*x3 != b4*d
        x = dagger(DIAG10) + M([[0, 0], [1, 0]]) + dagger(b4)
        assert not b_1mp_inverse_check(DIAG10, b, x)
        assert not is_member(b, x, {1, 2, 3})

    def test_requires_order(self):
        with pytest.raises(OrderViolation):
            b_1mp_inverse_check(DIAG10, M([[1, 1], [0, 1]]), EYE2)

    def test_exhaustive_agreement_m2gf2(self):
        ring = matrix_star_ring(2)
        one = ring.one
        pairs = 0
        for a in ring.mp_invertible:
            d = ring.dagger_of(a)
            p = a * d
            q = d * a
            for b4 in ring.corner(one - p, one - q):
                for dd in ring.corner(one - q, p):
                    b = a - b4 * dd * a + b4
                    if ring.dagger_of(b) is None:
                        continue
                    pairs += 1
                    for x in ring.elements:
                        assert b_1mp_inverse_check(a, b, x) == is_member(b, x, {1, 2, 3})
        assert pairs > 0


class TestPlusBlockCompose:
    def test_trivial(self):
        a = M([[1, 2], [2, 4]])
        zero = ExactMatrix.zeros(2, 2)
        assert plus_block_compose_helper(a, zero, zero, zero, zero, zero) == a

    def test_frozen_example(self):
        zero = ExactMatrix.zeros(2, 2)
        b22 = M([[0, 0], [0, 1]])
        b = plus_block_compose_helper(DIAG10, b22, zero, zero, zero, zero)
        assert b == EYE2
        assert leq_plus(DIAG10, b).holds

    def test_left_condition_failure(self):
        zero = ExactMatrix.zeros(2, 2)
        w = M([[0, 0], [1, 0]])
        with pytest.raises(ConditionFailure) as err:
            plus_block_compose_helper(DIAG10, zero, zero, zero, w, zero)
        assert err.value.side == "left"

    def test_right_condition_failure(self):
        zero = ExactMatrix.zeros(2, 2)
        zz = M([[0, 1], [0, 0]])
        with pytest.raises(ConditionFailure) as err:
            plus_block_compose_helper(DIAG10, zero, zero, zero, zero, zz)
        assert err.value.side == "right"

    def test_corner_violation(self):
        zero = ExactMatrix.zeros(2, 2)
        with pytest.raises(CornerViolation):
            plus_block_compose_helper(DIAG10, EYE2, zero, zero, zero, zero)

    def test_witness_hint_decides_composed_pairs(self):
        # a valid hint turns any composed pair into a verified positive, and
        # an invalid hint falls back to the ordinary ladder
        rng = random.Random(67)
        eye = ExactMatrix.identity(3)
        decided = 0
        for _ in range(30):
            a = random_singular_matrix(rng, 3, rng.randint(1, 2))
            la = lp(a)
            ra = rp(a)
            def corner(left, right):
                return left * random_rational_matrix(rng, 3, 3) * right
            data = PlusBlockData(
                b22=corner(eye - la, eye - ra),
                y=corner(la, eye - la),
                x=corner(eye - ra, ra),
                w=corner(eye - la, ra),
                z=corner(la, eye - ra),
            )
            try:
                b = plus_block_compose(a, data)
            except ConditionFailure:
                continue
            decided += 1
            v = leq_plus(a, b, witness_hint=(la - data.y, ra - data.x))
            assert v.holds and v.method == "hinted"
            qt, q = v.witness.q_tilde, v.witness.q
            assert qt * b * q == a
            bogus = leq_plus(a, a, witness_hint=(eye, eye - eye))
            assert bogus.holds and bogus.method != "hinted"  # reflexive via ladder
        assert decided > 0

    def test_composed_pairs_never_definitively_rejected(self):
        # the ladder may be inconclusive over the rationals, but it must not
        # claim a definitive negative for a pair built with a known witness
        rng = random.Random(43)
        eye = ExactMatrix.identity(3)
        produced = 0
        for _ in range(60):
            a = random_singular_matrix(rng, 3, rng.randint(1, 2))
            la = lp(a)
            ra = rp(a)
            def corner(left, right):
                return left * random_rational_matrix(rng, 3, 3) * right
            data = PlusBlockData(
                b22=corner(eye - la, eye - ra),
                y=corner(la, eye - la),
                x=corner(eye - ra, ra),
                w=corner(eye - la, ra),
                z=corner(la, eye - ra),
            )
            try:
                b = plus_block_compose(a, data)
            except ConditionFailure:
                continue
            produced += 1
            v = leq_plus(a, b)
            if not v.holds:
                assert v.method == "undecided-negative"
        assert produced > 0


def plus_block_compose_helper(a, b22, y, x, w, zz):
    from starinv import plus_block_compose

    return plus_block_compose(a, PlusBlockData(b22=b22, y=y, x=x, w=w, z=zz))


class TestGF3Calibration:
    def test_matrix_routes_match_oracle_sampled(self):
        # exercise the GF(3) Gram and corner-search paths of every relation
        # against the exhaustive oracle on seeded pairs
        from starinv import NotRickart

        ring = matrix_star_ring(3)
        rng = random.Random(53)
        mp_set = set(ring.mp_invertible)
        pairs = [(rng.choice(ring.elements), rng.choice(ring.elements)) for _ in range(400)]
        for a, b in pairs:
            assert leq_minus(a, b).holds == ring.rel_minus(a, b)
            assert leq_diamond(a, b).holds == ring.rel_diamond(a, b)
            if a in mp_set:
                assert leq_1mp(a, b).holds == ring.rel_1mp(a, b)
                assert leq_mp1(a, b).holds == ring.rel_mp1(a, b)
            try:
                verdict = leq_plus(a, b)
            except NotRickart:
                continue
            assert verdict.method != "undecided-negative"
            assert verdict.holds == ring.rel_plus(a, b)


class TestOppositeViewDispatch:
    def test_order_transport_through_views(self):
        from starinv import opposite_view

        rng = random.Random(59)
        eye = ExactMatrix.identity(3)
        for _ in range(15):
            a = random_singular_matrix(rng, 3, rng.randint(1, 2))
            d = dagger(a)
            p = a * d
            q = d * a
            b4 = (eye - p) * random_rational_matrix(rng, 3, 3) * (eye - q)
            dd = q * random_rational_matrix(rng, 3, 3) * (eye - p)
            b = above_mp1(a, OneMPAboveForm(b4, dd))
            va, vb = opposite_view(a), opposite_view(b)
            v = leq_1mp(va, vb)
            assert v.holds == leq_mp1(a, b).holds is True
            assert v.witness.x.base == leq_mp1(a, b).witness.x
            assert leq_mp1(va, vb).holds == leq_1mp(a, b).holds


class TestInheritance:
    def test_upper_inverses_shrink_to_lower_family_sampled(self):
        # a below b: products z*a*y with y, z from b's family land in a's family
        from starinv import family_1mp
        from starinv.inverses import is_one_mp

        rng = random.Random(47)
        eye = ExactMatrix.identity(3)
        for _ in range(25):
            a = random_singular_matrix(rng, 3, rng.randint(1, 2))
            d = dagger(a)
            p = a * d
            q = d * a
            b4 = (eye - p) * random_rational_matrix(rng, 3, 3) * (eye - q)
            dd = (eye - q) * random_rational_matrix(rng, 3, 3) * p
            b = above_1mp(a, OneMPAboveForm(b4, dd))
            fam_b = family_1mp(b, dagger(b))
            y = fam_b.at(random_rational_matrix(rng, 3, 3))
            zz = fam_b.at(random_rational_matrix(rng, 3, 3))
            assert is_one_mp(a, zz * a * y, d)


class TestAxiomSuite:
    def test_z6_1mp(self):
        rep = order_axiom_suite(zn_ring(6), "1mp")
        assert rep.passed and rep.checked > 0

    def test_z8_minus(self):
        rep = order_axiom_suite(zn_ring(8), "minus")
        assert rep.passed

    def test_m2gf2_plus(self):
        rep = order_axiom_suite(matrix_star_ring(2), "plus")
        assert rep.passed and rep.checked > 0

    def test_z8_plus_skipped(self):
        rep = order_axiom_suite(zn_ring(8), "plus")
        assert rep.passed and rep.checked == 0
        assert any("undefined" in note for note in rep.notes)

    def test_unknown_relation(self):
        with pytest.raises(ValueError):
            order_axiom_suite(zn_ring(6), "sharp")
