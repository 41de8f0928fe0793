import itertools

import pytest

import oracles
from levischubert import bp, levi, toroidal, weyl


def subset_pairs(n):
    delta = list(range(1, n))
    for r in range(n):
        for jc in itertools.combinations(delta, r):
            J = frozenset(jc)
            rest = [x for x in delta if x not in J]
            for s in range(len(rest) + 1):
                for kc in itertools.combinations(rest, s):
                    yield J, J | frozenset(kc)


class TestParabolicDecompose:
    def test_identity(self):
        assert bp.parabolic_decompose((1, 2, 3), (), {1}) == (
            (1, 2, 3), (1, 2, 3))

    def test_worked_s3_instance(self):
        assert bp.parabolic_decompose((3, 2, 1), (), {1}) == (
            (2, 3, 1), (2, 1, 3))

    def test_frozen_s4_instance(self):
        assert bp.parabolic_decompose((3, 4, 1, 2), (), {1, 2}) == (
            (1, 3, 4, 2), (2, 3, 1, 4))

    def test_rejects_bad_nesting(self):
        with pytest.raises(ValueError):
            bp.parabolic_decompose((3, 2, 1), {1}, {2})

    def test_rejects_non_representative(self):
        with pytest.raises(ValueError):
            bp.parabolic_decompose((2, 1, 3), {1}, {1, 2})

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_factorization_properties(self, n):
        for J, K in subset_pairs(n):
            for w in weyl.quotient_reps(n, J):
                v, u = bp.parabolic_decompose(w, J, K)
                assert weyl.compose(v, u) == w
                assert weyl.in_quotient(v, K)
                assert weyl.in_parabolic(u, K)
                assert weyl.in_quotient(u, J)
                assert weyl.length(w) == weyl.length(v) + weyl.length(u)
                assert v == oracles.coset_min(w, K)


class TestCharacterizations:
    def test_worked_s3_instance(self):
        assert bp.is_bp_maximality((3, 2, 1), (), {1})
        assert bp.is_bp_support((3, 2, 1), (), {1})
        assert bp.poincare_factorizes((3, 2, 1), (), {1})
        # the generating function identity behind it
        assert weyl.poly_mul((1, 1), (1, 1, 1)) == (1, 2, 2, 1)
        assert weyl.poincare_polynomial((3, 2, 1)) == (1, 2, 2, 1)

    def test_identity_always_factors(self):
        assert bp.poincare_factorizes((1, 2, 3), (), {2})
        assert bp.is_bp_maximality((1, 2, 3), (), {2})
        assert bp.is_bp_support((1, 2, 3), (), {2})

    def test_frozen_counterexample(self):
        # the factor u = id is not maximal below w inside W_K
        args = ((1, 4, 2, 3), (), {3})
        assert not bp.is_bp_maximality(*args)
        assert not bp.is_bp_support(*args)
        assert not bp.poincare_factorizes(*args)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_three_way_equivalence(self, n):
        for J, K in subset_pairs(n):
            for w in weyl.quotient_reps(n, J):
                a = bp.is_bp_maximality(w, J, K)
                b = bp.is_bp_support(w, J, K)
                c = bp.poincare_factorizes(w, J, K)
                assert a == b == c, (w, J, K)

    def test_decompose_bundle(self):
        got = bp.decompose((3, 2, 1), (), {1})
        assert (got.v, got.u) == ((2, 3, 1), (2, 1, 3))
        assert got.is_bp
        assert got.maximality and got.support_condition and got.poincare_condition
        data = got.to_json()
        assert data == {
            "v": [2, 3, 1], "u": [2, 1, 3], "bp": True,
            "characterizations": {
                "maximality": True, "support": True, "poincare": True}}


class TestProjectDivisor:
    def test_onto_instance(self):
        image, kind = bp.project_divisor(
            (1, 3, 5, 2, 4), (1, 3, 5, 4, 2), (), {1, 4})
        assert image == (1, 3, 5, 2, 4)
        assert kind == bp.ONTO

    def test_unique_divisor_instance(self):
        image, kind = bp.project_divisor(
            (1, 2, 5, 4, 3), (1, 3, 5, 4, 2), (), {1, 4})
        assert image == (1, 2, 5, 3, 4)
        assert kind == bp.DIVISOR
        assert image in weyl.lower_covers((1, 3, 5, 2, 4), {1, 4})

    def test_collapsing_quotient_is_onto(self):
        # K swallowing the support collapses everything onto the image
        w = (3, 2, 1)
        for tau in weyl.lower_covers(w):
            image, kind = bp.project_divisor(tau, w, (), {1, 2})
            assert kind == bp.ONTO and image == (1, 2, 3)

    def test_rejects_non_divisor(self):
        with pytest.raises(ValueError):
            bp.project_divisor((1, 2, 3), (3, 2, 1), (), {1})

    def test_rejects_non_factoring_pair(self):
        with pytest.raises(ValueError):
            bp.project_divisor((1, 3, 2, 4), (1, 4, 2, 3), (), {3})

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_dichotomy_exhaustive(self, n):
        for w in itertools.permutations(range(1, n + 1)):
            if weyl.length(w) == 0:
                continue
            covers = weyl.lower_covers(w)
            for r in range(n):
                for kc in itertools.combinations(range(1, n), r):
                    K = frozenset(kc)
                    if not bp.poincare_factorizes(w, (), K):
                        continue
                    v = weyl.min_coset_rep(w, K)
                    vcovers = weyl.lower_covers(v, K)
                    for tau in covers:
                        image, kind = bp.project_divisor(tau, w, (), K)
                        if kind == bp.ONTO:
                            assert image == v
                            # the moving reflection then lies in W_K
                            t = weyl.compose(weyl.inverse(w), tau)
                            assert weyl.in_parabolic(t, K)
                        else:
                            assert image in vcovers


class TestTransport:
    def test_certified_instance(self):
        # product of the failing Grassmannian index with the longest
        # element of its parabolic: the factorization holds and the
        # projected check fails with the identity as witness
        report = bp.nontoroidal_transport((6, 2, 5, 4, 3, 1), (), {1, 3, 4, 5})
        assert report.certified_nontoroidal
        step = next(s for s in report.steps if s.omitted == 2)
        assert step.v == (2, 6, 1, 3, 4, 5)
        assert step.is_bp
        assert step.verdict == toroidal.FAILS
        assert step.witness == weyl.identity(6)

    def test_uncertified_without_factorization(self):
        # every maximal coarsening of this element fails to factor, so no
        # verdict propagates even though one projected check fails
        report = bp.nontoroidal_transport((3, 4, 1, 2), (), {2})
        assert not report.certified_nontoroidal
        assert all(not s.is_bp for s in report.steps)
        assert {s.omitted for s in report.steps} == {1, 2, 3}

    def test_requires_stability(self):
        with pytest.raises(ValueError):
            bp.nontoroidal_transport((2, 4, 1, 3), (), {2})

    def test_json_shape(self):
        report = bp.nontoroidal_transport((6, 2, 5, 4, 3, 1), (), {1, 3, 4, 5})
        data = report.to_json()
        assert set(data) == {
            "w", "parabolic", "levi", "steps", "certified_nontoroidal"}
        assert data["certified_nontoroidal"] is True

    def test_image_of_stable_is_stable(self):
        # equivariance of the projection, checked over the full flag at n=4
        for w in itertools.permutations(range(1, 5)):
            stab = levi.max_levi(w)
            for d in (1, 2, 3):
                K = frozenset({1, 2, 3}) - {d}
                v, _ = bp.parabolic_decompose(w, (), K)
                assert stab <= levi.max_levi(v, K)
