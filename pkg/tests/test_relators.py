import pytest
from hypothesis import given
from hypothesis import strategies as st

from kbsm import checks
from kbsm.elements import SkeinElement, cheb_elem, elem_mul, monomial
from kbsm.laurent import LaurentPoly, quantum_minus as c
from kbsm.relators import (CANONICAL_LEMMA_B, FAMILY_C, FAMILY_CBAR, OutOfRange, SequenceCache,
                           c_closed, c_via_recurrence, cbar_closed, lemma_b_diagnostic, n_seq, nn_seq,
                           p_seq, pp_seq, q_seq, relator, relator_bar, relators_up_to_degree)

A = LaurentPoly.mono(1)


class TestSequences:
    def test_p_examples(self):
        assert p_seq(1, 1) == monomial(1, 0, 1, A) + monomial(0, 1, 0, A**-1)
        assert p_seq(0, 0) == SkeinElement.empty_link().scale(-(A**-3) * (-(A**2) - A**-2))
        assert p_seq(0, 0) == SkeinElement.empty_link().scale(A**-1 + A**-5)
        assert p_seq(2, 0) == monomial(2, 0, 0, A) - monomial(0, 0, 0, A + A**-3)
        assert p_seq(1, -1) == cheb_elem(0, 1, 0)

    def test_q_examples(self):
        assert q_seq(1, 1) == cheb_elem(0, 1, 0, -(A**-1))
        assert q_seq(2, 0) == SkeinElement.empty_link().scale(A**-3)
        assert q_seq(2, 0) == pp_seq(0, 0).scale(A**-3)
        assert q_seq(3, 1) == pp_seq(1, 1).scale(A ** (3 + 1 - 5))
        assert q_seq(1, -1) == cheb_elem(0, 1, 0, -1)

    def test_pp_examples(self):
        assert pp_seq(1, 1) == monomial(1, 0, 1)
        assert pp_seq(4, 0) == cheb_elem(4, 0, 0) == nn_seq(4, 0)
        assert pp_seq(1, -1).is_zero()

    def test_n_is_mirror_route(self):
        assert n_seq(1, 1) == monomial(1, 0, 1, A**-1) + monomial(0, 1, 0, A)

    @pytest.mark.parametrize("fn,args", [(p_seq, (-1, 0)), (p_seq, (0, -1)), (q_seq, (0, -2)),
                                         (n_seq, (0, -3)), (pp_seq, (-1, 2)), (nn_seq, (-2, -2))])
    def test_out_of_range(self, fn, args):
        with pytest.raises(OutOfRange):
            fn(*args)

    def test_cache_equals_fresh_recomputation(self):
        shared = SequenceCache()
        for m in range(0, 7):
            for n in range(-6, 7):
                if n < 0 and m < 1:
                    continue
                # query order differs: shared is filled bottom-up, fresh top-down
                assert p_seq(m, n, shared) == p_seq(m, n, SequenceCache())
                assert q_seq(m, n, shared) == q_seq(m, n, SequenceCache())
        for m in range(6, -1, -1):
            for n in range(6, -7, -1):
                assert pp_seq(m, n, shared) == pp_seq(m, n, SequenceCache())

    def test_deep_recurrence_does_not_recurse(self):
        cache = SequenceCache()
        assert p_seq(60, -60, cache)  # fills iteratively; no RecursionError


class TestClosedForms:
    def test_examples(self):
        assert c_closed(0, 0).is_zero()
        assert c_closed(1, 1) == cheb_elem(1, 0, 1, c(4)) + cheb_elem(0, 1, 0, c(2))
        assert c_closed(-2, -1) == -c_closed(2, 1)
        assert c_closed(1, -1).is_zero()

    def test_cbar_examples(self):
        assert cbar_closed(1, 0) == cheb_elem(0, 1, 0, -(A**3) + A**-3)
        assert cbar_closed(2, 0) == cheb_elem(0, 2, 0, -(A**4) + A**-4)
        assert cbar_closed(0, 0).is_zero()

    def test_recurrence_examples(self):
        assert c_via_recurrence(0, 0).is_zero()
        assert c_via_recurrence(2, 1) == p_seq(2, 1).scale(-(A**3)) + n_seq(2, 1).scale(A**-3)
        assert p_seq(1, -1) - n_seq(1, -1) == SkeinElement.zero() == c_closed(1, -1)

    def test_positive_quadrant_formula(self):
        # m, n >= 0: four explicit terms with plain (nonnegative) indices where defined
        for m in range(2, 6):
            for n in range(2, 6):
                expect = (cheb_elem(m, 0, n, c(m + n + 2)) + cheb_elem(m - 1, 1, n - 1, c(m + n))
                          + cheb_elem(m - 2, 0, n - 2, c(m + n - 2)))
                assert c_closed(m, n) == expect

    def test_negative_n_formula(self):
        # C(m,-n) with m, n >= 2, written out with n-2 >= 0
        for m in range(2, 6):
            for n in range(2, 6):
                expect = (-cheb_elem(m, 0, n - 2, c(m - n + 2)) - cheb_elem(m - 1, 1, n - 1, c(m - n))
                          - cheb_elem(m - 2, 0, n, c(m - n - 2)))
                assert c_closed(m, -n) == expect

    def test_closed_vs_recurrence_sweep(self):
        assert checks.check_closed_vs_recurrence(8, 8).ok

    @given(st.integers(-12, 12), st.integers(-12, 12))
    def test_antisymmetry(self, m, n):
        assert c_closed(m, n) + c_closed(-m, -n) == SkeinElement.zero()
        assert cbar_closed(m, n) + cbar_closed(-m, -n) == SkeinElement.zero()


class TestLemmaB:
    def test_only_canonical_variant_matches(self):
        report = lemma_b_diagnostic(5, 5)
        assert report[CANONICAL_LEMMA_B] == []
        for variant, bad in report.items():
            if variant != CANONICAL_LEMMA_B:
                assert bad, f"{variant} unexpectedly agrees"
                assert all(m >= 2 for m, _ in bad)  # P(1,-1) is a base value

    def test_unknown_variant(self):
        with pytest.raises(ValueError):
            SequenceCache("nonsense")


class TestAppendixIdentities:
    @pytest.mark.parametrize("result", checks.check_appendix(9, 9) + checks.check_mirror(9, 9),
                             ids=lambda r: r.name)
    def test_identity(self, result):
        assert result.ok, result.line()

    def test_p_split_fails_at_m1_without_base(self):
        # the P-split relation needs PP(m-2, .) and is only claimed for m >= 2;
        # with PP(-1, .) read as zero it fails at m = 1 because Q(1,-n) != 0
        for k in range(1, 5):
            assert p_seq(1, -k) != pp_seq(1, -k).scale(A ** (1 - k - 1))


class TestRelators:
    def test_examples(self):
        assert relator(1, 0, 0).element == cheb_elem(1, 0, 0, -(A**3) + A**-3)
        assert relator(3, 0, 0).element == (cheb_elem(3, 0, 0, -(A**5) + A**-5)
                                            - cheb_elem(1, 0, 0, -A + A**-1))
        assert relator(1, 1, 2).element == elem_mul(c_closed(1, 1), cheb_elem(0, 2, 0))

    def test_errors(self):
        with pytest.raises(ValueError):
            relator(-1, 0, 0)
        with pytest.raises(ValueError):
            relator_bar(0, 0, -2)

    @given(st.integers(0, 10), st.integers(-10, 10), st.integers(0, 10))
    def test_invariants(self, m, n, q):
        for r in (relator(m, n, q), relator_bar(q, n, m)):
            assert len(r.element) <= 4
            assert r.element.evaluate(1) == {} and r.element.evaluate(-1) == {}
        assert relator(m, n, q).element == elem_mul(c_closed(m, n), cheb_elem(0, q, 0))
        assert relator_bar(q, n, m).element == elem_mul(cbar_closed(q, n), cheb_elem(m, 0, 0))

    @given(st.integers(0, 10), st.integers(-10, 10), st.integers(0, 10))
    def test_negated_parameters(self, m, n, q):
        # C(m,n) = -C(-m,-n), transported through the S_q(a2) factor
        assert relator(m, n, q).element == -elem_mul(c_closed(-m, -n), cheb_elem(0, q, 0))

    def test_leading_examples(self):
        lead = relator(2, 1, 0).leading
        assert (lead.index, lead.coeff, lead.degenerate) == ((2, 0, 1), -(A**5) + A**-5, False)
        assert relator(1, -1, 0).leading.degenerate and relator(1, -1, 0).element.is_zero()
        # n < 0, m >= 1: the S_(m-1) S_(q+1) S_(n-1) term leads
        lead = relator(3, -1, 2).leading
        assert lead.index == (2, 3, 0) and lead.coeff == -c(2) and not lead.degenerate

    @given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
    def test_first_term_leads_for_nonnegative_n(self, m, n, q):
        if (m, n) == (0, 0):
            return  # C(0,0) = 0
        r = relator(m, n, q)
        assert r.leading.index == (m, q, n) and r.leading.coeff == c(m + n + 2)

    def test_degenerate_when_m_equals_minus_n(self):
        for m in range(1, 6):
            for q in range(0, 4):
                assert relator(m, -m, q).leading.degenerate

    def test_enumeration_is_complete(self):
        got = {(r.family, r.m, r.n, r.q) for r in relators_up_to_degree(4)}
        brute = set()
        for fam in (FAMILY_C, FAMILY_CBAR):
            for m in range(0, 12):
                for q in range(0, 12):
                    for n in range(-12, 12):
                        r = relator(m, n, q) if fam == FAMILY_C else relator_bar(q, n, m)
                        if r.element and r.element.max_degree() <= 4:
                            brute.add((fam, m, n, q))
        assert got == brute
