import pytest

from kbsm.elements import SkeinElement
from kbsm.laurent import LaurentPoly, quantum_minus as c
from kbsm.obstruction import (DOMAIN_CANCELLATION, SUBSTITUTION, AlphaConstraint, alpha_of,
                              certify_nonzero_mod_relations, extract_constraint,
                              lemma_mmn_bookkeeping, verify_descent)
from kbsm.relators import relator, relator_bar
from kbsm.torsion import tau

A = LaurentPoly.mono(1)


class TestExtract:
    def test_alpha_index_order(self):
        # element triple is (a1, a2, a3); alpha subscript is (a1, a3, a2)
        assert alpha_of((1, 2, 3)) == (1, 3, 2)

    def test_cbar_one(self):
        got = extract_constraint(relator_bar(1, 0, 0))
        assert got.terms == {(0, 0, 1): -(A**3) + A**-3}

    def test_c11_sn(self):
        n = 2
        got = extract_constraint(relator(1, 1, n))
        assert got.terms == {(1, 1, n): c(4), (0, 0, n + 1): c(2), (0, 0, n - 1): c(2)}

    def test_cnnn(self):
        n = 2
        got = extract_constraint(relator(n, n, n))
        assert got.terms == {(n, n, n): c(2 * n + 2), (n - 1, n - 1, n + 1): c(2 * n),
                             (n - 1, n - 1, n - 1): c(2 * n), (n - 2, n - 2, n): c(2 * n - 2)}

    def test_coefficients_vanish_at_pm1(self):
        for m in range(4):
            for n in range(-3, 4):
                assert extract_constraint(relator(m, n, 2)).vanishes_at_pm1()

    def test_without(self):
        k = AlphaConstraint({(0, 0, 1): c(3), (0, 0, 3): c(5)})
        assert k.without([(0, 0, 1)]).terms == {(0, 0, 3): c(5)}


class TestDescent:
    def test_depth_one(self):
        cert = verify_descent(1)
        assert [s.lemma for s in cert.steps] == ["00n", "00n", "nnn"]
        assert [s.target for s in cert.steps[:2]] == [(0, 0, 1), (0, 0, 2)]
        last = cert.steps[-1]
        assert last.kind == SUBSTITUTION and last.multiplier == c(4)
        assert last.constraint.without([(0, 0, 2)]).terms == {(1, 1, 1): c(4), (0, 0, 0): c(2)}

    def test_depth_three_chain(self):
        cert = verify_descent(3)
        assert [link.decrement for link in cert.chain] == [4, 4, 4]
        assert [(link.u.breadth(), link.v.breadth()) for link in cert.chain] == [(8, 4), (12, 8), (16, 12)]

    @pytest.mark.parametrize("d", range(1, 11))
    def test_succeeds(self, d):
        cert = verify_descent(d)
        assert len(cert.chain) == d
        for s in cert.steps:
            assert s.multiplier  # cancelled factors are nonzero
            if s.kind == DOMAIN_CANCELLATION:
                assert s.constraint.terms[s.target] == s.multiplier

    def test_tight_edge_flagged(self):
        cert = verify_descent(2)
        assert any("alpha[1, 1, 2]" in t for t in cert.tight_edges)
        flagged = [s for s in cert.steps if s.tight_edge]
        assert flagged and flagged[0].relator == ("C", 1, 1, 2)

    def test_bookkeeping_t4(self):
        rows = lemma_mmn_bookkeeping(4)
        assert [(m, n) for m, n, _ in rows] == [(0, 4), (1, 2)]
        assert [spec for _, _, spec in rows] == [("Cbar", 0, 0, 4), ("C", 1, 1, 2)]
        assert relator(0, 0, 4).element.is_zero()  # why m = 0 goes through Cbar

    def test_bad_depth(self):
        with pytest.raises(ValueError):
            verify_descent(0)

    def test_trace_mentions_every_step(self):
        cert = verify_descent(2)
        assert len(cert.trace().splitlines()) == 1 + len(cert.steps) + len(cert.chain)


class TestNonzeroWitness:
    def test_empty_link(self):
        w = certify_nonzero_mod_relations(SkeinElement.empty_link())
        assert (w.monomial, w.a_value, w.value) == ((0, 0, 0), 1, 1)

    def test_relator_inconclusive(self):
        assert certify_nonzero_mod_relations(relator(2, 1, 0).element) is None

    def test_tau(self):
        assert certify_nonzero_mod_relations(tau(1, 1, 0)).value == 4

    def test_falls_back_to_minus_one(self):
        # A - 1 vanishes at 1 but not at -1
        e = SkeinElement.empty_link().scale(A - 1)
        w = certify_nonzero_mod_relations(e)
        assert (w.a_value, w.value) == (-1, -2)
