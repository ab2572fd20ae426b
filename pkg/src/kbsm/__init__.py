"""Skein module relators of (S1xS2)#(S1xS2) over Z[A^±1].

The Kauffman bracket skein algebra of the genus-two handlebody's pair of
pants is Z[A^±1][a1, a2, a3]; gluing in two 2-handles adds the relator
families C(m,n) S_q(a2) and Cbar(q,n) S_m(a1). This package builds those
relators exactly, reduces elements against them with certificates, certifies
two torsion families, and replays the argument that the module is not a
direct sum of a free and a torsion part.
"""
from .elements import SkeinElement, cheb_elem, elem_mirror, elem_mul, eval_elem, monomial
from .laurent import LaurentPoly, geo, quantum_minus
from .obstruction import certify_nonzero_mod_relations, extract_constraint, verify_descent
from .reduction import RelatorSet, leading, rank_table, reduce, reduce_a1_line
from .relators import (c_closed, c_via_recurrence, cbar_closed, n_seq, nn_seq, p_seq, pp_seq,
                       q_seq, relator, relator_bar)
from .torsion import certify_eprime, certify_tau, eprime, tau

__all__ = [
    "LaurentPoly", "geo", "quantum_minus",
    "SkeinElement", "cheb_elem", "monomial", "elem_mul", "elem_mirror", "eval_elem",
    "p_seq", "q_seq", "pp_seq", "n_seq", "nn_seq", "c_closed", "c_via_recurrence",
    "cbar_closed", "relator", "relator_bar",
    "RelatorSet", "leading", "reduce", "reduce_a1_line", "rank_table",
    "tau", "eprime", "certify_tau", "certify_eprime",
    "extract_constraint", "verify_descent", "certify_nonzero_mod_relations",
]
