"""Canonical JSON forms for elements, relators and certificates.

Terms are sorted by index triple and Laurent coefficients are
``[[exponent, coefficient], ...]`` with exponents ascending, so equal values
always serialise to identical bytes.
"""
from __future__ import annotations

import json
from typing import Any

from .elements import CHEBYSHEV, SkeinElement
from .laurent import LaurentPoly
from .obstruction import AlphaConstraint, DescentCertificate, NonzeroWitness
from .reduction import ReductionCertificate
from .relators import Relator
from .torsion import TorsionCertificate


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def laurent_to_json(p: LaurentPoly) -> list[list[int]]:
    return p.to_pairs()


def element_to_json(e: SkeinElement) -> dict:
    return {
        "basis": e.basis,
        "terms": [{"i": i, "j": j, "k": k, "coeff": c.to_pairs()} for (i, j, k), c in e.items()],
    }


def element_from_json(obj: dict) -> SkeinElement:
    if not isinstance(obj, dict) or "terms" not in obj:
        raise ValueError("element JSON needs a 'terms' list")
    basis = obj.get("basis", CHEBYSHEV)
    terms = []
    for t in obj["terms"]:
        try:
            idx = (t["i"], t["j"], t["k"])
            coeff = LaurentPoly.from_pairs(t["coeff"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed term {t!r}") from exc
        terms.append((idx, coeff))
    return SkeinElement(terms, basis)


def relator_header(r: Relator) -> dict:
    return {"family": r.family, "m": r.m, "n": r.n, "q": r.q}


def relator_to_json(r: Relator) -> dict:
    out = relator_header(r)
    out.update(element_to_json(r.element))
    lead = r.leading
    out["leading"] = {
        "monomial": list(lead.index) if lead.index is not None else None,
        "coeff": lead.coeff.to_pairs() if lead.coeff is not None else None,
        "degenerate": lead.degenerate,
    }
    return out


def reduction_to_json(cert: ReductionCertificate) -> dict:
    return {
        "member": cert.is_member,
        "steps": [{"relator": relator_header(cert.relators[s.relator_id]),
                   "multiplier": s.multiplier.to_pairs(),
                   "monomial": list(s.monomial)} for s in cert.steps],
        "residue": element_to_json(cert.residue),
    }


def witness_to_json(w: NonzeroWitness | None) -> dict | None:
    if w is None:
        return None
    return {"monomial": list(w.monomial), "A": w.a_value, "value": w.value}


def torsion_to_json(cert: TorsionCertificate) -> dict:
    return {
        "kind": cert.kind,
        "params": list(cert.params),
        "element": element_to_json(cert.element),
        "annihilator": cert.annihilator.to_pairs(),
        "witness_kind": cert.witness_kind,
        "membership": reduction_to_json(cert.membership),
        "nonzero": witness_to_json(cert.nonzero),
        "strictness": {"(1+A)*element": witness_to_json(cert.strictness[0]),
                       "(1-A)*element": witness_to_json(cert.strictness[1])},
    }


def constraint_to_json(c: AlphaConstraint) -> list[dict]:
    return [{"alpha": list(a), "coeff": c.terms[a].to_pairs()} for a in sorted(c.terms)]


def descent_to_json(cert: DescentCertificate) -> dict:
    steps = []
    for s in cert.steps:
        fam, m, n, q = s.relator
        steps.append({
            "lemma": s.lemma,
            "relator": {"family": fam, "m": m, "n": n, "q": q},
            "constraint": constraint_to_json(s.constraint),
            "conclusion": s.conclusion,
            "kind": s.kind,
            "multiplier": s.multiplier.to_pairs(),
            "target": list(s.target),
            "tight_edge": s.tight_edge,
        })
    chain = [{"n": link.n, "u": link.u.to_pairs(), "v": link.v.to_pairs(),
              "breadth_u": link.u.breadth(), "breadth_v": link.v.breadth(),
              "decrement": link.decrement} for link in cert.chain]
    return {"depth": cert.depth, "premise": cert.premise, "steps": steps,
            "breadth_chain": chain, "tight_edges": list(cert.tight_edges)}
