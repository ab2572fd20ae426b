"""Two explicit torsion families and their certificates.

* tau(m,n,q): (-A + A^-1) * tau = C(m,n) S_q(a2), so tau is killed by 1 - A^2.
* eprime(i): sums of S_k(a1) of the parity of i, killed by 1 - A^(2i+4).

Nonvanishing in the quotient is shown by evaluation: everything in the
relator span vanishes at A = 1 and at A = -1, so one nonzero coefficient at
either point is enough.
"""
from __future__ import annotations

from dataclasses import dataclass

from .elements import SkeinElement, cheb_elem
from .laurent import ONE, LaurentPoly, geo
from .obstruction import NonzeroWitness, certify_nonzero_mod_relations
from .reduction import ReductionCertificate, ReductionStep, reduce_a1_line
from .relators import relator

__all__ = ["geo", "tau", "eprime", "TorsionCertificate", "CertificateError",
           "certify_tau", "certify_eprime"]

_A = LaurentPoly.mono(1)


class CertificateError(RuntimeError):
    """A certificate could not be built (never silently downgraded)."""


def tau(m: int, n: int, q: int) -> SkeinElement:
    """geo(m+n+2) S_m S_n S_q + geo(m+n) S_{m-1} S_{n-1} (S_{q+1} + S_{q-1})
    + geo(m+n-2) S_{m-2} S_{n-2} S_q, indices read as (a1, a3, a2)."""
    if m < 0 or q < 0:
        raise ValueError(f"tau needs m, q >= 0 (got m={m}, q={q})")
    out = SkeinElement.zero()
    for coeff, (i, j, k) in (
        (geo(m + n + 2), (m, q, n)),
        (geo(m + n), (m - 1, q + 1, n - 1)),
        (geo(m + n), (m - 1, q - 1, n - 1)),
        (geo(m + n - 2), (m - 2, q, n - 2)),
    ):
        if coeff:
            out = out + cheb_elem(i, j, k, coeff)
    return out


def eprime(i: int) -> SkeinElement:
    """e'_1 = S_1, e'_2 = S_2, e'_i = S_i + e'_{i-2} (i >= 3), all in a1."""
    if i < 1:
        raise ValueError(f"eprime needs i >= 1 (got {i})")
    out = SkeinElement.zero()
    for k in range(i, 0, -2):
        out = out + cheb_elem(k, 0, 0)
    return out


@dataclass(frozen=True)
class TorsionCertificate:
    """Evidence that ``element`` is a nonzero torsion element.

    ``membership`` writes ``annihilator * element`` as an explicit
    combination of relators. ``nonzero`` is a coefficient surviving at
    A = ±1; ``strictness`` are such coefficients for (1+A)*element at A = 1
    and (1-A)*element at A = -1, so neither linear factor alone kills it.
    """
    kind: str
    params: tuple[int, ...]
    element: SkeinElement
    annihilator: LaurentPoly
    witness_kind: str
    membership: ReductionCertificate
    nonzero: NonzeroWitness
    strictness: tuple[NonzeroWitness, NonzeroWitness]

    def verify(self) -> bool:
        target = self.element.scale(self.annihilator)
        if not (self.membership.is_member and self.membership.verify(target)):
            return False
        val = self.element[self.nonzero.monomial].evaluate(self.nonzero.a_value)
        if val != self.nonzero.value or val == 0:
            return False
        for factor, w in zip((ONE + _A, ONE - _A), self.strictness):
            v = (self.element[w.monomial] * factor).evaluate(w.a_value)
            if v == 0 or v != w.value:
                return False
        return True


def _witness_at(e: SkeinElement, a_value: int) -> NonzeroWitness:
    w = certify_nonzero_mod_relations(e, a_values=(a_value,))
    if w is None:
        raise CertificateError(f"no coefficient survives at A = {a_value}")
    return w


def _evaluation_witnesses(e: SkeinElement) -> tuple[NonzeroWitness, tuple[NonzeroWitness, NonzeroWitness]]:
    nonzero = certify_nonzero_mod_relations(e)
    if nonzero is None:
        raise CertificateError("element vanishes at A = 1 and A = -1; nonvanishing not certified")
    strict = (_witness_at(e.scale(ONE + _A), 1), _witness_at(e.scale(ONE - _A), -1))
    return nonzero, strict


def certify_tau(m: int, n: int, q: int) -> TorsionCertificate:
    """(1 - A^2) tau = A * C(m,n) S_q(a2), checked by exact expansion."""
    if (m, n) == (0, 0):
        raise CertificateError("tau(0,0,q) is identically zero")
    e = tau(m, n, q)
    if not e:
        raise CertificateError(f"tau({m},{n},{q}) is identically zero")
    r = relator(m, n, q)
    if e.scale(-_A + _A ** -1) != r.element:
        raise CertificateError(f"(-A + A^-1) tau({m},{n},{q}) differs from the relator")
    annihilator = ONE - _A ** 2
    lead = r.leading.index if r.leading.index is not None else (m, q, max(n, 0))
    membership = ReductionCertificate((ReductionStep(0, _A, lead),), SkeinElement.zero(), (r,))
    if not membership.verify(e.scale(annihilator)):
        raise CertificateError("identity witness failed to re-expand")
    nonzero, strict = _evaluation_witnesses(e)
    return TorsionCertificate("tau", (m, n, q), e, annihilator, "identity",
                              membership, nonzero, strict)


def certify_eprime(i: int) -> TorsionCertificate:
    """(1 - A^(2i+4)) e'_i reduces to zero along the C(k,0) line."""
    e = eprime(i)
    annihilator = ONE - LaurentPoly.mono(2 * i + 4)
    target = e.scale(annihilator)
    cert = reduce_a1_line(target)
    if not cert.is_member:
        raise CertificateError(f"(1 - A^{2 * i + 4}) e'_{i} left residue {cert.residue!r}")
    if not cert.verify(target):
        raise CertificateError("reduction certificate failed to re-expand")
    nonzero, strict = _evaluation_witnesses(e)
    return TorsionCertificate("eprime", (i,), e, annihilator, "reduction",
                              cert, nonzero, strict)
