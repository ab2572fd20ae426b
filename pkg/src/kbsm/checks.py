"""Identity sweeps shared by the ``verify`` subcommand and the test-suite.

Each check returns a ``CheckResult`` listing every counterexample it found;
nothing is sampled unless the check says so.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .elements import SkeinElement, cheb_elem, elem_mul
from .laurent import LaurentPoly
from .obstruction import certify_nonzero_mod_relations
from .reduction import RelatorSet, reduce
from .relators import (CANONICAL_LEMMA_B, SequenceCache, lemma_b_diagnostic, c_closed, c_via_recurrence, cbar_closed, default_cache,
                       nn_seq, n_seq, p_seq, pp_seq, q_seq, relator, relator_bar)
from .torsion import CertificateError, certify_eprime, certify_tau, tau

_A = LaurentPoly.mono


@dataclass
class CheckResult:
    name: str
    statement: str
    checked: int = 0
    failures: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, *where) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(where)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = "" if self.ok else f"  first counterexample: {self.failures[0]}"
        return f"{status} {self.name}: {self.statement} [{self.checked} cases]{tail}"


def _s3(n: int) -> SkeinElement:
    return cheb_elem(0, 0, n)


# -- relator constructions ------------------------------------------------------

def check_closed_vs_recurrence(max_m: int, max_n: int, cache: SequenceCache | None = None) -> CheckResult:
    res = CheckResult("closed-form", "C(m,n) closed form == kink-removal route, |m|<=M, |n|<=N")
    for m in range(-max_m, max_m + 1):
        for n in range(-max_n, max_n + 1):
            res.record(c_closed(m, n) == c_via_recurrence(m, n, cache), m, n)
    return res


def check_antisymmetry(max_m: int, max_n: int) -> list[CheckResult]:
    c = CheckResult("antisymmetry-C", "C(m,n) + C(-m,-n) == 0")
    cb = CheckResult("antisymmetry-Cbar", "Cbar(q,n) + Cbar(-q,-n) == 0")
    for m in range(-max_m, max_m + 1):
        for n in range(-max_n, max_n + 1):
            c.record((c_closed(m, n) + c_closed(-m, -n)).is_zero(), m, n)
            cb.record((cbar_closed(m, n) + cbar_closed(-m, -n)).is_zero(), m, n)
    return [c, cb]


def check_vanishing(max_m: int, max_n: int, max_q: int) -> CheckResult:
    res = CheckResult("vanishing", "every relator of both families is zero at A = 1 and A = -1")
    for m in range(0, max_m + 1):
        for q in range(0, max_q + 1):
            for n in range(-max_n, max_n + 1):
                for r in (relator(m, n, q), relator_bar(q, n, m)):
                    ok = not r.element.evaluate(1) and not r.element.evaluate(-1)
                    res.record(ok, r.family, m, n, q)
    return res


def check_theorem_expansion(max_m: int, max_n: int, max_q: int) -> list[CheckResult]:
    c = CheckResult("expansion-C", "relator(m,n,q) == C(m,n) * S_q(a2) by generic multiplication")
    cb = CheckResult("expansion-Cbar", "relator_bar(q,n,m) == Cbar(q,n) * S_m(a1)")
    for m in range(0, max_m + 1):
        for q in range(0, max_q + 1):
            for n in range(-max_n, max_n + 1):
                c.record(relator(m, n, q).element == elem_mul(c_closed(m, n), cheb_elem(0, q, 0)), m, n, q)
                cb.record(relator_bar(q, n, m).element == elem_mul(cbar_closed(q, n), cheb_elem(m, 0, 0)), q, n, m)
    return [c, cb]


# -- appendix sequences ------------------------------------------------------------

def check_appendix(max_m: int, max_n: int, cache: SequenceCache | None = None) -> list[CheckResult]:
    """The PP/Q/P relations on 2 <= m <= max_m, |n| <= max_n."""
    cache = cache or default_cache()
    P = lambda m, n: p_seq(m, n, cache)    # noqa: E731
    Q = lambda m, n: q_seq(m, n, cache)    # noqa: E731
    PP = lambda m, n: pp_seq(m, n, cache)  # noqa: E731
    q_shift = CheckResult("Q-shift", "Q(m,n) == A^(m+n-5) PP(m-2,n)")
    p_split = CheckResult("P-split", "P(m,n) == A^(m+n-1) PP(m,n) - A^(m+n-5) PP(m-2,n)")
    pp_sum = CheckResult("PP-sum", "PP(m,n) == A^(-m-n+1) (P(m,n) + Q(m,n))")
    pp_pos = CheckResult("PP-closed+", "PP(m,n) == PP(m,1) S_(n-1)(a3) - PP(m,0) S_(n-2)(a3), n >= 0")
    pp_neg = CheckResult("PP-closed-", "PP(m,-k) == A^3 PP(m,1) S_(k-1)(a3) - A^3 PP(m,0) S_k(a3), k >= 1")
    pp_neg2 = CheckResult("PP-closed-alt", "PP(m,-k) == PP(m,-2) S_(k-2)(a3) - PP(m,-1) S_(k-3)(a3), k >= 1")
    for m in range(2, max_m + 1):
        for n in range(-max_n, max_n + 1):
            e = m + n
            q_shift.record(Q(m, n) == PP(m - 2, n).scale(_A(e - 5)), m, n)
            p_split.record(P(m, n) == PP(m, n).scale(_A(e - 1)) - PP(m - 2, n).scale(_A(e - 5)), m, n)
            pp_sum.record(PP(m, n) == (P(m, n) + Q(m, n)).scale(_A(-e + 1)), m, n)
            if n >= 0:
                pp_pos.record(PP(m, n) == elem_mul(PP(m, 1), _s3(n - 1)) - elem_mul(PP(m, 0), _s3(n - 2)), m, n)
            else:
                k = -n
                pp_neg.record(PP(m, n) == (elem_mul(PP(m, 1), _s3(k - 1))
                                           - elem_mul(PP(m, 0), _s3(k))).scale(_A(3)), m, n)
                pp_neg2.record(PP(m, n) == elem_mul(PP(m, -2), _s3(k - 2))
                               - elem_mul(PP(m, -1), _s3(k - 3)), m, n)
    return [q_shift, p_split, pp_sum, pp_pos, pp_neg, pp_neg2]


def check_mirror(max_m: int, max_n: int, cache: SequenceCache | None = None) -> list[CheckResult]:
    """N, NN come from their own recurrences; compare with mirrored P, PP.
    Also the N-split relation, which is the mirror image of P-split."""
    cache = cache or default_cache()
    n_mirror = CheckResult("N-mirror", "N(m,n) == mirror(P(m,n))")
    nn_mirror = CheckResult("NN-mirror", "NN(m,n) == mirror(PP(m,n))")
    n_split = CheckResult("N-split", "N(m,n) == A^(-m-n+1) NN(m,n) - A^(-m-n+5) NN(m-2,n), m >= 2")
    for m in range(0, max_m + 1):
        for n in range(-max_n, max_n + 1):
            nn_mirror.record(nn_seq(m, n, cache) == pp_seq(m, n, cache).mirror(), m, n)
            if n < 0 and m < 1:
                continue
            n_mirror.record(n_seq(m, n, cache) == p_seq(m, n, cache).mirror(), m, n)
            if m >= 2:
                e = m + n
                n_split.record(n_seq(m, n, cache) == nn_seq(m, n, cache).scale(_A(-e + 1))
                               - nn_seq(m - 2, n, cache).scale(_A(-e + 5)), m, n)
    return [n_mirror, nn_mirror, n_split]


def check_lemma_b_variants(max_m: int, max_n: int) -> CheckResult:
    """Only the canonical P(m,-1) rule may agree with the closed form; the
    other two readings are reported, not trusted."""
    report = lemma_b_diagnostic(max_m, max_n)
    res = CheckResult("P(m,-1)-rule", f"only the '{CANONICAL_LEMMA_B}' reading reproduces the closed form")
    for variant, bad in report.items():
        res.record((not bad) == (variant == CANONICAL_LEMMA_B), variant, len(bad))
    return res


# -- torsion --------------------------------------------------------------------

def check_torsion(max_m: int, max_n: int, max_q: int) -> list[CheckResult]:
    ident = CheckResult("tau-identity", "(-A + A^-1) tau(m,n,q) == C(m,n) S_q(a2)")
    top = CheckResult("tau-top-value", "coefficient of tau at its first-term monomial, A = 1, is ±(m+n+2)")
    cert = CheckResult("tau-certificate", "certify_tau builds and verifies (tau != 0)")
    for m in range(0, max_m + 1):
        for q in range(0, max_q + 1):
            for n in range(-max_n, max_n + 1):
                if (m, n) == (0, 0):
                    continue
                t = tau(m, n, q)
                ident.record(t.scale(-_A(1) + _A(-1)) == relator(m, n, q).element, m, n, q)
                expect = tau_top_value(m, n, q)
                if expect is not None:
                    idx, val = expect
                    top.record(t[idx].evaluate(1) == val, m, n, q)
                if t:
                    try:
                        cert.record(certify_tau(m, n, q).verify(), m, n, q)
                    except CertificateError as exc:
                        cert.record(False, m, n, q, str(exc))
    return [ident, top, cert]


def tau_top_value(m: int, n: int, q: int):
    """(monomial, value at A = 1) of tau's first term, or None when that term
    vanishes (n = -1). For n >= 0 this is +(m+n+2) at S_m(a1)S_n(a3)S_q(a2);
    for n <= -2, S_n = -S_(-n-2) flips the sign."""
    if n >= 0:
        return (m, q, n), m + n + 2
    if n == -1:
        return None
    return (m, q, -n - 2), -(m + n + 2)


def check_eprime(max_i: int) -> CheckResult:
    res = CheckResult("eprime", "(1 - A^(2i+4)) e'_i reduces to zero along C(k,0)")
    for i in range(1, max_i + 1):
        try:
            res.record(certify_eprime(i).verify(), i)
        except CertificateError as exc:
            res.record(False, i, str(exc))
    return res


# -- randomized soundness ----------------------------------------------------------

def random_laurent(rng: random.Random, max_terms: int = 3, max_exp: int = 6, max_coeff: int = 3) -> LaurentPoly:
    terms = [(rng.randint(-max_exp, max_exp), rng.randint(-max_coeff, max_coeff))
             for _ in range(rng.randint(1, max_terms))]
    p = LaurentPoly(terms)
    return p if p else LaurentPoly.mono(rng.randint(-max_exp, max_exp))


def random_combination(rng: random.Random, rs: RelatorSet, max_relators: int = 5) -> SkeinElement:
    """A random Z[A^±1]-combination of indexed relators of ``rs``."""
    ids = rs.indexed()
    out = SkeinElement.zero()
    for _ in range(rng.randint(1, max_relators)):
        r = rs[rng.choice(ids)]
        out = out + r.element.scale(random_laurent(rng))
    return out


def check_soundness(samples: int, seed: int, degree: int = 6) -> list[CheckResult]:
    rs = RelatorSet.up_to_degree(degree)
    rng = random.Random(seed)
    red = CheckResult("soundness-reduce", f"random relator combinations reduce to 0 (seed {seed})")
    wit = CheckResult("soundness-witness", "no evaluation witness on a relator combination")
    for s in range(samples):
        e = random_combination(rng, rs)
        cert = reduce(e, rs)
        red.record(cert.is_member and cert.verify(e), s)
        wit.record(certify_nonzero_mod_relations(e) is None, s)
    return [red, wit]


SUITES: dict[str, Callable[..., list[CheckResult]]] = {
    "appendix": lambda M, N, Q, **kw: check_appendix(M, N) + [check_lemma_b_variants(min(M, 8), min(N, 8))],
    "mirror": lambda M, N, Q, **kw: check_mirror(M, N),
    "antisymmetry": lambda M, N, Q, **kw: check_antisymmetry(M, N),
    "closed-form": lambda M, N, Q, **kw: [check_closed_vs_recurrence(M, N)],
    "vanishing": lambda M, N, Q, **kw: [check_vanishing(M, N, Q), *check_theorem_expansion(min(M, 6), min(N, 6), min(Q, 6))],
    "torsion": lambda M, N, Q, **kw: check_torsion(M, N, Q) + [check_eprime(max(M, 1))],
    "soundness": lambda M, N, Q, samples=200, seed=0, **kw: check_soundness(samples, seed),
}
