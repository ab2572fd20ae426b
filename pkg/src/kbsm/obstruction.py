"""Replay of the non-splitting argument as checkable algebra.

Suppose the skein module were free-plus-torsion. Projecting to the free
rank-one summand gives a linear map iota to Z[A^±1]; write
alpha[n1, n3, n2] for the image of S_n1(a1) S_n3(a3) S_n2(a2). Every relator
becomes a linear equation among the alphas. The verifier rebuilds those
equations, checks that each vanishing conclusion only cancels a nonzero
Laurent factor, and checks that the surviving two-term recurrence forces
breadth(alpha[n,n,n]) to drop by exactly 4 at every step -- an infinite
descent in the nonnegative integers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .elements import CHEBYSHEV, Index, SkeinElement
from .laurent import LaurentPoly, quantum_minus as c
from .reduction import order_key
from .relators import Relator, relator, relator_bar

AlphaIndex = tuple[int, int, int]  # (n1, n3, n2): a1, a3, a2 indices

DOMAIN_CANCELLATION = "domain-cancellation"
SUBSTITUTION = "substitution"
BREADTH = "breadth"


def alpha_of(idx: Index) -> AlphaIndex:
    """Element triple (a1, a2, a3) -> alpha subscript (a1, a3, a2)."""
    i, j, k = idx
    return (i, k, j)


@dataclass(frozen=True)
class AlphaConstraint:
    """sum(terms[a] * alpha[a]) == 0."""
    terms: dict[AlphaIndex, LaurentPoly]

    def without(self, known_zero: Iterable[AlphaIndex]) -> AlphaConstraint:
        drop = set(known_zero)
        return AlphaConstraint({a: f for a, f in self.terms.items() if a not in drop})

    def vanishes_at_pm1(self) -> bool:
        return all(f.evaluate(1) == 0 and f.evaluate(-1) == 0 for f in self.terms.values())

    def __str__(self) -> str:
        if not self.terms:
            return "0 = 0"
        parts = [f"({self.terms[a]})*alpha{list(a)}" for a in sorted(self.terms, reverse=True)]
        return " + ".join(parts) + " = 0"


def extract_constraint(r: Relator) -> AlphaConstraint:
    return AlphaConstraint({alpha_of(idx): f for idx, f in r.element.items()})


def _form(*pairs: tuple[LaurentPoly, AlphaIndex]) -> AlphaConstraint:
    """A constraint written out by hand; zero coefficients dropped, equal
    subscripts merged."""
    acc: dict[AlphaIndex, LaurentPoly] = {}
    for f, a in pairs:
        acc[a] = acc.get(a, LaurentPoly()) + f
    return AlphaConstraint({a: f for a, f in acc.items() if f})


# -- descent ------------------------------------------------------------------

class DescentError(AssertionError):
    """A recomputed constraint or cancellation did not match the argument."""


@dataclass(frozen=True)
class DescentStep:
    lemma: str                      # "00n", "11n", "mmn" or "nnn"
    relator: tuple[str, int, int, int]  # (family, m, n, q)
    constraint: AlphaConstraint
    conclusion: str
    kind: str
    multiplier: LaurentPoly         # the factor that is cancelled / u_n
    target: AlphaIndex
    tight_edge: bool = False


@dataclass(frozen=True)
class BreadthLink:
    n: int
    u: LaurentPoly
    v: LaurentPoly

    @property
    def decrement(self) -> int:
        return self.u.breadth() - self.v.breadth()


@dataclass(frozen=True)
class DescentCertificate:
    depth: int
    premise: str
    steps: tuple[DescentStep, ...]
    chain: tuple[BreadthLink, ...]
    tight_edges: tuple[str, ...] = field(default=())

    def trace(self) -> str:
        lines = [f"premise: {self.premise}"]
        for s in self.steps:
            fam, m, n, q = s.relator
            src = f"Cbar({q},{n})S_{m}(a1)" if fam == "Cbar" else f"C({m},{n})S_{q}(a2)"
            flag = "  [tight edge]" if s.tight_edge else ""
            lines.append(f"[{s.lemma}] {src}: {s.constraint}  =>  {s.conclusion} ({s.kind}){flag}")
        for link in self.chain:
            lines.append(f"[breadth] n={link.n}: breadth(u)={link.u.breadth()} "
                         f"breadth(v)={link.v.breadth()} => breadth(alpha_n) = breadth(alpha_n-1) - {link.decrement}")
        return "\n".join(lines)


def _vanishing_form(m: int, p: int) -> tuple[AlphaConstraint, tuple[str, int, int, int], str]:
    """The constraint used to kill alpha[m,m,p] (p > m), exactly as stated."""
    if m == 0:
        return (_form((c(p + 2), (0, 0, p)), (-c(p - 2), (0, 0, p - 2))) if p >= 2
                else _form((c(p + 2), (0, 0, p))),
                ("Cbar", 0, 0, p), "00n")
    if m == 1:
        return (_form((c(4), (1, 1, p)), (c(2), (0, 0, p + 1)), (c(2), (0, 0, p - 1))),
                ("C", 1, 1, p), "11n")
    return (_form((c(2 * m + 2), (m, m, p)), (c(2 * m), (m - 1, m - 1, p + 1)),
                  (c(2 * m), (m - 1, m - 1, p - 1)), (c(2 * m - 2), (m - 2, m - 2, p))),
            ("C", m, m, p), "mmn")


def _recurrence_form(n: int) -> AlphaConstraint:
    return _form((c(2 * n + 2), (n, n, n)), (c(2 * n), (n - 1, n - 1, n + 1)),
                 (c(2 * n), (n - 1, n - 1, n - 1)), (c(2 * n - 2), (n - 2, n - 2, n)))


def _relator_from(spec: tuple[str, int, int, int]) -> Relator:
    fam, m, n, q = spec
    return relator_bar(q, n, m) if fam == "Cbar" else relator(m, n, q)


def _vanishing_targets(depth: int) -> list[AlphaIndex]:
    """Every alpha[m,m,p] with p > m and 2m + p <= 3*depth - 1, ordered by
    t = 2m + p (the induction variable), then m.

    This is the whole range of the vanishing lemmas up to the largest t the
    recurrences for n <= depth touch (alpha[depth-1, depth-1, depth+1]).
    alpha[0,0,1] and alpha[0,0,2] are always included as the base cases.
    """
    top = max(2, 3 * depth - 1)
    out = [(m, m, t - 2 * m) for t in range(1, top + 1)
           for m in range(0, t // 2 + 1) if t - 2 * m > m]
    return sorted(out, key=lambda a: (2 * a[0] + a[2], a[0]))


def lemma_mmn_bookkeeping(t: int) -> list[tuple[int, int, tuple[str, int, int, int]]]:
    """For the induction on t = 2m + n: each (m, n) with n > m >= 0 and the
    relator that settles alpha[m,m,n]. m = 0 is routed through Cbar(n,0)
    because C(0,0) S_n(a2) is the zero element."""
    out = []
    for m in range(0, t // 2 + 1):
        n = t - 2 * m
        if n > m:
            out.append((m, n, _vanishing_form(m, n)[1]))
    return out


def verify_descent(depth: int) -> DescentCertificate:
    """Check every step of the descent for alpha[n,n,n], 1 <= n <= depth."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    order = _vanishing_targets(depth)

    known_zero: set[AlphaIndex] = set()
    steps: list[DescentStep] = []
    tight: list[str] = []

    def check(form: AlphaConstraint, spec) -> AlphaConstraint:
        got = extract_constraint(_relator_from(spec))
        if got.terms != form.terms:
            raise DescentError(f"relator {spec} gives {got}, expected {form}")
        if not got.vanishes_at_pm1():
            raise DescentError(f"relator {spec} does not vanish at A = ±1")
        return got

    for a in order:
        m, _, p = a
        form, spec, lemma = _vanishing_form(m, p)
        got = check(form, spec)
        rest_terms = got.without(known_zero)
        if set(rest_terms.terms) != {a}:
            raise DescentError(f"alpha{list(a)}: unresolved terms {sorted(rest_terms.terms)}")
        mult = rest_terms.terms[a]
        if not mult:
            raise DescentError(f"alpha{list(a)}: cancelled factor is zero")
        # in the mmn step an alpha[1,1,.] neighbour with index exactly 2 sits on
        # the boundary of the 11n hypothesis
        edge = lemma == "mmn" and any(b[0] == 1 and b[2] == 2 for b in got.terms if b != a)
        edge = edge or (lemma == "11n" and p == 2)
        if edge:
            tight.append(f"{lemma} alpha{list(a)}")
        steps.append(DescentStep(lemma, spec, got, f"alpha{list(a)} = 0",
                                 DOMAIN_CANCELLATION, mult, a, edge))
        known_zero.add(a)

    chain = []
    for n in range(1, depth + 1):
        spec = ("C", n, n, n)
        got = check(_recurrence_form(n), spec)
        reduced = got.without(known_zero)
        u, v = c(2 * n + 2), c(2 * n)
        expect = _form((u, (n, n, n)), (v, (n - 1, n - 1, n - 1)))
        if reduced.terms != expect.terms:
            raise DescentError(f"recurrence n={n}: left with {reduced}, expected {expect}")
        if not u or not v:
            raise DescentError(f"recurrence n={n}: zero multiplier")
        link = BreadthLink(n, u, v)
        if link.decrement != 4:
            raise DescentError(f"recurrence n={n}: breadth gap {link.decrement} != 4")
        steps.append(DescentStep("nnn", spec, got, f"u_{n} alpha{[n] * 3} + v_{n} alpha{[n - 1] * 3} = 0",
                                 SUBSTITUTION, u, (n, n, n)))
        chain.append(link)

    return DescentCertificate(depth, "alpha[0,0,0] != 0 (the empty link is not torsion)",
                              tuple(steps), tuple(chain), tuple(tight))


# -- evaluation criterion -------------------------------------------------------

@dataclass(frozen=True)
class NonzeroWitness:
    monomial: Index
    a_value: int
    value: int


def certify_nonzero_mod_relations(e: SkeinElement, a_values: tuple[int, ...] = (1, -1)) -> NonzeroWitness | None:
    """A coefficient of ``e`` that is nonzero at A = 1 or A = -1 proves e is
    nonzero modulo the relators (they all vanish there). Monomials are
    scanned from the top; None means inconclusive."""
    e = e.in_basis(CHEBYSHEV)
    support = sorted(e.support(), key=order_key(), reverse=True)
    for x in a_values:
        for idx in support:
            v = e[idx].evaluate(x)
            if v:
                return NonzeroWitness(idx, x, v)
    return None
