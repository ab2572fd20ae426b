"""Handle-sliding relators C(m,n) S_q(a2) and Cbar(q,n) S_m(a1).

Two independent constructions live here:

* the four-term closed form, evaluated with extended-index Chebyshev
  polynomials (``c_closed``, ``cbar_closed``, ``relator``, ``relator_bar``);
* the kink-removal route ``C = -A^3 P + A^-3 N`` (and ``C = P - N`` for
  negative n), where P, Q, PP, N, NN are built strictly from their
  defining recurrences (``c_via_recurrence``).

The sequences N and NN are generated from their own mirrored recurrences
rather than by mirroring P and PP, so ``N == mirror(P)`` is a real check.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .elements import (CHEBYSHEV, Index, SkeinElement, cheb_elem, chebyshev_term,
                       grlex_key)
from .laurent import ZERO, LaurentPoly, quantum_minus

FAMILY_C = "C"
FAMILY_CBAR = "Cbar"

#: Forms of the P(m,-1) rule (m >= 2). Only "chained" reproduces the closed
#: form; the other two are kept so the discrepancy can be reported.
LEMMA_B_VARIANTS = ("chained", "shifted", "figure")
CANONICAL_LEMMA_B = "chained"


class OutOfRange(ValueError):
    """Sequence requested outside the range its recurrence defines."""


def _a(k: int) -> LaurentPoly:
    return LaurentPoly.mono(k)


class SequenceCache:
    """Memo tables for the appendix sequences P, Q, PP (orientation +1) and
    N, NN (orientation -1, i.e. every power of A inverted).

    ``lemma_b`` selects the P(m,-1)/Q(m,-1) rule; see ``LEMMA_B_VARIANTS``.
    Entries are only ever produced by the recurrences, never patched in.
    """

    def __init__(self, lemma_b: str = CANONICAL_LEMMA_B):
        if lemma_b not in LEMMA_B_VARIANTS:
            raise ValueError(f"unknown Lemma B variant {lemma_b!r}")
        self.lemma_b = lemma_b
        self._tables: dict[tuple[str, int], dict[tuple[int, int], SkeinElement]] = {}

    def _table(self, name: str, s: int) -> dict[tuple[int, int], SkeinElement]:
        return self._tables.setdefault((name, s), {})

    def clear(self) -> None:
        self._tables.clear()

    def sizes(self) -> dict[str, int]:
        return {f"{name}{'+' if s > 0 else '-'}": len(t) for (name, s), t in self._tables.items()}

    # P and Q share every recurrence and differ only in initial values.

    def kink_seq(self, name: str, s: int, m: int, n: int) -> SkeinElement:
        """P (name="P") or Q (name="Q") with orientation s (+1, or -1 for the mirror)."""
        if n >= 0 and m < 0 or n < 0 and m < 1:
            raise OutOfRange(f"{name}({m},{n}) is not defined by the recurrences")
        table = self._table(name, s)
        key = (m, n)
        hit = table.get(key)
        if hit is not None:
            return hit
        # fill the column iteratively so deep recurrences do not recurse
        if n >= 0:
            for mm in range(0, m + 1):
                for nn in range(0, n + 1):
                    if (mm, nn) not in table:
                        table[(mm, nn)] = self._kink_step(name, s, mm, nn)
        else:
            for mm in range(0, m + 1):
                for nn in range(0, 2):
                    if (mm, nn) not in table:
                        table[(mm, nn)] = self._kink_step(name, s, mm, nn)
            for mm in range(1, m + 1):
                for k in range(1, -n + 1):
                    if (mm, -k) not in table:
                        table[(mm, -k)] = self._kink_step(name, s, mm, -k)
        return table[key]

    def _kink_step(self, name: str, s: int, m: int, n: int) -> SkeinElement:
        X = lambda k: _a(s * k)  # noqa: E731
        get = self._table(name, s).__getitem__
        if n >= 0:
            init = _kink_initial(name, s, m, n)
            if init is not None:
                return init
            if n == 0:
                return get((m - 1, 0)).times_variable("a1").scale(X(1)) - get((m - 2, 0)).scale(X(2))
            if n == 1:
                return (get((m, 0)).times_variable("a3").scale(X(1))
                        + get((m - 1, 0)).times_variable("a2")
                        + get((m - 2, 1)).scale(X(-2)))
            return get((m, n - 1)).times_variable("a3").scale(X(1)) - get((m, n - 2)).scale(X(2))
        k = -n
        if k == 1:
            if m == 1:
                a2 = cheb_elem(0, 1, 0)
                return a2 if name == "P" else -a2
            if self.lemma_b == "chained":
                return get((m, 1)).scale(X(1)) - get((m, 0)).times_variable("a3").scale(X(2))
            if self.lemma_b == "shifted":
                return get((m - 1, 0)).times_variable("a2").scale(X(1)) + get((m - 1, 1)).scale(X(-1))
            return get((m, 0)).times_variable("a2").scale(X(1)) + get((m, 1)).scale(X(-1))
        if k == 2:
            return get((m, 0)).scale(X(1)) + get((m, -1)).times_variable("a3").scale(X(-1))
        return get((m, n + 1)).times_variable("a3").scale(X(-1)) - get((m, n + 2)).scale(X(-2))

    def pp(self, s: int, m: int, n: int) -> SkeinElement:
        """PP (s=+1) or NN (s=-1) from their own recurrences.

        For negative n the recurrence is run for every m >= 0; at m = 0 and
        m = 1 the general P(m,-1) rule reproduces the stated base values.
        """
        if m < 0:
            raise OutOfRange(f"PP({m},{n}) is not defined by the recurrences")
        table = self._table("PP", s)
        key = (m, n)
        hit = table.get(key)
        if hit is not None:
            return hit
        top_n = max(n, 1)
        for mm in range(0, m + 1):
            for nn in range(0, top_n + 1):
                if (mm, nn) not in table:
                    table[(mm, nn)] = self._pp_step(s, mm, nn)
        for mm in range(0, m + 1):
            for k in range(1, -n + 1):
                if (mm, -k) not in table:
                    table[(mm, -k)] = self._pp_step(s, mm, -k)
        return table[key]

    def _pp_step(self, s: int, m: int, n: int) -> SkeinElement:
        X = lambda k: _a(s * k)  # noqa: E731
        get = self._table("PP", s).__getitem__
        if n >= 0:
            if (m, n) == (0, 0):
                return SkeinElement.empty_link()
            if (m, n) == (1, 0):
                return cheb_elem(1, 0, 0)
            if (m, n) == (0, 1):
                return cheb_elem(0, 0, 1)
            if (m, n) == (1, 1):
                return cheb_elem(1, 0, 0).times_variable("a3")
            if n == 0:
                return get((m - 1, 0)).times_variable("a1") - get((m - 2, 0))
            if n == 1:
                return (get((m, 0)).times_variable("a3")
                        + get((m - 1, 0)).times_variable("a2").scale(X(-2))
                        + get((m - 2, 1)).scale(X(-4)))
            return get((m, n - 1)).times_variable("a3") - get((m, n - 2))
        k = -n
        if k == 1:
            return get((m, 1)).scale(X(3)) - get((m, 0)).times_variable("a3").scale(X(3))
        if k == 2:
            return get((m, -1)).times_variable("a3") + get((m, 0)).scale(X(3))
        return get((m, n + 1)).times_variable("a3") - get((m, n + 2))


def _kink_initial(name: str, s: int, m: int, n: int) -> SkeinElement | None:
    X = lambda k: _a(s * k)  # noqa: E731
    if name == "P":
        if (m, n) == (0, 0):
            return SkeinElement.empty_link().scale(X(-1) + X(-5))
        if (m, n) == (1, 0):
            return cheb_elem(1, 0, 0)
        if (m, n) == (0, 1):
            return cheb_elem(0, 0, 1)
        if (m, n) == (1, 1):
            return cheb_elem(1, 0, 1, X(1)) + cheb_elem(0, 1, 0, X(-1))
        return None
    if (m, n) == (0, 0):
        return SkeinElement.empty_link().scale(-X(-5))
    if (m, n) in ((1, 0), (0, 1)):
        return SkeinElement.zero()
    if (m, n) == (1, 1):
        return cheb_elem(0, 1, 0, -X(-1))
    return None


_default_cache = SequenceCache()


def default_cache() -> SequenceCache:
    return _default_cache


def p_seq(m: int, n: int, cache: SequenceCache | None = None) -> SkeinElement:
    return (cache or _default_cache).kink_seq("P", 1, m, n)


def n_seq(m: int, n: int, cache: SequenceCache | None = None) -> SkeinElement:
    return (cache or _default_cache).kink_seq("P", -1, m, n)


def q_seq(m: int, n: int, cache: SequenceCache | None = None) -> SkeinElement:
    return (cache or _default_cache).kink_seq("Q", 1, m, n)


def pp_seq(m: int, n: int, cache: SequenceCache | None = None) -> SkeinElement:
    return (cache or _default_cache).pp(1, m, n)


def nn_seq(m: int, n: int, cache: SequenceCache | None = None) -> SkeinElement:
    return (cache or _default_cache).pp(-1, m, n)


# -- closed forms -------------------------------------------------------------

def _four_terms(family: str, m: int, n: int, q: int) -> list[tuple[LaurentPoly, tuple[int, int, int]]]:
    """Coefficients and raw (possibly negative) index triples (a1, a2, a3)."""
    if family == FAMILY_C:
        return [
            (quantum_minus(m + n + 2), (m, q, n)),
            (quantum_minus(m + n), (m - 1, q + 1, n - 1)),
            (quantum_minus(m + n), (m - 1, q - 1, n - 1)),
            (quantum_minus(m + n - 2), (m - 2, q, n - 2)),
        ]
    # Cbar(q,n) S_m(a1): the roles of a1 and a2 are exchanged
    return [
        (quantum_minus(q + n + 2), (m, q, n)),
        (quantum_minus(q + n), (m + 1, q - 1, n - 1)),
        (quantum_minus(q + n), (m - 1, q - 1, n - 1)),
        (quantum_minus(q + n - 2), (m, q - 2, n - 2)),
    ]


def _expand(terms) -> SkeinElement:
    out = SkeinElement.zero()
    for coeff, (i, j, k) in terms:
        if coeff:
            out = out + cheb_elem(i, j, k, coeff)
    return out


def c_closed(m: int, n: int) -> SkeinElement:
    """C(m,n) from the unified four-term formula, for any (m, n)."""
    return _expand(_four_terms(FAMILY_C, m, n, 0))


def cbar_closed(q: int, n: int) -> SkeinElement:
    """Cbar(q,n) from the unified four-term formula, for any (q, n)."""
    return _expand(_four_terms(FAMILY_CBAR, 0, n, q))


def c_via_recurrence(m: int, n: int, cache: SequenceCache | None = None) -> SkeinElement:
    """C(m,n) assembled from the P/N sequences.

    m, n >= 0:      -A^3 P(m,n) + A^-3 N(m,n)
    m >= 1, n < 0:  P(m,n) - N(m,n)
    otherwise:      C(m,n) = -C(-m,-n)
    """
    if m >= 0 and n >= 0:
        return p_seq(m, n, cache).scale(_a(3) * -1) + n_seq(m, n, cache).scale(_a(-3))
    if m >= 1 and n < 0:
        return p_seq(m, n, cache) - n_seq(m, n, cache)
    return -c_via_recurrence(-m, -n, cache)


def lemma_b_diagnostic(max_m: int = 6, max_n: int = 6) -> dict[str, list[tuple[int, int]]]:
    """For each P(m,-1) variant, the (m, -n) where C(m,-n) from P - N
    disagrees with the closed form. An empty list marks a consistent variant.
    """
    report = {}
    for variant in LEMMA_B_VARIANTS:
        cache = SequenceCache(lemma_b=variant)
        bad = []
        for m in range(1, max_m + 1):
            for k in range(1, max_n + 1):
                if c_via_recurrence(m, -k, cache) != c_closed(m, -k):
                    bad.append((m, -k))
        report[variant] = bad
    return report


# -- relators -----------------------------------------------------------------

@dataclass(frozen=True)
class Leading:
    """Leading monomial data of a relator.

    ``index``/``coeff`` are the maximal monomial of the element and its
    coefficient (None for the zero element). ``degenerate`` is set when the
    top term of the four-term formula cancelled, so the element does not
    lead where the formula says it should.
    """
    index: Index | None
    coeff: LaurentPoly | None
    degenerate: bool


@dataclass(frozen=True)
class Relator:
    family: str
    m: int
    n: int
    q: int
    element: SkeinElement = field(compare=False, repr=False)
    leading: Leading = field(compare=False, repr=False)

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.m, self.n, self.q)

    @property
    def label(self) -> str:
        if self.family == FAMILY_C:
            return f"C({self.m},{self.n})S_{self.q}(a2)"
        return f"Cbar({self.q},{self.n})S_{self.m}(a1)"


def _leading(family: str, m: int, n: int, q: int, element: SkeinElement,
             key: Callable[[Index], tuple] = grlex_key) -> Leading:
    candidates = []
    for coeff, raw in _four_terms(family, m, n, q):
        t = chebyshev_term(*raw)
        if t is not None:
            candidates.append(t[1])
    actual = max(element.support(), key=key, default=None)
    if actual is None:
        return Leading(None, None, True)
    formula_top = max(candidates, key=key)
    return Leading(actual, element[actual], actual != formula_top)


def relator(m: int, n: int, q: int) -> Relator:
    """C(m,n) S_q(a2), expanded term by term (no multiplication)."""
    if m < 0 or q < 0:
        raise ValueError(f"relator needs m, q >= 0 (got m={m}, q={q})")
    element = _expand(_four_terms(FAMILY_C, m, n, q))
    return Relator(FAMILY_C, m, n, q, element, _leading(FAMILY_C, m, n, q, element))


def relator_bar(q: int, n: int, m: int) -> Relator:
    """Cbar(q,n) S_m(a1), expanded term by term."""
    if m < 0 or q < 0:
        raise ValueError(f"relator_bar needs q, m >= 0 (got q={q}, m={m})")
    element = _expand(_four_terms(FAMILY_CBAR, m, n, q))
    return Relator(FAMILY_CBAR, m, n, q, element, _leading(FAMILY_CBAR, m, n, q, element))


def make_relator(family: str, m: int, n: int, q: int) -> Relator:
    if family == FAMILY_C:
        return relator(m, n, q)
    if family == FAMILY_CBAR:
        return relator_bar(q, n, m)
    raise ValueError(f"unknown relator family {family!r}")


def relators_up_to_degree(degree: int) -> list[Relator]:
    """Every nonzero relator of both families whose support has total degree
    at most ``degree``, in a fixed order (family, then m, n, q).

    A nonzero relator always has a support monomial of degree at least
    m + q + |n| - 2, which bounds the search.
    """
    out = []
    span = degree + 2
    for family in (FAMILY_C, FAMILY_CBAR):
        for m in range(0, span + 1):
            for q in range(0, span + 1 - m):
                for n in range(-(span - m - q), span - m - q + 1):
                    r = make_relator(family, m, n, q)
                    if r.element and r.element.max_degree() <= degree:
                        out.append(r)
    return out
