"""Leading-term reduction against relator sets, and specialised rank tables.

Membership in the relator span over Z[A^±1] is only semi-decided: a zero
residue is a proof (the certificate re-expands exactly), a nonzero residue
says nothing.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .elements import CHEBYSHEV, Index, SkeinElement, grlex_key
from .laurent import LaurentPoly
from .relators import Leading, Relator, relator, relators_up_to_degree

OrderKey = Callable[[Index], tuple]

#: The single ordering shipped: graded lex with priority a1 > a3 > a2.
GRLEX_A1_A3_A2 = "grlex(a1>a3>a2)"
_ORDERS: dict[str, OrderKey] = {GRLEX_A1_A3_A2: grlex_key}


def order_key(ordering: str = GRLEX_A1_A3_A2) -> OrderKey:
    try:
        return _ORDERS[ordering]
    except KeyError:
        raise ValueError(f"unknown monomial ordering {ordering!r}") from None


def leading(r: Relator, ordering: str = GRLEX_A1_A3_A2) -> Leading:
    """Leading monomial of ``r`` under ``ordering``; raises on the zero relator."""
    if not r.element:
        raise ValueError(f"{r.label} is the zero element and has no leading term")
    if ordering == GRLEX_A1_A3_A2:
        return r.leading
    key = order_key(ordering)
    top = max(r.element.support(), key=key)
    return Leading(top, r.element[top], False)


class RelatorSet:
    """An ordered list of relators plus an index from leading monomial to
    relator id. Only nondegenerate relators are indexed; when two relators
    share a leading monomial the earlier one wins.
    """

    def __init__(self, relators: Iterable[Relator], ordering: str = GRLEX_A1_A3_A2):
        self.ordering = ordering
        self.relators: list[Relator] = list(relators)
        self.index: dict[Index, int] = {}
        for rid, r in enumerate(self.relators):
            if not r.element:
                continue
            lead = leading(r, ordering)
            if lead.degenerate or lead.index in self.index:
                continue
            self.index[lead.index] = rid

    def __len__(self) -> int:
        return len(self.relators)

    def __getitem__(self, rid: int) -> Relator:
        return self.relators[rid]

    def indexed(self) -> list[int]:
        return sorted(self.index.values())

    @classmethod
    def up_to_degree(cls, degree: int) -> RelatorSet:
        """All nonzero relators of both families with support in degree <= ``degree``."""
        return cls(relators_up_to_degree(degree))

    @classmethod
    def a1_line(cls, top: int) -> RelatorSet:
        """{C(k,0) : 1 <= k <= top}; C(k,0) leads at S_k(a1)."""
        return cls(relator(k, 0, 0) for k in range(1, top + 1))


@dataclass(frozen=True)
class ReductionStep:
    relator_id: int
    multiplier: LaurentPoly
    monomial: Index


@dataclass(frozen=True)
class ReductionCertificate:
    """``input == residue + sum(step.multiplier * relator[step.relator_id])``."""
    steps: tuple[ReductionStep, ...]
    residue: SkeinElement
    relators: tuple[Relator, ...] = field(repr=False)

    @property
    def is_member(self) -> bool:
        return self.residue.is_zero()

    def combination(self) -> SkeinElement:
        total = SkeinElement.zero()
        for st in self.steps:
            total = total + self.relators[st.relator_id].element.scale(st.multiplier)
        return total

    def verify(self, e: SkeinElement) -> bool:
        """Exact re-expansion check against the original input."""
        return e.in_basis(CHEBYSHEV) == self.residue + self.combination()


def reduce(e: SkeinElement, rs: RelatorSet, stop_at_first_failure: bool = False) -> ReductionCertificate:
    """Top-down reduction of ``e`` by the indexed relators of ``rs``.

    Monomials are visited from the largest down. A monomial is eliminated when
    it is an indexed leading monomial and its coefficient is an exact multiple
    of the relator's leading coefficient; otherwise it stays in the residue and
    (by default) the sweep moves on to the next smaller monomial. Elimination
    only introduces smaller monomials, so the sweep terminates.
    """
    key = order_key(rs.ordering)
    work = dict(e.in_basis(CHEBYSHEV).items())
    heap = [_neg(key(idx)) + (idx,) for idx in work]
    heapq.heapify(heap)
    queued = set(work)
    residue: dict[Index, LaurentPoly] = {}
    steps: list[ReductionStep] = []
    while heap:
        idx = heapq.heappop(heap)[-1]
        queued.discard(idx)
        c = work.pop(idx, None)
        if not c:
            continue
        rid = rs.index.get(idx)
        mult = None
        if rid is not None:
            r = rs.relators[rid]
            mult = c.divide_exact(r.element[idx])
        if mult is None:
            residue[idx] = c
            if stop_at_first_failure:
                residue.update({k: v for k, v in work.items() if v})
                break
            continue
        steps.append(ReductionStep(rid, mult, idx))
        for jdx, d in r.element.items():
            if jdx == idx:
                continue
            v = work.get(jdx)
            v = -(mult * d) if v is None else v - mult * d
            if v:
                work[jdx] = v
                if jdx not in queued:
                    queued.add(jdx)
                    heapq.heappush(heap, _neg(key(jdx)) + (jdx,))
            else:
                work.pop(jdx, None)
    return ReductionCertificate(tuple(steps), SkeinElement(residue), tuple(rs.relators))


def _neg(t: tuple) -> tuple:
    return tuple(-x for x in t)


def reduce_a1_line(e: SkeinElement) -> ReductionCertificate:
    """Triangular reduction of an element supported on the S_k(a1) axis by
    the C(k,0) relators, k descending. Stops at the first inexact division."""
    e = e.in_basis(CHEBYSHEV)
    off = [idx for idx in e.support() if idx[1] or idx[2]]
    if off:
        raise ValueError(f"element is not supported on the a1 axis: {off[:3]}")
    top = max((idx[0] for idx in e.support()), default=0)
    return reduce(e, RelatorSet.a1_line(top), stop_at_first_failure=True)


# -- rank of specialised relator matrices ---------------------------------------

@dataclass(frozen=True)
class RankRow:
    degree: int
    relators: int
    rank: int


def _check_value(a_value, prime: int | None):
    if prime is not None:
        if prime < 2 or any(prime % d == 0 for d in range(2, math.isqrt(prime) + 1)):
            raise ValueError(f"{prime} is not prime")
        if int(a_value) % prime == 0:
            raise ValueError("A must be nonzero in the field")
        return int(a_value)
    a_value = Fraction(a_value)
    if a_value == 0:
        raise ValueError("A must be nonzero")
    return a_value


def relator_row(r: Relator, a_value, prime: int | None = None) -> dict[Index, int]:
    """Coefficients of ``r`` at A = a_value; over Q the row is cleared to a
    primitive integer vector (same row space)."""
    vals = r.element.evaluate(a_value, prime)
    if prime is not None:
        return vals
    den = 1
    for v in vals.values():
        den = math.lcm(den, Fraction(v).denominator)
    row = {idx: int(Fraction(v) * den) for idx, v in vals.items()}
    return _primitive(row)


def _primitive(row: dict[Index, int]) -> dict[Index, int]:
    g = 0
    for v in row.values():
        g = math.gcd(g, v)
    if g > 1:
        row = {k: v // g for k, v in row.items()}
    return row


class _Echelon:
    """Incremental row echelon form with a fixed pivot rule: a row's pivot is
    its largest column under the monomial order. Integer rows use
    fraction-free elimination with content removal; prime-field rows are
    normalised to a unit pivot."""

    def __init__(self, key: OrderKey, prime: int | None):
        self.key = key
        self.prime = prime
        self.pivots: dict[Index, dict[Index, int]] = {}

    def insert(self, row: dict[Index, int]) -> bool:
        p = self.prime
        row = {k: v for k, v in row.items() if v}
        while row:
            col = max(row, key=self.key)
            piv = self.pivots.get(col)
            if piv is None:
                if p is not None:
                    inv = pow(row[col], -1, p)
                    row = {k: v * inv % p for k, v in row.items()}
                self.pivots[col] = row
                return True
            a, b = piv[col], row[col]
            if p is not None:
                new = dict(row)
                for k, v in piv.items():
                    new[k] = (new.get(k, 0) - b * v) % p
            else:
                new = {k: v * a for k, v in row.items()}
                for k, v in piv.items():
                    new[k] = new.get(k, 0) - b * v
            row = {k: v for k, v in new.items() if v}
            if p is None:
                row = _primitive(row)
        return False

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank_table(a_value, degree: int, prime: int | None = None,
               ordering: str = GRLEX_A1_A3_A2) -> list[RankRow]:
    """Ranks of the relator matrices truncated at total degree D' = 0..degree.

    Row set for D' is every nonzero relator (both families) whose support
    lies in degree <= D', specialised at A = ``a_value`` over Q, or over
    GF(prime) when ``prime`` is given.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    a_value = _check_value(a_value, prime)
    rels = sorted(relators_up_to_degree(degree), key=lambda r: r.element.max_degree())
    ech = _Echelon(order_key(ordering), prime)
    out = []
    pos = 0
    for d in range(degree + 1):
        while pos < len(rels) and rels[pos].element.max_degree() <= d:
            ech.insert(relator_row(rels[pos], a_value, prime))
            pos += 1
        out.append(RankRow(d, pos, ech.rank))
    return out


def rank_table_csv(rows: Sequence[RankRow]) -> str:
    lines = ["D,relators,rank"]
    lines += [f"{r.degree},{r.relators},{r.rank}" for r in rows]
    return "\n".join(lines) + "\n"


def parse_rank_csv(text: str) -> list[RankRow]:
    lines = [ln.strip() for ln in text.strip().splitlines()]
    if not lines or lines[0] != "D,relators,rank":
        raise ValueError("rank CSV must start with the header D,relators,rank")
    return [RankRow(*map(int, ln.split(","))) for ln in lines[1:] if ln]


@dataclass(frozen=True)
class UnindexedReport:
    relator_id: int
    label: str
    degenerate: bool
    reduces_to_zero: bool


def audit_unindexed(rs: RelatorSet) -> list[UnindexedReport]:
    """Reduce every relator that is not in the index (degenerate lead, or a
    lead already taken) against the indexed ones. Reports only; a nonzero
    residue is inconclusive over Z[A^±1]."""
    indexed = set(rs.index.values())
    out = []
    for rid, r in enumerate(rs.relators):
        if rid in indexed or not r.element:
            continue
        cert = reduce(r.element, rs)
        out.append(UnindexedReport(rid, r.label, r.leading.degenerate, cert.is_member))
    return out
