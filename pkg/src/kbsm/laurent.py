"""Integer Laurent polynomials in one variable ``A``.

Values are immutable and always kept in canonical form: no stored
coefficient is zero, so structural equality is ring equality.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPoly:
    """An element of Z[A, A^-1], stored as a map exponent -> coefficient.

    >>> A = LaurentPoly.mono(1)
    >>> (A - A**-1) * (A + A**-1)
    LaurentPoly('A^2 - A^-2')
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            c = acc.get(e, 0) + c
            if c:
                acc[e] = c
            else:
                acc.pop(e, None)
        self._terms = acc
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> LaurentPoly:
        # trusted constructor: caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def mono(cls, exp: int = 1, coeff: int = 1) -> LaurentPoly:
        """The monomial ``coeff * A**exp``."""
        return cls._raw({exp: coeff} if coeff else {})

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls.mono(0, c)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        """A copy of the canonical term map."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_unit(self) -> bool:
        """Units of Z[A^±1] are exactly ``±A^k``."""
        return len(self._terms) == 1 and next(iter(self._terms.values())) in (1, -1)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return max(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("valuation of the zero polynomial")
        return min(self._terms)

    def breadth(self) -> int:
        """Highest exponent minus lowest exponent."""
        if not self._terms:
            raise ValueError("breadth undefined for the zero polynomial")
        return max(self._terms) - min(self._terms)

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            c += acc.get(e, 0)
            if c:
                acc[e] = c
            else:
                del acc[e]
        return LaurentPoly._raw(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return _coerce(other) - self

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPoly._raw({e + eb: c * cb for e, c in a.items()})
        if len(a) == 1:
            (ea, ca), = a.items()
            return LaurentPoly._raw({e + ea: c * ca for e, c in b.items()})
        acc: dict[int, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                acc[e] = acc.get(e, 0) + ca * cb
        return LaurentPoly._raw({e: c for e, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if not self.is_unit():
                raise ValueError("only units have negative powers")
            (e, c), = self._terms.items()
            return LaurentPoly._raw({e * k: c ** (-k)})
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``A**k``."""
        if k == 0:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def mirror(self) -> LaurentPoly:
        """The involution ``A -> A^-1``."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def evaluate(self, x, modulus: int | None = None):
        """Substitute a nonzero field value for ``A``.

        ``x`` may be an int or Fraction (evaluated over Q) or, with
        ``modulus`` set to a prime p, an int read in GF(p).
        """
        if modulus is not None:
            x %= modulus
            if x == 0:
                raise ZeroDivisionError("A specialised to 0")
            return sum(c * pow(x, e, modulus) for e, c in self._terms.items()) % modulus
        if x == 0:
            raise ZeroDivisionError("A specialised to 0")
        if x in (1, -1):
            # stays integral and avoids Fraction overhead on the hot path
            if x == 1:
                return sum(self._terms.values())
            return sum(c if e % 2 == 0 else -c for e, c in self._terms.items())
        x = Fraction(x)
        total = sum(c * x**e for e, c in self._terms.items())
        return total.numerator if total.denominator == 1 else total

    def divide_exact(self, other: LaurentPoly) -> LaurentPoly | None:
        """Return ``q`` with ``self == q * other`` or None when no such q exists.

        Long division from the top exponent; stops as soon as a quotient
        coefficient is non-integral or the quotient would have to leave the
        exponent window ``[val(self) - val(other), deg(self) - deg(other)]``.
        """
        if not other._terms:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self._terms:
            return ZERO
        db, vb = max(other._terms), min(other._terms)
        lead_b = other._terms[db]
        if other.is_unit():
            (e, c), = other._terms.items()
            return LaurentPoly._raw({k - e: v * c for k, v in self._terms.items()})
        lo = min(self._terms) - vb
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            shift = top - db
            if shift < lo:
                return None
            q, r = divmod(rem[top], lead_b)
            if r:
                return None
            quot[shift] = q
            for e, c in other._terms.items():
                k = e + shift
                v = rem.get(k, 0) - q * c
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly._raw(quot)

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            t = self._terms
            if not t or (len(t) == 1 and 0 in t):
                # consistent with equality against plain ints
                self._hash = hash(t.get(0, 0))
            else:
                self._hash = hash(frozenset(t.items()))
        return self._hash

    # -- serialisation ------------------------------------------------------

    def to_pairs(self) -> list[list[int]]:
        """Sorted ``[exponent, coefficient]`` pairs (exponents ascending)."""
        return [[e, self._terms[e]] for e in sorted(self._terms)]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> LaurentPoly:
        out = []
        for pair in pairs:
            e, c = pair
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError(f"non-integer Laurent term {pair!r}")
            out.append((e, c))
        return cls(out)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "A" if e == 1 else f"A^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
A = LaurentPoly._raw({1: 1})


def quantum_minus(k: int) -> LaurentPoly:
    """``-A^k + A^-k``, the coefficient shape shared by every relator term."""
    if k == 0:
        return ZERO
    return LaurentPoly._raw({k: -1, -k: 1})


def geo(k: int) -> LaurentPoly:
    """Balanced geometric sum with ``(-A + A^-1) * geo(k) == -A^k + A^-k``.

    For k >= 1 this is ``sum(A^(-k+1+2i) for i in range(k))``; geo(0) = 0 and
    geo(-k) = -geo(k).
    """
    if k == 0:
        return ZERO
    if k < 0:
        return -geo(-k)
    return LaurentPoly._raw({-k + 1 + 2 * i: 1 for i in range(k)})


# Plain-function spellings of the ring operations.

def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def lp_mirror(p: LaurentPoly) -> LaurentPoly:
    return p.mirror()


def lp_breadth(p: LaurentPoly) -> int:
    return p.breadth()


def lp_eval(p: LaurentPoly, x, modulus: int | None = None):
    return p.evaluate(x, modulus)


def lp_divide_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly | None:
    return a.divide_exact(b)
