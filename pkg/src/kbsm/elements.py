"""Elements of the skein algebra of the thickened pair of pants.

The algebra is the commutative polynomial ring Z[A^±1][a1, a2, a3]. An
element is a finite map from index triples ``(i, j, k)`` to Laurent
coefficients, read either in the monomial basis ``a1^i a2^j a3^k`` or in
the Chebyshev basis ``S_i(a1) S_j(a2) S_k(a3)``. The Chebyshev basis is the
working basis everywhere else in the package.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .laurent import ONE, ZERO, LaurentPoly

Index = tuple[int, int, int]

MONOMIAL = "monomial"
CHEBYSHEV = "chebyshev"
_BASES = (MONOMIAL, CHEBYSHEV)

#: variable name -> position in the index triple
VARIABLES = {"a1": 0, "a2": 1, "a3": 2}


# -- one-variable Chebyshev polynomials ------------------------------------

@lru_cache(maxsize=None)
def chebyshev(n: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of S_n(x), for any integer n.

    Uses S_0 = 1, S_1 = x, S_{q+1} = x S_q - S_{q-1}; run backwards this gives
    S_-1 = 0, S_-2 = -1 and in general S_n = -S_{-n-2}.

    >>> chebyshev(2)
    (-1, 0, 1)
    >>> chebyshev(-3)
    (0, -1)
    """
    if n == -1:
        return ()
    if n < -1:
        return tuple(-c for c in chebyshev(-n - 2))
    if n == 0:
        return (1,)
    if n == 1:
        return (0, 1)
    prev, cur = chebyshev(n - 2), chebyshev(n - 1)
    out = [0] * (n + 1)
    for d, c in enumerate(cur):
        out[d + 1] += c
    for d, c in enumerate(prev):
        out[d] -= c
    return tuple(out)


def normalize_index(n: int) -> tuple[int, int] | None:
    """Write S_n as ``sign * S_idx`` with idx >= 0; None when S_n = 0."""
    if n >= 0:
        return 1, n
    if n == -1:
        return None
    return -1, -n - 2


@lru_cache(maxsize=None)
def _power_in_chebyshev(n: int) -> tuple[tuple[int, int], ...]:
    """x^n as a combination of S_k, as (k, coefficient) pairs."""
    if n == 0:
        return ((0, 1),)
    acc: dict[int, int] = {}
    for k, c in _power_in_chebyshev(n - 1):
        # x S_k = S_{k+1} + S_{k-1}, and S_-1 = 0
        acc[k + 1] = acc.get(k + 1, 0) + c
        if k >= 1:
            acc[k - 1] = acc.get(k - 1, 0) + c
    return tuple(sorted((k, c) for k, c in acc.items() if c))


@lru_cache(maxsize=None)
def _chebyshev_product(p: int, q: int) -> tuple[int, ...]:
    """Indices r with S_p S_q = sum of S_r (product-to-sum, p, q >= 0)."""
    lo = abs(p - q)
    return tuple(lo + 2 * t for t in range(min(p, q) + 1))


# -- elements ---------------------------------------------------------------

class SkeinElement:
    """A finite Z[A^±1]-combination of basis triples.

    Instances are immutable; arithmetic returns new elements. Mixing bases
    in a binary operation converts the right operand to the left operand's
    basis.
    """

    __slots__ = ("basis", "_terms")

    def __init__(self, terms: Mapping[Index, LaurentPoly] | Iterable[tuple[Index, LaurentPoly]] = (),
                 basis: str = CHEBYSHEV):
        if basis not in _BASES:
            raise ValueError(f"unknown basis {basis!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Index, LaurentPoly] = {}
        for idx, c in items:
            idx = tuple(idx)
            if len(idx) != 3 or any((not isinstance(v, int)) or v < 0 for v in idx):
                raise ValueError(f"basis index must be a triple of nonnegative ints, got {idx!r}")
            if isinstance(c, int):
                c = LaurentPoly.const(c)
            _accumulate(acc, idx, c)
        self.basis = basis
        self._terms = acc

    @classmethod
    def _raw(cls, terms: dict[Index, LaurentPoly], basis: str) -> SkeinElement:
        obj = cls.__new__(cls)
        obj.basis = basis
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, basis: str = CHEBYSHEV) -> SkeinElement:
        return cls._raw({}, basis)

    @classmethod
    def empty_link(cls, basis: str = CHEBYSHEV) -> SkeinElement:
        """The multiplicative identity, triple (0, 0, 0)."""
        return cls._raw({(0, 0, 0): ONE}, basis)

    @classmethod
    def basis_element(cls, idx: Index, coeff: LaurentPoly | int = ONE,
                      basis: str = CHEBYSHEV) -> SkeinElement:
        return cls({tuple(idx): coeff}, basis)

    # -- inspection --------------------------------------------------------

    def __iter__(self) -> Iterator[Index]:
        return iter(sorted(self._terms))

    def items(self) -> list[tuple[Index, LaurentPoly]]:
        """Terms sorted by index."""
        return [(idx, self._terms[idx]) for idx in sorted(self._terms)]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __getitem__(self, idx: Index) -> LaurentPoly:
        return self._terms.get(tuple(idx), ZERO)

    def support(self) -> list[Index]:
        return sorted(self._terms)

    def max_degree(self) -> int:
        """Largest total degree i+j+k in the support (-1 for zero)."""
        return max((sum(idx) for idx in self._terms), default=-1)

    # -- arithmetic --------------------------------------------------------

    def _aligned(self, other: SkeinElement) -> dict[Index, LaurentPoly]:
        if not isinstance(other, SkeinElement):
            raise TypeError(f"expected SkeinElement, got {type(other).__name__}")
        if other.basis != self.basis:
            other = other.in_basis(self.basis)
        return other._terms

    def __add__(self, other: SkeinElement) -> SkeinElement:
        theirs = self._aligned(other)
        acc = dict(self._terms)
        for idx, c in theirs.items():
            _accumulate(acc, idx, c)
        return SkeinElement._raw(acc, self.basis)

    def __neg__(self) -> SkeinElement:
        return SkeinElement._raw({idx: -c for idx, c in self._terms.items()}, self.basis)

    def __sub__(self, other: SkeinElement) -> SkeinElement:
        return self + (-other)

    def scale(self, f: LaurentPoly | int) -> SkeinElement:
        """Multiply every coefficient by the ring element ``f``."""
        if isinstance(f, int):
            f = LaurentPoly.const(f)
        if not f:
            return SkeinElement._raw({}, self.basis)
        return SkeinElement._raw({idx: f * c for idx, c in self._terms.items()}, self.basis)

    def __rmul__(self, f):
        if isinstance(f, (LaurentPoly, int)):
            return self.scale(f)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return self.scale(other)
        return elem_mul(self, other)

    def times_variable(self, var: str | int) -> SkeinElement:
        """Multiply by one generator a1, a2 or a3 (cheap in either basis)."""
        pos = VARIABLES[var] if isinstance(var, str) else var
        acc: dict[Index, LaurentPoly] = {}
        for idx, c in self._terms.items():
            up = list(idx)
            up[pos] += 1
            _accumulate(acc, tuple(up), c)
            if self.basis == CHEBYSHEV and idx[pos] >= 1:
                down = list(idx)
                down[pos] -= 1
                _accumulate(acc, tuple(down), c)
        return SkeinElement._raw(acc, self.basis)

    def mirror(self) -> SkeinElement:
        """Apply A -> A^-1 to every coefficient."""
        return SkeinElement._raw({idx: c.mirror() for idx, c in self._terms.items()}, self.basis)

    def evaluate(self, x, modulus: int | None = None) -> dict[Index, object]:
        """Coefficientwise specialisation of A; zero entries are dropped."""
        if modulus is None and x == 0:
            raise ZeroDivisionError("A specialised to 0")
        out = {}
        for idx in sorted(self._terms):
            v = self._terms[idx].evaluate(x, modulus)
            if v:
                out[idx] = v
        return out

    # -- bases -------------------------------------------------------------

    def in_basis(self, basis: str) -> SkeinElement:
        if basis == self.basis:
            return self
        if basis == CHEBYSHEV:
            return to_chebyshev(self)
        if basis == MONOMIAL:
            return to_monomial(self)
        raise ValueError(f"unknown basis {basis!r}")

    # -- comparison --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkeinElement):
            return NotImplemented
        if other.basis != self.basis:
            other = other.in_basis(self.basis)
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.basis, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return f"SkeinElement(0, basis={self.basis!r})"
        parts = [f"({c})*{_index_str(idx, self.basis)}" for idx, c in self.items()]
        return "SkeinElement(" + " + ".join(parts) + f", basis={self.basis!r})"


def _accumulate(acc: dict[Index, LaurentPoly], idx: Index, c: LaurentPoly) -> None:
    if not c:
        return
    old = acc.get(idx)
    if old is None:
        acc[idx] = c
        return
    new = old + c
    if new:
        acc[idx] = new
    else:
        del acc[idx]


def _index_str(idx: Index, basis: str) -> str:
    if basis == CHEBYSHEV:
        return "S{}(a1)S{}(a2)S{}(a3)".format(*idx)
    return "a1^{}a2^{}a3^{}".format(*idx)


# -- constructors -------------------------------------------------------------

def cheb_elem(i: int, j: int, k: int, coeff: LaurentPoly | int = ONE) -> SkeinElement:
    """``coeff * S_i(a1) S_j(a2) S_k(a3)`` for arbitrary integer indices.

    Negative indices are normalised on the spot (S_-1 = 0, S_n = -S_{-n-2}),
    so only nonnegative triples are ever stored.
    """
    if isinstance(coeff, int):
        coeff = LaurentPoly.const(coeff)
    sign = 1
    out = []
    for n in (i, j, k):
        norm = normalize_index(n)
        if norm is None:
            return SkeinElement.zero()
        s, idx = norm
        sign *= s
        out.append(idx)
    return SkeinElement._raw({tuple(out): coeff if sign > 0 else -coeff} if coeff else {}, CHEBYSHEV)


def chebyshev_term(i: int, j: int, k: int) -> tuple[int, Index] | None:
    """Normalised (sign, triple) for S_i(a1)S_j(a2)S_k(a3), or None if zero."""
    sign = 1
    out = []
    for n in (i, j, k):
        norm = normalize_index(n)
        if norm is None:
            return None
        sign *= norm[0]
        out.append(norm[1])
    return sign, (out[0], out[1], out[2])


def monomial(i: int, j: int, k: int, coeff: LaurentPoly | int = ONE) -> SkeinElement:
    return SkeinElement.basis_element((i, j, k), coeff, MONOMIAL)


# -- basis change ---------------------------------------------------------------

def to_chebyshev(e: SkeinElement) -> SkeinElement:
    if e.basis == CHEBYSHEV:
        return e
    acc: dict[Index, LaurentPoly] = {}
    for (i, j, k), c in e._terms.items():
        for ki, ci in _power_in_chebyshev(i):
            for kj, cj in _power_in_chebyshev(j):
                for kk, ck in _power_in_chebyshev(k):
                    _accumulate(acc, (ki, kj, kk), c * (ci * cj * ck))
    return SkeinElement._raw(acc, CHEBYSHEV)


def to_monomial(e: SkeinElement) -> SkeinElement:
    if e.basis == MONOMIAL:
        return e
    acc: dict[Index, LaurentPoly] = {}
    for (i, j, k), c in e._terms.items():
        for di, ci in enumerate(chebyshev(i)):
            if not ci:
                continue
            for dj, cj in enumerate(chebyshev(j)):
                if not cj:
                    continue
                for dk, ck in enumerate(chebyshev(k)):
                    if ck:
                        _accumulate(acc, (di, dj, dk), c * (ci * cj * ck))
    return SkeinElement._raw(acc, MONOMIAL)


# -- products ---------------------------------------------------------------

def elem_mul(a: SkeinElement, b: SkeinElement) -> SkeinElement:
    """Product in the commutative algebra, computed in ``a``'s basis."""
    theirs = a._aligned(b)
    acc: dict[Index, LaurentPoly] = {}
    if a.basis == MONOMIAL:
        for (i, j, k), c in a._terms.items():
            for (p, q, r), d in theirs.items():
                _accumulate(acc, (i + p, j + q, k + r), c * d)
        return SkeinElement._raw(acc, MONOMIAL)
    for (i, j, k), c in a._terms.items():
        for (p, q, r), d in theirs.items():
            cd = c * d
            for x in _chebyshev_product(i, p):
                for y in _chebyshev_product(j, q):
                    for z in _chebyshev_product(k, r):
                        _accumulate(acc, (x, y, z), cd)
    return SkeinElement._raw(acc, CHEBYSHEV)


def grlex_key(idx: Index) -> tuple[int, int, int, int]:
    """Sort key of the monomial order: total degree first, then the a1
    index, then a3, then a2. Larger key means larger monomial."""
    i, j, k = idx
    return (i + j + k, i, k, j)


def elem_mirror(e: SkeinElement) -> SkeinElement:
    return e.mirror()


def eval_elem(e: SkeinElement, x, modulus: int | None = None) -> dict[Index, object]:
    return e.evaluate(x, modulus)
