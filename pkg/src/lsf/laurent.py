"""Sparse Laurent polynomials over the integers in one and two variables.

Values are immutable: every operation returns a new polynomial.  Terms are
stored as a dict mapping an exponent (an ``int`` for :class:`KnotPoly1`,
an ``(i, j)`` pair for :class:`LinkPoly2`) to a nonzero ``int``.
"""
from __future__ import annotations

from functools import total_ordering
from typing import Dict, Iterable, Mapping, Tuple

from .errors import InexactDivision, ZeroPolynomial

__all__ = [
    "NEG_INFINITY",
    "NegInfinity",
    "KnotPoly1",
    "LinkPoly2",
    "breadth",
    "normalize_unit",
    "substitute_monomial",
    "specialize",
    "divide_exact",
    "cyclotomic_quotient",
    "divmod_poly",
    "unit_equivalent",
    "format_poly1",
    "format_poly2",
]


@total_ordering
class NegInfinity:
    """Breadth of the zero polynomial.  Compares below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("NEG_INFINITY")

    def __repr__(self):
        return "NEG_INFINITY"

    def __reduce__(self):
        return (NegInfinity, ())


NEG_INFINITY = NegInfinity()


class _Laurent:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                e = self._key(e)
                c = int(c)
                if c:
                    clean[e] = clean.get(e, 0) + c
            clean = {e: c for e, c in clean.items() if c}
        self._terms: Dict = clean
        self._hash = None

    # subclasses define how exponents add and how keys are normalized
    @staticmethod
    def _key(e):
        raise NotImplementedError

    @staticmethod
    def _add_exp(a, b):
        raise NotImplementedError

    @staticmethod
    def _neg_exp(a):
        raise NotImplementedError

    @classmethod
    def _from_clean(cls, terms: Dict):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @property
    def terms(self) -> Dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.constant(other)
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    @classmethod
    def constant(cls, c: int):
        raise NotImplementedError

    def _coerce(self, other):
        if isinstance(other, int):
            return self.constant(other)
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return self._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return self._from_clean({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: Dict = {}
        add = self._add_exp
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = add(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return self._from_clean({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        result = self.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: int):
        return self._from_clean({e: c * v for e, v in self._terms.items()}) if c else type(self)()

    def shift(self, e):
        e = self._key(e)
        return self._from_clean({self._add_exp(k, e): v for k, v in self._terms.items()})

    def invert_variables(self):
        """Substitute every variable by its inverse."""
        return self._from_clean({self._neg_exp(e): c for e, c in self._terms.items()})


class KnotPoly1(_Laurent):
    """One-variable Laurent polynomial in ``t``."""

    __slots__ = ()

    @staticmethod
    def _key(e):
        return int(e)

    @staticmethod
    def _add_exp(a, b):
        return a + b

    @staticmethod
    def _neg_exp(a):
        return -a

    @classmethod
    def constant(cls, c: int):
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1):
        return cls({e: c})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], low: int = 0):
        """Build ``sum coeffs[i] t^(low+i)``."""
        return cls({low + i: c for i, c in enumerate(coeffs)})

    def degree(self):
        return max(self._terms) if self._terms else NEG_INFINITY

    def valuation(self):
        """Lowest exponent (``None`` for zero)."""
        return min(self._terms) if self._terms else None

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def coeff_list(self):
        """Dense coefficients from lowest to highest exponent."""
        if not self._terms:
            return []
        lo, hi = min(self._terms), max(self._terms)
        return [self._terms.get(i, 0) for i in range(lo, hi + 1)]

    def evaluate(self, t):
        return sum(c * t ** e for e, c in self._terms.items())

    def symmetrize(self) -> "KnotPoly1":
        """Symmetric representative of the unit class, sign fixed by p(1) > 0.

        The exponents are centred on 0, so the breadth must be even.  When
        p(1) = 0 the leading coefficient is made positive instead.
        """
        if not self._terms:
            raise ZeroPolynomial("cannot symmetrize the zero polynomial")
        lo, hi = min(self._terms), max(self._terms)
        if (hi - lo) % 2:
            raise ValueError("odd breadth has no symmetric representative")
        p = self.shift(-(lo + hi) // 2)
        value = sum(self._terms.values())
        if value < 0 or (value == 0 and p._terms[max(p._terms)] < 0):
            p = -p
        return p

    def __repr__(self):
        return f"KnotPoly1({format_poly1(self)!r})"

    def __str__(self):
        return format_poly1(self)


class LinkPoly2(_Laurent):
    """Two-variable Laurent polynomial in ``x`` and ``y``."""

    __slots__ = ()

    @staticmethod
    def _key(e):
        i, j = e
        return (int(i), int(j))

    @staticmethod
    def _add_exp(a, b):
        return (a[0] + b[0], a[1] + b[1])

    @staticmethod
    def _neg_exp(a):
        return (-a[0], -a[1])

    @classmethod
    def constant(cls, c: int):
        return cls({(0, 0): c})

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1):
        return cls({(i, j): c})

    @classmethod
    def from_knot(cls, p: KnotPoly1, axis: str = "x"):
        """Regard a one-variable polynomial as a polynomial in ``x`` (or ``y``)."""
        if axis == "x":
            return cls({(e, 0): c for e, c in p.items()})
        return cls({(0, e): c for e, c in p.items()})

    def coeff(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def y_slices(self) -> Dict[int, KnotPoly1]:
        """Coefficient polynomials in x, keyed by the y exponent."""
        out: Dict[int, Dict[int, int]] = {}
        for (i, j), c in self._terms.items():
            out.setdefault(j, {})[i] = c
        return {j: KnotPoly1._from_clean(d) for j, d in out.items()}

    def __repr__(self):
        return f"LinkPoly2({format_poly2(self)!r})"

    def __str__(self):
        return format_poly2(self)


def _exponents(p, axis: str):
    if isinstance(p, KnotPoly1):
        if axis not in ("single", "t"):
            raise ValueError("a one-variable polynomial only has the 'single' axis")
        return list(p._terms)
    idx = {"x": 0, "y": 1}[axis]
    return [e[idx] for e in p._terms]


def breadth(p, axis: str = "single"):
    """Max minus min exponent along ``axis``; ``NEG_INFINITY`` for zero."""
    if p.is_zero():
        return NEG_INFINITY
    ex = _exponents(p, axis)
    return max(ex) - min(ex)


def normalize_unit(p):
    """Canonical representative of the class of ``p`` up to ``±monomial``.

    Minimum exponent 0 in every variable, and the coefficient of the
    lexicographically smallest monomial is positive.
    """
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has no unit class representative")
    if isinstance(p, KnotPoly1):
        lo = min(p._terms)
        q = p.shift(-lo)
        return -q if q._terms[0] < 0 else q
    lx = min(e[0] for e in p._terms)
    ly = min(e[1] for e in p._terms)
    q = p.shift((-lx, -ly))
    first = min(q._terms)
    return -q if q._terms[first] < 0 else q


def unit_equivalent(p, q) -> bool:
    """``p ≐ q``: equal up to multiplication by ``±monomial``."""
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    return normalize_unit(p) == normalize_unit(q)


def substitute_monomial(p: LinkPoly2, x_image: Tuple[int, int], y_image: Tuple[int, int]) -> LinkPoly2:
    """Send ``x -> x^a y^b`` and ``y -> x^c y^d`` where ``x_image=(a, b)``, ``y_image=(c, d)``."""
    a, b = x_image
    c, d = y_image
    out: Dict[Tuple[int, int], int] = {}
    for (i, j), v in p._terms.items():
        e = (i * a + j * c, i * b + j * d)
        out[e] = out.get(e, 0) + v
    return LinkPoly2._from_clean({e: v for e, v in out.items() if v})


def specialize(p: LinkPoly2, x_pow: int, y_pow: int) -> KnotPoly1:
    """``p(t^x_pow, t^y_pow)`` with like terms combined."""
    out: Dict[int, int] = {}
    for (i, j), v in p._terms.items():
        e = i * x_pow + j * y_pow
        out[e] = out.get(e, 0) + v
    return KnotPoly1._from_clean({e: v for e, v in out.items() if v})


def divmod_poly(num: KnotPoly1, den: KnotPoly1):
    """Long division of Laurent polynomials, aligned at the lowest terms.

    Returns ``(quotient, remainder)``; the remainder is zero exactly when
    ``den`` divides ``num`` in ``Z[t, t^-1]``.  Division stops early if a
    leading coefficient does not divide.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return KnotPoly1(), KnotPoly1()
    d = den.coeff_list()
    dlo = den.valuation()
    r = num.coeff_list()
    rlo = num.valuation()
    lead = d[0]
    nq = len(r) - len(d) + 1
    if nq <= 0:
        return KnotPoly1(), num
    q = [0] * nq
    for k in range(nq):
        c = r[k]
        if c == 0:
            continue
        if c % lead:
            break
        f = c // lead
        q[k] = f
        for i, dv in enumerate(d):
            r[k + i] -= f * dv
    quo = KnotPoly1.from_coeffs(q, rlo - dlo)
    rem = KnotPoly1.from_coeffs(r, rlo)
    return quo, rem


def divide_exact(num: KnotPoly1, den: KnotPoly1) -> KnotPoly1:
    """Exact quotient ``num / den``; raises :class:`InexactDivision` otherwise."""
    if den.is_zero():
        raise InexactDivision("division by the zero polynomial")
    quo, rem = divmod_poly(num, den)
    if not rem.is_zero():
        raise InexactDivision(f"{den} does not divide {num}")
    return quo


def cyclotomic_quotient(omega: int) -> KnotPoly1:
    """``(t^omega - 1) / (t - 1) = 1 + t + ... + t^(omega-1)`` for omega >= 0."""
    if omega < 0:
        raise ValueError("omega must be non-negative")
    return KnotPoly1({i: 1 for i in range(omega)})


def _fmt_term(c: int, mono: str, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    a = abs(c)
    if not mono:
        body = str(a)
    elif a == 1:
        body = mono
    else:
        body = f"{a}*{mono}"
    return (sign if first else f" {sign} ") + body


def _pow(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}" if e > 0 else f"{var}^({e})"


def format_poly1(p: KnotPoly1, var: str = "t") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i, e in enumerate(sorted(p._terms, reverse=True)):
        parts.append(_fmt_term(p._terms[e], _pow(var, e), i == 0))
    return "".join(parts).strip()


def format_poly2(p: LinkPoly2) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k, (i, j) in enumerate(sorted(p._terms, key=lambda e: (-(e[0] + e[1]), -e[0]))):
        mono = "*".join(s for s in (_pow("x", i), _pow("y", j)) if s)
        parts.append(_fmt_term(p._terms[(i, j)], mono, k == 0))
    return "".join(parts).strip()
