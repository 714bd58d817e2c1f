"""Braid words, closures, and positive-braid genus censuses.

A word is a tuple of signed generator indices: ``+i`` is ``sigma_i`` and
``-i`` its inverse, ``1 <= i <= strands - 1``.  Alexander polynomials of
closures come from the reduced Burau representation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import NotAKnot, NotPositive, OutOfProvenRange
from .laurent import KnotPoly1, LinkPoly2, breadth, cyclotomic_quotient, divide_exact, normalize_unit

ZERO = KnotPoly1()
ONE = KnotPoly1.constant(1)


@dataclass(frozen=True, order=True)
class BraidWord:
    strands: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(f"generator {x} out of range for {self.strands} strands")

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise ValueError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, k: int) -> "BraidWord":
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.strands, self.letters * k)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def mirror(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in self.letters))

    @property
    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)

    @property
    def is_negative(self) -> bool:
        return all(x < 0 for x in self.letters)

    @property
    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def __str__(self):
        if not self.letters:
            return f"B{self.strands}: 1"
        return f"B{self.strands}: " + " ".join(
            f"s{x}" if x > 0 else f"s{-x}^-1" for x in self.letters)

    def as_dict(self):
        return {"strands": self.strands, "letters": list(self.letters)}


def permutation(w: BraidWord) -> Tuple[int, ...]:
    """Where the strand starting at each position ends (0-based)."""
    pos = list(range(w.strands))  # pos[k] = strand currently at position k
    for x in w.letters:
        i = abs(x) - 1
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    perm = [0] * w.strands
    for k, s in enumerate(pos):
        perm[s] = k
    return tuple(perm)


def closure_components(w: BraidWord) -> int:
    perm = permutation(w)
    seen = [False] * w.strands
    count = 0
    for i in range(w.strands):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return count


def is_knot(w: BraidWord) -> bool:
    return closure_components(w) == 1


def genus_positive(w: BraidWord) -> int:
    """Seifert genus ``(1 - strands + length) / 2`` of a positive (or negative) braid knot."""
    if not (w.is_positive or w.is_negative):
        raise NotPositive(f"{w} is neither positive nor negative")
    if not is_knot(w):
        raise NotAKnot(f"closure of {w} has {closure_components(w)} components")
    return (1 - w.strands + len(w)) // 2


# -- Markov-type reduction ------------------------------------------------


@dataclass(frozen=True)
class Reduction:
    kind: str  # "Reduced", "Split" or "Irreducible"
    word: Optional[BraidWord] = None

    def as_dict(self):
        out = {"result": self.kind}
        if self.word is not None:
            out["word"] = self.word.as_dict()
        return out


def destabilize_once(w: BraidWord, i: int) -> BraidWord:
    """Remove the single occurrence of ``sigma_i`` and merge strands ``i, i+1``.

    The word is rotated to start with ``sigma_i``; the remaining letters
    split into a block below ``i`` and a block above ``i`` that commute, so
    the closure equals that of (low block)(high block shifted down by one).
    """
    k = w.letters.index(i)
    rest = w.letters[k + 1:] + w.letters[:k]
    low = [x for x in rest if abs(x) < i]
    high = [x - 1 if x > 0 else x + 1 for x in rest if abs(x) > i]
    return BraidWord(w.strands - 1, tuple(low + high))


def reduce(w: BraidWord) -> Reduction:
    """Repeatedly destabilize a positive word at generators used exactly once.

    ``Split`` if some generator never occurs (the closure is a split link),
    ``Irreducible`` if the input already has every generator at least twice.
    """
    if not w.is_positive:
        raise NotPositive(f"{w} is not a positive word")
    changed = False
    while True:
        counts = [0] * w.strands
        for x in w.letters:
            counts[x] += 1
        gens = range(1, w.strands)
        if any(counts[i] == 0 for i in gens):
            return Reduction("Split")
        once = next((i for i in gens if counts[i] == 1), None)
        if once is None:
            return Reduction("Reduced", w) if changed else Reduction("Irreducible")
        w = destabilize_once(w, once)
        changed = True


def reduced_form(w: BraidWord) -> Tuple[str, BraidWord]:
    r = reduce(w)
    return r.kind, (r.word if r.word is not None else w)


# -- Burau representation and Alexander polynomials -------------------------


def _burau_generator(n: int, x: int) -> Dict[Tuple[int, int], KnotPoly1]:
    """Nonzero entries, in the affected block, of the reduced Burau image."""
    i = abs(x)
    t = KnotPoly1.monomial(1)
    ti = KnotPoly1.monomial(-1)
    m = n - 1
    g: Dict[Tuple[int, int], KnotPoly1] = {}
    # 0-based row/col index of generator i's "middle" is i-1
    c = i - 1
    if m == 1:
        g[(0, 0)] = -t if x > 0 else -ti
        return g
    if x > 0:
        if c - 1 >= 0:
            g[(c - 1, c - 1)] = ONE
        g[(c, c)] = -t
        if c - 1 >= 0:
            g[(c, c - 1)] = t
        if c + 1 < m:
            g[(c, c + 1)] = ONE
            g[(c + 1, c + 1)] = ONE
    else:
        if c - 1 >= 0:
            g[(c - 1, c - 1)] = ONE
            g[(c, c - 1)] = ONE
        g[(c, c)] = -ti
        if c + 1 < m:
            g[(c, c + 1)] = ti
            g[(c + 1, c + 1)] = ONE
    return g


def burau_matrix(w: BraidWord) -> List[List[KnotPoly1]]:
    """Reduced Burau matrix, ``(strands-1) x (strands-1)``."""
    m = w.strands - 1
    M = [[ONE if i == j else ZERO for j in range(m)] for i in range(m)]
    cache: Dict[int, Dict] = {}
    for x in w.letters:
        g = cache.get(x)
        if g is None:
            g = cache[x] = _burau_generator(w.strands, x)
        cols = sorted({c for (_, c) in g})
        rows_of = {c: [(r, v) for (r, cc), v in g.items() if cc == c] for c in cols}
        for row in M:
            new = {}
            for c in cols:
                acc = ZERO
                for r, v in rows_of[c]:
                    e = row[r]
                    if e:
                        acc = acc + e * v
                new[c] = acc
            for c, v in new.items():
                row[c] = v
    return M


def poly_determinant(a: List[List[KnotPoly1]]) -> KnotPoly1:
    """Determinant over ``Z[t, t^-1]`` by fraction-free elimination."""
    a = [list(r) for r in a]
    n = len(a)
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = divide_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def burau_alexander(w: BraidWord, *, require_knot: bool = True) -> KnotPoly1:
    """Alexander polynomial of the closure, symmetric with ``Delta(1) = 1``.

    With ``require_knot=False`` links are accepted too; a link with an even
    number of components has odd breadth and comes back unit-normalized.
    """
    if require_knot and not is_knot(w):
        raise NotAKnot(f"closure of {w} has {closure_components(w)} components")
    M = burau_matrix(w)
    m = len(M)
    I_minus = [[(ONE if i == j else ZERO) - M[i][j] for j in range(m)] for i in range(m)]
    d = poly_determinant(I_minus)
    delta = divide_exact(d, cyclotomic_quotient(w.strands))
    if delta.is_zero() or breadth(delta) % 2:
        return normalize_unit(delta) if delta else delta
    return delta.symmetrize()


def link_with_axis_polynomial(w: BraidWord):
    """Two-variable polynomial of the closure together with its braid axis.

    ``x`` marks the closed braid and ``y`` the axis, which links it
    ``strands`` times.  The axis is oriented so that appending
    ``Delta^(2n)`` to the word is the twist ``y -> x^(-n*strands) y``.
    Computed as ``det(I - y^-1 B(x))`` and shifted to non-negative exponents.
    """
    M = burau_matrix(w)
    m = len(M)
    yinv = LinkPoly2.monomial(0, -1)

    def lift(p: KnotPoly1):
        return LinkPoly2({(e, 0): c for e, c in p.items()})

    grid = [[(LinkPoly2.constant(1) if i == j else LinkPoly2()) - yinv * lift(M[i][j])
             for j in range(m)] for i in range(m)]
    return normalize_unit(_det_small(grid))


def _det_small(a):
    n = len(a)
    if n == 0:
        from .laurent import LinkPoly2
        return LinkPoly2.constant(1)
    if n == 1:
        return a[0][0]
    total = None
    for j in range(n):
        if a[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = a[0][j] * _det_small(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        from .laurent import LinkPoly2
        return LinkPoly2()
    return total


def torus_alexander(p: int, q: int) -> KnotPoly1:
    """Closed form ``(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`` for coprime ``|p|, q``."""
    p = abs(p)
    num = (KnotPoly1.monomial(p * q) - 1) * (KnotPoly1.monomial(1) - 1)
    den = (KnotPoly1.monomial(p) - 1) * (KnotPoly1.monomial(q) - 1)
    return divide_exact(num, den).symmetrize()


# -- torus and twisted torus braids ----------------------------------------


def torus_braid(p: int, q: int) -> BraidWord:
    """``(sigma_1 ... sigma_{q-1})^p`` on ``q`` strands (inverse letters for ``p < 0``)."""
    if p == 0 or q < 2:
        raise ValueError("need p != 0 and q >= 2")
    sign = 1 if p > 0 else -1
    return BraidWord(q, tuple(sign * i for i in range(1, q)) * abs(p))


def full_twist(n: int) -> BraidWord:
    """Positive full twist ``Delta^2 = (sigma_1 ... sigma_{n-1})^n``."""
    return BraidWord(n, tuple(range(1, n)) * n)


def half_twist(n: int) -> BraidWord:
    """Positive half twist ``Delta`` (Garside element)."""
    letters: List[int] = []
    for k in range(n - 1, 0, -1):
        letters.extend(range(1, k + 1))
    return BraidWord(n, tuple(letters))


def permutation_braid(perm: Sequence[int]) -> BraidWord:
    """Positive braid in which each pair of strands crosses at most once.

    ``perm[i]`` is the final position of the strand starting at ``i``
    (0-based).  Built by bubble sort, so the length equals the number of
    inversions.
    """
    n = len(perm)
    # current[k] = final target of the strand currently at position k
    current = list(perm)
    letters = []
    changed = True
    while changed:
        changed = False
        for k in range(n - 1):
            if current[k] > current[k + 1]:
                current[k], current[k + 1] = current[k + 1], current[k]
                letters.append(k + 1)
                changed = True
    return BraidWord(n, tuple(letters))


def block_swap(left: int, right: int) -> BraidWord:
    """Permutation braid taking a block of ``left`` strands across ``right`` strands.

    Its closure is the torus knot ``T(left, right)`` and its axis links the
    closure ``left + right`` times.
    """
    perm = [i + right for i in range(left)] + [j for j in range(right)]
    return permutation_braid(perm)


def _complement_left(w: BraidWord) -> BraidWord:
    """Positive permutation braid ``Z`` with ``Z w = Delta`` for a permutation braid ``w``."""
    n = w.strands
    pw = permutation(w)
    pd = permutation(half_twist(n))
    # Z w = Delta  =>  perm(Z) followed by perm(w) equals perm(Delta)
    inv_w = [0] * n
    for i, j in enumerate(pw):
        inv_w[j] = i
    # strand starting at i: under Z goes to z(i), then under w to pw[z(i)] = pd[i]
    z = [inv_w[pd[i]] for i in range(n)]
    return permutation_braid(z)


def twisted_torus_braid(p: int, q: int, n: int) -> BraidWord:
    """Braid whose closure is ``T(p, q)`` twisted ``n`` times along the seiferter ``c_+``.

    For ``p > 0`` the seiferter is the axis of the block-swap braid on
    ``p + q`` strands, so the result is ``X * Delta^(2n)``: positive for
    ``n >= 0`` and written as a negative word for ``n <= -1``.  For
    ``p < 0`` see :func:`_negative_torus_family`.
    """
    if q < 2 or p == 0:
        raise ValueError("need p != 0 and q >= 2")
    if math.gcd(abs(p), q) != 1:
        raise ValueError("p and q must be coprime")
    if p > 0:
        m = p + q
        x = block_swap(p, q)
        if n >= 0:
            return x * full_twist(m) ** n
        # X Delta^(2n) = Z^-1 Delta^(2n+1) with Z = Delta X^-1 positive
        z = _complement_left(x)
        return z.inverse() * half_twist(m).inverse() ** (-(2 * n + 1))
    if n >= 3:
        raise OutOfProvenRange("T(p,q,n) with p < 0 is only known to be a braid of fixed sign for n <= 2")
    return _negative_torus_family(-p, q, n)


def _block_twist(strands: int, first: int, size: int, k: int) -> BraidWord:
    """``Delta^(2k)`` on the ``size`` adjacent strands starting at position ``first`` (1-based)."""
    base = tuple(first + i for i in range(size - 1)) * size
    if k < 0:
        base = tuple(-x for x in reversed(base))
    return BraidWord(strands, base * abs(k))


def _lorenz_model(big: int, small: int, n: int) -> BraidWord:
    """Positive torus knot ``T(big, small)`` twisted ``-n`` times along ``c_-``.

    ``T(big, small)`` is the closure of ``X * Delta_small^2`` on ``big``
    strands (block swap of a ``small`` block across an ``r = big - small``
    block, then a full twist of the ``small`` block); ``c_-`` encircles the
    ``r`` block.  Its mirror is ``T(-big, small)`` twisted ``n`` times along
    ``c_+``.  Used as a cross-check for the presentations below.
    """
    r = big - small
    w = block_swap(small, r) * _block_twist(big, r + 1, small, 1)
    if r > 1 and n:
        w = w * _block_twist(big, 1, r, -n)
    return w


def _axis_model(big: int, small: int, n: int) -> BraidWord:
    """The same knot on fewer strands, with ``c_-`` placed as simply as possible.

    If ``r <= small``, ``c_-`` encircles ``r`` adjacent strands of the
    ``small``-strand torus braid.  If ``r >= small``, ``c_-`` is the axis of
    an ``r``-strand presentation of ``T(big, small)``.
    """
    r = big - small
    if r <= small:
        w = torus_braid(big, small)
        return w * _block_twist(small, 1, r, -n) if r > 1 and n else w
    rp = r - small
    base = block_swap(small, rp) if rp else BraidWord(r)
    return base * _block_twist(r, rp + 1, small, 2) * _block_twist(r, 1, r, -n)


def _negative_torus_family(P: int, q: int, n: int) -> BraidWord:
    big, small = max(P, q), min(P, q)
    if big <= 2:
        return BraidWord(1)  # T(2, 1) is the unknot and c_- a meridian
    r = big - small
    if n == 1 and r > small:
        # one twist turns the knot into the mirror of the same configuration
        # for (r, r - small), with smaller braid index
        a, b = r, r - small
        return _negative_torus_family(max(a, b), min(a, b), 1).mirror()
    word = _axis_model(big, small, n)
    if n <= 0:
        return word.mirror()
    signed = fixed_sign_conjugate(word)
    if signed is None:
        raise OutOfProvenRange(f"no fixed-sign conjugate found for T({-P},{q},{n})")
    return signed.mirror()


# -- Garside normal form ------------------------------------------------------
#
# A simple braid is stored as the permutation it induces: ``p[i]`` is the
# final position of the strand starting at position ``i``.


def _swap(j: int, i: int) -> int:
    return i if j == i - 1 else i - 1 if j == i else j


def _compose(a, b):
    return tuple(b[x] for x in a)


def _tau(p):
    n = len(p)
    return tuple(n - 1 - p[n - 1 - i] for i in range(n))


def _starting(p, i):
    return p[i - 1] > p[i]


def _finishing(p, i):
    inv = [0] * len(p)
    for k, v in enumerate(p):
        inv[v] = k
    return inv[i - 1] > inv[i]


def _left_weight(a, b):
    n = len(a)
    changed = False
    while True:
        i = next((i for i in range(1, n) if _starting(b, i) and not _finishing(a, i)), None)
        if i is None:
            return a, b, changed
        a = tuple(_swap(v, i) for v in a)
        b = tuple(b[_swap(j, i)] for j in range(n))
        changed = True


@dataclass(frozen=True)
class NormalForm:
    strands: int
    inf: int
    factors: Tuple[Tuple[int, ...], ...]

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    def word(self) -> BraidWord:
        n = self.strands
        d = half_twist(n)
        w = d ** self.inf if self.inf >= 0 else d.inverse() ** (-self.inf)
        for f in self.factors:
            w = w * permutation_braid(f)
        return w


def _normalize(n: int, k: int, factors: List) -> NormalForm:
    delta = tuple(range(n - 1, -1, -1))
    ident = tuple(range(n))
    factors = list(factors)
    changed = True
    while changed:
        changed = False
        for j in range(len(factors) - 2, -1, -1):
            a, b, c = _left_weight(factors[j], factors[j + 1])
            if c:
                factors[j], factors[j + 1] = a, b
                changed = True
    while factors and factors[0] == delta:
        factors.pop(0)
        k += 1
    while factors and factors[-1] == ident:
        factors.pop()
    return NormalForm(n, k, tuple(factors))


def left_normal_form(w: BraidWord) -> NormalForm:
    """``Delta^inf`` times a left-weighted sequence of proper simple braids."""
    n = w.strands
    delta = tuple(range(n - 1, -1, -1))
    k = 0
    factors: List = []
    for x in w.letters:
        i = abs(x)
        if x > 0:
            factors.append(tuple(_swap(j, i) for j in range(n)))
        else:
            # sigma_i^-1 = Delta^-1 (Delta sigma_i^-1); push Delta^-1 to the front
            factors = [_tau(f) for f in factors]
            k -= 1
            factors.append(tuple(_swap(v, i) for v in delta))
    return _normalize(n, k, factors)


def _cycle(nf: NormalForm) -> NormalForm:
    if not nf.factors:
        return nf
    first = nf.factors[0]
    if nf.inf % 2:
        first = _tau(first)
    return _normalize(nf.strands, nf.inf, list(nf.factors[1:]) + [first])


def _decycle(nf: NormalForm) -> NormalForm:
    if not nf.factors:
        return nf
    last = nf.factors[-1]
    if nf.inf % 2:
        last = _tau(last)
    return _normalize(nf.strands, nf.inf, [last] + list(nf.factors[:-1]))


def super_summit_form(w: BraidWord) -> NormalForm:
    """A conjugate of ``w`` with maximal ``inf`` and minimal ``sup``.

    Cycling raises ``inf`` and decycling lowers ``sup``; when neither moves
    within ``n(n-1)/2`` steps the extremum over the conjugacy class is
    reached.
    """
    nf = left_normal_form(w)
    patience = max(1, w.strands * (w.strands - 1) // 2)
    for step, better in ((_cycle, lambda a, b: a.inf > b.inf),
                         (_decycle, lambda a, b: a.sup < b.sup)):
        cur = nf
        stale = 0
        while stale < patience and cur.factors:
            nxt = step(cur)
            if better(nxt, nf):
                nf, stale = nxt, 0
            else:
                stale += 1
            cur = nxt
    return nf


def fixed_sign_conjugate(w: BraidWord) -> Optional[BraidWord]:
    """A positive or negative word conjugate to ``w``, if one exists."""
    if w.is_positive or w.is_negative:
        return w
    ssf = super_summit_form(w)
    if ssf.inf >= 0:
        return ssf.word()
    if ssf.sup <= 0:
        return super_summit_form(w.inverse()).word().inverse()
    return None


# -- census -------------------------------------------------------------------


@dataclass(frozen=True)
class CensusEntry:
    genus: int
    alexander: KnotPoly1
    word: BraidWord

    def as_dict(self):
        return {"genus": self.genus,
                "alexander": {"terms": [{"e": e, "c": c} for e, c in sorted(self.alexander.items())]},
                "word": self.word.as_dict()}


def _orbit(letters: Tuple[int, ...], n: int) -> Iterator[Tuple[int, ...]]:
    L = len(letters)
    variants = (letters, letters[::-1])
    for v in variants:
        for refl in (False, True):
            u = tuple(n - x for x in v) if refl else v
            for k in range(max(L, 1)):
                yield u[k:] + u[:k]


def canonical_word(w: BraidWord) -> BraidWord:
    """Least representative under rotation, reversal and ``i -> n - i``."""
    return BraidWord(w.strands, min(_orbit(w.letters, w.strands)))


def _irreducible_words(n: int, length: int, prefix: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    """Positive words extending ``prefix`` in which every generator occurs at least twice."""
    counts = [0] * n
    for x in prefix:
        counts[x] += 1
    word = list(prefix)

    def need():
        return sum(max(0, 2 - counts[i]) for i in range(1, n))

    def rec():
        left = length - len(word)
        if left == 0:
            yield tuple(word)
            return
        for g in range(1, n):
            counts[g] += 1
            word.append(g)
            if need() <= left - 1:
                yield from rec()
            word.pop()
            counts[g] -= 1

    if need() <= length - len(word):
        yield from rec()


def census_unit(unit: Tuple[int, int, Tuple[int, ...]]) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Classes found in one work unit, as ``(alexander coefficients, word)`` pairs.

    Only canonical representatives of knot-closing irreducible words are
    kept; the least word wins within the unit.
    """
    n, length, prefix = unit
    best: Dict[Tuple[int, ...], Tuple[int, ...]] = {}
    for letters in _irreducible_words(n, length, prefix):
        if min(_orbit(letters, n)) != letters:
            continue
        w = BraidWord(n, letters)
        if not is_knot(w):
            continue
        key = tuple(burau_alexander(w).coeff_list())
        if key not in best or letters < best[key]:
            best[key] = letters
    return sorted(best.items())


def census_units(genus: int, strands: int, depth: int = 2) -> List[Tuple[int, int, Tuple[int, ...]]]:
    """Work units for one braid index: the word length is fixed by the genus."""
    length = 2 * genus + strands - 1
    depth = min(depth, length)
    return [(strands, length, prefix) for prefix in product(range(1, strands), repeat=depth)]


def iter_genus(genus: int, jobs: int = 1, mapper=map) -> Iterator[CensusEntry]:
    """Yield the census of ``genus`` one braid index at a time.

    Every class appears once, at the smallest braid index carrying an
    irreducible positive representative (reducible words destabilize to
    one of those, so they add nothing).  Within an index entries are
    ordered by Alexander polynomial.  ``jobs`` only controls how finely
    the work is split; ``mapper`` runs the units (e.g. a pool's ``map``).
    """
    if genus < 0:
        raise ValueError("genus must be non-negative")
    if genus == 0:
        yield CensusEntry(0, ONE, BraidWord(1))
        return
    seen = set()
    depth = 1 if jobs <= 1 else 2
    # an irreducible word has length >= 2 (strands - 1), so strands <= 2 genus + 1
    for n in range(2, 2 * genus + 2):
        merged: Dict[Tuple[int, ...], Tuple[int, ...]] = {}
        for batch in mapper(census_unit, census_units(genus, n, depth)):
            for key, letters in batch:
                if key not in merged or letters < merged[key]:
                    merged[key] = letters
        for key in sorted(merged, key=lambda k: (len(k), k)):
            if key in seen:
                continue
            seen.add(key)
            lo = -(len(key) - 1) // 2
            yield CensusEntry(genus, KnotPoly1.from_coeffs(key, lo), BraidWord(n, merged[key]))


def enumerate_genus(genus: int, jobs: int = 1, mapper=map) -> List[CensusEntry]:
    """Knots of the given genus that close positive braids, one entry per Alexander polynomial.

    Words are taken modulo rotation, reversal and ``i -> n - i``; classes
    are keyed by ``(genus, Delta)``, so distinct knots sharing both would
    merge (none do at genus <= 2).  Output does not depend on ``jobs``.
    """
    return list(iter_genus(genus, jobs, mapper))
