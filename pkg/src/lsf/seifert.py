"""Seifert fibered spaces over the 2-sphere and their L-space verdicts.

A form ``S^2(b; r_1, ..., r_s)`` is stored normalized: integer parts of the
ratios are folded into ``b``, zero ratios (regular fibers) are dropped, the
remaining ratios lie in (0, 1) and are sorted ascending.  One fiber may be
degenerate (``inf``), which makes the space a connected sum of lens spaces.
"""
from __future__ import annotations

import math
from bisect import insort
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import TooManyDegenerate, Unsupported, UnstableWindow

INF = "inf"

LSPACE = "LSpace"
NOT_LSPACE = "NotLSpace"


@dataclass(frozen=True)
class SeifertForm:
    b: int
    ratios: Tuple[Fraction, ...]
    degenerate: bool = False

    def __post_init__(self):
        for r in self.ratios:
            if not 0 < r < 1:
                raise ValueError(f"ratio {r} outside (0, 1); use normalize()")
        if list(self.ratios) != sorted(self.ratios):
            raise ValueError("ratios must be ascending; use normalize()")

    @property
    def s(self) -> int:
        return len(self.ratios)

    def euler_number(self) -> Fraction:
        return self.b + sum(self.ratios, Fraction(0))

    def dual(self) -> "SeifertForm":
        """Orientation reversal ``S^2(-b-s; 1-r_s, ..., 1-r_1)``."""
        if self.degenerate:
            raise Unsupported("duality is only defined for non-degenerate forms")
        return SeifertForm(-self.b - self.s, tuple(sorted(1 - r for r in self.ratios)))

    def __str__(self):
        parts = [str(r) for r in self.ratios]
        if self.degenerate:
            parts.append(INF)
        return f"S2({self.b}; {', '.join(parts)})"

    def as_dict(self):
        return {"b": self.b, "ratios": [str(r) for r in self.ratios],
                "degenerate": self.degenerate}


def normalize(b: int, raw_ratios: Sequence) -> SeifertForm:
    """Fold integer parts into ``b``, drop regular fibers, sort.

    ``raw_ratios`` entries are anything :class:`~fractions.Fraction` accepts,
    or the string ``"inf"`` / ``None`` for a degenerate fiber.
    """
    b = int(b)
    kept: List[Fraction] = []
    degenerate = False
    for r in raw_ratios:
        if r is None or (isinstance(r, str) and r.strip().lower() in ("inf", "∞")):
            if degenerate:
                raise TooManyDegenerate("at most one degenerate fiber is allowed")
            degenerate = True
            continue
        r = Fraction(r)
        whole = math.floor(r)
        b += whole
        r -= whole
        if r:
            kept.append(r)
    return SeifertForm(b, tuple(sorted(kept)), degenerate)


def h1_order(f: SeifertForm) -> int:
    """``|H_1|`` as ``|a_1...a_s (b + sum r_i)|``; 0 means infinite."""
    if f.degenerate:
        raise Unsupported("h1_order is not defined for degenerate forms")
    prod = 1
    for r in f.ratios:
        prod *= r.denominator
    return abs(prod * f.euler_number()).numerator


@dataclass(frozen=True)
class JNWitness:
    a: int
    k: int

    def __post_init__(self):
        if not (0 < self.a < self.k and 2 * self.a <= self.k and math.gcd(self.a, self.k) == 1):
            raise ValueError(f"invalid witness {(self.a, self.k)}")


def jn_witness(sorted_ratios: Sequence[Fraction]) -> Optional[JNWitness]:
    """Smallest ``(a, k)`` with ratios strictly below ``(1/k, ..., 1/k, a/k, (k-a)/k)``.

    Needs at least three ratios, ascending in (0, 1).  Only ``k`` with
    ``k * r_{s-2} < 1`` can work, so the scan is finite.
    """
    rs = [Fraction(r) for r in sorted_ratios]
    if len(rs) < 3:
        raise ValueError("need at least three ratios")
    found = _scan_witness(rs[-3], rs[-2], rs[-1])
    return JNWitness(*found) if found else None


def _scan_witness(small: Fraction, second: Fraction, top: Fraction):
    ps, qs = small.numerator, small.denominator
    p2, q2 = second.numerator, second.denominator
    pt, qt = top.numerator, top.denominator
    if 2 * p2 >= q2:
        return None  # a/k <= 1/2 can never exceed r_{s-1}
    k = 2
    while k * ps < qs:
        # a/k > r_{s-1}; the top condition only gets harder as a grows
        a = p2 * k // q2 + 1
        while 2 * a <= k and pt * k < (k - a) * qt:
            if math.gcd(a, k) == 1:
                return a, k
            a += 1
        k += 1
    return None


@dataclass(frozen=True)
class Verdict:
    verdict: str
    certificate: str
    witness: Optional[JNWitness] = None

    @property
    def is_lspace(self) -> bool:
        return self.verdict == LSPACE

    def as_dict(self):
        out = {"verdict": self.verdict, "certificate": self.certificate}
        if self.witness is not None:
            out["witness"] = [self.witness.a, self.witness.k]
        return out


def is_lspace(f: SeifertForm) -> Verdict:
    """L-space decision for a normalized form, with the deciding branch.

    Certificates: ``degenerate``, ``lens(e!=0)`` / ``lens(e=0)`` for at most
    two fibers, ``branch(1)``, ``witness(2)``, ``witness(3)`` for the three
    non-L-space conditions, and ``no-witness(2)``, ``no-witness(3)`` or
    ``b-outside`` when none applies.
    """
    if f.degenerate:
        return Verdict(LSPACE, "degenerate")
    return _verdict(f.b, f.ratios)


def _verdict(b: int, ratios: Sequence[Fraction]) -> Verdict:
    s = len(ratios)
    if s <= 2:
        if b + sum(ratios) != 0:
            return Verdict(LSPACE, "lens(e!=0)")
        return Verdict(NOT_LSPACE, "lens(e=0)")
    if -(s - 2) <= b <= -2:
        return Verdict(NOT_LSPACE, "branch(1)")
    if b == -1:
        w = _scan_witness(ratios[-3], ratios[-2], ratios[-1])
        if w is not None:
            return Verdict(NOT_LSPACE, "witness(2)", JNWitness(*w))
        return Verdict(LSPACE, "no-witness(2)")
    if b == -(s - 1):
        # complements of the ascending ratios, ascending: 1 - r_3, 1 - r_2, 1 - r_1
        w = _scan_witness(1 - ratios[2], 1 - ratios[1], 1 - ratios[0])
        if w is not None:
            return Verdict(NOT_LSPACE, "witness(3)", JNWitness(*w))
        return Verdict(LSPACE, "no-witness(3)")
    return Verdict(LSPACE, "b-outside")


@dataclass(frozen=True)
class SeifertFamily:
    """``Y_n = S^2(b; base..., (n u + w)/(n t + v))`` with ``t w - u v = ±1``."""

    b: int
    base_ratios: Tuple[Fraction, ...]
    t: int
    u: int
    v: int
    w: int

    def __post_init__(self):
        if abs(self.t * self.w - self.u * self.v) != 1:
            raise ValueError("family needs t*w - u*v = ±1")
        object.__setattr__(self, "base_ratios", tuple(Fraction(r) for r in self.base_ratios))

    def varying_ratio(self, n: int):
        den = n * self.t + self.v
        if den == 0:
            return INF
        return Fraction(n * self.u + self.w, den)

    def limit_ratio(self):
        return INF if self.t == 0 else Fraction(self.u, self.t)

    @property
    def total_fibers(self) -> int:
        """Exceptional base fibers plus the varying one."""
        return sum(1 for r in self.base_ratios if r.denominator != 1) + 1

    def __str__(self):
        base = ", ".join(str(r) for r in self.base_ratios)
        return f"{self.b}; {base}; {self.t},{self.u},{self.v},{self.w}"


def family_member(fam: SeifertFamily, n: int) -> SeifertForm:
    return normalize(fam.b, list(fam.base_ratios) + [fam.varying_ratio(n)])


def family_limit(fam: SeifertFamily) -> SeifertForm:
    return normalize(fam.b, list(fam.base_ratios) + [fam.limit_ratio()])


@dataclass
class TailReport:
    direction: int
    eventual: str
    threshold: Optional[int]
    stable: bool
    in_window: bool

    def as_dict(self):
        return {"direction": "+" if self.direction > 0 else "-",
                "eventual": self.eventual, "threshold": self.threshold,
                "stable": self.stable, "in_window": self.in_window}


@dataclass
class FamilyReport:
    window: Tuple[int, int]
    members: List[Tuple[int, Verdict]]
    limit: SeifertForm
    limit_verdict: Verdict
    tails: List[TailReport]
    total_fibers: int
    equivalence: Optional[bool] = None
    empirical: bool = True
    notes: List[str] = field(default_factory=list)

    def as_dict(self):
        return {
            "window": list(self.window),
            "members": [{"n": n, **v.as_dict()} for n, v in self.members],
            "limit": str(self.limit),
            "limit_verdict": self.limit_verdict.as_dict(),
            "tails": [t.as_dict() for t in self.tails],
            "total_fibers": self.total_fibers,
            "equivalence": self.equivalence,
            "empirical": self.empirical,
        }


def _far_index(fam: SeifertFamily, window: Tuple[int, int]) -> int:
    # Breakpoints of the verdict in the varying ratio are fractions a/k with
    # k bounded by the base denominators (for >= 4 fibers); once
    # |n t + v| exceeds that bound the member sits past every breakpoint.
    dens = [r.denominator for r in fam.base_ratios] + [abs(fam.t), abs(fam.u), 1]
    bound = (max(dens) + 2) ** 2 + abs(fam.v) + abs(fam.w) + abs(fam.b) + len(dens)
    return max(abs(window[0]), abs(window[1])) + bound + 1


def member_verdicts(fam: SeifertFamily, lo: int, hi: int) -> List[Tuple[int, Verdict]]:
    """``is_lspace(family_member(fam, n))`` for ``lo <= n <= hi``.

    The base fibers are normalized once and the varying fiber is inserted
    per member, which keeps long sweeps cheap.
    """
    base = normalize(fam.b, fam.base_ratios)
    out = []
    for n in range(lo, hi + 1):
        den = n * fam.t + fam.v
        if den == 0:
            out.append((n, Verdict(LSPACE, "degenerate")))
            continue
        num = n * fam.u + fam.w
        if den < 0:
            num, den = -num, -den
        whole, rem = divmod(num, den)
        ratios = list(base.ratios)
        if rem:
            insort(ratios, Fraction(rem, den))
        out.append((n, _verdict(base.b + whole, ratios)))
    return out


def classify_family(fam: SeifertFamily, window: Tuple[int, int], *, strict: bool = False,
                    members: Optional[List[Tuple[int, Verdict]]] = None) -> FamilyReport:
    """Verdict table over ``window`` plus tail and limit analysis.

    Each tail (n -> +inf, n -> -inf) gets an eventual verdict from a member
    far past the window, and a threshold: the first ``n`` (in the tail's
    direction) from which the window agrees with that verdict.  With four
    or more fibers the report also carries ``equivalence``: whether "some
    tail is eventually all L-space" matches the limit's verdict.  With
    ``strict=True`` a tail that overlaps the window but has not settled by
    the window's edge raises :class:`UnstableWindow`.  ``members`` may
    carry verdicts for the window computed elsewhere.
    """
    lo, hi = window
    if lo > hi:
        raise ValueError("empty window")
    if members is None:
        members = member_verdicts(fam, lo, hi)
    by_n: Dict[int, Verdict] = dict(members)
    limit = family_limit(fam)
    limit_verdict = is_lspace(limit)
    far = _far_index(fam, window)
    tails = []
    for direction in (1, -1):
        eventual = is_lspace(family_member(fam, direction * far)).verdict
        side = [n for n in range(lo, hi + 1) if n * direction > 0]
        if direction < 0:
            side.reverse()
        in_window = bool(side)
        threshold = None
        stable = False
        if side:
            if by_n[side[-1]].verdict == eventual:
                threshold = side[-1]
                for n in reversed(side):
                    if by_n[n].verdict != eventual:
                        break
                    threshold = n
                stable = True
        tails.append(TailReport(direction, eventual, threshold, stable, in_window))
    report = FamilyReport(window, members, limit, limit_verdict, tails, fam.total_fibers)
    if strict and not any(t.stable for t in tails if t.in_window):
        raise UnstableWindow(f"no tail of {window} settles for family {fam}")
    if fam.total_fibers >= 4:
        tail_lspace = any(t.eventual == LSPACE for t in tails)
        report.equivalence = tail_lspace == limit_verdict.is_lspace
        report.empirical = False
    return report
