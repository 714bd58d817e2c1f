"""Alexander polynomials of twist families.

A twist family ``K_n`` comes from a knot ``K`` and a disjoint unknot ``c``
with linking number ``omega``.  Everything here works from the
two-variable polynomial ``Delta_{K u c}(x, y)`` (``x`` for ``K``, ``y`` for
``c``): Torres-condition checks, the twisting substitution, genus lower
bounds, the three-way family classification, the surgery-slope window
obstruction, and the Alexander-polynomial certificates for L-space knots.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Tuple

from .errors import InvalidLinkData, NotACandidate, ZeroSpecialization
from .laurent import (
    NEG_INFINITY,
    KnotPoly1,
    LinkPoly2,
    breadth,
    cyclotomic_quotient,
    divide_exact,
    normalize_unit,
    specialize,
    substitute_monomial,
    unit_equivalent,
)

ONE = KnotPoly1.constant(1)


@dataclass(frozen=True)
class TorresReport:
    t1: bool
    t2: bool
    t3: bool
    parity: bool
    witness: Optional[Tuple[int, int]]
    value_at_one: int
    t2_components: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.t1 and self.t2 and self.t3 and self.parity

    def as_dict(self):
        return {
            "T1": self.t1,
            "T2": self.t2,
            "T3": self.t3,
            "parity": self.parity,
            "witness": list(self.witness) if self.witness else None,
            "value_at_one": self.value_at_one,
            "T2_components": dict(self.t2_components),
            "passed": self.passed,
        }


class CaseTag(Enum):
    Case1_LinkingZero = 1
    Case2_MeridianLike = 2
    Case3_GenusUnbounded = 3


@dataclass(frozen=True)
class FamilyCase:
    tag: CaseTag
    y_breadth: int
    slope: int
    constant: Optional[int] = None

    def as_dict(self):
        return {
            "case": self.tag.value,
            "tag": self.tag.name,
            "y_breadth": self.y_breadth,
            "slope": self.slope,
            "constant": self.constant,
        }


@dataclass(frozen=True)
class TwistFamilyData:
    delta2: LinkPoly2
    omega: int
    r0: Optional[Fraction] = None

    def validate(self, delta_c: KnotPoly1 = ONE) -> TorresReport:
        return torres_verify(self.delta2, self.omega, delta_c)


@dataclass(frozen=True)
class StaircaseHFK:
    generators: Tuple[Tuple[int, int], ...]

    def as_list(self):
        return [list(g) for g in self.generators]


def _orient(delta2: LinkPoly2, omega: int):
    """Reverse ``c`` when ``omega < 0`` so that formulas see ``omega >= 0``."""
    if omega < 0:
        return substitute_monomial(delta2, (1, 0), (0, -1)), -omega
    return delta2, omega


def _t1_witness(p: LinkPoly2):
    if p.is_zero():
        return (0, 0)
    xs = [e[0] for e in p.terms]
    ys = [e[1] for e in p.terms]
    m, n = min(xs) + max(xs), min(ys) + max(ys)
    if p.invert_variables().shift((m, n)) == p:
        return (m, n)
    return None


def torres_verify(delta2: LinkPoly2, omega: int, delta_c: KnotPoly1 = ONE,
                  delta_k: Optional[KnotPoly1] = None) -> TorresReport:
    """Check the Torres conditions and the breadth parity law.

    Failures are reported, never raised.  ``T2`` compares ``Delta(1, y)``
    against ``delta_c`` and, when given, ``Delta(t, 1)`` against ``delta_k``.
    """
    delta2, w = _orient(delta2, omega)
    witness = _t1_witness(delta2)
    quot = cyclotomic_quotient(w)
    comps = {"c": unit_equivalent(specialize(delta2, 0, 1), quot * delta_c)}
    if delta_k is not None:
        comps["K"] = unit_equivalent(specialize(delta2, 1, 0), quot * delta_k)
    value = sum(c for _, c in delta2.items())
    bx, by = breadth(delta2, "x"), breadth(delta2, "y")
    parity = (by is not NEG_INFINITY and bx is not NEG_INFINITY
              and (bx - (w - 1)) % 2 == 0 and (by - (w - 1)) % 2 == 0)
    return TorresReport(
        t1=witness is not None,
        t2=all(comps.values()),
        t3=abs(value) == w,
        parity=parity,
        witness=witness,
        value_at_one=value,
        t2_components=comps,
    )


def _require_valid(delta2: LinkPoly2, omega: int) -> TorresReport:
    rep = torres_verify(delta2, omega)
    if not rep.passed:
        failed = [k for k in ("t1", "t2", "t3", "parity") if not getattr(rep, k)]
        raise InvalidLinkData(f"link polynomial fails Torres checks: {', '.join(failed)}")
    return rep


def twist_link(delta2: LinkPoly2, omega: int, n: int) -> LinkPoly2:
    """``Delta_{K_n u c_n}(x, y) = Delta_{K u c}(x, x^(-n omega) y)``."""
    return substitute_monomial(delta2, (1, 0), (-n * omega, 1))


def twisted_specialization(delta2: LinkPoly2, omega: int, n: int) -> KnotPoly1:
    """``Delta_{K u c}(t, t^(-n|omega|))`` in the orientation with omega >= 0."""
    delta2, w = _orient(delta2, omega)
    return specialize(delta2, 1, -n * w)


def twist_knot(delta2: LinkPoly2, omega: int, n: int) -> KnotPoly1:
    """Alexander polynomial of ``K_n``, as its symmetric representative.

    Divides ``Delta(t, t^(-n omega))`` by ``(t^omega - 1)/(t - 1)``.  Raises
    :class:`InexactDivision` when the input is not a genuine link polynomial
    for this ``omega``.
    """
    delta2, w = _orient(delta2, omega)
    if w < 1:
        raise InvalidLinkData("twist_knot needs |omega| >= 1")
    q = divide_exact(specialize(delta2, 1, -n * w), cyclotomic_quotient(w))
    if q.is_zero():
        return q
    if breadth(q) % 2:
        # odd breadth: no symmetric representative exists
        return normalize_unit(q)
    return q.symmetrize()


def genus_lower_bound(delta2: LinkPoly2, omega: int, n: int) -> int:
    """Lower bound ``ceil((br Delta(t, t^(-n omega)) - (omega - 1)) / 2)``, floored at 0."""
    delta2, w = _orient(delta2, omega)
    if w < 1:
        raise InvalidLinkData("genus_lower_bound needs |omega| >= 1")
    s = specialize(delta2, 1, -n * w)
    if s.is_zero():
        raise ZeroSpecialization(f"Delta(t, t^{-n * w}) vanishes")
    return max(0, -((-(breadth(s) - (w - 1))) // 2))


def _asymptotic_constant(delta2: LinkPoly2) -> int:
    # br(Delta(t, t^-n omega)) = n omega l + C for large n > 0, where the
    # y-extreme slices a_0 (lowest y power) and a_l (highest) dominate.
    slices = delta2.y_slices()
    lo, hi = min(slices), max(slices)
    return slices[lo].degree() - slices[hi].valuation()


def classify_family(delta2: LinkPoly2, omega: int) -> FamilyCase:
    """Which of the three twist-family behaviours the polynomial forces."""
    delta2, w = _orient(delta2, omega)
    _require_valid(delta2, w)
    by = breadth(delta2, "y")
    if w == 0:
        return FamilyCase(CaseTag.Case1_LinkingZero, by, 0)
    if w == 1 and by == 0:
        return FamilyCase(CaseTag.Case2_MeridianLike, 0, 0, _asymptotic_constant(delta2))
    return FamilyCase(CaseTag.Case3_GenusUnbounded, by, w * by, _asymptotic_constant(delta2))


@dataclass(frozen=True)
class WindowReport:
    members: Tuple[int, ...]
    unbounded: bool
    case: FamilyCase

    def as_dict(self):
        return {"members": list(self.members), "unbounded": self.unbounded,
                "case": self.case.tag.value}


def _window_ok(n: int, delta2: LinkPoly2, w: int, r0: Fraction) -> bool:
    r = r0 + n * w * w
    br = breadth(specialize(delta2, 1, -n * w))
    if br is NEG_INFINITY:
        return True
    need = br - w
    # positive L-space surgery on K_n, or the mirrored family
    return r >= need or -r >= need


def lspace_window(delta2: LinkPoly2, omega: int, r0, window: Tuple[int, int]) -> WindowReport:
    """Twists ``n`` in ``window`` not excluded from carrying an L-space surgery.

    Uses the necessary inequality ``|r_n| >= br(Delta(t, t^(-n omega))) - omega``
    with ``r_n = r0 + n omega^2`` (the negative side by mirroring).  Case 1
    and Case 2 families are never obstructed: the whole window comes back
    with ``unbounded`` set.
    """
    n_min, n_max = window
    if n_min > n_max:
        raise ValueError("empty window")
    delta2, w = _orient(delta2, omega)
    case = classify_family(delta2, w)
    r0 = Fraction(r0)
    if case.tag is not CaseTag.Case3_GenusUnbounded:
        return WindowReport(tuple(range(n_min, n_max + 1)), True, case)
    members = tuple(n for n in range(n_min, n_max + 1) if _window_ok(n, delta2, w, r0))
    return WindowReport(members, False, case)


def _symmetric_form(delta: KnotPoly1) -> Optional[KnotPoly1]:
    if delta.is_zero() or breadth(delta) % 2:
        return None
    s = delta.symmetrize()
    return s if s.invert_variables() == s else None


def os_candidate_check(delta: KnotPoly1) -> bool:
    """Whether ``delta`` has the shape forced on L-space knot polynomials.

    Symmetric, nonzero coefficients all ``±1`` alternating in sign with
    ``+1`` at both ends, and value 1 at ``t = 1``.
    """
    s = _symmetric_form(delta)
    if s is None:
        return False
    coeffs = [s.coeff(e) for e in sorted(s.terms, reverse=True)]
    if any(abs(c) != 1 for c in coeffs):
        return False
    if coeffs[0] != 1 or coeffs[-1] != 1:
        return False
    if any(a == b for a, b in zip(coeffs, coeffs[1:])):
        return False
    return sum(coeffs) == 1


def enumerate_candidates(genus: int) -> List[KnotPoly1]:
    """All symmetric polynomials of breadth ``2*genus`` passing :func:`os_candidate_check`.

    Searches over symmetric exponent supports; ordered by the descending
    exponent tuple, largest first.
    """
    if genus < 0:
        raise ValueError("genus must be non-negative")
    if genus == 0:
        return [ONE]
    found = []
    inner = range(-genus + 1, genus)
    for k in range(0, len(inner) + 1):
        for chosen in combinations(inner, k):
            support = sorted((genus, -genus) + chosen, reverse=True)
            p = KnotPoly1({e: (-1) ** i for i, e in enumerate(support)})
            if os_candidate_check(p):
                found.append(p)
    found.sort(key=lambda p: sorted(p.terms, reverse=True), reverse=True)
    return found


def staircase(delta: KnotPoly1) -> StaircaseHFK:
    """Knot Floer homology determined by an L-space knot polynomial.

    For ``delta = sum_k (-1)^k t^{n_k}`` with ``n_0 > n_1 > ...``, the
    generator in Alexander grading ``n_k`` sits in Maslov grading
    ``d_k``: ``d_0 = 0``; across a ``+ -`` step ``d_k = d_{k-1} - 2(n_{k-1} - n_k) + 1``;
    across a ``- +`` step ``d_k = d_{k-1} - 1``.
    """
    if not os_candidate_check(delta):
        raise NotACandidate(f"{delta} is not an L-space knot polynomial")
    s = delta.symmetrize()
    exps = sorted(s.terms, reverse=True)
    gens = [(exps[0], 0)]
    for k in range(1, len(exps)):
        prev = gens[-1][1]
        if k % 2:
            m = prev - 2 * (exps[k - 1] - exps[k]) + 1
        else:
            m = prev - 1
        gens.append((exps[k], m))
    return StaircaseHFK(tuple(gens))


@dataclass(frozen=True)
class SlopeGenusReport:
    slope_at_least_2g_minus_1: bool
    genus_at_most_half_one_plus_abs_slope: bool

    def as_dict(self):
        return {"r_ge_2g_minus_1": self.slope_at_least_2g_minus_1,
                "g_le_half_1_plus_abs_r": self.genus_at_most_half_one_plus_abs_slope}


def slope_genus_bounds(g: int, r) -> SlopeGenusReport:
    if g < 0:
        raise ValueError("genus must be non-negative")
    r = Fraction(r)
    return SlopeGenusReport(r >= 2 * g - 1, 2 * g <= 1 + abs(r))
