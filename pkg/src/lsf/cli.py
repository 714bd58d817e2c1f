"""Command-line interface: ``lsf <group> <command> [options]``.

Exit codes: 0 on success, 2 for malformed input, 3 when an input is well
formed but violates a precondition (for example a two-variable polynomial
that fails the Torres conditions).  JSON output is compact and
deterministic; ``--format table`` is for reading.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from fractions import Fraction
from typing import Any, Iterable, List, Sequence

from . import braid, homology, seifert, twistalex
from .errors import InputError, LSFError, PreconditionError
from .laurent import KnotPoly1, LinkPoly2

# -- input parsing ---------------------------------------------------------


def read_arg(text: str) -> str:
    """``@path`` reads the file; anything else is taken literally."""
    if text.startswith("@"):
        try:
            with open(text[1:], encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {text[1:]}: {exc.strerror}") from None
    return text


def _no_duplicates(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise InputError(f"duplicate key {k!r}")
        out[k] = v
    return out


def _load_json(text: str, what: str):
    try:
        return json.loads(read_arg(text), object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{where}: expected an integer, got {value!r}")
    return value


def _terms(data, keys: Sequence[str], what: str) -> dict:
    if not isinstance(data, dict) or set(data) != {"terms"} or not isinstance(data["terms"], list):
        raise InputError(f'{what}: expected {{"terms": [...]}}')
    terms = {}
    for i, term in enumerate(data["terms"]):
        where = f"{what}: term {i}"
        if not isinstance(term, dict) or set(term) != set(keys) | {"c"}:
            raise InputError(f"{where}: expected keys {sorted(set(keys) | {'c'})}")
        exp = tuple(_int(term[k], f"{where} field {k!r}") for k in keys)
        c = _int(term["c"], f"{where} field 'c'")
        if c == 0:
            raise InputError(f"{where}: coefficient must be nonzero")
        if exp in terms:
            raise InputError(f"{where}: repeated monomial {dict(zip(keys, exp))}")
        terms[exp] = c
    return terms


def parse_poly2(text: str) -> LinkPoly2:
    terms = _terms(_load_json(text, "poly2"), ("x", "y"), "poly2")
    return LinkPoly2(terms)


def parse_poly1(text: str) -> KnotPoly1:
    terms = _terms(_load_json(text, "poly"), ("e",), "poly")
    return KnotPoly1({e[0]: c for e, c in terms.items()})


def parse_rational(text: str, where: str = "rational") -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"{where}: bad rational {text.strip()!r}") from None


def _parse_int(text: str, where: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise InputError(f"{where}: bad integer {text.strip()!r}") from None


def _ratio_list(text: str, where: str) -> list:
    out = []
    for i, item in enumerate(x for x in text.split(",") if x.strip()):
        if item.strip().lower() == seifert.INF:
            out.append(seifert.INF)
        else:
            out.append(parse_rational(item, f"{where} entry {i}"))
    return out


def parse_form(text: str) -> seifert.SeifertForm:
    """``"b; r1,r2,..."`` with ``inf`` for a degenerate fiber."""
    parts = read_arg(text).split(";")
    if len(parts) != 2:
        raise InputError('form: expected "b; r1,r2,..."')
    b = _parse_int(parts[0], "form field b")
    return seifert.normalize(b, _ratio_list(parts[1], "form ratios"))


def parse_family(text: str) -> seifert.SeifertFamily:
    """``"b; r1,...,r_{s-1}; t,u,v,w"``."""
    parts = read_arg(text).split(";")
    if len(parts) != 3:
        raise InputError('family: expected "b; r1,...; t,u,v,w"')
    b = _parse_int(parts[0], "family field b")
    base = _ratio_list(parts[1], "family ratios")
    if seifert.INF in base:
        raise InputError("family ratios: base fibers must be finite")
    coeffs = [_parse_int(x, "family field t,u,v,w") for x in parts[2].split(",")]
    if len(coeffs) != 4:
        raise InputError("family: expected four integers t,u,v,w")
    try:
        return seifert.SeifertFamily(b, tuple(base), *coeffs)
    except ValueError as exc:
        raise InputError(f"family: {exc}") from None


def parse_word(text: str, strands: int | None) -> braid.BraidWord:
    raw = read_arg(text).replace(",", " ").split()
    letters = [_parse_int(x, "word letter") for x in raw]
    if strands is None:
        strands = max([abs(x) for x in letters], default=0) + 1
    try:
        return braid.BraidWord(strands, tuple(letters))
    except ValueError as exc:
        raise InputError(f"word: {exc}") from None


def parse_matrix(text: str) -> List[List[int]]:
    data = _load_json(text, "matrix")
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise InputError("matrix: expected a list of rows")
    rows = [[_int(v, f"matrix row {i}") for v in r] for i, r in enumerate(data)]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise InputError("matrix: rows have different lengths")
    return rows


def parse_surgery(text: str) -> homology.SurgeryDescription:
    data = _load_json(text, "surgery")
    if not isinstance(data, dict) or set(data) != {"linking", "framings"}:
        raise InputError('surgery: expected keys "linking" and "framings"')
    linking = parse_matrix(json.dumps(data["linking"]))
    if not isinstance(data["framings"], list):
        raise InputError("surgery: framings must be a list")
    framings = [parse_rational(str(f), f"surgery framing {i}") for i, f in enumerate(data["framings"])]
    try:
        return homology.SurgeryDescription.of(linking, framings)
    except ValueError as exc:
        raise InputError(f"surgery: {exc}") from None


# -- serialization ---------------------------------------------------------


def poly1_json(p: KnotPoly1) -> dict:
    return {"terms": [{"e": e, "c": c} for e, c in sorted(p.items())]}


def poly2_json(p: LinkPoly2) -> dict:
    return {"terms": [{"x": i, "y": j, "c": c} for (i, j), c in sorted(p.items())]}


def word_json(w: braid.BraidWord) -> dict:
    return {"strands": w.strands, "letters": list(w.letters)}


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _cell(v) -> str:
    if isinstance(v, dict) and set(v) == {"terms"}:
        return _poly_text(v)
    if isinstance(v, (dict, list)):
        return _dumps(v)
    return str(v)


def _poly_text(d: dict) -> str:
    terms = d["terms"]
    if not terms:
        return "0"
    if "e" in terms[0]:
        return str(KnotPoly1({t["e"]: t["c"] for t in terms}))
    return str(LinkPoly2({(t["x"], t["y"]): t["c"] for t in terms}))


def emit(obj: Any, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(_dumps(obj) + "\n")
        return
    if isinstance(obj, dict):
        width = max((len(k) for k in obj), default=0)
        for k, v in obj.items():
            out.write(f"{k.ljust(width)}  {_cell(v)}\n")
    elif isinstance(obj, list) and obj and all(isinstance(r, dict) for r in obj):
        keys = list(obj[0])
        rows = [[_cell(r.get(k, "")) for k in keys] for r in obj]
        widths = [max(len(k), *(len(r[i]) for r in rows)) for i, k in enumerate(keys)]
        out.write("  ".join(k.ljust(w) for k, w in zip(keys, widths)).rstrip() + "\n")
        for r in rows:
            out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")
    else:
        out.write(_cell(obj) + "\n")


# -- parallel helpers (module level so worker processes can import them) ----


def _chunks(lo: int, hi: int, parts: int):
    size = max(1, -(-(hi - lo + 1) // parts))
    return [(a, min(hi, a + size - 1)) for a in range(lo, hi + 1, size)]


def _family_chunk(args):
    fam, lo, hi = args
    return seifert.member_verdicts(fam, lo, hi)


def _window_chunk(args):
    delta2, omega, r0, lo, hi = args
    return twistalex.lspace_window(delta2, omega, r0, (lo, hi))


@contextmanager
def task_pool(jobs: int):
    if jobs <= 1:
        yield map
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield pool.map


def default_jobs() -> int:
    raw = os.environ.get("LSF_JOBS", "1")
    try:
        jobs = int(raw)
    except ValueError:
        raise InputError(f"LSF_JOBS: bad integer {raw!r}") from None
    if jobs < 1:
        raise InputError("LSF_JOBS must be at least 1")
    return jobs


# -- commands ----------------------------------------------------------------


def _window(args) -> tuple:
    lo, hi = args.window
    if lo > hi:
        raise InputError(f"window: empty range {lo}..{hi}")
    return lo, hi


def cmd_seifert_lspace(args):
    return seifert.is_lspace(parse_form(args.form)).as_dict()


def cmd_seifert_h1(args):
    f = parse_form(args.form)
    return {"form": str(f), "order": seifert.h1_order(f)}


def cmd_seifert_family(args):
    fam = parse_family(args.family)
    lo, hi = _window(args)
    with task_pool(args.jobs) as mapper:
        pieces = mapper(_family_chunk, [(fam, a, b) for a, b in _chunks(lo, hi, 4 * args.jobs)])
        members = [m for piece in pieces for m in piece]
    report = seifert.classify_family(fam, (lo, hi), strict=args.strict, members=members)
    out = report.as_dict()
    if args.format == "table":
        out["members"] = f"{sum(1 for _, v in report.members if v.is_lspace)} of {len(report.members)} LSpace"
    return out


def _link_input(args):
    return parse_poly2(args.poly2), args.omega


def cmd_alex_verify(args):
    delta2, omega = _link_input(args)
    dc = parse_poly1(args.delta_c) if args.delta_c else KnotPoly1.constant(1)
    dk = parse_poly1(args.delta_k) if args.delta_k else None
    report = twistalex.torres_verify(delta2, omega, dc, dk)
    args.exit_code = 0 if report.passed else 3
    return report.as_dict()


def cmd_alex_twist(args):
    delta2, omega = _link_input(args)
    return {"n": args.n,
            "link": poly2_json(twistalex.twist_link(delta2, omega, args.n)),
            "knot": poly1_json(twistalex.twist_knot(delta2, omega, args.n))}


def cmd_alex_classify(args):
    delta2, omega = _link_input(args)
    case = twistalex.classify_family(delta2, omega)
    out = {"case": case.tag.value}
    if case.slope is not None:
        out["slope"] = case.slope
    if args.verbose:
        out.update({"name": case.tag.name, "y_breadth": case.y_breadth, "constant": case.constant})
    return out


def cmd_alex_bound(args):
    delta2, omega = _link_input(args)
    if args.range:
        lo, hi = args.range
        return [{"n": n, "bound": twistalex.genus_lower_bound(delta2, omega, n)} for n in range(lo, hi + 1)]
    return {"n": args.n, "bound": twistalex.genus_lower_bound(delta2, omega, args.n)}


def cmd_alex_window(args):
    delta2, omega = _link_input(args)
    r0 = parse_rational(args.r0, "r0")
    lo, hi = _window(args)
    twistalex.torres_verify(delta2, omega)  # fail fast before spawning workers
    with task_pool(args.jobs) as mapper:
        parts = list(mapper(_window_chunk, [(delta2, omega, r0, a, b)
                                           for a, b in _chunks(lo, hi, 4 * args.jobs)]))
    members = [n for p in parts for n in p.members]
    return {"members": members, "unbounded": parts[0].unbounded, "case": parts[0].case.tag.value}


def cmd_alex_cert(args):
    p = parse_poly1(args.poly)
    return {"candidate": twistalex.os_candidate_check(p)}


def cmd_alex_staircase(args):
    st = twistalex.staircase(parse_poly1(args.poly))
    return {"generators": [list(g) for g in st.generators]}


def cmd_alex_enumerate(args):
    return [poly1_json(p) for p in twistalex.enumerate_candidates(args.genus)]


def cmd_braid_genus(args):
    return {"genus": braid.genus_positive(parse_word(args.word, args.strands))}


def cmd_braid_reduce(args):
    r = braid.reduce(parse_word(args.word, args.strands))
    out = {"result": r.kind}
    if r.word is not None:
        out["word"] = word_json(r.word)
    return out


def cmd_braid_alexander(args):
    return {"alexander": poly1_json(braid.burau_alexander(parse_word(args.word, args.strands)))}


def cmd_braid_census(args):
    if args.genus < 0:
        raise InputError("genus must be non-negative")
    with task_pool(args.jobs) as mapper:
        rows = []
        for entry in braid.iter_genus(args.genus, args.jobs, mapper):
            if args.format == "json":
                emit(entry.as_dict(), "json")
                sys.stdout.flush()
            else:
                rows.append({"strands": entry.word.strands, "alexander": str(entry.alexander),
                             "word": " ".join(map(str, entry.word.letters))})
    if args.format == "table":
        emit(rows, "table")
    return None


def _sign(w: braid.BraidWord) -> str:
    if not w.letters:
        return "trivial"
    return "positive" if w.is_positive else "negative" if w.is_negative else "mixed"


def cmd_braid_torus(args):
    try:
        w = braid.torus_braid(args.p, args.q)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return {"word": word_json(w), "sign": _sign(w)}


def cmd_braid_twisted_torus(args):
    try:
        w = braid.twisted_torus_braid(args.p, args.q, args.n)
    except ValueError as exc:
        if isinstance(exc, LSFError):
            raise
        raise InputError(str(exc)) from None
    return {"word": word_json(w), "sign": _sign(w), "components": braid.closure_components(w)}


def cmd_homology_snf(args):
    U, D, V = homology.smith_normal_form(parse_matrix(args.matrix))
    return {"U": U, "D": D, "V": V}


def cmd_homology_h1(args):
    order, factors = homology.h1_from_presentation(parse_matrix(args.matrix))
    return {"order": order, "factors": factors}


def cmd_homology_surgery(args):
    s = parse_surgery(args.surgery)
    return {"order": homology.surgery_h1(s)}


def cmd_homology_family_det(args):
    vals = (args.a11, args.a12, args.a21, args.p, args.q)
    try:
        if args.range:
            lo, hi = args.range
            return [{"n": n, "det": homology.pseudoseiferter_det(*vals, n)} for n in range(lo, hi + 1)]
        return {"n": args.n, "det": homology.pseudoseiferter_det(*vals, args.n)}
    except ValueError as exc:
        if isinstance(exc, LSFError):
            raise
        raise PreconditionError(str(exc)) from None


# -- argument parser -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--jobs", type=int, default=None,
                        help="worker processes (default: $LSF_JOBS or 1)")

    parser = argparse.ArgumentParser(prog="lsf", description="L-space knots, twist families and Seifert surgeries.")
    groups = parser.add_subparsers(dest="group", required=True)

    def leaf(sub, name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    def link_opts(p):
        p.add_argument("--poly2", required=True, help="two-variable polynomial JSON or @file")
        p.add_argument("--omega", type=int, required=True, help="linking number of K and c")

    # seifert
    sf = groups.add_parser("seifert", help="Seifert fibered spaces").add_subparsers(dest="cmd", required=True)
    p = leaf(sf, "lspace", cmd_seifert_lspace, "L-space verdict with certificate")
    p.add_argument("--form", required=True, help='"b; r1,r2,..." (inf for a degenerate fiber)')
    p = leaf(sf, "h1", cmd_seifert_h1, "order of first homology")
    p.add_argument("--form", required=True)
    p = leaf(sf, "family", cmd_seifert_family, "verdicts over a window, tails and limit")
    p.add_argument("--family", required=True, help='"b; r1,...; t,u,v,w"')
    p.add_argument("--window", type=int, nargs=2, metavar=("LO", "HI"), required=True)
    p.add_argument("--strict", action="store_true", help="fail if no tail settles inside the window")

    # alex
    al = groups.add_parser("alex", help="Alexander polynomials of twist families").add_subparsers(dest="cmd", required=True)
    p = leaf(al, "verify", cmd_alex_verify, "Torres conditions and parity")
    link_opts(p)
    p.add_argument("--delta-c", help="Alexander polynomial of c (default 1)")
    p.add_argument("--delta-k", help="Alexander polynomial of K, to check that specialization too")
    p = leaf(al, "twist", cmd_alex_twist, "twisted link and knot polynomials")
    link_opts(p)
    p.add_argument("--n", type=int, required=True)
    p = leaf(al, "classify", cmd_alex_classify, "family case and genus slope")
    link_opts(p)
    p.add_argument("--verbose", action="store_true")
    p = leaf(al, "bound", cmd_alex_bound, "genus lower bound for K_n")
    link_opts(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--range", type=int, nargs=2, metavar=("LO", "HI"))
    p = leaf(al, "window", cmd_alex_window, "twists not excluded from L-space surgeries")
    link_opts(p)
    p.add_argument("--r0", required=True, help="surgery slope on K_0")
    p.add_argument("--window", type=int, nargs=2, metavar=("LO", "HI"), required=True)
    p = leaf(al, "cert", cmd_alex_cert, "L-space knot candidate check")
    p.add_argument("--poly", required=True, help="one-variable polynomial JSON or @file")
    p = leaf(al, "staircase", cmd_alex_staircase, "knot Floer generators of a candidate")
    p.add_argument("--poly", required=True)
    p = leaf(al, "enumerate", cmd_alex_enumerate, "all candidate polynomials of a genus")
    p.add_argument("--genus", type=int, required=True)

    # braid
    br = groups.add_parser("braid", help="braid words and closures").add_subparsers(dest="cmd", required=True)
    for name, func, text in (("genus", cmd_braid_genus, "genus of a positive braid knot"),
                             ("reduce", cmd_braid_reduce, "destabilize a positive word"),
                             ("alexander", cmd_braid_alexander, "Alexander polynomial of the closure")):
        p = leaf(br, name, func, text)
        p.add_argument("--word", required=True, help='signed generator indices, e.g. "1 1 1"')
        p.add_argument("--strands", type=int)
    p = leaf(br, "census", cmd_braid_census, "positive braid knots of a genus (JSON lines)")
    p.add_argument("--genus", type=int, required=True)
    p = leaf(br, "torus", cmd_braid_torus, "torus knot braid")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p = leaf(br, "twisted-torus", cmd_braid_twisted_torus, "T(p,q) twisted n times along c+")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    # homology
    ho = groups.add_parser("homology", help="integer homology computations").add_subparsers(dest="cmd", required=True)
    p = leaf(ho, "snf", cmd_homology_snf, "Smith normal form U m V = D")
    p.add_argument("--matrix", required=True, help="JSON list of rows or @file")
    p = leaf(ho, "h1", cmd_homology_h1, "group presented by a relation matrix")
    p.add_argument("--matrix", required=True)
    p = leaf(ho, "surgery", cmd_homology_surgery, "first homology order of a surgery")
    p.add_argument("--surgery", required=True, help='JSON {"linking": [[...]], "framings": ["p/q", ...]} or @file')
    p = leaf(ho, "family-det", cmd_homology_family_det, "presentation determinant of a twisted family")
    for name in ("a11", "a12", "a21", "p", "q"):
        p.add_argument(f"--{name}", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--range", type=int, nargs=2, metavar=("LO", "HI"))
    return parser


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(None if argv is None else list(argv))
    try:
        if args.jobs is None:
            args.jobs = default_jobs()
        elif args.jobs < 1:
            raise InputError("--jobs must be at least 1")
        args.exit_code = 0
        result = args.func(args)
        if result is not None:
            emit(result, args.format)
        return args.exit_code
    except InputError as exc:
        print(f"lsf: input error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"lsf: precondition failed: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ZeroDivisionError) as exc:
        print(f"lsf: input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
