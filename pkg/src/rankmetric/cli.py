"""Command-line front end.

JSON reports go to stdout, a short human summary to stderr.  Exit codes:
0 success, 2 parse error, 3 enumeration cap exceeded, 4 hypothesis violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Sequence

from . import code as codes
from .code import RankCode
from .errors import (
    BOutOfRange,
    DependentEvaluationPoints,
    DimensionTooLarge,
    EnumerationTooLarge,
    HypothesisViolated,
    InvalidCode,
    NotABasis,
    NotPrime,
    ParseError,
    RankMetricError,
)
from .field import FieldTower, make_field, prime_power
from .linalg import DEFAULT_ENUMERATION_CAP
from .qcombinat import verify_factorization
from .rmcfile import CodeFile, load_code
from .search import search
from .steiner import feasibility, min_weight_supports, verify_steiner
from .supports import generalized_weights

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_HYPOTHESIS = 4


class Hypothesis(Exception):
    """Raised by a command to exit with the hypothesis-violation code."""


def _emit(obj: Any) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


def parse_q(spec: str) -> tuple[int, int]:
    """``"P^E"`` or a prime power ``"Q"`` -> ``(p, e)``."""
    s = spec.strip()
    try:
        if "^" in s:
            p_str, e_str = s.split("^", 1)
            p, e = int(p_str), int(e_str)
            if prime_power(p) != (p, 1) or e < 1:
                raise NotPrime(spec)
            return p, e
        return prime_power(int(s))
    except (ValueError, NotPrime) as exc:
        raise ParseError(f"bad q specification {spec!r}") from exc


def _parameters(C: RankCode) -> dict:
    t = C.tower
    return {"p": t.p, "e": t.e, "q": t.q, "m": t.m, "n": C.n, "k": C.k, "modulus": t.modulus_str()}


def _summary(C: RankCode, cap: int, grw: bool) -> tuple[dict, codes.WeightDistribution]:
    wd = codes.weight_distribution(C, cap)
    out = {
        "n": C.n,
        "k": C.k,
        "weight_distribution": wd.as_list(),
        "d": wd.min_distance,
        "defect": codes.defect(C, wd),
        "generalized_weights": list(generalized_weights(C, cap).values) if grw else None,
    }
    return out, wd


def analyze(C: RankCode, cap: int = codes.DEFAULT_CODEWORD_CAP, grw: bool = False, steiner: bool = False) -> dict:
    """The full ``analyze`` report for a code."""
    start = time.perf_counter()
    if C.allow_long:
        raise Hypothesis("classification requires n <= m")
    mine, wd = _summary(C, cap, grw)
    D = codes.dual(C)
    theirs, _ = _summary(D, cap, grw)
    report: dict[str, Any] = {
        "parameters": _parameters(C),
        "code": mine,
        "dual": theirs,
        "classification": codes.classify_defects(mine["defect"], theirs["defect"]),
        "A_d_plus_1": wd[wd.min_distance + 1],
        "steiner": None,
    }
    if steiner:
        blocks = min_weight_supports(C, cap)
        report["steiner"] = verify_steiner(blocks).to_json()
    report["timing_seconds"] = round(time.perf_counter() - start, 6)
    return report


def cmd_analyze(args: argparse.Namespace) -> int:
    C = load_code(args.file)
    report = analyze(C, args.cap, args.grw, args.steiner)
    _emit(report)
    c, d = report["code"], report["dual"]
    _say(
        f"[{C.n},{C.k},{c['d']}] over F_{C.tower.order}: A = {c['weight_distribution']}, "
        f"dual A = {d['weight_distribution']}, defects ({c['defect']},{d['defect']}) -> {report['classification']}"
    )
    return EXIT_OK


def steiner_report(C: RankCode, t: int, cap: int = codes.DEFAULT_CODEWORD_CAP) -> dict:
    wd = codes.weight_distribution(C, cap)
    d = wd.min_distance
    warnings = []
    if wd[d + 1]:
        warnings.append(f"A_{d + 1} = {wd[d + 1]} != 0: design theorem hypotheses fail")
    def_c = codes.defect(C, wd)
    def_d = codes.defect(codes.dual(C), cap=cap)
    if (def_c, def_d) != (1, 1):
        warnings.append(f"defects are ({def_c},{def_d}), not (1,1): code is not dually AMRD")
    if (C.n, C.k) != (2 * d, d):
        warnings.append(f"parameters [{C.n},{C.k},{d}] are not of the form [2d,d,d]")
    if t == 0:
        warnings.append("t = 0 is degenerate: the zero space lies in every block")
    design = min_weight_supports(C, cap)
    rep = verify_steiner(design, t, DEFAULT_ENUMERATION_CAP)
    return {
        "parameters": _parameters(C),
        "d": d,
        "A_d": wd[d],
        "A_d_plus_1": wd[d + 1],
        "blocks": [b.to_json() for b in design.blocks],
        "report": rep.to_json(),
        "warnings": warnings,
    }


def cmd_steiner(args: argparse.Namespace) -> int:
    C = load_code(args.file)
    out = steiner_report(C, args.t, args.cap)
    for w in out["warnings"]:
        _say(f"warning: {w}")
    _emit(out)
    rep = out["report"]
    _say(
        f"{rep['actual_block_count']} blocks of dim {rep['k']} in F_{rep['q']}^{rep['n']}, t={rep['t']}: "
        f"{'Steiner system' if rep['is_steiner'] else 'not a Steiner system'}"
    )
    return EXIT_OK


def cmd_feasibility(args: argparse.Namespace) -> int:
    if args.d < 2:
        raise Hypothesis("d must be at least 2")
    try:
        prime_power(args.q)
    except NotPrime as exc:
        raise ParseError(str(exc)) from exc
    rep = feasibility(args.d, args.q)
    _emit(rep.to_json())
    _say(f"d={args.d}, q={args.q}: " + ("no obstruction" if rep.verdict else "; ".join(rep.reasons)))
    return EXIT_OK


def _tower(q_spec: str, m: int, modulus: str | None) -> FieldTower:
    p, e = parse_q(q_spec)
    try:
        return make_field(p, e, m, modulus)
    except RankMetricError as exc:
        raise ParseError(str(exc)) from exc


def cmd_gabidulin(args: argparse.Namespace) -> int:
    tw = _tower(args.q, args.m, args.modulus)
    if args.points:
        points = [tw.parse(s) for s in args.points]
        if len(points) != args.n:
            raise ParseError(f"{len(points)} points given for n={args.n}")
    else:
        if args.n > tw.m:
            raise Hypothesis(f"n={args.n} exceeds m={tw.m}")
        points = list(tw.default_basis[: args.n])
    try:
        C = codes.gabidulin(tw, points, args.k)
    except (DependentEvaluationPoints, DimensionTooLarge, InvalidCode) as exc:
        raise Hypothesis(str(exc)) from exc
    text = CodeFile.from_code(C, notation="gabidulin").dumps()
    with open(args.output, "w") as fh:
        fh.write(text)
    _say(f"wrote Gabidulin [{C.n},{C.k}] code over F_{tw.order} to {args.output}")
    return EXIT_OK


def gauss_report(a: int, b: int, q: int) -> dict:
    cert = verify_factorization(a, b, q)
    return {
        "a": a,
        "b": b,
        "q": q,
        "value": cert.gaussian,
        "j_set": list(cert.j_set),
        "phi_values": list(cert.phi_values),
        "product": cert.product,
        "holds": cert.holds,
        "text": cert.render(),
    }


def cmd_gauss(args: argparse.Namespace) -> int:
    rep = gauss_report(args.a, args.b, args.q)
    if args.json:
        _emit(rep)
    else:
        print(rep["text"])
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    tw = _tower(args.q, args.m, args.modulus)
    feas = feasibility(args.d, tw.q)
    if not feas.verdict:
        msg = f"d={args.d}, q={tw.q} is infeasible: " + "; ".join(feas.reasons)
        _say(f"warning: {msg}")
        if not args.force:
            _say("refusing to search; pass --force to override")
            return EXIT_HYPOTHESIS
    if 2 * args.d > tw.m:
        raise Hypothesis(f"n=2d={2 * args.d} exceeds m={tw.m}")
    res = search(args.d, tw, args.trials, args.seed, args.cap)
    out = {"parameters": {"p": tw.p, "e": tw.e, "q": tw.q, "m": tw.m, "modulus": tw.modulus_str()}}
    out.update(res.to_json())
    _emit(out)
    _say(f"{len(res.hits)} distinct hit(s) in {args.trials} trials (seed {args.seed})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rankmetric", description="Rank-metric code invariants and q-Steiner checks.")
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="weight distributions, defects and classification of a code")
    a.add_argument("file")
    a.add_argument("--grw", action="store_true", help="also compute generalized rank weights")
    a.add_argument("--steiner", action="store_true", help="also verify minimum-weight supports with t = d-1")
    a.add_argument("--cap", type=int, default=codes.DEFAULT_CODEWORD_CAP)
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("steiner", help="extract minimum-weight supports and test the Steiner property")
    s.add_argument("file")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--cap", type=int, default=codes.DEFAULT_CODEWORD_CAP)
    s.set_defaults(func=cmd_steiner)

    f = sub.add_parser("feasibility", help="necessary conditions for a [2d,d,d] dually AMRD code with A_{d+1}=0")
    f.add_argument("--d", type=int, required=True)
    f.add_argument("--q", type=int, required=True)
    f.set_defaults(func=cmd_feasibility)

    g = sub.add_parser("gabidulin", help="write a Gabidulin code file")
    g.add_argument("--q", required=True, help="P^E or a prime power")
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--modulus")
    g.add_argument("--points", nargs="+", help="evaluation points (default: first n of the default basis)")
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=cmd_gabidulin)

    q = sub.add_parser("gauss", help="factor a Gaussian binomial into cyclotomic values")
    q.add_argument("--a", type=int, required=True)
    q.add_argument("--b", type=int, required=True)
    q.add_argument("--q", type=int, required=True)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_gauss)

    r = sub.add_parser("search", help="seeded random search for qualifying [2d,d,d] codes")
    r.add_argument("--d", type=int, required=True)
    r.add_argument("--q", required=True, help="P^E or a prime power")
    r.add_argument("--m", type=int, required=True)
    r.add_argument("--modulus")
    r.add_argument("--trials", type=int, required=True)
    r.add_argument("--seed", type=int, required=True)
    r.add_argument("--force", action="store_true")
    r.add_argument("--cap", type=int, default=codes.DEFAULT_CODEWORD_CAP)
    r.set_defaults(func=cmd_search)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        _say(f"error: {exc}")
        return EXIT_PARSE
    except EnumerationTooLarge as exc:
        _say(f"error: {exc}")
        return EXIT_CAP
    except (Hypothesis, HypothesisViolated, BOutOfRange, NotABasis, InvalidCode) as exc:
        _say(f"error: {exc}")
        return EXIT_HYPOTHESIS


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
