"""Command-line front end.

Exit codes: 0 success, 1 failed ``--assert`` check, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from .counting import (PatternSpec, build_shifted_curve, count_in_rectangle,
                       main_term_defect)
from .curve import PlaneCurve, check_condition_one, enumerate_points, find_completely_ramified
from .distribution import distribution_report
from .errors import CurveboxError
from .intervals import CyclicInterval, Rectangle
from .lemmas import translate_lemma_search, weil_defect
from .moments import MomentSpec, moment_report
from .prime_field import PrimeModulus
from .sampling import make_rng, random_interval, random_pattern_spec

PATTERN_FIELDS = ["p", "d", "s", "a", "b", "I_start", "I_len", "J_start", "J_len",
                  "count", "main_term", "defect", "bound", "defect_over_bound"]
MOMENT_FIELDS = ["p", "curve", "k", "H", "J_start", "J_len",
                 "M_k", "M_k_decimal", "model", "model_decimal",
                 "defect", "defect_decimal", "thm3_bound", "defect_over_bound",
                 "cor3_bound"]
HIST_FIELDS = ["p", "curve", "H", "J_start", "J_len", "h", "count"]
GAUSS_FIELDS = ["p", "curve", "H", "N", "mean_model", "var_model", "ks_binomial",
                "ks_normal", "m1", "m2", "m3", "m4"]
WEIL_FIELDS = ["p", "object", "box", "count", "main_term", "defect", "bound",
               "ratio", "t"]
TRANSLATE_FIELDS = ["trial", "xs", "M"]
COUNT_FIELDS = ["p", "curve", "I_start", "I_len", "J_start", "J_len", "count",
                "main_term"]
ANALYZE_FIELDS = ["p", "curve", "d", "y_degree", "N", "ramified_x",
                  "ramification_search", "J_start", "J_len", "cond1",
                  "cond1_witness_x", "cond1_witness_y"]


class AssertionFailed(Exception):
    pass


def fmt_float(x: float) -> str:
    return format(x, ".17g")


def fmt_rat(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def fmt_dec(q: Fraction) -> str:
    return format(float(q), ".17g")


def percentile(values, q):
    """Nearest-rank percentile."""
    xs = sorted(values)
    if not xs:
        return math.nan
    return xs[max(0, math.ceil(q / 100 * len(xs)) - 1)]


def render_csv(fields, rows) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow(row)
    return buf.getvalue()


def render(args, fields, rows, extra=None) -> str:
    if args.format == "json":
        doc = {"rows": rows}
        if extra:
            doc.update(extra)
        return json.dumps(doc, indent=2) + "\n"
    return render_csv(fields, rows)


def emit(args, text: str):
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _modulus(args) -> PrimeModulus:
    if args.p is None:
        raise argparse.ArgumentTypeError("--p is required")
    return PrimeModulus(args.p)


def _curve(args) -> PlaneCurve:
    if not args.curve:
        raise argparse.ArgumentTypeError("--curve is required")
    return PlaneCurve.parse(args.curve, _modulus(args))


def _interval(text, p, default_full=True):
    if text is None:
        return CyclicInterval.full(p) if default_full else None
    return CyclicInterval.parse(text, p)


def _int_list(text):
    try:
        return [int(v) for v in str(text).split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_analyze(args):
    C = _curve(args)
    J = _interval(args.J, C.p)
    ram = find_completely_ramified(C)
    cond = check_condition_one(C, J)
    row = {"p": C.p, "curve": C.name, "d": C.d, "y_degree": C.y_degree,
           "N": enumerate_points(C, args.threads),
           "ramified_x": ";".join(str(x.value) for x in ram.ramified_x),
           "ramification_search": ram.searched,
           "J_start": J.start, "J_len": J.length, "cond1": str(cond.holds).lower(),
           "cond1_witness_x": "" if cond.holds else cond.x,
           "cond1_witness_y": "" if cond.holds else ";".join(map(str, cond.ys))}
    if not ram:
        print("warning: no completely ramified x found in F_p; points over "
              "extensions of F_p were not searched", file=sys.stderr)
    emit(args, render(args, ANALYZE_FIELDS, [row]))
    if args.check and not (ram and cond):
        raise AssertionFailed("hypotheses not met")


def cmd_count(args):
    C = _curve(args)
    B = Rectangle(_interval(args.I, C.p), _interval(args.J, C.p))
    n = count_in_rectangle(C, B, args.threads)
    row = {"p": C.p, "curve": C.name, "I_start": B.I.start, "I_len": B.I.length,
           "J_start": B.J.start, "J_len": B.J.length, "count": n,
           "main_term": fmt_rat(Fraction(B.volume, C.p))}
    emit(args, render(args, COUNT_FIELDS, [row]))


def cmd_patterns(args):
    C = _curve(args)
    p = C.p
    rng = make_rng(args.seed)
    cases = []
    if args.a is not None or args.b is not None:
        if args.a is None or args.b is None:
            raise argparse.ArgumentTypeError("--a and --b must be given together")
        cases.append((PatternSpec.parse(args.a, args.b, p),
                      _interval(args.I, p), _interval(args.J, p)))
    else:
        for _ in range(args.samples):
            spec = random_pattern_spec(rng, p, args.s)
            I = _interval(args.I, p) if args.I else random_interval(rng, p, 1)
            J = _interval(args.J, p) if args.J else random_interval(rng, p, 1)
            cases.append((spec, I, J))
    rows, ratios = [], []
    tables = {}
    for spec, I, J in cases:
        if J not in tables:
            tables[J] = C.column_counts(J, args.threads)
        res = main_term_defect(C, spec, I, J, args.threads, columns=tables[J])
        ratios.append(res.ratio)
        rows.append({"p": p, "d": C.d, "s": spec.s, "a": spec.a_text(),
                     "b": spec.b_text(), "I_start": I.start, "I_len": I.length,
                     "J_start": J.start, "J_len": J.length, "count": res.count,
                     "main_term": fmt_rat(res.main_term), "defect": fmt_rat(res.defect),
                     "bound": fmt_float(res.bound),
                     "defect_over_bound": fmt_float(res.ratio)})
    emit(args, render(args, PATTERN_FIELDS, rows))
    if args.check and percentile(ratios, 95) > 1:
        raise AssertionFailed("95th percentile of defect/bound exceeds 1")


def cmd_moments(args):
    C = _curve(args)
    J = _interval(args.J, C.p)
    cols = C.column_counts(J, args.threads)
    rows, failed = [], []
    for H in _int_list(args.H):
        for k in _int_list(args.k):
            rep = moment_report(C, MomentSpec(k, H, J), args.threads, columns=cols)
            if args.check and (not rep.condition_one or rep.ratio > 1):
                failed.append((k, H))
            rows.append({"p": C.p, "curve": C.name, "k": k, "H": H,
                         "J_start": J.start, "J_len": J.length,
                         "M_k": fmt_rat(rep.M_k), "M_k_decimal": fmt_dec(rep.M_k),
                         "model": fmt_rat(rep.model), "model_decimal": fmt_dec(rep.model),
                         "defect": fmt_rat(rep.defect), "defect_decimal": fmt_dec(rep.defect),
                         "thm3_bound": fmt_float(rep.bound),
                         "defect_over_bound": fmt_float(rep.ratio),
                         "cor3_bound": fmt_float(rep.cor3_bound)})
    emit(args, render(args, MOMENT_FIELDS, rows))
    if failed:
        raise AssertionFailed(f"moment check failed for (k, H) in {failed}")


def gauss_rows(C, H, J, threads):
    rep = distribution_report(C, H, J, threads)
    m = rep.sample_moments
    summary = {"p": C.p, "curve": C.name, "H": H, "N": J.length,
               "mean_model": fmt_rat(rep.mean_model), "var_model": fmt_rat(rep.var_model),
               "ks_binomial": fmt_float(rep.ks_vs_binomial),
               "ks_normal": fmt_float(rep.ks_vs_normal),
               "m1": fmt_rat(m[1]), "m2": fmt_rat(m[2]), "m3": fmt_rat(m[3]),
               "m4": fmt_rat(m[4])}
    hist = [{"p": C.p, "curve": C.name, "H": H, "J_start": J.start, "J_len": J.length,
             "h": h, "count": v} for h, v in enumerate(rep.histogram.counts)]
    return rep, summary, hist


def cmd_gauss(args):
    C = _curve(args)
    J = _interval(args.J, C.p)
    rep, summary, hist = gauss_rows(C, args.H, J, args.threads)
    if args.format == "json":
        text = json.dumps({"summary": summary, "histogram": hist}, indent=2) + "\n"
    else:
        text = render_csv(GAUSS_FIELDS, [summary])
        if args.hist:
            with open(args.hist, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(render_csv(HIST_FIELDS, hist))
    emit(args, text)
    if args.check:
        bad = []
        if not rep.ks_vs_binomial <= args.ks_max:
            bad.append(f"ks_binomial {rep.ks_vs_binomial:.4g} > {args.ks_max}")
        if not rep.ks_vs_normal <= args.ks_normal_max:
            bad.append(f"ks_normal {rep.ks_vs_normal:.4g} > {args.ks_normal_max}")
        if bad:
            raise AssertionFailed("; ".join(bad))


def _box_text(box):
    return "x".join(iv.to_text() for iv in box)


def cmd_verify(args):
    if args.which == "translate":
        p = args.p if args.p is not None else 1009
        found = translate_lemma_search(p, args.r, args.m_max, args.trials,
                                       args.seed, args.threads)
        rows = [{"trial": c.trial, "xs": ";".join(map(str, c.xs)),
                 "M": ";".join(map(str, c.M))} for c in found]
        print(f"translate search: p={p} r={args.r} m_max={args.m_max} "
              f"trials={args.trials} counterexamples={len(found)}", file=sys.stderr)
        emit(args, render(args, TRANSLATE_FIELDS, rows,
                          {"p": p, "r": args.r, "m_max": args.m_max,
                           "trials": args.trials, "seed": args.seed}))
        if args.check and found:
            raise AssertionFailed(f"{len(found)} counterexamples found")
        return
    C = _curve(args)
    p = C.p
    rng = make_rng(args.seed)
    rows, ratios = [], []
    for _ in range(args.samples):
        if args.s:
            spec = random_pattern_spec(rng, p, args.s)
            obj = build_shifted_curve(C, spec)
            label = f"shifted[a={spec.a_text()};b={spec.b_text()}]"
            box = tuple(random_interval(rng, p, 1) for _ in range(args.s + 1))
        else:
            obj, label = C, C.name
            box = (random_interval(rng, p, 1), random_interval(rng, p, 1))
        rec = weil_defect(obj, box, args.threads)
        ratios.append(rec.ratio)
        rows.append({"p": p, "object": label, "box": _box_text(box), "count": rec.count,
                     "main_term": fmt_rat(rec.main_term), "defect": fmt_rat(rec.defect),
                     "bound": fmt_float(rec.bound), "ratio": fmt_float(rec.ratio),
                     "t": rec.t})
    print(f"weil defect: samples={len(ratios)} max_ratio={max(ratios, default=0):.6g} "
          f"p95={percentile(ratios, 95):.6g}", file=sys.stderr)
    emit(args, render(args, WEIL_FIELDS, rows))
    if args.check and percentile(ratios, 95) > 1:
        raise AssertionFailed("95th percentile of defect/bound exceeds 1")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, help="prime modulus")
    common.add_argument("--curve", help="polynomial f(x,y), e.g. 'x*y + 6'")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--assert", dest="check", action="store_true",
                        help="exit 1 when the command's check fails")

    parser = argparse.ArgumentParser(
        prog="curvebox",
        description="Point statistics of plane curves over F_p in small boxes.")
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="fibers, ramification, cond1")
    a.add_argument("--J", help="y-interval start:length (default: all of F_p)")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("count", parents=[common], help="points in a rectangle")
    c.add_argument("--I")
    c.add_argument("--J")
    c.set_defaults(func=cmd_count)

    pt = sub.add_parser("patterns", parents=[common], help="(a,b)-pattern counts")
    pt.add_argument("--a", help="';'-separated a_i")
    pt.add_argument("--b", help="';'-separated b_i")
    pt.add_argument("--s", type=int, default=2, help="pattern length for random specs")
    pt.add_argument("--samples", type=int, default=50)
    pt.add_argument("--I")
    pt.add_argument("--J")
    pt.set_defaults(func=cmd_patterns)

    m = sub.add_parser("moments", parents=[common], help="M_k(H) vs the binomial model")
    m.add_argument("--H", required=True, help="window length(s), comma-separated")
    m.add_argument("--k", required=True, help="moment order(s), comma-separated")
    m.add_argument("--J")
    m.set_defaults(func=cmd_moments)

    g = sub.add_parser("gauss", parents=[common], help="histogram and KS distances")
    g.add_argument("--H", type=int, required=True)
    g.add_argument("--J")
    g.add_argument("--ks-max", type=float, default=0.05)
    g.add_argument("--ks-normal-max", type=float, default=0.06)
    g.add_argument("--hist", help="write the long-format histogram CSV here")
    g.set_defaults(func=cmd_gauss)

    v = sub.add_parser("verify", help="lemma checks")
    vs = v.add_subparsers(dest="which", required=True)
    w = vs.add_parser("weil", parents=[common], help="box-count defects")
    w.add_argument("--samples", type=int, default=100)
    w.add_argument("--s", type=int, default=0,
                   help="0 for the plane curve, s >= 1 for random shifted curves")
    w.set_defaults(func=cmd_verify)
    t = vs.add_parser("translate", parents=[common], help="translate-set search")
    t.add_argument("--r", type=int, default=2)
    t.add_argument("--m-max", type=int, default=7)
    t.add_argument("--trials", type=int, default=100_000)
    t.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    try:
        args.func(args)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except CurveboxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionFailed as exc:
        print(f"assertion failed: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
