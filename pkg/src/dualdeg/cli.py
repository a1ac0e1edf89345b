"""Command-line interface: degree reports, enumerations, identity checks,
Hilbert series, and the verification harness, with JSON/CSV/text output."""

import argparse
import csv
import json
import sys

from . import degree, diagrams, dualpair, jellyfish, posets


def parse_partition(text):
    """Parse a comma-separated partition like '3,2,1' (empty means zero)."""
    if text is None or text.strip() == "":
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}")
    return parts


def setting_from_args(args):
    family = args.family
    k = getattr(args, "k", 0) or 0
    if family == dualpair.UPQ:
        if not args.p or not args.q:
            raise ValueError("family upq needs --p and --q")
        return dualpair.Setting(family, k=k, p=args.p, q=args.q)
    if family in (dualpair.E6, dualpair.E7):
        return dualpair.Setting(family, k=k)
    if not args.n:
        raise ValueError(f"family {family} needs --n")
    return dualpair.Setting(family, k=k, n=args.n)


def sigma_from_args(setting, args):
    if setting.family == dualpair.UPQ:
        return (parse_partition(args.sigma_plus), parse_partition(args.sigma_minus))
    return parse_partition(args.sigma)


def _numeric(value):
    """Serialize a big integer as a decimal string."""
    return str(value)


def tableau_rows(T):
    return [list(row) for row in T.rows]


def serialize_tableau(setting, T):
    if setting.family == dualpair.UPQ:
        plus, minus = T
        return {"plus": tableau_rows(plus), "minus": tableau_rows(minus)}
    return {"rows": tableau_rows(T)}


def serialize_pp(pp):
    return {"boxes": [[r, c, v] for (r, c), v in sorted(pp.entries.items())]}


def serialize_points(points):
    return sorted([r, c] for r, c in points)


def degree_payload(report):
    s = report.setting
    return {
        "family": s.family,
        "p": s.p,
        "q": s.q,
        "n": s.n,
        "k": s.k,
        "sigma": repr(report.sigma),
        "q_count": _numeric(report.q_count),
        "p_count": _numeric(report.p_count),
        "degree": _numeric(report.degree),
        "regime": report.regime,
        "conjectural": report.conjectural,
        "cross_checks": [
            {"name": c.name, "status": c.status, "detail": c.detail}
            for c in report.cross_checks
        ],
    }


# report fields holding big integers, serialized as decimal strings
COUNT_KEYS = frozenset(
    {"q_count", "p_count", "degree", "expected", "dim_u", "dimension", "facet_count"}
)


def _stringify_counts(obj):
    if isinstance(obj, dict):
        return {
            key: str(value) if key in COUNT_KEYS and isinstance(value, int) else _stringify_counts(value)
            for key, value in obj.items()
        }
    if isinstance(obj, list):
        return [_stringify_counts(x) for x in obj]
    return obj


def emit(payload, fmt, out=None):
    out = out or sys.stdout
    payload = _stringify_counts(payload)
    if fmt == "json":
        print(json.dumps(payload, indent=2), file=out)
        return
    rows = payload if isinstance(payload, list) else [payload]
    flat_rows = [_flatten(r) for r in rows]
    if fmt == "csv":
        keys = list(dict.fromkeys(k for r in flat_rows for k in r))
        writer = csv.DictWriter(out, fieldnames=keys)
        writer.writeheader()
        for r in flat_rows:
            writer.writerow(r)
        return
    for r in flat_rows:
        for key, value in r.items():
            print(f"{key}: {value}", file=out)
        print(file=out)


def _flatten(obj, prefix=""):
    flat = {}
    if not isinstance(obj, dict):
        return {prefix or "value": obj}
    for key, value in obj.items():
        name = f"{prefix}.{key}" if prefix else key
        if isinstance(value, dict):
            flat.update(_flatten(value, name))
        elif isinstance(value, list):
            flat[name] = json.dumps(value)
        else:
            flat[name] = value
    return flat


def cmd_degree(args):
    setting = setting_from_args(args)
    sigma = sigma_from_args(setting, args)
    report = degree.bernstein_degree(setting, sigma, limit=args.limit)
    emit(degree_payload(report), args.format)
    return 0 if report.ok() else 1


def cmd_enumerate(args):
    setting = setting_from_args(args)
    kind = args.object
    if kind == "q":
        sigma = sigma_from_args(setting, args)
        items = [
            serialize_tableau(setting, T) for T in dualpair.enumerate_Q(setting, sigma)
        ]
    elif kind == "p":
        items = [serialize_pp(pp) for pp in diagrams.enumerate_P(setting, setting.k)]
    elif kind == "facets":
        items = [
            {"points": serialize_points(f.points)}
            for f in posets.enumerate_facets(setting, setting.k)
        ]
    else:  # jellyfish
        sigma = sigma_from_args(setting, args)
        items = [
            {
                "tableau": serialize_tableau(setting, j.tableau),
                "facet": serialize_points(j.family.points),
            }
            for j in jellyfish.enumerate_jellyfish(setting, sigma)
        ]
    if args.limit is not None:
        items = items[: args.limit]
    emit({"count": len(items), "items": items}, args.format)
    return 0


def cmd_check(args):
    setting = setting_from_args(args)
    if args.identity == "not":
        sigma = sigma_from_args(setting, args)
        report = degree.not_identity_check(setting, sigma)
    elif args.identity == "collapse":
        sigma = sigma_from_args(setting, args)
        report = dualpair.q_collapse_check(setting, sigma)
    elif args.identity == "theta":
        report = _theta_check(setting, setting.k)
    elif args.identity == "conjecture":
        if setting.family != dualpair.MP:
            raise ValueError("the conjecture probe applies to the mp family")
        if args.sigma is not None:
            sigmas = [parse_partition(args.sigma)]
        else:
            sigmas = list(degree.iter_sigmas(setting, 2))
        report = degree.mp_conjecture_probe(setting.n, setting.k, sigmas, limit=args.limit)
        report["ok"] = all(e["checks_ok"] for e in report["entries"])
    else:  # exceptional
        report = _exceptional_check()
    emit(report, args.format)
    return 0 if report.get("ok", True) else 1


def _theta_check(setting, k):
    pps = diagrams.enumerate_P(setting, k)
    facets = posets.enumerate_facets(setting, k)
    images = set()
    ok = True
    for pp in pps:
        f = posets.theta(setting, k, pp)
        images.add(f.points)
        ok = ok and posets.theta_inverse(setting, k, f) == pp
        ok = ok and len(posets.corners(setting, k, f)) == diagrams.c_statistic(pp)
    ok = ok and images == {f.points for f in facets} and len(images) == len(pps)
    return {"p_count": len(pps), "facet_count": len(facets), "ok": ok}


def _exceptional_check():
    entries = []
    ok = True
    for row in degree.EXCEPTIONAL_ROWS:
        for a in range(5):
            for b in range(5 if row.nparams == 2 else 1):
                try:
                    value = degree.exceptional_degree(row, a, b)
                    entries.append(
                        {
                            "group": row.group,
                            "h_system": row.h_system,
                            "a": a,
                            "b": b,
                            "degree": _numeric(value),
                        }
                    )
                except AssertionError as exc:
                    ok = False
                    entries.append(
                        {"group": row.group, "h_system": row.h_system, "a": a, "b": b, "error": str(exc)}
                    )
    return {"ok": ok, "entries": entries}


def cmd_hilbert(args):
    setting = setting_from_args(args)
    report = degree.hilbert_report(setting, setting.k)
    payload = dict(report)
    payload["p_count"] = _numeric(payload["p_count"])
    emit(payload, args.format)
    return 0


def cmd_verify(args):
    report = degree.verify_all(only=args.only, limit=args.limit, seed=args.seed)
    emit(report, args.format)
    return 0 if report["ok"] else 1


def _add_common(parser, need_sigma=True):
    parser.add_argument("--family", required=True, choices=dualpair.ALL_FAMILIES)
    parser.add_argument("--p", type=int, default=0)
    parser.add_argument("--q", type=int, default=0)
    parser.add_argument("--n", type=int, default=0)
    parser.add_argument("--k", type=int, default=0)
    if need_sigma:
        parser.add_argument("--sigma", default=None, help="partition, e.g. 3,2,1")
        parser.add_argument("--sigma-plus", default=None)
        parser.add_argument("--sigma-minus", default=None)
    parser.add_argument("--format", choices=("json", "csv", "text"), default="json")
    parser.add_argument("--limit", type=int, default=degree.DEFAULT_LIMIT)
    parser.add_argument("--seed", type=int, default=None)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dualdeg",
        description="Exact Bernstein-degree combinatorics for the dual-pair families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_degree = sub.add_parser("degree", help="degree report for one module")
    _add_common(p_degree)
    p_degree.set_defaults(func=cmd_degree)

    p_enum = sub.add_parser("enumerate", help="list combinatorial objects")
    p_enum.add_argument("object", choices=("q", "p", "facets", "jellyfish"))
    _add_common(p_enum)
    p_enum.set_defaults(func=cmd_enumerate)

    p_check = sub.add_parser("check", help="run one identity check")
    p_check.add_argument(
        "identity", choices=("not", "theta", "collapse", "conjecture", "exceptional")
    )
    _add_common(p_check)
    p_check.set_defaults(func=cmd_check)

    p_hilbert = sub.add_parser("hilbert", help="Hilbert series of an orbit closure")
    _add_common(p_hilbert, need_sigma=False)
    p_hilbert.set_defaults(func=cmd_hilbert)

    p_verify = sub.add_parser("verify", help="run the verification suites")
    p_verify.add_argument("--only", default=None)
    p_verify.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p_verify.add_argument("--limit", type=int, default=degree.DEFAULT_LIMIT)
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
