"""Command line entry point: ``hookdist``."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import products
from .suites import SUITES, run_suite
from .tables import DEFAULT_ORDER, PRESETS, OrderError, hilbert_table, hooks_table, preset_table


def _int_list(text: str) -> list[int]:
    """'1,2,5' or '300:5100:300' (inclusive stop)."""
    if ":" in text:
        parts = [int(p) for p in text.split(":")]
        start, stop = parts[0], parts[1]
        step = parts[2] if len(parts) > 2 else 1
        return list(range(start, stop + 1, step))
    return [int(p) for p in text.split(",") if p]


def _default_precision() -> int:
    env = os.environ.get("HOOKDIST_PRECISION")
    return int(env) if env else 256


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--precision", type=int, default=None, help="working precision in bits (default 256)")
    common.add_argument("--order", type=int, default=DEFAULT_ORDER, help="series truncation order")
    common.add_argument("--out", default=None, help="write output here instead of stdout")

    p = argparse.ArgumentParser(prog="hookdist", description="t-hook and Hilbert scheme distributions")
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hooks-table", parents=[common], help="Psi_t(a,b;n) table")
    h.add_argument("--preset", choices=[k for k, v in PRESETS.items() if v[0] == "hooks"])
    h.add_argument("--t", type=int)
    h.add_argument("--b", type=int, default=3)
    h.add_argument("--n", type=_int_list, help="comma list or start:stop:step")

    g = sub.add_parser("hilbert-table", parents=[common], help="delta(a,b;n) table")
    g.add_argument("--preset", choices=[k for k, v in PRESETS.items() if v[0] == "hilbert"])
    g.add_argument("--family", choices=("homogeneous", "quasi"), default="homogeneous")
    g.add_argument("--alpha", type=int)
    g.add_argument("--beta", type=int)
    g.add_argument("--b", type=int, default=3)
    g.add_argument("--n", type=_int_list)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--t", type=int)
    v.add_argument("--b", type=int)
    v.add_argument("--ell", type=int)
    v.add_argument("--a1", type=int)
    v.add_argument("--a2", type=int)
    v.add_argument("--nmax", type=int)
    v.add_argument("--nmin", type=int)
    v.add_argument("--bmax", type=int)
    v.add_argument("--tmax", type=int)
    v.add_argument("--kmax", type=int)
    v.add_argument("--N", type=int)

    a = sub.add_parser("asym", parents=[common], help="asymptotic ratio studies")
    a.add_argument("target", choices=("products",))
    a.add_argument("--part", choices=("1", "2", "3", "all"), default="all")
    a.add_argument("--b", type=int, default=3)
    return p


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report_text(rep: dict) -> str:
    lines = [f"suite {rep['suite']}: {'PASS' if rep['pass'] else 'FAIL'} ({len(rep['cases'])} cases)"]
    for c in rep["cases"]:
        fields = ", ".join(f"{k}={v}" for k, v in c.items() if k != "pass" and not isinstance(v, list))
        lines.append(f"  [{'ok' if c['pass'] else 'FAIL'}] {fields}")
    return "\n".join(lines) + "\n"


def _report_csv(rep: dict) -> str:
    keys = sorted({k for c in rep["cases"] for k, v in c.items() if not isinstance(v, list)})
    rows = [",".join(keys)]
    for c in rep["cases"]:
        rows.append(",".join(str(c.get(k, "")) for k in keys))
    return "\n".join(rows) + "\n"


def _render_report(rep: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rep, indent=2, sort_keys=True, default=str) + "\n"
    if fmt == "csv":
        return _report_csv(rep)
    return _report_text(rep)


def _asym_report(part: str, b: int) -> dict:
    cases = []
    for pt in ("1", "3"):
        if part in (pt, "all"):
            r = products.ratio_study(int(pt), b)
            for ray in r["rays"]:
                cases.append({"part": int(pt), "b": b, "alpha": round(ray["alpha"], 6),
                              "slope": round(ray["slope"], 4), "last_error": ray["errors"][-1], "pass": ray["pass"]})
    if part in ("2", "all"):
        r = products.f2_ratio_study(b=b if b % 2 else 3)
        cases.append({"part": 2, "b": r["b"], "first_error": r["errors"][0], "last_error": r["errors"][-1],
                      "pass": r["pass"]})
    return {"schema": 1, "suite": "asym-products", "pass": all(c["pass"] for c in cases), "cases": cases}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    prec = args.precision if args.precision is not None else _default_precision()
    try:
        if args.command == "hooks-table":
            if args.preset:
                rep = preset_table(args.preset, args.order)
            else:
                if args.t is None or args.n is None:
                    raise SystemExit("hooks-table needs --preset or both --t and --n")
                rep = hooks_table(args.t, args.b, args.n, args.order)
            _emit(rep.render(args.format), args.out)
            return 0
        if args.command == "hilbert-table":
            if args.preset:
                rep = preset_table(args.preset, args.order)
            else:
                if args.n is None:
                    raise SystemExit("hilbert-table needs --preset or --n")
                rep = hilbert_table(args.b, args.n, args.family, args.alpha, args.beta, args.order)
            _emit(rep.render(args.format), args.out)
            return 0
        if args.command == "verify":
            params = {k: getattr(args, k) for k in ("t", "b", "ell", "a1", "a2", "nmax", "nmin", "bmax", "tmax", "kmax", "N")}
            if args.suite in ("kloosterman", "eta", "products"):
                params["prec"] = prec
            rep = run_suite(args.suite, **params)
        else:
            rep = _asym_report(args.part, args.b)
        _emit(_render_report(rep, args.format), args.out)
        return 0 if rep["pass"] else 1
    except OrderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
