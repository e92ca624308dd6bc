"""Command-line front end.

    magfine enumerate {binary,fine} N [--format json|csv|codes] [--count-only]
    magfine dims [--max-n 8] [--image-max 7]
    magfine prim N [--format json|csv|codes]
    magfine verify {coassoc,compat,idempotent,...,all} [--seed 42] [--cases 100]
    magfine series {fine,vallette,compose,prelie,sabinin,all} [--order N]

Exit status: 0 when every check passed, 1 on a failed check, 2 on a usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from magfine import primitives, series, suites
from magfine.coalgebra import is_primitive
from magfine.reference import FINE, LOG_CATALAN, PRELIE_QUOTIENT
from magfine.trees import count_binary, count_fine, enumerate_binary, enumerate_fine

MAX_LISTING = 12
FORMATS = ("json", "csv", "codes")
SERIES_CHECKS = ("fine", "vallette", "compose", "prelie", "sabinin")


def rational(x) -> str:
    return str(Fraction(x))


@dataclass
class RunReport:
    command: str
    params: dict
    checks: list = field(default_factory=list)
    data: Any = None
    duration: float = 0.0

    def check(self, name: str, ok: bool, **values) -> None:
        entry = {"name": name, "status": "pass" if ok else "fail"}
        entry.update(values)
        self.checks.append(entry)

    @property
    def passed(self) -> bool:
        return all(c["status"] == "pass" for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "params": self.params,
            "status": "pass" if self.passed else "fail",
            "checks": self.checks,
            "data": self.data,
            "duration_seconds": round(self.duration, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def element_terms(x) -> list[dict]:
    return [{"tree": t.code, "word": list(w), "coeff": rational(c)} for (t, w), c in x.items()]


# -- commands ---------------------------------------------------------------

def cmd_enumerate(kind: str, n: int, count_only: bool = False) -> RunReport:
    report = RunReport("enumerate", {"kind": kind, "n": n, "count_only": count_only})
    counter = count_binary if kind == "binary" else count_fine
    expected = counter(n)
    if count_only:
        report.data = {"count": expected}
        if kind == "fine" and n <= len(FINE):
            report.check("count matches the Fine number", expected == FINE[n - 1], count=expected)
        return report
    trees = enumerate_binary(n) if kind == "binary" else enumerate_fine(n)
    codes = [t.code for t in trees]
    report.data = {"count": len(trees), "codes": codes}
    report.check("listing length matches the counting formula", len(trees) == expected, count=len(trees))
    report.check("listing is duplicate-free", len(set(codes)) == len(codes))
    if kind == "fine" and n <= len(FINE):
        report.check("count matches the Fine number", len(trees) == FINE[n - 1])
    return report


def cmd_dims(n_max: int, image_max: int = 7) -> RunReport:
    report = RunReport("dims", {"max_n": n_max, "image_max": image_max})
    table = primitives.dimension_table(n_max, image_max)
    report.data = [
        {"n": r.n, "catalan": r.catalan, "kernel_dim": r.kernel_dim, "fine": r.fine, "image_rank": r.image_rank}
        for r in table
    ]
    for r in table:
        report.check(f"n={r.n}: dim ker delta = F_(n-1) = rank of MagFine image", r.ok)
    return report


def cmd_prim(n: int) -> RunReport:
    report = RunReport("prim", {"n": n})
    basis = primitives.prim_basis(n)
    report.data = {"dimension": len(basis), "basis": [element_terms(x) for x in basis]}
    report.check("every basis element is primitive", all(map(is_primitive, basis)))
    if n <= len(FINE):
        report.check("dimension equals the Fine number", len(basis) == FINE[n - 1], dimension=len(basis))
    return report


def cmd_verify(suite: str, seed: int, cases: int) -> RunReport:
    report = RunReport("verify", {"suite": suite, "seed": seed, "cases": cases})
    for res in suites.run_suite(suite, seed, cases):
        report.check(res.name, res.passed, cases=res.cases, failed=res.failed, examples=res.examples)
    return report


def cmd_series(check: str, order: int | None) -> RunReport:
    report = RunReport("series", {"check": check, "order": order})
    names = SERIES_CHECKS if check == "all" else (check,)
    data = {}
    for name in names:
        if name == "fine":
            n = order or series.default_order()
            coeffs = series.fine_series(n).coeffs[1:]
            data["fine"] = [rational(c) for c in coeffs]
            known = FINE[: len(coeffs)]
            report.check("fine series coefficients", tuple(coeffs[: len(known)]) == known)
        elif name == "vallette":
            n = order or series.default_order()
            report.check(f"F(x - x^3/(1-x)^2) = x to order {n}", series.vallette_check(n))
        elif name == "compose":
            n = order or series.default_order()
            report.check(f"f_As(F(x)) = f_Mag(x) to order {n}", series.compose_check(n))
            rows = primitives.comb_decomposition_dims(n)
            report.check(f"C_(n-1) = sum over compositions of F-products, n <= {n}", all(r.ok for r in rows))
        elif name == "prelie":
            n = order or len(PRELIE_QUOTIENT)
            values = series.prelie_quotient_dims(n)
            data["prelie"] = values
            k = min(n, len(PRELIE_QUOTIENT))
            report.check("pre-Lie quotient dimensions", tuple(values[:k]) == PRELIE_QUOTIENT[:k])
        elif name == "sabinin":
            n = order or 8
            values = series.sabinin_dims(n)
            data["sabinin"] = values
            k = min(n, len(LOG_CATALAN))
            report.check("Log-Catalan numbers", tuple(values[:k]) == LOG_CATALAN[:k])
    report.data = data
    return report


# -- formatting ---------------------------------------------------------------

def render(report: RunReport, fmt: str) -> str:
    if fmt == "json":
        return report.to_json() + "\n"
    if report.command == "enumerate":
        codes = report.data.get("codes")
        if codes is None:
            return f"{report.data['count']}\n"
        if fmt == "codes":
            return "".join(c + "\n" for c in codes)
        return _csv([["index", "code"]] + [[i, c] for i, c in enumerate(codes)])
    if report.command == "prim":
        rows = [["element", "tree", "word", "coeff"]]
        for i, terms in enumerate(report.data["basis"]):
            for t in terms:
                rows.append([i, t["tree"], " ".join(map(str, t["word"])), t["coeff"]])
        if fmt == "codes":
            return "".join(f"{r[0]} {r[3]} {r[1]}\n" for r in rows[1:])
        return _csv(rows)
    if report.command == "dims":
        rows = [["n", "catalan", "kernel_dim", "fine", "image_rank"]]
        rows += [[r["n"], r["catalan"], r["kernel_dim"], r["fine"], "" if r["image_rank"] is None else r["image_rank"]]
                 for r in report.data]
        return _csv(rows)
    return _csv([["name", "status"]] + [[c["name"], c["status"]] for c in report.checks])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="magfine", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=FORMATS, default="json")

    p = sub.add_parser("enumerate", help="list planar binary trees or labelled MagFine trees")
    p.add_argument("kind", choices=("binary", "fine"))
    p.add_argument("n", type=int)
    p.add_argument("--count-only", action="store_true", help="only count; allows n > 12")
    fmt(p)

    p = sub.add_parser("dims", help="dimension table of primitives against Fine numbers")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--image-max", type=int, default=7, help="largest n for the MagFine image rank")
    fmt(p)

    p = sub.add_parser("prim", help="basis of the degree-n multilinear primitives")
    p.add_argument("n", type=int)
    fmt(p)

    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("suite", choices=suites.SUITES + ("all",))
    p.add_argument("--seed", type=int, default=suites.DEFAULT_SEED)
    p.add_argument("--cases", type=int, default=suites.DEFAULT_CASES)
    fmt(p)

    p = sub.add_parser("series", help="generating-function identities")
    p.add_argument("check", choices=SERIES_CHECKS + ("all",))
    p.add_argument("--order", type=int, default=None, help="truncation order (default: MAGFINE_ORDER or 12)")
    fmt(p)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()

    if args.command == "enumerate":
        if args.n < 1 or (args.n > MAX_LISTING and not args.count_only):
            parser.error(f"n must be in 1..{MAX_LISTING} for listings (use --count-only beyond)")
        report = cmd_enumerate(args.kind, args.n, args.count_only)
    elif args.command == "dims":
        if args.max_n < 1:
            parser.error("--max-n must be >= 1")
        report = cmd_dims(args.max_n, args.image_max)
    elif args.command == "prim":
        if args.n < 1:
            parser.error("n must be >= 1")
        report = cmd_prim(args.n)
    elif args.command == "verify":
        if args.cases < 0:
            parser.error("--cases must be >= 0")
        report = cmd_verify(args.suite, args.seed, args.cases)
    else:
        if args.order is not None and (args.order < 1 or (args.order < 3 and args.check in ("vallette", "all"))):
            parser.error("--order must be >= 1 (>= 3 for vallette)")
        report = cmd_series(args.check, args.order)

    report.duration = time.perf_counter() - start
    sys.stdout.write(render(report, args.format))
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
