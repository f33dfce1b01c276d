"""Command-line interface.

Grammar::

    symstrata [--format tsv|json] [--cache PATH] [--budget N] VERB ...

    betti    --space ID [--compact]
    table    --space ID [--compact]
    e1       --space ID --n K
    serre    --base ID --fiber ID [--action trivial|split:FILE]
    count    --lambda CSV --q PRIME --method brute|fast|strata
    interp   --lambda CSV --primes CSV
    zeta     --space ID --order K
    epoly    --lambda CSV
    occam    --lambda CSV --d K [--variant lowest|highest]
    check theorem-a  --n K
    check trace      --lambda CSV --claim ID
    check conjecture --name NAME --n RANGE [--degrees CSV]

Space ids are documented in ``symstrata.catalog``; ranges are ``a..b`` or a
comma list.  A split action file is JSON of the form
``{"base": {"trivial": T, "sign": T}, "fiber": {"trivial": T, "sign": T}}``
where each ``T`` is a serialized ordinary HodgeTable.

Exit codes: 0 success, 1 computational error, 2 usage error, 3 the
computation finished and the report is inconsistent.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path

from symstrata import arith, catalog, consistency, motivic
from symstrata.hodge import Flavor, HodgeTable, betti, epoly, zero
from symstrata.spectral import e1_page, serre_e2

CACHE_ENV = "SYMSTRATA_CACHE"
EXIT_OK, EXIT_ERROR, EXIT_USAGE, EXIT_INCONSISTENT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class CountCache:
    """JSON-lines store of ``CountRecord``s keyed by ``(lambda, q, method)``."""

    def __init__(self, path: str | os.PathLike | None):
        self.path = Path(path) if path else None
        self.records: dict[tuple, dict] = {}
        if self.path and self.path.exists():
            for line in self.path.read_text().splitlines():
                if line.strip():
                    rec = json.loads(line)
                    self.records[(tuple(rec["lambda"]), rec["q"], rec["method"])] = rec

    def get(self, lam: arith.Partition, q: int, method: str) -> int | None:
        rec = self.records.get((lam.parts, q, method))
        return None if rec is None else rec["count"]

    def put(self, record: arith.CountRecord):
        self.records[(record.lam.parts, record.q, record.method)] = record.to_json()
        if not self.path:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=".counts-")
        with os.fdopen(fd, "w") as fh:
            for rec in self.records.values():
                fh.write(json.dumps(rec) + "\n")
        os.replace(tmp, self.path)


def default_cache_path() -> str:
    return os.environ.get(CACHE_ENV) or str(Path.home() / ".cache" / "symstrata" / "counts.jsonl")


def parse_range(text: str) -> list[int]:
    try:
        if ".." in text:
            a, b = text.split("..")
            return list(range(int(a), int(b) + 1))
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"malformed range {text!r}") from exc


def parse_ints(text: str) -> list[int]:
    return parse_range(text)


def _space(text: str) -> catalog.SpaceId:
    try:
        return catalog.parse_space(text)
    except catalog.UnsupportedSpace as exc:
        raise UsageError(str(exc)) from exc


def _partition(text: str) -> arith.Partition:
    try:
        return arith.parse_partition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _table_tsv(t: HodgeTable) -> str:
    rows = ["degree\tp\tq\tmult"] + [f"{c.degree}\t{c.hp}\t{c.hq}\t{c.mult}" for c in t.classes]
    return "\n".join(rows) + "\n"


def _space_table(args) -> HodgeTable:
    space = _space(args.space)
    return catalog.hc_table(space) if args.compact else catalog.h_table(space)


def cmd_betti(args, ctx):
    dims = betti(_space_table(args))
    if args.format == "json":
        return _dump({"space": args.space, "betti": list(dims)})
    return "degree\tdim\n" + "".join(f"{i}\t{b}\n" for i, b in enumerate(dims))


def cmd_table(args, ctx):
    t = _space_table(args)
    return _dump(t.to_json()) if args.format == "json" else _table_tsv(t)


def cmd_e1(args, ctx):
    page = e1_page(catalog.hc_table(_space(args.space)), args.n)
    return _dump(page.to_json()) if args.format == "json" else page.grid_tsv()


def _load_split(path: str):
    data = json.loads(Path(path).read_text())
    parts = []
    for side in ("base", "fiber"):
        for kind in ("trivial", "sign"):
            raw = data.get(side, {}).get(kind)
            parts.append(HodgeTable.from_json(raw) if raw else zero(Flavor.ORDINARY))
    return parts


def cmd_serre(args, ctx):
    if args.action == "trivial":
        empty = zero(Flavor.ORDINARY)
        base_t, base_s = catalog.h_table(_space(args.base)), empty
        fib_t, fib_s = catalog.h_table(_space(args.fiber)), empty
    elif args.action.startswith("split:"):
        base_t, base_s, fib_t, fib_s = _load_split(args.action[len("split:"):])
    else:
        raise UsageError(f"unknown action {args.action!r}")
    page = serre_e2(base_t, base_s, fib_t, fib_s)
    return _dump(page.to_json()) if args.format == "json" else page.grid_tsv()


def cmd_count(args, ctx):
    lam = _partition(args.lam)
    cache: CountCache = ctx["cache"]
    cached = cache.get(lam, args.q, args.method)
    if cached is not None:
        record = arith.CountRecord(lam, args.q, cached, args.method)
    else:
        if args.method == "brute":
            record = arith.count_brute(lam, args.q, budget=args.budget)
        elif args.method == "fast":
            record = arith.count_fast(lam, args.q)
        else:
            ones = lam.parts.count(1)
            if lam.parts[ones:] != (2, 2):
                raise UsageError("method strata only covers lambda = 1^n 2 2")
            record = arith.count_strata_w1n22(ones, args.q)
        cache.put(record)
    return _dump(record.to_json()) if args.format == "json" else f"{record.count}\n"


def cmd_interp(args, ctx):
    lam = _partition(args.lam)
    poly = arith.interpolate(lam, parse_ints(args.primes))
    if args.format == "json":
        return _dump({"lambda": list(lam.parts), "polynomial": poly.to_json(), "text": str(poly)})
    return f"{poly}\n"


def cmd_zeta(args, ctx):
    z = motivic.kapranov_zeta(epoly(catalog.hc_table(_space(args.space))), args.order)
    if args.format == "json":
        return _dump(z.to_json())
    return "n\tepoly\n" + "".join(f"{n}\t{c}\n" for n, c in enumerate(z.coeffs))


def cmd_epoly(args, ctx):
    lam = _partition(args.lam)
    e = motivic.e_wlambda_p1(lam)
    if args.format == "json":
        return _dump({"lambda": list(lam.parts), "epoly": e.to_json(), "text": str(e)})
    return f"{e}\n"


def cmd_occam(args, ctx):
    lam = _partition(args.lam)
    counts = arith.interpolate(lam, arith.default_primes(lam))
    t = consistency.occam_minimal(counts, args.d, args.variant)
    return _dump(t.to_json()) if args.format == "json" else _table_tsv(t)


def cmd_check(args, ctx):
    if args.what == "theorem-a":
        report = consistency.check_theorem_a(args.n)
    elif args.what == "trace":
        report = consistency.check_trace(_partition(args.lam), _space(args.claim))
    else:
        if args.name not in consistency.STATEMENTS:
            raise UsageError(f"unknown statement {args.name!r}")
        degrees = parse_ints(args.degrees) if args.degrees else None
        report = consistency.check_conjecture(args.name, parse_range(args.n), degrees)
    out = _dump(report.to_json()) if args.format == "json" else report.render() + "\n"
    ctx["verdict"] = report.verdict
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("tsv", "json"), default=argparse.SUPPRESS)
    common.add_argument("--cache", default=argparse.SUPPRESS)
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="symstrata", parents=[common])
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, fn):
        p = sub.add_parser(name, parents=[common])
        p.set_defaults(fn=fn)
        return p

    for name, fn in (("betti", cmd_betti), ("table", cmd_table)):
        p = verb(name, fn)
        p.add_argument("--space", required=True)
        p.add_argument("--compact", action="store_true")

    p = verb("e1", cmd_e1)
    p.add_argument("--space", required=True)
    p.add_argument("--n", type=int, required=True)

    p = verb("serre", cmd_serre)
    p.add_argument("--base", required=True)
    p.add_argument("--fiber", required=True)
    p.add_argument("--action", default="trivial")

    p = verb("count", cmd_count)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--method", choices=("brute", "fast", "strata"), default="fast")

    p = verb("interp", cmd_interp)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--primes", required=True)

    p = verb("zeta", cmd_zeta)
    p.add_argument("--space", required=True)
    p.add_argument("--order", type=int, required=True)

    p = verb("epoly", cmd_epoly)
    p.add_argument("--lambda", dest="lam", required=True)

    p = verb("occam", cmd_occam)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--variant", choices=("lowest", "highest"), default="lowest")

    p = verb("check", cmd_check)
    checks = p.add_subparsers(dest="what", required=True)
    c = checks.add_parser("theorem-a", parents=[common])
    c.add_argument("--n", type=int, required=True)
    c = checks.add_parser("trace", parents=[common])
    c.add_argument("--lambda", dest="lam", required=True)
    c.add_argument("--claim", required=True)
    c = checks.add_parser("conjecture", parents=[common])
    c.add_argument("--name", required=True)
    c.add_argument("--n", required=True)
    c.add_argument("--degrees")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    args.format = getattr(args, "format", "tsv")
    args.budget = getattr(args, "budget", arith.DEFAULT_BUDGET)
    ctx = {"cache": CountCache(getattr(args, "cache", None) or default_cache_path())}
    try:
        out = args.fn(args, ctx)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except (ArithmeticError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_ERROR
    stdout.write(out)
    if ctx.get("verdict") is consistency.Verdict.INCONSISTENT:
        return EXIT_INCONSISTENT
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
