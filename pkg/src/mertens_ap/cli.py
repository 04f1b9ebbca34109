"""Command-line entry point: compute, verify, table, constants, characters."""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple

from gmpy2 import mpfr

from .arith import coprime_residues
from .characters import build_group
from .constants import NumericFault, compute_all, compute_gamma, compute_meissel_mertens
from .lfunctions import BranchError, UnreliableU
from .mp import PrecisionContext, truncate_decimal
from .results import ResultFile, ResultFormatError, StoredRecord, format_table, load, save
from .verify import enumerate_identities, verify_records

log = logging.getLogger("mertens_ap")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_NUMERIC = 3

KINDS = ("M", "B", "C")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for verification failures here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_kinds(text: str) -> Tuple[str, ...]:
    kinds = tuple(k.strip().upper() for k in text.split(",") if k.strip())
    bad = [k for k in kinds if k not in KINDS]
    if bad or not kinds:
        raise UsageError(f"kinds must be a comma list drawn from M,B,C (got {text!r})")
    return tuple(k for k in KINDS if k in kinds)


def _work(job: Tuple[int, Tuple[str, ...], int, int]) -> Tuple[int, List[StoredRecord], float]:
    q, kinds, digits, guard = job
    ctx = PrecisionContext(digits, guard)
    t0 = time.perf_counter()
    recs = compute_all(q, kinds=kinds, ctx=ctx)
    return q, [StoredRecord.from_record(r, ctx) for r in recs], time.perf_counter() - t0


def cmd_compute(
    q_from: int,
    q_to: int,
    kinds: Sequence[str],
    digits: int,
    out: str,
    resume: bool = False,
    threads: Optional[int] = None,
    guard: int = 20,
) -> ResultFile:
    if not 3 <= q_from <= q_to:
        raise UsageError("need 3 <= q-from <= q-to")
    if not 20 <= digits <= 1000:
        raise UsageError("digits must lie in [20, 1000]")
    out_dir = os.path.dirname(os.path.abspath(out))
    if not os.path.isdir(out_dir) or not os.access(out_dir, os.W_OK):
        raise UsageError(f"cannot write to {out}")
    kinds = tuple(kinds)
    rf = ResultFile(digits, guard)
    if resume and os.path.exists(out):
        rf = load(out)
        if (rf.target_digits, rf.guard_digits) != (digits, guard):
            raise UsageError(f"{out} holds a {rf.target_digits}-digit run; cannot resume at {digits}")
    done = rf.completed()
    jobs = []
    for q in range(q_from, q_to + 1):
        todo = tuple(k for k in kinds if (q, k) not in done)
        if todo:
            jobs.append((q, todo, digits, guard))
    if not jobs:
        log.info("nothing to compute; %s is complete", out)
        return rf
    workers = threads or os.cpu_count() or 1
    t_start = time.perf_counter()
    results: Dict[int, List[StoredRecord]] = {}

    def _collect(q: int, recs: List[StoredRecord], dt: float) -> None:
        results[q] = recs
        log.info("q=%d %s done in %.2fs", q, "".join(sorted({r.kind for r in recs}, key=KINDS.index)), dt)
        rf.timing[f"q{q}"] = round(dt, 3)

    if workers == 1 or len(jobs) == 1:
        for job in jobs:
            _collect(*_work(job))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for q, recs, dt in pool.map(_work, jobs):
                _collect(q, recs, dt)
    for q in sorted(results):
        rf.records.extend(results[q])
    rf.sort()
    # sum-over-a checks right after the run, over the full record set
    ctx = rf.ctx
    reports = verify_records(rf.constant_records(), compute_gamma(ctx), compute_meissel_mertens(ctx), ctx)
    rf.identities = [r.as_dict() for r in reports if r.kind in ("sum-over-a", "B-sum-over-a", "three-constants")]
    rf.timing["total"] = round(rf.timing.get("total", 0.0) + time.perf_counter() - t_start, 3)
    save(rf, out)
    return rf


def cmd_verify(path: str, q_cap: Optional[int] = None, threshold: Optional[float] = None):
    rf = load(path)
    ctx = rf.ctx
    recs = [r for r in rf.constant_records() if q_cap is None or r.q <= q_cap]
    thr = None
    if threshold is not None:
        with ctx.local():
            thr = mpfr(threshold)
    reports = verify_records(recs, compute_gamma(ctx), compute_meissel_mertens(ctx), ctx, thr)
    qs = sorted({r.q for r in recs})
    counts = enumerate_identities(max(qs)) if qs and max(qs) >= 3 else None
    return reports, counts


def cmd_table(path: str, digits: int) -> str:
    rf = load(path)
    return format_table(rf.records, digits)


def cmd_constants(name: str, digits: int) -> str:
    if not 1 <= digits <= 1000:
        raise UsageError("digits must lie in [1, 1000]")
    ctx = PrecisionContext(digits)
    if name == "gamma":
        v = compute_gamma(ctx)
    elif name == "meissel-mertens":
        v = compute_meissel_mertens(ctx)
    else:
        raise UsageError(f"unknown constant {name!r}")
    return truncate_decimal(v, digits)


def cmd_characters(q: int) -> str:
    if q < 3:
        raise UsageError("q must be at least 3")
    G = build_group(q)
    units = coprime_residues(q)
    comps = ", ".join(f"(mod {c.modulus}: g={c.generator}, order {c.order})" for c in G.components)
    lines = [f"q = {q}: {len(G)} characters, exponent {G.exponent}", f"components {comps}", ""]
    lines.append("idx  order  parity  cond  exponents  chi(a) = e(k/order) for a in " + " ".join(map(str, units)))
    for i, chi in enumerate(G.characters):
        vals = " ".join(str(chi.table[a]) for a in units)
        par = "even" if chi.parity == 1 else "odd"
        lines.append(f"{i:>3}  {chi.order:>5}  {par:>6}  {chi.conductor():>4}  {str(chi.exponents):<9}  {vals}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="mertens-ap", description="Mertens-type constants for primes in arithmetic progressions.")
    ap.add_argument("-v", "--verbose", action="store_true", help="progress logging on stderr")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="compute M, B, C for a range of moduli")
    c.add_argument("--q-from", type=int, required=True)
    c.add_argument("--q-to", type=int, required=True)
    c.add_argument("--kinds", default="M,B,C")
    c.add_argument("--digits", type=int, default=100)
    c.add_argument("--out", required=True)
    c.add_argument("--resume", action="store_true", help="skip (q, kind) pairs already in --out")
    c.add_argument("--threads", type=int, default=None, help="worker processes (default: all cores)")

    v = sub.add_parser("verify", help="check the consistency identities of a result file")
    v.add_argument("--in", dest="inp", required=True)
    v.add_argument("--q-cap", type=int, default=None)
    v.add_argument("--threshold", type=float, default=None, help="default 10^-(digits-5)")
    v.add_argument("--show-all", action="store_true")

    t = sub.add_parser("table", help="print stored values in table layout")
    t.add_argument("--in", dest="inp", required=True)
    t.add_argument("--digits", type=int, default=40)

    k = sub.add_parser("constants", help="Euler's constant or the Meissel-Mertens constant B")
    k.add_argument("name", choices=["gamma", "meissel-mertens"])
    k.add_argument("--digits", type=int, default=100)

    ch = sub.add_parser("characters", help="list the Dirichlet characters mod q")
    ch.add_argument("--q", type=int, required=True)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s", stream=sys.stderr)
    try:
        if args.cmd == "compute":
            rf = cmd_compute(args.q_from, args.q_to, _parse_kinds(args.kinds), args.digits, args.out, args.resume, args.threads)
            bad = [r for r in rf.identities if r["verdict"] != "pass"]
            print(f"{len(rf.records)} records in {args.out}; {len(rf.identities) - len(bad)}/{len(rf.identities)} checks pass")
            return EXIT_VERIFY if bad else EXIT_OK
        if args.cmd == "verify":
            reports, counts = cmd_verify(args.inp, args.q_cap, args.threshold)
            failed = [r for r in reports if not r.passed]
            for r in reports if args.show_all else failed:
                print(f"{r.verdict.upper():4}  {r.kind:<20} {str(r.operands):<16} residual {float(r.residual):.3e}")
            by_kind: Dict[str, int] = {}
            for r in reports:
                by_kind[r.kind] = by_kind.get(r.kind, 0) + 1
            for kind in sorted(by_kind):
                print(f"{kind}: {by_kind[kind]} checked")
            if counts:
                print(f"identity counts up to the largest modulus: total {counts[0]}, independent {counts[1]}")
            print(f"{len(reports) - len(failed)}/{len(reports)} identities pass")
            return EXIT_VERIFY if failed else EXIT_OK
        if args.cmd == "table":
            sys.stdout.write(cmd_table(args.inp, args.digits))
            return EXIT_OK
        if args.cmd == "constants":
            print(cmd_constants(args.name, args.digits))
            return EXIT_OK
        if args.cmd == "characters":
            sys.stdout.write(cmd_characters(args.q))
            return EXIT_OK
    except (UsageError, ResultFormatError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericFault, UnreliableU, BranchError) as exc:
        print(f"numeric fault: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_USAGE  # pragma: no cover


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
