"""Batch command-line front end.

Subcommands: solve-seq, solve-set, elcs, reduce, verify, sat, gen, selftest,
bench.  Exit codes: 0 yes/feasible, 1 no/infeasible, 2 usage or parse error,
3 precondition violation, 4 cap or timeout exceeded.  Verdicts go to stdout,
diagnostics to stderr; --report appends one JSON object per run.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .errors import (
    CapExceededError,
    FamilyMismatchError,
    ParseError,
    PreconditionViolatedError,
    SearchTimeoutError,
)
from .formats import (
    emit_dimacs3,
    emit_name_table,
    emit_seq_genome,
    emit_set_genome,
    parse_dimacs3,
    parse_seq_genome,
    parse_set_genome,
)
from .generate import random_cnf, random_seq_pair, random_set_pair
from .model import (
    Alphabet,
    InstanceClass,
    classify_instance,
    occurrence_profile,
    verify_seq_certificate,
)
from .sat import brute_force_sat, reduce_3sat_to_seq_zed, reduce_3sat_to_set_zed
from .selftest import run_selftest
from .seq import (
    elcs_exact_oracle,
    elcs_special,
    lcs,
    zed_one_side_duplicate_free,
    zed_seq_exact,
    zed_seq_special,
)
from .sets import (
    verify_set_certificate,
    zed_set_exact,
    zed_set_fpt,
    zed_set_matching,
)

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_CAP = 4


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _report_line(args, *, verdict: str, algorithm: str, elapsed_ms: float, witness) -> None:
    if not getattr(args, "report", None):
        return
    line = json.dumps(
        {
            "command": args.command,
            "verdict": verdict,
            "algorithm": algorithm,
            "elapsed_ms": round(elapsed_ms, 3),
            "witness": witness,
        }
    )
    if args.report == "-":
        print(line)
    else:
        with open(args.report, "a", encoding="utf-8") as fh:
            fh.write(line + "\n")


def _check_threads(args) -> None:
    if getattr(args, "threads", 1) < 1:
        raise ValueError("--threads must be at least 1")


def _cmd_solve_seq(args) -> int:
    _check_threads(args)
    g1 = parse_seq_genome(_read(args.g1))
    g2 = parse_seq_genome(_read(args.g2))
    t0 = time.perf_counter()
    algorithm = args.mode
    if args.mode == "auto":
        try:
            cls = classify_instance(g1, g2)
        except FamilyMismatchError:
            cls = None
        if cls is None:
            algorithm, dec = "family-mismatch", None
        elif cls is InstanceClass.BOTH_EXEMPLAR:
            algorithm, dec = "equality", zed_seq_special(g1, g2)
        elif cls is InstanceClass.ONE_SIDE_DUPLICATE_FREE:
            exemplar, other = (g1, g2) if all(
                c == 1 for c in occurrence_profile(g1).values()
            ) else (g2, g1)
            algorithm, dec = "subsequence", zed_one_side_duplicate_free(exemplar, other)
        elif cls is InstanceClass.PER_GENE_SPECIAL:
            algorithm, dec = "special", zed_seq_special(g1, g2)
        else:
            algorithm, dec = "exact", zed_seq_exact(g1, g2, max_families=args.max_families)
    elif args.mode == "special":
        dec = zed_seq_special(g1, g2)
    else:
        dec = zed_seq_exact(g1, g2, max_families=args.max_families)
    elapsed = (time.perf_counter() - t0) * 1000
    answer = bool(dec and dec.answer)
    verdict = "YES" if answer else "NO"
    print(f"{verdict} {algorithm}")
    witness = None
    if answer:
        witness = " ".join(str(g) for g in dec.certificate.genes)
        if args.cert_out:
            _write(args.cert_out, emit_seq_genome(dec.certificate))
    _report_line(args, verdict=verdict, algorithm=algorithm, elapsed_ms=elapsed, witness=witness)
    return EXIT_YES if answer else EXIT_NO


def _cmd_solve_set(args) -> int:
    _check_threads(args)
    g1 = parse_set_genome(_read(args.g1))
    g2 = parse_set_genome(_read(args.g2))
    t0 = time.perf_counter()
    algorithm = args.mode
    if args.mode == "auto":
        try:
            cls = classify_instance(g1, g2)
        except FamilyMismatchError:
            cls = None
        if cls is None:
            algorithm, dec = "family-mismatch", None
        elif cls is not InstanceClass.GENERAL:
            algorithm, dec = "matching", zed_set_matching(g1, g2)
        elif max(len(g1.chromosomes), len(g2.chromosomes)) <= args.max_k:
            algorithm, dec = "fpt", zed_set_fpt(g1, g2, max_k=args.max_k)
        else:
            algorithm, dec = "exact", zed_set_exact(g1, g2, timeout_s=args.timeout)
    elif args.mode == "matching":
        dec = zed_set_matching(g1, g2)
    elif args.mode == "fpt":
        dec = zed_set_fpt(g1, g2, max_k=args.max_k)
    else:
        dec = zed_set_exact(g1, g2, timeout_s=args.timeout)
    elapsed = (time.perf_counter() - t0) * 1000
    answer = bool(dec and dec.answer)
    verdict = "YES" if answer else "NO"
    print(f"{verdict} {algorithm}")
    witness = None
    if answer:
        if dec.witness_permutation is not None:
            witness = [p + 1 for p in dec.witness_permutation]
            print("witness permutation:", " ".join(str(p) for p in witness))
        elif dec.witness_matching is not None:
            witness = sorted([i + 1, j + 1] for i, j in dec.witness_matching.pairs)
            print(
                "witness matching:",
                " ".join(f"{i}-{j}" for i, j in witness),
                f"(weight {dec.witness_matching.total_weight})",
            )
        if args.cert_out:
            _write(args.cert_out, emit_set_genome(dec.certificate))
    _report_line(args, verdict=verdict, algorithm=algorithm, elapsed_ms=elapsed, witness=witness)
    return EXIT_YES if answer else EXIT_NO


def _cmd_elcs(args) -> int:
    a = parse_seq_genome(_read(args.a))
    b = parse_seq_genome(_read(args.b))
    mandatory = frozenset(int(tok) for tok in args.mandatory.replace(",", " ").split())
    alphabet = Alphabet.from_mandatory(mandatory, a.families | b.families)
    t0 = time.perf_counter()
    if args.mode == "special":
        try:
            best = elcs_special(a, b, alphabet)
        except PreconditionViolatedError as exc:
            print(f"precondition violated: {exc}; rerun with --mode oracle", file=sys.stderr)
            return EXIT_PRECONDITION
    else:
        best = elcs_exact_oracle(a, b, alphabet, max_mandatory=args.max_mandatory)
    elapsed = (time.perf_counter() - t0) * 1000
    if best is None:
        print("INFEASIBLE")
        _report_line(args, verdict="INFEASIBLE", algorithm=args.mode, elapsed_ms=elapsed, witness=None)
        return EXIT_NO
    text = " ".join(str(g) for g in best.genes)
    print(f"FEASIBLE {len(best)}")
    print(text)
    if args.out:
        _write(args.out, emit_seq_genome(best))
    _report_line(args, verdict="FEASIBLE", algorithm=args.mode, elapsed_ms=elapsed, witness=text)
    return EXIT_YES


def _cmd_reduce(args) -> int:
    phi = parse_dimacs3(_read(args.cnf))
    n, m = phi.n_vars, len(phi.clauses)
    if args.variant == "seq":
        g1, g2, table = reduce_3sat_to_seq_zed(phi)
        _write(f"{args.out_prefix}.g1", emit_seq_genome(g1))
        _write(f"{args.out_prefix}.g2", emit_seq_genome(g2))
        print(f"len = 3n+12m+1 = {len(g1)}")
    else:
        g1, g2, table = reduce_3sat_to_set_zed(phi)
        _write(f"{args.out_prefix}.g1", emit_set_genome(g1))
        _write(f"{args.out_prefix}.g2", emit_set_genome(g2))
        print(f"g1 genes = n+15m = {g1.total_genes()}")
        print(f"g2 genes = 2n+18m = {g2.total_genes()}")
    _write(f"{args.out_prefix}.tsv", emit_name_table(table))
    return EXIT_YES


def _cmd_verify(args) -> int:
    if args.variant == "seq":
        g1 = parse_seq_genome(_read(args.g1))
        g2 = parse_seq_genome(_read(args.g2))
        cert = parse_seq_genome(_read(args.cert))
        check = verify_seq_certificate(g1, g2, cert)
    else:
        g1 = parse_set_genome(_read(args.g1))
        g2 = parse_set_genome(_read(args.g2))
        cert = parse_set_genome(_read(args.cert))
        check = verify_set_certificate(g1, g2, cert)
    if check.ok:
        print("OK")
        return EXIT_YES
    print(f"FAIL {check.reason}")
    return EXIT_NO


def _cmd_sat(args) -> int:
    phi = parse_dimacs3(_read(args.cnf))
    sigma = brute_force_sat(phi, max_vars=args.max_vars)
    if sigma is None:
        print("UNSAT")
        return EXIT_NO
    print("SAT", " ".join(f"{v}={'T' if sigma[v] else 'F'}" for v in sorted(sigma)))
    return EXIT_YES


def _cmd_gen(args) -> int:
    if args.kind == "cnf":
        if args.vars < 1 or args.clauses < 0:
            print("gen cnf: need --vars >= 1 and --clauses >= 0", file=sys.stderr)
            return EXIT_USAGE
        if args.distinct_vars and args.vars < 3:
            print("gen cnf: --distinct-vars needs --vars >= 3", file=sys.stderr)
            return EXIT_USAGE
        text = emit_dimacs3(
            random_cnf(args.seed, args.vars, args.clauses, distinct_vars=args.distinct_vars)
        )
        if args.out:
            _write(args.out, text)
        else:
            sys.stdout.write(text)
        return EXIT_YES
    if not args.out:
        print(f"gen {args.kind}: --out PREFIX is required", file=sys.stderr)
        return EXIT_USAGE
    if args.families < 1:
        print("gen: need --families >= 1", file=sys.stderr)
        return EXIT_USAGE
    if args.kind == "seq":
        g1, g2 = random_seq_pair(
            args.seed,
            args.families,
            max_occ=args.max_occ,
            special=args.special,
            signed=not args.unsigned,
        )
        _write(f"{args.out}.g1", emit_seq_genome(g1))
        _write(f"{args.out}.g2", emit_seq_genome(g2))
    else:
        if args.chromosomes < 1:
            print("gen set: need --chromosomes >= 1", file=sys.stderr)
            return EXIT_USAGE
        g1, g2 = random_set_pair(
            args.seed,
            args.families,
            args.chromosomes,
            max_occ=args.max_occ,
            special=args.special,
        )
        _write(f"{args.out}.g1", emit_set_genome(g1))
        _write(f"{args.out}.g2", emit_set_genome(g2))
    print(f"wrote {args.out}.g1 and {args.out}.g2")
    return EXIT_YES


def _cmd_selftest(args) -> int:
    if args.budget <= 0:
        print("selftest: budget exhausted before minimum coverage", file=sys.stderr)
        return EXIT_CAP
    report = run_selftest(args.budget, min_cases=args.min_cases, max_cases=args.cases)
    for name, count in report.cases.items():
        print(f"{name}: {count} cases")
    if report.failures:
        for failure in report.failures:
            print(f"FAIL {failure}", file=sys.stderr)
        return EXIT_NO
    if report.exhausted:
        print("selftest: budget exhausted before minimum coverage", file=sys.stderr)
        return EXIT_CAP
    print("selftest: all suites agree")
    return EXIT_YES


def _bench_scenarios():
    from .generate import SplitMix64

    rng = SplitMix64(2024)
    a = parse_seq_genome(" ".join(str(rng.randint(1, 40)) for _ in range(5000)))
    b = parse_seq_genome(" ".join(str(rng.randint(1, 40)) for _ in range(5000)))
    yield "lcs n=m=5000", 5.0, lambda: lcs(a, b)

    s1, s2 = random_set_pair(2024, 2000, 200, special=True)
    yield "matching k=200 |S|=2000", 5.0, lambda: zed_set_matching(s1, s2)

    # gene 9 occurs only in the left genome, so every one of the 8! pairings
    # is scanned before answering NO
    from .model import SetGenome

    f1 = SetGenome.of({1, 9}, {2}, {3}, {4}, {5}, {6}, {7}, {8})
    f2 = SetGenome.of({1}, {2}, {3}, {4}, {5}, {6}, {7}, {8})
    yield "permutation scan k=8", 10.0, lambda: zed_set_fpt(f1, f2, max_k=8)


def _cmd_bench(args) -> int:
    ok = True
    for name, target, fn in _bench_scenarios():
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        status = "ok" if dt < target else "OVER"
        ok &= dt < target
        print(f"{name}: {dt:.2f}s (target < {target:.0f}s) {status}")
    return EXIT_YES if ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zed",
        description="Zero exemplar distance toolkit: solvers, reductions, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve-seq", help="decide zero exemplar distance for ordered genomes")
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("--mode", choices=["auto", "special", "exact"], default="auto")
    p.add_argument("--cert-out", help="write the certificate here on YES")
    p.add_argument("--max-families", type=int, default=25, help="cap for the exact search")
    p.add_argument("--report", help="append a JSON report line to this file ('-' for stdout)")
    p.add_argument("--threads", type=int, default=1, help="worker cap (this build is single-threaded)")
    p.set_defaults(func=_cmd_solve_seq)

    p = sub.add_parser("solve-set", help="decide zero exemplar distance for unordered genomes")
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("--mode", choices=["auto", "matching", "fpt", "exact"], default="auto")
    p.add_argument("--cert-out")
    p.add_argument("--max-k", type=int, default=10, help="chromosome cap for the permutation scan")
    p.add_argument("--timeout", type=float, default=120.0, help="wall budget for the exact search (s)")
    p.add_argument("--report")
    p.add_argument("--threads", type=int, default=1, help="worker cap (this build is single-threaded)")
    p.set_defaults(func=_cmd_solve_set)

    p = sub.add_parser("elcs", help="longest common subsequence containing all mandatory symbols")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--mandatory", default="", help="comma- or space-separated mandatory families")
    p.add_argument("--mode", choices=["special", "oracle"], default="special")
    p.add_argument("--max-mandatory", type=int, default=15, help="cap for oracle mode")
    p.add_argument("--out", help="write the subsequence here when feasible")
    p.add_argument("--report")
    p.set_defaults(func=_cmd_elcs)

    p = sub.add_parser("reduce", help="compile a 3-CNF formula into a genome pair")
    p.add_argument("--variant", choices=["seq", "set"], required=True)
    p.add_argument("cnf")
    p.add_argument("--out-prefix", required=True)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("verify", help="check a distance-zero certificate")
    p.add_argument("--variant", choices=["seq", "set"], required=True)
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("cert")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sat", help="brute-force satisfiability of a 3-CNF formula")
    p.add_argument("cnf")
    p.add_argument("--max-vars", type=int, default=24)
    p.set_defaults(func=_cmd_sat)

    p = sub.add_parser("gen", help="generate seeded random instances")
    p.add_argument("kind", choices=["cnf", "seq", "set"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output file (cnf) or file prefix (seq/set)")
    p.add_argument("--vars", type=int, default=3)
    p.add_argument("--clauses", type=int, default=2)
    p.add_argument("--distinct-vars", action="store_true",
                   help="no clause repeats a variable (required by the set reduction)")
    p.add_argument("--families", type=int, default=6)
    p.add_argument("--chromosomes", type=int, default=3)
    p.add_argument("--max-occ", type=int, default=2,
                   help="occurrence bound per family per genome")
    p.add_argument("--special", action="store_true",
                   help="force every family to occur exactly once in at least one genome")
    p.add_argument("--unsigned", action="store_true", help="positive orientations only (seq)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("selftest", help="run the cross-algorithm equivalence suites")
    p.add_argument("--budget", type=float, default=20.0, help="wall budget in seconds")
    p.add_argument("--cases", type=int, default=100, help="max cases per suite")
    p.add_argument("--min-cases", type=int, default=10, help="minimum coverage per suite")
    p.set_defaults(func=_cmd_selftest)

    p = sub.add_parser("bench", help="complexity smoke benchmarks")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionViolatedError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (CapExceededError, SearchTimeoutError) as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except FamilyMismatchError as exc:
        print(f"family mismatch: {exc}", file=sys.stderr)
        return EXIT_NO
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
