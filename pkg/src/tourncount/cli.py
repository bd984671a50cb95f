"""Command-line frontend: generation, counting, bounds, census, verification
suites and Monte-Carlo scans.

All output is deterministic for a fixed argv (seeded generators, no timing or
environment leakage), so goldens diff cleanly.  Exit codes: 0 success,
1 verification failure (first counterexample printed), 2 usage or input
errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from math import comb

from . import acyclic as acyclic_mod
from . import census as census_mod
from . import core, scores
from ._rng import SplitMix64
from .errors import TournamentError

_SCAN_FIELDS = (
    "seed",
    "n",
    "c3",
    "c4",
    "c5",
    "s1",
    "s2",
    "lower_bound",
    "upper_bound",
    "score_variance",
)

_BRUTE_N_CAP = 12  # brute-force cycle counts beyond this get slow fast


def fmt_ratio(x) -> str:
    """Reduced p/q; plain integer when the denominator is 1."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def fmt_decimal(x) -> str:
    """Exact decimal string when the denominator is 2^a * 5^b, else p/q."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    rest = f.denominator
    twos = fives = 0
    while rest % 2 == 0:
        rest //= 2
        twos += 1
    while rest % 5 == 0:
        rest //= 5
        fives += 1
    if rest != 1:
        return fmt_ratio(f)
    digits = max(twos, fives)  # >= 1 here, since the denominator exceeds 1
    scaled = abs(f.numerator) * 10**digits // f.denominator
    text = str(scaled).rjust(digits + 1, "0")
    sign = "-" if f.numerator < 0 else ""
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def _read_tournament(args) -> core.Tournament:
    if args.infile:
        with open(args.infile, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    return core.parse(text)


def _cmd_gen(args) -> int:
    kind = args.kind
    if kind == "random":
        t = core.random_tournament(args.n, args.p, args.seed)
    elif kind == "transitive":
        t = core.transitive(args.n)
    elif kind == "circulant":
        if not args.offsets:
            raise TournamentError("circulant needs --offsets")
        offsets = {int(x) for x in args.offsets.split(",") if x.strip()}
        t = core.circulant(args.n, offsets)
    else:  # qr
        t = core.quadratic_residue(args.n)
    print(core.serialize(t))
    return 0


def _cmd_count(args) -> int:
    t = _read_tournament(args)
    if args.method == "formula":
        if args.k == 3:
            value = scores.c3_closed(t)
        elif args.k == 5:
            value = scores.c5_exact(t).c5
        else:
            raise TournamentError("formula counting covers k in {3,5} only")
    else:
        value = census_mod.count_k_cycles_bruteforce(t, args.k)
    print(value)
    return 0


def _cmd_bounds(args) -> int:
    t = _read_tournament(args)
    breakdown = scores.c5_exact(t)
    print(f"n {t.n}")
    print(f"c5 {breakdown.c5}")
    print(f"s1 {breakdown.s1}")
    print(f"s2 {breakdown.s2}")
    print(f"lower_bound {fmt_ratio(scores.lower_bound_c5(t))}")
    print(f"upper_bound {fmt_ratio(scores.upper_bound_c5(t.n))}")
    print(f"score_variance {fmt_ratio(scores.score_variance(t))}")
    return 0


def _cmd_census(args) -> int:
    t = _read_tournament(args)
    table = census_mod.build_class_table()
    counts = census_mod.census5(t).counts
    for idx in range(census_mod.NUM_CLASSES):
        print(f"{idx} {table.ham_counts[idx]} {counts[idx]}")
    return 0


def _cmd_acyclic(args) -> int:
    t = _read_tournament(args)
    bounds = acyclic_mod.acyclic_bounds(t.n, args.k)
    print(f"count {acyclic_mod.count_acyclic(t, args.k)}")
    print(f"f_lower {fmt_ratio(bounds.f)}")
    print(f"g_expected {fmt_ratio(bounds.g)}")
    return 0


def _cmd_scan(args) -> int:
    gen = SplitMix64(args.seed)
    case_seeds = [gen.next_u64() for _ in range(args.samples)]
    lines = [",".join(_SCAN_FIELDS)]
    for case_seed in case_seeds:
        t = core.random_tournament(args.n, 0.5, case_seed)
        breakdown = scores.c5_exact(t)
        lower = scores.lower_bound_c5(t)
        upper = scores.upper_bound_c5(t.n)
        if not lower <= breakdown.c5 <= upper:
            print(
                f"scan: bound violation at seed {case_seed}: {core.serialize(t)}",
                file=sys.stderr,
            )
            return 1
        c4 = (
            str(census_mod.count_k_cycles_bruteforce(t, 4))
            if t.n <= _BRUTE_N_CAP
            else ""
        )
        lines.append(
            ",".join(
                (
                    str(case_seed),
                    str(t.n),
                    str(scores.c3_closed(t)),
                    c4,
                    str(breakdown.c5),
                    str(breakdown.s1),
                    str(breakdown.s2),
                    fmt_decimal(lower),
                    fmt_decimal(upper),
                    fmt_decimal(scores.score_variance(t)),
                )
            )
        )
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# verify suites


class _Failure(Exception):
    def __init__(self, message: str, t: core.Tournament):
        super().__init__(message)
        self.message = message
        self.serialization = core.serialize(t)


def _require(condition: bool, message: str, t: core.Tournament) -> None:
    if not condition:
        raise _Failure(message, t)


def _fixed_instances() -> list[core.Tournament]:
    return [
        core.transitive(0),
        core.transitive(1),
        core.transitive(2),
        core.transitive(3),
        core.transitive(4),
        core.circulant(3, {1}),
        core.circulant(5, {1, 2}),
        core.circulant(7, {1, 2, 3}),
        core.quadratic_residue(7),
    ]


def _check_identities(t: core.Tournament) -> None:
    core.validate(t)
    n = t.n
    _require(core.parse(core.serialize(t)) == t, "serialize/parse round trip", t)
    od = t.out_degrees()
    sum_d = 0
    terminus_od_sum = 0
    for (u, v), s in scores.edge_scores_iter(t):
        _require(
            s.a + s.b + s.c + s.d == n - 2, f"score sum at arc ({u},{v})", t
        )
        ok = (
            od[u] == 1 + s.a + s.c
            and n - 1 - od[u] == s.b + s.d
            and od[v] == s.a + s.d
            and n - 1 - od[v] == 1 + s.b + s.c
        )
        _require(ok, f"degree identities at arc ({u},{v})", t)
        sum_d += s.d
        terminus_od_sum += od[v]
    _require(
        terminus_od_sum == sum((n - 1 - o) * o for o in od),
        "arc-sum to vertex-sum translation",
        t,
    )
    breakdown = scores.c5_exact(t)
    _require(
        8 * breakdown.c5 == 6 * comb(n, 5) - breakdown.s1 + 2 * breakdown.s2,
        "5-cycle integer identity",
        t,
    )
    c3 = scores.c3_closed(t)
    _require(sum_d == 3 * c3, "3-cycle arc-score identity", t)
    if n <= _BRUTE_N_CAP:
        _require(
            breakdown.c5 == census_mod.count_k_cycles_bruteforce(t, 5),
            "formula vs brute-force 5-cycle count",
            t,
        )
        _require(
            c3 == census_mod.count_k_cycles_bruteforce(t, 3),
            "closed-form vs brute-force 3-cycle count",
            t,
        )
        c4 = census_mod.count_k_cycles_bruteforce(t, 4)
        _require(c4 <= scores.max_c4(n), "4-cycle maximum", t)
    _require(
        scores.lower_bound_c5(t) <= breakdown.c5 <= scores.upper_bound_c5(n),
        "5-cycle bound sandwich",
        t,
    )
    _require(c3 <= scores.max_c3(n), "3-cycle maximum", t)
    s1, mid, vertexform = scores.subtracted_sum_chain(t)
    _require(s1 <= mid, "subtracted sum vs degree form", t)
    _require(mid == vertexform, "degree form vs vertex form", t)
    rev = core.reverse(t)
    _require(
        scores.c5_exact(rev).c5 == breakdown.c5, "reversal invariance of c5", t
    )


def _suite_identities(cases: int, gen: SplitMix64) -> None:
    for t in _fixed_instances():
        _check_identities(t)
    for _ in range(cases):
        seed = gen.next_u64()
        n = 5 + seed % 8
        t = core.random_tournament(n, 0.5, seed)
        _check_identities(t)


def _suite_matrix(cases: int, gen: SplitMix64) -> None:
    table = census_mod.build_class_table()
    rep0 = table.reps[0]
    _require(len(table.reps) == 12, "class count", rep0)
    _require(sum(table.sizes) == 1024, "classes partition 1024 patterns", rep0)
    _require(
        sorted(table.ham_counts) == [0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 3],
        "hamiltonian multiset",
        rep0,
    )
    for j, rep in enumerate(table.reps):
        _require(census_mod.classify5(rep) == j, "representative classification", rep)
    matrix = census_mod.recover_matrix()
    _require(matrix[12] == (1,) * 12, "subset-count row all ones", rep0)
    _require(
        tuple(matrix[13]) == table.ham_counts, "cycle row equals class cycles", rep0
    )
    for j in range(12):
        lhs = 8 * matrix[13][j]
        rhs = (
            -2 * sum(matrix[i][j] for i in range(8))
            + 2 * sum(matrix[i][j] for i in range(8, 12))
            + 6 * matrix[12][j]
        )
        _require(lhs == rhs, f"row relation at class {j}", table.reps[j])
    for _ in range(cases):
        seed = gen.next_u64()
        n = 5 + seed % 6
        t = core.random_tournament(n, 0.5, seed)
        counts = census_mod.census5(t).counts
        _require(sum(counts) == comb(n, 5), "census total", t)
        r = census_mod.r_quantities(t)
        for i in range(14):
            _require(
                r[i] == sum(matrix[i][j] * counts[j] for j in range(12)),
                f"linearity of quantity {i + 1}",
                t,
            )
        _require(
            sum(h * c for h, c in zip(table.ham_counts, counts))
            == census_mod.count_k_cycles_bruteforce(t, 5),
            "census-weighted cycle count",
            t,
        )


def _suite_acyclic(cases: int, gen: SplitMix64) -> None:
    reg5 = core.circulant(5, {1, 2})
    _require(acyclic_mod.f_lower(5, 3) == 5, "f(5,3) value", reg5)
    _require(acyclic_mod.count_acyclic(reg5, 3) == 5, "f(5,3) attained", reg5)
    _require(acyclic_mod.f_lower(3, 3) == 0, "f(3,3) value", core.transitive(3))
    for t in _fixed_instances():
        for k in range(1, 6):
            _require(
                acyclic_mod.count_acyclic(t, k)
                == acyclic_mod.count_acyclic_recursive(t, k),
                f"recursion agreement at k={k}",
                t,
            )
    for _ in range(cases):
        seed = gen.next_u64()
        n = 5 + seed % 8
        k = 3 + seed % 3
        t = core.random_tournament(n, 0.5, seed)
        count = acyclic_mod.count_acyclic(t, k)
        _require(count >= acyclic_mod.f_lower(n, k), f"lower bound at k={k}", t)
        _require(
            count == acyclic_mod.count_acyclic_recursive(t, k),
            f"recursion agreement at k={k}",
            t,
        )
        _require(
            count == acyclic_mod.count_acyclic(core.reverse(t), k),
            f"reversal invariance at k={k}",
            t,
        )
        _require(
            acyclic_mod.count_acyclic(t, 3)
            + census_mod.count_k_cycles_bruteforce(t, 3)
            == comb(n, 3),
            "triples are acyclic or cyclic",
            t,
        )


_SUITES = {
    "identities": _suite_identities,
    "matrix": _suite_matrix,
    "acyclic": _suite_acyclic,
}


def _cmd_verify(args) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        gen = SplitMix64(args.seed)
        try:
            _SUITES[name](args.cases, gen)
        except _Failure as failure:
            print(f"suite {name}: FAIL {failure.message}")
            print(failure.serialization)
            print("verify: fail")
            return 1
        print(f"suite {name}: {args.cases} cases ok")
    print("verify: pass")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tourncount",
        description="Count directed cycles and acyclic subsets in tournaments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a tournament record")
    p_gen.add_argument(
        "--kind",
        required=True,
        choices=("random", "transitive", "circulant", "qr"),
    )
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--p", type=float, default=0.5)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--offsets", default="", help="comma-separated residues")
    p_gen.set_defaults(func=_cmd_gen)

    p_count = sub.add_parser("count", help="count directed k-cycles")
    p_count.add_argument("--k", type=int, required=True, choices=(3, 4, 5))
    p_count.add_argument("--method", choices=("formula", "brute"), default="formula")
    p_count.add_argument("--in", dest="infile", default=None)
    p_count.set_defaults(func=_cmd_count)

    p_bounds = sub.add_parser("bounds", help="exact 5-cycle count and bounds")
    p_bounds.add_argument("--in", dest="infile", default=None)
    p_bounds.set_defaults(func=_cmd_bounds)

    p_census = sub.add_parser("census", help="5-subset class census")
    p_census.add_argument("--in", dest="infile", default=None)
    p_census.set_defaults(func=_cmd_census)

    p_acyclic = sub.add_parser("acyclic", help="acyclic k-subset count and bounds")
    p_acyclic.add_argument("--k", type=int, required=True)
    p_acyclic.add_argument("--in", dest="infile", default=None)
    p_acyclic.set_defaults(func=_cmd_acyclic)

    p_verify = sub.add_parser("verify", help="run property suites")
    p_verify.add_argument(
        "--suite",
        choices=("identities", "matrix", "acyclic", "all"),
        default="all",
    )
    p_verify.add_argument("--cases", type=int, default=100)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.set_defaults(func=_cmd_verify)

    p_scan = sub.add_parser("scan", help="Monte-Carlo scan to CSV")
    p_scan.add_argument("--n", type=int, required=True)
    p_scan.add_argument("--samples", type=int, default=100)
    p_scan.add_argument("--seed", type=int, default=0)
    p_scan.add_argument("--out", default=None)
    p_scan.set_defaults(func=_cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TournamentError as exc:
        print(f"tourncount: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"tourncount: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
