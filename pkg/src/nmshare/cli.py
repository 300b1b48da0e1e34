"""Command-line front door: verify, construct, search, deal, recover, attack.

All output is line-oriented JSON on stdout (pass --pretty for an indented
rendering).  Exit codes: 0 success/valid, 1 checked-invalid, 2 usage or
structural error.  Every randomized subcommand requires an explicit --seed;
identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from .amd import AmdCode
from .catalog import KNOWN_WITNESSES
from .cyclotomic import ConstructionParams, cyclotomic_family, search_parameter_set
from .families import SetFamily, verify_cedf, verify_scedf, verify_sedf
from .fields import PrimeField
from .games import (
    PlainShamirScheme,
    Relation,
    additive_relation_attack,
    derive_trial_seed,
    exact_win_probability,
    play_malleability,
)
from .schemes import ComposedScheme
from .shamir import ShareVector, ThresholdParams
from .shamir import reconstruct as shamir_reconstruct
import random as _random


class CliError(Exception):
    """Structural or usage failure; maps to exit code 2."""


def _emit(obj: dict, pretty: bool) -> None:
    if pretty:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _load_json(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read JSON from {path}: {exc}") from exc


def _load_family(path: str) -> SetFamily:
    try:
        return SetFamily.from_dict(_load_json(path))
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def parse_relation(spec: str, m: int) -> Relation:
    """Parse 'ne', 'shift:C', or 'shifts:a,b,...' against secret space size m."""
    try:
        if spec == "ne":
            return Relation.not_equal()
        if spec.startswith("shift:"):
            return Relation.additive_shift(int(spec.split(":", 1)[1]), m)
        if spec.startswith("shifts:"):
            parts = [int(x) for x in spec.split(":", 1)[1].split(",") if x]
            return Relation.shift_set(parts, m)
    except ValueError as exc:
        raise CliError(f"bad relation {spec!r}: {exc}") from exc
    raise CliError(f"unknown relation {spec!r} (use ne, shift:C, or shifts:a,b)")


def _scheme_from_args(args) -> PlainShamirScheme | ComposedScheme:
    if args.scheme is not None:
        data = _load_json(args.scheme)
        try:
            return ComposedScheme.from_dict(data)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
    if args.p is None or args.k is None or args.n is None:
        raise CliError("give either --scheme FILE or all of --p/--k/--n")
    try:
        return PlainShamirScheme(ThresholdParams(args.k, args.n, PrimeField(args.p)))
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def cmd_verify(args) -> int:
    family = _load_family(args.family)
    modes = [m for m in (args.cedf, args.sedf, args.scedf) if m is not None]
    if len(modes) != 1:
        raise CliError("pick exactly one of --cedf C, --sedf LIST, --scedf C")
    try:
        if args.cedf is not None:
            mode = {"property": "cedf", "c": args.cedf}
            report = verify_cedf(family, args.cedf)
        elif args.scedf is not None:
            mode = {"property": "scedf", "c": args.scedf}
            report = verify_scedf(family, args.scedf)
        else:
            shifts = [int(x) for x in args.sedf.split(",") if x]
            mode = {"property": "sedf", "shifts": shifts}
            report = verify_sedf(family, shifts)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    out = dict(mode)
    out.update(report.to_dict())
    _emit(out, args.pretty)
    return 0 if report.valid else 1


def cmd_construct(args) -> int:
    try:
        params = ConstructionParams(args.q, args.m, args.set_size, args.alpha)
        family = cyclotomic_family(params)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    _emit(family.to_dict(), args.pretty)
    return 0


def cmd_search(args) -> int:
    try:
        result = search_parameter_set(args.q, args.m, args.set_size)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    _emit(result.to_dict(), args.pretty)
    return 0


def cmd_table1(args) -> int:
    passed = 0
    for (q, m, set_size, alpha) in KNOWN_WITNESSES:
        params = ConstructionParams(q, m, set_size, alpha)
        report = verify_cedf(cyclotomic_family(params), 1)
        ok = report.valid and report.lambda_ == 1
        passed += ok
        _emit({"q": q, "m": m, "set_size": set_size, "alpha": alpha,
               "pass": ok}, args.pretty)
    _emit({"rows": len(KNOWN_WITNESSES), "passed": passed}, args.pretty)
    return 0 if passed == len(KNOWN_WITNESSES) else 1


def cmd_deal(args) -> int:
    scheme = _scheme_from_args(args)
    if not 0 <= args.secret < scheme.secret_count:
        raise CliError(
            f"secret must lie in [0, {scheme.secret_count}), got {args.secret}"
        )
    rng = _random.Random(args.seed)
    shares = scheme.share_secret(args.secret, rng)
    _emit(shares.to_dict(), args.pretty)
    return 0


def cmd_recover(args) -> int:
    data = _load_json(args.shares)
    try:
        vector = ShareVector.from_dict(data)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    k = vector.params.k
    if args.use is not None:
        wanted = [int(x) for x in args.use.split(",") if x]
        by_x = {s.x.value: s for s in vector.shares}
        missing = [x for x in wanted if x not in by_x]
        if missing:
            raise CliError(f"no shares with identifiers {missing}")
        chosen = [by_x[x] for x in wanted]
    else:
        chosen = list(vector.shares[:k])
    try:
        if args.scheme is not None:
            scheme = ComposedScheme.from_dict(_load_json(args.scheme))
            if scheme.threshold.field.p != vector.params.field.p:
                raise CliError("share file and scheme use different fields")
            secret = scheme.recover_secret(chosen)
        else:
            secret = shamir_reconstruct(vector.params, chosen).value
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    if secret is None:
        _emit({"detected": True, "secret": None}, args.pretty)
        return 1
    _emit({"detected": False, "secret": secret}, args.pretty)
    return 0


def _attack_wins_range(scheme_data: dict, plain: bool, relation_spec: str,
                       attack_shift: int, t: int, seed: int,
                       start: int, count: int) -> int:
    """Worker for parallel trial counting; rebuilt from plain data so it
    pickles across processes."""
    if plain:
        scheme = PlainShamirScheme(
            ThresholdParams(scheme_data["k"], scheme_data["n"],
                            PrimeField(scheme_data["p"]))
        )
    else:
        scheme = ComposedScheme.from_dict(scheme_data)
    relation = parse_relation(relation_spec, scheme.secret_count)
    adversary = additive_relation_attack(attack_shift)
    wins = 0
    for i in range(start, start + count):
        transcript = play_malleability(scheme, relation, adversary, t,
                                       derive_trial_seed(seed, i))
        wins += transcript.win
    return wins


def cmd_attack_demo(args) -> int:
    scheme = _scheme_from_args(args)
    relation = parse_relation(args.relation, scheme.secret_count)
    if not 1 <= args.t < scheme.threshold.k:
        raise CliError(f"t must lie in [1, {scheme.threshold.k - 1}]")
    exact = exact_win_probability(scheme, relation, args.t)
    attack_shift = exact.best_deltas[0]

    plain = isinstance(scheme, PlainShamirScheme)
    scheme_data = scheme.to_dict()
    trials = args.trials
    workers = max(1, args.parallelism)
    if workers == 1:
        wins = _attack_wins_range(scheme_data, plain, args.relation,
                                  attack_shift, args.t, args.seed, 0, trials)
    else:
        chunk = (trials + workers - 1) // workers
        ranges = [(start, min(chunk, trials - start))
                  for start in range(0, trials, chunk)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_attack_wins_range, scheme_data, plain,
                            args.relation, attack_shift, args.t, args.seed,
                            start, count)
                for start, count in ranges
            ]
            wins = sum(f.result() for f in futures)

    _emit({
        "game": "malleability",
        "scheme": scheme_data,
        "relation": relation.name,
        "t": args.t,
        "exact": {"num": exact.epsilon.numerator,
                  "den": exact.epsilon.denominator},
        "empirical": wins / trials,
        "trials": trials,
        "seed": args.seed,
        "best_deltas": list(exact.best_deltas),
    }, args.pretty)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nmshare",
        description="Threshold sharing, manipulation detection, and "
                    "difference-family tooling.",
    )
    parser.add_argument("--pretty", action="store_true",
                        help="indent JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a family file for a difference property")
    p.add_argument("family", help="family JSON file ('-' for stdin)")
    p.add_argument("--cedf", type=int, metavar="C")
    p.add_argument("--sedf", metavar="C1,C2,...")
    p.add_argument("--scedf", type=int, metavar="C")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build a family from the cyclotomic construction")
    p.add_argument("q", type=int)
    p.add_argument("m", type=int)
    p.add_argument("set_size", type=int)
    p.add_argument("alpha", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="find all witness primitive roots for (q, m, set_size)")
    p.add_argument("q", type=int)
    p.add_argument("m", type=int)
    p.add_argument("set_size", type=int)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("table1", help="re-verify the built-in witness catalog")
    p.set_defaults(func=cmd_table1)

    def add_scheme_flags(p):
        p.add_argument("--scheme", help="composed scheme JSON file")
        p.add_argument("--p", type=int, help="prime modulus (plain sharing)")
        p.add_argument("--k", type=int, help="threshold (plain sharing)")
        p.add_argument("--n", type=int, help="share count (plain sharing)")

    p = sub.add_parser("deal", help="deal shares of a secret")
    add_scheme_flags(p)
    p.add_argument("--secret", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_deal)

    p = sub.add_parser("recover", help="recover a secret from a share file")
    p.add_argument("--shares", required=True, help="share JSON file")
    p.add_argument("--scheme", help="composed scheme JSON file (decode after interpolation)")
    p.add_argument("--use", metavar="X1,X2,...",
                   help="identifiers to reconstruct from (default: first k)")
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("attack-demo",
                       help="exact and empirical win probability of the best offset attack")
    add_scheme_flags(p)
    p.add_argument("--relation", required=True, help="ne, shift:C, or shifts:a,b")
    p.add_argument("--t", type=int, default=1, help="tampered share count")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--parallelism", type=int, default=1,
                   help="worker processes for the empirical trials")
    p.set_defaults(func=cmd_attack_demo)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
