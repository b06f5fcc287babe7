"""Command-line front end.

Exit status: 0 on success, 1 on domain errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .action import apply_word
from .cactus import Word, WordSyntaxError, parse_word
from .diagram import ArcDiagram, InvalidDiagramError, ValenceProfile, require_valid
from .enumeration import DEFAULT_ORACLE_BOUND, brute_force_oracle, count, enumerate_diagrams
from .invariants import component_decomposition, invariant_record
from .orbits import cached_orbit_report
from .relations import (
    check_braid,
    check_defining_relations,
    check_rotation_relation,
    holds_on_set,
    word_order_on_set,
)
from .render import render

CACHE_ENV = "CACTUS_ARCS_CACHE_DIR"


class DomainError(Exception):
    pass


def _profile(text: str) -> ValenceProfile:
    try:
        return ValenceProfile.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--profile", type=_profile, help="valences as 'l1,...,ln:linf'")
    common.add_argument("--word", help="word such as 's(1,2) s(2,4)', applied right to left")
    common.add_argument("--input", help="JSON diagram file (object or array); '-' for stdin")
    common.add_argument("--output", help="write the result here instead of stdout")
    common.add_argument("--format", choices=("json", "svg", "tikz"), default=None)
    common.add_argument("--cache-dir", default=os.environ.get(CACHE_ENV),
                        help=f"orbit report cache (default: ${CACHE_ENV})")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--oracle", action="store_true", help="cross-check against brute force")

    parser = argparse.ArgumentParser(prog="cactus-arcs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("enumerate", parents=[common], help="list every diagram of a profile")
    sub.add_parser("count", parents=[common], help="count diagrams of a profile")
    sub.add_parser("act", parents=[common], help="apply a word to diagrams")
    inv = sub.add_parser("invariants", parents=[common], help="border, gcd, components")
    inv.add_argument("--components", action="store_true", help="also emit the loops; needs even valences")
    sub.add_parser("orbits", parents=[common], help="orbit partition and theorem checks")
    rel = sub.add_parser("check-relations", parents=[common], help="verify relations on X")
    rel.add_argument("--rhs", default=None, help="right-hand word compared against --word")
    ren = sub.add_parser("render", parents=[common], help="draw a diagram as SVG or TikZ")
    ren.add_argument("--index", type=int, default=0, help="which diagram of an array input")
    return parser


def _read_diagrams(path: str) -> tuple[list[ArcDiagram], bool]:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    data = json.loads(text)
    single = isinstance(data, dict)
    items = [data] if single else data
    diagrams = [ArcDiagram.from_dict(item) for item in items]
    for d in diagrams:
        require_valid(d)
    return diagrams, single


def _word(args, n: int | None) -> Word:
    try:
        return parse_word(args.word or "", n)
    except WordSyntaxError as exc:
        raise DomainError(str(exc)) from exc


def _need(parser, args, *names: str) -> None:
    for name in names:
        if getattr(args, name.replace("-", "_")) is None:
            parser.error(f"{args.command} needs --{name}")


def _oracle_check(profile: ValenceProfile, dset) -> None:
    if profile.total > DEFAULT_ORACLE_BOUND:
        raise DomainError(f"profile too large for the oracle (sum {profile.total} > {DEFAULT_ORACLE_BOUND})")
    if brute_force_oracle(profile).keys() != dset.keys():
        raise DomainError("enumeration disagrees with the brute-force oracle")


def run(args, parser) -> object:
    cmd = args.command
    if cmd in ("enumerate", "count", "orbits"):
        _need(parser, args, "profile")
    if cmd in ("act", "render"):
        _need(parser, args, "input")
    if cmd == "act":
        _need(parser, args, "word")
    if cmd in ("invariants", "check-relations") and args.profile is None and args.input is None:
        parser.error(f"{cmd} needs --profile or --input")

    if cmd == "enumerate":
        dset = enumerate_diagrams(args.profile, args.jobs)
        if args.oracle:
            _oracle_check(args.profile, dset)
        return [d.to_dict() for d in dset]

    if cmd == "count":
        n = count(args.profile)
        if args.oracle:
            dset = enumerate_diagrams(args.profile, args.jobs)
            _oracle_check(args.profile, dset)
            if len(dset) != n:
                raise DomainError(f"count {n} disagrees with enumeration {len(dset)}")
        return {"profile": args.profile.to_list(), "count": n}

    if cmd == "act":
        diagrams, single = _read_diagrams(args.input)
        if args.profile is not None and any(d.profile != args.profile for d in diagrams):
            raise DomainError("input diagram does not match --profile")
        out = []
        for d in diagrams:
            word = _word(args, d.n)
            out.append(apply_word(d, word).to_dict())
        return out[0] if single else out

    if cmd == "invariants":
        if args.input is not None:
            diagrams, single = _read_diagrams(args.input)
        else:
            diagrams, single = list(enumerate_diagrams(args.profile, args.jobs)), False
        out = []
        for d in diagrams:
            rec = invariant_record(d).to_dict()
            if args.components:
                if rec["components"] is None:
                    raise DomainError(f"components need even valences; profile is {d.profile}")
                rec["loops"] = [[list(stub) for stub in loop] for loop in component_decomposition(d)]
            out.append({"diagram": d.to_dict(), "invariants": rec})
        return out[0] if single else out

    if cmd == "orbits":
        report = cached_orbit_report(args.profile, args.cache_dir, args.jobs)
        if args.oracle:
            _oracle_check(args.profile, enumerate_diagrams(args.profile, args.jobs))
        return report

    if cmd == "check-relations":
        profile = args.profile
        if profile is None:
            diagrams, _ = _read_diagrams(args.input)
            if not diagrams:
                raise DomainError("empty input")
            profile = diagrams[0].profile
        dset = enumerate_diagrams(profile, args.jobs)
        if args.word is not None:
            lhs = _word(args, profile.n)
            try:
                rhs = parse_word(args.rhs or "", profile.n)
            except WordSyntaxError as exc:
                raise DomainError(str(exc)) from exc
            check = holds_on_set(lhs, rhs, dset)
            result = check.to_dict()
            result["order"] = word_order_on_set(lhs, dset)
            return result
        report = {
            "defining": check_defining_relations(dset),
            "braid": [check_braid(dset, i).to_dict() for i in range(2, profile.n)],
        }
        if profile.n >= 2 and len(set(profile.valences)) == 1:
            report["rotation"] = check_rotation_relation(profile, dset)
        return report

    if cmd == "render":
        diagrams, _ = _read_diagrams(args.input)
        if not 0 <= args.index < len(diagrams):
            raise DomainError(f"index {args.index} out of range for {len(diagrams)} diagrams")
        return render(diagrams[args.index], args.format or "svg")

    raise AssertionError(cmd)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command != "render" and args.format not in (None, "json"):
        parser.error(f"--format {args.format} only applies to render")
    try:
        result = run(args, parser)
    except (DomainError, InvalidDiagramError, WordSyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = result if isinstance(result, str) else json.dumps(result, indent=2) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
