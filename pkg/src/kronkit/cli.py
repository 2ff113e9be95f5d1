"""Command-line front end.

Exit-code discipline, used by every subcommand:

* 0 — accepted / true / success,
* 1 — rejected / false / unknown / not found,
* 2 — malformed input (parse errors, shape mismatches, exceeded caps);
  never used for a valid rejection.

All file formats are JSON with rationals as ``"num/den"`` strings, so
certificates are bit-exact across platforms.
"""

from __future__ import annotations

import argparse
import json
import sys

from .diagrams import KronInstance, make_instance, parse_young
from .errors import KronkitError
from .marginals import (
    MembershipCertificate,
    accept_threshold2,
    frobenius_gap2,
    reduced_densities,
    verify_membership,
)
from .oracle import DEFAULT_ORACLE_CAP, kron_coeff, semigroup_member
from .ressayre import RessayreCertificate, verify_nonmembership
from .scalars import format_rational
from .search import (
    DEFAULT_ENUM_CAP_M,
    DEFAULT_SUBSET_BUDGET,
    FacetSystem,
    enumerate_ressayre,
    reduce_irredundant,
    sample_spectra,
    search_witness,
    spectra_csv,
)

EXIT_ACCEPT = 0
EXIT_REJECT = 1
EXIT_MALFORMED = 2


class InputError(Exception):
    """Anything that should map to exit code 2."""


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_instance(path: str) -> KronInstance:
    obj = _load_json(path)
    try:
        return KronInstance.from_json(obj)
    except (KronkitError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad instance file {path}: {exc}") from exc


def _parse_partition(text: str):
    try:
        return parse_young([int(tok) for tok in text.split(",") if tok.strip()])
    except (KronkitError, ValueError) as exc:
        raise InputError(f"bad partition {text!r}: {exc}") from exc


def _emit(payload: dict | None, as_json: bool, lines: list[str]) -> None:
    if as_json and payload is not None:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def cmd_verify_nonmembership(args) -> int:
    inst = _load_instance(args.instance)
    try:
        cert = RessayreCertificate.from_json(_load_json(args.certificate))
        verdict = verify_nonmembership(inst, cert)
    except (KronkitError, KeyError, TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    payload = {"instance": inst.to_json(), "verdict": str(verdict)}
    if verdict.accepted:
        lhs = cert.h.pair_instance(inst.padded_rows())
        rhs = inst.k * cert.h.z
        payload["violated_inequality"] = {"H.lambda": lhs, "k.z": rhs}
        _emit(
            payload,
            args.json,
            [
                f"Accept: certified non-membership for {inst}",
                f"  violated inequality: H·lambda = {lhs} < k·z = {rhs}",
            ],
        )
        return EXIT_ACCEPT
    _emit(payload, args.json, [f"Reject ({verdict.reason.value}) for {inst}"])
    return EXIT_REJECT


def cmd_verify_membership(args) -> int:
    inst = _load_instance(args.instance)
    try:
        cert = MembershipCertificate.from_json(_load_json(args.certificate))
        verdict = verify_membership(inst, cert)
        gap2 = frobenius_gap2(reduced_densities(cert, check_psd=False), inst)
    except (KronkitError, KeyError, TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    thr2 = accept_threshold2(inst.m, inst.k)
    payload = {
        "instance": inst.to_json(),
        "verdict": str(verdict),
        "gap2": format_rational(gap2),
        "threshold2": format_rational(thr2),
    }
    lines = [
        f"{verdict} for {inst}",
        f"  exact gap^2       = {format_rational(gap2)}",
        f"  exact threshold^2 = {format_rational(thr2)}",
    ]
    _emit(payload, args.json, lines)
    return EXIT_ACCEPT if verdict.accepted else EXIT_REJECT


def cmd_find_witness(args) -> int:
    inst = _load_instance(args.instance)
    cert = search_witness(inst, seed=args.seed, max_iters=args.max_iters)
    if cert is None:
        print(f"NotFound: no verified witness for {inst}")
        return EXIT_REJECT
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(cert.to_json(), fh, indent=2)
        fh.write("\n")
    print(f"Accept: verified witness written to {args.out}")
    return EXIT_ACCEPT


def cmd_facets(args) -> int:
    if args.m > args.max_m:
        raise InputError(f"m={args.m} exceeds the enumeration cap {args.max_m}")
    try:
        fs = enumerate_ressayre(
            args.m, budget=args.budget, seed=args.seed, threads=args.threads
        )
    except KronkitError as exc:
        raise InputError(str(exc)) from exc
    if args.irredundant:
        fs = reduce_irredundant(fs)
    text = json.dumps(fs.to_json(), indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(
            f"{len(fs.nontrivial)} nontrivial inequalities at m={args.m} "
            f"written to {args.out}"
        )
    else:
        sys.stdout.write(text)
    return EXIT_ACCEPT


def cmd_kron(args) -> int:
    diagrams = [_parse_partition(t) for t in (args.lam_a, args.lam_b, args.lam_c)]
    k = diagrams[0].boxes
    if k > args.cap:
        raise InputError(f"k={k} exceeds the oracle cap {args.cap}")
    try:
        g = kron_coeff(*diagrams)
    except KronkitError as exc:
        raise InputError(str(exc)) from exc
    print(g)
    return EXIT_ACCEPT if g > 0 else EXIT_REJECT


def cmd_member_bruteforce(args) -> int:
    inst = _load_instance(args.instance)
    try:
        result = semigroup_member(inst, args.lmax, cap=args.cap)
    except KronkitError as exc:
        raise InputError(str(exc)) from exc
    if result is None:
        print("Unknown")
        return EXIT_REJECT
    print(f"Yes({result})")
    return EXIT_ACCEPT


def cmd_sample(args) -> int:
    text = spectra_csv(sample_spectra(args.m, args.n, args.seed))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"{args.n} spectra at m={args.m} written to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_ACCEPT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kronkit",
        description="Exact certificates for the polytope of marginal spectra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "verify-nonmembership", help="check a hyperplane certificate exactly"
    )
    p.add_argument("instance", help="instance JSON file")
    p.add_argument("certificate", help="certificate JSON file")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_verify_nonmembership)

    p = sub.add_parser(
        "verify-membership", help="check a witness-vector certificate exactly"
    )
    p.add_argument("instance", help="instance JSON file")
    p.add_argument("certificate", help="certificate JSON file")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_verify_membership)

    p = sub.add_parser("find-witness", help="search for a verified witness vector")
    p.add_argument("instance", help="instance JSON file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iters", type=int, default=400)
    p.add_argument("--out", default="witness.json", help="output certificate path")
    p.set_defaults(func=cmd_find_witness)

    p = sub.add_parser("facets", help="enumerate hyperplane certificates")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_SUBSET_BUDGET)
    p.add_argument("--irredundant", action="store_true")
    p.add_argument("--max-m", type=int, default=DEFAULT_ENUM_CAP_M)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--threads",
        type=int,
        default=None,
        help="parallel batches (default: KRONKIT_THREADS or 1)",
    )
    p.add_argument("--out", default=None, help="output JSON path (default stdout)")
    p.set_defaults(func=cmd_facets)

    p = sub.add_parser("kron", help="exact multiplicity of a diagram triple")
    p.add_argument("lam_a", help="comma-separated rows, e.g. 2,1")
    p.add_argument("lam_b")
    p.add_argument("lam_c")
    p.add_argument("--cap", type=int, default=DEFAULT_ORACLE_CAP)
    p.set_defaults(func=cmd_kron)

    p = sub.add_parser(
        "member-bruteforce", help="stretched-multiplicity membership probe"
    )
    p.add_argument("instance", help="instance JSON file")
    p.add_argument("--lmax", type=int, default=4)
    p.add_argument("--cap", type=int, default=DEFAULT_ORACLE_CAP)
    p.set_defaults(func=cmd_member_bruteforce)

    p = sub.add_parser("sample", help="Monte-Carlo spectra as CSV")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="output CSV path (default stdout)")
    p.set_defaults(func=cmd_sample)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
