"""Command-line driver.

Spec-string grammar (EBNF):

    spec     = "trivial" | "d8" | "q8"
             | "e1:" params | "e2:" params
             | "pauli:" params | "heis:" params | "lifted:" params ;
    params   = param { "," param } ;
    param    = key "=" value ;

Recognized keys: p, m, n (integers); R (carrier: "gf(q)" or "z(q)");
cocycle ("symplectic" | "polarized"); reduced ("true" | "false").

Examples: "pauli:p=2,n=1", "heis:R=gf(3),n=1,cocycle=symplectic,
reduced=true", "lifted:p=3,m=2,n=1", "e1:p=3".

Exit codes: 0 success (including refuted paper claims), 2 parse error,
3 size cap exceeded, 4 oracle self-inconsistency.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import ZmodRing, field_make, is_prime
from .census import (abelian_census, bounds_check, export_dot, export_json,
                     hasse, paper_figure_lattice)
from .groupcore import (ClosureCapError, DEFAULT_CLOSURE_CAP,
                        DEFAULT_SUBGROUP_CAP, FiniteGroup,
                        GroupStructureError, SubgroupCapError)
from .heisenberg import HeisenbergSpec, heis_group
from .lifted import LiftedPauliSpec, lifted_group, pi_image_group, pi_kernel
from .pauli import PauliGroupSpec, pauli_group
from .products import (classify_special, decompose_pauli_chain,
                       extraspecial_decompose, reference_group)
from .reports import dump_json


class SpecError(ValueError):
    pass


def _parse_params(text: str) -> dict:
    params = {}
    for piece in text.split(","):
        if "=" not in piece:
            raise SpecError(f"malformed parameter {piece!r}")
        key, value = piece.split("=", 1)
        params[key.strip()] = value.strip()
    return params


def _check_keys(params: dict, allowed: tuple) -> None:
    extra = set(params) - set(allowed)
    if extra:
        raise SpecError(f"unknown parameter(s): {', '.join(sorted(extra))}")


def _int_param(params: dict, key: str, default=None) -> int:
    if key not in params:
        if default is None:
            raise SpecError(f"missing parameter {key!r}")
        return default
    try:
        return int(params[key])
    except ValueError:
        raise SpecError(f"parameter {key!r} must be an integer")


def _parse_carrier(text: str):
    text = text.lower()
    for prefix, kind in (("gf(", "field"), ("z(", "ring")):
        if text.startswith(prefix) and text.endswith(")"):
            try:
                q = int(text[len(prefix):-1])
            except ValueError:
                raise SpecError(f"bad carrier size in {text!r}")
            p, m = _prime_power(q)
            return field_make(p, m) if kind == "field" else ZmodRing(p, m)
    raise SpecError(f"carrier must be gf(q) or z(q), got {text!r}")


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if is_prime(p) and q % p == 0:
            m = 0
            r = q
            while r % p == 0:
                r //= p
                m += 1
            if r != 1:
                break
            return p, m
    raise SpecError(f"{q} is not a prime power")


def parse_spec(text: str):
    """Parse a group spec string into a (kind, spec-object) pair."""
    text = text.strip()
    if text == "trivial":
        return "trivial", None
    if text in ("d8", "q8"):
        return "reference", (text, None)
    head, _, rest = text.partition(":")
    if head in ("e1", "e2"):
        params = _parse_params(rest) if rest else {}
        _check_keys(params, ("p",))
        p = _int_param(params, "p")
        return "reference", (head, p)
    if head == "pauli":
        params = _parse_params(rest)
        _check_keys(params, ("p", "m", "n"))
        p = _int_param(params, "p")
        if not is_prime(p):
            raise SpecError(f"p must be prime, got {p}")
        m = _int_param(params, "m", 1)
        n = _int_param(params, "n", 1)
        try:
            return "pauli", PauliGroupSpec(p, m, n)
        except ValueError as exc:
            raise SpecError(str(exc))
    if head == "heis":
        params = _parse_params(rest)
        _check_keys(params, ("R", "n", "cocycle", "reduced"))
        carrier = _parse_carrier(params.get("R", "gf(3)"))
        n = _int_param(params, "n", 1)
        cocycle = params.get("cocycle", "symplectic")
        reduced = params.get("reduced", "false").lower() == "true"
        try:
            return "heis", HeisenbergSpec(carrier, n, cocycle, reduced)
        except ValueError as exc:
            raise SpecError(str(exc))
    if head == "lifted":
        params = _parse_params(rest)
        _check_keys(params, ("p", "m", "n"))
        p = _int_param(params, "p")
        if not is_prime(p):
            raise SpecError(f"p must be prime, got {p}")
        m = _int_param(params, "m", 1)
        n = _int_param(params, "n", 1)
        try:
            return "lifted", LiftedPauliSpec(p, m, n)
        except ValueError as exc:
            raise SpecError(str(exc))
    raise SpecError(f"unknown spec {text!r}")


def build_group(kind: str, spec, closure_cap: int) -> FiniteGroup:
    if kind == "trivial":
        return FiniteGroup([0], lambda a, b: 0, name="1")
    if kind == "reference":
        name, p = spec
        return reference_group(name, p)
    if kind == "pauli":
        return pauli_group(spec, closure_cap)
    if kind == "heis":
        return heis_group(spec, closure_cap)
    if kind == "lifted":
        return lifted_group(spec, closure_cap)
    raise SpecError(f"cannot build {kind!r}")


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        tmp = out_path + ".tmp"
        with open(tmp, "w") as fh:
            fh.write(text)
        os.replace(tmp, out_path)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def cmd_build(args) -> int:
    kind, spec = parse_spec(args.spec)
    g = build_group(kind, spec, args.cap_closure)
    report = g.report()
    if args.format == "text":
        lines = [f"{k}: {v}" for k, v in report.items()]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(dump_json(report) + "\n", args.out)
    return 0


def cmd_decompose(args) -> int:
    kind, spec = parse_spec(args.spec)
    if kind == "pauli" and spec.p == 2:
        rep = decompose_pauli_chain(spec.n)
    else:
        g = build_group(kind, spec, args.cap_closure)
        rep = extraspecial_decompose(g)
    _emit(dump_json(rep) + "\n", args.out)
    return 0


def cmd_census(args) -> int:
    kind, spec = parse_spec(args.spec)
    g = build_group(kind, spec, args.cap_closure)
    result = abelian_census(g, args.cap_subgroups)
    _emit(dump_json(result) + "\n", args.out)
    return 0


def cmd_lattice(args) -> int:
    kind, spec = parse_spec(args.spec)
    if args.filter == "paper_figure":
        if kind == "reference" and spec[0] == "d8":
            lat = paper_figure_lattice("d8")
        elif kind == "pauli" and (spec.p, spec.m, spec.n) == (2, 1, 1):
            lat = paper_figure_lattice("p12")
        elif kind == "heis" and spec.n == 1 and spec.carrier.size == 3:
            lat = paper_figure_lattice("heis")
        else:
            raise SpecError(
                "paper_figure filter applies to d8, pauli:p=2,n=1, or "
                "heis:R=gf(3),n=1")
    else:
        g = build_group(kind, spec, args.cap_closure)
        lat = hasse(g, cap=args.cap_subgroups)
    text = export_dot(lat) if args.format == "dot" else export_json(lat) + "\n"
    _emit(text, args.out)
    return 0


def cmd_lifted(args) -> int:
    kind, spec = parse_spec(args.spec if ":" in args.spec
                            else "lifted:" + args.spec)
    if kind != "lifted":
        raise SpecError("the lifted subcommand expects a lifted spec")
    g = lifted_group(spec, args.cap_closure)
    image = pi_image_group(spec, args.cap_closure)
    kernel = pi_kernel(spec)
    report = {
        "spec": {"p": spec.p, "m": spec.m, "n": spec.n},
        "order": g.order,
        "exponent": g.exponent,
        "kernel_order": len(kernel),
        "image_order": image.order,
        "image_exponent": image.exponent,
    }
    _emit(dump_json(report) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    from .claims import CHECKS, run_suite
    scope = args.scope
    if scope != "all" and scope not in CHECKS:
        raise SpecError(f"unknown claim id {scope!r}; known: "
                        + ", ".join(sorted(CHECKS)))
    reports = run_suite(scope)
    _emit(dump_json([r.to_json() for r in reports]) + "\n", args.out)
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paulidecomp",
        description="Exact construction, decomposition, and claim "
                    "verification for Pauli and Heisenberg groups.",
        epilog=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    env_cap = os.environ.get("PAULIDECOMP_CAP_OVERRIDE")
    default_closure = DEFAULT_CLOSURE_CAP
    default_subgroups = DEFAULT_SUBGROUP_CAP
    if env_cap:
        try:
            default_closure = default_subgroups = int(env_cap)
        except ValueError:
            pass
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_spec=True):
        if needs_spec:
            p.add_argument("spec", help="group spec string")
        p.add_argument("--format", choices=("json", "dot", "text"),
                       default="json")
        p.add_argument("--out", default=None, help="output path")
        p.add_argument("--cap-closure", type=int, default=default_closure)
        p.add_argument("--cap-subgroups", type=int, default=default_subgroups)
        p.add_argument("--seed", type=int, default=0,
                       help="seed for sampled checks (outputs stay "
                            "deterministic)")
        p.add_argument("--exhaustive", action="store_true")

    p_build = sub.add_parser("build", help="construct a group, print report")
    common(p_build)
    p_build.set_defaults(func=cmd_build)

    p_dec = sub.add_parser("decompose", help="weak central decomposition")
    common(p_dec)
    p_dec.set_defaults(func=cmd_decompose)

    p_cen = sub.add_parser("census", help="abelian subgroup census")
    common(p_cen)
    p_cen.set_defaults(func=cmd_census)

    p_lat = sub.add_parser("lattice", help="Hasse diagram export")
    common(p_lat)
    p_lat.add_argument("--filter", choices=("all", "paper_figure"),
                       default="all")
    p_lat.set_defaults(func=cmd_lattice)

    p_lift = sub.add_parser("lifted", help="lifted group projection report")
    common(p_lift)
    p_lift.set_defaults(func=cmd_lifted)

    p_ver = sub.add_parser("verify", help="run registered claim verdicts")
    p_ver.add_argument("scope", nargs="?", default="all",
                       help="claim id or 'all'")
    common(p_ver, needs_spec=False)
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ClosureCapError, SubgroupCapError) as exc:
        print(f"error: cap exceeded: {exc}", file=sys.stderr)
        return 3
    except GroupStructureError as exc:
        print(f"error: oracle self-inconsistency: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
