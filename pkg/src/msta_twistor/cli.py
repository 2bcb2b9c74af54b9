"""Command-line entry point: ``msta {verify,point,distance,incidence,bang}``.

Every subcommand prints one line of JSON on stdout.  Exit codes: 0 on
success, 1 for domain or shape errors, 2 for usage and I/O errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import checks, cosmo
from .clifford import format_multivector
from .conformal import ShapeError, conformal_point, extract_coordinates
from .linsolve import SingularMatrixError
from .msta import massless_states
from .sta import ComplexFourVector, FourVector, PauliSpinor
from .twistor import (
    NoUniqueIncidence,
    Twistor,
    bargmann_wigner_decompose,
    charge,
    is_event,
    normalize,
    solve_incidence,
    spin_frame_factor,
    valence2,
)

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2

DOMAIN_ERRORS = (
    cosmo.DomainError,
    cosmo.InfinitePoint,
    ShapeError,
    NoUniqueIncidence,
    SingularMatrixError,
)


class UsageError(Exception):
    pass


def _floats(text: str, n: int, what: str) -> list[float]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != n:
        raise UsageError(f"{what}: expected {n} comma-separated numbers, got {text!r}")
    try:
        return [float(p) for p in parts]
    except ValueError:
        raise UsageError(f"{what}: not a number in {text!r}") from None


def parse_four_vector(text: str, what: str = "four-vector") -> FourVector:
    return FourVector(*_floats(text, 4, what))


def parse_complex_four_vector(text: str, what: str = "four-vector") -> ComplexFourVector:
    re_part, sep, im_part = text.partition(";")
    r = parse_four_vector(re_part, what)
    s = parse_four_vector(im_part, what) if sep else FourVector()
    return ComplexFourVector(r, s)


def parse_twistor(text: str, what: str = "twistor") -> Twistor:
    omega, sep, pi = text.partition("|")
    if not sep:
        raise UsageError(f"{what}: expected 'w0,w1,w2,w3|p0,p1,p2,p3', got {text!r}")
    return Twistor(PauliSpinor(*_floats(omega, 4, what)), PauliSpinor(*_floats(pi, 4, what)))


def _clean(obj):
    # drop signed zeros so equal reports print identically
    if isinstance(obj, float):
        return obj + 0.0
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(_clean(payload), separators=(",", ":")) + "\n")


def _pair(c: complex) -> list[float]:
    return [c.real, c.imag]


def _named_state(state) -> str | None:
    eps, eps_bar = massless_states()
    for name, m in (("eps", eps), ("eps_bar", eps_bar)):
        if state == m:
            return name
    return None


def _resolve_seed(seed: int | None) -> int:
    if seed is not None:
        return seed
    env = os.environ.get("MSTA_SEED")
    if env is None or env == "":
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"MSTA_SEED must be an integer, got {env!r}") from None


def cmd_verify(args) -> int:
    seed = _resolve_seed(args.seed)
    selected = checks.select(args.filter)
    if not selected:
        raise UsageError(f"no checks match filter {args.filter!r}")
    records = [c.run(seed, args.tolerance) for c in selected]
    report = [r.as_json() for r in records]
    failed = [r.id for r in records if not r.passed]
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                json.dump(report, fh, indent=2)
                fh.write("\n")
        except OSError as exc:
            print(f"cannot write report: {exc}", file=sys.stderr)
            return EXIT_USAGE
        _emit({"seed": seed, "checks": len(records), "passed": len(records) - len(failed), "failed": failed})
    else:
        _emit(report)
    for rid in failed:
        print(f"FAIL {rid}", file=sys.stderr)
    return EXIT_OK if not failed else EXIT_DOMAIN


def cmd_point(args) -> int:
    k = parse_complex_four_vector(args.r, "--r")
    p = conformal_point(k, args.scale)
    six = four = None
    if k.is_real:
        coords = extract_coordinates(p)
        six = list(coords.six)
        four = list(coords.four) if coords.four is not None else None
    _emit({
        "state": format_multivector(p.state),
        "name": _named_state(p.state),
        "six": six,
        "four": four,
    })
    return EXIT_OK


def cmd_distance(args) -> int:
    q = parse_four_vector(args.q, "--q")
    r = parse_four_vector(args.r, "--r")
    d = cosmo.distance(args.space, cosmo.null_point(q), cosmo.null_point(r))
    closed = cosmo.closed_form_distance(args.space, q, r)
    _emit({
        "distance": d,
        "method": "twistor-ratio",
        "crosscheck": "closed-form",
        "closed_form": closed,
        "abs_err": abs(d - closed),
    })
    return EXIT_OK


def cmd_incidence(args) -> int:
    z = parse_twistor(args.z, "--z")
    x = parse_twistor(args.x, "--x")
    observer = parse_complex_four_vector(args.observer, "--observer") if args.observer else None
    sol = solve_incidence(z, x)
    r2 = valence2(z, x, observer)
    factor = spin_frame_factor(r2)
    diag = is_event(r2)
    kg = bargmann_wigner_decompose(normalize(r2) if args.normalize else r2)
    charged = abs(charge(r2)) > 1e-9 if not diag.at_infinity else False
    _emit({
        "solution": {"r": list(sol.r), "s": list(sol.s)},
        "event": diag.event,
        "spin_frame_factor": _pair(factor),
        "kg": {
            "alpha": kg.alpha,
            "beta": kg.beta,
            "theta": kg.theta,
            "mu": kg.mu,
            "u": list(kg.u),
            "v": list(kg.v),
            "charged": charged,
        },
    })
    return EXIT_OK


def cmd_bang(args) -> int:
    r = parse_four_vector(args.r, "--r")
    _emit({"bang_time": _pair(cosmo.bang_time(cosmo.null_point(r)))})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="msta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the identity checks")
    v.add_argument("--seed", type=int, default=None, help="sample seed (default: $MSTA_SEED or 0)")
    v.add_argument("--filter", default=None, help="module name or id substring")
    v.add_argument("--out", default=None, help="write the JSON report here")
    v.add_argument("--tolerance", type=float, default=None, help="override every check's tolerance")
    v.set_defaults(func=cmd_verify)

    p = sub.add_parser("point", help="conformal point of a (complex) four-vector")
    p.add_argument("--r", required=True, help="t,x,y,z[;ts,xs,ys,zs]")
    p.add_argument("--scale", type=float, default=1.0)
    p.set_defaults(func=cmd_point)

    d = sub.add_parser("distance", help="distance between two events")
    d.add_argument("--space", required=True, choices=[s.value for s in cosmo.Space])
    d.add_argument("--q", required=True, help="t,x,y,z")
    d.add_argument("--r", required=True, help="t,x,y,z")
    d.set_defaults(func=cmd_distance)

    i = sub.add_parser("incidence", help="intersect two twistors")
    i.add_argument("--z", required=True, help="w0,w1,w2,w3|p0,p1,p2,p3")
    i.add_argument("--x", required=True, help="w0,w1,w2,w3|p0,p1,p2,p3")
    i.add_argument("--observer", default=None, help="t,x,y,z[;ts,xs,ys,zs]")
    i.add_argument("--normalize", action="store_true", help="divide out the spin-frame factor")
    i.set_defaults(func=cmd_incidence)

    b = sub.add_parser("bang", help="bang-twistor product for an observer event")
    b.add_argument("--r", required=True, help="t,x,y,z")
    b.set_defaults(func=cmd_bang)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DOMAIN_ERRORS as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
