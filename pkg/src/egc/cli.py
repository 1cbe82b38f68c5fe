"""Command-line front end: compute coefficients, inspect permutations,
enumerate tableaux, and run the verification suites.

Exit codes: 0 success, 1 usage or domain error, 2 structurally-zero result
(the zero output is still printed).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .perms import Permutation, code_of, code_shape_flag
from .pipeline import build_context, j_coefficient
from .ring import DEFAULT_PRIME, GrahamSum, is_prime
from .shapes import Flag, Partition, SkewShape, is_compatible
from .tableaux import EnumSpec, enumerate_tableaux
from .verify import SUITES, verify_identities


@dataclass(frozen=True)
class RunConfig:
    prime: int = DEFAULT_PRIME
    seed: int = 0
    trials: int = 5
    window: tuple[int, int] = (-3, 3)
    max_size: int = 4
    flag_range: tuple[int, int] = (-2, 3)
    fmt: str = "text"
    jobs: int = 1

    def __post_init__(self):
        if not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        for lo, hi in (self.window, self.flag_range):
            if lo > hi:
                raise ValueError(f"empty range {lo}:{hi}")


def parse_ints(text: str) -> tuple[int, ...]:
    """Comma-separated integers; the empty string is the empty tuple."""
    if not text.strip():
        return ()
    return tuple(int(v) for v in text.split(","))


def parse_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    return (int(lo), int(hi))


def config_from(args: argparse.Namespace) -> RunConfig:
    kw = {}
    for name in ("prime", "seed", "trials", "max_size", "jobs"):
        if getattr(args, name, None) is not None:
            kw[name] = getattr(args, name)
    for name in ("window", "flag_range"):
        if getattr(args, name, None) is not None:
            kw[name] = parse_range(getattr(args, name))
    if getattr(args, "format", None) is not None:
        kw["fmt"] = args.format
    return RunConfig(**kw)


def cmd_j(args) -> int:
    cfg = config_from(args)
    lam = Partition(parse_ints(args.lam))
    phi = Flag(parse_ints(args.phi))
    rho = Partition(parse_ints(args.rho))
    if not is_compatible(lam, phi):
        raise ValueError(f"flag {phi.bounds} not compatible with {lam.parts}")
    structural_zero = not lam.contains(rho)
    if structural_zero:
        ctx = None
        result = GrahamSum.zero()
    else:
        ctx = build_context(lam, phi, rho)
        result = j_coefficient(lam, phi, rho)
        structural_zero = ctx.nu is None
    norm = lam.size - rho.size
    if cfg.fmt == "json":
        payload = json.loads(result.to_json(norm))
        payload.update({
            "lambda": list(lam.parts), "phi": list(phi.bounds),
            "rho": list(rho.parts),
            "nu": list(ctx.nu.parts) if ctx and ctx.nu is not None else None,
            "q": ctx.q if ctx else None,
            "case": ctx.case if ctx else "zero",
        })
        print(json.dumps(payload, indent=1))
    else:
        header = f"beta^{norm} * j[lambda={lam.parts} phi={phi.bounds} " \
            f"rho={rho.parts}]"
        if result.is_zero():
            print(header, "= 0")
        else:
            print(header, "=")
            for line in result.text_lines():
                print("  " + line)
    return 2 if structural_zero else 0


def cmd_perm(args) -> int:
    if args.oneline is not None:
        images = parse_ints(args.oneline)
        w = Permutation.from_one_line(images, args.base) if images \
            else Permutation.identity()
    else:
        w = Permutation.from_word(parse_ints(args.word))
    info = {"permutation": str(w), "length": w.length(),
            "descents": w.descents(), "vexillary": w.is_vexillary(),
            "code": {str(k): v for k, v in sorted(code_of(w).items())}}
    if info["vexillary"]:
        csf = code_shape_flag(w)
        info["shape"] = list(csf.shape.parts)
        info["flag"] = list(csf.flag.bounds)
    if getattr(args, "format", None) == "json":
        print(json.dumps(info, indent=1))
    else:
        for k, v in info.items():
            print(f"{k}: {v}")
    return 0


def cmd_tableaux(args) -> int:
    cfg = config_from(args)
    lam = Partition(parse_ints(args.lam))
    mu = Partition(parse_ints(args.mu))
    flag = Flag(parse_ints(args.flag)) if args.flag is not None else None
    spec = EnumSpec(SkewShape(lam, mu), flag, args.sign, cfg.window)
    count = 0
    for t in enumerate_tableaux(spec):
        count += 1
        print(t.to_text())
    print(f"# {count} tableaux", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    cfg = config_from(args)
    report = verify_identities(
        args.suite, prime=cfg.prime, seed=cfg.seed, trials=cfg.trials,
        max_size=cfg.max_size, flag_range=cfg.flag_range, window=cfg.window,
        jobs=cfg.jobs)
    if cfg.fmt == "json":
        print(json.dumps(report, indent=1))
    else:
        for sub in report.get("suites", [report]):
            status = "pass" if sub["ok"] else "FAIL"
            print(f"{sub['suite']}: {status} "
                  f"({sub['instances']} instances, {sub['checks']} checks)")
            for f in sub["failures"]:
                print(f"  {f}")
    return 0 if report["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="egc",
        description="Vexillary double beta-Edelman-Greene coefficients")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--prime", type=int)
        p.add_argument("--seed", type=int)
        p.add_argument("--trials", type=int)
        p.add_argument("--window", metavar="lo:hi")
        p.add_argument("--format", choices=("text", "json"))

    pj = sub.add_parser("j", help="compute a coefficient")
    pj.add_argument("--lambda", dest="lam", required=True, metavar="PARTS")
    pj.add_argument("--phi", required=True, metavar="BOUNDS")
    pj.add_argument("--rho", required=True, metavar="PARTS")
    common(pj)
    pj.set_defaults(func=cmd_j)

    pp = sub.add_parser("perm", help="inspect a permutation")
    group = pp.add_mutually_exclusive_group(required=True)
    group.add_argument("--word", metavar="LETTERS")
    group.add_argument("--oneline", metavar="IMAGES")
    pp.add_argument("--base", type=int, default=1)
    pp.add_argument("--format", choices=("text", "json"))
    pp.set_defaults(func=cmd_perm)

    pt = sub.add_parser("tableaux", help="enumerate flagged tableaux")
    pt.add_argument("--lambda", dest="lam", required=True, metavar="PARTS")
    pt.add_argument("--mu", default="", metavar="PARTS")
    pt.add_argument("--flag", metavar="BOUNDS")
    pt.add_argument("--sign", choices=("positive", "nonpositive", "any"),
                    default="any")
    common(pt)
    pt.set_defaults(func=cmd_tableaux)

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("--suite", choices=SUITES + ("all",), default="all")
    pv.add_argument("--max-size", dest="max_size", type=int)
    pv.add_argument("--flag-range", dest="flag_range", metavar="lo:hi")
    pv.add_argument("--jobs", type=int)
    common(pv)
    pv.set_defaults(func=cmd_verify)
    return parser


LIST_FLAGS = ("--lambda", "--phi", "--rho", "--mu", "--flag", "--word",
              "--oneline", "--window", "--flag-range")


def _join_list_values(argv: list[str]) -> list[str]:
    """Fold "--phi -1,0,2" into "--phi=-1,0,2" so values that start with a
    minus sign survive option parsing."""
    out, skip = [], False
    for k, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok in LIST_FLAGS and k + 1 < len(argv) \
                and argv[k + 1].startswith("-"):
            out.append(f"{tok}={argv[k + 1]}")
            skip = True
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_list_values(
        list(sys.argv[1:] if argv is None else argv)))
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
