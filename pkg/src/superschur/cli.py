"""Command-line front end.

Exit status: 0 when every check passes, 1 when a check fails (or is
inconclusive), 2 on usage errors, malformed input or exceeded caps.

Caps default to ``--max-partition-size 6`` and ``--max-space-dim 3``; the
environment variables ``SUPERSCHUR_MAX_PARTITION_SIZE`` and
``SUPERSCHUR_MAX_SPACE_DIM`` override the defaults.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .calculus import (
    CheckResult,
    check_p4_inequality,
    check_property_S,
    check_property_S_op,
    check_theorem_p2b,
    dim_exact_report,
    schur_vanishes,
    superdim_from_vanishing,
    vanishing_set,
)
from .errors import CapExceeded, SuperSchurError
from .partitions import Partition, lr_coefficient
from .schur import graded_dimension, idempotent_rank, schur_dimension
from .suites import RunConfig, run_suite
from .supervec import InterchangeError, SuperDim, SuperSpace, ZeroSequence, map_from_json, map_to_json
from .symgroup import MAX_CLASS_DEGREE

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _env_int(key: str, default: int) -> int:
    raw = os.environ.get(key)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{key} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="superschur", allow_abbrev=False, description="Schur functors on super vector spaces over Q.")
    p.add_argument("--max-partition-size", type=int, default=None, help="cap on |λ| (default 6)")
    p.add_argument("--max-space-dim", type=int, default=None, help="cap on even+odd (default 3)")
    p.add_argument("--output", choices=("json", "table"), default="table")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("sdim", help="super-dimension of S_λ(V)")
    s.add_argument("dim", help="m|n")
    s.add_argument("--lambda", dest="lam", required=True, help="partition, e.g. 2,1")
    s.add_argument("--method", choices=("tableaux", "rank", "trace"), default="tableaux")

    s = sub.add_parser("vanish", help="partitions λ with S_λ(V) = 0")
    s.add_argument("dim")
    s.add_argument("--max", dest="bound", type=int, required=True)

    s = sub.add_parser("recover", help="super-dimension read off the vanishing set")
    s.add_argument("dim")
    s.add_argument("--max", dest="bound", type=int, required=True)

    s = sub.add_parser("lr", help="Littlewood-Richardson coefficient")
    s.add_argument("lam")
    s.add_argument("mu")
    s.add_argument("nu")

    s = sub.add_parser("check", help="run one check on JSON input")
    csub = s.add_subparsers(dest="check", required=True, parser_class=_Parser)
    c = csub.add_parser("property-s")
    c.add_argument("--map", dest="map_file", required=True)
    c.add_argument("--max", dest="bound", type=int, default=None)
    c.add_argument("--op", action="store_true", help="check property S^op instead")
    for name in ("dim-exact", "p4"):
        c = csub.add_parser(name)
        c.add_argument("--seq", dest="seq_file", required=True)

    s = sub.add_parser("suite", help="seeded property suites")
    s.add_argument("which", choices=("l4", "props", "all"))
    s.add_argument("--seed", type=int, default=0)
    return p


def _load_json(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InterchangeError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from None


def _load_sequence(path: str) -> ZeroSequence:
    obj = _load_json(path)
    if not isinstance(obj, dict) or "i" not in obj or "p" not in obj:
        raise InterchangeError("$", "a sequence must be an object with maps 'i' and 'p'")
    return ZeroSequence(map_from_json(obj["i"], "$.i"), map_from_json(obj["p"], "$.p"))


def _dim(text: str, cfg: RunConfig) -> SuperDim:
    try:
        d = SuperDim.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if d.total > cfg.max_space_dim:
        raise CapExceeded("max-space-dim", d.total, cfg.max_space_dim)
    return d


def _partition(text: str, cfg: RunConfig) -> Partition:
    try:
        lam = Partition.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if lam.size > cfg.max_partition_size:
        raise CapExceeded("max-partition-size", lam.size, cfg.max_partition_size)
    return lam


def _bound(b: int, cfg: RunConfig) -> int:
    if b < 0:
        raise UsageError("--max must be non-negative")
    if b > cfg.max_partition_size:
        raise CapExceeded("max-partition-size", b, cfg.max_partition_size)
    return b


def _emit(results: list[CheckResult], cfg: RunConfig, out) -> int:
    if cfg.output == "json":
        json.dump([r.to_json() for r in results], out, indent=2, sort_keys=False)
        out.write("\n")
    else:
        width = max((len(r.check) for r in results), default=5)
        for r in results:
            inputs = " ".join(f"{k}={_compact(v)}" for k, v in r.inputs.items())
            wit = f" witness={r.witness}" if r.witness is not None else ""
            out.write(f"{r.verdict.upper():<12} {r.check:<{width}} {inputs}{wit}\n")
        passed = sum(r.passed for r in results)
        out.write(f"{passed}/{len(results)} passed\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def _compact(v) -> str:
    return json.dumps(v, separators=(",", ":")) if isinstance(v, (dict, list)) else str(v)


def _seq_json(seq: ZeroSequence) -> dict:
    return {"i": map_to_json(seq.i), "p": map_to_json(seq.p)}


def _value(payload: dict, text: str, cfg: RunConfig, out) -> int:
    if cfg.output == "json":
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        out.write(text + "\n")
    return EXIT_OK


def run(argv: list[str], out=sys.stdout) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        max_partition_size=args.max_partition_size or _env_int("SUPERSCHUR_MAX_PARTITION_SIZE", 6),
        max_space_dim=args.max_space_dim or _env_int("SUPERSCHUR_MAX_SPACE_DIM", 3),
        seed=getattr(args, "seed", 0),
        output=args.output,
    )

    if args.command == "sdim":
        d, lam = _dim(args.dim, cfg), _partition(args.lam, cfg)
        if args.method == "rank":
            res = schur_dimension(lam, SuperSpace(d.even, d.odd), max_degree=cfg.max_partition_size, max_space_dim=cfg.max_space_dim)
        elif args.method == "trace":
            res = idempotent_rank(lam, d)
        else:
            res = graded_dimension(lam, d)
        return _value({"lambda": str(lam), "dim": str(d), "schur_dim": str(res)}, str(res), cfg, out)

    if args.command == "vanish":
        d, b = _dim(args.dim, cfg), _bound(args.bound, cfg)
        vs = vanishing_set(SuperSpace(d.even, d.odd), b, max_degree=cfg.max_partition_size)
        members = [str(lam) for lam in vs.sorted()]
        return _value({"dim": str(d), "bound": b, "members": members}, "\n".join(members), cfg, out)

    if args.command == "recover":
        d, b = _dim(args.dim, cfg), _bound(args.bound, cfg)
        space = SuperSpace(d.even, d.odd)
        res = superdim_from_vanishing(lambda lam: schur_vanishes(lam, space, "auto"), b)
        return _value({"dim": str(d), "bound": b, "recovered": str(res)}, str(res), cfg, out)

    if args.command == "lr":
        lam, mu, nu = (_partition(x, cfg) for x in (args.lam, args.mu, args.nu))
        c = lr_coefficient(lam, mu, nu)
        return _value({"lambda": str(lam), "mu": str(mu), "nu": str(nu), "coefficient": c}, str(c), cfg, out)

    if args.command == "check":
        return _run_check(args, cfg, out)

    if args.command == "suite":
        return _emit(run_suite(args.which, cfg), cfg, out)
    raise UsageError(f"unknown command {args.command}")


def _run_check(args, cfg: RunConfig, out) -> int:
    if args.check == "property-s":
        f = map_from_json(_load_json(args.map_file))
        for s in (f.domain, f.codomain):
            if s.total > cfg.max_space_dim:
                raise CapExceeded("max-space-dim", s.total, cfg.max_space_dim)
        bound = args.bound
        if bound is not None and bound > MAX_CLASS_DEGREE:
            raise CapExceeded("property-s bound", bound, MAX_CLASS_DEGREE)
        v = (check_property_S_op if args.op else check_property_S)(f, bound=bound)
        verdict = "inconclusive" if v.status == "inconclusive" else ("pass" if v.consistent else "fail")
        res = CheckResult(
            f"property_{v.property}",
            verdict,
            {"map": map_to_json(f)},
            witness=str(v.witness) if v.witness is not None else None,
            details={"mono": v.is_mono, "bound": v.bound, **v.details},
        )
        return _emit([res], cfg, out)

    seq = _load_sequence(args.seq_file)
    if args.check == "dim-exact":
        rep = dim_exact_report(seq)
        details = {
            "middle": str(rep.middle),
            "outer_sum": str(rep.outer_sum),
            "dim_exact": rep.dim_exact,
            "exact": rep.exact,
        }
        # the verdict answers "is this sequence dim-exact?"; a mismatch with
        # exactness raises inside dim_exact_report
        ok = rep.dim_exact
        if rep.dim_exact:
            details["coker_to_right_mono_epi"] = check_theorem_p2b(seq)
            ok = details["coker_to_right_mono_epi"]
        return _emit([CheckResult("dim_exact", "pass" if ok else "fail", {"seq": _seq_json(seq)}, details=details)], cfg, out)

    ok = check_p4_inequality(seq)
    details = {"dims": [str(seq.left.dim), str(seq.middle.dim), str(seq.right.dim)]}
    return _emit([CheckResult("right_exact_inequality", "pass" if ok else "fail", {"seq": _seq_json(seq)}, details=details)], cfg, out)


def main(argv: list[str] | None = None, out=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        return run(argv, out or sys.stdout)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InterchangeError as exc:
        print(f"malformed input at {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SuperSchurError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
