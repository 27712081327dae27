"""Command-line front end: ``minksum {bound,witness,sum,verify,random}``.

Face indices on the command line are 0-based face dimensions of the sum.
Internally the bounds use ``k = dimension + 1``; tables print both.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .bounds import BoundReport
from .cayley import CayleyComplex, direct_minkowski_sum, dumps_report, verification_report
from .exactnum import parse_rational
from .polytope import MAX_POINTS, VPolytope, f_vector, random_polytope
from .witness import witness

DEFAULT_MAX_DIM = 7
DEFAULT_MAX_VERTS = 24


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    d: int | None
    n1: int | None
    n2: int | None
    inputs: tuple[str, ...]
    out: str | None
    fmt: str
    lam: str
    max_dim: int
    max_verts: int
    seed: int

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> RunConfig:
        cfg = cls(
            command=ns.command,
            d=getattr(ns, "d", None),
            n1=getattr(ns, "n1", None),
            n2=getattr(ns, "n2", None),
            inputs=tuple(getattr(ns, "inputs", ()) or ()),
            out=ns.out,
            fmt=ns.format,
            lam=getattr(ns, "lam", "1/2"),
            max_dim=ns.max_dim,
            max_verts=ns.max_verts,
            seed=getattr(ns, "seed", 0),
        )
        cfg.validate()
        return cfg

    def validate(self) -> None:
        if self.d is not None:
            if self.d < 2:
                raise UsageError(f"-d must be at least 2 (got {self.d})")
            if self.d > self.max_dim:
                raise UsageError(f"-d {self.d} exceeds --max-dim {self.max_dim}; raise --max-dim to override")
        if self.n1 is not None and self.n2 is not None:
            need = self.d + 1
            if self.n1 < need or self.n2 < need:
                raise UsageError(f"-n1 and -n2 must each be at least d+1 = {need}")
            if self.command != "bound" and self.n1 + self.n2 > self.max_verts:
                raise UsageError(
                    f"n1+n2 = {self.n1 + self.n2} exceeds --max-verts {self.max_verts}; raise --max-verts to override"
                )


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_pair(cfg: RunConfig) -> tuple[VPolytope, VPolytope]:
    try:
        P1, P2 = (VPolytope.load(p) for p in cfg.inputs)
    except OSError as exc:
        raise UsageError(f"cannot read input: {exc}") from None
    except (ValueError, TypeError, json.JSONDecodeError) as exc:
        raise UsageError(f"malformed polytope file: {exc}") from None
    if P1.dim != P2.dim:
        raise UsageError(f"dimension mismatch: {P1.dim} vs {P2.dim}")
    if P1.dim > cfg.max_dim:
        raise UsageError(f"dimension {P1.dim} exceeds --max-dim {cfg.max_dim}")
    if P1.n + P2.n > cfg.max_verts:
        raise UsageError(f"{P1.n + P2.n} vertices exceed --max-verts {cfg.max_verts}")
    return P1, P2


def _hull_cap(P1: VPolytope, P2: VPolytope) -> int:
    return max(MAX_POINTS, P1.n * P2.n, P1.n + P2.n + 2)


def cmd_bound(cfg: RunConfig) -> int:
    rep = BoundReport.build(cfg.d, cfg.n1, cfg.n2)
    text = {"json": rep.dumps, "csv": rep.to_csv, "table": rep.to_table}[cfg.fmt]()
    _emit(text, cfg.out)
    return 0


def cmd_witness(cfg: RunConfig) -> int:
    P1, P2, params = witness(cfg.d, cfg.n1, cfg.n2)
    outdir = Path(cfg.out or ".")
    outdir.mkdir(parents=True, exist_ok=True)
    P1.dump(outdir / "P1.json")
    P2.dump(outdir / "P2.json")
    written = [str(outdir / "P1.json"), str(outdir / "P2.json")]
    if params is not None:
        (outdir / "certificate.json").write_text(params.dumps(), encoding="utf-8")
        written.append(str(outdir / "certificate.json"))
    sys.stdout.write("\n".join(written) + "\n")
    return 0


def _sum_report(P1: VPolytope, P2: VPolytope, lam) -> dict:
    cap = _hull_cap(P1, P2)
    cx = CayleyComplex.build(P1, P2, lam, max_points=cap)
    via = list(cx.f_sum().proper())
    direct = list(f_vector(direct_minkowski_sum(P1, P2, max_points=cap)).proper())
    rep = {"d": P1.dim, "n1": P1.n, "n2": P2.n, "cayley": via, "direct": direct, "agree": via == direct}
    if P1.dim >= 2 and min(P1.n, P2.n) >= P1.dim + 1 and cx.summands_full:
        b = BoundReport.build(P1.dim, P1.n, P2.n, via)
        rep["bound"] = [r.bound for r in b.rows]
        rep["attains_bound"] = b.all_equal
    return rep


def _sum_rows(rep: dict) -> list[list]:
    rows = []
    bound = rep.get("bound")
    for i, (a, b) in enumerate(zip(rep["cayley"], rep["direct"])):
        rows.append([i, i + 1, a, b, "" if bound is None else bound[i]])
    return rows


def cmd_sum(cfg: RunConfig) -> int:
    P1, P2 = _load_pair(cfg)
    rep = _sum_report(P1, P2, parse_rational(cfg.lam))
    head = ["face_dim", "k", "cayley", "direct", "bound"]
    if cfg.fmt == "json":
        text = json.dumps(rep, indent=2, sort_keys=True) + "\n"
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(head)
        w.writerows(_sum_rows(rep))
        text = buf.getvalue()
    else:
        lines = [f"d={rep['d']} n1={rep['n1']} n2={rep['n2']} oracles agree: {rep['agree']}"]
        lines.append("face dim (k-1)  k  cayley  direct  bound")
        lines += ["{:>14}  {}  {:>6}  {:>6}  {:>5}".format(*r) for r in _sum_rows(rep)]
        if "attains_bound" in rep:
            lines.append(f"attains bound: {rep['attains_bound']}")
        text = "\n".join(lines) + "\n"
    _emit(text, cfg.out)
    return 0 if rep["agree"] else 1


def cmd_verify(cfg: RunConfig) -> int:
    P1, P2 = _load_pair(cfg)
    cx = CayleyComplex.build(P1, P2, parse_rational(cfg.lam), max_points=_hull_cap(P1, P2))
    rep = verification_report(cx)
    if cfg.fmt == "json":
        text = dumps_report(rep)
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check", "status", "detail"])
        for c in rep["checks"]:
            w.writerow([c["name"], c["status"], c["detail"]])
        text = buf.getvalue()
    else:
        lines = [f"d={rep['d']} n1={rep['n1']} n2={rep['n2']} sum f-vector={rep['vectors']['sum']}"]
        width = max(len(c["name"]) for c in rep["checks"])
        for c in rep["checks"]:
            tail = f"  ({c['detail']})" if c["detail"] else ""
            lines.append(f"{c['name']:<{width}}  {c['status'].upper()}{tail}")
        lines += [f"warning: {w}" for w in rep["warnings"]]
        lines.append("ALL CHECKS PASSED" if rep["ok"] else "SOME CHECKS FAILED")
        text = "\n".join(lines) + "\n"
    _emit(text, cfg.out)
    return 0 if rep["ok"] else 1


def cmd_random(cfg: RunConfig) -> int:
    rng = random.Random(cfg.seed)
    P1 = random_polytope(cfg.d, cfg.n1, rng)
    P2 = random_polytope(cfg.d, cfg.n2, rng).translate([1] * cfg.d)
    outdir = Path(cfg.out or ".")
    outdir.mkdir(parents=True, exist_ok=True)
    P1.dump(outdir / "P1.json")
    P2.dump(outdir / "P2.json")
    sys.stdout.write(f"{outdir / 'P1.json'}\n{outdir / 'P2.json'}\n")
    return 0


COMMANDS = {"bound": cmd_bound, "witness": cmd_witness, "sum": cmd_sum, "verify": cmd_verify, "random": cmd_random}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output file (bound, sum, verify) or directory (witness, random)")
    common.add_argument("--format", choices=("json", "csv", "table"), default="table")
    common.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM, help="refuse larger dimensions (default 7)")
    common.add_argument("--max-verts", type=int, default=DEFAULT_MAX_VERTS, help="refuse larger n1+n2 (default 24)")

    sizes = argparse.ArgumentParser(add_help=False)
    sizes.add_argument("-d", type=int, required=True, help="dimension of the summands")
    sizes.add_argument("-n1", type=int, required=True, help="vertices of the first summand")
    sizes.add_argument("-n2", type=int, required=True, help="vertices of the second summand")

    files = argparse.ArgumentParser(add_help=False)
    files.add_argument("inputs", nargs=2, metavar="POLYTOPE_JSON")
    files.add_argument("--lambda", dest="lam", default="1/2", help="height of the slicing hyperplane, p/q in (0,1)")

    p = argparse.ArgumentParser(prog="minksum", description="Exact face numbers of Minkowski sums of two polytopes.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("bound", parents=[common, sizes], help="table of maximal face numbers")
    sub.add_parser("witness", parents=[common, sizes], help="write a bound-attaining pair")
    sub.add_parser("sum", parents=[common, files], help="face numbers of the sum by two methods")
    sub.add_parser("verify", parents=[common, files], help="run every identity and inequality check")
    r = sub.add_parser("random", parents=[common, sizes], help="write a random pair of polytopes")
    r.add_argument("--seed", type=int, default=0)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_args(ns)
        if cfg.command in ("sum", "verify"):
            lam = parse_rational(cfg.lam)
            if not 0 < lam < 1:
                raise UsageError("--lambda must lie strictly between 0 and 1")
        return COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"minksum {ns.command}: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"minksum {ns.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
