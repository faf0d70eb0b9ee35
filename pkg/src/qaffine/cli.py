"""Command-line driver: ``qaffine <command> ...``.

Exit status is 0 when every requested check passes, 1 when a check fails
and 2 for invalid input or unsupported requests.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field

from .cartan import CartanType, InvalidCartanType
from .denominators import E_TYPE_MESSAGE, UnsupportedType, build_J, build_gammaJ, denominator
from .dot import export_dot
from .quiver import DynkinQuiver, QuiverError, adapted_coxeter, adapted_w0, all_orientations, height_function
from .repetition import ARQuiver, build_phi
from .verify import (
    CheckResult,
    all_ok,
    double_pole_results,
    jobs_from_env,
    qpoch_results,
    run_orientation_scan,
    timed,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

RANK_LIMITS = {"A": 12, "D": 12, "E": 8}


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    args: argparse.Namespace
    fmt: str = "text"
    jobs: int = 1
    seed: int | None = None


@dataclass
class Report:
    command: str
    checks: list[CheckResult] = field(default_factory=list)
    result: dict = field(default_factory=dict)
    text: list[str] = field(default_factory=list)
    dot: str | None = None
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all_ok(self.checks)

    def to_dict(self) -> dict:
        return {"command": self.command, "status": "pass" if self.ok else "fail",
                "seconds": round(self.seconds, 4), "checks": [c.to_dict() for c in self.checks],
                "result": self.result}


# ---------------------------------------------------------------------------
# argument helpers

def _cartan(args) -> CartanType:
    try:
        t = CartanType(args.type.upper(), args.rank)
    except InvalidCartanType as exc:
        raise UsageError(str(exc)) from exc
    if args.rank > RANK_LIMITS[t.family]:
        raise UsageError(f"rank {args.rank} exceeds the supported limit {RANK_LIMITS[t.family]}")
    return t


def _quivers(args, t: CartanType) -> list[DynkinQuiver]:
    try:
        if getattr(args, "quiver_json", None):
            raw = args.quiver_json
            if os.path.isfile(raw):
                with open(raw) as fh:
                    raw = fh.read()
            return [DynkinQuiver.from_json(raw)]
        if getattr(args, "arrows", None):
            return [DynkinQuiver.parse(t, args.arrows)]
    except (QuiverError, ValueError, KeyError) as exc:
        raise UsageError(f"bad orientation: {exc}") from exc
    if getattr(args, "all_orientations", False):
        return list(all_orientations(t))
    return [DynkinQuiver.linear(t)]


def _vec(beta) -> str:
    return "(" + ",".join(str(c) for c in beta) + ")"


# ---------------------------------------------------------------------------
# commands

def cmd_phi(cfg: RunConfig) -> Report:
    args = cfg.args
    t = _cartan(args)
    Q = _quivers(args, t)[0]
    xi = height_function(Q)
    window = tuple(args.window) if args.window else None
    phi = build_phi(Q, xi, window)
    rep = Report("phi")
    rows = sorted(phi.forward.items(), key=lambda kv: (-kv[0][1], kv[0][0]))
    rep.result = {
        "quiver": json.loads(Q.to_json()),
        "height_function": {str(i): xi[i] for i in t.vertices},
        "window": list(phi.window),
        "phi": [{"vertex": list(v), "root": list(b), "shift": m} for v, (b, m) in rows],
        "adapted_word": list(adapted_w0(Q).word),
        "betas": [list(b) for b in adapted_w0(Q).betas],
        "coxeter": list(adapted_coxeter(Q)),
    }
    rep.text.append(f"quiver {Q}  xi = {dict(xi.xi)}  window {phi.window}")
    rep.text += [f"phi({i},{p}) = ({_vec(b)}, {m})" for (i, p), (b, m) in rows]
    ar = ARQuiver(Q, xi, phi)
    if args.print_ar:
        verts = sorted(ar.vertices, key=lambda v: (-v[1], v[0]))
        rep.result["ar_quiver"] = {
            "vertices": [{"vertex": list(v), "dimension_vector": list(ar.dimension_vectors[v])} for v in verts],
            "arrows": [[list(a), list(b)] for a, b in sorted(ar.arrows)],
        }
        rep.text.append("Gamma_Q vertices:")
        rep.text += [f"  ({i},{p}) {_vec(ar.dimension_vectors[(i, p)])}" for i, p in verts]
        rep.text.append("Gamma_Q arrows:")
        rep.text += [f"  ({a[0]},{a[1]}) -> ({b[0]},{b[1]})" for a, b in sorted(ar.arrows)]
    rep.dot = export_dot(ar) if args.print_ar else export_dot(phi, Q)
    return rep


def cmd_gammaj(cfg: RunConfig) -> Report:
    args = cfg.args
    t = _cartan(args)
    if t.family not in ("A", "D"):
        raise UnsupportedType(E_TYPE_MESSAGE)
    Q = _quivers(args, t)[0]
    g = build_gammaJ(t, build_J(Q))
    rep = Report("gammaj")
    rep.result = {
        "J": [{"vertex": list(x.vertex), "root_index": x.root_index,
               "spectral_exponent": x.spectral_exponent()} for x in g.elements],
        "arrows": [[list(a), list(b), d] for a, b, d in g.arrows()],
        "cartan": g.cartan,
    }
    rep.text += [f"({x.i},{x.p}) -> alpha_{x.root_index}" for x in g.elements]
    rep.text += [f"({a[0]},{a[1]}) -> ({b[0]},{b[1]}) x{d}" for a, b, d in g.arrows()]
    rep.dot = export_dot(g)
    return rep


def cmd_denom(cfg: RunConfig) -> Report:
    args = cfg.args
    t = _cartan(args)
    if t.family not in ("A", "D"):
        raise UnsupportedType(E_TYPE_MESSAGE)
    if args.k is not None and args.l is not None:
        pairs = [(args.k, args.l)]
    else:
        pairs = [(k, l) for k in t.vertices for l in t.vertices]
    rep = Report("denom")
    specs = []
    for k, l in pairs:
        try:
            d = denominator(t, k, l)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        specs.append(d.to_dict())
        rep.text.append(f"d_{{{k},{l}}}(z) = {d.factored()}    exponents {list(d.exponents)}")
    rep.result = {"denominators": specs}
    return rep


def cmd_verify(cfg: RunConfig) -> Report:
    args = cfg.args
    t = _cartan(args)
    rep = Report(f"verify {args.suite}")
    if args.suite == "double-pole":
        if t.family != "D":
            raise UsageError("the double-pole region is a type D statement")
        rep.checks = double_pole_results(t.rank)
    else:
        if args.suite in ("thm42", "lemma34") and t.family not in ("A", "D"):
            raise UnsupportedType(E_TYPE_MESSAGE)
        if args.suite == "lemma34" and t.family != "D":
            raise UsageError("this check is stated for type D")
        quivers = _quivers(args, t)
        rep.checks = run_orientation_scan(args.suite, t, quivers, jobs=cfg.jobs, seed=cfg.seed)
    for c in rep.checks:
        n = c.details.get("orientations")
        extra = f" over {n} orientation(s)" if n else ""
        rep.text.append(f"{'PASS' if c.ok else 'FAIL'} {c.name}{extra}: {c.statement}")
        for f in c.details.get("failures", []):
            rep.text.append(f"    failing: {f}")
    return rep


def cmd_qpoch(cfg: RunConfig) -> Report:
    n = cfg.args.rank
    if n < 4:
        raise UsageError("the Pochhammer identities need rank >= 4")
    rep = Report("qpoch verify")
    rep.checks = qpoch_results(n)
    rep.text += [f"{'PASS' if c.ok else 'FAIL'} {c.name}: {c.statement}" for c in rep.checks]
    return rep


def _module(name: str, n: int):
    from .modules.reps import spin_rep, vector_rep
    if name == "vector":
        return vector_rep(n, serre=False)
    if name == "spin+":
        return spin_rep(n, 1)
    if name == "spin-":
        return spin_rep(n, -1)
    raise UsageError(f"unknown representation {name}")


def _node(name: str, n: int) -> int:
    return {"vector": 1, "spin+": n, "spin-": n - 1}[name]


def cmd_rmatrix(cfg: RunConfig) -> Report:
    from .denominators import denom_D
    from .modules.fusion import fusion_report
    from .modules.intertwiner import commutes, extract_denominator, solve_intertwiner
    from .modules.rmatrix import rnorm_11, yang_baxter_check

    args = cfg.args
    n = args.rank
    if n < 4:
        raise UsageError("type D needs rank >= 4")
    rep = Report(f"rmatrix {args.action}")
    if args.action == "fusion":
        if args.k is None:
            raise UsageError("--k is required for fusion")
        t0 = time.perf_counter()
        r = fusion_report(args.k, n)
        dt = time.perf_counter() - t0
        rep.result = r.to_dict()
        rep.checks = [
            CheckResult(f"fusion_kernel:k{args.k}:D{n}",
                        "the kernel of T^(k) is the sum of W placed in adjacent slots",
                        r.kernel_ok, dt, {"kernel_dim": r.kernel_dim, "rhs_dim": r.rhs_dim}),
            CheckResult(f"fusion_image:k{args.k}:D{n}",
                        "the image has a one-dimensional extremal weight space that generates it",
                        r.image_ok, dt, {"rank": r.rank, "generated_dim": r.generated_dim}),
        ]
        rep.text.append(f"T^({args.k}) on dimension {r.dimension}: rank {r.rank}, kernel {r.kernel_dim}")
    else:
        left = args.rep
        right = args.rep2 or args.rep
        closed = left == right == "vector" and not args.solve
        if closed:
            R = rnorm_11(n)
        else:
            R = solve_intertwiner(_module(left, n), _module(right, n))
        k, l = _node(left, n), _node(right, n)
        if args.action == "build":
            rep.result = {"source": left, "target": right, "dimension": R.matrix.nrows,
                          "nonzero_entries": R.matrix.nnz,
                          "method": "closed form" if closed else "intertwiner solver"}
            if args.entries:
                rep.result["entries"] = [[R.target.labels[i], R.source.labels[j], str(v)]
                                         for (i, j), v in sorted(R.matrix.items())]
            rep.text.append(f"R({left},{right}) at rank {n}: {R.matrix.nnz} nonzero entries")
        elif args.action == "check":
            rep.checks.append(timed(f"commutes:{left},{right}:D{n}",
                                    lambda: commutes(R.matrix, R.source, R.target),
                                    "R commutes with the coproduct of every Chevalley generator"))
            if left == right == "vector":
                rep.checks.append(timed(f"closed_vs_solver:D{n}",
                                        lambda: rnorm_11(n).matrix == solve_intertwiner(
                                            _module("vector", n), _module("vector", n)).matrix,
                                        "the closed-form R-matrix equals the solved intertwiner"))
                if n == 4 or args.yang_baxter:
                    rep.checks.append(timed(f"yang_baxter:D{n}", lambda: yang_baxter_check(n),
                                            "braided Yang-Baxter equation on V (x) V (x) V at q = 3/5"))
        else:
            d = extract_denominator(R, k=k, l=l)
            expected = denom_D(k, l, n)
            rep.result = {"extracted": d.to_dict(), "closed_form": expected.to_dict()}
            rep.checks.append(CheckResult(f"denominator:{left},{right}:D{n}",
                                          "the extracted denominator matches the closed form",
                                          d.exponents == expected.exponents, 0.0))
            rep.text.append(f"d_{{{k},{l}}}(z) = {d.factored()}    exponents {list(d.exponents)}")
        rep.text += [f"{'PASS' if c.ok else 'FAIL'} {c.name}: {c.statement}" for c in rep.checks]
    return rep


COMMANDS = {"phi": cmd_phi, "gammaj": cmd_gammaj, "denom": cmd_denom, "verify": cmd_verify,
            "qpoch": cmd_qpoch, "rmatrix": cmd_rmatrix}


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--jobs", type=int, default=None, help="worker processes (default: $QAFFINE_JOBS or 1)")
    common.add_argument("--seed", type=int, default=None, help="shuffle dispatch order reproducibly")

    def typed(p, rank_required=True):
        p.add_argument("--type", default="D")
        p.add_argument("--rank", type=int, required=rank_required)

    def oriented(p):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--arrows", help="orientation such as 1-2,3-2 (a-b means a -> b)")
        g.add_argument("--quiver-json", help='inline JSON or a file, e.g. {"type":"D","rank":4,"arrows":[[1,2],[3,2],[4,2]]}')
        g.add_argument("--all-orientations", action="store_true")

    parser = argparse.ArgumentParser(prog="qaffine", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phi", parents=[common], help="phi table, adapted word and Gamma_Q")
    typed(p)
    oriented(p)
    p.add_argument("--window", type=int, nargs=2, metavar=("LO", "HI"))
    p.add_argument("--print-ar", action="store_true")

    p = sub.add_parser("gammaj", parents=[common], help="the quiver Gamma^J built from pole orders")
    typed(p)
    oriented(p)

    p = sub.add_parser("denom", parents=[common], help="closed-form denominators d_{k,l}(z)")
    typed(p)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)

    p = sub.add_parser("verify", parents=[common], help="exhaustive verification suites")
    p.add_argument("suite", choices=("thm42", "lemma34", "combinatorics", "double-pole"))
    typed(p)
    oriented(p)

    p = sub.add_parser("qpoch", parents=[common], help="Pochhammer scalar identities")
    p.add_argument("action", choices=("verify",))
    p.add_argument("--rank", type=int, required=True)

    p = sub.add_parser("rmatrix", parents=[common], help="R-matrices on vector and spin modules")
    p.add_argument("action", choices=("build", "check", "denominator", "fusion"))
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--rep", choices=("vector", "spin+", "spin-"), default="vector")
    p.add_argument("--rep2", choices=("vector", "spin+", "spin-"))
    p.add_argument("--solve", action="store_true", help="use the solver even for vector (x) vector")
    p.add_argument("--entries", action="store_true", help="include all entries in the build output")
    p.add_argument("--yang-baxter", action="store_true", help="also run Yang-Baxter above rank 4")
    p.add_argument("--k", type=int)
    return parser


def run(cfg: RunConfig) -> tuple[int, Report | None, str]:
    """Execute a configuration; returns (exit code, report, error message)."""
    t0 = time.perf_counter()
    try:
        rep = COMMANDS[cfg.command](cfg)
    except UnsupportedType as exc:
        return EXIT_USAGE, None, str(exc)
    except (UsageError, InvalidCartanType, QuiverError) as exc:
        return EXIT_USAGE, None, str(exc)
    rep.seconds = time.perf_counter() - t0
    return (EXIT_OK if rep.ok else EXIT_FAIL), rep, ""


def render(rep: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rep.to_dict(), indent=2, default=str)
    if fmt == "dot":
        if rep.dot is None:
            raise UsageError(f"{rep.command} has no graph output")
        return rep.dot.rstrip("\n")
    return "\n".join(rep.text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    jobs = args.jobs if args.jobs is not None else jobs_from_env()
    cfg = RunConfig(args.command, args, args.format, max(1, jobs), args.seed)
    code, rep, err = run(cfg)
    if rep is None:
        print(f"qaffine: error: {err}", file=sys.stderr)
        return code
    try:
        print(render(rep, cfg.fmt))
    except UsageError as exc:
        print(f"qaffine: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return code


if __name__ == "__main__":
    sys.exit(main())
