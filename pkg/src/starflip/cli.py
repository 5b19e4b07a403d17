"""Command-line front end: ``starflip generate|verify|analyze|bench``.

Every subcommand is a thin wrapper over library calls.  Data output goes to
stdout and is deterministic; timing output from ``bench`` is the only
non-reproducible text and is clearly labelled.

Position contract: flip positions are ``M_n`` positions ``1..2n+1``.  In the
printed combination of length ``2n+2`` the star is character 1 and ``M_n``
position ``p`` is character ``p + 1``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import tracemalloc
from dataclasses import dataclass

from . import necklaces, spanning, switches, verifier
from .generator import Generator, base_shift


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    shift: int | None = None
    start: str | None = None
    fmt: str = "both"
    limit: int | None = None
    suite: str = "all"
    as_json: bool = False
    explain_shift: bool = False
    target: str = ""
    output: str = "csv"
    n_min: int = 50
    n_max: int = 200
    points: int = 4
    steps: int = 20000
    repeat: int = 1
    memory: bool = False

    def validate(self) -> None:
        if self.command in ("generate", "verify", "analyze") and (self.n is None or self.n < 1):
            raise UsageError("-n must be a positive integer")
        if self.limit is not None and self.limit < 0:
            raise UsageError("--limit must be non-negative")
        if self.command == "bench":
            if not 4 <= self.n_min <= self.n_max:
                raise UsageError("need 4 <= --n-min <= --n-max")
            if self.points < 1 or self.steps < 1 or self.repeat < 1:
                raise UsageError("--points, --steps and --repeat must be positive")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="starflip", description="Star-transposition Gray codes for (n+1,n+1)-combinations.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="stream the ordering")
    g.add_argument("-n", type=int, required=True)
    g.add_argument("--shift", type=int, default=None, help="round shift, any unit mod 2n+1 (negative allowed)")
    g.add_argument("--start", default=None, help="start combination of length 2n+2")
    g.add_argument("--format", dest="fmt", choices=("flips", "combinations", "both"), default="both")
    g.add_argument("--limit", type=int, default=None)

    v = sub.add_parser("verify", help="run certificates")
    v.add_argument("-n", type=int, required=True)
    v.add_argument("--suite", choices=("lemmas", "hamilton", "blocks", "all"), default="all")
    v.add_argument("--json", dest="as_json", action="store_true")
    v.add_argument("--explain-shift", action="store_true", help="print how the round shift is made coprime")

    a = sub.add_parser("analyze", help="export the cycle factor or the gluing graphs")
    a.add_argument("target", choices=("cycles", "gluing-graph", "spanning-tree"))
    a.add_argument("-n", type=int, required=True)
    fmt = a.add_mutually_exclusive_group()
    fmt.add_argument("--csv", dest="output", action="store_const", const="csv")
    fmt.add_argument("--dot", dest="output", action="store_const", const="dot")
    a.set_defaults(output="csv")

    b = sub.add_parser("bench", help="per-step timing across a range of n")
    b.add_argument("--n-min", type=int, default=50)
    b.add_argument("--n-max", type=int, default=200)
    b.add_argument("--points", type=int, default=4, help="number of n values in the range")
    b.add_argument("--limit", dest="steps", type=int, default=20000, help="steps timed per n")
    b.add_argument("--repeat", type=int, default=1)
    b.add_argument("--memory", action="store_true", help="also report the tracemalloc peak")
    return p


def parse_config(argv: list[str] | None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__})
    cfg.validate()
    return cfg


def _emit(lines, out) -> None:
    out.write("".join(line + "\n" for line in lines))


def cmd_generate(cfg: RunConfig, out=sys.stdout) -> int:
    gen = Generator(cfg.n, cfg.shift, cfg.start)
    limit = gen.length if cfg.limit is None else min(cfg.limit, gen.length)
    buf = []
    for k, (q, c) in enumerate(gen):
        if k >= limit:
            break
        if cfg.fmt == "flips":
            buf.append(str(q))
        elif cfg.fmt == "combinations":
            buf.append(c)
        else:
            buf.append(f"{q}\t{c}")
        if len(buf) >= 4096:
            _emit(buf, out)
            buf.clear()
    _emit(buf, out)
    return 0


def shift_plan(n: int) -> switches.ShiftPlan | None:
    if n < 4:
        return None
    return switches.plan_shift_fix(n, base_shift(n))


def cmd_verify(cfg: RunConfig, out=sys.stdout) -> int:
    certs = verifier.run_suite(cfg.n, cfg.suite)
    if cfg.explain_shift:
        plan = shift_plan(cfg.n)
        if plan is None:
            g = Generator(cfg.n)
            text = f"n = {cfg.n}: hardcoded round, shift {g.native_shift}"
        else:
            text = plan.explain()
        if not cfg.as_json:
            out.write(text + "\n")
    if cfg.as_json:
        payload = {"n": cfg.n, "certificates": [c.to_dict() for c in certs]}
        if cfg.explain_shift:
            payload["shift_plan"] = text.splitlines()
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        _emit((c.line() for c in certs), out)
    return 0 if all(c.passed for c in certs) else 1


def cmd_analyze(cfg: RunConfig, out=sys.stdout) -> int:
    n = cfg.n
    if cfg.target == "cycles":
        if n > 9:
            raise UsageError("analyze cycles is limited to n <= 9")
        cf = necklaces.cycle_factor(n)
        if cfg.output == "dot":
            lines = ["graph F {"]
            lines += [f'  "{w}" [label="{w}\\nlambda={c.lam} len={len(c)}"];' for w, c in cf.items()]
            lines.append("}")
        else:
            lines = ["tree,lambda,cycle_length"]
            lines += [f"{w},{c.lam},{len(c)}" for w, c in cf.items()]
        _emit(lines, out)
        return 0
    if not 4 <= n <= 10:
        raise UsageError("gluing graphs need 4 <= n <= 10")
    if cfg.target == "gluing-graph":
        g = spanning.build_H(n)
    else:
        g, _ = spanning.build_T(n)
    name = "H" if cfg.target == "gluing-graph" else "T"
    out.write(g.to_dot(name) if cfg.output == "dot" else g.to_csv())
    return 0


def time_steps(n: int, steps: int) -> float:
    """Mean seconds per step over the first ``steps`` items of the default stream."""
    gen = Generator(n)
    it = iter(gen)
    t0 = time.perf_counter()
    for _ in range(steps):
        next(it)
    return (time.perf_counter() - t0) / steps


def peak_memory(n: int, steps: int) -> int:
    """tracemalloc high-water mark (bytes) while constructing and stepping a generator."""
    tracemalloc.start()
    try:
        gen = Generator(n)
        it = iter(gen)
        for _ in range(steps):
            next(it)
        _, peak = tracemalloc.get_traced_memory()
    finally:
        tracemalloc.stop()
    return peak


def bench_points(n_min: int, n_max: int, points: int) -> list[int]:
    if points == 1 or n_min == n_max:
        return [n_min] if n_min == n_max else [n_min, n_max]
    return sorted({n_min + round(k * (n_max - n_min) / (points - 1)) for k in range(points)})


def linear_fit(xs: list[float], ys: list[float]) -> tuple[float, float]:
    """Least-squares ``(slope, intercept)``."""
    k = len(xs)
    mx, my = sum(xs) / k, sum(ys) / k
    sxx = sum((x - mx) ** 2 for x in xs)
    if sxx == 0:
        return 0.0, my
    slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sxx
    return slope, my - slope * mx


def cmd_bench(cfg: RunConfig, out=sys.stdout) -> int:
    ns = bench_points(cfg.n_min, cfg.n_max, cfg.points)
    rows = []
    for n in ns:
        per = min(time_steps(n, cfg.steps) for _ in range(cfg.repeat))
        mem = peak_memory(n, min(cfg.steps, 2000)) if cfg.memory else None
        rows.append((n, per * 1e9, mem))
    out.write("# timing (machine dependent)\n")
    out.write("n,ns_per_step" + (",peak_bytes" if cfg.memory else "") + "\n")
    for n, ns_step, mem in rows:
        out.write(f"{n},{ns_step:.0f}" + (f",{mem}" if mem is not None else "") + "\n")
    slope, icpt = linear_fit([r[0] for r in rows], [r[1] for r in rows])
    ratio = rows[-1][1] / rows[0][1]
    out.write(f"# linear fit: ns_per_step = {slope:.1f} * n + {icpt:.0f}\n")
    out.write(f"# ratio n={rows[-1][0]} / n={rows[0][0]}: {ratio:.2f}\n")
    return 0


COMMANDS = {"generate": cmd_generate, "verify": cmd_verify, "analyze": cmd_analyze, "bench": cmd_bench}


def main(argv: list[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
    except UsageError as exc:
        print(f"starflip: error: {exc}", file=sys.stderr)
        return 2
    try:
        return COMMANDS[cfg.command](cfg)
    except (UsageError, ValueError) as exc:
        print(f"starflip: error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"starflip: internal error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
