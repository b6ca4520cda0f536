"""Command line front end.

Subcommands: ``solve`` one instance, ``sweep`` a (c, p) grid to CSV/JSON,
``verify`` the oracle suites, ``payoff`` raw complete-information values.
Exit codes: 0 success, 1 verification failure, 2 argument or invariant
error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from typing import Any

import numpy as np

from .model import BudgetPrior, GameConfig, ParameterError, lotto_payoff_a, lotto_payoff_b
from .oracle import claim_audit, monotonicity_audit
from .signaling import SpeSolution, spe_solve

__all__ = ["SweepSpec", "SweepCell", "sweep_cells", "write_sweep", "main"]

CSV_COLUMNS = ["c", "p", "region", "q_star", "pi_ns", "pi_star", "improvement_pct"]


def _fmt(x: float) -> str:
    # 12 significant digits everywhere numbers leave the process
    return format(float(x), ".12g")


def _round12(x: float) -> float:
    return float(_fmt(x))


@dataclass(frozen=True)
class SweepSpec:
    """Axes and output target for a (c, p) grid sweep."""

    a_high: float
    a_low: float
    phi: float = 1.0
    c_min: float = 0.3
    c_max: float = 1.1
    c_steps: int = 200
    p_min: float = 0.01
    p_max: float = 0.99
    p_steps: int = 200
    out_path: str | None = None
    fmt: str = "csv"

    def __post_init__(self) -> None:
        if not self.c_min < self.c_max:
            raise ParameterError(f"c_min < c_max violated ({self.c_min}, {self.c_max})")
        if not self.p_min < self.p_max:
            raise ParameterError(f"p_min < p_max violated ({self.p_min}, {self.p_max})")
        if self.c_steps < 2 or self.p_steps < 2:
            raise ParameterError("steps >= 2 violated")
        if not (0.0 <= self.p_min and self.p_max <= 1.0):
            raise ParameterError(f"0 <= p <= 1 violated ({self.p_min}, {self.p_max})")
        if self.fmt not in ("csv", "json"):
            raise ParameterError(f"format must be csv or json (format={self.fmt})")


@dataclass(frozen=True)
class SweepCell:
    c: float
    p: float
    region: str
    q_star: float
    pi_ns: float
    pi_star: float
    improvement_pct: float


def sweep_cells(spec: SweepSpec) -> list[SweepCell]:
    """Solve every grid point, c-major then p, independent cells."""
    cells = []
    for c in np.linspace(spec.c_min, spec.c_max, spec.c_steps):
        for p in np.linspace(spec.p_min, spec.p_max, spec.p_steps):
            cfg = GameConfig(BudgetPrior(spec.a_high, spec.a_low, float(p)),
                             float(c), spec.phi)
            sol = spe_solve(cfg)
            cells.append(SweepCell(
                c=float(c), p=float(p), region=sol.region.tag.value,
                q_star=sol.q_star, pi_ns=sol.pi_ns, pi_star=sol.pi_star,
                improvement_pct=sol.improvement_pct))
    return cells


def write_sweep(cells: list[SweepCell], spec: SweepSpec, stream) -> None:
    if spec.fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for cell in cells:
            writer.writerow([_fmt(cell.c), _fmt(cell.p), cell.region,
                             _fmt(cell.q_star), _fmt(cell.pi_ns),
                             _fmt(cell.pi_star), _fmt(cell.improvement_pct)])
    else:
        payload = [{"c": _round12(cell.c), "p": _round12(cell.p),
                    "region": cell.region, "q_star": _round12(cell.q_star),
                    "pi_ns": _round12(cell.pi_ns), "pi_star": _round12(cell.pi_star),
                    "improvement_pct": _round12(cell.improvement_pct)}
                   for cell in cells]
        json.dump(payload, stream, indent=2)
        stream.write("\n")


def _solution_payload(cfg: GameConfig, sol: SpeSolution) -> dict[str, Any]:
    return {
        "a_high": _round12(cfg.a_high),
        "a_low": _round12(cfg.a_low),
        "p": _round12(cfg.p),
        "cost": _round12(cfg.unit_cost),
        "phi": _round12(cfg.phi),
        "region": sol.region.tag.value,
        "q_star": _round12(sol.q_star),
        "mu_h": _round12(sol.mu_h),
        "invest_after_h": {"amount": _round12(sol.invest_after_h.amount),
                           "regime": sol.invest_after_h.regime.value},
        "invest_after_l": {"amount": _round12(sol.invest_after_l.amount),
                           "regime": sol.invest_after_l.regime.value},
        "pi_ns": _round12(sol.pi_ns),
        "pi_star": _round12(sol.pi_star),
        "improvement_pct": _round12(sol.improvement_pct),
    }


def _print_solution(cfg: GameConfig, sol: SpeSolution, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(_solution_payload(cfg, sol), indent=2))
        return
    print(f"region           {sol.region.tag.value}")
    print(f"q_star           {_fmt(sol.q_star)}")
    print(f"mu_h             {_fmt(sol.mu_h)}")
    print(f"invest_after_h   {_fmt(sol.invest_after_h.amount)} "
          f"({sol.invest_after_h.regime.value})")
    print(f"invest_after_l   {_fmt(sol.invest_after_l.amount)} "
          f"({sol.invest_after_l.regime.value})")
    print(f"pi_ns            {_fmt(sol.pi_ns)}")
    print(f"pi_star          {_fmt(sol.pi_star)}")
    print(f"improvement_pct  {_fmt(sol.improvement_pct)}")


def _load_config_file(path: str | None) -> dict[str, Any]:
    if path is None:
        return {}
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ParameterError("config file must hold a JSON object")
    return data


def _pick(flag_value, config: dict[str, Any], key: str, default=None):
    # explicit flags win over the config file, which wins over defaults
    if flag_value is not None:
        return flag_value
    if key in config:
        return config[key]
    return default


def _need(value, name: str):
    if value is None:
        raise ParameterError(f"missing required parameter --{name.replace('_', '-')}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lotto-signaling",
        description="Optimal budget signaling in General Lotto games")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve one game instance")
    solve.add_argument("--a-high", type=float)
    solve.add_argument("--a-low", type=float)
    solve.add_argument("--p", type=float)
    solve.add_argument("--cost", type=float)
    solve.add_argument("--phi", type=float)
    solve.add_argument("--format", choices=["text", "json"], default="text")
    solve.add_argument("--config", help="JSON config file; flags win on conflict")

    sweep = sub.add_parser("sweep", help="sweep a (c, p) grid to a data file")
    sweep.add_argument("--a-high", type=float)
    sweep.add_argument("--a-low", type=float)
    sweep.add_argument("--phi", type=float)
    sweep.add_argument("--c-min", type=float)
    sweep.add_argument("--c-max", type=float)
    sweep.add_argument("--c-steps", type=int)
    sweep.add_argument("--p-min", type=float)
    sweep.add_argument("--p-max", type=float)
    sweep.add_argument("--p-steps", type=int)
    sweep.add_argument("--out", help="output path; stdout when omitted")
    sweep.add_argument("--format", choices=["csv", "json"])
    sweep.add_argument("--config", help="JSON config file; flags win on conflict")

    verify = sub.add_parser("verify", help="run the oracle verification suites")
    verify.add_argument("--samples", type=int, default=200)
    verify.add_argument("--grid", type=int, default=10001)
    verify.add_argument("--seed", type=int, default=42)
    verify.add_argument("--tol", type=float, default=1e-9)
    verify.add_argument("--format", choices=["text", "json"], default="text")

    payoff = sub.add_parser("payoff", help="complete-information Lotto payoffs")
    payoff.add_argument("--a", type=float, required=True)
    payoff.add_argument("--b", type=float, required=True)
    payoff.add_argument("--phi", type=float, default=1.0)
    payoff.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def _cmd_solve(args) -> int:
    config = _load_config_file(args.config)
    prior = BudgetPrior(
        a_high=_need(_pick(args.a_high, config, "a_high"), "a_high"),
        a_low=_need(_pick(args.a_low, config, "a_low"), "a_low"),
        p=_need(_pick(args.p, config, "p"), "p"),
    )
    cfg = GameConfig(prior,
                     unit_cost=_need(_pick(args.cost, config, "cost"), "cost"),
                     phi=_pick(args.phi, config, "phi", 1.0))
    _print_solution(cfg, spe_solve(cfg), args.format)
    return 0


def _cmd_sweep(args) -> int:
    config = _load_config_file(args.config)
    sweep_cfg = config.get("sweep", {})
    spec = SweepSpec(
        a_high=_need(_pick(args.a_high, config, "a_high"), "a_high"),
        a_low=_need(_pick(args.a_low, config, "a_low"), "a_low"),
        phi=_pick(args.phi, config, "phi", 1.0),
        c_min=_pick(args.c_min, sweep_cfg, "c_min", 0.3),
        c_max=_pick(args.c_max, sweep_cfg, "c_max", 1.1),
        c_steps=_pick(args.c_steps, sweep_cfg, "c_steps", 200),
        p_min=_pick(args.p_min, sweep_cfg, "p_min", 0.01),
        p_max=_pick(args.p_max, sweep_cfg, "p_max", 0.99),
        p_steps=_pick(args.p_steps, sweep_cfg, "p_steps", 200),
        out_path=_pick(args.out, sweep_cfg, "out"),
        fmt=_pick(args.format, sweep_cfg, "format", "csv"),
    )
    cells = sweep_cells(spec)
    if spec.out_path is None:
        write_sweep(cells, spec, sys.stdout)
    else:
        with open(spec.out_path, "w", encoding="utf-8", newline="") as fh:
            write_sweep(cells, spec, fh)
    return 0


def _cmd_verify(args) -> int:
    if args.samples < 1:
        raise ParameterError(f"samples >= 1 violated (samples={args.samples})")
    if args.grid < 101:
        raise ParameterError(f"grid >= 101 violated (grid={args.grid})")
    audit = claim_audit(args.samples, args.seed, grid_points=args.grid, tol=args.tol)
    mono = monotonicity_audit(min(args.samples, 200), args.seed)
    total = audit.violations + mono.violations
    worst = max(audit.worst_case, mono.worst_case)
    if args.format == "json":
        checks = {}
        for rep in (audit, mono):
            for name, res in rep.checks.items():
                checks[name] = {"checked": res.checked,
                                "violations": res.violations,
                                "worst": _round12(res.worst)}
        print(json.dumps({"samples": args.samples, "violations": total,
                          "worst_case": _round12(worst), "checks": checks},
                         indent=2))
    else:
        print(f"samples          {args.samples}")
        print(f"violations       {total}")
        print(f"worst_case       {_fmt(worst)}")
        for rep in (audit, mono):
            for name, res in rep.checks.items():
                status = "ok" if res.violations == 0 else "VIOLATIONS"
                print(f"  {name:28s} {status}  checked={res.checked} "
                      f"violations={res.violations} worst={_fmt(res.worst)}")
    return 0 if total == 0 else 1


def _cmd_payoff(args) -> int:
    pa = lotto_payoff_a(args.a, args.b, args.phi)
    pb = lotto_payoff_b(args.a, args.b, args.phi)
    if args.format == "json":
        print(json.dumps({"a": _round12(args.a), "b": _round12(args.b),
                          "phi": _round12(args.phi),
                          "payoff_a": _round12(pa), "payoff_b": _round12(pb)}))
    else:
        print(f"payoff_a  {_fmt(pa)}")
        print(f"payoff_b  {_fmt(pb)}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {"solve": _cmd_solve, "sweep": _cmd_sweep,
                "verify": _cmd_verify, "payoff": _cmd_payoff}
    try:
        return handlers[args.command](args)
    except ValueError as exc:
        # covers invariant violations and malformed config files
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
