"""Command-line front end: axiom verification, the link-invariant table and lens spaces.

Every command emits records {command, N, beta, inputs, value, pretty} where
value is the exact scalar as four rational strings in the basis
1, zeta, zeta^2, zeta^3.  With --check, records also carry a check field
(match, mismatch, derived or unchecked) and a mismatch sets exit status 1.
Usage and configuration errors exit with status 2.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import QAlgebra
from .errors import ConfigError, SfqhaError
from .scalars import ONE, ZERO, BetaChoice, CycScalar, make_beta, parse_scalar

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
MAX_N_ALGEBRA = 5
MAX_N_REPS = 3
WORKERS_ENV = "SFQHA_WORKERS"

SIMPLES = ("X0+", "X0-", "X1+", "X1-")
REGIME_COLOURS = {
    "categorical": ("X0+", "X0-", "X1+", "X1-"),
    "modified": ("P0+", "P0-", "X1+", "X1-"),
}


@dataclass
class RunConfig:
    command: str
    N: int
    beta_exponent: int
    fmt: str = "text"
    check: bool = False
    params: dict = field(default_factory=dict)

    def validate(self, max_n: int) -> None:
        make_beta(BetaChoice(self.N, self.beta_exponent))
        if self.N > max_n:
            raise ConfigError(f"{self.command} supports N <= {max_n}, got N = {self.N}")


def record(cfg: RunConfig, inputs: dict, value: CycScalar, check: str | None = None,
           pretty: str | None = None) -> dict:
    rec = {"command": cfg.command, "N": cfg.N, "beta": cfg.beta_exponent, "inputs": inputs,
           "value": value.to_json(), "pretty": value.pretty() if pretty is None else pretty}
    if check is not None:
        rec["check"] = check
    return rec


def _verdict(value: CycScalar, expected: CycScalar | None) -> str:
    if expected is None:
        return "unchecked"
    return "match" if value == expected else "mismatch"


@lru_cache(maxsize=None)
def _algebra(N: int, k: int) -> QAlgebra:
    return QAlgebra(N, k)


@lru_cache(maxsize=None)
def _trace(N: int, k: int, regime: str):
    from .traces import trace_assignment
    return trace_assignment(_algebra(N, k), regime)


def _workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise ConfigError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None
    return max(1, n)


def _run_jobs(fn, jobs: list) -> list:
    """Evaluate independent jobs; results keep the input order."""
    workers = _workers()
    if workers == 1 or len(jobs) < 2:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs))


# -- module labels -------------------------------------------------------------------------------

def _split_top(text: str) -> list[str]:
    """Split on commas that are not inside parentheses."""
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return parts


def parse_mu(text: str):
    """'Pmu:a-,a+,b-,b+' with each entry a rational or '(c0,c1,c2,c3)'."""
    from .reps import MuMatrix
    body = text[4:] if text.startswith("Pmu:") else text
    parts = _split_top(body)
    if len(parts) != 4:
        raise ConfigError(f"mu needs four entries a-,a+,b-,b+, got {text!r}")
    try:
        return MuMatrix.of(*(parse_scalar(p) for p in parts))
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad mu entry in {text!r}: {exc}") from None


def mu_label(mu) -> str:
    return "Pmu:" + ",".join(x.tuple_str() if not x.is_rational() else x.to_json()[0]
                             for x in (mu.a_minus, mu.a_plus, mu.b_minus, mu.b_plus))


def build_module(alg: QAlgebra, label: str):
    from .reps import p_mu, projective_P0, simple_modules
    if label in SIMPLES:
        return simple_modules(alg)[label]
    if label in ("P0+", "P0-"):
        return projective_P0(alg, 1 if label == "P0+" else -1)
    if label.startswith("Pmu:"):
        if alg.N != 2:
            raise ConfigError("P_mu modules exist only for N = 2")
        return p_mu(alg, parse_mu(label))
    raise ConfigError(f"unknown module label {label!r}")


# -- verify --------------------------------------------------------------------------------------

def cmd_verify(cfg: RunConfig) -> tuple[list[dict], int]:
    from .axioms import verify_axioms
    cfg.validate(MAX_N_ALGEBRA)
    alg = _algebra(cfg.N, cfg.beta_exponent)
    results = dict(verify_axioms(alg).results)
    if cfg.N <= MAX_N_REPS:
        results.update(_verify_cointegrals(alg))
        results.update(_verify_reps(alg))
    recs = [record(cfg, {"identity": name}, ONE if ok else ZERO, pretty="PASS" if ok else "FAIL")
            for name, ok in results.items()]
    return recs, EXIT_OK if all(results.values()) else EXIT_MISMATCH


def _verify_cointegrals(alg: QAlgebra) -> dict[str, bool]:
    from .cointegrals import (cointegral, cointegral_check, solve_symmetrised_cointegral,
                              stabilisation_coefficients, symmetrised_check,
                              symmetrised_cointegral_space)
    out = {}
    for side in ("right", "left"):
        out[f"symmetrised cointegral space ({side}) is 1-dim"] = \
            len(symmetrised_cointegral_space(alg, side)) == 1
        out[f"symmetrised cointegral equation ({side})"] = \
            symmetrised_check(alg, solve_symmetrised_cointegral(alg, side), side)
        out[f"cointegral equation ({side})"] = cointegral_check(alg, cointegral(alg, side), side)
    dp, dm = stabilisation_coefficients(alg)
    b2 = alg.beta * alg.beta
    out["Delta_+ = beta^-2 and Delta_- = beta^2"] = dp == b2.inverse() and dm == b2
    return out


def _verify_reps(alg: QAlgebra) -> dict[str, bool]:
    from .reps import projective_P0, simple_modules
    out = {}
    mods = dict(simple_modules(alg))
    mods["P0+"] = projective_P0(alg, 1)
    mods["P0-"] = projective_P0(alg, -1)
    dims = {"X0+": 1, "X0-": 1, "X1+": 2 ** alg.N, "X1-": 2 ** alg.N,
            "P0+": 2 ** (2 * alg.N), "P0-": 2 ** (2 * alg.N)}
    for name, rep in mods.items():
        out[f"{name} satisfies the defining relations"] = not rep.relation_failures()
        out[f"dim {name} = {dims[name]}"] = rep.dim == dims[name]
    return out


# -- table1 --------------------------------------------------------------------------------------

def _table_jobs(cfg: RunConfig) -> list[tuple]:
    p = cfg.params
    jobs = []
    for regime in p["regimes"]:
        if regime == "pullback":
            if cfg.N != 2:
                continue
            colours = [mu_label(parse_mu(m)) for m in p["mu"]]
        else:
            colours = list(REGIME_COLOURS[regime])
        for X in colours:
            for n in p["n"]:
                jobs.append((cfg.N, cfg.beta_exponent, regime, "unknot", X, n, None, None))
            for m in p["m"]:
                jobs.append((cfg.N, cfg.beta_exponent, regime, "torus", X, m, None, None))
            for U in SIMPLES:
                for a in p["a"]:
                    for b in p["b"]:
                        jobs.append((cfg.N, cfg.beta_exponent, regime, "hopf", X, a, U, b))
    return jobs


def table_cell(job: tuple) -> tuple[dict, CycScalar, CycScalar | None, bool]:
    """(inputs, value, expected, asserted) for one cell of the link table."""
    from .links import (expected_hopf, expected_torus, expected_unknot, hopf_invariant,
                        in_blue_range, torus_invariant, unknot_invariant)
    from .reps import simple_modules
    N, k, regime, kind, X, x, U, y = job
    alg = _algebra(N, k)
    T = _trace(N, k, regime)
    M = build_module(alg, X)
    mu = parse_mu(X) if X.startswith("Pmu:") else None
    inputs = {"link": kind, "regime": regime, "colour": X}
    asserted = True
    if kind == "unknot":
        inputs["n"] = x
        value = unknot_invariant(T, M, x)
        expected = expected_unknot(alg, regime, X, x, mu)
    elif kind == "torus":
        inputs["m"] = x
        value = torus_invariant(T, M, x)
        expected = expected_torus(alg, regime, X, x, mu)
        # interpolated entries are only asserted inside the computed ranges
        asserted = regime != "modified" or in_blue_range(N, x)
    else:
        inputs.update({"a": x, "second_colour": U, "b": y})
        value = hopf_invariant(T, M, x, simple_modules(alg)[U], y)
        expected = expected_hopf(alg, regime, X, x, U, y, mu)
    return inputs, value, expected, asserted


def cmd_table1(cfg: RunConfig) -> tuple[list[dict], int]:
    cfg.validate(MAX_N_REPS)
    for m in cfg.params["m"]:
        if m % 2 == 0:
            raise ConfigError(f"torus knots need odd m, got {m}")
    if "pullback" in cfg.params["regimes"] and cfg.N != 2:
        raise ConfigError("the pullback regime is defined for N = 2 only")
    cells = _run_jobs(table_cell, _table_jobs(cfg))
    recs, status = [], EXIT_OK
    for inputs, value, expected, asserted in cells:
        check = None
        if cfg.check:
            check = _verdict(value, expected) if asserted else "derived"
            if check == "mismatch":
                status = EXIT_MISMATCH
        recs.append(record(cfg, inputs, value, check))
    return recs, status


# -- lens ----------------------------------------------------------------------------------------

def _lens_expected(alg: QAlgebra, regime: str, kind: str, cf, alpha: str, module: str):
    from . import lens
    if kind == "lyu" or (regime == "categorical" and alpha == "id" and module == "X0+"):
        return CycScalar(cf.p ** alg.N)
    if regime == "modified" and kind == "circ":
        sign = 1 if module.endswith("+") else -1
        if module.startswith("P0"):
            if alpha in ("id", "e0"):
                return lens.expected_modified_alpha_t(alg, cf, 0, sign)
            if alpha.startswith("t:"):
                t = sum(1 << j for j, b in enumerate(alpha[2:]) if b == "1")
                return lens.expected_modified_alpha_t(alg, cf, t, sign)
            if alpha == "phi:P0+":
                return lens.expected_modified_phi_p0(alg, cf)
        if module.startswith("X1") and alpha == f"phi:{module}":
            return lens.expected_modified_phi_x1(alg, cf, sign)
        if alpha == "integral" and module == "P0+":
            return CycScalar(cf.p ** alg.N)
    if regime == "modified" and kind == "star" and alpha == "integral" and module == "P0+":
        return CycScalar(cf.p ** alg.N)
    if regime == "pullback" and kind == "circ" and module.startswith("Pmu:"):
        label = "e0" if alpha == "id" else alpha
        try:
            return lens.expected_pullback(cf, parse_mu(module), label)
        except ValueError:
            return None
    return None


def lens_cell(job: tuple) -> tuple[dict, CycScalar, CycScalar | None]:
    from . import lens
    N, k, p, q, regime, kind, alpha, module = job
    alg = _algebra(N, k)
    cf = lens.cf_expand(p, q)
    inputs = {"p": p, "q": q, "a": list(cf.a), "kind": kind, "regime": regime}
    if kind == "lyu":
        value = lens.lyu_lens(alg, cf)
    else:
        inputs.update({"alpha": alpha, "module": module})
        try:
            alpha_hat = lens.named_alpha(alg, alpha)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        T = _trace(N, k, regime)
        value = lens.lens_invariant(kind, alpha_hat, build_module(alg, module), T, cf)
    return inputs, value, _lens_expected(alg, regime, kind, cf, alpha, module)


def cmd_lens(cfg: RunConfig) -> tuple[list[dict], int]:
    cfg.validate(MAX_N_REPS)
    p = cfg.params
    regime = p["regime"]
    kind = p["kind"] or ("lyu" if regime == "categorical" else "circ")
    module = p["module"] or {"categorical": "X0+", "modified": "P0+"}.get(regime)
    if module is None:
        raise ConfigError("the pullback regime needs --module Pmu:a-,a+,b-,b+")
    if regime == "pullback" and cfg.N != 2:
        raise ConfigError("the pullback regime is defined for N = 2 only")
    if module.startswith("Pmu:"):
        module = mu_label(parse_mu(module))
    jobs = []
    for pp, qq in p["pq"]:
        if pp < 2 or qq < 1:
            raise ConfigError(f"need p >= 2 and q >= 1, got ({pp}, {qq})")
        for alpha in p["alpha"]:
            jobs.append((cfg.N, cfg.beta_exponent, pp, qq, regime, kind, alpha, module))
    cells = _run_jobs(lens_cell, jobs)
    recs, status = [], EXIT_OK
    for inputs, value, expected in cells:
        check = None
        if cfg.check:
            check = _verdict(value, expected)
            if check == "mismatch":
                status = EXIT_MISMATCH
        recs.append(record(cfg, inputs, value, check))
    return recs, status


# -- output --------------------------------------------------------------------------------------

def render(recs: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(recs, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["command", "N", "beta", "inputs", "c0", "c1", "c2", "c3", "pretty", "check"])
        for r in recs:
            w.writerow([r["command"], r["N"], r["beta"], json.dumps(r["inputs"], sort_keys=True),
                        *r["value"], r["pretty"], r.get("check", "")])
        return buf.getvalue()
    lines = []
    for r in recs:
        args = " ".join(f"{k}={_text_value(v)}" for k, v in r["inputs"].items())
        tail = f"  [{r['check']}]" if "check" in r else ""
        lines.append(f"{args}  ->  {r['pretty']}{tail}")
    return "\n".join(lines) + ("\n" if lines else "")


def _text_value(v) -> str:
    if isinstance(v, list):
        return "[" + ",".join(str(x) for x in v) + "]"
    return str(v)


# -- argument parsing ----------------------------------------------------------------------------

def int_range(text: str) -> list[int]:
    """'lo:hi' (inclusive) or a comma-separated list of integers.

    A value starting with a minus sign must be attached, as in --m=-3,-1,1,3.
    """
    try:
        if ":" in text:
            lo, hi = text.split(":")
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi or a list of integers, got {text!r}")


def _common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--N", type=int, required=True, help="number of fermion pairs")
    sp.add_argument("--beta", type=int, required=True,
                    help="exponent k with beta = zeta8^k; k must have the parity of N")
    sp.add_argument("--format", choices=["text", "json", "csv"], default="text")
    sp.add_argument("--check", action="store_true", help="compare against closed forms")
    sp.add_argument("--out", help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sfqha", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("verify", help="check the quasi-Hopf, ribbon, cointegral and module identities")
    _common(sp)

    sp = sub.add_parser("table1", help="unknot, Hopf link and torus knot invariants")
    _common(sp)
    sp.add_argument("--n", type=int_range, default=int_range("-4:4"), help="unknot framings")
    sp.add_argument("--m", type=int_range, default=int_range("-5,-3,-1,1,3,5"),
                    help="torus knot parameters (odd)")
    sp.add_argument("--a", type=int_range, default=int_range("-2:2"), help="Hopf framing of the cut strand")
    sp.add_argument("--b", type=int_range, default=int_range("-2:2"), help="Hopf framing of the closed strand")
    sp.add_argument("--regimes", default="categorical,modified",
                    help="comma-separated subset of categorical,modified,pullback")
    sp.add_argument("--mu", action="append", default=None,
                    help="P_mu sample 'a-,a+,b-,b+' for the pullback column (repeatable)")

    sp = sub.add_parser("lens", help="lens space invariants")
    _common(sp)
    sp.add_argument("--p", type=int, action="append", help="p (repeatable, paired with --q)")
    sp.add_argument("--q", type=int, action="append", help="q (repeatable)")
    sp.add_argument("--regime", choices=["categorical", "modified", "pullback"], default="categorical")
    sp.add_argument("--kind", choices=["star", "circ", "lyu"], default=None,
                    help="closing of the surgery link; default lyu (categorical) or circ")
    sp.add_argument("--alpha", action="append", default=None,
                    help="central element label: id, e0, e1, integral, t:<bits>, phi:<V>, a<j><l>, e0f1+f2-")
    sp.add_argument("--module", default=None, help="X0+-, X1+-, P0+- or Pmu:a-,a+,b-,b+")
    return ap


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(args.command, args.N, args.beta, args.format, args.check)
    if args.command == "table1":
        regimes = [r for r in args.regimes.split(",") if r]
        for r in regimes:
            if r not in ("categorical", "modified", "pullback"):
                raise ConfigError(f"unknown regime {r!r}")
        mus = args.mu or ["1,0,0,1", "0,0,0,0", "2,0,0,1", "1,1,1,1", "(0,0,1,0),0,0,(0,0,-1,0)"]
        cfg.params = {"n": args.n, "m": args.m, "a": args.a, "b": args.b,
                      "regimes": regimes, "mu": mus}
    elif args.command == "lens":
        ps, qs = args.p or [], args.q or []
        if not ps or len(ps) != len(qs):
            raise ConfigError("give matching --p and --q values")
        cfg.params = {"pq": list(zip(ps, qs)), "regime": args.regime, "kind": args.kind,
                      "alpha": args.alpha or ["id"], "module": args.module}
    return cfg


COMMANDS = {"verify": cmd_verify, "table1": cmd_table1, "lens": cmd_lens}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = config_from_args(args)
        recs, status = COMMANDS[cfg.command](cfg)
    except SfqhaError as exc:
        if not isinstance(exc, ConfigError) and not _is_config(exc):
            raise
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(recs, cfg.fmt)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def _is_config(exc: Exception) -> bool:
    from .errors import EvenM, InvalidBeta, NotCoprime
    return isinstance(exc, (InvalidBeta, NotCoprime, EvenM))


if __name__ == "__main__":
    sys.exit(main())
