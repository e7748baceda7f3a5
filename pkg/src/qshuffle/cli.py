"""Command-line surface.

Exit status: 0 on success, 1 when a verification ran and found failures,
2 on usage or input-parse errors.  JSON output carries "schema": 1 and is
byte-identical across identical invocations.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .fields import FiniteField, PrimeField, factor_prime_power
from .goss import goss
from .hopf import HopfStructureR, check_axioms, hopf_from_json, transport
from .maps import ehat, phi, phi_inv, pi_hat
from .shuffle import ShuffleContext
from .verify import PROPERTIES, run_property
from .words import (
    ParseError,
    element_to_json,
    format_element,
    format_tensor,
    parse_element,
    parse_tensor,
    tensor_to_json,
)
from .zeta import check_shuffle_oracle, mzv

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib


@dataclass
class RunConfig:
    q: int = 2
    weight_cap: int = 4
    precision: int = 30
    output: str = "text"
    seed: int | None = None

    def __post_init__(self):
        self.p, _ = factor_prime_power(self.q)
        if self.weight_cap < 1:
            raise ValueError("weight_cap must be >= 1")
        if self.precision < 1:
            raise ValueError("precision must be >= 1")
        if self.output not in ("text", "json"):
            raise ValueError(f"output must be text or json, not {self.output!r}")


CONFIG_KEYS = ("q", "weight_cap", "precision", "output", "seed")


def load_config(path: str) -> dict:
    if path.endswith(".toml"):
        with open(path, "rb") as fh:
            doc = tomllib.load(fh)
    else:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    unknown = set(doc) - set(CONFIG_KEYS)
    if unknown:
        raise ValueError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return doc


def make_config(args: argparse.Namespace) -> RunConfig:
    base: dict = {}
    if getattr(args, "config", None):
        base.update(load_config(args.config))
    overrides = {
        "q": getattr(args, "q", None),
        "weight_cap": getattr(args, "weight_cap", None),
        "precision": getattr(args, "prec", None),
        "output": getattr(args, "output", None),
        "seed": getattr(args, "seed", None),
    }
    for key, val in overrides.items():
        if val is not None:
            base[key] = val
    return RunConfig(**base)


def emit(cfg: RunConfig, text: str, doc: dict) -> None:
    if cfg.output == "json":
        doc = {"schema": 1, **doc}
        print(json.dumps(doc, sort_keys=True))
    else:
        print(text)


def parse_index(raw: str) -> tuple:
    try:
        entries = tuple(int(part) for part in raw.split(","))
    except ValueError:
        raise ValueError(f"index {raw!r} is not a comma-separated integer list")
    if not entries or any(a < 1 for a in entries):
        raise ValueError(f"index entries must be positive: {raw!r}")
    return entries


# -- subcommand bodies ------------------------------------------------------


def cmd_shuffle(args) -> int:
    cfg = make_config(args)
    fp = PrimeField(cfg.p)
    ctx = ShuffleContext(cfg.q)
    left = parse_element(args.left, fp)
    right = parse_element(args.right, fp)
    product = ctx.shuffle(left, right, args.algebra)
    emit(
        cfg,
        format_element(product),
        {
            "command": "shuffle",
            "algebra": args.algebra,
            "q": cfg.q,
            "product": element_to_json(product),
            "text": format_element(product),
        },
    )
    return 0


def cmd_verify(args) -> int:
    cfg = make_config(args)
    report = run_property(args.property, cfg.q, cfg.weight_cap)
    if cfg.seed is not None:
        report.seed = cfg.seed
    emit(cfg, report.render_text(), {"command": "verify", **report.to_json()})
    return 0 if report.ok else 1


def cmd_zeta(args) -> int:
    cfg = make_config(args)
    index = parse_index(args.index)
    value = mzv(index, FiniteField(cfg.q), cfg.precision)
    emit(
        cfg,
        str(value.value),
        {
            "command": "zeta",
            "index": list(index),
            "q": cfg.q,
            "precision": cfg.precision,
            "value": value.value.to_json(),
        },
    )
    return 0


def cmd_oracle(args) -> int:
    cfg = make_config(args)
    a = parse_index(args.a)
    b = parse_index(args.b)
    report = check_shuffle_oracle(a, b, FiniteField(cfg.q), cfg.precision)
    verdict = "PASS" if report.passed else "FAIL"
    text = (
        f"oracle a={list(a)} b={list(b)} q={cfg.q} precision={cfg.precision}: {verdict}"
    )
    if not report.passed:
        text += f" (residual valuation {report.residual_valuation})"
    emit(cfg, text, {"command": "oracle", **report.to_json()})
    return 0 if report.passed else 1


def cmd_goss(args) -> int:
    cfg = make_config(args)
    g = goss(args.n, cfg.q)
    emit(
        cfg,
        str(g),
        {"command": "goss", "n": args.n, "q": cfg.q, "coeffs": g.to_json(), "text": str(g)},
    )
    return 0


def _element_command(args, name: str, apply) -> int:
    cfg = make_config(args)
    fp = PrimeField(cfg.p)
    value = parse_element(args.expr, fp)
    result = apply(value)
    emit(
        cfg,
        format_element(result),
        {
            "command": name,
            "q": cfg.q,
            "result": element_to_json(result),
            "text": format_element(result),
        },
    )
    return 0


def cmd_ehat(args) -> int:
    return _element_command(args, "ehat", ehat)


def cmd_pi(args) -> int:
    return _element_command(args, "pi", pi_hat)


def cmd_phi_inv(args) -> int:
    cfg = make_config(args)
    fp = PrimeField(cfg.p)
    ctx = ShuffleContext(cfg.q)
    result = phi_inv(parse_element(args.expr, fp), ctx)
    emit(
        cfg,
        format_tensor(result),
        {
            "command": "phi-inv",
            "q": cfg.q,
            "result": tensor_to_json(result),
            "text": format_tensor(result),
        },
    )
    return 0


def cmd_phi(args) -> int:
    cfg = make_config(args)
    fp = PrimeField(cfg.p)
    ctx = ShuffleContext(cfg.q)
    tensor = parse_tensor(args.expr, fp)
    result = phi(tensor, ctx)
    emit(
        cfg,
        format_element(result),
        {
            "command": "phi",
            "q": cfg.q,
            "result": element_to_json(result),
            "text": format_element(result),
        },
    )
    return 0


def cmd_hopf(args) -> int:
    cfg = make_config(args)
    with open(args.structure, encoding="utf-8") as fh:
        doc = json.load(fh)
    h = hopf_from_json(doc)
    ctx = ShuffleContext(h.q)
    if args.transport:
        if not isinstance(h, HopfStructureR):
            raise ValueError("--transport needs a structure on the y-free subalgebra")
        h = transport(h, ctx)
    cap = args.weight_cap if args.weight_cap is not None else h.weight_bound
    if args.check:
        reports = check_axioms(h, ctx, cap)
        ok = all(r.passed for r in reports)
        lines = [f"{r.axiom}: {r.verdict}" for r in reports]
        for r in reports:
            for w, lhs, rhs in r.witnesses:
                lines.append(f"  {r.axiom} witness {w}: {lhs} != {rhs}")
        emit(
            cfg,
            "\n".join(lines),
            {
                "command": "hopf",
                "algebra": h.algebra,
                "q": h.q,
                "weight_cap": cap,
                "reports": [r.to_json() for r in reports],
            },
        )
        return 0 if ok else 1
    if args.transport:
        print(json.dumps(h.to_json(), indent=2, sort_keys=True))
        return 0
    emit(
        cfg,
        f"{h.algebra}-structure over q={h.q}, weight bound {h.weight_bound}: tables valid",
        {
            "command": "hopf",
            "algebra": h.algebra,
            "q": h.q,
            "weight_bound": h.weight_bound,
            "valid": True,
        },
    )
    return 0


# -- parser -----------------------------------------------------------------


def _add_common(sp, *, weight_cap=False, prec=False):
    sp.add_argument("--q", type=int, default=None, help="field size q = p^e")
    sp.add_argument("--output", choices=("text", "json"), default=None)
    sp.add_argument("--seed", type=int, default=None, help="seed recorded for sampled sweeps")
    if weight_cap:
        sp.add_argument("--weight-cap", dest="weight_cap", type=int, default=None)
    if prec:
        sp.add_argument("--prec", type=int, default=None, help="truncation order in 1/theta")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qshuffle",
        description="Exact q-shuffle algebra computations with a numeric zeta oracle.",
    )
    parser.add_argument("--config", default=None, help="TOML or JSON file preloading defaults")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("shuffle", help="product of two elements")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("--algebra", choices=("R", "E"), default="E")
    _add_common(sp)
    sp.set_defaults(fn=cmd_shuffle)

    sp = sub.add_parser("verify", help="run an exhaustive identity sweep")
    sp.add_argument("--property", required=True, choices=sorted(PROPERTIES))
    _add_common(sp, weight_cap=True)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("zeta", help="truncated Thakur zeta value")
    sp.add_argument("--index", required=True, help="comma-separated entries, e.g. 1,2")
    _add_common(sp, prec=True)
    sp.set_defaults(fn=cmd_zeta)

    sp = sub.add_parser("oracle", help="compare a shuffle product against zeta values")
    sp.add_argument("--a", required=True, help="first index, comma-separated")
    sp.add_argument("--b", required=True, help="second index, comma-separated")
    _add_common(sp, prec=True)
    sp.set_defaults(fn=cmd_oracle)

    sp = sub.add_parser("goss", help="symbolic Goss polynomial G_n")
    sp.add_argument("--n", type=int, required=True)
    _add_common(sp)
    sp.set_defaults(fn=cmd_goss)

    sp = sub.add_parser("ehat", help="apply ehat to a y-free element")
    sp.add_argument("expr")
    _add_common(sp)
    sp.set_defaults(fn=cmd_ehat)

    sp = sub.add_parser("phi", help="apply phi to a tensor")
    sp.add_argument("expr", help='e.g. "x[1] (x) x[2]"')
    _add_common(sp)
    sp.set_defaults(fn=cmd_phi)

    sp = sub.add_parser("phi-inv", help="invert phi on an element")
    sp.add_argument("expr")
    _add_common(sp)
    sp.set_defaults(fn=cmd_phi_inv)

    sp = sub.add_parser("pi", help="annihilate y-terms")
    sp.add_argument("expr")
    _add_common(sp)
    sp.set_defaults(fn=cmd_pi)

    sp = sub.add_parser("hopf", help="validate, check, or transport a Hopf structure file")
    sp.add_argument("--structure", required=True, help="JSON table document")
    sp.add_argument("--check", action="store_true", help="run the axiom checker")
    sp.add_argument("--transport", action="store_true", help="transport to the full algebra")
    _add_common(sp, weight_cap=True)
    sp.set_defaults(fn=cmd_hopf)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
