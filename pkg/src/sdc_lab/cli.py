"""Command-line front end: ``sdc-lab {capacity,sweep,verify,witness}``.

Exit codes: 0 ok, 1 verification failure, 2 configuration error,
3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from . import formulas, protocol, sweep, verify
from .encodings import (
    complementarity_c,
    is_commuting_set,
    overlap_matrix,
    pauli_product_set,
)
from .errors import SDCError
from .resources import is_unital
from .specs import (
    ConfigError,
    channel_from_spec,
    hadamard_from_spec,
    hadamard_to_json,
    state_from_spec,
    unitaries_from_spec,
)

EXIT_OK, EXIT_VERIFY, EXIT_CONFIG, EXIT_NOCONV = 0, 1, 2, 3


def _floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of numbers, got {text!r}") from exc


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _bound_dict(rep: formulas.BoundReport) -> dict:
    return {"name": rep.name, "value": rep.value, "applicable": rep.applicable,
            "components": rep.components, "overall": rep.overall}


def capacity_report(d: int, hadamard, state, channel, tol: float | None = None) -> dict:
    """Optimiser capacity plus every closed form and bound evaluated for one configuration."""
    h = hadamard_from_spec(hadamard, d)
    rho, smeta = state_from_spec(state, d)
    e, cmeta = channel_from_spec(channel, d)
    c = overlap_matrix(h)
    cv = complementarity_c(c)
    u = pauli_product_set(h)
    res = protocol.maximize_chi(u, rho, e, tol=tol or protocol.TOL_OPT)
    bound = protocol.classical_strategy_bound(d)

    werner = smeta["type"] == "werner"
    depol = cmeta["type"] == "depolarising"
    noiseless = depol and cmeta["beta"] == 1.0

    closed = {}
    if werner and depol:
        closed["werner_depolarising"] = formulas.capacity_werner_depolarising(smeta["alpha"], cmeta["beta"], c)
    if werner and smeta["alpha"] == 1.0 and noiseless:
        closed["mes_noiseless"] = formulas.capacity_mes_noiseless(c)
        closed["mes_quantum_advantage"] = formulas.quantum_advantage_mes(c)

    ens = protocol.uniform_ensemble(u, rho, e)
    bounds = formulas.all_bounds(c, rho, e, ens,
                                 werner_alpha=smeta["alpha"] if werner else None,
                                 depolarising_beta=cmeta["beta"] if depol else None)

    deltas = {f"capacity-{k}": res.value - v for k, v in closed.items() if k != "mes_quantum_advantage"}
    for b in bounds:
        if b.applicable:
            deltas[f"capacity-bound:{b.name}"] = res.value - b.value

    return {
        "schema": 1,
        "command": "capacity",
        "d": d,
        "hadamard": hadamard_to_json(h),
        "state": smeta,
        "channel": cmeta,
        "channel_unital": is_unital(e),
        "overlap": c.c.tolist(),
        "c": cv,
        "capacity": res.value,
        "optimal_p": res.optimal_p.tolist(),
        "iterations": res.iterations,
        "converged": res.converged,
        "certificate_gap": res.certificate_gap,
        "classical_bound": bound,
        "advantage": res.value > bound + protocol.TOL_ADV,
        "closed_forms": closed,
        "bounds": [_bound_dict(b) for b in bounds],
        "deltas": deltas,
    }


def _capacity_text(rep: dict) -> str:
    lines = [
        f"d                 {rep['d']}",
        f"c                 {rep['c']:.12g}",
        f"capacity          {rep['capacity']:.12g} bits",
        f"classical bound   {rep['classical_bound']:.12g} bits",
        f"advantage         {'yes' if rep['advantage'] else 'no'}",
        f"converged         {rep['converged']} ({rep['iterations']} iterations, gap {rep['certificate_gap']:.3e})",
    ]
    for k, v in rep["closed_forms"].items():
        lines.append(f"closed form       {k:<24} {v:.12g}")
    for b in rep["bounds"]:
        tag = "" if b["applicable"] else "  (not guaranteed here)"
        lines.append(f"bound             {b['name']:<24} {b['value']:.12g}{tag}")
    for k, v in rep["deltas"].items():
        lines.append(f"delta             {k:<24} {v:+.3e}")
    return "\n".join(lines) + "\n"


def _capacity_csv(rep: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("d", "c", "capacity", "classical_bound", "advantage", "converged"))
    w.writerow((rep["d"], f"{rep['c']:.12g}", f"{rep['capacity']:.12g}", f"{rep['classical_bound']:.12g}",
                "true" if rep["advantage"] else "false", "true" if rep["converged"] else "false"))
    return buf.getvalue()


def cmd_capacity(args) -> int:
    d = _single_d(args)
    rep = capacity_report(d, args.hadamard, args.state, args.channel, args.tol)
    fmt = args.format
    text = _dumps(rep) if fmt == "json" else _capacity_csv(rep) if fmt == "csv" else _capacity_text(rep)
    _emit(text, args.out)
    return EXIT_OK if rep["converged"] else EXIT_NOCONV


def cmd_sweep(args) -> int:
    d = _single_d(args)
    res = sweep.capacity_sweep(d, args.noise, args.c_steps, args.hadamard_family)
    if args.format == "json":
        _emit(_dumps(sweep.to_json_obj(res)), args.out)
    else:
        _emit(sweep.to_csv(res), args.out)
    if args.out and d > 2:
        with open(args.out + ".ckl.json", "w") as fh:
            fh.write(_dumps(sweep.overlaps_json_obj(res)))
    return EXIT_OK


def cmd_verify(args) -> int:
    dims = args.d or [2, 3]
    names = args.claims or None
    try:
        results = verify.run_claims(names, dims, seed=args.seed, samples=args.samples)
    except KeyError as exc:
        raise ConfigError(str(exc.args[0])) from exc
    failed = [r.name for r in results if not r.passed]
    if args.format == "json":
        text = _dumps({
            "schema": 1,
            "command": "verify",
            "dims": list(dims),
            "seed": args.seed,
            "claims": [r.__dict__ for r in results],
            "failures": failed,
        })
    else:
        text = "\n".join(r.line() for r in results)
        text += f"\n{len(results) - len(failed)}/{len(results)} claims passed"
        text += f"; failed: {', '.join(failed)}\n" if failed else "\n"
    _emit(text, args.out)
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_witness(args) -> int:
    d = _single_d(args)
    if args.unitaries:
        u = unitaries_from_spec(args.unitaries, d)
    else:
        u = pauli_product_set(hadamard_from_spec(args.hadamard, d))
    rho, _ = state_from_spec(args.state, d)
    e, _ = channel_from_spec(args.channel, d)
    res = protocol.maximize_chi(u, rho, e, tol=args.tol or protocol.TOL_OPT)
    bound = protocol.classical_strategy_bound(d)
    certified = res.value > bound + protocol.TOL_ADV
    verdict = "non-commuting certified" if certified else "not certified"
    rep = {
        "schema": 1,
        "command": "witness",
        "d": d,
        "set_size": len(u),
        "capacity": res.value,
        "classical_bound": bound,
        "verdict": verdict,
        "certified": certified,
        "commuting": is_commuting_set(u),
        "converged": res.converged,
    }
    if args.format == "json":
        text = _dumps(rep)
    else:
        text = (f"capacity          {res.value:.12g} bits\n"
                f"log d threshold   {bound:.12g} bits\n"
                f"verdict           {verdict}\n")
    _emit(text, args.out)
    return EXIT_OK if res.converged else EXIT_NOCONV


def _single_d(args) -> int:
    if not args.d or len(args.d) != 1:
        raise ConfigError("this command needs a single --d value")
    if args.d[0] < 2:
        raise ConfigError("--d must be at least 2")
    return args.d[0]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sdc-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, d_default):
        p.add_argument("--d", type=_ints, default=d_default, help="qudit dimension (verify: comma list)")
        p.add_argument("--out", help="write output to this path instead of stdout")
        p.add_argument("--format", choices=("csv", "json"), default=None)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--tol", type=float, default=None, help="optimiser certificate tolerance in bits")
        p.add_argument("-v", "--verbose", action="store_true")

    def resources_args(p):
        p.add_argument("--hadamard", default="fourier", help="fourier | identity | rotation:<theta> | JSON/file")
        p.add_argument("--state", default="mes", help="mes | werner:<alpha> | JSON/file")
        p.add_argument("--channel", default="identity", help="identity | depolarising:<beta> | dephasing | JSON/file")

    p = sub.add_parser("capacity", help="capacity of one configuration with all closed forms and bounds")
    common(p, [2])
    resources_args(p)
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser("sweep", help="capacity versus c for several noise levels (CSV)")
    common(p, [2])
    p.add_argument("--noise", type=_floats, default=list(sweep.DEFAULT_NOISES))
    p.add_argument("--c-steps", type=int, default=50)
    p.add_argument("--hadamard-family", default="fractional-fourier",
                   help="Hadamard family realising each c for d > 2")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="check every formula and bound against the optimiser")
    common(p, None)
    p.add_argument("--claims", type=lambda s: [x for x in s.split(",") if x], default=None,
                   help=f"comma list from: {', '.join(verify.CLAIMS)}")
    p.add_argument("--samples", type=int, default=10, help="random configurations per claim and dimension")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", help="certify non-commutativity of a unitary set via capacity > log d")
    common(p, [2])
    resources_args(p)
    p.add_argument("--unitaries", help="JSON list of {re, im} matrices (inline or file)")
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (SDCError, ValueError, OSError) as exc:
        print(f"sdc-lab: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
