"""Command-line harness.

Subcommands: generate, decompose, sparsify, certify, resist, experiment.
Exit codes: 0 on success with all hard assertions passing, 1 when a pipeline
assertion fails (e.g. interval containment), 2 for invalid configuration.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import __version__
from .cutweave import game_elements, play_game
from .decompose import (decomposition_to_text, matching_decomposition,
                        walecki_decomposition)
from .generators import generate
from .graphs import double_cover, to_edge_text
from .report import (ConfigError, ExperimentConfig, build_report, dumps,
                     error_csv, resolve_seed, trial_rng, write_text)
from .sparsify import (independent_sample_baseline, resistance_certificate,
                       resistance_sparsifier, sample_pairs, verify_sparsifier)
from .spectral import all_resistances, lambda2


def _add_common(p: argparse.ArgumentParser, with_source=True):
    if with_source:
        p.add_argument("source", choices=["complete", "random-regular", "circulant",
                                          "hypercube", "file"],
                       help="graph source (hypercube takes --n as the dimension)")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--graph", dest="graph_path", default=None,
                   help="edge-list file for source 'file'")
    p.add_argument("--seed", type=int, default=None,
                   help="master seed (falls back to $RESISTWEAVE_SEED, then 0)")
    p.add_argument("--out", default=None, help="output path (stdout by default)")
    p.add_argument("--format", dest="fmt", choices=["json", "csv"], default="json")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="resistweave",
                                 description="resistance sparsifiers of regular expanders")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a graph in edge-list format")
    _add_common(p)

    p = sub.add_parser("decompose", help="matching or cycle decomposition")
    _add_common(p)
    p.add_argument("--kind", choices=["matchings", "cycles"], default="matchings",
                   help="matchings of the double cover, or Hamiltonian cycles "
                        "of an odd complete graph")

    p = sub.add_parser("sparsify", help="build and verify a resistance sparsifier")
    _add_common(p)
    p.add_argument("--epsilon", type=float, default=None)
    p.add_argument("--d-target", dest="d_target", type=int, default=None)
    p.add_argument("--pairs", dest="pair_budget", type=int, default=2000)

    p = sub.add_parser("certify", help="run the expansion-certification game")
    _add_common(p)
    p.add_argument("--r", type=int, default=None, help="weave regularity per round")
    p.add_argument("--round-constant", dest="round_constant", type=float, default=10.0)
    p.add_argument("--mu", type=float, default=0.5)
    p.add_argument("--transcript", default=None, help="write per-round JSON lines here")

    p = sub.add_parser("resist", help="exact effective resistances")
    _add_common(p)

    p = sub.add_parser("experiment", help="matching sparsifier vs independent baseline")
    _add_common(p)
    p.add_argument("--epsilon", type=float, default=None)
    p.add_argument("--d-target", dest="d_target", type=int, default=None)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--pairs", dest="pair_budget", type=int, default=2000)
    return ap


def _config(args) -> ExperimentConfig:
    return ExperimentConfig(
        command=args.command,
        generator=getattr(args, "source", "complete"),
        n=getattr(args, "n", None),
        degree=getattr(args, "degree", None),
        epsilon=getattr(args, "epsilon", None),
        d_target=getattr(args, "d_target", None),
        seed=resolve_seed(getattr(args, "seed", None)),
        trials=getattr(args, "trials", 1),
        pair_budget=getattr(args, "pair_budget", 2000),
        round_constant=getattr(args, "round_constant", 10.0),
        graph_path=getattr(args, "graph_path", None),
        out=getattr(args, "out", None),
        fmt=getattr(args, "fmt", "json"),
    ).validate()


def _load_graph(cfg: ExperimentConfig):
    return generate(cfg.generator, n=cfg.n, degree=cfg.degree,
                    seed=cfg.seed, path=cfg.graph_path)


def cmd_generate(args) -> int:
    cfg = _config(args)
    g = _load_graph(cfg)
    write_text(cfg.out, to_edge_text(g))
    return 0


def cmd_decompose(args) -> int:
    cfg = _config(args)
    g = _load_graph(cfg)
    if args.kind == "cycles":
        if cfg.generator != "complete" or g.n % 2 == 0:
            raise ConfigError("cycle decomposition is implemented for odd complete graphs")
        decomp = walecki_decomposition(g.n)
    else:
        decomp = matching_decomposition(double_cover(g))
    write_text(cfg.out, decomposition_to_text(decomp))
    return 0


def _sparsifier_trial(g, cfg: ExperimentConfig, trial: int, decomposition):
    rng = trial_rng(cfg.seed, trial)
    epsilon = cfg.epsilon if cfg.epsilon is not None else 0.1
    res = resistance_sparsifier(g, epsilon, rng, decomposition=decomposition,
                                d_target=cfg.d_target)
    return res, rng


def cmd_sparsify(args) -> int:
    cfg = _config(args)
    g = _load_graph(cfg)
    from .decompose import matching_decomposition as md

    decomposition = md(double_cover(g))
    res, rng = _sparsifier_trial(g, cfg, 0, decomposition)
    table_g = all_resistances(g)
    table_h = all_resistances(res.subgraph)
    pairs = None
    if g.n > 300:
        pairs = sample_pairs(g.n, cfg.pair_budget, rng)
    res.errors = verify_sparsifier(g, res.subgraph, pair_budget=cfg.pair_budget,
                                   rng=rng, pairs=pairs,
                                   table_g=table_g, table_h=table_h)
    cert = resistance_certificate(res.subgraph, table=table_h,
                                  lambda2_value=res.lambda2_value)
    if cfg.fmt == "csv":
        if pairs is None:
            iu, iv = np.triu_indices(g.n, k=1)
            pair_list = list(zip(iu.tolist(), iv.tolist()))
        else:
            pair_list = [(int(a), int(b)) for a, b in pairs]
        rows = []
        for u, v in pair_list:
            rg_v = table_g.values[u, v]
            rh_v = table_h.values[u, v]
            rows.append((0, u, v, rg_v, rh_v, abs(rh_v / rg_v - 1.0)))
        write_text(cfg.out, error_csv(rows))
    else:
        report = build_report(cfg, {
            "result": res.to_dict(),
            "certificate": cert.to_dict(),
            "base_lambda2": lambda2(g),
        })
        write_text(cfg.out, dumps(report))
    return 0 if cert.holds else 1


def cmd_certify(args) -> int:
    cfg = _config(args)
    g = _load_graph(cfg)
    elems, n_game = game_elements(g)
    r = args.r
    if r is None:
        q_side = max(1, int(math.ceil((1.1 / args.mu) * math.log(n_game))))
        r = min(len(elems), 2 * q_side) * elems.element_regularity
    cap = int(math.ceil(cfg.round_constant * r * math.log(n_game) ** 2))
    rng = trial_rng(cfg.seed, 0)
    state, cert = play_game(elems, r, cap, rng, mu=args.mu)
    transcript = [rec.to_dict() for rec in state.transcript]
    if args.transcript:
        lines = "\n".join(dumps(rec, indent=0).replace("\n", "") for rec in transcript)
        write_text(args.transcript, lines + "\n")
    psi_drops = [rec.psi_before - rec.psi_after >= -1e-9 for rec in state.transcript]
    report = build_report(cfg, {
        "r": r,
        "round_cap": cap,
        "rounds": state.round,
        "certified": cert is not None,
        "certificate": None if cert is None else cert.to_dict(),
        "psi_monotone": all(psi_drops),
        "transcript": transcript if cfg.fmt == "json" else None,
    })
    write_text(cfg.out, dumps(report))
    return 0 if cert is not None else 1


def cmd_resist(args) -> int:
    cfg = _config(args)
    g = _load_graph(cfg)
    table = all_resistances(g)
    if cfg.fmt == "csv":
        write_text(cfg.out, table.to_csv())
    else:
        report = build_report(cfg, {
            "n": g.n,
            "lambda2": lambda2(g),
            "resistances": table.values,
        })
        write_text(cfg.out, dumps(report))
    return 0


def cmd_experiment(args) -> int:
    cfg = _config(args)
    g = _load_graph(cfg)
    decomposition = matching_decomposition(double_cover(g))
    d = len(decomposition)
    epsilon = cfg.epsilon if cfg.epsilon is not None else 0.1
    d_target = cfg.d_target if cfg.d_target is not None else int(math.ceil(3.0 / epsilon))
    edge_budget = d_target * g.n
    table_g = all_resistances(g)
    trials = []
    all_hold = True
    for t in range(cfg.trials):
        rng = trial_rng(cfg.seed, t)
        res = resistance_sparsifier(g, epsilon, rng, decomposition=decomposition,
                                    d_target=d_target)
        pairs = sample_pairs(g.n, cfg.pair_budget, rng) if g.n > 300 else None
        table_h = all_resistances(res.subgraph)
        res.errors = verify_sparsifier(g, res.subgraph, rng=rng, pairs=pairs,
                                       table_g=table_g, table_h=table_h)
        cert = resistance_certificate(res.subgraph, table=table_h,
                                      lambda2_value=res.lambda2_value)
        all_hold = all_hold and cert.holds
        base = independent_sample_baseline(g, edge_budget, rng)
        if base.subgraph.num_records and base.subgraph.is_connected() \
                and not np.any(base.subgraph.weighted_degrees() == 0):
            base.errors = verify_sparsifier(g, base.subgraph, rng=rng, pairs=pairs,
                                            table_g=table_g)
            base_max = base.errors.max_error
        else:
            base_max = float("inf")
        trials.append({
            "trial": t,
            "sparsifier": res.to_dict(),
            "certificate": cert.to_dict(),
            "baseline_max_error": base_max,
            "baseline_edge_count": base.subgraph.num_records,
        })
    spars_max = [tr["sparsifier"]["errors"]["max_error"] for tr in trials]
    base_max_all = [tr["baseline_max_error"] for tr in trials]
    report = build_report(cfg, {
        "degree": d,
        "d_target": d_target,
        "edge_budget": edge_budget,
        "trials": trials,
        "aggregate": {
            "sparsifier_median_max_error": float(np.median(spars_max)),
            "baseline_median_max_error": float(np.median(base_max_all)),
            "separation": float(np.median(base_max_all)) > float(np.median(spars_max)),
        },
    })
    write_text(cfg.out, dumps(report))
    return 0 if all_hold else 1


_COMMANDS = {
    "generate": cmd_generate,
    "decompose": cmd_decompose,
    "sparsify": cmd_sparsify,
    "certify": cmd_certify,
    "resist": cmd_resist,
    "experiment": cmd_experiment,
}


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
