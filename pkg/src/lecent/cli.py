"""Command-line interface: ``lecent <subcommand> ...``.

Exit status is 0 on success, 2 on usage errors and 1 on data errors.
Relative ``--output`` paths are resolved against ``$LECENT_OUTPUT_DIR`` when set.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

import numpy as np

from . import econ
from .classic import CentralityError
from .export import render, score_table
from .graph import GraphError, florentine, read_edge_list, serialize_edge_list
from .lec import lec, plec_cumulative, plec_proportional, suggest_order
from .measures import BUNDLE, compute_measure
from .randnet import GenSpec, clustered_er, spawn_seeds
from .spectral import DecompositionError, eigenvectors_csv, spectrum_of, spectrum_rows
from .stats import SUMMARIES, batch_experiment, table_csv

log = logging.getLogger("lecent")

OUTPUT_DIR_ENV = "LECENT_OUTPUT_DIR"


class DataError(Exception):
    pass


def _out_path(path: str) -> Path:
    p = Path(path)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not p.is_absolute():
        p = Path(base) / p
    return p


def _emit(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
        return
    p = _out_path(output)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(text, encoding="utf-8")
    log.info("wrote %s", p)


def _load(path: str):
    return read_edge_list(path)


def _csv_list(text: str | None) -> list[str] | None:
    if text is None:
        return None
    return [t.strip() for t in text.split(",") if t.strip()]


def _scenario(args, g, s):
    """Merge ``--scenario`` JSON with explicit flags (flags win)."""
    raw = {}
    if args.scenario:
        raw = json.loads(Path(args.scenario).read_text(encoding="utf-8"))
    if getattr(args, "beta", None) is not None:
        raw["beta"] = args.beta
    if getattr(args, "beta_tilde", None) is not None:
        raw["beta_tilde"] = args.beta_tilde
    theta = getattr(args, "theta", None)
    if theta is not None:
        try:
            raw["theta"] = [float(t) for t in theta.split(",")]
        except ValueError:
            raw["theta"] = theta
    targets = _csv_list(getattr(args, "targets", None))
    if targets is not None:
        raw["targets"] = targets
    if "beta" not in raw:
        raise DataError("beta is required (--beta or scenario file)")
    return econ.EconScenario.from_json(json.dumps(raw), g, s)


# --- subcommands -------------------------------------------------------------

def cmd_spectrum(args) -> None:
    g = _load(args.input)
    s = spectrum_of(g)
    header = ["index", "eigenvalue", "cumulative_fraction"]
    _emit(render(header, spectrum_rows(s), {"n": g.n}, args.format), args.output)
    if args.vectors:
        _emit(eigenvectors_csv(s, g.labels), args.vectors)


def cmd_lec(args) -> None:
    g = _load(args.input)
    s = spectrum_of(g)
    if args.order is not None:
        sv = lec(s, args.order)
    elif args.pct is not None:
        sv = plec_proportional(s, args.pct)
    elif args.threshold is not None:
        sv = plec_cumulative(s, args.threshold)[1]
    else:
        raise DataError("one of --order, --pct, --threshold is required")
    _emit(score_table(g.labels, sv, args.format), args.output)


def cmd_centrality(args) -> None:
    measures = _csv_list(args.measures) or list(BUNDLE)
    rows = []
    for path in args.input:
        g = _load(path)
        s = spectrum_of(g)
        cols = []
        for m in measures:
            try:
                cols.append(compute_measure(m, g, s).scores)
            except CentralityError as exc:
                log.warning("%s: %s: %s", path, m, exc)
                cols.append(np.full(g.n, np.nan))
        graph_id = Path(path).stem
        for i, lab in enumerate(g.labels):
            rows.append([graph_id, lab] + [float(c[i]) for c in cols])
    meta = {"measures": measures, "decay": 0.8}
    _emit(render(["graph", "label"] + measures, rows, meta, args.format), args.output)


def cmd_order(args) -> None:
    g = _load(args.input)
    s = spectrum_of(g)
    choice = suggest_order(s, args.policy)
    rows = [[choice.policy, choice.order] + [choice.rationale[k] for k in sorted(choice.rationale)]]
    header = ["policy", "order"] + sorted(choice.rationale)
    _emit(render(header, rows, {"policy": args.policy}, args.format), args.output)


def cmd_gen(args) -> None:
    reps = args.reps
    seeds = [args.seed] if reps == 1 else spawn_seeds(args.seed, reps)
    if reps > 1 and (args.output is None or "{rep}" not in args.output):
        raise DataError("--reps > 1 needs an --output pattern containing {rep}")
    for rep, seed in enumerate(seeds):
        if args.model == "clustered":
            g = clustered_er(args.clusters, args.n, args.p, args.rewire, seed)
            spec = {"model": "clustered", "k": args.clusters, "n_per": args.n, "p_in": args.p,
                    "rewire": args.rewire, "seed": seed}
        else:
            spec = _genspec(args, args.n, seed)
            g = spec.generate()
            spec = json.loads(spec.to_json())
        header = f"# {json.dumps(spec, sort_keys=True)}\n"
        out = args.output.replace("{rep}", str(rep)) if args.output else None
        _emit(header + serialize_edge_list(g), out)


def _genspec(args, n: int, seed: int) -> GenSpec:
    if args.model == "ER":
        if args.avgdeg is not None:
            return GenSpec.er_avgdeg(n, args.avgdeg, seed)
        if args.p is None:
            raise DataError("ER needs --p or --avgdeg")
        return GenSpec("ER", n, args.p, seed)
    if args.model == "BA":
        if args.m is None:
            raise DataError("BA needs --m")
        return GenSpec("BA", n, args.m, seed)
    raise DataError(f"unsupported model {args.model!r}")


def cmd_equilibrium(args) -> None:
    g = _load(args.input)
    s = spectrum_of(g)
    sc = _scenario(args, g, s)
    a = econ.equilibrium(g, sc.beta, sc.theta)
    viol = econ.best_response_check(g, sc.beta, a, sc.theta)
    rows = [[lab, float(t), float(x)] for lab, t, x in zip(g.labels, sc.theta, a)]
    meta = {"beta": sc.beta, "best_response_violation": viol, "loss": float(a @ a)}
    _emit(render(["label", "theta", "action"], rows, meta, args.format), args.output)


def cmd_target(args) -> None:
    g = _load(args.input)
    s = spectrum_of(g)
    sc = _scenario(args, g, s)
    targets = sc.feasible_targets if sc.feasible_targets is not None else tuple(range(g.n))
    phi = econ.targeting_scores(s, sc.beta).scores
    best = econ.optimal_target(g, sc.beta, targets, s)
    rows = []
    for i in targets:
        direct = econ.social_loss_after_target(g, sc.beta, i, method="direct")
        rows.append([g.labels[i], float(phi[i]), float(g.n - 1 - phi[i]), direct])
    meta = {"beta": sc.beta, "optimal_target": g.labels[best]}
    _emit(render(["label", "phi", "loss", "loss_direct"], rows, meta, args.format), args.output)


def cmd_disclose(args) -> None:
    g = _load(args.input)
    s = spectrum_of(g)
    sc = _scenario(args, g, s)
    chosen = set(econ.disclosure_set(s, sc.beta, sc.beta_tilde))
    lams = np.concatenate([[0.0], s.values[:-1]])
    rows = []
    for k, lam in enumerate(lams):
        value = 1.0 / (2 * g.n) + sc.beta * lam / g.n
        rows.append([k, float(lam), value, int(k in chosen)])
    meta = {"beta": sc.beta, "beta_tilde": sc.beta_tilde, "n_disclosed": len(chosen)}
    _emit(render(["statistic", "eigenvalue", "criterion", "disclosed"], rows, meta, args.format), args.output)


def cmd_experiment(args) -> None:
    seeds = spawn_seeds(args.seed, args.reps)
    specs = [_genspec(args, n, seed) for n in args.n for seed in seeds]
    measures = _csv_list(args.measures) or ["plec:20", "plec_cum:0.5", "eigenvector"]
    summaries = _csv_list(args.summaries) or list(SUMMARIES)
    rows = batch_experiment(specs, measures, summaries, workers=args.workers)
    if args.format == "json":
        header = ["spec_id", "model", "n", "param", "seed", "measure", "statistic", "key", "value"]
        _emit(render(header, rows, {}, "json"), args.output)
    else:
        _emit(table_csv(rows), args.output)


FLORENTINE_ORDERS = (0, 1, 3, 6)
FLORENTINE_CLASSIC = ("degree", "betweenness", "closeness", "eigenvector", "katz", "bonacich_power")


def cmd_florentine(args) -> None:
    g = florentine()
    s = spectrum_of(g)
    cols, header = [], ["label"]
    for r in FLORENTINE_ORDERS:
        cols.append(lec(s, r).scores)
        header.append(f"lec{r}")
    for m in FLORENTINE_CLASSIC:
        x = compute_measure(m, g, s).scores
        if args.relative:
            x = x / x[g.index("Medici")]
        cols.append(x)
        header.append(m)
    rows = [[lab] + [float(c[i]) for c in cols] for i, lab in enumerate(g.labels)]
    meta = {"network": "florentine", "orders": list(FLORENTINE_ORDERS), "relative_to_medici": args.relative}
    _emit(render(header, rows, meta, args.format), args.output)


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lecent", description="Laplacian eigenvector centrality toolkit")
    p.add_argument("-v", "--verbose", action="count", default=0)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, multi_input=False, needs_input=True):
        if needs_input:
            if multi_input:
                sp.add_argument("--input", nargs="+", required=True)
            else:
                sp.add_argument("--input", required=True)
        sp.add_argument("--output", default=None)
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        return sp

    sp = common(sub.add_parser("spectrum", help="Laplacian eigenvalues and cumulative fractions"))
    sp.add_argument("--vectors", default=None, help="also write the eigenvector matrix here")
    sp.set_defaults(func=cmd_spectrum)

    sp = common(sub.add_parser("lec", help="LEC scores"))
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--order", type=int)
    grp.add_argument("--pct", type=float)
    grp.add_argument("--threshold", type=float)
    sp.set_defaults(func=cmd_lec)

    sp = common(sub.add_parser("centrality", help="wide table of measures over one or more graphs"),
                multi_input=True)
    sp.add_argument("--measures", default=None, help="comma-separated measure names")
    sp.set_defaults(func=cmd_centrality)

    sp = common(sub.add_parser("order", help="suggest an LEC order"))
    sp.add_argument("--policy", default="cumulative:0.5")
    sp.set_defaults(func=cmd_order)

    sp = sub.add_parser("gen", help="write random graphs as edge lists")
    sp.add_argument("--model", choices=("ER", "BA", "clustered"), required=True)
    sp.add_argument("--n", type=int, required=True, help="nodes (per cluster for clustered)")
    sp.add_argument("--p", type=float)
    sp.add_argument("--avgdeg", type=float)
    sp.add_argument("--m", type=int)
    sp.add_argument("--clusters", type=int, default=5)
    sp.add_argument("--rewire", type=float, default=0.05)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--reps", type=int, default=1)
    sp.add_argument("--output", default=None)
    sp.set_defaults(func=cmd_gen)

    for name, func, help_ in (("equilibrium", cmd_equilibrium, "equilibrium actions"),
                              ("target", cmd_target, "single-agent targeting"),
                              ("disclose", cmd_disclose, "public disclosure set")):
        sp = common(sub.add_parser(name, help=help_))
        sp.add_argument("--scenario", default=None, help="JSON scenario file")
        sp.add_argument("--beta", type=float)
        sp.add_argument("--beta-tilde", dest="beta_tilde", type=float)
        sp.add_argument("--theta", default=None,
                        help="comma list, uniform, eigvec:k or unit:<label>")
        sp.add_argument("--targets", default=None, help="comma-separated node labels")
        sp.set_defaults(func=func)

    sp = common(sub.add_parser("experiment", help="batch random-graph experiment"), needs_input=False)
    sp.add_argument("--model", choices=("ER", "BA"), required=True)
    sp.add_argument("--n", type=int, nargs="+", required=True)
    sp.add_argument("--p", type=float)
    sp.add_argument("--avgdeg", type=float)
    sp.add_argument("--m", type=int)
    sp.add_argument("--reps", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--measures", default=None)
    sp.add_argument("--summaries", default=None)
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_experiment)

    sp = common(sub.add_parser("florentine-demo", help="LEC and classical scores on the Florentine network"),
                needs_input=False)
    sp.add_argument("--relative", action="store_true", help="scale classical measures to Medici = 1")
    sp.set_defaults(func=cmd_florentine)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s: %(message)s")
    try:
        args.func(args)
    except (DataError, GraphError, DecompositionError, CentralityError, ValueError, KeyError,
            OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
