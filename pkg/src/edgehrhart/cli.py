"""Command-line entry point: ``edgehrhart <subcommand> GRAPH [options]``.

Exit codes: 0 success, 1 bad input, 2 resource cap exceeded, 3 internal
assertion (a pipeline result failed a self-check).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .analysis import (ehrhart_roots_summary, polygon_tree_profile, root_report,
                       verify_first_factoring, verify_second_factoring,
                       check_second_factoring_hypotheses)
from .errors import EdgehrhartError, GraphError, HypothesisViolated, InvalidParameter, \
    ResourceLimit
from .graphcore import Graph, dimension, find_separating_faces, is_bipartite, parse_graph
from .groebner import DEFAULT_PAIR_CAP
from .oracle import DEFAULT_CANDIDATE_CAP, count_lp, count_monoid
from .series import DEFAULT_LCM_CAP, PipelineConfig, run_pipeline
from .walks import DEFAULT_CYCLE_CAP, DEFAULT_WALK_CAP, enumerate_simple_cycles, \
    find_exceptional_pairs

SUBCOMMANDS = ("series", "poly", "ideal", "verify", "factor", "roots", "check-occ")

EXIT_OK, EXIT_USER, EXIT_LIMIT, EXIT_INTERNAL = 0, 1, 2, 3


@dataclass
class RunConfig:
    subcommand: str
    input: str
    order: str = "lex"
    fmt: str = "text"
    cycle_cap: int = DEFAULT_CYCLE_CAP
    walk_cap: int = DEFAULT_WALK_CAP
    pair_cap: int = DEFAULT_PAIR_CAP
    lcm_cap: int = DEFAULT_LCM_CAP
    lp_cap: int = DEFAULT_CANDIDATE_CAP
    max_dilation: int = 4
    groebner: bool = False
    face: int | None = None

    def validate(self) -> None:
        if self.subcommand not in SUBCOMMANDS:
            raise InvalidParameter(f"unknown subcommand {self.subcommand!r}")
        for name in ("cycle_cap", "walk_cap", "pair_cap", "lcm_cap", "lp_cap"):
            if getattr(self, name) <= 0:
                raise InvalidParameter(f"{name.replace('_', '-')} must be positive")
        if self.max_dilation < 0:
            raise InvalidParameter("max-dilation must be non-negative")

    def pipeline(self) -> PipelineConfig:
        return PipelineConfig(self.order, self.cycle_cap, self.walk_cap, self.pair_cap,
                              self.lcm_cap)


class _Stage:
    """Remembers which stage is running so errors can name it."""

    def __init__(self):
        self.name = "startup"


def _frac(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _graph_dict(g: Graph) -> dict:
    return {"vertices": list(g.vertices), "edges": [f"{a} {b}" for a, b in g.labelled_edges()]}


# --- subcommands ------------------------------------------------------------
# Each returns (text lines, json payload, exit code).

def _cmd_series(g, cfg, stage):
    stage.name = "pipeline"
    res = run_pipeline(g, cfg.pipeline())
    s = res.series
    payload = {"series": str(s), "numerator": list(s.numerator),
               "denominator_power": s.denominator_power, "dimension": dimension(g),
               "theta_count": res.ring.n_theta}
    return [str(s)], payload, EXIT_OK


def _cmd_poly(g, cfg, stage):
    stage.name = "pipeline"
    res = run_pipeline(g, cfg.pipeline())
    p = res.polynomial
    values = [p(m) for m in range(5)]
    lines = [f"series: {res.series}",
             f"i(m) = {p.hstar_form()}",
             f"i(m) = {p.monomial_form()}",
             "i(0..4) = " + ", ".join(map(str, values))]
    payload = {"series": str(res.series), "hstar": list(p.hstar), "dimension": p.dim,
               "hstar_form": p.hstar_form(), "monomial_form": p.monomial_form(),
               "coefficients": [_frac(c) for c in p.coefficients()], "values": values}
    return lines, payload, EXIT_OK


def _cmd_ideal(g, cfg, stage):
    stage.name = "generators"
    res = run_pipeline(g, cfg.pipeline())
    ring = res.ring
    lines = ["variables: " + ", ".join(v.name for v in ring.variables)]
    fams = {}
    for fam, items in res.generators.items():
        fams[fam] = [ring.format_binomial(b) for b in items]
        if items:
            lines.append(f"[{fam}] {len(items)}")
            lines += [f"  {s}" for s in fams[fam]]
    payload = {"variables": [{"name": v.name, "degree": v.psi_degree} for v in ring.variables],
               "generators": fams}
    if cfg.groebner:
        stage.name = "groebner"
        basis = [ring.format_binomial(b) for b in res.basis.elements]
        initial = [ring.format(m) for m in res.initial]
        lines.append(f"groebner basis ({cfg.order}): {len(basis)}")
        lines += [f"  {s}" for s in basis]
        lines.append("initial monomials: " + ", ".join(initial))
        payload["groebner_basis"] = basis
        payload["initial_monomials"] = initial
        payload["order"] = cfg.order
    return lines, payload, EXIT_OK


def _cmd_verify(g, cfg, stage):
    stage.name = "pipeline"
    p = run_pipeline(g, cfg.pipeline()).polynomial
    rows = []
    for m in range(cfg.max_dilation + 1):
        stage.name = "oracle"
        lp = count_lp(g, m, cap=cfg.lp_cap).count
        mono = count_monoid(g, m, cap=cfg.lp_cap).count
        val = p(m)
        rows.append({"m": m, "pipeline": val, "lp": lp, "monoid": mono,
                     "match": val == lp == mono})
    ok = all(r["match"] for r in rows)
    lines = [f"{'m':>3} {'pipeline':>12} {'lp':>12} {'monoid':>12}  match"]
    for r in rows:
        lines.append(f"{r['m']:>3} {r['pipeline']:>12} {r['lp']:>12} {r['monoid']:>12}  "
                     f"{'yes' if r['match'] else 'NO'}")
    lines.append("all counts agree" if ok else "MISMATCH between pipeline and oracle")
    return lines, {"rows": rows, "all_match": ok}, EXIT_OK if ok else EXIT_INTERNAL


def _cmd_factor(g, cfg, stage):
    stage.name = "first factoring"
    first = verify_first_factoring(g, cfg.pipeline())
    lines = [f"series: {first.full}", "first factoring:"]
    lines += [f"  part {' '.join(a + '-' + b for a, b in p.edges)}: {p.series}"
              for p in first.parts]
    lines.append(f"  product: {first.predicted}  equal: {'yes' if first.equal else 'NO'}")
    payload = {"series": str(first.full), "first": first.to_dict(), "second": []}
    ok = first.equal
    stage.name = "second factoring"
    splits = find_separating_faces(g)
    if cfg.face is not None:
        splits = [s for s in splits if s.shared_edge == cfg.face]
        if not splits:
            raise InvalidParameter(f"edge {cfg.face} is not a separating face")
    for split in splits:
        a, b = g.labelled_edges()[split.shared_edge]
        try:
            check_second_factoring_hypotheses(g, split)
        except HypothesisViolated as exc:
            if cfg.face is not None:
                raise
            lines.append(f"second factoring at e_{split.shared_edge} ({a}-{b}): skipped, {exc}")
            payload["second"].append({"shared_edge": split.shared_edge, "skipped": str(exc)})
            continue
        rep = verify_second_factoring(g, split, cfg.pipeline())
        ok = ok and rep.equal
        lines.append(f"second factoring at e_{split.shared_edge} ({a}-{b}): "
                     f"{rep.parts[0].series} * ({rep.parts[1].series} * (1-t)) = "
                     f"{rep.predicted}  equal: {'yes' if rep.equal else 'NO'}")
        d = rep.to_dict()
        d["shared_edge"] = split.shared_edge
        payload["second"].append(d)
    payload["all_equal"] = ok
    return lines, payload, EXIT_OK if ok else EXIT_INTERNAL


def _fmt_complex(z: complex) -> str:
    re_, im = round(z.real, 12) + 0.0, round(z.imag, 12) + 0.0
    if im == 0:
        return f"{re_:.12g}"
    return f"{re_:.12g}{'+' if im > 0 else '-'}{abs(im):.12g}i"


def _cmd_roots(g, cfg, stage):
    stage.name = "pipeline"
    p = run_pipeline(g, cfg.pipeline()).polynomial
    stage.name = "roots"
    profile = polygon_tree_profile(g)
    if profile is not None and profile.bipartite:
        rep = root_report(p, profile)
        lines = [f"bipartite polygon tree: e={profile.e}, f2n="
                 + ", ".join(f"{2 * n}:{c}" for n, c in sorted(profile.f2n.items())),
                 "integer roots: " + ", ".join(map(str, rep.integer_roots)),
                 f"critical line: Re = {rep.critical_line:g}",
                 "roots: " + ", ".join(_fmt_complex(z) for z in rep.roots),
                 f"max deviation: {rep.max_deviation:.3e}",
                 f"strip -D <= Re <= D-1: {'yes' if rep.in_strip else 'NO'}",
                 f"claim holds: {'yes' if rep.ok else 'NO'}"]
        payload = {"polygon_tree": profile.to_dict(), **rep.to_dict()}
        return lines, payload, EXIT_OK
    roots = ehrhart_roots_summary(p)
    lines = ["not a bipartite polygon tree: roots reported only",
             "roots: " + ", ".join(_fmt_complex(z) for z in roots)]
    payload = {"polygon_tree": profile.to_dict() if profile else None,
               "roots": [[z.real, z.imag] for z in roots]}
    return lines, payload, EXIT_OK


def _cmd_check_occ(g, cfg, stage):
    stage.name = "cycles"
    cycles = enumerate_simple_cycles(g, cap=cfg.cycle_cap)
    pairs = find_exceptional_pairs(g, cycles)
    n = len(pairs)
    word = "pair" if n == 1 else "pairs"
    status = "satisfied" if n == 0 else "NOT satisfied"
    lines = [f"odd cycle condition: {status}; {n} exceptional {word}"]
    pair_list = []
    for p in pairs:
        i, j = p.cycle_indices
        ci = [g.vertices[v] for v in cycles[i].vertices]
        cj = [g.vertices[v] for v in cycles[j].vertices]
        pair_list.append({"cycles": [i, j], "first": ci, "second": cj})
    payload = {"satisfied": n == 0, "exceptional_pairs": pair_list,
               "bipartite": is_bipartite(g)[0]}
    return lines, payload, EXIT_OK


_HANDLERS = {"series": _cmd_series, "poly": _cmd_poly, "ideal": _cmd_ideal,
             "verify": _cmd_verify, "factor": _cmd_factor, "roots": _cmd_roots,
             "check-occ": _cmd_check_occ}


def run(cfg: RunConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    stage = _Stage()
    try:
        cfg.validate()
        stage.name = "read"
        with open(cfg.input, encoding="utf-8") as fh:
            text = fh.read()
        stage.name = "parse"
        g = parse_graph(text)
        lines, payload, code = _HANDLERS[cfg.subcommand](g, cfg, stage)
    except ResourceLimit as exc:
        print(f"error [{stage.name}]: resource limit: {exc}", file=err)
        return EXIT_LIMIT
    except (GraphError, InvalidParameter, HypothesisViolated, OSError) as exc:
        print(f"error [{stage.name}]: {exc}", file=err)
        return EXIT_USER
    except (AssertionError, ArithmeticError, EdgehrhartError) as exc:
        print(f"internal error [{stage.name}]: {exc}", file=err)
        return EXIT_INTERNAL
    if cfg.fmt == "json":
        doc = {"command": cfg.subcommand, "input": cfg.input, "graph": _graph_dict(g),
               "order": cfg.order, "result": payload, "exit_code": code}
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(lines) + "\n")
    return code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("graph", help="edge-list file: one 'u v' pair per line, '#' comments")
    common.add_argument("--order", choices=("lex", "grevlex"), default="lex",
                        help="term order for the Groebner basis (default: lex, theta first)")
    common.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    common.add_argument("--cycle-cap", type=int, default=DEFAULT_CYCLE_CAP)
    common.add_argument("--walk-cap", type=int, default=DEFAULT_WALK_CAP)
    common.add_argument("--pair-cap", type=int, default=DEFAULT_PAIR_CAP,
                        help="maximum S-pairs processed by Buchberger")
    common.add_argument("--lcm-cap", type=int, default=DEFAULT_LCM_CAP,
                        help="maximum distinct lcms in the Moebius sum")
    common.add_argument("--lp-cap", type=int, default=DEFAULT_CANDIDATE_CAP,
                        help="maximum candidate points for the lattice-point oracle")

    parser = argparse.ArgumentParser(
        prog="edgehrhart",
        description="Ehrhart series and polynomials of edge polytopes of simple graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    sub.add_parser("series", parents=[common], help="Ehrhart series h*(t)/(1-t)^(D+1)")
    sub.add_parser("poly", parents=[common], help="Ehrhart polynomial in two forms")
    p = sub.add_parser("ideal", parents=[common], help="hyperedge ideal generators")
    p.add_argument("--groebner", action="store_true", help="also print the reduced basis")
    p = sub.add_parser("verify", parents=[common], help="compare with lattice-point counts")
    p.add_argument("--max-dilation", type=int, default=4)
    p = sub.add_parser("factor", parents=[common], help="check both factoring theorems")
    p.add_argument("--face", type=int, default=None,
                   help="only the separating face with this edge id")
    sub.add_parser("roots", parents=[common], help="root locations of the Ehrhart polynomial")
    sub.add_parser("check-occ", parents=[common], help="odd cycle condition")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(args.subcommand, args.graph, args.order, args.fmt, args.cycle_cap,
                    args.walk_cap, args.pair_cap, args.lcm_cap, args.lp_cap,
                    getattr(args, "max_dilation", 4), getattr(args, "groebner", False),
                    getattr(args, "face", None))
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
