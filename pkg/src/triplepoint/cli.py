"""Command-line surface: reports, sweeps, and cross-engine checks.

Exit codes: 0 all pass, 1 expectation mismatch, 2 input error, 3 engine
invariant violation.  All JSON output has a fixed field order, so equal
inputs produce byte-identical output.
"""

from __future__ import annotations

import json
import sys

import click

from . import dualgraph as dg
from . import expectations as exp
from .errors import (
    ColengthBudgetError,
    GraphInvariantError,
    ParameterError,
    ParseError,
    SearchFailureError,
    ShapeError,
    TriplepointError,
)
from .graphcatalog import graph_catalog, quotient_sweep_tags
from .presentations import (
    instantiate,
    nearly_gorenstein,
    parse_tag,
    residue,
    ring_multiplicity,
    trace_ideal,
)
from .ulrich import (
    EngineInvariantError,
    classify_ulrich_set,
    gorenstein_quotient_experiment,
    next_candidate_rejected_by_trace,
    verify_rdp_list,
)

_INPUT_ERRORS = (ParseError, ParameterError, click.UsageError)
_ENGINE_ERRORS = (
    GraphInvariantError,
    EngineInvariantError,
    ColengthBudgetError,
    ShapeError,
    SearchFailureError,
)


def _emit(data, as_json, text_renderer):
    if as_json:
        click.echo(json.dumps(data, separators=(", ", ": ")))
    else:
        text_renderer(data)


def _run(fn):
    try:
        code = fn()
    except _INPUT_ERRORS as exc:
        click.echo(f"input error: {exc}", err=True)
        sys.exit(2)
    except _ENGINE_ERRORS as exc:
        click.echo(f"engine invariant violation: {exc}", err=True)
        sys.exit(3)
    except TriplepointError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(3)
    sys.exit(code)


@click.group()
def main():
    """Verification workbench for Ulrich ideals on rational surface
    singularities: exact ideal theory over Q(i) on one side, resolution
    graph combinatorics on the other.

    \b
    Tag grammar (ring catalog):
      A:l,m,n   B:m,n   C:m,n   D:n   F:n   H:n
      Gamma1 Gamma2 Gamma3   EX-5.2 EX-5.3
      RDP-A:n  RDP-D:n  RDP-E6 RDP-E7 RDP-E8
    Graph-only tags:
      cyclic:b1,...,bn   T22:b,b1,...,bn   G1:b .. G15:b
    """


@main.command("classify")
@click.option("--tag", required=True, help="catalog tag, e.g. A:1,2,3 or RDP-E7")
@click.option("--json", "as_json", is_flag=True)
@click.option(
    "--seed-reductions",
    type=click.Choice(["on", "off"]),
    default="on",
    show_default=True,
    help="try the published reduction pairs before searching",
)
def cmd_classify(tag, as_json, seed_reductions):
    """Certify the full Ulrich set of a catalog ring."""

    def work():
        ftag = parse_tag(tag)
        pres = instantiate(ftag)
        use_seeds = seed_reductions == "on"
        if pres.cm_type == 1:
            certs, nxt = verify_rdp_list(pres)
            expected = exp.ulrich_count_expected(ftag)
            ok = all(c.verdict == "ulrich" for c in certs) and len(certs) == expected
            if nxt is not None:
                ok = ok and nxt.verdict != "ulrich"
            data = {
                "tag": str(ftag),
                "ulrich": [c.to_json_dict() for c in certs],
                "next": nxt.to_json_dict() if nxt else None,
                "expectedCount": expected,
                "status": "pass" if ok else "fail",
            }
            _emit(data, as_json, _render_classify_rdp)
            return 0 if ok else 1
        tr = trace_ideal(pres)
        res = pres.quotient.colength(tr)
        ng = nearly_gorenstein(pres)
        certs = classify_ulrich_set(pres, use_seeds=use_seeds)
        rejected_ideal, rejected = next_candidate_rejected_by_trace(pres)
        expected_res = exp.residue_closed_form(ftag)
        ok = (
            res == expected_res
            and all(c.verdict == "ulrich" for c in certs)
            and len(certs) == res
            and rejected
        )
        data = {
            "tag": str(ftag),
            "trace": [str(g) for g in tr.groebner()],
            "residue": res,
            "expectedResidue": expected_res,
            "nearlyGorenstein": ng,
            "ulrich": [c.to_json_dict() for c in certs],
            "rejectedNext": {
                "ideal": [str(g) for g in rejected_ideal.gens],
                "rejectedByTraceContainment": rejected,
            },
            "status": "pass" if ok else "fail",
        }
        if str(ftag) == "EX-5.2":
            data["note"] = "non-rational singularity (geometric genus 1)"
        _emit(data, as_json, _render_classify)
        return 0 if ok else 1

    _run(work)


def _render_classify(d):
    click.echo(f"tag            : {d['tag']}")
    if "note" in d:
        click.echo(f"note           : {d['note']}")
    click.echo(f"trace ideal    : ({', '.join(d['trace'])})")
    click.echo(f"residue        : {d['residue']} (expected {d['expectedResidue']})")
    click.echo(f"nearly Gorenst.: {d['nearlyGorenstein']}")
    click.echo("ulrich ideals  :")
    for c in d["ulrich"]:
        red = ", ".join(c["reduction"]) if c["reduction"] else "-"
        click.echo(
            f"  ({', '.join(c['ideal'])})  verdict={c['verdict']}"
            f"  e0={c['e0']} mu={c['mu']} len={c['len']}  Q=({red})"
        )
    rn = d["rejectedNext"]
    click.echo(
        f"next candidate ({', '.join(rn['ideal'])}) rejected by trace"
        f" containment: {rn['rejectedByTraceContainment']}"
    )
    click.echo(f"status         : {d['status']}")


def _render_classify_rdp(d):
    click.echo(f"tag            : {d['tag']}")
    click.echo(f"expected count : {d['expectedCount']}")
    for c in d["ulrich"]:
        click.echo(f"  ({', '.join(c['ideal'])})  verdict={c['verdict']}")
    if d["next"]:
        c = d["next"]
        click.echo(
            f"  next ({', '.join(c['ideal'])})  verdict={c['verdict']}"
            f"  e0={c['e0']} mu={c['mu']} len={c['len']}"
        )
    click.echo(f"status         : {d['status']}")


@main.command("residue-table")
@click.option("--max-param", default=3, show_default=True, type=int)
@click.option("--json", "as_json", is_flag=True)
def cmd_residue_table(max_param, as_json):
    """Computed residues vs the closed forms over the parameter grid."""

    def work():
        if max_param > 6:
            raise ParameterError("--max-param must be <= 6 (desk scale)")
        rows = []
        failed = False
        for ftag in exp.grid_tags(max_param):
            expected = exp.residue_closed_form(ftag)
            try:
                computed = residue(instantiate(ftag))
                status = "pass" if computed == expected else "fail"
            except TriplepointError as err:
                computed = None
                status = f"error: {err}"
            if status != "pass":
                failed = True
            rows.append(
                {
                    "tag": str(ftag),
                    "computed": computed,
                    "expected": expected,
                    "status": status,
                }
            )
        data = {"rows": rows, "status": "fail" if failed else "pass"}
        _emit(data, as_json, _render_table)
        return 1 if failed else 0

    _run(work)


def _render_table(d):
    click.echo(f"{'tag':<14} {'computed':>8} {'expected':>8}  status")
    for r in d["rows"]:
        click.echo(
            f"{r['tag']:<14} {str(r['computed']):>8} {str(r['expected']):>8}  {r['status']}"
        )
    click.echo(f"overall: {d['status']}")


@main.command("quotient-sweep")
@click.option("--max-param", default=4, show_default=True, type=int, help="bound on all weights b")
@click.option("--json", "as_json", is_flag=True)
def cmd_quotient_sweep(max_param, as_json):
    """Chain counts over the quotient-singularity graph catalog.

    Multiplicity >= 4 must give the fundamental cycle only; multiplicity 3
    at most two cycles.  Multiplicity-2 graphs are reported without a
    bound: the double-point lists grow with the graph.
    """

    def work():
        if max_param > 5:
            raise ParameterError("--max-param must be <= 5 (desk scale)")
        rows = []
        failed = False
        for tag in quotient_sweep_tags(max_param):
            try:
                g = graph_catalog(tag)
            except GraphInvariantError:
                continue  # not a resolution graph at these weights
            mult = dg.graph_multiplicity(g)
            filt = dg.unique_ulrich_filter(g)
            enum = dg.enumerate_ulrich_chains(g)
            count = len(enum.chains)
            if filt and count != 1:
                raise EngineInvariantError(
                    f"filter says unique but enumeration found {count} on {tag}"
                )
            if mult >= 4:
                expected = "1"
                status = "pass" if count == 1 else "fail"
            elif mult == 3:
                expected = "<=2"
                status = "pass" if count <= 2 else "fail"
            else:
                expected = None
                status = "skip"
            if status == "fail":
                failed = True
            rows.append(
                {
                    "tag": tag,
                    "multiplicity": mult,
                    "filter": filt,
                    "chainCount": count,
                    "expected": expected,
                    "status": status,
                }
            )
        data = {"rows": rows, "status": "fail" if failed else "pass"}
        _emit(data, as_json, _render_sweep)
        return 1 if failed else 0

    _run(work)


def _render_sweep(d):
    click.echo(f"{'tag':<22} {'mult':>4} {'filter':>6} {'chains':>6} {'expected':>8}  status")
    for r in d["rows"]:
        click.echo(
            f"{r['tag']:<22} {r['multiplicity']:>4} {str(r['filter']):>6}"
            f" {r['chainCount']:>6} {str(r['expected']):>8}  {r['status']}"
        )
    click.echo(f"overall: {d['status']}")


@main.command("cross-check")
@click.option("--tag", required=True)
@click.option("--json", "as_json", is_flag=True)
def cmd_cross_check(tag, as_json):
    """Compare the algebra engine against the graph engine for one tag."""

    def work():
        ftag = parse_tag(tag)
        pres = instantiate(ftag)
        g = graph_catalog(ftag)
        Z0 = dg.fundamental_cycle(g)
        graph_side = {
            "e0": -dg.intersection_pairing(g, Z0, Z0),
            "mu": dg.cycle_mu(g, Z0),
            "chainCount": len(dg.enumerate_ulrich_chains(g).chains),
        }
        algebra_side = {
            "e0": ring_multiplicity(pres),
            "mu": pres.quotient.min_gens(pres.quotient.maximal_ideal()),
        }
        checks = [
            ("e0", algebra_side["e0"], graph_side["e0"]),
            ("mu", algebra_side["mu"], graph_side["mu"]),
        ]
        if pres.cm_type == 2:
            algebra_side["res"] = residue(pres)
            certs = classify_ulrich_set(pres)
            algebra_side["ulrichCount"] = sum(
                1 for c in certs if c.verdict == "ulrich"
            )
            checks.append(
                ("ulrichCount/chainCount", algebra_side["ulrichCount"], graph_side["chainCount"])
            )
            published = exp.published_trace_cycle(str(ftag))
            if published is not None:
                Z = g.cycle_from_json_dict(published)
                graph_side["traceCycleLength"] = dg.cycle_length(g, Z)
                checks.append(
                    ("res/traceCycleLength", algebra_side["res"], graph_side["traceCycleLength"])
                )
        mismatches = [
            {"field": f, "algebra": a, "graph": b} for f, a, b in checks if a != b
        ]
        data = {
            "tag": str(ftag),
            "algebra": algebra_side,
            "graph": graph_side,
            "mismatches": mismatches,
            "status": "pass" if not mismatches else "fail",
        }
        _emit(data, as_json, _render_cross)
        return 0 if not mismatches else 1

    _run(work)


def _render_cross(d):
    click.echo(f"tag     : {d['tag']}")
    click.echo(f"algebra : {d['algebra']}")
    click.echo(f"graph   : {d['graph']}")
    for m in d["mismatches"]:
        click.echo(f"MISMATCH {m['field']}: algebra={m['algebra']} graph={m['graph']}")
    click.echo(f"status  : {d['status']}")


def _load_graph(tag, file):
    if (tag is None) == (file is None):
        raise ParseError("give exactly one of --tag or --file")
    if tag is not None:
        return graph_catalog(tag)
    with open(file, "r", encoding="utf-8") as fh:
        return dg.DualGraph.from_json(fh.read())


def _cycle_of(g, text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid cycle JSON: {exc}") from exc
    return g.cycle_from_json_dict(data)


@main.command("graph")
@click.argument(
    "subcommand", type=click.Choice(["z0", "pa", "filter", "chains", "stats"])
)
@click.option("--tag", default=None, help="graph catalog tag, e.g. G10:2")
@click.option("--file", default=None, type=click.Path(exists=True), help="graph JSON file")
@click.option("--cycle", default=None, help="cycle as JSON, e.g. {\"E0\":2,...}")
@click.option("--max-steps", default=16, show_default=True, type=int)
def cmd_graph(subcommand, tag, file, cycle, max_steps):
    """Resolution-graph computations; always emits JSON."""

    def work():
        g = _load_graph(tag, file)
        if subcommand == "z0":
            out = g.cycle_to_json_dict(dg.fundamental_cycle(g))
        elif subcommand == "pa":
            Z = _cycle_of(g, cycle) if cycle else dg.fundamental_cycle(g)
            out = {"pa": dg.arithmetic_genus(g, Z)}
        elif subcommand == "filter":
            out = dg.unique_ulrich_filter(g)
        elif subcommand == "stats":
            if not cycle:
                raise ParseError("stats needs --cycle")
            out = dg.cycle_stats(g, _cycle_of(g, cycle))
        else:  # chains
            enum = dg.enumerate_ulrich_chains(g, max_steps=max_steps)
            out = {
                "fundamental": g.cycle_to_json_dict(enum.fundamental),
                "cycles": [g.cycle_to_json_dict(c) for c in enum.cycles],
                "count": len(enum.chains),
                "truncated": enum.truncated,
                "antinefPruned": enum.antinef_pruned,
            }
        click.echo(json.dumps(out, separators=(", ", ": ")))
        return 0

    def work_guard():
        try:
            return work()
        except ValueError as exc:
            raise GraphInvariantError(str(exc)) from exc

    _run(work_guard)


@main.command("rdp-verify")
@click.option("--tag", default=None, help="single RDP tag, e.g. RDP-D:6")
@click.option("--json", "as_json", is_flag=True)
def cmd_rdp_verify(tag, as_json):
    """Certify the double-point Ulrich lists (and next-pattern failures)."""

    def work():
        tags = [parse_tag(tag)] if tag else exp.rdp_grid()
        rows = []
        failed = False
        for ftag in tags:
            pres = instantiate(ftag)
            certs, nxt = verify_rdp_list(pres)
            expected = exp.ulrich_count_expected(ftag)
            ok = len(certs) == expected and all(c.verdict == "ulrich" for c in certs)
            if nxt is not None:
                ok = ok and nxt.verdict != "ulrich"
            if not ok:
                failed = True
            rows.append(
                {
                    "tag": str(ftag),
                    "count": len(certs),
                    "expected": expected,
                    "verdicts": [c.verdict for c in certs],
                    "next": nxt.verdict if nxt else None,
                    "status": "pass" if ok else "fail",
                }
            )
        data = {"rows": rows, "status": "fail" if failed else "pass"}
        _emit(data, as_json, _render_rdp)
        return 1 if failed else 0

    _run(work)


def _render_rdp(d):
    click.echo(f"{'tag':<10} {'count':>5} {'expected':>8} {'next':>20}  status")
    for r in d["rows"]:
        click.echo(
            f"{r['tag']:<10} {r['count']:>5} {r['expected']:>8}"
            f" {str(r['next']):>20}  {r['status']}"
        )
    click.echo(f"overall: {d['status']}")


@main.command("socle-experiment")
@click.option("--tag", default=None, help="single tag; default sweeps the grid")
@click.option("--max-param", default=3, show_default=True, type=int)
@click.option("--json", "as_json", is_flag=True)
def cmd_socle(tag, max_param, as_json):
    """Is the quotient by the trace ideal Gorenstein?  (Experiment: no
    expected values, output is informational.)"""

    def work():
        tags = [parse_tag(tag)] if tag else exp.grid_tags(max_param)
        rows = []
        for ftag in tags:
            pres = instantiate(ftag)
            if pres.cm_type != 2:
                continue
            rows.append(
                {
                    "tag": str(ftag),
                    "gorensteinQuotient": gorenstein_quotient_experiment(pres),
                }
            )
        data = {"rows": rows}
        _emit(data, as_json, _render_socle)
        return 0

    _run(work)


def _render_socle(d):
    for r in d["rows"]:
        click.echo(f"{r['tag']:<14} A/trace Gorenstein: {r['gorensteinQuotient']}")


if __name__ == "__main__":
    main()
