"""Command-line front end.

One executable with subcommands for bounds, connectivity, river
analysis, gate classification, permutation synthesis, linkability,
the exhaustive census, synthesis verification, and the HTTP service.

Exit codes: 0 success or affirmative verdict, 1 negative verdict
(NOT LINKABLE, GAP, replay mismatch), 2 usage or parse error.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from . import (
    bound,
    classifier,
    connectivity,
    formats,
    gf2,
    linkability,
    oracle,
    permsynth,
    rivers,
)

MIDDLE_TERM_OPTION = click.option(
    "--middle-term",
    type=click.Choice(bound.MIDDLE_TERMS),
    default=bound.DEFAULT_MIDDLE_TERM,
    show_default=True,
    help="Which c_perfect feeds the middle bound: the row form, the "
    "transpose-aware min (strongest), or max (matches the bundled "
    "5-qubit reference census).",
)


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        _fail(str(exc))


def _read_matrix(path: str) -> gf2.BinMatrix:
    try:
        return formats.parse_matrix(_read_text(path))
    except (formats.ParseError, gf2.Gf2Error) as exc:
        _fail(f"{path}: {exc}")


def _read_synthesis(path: str) -> gf2.Synthesis:
    try:
        return formats.parse_synthesis(_read_text(path))
    except (formats.ParseError, gf2.Gf2Error) as exc:
        _fail(f"{path}: {exc}")


@click.group()
def main() -> None:
    """Lower bounds on CNOT-gate counts of linear reversible circuits."""


@main.command("bound")
@click.argument("matrix_file")
@click.option("--json", "as_json", is_flag=True, help="Emit the report as JSON.")
@click.option(
    "--strengthen",
    is_flag=True,
    help="Also maximize over M, M^T, M^-1, M^-T with the strongest middle term.",
)
@MIDDLE_TERM_OPTION
def bound_cmd(matrix_file: str, as_json: bool, strengthen: bool, middle_term: str) -> None:
    """Print the link/middle/cut lower bound report for a matrix."""
    m = _read_matrix(matrix_file)
    try:
        report = bound.lmc_bound(m, middle_term)
    except gf2.SingularMatrixError as exc:
        _fail(f"{matrix_file}: {exc}")
    fields = {
        "n": report.n,
        "v": report.v,
        "e": report.e,
        "ell": report.ell,
        "m": report.m,
        "c": report.c,
        "z": report.z,
        "z_inv": report.z_inv,
        "cperfect": report.cperfect,
        "cperfect_rational": str(report.cperfect_rational),
        "middle_term": report.middle_term,
        "bound": report.bound,
        "depth_lb": report.depth_lower_bound(),
    }
    if strengthen:
        fields["strengthened_bound"] = bound.strengthened_bound(m)
    if as_json:
        click.echo(json.dumps(fields, sort_keys=True))
    else:
        width = max(len(k) for k in fields)
        for key, value in fields.items():
            click.echo(f"{key:<{width}}  {value}")


def _partition_text(groups: list[list[str]]) -> str:
    return " / ".join(",".join(group) for group in groups)


@main.command("connectivity")
@click.argument("matrix_file")
def connectivity_cmd(matrix_file: str) -> None:
    """Print vertex/edge component counts and partitions."""
    m = _read_matrix(matrix_file)
    vparts = connectivity.vertex_components(m)
    eparts = connectivity.edge_components(m)
    click.echo(f"v={vparts.component_count} e={eparts.component_count}")
    vgroups = [[str(x + 1) for x in g] for g in vparts.groups()]
    click.echo(f"vertex components: {_partition_text(vgroups)}")
    egroups = [
        [f"r{x + 1}" if x < m.n else f"c{x - m.n + 1}" for x in g]
        for g in eparts.groups()
    ]
    click.echo(f"edge components: {_partition_text(egroups)}")


@main.command("cperfect")
@click.argument("matrix_file")
def cperfect_cmd(matrix_file: str) -> None:
    """Print M', Emp, Dup, c_perfect, and the middle-gate bound."""
    m = _read_matrix(matrix_file)
    try:
        report = rivers.cperfect(m)
    except gf2.SingularMatrixError as exc:
        _fail(f"{matrix_file}: {exc}")
    click.echo("mprime:")
    for line in formats.write_matrix(report.mprime).splitlines()[1:]:
        click.echo(f"  {line}")
    click.echo(f"emp: {report.emp}")
    click.echo(f"dup: {report.dup}")
    click.echo(f"cperfect: {report.cperfect_rational} (floored: {report.cperfect})")
    click.echo(f"middle_lower_bound: {report.middle_lower_bound}")
    if rivers.glitch_detect(m):
        click.echo("note: M' = 0 on a non-identity matrix; the middle bound is vacuous")


@main.command("rivers")
@click.argument("matrix_file")
def rivers_cmd(matrix_file: str) -> None:
    """List the rivers of a matrix in one-line notation (n <= 8)."""
    m = _read_matrix(matrix_file)
    if m.n > rivers.ORACLE_MAX_DIM:
        _fail(f"river enumeration supports n <= {rivers.ORACLE_MAX_DIM}, got {m.n}")
    names = sorted(rivers.enumerate_rivers(m).one_line_strings())
    click.echo(f"count: {len(names)}")
    for name in names:
        click.echo(name)


@main.command("classify")
@click.argument("synthesis_file")
def classify_cmd(synthesis_file: str) -> None:
    """Classify each gate of a synthesis as Link, Middle, or Cut."""
    s = _read_synthesis(synthesis_file)
    cs = classifier.classify_synthesis(s)
    click.echo(f"pattern: {cs.pattern}")
    counts = cs.counts
    click.echo(
        "counts: "
        + " ".join(f"{cls.value}={counts[cls]}" for cls in classifier.GateClass)
    )
    for cls in (
        classifier.GateClass.LINK,
        classifier.GateClass.MIDDLE,
        classifier.GateClass.CUT,
    ):
        graph = classifier.gate_graph(cs, cls)
        shape = "none"
        if graph.is_star:
            shape = "star"
        elif graph.is_path:
            shape = "path"
        elif graph.is_spanning_tree:
            shape = "spanning tree"
        click.echo(
            f"{cls.value}: edges={len(graph.edges)} "
            f"spanning_tree={'yes' if graph.is_spanning_tree else 'no'} shape={shape}"
        )


@main.command("synth-perm")
@click.argument("cycles")
@click.option(
    "--construction",
    type=click.Choice([c.value for c in permsynth.ConstructionId]),
    default=permsynth.ConstructionId.STAR_STAR_STAR.value,
    show_default=True,
    help="Which of the five cycle constructions to use.",
)
@click.option("--n", "n_override", type=int, default=None, help="Total qubit count.")
@click.option("--out", "out_file", default=None, help="Write the synthesis here.")
def synth_perm_cmd(cycles: str, construction: str, n_override: int | None, out_file: str | None) -> None:
    """Synthesize a permutation given in cycle notation, optimally."""
    try:
        sigma = permsynth.parse_cycle_notation(cycles, n_override)
    except ValueError as exc:
        _fail(str(exc))
    cid = permsynth.ConstructionId(construction)
    s = permsynth.synth_permutation(sigma, cid)
    cs = classifier.classify_synthesis(s)
    if cs.final_matrix != sigma.matrix():
        raise AssertionError("synthesis replay mismatch")  # pragma: no cover
    counts = cs.counts
    click.echo(f"gates: {len(s.gates)}")
    click.echo(
        "counts: "
        + " ".join(f"{cls.value}={counts[cls]}" for cls in classifier.GateClass)
    )
    click.echo(f"pattern: {cs.pattern}")
    text = formats.write_synthesis(s)
    if out_file is None:
        click.echo(text, nl=False)
    else:
        Path(out_file).write_text(text)
        click.echo(f"wrote {out_file}")


@main.command("linkable")
@click.argument("matrix_file")
def linkable_cmd(matrix_file: str) -> None:
    """Decide whether s(M) = n - 1; print a witness or the refusal."""
    m = _read_matrix(matrix_file)
    try:
        result = linkability.decide_linkable(m)
    except (linkability.LinkabilityError, gf2.Gf2Error) as exc:
        _fail(f"{matrix_file}: {exc}")
    if result.linkable:
        click.echo("LINKABLE")
        click.echo(formats.write_synthesis(result.witness), nl=False)
        sys.exit(0)
    click.echo(f"NOT LINKABLE ({result.reason.value})")
    sys.exit(1)


def _census_table(n: int, cache: str | None) -> oracle.SizeTable:
    path = None
    if cache is not None:
        path = Path(cache)
    else:
        env_dir = os.environ.get("LMC_CACHE_DIR")
        if env_dir:
            path = Path(env_dir) / f"sizes_n{n}.lmc"
    if path is not None and path.exists():
        table = oracle.load_cache(path)
        if table.n != n:
            _fail(f"cache {path} holds an n={table.n} table, expected n={n}")
        return table
    table = oracle.get_size_table(n)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        oracle.save_cache(table, path)
    return table


@main.command("census")
@click.option("--n", "n", type=click.IntRange(1, oracle.MAX_CENSUS_DIM), required=True)
@click.option("--out", "out_dir", default=".", show_default=True)
@click.option("--cache", default=None, help="Size-table cache file (read or written).")
@click.option("--threads", type=int, default=None, help="Worker threads for the bound pass.")
@MIDDLE_TERM_OPTION
@click.option(
    "--no-floor",
    is_flag=True,
    help="Keep c_perfect rational and take the ceiling of the middle "
    "bound instead of flooring c_perfect; the two roundings provably "
    "coincide, so the output is identical.",
)
@click.option("--timings", is_flag=True, help="Also print build times.")
def census_cmd(
    n: int,
    out_dir: str,
    cache: str | None,
    threads: int | None,
    middle_term: str,
    no_floor: bool,
    timings: bool,
) -> None:
    """Run the exhaustive size census and write its report files."""
    if threads is not None:
        import numba

        numba.set_num_threads(threads)
    table = _census_table(n, cache)
    paths = oracle.write_census_reports(n, out_dir, middle_term, table=table)
    click.echo(f"total: {table.reachable_count}")
    click.echo(f"middle_term: {middle_term}")
    if no_floor:
        click.echo("rounding: ceil(n - c_perfect) (identical to the floored default)")
    for kind in sorted(paths):
        click.echo(f"{kind}: {paths[kind]}")
    if timings:
        click.echo(f"bfs_seconds: {table.build_seconds:.3f}")


@main.command("verify")
@click.argument("matrix_file")
@click.argument("synthesis_file")
@MIDDLE_TERM_OPTION
def verify_cmd(matrix_file: str, synthesis_file: str, middle_term: str) -> None:
    """Replay a synthesis against a matrix and judge optimality."""
    m = _read_matrix(matrix_file)
    s = _read_synthesis(synthesis_file)
    if s.n != m.n:
        _fail(f"dimension mismatch: matrix n={m.n}, synthesis n={s.n}")
    replayed = s.replay()
    match = replayed == m
    report = bound.lmc_bound(m, middle_term)
    click.echo(f"match: {'yes' if match else 'no'}")
    click.echo(f"gates: {len(s.gates)}")
    click.echo(f"bound: {report.bound}")
    if not match:
        click.echo("verdict: MISMATCH")
        sys.exit(1)
    gap = len(s.gates) - report.bound
    if gap == 0:
        click.echo("verdict: OPTIMAL")
        sys.exit(0)
    click.echo(f"verdict: GAP {gap}")
    sys.exit(1)


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve_cmd(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":  # pragma: no cover
    main()
