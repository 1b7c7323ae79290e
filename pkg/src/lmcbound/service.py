"""HTTP service exposing the core operations.

Matrices travel as lists of 0/1 row strings ("rows" fields), syntheses
as lists of 1-indexed [control, target] pairs.  Every endpoint is a
POST wrapping one pure library call; the census endpoint is limited to
the small dimensions the exhaustive tables support.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import bound, classifier, formats, gf2, linkability, oracle, permsynth, rivers
from .gf2 import BinMatrix, CnotGate, Synthesis

app = FastAPI(
    title="lmcbound",
    description="Lower bounds on CNOT-gate counts of linear reversible circuits.",
)


class MatrixIn(BaseModel):
    rows: list[str] = Field(description="n binary strings of length n, row-major")


class SynthesisIn(BaseModel):
    n: int
    gates: list[tuple[int, int]] = Field(description="1-indexed (control, target) pairs")


class BoundRequest(MatrixIn):
    middle_term: str = bound.DEFAULT_MIDDLE_TERM
    strengthen: bool = False


class BoundResponse(BaseModel):
    n: int
    v: int
    e: int
    ell: int
    m: int
    c: int
    z: int
    z_inv: int
    cperfect: int
    cperfect_rational: str
    middle_term: str
    bound: int
    depth_lb: int
    strengthened_bound: int | None = None


class ConnectivityResponse(BaseModel):
    v: int
    e: int
    vertex_groups: list[list[int]]
    edge_groups: list[list[str]]


class CperfectResponse(BaseModel):
    mprime: list[str]
    emp: int
    dup: int
    cperfect_rational: str
    cperfect: int
    middle_lower_bound: int
    glitch: bool


class RiversResponse(BaseModel):
    count: int
    rivers: list[str]


class ClassifyResponse(BaseModel):
    pattern: str
    counts: dict[str, int]
    shapes: dict[str, str]


class SynthPermRequest(BaseModel):
    cycles: str
    construction: str = permsynth.ConstructionId.STAR_STAR_STAR.value
    n: int | None = None


class SynthesisOut(BaseModel):
    n: int
    gates: list[tuple[int, int]]
    gate_count: int
    pattern: str


class LinkableResponse(BaseModel):
    linkable: bool
    witness: SynthesisOut | None = None
    reason: str | None = None


class CensusRequest(BaseModel):
    n: int = Field(ge=1, le=oracle.MAX_CENSUS_DIM)
    middle_term: str = bound.DEFAULT_MIDDLE_TERM


class CensusResponse(BaseModel):
    n: int
    total: int
    middle_term: str
    counts: list[list[int]]
    metrics: dict


class VerifyRequest(BaseModel):
    matrix: MatrixIn
    synthesis: SynthesisIn
    middle_term: str = bound.DEFAULT_MIDDLE_TERM


class VerifyResponse(BaseModel):
    match: bool
    gate_count: int
    bound: int
    verdict: str


def _matrix(data: MatrixIn) -> BinMatrix:
    text = f"{len(data.rows)}\n" + "\n".join(data.rows)
    try:
        return formats.parse_matrix(text)
    except (formats.ParseError, gf2.Gf2Error) as exc:
        raise HTTPException(status_code=422, detail=str(exc))


def _synthesis(data: SynthesisIn) -> Synthesis:
    try:
        return Synthesis(
            data.n, tuple(CnotGate(c, t) for c, t in data.gates)
        )
    except gf2.Gf2Error as exc:
        raise HTTPException(status_code=422, detail=str(exc))


def _synthesis_out(s: Synthesis) -> SynthesisOut:
    cs = classifier.classify_synthesis(s)
    return SynthesisOut(
        n=s.n,
        gates=[(g.control, g.target) for g in s.gates],
        gate_count=len(s.gates),
        pattern=cs.pattern,
    )


@app.post("/bound", response_model=BoundResponse)
def bound_endpoint(req: BoundRequest) -> BoundResponse:
    m = _matrix(req)
    if req.middle_term not in bound.MIDDLE_TERMS:
        raise HTTPException(status_code=422, detail=f"middle_term must be one of {bound.MIDDLE_TERMS}")
    try:
        report = bound.lmc_bound(m, req.middle_term)
    except gf2.SingularMatrixError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return BoundResponse(
        n=report.n, v=report.v, e=report.e, ell=report.ell, m=report.m,
        c=report.c, z=report.z, z_inv=report.z_inv, cperfect=report.cperfect,
        cperfect_rational=str(report.cperfect_rational),
        middle_term=report.middle_term, bound=report.bound,
        depth_lb=report.depth_lower_bound(),
        strengthened_bound=bound.strengthened_bound(m) if req.strengthen else None,
    )


@app.post("/connectivity", response_model=ConnectivityResponse)
def connectivity_endpoint(req: MatrixIn) -> ConnectivityResponse:
    from . import connectivity as conn

    m = _matrix(req)
    vparts = conn.vertex_components(m)
    eparts = conn.edge_components(m)
    return ConnectivityResponse(
        v=vparts.component_count,
        e=eparts.component_count,
        vertex_groups=[[x + 1 for x in g] for g in vparts.groups()],
        edge_groups=[
            [f"r{x + 1}" if x < m.n else f"c{x - m.n + 1}" for x in g]
            for g in eparts.groups()
        ],
    )


@app.post("/cperfect", response_model=CperfectResponse)
def cperfect_endpoint(req: MatrixIn) -> CperfectResponse:
    m = _matrix(req)
    try:
        report = rivers.cperfect(m)
    except gf2.SingularMatrixError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return CperfectResponse(
        mprime=formats.write_matrix(report.mprime).splitlines()[1:],
        emp=report.emp,
        dup=report.dup,
        cperfect_rational=str(report.cperfect_rational),
        cperfect=report.cperfect,
        middle_lower_bound=report.middle_lower_bound,
        glitch=rivers.glitch_detect(m),
    )


@app.post("/rivers", response_model=RiversResponse)
def rivers_endpoint(req: MatrixIn) -> RiversResponse:
    m = _matrix(req)
    if m.n > rivers.ORACLE_MAX_DIM:
        raise HTTPException(
            status_code=422,
            detail=f"river enumeration supports n <= {rivers.ORACLE_MAX_DIM}",
        )
    names = sorted(rivers.enumerate_rivers(m).one_line_strings())
    return RiversResponse(count=len(names), rivers=names)


@app.post("/classify", response_model=ClassifyResponse)
def classify_endpoint(req: SynthesisIn) -> ClassifyResponse:
    s = _synthesis(req)
    cs = classifier.classify_synthesis(s)
    shapes = {}
    for cls in (classifier.GateClass.LINK, classifier.GateClass.MIDDLE, classifier.GateClass.CUT):
        graph = classifier.gate_graph(cs, cls)
        shape = "none"
        if graph.is_star:
            shape = "star"
        elif graph.is_path:
            shape = "path"
        elif graph.is_spanning_tree:
            shape = "spanning tree"
        shapes[cls.value] = shape
    return ClassifyResponse(
        pattern=cs.pattern,
        counts={cls.value: count for cls, count in cs.counts.items()},
        shapes=shapes,
    )


@app.post("/synth-perm", response_model=SynthesisOut)
def synth_perm_endpoint(req: SynthPermRequest) -> SynthesisOut:
    try:
        sigma = permsynth.parse_cycle_notation(req.cycles, req.n)
        cid = permsynth.ConstructionId(req.construction)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return _synthesis_out(permsynth.synth_permutation(sigma, cid))


@app.post("/linkable", response_model=LinkableResponse)
def linkable_endpoint(req: MatrixIn) -> LinkableResponse:
    m = _matrix(req)
    try:
        result = linkability.decide_linkable(m)
    except (linkability.LinkabilityError, gf2.Gf2Error) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return LinkableResponse(
        linkable=result.linkable,
        witness=_synthesis_out(result.witness) if result.witness else None,
        reason=result.reason.value if result.reason else None,
    )


@app.post("/census", response_model=CensusResponse)
def census_endpoint(req: CensusRequest) -> CensusResponse:
    if req.middle_term not in bound.MIDDLE_TERMS:
        raise HTTPException(status_code=422, detail=f"middle_term must be one of {bound.MIDDLE_TERMS}")
    cm = oracle.get_confusion(req.n, req.middle_term)
    met = oracle.metrics(cm)
    return CensusResponse(
        n=req.n,
        total=cm.total,
        middle_term=req.middle_term,
        counts=[list(row) for row in cm.counts],
        metrics=met.to_dict(),
    )


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
    m = _matrix(req.matrix)
    s = _synthesis(req.synthesis)
    if s.n != m.n:
        raise HTTPException(status_code=422, detail="matrix/synthesis dimension mismatch")
    match = s.replay() == m
    report = bound.lmc_bound(m, req.middle_term)
    if not match:
        verdict = "MISMATCH"
    elif len(s.gates) == report.bound:
        verdict = "OPTIMAL"
    else:
        verdict = f"GAP {len(s.gates) - report.bound}"
    return VerifyResponse(
        match=match, gate_count=len(s.gates), bound=report.bound, verdict=verdict
    )
