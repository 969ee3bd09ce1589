"""Executable checks of the prime-exponent characterizations and their lemmas.

Each ``check_*`` function evaluates one statement on one group and returns a
:class:`TheoremVerdict`.  Equivalences record both sides and hold when they
agree; one-directional properties leave ``lhs`` as ``None`` and hold when the
graph-side property is true.  A check whose hypothesis fails on the group is
reported as not applicable (``rhs`` is ``None``) and holds vacuously.

:func:`sweep` runs a set of statements over a catalog of group specs.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence, Union

import numpy as np

from . import connectivity as conn
from .errors import CapExceeded, InvalidSpec, ParseError, PowerGraphError
from .graphs import (
    SimpleGraph,
    blocks,
    connected_components,
    delete_edge,
    induced_subgraph,
    is_complete,
    is_connected,
    is_regular,
    is_star,
    min_degree,
)
from .groups import (
    Classification,
    FiniteGroup,
    GroupSpec,
    classify,
    euler_totient,
    exponent,
    generator_class,
    is_prime,
    make,
    maximal_subgroups_of_order_two,
    parse_spec,
    prime_power,
)
from .powergraph import PowerGraph, build_power_graph, reduced_graph

STATEMENTS = (
    "thm1",
    "thm2",
    "remark_complete_prime",
    "lem_2_1_i",
    "lem_2_1_ii",
    "lem_2_1_iii",
    "lem_2_2",
    "lem_2_3",
    "lem_3_1_i",
    "lem_3_1_ii",
    "lem_3_2",
    "lem_3_3",
    "clique_decomposition",
    "star_structure",
)

DEFAULT_SEED = 0xC0FFEE
DEFAULT_SAMPLES = 200
EXHAUSTIVE_LIMIT = 8


@dataclass
class TheoremVerdict:
    statement_id: str
    lhs: Optional[bool]
    rhs: Optional[bool]
    holds: Optional[bool]
    witness: Optional[dict] = None
    detail: dict = field(default_factory=dict)
    reason: Optional[str] = None
    error: Optional[str] = None
    spec: Optional[str] = None
    elapsed: float = 0.0
    capped: bool = False

    @property
    def applicable(self) -> bool:
        return self.rhs is not None

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "spec": self.spec,
            "statementId": self.statement_id,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        if self.reason is not None:
            out["reason"] = self.reason
        if self.error is not None:
            out["error"] = self.error
        if timings:
            out["elapsedMs"] = round(self.elapsed * 1000, 3)
        return out


def _iff(sid: str, lhs: bool, rhs: bool, witness: Optional[dict] = None, **detail) -> TheoremVerdict:
    holds = lhs == rhs
    if not holds:
        witness = {"lhs": lhs, "rhs": rhs, **(witness or {})}
    return TheoremVerdict(sid, lhs, rhs, holds, witness if not holds else None, detail)


def _prop(sid: str, rhs: bool, witness: Optional[dict] = None, **detail) -> TheoremVerdict:
    return TheoremVerdict(sid, None, rhs, rhs, None if rhs else (witness or {}), detail)


def _not_applicable(sid: str, reason: str, lhs: Optional[bool] = None) -> TheoremVerdict:
    return TheoremVerdict(sid, lhs, None, True, reason=f"not-applicable: {reason}")


class GroupFacts:
    """Lazily computed data about one group shared by all statement checks."""

    def __init__(self, group: FiniteGroup, spec: Optional[GroupSpec] = None,
                 enumeration_cap: int = conn.DEFAULT_ENUMERATION_CAP,
                 max_subsets: int = conn.DEFAULT_MAX_SUBSETS):
        self.group = group
        self.spec = spec
        self.enumeration_cap = enumeration_cap
        self.max_subsets = max_subsets

    @cached_property
    def cls(self) -> Classification:
        return classify(self.group)

    @cached_property
    def power_graph(self) -> PowerGraph:
        return build_power_graph(self.group)

    @property
    def graph(self) -> SimpleGraph:
        return self.power_graph.graph

    @cached_property
    def reduced(self) -> SimpleGraph:
        return reduced_graph(self.power_graph)

    @cached_property
    def complete(self) -> bool:
        return is_complete(self.graph)

    @cached_property
    def delta(self) -> int:
        return min_degree(self.graph)

    @cached_property
    def kappa(self) -> int:
        return conn.vertex_connectivity(self.graph)

    @cached_property
    def minimally_edge_connected(self) -> conn.MinimalityVerdict:
        return conn._guarded(self.graph, conn.is_minimally_edge_connected)

    @cached_property
    def minimally_connected(self) -> conn.MinimalityVerdict:
        return conn._guarded(self.graph, conn.is_minimally_connected)


GroupLike = Union[FiniteGroup, GroupFacts]


def _facts(g: GroupLike) -> GroupFacts:
    return g if isinstance(g, GroupFacts) else GroupFacts(g)


def _edge(e) -> Optional[list[int]]:
    return None if e is None else [int(e[0]), int(e[1])]


# -- main characterizations ---------------------------------------------------------


def check_theorem1(g: GroupLike) -> TheoremVerdict:
    """Non-cyclic of prime exponent iff the power graph is non-complete and minimally edge-connected."""
    f = _facts(g)
    lhs = (not f.cls.is_cyclic) and f.cls.prime_exponent is not None
    mec = f.minimally_edge_connected
    rhs = (not f.complete) and bool(mec.verdict)
    return _iff("thm1", lhs, rhs, {"edge": _edge(mec.witness_edge)},
                complete=f.complete, minimallyEdgeConnected=mec.to_dict())


def check_theorem2(g: GroupLike) -> TheoremVerdict:
    """Elementary abelian 2-group of rank >= 2 iff non-complete and minimally connected."""
    f = _facts(g)
    ea = f.cls.elementary_abelian
    lhs = ea is not None and ea[0] == 2 and ea[1] >= 2
    mc = f.minimally_connected
    rhs = (not f.complete) and bool(mc.verdict)
    return _iff("thm2", lhs, rhs, {"edge": _edge(mc.witness_edge)},
                complete=f.complete, minimallyConnected=mc.to_dict())


def check_remark_complete_prime(g: GroupLike) -> TheoremVerdict:
    f = _facts(g)
    lhs = f.cls.is_cyclic and f.cls.prime_exponent is not None
    rhs = f.complete and is_prime(f.group.order)
    return _iff("remark_complete_prime", lhs, rhs)


def check_lemma_2_1_i(g: GroupLike) -> TheoremVerdict:
    f = _facts(g)
    return _iff("lem_2_1_i", f.cls.is_cyclic_prime_power, f.complete)


def _identity_subsets(n: int, sample_count: int, seed: int) -> Iterable[list[int]]:
    others = list(range(1, n))
    if n <= EXHAUSTIVE_LIMIT:
        for k in range(1, n):
            for extra in combinations(others, k):
                yield [0, *extra]
        return
    rng = np.random.default_rng(seed)
    for _ in range(sample_count):
        mask = rng.random(n - 1) < 0.5
        if mask.any():
            yield [0, *np.flatnonzero(mask) + 1]


def check_lemma_2_1_ii(g: GroupLike, sample_count: int = DEFAULT_SAMPLES, rng_seed: int = DEFAULT_SEED) -> TheoremVerdict:
    """Induced subgraphs through the identity have edge connectivity equal to minimum degree."""
    f = _facts(g)
    n = f.group.order
    if n < 2:
        return _not_applicable("lem_2_1_ii", "group of order 1")
    tested = 0
    for subset in _identity_subsets(n, sample_count, rng_seed):
        sub = induced_subgraph(f.graph, subset)
        kp, d = conn.edge_connectivity(sub), min_degree(sub)
        tested += 1
        if kp != d:
            return _prop("lem_2_1_ii", False, {"subset": [int(x) for x in subset], "edgeConnectivity": kp, "minDegree": d})
    mode = "exhaustive" if n <= EXHAUSTIVE_LIMIT else "sampled"
    return _prop("lem_2_1_ii", True, tested=tested, mode=mode)


def check_lemma_2_1_iii(g: GroupLike, enumeration_cap: Optional[int] = None) -> TheoremVerdict:
    """Every minimum separating set is a union of generator classes."""
    f = _facts(g)
    if f.complete:
        return _not_applicable("lem_2_1_iii", "complete power graph has no separating set")
    cap = f.enumeration_cap if enumeration_cap is None else enumeration_cap
    cuts = conn.minimum_vertex_cuts(f.graph, cap, f.max_subsets)
    for cut in cuts:
        for x in sorted(cut):
            cls_x = generator_class(f.group, x)
            if not cls_x <= cut:
                return _prop("lem_2_1_iii", False, {"cut": sorted(cut), "element": x, "generatorClass": sorted(cls_x)})
    return _prop("lem_2_1_iii", True, cutCount=len(cuts), cutSize=f.kappa,
                 cuts=[sorted(c) for c in cuts[:16]])


def check_lemma_2_2(g: GroupLike) -> TheoremVerdict:
    f = _facts(g)
    if f.group.order < 2:
        return _not_applicable("lem_2_2", "group of order 1")
    lhs = f.cls.is_cyclic_prime_power or f.cls.prime_exponent is not None
    degs = sorted(set(f.reduced.degrees))
    return _iff("lem_2_2", lhs, is_regular(f.reduced), reducedDegrees=degs)


def check_lemma_2_3(g: GroupLike) -> TheoremVerdict:
    """In a p-group, an element of order p is adjacent to its whole component of the reduced graph."""
    f = _facts(g)
    p = f.cls.is_p_group
    if p is None:
        return _not_applicable("lem_2_3", "not a p-group")
    red = f.reduced
    comp_of = {}
    for comp in connected_components(red):
        for v in comp:
            comp_of[v] = comp
    for v in range(red.vertex_count):
        x = red.labels[v]
        if f.group.orders[x] != p:
            continue
        for w in comp_of[v]:
            if w != v and not red.has_edge(v, w):
                return _prop("lem_2_3", False, {"element": x, "nonNeighbour": red.labels[w]})
    return _prop("lem_2_3", True, prime=p)


def _require_min_edge(f: GroupFacts, sid: str) -> Optional[TheoremVerdict]:
    if f.minimally_edge_connected.verdict is not True:
        return _not_applicable(sid, "power graph is not minimally edge-connected")
    return None


def check_lemma_3_1_i(g: GroupLike) -> TheoremVerdict:
    """Under minimal edge-connectivity, elements of order > 2 have minimum degree."""
    f = _facts(g)
    skip = _require_min_edge(f, "lem_3_1_i")
    if skip:
        return skip
    for x in range(f.group.order):
        if f.group.orders[x] > 2 and f.graph.degrees[x] != f.delta:
            return _prop("lem_3_1_i", False, {"element": x, "degree": f.graph.degrees[x], "minDegree": f.delta})
    return _prop("lem_3_1_i", True, minDegree=f.delta)


def check_lemma_3_1_ii(g: GroupLike) -> TheoremVerdict:
    """Under minimal edge-connectivity, maximal cyclic subgroups of order > 2 have order delta + 1."""
    f = _facts(g)
    skip = _require_min_edge(f, "lem_3_1_ii")
    if skip:
        return skip
    for sub in f.group.maximal_cyclic:
        if len(sub) > 2 and len(sub) != f.delta + 1:
            return _prop("lem_3_1_ii", False, {"subgroup": sorted(sub), "minDegree": f.delta})
    return _prop("lem_3_1_ii", True, minDegree=f.delta)


def check_lemma_3_1(g: GroupLike) -> tuple[TheoremVerdict, TheoremVerdict]:
    f = _facts(g)
    return check_lemma_3_1_i(f), check_lemma_3_1_ii(f)


def check_lemma_3_2(g: GroupLike) -> TheoremVerdict:
    """No maximal cyclic subgroup of order 2 and minimally edge-connected implies prime-power order.

    Both readings of "maximal subgroup of order two" are recorded; the verdict
    uses maximal among cyclic subgroups.
    """
    f = _facts(g)
    no_cyclic2 = not any(len(s) == 2 for s in f.group.maximal_cyclic)
    no_subgroup2 = not maximal_subgroups_of_order_two(f.group)
    mec = f.minimally_edge_connected.verdict is True
    pp = prime_power(f.group.order) is not None
    rhs = (not (no_cyclic2 and mec)) or pp
    alt = (not (no_subgroup2 and mec)) or pp
    detail = dict(noMaximalCyclicOfOrderTwo=no_cyclic2, noMaximalSubgroupOfOrderTwo=no_subgroup2,
                  minimallyEdgeConnected=mec, primePowerOrder=pp, alternativeReadingHolds=alt)
    return _prop("lem_3_2", rhs, {"order": f.group.order}, **detail)


def totient_degree(g: FiniteGroup, x: int) -> int:
    """``o(x) - 1 + m * phi(exp(G))`` with ``m`` the number of maximal cyclic subgroups containing ``x``.

    Equals ``deg(x)`` when every cyclic subgroup properly containing ``<x>`` is
    a maximal one of order ``exp(G)``.
    """
    m = sum(1 for s in g.maximal_cyclic if x in s)
    return g.orders[x] - 1 + m * euler_totient(exponent(g))


def check_lemma_3_3(g: GroupLike, enumeration_cap: Optional[int] = None) -> TheoremVerdict:
    """If deleting an edge drops kappa by one, no minimum cut of the result contains its endpoints."""
    f = _facts(g)
    graph = f.graph
    if graph.vertex_count < 2 or not is_connected(graph):
        return _not_applicable("lem_3_3", "power graph is trivial")
    cap = f.enumeration_cap if enumeration_cap is None else enumeration_cap
    checked = 0
    for edge in graph.sorted_edges:
        minus = delete_edge(graph, edge)
        if not is_connected(minus) or conn.vertex_connectivity(minus) != f.kappa - 1:
            continue
        checked += 1
        for cut in conn.minimum_vertex_cuts(minus, cap, f.max_subsets):
            if edge[0] in cut or edge[1] in cut:
                return _prop("lem_3_3", False, {"edge": list(edge), "cut": sorted(cut)})
    return _prop("lem_3_3", True, edgesChecked=checked)


def check_clique_decomposition(g: GroupLike) -> TheoremVerdict:
    """Non-cyclic prime exponent p: blocks are (n-1)/(p-1) p-cliques meeting only at e."""
    f = _facts(g)
    p = f.cls.prime_exponent
    if p is None or f.cls.is_cyclic:
        return _not_applicable("clique_decomposition", "not a non-cyclic group of prime exponent")
    n = f.group.order
    bl = blocks(f.graph)
    maximal = set(f.group.maximal_cyclic)
    expected = (n - 1) // (p - 1)
    problems = []
    if len(bl) != expected:
        problems.append(f"{len(bl)} blocks, expected {expected}")
    for b in bl:
        ok = (len(b) == p and 0 in b and b in maximal
              and all(f.graph.has_edge(u, v) for u, v in combinations(sorted(b), 2)))
        if not ok:
            problems.append(f"block {sorted(b)} is not a p-clique on a maximal cyclic subgroup")
            break
    for a, b in combinations(bl, 2):
        if a & b != {0}:
            problems.append(f"blocks {sorted(a)} and {sorted(b)} meet in {sorted(a & b)}")
            break
    if problems:
        return _prop("clique_decomposition", False, {"problem": problems[0]})
    return _prop("clique_decomposition", True, blockCount=len(bl), cliqueSize=p)


def check_star_structure(g: GroupLike) -> TheoremVerdict:
    """Elementary abelian 2-group of rank >= 2 iff the power graph is a star centred at e."""
    f = _facts(g)
    ea = f.cls.elementary_abelian
    lhs = ea is not None and ea[0] == 2 and ea[1] >= 2
    rhs = is_star(f.graph) and f.graph.degrees[0] == f.group.order - 1
    return _iff("star_structure", lhs, rhs)


CHECKS: dict[str, Callable[..., TheoremVerdict]] = {
    "thm1": check_theorem1,
    "thm2": check_theorem2,
    "remark_complete_prime": check_remark_complete_prime,
    "lem_2_1_i": check_lemma_2_1_i,
    "lem_2_1_ii": check_lemma_2_1_ii,
    "lem_2_1_iii": check_lemma_2_1_iii,
    "lem_2_2": check_lemma_2_2,
    "lem_2_3": check_lemma_2_3,
    "lem_3_1_i": check_lemma_3_1_i,
    "lem_3_1_ii": check_lemma_3_1_ii,
    "lem_3_2": check_lemma_3_2,
    "lem_3_3": check_lemma_3_3,
    "clique_decomposition": check_clique_decomposition,
    "star_structure": check_star_structure,
}


@dataclass(frozen=True)
class CheckOptions:
    sample_count: int = DEFAULT_SAMPLES
    seed: int = DEFAULT_SEED
    enumeration_cap: int = conn.DEFAULT_ENUMERATION_CAP
    max_subsets: int = conn.DEFAULT_MAX_SUBSETS
    max_order: Optional[int] = None


def run_check(statement_id: str, f: GroupFacts, options: CheckOptions = CheckOptions()) -> TheoremVerdict:
    """Run one statement, timing it and converting package errors into an error verdict."""
    if statement_id not in CHECKS:
        raise KeyError(f"unknown statement {statement_id!r}")
    fn = CHECKS[statement_id]
    start = time.perf_counter()
    try:
        if statement_id == "lem_2_1_ii":
            v = fn(f, options.sample_count, options.seed)
        else:
            v = fn(f)
    except PowerGraphError as exc:
        v = TheoremVerdict(statement_id, None, None, None, error=f"{type(exc).__name__}: {exc}",
                           capped=isinstance(exc, CapExceeded))
    v.elapsed = time.perf_counter() - start
    v.spec = str(f.spec) if f.spec is not None else None
    return v


def check_group(group: Union[FiniteGroup, GroupSpec, str], statements: Optional[Sequence[str]] = None,
                options: CheckOptions = CheckOptions()) -> list[TheoremVerdict]:
    spec = None
    if isinstance(group, (GroupSpec, str)):
        spec = parse_spec(group) if isinstance(group, str) else group
        group = make(spec, options.max_order)
    facts = GroupFacts(group, spec, options.enumeration_cap, options.max_subsets)
    return [run_check(s, facts, options) for s in _ordered(statements)]


def _ordered(statements: Optional[Iterable[str]]) -> list[str]:
    if statements is None:
        return list(STATEMENTS)
    wanted = set(statements)
    unknown = wanted - set(STATEMENTS)
    if unknown:
        raise KeyError(f"unknown statement(s): {', '.join(sorted(unknown))}")
    return [s for s in STATEMENTS if s in wanted]


# -- catalog and sweeps ---------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    spec: GroupSpec
    slow: bool = False


@dataclass(frozen=True)
class Catalog:
    version: str
    entries: tuple[CatalogEntry, ...]


def parse_catalog(text: str) -> Catalog:
    """Manifest format: ``version <v>`` then one group spec per line; ``@slow`` tags a line."""
    version = "unversioned"
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("version "):
            version = line.split(None, 1)[1].strip()
            continue
        slow = "@slow" in line.split()
        line = " ".join(tok for tok in line.split() if tok != "@slow")
        try:
            spec = parse_spec(line)
            spec.validate()
        except (ParseError, InvalidSpec) as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        entries.append(CatalogEntry(spec, slow))
    return Catalog(version, tuple(entries))


def load_catalog(source: Union[str, Path] = "default") -> Catalog:
    if str(source) == "default":
        text = resources.files("powergraphs").joinpath("data/default_catalog.txt").read_text()
    else:
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read catalog {source}: {exc}") from None
    return parse_catalog(text)


@dataclass
class CatalogSweepReport:
    catalog_version: str
    verdicts: list[TheoremVerdict]

    @property
    def failures(self) -> list[TheoremVerdict]:
        return [v for v in self.verdicts if v.holds is False]

    @property
    def errors(self) -> list[TheoremVerdict]:
        return [v for v in self.verdicts if v.error is not None]

    def summary(self) -> dict:
        out: dict = {}
        for v in self.verdicts:
            row = out.setdefault(v.statement_id, {"total": 0, "holds": 0, "failed": 0, "notApplicable": 0, "errors": 0})
            row["total"] += 1
            if v.error is not None:
                row["errors"] += 1
            elif v.holds is False:
                row["failed"] += 1
            else:
                row["holds"] += 1
                if v.rhs is None:
                    row["notApplicable"] += 1
        return {s: out[s] for s in STATEMENTS if s in out}

    def to_dict(self, timings: bool = False) -> dict:
        return {
            "catalogVersion": self.catalog_version,
            "verdicts": [v.to_dict(timings) for v in self.verdicts],
            "summary": self.summary(),
            "failures": [v.to_dict(timings) for v in self.failures],
            "errors": [v.to_dict(timings) for v in self.errors],
        }


def _sweep_one(spec: GroupSpec, statements: list[str], options: CheckOptions) -> list[TheoremVerdict]:
    try:
        group = make(spec, options.max_order)
    except PowerGraphError as exc:
        return [TheoremVerdict(s, None, None, None, error=f"{type(exc).__name__}: {exc}", spec=str(spec),
                               capped=isinstance(exc, CapExceeded)) for s in statements]
    facts = GroupFacts(group, spec, options.enumeration_cap, options.max_subsets)
    return [run_check(s, facts, options) for s in statements]


def sweep(catalog: Union[Catalog, Sequence[Union[GroupSpec, CatalogEntry, str]]],
          statements: Optional[Iterable[str]] = None, fast: bool = False,
          options: CheckOptions = CheckOptions(), jobs: int = 1) -> CatalogSweepReport:
    """Run the requested statements on every catalog group.

    Per-group errors become error verdicts instead of aborting.  The verdict
    list is ordered failures first, then by catalog position and statement
    order, independent of ``jobs``.
    """
    version = "adhoc"
    if isinstance(catalog, Catalog):
        version, entries = catalog.version, list(catalog.entries)
    else:
        entries = []
        for item in catalog:
            if isinstance(item, CatalogEntry):
                entries.append(item)
            else:
                entries.append(CatalogEntry(parse_spec(item) if isinstance(item, str) else item))
    if fast:
        entries = [e for e in entries if not e.slow]
    stmts = _ordered(statements)
    specs = [e.spec for e in entries]
    if jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            per_group = list(pool.map(_sweep_one, specs, [stmts] * len(specs), [options] * len(specs)))
    else:
        per_group = [_sweep_one(s, stmts, options) for s in specs]
    flat = [v for group in per_group for v in group]
    order = {id(v): i for i, v in enumerate(flat)}
    flat.sort(key=lambda v: (v.holds is not False, order[id(v)]))
    return CatalogSweepReport(version, flat)
