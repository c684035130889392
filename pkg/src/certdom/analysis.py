"""Consolidated reports: bounds, modification effects, and complement pairs.

Each report is a dataclass with a ``to_json_obj`` method producing a plain
dict with stable key order, so reports serialize to line-oriented JSON for
the CLI.  All values are exact solver outputs; nothing here estimates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .domination import as_mask
from .graphs import (
    Graph,
    VertexSet,
    complement,
    is_connected,
    leaf_mask,
    min_degree,
    strong_supports,
    weak_supports,
)
from .solver import (
    ORACLE_BOUND_DEFAULT,
    SizeLimitError,
    SolverConfig,
    all_min_dominating_sets,
    gamma_cer_solve,
    gamma_solve,
)
from .structure import recognize_corona


@dataclass(frozen=True)
class BoundCheck:
    name: str
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    def to_json_obj(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}


@dataclass(frozen=True)
class BoundReport:
    """Upper bounds on the certified domination number plus the equality test.

    ``equality_witness`` is a leaf-free minimum dominating set leaving, for
    every weak support, at least one non-leaf neighbour outside the set; such
    a witness exists iff the domination and certified domination numbers
    agree.  The witness search enumerates every minimum dominating set and is
    skipped (with ``witness_searched`` False) above the oracle size bound.
    """

    n: int
    gamma: int
    gamma_cer: int
    s1_size: int
    s2_size: int
    strong_support_leaf_count: int
    bounds: tuple[BoundCheck, ...]
    equality_holds: bool
    equality_witness: Optional[VertexSet]
    witness_searched: bool

    def to_json_obj(self) -> dict:
        return {
            "report": "bounds",
            "n": self.n,
            "gamma": self.gamma,
            "gamma_cer": self.gamma_cer,
            "s1_size": self.s1_size,
            "s2_size": self.s2_size,
            "strong_support_leaf_count": self.strong_support_leaf_count,
            "bounds": [b.to_json_obj() for b in self.bounds],
            "equality_gamma": {
                "holds": self.equality_holds,
                "witness": (
                    None
                    if self.equality_witness is None
                    else self.equality_witness.to_list()
                ),
                "witness_searched": self.witness_searched,
            },
        }


def bound_report(
    g: Graph,
    cfg: SolverConfig | None = None,
    *,
    witness_max_n: int = ORACLE_BOUND_DEFAULT,
) -> BoundReport:
    """Evaluate every general upper bound with exact values."""
    gamma = gamma_solve(g, cfg).value
    gamma_cer = gamma_cer_solve(g, cfg).value
    s1 = len(weak_supports(g))
    s2 = len(strong_supports(g))
    lm = leaf_mask(g)
    k = sum(
        1
        for v in range(g.n)
        if lm >> v & 1 and (g.adj[g.adj[v].bit_length() - 1] & lm).bit_count() >= 2
    )
    bounds = (
        BoundCheck("gamma_le_gamma_cer", gamma, gamma_cer),
        BoundCheck("gamma_cer_le_n", gamma_cer, g.n),
        BoundCheck("strong_leaf_trim", gamma_cer, g.n - k),
        BoundCheck("two_per_strong_support", gamma_cer, g.n - 2 * s2),
        BoundCheck("gamma_plus_weak_supports", gamma_cer, gamma + s1),
        BoundCheck("twice_gamma", gamma_cer, 2 * gamma),
    )
    witness = None
    searched = g.n <= witness_max_n
    if searched:
        witness = _equality_witness(g, witness_max_n)
    return BoundReport(
        n=g.n,
        gamma=gamma,
        gamma_cer=gamma_cer,
        s1_size=s1,
        s2_size=s2,
        strong_support_leaf_count=k,
        bounds=bounds,
        equality_holds=gamma_cer == gamma,
        equality_witness=witness,
        witness_searched=searched,
    )


def _equality_witness(g: Graph, max_n: int) -> Optional[VertexSet]:
    """First leaf-free minimum dominating set leaving every weak support a
    non-leaf neighbour outside the set, or None.

    Such a set exists iff the domination and certified domination numbers
    agree.  Leaf-freeness is essential: leaf-heavy gamma-sets can satisfy the
    slack condition on graphs where the two numbers differ.
    """
    lm = leaf_mask(g)
    weak = weak_supports(g).to_list()
    for d in all_min_dominating_sets(g, max_n=max_n):
        if d.mask & lm:
            continue
        if all(g.adj[s] & ~lm & ~d.mask for s in weak):
            return d
    return None


# ---------------------------------------------------------------------------
# Edge / vertex modification sweeps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ModificationRecord:
    kind: str  # "edge-del" | "edge-add" | "vertex-del" | "vertex-add"
    detail: tuple
    new_value: int
    delta: int
    bound_applicable: bool = False
    bound_holds: Optional[bool] = None

    def to_json_obj(self) -> dict:
        obj = {
            "kind": self.kind,
            "detail": list(self.detail),
            "new_value": self.new_value,
            "delta": self.delta,
            "bound_applicable": self.bound_applicable,
        }
        if self.bound_applicable:
            obj["bound_holds"] = self.bound_holds
        return obj


@dataclass(frozen=True)
class ModificationReport:
    scope: str
    base_value: int
    records: tuple[ModificationRecord, ...]

    def to_json_obj(self) -> dict:
        return {
            "report": "modifications",
            "scope": self.scope,
            "base_value": self.base_value,
            "records": [r.to_json_obj() for r in self.records],
        }

    @property
    def violations(self) -> list[ModificationRecord]:
        return [r for r in self.records if r.bound_applicable and not r.bound_holds]


def edge_effects(
    g: Graph,
    scope: str | tuple[int, int] = "all-deletions",
    cfg: SolverConfig | None = None,
) -> ModificationReport:
    """Exact certified domination numbers of single-edge modifications.

    ``scope`` is "all-deletions", "all-additions", or one (u, v) pair whose
    direction (deletion vs addition) is inferred from edge presence.  For a
    connected base graph, every addition carries the monotonicity bound
    new <= base; violations are flagged.  Additions to disconnected graphs
    carry no bound (they can lift the value arbitrarily).
    """
    base = gamma_cer_solve(g, cfg).value
    connected = is_connected(g)
    if isinstance(scope, tuple):
        u, v = scope
        if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
            raise ValueError(f"invalid edge ({u}, {v})")
        pairs = [tuple(sorted((u, v)))]
        scope_name = "single"
    elif scope == "all-deletions":
        pairs = g.edges()
        scope_name = scope
    elif scope == "all-additions":
        pairs = [
            (u, v)
            for u in range(g.n)
            for v in range(u + 1, g.n)
            if not g.has_edge(u, v)
        ]
        scope_name = scope
    else:
        raise ValueError(f"unknown scope {scope!r}")
    records = []
    for u, v in pairs:
        if g.has_edge(u, v):
            new = gamma_cer_solve(g.remove_edge(u, v), cfg).value
            records.append(
                ModificationRecord("edge-del", (u, v), new, new - base)
            )
        else:
            new = gamma_cer_solve(g.add_edge(u, v), cfg).value
            records.append(
                ModificationRecord(
                    "edge-add",
                    (u, v),
                    new,
                    new - base,
                    bound_applicable=connected,
                    bound_holds=new <= base if connected else None,
                )
            )
    return ModificationReport(scope_name, base, tuple(records))


def vertex_effects(
    g: Graph,
    scope: str | Iterable[int] = "all-deletions",
    cfg: SolverConfig | None = None,
) -> ModificationReport:
    """Exact values after deleting each vertex, or after one vertex addition.

    Deletions carry no bound.  An addition joined to two or more existing
    vertices carries the bound new <= base + 1; a pendant addition (one
    neighbour) is reported without any bound claim.  An empty neighbour set
    is rejected: adding an isolated vertex just adds one to the value.
    """
    base = gamma_cer_solve(g, cfg).value
    records = []
    if isinstance(scope, str):
        if scope != "all-deletions":
            raise ValueError(f"unknown scope {scope!r}")
        for v in range(g.n):
            new = gamma_cer_solve(g.remove_vertex(v), cfg).value
            records.append(ModificationRecord("vertex-del", (v,), new, new - base))
        return ModificationReport(scope, base, tuple(records))
    nbrs = sorted(set(scope))
    mask = as_mask(g, nbrs)
    if not mask:
        raise ValueError(
            "neighbour set must be nonempty (an isolated addition is just +1)"
        )
    new = gamma_cer_solve(g.add_vertex(nbrs), cfg).value
    bounded = len(nbrs) >= 2
    records.append(
        ModificationRecord(
            "vertex-add",
            tuple(nbrs),
            new,
            new - base,
            bound_applicable=bounded,
            bound_holds=new <= base + 1 if bounded else None,
        )
    )
    return ModificationReport("add", base, tuple(records))


# ---------------------------------------------------------------------------
# Complement pairs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NGReport:
    """Joint behaviour of the certified domination number on g and its complement."""

    n: int
    gcer_g: int
    gcer_gbar: int
    min_delta: int
    regime: str  # "min_delta_0" | "min_delta_1" | "min_delta_ge2"
    checks: tuple[BoundCheck, ...]
    corona_g: bool
    corona_gbar: bool
    equality_regime: Optional[bool] = None

    @property
    def sum(self) -> int:
        return self.gcer_g + self.gcer_gbar

    @property
    def product(self) -> int:
        return self.gcer_g * self.gcer_gbar

    def to_json_obj(self) -> dict:
        obj = {
            "report": "ng",
            "n": self.n,
            "gcer_g": self.gcer_g,
            "gcer_gbar": self.gcer_gbar,
            "sum": self.sum,
            "product": self.product,
            "min_delta": self.min_delta,
            "regime": self.regime,
            "checks": [c.to_json_obj() for c in self.checks],
            "corona_g": self.corona_g,
            "corona_gbar": self.corona_gbar,
        }
        if self.equality_regime is not None:
            obj["extremal_pair"] = self.equality_regime
        return obj


def nordhaus_gaddum(g: Graph, cfg: SolverConfig | None = None) -> NGReport:
    """Sum/product behaviour of the value on a graph and its complement.

    Evaluates the bounds applicable to the minimum-degree regime: with both
    minimum degrees >= 2, sum <= floor(n/2) + 2 and product <= n; with an
    isolated vertex on either side and n >= 3, sum <= n + 1 and product <= n;
    for any n >= 5, sum <= n + 2 and product <= 2n, where both are tight
    exactly when one side is the corona of some graph (recorded in
    ``extremal_pair``).
    """
    if g.n == 0:
        raise ValueError("complement-pair report needs at least one vertex")
    gbar = complement(g)
    a = gamma_cer_solve(g, cfg).value
    b = gamma_cer_solve(gbar, cfg).value
    dmin = min(min_degree(g), min_degree(gbar))
    regime = (
        "min_delta_0" if dmin == 0 else "min_delta_1" if dmin == 1 else "min_delta_ge2"
    )
    n = g.n
    checks = []
    if dmin >= 2:
        checks.append(BoundCheck("sum_le_half_n_plus_2", a + b, n // 2 + 2))
        checks.append(BoundCheck("product_le_n", a * b, n))
    if dmin == 0 and n >= 3:
        checks.append(BoundCheck("sum_le_n_plus_1", a + b, n + 1))
        checks.append(BoundCheck("product_le_n", a * b, n))
    corona_g = recognize_corona(g) is not None
    corona_gbar = recognize_corona(gbar) is not None
    equality = None
    if n >= 5:
        checks.append(BoundCheck("sum_le_n_plus_2", a + b, n + 2))
        checks.append(BoundCheck("product_le_2n", a * b, 2 * n))
        equality = corona_g or corona_gbar
    return NGReport(
        n=n,
        gcer_g=a,
        gcer_gbar=b,
        min_delta=dmin,
        regime=regime,
        checks=tuple(checks),
        corona_g=corona_g,
        corona_gbar=corona_gbar,
        equality_regime=equality,
    )
