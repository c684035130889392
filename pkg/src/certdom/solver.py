"""Exact solvers for the domination and certified domination numbers.

Two independent routes are provided:

* ``gamma_oracle`` / ``gamma_cer_oracle`` enumerate vertex subsets by
  cardinality then lexicographic order and return the first hit.  They are
  the ground truth for everything else and refuse graphs above a size bound.

* ``gamma_solve`` / ``gamma_cer_solve`` run a reduction-aware branch and
  bound: split into connected components, take a closed-form fast path on
  recognized components, pre-pin support vertices (certified sets must
  contain every support), branch on the closed neighbourhood of an
  undominated vertex, and prune with a greedy disjoint-closed-neighbourhood
  packing bound.  Infeasible certification is detected early: a chosen
  vertex whose unresolved neighbourhood can no longer avoid "exactly one
  neighbour outside" kills the branch, and near-misses force its last
  undecided neighbour in or out.

Certificates are deterministic: among all optimal sets the lexicographically
smallest (by sorted vertex list) is returned, found by a second,
vertex-ordered search with the optimum as an exact budget.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .domination import DD2Pair, _certified, _dominates
from .graphs import Graph, VertexSet, _bits, components, leaf_mask, min_degree
from .structure import closed_form

ORACLE_BOUND_DEFAULT = 20


class SizeLimitError(ValueError):
    """Raised when an exhaustive routine is asked to exceed its size bound."""


@dataclass
class SolveStats:
    nodes_expanded: int = 0
    forced_vertices: int = 0
    components_split: int = 0
    closed_form_hits: int = 0

    def as_dict(self) -> dict[str, int]:
        return {
            "nodes_expanded": self.nodes_expanded,
            "forced_vertices": self.forced_vertices,
            "components_split": self.components_split,
            "closed_form_hits": self.closed_form_hits,
        }


@dataclass(frozen=True)
class SolverConfig:
    """Search controls.  ``tie_break`` is fixed: lexicographically smallest
    certificate among the optima, compared as sorted vertex lists."""

    use_reductions: bool = True
    use_closed_forms: bool = True
    node_limit: int | None = None
    tie_break: str = "lex-smallest"

    def __post_init__(self) -> None:
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node_limit must be positive")
        if self.tie_break != "lex-smallest":
            raise ValueError("only the lex-smallest tie break is supported")


@dataclass(frozen=True)
class SolveResult:
    """Optimal value with one optimal certificate.

    ``proven`` is False only when a node limit truncated the search; the
    certificate is then still a valid set of size ``value`` but optimality
    (or the tie break) is unverified.
    """

    value: int
    certificate: VertexSet
    stats: SolveStats = field(default_factory=SolveStats)
    proven: bool = True


# ---------------------------------------------------------------------------
# Subset-enumeration oracles
# ---------------------------------------------------------------------------

def _oracle(g: Graph, certified: bool, max_n: int) -> SolveResult:
    if g.n > max_n:
        raise SizeLimitError(
            f"oracle refuses n={g.n} > bound {max_n}; raise max_n explicitly"
        )
    closed = [g.adj[v] | 1 << v for v in range(g.n)]
    adj = g.adj
    full = g.full_mask
    tested = 0
    for k in range(g.n + 1):
        for comb in combinations(range(g.n), k):
            tested += 1
            cover = 0
            mask = 0
            for v in comb:
                cover |= closed[v]
                mask |= 1 << v
            if cover != full:
                continue
            if certified:
                ok = True
                for v in comb:
                    outside = adj[v] & ~mask
                    if outside and not outside & (outside - 1):
                        ok = False
                        break
                if not ok:
                    continue
            return SolveResult(
                k, VertexSet(g.n, mask), SolveStats(nodes_expanded=tested)
            )
    raise AssertionError("unreachable: the full vertex set always qualifies")


def gamma_oracle(g: Graph, *, max_n: int = ORACLE_BOUND_DEFAULT) -> SolveResult:
    """Ground-truth domination number by subset enumeration."""
    return _oracle(g, certified=False, max_n=max_n)


def gamma_cer_oracle(g: Graph, *, max_n: int = ORACLE_BOUND_DEFAULT) -> SolveResult:
    """Ground-truth certified domination number by subset enumeration."""
    return _oracle(g, certified=True, max_n=max_n)


def all_min_dominating_sets(
    g: Graph, *, max_n: int = ORACLE_BOUND_DEFAULT
) -> list[VertexSet]:
    """Every minimum dominating set, in lexicographic order."""
    gamma = gamma_oracle(g, max_n=max_n).value
    closed = [g.adj[v] | 1 << v for v in range(g.n)]
    full = g.full_mask
    out = []
    for comb in combinations(range(g.n), gamma):
        cover = 0
        for v in comb:
            cover |= closed[v]
        if cover == full:
            mask = 0
            for v in comb:
                mask |= 1 << v
            out.append(VertexSet(g.n, mask))
    return out


# ---------------------------------------------------------------------------
# Branch and bound
# ---------------------------------------------------------------------------

class _NodeLimit(Exception):
    pass


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None):
        self.limit = limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise _NodeLimit


class _Search:
    """In/out decision search over one graph's vertices, on raw bitmasks."""

    __slots__ = (
        "adj", "closed", "n", "full", "certified", "budget",
        "best_val", "best_mask", "value_bound", "target",
    )

    def __init__(self, g: Graph, certified: bool, budget: _Budget):
        self.adj = g.adj
        self.closed = tuple(g.adj[v] | 1 << v for v in range(g.n))
        self.n = g.n
        self.full = g.full_mask
        self.certified = certified
        self.budget = budget

    # -- shared machinery ---------------------------------------------------

    def _propagate(self, in_mask: int, out_mask: int):
        """Fixpoint of forced moves; None on a proven dead end.

        Rules: an undominated vertex with no allowed dominator kills the
        branch, with a single allowed dominator forces it in; a chosen vertex
        with exactly one decided-out neighbour and no undecided ones is stuck
        half-shadowed (dead), with one undecided neighbour left that
        neighbour is forced out (one decided-out) or in (none decided-out).
        Returns (in_mask, out_mask, covered).
        """
        adj = self.adj
        closed = self.closed
        full = self.full
        certified = self.certified
        while True:
            covered = in_mask
            m = in_mask
            while m:
                low = m & -m
                m ^= low
                covered |= adj[low.bit_length() - 1]
            forced = False
            m = full & ~covered
            while m:
                low = m & -m
                m ^= low
                cand = closed[low.bit_length() - 1] & ~out_mask
                if cand == 0:
                    return None
                if not cand & (cand - 1):
                    in_mask |= cand
                    forced = True
                    break
            if forced:
                continue
            if certified:
                undec = full & ~in_mask & ~out_mask
                m = in_mask
                while m:
                    low = m & -m
                    m ^= low
                    row = adj[low.bit_length() - 1]
                    a_mask = row & out_mask
                    a = a_mask.bit_count()
                    if a >= 2:
                        continue
                    b_mask = row & undec
                    b = b_mask.bit_count()
                    if a == 1:
                        if b == 0:
                            return None
                        if b == 1:
                            out_mask |= b_mask
                            forced = True
                            break
                    elif b == 1:
                        in_mask |= b_mask
                        forced = True
                        break
                if forced:
                    continue
            return in_mask, out_mask, covered

    def _pack_bound(self, out_mask: int, covered: int) -> int:
        """Greedy disjoint-closed-neighbourhood packing over undominated vertices."""
        closed = self.closed
        used = 0
        count = 0
        m = self.full & ~covered
        while m:
            low = m & -m
            m ^= low
            cand = closed[low.bit_length() - 1] & ~out_mask
            if cand & used == 0:
                used |= cand
                count += 1
        return count

    def _branch_vertex(self, out_mask: int, covered: int) -> int:
        """Undominated vertex with the fewest allowed dominators (ties: lowest)."""
        best_u = -1
        best_c = self.n + 2
        m = self.full & ~covered
        closed = self.closed
        while m:
            low = m & -m
            m ^= low
            u = low.bit_length() - 1
            c = (closed[u] & ~out_mask).bit_count()
            if c < best_c:
                best_u, best_c = u, c
                if c <= 2:
                    break
        return best_u

    # -- phase 1: optimal value ----------------------------------------------

    def solve_best(
        self,
        in0: int,
        out0: int,
        inc_val: int,
        inc_mask: int,
        value_bound: int | None = None,
    ) -> tuple[int, int]:
        """Best-value search seeded with a feasible incumbent.

        ``value_bound``, when given, must be a proven upper bound on the
        optimum; branches whose lower bound exceeds it are cut even before
        they beat the incumbent.
        """
        self.best_val = inc_val
        self.best_mask = inc_mask
        self.value_bound = value_bound
        self._descend_best(in0, out0)
        return self.best_val, self.best_mask

    def _descend_best(self, in_mask: int, out_mask: int) -> None:
        self.budget.tick()
        state = self._propagate(in_mask, out_mask)
        if state is None:
            return
        in_mask, out_mask, covered = state
        size = in_mask.bit_count()
        if size >= self.best_val:
            return
        if covered == self.full:
            # Propagation fixpoint: leaving every undecided vertex outside
            # is a feasible completion of exactly this size.
            self.best_val = size
            self.best_mask = in_mask
            return
        lb = size + self._pack_bound(out_mask, covered)
        if lb >= self.best_val:
            return
        if self.value_bound is not None and lb > self.value_bound:
            return
        u = self._branch_vertex(out_mask, covered)
        cand = self.closed[u] & ~out_mask
        excl = 0
        while cand:
            low = cand & -cand
            cand ^= low
            self._descend_best(in_mask | low, out_mask | excl)
            excl |= low
        return

    # -- phase 2: lexicographically smallest optimum -------------------------

    def lex_first(self, size: int, in0: int = 0, out0: int = 0) -> int | None:
        """First qualifying set of exactly ``size`` vertices in sorted-list
        lexicographic order (equivalently: prefer containing lower-numbered
        vertices)."""
        self.target = size
        return self._descend_lex(in0, out0)

    def _descend_lex(self, in_mask: int, out_mask: int) -> int | None:
        self.budget.tick()
        state = self._propagate(in_mask, out_mask)
        if state is None:
            return None
        in_mask, out_mask, covered = state
        size = in_mask.bit_count()
        if size > self.target:
            return None
        if covered == self.full:
            if size < self.target:
                raise AssertionError(
                    "feasible set below the proven optimum; solver bug"
                )
            return in_mask
        if size + self._pack_bound(out_mask, covered) > self.target:
            return None
        undec = self.full & ~in_mask & ~out_mask
        low = undec & -undec
        got = self._descend_lex(in_mask | low, out_mask)
        if got is not None:
            return got
        return self._descend_lex(in_mask, out_mask | low)

    # -- helpers -------------------------------------------------------------

    def greedy_cover(self, out_mask: int = 0) -> int | None:
        """Greedy dominating set avoiding ``out_mask`` vertices, as a mask."""
        closed = self.closed
        full = self.full
        cover = 0
        chosen = 0
        while cover != full:
            best_v = -1
            best_gain = 0
            m = full & ~out_mask & ~chosen
            while m:
                low = m & -m
                m ^= low
                v = low.bit_length() - 1
                gain = (closed[v] & ~cover).bit_count()
                if gain > best_gain:
                    best_gain, best_v = gain, v
            if best_v < 0:
                return None
            chosen |= 1 << best_v
            cover |= closed[best_v]
        return chosen


def _supports_mask(g: Graph) -> int:
    lm = leaf_mask(g)
    mask = 0
    for v in range(g.n):
        if g.adj[v] & lm:
            mask |= 1 << v
    return mask


def _strong_leaf_trim(g: Graph) -> int:
    """Leaves adjacent to strong supports (safe to leave out of any certified set)."""
    lm = leaf_mask(g)
    trim = 0
    m = lm
    while m:
        low = m & -m
        m ^= low
        support = g.adj[low.bit_length() - 1]
        if (g.adj[support.bit_length() - 1] & lm).bit_count() >= 2:
            trim |= low
    return trim


def _plain_component_value(
    g: Graph, budget: _Budget, forbid: int = 0
) -> tuple[int, int]:
    """Optimal plain-domination (value, mask) for one component.

    ``forbid`` pins vertices out of the set; callers must ensure a cover
    avoiding them exists.
    """
    search = _Search(g, certified=False, budget=budget)
    inc = search.greedy_cover(forbid)
    if inc is None:
        raise ValueError("forbidden vertices leave the graph uncoverable")
    return search.solve_best(0, forbid, inc.bit_count(), inc)


def _cer_component(
    g: Graph, cfg: SolverConfig, stats: SolveStats, budget: _Budget
) -> tuple[int, int, bool]:
    """(value, certificate mask, proven) for one connected component."""
    n = g.n
    value: int | None = None
    if cfg.use_closed_forms:
        hit = closed_form(g)
        if hit is not None:
            value = hit[1]
            stats.closed_form_hits += 1

    supports = _supports_mask(g) if cfg.use_reductions else 0
    stats.forced_vertices += supports.bit_count()
    trim = _strong_leaf_trim(g)
    inc_mask = g.full_mask & ~trim
    inc_val = inc_mask.bit_count()

    search = _Search(g, certified=True, budget=budget)
    proven = True
    if value is None:
        value_bound = None
        lm = leaf_mask(g)
        if cfg.use_reductions and n >= 3:
            # Plain-domination solve restricted to non-leaves: its optimum is
            # the true domination number and, repaired, a strong incumbent.
            try:
                gamma, d0 = _plain_component_value(g, budget, forbid=lm)
            except _NodeLimit:
                gamma = d0 = None
            if gamma is not None:
                s1 = sum(
                    1 for v in range(n) if (g.adj[v] & lm).bit_count() == 1
                )
                value_bound = min(gamma + s1, 2 * gamma, inc_val)
                if _certified(g, d0):
                    value = gamma  # gamma_cer >= gamma always, so this is optimal
                else:
                    d1 = d0
                    for s in _bits(d0):
                        out_nbrs = g.adj[s] & ~d0
                        if out_nbrs.bit_count() == 1 and (g.adj[s] & lm).bit_count() == 1:
                            d1 |= g.adj[s] & lm
                    if _certified(g, d1) and d1.bit_count() < inc_val:
                        inc_val = d1.bit_count()
                        inc_mask = d1
        if value is None:
            try:
                value, inc_mask = search.solve_best(
                    supports, 0, inc_val, inc_mask, value_bound
                )
            except _NodeLimit:
                return inc_mask.bit_count(), inc_mask, False

    try:
        cert = search.lex_first(value, supports, 0)
    except _NodeLimit:
        if inc_mask.bit_count() == value:
            return value, inc_mask, False
        return inc_mask.bit_count(), inc_mask, False
    if cert is None:
        raise AssertionError("no certificate at the proven optimum; solver bug")
    return value, cert, proven


def _combine_components(
    g: Graph,
    cfg: SolverConfig,
    component_solver,
) -> SolveResult:
    stats = SolveStats()
    budget = _Budget(cfg.node_limit)
    parts = components(g)
    if len(parts) > 1:
        stats.components_split = len(parts)
    total = 0
    cert = 0
    proven = True
    for vs, comp in parts:
        order = vs.to_list()
        val, mask, ok = component_solver(comp, cfg, stats, budget)
        total += val
        for i in _bits(mask):
            cert |= 1 << order[i]
        proven = proven and ok
    stats.nodes_expanded = budget.used
    return SolveResult(total, VertexSet(g.n, cert), stats, proven)


def gamma_cer_solve(g: Graph, cfg: SolverConfig | None = None) -> SolveResult:
    """Exact certified domination number with a deterministic certificate."""
    cfg = cfg or SolverConfig()
    res = _combine_components(g, cfg, _cer_component)
    # A set of n-1 vertices is never certified: its lone outside vertex would
    # leave each of its dominators with exactly one outside neighbour.  Every
    # returned certificate is certified, so this holds even under node limits.
    assert res.value != g.n - 1, "certified value n-1 is impossible"
    return res


def _plain_component(
    g: Graph, cfg: SolverConfig, stats: SolveStats, budget: _Budget
) -> tuple[int, int, bool]:
    search = _Search(g, certified=False, budget=budget)
    inc_mask = search.greedy_cover()
    inc_val = inc_mask.bit_count()
    try:
        value, inc_mask = search.solve_best(0, 0, inc_val, inc_mask)
    except _NodeLimit:
        return inc_val, inc_mask, False
    try:
        cert = search.lex_first(value, 0, 0)
    except _NodeLimit:
        return value, inc_mask, False
    if cert is None:
        raise AssertionError("no certificate at the proven optimum; solver bug")
    return value, cert, True


def gamma_solve(g: Graph, cfg: SolverConfig | None = None) -> SolveResult:
    """Exact domination number with a deterministic certificate."""
    cfg = cfg or SolverConfig()
    return _combine_components(g, cfg, _plain_component)


# ---------------------------------------------------------------------------
# Dominating / 2-dominating pairs
# ---------------------------------------------------------------------------

def find_dd2_pair(
    g: Graph,
    max_d_size: int | None = None,
    *,
    max_n: int = ORACLE_BOUND_DEFAULT,
) -> DD2Pair | None:
    """A disjoint (dominating, 2-dominating) pair, minimizing |D|.

    When the graph has minimum degree one or more and no weak supports, the
    pair is built directly: a minimum certified dominating set is a minimum
    dominating set all of whose members are illuminated, so its complement
    2-dominates.  Otherwise dominating sets are enumerated smallest first
    (refused above ``max_n``).  With ``max_d_size`` set, any pair with
    |D| <= max_d_size is returned, or None.
    """
    n = g.n
    if n == 0:
        return DD2Pair(VertexSet(0, 0), VertexSet(0, 0))
    lm = leaf_mask(g)
    if min_degree(g) >= 1 and not any(
        (g.adj[v] & lm).bit_count() == 1 for v in range(n)
    ):
        res = gamma_cer_solve(g)
        pair = DD2Pair(res.certificate, res.certificate.complement())
        if _dominates(g, pair.d.mask) and _is_2dom_mask(g, pair.d2.mask):
            return None if max_d_size is not None and res.value > max_d_size else pair
    if n > max_n:
        raise SizeLimitError(
            f"exhaustive pair search refuses n={n} > bound {max_n}"
        )
    closed = [g.adj[v] | 1 << v for v in range(n)]
    adj = g.adj
    full = g.full_mask
    top = n if max_d_size is None else min(max_d_size, n)
    for k in range(top + 1):
        for comb in combinations(range(n), k):
            cover = 0
            mask = 0
            for v in comb:
                cover |= closed[v]
                mask |= 1 << v
            if cover != full:
                continue
            # The complement 2-dominates iff every chosen vertex keeps at
            # least two neighbours outside the dominating side.
            ok = True
            for v in comb:
                if (adj[v] & ~mask).bit_count() < 2:
                    ok = False
                    break
            if ok:
                return DD2Pair(VertexSet(n, mask), VertexSet(n, full & ~mask))
    return None


def _is_2dom_mask(g: Graph, mask: int) -> bool:
    m = g.full_mask & ~mask
    while m:
        low = m & -m
        m ^= low
        if (g.adj[low.bit_length() - 1] & mask).bit_count() < 2:
            return False
    return True
