"""Exhaustive small-n censuses, counting-bound checks, and sampling statistics.

Two enumeration routes exist on purpose.  The fast route walks matching
tuples over the canonical white set 1..n/2 and converts class counts to
labelled counts on [1..n] by the orbit formula

    labelled(class) = C(n, n/2) * sum over canonical G in class of 2^(-c(G))

where c(G) is the number of connected components: a labelled graph with c
components admits 2^c (white-set, matching-tuple) presentations, spread
over C(n, n/2) white-set choices.  The slow route enumerates genuinely
labelled tuples of perfect matchings of [1..n] with no symmetry reasoning
at all and tallies them directly; it is the ground truth the fast route
must reproduce.  Disagreement between the two is the primary bug detector.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

from .constructions import SeedLike, _rng, build_manifold, random_construction_params
from .dipoles import melonic_reduce
from .errors import BadParams, BudgetExceeded, NotBipartite
from .graph import (
    ColourfulGraph,
    complex_vertex_count,
    count_cycles,
    from_coloured_edges,
    genus_of_residue,
    has_property_P,
    is_connected,
    residues,
)
from .verdicts import Status, euler_poincare_check, is_manifold, is_sphere, lemma1_witness, lemma2_witness

CLASSES = ("all", "propertyP", "manifold", "sphere_yes", "sphere_unknown", "melonic")

DEFAULT_BUDGET = 10**8


def tuple_count(d: int, n: int) -> int:
    """Matching tuples over the canonical white set: (n/2)!^(d+1)."""
    return math.factorial(n // 2) ** (d + 1)


def classify(G: ColourfulGraph) -> FrozenSet[str]:
    """Class names satisfied by G; sphere classes apply to connected graphs."""
    names = {"all"}
    if has_property_P(G):
        names.add("propertyP")
    if is_manifold(G).status is Status.YES:
        names.add("manifold")
    if is_connected(G):
        if melonic_reduce(G).reached_dipole:
            names.add("melonic")
            names.add("sphere_yes")
        else:
            status = is_sphere(G).status
            if status is Status.YES:
                names.add("sphere_yes")
            elif status is Status.UNKNOWN:
                names.add("sphere_unknown")
    return frozenset(names)


@dataclass
class CensusReport:
    """Canonical-form class counts with component breakdown and labelled totals."""

    d: int
    n: int
    counts: Dict[str, int]
    by_components: Dict[str, Dict[int, int]]

    @property
    def labelled_counts(self) -> Dict[str, int]:
        choose = math.comb(self.n, self.n // 2)
        out = {}
        for cls in CLASSES:
            total = sum(
                Fraction(cnt, 2**comps)
                for comps, cnt in self.by_components.get(cls, {}).items()
            ) * choose
            assert total.denominator == 1, "orbit weights must sum to an integer"
            out[cls] = int(total)
        return out

    def rows(self) -> List[str]:
        """Stable machine-readable rows: class,canonical,labelled."""
        labelled = self.labelled_counts
        return [
            f"{cls},{self.counts.get(cls, 0)},{labelled[cls]}" for cls in CLASSES
        ]


def enumerate_census(
    d: int,
    n: int,
    classifier: Callable[[ColourfulGraph], FrozenSet[str]] = classify,
    budget: int = DEFAULT_BUDGET,
    shard: Optional[Tuple[int, int]] = None,
    emit: Optional[Callable[[ColourfulGraph, FrozenSet[str]], None]] = None,
) -> CensusReport:
    """Walk all matching tuples over the canonical white set and classify.

    shard=(index, count) keeps only tuples whose first matching has
    lexicographic position congruent to index mod count; shard reports
    merge by adding counts.
    """
    if n % 2 or n < 2:
        raise BadParams(f"n must be even and >= 2, got {n}")
    total = tuple_count(d, n)
    if total > budget:
        raise BudgetExceeded(
            f"(n/2)!^(d+1) = {total} exceeds budget {budget}; "
            "raise the budget or shard the run"
        )
    half = n // 2
    perms = sorted(itertools.permutations(range(half + 1, n + 1)))
    counts: Dict[str, int] = {cls: 0 for cls in CLASSES}
    by_components: Dict[str, Dict[int, int]] = {cls: {} for cls in CLASSES}

    firsts = (
        [p for i, p in enumerate(perms) if i % shard[1] == shard[0]]
        if shard
        else perms
    )
    for first in firsts:
        for rest in itertools.product(perms, repeat=d):
            G = ColourfulGraph(d, (first,) + rest)
            names = classifier(G)
            comps = len(residues(G, G.colours).components)
            for cls in names:
                counts[cls] += 1
                bc = by_components[cls]
                bc[comps] = bc.get(comps, 0) + 1
            if emit is not None:
                emit(G, names)
    return CensusReport(d, n, counts, by_components)


def all_perfect_matchings(n: int) -> List[Tuple[int, ...]]:
    """Perfect matchings of [1..n] as involution tuples (partner of v at v-1)."""
    if n % 2:
        raise BadParams(f"n must be even, got {n}")
    out: List[Tuple[int, ...]] = []
    partner = [0] * (n + 1)

    def rec():
        free = [v for v in range(1, n + 1) if partner[v] == 0]
        if not free:
            out.append(tuple(partner[1:]))
            return
        v = free[0]
        for u in free[1:]:
            partner[v], partner[u] = u, v
            rec()
            partner[v], partner[u] = 0, 0

    rec()
    return out


@dataclass
class LabelledCensus:
    """Direct tally over labelled matching tuples of [1..n] (ground truth)."""

    d: int
    n: int
    counts: Dict[str, int]
    bipartite_tuples: int
    total_tuples: int


def enumerate_labelled(
    d: int,
    n: int,
    classifier: Callable[[ColourfulGraph], FrozenSet[str]] = classify,
    budget: int = DEFAULT_BUDGET,
) -> LabelledCensus:
    """Naive labelled enumeration: every tuple of perfect matchings of [1..n].

    No symmetry shortcuts: each tuple is kept iff the union is bipartite,
    then relabelled canonically only to evaluate the (label-invariant)
    classifier.  Counts are raw tallies of labelled tuples.
    """
    pms = all_perfect_matchings(n)
    total = len(pms) ** (d + 1)
    if total > budget:
        raise BudgetExceeded(
            f"matchings^(d+1) = {total} exceeds budget {budget}"
        )
    counts: Dict[str, int] = {cls: 0 for cls in CLASSES}
    cache: Dict[ColourfulGraph, FrozenSet[str]] = {}
    bipartite = 0
    for tup in itertools.product(pms, repeat=d + 1):
        edges = [
            (v, m[v - 1], c)
            for c, m in enumerate(tup, start=1)
            for v in range(1, n + 1)
            if v < m[v - 1]
        ]
        try:
            G = from_coloured_edges(d, n, edges)
        except NotBipartite:
            continue
        bipartite += 1
        names = cache.get(G)
        if names is None:
            names = classifier(G)
            cache[G] = names
        for cls in names:
            counts[cls] += 1
    return LabelledCensus(d, n, counts, bipartite, total)


@dataclass
class LemmaBoundsReport:
    """Exhaustive slack audit of the component-count inequalities."""

    d: int
    n: int
    graphs: int
    checked_3: int
    violations_3: int
    min_slack_3: Optional[Fraction]
    extremal_3: Optional[Tuple[ColourfulGraph, Tuple[int, ...]]]
    identity_mismatches: int
    checked_5: int = 0
    violations_5: int = 0
    min_slack_5: Optional[Fraction] = None
    extremal_5: Optional[Tuple[ColourfulGraph, Tuple[int, ...]]] = None


def verify_lemma_bounds(
    d: int, n: int, budget: int = DEFAULT_BUDGET, check_5: bool = False
) -> LemmaBoundsReport:
    """Audit the pair and triple component-count bounds over a full census.

    For every canonical graph and every 3-subset I whose residue components
    all have genus 0 (decided by the embedding route), the minimized
    kappa(i,j) - kappa(I) must be at most n/6.  The alternating identity
    kappa^(2) = 2 kappa^(3) + n/2 is evaluated by the independent counting
    route and must hold exactly on the same (G, I); mismatches in either
    direction are counted.  check_5 runs the 5-subset bound when d >= 4.
    """
    if n % 2 or n < 2:
        raise BadParams(f"n must be even and >= 2, got {n}")
    total = tuple_count(d, n)
    if total > budget:
        raise BudgetExceeded(f"(n/2)!^(d+1) = {total} exceeds budget {budget}")
    half = n // 2
    perms = sorted(itertools.permutations(range(half + 1, n + 1)))
    report = LemmaBoundsReport(d, n, 0, 0, 0, None, None, 0)
    for tup in itertools.product(perms, repeat=d + 1):
        G = ColourfulGraph(d, tup)
        report.graphs += 1
        for I in itertools.combinations(range(1, d + 2), 3):
            w = lemma1_witness(G, I)
            if euler_poincare_check(G, I) != w.hypothesis_met:
                report.identity_mismatches += 1
            if not w.hypothesis_met:
                continue
            report.checked_3 += 1
            if w.slack < 0:
                report.violations_3 += 1
            if report.min_slack_3 is None or w.slack < report.min_slack_3:
                report.min_slack_3 = w.slack
                report.extremal_3 = (G, I)
        if check_5 and d >= 4:
            for I in itertools.combinations(range(1, d + 2), 5):
                w = lemma2_witness(G, I)
                if not w.hypothesis_met:
                    continue
                report.checked_5 += 1
                if w.slack < 0:
                    report.violations_5 += 1
                if report.min_slack_5 is None or w.slack < report.min_slack_5:
                    report.min_slack_5 = w.slack
                    report.extremal_5 = (G, I)
    return report


def _check_involution(m: Sequence[int], n: int, name: str) -> Tuple[int, ...]:
    m = tuple(m)
    if len(m) != n:
        raise BadParams(f"{name} must list {n} partners, got {len(m)}")
    for v in range(1, n + 1):
        p = m[v - 1]
        if not 1 <= p <= n or p == v or m[p - 1] != v:
            raise BadParams(f"{name} is not a perfect matching at vertex {v}")
    return m


def _union_components(ms: Sequence[Sequence[int]], n: int) -> int:
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for m in ms:
        for v in range(1, n + 1):
            a, b = find(v), find(m[v - 1])
            if a != b:
                parent[a] = b
    return len({find(v) for v in range(1, n + 1)})


def _pair_cycles(m1: Sequence[int], m2: Sequence[int], n: int) -> int:
    """Cycles of the union of two perfect matchings of [1..n]."""
    return _union_components((m1, m2), n)


def _is_bipartite_union(ms: Sequence[Sequence[int]], n: int) -> bool:
    colour = [None] * (n + 1)
    for start in range(1, n + 1):
        if colour[start] is not None:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for m in ms:
                u = m[v - 1]
                if colour[u] is None:
                    colour[u] = colour[v] ^ 1
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return False
    return True


@dataclass
class ExtensionBoundReport:
    """Planar third-matching extensions of a 2-matching base, bucketed by k."""

    n: int
    base_components: int
    buckets: Dict[int, int]
    bounds: Dict[int, int]
    violations: List[int]
    extensions_tried: int
    planar_extensions: int


def verify_extension_bound(
    m1: Sequence[int], m2: Sequence[int], max_n: int = 10
) -> ExtensionBoundReport:
    """Count planar 3-colourful completions of two matchings, check the bound.

    The base C is the union of two perfect matchings of [1..n] with c
    components.  Every third matching making the union bipartite gives a
    3-colourful graph; it counts as planar when all its components embed
    with genus 0, detected by the exact cycle-count identity
    total bicoloured cycles == 2k + n/2 (k components of the extension).
    Each bucket count must be at most 2^(5n) * n^(c-k).
    """
    n = len(m1)
    if n > 2 * max_n:
        raise BudgetExceeded(f"n={n} above the small-instance limit {2 * max_n}")
    m1 = _check_involution(m1, n, "m1")
    m2 = _check_involution(m2, n, "m2")
    c = _union_components((m1, m2), n)
    buckets: Dict[int, int] = {}
    tried = planar = 0
    for m3 in all_perfect_matchings(n):
        tried += 1
        if not _is_bipartite_union((m1, m2, m3), n):
            continue
        k = _union_components((m1, m2, m3), n)
        cycles = (
            _pair_cycles(m1, m2, n)
            + _pair_cycles(m1, m3, n)
            + _pair_cycles(m2, m3, n)
        )
        if cycles == 2 * k + n // 2:
            planar += 1
            buckets[k] = buckets.get(k, 0) + 1
    bounds = {k: 2 ** (5 * n) * n ** (c - k) for k in buckets}
    violations = [k for k, cnt in buckets.items() if cnt > bounds[k]]
    return ExtensionBoundReport(n, c, buckets, bounds, violations, tried, planar)


def harmonic_number(k: int) -> float:
    return float(sum(Fraction(1, i) for i in range(1, k + 1)))


def compose_inverse(sigma: Sequence[int], tau: Sequence[int]) -> Tuple[int, ...]:
    """One-line form of sigma followed by tau^(-1)."""
    k = len(sigma)
    inv = [0] * k
    for i, t in enumerate(tau, start=1):
        inv[t - 1] = i
    return tuple(inv[s - 1] for s in sigma)


def mean_cycles_uniform(k: int, samples: int, seed: SeedLike = 0) -> float:
    """Direct simulation: mean cycle count of sigma tau^(-1), both uniform."""
    rng = _rng(seed)
    base = list(range(1, k + 1))
    total = 0
    for _ in range(samples):
        sigma = base[:]
        tau = base[:]
        rng.shuffle(sigma)
        rng.shuffle(tau)
        total += count_cycles(compose_inverse(sigma, tau))
    return total / samples


@dataclass(frozen=True)
class VnRow:
    k: int
    n: int
    samples: int
    mean_v: float
    median_v: float
    p90_v: float
    mean_v_over_n: float
    mean_cycles_valid: float
    mean_cycles_uniform: float
    harmonic_k: float
    n_over_log_n: float


@dataclass(frozen=True)
class StatsReport:
    d: int
    samples: int
    seed: int
    rows: Tuple[VnRow, ...]

    def table_rows(self) -> List[str]:
        out = ["k,n,mean_V,median_V,p90_V,mean_V_over_n,cycles_valid,cycles_uniform,H_k,n_over_log_n"]
        for r in self.rows:
            out.append(
                f"{r.k},{r.n},{r.mean_v:.4f},{r.median_v:.1f},{r.p90_v:.1f},"
                f"{r.mean_v_over_n:.5f},{r.mean_cycles_valid:.4f},"
                f"{r.mean_cycles_uniform:.4f},{r.harmonic_k:.4f},{r.n_over_log_n:.2f}"
            )
        return out


def vn_experiment(
    ks: Sequence[int], samples: int, seed: int = 0, d: int = 3
) -> StatsReport:
    """Sample glued graphs, record complex vertex counts and cycle statistics.

    Built graphs need valid (sigma, tau) pairs (parity-preserving when d is
    odd), so the per-row cycle mean over those pairs is reported separately
    from the unrestricted-uniform simulation mean that tracks H_k.
    """
    import numpy as np

    rng = _rng(seed)
    rows = []
    for k in ks:
        vs = []
        cycles_valid = []
        for _ in range(samples):
            params = random_construction_params(d, k, rng)
            G = build_manifold(params)
            vs.append(complex_vertex_count(G))
            cycles_valid.append(
                count_cycles(compose_inverse(params.sigma, params.tau))
            )
        arr = np.asarray(vs, dtype=float)
        n = 4 * d * k
        rows.append(
            VnRow(
                k=k,
                n=n,
                samples=samples,
                mean_v=float(arr.mean()),
                median_v=float(np.median(arr)),
                p90_v=float(np.percentile(arr, 90)),
                mean_v_over_n=float(arr.mean() / n),
                mean_cycles_valid=float(np.mean(cycles_valid)),
                mean_cycles_uniform=mean_cycles_uniform(k, samples, rng),
                harmonic_k=harmonic_number(k),
                n_over_log_n=n / math.log(n),
            )
        )
    return StatsReport(d, samples, seed if isinstance(seed, int) else -1, tuple(rows))
