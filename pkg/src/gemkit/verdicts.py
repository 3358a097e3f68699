"""Sphere and manifold verdicts, exact where possible, three-valued otherwise.

Exactness boundaries: genus decides everything in dimensions 1 and 2, and
decides d=3 manifoldness (a 4-colourful graph encodes a closed 3-manifold
exactly when every 3-coloured residue component has genus 0).  Above that
the implications are one-way: a melonic reduction certifies a sphere, a
homology obstruction certifies a non-sphere or non-manifold, and anything
in between stays Unknown rather than guessing.  No is only ever emitted
with a machine-checkable certificate (a genus witness, an exact Betti
vector, or a failed component-count identity).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

from .dipoles import melonic_reduce
from .errors import (
    Disconnected,
    InvalidColourSet,
    NotAComponent,
    OddDimension,
    PreconditionFailed,
)
from .graph import (
    ColourfulGraph,
    ColourSetLike,
    _check_colours,
    genus_of_residue,
    is_connected,
    kappa_r,
    residue_subgraph,
    residues,
)
from .homology import betti_numbers, order_complex, sphere_vector


class Status(Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"


_EXIT = {Status.YES: 0, Status.NO: 1, Status.UNKNOWN: 2}


@dataclass(frozen=True)
class TopologyVerdict:
    """Three-valued answer with a machine-checkable certificate.

    Yes and No always carry a certificate (reduction trace, genus witness,
    Betti vector, identity failure); Unknown carries the reason the
    semi-decision gave up.
    """

    status: Status
    certificate: str

    @property
    def exit_code(self) -> int:
        return _EXIT[self.status]

    def __bool__(self) -> bool:
        return self.status is Status.YES


def _yes(cert: str) -> TopologyVerdict:
    return TopologyVerdict(Status.YES, cert)


def _no(cert: str) -> TopologyVerdict:
    return TopologyVerdict(Status.NO, cert)


def _unknown(reason: str) -> TopologyVerdict:
    return TopologyVerdict(Status.UNKNOWN, reason)


def _positive_genus_witness(
    G: ColourfulGraph,
) -> Optional[Tuple[Tuple[int, ...], int, int]]:
    """First 3-coloured residue component of positive genus, or None."""
    for I in itertools.combinations(range(1, G.d + 2), 3):
        part = residues(G, I)
        for comp in part.components:
            emb = genus_of_residue(G, I, comp)
            if emb.genus > 0:
                return (I, comp[0], emb.genus)
    return None


def is_sphere(G: ColourfulGraph) -> TopologyVerdict:
    """Does the connected graph encode a d-sphere?

    d <= 2 is exact (cycle / genus).  For d >= 3, a successful dipole
    reduction answers Yes; a positive-genus 3-residue or a non-sphere
    Betti vector answers No; otherwise Unknown.
    """
    if not is_connected(G):
        raise Disconnected("sphere verdicts apply to connected graphs")
    if G.d == 1:
        return _yes("connected 2-colourful graph is a single cycle (circle)")
    if G.d == 2:
        comp = tuple(range(1, G.n + 1))
        emb = genus_of_residue(G, (1, 2, 3), comp)
        if emb.genus == 0:
            return _yes("genus witness ((1,2,3), 1, 0)")
        return _no(f"genus witness ((1,2,3), 1, {emb.genus})")
    trace = melonic_reduce(G)
    if trace.reached_dipole:
        moves = trace.moves_text() or "(already terminal)"
        return _yes(f"melonic trace {moves}")
    witness = _positive_genus_witness(G)
    if witness is not None:
        I, v, g = witness
        return _no(f"genus witness ({I}, {v}, {g})")
    K = order_complex(G, range(1, G.d + 2))
    b = betti_numbers(K)
    if b.betti != sphere_vector(G.d):
        return _no(f"betti {b.betti}")
    return _unknown(
        f"greedy reduction stuck at n={trace.terminal.n}; "
        f"homology matches a sphere (betti {b.betti})"
    )


def is_manifold(G: ColourfulGraph) -> TopologyVerdict:
    """Does the graph encode a closed d-manifold (per component)?

    Exact for d <= 3.  For d >= 4: Yes when all residues of sizes 3..d are
    certified spheres (genus at size 3, dipole reduction above); No when a
    homology-sphere necessary condition fails; Unknown otherwise.
    """
    if G.d <= 2:
        return _yes(f"every {G.d + 1}-colourful graph encodes a closed {G.d}-manifold")
    witness = _positive_genus_witness(G)
    if witness is not None:
        I, v, g = witness
        return _no(f"genus witness ({I}, {v}, {g})")
    if G.d == 3:
        return _yes("every 3-residue component has genus 0")

    # necessary component-count identity on even-dimensional residues
    for m in range(3, G.d + 1, 2):
        for I in itertools.combinations(range(1, G.d + 2), m):
            if not euler_poincare_check(G, I):
                lhs = sum(
                    (-1) ** r * kappa_r(G, I, r) for r in range(m)
                )
                rhs = 2 * len(residues(G, I).components)
                return _no(
                    f"component-count identity fails on I={I}: "
                    f"alternating sum {lhs} != {rhs}"
                )

    stuck = None
    for size in range(4, G.d + 1):
        for I in itertools.combinations(range(1, G.d + 2), size):
            part = residues(G, I)
            for comp in part.components:
                sub = residue_subgraph(G, I, comp)
                if not melonic_reduce(sub).reached_dipole:
                    stuck = (I, comp[0])
                    break
            if stuck:
                break
        if stuck:
            break
    if stuck is None:
        return _yes(
            f"all residues of sizes 3..{G.d} certified spheres "
            "(genus 0 at size 3, dipole reduction above)"
        )

    if G.d >= 5:
        for I in itertools.combinations(range(1, G.d + 2), 5):
            part = residues(G, I)
            for comp in part.components:
                v = is_rational_homology_sphere(G, I, comp)
                if v.status is Status.NO:
                    return _no(
                        f"residue I={I}, component of vertex {comp[0]}: "
                        f"{v.certificate}"
                    )
    return _unknown(
        f"residue I={stuck[0]}, component of vertex {stuck[1]}: reduction "
        "stuck and no homology obstruction found"
    )


def is_rational_homology_sphere(
    G: ColourfulGraph, I: ColourSetLike, component
) -> TopologyVerdict:
    """Exact: does the residue component have the rational homology of a sphere?

    A single colour gives two isolated vertices, the 0-sphere, directly;
    two colours give a circle; three are decided by genus; above that the
    Betti vector of the order complex decides.
    """
    cs = _check_colours(G, I)
    size = len(cs)
    if size == 0:
        raise InvalidColourSet("need at least one colour")
    if size <= 2:
        # validate the component; the answer is structural
        comp = tuple(sorted(component))
        part = residues(G, cs)
        idx = part.component_of.get(comp[0]) if comp else None
        if idx is None or part.components[idx] != comp:
            raise NotAComponent(
                f"{comp} is not a component of the {tuple(cs)}-residue"
            )
        if size == 1:
            return _yes("single edge: two points, the 0-sphere")
        return _yes("bicoloured cycle: a circle")
    if size == 3:
        emb = genus_of_residue(G, cs, component)
        if emb.genus == 0:
            return _yes(f"genus witness ({tuple(cs)}, {min(component)}, 0)")
        return _no(f"genus witness ({tuple(cs)}, {min(component)}, {emb.genus})")
    sub = residue_subgraph(G, cs, component)
    K = order_complex(sub, range(1, size + 1))
    b = betti_numbers(K)
    if b.betti == sphere_vector(size - 1):
        return _yes(f"betti {b.betti}")
    return _no(f"betti {b.betti}")


def euler_poincare_check(G: ColourfulGraph, I: ColourSetLike) -> bool:
    """Alternating component-count identity on even-dimensional residues.

    For |I| = m with m odd (the encoded complex has even dimension m-1),
    checks sum_{r=0}^{m-1} (-1)^r kappa_r(I) == 2 kappa(I).  Necessary for
    every component of G_I to be a rational homology sphere.
    """
    cs = _check_colours(G, I)
    m = len(cs)
    if m % 2 == 0:
        raise OddDimension(
            f"identity applies to odd |I| (even complex dimension); got |I|={m}"
        )
    lhs = sum((-1) ** r * kappa_r(G, cs, r) for r in range(m))
    rhs = 2 * len(residues(G, cs).components)
    return lhs == rhs


@dataclass(frozen=True)
class LemmaWitness:
    """Minimizing colour tuple for a component-count inequality.

    value is the minimized difference of component counts, bound the
    inequality's right side; slack = bound - value is guaranteed >= 0 when
    hypothesis_met is true.
    """

    indices: Tuple[int, ...]
    value: int
    bound: Fraction
    slack: Fraction
    hypothesis_met: bool


def lemma1_witness(
    G: ColourfulGraph, I: ColourSetLike, strict: bool = False
) -> LemmaWitness:
    """Minimize kappa(i,j) - kappa(I) over pairs in a 3-set; bound n/6.

    Hypothesis: every component of G_I has genus 0.  With strict=True a
    failed hypothesis raises; otherwise the raw minimum is returned with
    hypothesis_met=False.
    """
    cs = _check_colours(G, I)
    if len(cs) != 3:
        raise InvalidColourSet(f"need |I|=3, got {len(cs)}")
    part = residues(G, cs)
    hypothesis = all(
        genus_of_residue(G, cs, comp).genus == 0 for comp in part.components
    )
    if strict and not hypothesis:
        raise PreconditionFailed("a component of G_I has positive genus")
    k_full = len(part.components)
    best = None
    for i, j in itertools.combinations(tuple(cs), 2):
        value = G.cycles_of_pair(i, j) - k_full
        if best is None or value < best[1]:
            best = ((i, j), value)
    bound = Fraction(G.n, 6)
    return LemmaWitness(best[0], best[1], bound, bound - best[1], hypothesis)


def lemma2_witness(
    G: ColourfulGraph, I: ColourSetLike, strict: bool = False
) -> LemmaWitness:
    """Minimize kappa(i,j) - kappa(i,j,k) over triples in a 5-set; bound 3n/20.

    Hypothesis: every component of G_I has the rational homology of a
    4-sphere.  Same strict/flagged behaviour as the 3-set witness.
    """
    cs = _check_colours(G, I)
    if len(cs) != 5:
        raise InvalidColourSet(f"need |I|=5, got {len(cs)}")
    part = residues(G, cs)
    hypothesis = all(
        is_rational_homology_sphere(G, cs, comp).status is Status.YES
        for comp in part.components
    )
    if strict and not hypothesis:
        raise PreconditionFailed("a component of G_I is not a rational homology sphere")
    best = None
    for i, j in itertools.combinations(tuple(cs), 2):
        k_pair = G.cycles_of_pair(i, j)
        for k in tuple(cs):
            if k == i or k == j:
                continue
            k_triple = len(residues(G, (i, j, k)).components)
            value = k_pair - k_triple
            if best is None or value < best[1]:
                best = ((i, j, k), value)
    bound = Fraction(3 * G.n, 20)
    return LemmaWitness(best[0], best[1], bound, bound - best[1], hypothesis)
