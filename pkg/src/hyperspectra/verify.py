"""Registry of extremal spectral-radius claims with numeric verification.

Each registry entry re-checks one catalogued ordering or inequality for
linear uniform hypergraphs at concrete desk-scale parameters: it builds
the competing instances (exhaustively where feasible, from structured
candidate families otherwise), computes their spectral radii with
certified residuals, and asserts the claimed comparisons with explicit
margins.  ``verify`` returns a :class:`~hyperspectra.report.VerificationReport`;
``list_registry`` feeds the CLI's ``--list``.

Entries whose claims carry parameter thresholds refuse to assert anything
below threshold: the run is reported as ``hypotheses-unmet`` instead of
pass or fail.  Claims whose hypothesis is itself a spectral condition
(the ratio lemmas) check that condition numerically first and bail out
the same way when it does not hold.

Scan strategy
-------------
Exhaustive enumeration is used up to ``FULL_ENUMERATION_MAX_K`` edges.
Beyond that the runners switch to structured candidate families
(bundle-placement sweeps on paths, cycles and the small multicyclic
skeletons); every such restriction is recorded in the report notes.
Diameter-4 hypertrees get a special exact treatment: their isomorphism
classes are in bijection with (hub bundle, branch multiset) profiles, and
each profile admits a small equitable quotient whose dominant eigenvalue
equals the full one, so scans over tens of thousands of shapes stay fast.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from .core import Hypergraph, are_isomorphic
from .enumeration import (
    DEFAULT_BUDGET,
    FULL_ENUMERATION_MAX_K,
    BudgetExceededError,
    diameter_four_from_profile,
    diameter_four_profiles,
    enumerate_hypertrees,
    enumerate_unicyclic,
)
from .families import (
    attach_path,
    attach_pendant_edges,
    caterpillar,
    cycle_junction,
    cycle_with_pendant_path,
    cycle_with_pendants,
    fused_triangles,
    fused_triangles_two_sites,
    hyperstar,
    interlocking_cycles_example,
    loose_cycle,
    loose_path,
    path_junction,
    theta_hypergraph,
    triple_fused_triangles,
)
from .formulas import (
    fused_triangles_char_poly,
    fused_triangles_root_bounds,
    hypertree_even_diameter_bound,
    loose_cycle_radius,
    poly_radius,
    theta_radius_bound,
    triple_fused_triangles_char_poly,
    triple_fused_triangles_root_bound,
    unicyclic_radius_bounds,
    unicyclic_second_bound,
)
from .report import (
    RESIDUAL_LIMIT,
    STATUS_FAIL,
    STATUS_PASS,
    STATUS_UNMET,
    InequalityRecord,
    InstanceRecord,
    VerificationReport,
)
from .spectral import full_spectrum, spectral_radius

__all__ = [
    "DEFAULT_TOL",
    "TheoremEntry",
    "REGISTRY",
    "list_registry",
    "verify",
]

#: Default strictness margin: a strict inequality only counts as verified
#: when it holds by more than this.
DEFAULT_TOL = 1e-9

#: Slack for comparisons between entries of a computed Perron vector,
#: which are themselves only iteration-accurate.  Componentwise chains
#: are asserted up to this slack rather than up to the strictness margin.
COMPONENT_SLACK = 1e-10

#: Iteration tolerance for every radius that lands in a report; keeps the
#: certified residual below the report-level ceiling.
_PRECISE_TOL = 1e-13


class _HypothesesUnmet(Exception):
    """Raised by a runner when a value-level hypothesis fails."""


@dataclass(frozen=True)
class TheoremEntry:
    theorem_id: str
    summary: str
    defaults: dict
    hypotheses: Callable[[dict], str | None]
    runner: Callable[[dict, "_Run"], None]


REGISTRY: dict[str, TheoremEntry] = {}


def _register(theorem_id: str, summary: str, defaults: dict,
              hypotheses: Callable[[dict], str | None]):
    def wrap(fn: Callable[[dict, "_Run"], None]):
        REGISTRY[theorem_id] = TheoremEntry(
            theorem_id=theorem_id,
            summary=summary,
            defaults=defaults,
            hypotheses=hypotheses,
            runner=fn,
        )
        return fn

    return wrap


def list_registry() -> list[dict]:
    """Registry contents for display: id, summary, default parameters."""
    return [
        {
            "theorem_id": entry.theorem_id,
            "summary": entry.summary,
            "defaults": dict(entry.defaults),
        }
        for entry in REGISTRY.values()
    ]


class _Run:
    """Mutable state shared by one verification run."""

    def __init__(self, tol: float, budget: int) -> None:
        self.tol = tol
        self.budget = budget
        self.spent = 0
        self.instances: list[InstanceRecord] = []
        self.inequalities: list[InequalityRecord] = []
        self.notes: list[str] = []
        self.witnesses: dict[str, Hypergraph] = {}
        self._seen: set[str] = set()

    def spend(self, amount: int = 1) -> None:
        self.spent += amount
        if self.spent > self.budget:
            raise BudgetExceededError(
                f"verification budget of {self.budget} candidate evaluations exceeded"
            )

    def note(self, text: str) -> None:
        self.notes.append(text)

    def instance(self, label: str, h: Hypergraph) -> float:
        """Record ``h`` with a certified-precision radius; returns the radius."""
        res = spectral_radius(h, tol=_PRECISE_TOL)
        if res.residual > RESIDUAL_LIMIT:
            raise RuntimeError(
                f"residual {res.residual:.3e} exceeds {RESIDUAL_LIMIT:g} on {label}"
            )
        if label not in self._seen:
            self._seen.add(label)
            self.instances.append(
                InstanceRecord(
                    label=label,
                    m=h.m,
                    k=h.k,
                    n=h.n,
                    radius=res.value,
                    residual=res.residual,
                    iterations=res.iterations,
                )
            )
            self.witnesses[label] = h
        return res.value

    def less(self, lhs: str, rhs: str, lhs_value: float, rhs_value: float,
             *, slack: float | None = None) -> None:
        """Assert ``lhs_value < rhs_value``.

        Without ``slack`` the margin must beat the strictness tolerance;
        with ``slack`` (componentwise mode) any non-violation beyond the
        slack is accepted.
        """
        margin = rhs_value - lhs_value
        floor = -slack if slack is not None else self.tol
        self.inequalities.append(
            InequalityRecord(
                lhs=lhs,
                rhs=rhs,
                lhs_value=lhs_value,
                rhs_value=rhs_value,
                relation="<",
                margin=margin,
                holds=margin > floor,
            )
        )

    def less_equal(self, lhs: str, rhs: str, lhs_value: float, rhs_value: float) -> None:
        margin = rhs_value - lhs_value
        self.inequalities.append(
            InequalityRecord(
                lhs=lhs,
                rhs=rhs,
                lhs_value=lhs_value,
                rhs_value=rhs_value,
                relation="<=",
                margin=margin,
                holds=margin >= -RESIDUAL_LIMIT,
            )
        )

    def equal(self, lhs: str, rhs: str, lhs_value: float, rhs_value: float,
              *, atol: float) -> None:
        gap = abs(lhs_value - rhs_value)
        self.inequalities.append(
            InequalityRecord(
                lhs=lhs,
                rhs=rhs,
                lhs_value=lhs_value,
                rhs_value=rhs_value,
                relation="==",
                margin=-gap,
                holds=gap <= atol,
            )
        )


# ---------------------------------------------------------------------------
# Shared construction helpers and labels
# ---------------------------------------------------------------------------


def _scan_radius(h: Hypergraph) -> float:
    """Cheap dense radius for ranking scans (top entries are re-certified)."""
    return float(full_spectrum(h)[-1])


def _cat_label(length: int, pendants: dict[int, int]) -> str:
    inner = ",".join(f"{pos}:{cnt}" for pos, cnt in sorted(pendants.items()) if cnt)
    return f"caterpillar({length};{inner})" if inner else f"loose-path({length})"


def _diam4_label(hub_bundle: int, branch: tuple[int, ...]) -> str:
    return f"diam4(hub={hub_bundle};branches={'+'.join(map(str, branch))})"


def _cycle_label(length: int, pendants: dict[int, int]) -> str:
    inner = ",".join(f"{pos}:{cnt}" for pos, cnt in sorted(pendants.items()) if cnt)
    return f"bundled-cycle({length};{inner})" if inner else f"loose-cycle({length})"


def _tail_label(length: int, tail: int, site_counts: dict[int, int]) -> str:
    inner = ",".join(f"{pos}:{cnt}" for pos, cnt in sorted(site_counts.items()) if cnt)
    body = f"tail={tail}" + (f",{inner}" if inner else "")
    return f"tailed-cycle({length};{body})"


def _b2c_label(center: int, side: int) -> str:
    if side:
        return f"fused-triangles(center={center},side={side})"
    return f"fused-triangles(center={center})"


def _theta_label(comp: tuple[int, int, int, int]) -> str:
    return f"theta({comp[0]},{comp[1]},{comp[2]},{comp[3]})"


def _t2c_label(comp: tuple[int, ...]) -> str:
    inner = ",".join(f"{site}:{cnt}" for site, cnt in enumerate(comp) if cnt)
    return f"triple-triangles({inner})" if inner else "triple-triangles(core)"


def _star_profile_radius(m: int, hub_bundle: int, branch: tuple[int, ...]) -> float:
    """Radius of a diameter-4 profile via its canonical equitable quotient.

    The classes are: the hub; the non-hub vertices of hub pendant edges;
    and, per distinct branch bundle size, the branch vertices, the
    interior vertices of their bridge edges, and the non-branch vertices
    of their pendant edges.  Every vertex in a class sees the same
    class-weighted neighbourhood, so the quotient shares the dominant
    eigenvalue with the full adjacency matrix; symmetrising by class
    sizes lets a Hermitian solver do the work.
    """
    w = 1.0 / (m - 1)
    sizes: dict[int, int] = {}
    for s in branch:
        sizes[s] = sizes.get(s, 0) + 1

    labels: list[tuple[str, int | None]] = [("hub", None)]
    counts: list[float] = [1.0]
    if hub_bundle:
        labels.append(("hubmid", None))
        counts.append(hub_bundle * (m - 1))
    for s in sorted(sizes, reverse=True):
        c = sizes[s]
        labels.append(("junc", s))
        counts.append(c)
        if m > 2:
            labels.append(("bridgemid", s))
            counts.append(c * (m - 2))
        labels.append(("pendmid", s))
        counts.append(c * s * (m - 1))

    index = {lab: i for i, lab in enumerate(labels)}
    b = np.zeros((len(labels), len(labels)))

    def put(row: tuple[str, int | None], col: tuple[str, int | None], val: float) -> None:
        b[index[row], index[col]] = val

    if hub_bundle:
        put(("hub", None), ("hubmid", None), hub_bundle)
        put(("hubmid", None), ("hub", None), w)
        put(("hubmid", None), ("hubmid", None), (m - 2) * w)
    for s, c in sizes.items():
        put(("hub", None), ("junc", s), c * w)
        put(("junc", s), ("hub", None), w)
        put(("junc", s), ("pendmid", s), float(s))
        put(("pendmid", s), ("junc", s), w)
        put(("pendmid", s), ("pendmid", s), (m - 2) * w)
        if m > 2:
            put(("hub", None), ("bridgemid", s), c * (m - 2) * w)
            put(("junc", s), ("bridgemid", s), (m - 2) * w)
            put(("bridgemid", s), ("hub", None), w)
            put(("bridgemid", s), ("junc", s), w)
            put(("bridgemid", s), ("bridgemid", s), (m - 3) * w)

    scale = np.sqrt(np.asarray(counts))
    sym = b * scale[:, None] / scale[None, :]
    return float(np.linalg.eigvalsh((sym + sym.T) / 2.0)[-1])


def _fused_cycles(m: int, len_a: int, len_b: int, center_bundle: int) -> Hypergraph:
    """Two loose cycles sharing one junction, plus a bundle there."""
    h = loose_cycle(m, len_a)
    nxt = max(h.vertices) + 1

    def fresh(count: int) -> list[int]:
        nonlocal nxt
        block = list(range(nxt, nxt + count))
        nxt += count
        return block

    edges = list(h.edges)
    anchor = 0
    prev = anchor
    joints = [fresh(1)[0] for _ in range(len_b - 1)]
    ring = joints + [anchor]
    for joint in ring:
        edges.append(tuple(sorted([prev, joint] + fresh(m - 2))))
        prev = joint
    out = Hypergraph(m, edges)
    if center_bundle:
        out = attach_pendant_edges(out, anchor, center_bundle)
    return out


def _bridged_cycles(m: int, len_a: int, len_b: int, bridge: int, bundle: int) -> Hypergraph:
    """Two disjoint loose cycles joined by a loose path, bundle at one end."""
    h = loose_cycle(m, len_a)
    h = attach_path(h, 0, bridge)
    far = max(h.vertices)  # the free end of the freshly attached path
    nxt = far + 1

    def fresh(count: int) -> list[int]:
        nonlocal nxt
        block = list(range(nxt, nxt + count))
        nxt += count
        return block

    edges = list(h.edges)
    prev = far
    joints = [fresh(1)[0] for _ in range(len_b - 1)]
    for joint in joints + [far]:
        edges.append(tuple(sorted([prev, joint] + fresh(m - 2))))
        prev = joint
    out = Hypergraph(m, edges)
    if bundle:
        out = attach_pendant_edges(out, 0, bundle)
    return out


def _cycle_compositions(total: int, length: int) -> Iterator[tuple[int, ...]]:
    """Bundle distributions on a cycle, canonical under rotation/reflection."""

    def variants(comp: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        doubled = comp + comp
        for start in range(length):
            rot = doubled[start:start + length]
            yield rot
            yield tuple(reversed(rot))

    def rec(remaining: int, slots: int) -> Iterator[tuple[int, ...]]:
        if slots == 1:
            yield (remaining,)
            return
        for first in range(remaining + 1):
            for tail in rec(remaining - first, slots - 1):
                yield (first, *tail)

    for comp in rec(total, length):
        if comp == max(variants(comp)):
            yield comp


# ---------------------------------------------------------------------------
# Hypertree entries
# ---------------------------------------------------------------------------


def _single_bundle_max(m: int, k: int, d: int, run: _Run) -> tuple[str, float, int]:
    """Best single-bundle caterpillar of diameter ``d``; returns (label, radius, pos)."""
    best: tuple[float, int] | None = None
    for pos in range(2, d // 2 + 2):
        run.spend()
        rad = _scan_radius(caterpillar(m, d, {pos: k - d}))
        if best is None or rad > best[0]:
            best = (rad, pos)
    assert best is not None
    label = _cat_label(d, {best[1]: k - d})
    value = run.instance(label, caterpillar(m, d, {best[1]: k - d}))
    return label, value, best[1]


def _hyp_th1(p: dict) -> str | None:
    if p["m"] < 3:
        return "needs edge size m >= 3"
    if p["d"] < 3:
        return "the chain needs diameter d >= 3"
    if p["k"] < p["d"]:
        return "needs k >= d so every diameter class in the chain is populated"
    return None


@_register(
    "TH1_ORDER",
    "Per-diameter maxima of k-edge hypertrees decrease strictly as the "
    "diameter grows, ending above the bare loose path.",
    {"m": 3, "k": 10, "d": 6},
    _hyp_th1,
)
def _run_th1(p: dict, run: _Run) -> None:
    m, k, d = p["m"], p["k"], p["d"]
    chain: list[tuple[str, float]] = []
    for i in range(2, d):
        label, value, pos = _single_bundle_max(m, k, i, run)
        run.note(f"diameter {i}: maximum attained with the bundle at position {pos}")
        chain.append((label, value))
    path_label = f"loose-path({d})"
    path_value = run.instance(path_label, loose_path(m, d))
    for (lo_label, lo_value), (hi_label, hi_value) in zip(chain[1:], chain):
        run.less(lo_label, hi_label, lo_value, hi_value)
    run.less(path_label, chain[-1][0], path_value, chain[-1][1])


def _two_bundle_candidates(m: int, k: int, d: int) -> Iterator[tuple[str, Hypergraph]]:
    """Structured diameter-d candidates: one- and two-bundle caterpillars."""
    rest = k - d
    for pos in range(2, d + 1):
        if 2 * pos <= d + 2:  # canonical side of the mirror symmetry
            yield _cat_label(d, {pos: rest}), caterpillar(m, d, {pos: rest})
    for p1 in range(2, d + 1):
        for p2 in range(p1 + 1, d + 1):
            mirror = (d + 2 - p2, d + 2 - p1)
            for a in range(1, rest):
                b = rest - a
                key = (p1, p2, a, b)
                mirrored = (*mirror, b, a)
                if mirrored < key:
                    continue
                pendants = {p1: a, p2: b}
                yield _cat_label(d, pendants), caterpillar(m, d, pendants)


def _assert_tree_maximum(m: int, k: int, d: int, target_pendants: dict[int, int],
                         run: _Run) -> tuple[str, float]:
    """Common body for the fixed-diameter maximizer claims (odd/even)."""
    target_label = _cat_label(d, target_pendants)
    target_h = caterpillar(m, d, target_pendants)
    target_value = run.instance(target_label, target_h)

    if d == 4:
        target_profile = (k - 4, (1, 1))
        best_other: tuple[float, int, tuple[int, ...]] | None = None
        count = 0
        for hub_bundle, branch in diameter_four_profiles(m, k):
            run.spend()
            count += 1
            if (hub_bundle, branch) == target_profile:
                continue
            rad = _star_profile_radius(m, hub_bundle, branch)
            if best_other is None or rad > best_other[0]:
                best_other = (rad, hub_bundle, branch)
        assert best_other is not None
        other_label = _diam4_label(best_other[1], best_other[2])
        other_value = run.instance(
            other_label, diameter_four_from_profile(m, best_other[1], best_other[2])
        )
        run.note(f"scanned all {count} diameter-4 shapes via bundle profiles")
    elif k <= FULL_ENUMERATION_MAX_K:
        pool = enumerate_hypertrees(m, k, diameter=d, budget=run.budget)
        run.spend(len(pool))
        others = [h for h in pool if not are_isomorphic(h, target_h)]
        if len(others) == len(pool):
            run.note("named maximizer missing from the exhaustive enumeration")
        ranked = sorted(others, key=_scan_radius, reverse=True)
        other_label = f"best-other-diameter-{d}-tree"
        other_value = run.instance(other_label, ranked[0])
        run.note(f"exhaustive: {len(pool)} diameter-{d} hypertrees enumerated")
    else:
        best: tuple[float, str, Hypergraph] | None = None
        for label, h in _two_bundle_candidates(m, k, d):
            if label == target_label:
                continue
            run.spend()
            rad = _scan_radius(h)
            if best is None or rad > best[0]:
                best = (rad, label, h)
        assert best is not None
        other_label, other_value = best[1], run.instance(best[1], best[2])
        run.note(
            "candidates restricted to one- and two-bundle placements at this size"
        )
    run.less(other_label, target_label, other_value, target_value)
    return target_label, target_value


def _hyp_th3(p: dict) -> str | None:
    if p["m"] < 3:
        return "needs edge size m >= 3"
    if p["d"] < 3 or p["d"] % 2 == 0:
        return "claim covers odd diameters d >= 3"
    if (p["k"] - p["d"] - 1) * (p["m"] - 1) < 6:
        return "needs (k-d-1)(m-1) >= 6"
    return None


@_register(
    "TH3_ODD",
    "For odd diameter the unique radius maximizer is the path with one "
    "bundle just past the midpoint.",
    {"m": 3, "d": 5, "k": 9},
    _hyp_th3,
)
def _run_th3(p: dict, run: _Run) -> None:
    m, k, d = p["m"], p["k"], p["d"]
    centre = (d + 1) // 2  # position p+1 for d = 2p+1
    _assert_tree_maximum(m, k, d, {centre: k - d}, run)


def _even_threshold(m: int, d: int) -> int:
    return math.ceil(((4 * d * d - 1) * (m - 1) + 2) / 4)


def _hyp_th4(p: dict) -> str | None:
    if p["m"] < 3:
        return "needs edge size m >= 3"
    if p["d"] < 4 or p["d"] % 2 == 1:
        return "claim covers even diameters d >= 4"
    need = _even_threshold(p["m"], p["d"])
    if p["k"] < need:
        return f"needs k >= {need} for this (m, d)"
    return None


@_register(
    "TH4_EVEN",
    "For even diameter the unique radius maximizer is the path with one "
    "central bundle, and a closed-form upper bound holds.",
    {"m": 3, "d": 4, "k": 32},
    _hyp_th4,
)
def _run_th4(p: dict, run: _Run) -> None:
    m, k, d = p["m"], p["k"], p["d"]
    centre = d // 2 + 1
    label, value = _assert_tree_maximum(m, k, d, {centre: k - d}, run)
    bound = hypertree_even_diameter_bound(m, k, d)
    run.less(label, f"even-diameter-bound(m={m},k={k},d={d})", value, bound)


def _hyp_ratio_3a(p: dict) -> str | None:
    if p["m"] < 3:
        return "needs edge size m >= 3"
    if p["l"] < 3:
        return "needs a tail of at least 3 edges for the chain to be non-trivial"
    if p["c"] < 2:
        return "needs at least 2 edges in the bundle at the attachment vertex"
    return None


@_register(
    "RATIO_3A",
    "Along a pendant tail, consecutive Perron-entry ratios increase "
    "strictly toward the attachment and stay below one, whenever the "
    "radius reaches the loose-cycle radius.",
    {"m": 3, "l": 6, "c": 10},
    _hyp_ratio_3a,
)
def _run_ratio_3a(p: dict, run: _Run) -> None:
    m, l, c = p["m"], p["l"], p["c"]
    h = caterpillar(m, l + 1, {l + 1: c - 1})
    label = f"bundle({c})-with-tail({l})"
    res = spectral_radius(h, tol=_PRECISE_TOL)
    threshold = loose_cycle_radius(m)
    if res.value < threshold - RESIDUAL_LIMIT:
        raise _HypothesesUnmet(
            f"computed radius {res.value:.6f} is below the loose-cycle radius "
            f"{threshold:.6f} required by the claim"
        )
    run.instance(label, h)
    run.note(f"radius {res.value:.6f} >= loose-cycle radius {threshold:.6f}")
    x = [res.vector[path_junction(m, j)] for j in range(1, l + 2)]
    ratios = [x[j - 1] / x[j] for j in range(1, l)]
    for j in range(1, l - 1):
        run.less(
            f"X[v{j}]/X[v{j + 1}]", f"X[v{j + 1}]/X[v{j + 2}]",
            ratios[j - 1], ratios[j], slack=COMPONENT_SLACK,
        )
    run.less(
        f"X[v{l - 1}]/X[v{l}]", "1", ratios[-1], 1.0, slack=COMPONENT_SLACK
    )


def _hyp_ratio_3b(p: dict) -> str | None:
    if p["m"] < 3:
        return "needs edge size m >= 3"
    if p["d"] < 3:
        return "needs diameter d >= 3"
    if not 2 <= p["p"] <= p["d"] // 2 + 1:
        return "bundle position p must lie in 2..d//2+1 (mirror covers the rest)"
    if (p["k"] - p["d"] - 1) * (p["m"] - 1) < 6:
        return "needs (k-d-1)(m-1) >= 6"
    return None


@_register(
    "RATIO_3B",
    "On a path with one bundle, Perron entries rise strictly toward the "
    "bundle from both ends, with ratio chains increasing toward it.",
    {"m": 3, "d": 8, "p": 4, "k": 18},
    _hyp_ratio_3b,
)
def _run_ratio_3b(p: dict, run: _Run) -> None:
    m, d, pos, k = p["m"], p["d"], p["p"], p["k"]
    h = caterpillar(m, d, {pos: k - d})
    label = _cat_label(d, {pos: k - d})
    res = spectral_radius(h, tol=_PRECISE_TOL)
    run.instance(label, h)
    x = [res.vector[path_junction(m, j)] for j in range(1, d + 2)]
    # Componentwise: entries rise to the bundle position, then fall.
    for j in range(1, pos):
        run.less(f"X[v{j}]", f"X[v{j + 1}]", x[j - 1], x[j], slack=COMPONENT_SLACK)
    for j in range(pos, d + 1):
        run.less(f"X[v{j + 1}]", f"X[v{j}]", x[j], x[j - 1], slack=COMPONENT_SLACK)
    # Ratio chains toward the bundle from either end, each ratio below one.
    left = [x[j - 1] / x[j] for j in range(1, pos)]
    for j in range(len(left) - 1):
        run.less(
            f"X[v{j + 1}]/X[v{j + 2}]", f"X[v{j + 2}]/X[v{j + 3}]",
            left[j], left[j + 1], slack=COMPONENT_SLACK,
        )
    if left:
        run.less(f"X[v{pos - 1}]/X[v{pos}]", "1", left[-1], 1.0, slack=COMPONENT_SLACK)
    right = [x[j] / x[j - 1] for j in range(pos, d + 1)]  # X_{j+1}/X_j
    for j in range(len(right) - 1, 0, -1):
        run.less(
            f"X[v{pos + j + 1}]/X[v{pos + j}]", f"X[v{pos + j}]/X[v{pos + j - 1}]",
            right[j], right[j - 1], slack=COMPONENT_SLACK,
        )
    if right:
        run.less(f"X[v{pos + 1}]/X[v{pos}]", "1", right[0], 1.0, slack=COMPONENT_SLACK)


def _hyp_second_diam(p: dict) -> str | None:
    if p["m"] < 3:
        return "needs edge size m >= 3"
    if p["d"] < 4:
        return "needs diameter d >= 4 so a runner-up position exists"
    if (p["k"] - p["d"] - 6) * (p["m"] - 1) < 42:
        return "needs (k-d-6)(m-1) >= 42"
    return None


@_register(
    "SECOND_DIAM",
    "Among fixed-diameter hypertrees the runner-up to the central-bundle "
    "maximizer is the bundle one step before the midpoint.",
    {"m": 3, "d": 4, "k": 31},
    _hyp_second_diam,
)
def _run_second_diam(p: dict, run: _Run) -> None:
    m, k, d = p["m"], p["k"], p["d"]
    half = d // 2
    first_pendants = {half + 1: k - d}
    second_pendants = {half: k - d}
    first_label = _cat_label(d, first_pendants)
    second_label = _cat_label(d, second_pendants)
    first_value = run.instance(first_label, caterpillar(m, d, first_pendants))
    second_value = run.instance(second_label, caterpillar(m, d, second_pendants))

    if d == 4:
        skip = {(k - 4, (1, 1)), (0, (k - 3, 1))}
        best_rest: tuple[float, int, tuple[int, ...]] | None = None
        count = 0
        for hub_bundle, branch in diameter_four_profiles(m, k):
            run.spend()
            count += 1
            if (hub_bundle, branch) in skip:
                continue
            rad = _star_profile_radius(m, hub_bundle, branch)
            if best_rest is None or rad > best_rest[0]:
                best_rest = (rad, hub_bundle, branch)
        assert best_rest is not None
        rest_label = _diam4_label(best_rest[1], best_rest[2])
        rest_value = run.instance(
            rest_label, diameter_four_from_profile(m, best_rest[1], best_rest[2])
        )
        run.note(f"scanned all {count} diameter-4 shapes via bundle profiles")
    else:
        first_h = caterpillar(m, d, first_pendants)
        second_h = caterpillar(m, d, second_pendants)
        if k <= FULL_ENUMERATION_MAX_K:
            pool = enumerate_hypertrees(m, k, diameter=d, budget=run.budget)
            run.spend(len(pool))
            rest = [
                h for h in pool
                if not (are_isomorphic(h, first_h) or are_isomorphic(h, second_h))
            ]
            ranked = sorted(rest, key=_scan_radius, reverse=True)
            rest_label = f"best-other-diameter-{d}-tree"
            rest_value = run.instance(rest_label, ranked[0])
            run.note(f"exhaustive: {len(pool)} diameter-{d} hypertrees enumerated")
        else:
            best: tuple[float, str, Hypergraph] | None = None
            for label, h in _two_bundle_candidates(m, k, d):
                if label in (first_label, second_label):
                    continue
                run.spend()
                rad = _scan_radius(h)
                if best is None or rad > best[0]:
                    best = (rad, label, h)
            assert best is not None
            rest_label = best[1]
            rest_value = run.instance(best[1], best[2])
            run.note(
                "candidates restricted to one- and two-bundle placements at this size"
            )
    run.less(second_label, first_label, second_value, first_value)
    run.less(rest_label, second_label, rest_value, second_value)


def _hyp_top7(p: dict) -> str | None:
    if p["m"] < 3:
        return "needs edge size m >= 3"
    if (p["k"] - 10) * (p["m"] - 1) < 42:
        return "needs (k-10)(m-1) >= 42"
    return None


@_register(
    "TOP7_TREES",
    "The seven largest radii over k-edge hypertrees, in order: the "
    "hyperstar, then specific bundle placements of diameters 3 and 4.",
    {"m": 3, "k": 31},
    _hyp_top7,
)
def _run_top7(p: dict, run: _Run) -> None:
    m, k = p["m"], p["k"]
    pool: list[tuple[float, str, Callable[[], Hypergraph]]] = []

    def add(label: str, maker: Callable[[], Hypergraph], rad: float) -> None:
        pool.append((rad, label, maker))

    run.spend()
    star = hyperstar(m, k)
    add(f"hyperstar(k={k})", lambda: star, _scan_radius(star))

    for b in range((k - 3) // 2 + 1):
        a = k - 3 - b
        pendants = {2: a, 3: b}
        run.spend()
        h = caterpillar(m, 3, pendants)
        add(_cat_label(3, pendants), (lambda hh: lambda: hh)(h), _scan_radius(h))

    count4 = 0
    for hub_bundle, branch in diameter_four_profiles(m, k):
        run.spend()
        count4 += 1
        add(
            _diam4_label(hub_bundle, branch),
            (lambda b0, br: lambda: diameter_four_from_profile(m, b0, br))(
                hub_bundle, branch
            ),
            _star_profile_radius(m, hub_bundle, branch),
        )

    deep = 0
    for d in (5, 6):
        for label, h in _two_bundle_candidates(m, k, d):
            run.spend()
            deep += 1
            add(label, (lambda hh: lambda: hh)(h), _scan_radius(h))

    run.note(
        f"candidates: hyperstar, {((k - 3) // 2) + 1} diameter-3 splits, "
        f"all {count4} diameter-4 shapes, {deep} structured diameter-5/6 "
        "bundle placements; deeper diameters are dominated by their "
        "per-diameter maxima, which the chain entry already orders below these"
    )

    pool.sort(key=lambda item: item[0], reverse=True)
    expected = [
        f"hyperstar(k={k})",
        _cat_label(3, {2: k - 3}),
        _cat_label(3, {2: k - 4, 3: 1}),
        _diam4_label(k - 4, (1, 1)),
        _diam4_label(0, (k - 3, 1)),
        _cat_label(3, {2: k - 5, 3: 2}),
        _diam4_label(k - 5, (2, 1)),
    ]
    got = [label for _, label, _ in pool[:7]]
    if got != expected:
        run.note(f"leaderboard mismatch: expected {expected}, found {got}")
    values: dict[str, float] = {}
    for rad, label, maker in pool[:8]:
        values[label] = run.instance(label, maker())
    for lo, hi in zip(expected[1:], expected):
        if lo in values and hi in values:
            run.less(lo, hi, values[lo], values[hi])
        else:
            run.less(lo, hi, 1.0, 0.0)  # missing label: forced failure
    eighth = pool[7]
    run.less(eighth[1], expected[6], values[eighth[1]], values.get(expected[6], 0.0))


# ---------------------------------------------------------------------------
# Unicyclic entries
# ---------------------------------------------------------------------------


def _unicyclic_pool(m: int, k: int, length: int, run: _Run) -> list[tuple[str, Hypergraph]]:
    """Structured candidates with k edges and the given cycle length."""
    out: list[tuple[str, Hypergraph]] = []
    rest = k - length
    for comp in _cycle_compositions(rest, length):
        run.spend()
        pendants = {i + 1: c for i, c in enumerate(comp) if c}
        out.append((_cycle_label(length, pendants), cycle_with_pendants(m, length, pendants)))
    for tail in (2, 3):
        bundle = rest - tail
        if bundle < 0:
            continue
        for site, site_label in ((1, 1), (2, 2)):
            if bundle == 0 and site != 1:
                continue
            run.spend()
            h = attach_path(loose_cycle(m, length), cycle_junction(m, 1), tail)
            site_counts: dict[int, int] = {}
            if bundle:
                h = attach_pendant_edges(h, cycle_junction(m, site), bundle)
                site_counts[site_label] = bundle
            out.append((_tail_label(length, tail, site_counts), h))
    return out


def _hyp_uct1(p: dict) -> str | None:
    if p["m"] < 3:
        return "needs edge size m >= 3"
    if p["k"] < 3:
        return "needs at least 3 edges to close a cycle"
    return None


@_register(
    "UCT1",
    "Per cycle length the radius maximizer puts every spare edge in one "
    "bundle; those maxima fall strictly as the cycle lengthens, staying "
    "above the loose-cycle radius, with closed-form brackets.",
    {"m": 3, "k": 7},
    _hyp_uct1,
)
def _run_uct1(p: dict, run: _Run) -> None:
    m, k = p["m"], p["k"]
    exhaustive = k <= 8
    cycle_const = loose_cycle_radius(m)
    chain: list[tuple[str, float]] = []
    for length in range(3, k + 1):
        if length < k:
            label = _cycle_label(length, {1: k - length})
            target = cycle_with_pendants(m, length, {1: k - length})
        else:
            label = f"loose-cycle({k})"
            target = loose_cycle(m, k)
        value = run.instance(label, target)
        chain.append((label, value))

        if exhaustive and length < k:
            pool = enumerate_unicyclic(m, k, cycle_length=length, budget=run.budget)
            run.spend(len(pool))
            others = [h for h in pool if not are_isomorphic(h, target)]
            if others:
                ranked = sorted(others, key=_scan_radius, reverse=True)
                other_label = f"best-other-cycle-{length}"
                run.less(other_label, label, run.instance(other_label, ranked[0]), value)

        if length < k:
            run.less(f"loose-cycle-radius(m={m})", label, cycle_const, value)
        else:
            run.equal(f"loose-cycle-radius(m={m})", label, cycle_const, value, atol=1e-9)
        lo, hi = unicyclic_radius_bounds(m, k, length)
        run.less(f"lower-bracket(l={length})", label, lo, value)
        run.less(label, f"upper-bracket(l={length})", value, hi)

    for (lo_label, lo_value), (hi_label, hi_value) in zip(chain[1:], chain):
        run.less(lo_label, hi_label, lo_value, hi_value)
    if exhaustive:
        run.note("per-length maxima checked against exhaustive enumeration")
    else:
        run.note(
            "k beyond exhaustive reach: per-length maxima taken on structured "
            "candidates only"
        )


def _hyp_uct2(p: dict) -> str | None:
    if p["m"] < 3:
        return "needs edge size m >= 3"
    if p["l"] < 3:
        return "cycle length l must be at least 3"
    if (p["k"] - p["l"] - 6) * (p["m"] - 1) < 20:
        return "needs (k-l-6)(m-1) >= 20"
    return None


@_register(
    "UCT2_SECOND",
    "With cycle length fixed, the runner-up moves exactly one bundle edge "
    "to the adjacent junction, and satisfies a closed-form upper bound.",
    {"m": 3, "l": 3, "k": 19},
    _hyp_uct2,
)
def _run_uct2(p: dict, run: _Run) -> None:
    m, length, k = p["m"], p["l"], p["k"]
    first_label = _cycle_label(length, {1: k - length})
    second_label = _cycle_label(length, {1: k - length - 1, 2: 1})
    first = run.instance(first_label, cycle_with_pendants(m, length, {1: k - length}))
    second = run.instance(
        second_label, cycle_with_pendants(m, length, {1: k - length - 1, 2: 1})
    )
    named = {first_label, second_label}
    best: tuple[float, str, Hypergraph] | None = None
    if k <= FULL_ENUMERATION_MAX_K:
        pool_h = enumerate_unicyclic(m, k, cycle_length=length, budget=run.budget)
        run.spend(len(pool_h))
        first_h = cycle_with_pendants(m, length, {1: k - length})
        second_h = cycle_with_pendants(m, length, {1: k - length - 1, 2: 1})
        rest = [
            h for h in pool_h
            if not (are_isomorphic(h, first_h) or are_isomorphic(h, second_h))
        ]
        ranked = sorted(rest, key=_scan_radius, reverse=True)
        best = (_scan_radius(ranked[0]), f"best-other-cycle-{length}", ranked[0])
        run.note(f"exhaustive: {len(pool_h)} cycle-length-{length} shapes enumerated")
    else:
        for label, h in _unicyclic_pool(m, k, length, run):
            if label in named:
                continue
            rad = _scan_radius(h)
            if best is None or rad > best[0]:
                best = (rad, label, h)
        run.note("candidates: bundle distributions plus short-tail variants")
    assert best is not None
    rest_value = run.instance(best[1], best[2])
    run.less(second_label, first_label, second, first)
    run.less(best[1], second_label, rest_value, second)
    run.less(
        second_label,
        f"second-place-bound(l={length})",
        second,
        unicyclic_second_bound(m, k, length),
    )


def _hyp_uct3(p: dict) -> str | None:
    if p["m"] < 3:
        return "needs edge size m >= 3"
    if p["l"] < 3:
        return "cycle length l must be at least 3"
    if (p["k"] - p["l"] - 5) * (p["m"] - 1) < 12:
        return "needs (k-l-5)(m-1) >= 12"
    return None


@_register(
    "UCT3_THIRD",
    "With cycle length fixed, third place extends one bundle edge of the "
    "maximizer into a depth-two tail.",
    {"m": 3, "l": 3, "k": 14},
    _hyp_uct3,
)
def _run_uct3(p: dict, run: _Run) -> None:
    m, length, k = p["m"], p["l"], p["k"]
    first_label = _cycle_label(length, {1: k - length})
    second_label = _cycle_label(length, {1: k - length - 1, 2: 1})
    third_label = _tail_label(length, 2, {1: k - length - 2})
    first = run.instance(first_label, cycle_with_pendants(m, length, {1: k - length}))
    second = run.instance(
        second_label, cycle_with_pendants(m, length, {1: k - length - 1, 2: 1})
    )
    third = run.instance(
        third_label, cycle_with_pendant_path(m, length, {1: k - length - 1})
    )
    named = {first_label, second_label, third_label}
    best: tuple[float, str, Hypergraph] | None = None
    if k <= FULL_ENUMERATION_MAX_K:
        pool_h = enumerate_unicyclic(m, k, cycle_length=length, budget=run.budget)
        run.spend(len(pool_h))
        named_h = [
            cycle_with_pendants(m, length, {1: k - length}),
            cycle_with_pendants(m, length, {1: k - length - 1, 2: 1}),
            cycle_with_pendant_path(m, length, {1: k - length - 1}),
        ]
        rest = [
            h for h in pool_h if not any(are_isomorphic(h, nh) for nh in named_h)
        ]
        ranked = sorted(rest, key=_scan_radius, reverse=True)
        best = (_scan_radius(ranked[0]), f"best-other-cycle-{length}", ranked[0])
        run.note(f"exhaustive: {len(pool_h)} cycle-length-{length} shapes enumerated")
    else:
        for label, h in _unicyclic_pool(m, k, length, run):
            if label in named:
                continue
            rad = _scan_radius(h)
            if best is None or rad > best[0]:
                best = (rad, label, h)
        run.note("candidates: bundle distributions plus short-tail variants")
    assert best is not None
    rest_value = run.instance(best[1], best[2])
    run.less(second_label, first_label, second, first)
    run.less(third_label, second_label, third, second)
    run.less(best[1], third_label, rest_value, third)


def _hyp_top3_uni(p: dict) -> str | None:
    if p["m"] < 3:
        return "needs edge size m >= 3"
    if (p["k"] - 7) * (p["m"] - 1) < 20:
        return "needs (k-7)(m-1) >= 20"
    return None


@_register(
    "TOP3_UNI",
    "Globally over unicyclic shapes, the top three all sit on the "
    "triangle: the one-bundle maximizer, its adjacent-split runner-up, "
    "then the depth-two tail variant.",
    {"m": 3, "k": 19},
    _hyp_top3_uni,
)
def _run_top3_uni(p: dict, run: _Run) -> None:
    m, k = p["m"], p["k"]
    first_label = _cycle_label(3, {1: k - 3})
    second_label = _cycle_label(3, {1: k - 4, 2: 1})
    third_label = _tail_label(3, 2, {1: k - 5})
    first = run.instance(first_label, cycle_with_pendants(m, 3, {1: k - 3}))
    second = run.instance(second_label, cycle_with_pendants(m, 3, {1: k - 4, 2: 1}))
    third = run.instance(third_label, cycle_with_pendant_path(m, 3, {1: k - 4}))
    named = {first_label, second_label, third_label}
    best: tuple[float, str, Hypergraph] | None = None
    if k <= 8:
        pool_h = enumerate_unicyclic(m, k, budget=run.budget)
        run.spend(len(pool_h))
        named_h = [
            cycle_with_pendants(m, 3, {1: k - 3}),
            cycle_with_pendants(m, 3, {1: k - 4, 2: 1}),
            cycle_with_pendant_path(m, 3, {1: k - 4}),
        ]
        rest = [
            h for h in pool_h if not any(are_isomorphic(h, nh) for nh in named_h)
        ]
        ranked = sorted(rest, key=_scan_radius, reverse=True)
        best = (_scan_radius(ranked[0]), "best-other-unicyclic", ranked[0])
        run.note(f"exhaustive: {len(pool_h)} unicyclic shapes enumerated")
    else:
        for length in range(3, k + 1):
            for label, h in _unicyclic_pool(m, k, length, run):
                if label in named:
                    continue
                rad = _scan_radius(h)
                if best is None or rad > best[0]:
                    best = (rad, label, h)
        run.note(
            "candidates: per-length bundle distributions plus short-tail variants"
        )
    assert best is not None
    rest_value = run.instance(best[1], best[2])
    run.less(second_label, first_label, second, first)
    run.less(third_label, second_label, third, second)
    run.less(best[1], third_label, rest_value, third)


def _hyp_uc0(p: dict) -> str | None:
    if p["m"] < 3:
        return "needs edge size m >= 3"
    if p["l_min"] < 4:
        return "shortening only applies from cycle length 4 upward"
    if p["l_max"] < p["l_min"]:
        return "empty cycle-length range"
    return None


@_register(
    "UC0",
    "Shortening the cycle by one edge while growing the bundle by one "
    "raises the radius.",
    {"m": 3, "l_min": 4, "l_max": 8},
    _hyp_uc0,
)
def _run_uc0(p: dict, run: _Run) -> None:
    m = p["m"]
    for length in range(p["l_min"], p["l_max"] + 1):
        for bundle in (0, 1, 2, 4, 8):
            lo_label = _cycle_label(length, {1: bundle})
            hi_label = _cycle_label(length - 1, {1: bundle + 1})
            lo = run.instance(lo_label, cycle_with_pendants(m, length, {1: bundle}))
            hi = run.instance(
                hi_label, cycle_with_pendants(m, length - 1, {1: bundle + 1})
            )
            run.less(lo_label, hi_label, lo, hi)


def _hyp_ucl1(p: dict) -> str | None:
    if p["m"] < 3:
        return "needs edge size m >= 3"
    if p["l"] < 3:
        return "cycle length l must be at least 3"
    if p["total"] < 2:
        return "needs at least 2 pendant edges to shift between sites"
    return None


@_register(
    "UCL1",
    "Between two bundle sites on a cycle, shifting an edge from the "
    "smaller bundle to the larger strictly raises the radius.",
    {"m": 3, "l": 4, "total": 6},
    _hyp_ucl1,
)
def _run_ucl1(p: dict, run: _Run) -> None:
    m, length, total = p["m"], p["l"], p["total"]
    site_pairs = [(1, 2)] if length == 3 else [(1, 2), (1, 3)]
    for i, j in site_pairs:
        l1, l2 = total - (total // 2), total // 2
        while l2 >= 1:
            lo_label = _cycle_label(length, {i: l1, j: l2})
            hi_label = _cycle_label(length, {i: l1 + 1, j: l2 - 1})
            lo = run.instance(lo_label, cycle_with_pendants(m, length, {i: l1, j: l2}))
            hi = run.instance(
                hi_label, cycle_with_pendants(m, length, {i: l1 + 1, j: l2 - 1})
            )
            run.less(lo_label, hi_label, lo, hi)
            l1, l2 = l1 + 1, l2 - 1


def _hyp_ucl7(p: dict) -> str | None:
    if p["m"] < 3:
        return "needs edge size m >= 3"
    if p["l"] < 3:
        return "cycle length l must be at least 3"
    if not 1 <= p["a"] <= p["b"]:
        return "needs bundle sizes 1 <= a <= b"
    return None


@_register(
    "UCL7",
    "With a large bundle fixed at one junction, walking a small bundle "
    "toward it raises the radius step by step, whenever the radius meets "
    "a closed-form threshold.",
    {"m": 3, "l": 7, "b": 12, "a": 2},
    _hyp_ucl7,
)
def _run_ucl7(p: dict, run: _Run) -> None:
    m, length, big, small = p["m"], p["l"], p["b"], p["a"]
    far = (length + 1) // 2
    far_h = cycle_with_pendants(m, length, {1: big, far: small})
    far_value = spectral_radius(far_h, tol=_PRECISE_TOL).value
    threshold = (m + math.sqrt(m * m + 4 * (small + 2) * (m - 1))) / (2 * m - 2)
    if far_value < threshold - RESIDUAL_LIMIT:
        raise _HypothesesUnmet(
            f"radius {far_value:.6f} at the far position is below the required "
            f"threshold {threshold:.6f}"
        )
    run.note(f"threshold {threshold:.6f} met: far-position radius {far_value:.6f}")
    for i in range(far, 1, -1):
        lo_pendants = {1: big, i: small}
        hi_pendants = {1: big + small} if i == 2 else {1: big, i - 1: small}
        lo_label = _cycle_label(length, lo_pendants)
        hi_label = _cycle_label(length, hi_pendants)
        lo = run.instance(lo_label, cycle_with_pendants(m, length, lo_pendants))
        hi = run.instance(hi_label, cycle_with_pendants(m, length, hi_pendants))
        run.less(lo_label, hi_label, lo, hi)


# ---------------------------------------------------------------------------
# Bicyclic entries
# ---------------------------------------------------------------------------


def _bicyclic_pool(m: int, k: int, run: _Run) -> list[tuple[str, Hypergraph]]:
    """Structured bicyclic candidates with k edges."""
    out: list[tuple[str, Hypergraph]] = []
    rest = k - 6
    for side in range(rest + 1):
        run.spend()
        center = rest - side
        if side:
            out.append((_b2c_label(center, side), fused_triangles_two_sites(m, center, side)))
        else:
            out.append((_b2c_label(center, 0), fused_triangles(m, center)))
    if rest >= 2:
        run.spend()
        h = attach_pendant_edges(fused_triangles(m, rest - 2), m - 1, 1)
        h = attach_pendant_edges(h, (m - 1) + 3 * (m - 1) - 1, 1)
        out.append((f"fused-triangles(center={rest - 2},sides=1+1)", h))
    for len_a, len_b in ((3, 4), (4, 4), (3, 5)):
        bundle = k - len_a - len_b
        if bundle < 0:
            continue
        run.spend()
        out.append(
            (
                f"fused-cycles({len_a},{len_b};center={bundle})",
                _fused_cycles(m, len_a, len_b, bundle),
            )
        )
    for bridge in (1, 2):
        bundle = k - 6 - bridge
        if bundle < 0:
            continue
        run.spend()
        out.append(
            (
                f"bridged-triangles(path={bridge};bundle={bundle})",
                _bridged_cycles(m, 3, 3, bridge, bundle),
            )
        )
    return out


def _hyp_bc_top(p: dict) -> str | None:
    if p["m"] < 3:
        return "needs edge size m >= 3"
    if p["k"] < 6:
        return "two fused triangles need at least 6 edges"
    return None


@_register(
    "BC_TOP",
    "Among bicyclic shapes the maximizer fuses two triangles and piles "
    "every spare edge on the shared junction; its radius is a root of an "
    "explicit quintic with closed-form brackets.",
    {"m": 3, "k": 40},
    _hyp_bc_top,
)
def _run_bc_top(p: dict, run: _Run) -> None:
    m, k = p["m"], p["k"]
    target_label = _b2c_label(k - 6, 0)
    target = run.instance(target_label, fused_triangles(m, k - 6))
    best: tuple[float, str, Hypergraph] | None = None
    for label, h in _bicyclic_pool(m, k, run):
        if label == target_label:
            continue
        rad = _scan_radius(h)
        if best is None or rad > best[0]:
            best = (rad, label, h)
    assert best is not None
    run.note(
        "candidates: two-site bundle sweep on fused triangles, longer fused "
        "cycle pairs, and bridged triangle pairs"
    )
    run.less(best[1], target_label, run.instance(best[1], best[2]), target)
    run.equal(
        "quintic-dominant-root/(m-1)",
        target_label,
        poly_radius(fused_triangles_char_poly(m, k), m),
        target,
        atol=1e-9,
    )
    lo, hi = fused_triangles_root_bounds(m, k)
    scaled = (m - 1) * target
    run.less("scaled-lower-bracket", f"(m-1)*{target_label}", lo, scaled)
    run.less(f"(m-1)*{target_label}", "scaled-upper-bracket", scaled, hi)


def _hyp_b2c_second(p: dict) -> str | None:
    if p["m"] < 3:
        return "needs edge size m >= 3"
    if p["k"] < 8:
        return "needs k >= 8"
    if (p["k"] - 12) * (p["m"] - 1) < 56:
        return "needs (k-12)(m-1) >= 56"
    return None


@_register(
    "B2C_SECOND",
    "The bicyclic runner-up moves exactly one bundle edge from the shared "
    "junction to a free triangle junction.",
    {"m": 3, "k": 40},
    _hyp_b2c_second,
)
def _run_b2c_second(p: dict, run: _Run) -> None:
    m, k = p["m"], p["k"]
    first_label = _b2c_label(k - 6, 0)
    second_label = _b2c_label(k - 7, 1)
    first = run.instance(first_label, fused_triangles(m, k - 6))
    second = run.instance(second_label, fused_triangles_two_sites(m, k - 7, 1))
    named = {first_label, second_label}
    best: tuple[float, str, Hypergraph] | None = None
    for label, h in _bicyclic_pool(m, k, run):
        if label in named:
            continue
        rad = _scan_radius(h)
        if best is None or rad > best[0]:
            best = (rad, label, h)
    assert best is not None
    run.note(
        "candidates: two-site bundle sweep on fused triangles, longer fused "
        "cycle pairs, and bridged triangle pairs"
    )
    run.less(second_label, first_label, second, first)
    run.less(best[1], second_label, run.instance(best[1], best[2]), second)


# ---------------------------------------------------------------------------
# Tricyclic entries
# ---------------------------------------------------------------------------


def _hyp_tri_prop(p: dict) -> str | None:
    if p["m"] < 3:
        return "needs edge size m >= 3"
    return None


@_register(
    "TRI_PROP",
    "Three-cycle shapes split by vertex count: n = k(m-1)-1 exactly when "
    "every two cycles share an edge, n = k(m-1)-2 otherwise; the "
    "interlocked example shows n = k(m-1)-1 does not force two cycles.",
    {"m": 4},
    _hyp_tri_prop,
)
def _run_tri_prop(p: dict, run: _Run) -> None:
    m = p["m"]

    def check(label: str, h: Hypergraph, cycles_expected: int) -> None:
        run.instance(label, h)
        cycles = h.loose_cycles()
        run.equal(
            f"{label}: loose-cycle count", str(cycles_expected),
            float(len(cycles)), float(cycles_expected), atol=0.0,
        )
        if cycles_expected < 3:
            expected_n = h.k * (h.m - 1) - 1
            run.equal(f"{label}: n", "k(m-1)-1", float(h.n), float(expected_n), atol=0.0)
            return
        edge_sets = [frozenset(cycle) for cycle in cycles]
        pairwise = all(
            edge_sets[i] & edge_sets[j]
            for i in range(len(edge_sets))
            for j in range(i + 1, len(edge_sets))
        )
        offset = 1 if pairwise else 2
        run.note(
            f"{label}: cycles {'all share edges pairwise' if pairwise else 'meet only at a vertex'}"
            f" -> n = k(m-1)-{offset}"
        )
        run.equal(
            f"{label}: n", f"k(m-1)-{offset}",
            float(h.n), float(h.k * (h.m - 1) - offset), atol=0.0,
        )

    check(f"interlocked-cycles(m={m})", interlocking_cycles_example(m), 3)
    check(_theta_label((2, 0, 0, 0)), theta_hypergraph(3, (2, 0, 0, 0)), 3)
    check(_theta_label((0, 1, 0, 2)), theta_hypergraph(3, (0, 1, 0, 2)), 3)
    check(_t2c_label((3, 0, 0, 0, 0, 0, 0)), triple_fused_triangles(3, (3, 0, 0, 0, 0, 0, 0)), 3)
    check(_t2c_label((0,) * 7) + "@m4", triple_fused_triangles(4, (0,) * 7), 3)
    check(_b2c_label(2, 0), fused_triangles(3, 2), 2)


def _theta_scan(m: int, k: int, run: _Run) -> list[tuple[float, str]]:
    """Radii of all pendant placements on the two-junction skeleton.

    Compositions are deduplicated under the skeleton's symmetries (the
    two junction sites swap, as do the two mid sites).
    """
    rest = k - 5
    ranked: list[tuple[float, str]] = []
    for p0 in range(rest + 1):
        for p1 in range(rest - p0 + 1):
            for p2 in range(rest - p0 - p1 + 1):
                p3 = rest - p0 - p1 - p2
                comp = (p0, p1, p2, p3)
                if max(comp, (p2, p1, p0, p3), (p0, p3, p2, p1), (p2, p3, p0, p1)) != comp:
                    continue
                run.spend()
                ranked.append(
                    (_scan_radius(theta_hypergraph(m, comp)), _theta_label(comp))
                )
    ranked.sort(key=lambda item: (-item[0], item[1]))
    return ranked


def _theta_from_label(m: int, label: str) -> Hypergraph:
    comp = tuple(int(part) for part in label[len("theta("):-1].split(","))
    return theta_hypergraph(m, comp)


def _hyp_t1c_top(p: dict) -> str | None:
    if p["m"] < 3:
        return "needs edge size m >= 3"
    if p["k"] < 5:
        return "the two-junction skeleton needs at least 5 edges"
    return None


@_register(
    "T1C_TOP",
    "Among edge-sharing three-cycle shapes the maximizer piles every "
    "pendant edge on one junction of the two-junction skeleton, below a "
    "closed-form bound.",
    {"m": 3, "k": 36},
    _hyp_t1c_top,
)
def _run_t1c_top(p: dict, run: _Run) -> None:
    m, k = p["m"], p["k"]
    ranked = _theta_scan(m, k, run)
    run.note(f"scanned {len(ranked)} pendant placements on the skeleton")
    target_label = _theta_label((k - 5, 0, 0, 0))
    target = run.instance(target_label, theta_hypergraph(m, (k - 5, 0, 0, 0)))
    others = [item for item in ranked if item[1] != target_label]
    other_value = run.instance(others[0][1], _theta_from_label(m, others[0][1]))
    run.less(others[0][1], target_label, other_value, target)
    run.less(target_label, f"skeleton-bound(k={k})", target, theta_radius_bound(m, k))


def _hyp_t1c_second(p: dict) -> str | None:
    if p["m"] < 3:
        return "needs edge size m >= 3"
    if (p["k"] - 11) * (p["m"] - 1) < 42:
        return "needs (k-11)(m-1) >= 42"
    return None


@_register(
    "T1C_SECOND",
    "The runner-up on the two-junction skeleton moves one pendant edge to "
    "the opposite junction.",
    {"m": 3, "k": 36},
    _hyp_t1c_second,
)
def _run_t1c_second(p: dict, run: _Run) -> None:
    m, k = p["m"], p["k"]
    ranked = _theta_scan(m, k, run)
    run.note(f"scanned {len(ranked)} pendant placements on the skeleton")
    first_label = _theta_label((k - 5, 0, 0, 0))
    second_label = _theta_label((k - 6, 0, 1, 0))
    first = run.instance(first_label, theta_hypergraph(m, (k - 5, 0, 0, 0)))
    second = run.instance(second_label, theta_hypergraph(m, (k - 6, 0, 1, 0)))
    rest = [item for item in ranked if item[1] not in (first_label, second_label)]
    rest_value = run.instance(rest[0][1], _theta_from_label(m, rest[0][1]))
    run.less(second_label, first_label, second, first)
    run.less(rest[0][1], second_label, rest_value, second)


def _t2c_pool(m: int, k: int, run: _Run) -> list[tuple[str, tuple[int, ...]]]:
    """Structured pendant placements on the triple-triangle skeleton.

    All placements touching at most two sites, up to the skeleton's
    symmetries (triangles permute; the two free junctions of a triangle
    swap): site 0 is the shared junction, sites 1 and 2 sit on one
    triangle, site 3 on another.
    """
    rest = k - 9
    pool: list[tuple[str, tuple[int, ...]]] = []

    def add(comp: tuple[int, ...]) -> None:
        run.spend()
        pool.append((_t2c_label(comp), comp))

    add((rest, 0, 0, 0, 0, 0, 0))
    if rest:
        add((0, rest, 0, 0, 0, 0, 0))
    for a in range(1, rest):
        b = rest - a
        add((a, b, 0, 0, 0, 0, 0))
        if a >= b:
            add((0, a, b, 0, 0, 0, 0))
            add((0, a, 0, b, 0, 0, 0))
    return pool


def _hyp_t2c_top(p: dict) -> str | None:
    if p["m"] < 3:
        return "needs edge size m >= 3"
    if p["k"] < 9:
        return "three fused triangles need at least 9 edges"
    return None


@_register(
    "T2C_TOP",
    "Among vertex-sharing three-cycle shapes the maximizer piles every "
    "pendant edge on the shared junction of three fused triangles; its "
    "scaled radius is a root of an explicit quintic with a closed-form "
    "upper bound.",
    {"m": 3, "k": 36},
    _hyp_t2c_top,
)
def _run_t2c_top(p: dict, run: _Run) -> None:
    m, k = p["m"], p["k"]
    target_comp = (k - 9, 0, 0, 0, 0, 0, 0)
    target_label = _t2c_label(target_comp)
    target = run.instance(target_label, triple_fused_triangles(m, target_comp))
    best: tuple[float, str, tuple[int, ...]] | None = None
    for label, comp in _t2c_pool(m, k, run):
        if label == target_label:
            continue
        rad = _scan_radius(triple_fused_triangles(m, comp))
        if best is None or rad > best[0]:
            best = (rad, label, comp)
    run.note("candidates: one- and two-site pendant placements on the skeleton")
    if best is not None:
        run.less(
            best[1], target_label,
            run.instance(best[1], triple_fused_triangles(m, best[2])), target,
        )
    run.equal(
        "quintic-dominant-root/(m-1)",
        target_label,
        poly_radius(triple_fused_triangles_char_poly(m, k), m),
        target,
        atol=1e-9,
    )
    run.less(
        f"(m-1)*{target_label}",
        "scaled-upper-bound",
        (m - 1) * target,
        triple_fused_triangles_root_bound(m, k),
    )


def _hyp_t2c_second(p: dict) -> str | None:
    if p["m"] < 3:
        return "needs edge size m >= 3"
    if (p["k"] - 13) * (p["m"] - 1) < 46:
        return "needs (k-13)(m-1) >= 46"
    return None


@_register(
    "T2C_SECOND",
    "The runner-up on three fused triangles moves one pendant edge from "
    "the shared junction to a free junction.",
    {"m": 3, "k": 36},
    _hyp_t2c_second,
)
def _run_t2c_second(p: dict, run: _Run) -> None:
    m, k = p["m"], p["k"]
    first_comp = (k - 9, 0, 0, 0, 0, 0, 0)
    second_comp = (k - 10, 1, 0, 0, 0, 0, 0)
    first_label, second_label = _t2c_label(first_comp), _t2c_label(second_comp)
    first = run.instance(first_label, triple_fused_triangles(m, first_comp))
    second = run.instance(second_label, triple_fused_triangles(m, second_comp))
    best: tuple[float, str, tuple[int, ...]] | None = None
    for label, comp in _t2c_pool(m, k, run):
        if label in (first_label, second_label):
            continue
        rad = _scan_radius(triple_fused_triangles(m, comp))
        if best is None or rad > best[0]:
            best = (rad, label, comp)
    assert best is not None
    run.note("candidates: one- and two-site pendant placements on the skeleton")
    run.less(second_label, first_label, second, first)
    run.less(
        best[1], second_label,
        run.instance(best[1], triple_fused_triangles(m, best[2])), second,
    )


def _hyp_remark_bt(p: dict) -> str | None:
    if p["m"] < 3:
        return "needs edge size m >= 3"
    if p["k_min"] < 6:
        return "comparisons start at k = 6"
    if p["k_max"] < p["k_min"]:
        return "empty k range"
    return None


@_register(
    "REMARK_BT",
    "Edge-sharing three-cycle shapes beat the corresponding bicyclic "
    "leaders: junction-loaded skeleton over fused triangles, and the "
    "split skeleton over both bicyclic runners-up.",
    {"m": 3, "k_min": 6, "k_max": 12},
    _hyp_remark_bt,
)
def _run_remark_bt(p: dict, run: _Run) -> None:
    m = p["m"]
    for k in range(p["k_min"], p["k_max"] + 1):
        bc_label = _b2c_label(k - 6, 0) + f"@k{k}"
        theta_label = _theta_label((k - 5, 0, 0, 0))
        bc = run.instance(bc_label, fused_triangles(m, k - 6))
        theta_top = run.instance(theta_label, theta_hypergraph(m, (k - 5, 0, 0, 0)))
        run.less(bc_label, theta_label, bc, theta_top)

        theta2_label = _theta_label((k - 6, 0, 1, 0))
        theta2 = run.instance(theta2_label, theta_hypergraph(m, (k - 6, 0, 1, 0)))
        swap_label = _b2c_label(0, k - 6) + f"@k{k}"
        swap = run.instance(swap_label, fused_triangles_two_sites(m, 0, k - 6))
        run.less(swap_label, theta2_label, swap, theta2)
        if k >= 7:
            second_label = _b2c_label(k - 7, 1) + f"@k{k}"
            second = run.instance(second_label, fused_triangles_two_sites(m, k - 7, 1))
            run.less(second_label, theta2_label, second, theta2)


def _hyp_b2c_lemma(p: dict) -> str | None:
    if p["m"] < 3:
        return "needs edge size m >= 3"
    if p["total"] < 2:
        return "needs at least 2 pendant edges to shift between sites"
    return None


@_register(
    "B2C_LEMMA",
    "On fused triangles, shifting a pendant edge toward the larger bundle "
    "raises the radius, and the shared junction beats the side junction "
    "for the larger bundle.",
    {"m": 3, "total": 6},
    _hyp_b2c_lemma,
)
def _run_b2c_lemma(p: dict, run: _Run) -> None:
    m, total = p["m"], p["total"]

    def build(center: int, side: int) -> Hypergraph:
        if side:
            return fused_triangles_two_sites(m, center, side)
        return fused_triangles(m, center)

    l1, l2 = total - (total // 2), total // 2
    while l2 >= 1:
        lo_label, hi_label = _b2c_label(l1, l2), _b2c_label(l1 + 1, l2 - 1)
        lo = run.instance(lo_label, build(l1, l2))
        hi = run.instance(hi_label, build(l1 + 1, l2 - 1))
        run.less(lo_label, hi_label, lo, hi)
        l1, l2 = l1 + 1, l2 - 1
    for l2 in range(0, (total - 1) // 2 + 1):
        l1 = total - l2
        lo_label, hi_label = _b2c_label(l2, l1), _b2c_label(l1, l2)
        lo = run.instance(lo_label, build(l2, l1))
        hi = run.instance(hi_label, build(l1, l2))
        run.less(lo_label, hi_label, lo, hi)


# ---------------------------------------------------------------------------
# Harness
# ---------------------------------------------------------------------------


def verify(
    theorem_id: str,
    tol: float = DEFAULT_TOL,
    budget: int = DEFAULT_BUDGET,
    **params,
) -> VerificationReport:
    """Run one registry entry and assemble its report.

    ``params`` override the entry's defaults; unknown keys are rejected so
    CLI typos cannot silently verify the wrong claim.  Threshold failures
    (static, or value-level for the ratio claims) yield a
    ``hypotheses-unmet`` report that asserts nothing.
    """
    try:
        entry = REGISTRY[theorem_id]
    except KeyError:
        known = ", ".join(sorted(REGISTRY))
        raise ValueError(f"unknown theorem id {theorem_id!r}; known ids: {known}")
    unknown = set(params) - set(entry.defaults)
    if unknown:
        allowed = ", ".join(sorted(entry.defaults)) or "(none)"
        raise ValueError(
            f"unknown parameter(s) {sorted(unknown)} for {theorem_id}; "
            f"allowed: {allowed}"
        )
    merged = {**entry.defaults, **params}

    start = time.perf_counter()
    report = VerificationReport(
        theorem_id=theorem_id,
        params=merged,
        tol=tol,
        status=STATUS_PASS,
        passed=True,
    )

    reason = entry.hypotheses(merged)
    if reason is not None:
        report.status = STATUS_UNMET
        report.passed = False
        report.notes = [f"hypotheses unmet — vacuous: {reason}",
                        "outside stated hypotheses; no inequality asserted"]
        report.wall_time_s = time.perf_counter() - start
        return report

    run = _Run(tol=tol, budget=budget)
    try:
        entry.runner(merged, run)
    except _HypothesesUnmet as exc:
        report.status = STATUS_UNMET
        report.passed = False
        report.instances = run.instances
        report.notes = run.notes + [
            f"hypotheses unmet — vacuous: {exc}",
            "outside stated hypotheses; no inequality asserted",
        ]
        report.wall_time_s = time.perf_counter() - start
        return report

    report.instances = run.instances
    report.inequalities = run.inequalities
    report.notes = run.notes
    report.passed = all(rec.holds for rec in run.inequalities)
    report.status = STATUS_PASS if report.passed else STATUS_FAIL
    if not report.passed:
        failing = next(rec for rec in run.inequalities if not rec.holds)
        witnesses = {
            label: {"m": h.m, "edges": [list(e) for e in h.edges]}
            for label, h in run.witnesses.items()
            if label in (failing.lhs, failing.rhs)
        }
        report.counterexample = {
            "theorem_id": theorem_id,
            "params": merged,
            "inequality": failing.as_dict(),
            "witnesses": witnesses,
        }
    report.wall_time_s = time.perf_counter() - start
    return report
