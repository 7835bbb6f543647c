"""Cross-module verification suites behind the ``check`` command.

Each suite returns a list of named pass/fail results; the command line
formats them and turns any failure into a nonzero exit status.  The checks
mirror the library's invariants: the two fan constructions agree, cone
intersections obey the chain rule, graded ranks computed by formula and by
elimination coincide, tropical round trips are exact, and the normal
complex tiles the truncated support.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import chow, normal_complex, tropical
from .fan import (
    Fan,
    build_fan,
    build_fan_stellar,
    cone_dim,
    fans_equal,
    is_smooth_cone,
    locate_point,
)
from .guards import FeasibilityError
from .lattice import (
    ArrangementSpec,
    BuildingSet,
    Chain,
    chain_intersect,
    enumerate_chains,
)
from .sampling import Lcg, sample_curve, sample_mixed_points

SUITES = ("fan", "chow", "tropical", "normal")


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def _result(suite: str, name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(suite, name, bool(passed), detail)


def _cone_sets_intersect_as_chain(fan: Fan, a: Chain, b: Chain) -> bool:
    """Exact double inclusion of cone(a) ∩ cone(b) against the chain rule."""
    expected = chain_intersect(a, b)
    cone_a = fan.cone(a)
    cone_b = fan.cone(b)
    cone_e = fan.cone(expected)
    for g in cone_e.rays:
        if not (cone_a.contains(g) and cone_b.contains(g)):
            return False
    # conversely every ray of one cone lying in the other must be in the result
    for g in cone_a.rays:
        if cone_b.contains(g) and not cone_e.contains(g):
            return False
    for g in cone_b.rays:
        if cone_a.contains(g) and not cone_e.contains(g):
            return False
    # points of both cones must lie in the expected cone: sample the midpoint
    # of sums of generators, which is interior enough to catch mismatches
    suma = [sum(col) for col in zip(*cone_a.rays)] if cone_a.rays else None
    if suma is not None and cone_b.contains(suma) and not cone_e.contains(suma):
        return False
    sumb = [sum(col) for col in zip(*cone_b.rays)] if cone_b.rays else None
    if sumb is not None and cone_a.contains(sumb) and not cone_e.contains(sumb):
        return False
    return True


def suite_fan(spec: ArrangementSpec, seed: int = 0) -> list[CheckResult]:
    out: list[CheckResult] = []
    g = BuildingSet.maximal(spec)
    fan = build_fan(spec, g)
    out.append(
        _result(
            "fan",
            "ray count (1+r)^n - 1",
            len(fan.rays) == spec.num_subsets,
            f"{len(fan.rays)} rays",
        )
    )
    maximal = [c for c in fan.maximal_cones if c.dim == spec.n]
    out.append(
        _result(
            "fan",
            "maximal cone count n! r^n",
            spec.n == 0 or len(maximal) == spec.num_maximal_chains,
            f"{len(maximal)} maximal cones",
        )
    )
    try:
        stellar = build_fan_stellar(spec, g)
        out.append(_result("fan", "stellar route equals direct route", fans_equal(fan, stellar)))
    except FeasibilityError as exc:
        out.append(_result("fan", "stellar route equals direct route", False, str(exc)))
    chains = list(enumerate_chains(spec, spec.n))
    pairs: list[tuple[Chain, Chain]]
    if len(chains) ** 2 <= 2500:
        pairs = list(itertools.product(chains, chains))
    else:
        rng = Lcg(seed)
        pairs = [
            (chains[rng.below(len(chains))], chains[rng.below(len(chains))])
            for _ in range(1000)
        ]
    bad = sum(1 for a, b in pairs if not _cone_sets_intersect_as_chain(fan, a, b))
    out.append(
        _result(
            "fan",
            "cone intersection law",
            bad == 0,
            f"{len(pairs)} pairs checked, {bad} failures",
        )
    )
    rough = [c for c in maximal if not is_smooth_cone(c)]
    out.append(
        _result("fan", "maximal cones unimodular", not rough, f"{len(maximal)} cones")
    )
    out.append(
        _result(
            "fan",
            "cone dimension equals chain length",
            all(cone_dim(c) == len(c.label) for c in fan.cones.values()),
        )
    )
    rng = Lcg(seed)
    points = sample_mixed_points(rng, spec, 1000)
    located = sum(1 for p in points if locate_point(fan, p) is not None)
    if spec.r == 2:
        out.append(
            _result(
                "fan",
                "complete for r = 2: all sampled points locate",
                located == len(points),
                f"{located}/{len(points)}",
            )
        )
    else:
        out.append(
            _result(
                "fan",
                "not complete for r > 2: some sampled point fails to locate",
                located < len(points),
                f"{located}/{len(points)}",
            )
        )
    return out


def suite_chow(spec: ArrangementSpec, seed: int = 0) -> list[CheckResult]:
    out: list[CheckResult] = []
    closed = chow.betti_closed_form(spec)
    try:
        oracle = chow.betti_oracle(spec)
        out.append(
            _result(
                "chow",
                "closed form equals rank oracle",
                closed == oracle,
                f"closed {closed.dims}, oracle {oracle.dims}",
            )
        )
    except FeasibilityError as exc:
        out.append(_result("chow", "closed form equals rank oracle", False, str(exc)))
        oracle = None
    pres = chow.presentation(spec)
    out.append(
        _result(
            "chow",
            "rank-1 piece matches ray count minus reduced relations",
            closed.dims[1] == spec.num_subsets - spec.n * (spec.r - 1)
            if spec.n >= 1
            else True,
        )
    )
    out.append(
        _result(
            "chow",
            "reduced relation count n (r-1)",
            len(pres.reduced_indices) == spec.n * (spec.r - 1),
            f"{len(pres.reduced_indices)} independent of {len(pres.linear_relations)} emitted",
        )
    )
    census = chow.jump_census(spec)
    expected_ok = all(
        count == chow.expected_jump_count(spec, jt) for jt, count in census.items()
    )
    total = sum(census.values())
    n_chains = sum(1 for c in enumerate_chains(spec, spec.n) if c.length > 0)
    out.append(
        _result(
            "chow",
            "jump census matches multinomial counts",
            expected_ok and total == n_chains,
            f"{len(census)} jump types, {total} chains",
        )
    )
    if spec.n >= 2 and spec.num_subsets <= 40:
        reducer = chow.DegreeReducer(spec, 2)
        gens = pres.generators
        bad = 0
        for x, y in itertools.combinations_with_replacement(gens, 2):
            vanishes = chow.product_support([x, y]) is None
            if vanishes != reducer.monomial_is_zero([x, y]):
                bad += 1
        out.append(
            _result(
                "chow",
                "degree-2 products vanish exactly when incomparable",
                bad == 0,
                f"{bad} mismatches",
            )
        )
    return out


def suite_tropical(spec: ArrangementSpec, seed: int = 0) -> list[CheckResult]:
    out: list[CheckResult] = []
    fan = build_fan(spec, BuildingSet.maximal(spec))
    rng = Lcg(seed)
    curves = [sample_curve(rng, spec) for _ in range(500)]
    round_trip = all(
        tropical.curve_from_point(tropical.embed(c, spec), spec) == c for c in curves
    )
    out.append(_result("tropical", "curve -> point -> curve round trip", round_trip))
    consistent = all(
        tropical.combinatorial_type(c, spec)
        == locate_point(fan, tropical.embed(c, spec))
        for c in curves
    )
    out.append(
        _result("tropical", "combinatorial type agrees with point location", consistent)
    )
    scaling = all(
        tropical.combinatorial_type(c, spec)
        == tropical.combinatorial_type(c.scaled(3), spec)
        for c in curves[:100]
    )
    out.append(_result("tropical", "type is scaling invariant", scaling))
    return out


def suite_normal(spec: ArrangementSpec, seed: int = 0) -> list[CheckResult]:
    out: list[CheckResult] = []
    try:
        complex_ = normal_complex.complex_cells(spec)
    except FeasibilityError as exc:
        return [_result("normal", "cell construction", False, str(exc))]
    out.append(
        _result(
            "normal",
            "one cell per maximal chain",
            len(complex_.cells) == spec.num_maximal_chains,
            f"{len(complex_.cells)} cells",
        )
    )
    origin = tuple(Fraction(0) for _ in range(spec.ambient_dim))
    out.append(
        _result(
            "normal",
            "origin is a vertex of every cell",
            all(origin in cell.v_rep for cell in complex_.cells),
        )
    )
    rng = Lcg(seed)
    points = sample_mixed_points(rng, spec, 500, max_abs=spec.n + 2)
    bad = sum(
        1
        for p in points
        if complex_.contains(p) != normal_complex.in_delta(p, spec)
    )
    out.append(
        _result(
            "normal",
            "cells tile the truncated support",
            bad == 0,
            f"{len(points)} points, {bad} mismatches",
        )
    )
    if (spec.r, spec.n) == (2, 2):
        extremes = set(normal_complex.union_extreme_points(spec))
        expect = {
            (Fraction(sa * a), Fraction(sb * b))
            for a, b in itertools.permutations((1, 2))
            for sa in (1, -1)
            for sb in (1, -1)
        }
        out.append(
            _result(
                "normal",
                "union extremes are the signed permutations of (1, 2)",
                extremes == expect,
                f"{len(extremes)} extreme points",
            )
        )
    return out


def run_suites(
    spec: ArrangementSpec, suites: tuple[str, ...] = SUITES, seed: int = 0
) -> list[CheckResult]:
    table = {
        "fan": suite_fan,
        "chow": suite_chow,
        "tropical": suite_tropical,
        "normal": suite_normal,
    }
    out: list[CheckResult] = []
    for name in suites:
        out.extend(table[name](spec, seed))
    return out
