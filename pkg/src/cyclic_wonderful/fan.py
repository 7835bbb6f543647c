"""The nested-set fan over integer lattice coordinates.

Ambient space.  Each line factor contributes a copy of R^r modulo its
diagonal.  Coordinates eliminate the 0-th basis image per factor, so the
lattice is Z^(n*(r-1)) with basis images

    e_i^j  ->  unit vector at slot (i, j)          for j in 1..r-1,
    e_i^0  ->  (-1, ..., -1) in factor i's block.

Rays.  The decorated subset (I, a) gives the primitive integer vector
u = sum_{i in I} e_i^(-a(i) mod r); a chain contributes one ray per decorated
prefix and those rays span a simplicial cone whose dimension is the chain
length.

Two constructions are provided: the direct one (one cone per nested set) and
the stellar route, which starts from the product of the n one-dimensional
factor fans and subdivides at the non-singleton ray vectors in an
inclusion-increasing order.  They must agree cone-for-cone, and the test
suite checks that they do.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Mapping, Sequence

from .guards import check_fan_size
from .lattice import (
    ArrangementSpec,
    BuildingSet,
    Chain,
    DecoratedSubset,
    enumerate_chains,
    is_nested,
    validate_subset,
)
from .linalg import matrix_rank, smith_divisors, solve_columns

Vector = tuple[int, ...]


def basis_labels(spec: ArrangementSpec) -> list[str]:
    """Names of the ambient coordinates, ``e_i^j`` with j in 1..r-1."""
    return [f"e_{i}^{j}" for i in range(1, spec.n + 1) for j in range(1, spec.r - 1 + 1)]


def basis_image(spec: ArrangementSpec, i: int, a: int) -> Vector:
    """Integer coordinates of the image of e_i^a, for any residue a in Z_r."""
    if not 1 <= i <= spec.n:
        raise ValueError(f"factor index {i} outside [1, {spec.n}]")
    a %= spec.r
    block = spec.r - 1
    vec = [0] * spec.ambient_dim
    off = (i - 1) * block
    if a == 0:
        for j in range(block):
            vec[off + j] = -1
    else:
        vec[off + a - 1] = 1
    return tuple(vec)


def ray_vector(d: DecoratedSubset, spec: ArrangementSpec) -> Vector:
    """Primitive generator of the ray labelled by a nonempty decorated subset."""
    if d.size == 0:
        raise ValueError("the empty decorated subset has no ray")
    validate_subset(d, spec)
    vec = [0] * spec.ambient_dim
    for i, a in d.items:
        img = basis_image(spec, i, (-a) % spec.r)
        vec = [x + y for x, y in zip(vec, img)]
    # entries are 0 or +-1 with at least one nonzero, hence already primitive
    assert _vector_gcd(vec) == 1
    return tuple(vec)


def _vector_gcd(vec: Iterable[int]) -> int:
    g = 0
    for x in vec:
        g = gcd(g, x)
    return g


@dataclass(frozen=True)
class Cone:
    """A simplicial cone: primitive ray generators plus its nested-set label."""

    rays: tuple[Vector, ...]
    label: tuple[DecoratedSubset, ...]

    @property
    def dim(self) -> int:
        return len(self.rays)

    def chain(self) -> Chain:
        """The label as a chain; valid whenever the label is totally ordered."""
        return Chain.from_prefixes(self.label)

    def contains(self, point: Sequence) -> bool:
        return self.coefficients(point) is not None

    def coefficients(self, point: Sequence) -> list[Fraction] | None:
        """Nonnegative cone coordinates of an ambient point, if it lies here."""
        if not self.rays:
            return [] if all(Fraction(x) == 0 for x in point) else None
        sol = solve_columns(self.rays, point)
        if sol is None or any(c < 0 for c in sol):
            return None
        return sol


@dataclass(frozen=True, eq=False)
class Fan:
    """An immutable fan: a ray per building-set element used, cones by label."""

    spec: ArrangementSpec
    building_set: BuildingSet
    rays: dict[DecoratedSubset, Vector]
    cones: dict[frozenset[DecoratedSubset], Cone]

    def cone(self, label: Chain | Iterable[DecoratedSubset]) -> Cone:
        key = frozenset(label.prefixes()) if isinstance(label, Chain) else frozenset(label)
        return self.cones[key]

    @cached_property
    def maximal_cones(self) -> tuple[Cone, ...]:
        keys = list(self.cones)
        maximal = [
            k for k in keys if not any(k < other for other in keys)
        ]
        maximal.sort(key=lambda k: sorted(d.sort_key() for d in k))
        return tuple(self.cones[k] for k in maximal)

    def chains(self) -> list[Chain]:
        """All cone labels as chains (maximal building set fans only)."""
        return sorted((c.chain() for c in self.cones.values()), key=Chain.sort_key)


def _make_cone(label: Iterable[DecoratedSubset], rays: Mapping[DecoratedSubset, Vector]) -> Cone:
    ordered = tuple(sorted(label, key=DecoratedSubset.sort_key))
    return Cone(tuple(rays[d] for d in ordered), ordered)


def _nested_sets(g: BuildingSet) -> list[frozenset[DecoratedSubset]]:
    """All g-nested subsets of g, the empty set included.

    Nestedness is hereditary, so a depth-first search that only extends
    nested sets is exhaustive.
    """
    elements = g.sorted_elements()
    found: list[frozenset[DecoratedSubset]] = [frozenset()]

    def extend(current: list[DecoratedSubset], start: int) -> None:
        for k in range(start, len(elements)):
            cand = elements[k]
            if not is_nested(current + [cand], g):
                continue
            current.append(cand)
            found.append(frozenset(current))
            extend(current, k + 1)
            current.pop()

    extend([], 0)
    return found


def build_fan(spec: ArrangementSpec, g: BuildingSet) -> Fan:
    """One cone per g-nested set, each spanned by its members' ray vectors."""
    if not g.validated:
        raise ValueError("building set must be validated before building a fan")
    check_fan_size(len(g.elements), spec.num_maximal_chains)
    rays = {d: ray_vector(d, spec) for d in g.sorted_elements()}
    if g.is_maximal:
        labels = [
            frozenset(chain.prefixes())
            for chain in enumerate_chains(spec, spec.n)
        ]
    else:
        labels = _nested_sets(g)
    cones = {label: _make_cone(label, rays) for label in labels}
    return Fan(spec, g, rays, cones)


def _star_subdivide(
    cones: set[frozenset[DecoratedSubset]],
    rays: Mapping[DecoratedSubset, Vector],
    new_label: DecoratedSubset,
    v: Vector,
) -> set[frozenset[DecoratedSubset]]:
    """Stellar subdivision at v, which must lie in the relative interior of
    a unique existing cone tau.  Cones containing tau are replaced by joins
    of the new ray with their faces not containing tau."""
    tau = None
    for s in cones:
        if not s:
            continue
        cone = _make_cone(s, rays)
        coeffs = cone.coefficients(v)
        if coeffs is not None and all(c > 0 for c in coeffs):
            tau = s
            break
    if tau is None:
        raise ValueError("subdivision vector lies outside the fan support")
    out = {s for s in cones if not tau <= s}
    for s in cones:
        if tau <= s:
            continue
        if (s | tau) in cones:
            out.add(s | {new_label})
    return out


def build_fan_stellar(spec: ArrangementSpec, g: BuildingSet) -> Fan:
    """Stellar-subdivision construction of the same fan.

    Starts from the product of the factor fans (all cones with at most one
    singleton ray per factor) and subdivides at the ray vector of every
    non-singleton element, ordered by increasing inclusion of the loci the
    elements cut out: deepest intersections first, so support size runs
    downward (ties broken by the global deterministic order).  A final pass
    discards any cone whose label set fails nestedness; with this order the
    pass is a safety net and removes nothing.
    """
    if not g.validated:
        raise ValueError("building set must be validated before building a fan")
    check_fan_size(len(g.elements), spec.num_maximal_chains)
    singles = BuildingSet.singletons(spec).elements
    if not singles <= g.elements:
        raise ValueError(
            "stellar construction needs every decorated singleton: the factor "
            "projections of the building set must themselves be building sets"
        )
    rays: dict[DecoratedSubset, Vector] = {
        d: ray_vector(d, spec) for d in sorted(singles, key=DecoratedSubset.sort_key)
    }
    # product fan: at most one singleton ray per factor
    per_factor: list[list[DecoratedSubset | None]] = [
        [None] + [DecoratedSubset(((i, a),)) for a in range(spec.r)]
        for i in range(1, spec.n + 1)
    ]
    cones: set[frozenset[DecoratedSubset]] = set()
    for combo in itertools.product(*per_factor):
        cones.add(frozenset(d for d in combo if d is not None))
    # larger supports cut out smaller loci, which must be subdivided first
    for d in sorted(g.elements - singles, key=lambda x: (-x.size, x.items)):
        v = ray_vector(d, spec)
        cones = _star_subdivide(cones, rays, d, v)
        rays[d] = v
    kept = {s for s in cones if is_nested(s, g)}
    cone_map = {s: _make_cone(s, rays) for s in kept}
    used = {d for s in kept for d in s}
    ray_map = {d: rays[d] for d in sorted(used, key=DecoratedSubset.sort_key)}
    return Fan(spec, g, ray_map, cone_map)


def fans_equal(f1: Fan, f2: Fan) -> bool:
    """Equality as sets of cones, each cone taken as its set of generators."""
    if f1.spec != f2.spec:
        raise ValueError("fans live over different parameters")
    set1 = {frozenset(c.rays) for c in f1.cones.values()}
    set2 = {frozenset(c.rays) for c in f2.cones.values()}
    return set1 == set2


def locate_point(fan: Fan, point: Sequence) -> Chain | None:
    """The chain whose cone's relative interior contains the point.

    Tries every maximal cone with an exact rational solve; the located chain
    keeps exactly the generators with strictly positive coefficients.
    Returns None when the point is outside the fan's support.
    """
    point = tuple(Fraction(x) for x in point)
    if len(point) != fan.spec.ambient_dim:
        raise ValueError(
            f"point has length {len(point)}, expected {fan.spec.ambient_dim}"
        )
    for cone in fan.maximal_cones:
        coeffs = cone.coefficients(point)
        if coeffs is None:
            continue
        support = [d for d, c in zip(cone.label, coeffs) if c > 0]
        return Chain.from_prefixes(support)
    return None


def is_smooth_cone(cone: Cone) -> bool:
    """Whether the generators extend to a basis of the ambient lattice.

    Computed as all Smith-form elementary divisors of the generator matrix
    being 1 (rank deficiency shows up as a zero divisor).
    """
    if not cone.rays:
        return True
    divisors = smith_divisors([list(v) for v in cone.rays])
    return len(divisors) == len(cone.rays) and all(d == 1 for d in divisors)


def cone_dim(cone: Cone) -> int:
    if not cone.rays:
        return 0
    return matrix_rank([list(v) for v in cone.rays])


def support_decomposition(
    point: Sequence, spec: ArrangementSpec
) -> list[tuple[Fraction, int | None]] | None:
    """Per-factor lengths and directions of a point of the fan's support.

    A point lies in the support exactly when each factor block is a
    nonnegative multiple x_i of a single basis image e_i^(a_i).  Returns the
    list of (x_i, a_i) pairs with a_i = None when x_i = 0, or None when some
    block has the wrong shape.
    """
    point = tuple(Fraction(x) for x in point)
    if len(point) != spec.ambient_dim:
        raise ValueError(
            f"point has length {len(point)}, expected {spec.ambient_dim}"
        )
    block = spec.r - 1
    out: list[tuple[Fraction, int | None]] = []
    for i in range(spec.n):
        coords = point[i * block : (i + 1) * block]
        nonzero = [(j, x) for j, x in enumerate(coords, start=1) if x != 0]
        if not nonzero:
            out.append((Fraction(0), None))
        elif len(nonzero) == 1 and nonzero[0][1] > 0:
            out.append((nonzero[0][1], nonzero[0][0]))
        elif len(nonzero) == block and all(x == coords[0] for x in coords) and coords[0] < 0:
            out.append((-coords[0], 0))
        else:
            return None
    return out
