"""Chow presentation of the compactified moduli space and its graded ranks.

The ring is generated by one boundary-divisor class per nonempty decorated
subset.  Relations come in two families:

* products of incomparable generators vanish (the divisors are disjoint);
* for every factor i and every pair of residues a, b, the sum of the
  generators whose decoration sends i to a equals the sum of those sending
  i to b.

Graded ranks are computed two independent ways.  The closed form sums
binomials over jump types: the rank of degree k is

    C(n, k) + sum over compositions j with all parts >= 2 and |j| <= n of
    N_j * sum_{mu, 1 <= mu_t < j_t} C(n - |j|, k - |mu|),

with N_j = multinomial(n; j) * r^|j|.  The oracle knows nothing of that
formula: it spans degree k by the monomials whose support is a chain,
expands (linear relation) x (chain monomial of degree k-1) against that
spanning set, and subtracts the exact rank of the resulting integer matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, factorial
from typing import Iterable, Iterator, Sequence

from .guards import check_oracle_size
from .lattice import (
    ArrangementSpec,
    Chain,
    DecoratedSubset,
    JumpType,
    comparable,
    enumerate_chains,
    enumerate_decorated_subsets,
    jump_type,
)
from .linalg import SparseEliminator, independent_row_indices


@dataclass(frozen=True)
class GradedDims:
    """Ranks b_0, ..., b_n of the graded pieces."""

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.dims or self.dims[0] != 1:
            raise ValueError(f"degree-zero rank must be 1, got {self.dims}")

    @property
    def total(self) -> int:
        return sum(self.dims)


@dataclass(frozen=True)
class LinearRelation:
    """sum of generators decorating i by a, minus those decorating i by b."""

    i: int
    a: int
    b: int
    coeffs: tuple[tuple[int, int], ...]  # (generator index, +-1)

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)


@dataclass(frozen=True, eq=False)
class ChowPresentation:
    spec: ArrangementSpec
    generators: tuple[DecoratedSubset, ...]
    linear_relations: tuple[LinearRelation, ...]
    reduced_indices: tuple[int, ...]

    def generator_index(self, d: DecoratedSubset) -> int:
        return self._index[d]

    @property
    def _index(self) -> dict[DecoratedSubset, int]:
        return {d: k for k, d in enumerate(self.generators)}

    def monomial_vanishes(self, a: DecoratedSubset, b: DecoratedSubset) -> bool:
        """The quadratic relation: the product is zero iff incomparable."""
        return not comparable(a, b)

    def reduced_linear_relations(self) -> tuple[LinearRelation, ...]:
        return tuple(self.linear_relations[k] for k in self.reduced_indices)


def presentation(spec: ArrangementSpec) -> ChowPresentation:
    """Generators in the global order plus the emitted linear relations.

    Emits one relation per (i, a, b) with a < b, n*r*(r-1)/2 in all, and
    records a maximal independent subset of them (n*(r-1) relations).
    """
    generators = tuple(enumerate_decorated_subsets(spec))
    index = {d: k for k, d in enumerate(generators)}
    relations = []
    for i in range(1, spec.n + 1):
        for a, b in itertools.combinations(range(spec.r), 2):
            coeffs: dict[int, int] = {}
            for d in generators:
                deco = dict(d.items)
                if deco.get(i) == a:
                    coeffs[index[d]] = 1
                elif deco.get(i) == b:
                    coeffs[index[d]] = -1
            relations.append(LinearRelation(i, a, b, tuple(sorted(coeffs.items()))))
    reduced = independent_row_indices(r.as_dict() for r in relations)
    return ChowPresentation(spec, generators, tuple(relations), tuple(reduced))


def product_support(ds: Sequence[DecoratedSubset]) -> Chain | None:
    """The stratum chain cut out by a product of divisor generators.

    Returns the chain of the distinct factors when they are pairwise
    comparable, and None when any pair is incomparable (the product is zero).
    """
    if not ds:
        raise ValueError("product of an empty list of divisors is undefined")
    distinct = sorted(set(ds), key=DecoratedSubset.sort_key)
    for a, b in itertools.combinations(distinct, 2):
        if not comparable(a, b):
            return None
    return Chain.from_prefixes(distinct)


# ---------------------------------------------------------------------------
# Closed-form graded ranks
# ---------------------------------------------------------------------------


def _compositions_min2(total_max: int) -> Iterator[tuple[int, ...]]:
    """Compositions with all parts >= 2 and sum <= total_max, any length >= 1."""

    def extend(prefix: tuple[int, ...], remaining: int) -> Iterator[tuple[int, ...]]:
        for part in range(2, remaining + 1):
            yield prefix + (part,)
            yield from extend(prefix + (part,), remaining - part)

    yield from extend((), total_max)


def _multinomial(n: int, parts: Sequence[int]) -> int:
    rest = n - sum(parts)
    if rest < 0:
        return 0
    out = factorial(n) // factorial(rest)
    for p in parts:
        out //= factorial(p)
    return out


def betti_closed_form(spec: ArrangementSpec) -> GradedDims:
    """Graded ranks via the jump-type sum.

    Compositions with a part below 2 contribute nothing (their inner index
    set is empty), so the iteration skips them outright.
    """
    n, r = spec.n, spec.r
    dims = []
    for k in range(n + 1):
        total = comb(n, k)
        for j in _compositions_min2(n):
            nj = _multinomial(n, j) * r ** sum(j)
            if nj == 0:
                continue
            inner = 0
            for mu in itertools.product(*(range(1, part) for part in j)):
                m = n - sum(j)
                kk = k - sum(mu)
                if 0 <= kk <= m:
                    inner += comb(m, kk)
            total += nj * inner
        dims.append(total)
    return GradedDims(tuple(dims))


def jump_census(spec: ArrangementSpec) -> dict[JumpType, int]:
    """Chain counts by jump type, over every nonempty chain."""
    census: dict[JumpType, int] = {}
    for chain in enumerate_chains(spec, spec.n):
        if chain.length == 0:
            continue
        jt = jump_type(chain)
        census[jt] = census.get(jt, 0) + 1
    return census


def expected_jump_count(spec: ArrangementSpec, jt: JumpType) -> int:
    """multinomial(n; j_1, ..., j_l) * r^|j| ordered tuples of disjoint sets."""
    return _multinomial(spec.n, jt.parts) * spec.r ** jt.total


# ---------------------------------------------------------------------------
# Rank oracle
# ---------------------------------------------------------------------------


class _ChainMonomials:
    """Degree-graded monomials in the generators whose support is a chain."""

    def __init__(self, spec: ArrangementSpec):
        check_oracle_size(spec.num_subsets)
        self.generators = tuple(enumerate_decorated_subsets(spec))
        m = len(self.generators)
        self.comp = [
            [comparable(self.generators[x], self.generators[y]) for y in range(m)]
            for x in range(m)
        ]
        self._by_degree: dict[int, list[tuple[int, ...]]] = {0: [()]}

    def degree(self, k: int) -> list[tuple[int, ...]]:
        if k not in self._by_degree:
            prev = self.degree(k - 1)
            out = []
            for mono in prev:
                start = mono[-1] if mono else 0
                for g in range(start, len(self.generators)):
                    if all(self.comp[g][x] for x in mono):
                        out.append(mono + (g,))
            self._by_degree[k] = out
        return self._by_degree[k]

    def extend(self, mono: tuple[int, ...], g: int) -> tuple[int, ...] | None:
        """mono * generator g, or None when the support stops being a chain."""
        if not all(self.comp[g][x] for x in mono):
            return None
        return tuple(sorted(mono + (g,)))


def _relation_rows(
    monomials: _ChainMonomials,
    relations: Iterable[LinearRelation],
    k: int,
) -> Iterator[dict[int, int]]:
    """Rows of the degree-k relation space over the chain-monomial basis.

    Multiplier monomials with non-chain support are skipped: every term they
    produce dies under the quadratic relations anyway.
    """
    index = {mono: pos for pos, mono in enumerate(monomials.degree(k))}
    for rel in relations:
        for mono in monomials.degree(k - 1):
            row: dict[int, int] = {}
            for g, coeff in rel.coeffs:
                prod = monomials.extend(mono, g)
                if prod is not None:
                    row[index[prod]] = row.get(index[prod], 0) + coeff
            if row:
                yield row


def betti_oracle(spec: ArrangementSpec) -> GradedDims:
    """Graded ranks by exact elimination, independent of the closed form."""
    check_oracle_size(spec.num_subsets)
    pres = presentation(spec)
    monomials = _ChainMonomials(spec)
    dims = [1]
    for k in range(1, spec.n + 1):
        elim = SparseEliminator()
        for row in _relation_rows(monomials, pres.linear_relations, k):
            elim.add(row)
        dims.append(len(monomials.degree(k)) - elim.rank)
    return GradedDims(tuple(dims))


class DegreeReducer:
    """Membership tests against the degree-k relation space.

    Used to cross-check the product-vanishing predicate: a degree-k monomial
    maps to zero in the quotient iff its support is not a chain or its basis
    vector lies in the span of the relation rows.
    """

    def __init__(self, spec: ArrangementSpec, k: int):
        self.spec = spec
        self.k = k
        self.monomials = _ChainMonomials(spec)
        self._index = {m: i for i, m in enumerate(self.monomials.degree(k))}
        pres = presentation(spec)
        self._elim = SparseEliminator()
        for row in _relation_rows(self.monomials, pres.linear_relations, k):
            self._elim.add(row)

    def monomial_is_zero(self, gens: Sequence[DecoratedSubset]) -> bool:
        if len(gens) != self.k:
            raise ValueError(f"expected a degree-{self.k} monomial")
        pres_gens = self.monomials.generators
        idx = {d: i for i, d in enumerate(pres_gens)}
        mono = tuple(sorted(idx[d] for d in gens))
        for x, y in itertools.combinations(mono, 2):
            if not self.monomials.comp[x][y]:
                return True
        return self._elim.is_in_span({self._index[mono]: 1})
