"""Parameter sweeps comparing closed forms and invariants against the engine.

Each suite returns a :class:`SuiteResult`; a suite passes when it records no
failures. Random corpora come from a seeded :class:`random.Random`, so runs
are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, product
from typing import Any, Callable

from . import closed_forms as cf
from .chordal import (
    b_sequence_of_cochordal,
    complement_component_count,
    decycling_number,
    is_chordal,
    is_cochordal,
    leaf_order,
    maximal_cliques,
    vertex_connectivity,
)
from .engine import (
    brute_force_polynomial,
    eval_minus_one,
    independence_number_bnb,
    independence_polynomial,
)
from .families import (
    BigStarParams,
    BouquetParams,
    CaterpillarSpec,
    TwoCliqueParams,
    WhiskerSpec,
    big_star,
    caterpillar,
    clique_bouquet,
    cochordal_symmetric_witness,
    exponential_witness,
    path,
    two_clique,
    whisker,
)
from .graph import (
    Graph,
    closed_neighborhood,
    complement,
    delete,
    disjoint_union,
    from_edge_list,
    is_connected,
    is_tree,
)
from .poly import eval_at, h_transform, is_symmetric, is_unimodal, multiplicity_at_minus_one


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: int = 0
    first_counterexample: dict[str, Any] | None = None
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def check(self, ok: bool, **case: Any) -> bool:
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.first_counterexample is None:
                self.first_counterexample = case
        return ok

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "checked": self.checked,
            "failures": self.failures,
            "passed": self.ok,
            "first_counterexample": self.first_counterexample,
            "details": self.details,
        }


# -- random corpora ---------------------------------------------------------

def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return from_edge_list(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_graphs(rng: random.Random, count: int, max_n: int, min_n: int = 0) -> list[Graph]:
    densities = (0.1, 0.25, 0.5, 0.75, 0.9)
    return [random_graph(rng, rng.randint(min_n, max_n), densities[i % len(densities)]) for i in range(count)]


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform labelled tree via a random Pruefer sequence."""
    if n <= 2:
        return path(n)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    edges.append((u, w))
    return from_edge_list(n, edges)


def _edges(g: Graph) -> list[list[int]]:
    return [list(e) for e in g.edges()]


# -- suites -----------------------------------------------------------------

def verify_paths(max_n: int = 60) -> SuiteResult:
    res = SuiteResult("paths")
    for n in range(max_n + 1):
        p = independence_polynomial(path(n))
        res.check(p == cf.path_polynomial(n), n=n, check="polynomial")
        res.check(eval_minus_one(path(n)) == cf.path_minus_one(n), n=n, check="value")
        if n >= 2:
            rec = cf.path_minus_one(n - 1) - cf.path_minus_one(n - 2)
            res.check(cf.path_minus_one(n) == rec, n=n, check="recurrence")
    return res


def verify_big_stars(max_arm: int = 7, max_q: int = 5, min_q: int = 3) -> SuiteResult:
    res = SuiteResult("big-stars")
    symmetric = []
    instances = 0
    for q in range(min_q, max_q + 1):
        for arms in combinations_with_replacement(range(1, max_arm + 1), q):
            instances += 1
            params = BigStarParams(arms)
            g = big_star(params)
            p = independence_polynomial(g)
            value = eval_at(p, -1)
            alpha = p.degree
            case = {"arms": list(arms)}
            res.check(g.n == 1 + sum(arms), check="vertex count", **case)
            res.check(cf.big_star_poly_formula(params) == p, check="product formula", **case)
            res.check(cf.big_star_minus_one(params) == value, check="value", **case)
            res.check(cf.big_star_minus_one_products(params) == value, check="value via products", **case)
            res.check(cf.big_star_sign(params) == value, check="sign corollary", **case)
            res.check(cf.big_star_is_zero(params) == (value == 0), check="zero criterion", **case)
            res.check(cf.big_star_alpha(params) == alpha, check="alpha", **case)
            res.check(
                cf.big_star_pseudo_gorenstein(params) == (value == (-1) ** alpha),
                check="pseudo-Gorenstein*",
                **case,
            )
            sym = is_symmetric(p)
            res.check(cf.big_star_is_symmetric(params) == sym, check="symmetry", **case)
            if sym:
                symmetric.append(list(arms))
    res.details = {"instances": instances, "symmetric_instances": symmetric}
    return res


def verify_caterpillars(max_n: int = 6, max_f: int = 2) -> SuiteResult:
    res = SuiteResult("caterpillars")
    instances = 0
    for n in range(1, max_n + 1):
        for f in product(range(max_f + 1), repeat=n):
            instances += 1
            spec = CaterpillarSpec(n, f)
            g = caterpillar(spec)
            p = independence_polynomial(g)
            value = eval_at(p, -1)
            alpha = p.degree
            case = {"n": n, "f": list(f)}
            res.check(is_tree(g), check="is tree", **case)
            res.check(cf.caterpillar_minus_one(spec) == value, check="value", **case)
            res.check(cf.caterpillar_is_zero(spec) == (value == 0), check="zero criterion", **case)
            if value != 0:
                res.check(cf.caterpillar_sign(spec) == value, check="sign", **case)
            res.check(cf.caterpillar_alpha(spec) == alpha, check="alpha", **case)
            res.check(
                cf.caterpillar_pseudo_gorenstein(spec) == (value == (-1) ** alpha),
                check="pseudo-Gorenstein*",
                **case,
            )
            gaps = cf.caterpillar_gaps(spec)
            res.check(sum(gaps.m) == n - gaps.r, check="gap sum", **case)
            if all(x >= 1 for x in f):
                res.check(cf.caterpillar_symmetric_criterion(spec) == is_symmetric(p), check="symmetry", **case)
    res.details = {"instances": instances}
    return res


def verify_whiskers(count: int = 200, max_base: int = 8, max_f: int = 3, seed: int = 0) -> SuiteResult:
    res = SuiteResult("whiskers")
    rng = random.Random(seed)
    symmetric_seen = 0
    for k, h in enumerate(random_graphs(rng, count, max_base, min_n=1)):
        # one unrestricted leaf assignment, one with every f_i >= 1
        f_any = tuple(rng.randint(0, max_f) for _ in range(h.n))
        f_full = (2,) * h.n if k % 4 == 0 else tuple(rng.randint(1, max_f) for _ in range(h.n))
        for f in (f_any, f_full):
            spec = WhiskerSpec(h, f)
            g = whisker(spec)
            p = independence_polynomial(g)
            case = {"base_n": h.n, "base_edges": _edges(h), "f": list(f)}
            res.check(g.n == h.n + sum(f), check="vertex count", **case)
            res.check(cf.whisker_polynomial(spec) == p, check="polynomial", **case)
            res.check(cf.whisker_minus_one(spec) == eval_at(p, -1), check="value", **case)
            res.check(cf.whisker_alpha(spec) == p.degree, check="alpha", **case)
            if all(x >= 1 for x in f):
                sym = is_symmetric(p)
                symmetric_seen += sym
                res.check(cf.whisker_symmetric_criterion(spec) == sym, check="symmetry", **case)
    res.details = {"bases": count, "symmetric_instances": symmetric_seen}
    return res


def _atlas(max_n: int) -> list[Graph]:
    import networkx as nx

    if max_n > 7:
        raise ValueError("the graph atlas only covers n <= 7")
    out = []
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() <= max_n:
            out.append(from_edge_list(h.number_of_nodes(), list(h.edges())))
    return out


def verify_cochordal(max_n: int = 7, max_d: int = 6, max_m: int = 5) -> SuiteResult:
    """All graphs up to isomorphism on at most ``max_n`` vertices, filtered to cochordal."""
    res = SuiteResult("cochordal")
    corpus = _atlas(max_n)
    cochordal = symmetric = connectivity_checked = 0
    for g in corpus:
        co = complement(g)
        chordal_co = is_chordal(co)
        res.check(chordal_co == is_cochordal(g), check="cochordal definition", edges=_edges(g), n=g.n)
        if chordal_co and co.n:
            res.check(leaf_order(maximal_cliques(co)) is not None, check="leaf order", edges=_edges(g), n=g.n)
        if not chordal_co or g.n == 0:
            continue
        cochordal += 1
        p = independence_polynomial(g)
        case = {"n": g.n, "edges": _edges(g)}
        b = b_sequence_of_cochordal(g)
        res.check(all(x > 0 for x in b), check="b-sequence positive", **case)
        k = complement_component_count(g)
        res.check(eval_minus_one(g) == 1 - k, check="value 1-k", **case)
        if p.degree >= 2:
            m = cf.cochordal_symmetric_form(p)
            if is_symmetric(p):
                symmetric += 1
                res.check(m is not None, check="symmetric form", **case)
                res.check(is_unimodal(p), check="unimodal", **case)
            else:
                res.check(m is None, check="form implies symmetric", **case)
        if is_connected(co) and co.num_edges() < co.n * (co.n - 1) // 2:
            connectivity_checked += 1
            r = vertex_connectivity(co)
            res.check(multiplicity_at_minus_one(p) == r, check="M(G) = connectivity", r=r, **case)
    for d in range(2, max_d + 1):
        for m in range(max_m + 1):
            g = cochordal_symmetric_witness(d, m)
            p = independence_polynomial(g)
            case = {"d": d, "m": m}
            res.check(is_cochordal(g), check="witness cochordal", **case)
            res.check(p == cf.cochordal_symmetric_polynomial(d, m), check="witness polynomial", **case)
            res.check(cf.cochordal_symmetric_form(p) == m, check="witness form", **case)
            res.check(is_unimodal(p), check="witness unimodal", **case)
    res.details = {
        "corpus": len(corpus),
        "cochordal": cochordal,
        "symmetric": symmetric,
        "connectivity_checked": connectivity_checked,
    }
    return res


def _connected_alpha2_values(n: int) -> set[int]:
    pairs = list(combinations(range(n), 2))
    values = set()
    for mask in range(1 << len(pairs)):
        g = from_edge_list(n, [e for k, e in enumerate(pairs) if mask >> k & 1])
        if is_connected(g) and independence_number_bnb(g) <= 2:
            values.add(eval_minus_one(g))
    return values


def verify_range(max_n: int = 12, min_n: int = 3, exhaustive_max_n: int = 0) -> SuiteResult:
    res = SuiteResult("range")
    realized = {}
    for n in range(min_n, max_n + 1):
        lo, hi = cf.alpha2_value_range(n)
        values = set()
        for a in range(1, n // 2 + 1):
            for t in range(1, n - a + 1):
                params = TwoCliqueParams(n, a, t)
                g = two_clique(params)
                p = independence_polynomial(g)
                case = {"n": n, "a": a, "t": t}
                v = cf.two_clique_minus_one(params)
                values.add(v)
                res.check(eval_at(p, -1) == v, check="value", **case)
                res.check(p == cf.two_clique_polynomial(params), check="polynomial", **case)
                res.check(p.degree <= 2, check="alpha <= 2", **case)
                res.check(is_chordal(g) and is_connected(g), check="connected chordal", **case)
        res.check(values == set(range(lo, hi + 1)), check="interval", n=n, values=sorted(values))
        for v in range(lo, hi + 1):
            params = cf.realize_value(n, v)
            res.check(cf.two_clique_minus_one(params) == v, check="realize", n=n, v=v)
        realized[str(n)] = [min(values), max(values)]
    exhaustive = {}
    for n in range(3, exhaustive_max_n + 1):
        lo, hi = cf.alpha2_value_range(n)
        seen = _connected_alpha2_values(n)
        res.check(seen == set(range(lo, hi + 1)), check="exhaustive", n=n, values=sorted(seen))
        exhaustive[str(n)] = sorted(seen)
    res.details = {"realized": realized}
    if exhaustive:
        res.details["exhaustive"] = exhaustive
    return res


def _partitions(total: int, largest: int | None = None):
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for k in range(min(total, largest), 0, -1):
        for rest in _partitions(total - k, k):
            yield (k,) + rest


def verify_bouquets(max_sum: int = 16, max_witness_n: int = 17) -> SuiteResult:
    res = SuiteResult("bouquets")
    instances = 0
    for s in range(1, max_sum + 1):
        for radii in _partitions(s):
            instances += 1
            params = BouquetParams(radii)
            g = clique_bouquet(params)
            case = {"radii": list(radii)}
            res.check(g.n == 1 + s, check="vertex count", **case)
            res.check(eval_minus_one(g) == cf.bouquet_minus_one(params), check="value", **case)
            res.check(independence_polynomial(g) == cf.bouquet_polynomial(params), check="polynomial", **case)
            res.check(is_chordal(g) and is_connected(g), check="connected chordal", **case)
    witnesses = {}
    for n in range(3, max_witness_n + 1):
        g = exponential_witness(n)
        value = eval_minus_one(g)
        bound = cf.exponential_lower_bound(n)
        res.check(g.n == n and abs(value) >= bound, check="exponential bound", n=n, value=value, bound=bound)
        witnesses[str(n)] = {"value": value, "bound": bound}
    res.details = {"instances": instances, "witnesses": witnesses}
    return res


def verify_trees(count: int = 500, max_n: int = 16, seed: int = 0) -> SuiteResult:
    res = SuiteResult("trees")
    rng = random.Random(seed)
    seen = set()
    for _ in range(count):
        t = random_tree(rng, rng.randint(1, max_n))
        value = eval_minus_one(t)
        seen.add(value)
        res.check(is_tree(t) and value in (-1, 0, 1), check="tree value", n=t.n, edges=_edges(t), value=value)
    res.details = {"values_seen": sorted(seen)}
    return res


def verify_engstrom(count: int = 200, max_n: int = 12, seed: int = 0) -> SuiteResult:
    res = SuiteResult("engstrom")
    rng = random.Random(seed)
    for g in random_graphs(rng, count, max_n):
        value = eval_minus_one(g)
        phi = decycling_number(g)
        res.check(abs(value) <= 2**phi, check="|P(-1)| <= 2^phi", n=g.n, edges=_edges(g), value=value, phi=phi)
    return res


def verify_oracle(
    count: int = 1000,
    max_n: int = 14,
    pair_count: int = 200,
    tree_max_n: int = 10,
    seed: int = 0,
) -> SuiteResult:
    res = SuiteResult("oracle")
    rng = random.Random(seed)
    corpus = random_graphs(rng, count, max_n)
    for g in corpus:
        case = {"n": g.n, "edges": _edges(g)}
        p = independence_polynomial(g)
        res.check(p == brute_force_polynomial(g), check="engine = brute force", **case)
        res.check(eval_minus_one(g) == eval_at(p, -1), check="value path", **case)
        res.check(independence_number_bnb(g) == p.degree, check="alpha", **case)
        hd = h_transform(p, p.degree)
        mult = multiplicity_at_minus_one(p)
        res.check(hd.h.degree == p.degree - mult, check="deg h = alpha - M", **case)
        res.check(hd.h[p.degree] == (-1) ** p.degree * eval_at(p, -1), check="top h coefficient", **case)
        res.check(hd.a_invariant == -mult, check="a-invariant", **case)
    for g in corpus[:pair_count]:
        p = brute_force_polynomial(g)
        for v in range(g.n):
            rhs = independence_polynomial(delete(g, 1 << v)) + independence_polynomial(
                delete(g, closed_neighborhood(g, 1 << v))
            ).shift(1)
            res.check(p == rhs, check="deletion identity", n=g.n, edges=_edges(g), v=v)
    for g, h in zip(corpus[:pair_count], corpus[pair_count : 2 * pair_count]):
        gh = disjoint_union(g, h)
        res.check(
            independence_polynomial(gh) == brute_force_polynomial(g) * brute_force_polynomial(h),
            check="multiplicativity",
            g_edges=_edges(g),
            h_edges=_edges(h),
        )
    trees = _all_trees(tree_max_n)
    for t in trees:
        res.check(independence_polynomial(t) == brute_force_polynomial(t), check="tree oracle", edges=_edges(t))
    res.details = {"graphs": len(corpus), "trees": len(trees)}
    return res


def _all_trees(max_n: int) -> list[Graph]:
    import networkx as nx

    out = [path(1)]
    for n in range(2, max_n + 1):
        for t in nx.nonisomorphic_trees(n):
            out.append(from_edge_list(n, list(t.edges())))
    return out


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "paths": verify_paths,
    "big-stars": verify_big_stars,
    "caterpillars": verify_caterpillars,
    "whiskers": verify_whiskers,
    "cochordal": verify_cochordal,
    "range": verify_range,
    "bouquets": verify_bouquets,
    "trees": verify_trees,
    "engstrom": verify_engstrom,
    "oracle": verify_oracle,
}


def verify_all() -> list[SuiteResult]:
    return [fn() for fn in SUITES.values()]
