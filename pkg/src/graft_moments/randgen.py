"""Seeded random instances for formula-vs-oracle verification.

Everything here is a pure function of the supplied random.Random, so a
fixed seed reproduces the exact same instances (and therefore the exact
same verification transcript).  Graphs are built as a random spanning
tree plus extra edges; rationals keep numerators <= 20 and denominators
<= 5 so intermediate values stay readable.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .graph import Graph
from .products import Attachment, GraftSpec
from .weights import (
    DEGREE,
    HALF,
    UNIT,
    AffineWeight,
    ConstantWeight,
    ExplicitWeight,
    WeightFunction,
)


def random_rational(
    rng: random.Random, *, max_numerator: int = 20, max_denominator: int = 5
) -> Fraction:
    """Small nonnegative rational."""
    return Fraction(
        rng.randint(0, max_numerator), rng.randint(1, max_denominator)
    )


def random_tree(rng: random.Random, order: int) -> Graph:
    """Uniform-ish random labeled tree: attach each new vertex somewhere earlier."""
    edges = [(rng.randrange(v), v) for v in range(1, order)]
    return Graph(range(order), edges)


def random_connected_graph(rng: random.Random, order: int) -> Graph:
    """Random spanning tree plus a few random extra edges."""
    tree = random_tree(rng, order)
    present = set(tree.edges())
    missing = [
        (u, v)
        for u in range(order)
        for v in range(u + 1, order)
        if (u, v) not in present
    ]
    extra = rng.randint(0, min(len(missing), order))
    edges = list(tree.edges()) + rng.sample(missing, extra)
    return Graph(range(order), edges)


def random_weight_function(rng: random.Random, g: Graph) -> WeightFunction:
    """One of every supported weight kind, with valid random parameters."""
    kind = rng.choice(["unit", "half", "degree", "constant", "explicit", "affine"])
    if kind == "unit":
        return UNIT
    if kind == "half":
        return HALF
    if kind == "degree":
        return DEGREE
    if kind == "constant":
        return ConstantWeight(random_rational(rng))
    if kind == "explicit":
        return ExplicitWeight({v: random_rational(rng) for v in g.vertices})
    base = rng.choice([UNIT, HALF, DEGREE])
    return AffineWeight(random_rational(rng), base, random_rational(rng))


def random_graft_spec(
    rng: random.Random,
    *,
    max_host: int = 12,
    max_branches: int = 4,
    max_branch_order: int = 8,
    allow_repeated_receptors: bool = False,
) -> GraftSpec:
    host = random_connected_graph(rng, rng.randint(1, max_host))
    branch_count = rng.randint(0, max_branches)
    if allow_repeated_receptors:
        receptors = [rng.choice(host.vertices) for _ in range(branch_count)]
    else:
        branch_count = min(branch_count, host.order)
        receptors = rng.sample(host.vertices, branch_count)
    attachments = []
    for receptor in receptors:
        branch = random_connected_graph(rng, rng.randint(1, max_branch_order))
        root = rng.choice(branch.vertices)
        attachments.append(
            Attachment(receptor, branch, root, random_weight_function(rng, branch))
        )
    return GraftSpec(
        host, tuple(attachments), random_weight_function(rng, host)
    )


def random_flower_branches(
    rng: random.Random, *, max_branches: int = 4, max_branch_order: int = 6
) -> list[tuple[Graph, int, WeightFunction]]:
    branches = []
    for _ in range(rng.randint(1, max_branches)):
        branch = random_connected_graph(rng, rng.randint(1, max_branch_order))
        branches.append(
            (branch, rng.choice(branch.vertices), random_weight_function(rng, branch))
        )
    return branches


def random_permutation_instance(
    rng: random.Random, *, max_order: int = 5
) -> tuple[Graph, WeightFunction, Graph, WeightFunction, list[int]]:
    """(host, alpha, branch, beta, sigma) with |host| = |branch|."""
    r = rng.randint(1, max_order)
    host = random_connected_graph(rng, r)
    branch = random_connected_graph(rng, r)
    sigma = rng.sample(range(1, r + 1), r)
    return (
        host,
        random_weight_function(rng, host),
        branch,
        random_weight_function(rng, branch),
        sigma,
    )


def random_comparison_instance(
    rng: random.Random, *, max_host: int = 8, max_branch_order: int = 6
) -> tuple[Graph, WeightFunction, int, list[int], Graph, int, WeightFunction]:
    """(host, alpha, x, receptors, branch, root, beta); receptors distinct."""
    host = random_connected_graph(rng, rng.randint(2, max_host))
    x = rng.choice(host.vertices)
    receptor_count = rng.randint(1, min(4, host.order))
    receptors = rng.sample(host.vertices, receptor_count)
    branch = random_connected_graph(rng, rng.randint(1, max_branch_order))
    root = rng.choice(branch.vertices)
    return (
        host,
        random_weight_function(rng, host),
        x,
        receptors,
        branch,
        root,
        random_weight_function(rng, branch),
    )


def random_unicyclic_instance(
    rng: random.Random, *, max_cycle: int = 8, max_tree_order: int = 5
) -> tuple[int, dict[int, list[tuple[Graph, int]]]]:
    """(cycle order, forest) with zero to two random trees per cycle vertex."""
    cycle_order = rng.randint(3, max_cycle)
    forest: dict[int, list[tuple[Graph, int]]] = {}
    for x in range(cycle_order):
        trees = []
        for _ in range(rng.randint(0, 2)):
            tree = random_tree(rng, rng.randint(1, max_tree_order))
            trees.append((tree, rng.choice(tree.vertices)))
        if trees:
            forest[x] = trees
    return cycle_order, forest


def random_extended_cycle_instance(
    rng: random.Random, *, max_host: int = 8, max_branch_order: int = 8
) -> tuple[int, list[tuple[int, int]]]:
    """(host order, per-vertex (r, m) pairs) over the whole extended range."""
    from .closed_forms import extended_cycle_edge_count

    host_order = rng.randint(1, max_host)
    pairs = []
    for _ in range(host_order):
        r = rng.randint(1, max_branch_order)
        pairs.append((r, extended_cycle_edge_count(r)))
    return host_order, pairs


def random_proper_cycle_instance(
    rng: random.Random, *, max_host: int = 8, max_branch_order: int = 8
) -> tuple[int, list[int]]:
    host_order = rng.randint(3, max_host)
    return host_order, [rng.randint(3, max_branch_order) for _ in range(host_order)]
