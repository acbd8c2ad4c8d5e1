"""Closed-form moment formulas for graft products.

Each function evaluates a published formula symbol by symbol from its
inputs -- factor moments, branch orders, total weights, host distances
-- without building the product graph.  Every one of them is certified
against the brute-force oracle (build the product, run BFS, sum) by the
verify module and the test suite; agreement is exact, never approximate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import (
    ArityMismatch,
    DisconnectedGraph,
    GraphFormatError,
    InvalidExtendedCycle,
    NegativeWeight,
    NotATree,
    OrderMismatch,
    UnknownVertex,
)
from .graph import DistanceMatrix, Graph, cycle_graph, distance_matrix, is_connected
from .moments import moment, moment_at
from .weights import DEGREE, UNIT, AffineWeight, WeightFunction
from .products import GraftSpec

# A family maps a host vertex to the rooted, weighted branches glued there.
Family = Mapping[int, Sequence[tuple[Graph, int, WeightFunction]]]


def attachments_by_receptor(spec: GraftSpec) -> dict[int, list[tuple[Graph, int, WeightFunction]]]:
    """Group a spec's attachments into the family mapping the vector form uses."""
    family: dict[int, list[tuple[Graph, int, WeightFunction]]] = {}
    for att in spec.attachments:
        family.setdefault(att.receptor, []).append(
            (att.branch, att.root, att.weights)
        )
    return family


def cycle_distance_row_sum(r: int) -> int:
    """Common row sum of the distance matrix of C_r: floor(r/2)*floor((r+1)/2).

    Also its largest eigenvalue (the all-ones vector is an eigenvector).
    Degenerate orders work too: r=1 gives 0, r=2 gives 1.
    """
    if r < 1:
        raise InvalidExtendedCycle(f"cycle order {r} must be >= 1")
    return (r // 2) * ((r + 1) // 2)


@dataclass(frozen=True)
class HostVectors:
    """Per-host-vertex bookkeeping for the vectorized formulas.

    block_orders[i] is the order of the product block sitting over the
    i-th host vertex (1 plus the non-root sizes of its branches);
    attached_totals[i] is the total branch weight glued there.  The
    cycle-specific vectors (branch order, edges, row sum, degree) are
    filled only by from_cycle_pairs.
    """

    host: Graph
    distances: DistanceMatrix
    block_orders: tuple[int, ...]
    attached_totals: tuple[Fraction, ...]
    branch_orders: tuple[int, ...] | None = None
    branch_edge_counts: tuple[int, ...] | None = None
    branch_row_sums: tuple[int, ...] | None = None
    branch_degrees: tuple[int, ...] | None = None

    @property
    def product_order(self) -> int:
        return sum(self.block_orders)

    @classmethod
    def from_family(cls, host: Graph, family: Family) -> "HostVectors":
        for x in family:
            if not host.has_vertex(x):
                raise UnknownVertex(f"family receptor {x!r} is not a host vertex")
        block_orders = []
        attached_totals = []
        for x in host.vertices:
            n_x = 1
            w_x = Fraction(0)
            for branch, root, weights in family.get(x, ()):
                n_x += branch.order - 1
                w_x += weights.total(branch)
            block_orders.append(n_x)
            attached_totals.append(w_x)
        return cls(
            host=host,
            distances=distance_matrix(host),
            block_orders=tuple(block_orders),
            attached_totals=tuple(attached_totals),
        )

    @classmethod
    def from_cycle_pairs(
        cls, host_order: int, pairs: Sequence[tuple[int, int]]
    ) -> "HostVectors":
        """Vectors for a cycle host with one extended-cycle branch per vertex."""
        host = cycle_graph(host_order)
        orders = []
        edge_counts = []
        row_sums = []
        degrees = []
        for r_x, m_x in pairs:
            _check_extended_pair(r_x, m_x)
            orders.append(r_x)
            edge_counts.append(m_x)
            row_sums.append(cycle_distance_row_sum(r_x))
            degrees.append(_extended_degree(r_x))
        return cls(
            host=host,
            distances=distance_matrix(host),
            block_orders=tuple(r for r in orders),
            attached_totals=tuple(Fraction(2 * m) for m in edge_counts),
            branch_orders=tuple(orders),
            branch_edge_counts=tuple(edge_counts),
            branch_row_sums=tuple(row_sums),
            branch_degrees=tuple(degrees),
        )


# -- general graft products -------------------------------------------------


def graft_moment_formula(spec: GraftSpec) -> Fraction:
    """Moment of a graft product from factor data alone.

    M_H^a + sum_i M_Ki^bi + sum_i M_H^(xi_i)(x_i) + sum_i M_Ki^(eta_i)(y_i)
    + sum_{i,j} (|V_i|-1) * dist(x_i, x_j) * B_j, where
    xi_i = (|V_i|-1)*a + B_i and eta_i = (|V|-|V_i|)*b_i + (W - B_i).
    The sums run over the attachment list, so repeated receptors are fine.
    """
    host = spec.host
    if not is_connected(host):
        raise DisconnectedGraph("host graph is not connected")
    for att in spec.attachments:
        if not host.has_vertex(att.receptor):
            raise UnknownVertex(f"receptor {att.receptor!r} is not a host vertex")
        if not att.branch.has_vertex(att.root):
            raise UnknownVertex(f"root {att.root!r} is not a branch vertex")
        if not is_connected(att.branch):
            raise DisconnectedGraph("branch graph is not connected")

    alpha = spec.host_weights
    branch_totals = [a.weights.total(a.branch) for a in spec.attachments]
    host_total = alpha.total(host)
    grand_total = host_total + sum(branch_totals, Fraction(0))
    product_order = spec.product_order

    result = moment(host, alpha)
    dm = distance_matrix(host) if spec.attachments else None
    for i, att in enumerate(spec.attachments):
        branch, beta = att.branch, att.weights
        result += moment(branch, beta)
        toward_host = AffineWeight(branch.order - 1, alpha, branch_totals[i])
        result += moment_at(host, toward_host, att.receptor)
        from_outside = AffineWeight(
            product_order - branch.order, beta, grand_total - branch_totals[i]
        )
        result += moment_at(branch, from_outside, att.root)
        for j, other in enumerate(spec.attachments):
            result += (
                (branch.order - 1)
                * dm.entry(att.receptor, other.receptor)
                * branch_totals[j]
            )
    return result


def family_graft_moment_formula(
    host: Graph, alpha: WeightFunction, family: Family
) -> Fraction:
    """Vectorized form of the graft moment, grouped by receptor.

    Same value as graft_moment_formula; the cross term becomes
    (n - 1)^T D w over host vertices, with n the block orders and w the
    attached weight totals.
    """
    if not is_connected(host):
        raise DisconnectedGraph("host graph is not connected")
    for x, branches in family.items():
        for branch, root, _ in branches:
            if not branch.has_vertex(root):
                raise UnknownVertex(f"root {root!r} is not a branch vertex")
            if not is_connected(branch):
                raise DisconnectedGraph("branch graph is not connected")
    vectors = HostVectors.from_family(host, family)
    product_order = vectors.product_order
    host_total = alpha.total(host)
    grand_total = host_total + sum(vectors.attached_totals, Fraction(0))

    result = moment(host, alpha)
    for x, n_x, w_x in zip(
        host.vertices, vectors.block_orders, vectors.attached_totals
    ):
        toward_host = AffineWeight(n_x - 1, alpha, w_x)
        result += moment_at(host, toward_host, x)
    for x, branches in family.items():
        for branch, root, beta in branches:
            branch_total = beta.total(branch)
            result += moment(branch, beta)
            from_outside = AffineWeight(
                product_order - branch.order, beta, grand_total - branch_total
            )
            result += moment_at(branch, from_outside, root)
    dm = vectors.distances
    for x, n_x in zip(host.vertices, vectors.block_orders):
        if n_x == 1:
            continue
        for y, w_y in zip(host.vertices, vectors.attached_totals):
            result += (n_x - 1) * dm.entry(x, y) * w_y
    return result


def flower_moment_formula(
    center_weight, branches: Sequence[tuple[Graph, int, WeightFunction]]
) -> Fraction:
    """Moment of a flower: branches glued at one center of scalar weight.

    sum_i M_Ki^bi + sum_i M_Ki^(eta_i)(y_i) with
    eta_i = (sum_{j != i} |V_j| - r + 1) * b_i + center + sum_{j != i} B_j.
    """
    center = Fraction(center_weight)
    if center < 0:
        raise NegativeWeight(f"center weight {center} is negative")
    for branch, root, _ in branches:
        if not branch.has_vertex(root):
            raise UnknownVertex(f"root {root!r} is not a branch vertex")
        if not is_connected(branch):
            raise DisconnectedGraph("branch graph is not connected")
    r = len(branches)
    orders = [branch.order for branch, _, _ in branches]
    totals = [weights.total(branch) for branch, _, weights in branches]
    result = Fraction(0)
    for i, (branch, root, beta) in enumerate(branches):
        result += moment(branch, beta)
        others_order = sum(orders) - orders[i]
        others_total = sum(totals, Fraction(0)) - totals[i]
        from_outside = AffineWeight(
            others_order - r + 1, beta, center + others_total
        )
        result += moment_at(branch, from_outside, root)
    return result


# -- permutation products ---------------------------------------------------


def _equal_orders(host: Graph, branch: Graph) -> int:
    if host.order != branch.order:
        raise OrderMismatch(
            f"need equal orders, got {host.order} and {branch.order}"
        )
    return host.order


def permutation_moment_formula(
    host: Graph,
    alpha: WeightFunction,
    branch: Graph,
    beta: WeightFunction,
) -> Fraction:
    """Moment of any permutation product of host and branch (equal order r).

    r*M_H^a + r^2*M_K^b + r*B*M_H^1 + (A + (r-1)*B)*M_K^1 -- the same for
    every permutation, which is what makes these graphs equal-moment
    families.
    """
    r = _equal_orders(host, branch)
    a_total = alpha.total(host)
    b_total = beta.total(branch)
    return (
        r * moment(host, alpha)
        + r * r * moment(branch, beta)
        + r * b_total * moment(host, UNIT)
        + (a_total + (r - 1) * b_total) * moment(branch, UNIT)
    )


def permutation_unit_moment(host: Graph, branch: Graph) -> Fraction:
    """Unit-weight specialization: r^2*M_H^1 + r(2r-1)*M_K^1."""
    r = _equal_orders(host, branch)
    return r * r * moment(host, UNIT) + r * (2 * r - 1) * moment(branch, UNIT)


def permutation_mean_distance(host: Graph, branch: Graph) -> Fraction:
    """Mean distance of the permutation product: d(H) + (2 - 1/r) d(K)."""
    r = _equal_orders(host, branch)
    d_host = moment(host, UNIT) / (r * r)
    d_branch = moment(branch, UNIT) / (r * r)
    return d_host + (2 - Fraction(1, r)) * d_branch


def permutation_degree_distance(host: Graph, branch: Graph) -> Fraction:
    """Degree-weight specialization, in terms of factor edge counts.

    r*M_H^d + r^2*M_K^d + 2r*m_K*M_H^1 + 2(m_H + (r-1)m_K)*M_K^1.
    """
    r = _equal_orders(host, branch)
    m_host = host.edge_count
    m_branch = branch.edge_count
    return (
        r * moment(host, DEGREE)
        + r * r * moment(branch, DEGREE)
        + 2 * r * m_branch * moment(host, UNIT)
        + 2 * (m_host + (r - 1) * m_branch) * moment(branch, UNIT)
    )


# -- concentrating branches on one receptor ---------------------------------


def concentration_difference_formula(
    host: Graph,
    alpha: WeightFunction,
    x: int,
    receptors: Sequence[int],
    branch_order: int,
    branch_total_weight,
) -> Fraction:
    """Moment change when all branches move to the single receptor x.

    For branches of a common order and total weight B glued at
    `receptors`, versus the same branches all glued at x:
    sum_i [M_H^xi(x) - M_H^xi(x_i)] - B(order-1) * sum_{i,j} dist(x_i,x_j),
    with xi = (order-1)*alpha + B.  The value depends on the branches
    only through their order and total weight.
    """
    if branch_order < 1:
        raise GraphFormatError(f"branch order {branch_order} must be >= 1")
    total = Fraction(branch_total_weight)
    if total < 0:
        raise NegativeWeight(f"branch total weight {total} is negative")
    if not host.has_vertex(x):
        raise UnknownVertex(f"vertex {x!r} is not a host vertex")
    for receptor in receptors:
        if not host.has_vertex(receptor):
            raise UnknownVertex(f"receptor {receptor!r} is not a host vertex")
    toward_host = AffineWeight(branch_order - 1, alpha, total)
    at_x = moment_at(host, toward_host, x)
    result = Fraction(0)
    for receptor in receptors:
        result += at_x - moment_at(host, toward_host, receptor)
    dm = distance_matrix(host)
    pair_sum = sum(
        dm.entry(a, b) for a in receptors for b in receptors
    )
    return result - total * (branch_order - 1) * pair_sum


# -- cycles with grafted branches (degree weights) ---------------------------


def unicyclic_degree_distance(
    cycle_order: int,
    forest: Mapping[int, Sequence[tuple[Graph, int]]],
) -> Fraction:
    """Degree distance of a cycle C_r with trees grafted on its vertices.

    sum_T M_T^d + sum_T M_T^(eta_T)(y_T) + 2 n^T D n, where n_x counts the
    product vertices over cycle vertex x and eta_T = (N - |V_T|)(d + 2) + 2
    for N the product order.  Branches must be trees.
    """
    if cycle_order < 3:
        raise InvalidExtendedCycle(
            f"unicyclic host cycle needs order >= 3, got {cycle_order}"
        )
    host = cycle_graph(cycle_order)
    flattened: list[tuple[int, Graph, int]] = []
    for x, branches in forest.items():
        if not host.has_vertex(x):
            raise UnknownVertex(f"forest receptor {x!r} is not a cycle vertex")
        for tree, root in branches:
            if not tree.has_vertex(root):
                raise UnknownVertex(f"root {root!r} is not a branch vertex")
            if not is_connected(tree) or tree.edge_count != tree.order - 1:
                raise NotATree(
                    f"branch at {x!r} has {tree.edge_count} edges "
                    f"on {tree.order} vertices"
                )
            flattened.append((x, tree, root))

    block_orders = {x: 1 for x in host.vertices}
    for x, tree, _ in flattened:
        block_orders[x] += tree.order - 1
    product_order = sum(block_orders.values())

    result = Fraction(0)
    for _, tree, root in flattened:
        result += moment(tree, DEGREE)
        outside = product_order - tree.order
        from_outside = AffineWeight(outside, DEGREE, 2 * outside + 2)
        result += moment_at(tree, from_outside, root)
    dm = distance_matrix(host)
    for x in host.vertices:
        for y in host.vertices:
            result += 2 * block_orders[x] * dm.entry(x, y) * block_orders[y]
    return result


def _extended_degree(r: int) -> int:
    """Vertex degree of the extended cycle C_r: 2, except 1 for K2, 0 for K1."""
    if r >= 3:
        return 2
    return r - 1


def extended_cycle_edge_count(r: int) -> int:
    """Edges of the extended cycle C_r: r for r >= 3, else r - 1."""
    if r < 1:
        raise InvalidExtendedCycle(f"extended cycle order {r} must be >= 1")
    if r >= 3:
        return r
    return r - 1


def _check_extended_pair(r: int, m: int) -> None:
    expected = extended_cycle_edge_count(r)
    if m != expected:
        raise InvalidExtendedCycle(
            f"extended cycle of order {r} has {expected} edges, not {m}"
        )


def extended_cycle_degree_distance(
    host_order: int, pairs: Sequence[tuple[int, int]]
) -> Fraction:
    """Degree distance of extended cycles grafted on an extended cycle.

    One branch (r_x, m_x) per host vertex; K1 branches (1, 0) leave their
    vertex bare.  With theta_x the branch row sums, delta_x the branch
    degrees, [v] = sum of v, and D the host distance matrix:

        2(m_C*[theta] + [m]*[theta] - <m, theta>)
        + (delta_C*theta_C + <delta, theta>)*[r] + 2 r^T D m

    m_C, delta_C, theta_C are the HOST's edge count, degree, and row sum.
    """
    if host_order < 1:
        raise InvalidExtendedCycle(f"host order {host_order} must be >= 1")
    if len(pairs) != host_order:
        raise ArityMismatch(
            f"need one branch per host vertex: {host_order} != {len(pairs)}"
        )
    vectors = HostVectors.from_cycle_pairs(host_order, pairs)
    r_vec = vectors.branch_orders
    m_vec = vectors.branch_edge_counts
    theta_vec = vectors.branch_row_sums
    delta_vec = vectors.branch_degrees
    host_edges = extended_cycle_edge_count(host_order)
    host_degree = _extended_degree(host_order)
    host_theta = cycle_distance_row_sum(host_order)

    sum_r = sum(r_vec)
    sum_m = sum(m_vec)
    sum_theta = sum(theta_vec)
    m_dot_theta = sum(m * t for m, t in zip(m_vec, theta_vec))
    delta_dot_theta = sum(d * t for d, t in zip(delta_vec, theta_vec))
    dm = vectors.distances
    cross = sum(
        r_vec[i] * dm.entries[i][j] * m_vec[j]
        for i in range(host_order)
        for j in range(host_order)
    )
    return Fraction(
        2 * (host_edges * sum_theta + sum_m * sum_theta - m_dot_theta)
        + (host_degree * host_theta + delta_dot_theta) * sum_r
        + 2 * cross
    )


def proper_cycle_degree_distance(
    host_order: int, branch_orders: Sequence[int]
) -> Fraction:
    """Degree distance when host and every branch are proper cycles (>= 3).

    4[r][theta] + 2(theta_C*[r] + r_C*[theta] - <r, theta>) + 2 r^T D r.
    Agrees with the extended-cycle formula on its whole domain.
    """
    if host_order < 3:
        raise InvalidExtendedCycle(
            f"proper cycle host needs order >= 3, got {host_order}"
        )
    if len(branch_orders) != host_order:
        raise ArityMismatch(
            f"need one branch per host vertex: {host_order} != {len(branch_orders)}"
        )
    for r in branch_orders:
        if r < 3:
            raise InvalidExtendedCycle(f"proper cycle branch needs order >= 3, got {r}")
    theta_vec = [cycle_distance_row_sum(r) for r in branch_orders]
    host_theta = cycle_distance_row_sum(host_order)
    sum_r = sum(branch_orders)
    sum_theta = sum(theta_vec)
    r_dot_theta = sum(r * t for r, t in zip(branch_orders, theta_vec))
    dm = distance_matrix(cycle_graph(host_order))
    cross = sum(
        branch_orders[i] * dm.entries[i][j] * branch_orders[j]
        for i in range(host_order)
        for j in range(host_order)
    )
    return Fraction(
        4 * sum_r * sum_theta
        + 2 * (host_theta * sum_r + host_order * sum_theta - r_dot_theta)
        + 2 * cross
    )
