# encoding: utf-8
"""Discretised search for the marked homotopy systole of a marked sphere

The sphere is cut open along a :class:`~sysgeom.cuts.CutSystem`, which leaves
a disk. An epsilon-net of that disk is built from

* interior grid nodes of spacing `eps` in every polygon,
* portal nodes on glued edges, shared by both adjacent polygons,
* pairs of nodes on both sides of every cut arc (cut portals).

Nodes of one polygon within `2.5 eps` are joined by straight legs that do
not cross a cut; a leg from `a` to `b` costs `F(b - a)`, so the graph is
directed for non-reversible norms. Shortest paths between cut portals are
computed once; a closed path with prescribed crossing sequence
`x_1 ... x_n` then costs a min-plus product of portal matrices. Cyclic
sequences up to a word length cap are explored by branch and bound, the
admissible classes closest to the optimum are traced back to polylines and
straightened to closed geodesics.

"""

from __future__ import division, print_function

import logging

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra
from scipy.spatial import cKDTree

from .cuts import build_cut_system
from .errors import (BudgetError, CollapsedLoopError, NonConvergenceError,
                     TransversalityError, UnsupportedBaseError)
from .geodesics import straighten_geodesic
from .paths import SurfaceLoop
from .systole import DISCRETIZED, SystoleCertificate
from .utils import point_segment_distance, segments_cross
from .words import HomotopyWord, is_admissible

__all__ = ['EpsilonNet', 'discretized_systole', 'EPS', 'WORDS', 'BUDGET']

logger = logging.getLogger(__name__)

EPS = 0.01
WORDS = 6
BUDGET = 200000
"""Maximal number of graph nodes"""
CANDIDATES = 12
SLACK = 0.05
"""Relative window above the best graph cost whose classes get straightened"""

REACH = 2.5
SIDE = 1e-6


class EpsilonNet(object):
    """Directed graph approximating the cut-open surface

    .. automethod:: __init__

    """

    def __init__(self, S, cuts, eps=EPS, budget=BUDGET):
        """
        :param S: Orientable :class:`~sysgeom.surface.ConeSurface`
        :param cuts: :class:`~sysgeom.cuts.CutSystem` of `S`
        :param eps: Grid spacing
        :param budget: Maximal number of nodes
        :raises BudgetError: if the net would exceed `budget` nodes

        """
        if eps <= 0:
            raise ValueError('{!r} is not a valid spacing'.format(eps))
        self.surface = S
        self.cuts = cuts
        self.eps = float(eps)
        estimate = S.euclidean_area / self.eps ** 2
        if estimate > budget:
            raise BudgetError('About {:.0f} nodes needed at eps={}, budget is '
                              '{}'.format(estimate, eps, budget))
        self._cut_legs = cuts.legs_by_polygon()
        self.n_nodes = 0
        self._members = {p: ([], [], []) for p in range(len(S.polygons))}
        self._edge_ids = np.cumsum([0] + [len(p) for p in S.polygons])
        self._add_interior()
        self._add_edge_portals()
        self._add_cut_portals()
        if self.n_nodes > budget:
            raise BudgetError('Net has {} nodes, budget is {}'
                              .format(self.n_nodes, budget))
        self._add_legs()
        logger.debug('Net with %d nodes and %d legs at eps=%g', self.n_nodes,
                     self.graph.nnz, self.eps)

    def __repr__(self):
        return '<EpsilonNet with {} nodes at eps={}>'.format(self.n_nodes,
                                                           self.eps)

    ###########################################################################
    #                                  Nodes                                  #
    ###########################################################################
    def _new_nodes(self, count):
        start = self.n_nodes
        self.n_nodes += count
        return np.arange(start, self.n_nodes)

    def _add_members(self, p, nodes, xy, edge=-1):
        ids, points, edges = self._members[p]
        ids.append(np.asarray(nodes))
        points.append(np.atleast_2d(xy))
        edges.append(np.full(len(ids[-1]), edge))

    def _clear_of_cuts(self, p, xy):
        xy = np.atleast_2d(xy)
        keep = np.ones(len(xy), dtype=bool)
        for _, leg in self._cut_legs.get(p, ()):
            keep &= point_segment_distance(xy, leg.a, leg.b) > self.eps / 8
        return keep

    def _add_interior(self):
        eps = self.eps
        for p, poly in enumerate(self.surface.polygons):
            lo, hi = poly.vertices.min(axis=0), poly.vertices.max(axis=0)
            xs = np.arange(lo[0] + eps / 2, hi[0], eps)
            ys = np.arange(lo[1] + eps / 2, hi[1], eps)
            grid = np.stack(np.meshgrid(xs, ys), axis=-1).reshape((-1, 2))
            grid = grid[poly.contains(grid, margin=eps / 4)]
            grid = grid[self._clear_of_cuts(p, grid)]
            self._add_members(p, self._new_nodes(len(grid)), grid)

    def _add_edge_portals(self):
        for g in self.surface.gluings:
            (p, e), (q, f) = g.src, g.dst
            a, b = self.surface.polygons[p].edge(e)
            count = int(np.ceil(np.linalg.norm(b - a) / self.eps))
            t = (np.arange(count) + .5) / count
            xy = a + t[:, None] * (b - a)
            image = xy.dot(np.asarray(g.linear).T) + g.translation
            keep = self._clear_of_cuts(p, xy) & self._clear_of_cuts(q, image)
            nodes = self._new_nodes(int(np.sum(keep)))
            self._add_members(p, nodes, xy[keep], self._edge_ids[p] + e)
            self._add_members(q, nodes, image[keep], self._edge_ids[q] + f)

    def _add_cut_portals(self):
        norm = self.surface.norm
        self.sides = []
        self.side_xy = {}
        for arc in self.cuts.arcs:
            lengths = np.array([np.linalg.norm(leg.b - leg.a) for leg in arc])
            total = np.sum(lengths)
            count = max(1, int(total / max(2 * self.eps, total / 24)))
            places = (np.arange(count) + .5) * total / count
            ends = np.cumsum(lengths)
            spots = []
            for s in places:
                n = min(int(np.searchsorted(ends, s)), len(arc) - 1)
                u = (s - (ends[n] - lengths[n])) / lengths[n]
                if min(u, 1 - u) * lengths[n] >= self.eps / 4:
                    spots.append((n, u))
            if not spots:
                spots = [(int(np.argmax(lengths)), .5)]
            left = self._new_nodes(len(spots))
            right = self._new_nodes(len(spots))
            plus, minus = [], []
            for m, (n, u) in enumerate(spots):
                leg = arc[n]
                d = (leg.b - leg.a) / lengths[n]
                normal = np.array([d[1], -d[0]])
                x = leg.a + u * (leg.b - leg.a)
                xl, xr = x - SIDE * normal, x + SIDE * normal
                self._add_members(leg.polygon, [left[m], right[m]], [xl, xr])
                self.side_xy[left[m]] = (leg.polygon, xl)
                self.side_xy[right[m]] = (leg.polygon, xr)
                plus.append(norm(xr - xl))
                minus.append(norm(xl - xr))
            self.sides.append((left, right, np.array(plus), np.array(minus)))

    ###########################################################################
    #                                  Legs                                   #
    ###########################################################################
    def _polygon_legs(self, p):
        ids, points, edges = (np.concatenate(x) for x in self._members[p])
        if len(ids) < 2:
            return None
        pairs = cKDTree(points).query_pairs(REACH * self.eps,
                                            output_type='ndarray')
        if len(pairs) == 0:
            return None
        i, j = pairs[:, 0], pairs[:, 1]
        keep = (ids[i] != ids[j]) & ((edges[i] != edges[j]) | (edges[i] < 0))
        i, j = i[keep], j[keep]
        a, b = points[i], points[j]
        keep = np.ones(len(i), dtype=bool)
        for _, leg in self._cut_legs.get(p, ()):
            keep &= ~segments_cross(a, b, leg.a, leg.b)
        o_polygon, o = self.cuts.origin
        if p == o_polygon:
            keep &= point_segment_distance(o, a, b) > 10 * SIDE
        i, j, a, b = i[keep], j[keep], a[keep], b[keep]
        norm = self.surface.norm
        return (np.concatenate([ids[i], ids[j]]),
                np.concatenate([ids[j], ids[i]]),
                np.concatenate([norm(b - a), norm(a - b)]),
                np.full(2 * len(i), p),
                np.concatenate([a, b]), np.concatenate([b, a]))

    def _add_legs(self):
        parts = [self._polygon_legs(p)
                 for p in range(len(self.surface.polygons))]
        parts = [part for part in parts if part is not None]
        src, dst, weight, poly, start, end = \
            (np.concatenate(x) for x in zip(*parts))
        order = np.lexsort((weight, dst, src))
        src, dst, weight = src[order], dst[order], weight[order]
        first = np.ones(len(src), dtype=bool)
        first[1:] = (src[1:] != src[:-1]) | (dst[1:] != dst[:-1])
        order = order[first]
        src, dst, weight = src[first], dst[first], weight[first]
        self.graph = csr_matrix((weight, (src, dst)),
                                shape=(self.n_nodes, self.n_nodes))
        self._legs = {(int(u), int(v)): (int(poly[k]), start[k], end[k])
                      for u, v, k in zip(src, dst, order)}

    ###########################################################################
    #                                 Search                                  #
    ###########################################################################
    def solve_paths(self):
        """Shortest paths from every cut portal to every node"""
        sources = np.concatenate([np.concatenate([l, r])
                                  for l, r, _, _ in self.sides])
        self.distances, self.predecessors = dijkstra(
            self.graph, directed=True, indices=sources,
            return_predecessors=True)
        self._row = np.full(self.n_nodes, -1)
        self._row[sources] = np.arange(len(sources))
        logger.debug('Distances from %d cut portals', len(sources))

    def crossing(self, letter):
        """`(departure nodes, arrival nodes, costs)` of a crossing letter"""
        left, right, plus, minus = self.sides[abs(letter) - 1]
        return (left, right, plus) if letter > 0 else (right, left, minus)

    def transfer(self, x, y):
        """Cost matrix from arriving through `x` to arriving through `y`"""
        _, arrive, _ = self.crossing(x)
        depart, _, cost = self.crossing(y)
        rows = self._row[arrive]
        return self.distances[np.ix_(rows, depart)] + cost[None, :]

    def _start(self, x):
        n = len(self.crossing(x)[0])
        P = np.full((n, n), np.inf)
        np.fill_diagonal(P, 0.)
        return P

    def _close(self, P, seq):
        return np.min(P + self.transfer(seq[-1], seq[0]).T, axis=1)

    def search(self, words=WORDS, slack=SLACK):
        """Cheapest closed paths per admissible crossing class

        :param words: Maximal number of cut crossings
        :returns: List of `(cost, letters)` sorted by cost, one per class,
            restricted to costs within `slack` of the best

        """
        k = self.cuts.k
        letters = [s * i for i in range(1, k + 1) for s in (1, -1)]
        rank = {l: n for n, l in enumerate(letters)}
        found = {}
        state = {'best': np.inf, 'visited': 0}

        def extend(P, seq):
            state['visited'] += 1
            if len(seq) >= 2 and seq[-1] != -seq[0]:
                cost = float(np.min(self._close(P, seq)))
                word = HomotopyWord(seq, k)
                if np.isfinite(cost) and is_admissible(word):
                    if cost < found.get(word, (np.inf,))[0]:
                        found[word] = (cost, list(seq))
                    state['best'] = min(state['best'], cost)
            if len(seq) == words:
                return
            for y in letters:
                if y == -seq[-1] or rank[y] < rank[seq[0]]:
                    continue
                T = self.transfer(seq[-1], y)
                Q = np.min(P[:, :, None] + T[None, :, :], axis=1)
                if np.min(Q) > state['best'] * (1 + slack):
                    continue
                extend(Q, seq + [y])

        for first in letters:
            extend(self._start(first), [first])
        logger.debug('Visited %d crossing sequences, %d admissible classes',
                     state['visited'], len(found))
        bound = state['best'] * (1 + slack)
        return sorted((c, seq) for c, seq in found.values() if c <= bound)

    ###########################################################################
    #                               Tracing back                              #
    ###########################################################################
    def _portals(self, seq):
        P = self._start(seq[0])
        choices = []
        for x, y in zip(seq, seq[1:]):
            S3 = P[:, :, None] + self.transfer(x, y)[None, :, :]
            choices.append(np.argmin(S3, axis=1))
            P = np.min(S3, axis=1)
        total = P + self.transfer(seq[-1], seq[0]).T
        m1 = int(np.argmin(np.min(total, axis=1)))
        portals = [int(np.argmin(total[m1]))]
        for choice in reversed(choices):
            portals.append(int(choice[m1, portals[-1]]))
        portals.reverse()
        if __debug__:
            assert portals[0] == m1
        return portals

    def _node_path(self, u, v):
        row = self.predecessors[self._row[u]]
        path = [v]
        while path[-1] != u:
            prev = row[path[-1]]
            if prev < 0:
                raise NonConvergenceError('Node {} is unreachable from {}'
                                          .format(v, u))
            path.append(prev)
        return path[::-1]

    def trace(self, seq):
        """Polyline realising the cheapest path with crossing sequence `seq`

        :returns: :class:`~sysgeom.paths.SurfaceLoop`

        """
        portals = self._portals(seq)
        legs = []
        n = len(seq)
        for j in range(n):
            depart, arrive, _ = self.crossing(seq[j])
            u, v = depart[portals[j]], arrive[portals[j]]
            (p, a), (_, b) = self.side_xy[u], self.side_xy[v]
            legs.append((p, a, b))
            nxt, _, _ = self.crossing(seq[(j + 1) % n])
            path = self._node_path(v, nxt[portals[(j + 1) % n]])
            legs.extend(self._legs[int(s), int(t)]
                        for s, t in zip(path, path[1:]))
        return SurfaceLoop(legs)


def discretized_systole(S, eps=EPS, words=WORDS, budget=BUDGET,
                        candidates=CANDIDATES, slack=SLACK, cuts=None):
    """Marked homotopy systole from shortest paths in an epsilon-net

    :param S: Orientable sphere whose marked points are vertices
    :param eps: Net spacing
    :param words: Maximal number of cut crossings of a candidate loop
    :param budget: Node budget of the net
    :param candidates: Maximal number of classes to straighten
    :param slack: Relative window above the best graph cost
    :param cuts: :class:`~sysgeom.cuts.CutSystem` (default: built from `S`)
    :returns: :class:`~sysgeom.systole.SystoleCertificate`
    :raises BudgetError: if the net exceeds `budget` nodes
    :raises NonConvergenceError: if no admissible class is found

    """
    if words < 2:
        raise ValueError('{!r} is not a valid word length cap'.format(words))
    if any(c is None for c in S.marked_classes):
        raise UnsupportedBaseError('Discretised search needs marked points at '
                                   'vertices')
    cuts = build_cut_system(S) if cuts is None else cuts
    net = EpsilonNet(S, cuts, eps=eps, budget=budget)
    net.solve_paths()
    classes = net.search(words=words, slack=slack)
    if not classes:
        raise NonConvergenceError('No admissible class with at most {} '
                                  'crossings'.format(words))
    best = None
    for cost, seq in classes[:candidates]:
        try:
            loop = straighten_geodesic(S, net.trace(seq))
        except (CollapsedLoopError, NonConvergenceError,
                TransversalityError) as err:
            logger.debug('Skipping %s: %s', seq, err)
            continue
        length = loop.length(S.norm)
        logger.debug('Class %s: graph %.6g, geodesic %.9g',
                     HomotopyWord(seq, cuts.k), cost, length)
        if best is None or length < best[0] - 1e-12:
            best = (length, loop, seq, cost)
    if best is None:
        raise NonConvergenceError('No candidate class could be straightened')
    length, loop, seq, cost = best
    logger.info('Discretised systole %.9g (graph %.6g, eps=%g)', length, cost,
                eps)
    return SystoleCertificate(
        length, loop, DISCRETIZED, HomotopyWord(seq, cuts.k), S.metric_class,
        extra={'eps': eps, 'words': words, 'letters': list(seq),
               'graph_length': cost, 'nodes': net.n_nodes,
               'classes': len(classes)})
