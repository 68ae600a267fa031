"""Maximal matching in linear time.

A maximal (not maximum) matching is all the rest of the package ever needs:
once no edge can be added, every edge touches a covered vertex, and the
uncovered vertices form an independent set. The scan order is the canonical
edge order, which makes the result deterministic and testable.
"""

from __future__ import annotations

from maxbisect import backends
from maxbisect.graph import Graph, Matching


def maximal_matching(g: Graph) -> Matching:
    """Greedy maximal matching over the canonical edge order, O(n + m).

    An edge is taken iff both endpoints are still uncovered. Every edge of g
    ends up with at least one covered endpoint, and two runs on the same
    graph return identical pair sequences.
    """
    return Matching(pairs=backends.matching_scan(g.edges_u, g.edges_v, g.n))
