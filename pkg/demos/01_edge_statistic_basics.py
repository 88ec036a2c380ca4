"""Graphs, edge densities, and the centered spectrum.

The whole method rests on one matrix: take the adjacency matrix A of an
undirected simple graph, subtract the flat-model expectation built from the
estimated edge density, and rescale.  For a flat random graph the bulk of
that spectrum fills the semicircle on [-2, 2] and the largest eigenvalue
sticks to the edge at 2.  Communities push it out.
"""

import numpy as np

from twclust import (
    ErParams,
    SbmParams,
    build_graph,
    bulk_spectrum,
    estimate_edge_density,
    induced_subgraph,
    NodeSubset,
    sample_er,
    sample_sbm,
    semicircle_density,
)

# -- tiny graphs by hand ------------------------------------------------------

path = build_graph(3, [(0, 1), (1, 2)])
print("path graph:", path, "density:", estimate_edge_density(path))

triangle = build_graph(3, [(0, 1), (1, 2), (0, 2)])
sub = induced_subgraph(triangle, NodeSubset(triangle, [0, 2]))
print("triangle restricted to {0, 2}:", sub)

# -- the bulk follows the semicircle -----------------------------------------

g = sample_er(ErParams(n=500, p=0.5), seed=1)
p_hat = estimate_edge_density(g)
eigs = bulk_spectrum(g, p_hat)
print(f"\nflat graph n=500: density estimate {p_hat:.4f}")
print(f"spectrum range [{eigs[0]:.3f}, {eigs[-1]:.3f}] "
      "(bulk should fill about [-2, 2])")

hist, edges = np.histogram(eigs, bins=24, range=(-2.1, 2.1), density=True)
mids = 0.5 * (edges[:-1] + edges[1:])
print("\n  x      empirical   semicircle")
for x, h in zip(mids[::4], hist[::4]):
    print(f"{x:6.2f} {h:10.3f} {semicircle_density(x):12.3f}")

# -- a planted structure detaches the top eigenvalue --------------------------

params = SbmParams(block_sizes=(250, 250), b=((0.7, 0.3), (0.3, 0.7)))
g2, _ = sample_sbm(params, seed=1)
eigs2 = bulk_spectrum(g2, estimate_edge_density(g2))
print(f"\ntwo blocks n=500: top of spectrum {eigs2[-1]:.2f} "
      f"vs flat-graph edge at ~2 (runner-up {eigs2[-2]:.2f})")
