"""Reduced-size versions of the packaged simulation studies.

The full studies live behind `twclust simulate <recipe>` with parameters
frozen in versioned config files; this script runs shrunken variants
in-process so the shapes are visible in a minute or two.  Expect the same
qualitative pictures as the full runs: p-values fall as a planted cluster
grows, rise as the background catches up with it, and recovery of a nested
three-block design improves with density.
"""

import numpy as np

from twclust import SweepSpec, TestConfig, pvalue_sweep
from twclust._parallel import default_jobs
from twclust.recipes import _nested_run, nested_sbm_params

jobs = default_jobs()
print(f"running with {jobs} workers\n")

# -- planted cluster: p-values vs planted size ---------------------------------

spec = SweepSpec(kind="n1", values=(30, 60, 100), n=600, b11=0.15, b12=0.05)
rows = pvalue_sweep(spec, runs=10, cfg=TestConfig(seed=0), jobs=jobs)
print("planted-size sweep (n=600, background 0.05, planted 0.15):")
for r in rows:
    print(f"  n1 = {int(r.param):3d}: mean p = {r.mean_pvalue:.3g} "
          f"(sd {r.sd_pvalue:.2g}, {r.runs} runs)")

# -- planted cluster: p-values vs background level -----------------------------

spec = SweepSpec(kind="b12", values=(0.05, 0.08, 0.11), n=600, b11=0.15, n1=90)
rows = pvalue_sweep(spec, runs=10, cfg=TestConfig(seed=0), jobs=jobs)
print("\nbackground sweep (n=600, planted 90 nodes at 0.15):")
for r in rows:
    print(f"  b12 = {r.param:.2f}: mean p = {r.mean_pvalue:.3g} "
          f"(sd {r.sd_pvalue:.2g}, {r.runs} runs)")

# -- nested three-block recovery ------------------------------------------------

print("\nnested blockmodel recovery (10 runs per density scale):")
print("  B = rho * [[0.2, 0.1, 0.01], [0.1, 0.2, 0.01], [0.01, 0.01, 0.075]],"
      " blocks 200/200/600")
for rho in (0.10, 0.25):
    aris = [_nested_run(rho, 0.01, 10, 50, 12345, run, None)[0]
            for run in range(10)]
    print(f"  rho = {rho:.2f}: mean ARI {np.mean(aris):.3f} "
          f"(sd {np.std(aris, ddof=1):.3f})")

print("\nfull-size versions: twclust simulate planted-cluster / nested-sbm "
      "/ tw-convergence / laplacian-fit")
