# coding: utf-8

# # A planar graph with no strongly monotone placement, and outerplanar chains
#
# K4 with a leaf on every vertex: in any planar drawing some leaf is blocked.
# The checker names a pair with no strongly monotone path.

# In[1]:

from monodraw import (
    check_strong_monotone,
    draw_outerchain,
    k4_placement,
    random_outerplanar,
    run_checks,
)


# In[2]:

for seed in range(5):
    d = k4_placement(1 + seed % 3, seed=seed)
    r = check_strong_monotone(d)
    print(seed, d.graph.n, r.passed, r.witness)


# Outerplanar graphs, on the other hand, go on a convex chain of distinct
# positive primitive steps.

# In[3]:

g = random_outerplanar(40, seed=1, chord_prob=0.6)
d = draw_outerchain(g)
print(d.meta)
print([(r.check, r.passed) for r in run_checks(d, ["crossing", "strong"])])
