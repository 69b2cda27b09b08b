# coding: utf-8

# # Strongly monotone drawings inside the unit disk
#
# Children sit on perpendicular feet inside shrinking circular caps, so the
# coordinates need more and more bits with depth. The precision grows
# automatically until the layout fits.

# In[1]:

import time

from monodraw import (
    PrecisionExhausted,
    PrecisionPolicy,
    check_strictly_convex,
    check_strong_monotone,
    complete_binary_tree,
    draw_disk,
    draw_strong,
    star_tree,
)


# In[2]:

for depth in (2, 4, 6, 8, 10):
    t0 = time.perf_counter()
    d = draw_disk(complete_binary_tree(depth))
    ok = check_strong_monotone(d, 1e-9).passed and check_strictly_convex(d).passed
    print(depth, d.kind, ok, f"{time.perf_counter() - t0:.2f}s")


# Plain doubles run out early:

# In[3]:

try:
    draw_disk(complete_binary_tree(10), PrecisionPolicy(bits=53))
except PrecisionExhausted as exc:
    print("binary64:", exc)


# Arbitrary degree, rooted at the center:

# In[4]:

d = draw_strong(star_tree(5))
print(d.kind, check_strong_monotone(d).passed)


# The comb route through a binary tree works only up to degree three.

# In[5]:

print(check_strong_monotone(draw_strong(star_tree(5), method="binarize")).witness)
