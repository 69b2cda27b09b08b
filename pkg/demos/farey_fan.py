# coding: utf-8

# # Primitive vectors and the slope fan
#
# Vectors (x, y) with 0 <= x <= y <= d and gcd 1 come out of the Farey
# recurrence already sorted by slope. Reflecting them through the eight
# octants gives a fan of directions around the origin.

# In[1]:

import math

import numpy as np

from monodraw import farey_size, farey_vectors, min_pairwise_angle, octant_fill, select_d_for


# In[2]:

vs = farey_vectors(6)
print(len(vs), farey_size(6))
print(vs.tolist())


# Each vector sits between its two Farey neighbors with determinant one.

# In[3]:

dets = vs[:-1, 1] * vs[1:, 0] - vs[:-1, 0] * vs[1:, 1]
print(np.unique(dets))


# In[4]:

fan = octant_fill(vs)
print(len(fan), fan[:4].tolist())


# The narrowest wedge between consecutive fan directions:

# In[5]:

angle, pair = min_pairwise_angle(fan)
print(angle, math.atan(1 / 50), pair)


# How the order needed for k slopes grows:

# In[6]:

for k in (1, 13, 100, 1000, 10000):
    print(k, select_d_for(k))
