# coding: utf-8

# # Convex grid drawings of trees
#
# A random tree without degree-2 vertices, drawn on the integer grid two ways,
# then checked.

# In[1]:

from pathlib import Path

from monodraw import angular_resolution, draw_ce_grid, draw_inorder, gen_random_tree, run_checks
from monodraw.cli import render_svg

out = Path(__file__).with_name("out")
out.mkdir(exist_ok=True)


# In[2]:

t = gen_random_tree(60, max_deg=4, seed=3, no_deg2=True)
d = draw_inorder(t)
print(d.meta)
print(d.bounding_box())


# In[3]:

for r in run_checks(d, ["crossing", "monotone", "convex", "strict-convex"]):
    print(r.check, r.passed, r.stats)


# In[4]:

res = angular_resolution(d)
print(res.angle, res.vertex, res.pair)


# The same tree with slopes spread around the leaves instead:

# In[5]:

ce = draw_ce_grid(t)
print(ce.meta, angular_resolution(ce).angle)
print([r.passed for r in run_checks(ce, ["crossing", "monotone", "convex"])])


# In[6]:

(out / "inorder.svg").write_text(render_svg(d))
(out / "ce.svg").write_text(render_svg(ce))
