# %% [markdown]
# # Betti numbers of Hilbert schemes of points, sorted by degree mod b
#
# The Poincare polynomial of the Hilbert scheme of n points in the plane
# is the q^n coefficient of a simple infinite product. At T = 1 it counts
# partitions of n, so grouping the Betti numbers by degree mod b splits p(n)
# into b pieces.

# %%
from fractions import Fraction

from hookdist.hilbert import betti_sum, buryak_feigin_series, delta, delta_quasi, goettsche_series
from hookdist.tables import hilbert_table

g = goettsche_series(60)

# %% [markdown]
# Polynomials for n = 1..5, written as T-degree: coefficient.

# %%
for n in range(1, 6):
    poly = g.poly(n)
    print(n, {d: c for d, c in enumerate(poly) if c})

# %% [markdown]
# ## Splitting p(n)
#
# Degree 2k goes to class 2k mod b. For even b only even classes receive
# anything.

# %%
n = 12
for b in (2, 3, 4):
    parts = [betti_sum(g, a, b, n) for a in range(b)]
    print(b, parts, sum(parts))

# %% [markdown]
# The proportions approach 1/3 quickly for b = 3.

# %%
print(hilbert_table(3, [1, 2, 18, 19, 20], order=60).to_text())

big = goettsche_series(200)
print(float(max(abs(delta(a, 3, 200, big) - Fraction(1, 3)) for a in range(3))))

# %% [markdown]
# ## The quasihomogeneous version
#
# Fixing a torus T_{2,3} gives a second product with far fewer nonzero Betti
# numbers. The coefficient of q^7 is 13 + 2T^2.

# %%
bf = buryak_feigin_series(2, 3, 500)
print({d: c for d, c in enumerate(bf.poly(7)) if c})
for n in (100, 300, 500):
    print(n, ["%.4f" % float(delta_quasi(2, 3, a, 3, n, bf)) for a in range(3)])
