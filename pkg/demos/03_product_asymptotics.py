# %% [markdown]
# # Infinite products near a root of unity
#
# F_1(xi; q) = prod (1 - xi q^n), F_2(xi; q) = prod (1 - xi^n q^n) and
# F_3(xi; q) = prod (1 - xi^{-1} (xi q)^n) all blow up or vanish like
# exp(c / z) as q = e^{-z} tends to 1. The asymptotic formulas below are
# compared against the products themselves.

# %%
import math
from fractions import Fraction

import mpmath

from hookdist import products
from hookdist.modular import ExactPhase

# %% [markdown]
# ## Relative error along rays of a cone
#
# The error |direct/asymptotic - 1| should halve when z halves, on every ray
# in the sector |arg z| <= pi/4.

# %%
rep = products.ratio_study(1, 3)
for ray in rep["rays"]:
    errs = ", ".join("%.2e" % e for e in ray["errors"][:4])
    print("alpha=%+.3f  slope=%.3f  %s ..." % (ray["alpha"], ray["slope"], errs))

# %%
rep = products.ratio_study(3, 2)
print([round(r["slope"], 3) for r in rep["rays"]])

# %% [markdown]
# F_2 at a primitive cube root, with q^2 in place of q. Here the approach to 1
# is linear along the real axis but there is no clean rate off it.

# %%
f2 = products.f2_ratio_study()
print(["%.2e" % e for e in f2["errors"]])
print(["%.2e" % e for e in f2["tilted_errors"]])

# %% [markdown]
# ## Two ingredients
#
# The eta transformation at the cusp 1/3, checked at 256 bits.

# %%
print(products.eta_transform_check(1, 3, mpmath.mpc("0.2", "0.1"))["error"])

# %% [markdown]
# The digamma sum that produces the Log(1 - xi) term, for b = 5.

# %%
print(products.digamma_identity_check(5)["cases"])

# %% [markdown]
# ## Euler-Maclaurin with a shifted grid
#
# At a = 1/3 the 1/z coefficient of the error vanishes, so the error falls by
# 4 each time z halves. At a = 1/2 every correction vanishes and the error
# sits at the precision floor.

# %%
for a in (Fraction(1, 3), Fraction(1, 2)):
    r = products.euler_maclaurin_check(a, 1)
    print(a, ["%.2e" % row["error"] for row in r["rows"]], r["slope"])

# %%
print(products.binet_integral_check(5))

# %% [markdown]
# Sanity check on a single value: F_1(-1; 1/2) as a plain product.

# %%
print(products.F_direct(1, -1, 0.5, 64), mpmath.fprod(1 + 0.5**n for n in range(1, 60)))
print(complex(ExactPhase.root_of_unity(1, 3)), math.cos(2 * math.pi / 3))
