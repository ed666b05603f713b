# %% [markdown]
# # An exact formula for twisted hook counts
#
# c_{t,b,r}(n) = sum_a p_t(a,b;n) zeta_b^{ra} is the q^n coefficient of a
# weakly holomorphic modular form, so it has a convergent Bessel series
# indexed by cusps h/k. Truncating at k <= 30 already lands within a few
# hundredths of the exact value for small n.

# %%
import mpmath

from hookdist.distributions import (
    TruncationPlan,
    shell_main_term,
    twisted_coefficient,
    zuckerman_truncated,
)
from hookdist.modular import KloostermanParams, kloosterman_closed, kloosterman_direct

plan = TruncationPlan(kmax=30, prec=128)

# %%
for n in (10, 14, 18):
    z = zuckerman_truncated(2, 3, 1, n, plan)
    exact = twisted_coefficient(2, 3, 1, n)
    print(n, mpmath.nstr(exact, 8), mpmath.nstr(z.value, 8), "last shell %.1e" % z.last_shell)

# %% [markdown]
# ## Which cusp dominates
#
# For large n the k = b shell carries the growth. Its size matches the main
# term with the factor b^((1-t)/2).

# %%
z = zuckerman_truncated(2, 3, 1, 500, TruncationPlan(3))
for k, s in z.shells:
    print(k, mpmath.nstr(abs(s), 6))
shell = z.shells[2][1]
print("shell / main:", mpmath.nstr(shell / shell_main_term(2, 3, 1, 500), 6))

# %% [markdown]
# ## Kloosterman sums in closed form
#
# Summing the k = b terms over h gives a Kloosterman sum, which collapses to
# a Legendre symbol times sqrt(b) for even t.

# %%
for a in range(5):
    p = KloostermanParams(a, 5, 2, 1)
    print(a, mpmath.nstr(kloosterman_direct(p), 10), mpmath.nstr(kloosterman_closed(p), 10))
