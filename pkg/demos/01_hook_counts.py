# %% [markdown]
# # Counting t-hooks modulo b
#
# Every cell of a Young diagram has a hook length. Fix t and count the hooks
# whose length is divisible by t; then sort the partitions of n by that count
# modulo b. `p_t(a,b;n)` is the size of class a.
#
# Run with `python3 demos/01_hook_counts.py`.

# %%
from collections import Counter

from hookdist import HookQuery, brute_force_pt, han_series, hook_multiset, pt_series
from hookdist.distributions import ct_constant, psi_ratio

# %% [markdown]
# The hooks of (4, 2, 1). The corner cell has hook 1, the top-left cell 6.

# %%
print(sorted(hook_multiset((4, 2, 1)).elements(), reverse=True))

# %% [markdown]
# ## Brute force against the generating function
#
# Enumerate all 42 partitions of 10 and tally their 2-hook counts. The
# x^a components of Han's product should agree exactly.

# %%
n, t, b = 10, 2, 3
brute = [brute_force_pt(HookQuery(t, a, b, n)) for a in range(b)]
series = [pt_series(t, a, b, n)[n] for a in range(b)]
print("brute force:", brute)
print("series     :", series)

# %% [markdown]
# With a modulus larger than any count we see the raw distribution of
# #H_2 over partitions of 8: 2 partitions with one 2-hook, 20 with four.

# %%
h = han_series(2, 5, 8)
print({j: c for j, c in enumerate(h[8].components) if c})

# %% [markdown]
# ## The proportions settle down, but not to 1/3
#
# For t = 2 and b = 3 the limit depends on n mod 3, and for every n one
# class is exactly empty (a vanishing theorem, not an approximation).
# `c_t` gives the limiting proportion.

# %%
for n in (300, 1200, 2400):
    psi = [float(psi_ratio(2, a, 3, n, order=2400)) for a in range(3)]
    c = [str(ct_constant(2, a, 3, n).value) for a in range(3)]
    print(n, ["%.4f" % x for x in psi], c)

# %%
for n in (301, 1201, 2401):
    psi = [float(psi_ratio(2, a, 3, n, order=2401)) for a in range(3)]
    c = [str(ct_constant(2, a, 3, n).value) for a in range(3)]
    print(n, ["%.4f" % x for x in psi], c)

# %% [markdown]
# t = 4 behaves differently again: at n = 0 mod 3 the limits are 4/9, 1/3, 2/9.

# %%
print([str(ct_constant(4, a, 3, 0).value) for a in range(3)])
print(["%.4f" % float(psi_ratio(4, a, 3, 2400)) for a in range(3)])

# %% [markdown]
# Totals over n = 1..12 for t = 3: the small-n counts lean towards class 0.

# %%
dist = Counter()
for n in range(1, 13):
    for a in range(3):
        dist[a] += pt_series(3, a, 3, 12)[n]
print(dict(dist))
