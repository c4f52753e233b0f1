# %% [markdown]
# # Counting maximal tori over a finite field
#
# F-stable maximal tori of GL_n and Sp_2n are sorted by type: a partition
# of n for GL_n, a double partition for Sp_2n.  Every count is a rational
# function of q, and they add up to a single power of q.

# %%
from torilab.charpoly import parse_char_poly
from torilab.exactmath import RationalFunction
from torilab.partitions import enumerate_double_partitions, enumerate_partitions
from torilab.tori import asymptotic_limit_poly, count_tori, normalized_statistic_at

# %% [markdown]
# Tori in Sp_4, by type.

# %%
total = RationalFunction(0)
for c in enumerate_double_partitions(2):
    value = count_tori("BC", c)
    total = total + value
    print(f"{c.to_text():>6}  {value.format()}")
print("total", total.format())

# %% [markdown]
# The same for GL_4; the total is q^12.

# %%
print(sum((count_tori("A", lam) for lam in enumerate_partitions(4)), RationalFunction(0)).format())

# %% [markdown]
# Polynomial statistics.  Average the number of 1-cycles, positive or negative,
# `X1 + Y1` over all tori of Sp_2n at q = 2 and watch it approach the
# closed-form limit.

# %%
P = parse_char_poly("X1 + Y1")
limit = asymptotic_limit_poly("BC", P)
print("limit", limit.format(), "=", limit(2))
for n in range(1, 9):
    avg = normalized_statistic_at("BC", P, n, 2)
    print(n, avg, float(avg - limit(2)))
