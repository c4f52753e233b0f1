# %% [markdown]
# # Graded characters of coinvariant algebras
#
# The graded character of the type B/C coinvariant algebra on a signed
# permutation w is prod (1 - z^{2i}) / det(1 - z w).  The library computes it
# class by class from the cycle type; here we compare with the determinant
# of an explicit matrix.

# %%
from torilab.charpoly import evaluate
from torilab.coinvariant import (
    graded_char,
    graded_char_bc_oracle,
    q_char_polys,
    verify_stable_range,
)
from torilab.partitions import DoublePartition, signed_representative

# %%
G = graded_char("BC", 3)
for c, p in G.polys.items():
    word = signed_representative(c)
    assert p == graded_char_bc_oracle(word)
    print(f"{c.to_text():>7}  {word}  {p.format('z')}")

# %% [markdown]
# One character polynomial Q_i describes the degree-i piece for all n with
# i <= 2n+1.  Print the first few.

# %%
Q = q_char_polys(3)
for i, Qi in enumerate(Q):
    print(f"Q_{i} = {Qi.format()}")

# %% [markdown]
# The range is sharp: on B_n the first disagreement is in degree 2n+2.

# %%
for n in range(4):
    print(verify_stable_range(n).to_json())

# %% [markdown]
# For instance Q_2 is -1 on the trivial group B_0, whose coinvariant
# algebra has nothing in degree 2.

# %%
print(evaluate(q_char_polys(2)[2], DoublePartition.from_text("|")))
