# %% [markdown]
# # Stable twisted Betti numbers
#
# For a character polynomial P, the multiplicity of P in the degree-i piece
# of the coinvariant algebra of B_n stops depending on n once n >= deg P + i.
# The stable values have a rational generating function, hence a linear
# recurrence and a quasipolynomial formula.  We look at the third exterior
# power of the signed permutation representation.

# %%
from torilab.betti import betti_at, betti_report, stable_betti_direct
from torilab.charpoly import parse_char_poly

P = parse_char_poly("Wedge3Cn")
print(P.format())

# %% [markdown]
# Twisted Betti numbers for growing n settle down column by column.

# %%
for n in range(3, 12):
    print(n, [str(betti_at(P, n, i)) for i in range(0, 14)])

# %%
report = betti_report(P, 43, with_recurrence=True, with_quasipoly=True)
print("GF:", report.gf.gf.format())
print("odd coefficients:", [str(c) for c in report.coeffs[9::2]])
print("recurrence:", report.recurrence.to_json())
for residues, poly in report.quasipolynomial.cases():
    print(residues, poly.format("d"))

# %% [markdown]
# The generating function and the direct inner products agree.

# %%
direct = [stable_betti_direct(P, i).value for i in range(14)]
assert direct == report.coeffs[:14]
print("ok")
