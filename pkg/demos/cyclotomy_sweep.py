# Cyclotomic numbers of order 4 and 6, read as structure constants of cyc(M, Zp).

from schurrings.cyclotomy import cyc_constants, sweep

rep = cyc_constants(13, 4)
print("p=13, l=4: c_ij^1 =")
print(rep.constants[:, :, 0])

print("\norder 4:")
for r in sweep(4, 200):
    print(" ", r.line())

# order 6: the odd-m branch shows which sign relation, if any, holds
print("\norder 6:")
for r in sweep(6, 200):
    print(" ", r.line())
