"""Computable ingredients of the counterexample to the p-normal conjecture.

1. On G_m^3 over F_25, g = (t + a, t - a, t) returns to x + y = 2z + 2a^2
   exactly on {25^n1 + 25^n2}.
2. (5^j + 5^2j) g0 lies in C1 + C2 + C3 on G_m^2 x E^2, certified by an
   explicit witness triple.
3. The family {25^n + 25^2n} is widely p-normal but not p-normal.
"""

# %% the torus identity, by an exact scan
from retset import checks, configs
from retset.groups import parse_group_file
from retset.psets import ABTerm, PSetTerm, classify, window
from retset.scan import orbit_scan
from retset.subvariety import check_sum_witness, parse_equation_file

tg, tp = parse_group_file(configs.torus_group())
V0 = parse_equation_file(configs.TORUS_EQUATIONS)
rep = orbit_scan(tg, tp, V0, 2000, "exact")
print("exact scan of [0, 2000]:", rep.members)
print("A(25;1,1) on [0, 2000]:  ", window(ABTerm("A", 25, 1, 1), 2000))

# %% witness triples for j = 0, 1, 2
group, g0, factors = checks.example54_setup()
for j in range(3):
    w, target = checks.example54_witness(group, g0, factors, j)
    v = check_sum_witness(w, target, s=5, seed=j)
    print("j = %d: %s, false-accept bound %.2e" % (j, v.verdict, v.error_bound))

# %% a wrong sign in the torus part of the C3 witness is caught at factor 3
w, target = checks.example54_witness(group, g0, factors, 1, corrupt="C3")
v = check_sum_witness(w, target)
print("corrupted witness:", v.verdict, "at factor", v.failing_index)

# %% classification
print("S_{25,1,1}(0;1,1):", classify(PSetTerm(25, 0, [[1, 1]])))
print("S_{5,1,0}(-1;1):  ", classify(PSetTerm(5, -1, [[1]])))
