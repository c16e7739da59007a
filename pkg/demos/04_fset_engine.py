"""F-sets on abstract modules: recurrences, periods, index-set decomposition."""

# %% Phi^n = sum c_j(n) Phi^j for a monic P with P(Phi) = 0
from retset.fsets import (FGModule, FrobeniusSpec, FSetSpec, decompose_index_set,
                          eventual_period_mod, phi_power_apply, prop211_closed_form, prop212_fit,
                          recurrence_basis)
from retset.psets import window

B = recurrence_basis([1, -3, 2])
print("x^2 - 3x + 2: c_0(n) =", [B(0, n) for n in range(6)])
for N in (4, 8, 5):
    print("5^n mod %d: (preperiod, period) =" % N, eventual_period_mod([1, -5], N))

# %% Z/3 + Z with Phi(a, s) = (2a, 5s)
M = FGModule(1, (3,))
spec = FrobeniusSpec(M, [[5]], [[2]])
print("P =", spec.P, " Phi^2(1, 1) =", phi_power_apply(2, M.elem((1,), (1,)), spec))

# %% {n : (1, 0) + Phi^n(1, 1) in Z (0, 1)} is the odd numbers, exactly
F = FSetSpec(M.elem((1,), (0,)), [M.elem((1,), (1,))])
D = decompose_index_set(spec, F, M.elem((0,), (1,)))
print(D.to_text(), D.notes)

# %% a quadratic Frobenius: only the zero orbit stays on a line
M2 = FGModule(2)
spec2 = FrobeniusSpec(M2, [[0, -5], [1, 2]])
D2 = decompose_index_set(spec2, FSetSpec(M2.zero(), [M2.elem((), (1, 0))]), M2.elem((), (1, 0)))
print(spec2.eigen_kind(), D2.to_text(), D2.notes)

# %% closed forms for {c + sum l_i (t^n_i - 1)/(t - 1)}
print(prop211_closed_form(0, [4], 5), "->", window(prop211_closed_form(0, [4], 5), 700))
print(prop211_closed_form(0, [6], -5))

# %% coefficient fitting: l_n = 3 * 25^n + 2 * 625^n
print(prop212_fit([3 * 25 ** n + 2 * 625 ** n for n in range(7)], 25, 2))
