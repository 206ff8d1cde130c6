"""The shifted kernels normalize: K^{alpha_n}(0) -> 1.

Shifting the data by n (symbol times t^n, weights times |zeta_k|^{2n})
produces the orthonormal system e_n = z^n K^{alpha_n}.  As n grows the
perturbation washes out and K^{alpha_n}(0) tends to 1.  For the single-mass
case the whole trace is elementary:

    K^{alpha_n}(0) = sqrt((1 + 4^{-n}) / (1 + 4^{1-n})).
"""

import numpy as np

from hardydual import asymptotic_sweep, orthonormal_system
from hardydual.corpus import BY_NAME, mass_single_trace

space = BY_NAME["mass_single"].space(4096)
trace = asymptotic_sweep(space, n_max=12, degree=40)

print(" n   K^(n)(0) computed     closed form           |K-1|")
for n, value in zip(trace.shifts, trace.values):
    closed = mass_single_trace(int(n))
    print(f"{n:2d}   {value:.15f}   {closed:.15f}   {abs(value-1):.2e}")
print(f"\nconverged (three consecutive |K-1| < 1e-3) at n = {trace.converged_at(1e-3)}")

# the same normalization on a mixed symbol+mass dataset
mixed = BY_NAME["mixed_rational"].space(4096)
mixed_trace = asymptotic_sweep(mixed, n_max=16, degree=48)
print("\nmixed_rational:", np.array2string(mixed_trace.deviations, precision=2))

# and the system e_n is orthonormal in the unshifted space
system = orthonormal_system(mixed, range(0, 9), degree=48)
print(f"orthonormality defect of (e_0..e_8): {system.orthonormality_defect:.2e}")
system_two_sided = orthonormal_system(mixed, range(-3, 6), degree=32)
print(f"two-sided system (e_-3..e_5) defect: {system_two_sided.orthonormality_defect:.2e}")
