"""Physical constants in the eV / nm / fs unit system used throughout."""

# hbar and conversion helpers
HBAR_EV_FS = 0.6582119569       # eV fs
HBAR_C_EV_NM = 197.3269804      # eV nm
M0_C2_EV = 510998.95            # electron rest energy, eV

# hbar^2 / (2 m0) -- the free-electron kinetic prefactor
T0_EV_NM2 = HBAR_C_EV_NM**2 / (2.0 * M0_C2_EV)   # 0.0380998... eV nm^2

# elasticity: 1 GPa nm^3 expressed in eV (1e-18 J / e)
GPA_NM3_TO_EV = 1e-18 / 1.602176634e-19          # 6.24151 eV

# vacuum impedance pieces for intensity -> field conversion (SI)
EPS0_SI = 8.8541878128e-12      # F/m
C_SI = 2.99792458e8             # m/s
E_SI = 1.602176634e-19          # C

W_PER_CM2_TO_W_PER_M2 = 1.0e4
