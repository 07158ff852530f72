"""Physical constants (2019 SI exact values), SI units throughout.

All frequencies in this package are angular frequencies in rad/s, never Hz.
"""

HBAR = 1.054571817e-34  # reduced Planck constant, J s
C_LIGHT = 2.99792458e8  # speed of light in vacuum, m/s
K_B = 1.380649e-23      # Boltzmann constant, J/K
