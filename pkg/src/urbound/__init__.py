"""Uncertainty bounds for pairs of unitary operators.

Library layout:

- linalg: Hermitian eigensolver, seeded random states and densities
- operators: clock/shift, Fourier, Pauli and anticommuting-generator
  constructors, Harper and tilted Hamiltonians
- uncertainty: variance, visibility, covariance, Bargmann invariant,
  non-Hermitian deviation decomposition
- bounds: every lower bound on the variance sum, with a combined report
- mus: minimum-uncertainty states and the per-dimension summary table
- asymptotics: Hermitian generators and high-dimension limit checks
- cli: `urbound` command-line front end
"""

__version__ = "0.1.0"
