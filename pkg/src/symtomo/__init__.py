"""Symplectic tomography of one-dimensional quantum states.

Transforms between tomograms, Wigner functions, wavefunctions and density
matrices; Sp(2, R) frame algebra; quantumness checks; and the closed-form
Moshinsky shutter in all three representations.
"""

__version__ = "0.1.0"

from .core import (DataError, DensityMatrix, DomainError, Grid1D, OpticalTomogram,
                   PreconditionError, Tomogram, WaveFunction, WignerField,
                   integrate_1d, integrate_2d)
from .shutter import ShutterParams
from .symplectic import SymplecticMatrix, apply_canonical, compose, frame_matrix, inverse
from .transforms import (InverseRadonConfig, density_matrix_from_tomogram, inverse_radon,
                         radon_forward, tomogram_from_wavefunction, wigner_from_tomogram,
                         wigner_from_wavefunction)
