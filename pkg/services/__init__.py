from .spectrum_service import bound_energy, spectrum_table, hulthen_energy, rosen_morse_energy
from .wavefunction_service import radial_state, normalize, count_nodes, ode_residual
from .oracle_service import GridSpec, compare, discretize, lowest_eigenvalues
from .storage_service import StorageService

__all__ = [
    "bound_energy", "spectrum_table", "hulthen_energy", "rosen_morse_energy",
    "radial_state", "normalize", "count_nodes", "ode_residual",
    "GridSpec", "compare", "discretize", "lowest_eigenvalues",
    "StorageService",
]
