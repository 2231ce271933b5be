import numpy as np


def rand_density(rng: np.random.Generator) -> np.ndarray:
    """Random qutrit density matrix (Ginibre ensemble)."""
    g = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    rho = g @ g.conj().T
    return rho / rho.trace()
