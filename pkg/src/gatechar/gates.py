"""Constant two-qubit gates in the computational basis |00>, |01>, |10>, |11>."""

import numpy as np

IDENTITY = np.eye(4, dtype=complex)

CNOT = np.array([[1, 0, 0, 0],
                 [0, 1, 0, 0],
                 [0, 0, 0, 1],
                 [0, 0, 1, 0]], dtype=complex)

SWAP = np.array([[1, 0, 0, 0],
                 [0, 0, 1, 0],
                 [0, 1, 0, 0],
                 [0, 0, 0, 1]], dtype=complex)

BUILTIN_GATES = {"CNOT": CNOT, "SWAP": SWAP, "IDENTITY": IDENTITY}
