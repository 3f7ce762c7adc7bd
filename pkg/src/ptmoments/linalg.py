"""Dense complex linear algebra for small bipartite operators.

Everything here works on plain numpy arrays (complex128, row-major). The
composite index convention is fixed once and inherited by every other
module: a bipartite basis ket |i>|k> maps to row i * dim_b + k.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

# Construction tolerances for density matrices.
HERMITICITY_ATOL = 1e-10
TRACE_ATOL = 1e-10
PSD_ATOL = 1e-10

# Looser gate for operations that merely require a Hermitian input.
HERMITIAN_INPUT_ATOL = 1e-8


def as_complex_matrix(m) -> np.ndarray:
    """Coerce to a 2-D complex128 array and reject non-finite entries."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise ValueError("matrix contains non-finite entries")
    return a


def hermiticity_defect(m: np.ndarray) -> float:
    """Max-norm distance from m to its own conjugate transpose."""
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


def hermitize(m: np.ndarray) -> np.ndarray:
    """Hermitian part (m + m†)/2."""
    return (m + m.conj().T) / 2


@dataclass(frozen=True)
class DensityMatrix:
    """A unit-trace PSD Hermitian matrix with an attached bipartition.

    The matrix acts on a dim_a * dim_b composite space with the row-major
    index convention |i>|k| -> i * dim_b + k. Validation happens at
    construction; instances are immutable afterwards.
    """

    matrix: np.ndarray
    dim_a: int
    dim_b: int
    hermiticity_defect: float = field(init=False)

    def __post_init__(self):
        m = as_complex_matrix(self.matrix)
        if m.shape[0] != m.shape[1]:
            raise ValueError(f"density matrix must be square, got {m.shape}")
        if self.dim_a < 1 or self.dim_b < 1:
            raise ValueError("bipartition dimensions must be >= 1")
        if self.dim_a * self.dim_b != m.shape[0]:
            raise ValueError(
                f"bipartition {self.dim_a}x{self.dim_b} does not match "
                f"matrix dimension {m.shape[0]}"
            )
        defect = hermiticity_defect(m)
        if defect > HERMITICITY_ATOL:
            raise ValueError(f"matrix is not Hermitian (defect {defect:.3e})")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > TRACE_ATOL:
            raise ValueError(f"matrix trace {tr} is not 1")
        min_eig = float(np.linalg.eigvalsh(hermitize(m))[0])
        if min_eig < -PSD_ATOL:
            raise ValueError(f"matrix is not PSD (min eigenvalue {min_eig:.3e})")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "hermiticity_defect", defect)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product with an explicit shape check."""
    a = as_complex_matrix(a)
    b = as_complex_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; composite index (i, k) -> i * b.rows + k."""
    return np.kron(as_complex_matrix(a), as_complex_matrix(b))


def trace_of_power(m: np.ndarray, k: int) -> complex:
    """tr(m^k) by repeated multiplication, k >= 1."""
    m = as_complex_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise ValueError("trace_of_power requires a square matrix")
    if k < 1:
        raise ValueError("power must be >= 1")
    acc = m
    for _ in range(k - 1):
        acc = acc @ m
    return complex(np.trace(acc))


def hermitian_eigenvalues(m: np.ndarray) -> np.ndarray:
    """All real eigenvalues of a Hermitian matrix, ascending."""
    m = as_complex_matrix(m)
    defect = hermiticity_defect(m)
    if defect > HERMITIAN_INPUT_ATOL:
        raise ValueError(f"input is not Hermitian (defect {defect:.3e})")
    return np.linalg.eigvalsh(hermitize(m))


def expm_hermitian(m: np.ndarray, scale: complex = 1.0) -> np.ndarray:
    """exp(scale * m) for Hermitian m via eigendecomposition.

    For purely imaginary scale the result is unitary.
    """
    m = as_complex_matrix(m)
    defect = hermiticity_defect(m)
    if defect > HERMITIAN_INPUT_ATOL:
        raise ValueError(f"input is not Hermitian (defect {defect:.3e})")
    w, v = np.linalg.eigh(hermitize(m))
    return (v * np.exp(scale * w)) @ v.conj().T


def partial_transpose_matrix(
    m: np.ndarray, dim_a: int, dim_b: int, which: str = "B"
) -> np.ndarray:
    """Partial transpose of a dim_a*dim_b square matrix.

    which="B": output[(i,k),(j,l)] = input[(i,l),(j,k)]
    which="A": output[(i,k),(j,l)] = input[(j,k),(i,l)]

    Pure entry permutation: applying it twice returns the input bit-exactly.
    """
    m = as_complex_matrix(m)
    d = dim_a * dim_b
    if m.shape != (d, d):
        raise ValueError(f"matrix shape {m.shape} does not match {dim_a}x{dim_b}")
    r = m.reshape(dim_a, dim_b, dim_a, dim_b)
    if which == "B":
        out = r.transpose(0, 3, 2, 1)
    elif which == "A":
        out = r.transpose(2, 1, 0, 3)
    else:
        raise ValueError(f"subsystem selector must be 'A' or 'B', got {which!r}")
    return out.reshape(d, d).copy()


def partial_transpose(rho: DensityMatrix, which: str = "B") -> np.ndarray:
    """Partial transpose of a density matrix over the chosen subsystem."""
    return partial_transpose_matrix(rho.matrix, rho.dim_a, rho.dim_b, which)


# ---------------------------------------------------------------------------
# JSON interchange: {"rows": n, "cols": n, "re": [...], "im": [...]}
# with row-major flattening. Density files add "dim_a"/"dim_b".


def matrix_to_dict(m: np.ndarray) -> dict:
    m = as_complex_matrix(m)
    return {
        "rows": m.shape[0],
        "cols": m.shape[1],
        "re": m.real.ravel().tolist(),
        "im": m.imag.ravel().tolist(),
    }


def matrix_from_dict(d: dict) -> np.ndarray:
    rows, cols = int(d["rows"]), int(d["cols"])
    re = np.asarray(d["re"], dtype=float)
    im = np.asarray(d["im"], dtype=float)
    if re.size != rows * cols or im.size != rows * cols:
        raise ValueError("re/im length does not match rows*cols")
    return as_complex_matrix((re + 1j * im).reshape(rows, cols))


def density_to_dict(rho: DensityMatrix) -> dict:
    d = matrix_to_dict(rho.matrix)
    d["dim_a"] = rho.dim_a
    d["dim_b"] = rho.dim_b
    return d


def density_from_dict(d: dict) -> DensityMatrix:
    m = matrix_from_dict(d)
    if "dim_a" in d and "dim_b" in d:
        da, db = int(d["dim_a"]), int(d["dim_b"])
    else:
        root = round(m.shape[0] ** 0.5)
        if root * root != m.shape[0]:
            raise ValueError(
                "file does not specify dim_a/dim_b and the dimension is not "
                "a perfect square"
            )
        da = db = root
    return DensityMatrix(m, da, db)
