"""Eigen-decomposition of the Zhang-Liu family and the diagonalizability test.

For x outside {1, -1} the matrix q_matrix(y, x, n) is similar to the
diagonal d_matrix(x^2, n) via the unit upper-triangular p1_matrix(z, n)
with z = y*x / (x^2 - 1); the inverse of p1_matrix(z, n) is
p1_matrix(-z, n).  ``factorize_q`` constructs that triple,
``eigenpairs`` reads off the eigenvalues (x^2)^(j-1) with the columns of
p1_matrix(z, n) as eigenvectors, and ``is_diagonalizable`` implements the
closed-form criterion (x^2 != 1 or y = 0) that ``diagonalizable_oracle``
double-checks by rank computations.

The two-sided test x^2 != 1 is used instead of comparing x against 1 and
-1 separately; in characteristic 2 the pair collapses to the single value
1 and the squared test handles that automatically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotTriangular, SingularParameter, ZeroParameter
from .fields import FieldElement
from .matrices import SquareMatrix, d_matrix, p1_matrix, q_matrix


def _require_n_at_least_2(n: int) -> None:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")


def z_parameter(y: FieldElement, x: FieldElement) -> FieldElement:
    """The similarity parameter y*x / (x^2 - 1); requires x != 0, x^2 != 1."""
    if x.is_zero():
        raise ZeroParameter("x must be nonzero")
    one = x.field.one()
    x2 = x * x
    if x2 == one:
        raise SingularParameter("x^2 = 1: y*x/(x^2 - 1) does not exist")
    return y * x * (x2 - one).inv()


@dataclass(frozen=True)
class Decomposition:
    """The similarity triple left * middle * right for q_matrix(y, x, n).

    left = p1_matrix(z, n), middle = d_matrix(x^2, n),
    right = p1_matrix(-z, n) = left^-1.
    """

    z: FieldElement
    left: SquareMatrix
    middle: SquareMatrix
    right: SquareMatrix
    source_y: FieldElement
    source_x: FieldElement
    n: int

    def to_json(self) -> dict:
        return {
            "field": self.z.field.spec(),
            "n": self.n,
            "y": str(self.source_y),
            "x": str(self.source_x),
            "z": str(self.z),
            "left": [[str(e) for e in row] for row in self.left.rows],
            "middle": [[str(e) for e in row] for row in self.middle.rows],
            "right": [[str(e) for e in row] for row in self.right.rows],
            "verified": verify_factorization(self),
        }


def factorize_q(y: FieldElement, x: FieldElement, n: int) -> Decomposition:
    """Eigen-decomposition of q_matrix(y, x, n); requires x^2 != 1, n >= 2."""
    _require_n_at_least_2(n)
    z = z_parameter(y, x)
    return Decomposition(
        z=z,
        left=p1_matrix(z, n),
        middle=d_matrix(x * x, n),
        right=p1_matrix(-z, n),
        source_y=y,
        source_x=x,
        n=n,
    )


def verify_factorization(d: Decomposition) -> bool:
    """True iff left*middle*right recomposes the source matrix exactly and
    left*right is the identity.  False signals an implementation bug."""
    if not (d.left @ d.right).is_identity():
        return False
    return d.left @ d.middle @ d.right == q_matrix(d.source_y, d.source_x, d.n)


def eigenpairs(
    y: FieldElement, x: FieldElement, n: int
) -> list[tuple[FieldElement, tuple[FieldElement, ...]]]:
    """The n exact eigenpairs of q_matrix(y, x, n) for x^2 != 1.

    Pair j (1-based) is ((x^2)^(j-1), column j of p1_matrix(z, n)).
    Eigenvalues repeat when the order of x^2 is below n; the vectors are
    columns of a unit upper-triangular matrix, hence always independent.
    """
    _require_n_at_least_2(n)
    z = z_parameter(y, x)
    vectors = p1_matrix(z, n)
    lam = x.field.one()
    x2 = x * x
    out = []
    for j in range(n):
        out.append((lam, vectors.column(j)))
        lam = lam * x2
    return out


def is_diagonalizable(y: FieldElement, x: FieldElement, n: int) -> bool:
    """Closed-form criterion: x^2 != 1 or y = 0.  No matrix is built."""
    if x.is_zero():
        raise ZeroParameter("x must be nonzero")
    _require_n_at_least_2(n)
    return x * x != x.field.one() or y.is_zero()


def diagonalizable_oracle(m: SquareMatrix) -> bool:
    """Rank-based diagonalizability check for an upper-triangular matrix.

    The eigenvalues are the diagonal entries; the matrix is diagonalizable
    iff the geometric multiplicities n - rank(M - lambda*I) summed over the
    distinct diagonal values reach n.
    """
    if not m.is_upper_triangular():
        raise NotTriangular("oracle requires an upper-triangular matrix")
    total = 0
    for lam in dict.fromkeys(m.diagonal()):
        shifted = SquareMatrix(
            m.field,
            [[m.rows[i][j] - lam if i == j else m.rows[i][j] for j in range(m.n)] for i in range(m.n)],
        )
        total += m.n - shifted.rank()
    return total == m.n
