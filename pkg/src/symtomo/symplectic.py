"""Sp(2, R): real 2x2 matrices of unit determinant and their action on tomograms.

A matrix ``[[a, b], [c, d]]`` represents the linear canonical transform
``q -> a q + b p``, ``p -> c q + d p``. Substituting it into
``X - mu q - nu p`` shows that the tomogram of the transformed state is
the old tomogram with relabelled frame parameters::

    w'(X, mu, nu) = w(X, a mu + c nu, b mu + d nu)

i.e. the row vector ``(mu, nu)`` is multiplied by the matrix from the left.
Consequently ``apply_canonical(apply_canonical(w, m1), m2)`` equals
``apply_canonical(w, compose(m2, m1))``.
"""

from dataclasses import dataclass

import numpy as np

from .core import DomainError, Tomogram

DET_TOL = 1e-12


@dataclass(frozen=True)
class SymplecticMatrix:
    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, float(getattr(self, name)))
        # Rounding in the determinant grows with the size of the entries.
        scale = max(1.0, self.a ** 2 + self.b ** 2 + self.c ** 2 + self.d ** 2)
        if abs(self.det - 1.0) > DET_TOL * scale:
            raise ValueError(f"determinant {self.det!r} is not 1; not in Sp(2,R)")

    @property
    def det(self) -> float:
        return self.a * self.d - self.b * self.c

    def as_array(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]])

    @classmethod
    def from_array(cls, m) -> "SymplecticMatrix":
        m = np.asarray(m, float)
        if m.shape != (2, 2):
            raise ValueError("expected a 2x2 matrix")
        return cls(m[0, 0], m[0, 1], m[1, 0], m[1, 1])

    def __matmul__(self, other: "SymplecticMatrix") -> "SymplecticMatrix":
        return compose(self, other)

    def allclose(self, other: "SymplecticMatrix", atol: float = 1e-12) -> bool:
        return bool(np.allclose(self.as_array(), other.as_array(), rtol=0, atol=atol))


IDENTITY = SymplecticMatrix(1.0, 0.0, 0.0, 1.0)


def frame_matrix(s: float, theta: float) -> SymplecticMatrix:
    """Rotation by ``theta`` after scaling by ``s``.

    The first row ``(s cos theta, sin theta / s)`` is the ``(mu, nu)`` frame
    of a reference system scaled by ``s`` and rotated by ``theta``.
    """
    if not s > 0:
        raise DomainError(f"scaling parameter must be positive, got s={s}")
    c, sn = np.cos(theta), np.sin(theta)
    return SymplecticMatrix(s * c, sn / s, -s * sn, c / s)


def rotation(theta: float) -> SymplecticMatrix:
    return frame_matrix(1.0, theta)


def scaling(s: float) -> SymplecticMatrix:
    return frame_matrix(s, 0.0)


def compose(lhs: SymplecticMatrix, rhs: SymplecticMatrix) -> SymplecticMatrix:
    """Matrix product ``lhs @ rhs``."""
    if not (isinstance(lhs, SymplecticMatrix) and isinstance(rhs, SymplecticMatrix)):
        raise TypeError("compose expects two SymplecticMatrix values")
    return SymplecticMatrix(lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
                            lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d)


def inverse(m: SymplecticMatrix) -> SymplecticMatrix:
    return SymplecticMatrix(m.d, -m.b, -m.c, m.a)


def apply_canonical(tomogram: Tomogram, m: SymplecticMatrix) -> Tomogram:
    """Tomogram of the state after the canonical transform ``m``."""
    a, b, c, d = m.a, m.b, m.c, m.d
    return tomogram.relabel(lambda mu, nu: (a * mu + c * nu, b * mu + d * nu),
                            f"{tomogram.name} | Sp({a:.6g},{b:.6g},{c:.6g},{d:.6g})")
