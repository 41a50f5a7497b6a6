"""Numerical tolerances shared by every approximate computation."""

from __future__ import annotations

from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class ToleranceConfig:
    """Grid sizes and tolerances.

    Attributes:
        theta_grid: Number of uniform angle samples in a support-function sweep.
        refine_tol: Target bracket width (radians) for golden-section refinement.
        eig_tol: Relative off-diagonal target for Jacobi sweeps; also the
            relative clamping window for slightly negative PSD eigenvalues.
        sphere_restarts: Random restarts for unit-sphere searches.
        sphere_tol: Relative stopping tolerance of unit-sphere searches.
        ineq_tol: Slack tolerance when deciding whether an inequality holds.
    """

    theta_grid: int = 360
    refine_tol: float = 1e-10
    eig_tol: float = 1e-12
    sphere_restarts: int = 32
    sphere_tol: float = 1e-9
    ineq_tol: float = 1e-6

    def __post_init__(self) -> None:
        for f in fields(self):
            if not getattr(self, f.name) > 0:
                raise ValueError(f"{f.name} must be positive, got {getattr(self, f.name)!r}")
        if self.theta_grid < 8:
            raise ValueError(f"theta_grid must be at least 8, got {self.theta_grid}")
        if int(self.theta_grid) != self.theta_grid or int(self.sphere_restarts) != self.sphere_restarts:
            raise ValueError("theta_grid and sphere_restarts must be integers")

    def scaled(self, factor: int) -> ToleranceConfig:
        """Return a copy with the angle grid and restart count multiplied by `factor`."""
        return replace(
            self,
            theta_grid=self.theta_grid * factor,
            sphere_restarts=self.sphere_restarts * factor,
        )


DEFAULT_CONFIG = ToleranceConfig()
