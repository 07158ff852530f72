"""Exception types raised by cavityrad."""


class ThresholdSingularityError(ValueError):
    """Pointwise rod density requested too close to a transverse mode threshold.

    The density diverges as an inverse square root at each threshold; the
    offending mode is recorded so callers can report or skip the point.
    """

    def __init__(self, omega, n1, n2, k_perp):
        self.omega = omega
        self.mode = (n1, n2)
        self.k_perp = k_perp
        super().__init__(
            "rod density is singular at omega=%.17g: transverse mode "
            "(n1=%d, n2=%d) has threshold k_perp=%.17g within the guard window"
            % (omega, n1, n2, k_perp)
        )


class ResourceLimitError(RuntimeError):
    """Mode enumeration would exceed the configured lattice-point cap."""

    def __init__(self, required, cap):
        self.required = int(required)
        self.cap = int(cap)
        super().__init__(
            "enumeration requires %d lattice points, exceeding the cap of %d"
            % (self.required, self.cap)
        )


class QuadratureError(RuntimeError):
    """Composite quadrature failed to converge; carries the last two estimates."""

    def __init__(self, last, previous):
        self.last = last
        self.previous = previous
        super().__init__(
            "quadrature did not converge: last two estimates %.17g, %.17g"
            % (previous, last)
        )
