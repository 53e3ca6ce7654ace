"""Exception types shared across the package."""


class PeslabError(Exception):
    """Base class for all package-specific errors."""


class MeanNotFree(PeslabError):
    """A field expected to be vertically mean-free is not.

    Usually means the caller passed the full velocity v where the
    fluctuation v - vbar was required.
    """

    def __init__(self, residual: float, scale: float, where: str = ""):
        self.residual = residual
        self.scale = scale
        msg = f"vertical mean residual {residual:.3e} exceeds tolerance (scale {scale:.3e})"
        if where:
            msg = f"{where}: {msg}"
        super().__init__(msg)


class IncompatibleRhs(PeslabError):
    """Poisson right-hand side has a nonzero horizontal mean.

    Signals a broken divergence structure upstream of the pressure solve.
    """

    def __init__(self, mean: float, scale: float):
        self.mean = mean
        self.scale = scale
        super().__init__(
            f"Poisson rhs mean {mean:.3e} too large relative to norm {scale:.3e}"
        )


class CflViolation(PeslabError):
    """Requested time step exceeds the advective stability limit."""

    def __init__(self, dt: float, dt_limit: float):
        self.dt = dt
        self.dt_limit = dt_limit
        super().__init__(f"dt = {dt:.3e} exceeds advective limit {dt_limit:.3e}")


class BlowupDetected(PeslabError):
    """Surrogate norm crossed the configured blow-up threshold."""

    def __init__(self, t: float, norm: float, threshold: float):
        self.t = t
        self.norm = norm
        self.threshold = threshold
        super().__init__(
            f"surrogate norm {norm:.3e} exceeded threshold {threshold:.3e} at t = {t:.6g}"
        )


class NoContraction(PeslabError):
    """Picard iteration failed to contract; the time horizon is too large."""

    def __init__(self, iterations: int, increments):
        self.iterations = iterations
        self.increments = list(increments)
        super().__init__(
            f"no contraction after {iterations} iterations; "
            f"last increments {self.increments[-5:]}; halve the horizon T"
        )


class SingularStep(PeslabError):
    """Implicit midpoint linear solve was singular (corrupt input)."""


class RayleighViolated(PeslabError):
    """The Rayleigh band check failed somewhere on the grid."""

    def __init__(self, ratio_min: float, ratio_max: float, locus=None):
        self.ratio_min = ratio_min
        self.ratio_max = ratio_max
        self.locus = locus
        super().__init__(
            f"Rayleigh condition violated: 1/|dz f| spans [{ratio_min:.3e}, {ratio_max:.3e}]"
            + (f" (locus {locus})" if locus is not None else "")
        )


class DegenerateRhs(PeslabError):
    """Inequality checker hit RHS = 0 with LHS != 0; implementation defect."""


class NeumannDrift(PeslabError):
    """Neumann residual assertion failed while neumann_test_mode was on."""

    def __init__(self, t: float, residual: float, allowed: float):
        self.t = t
        self.residual = residual
        self.allowed = allowed
        super().__init__(
            f"Neumann residual {residual:.3e} exceeded allowance {allowed:.3e} at t = {t:.6g}"
        )


class ConfigIssue:
    """One parse or validation problem; kind is 'parse' or 'validation'."""

    def __init__(self, kind: str, message: str, line: int | None = None, field: str | None = None):
        self.kind = kind
        self.message = message
        self.line = line
        self.field = field

    def __str__(self):
        loc = []
        if self.line is not None:
            loc.append(f"line {self.line}")
        if self.field:
            loc.append(f"field '{self.field}'")
        prefix = f"[{self.kind}" + (": " + ", ".join(loc) if loc else "") + "] "
        return prefix + self.message

    def __repr__(self):
        return f"ConfigIssue({self!s})"


class ConfigError(PeslabError):
    """Aggregate of every parse/validation issue found in a config."""

    def __init__(self, issues):
        self.issues = list(issues)
        super().__init__("\n".join(str(i) for i in self.issues))


class FormatError(PeslabError):
    """Snapshot file is corrupt or has an unsupported version."""
