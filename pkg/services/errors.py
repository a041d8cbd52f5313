"""
Typed errors raised by the spectrum services and the config loader.

All of them derive from ValueError so callers that only care about
"bad input" can keep catching that.
"""
from typing import Optional


class SpectrumError(ValueError):
    """Base class for failures of the closed-form and numerical routines."""


class NegativeRadicand(SpectrumError):
    """A square root of a negative NU constant was requested."""

    def __init__(self, name: str, value: float):
        self.name = name
        self.value = value
        super().__init__(f"{name} = {value!r} < 0: no real bound-state branch")


class DegenerateC3(SpectrumError):
    """c3 = 0 (Laguerre limit) is not supported by the Jacobi factors."""

    def __init__(self):
        super().__init__("c3 = 0: the Laguerre limit is not supported")


class NonPositiveRadius(SpectrumError):
    """A radial function was evaluated at r <= 0."""

    def __init__(self, r_min: float):
        self.r_min = r_min
        super().__init__(f"radius must be > 0 (got {r_min!r})")


class ComplexV(SpectrumError):
    """phi < -1/4, so v = sqrt(1 + 4 phi) is imaginary."""

    def __init__(self, phi: float):
        self.phi = phi
        super().__init__(f"phi = {phi!r} < -1/4: v is imaginary, no real NU solution")


class DegenerateState(SpectrumError):
    """The decay exponent vanishes and the state is not normalizable."""

    def __init__(self, n: int, l: int, D: int):
        self.n, self.l, self.D = n, l, D
        super().__init__(f"state (n={n}, l={l}, D={D}) has zero decay exponent: not normalizable")


class ParameterOutOfDomain(SpectrumError):
    """Jacobi parameters must both exceed -1."""

    def __init__(self, name: str, value: float):
        self.name = name
        self.value = value
        super().__init__(f"Jacobi parameter {name} = {value!r} must be > -1")


class QuadratureFailure(SpectrumError):
    """Adaptive quadrature did not reach the requested tolerance."""

    def __init__(self, value: float, abserr: float, tolerance: float):
        self.value = value
        self.abserr = abserr
        self.tolerance = tolerance
        super().__init__(
            f"quadrature error estimate {abserr:.3e} exceeds tolerance {tolerance:.3e} (integral {value:.6e})"
        )


# ============== Config errors ==============

class ConfigError(ValueError):
    """Invalid run configuration."""

    def __init__(self, message: str, key: Optional[str] = None, line: Optional[int] = None):
        self.key = key
        self.line = line
        where = f" (line {line})" if line else ""
        super().__init__(f"{message}{where}")


class ConfigParseError(ConfigError):
    def __init__(self, message: str, line: int, column: int):
        self.column = column
        super().__init__(f"cannot parse config: {message}, column {column}", line=line)


class UnknownKey(ConfigError):
    def __init__(self, key: str, line: Optional[int] = None):
        super().__init__(f"unknown key '{key}'", key=key, line=line)


class InvalidValue(ConfigError):
    def __init__(self, key: str, reason: str, line: Optional[int] = None):
        self.reason = reason
        super().__init__(f"invalid value for '{key}': {reason}", key=key, line=line)
