"""Exception types shared across the simulator."""


class ConfigError(ValueError):
    """Invalid scenario configuration, config file, or sweep specification."""


class NumericError(ArithmeticError):
    """A matrix-rate computation produced a value outside its numeric contract
    (non-finite determinant, determinant with a non-negligible imaginary part,
    or a nonpositive argument to a log-determinant)."""
