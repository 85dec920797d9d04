"""Exception types shared across the package.

Plain invalid arguments (bad shapes, out-of-range parameters, infeasible
constraint triples) raise the built-in ``ValueError``; the classes below
cover failures that carry extra structure.
"""


class StepFailureError(RuntimeError):
    """A time step could not be completed (singular matrix, Newton stall).

    Carries the index of the time node at which the march failed.
    """

    def __init__(self, time_index: int, message: str):
        super().__init__(f"step {time_index}: {message}")
        self.time_index = time_index


class DivergenceError(RuntimeError):
    """The state blew past the runaway guard during a forward solve."""

    def __init__(self, time_index: int, sup_norm: float):
        super().__init__(
            f"solution diverged at step {time_index}: sup-norm {sup_norm:.3e}"
        )
        self.time_index = time_index
        self.sup_norm = sup_norm


class InfeasibleConstructionError(ValueError):
    """A supported oscillating datum cannot be built: too few admitted modes."""

    def __init__(self, admitted: int, needed: int, message: str = ""):
        detail = message or (
            f"need more than {needed} admitted modes to satisfy the support "
            f"constraints, got {admitted}"
        )
        super().__init__(detail)
        self.admitted = admitted
        self.needed = needed


class DegenerateWindowError(ValueError):
    """A time-localised perturbation window contains no usable slice."""


class ConfigError(ValueError):
    """A run configuration file failed to parse or validate."""

    def __init__(self, message: str, line: int | None = None, key: str | None = None):
        prefix = ""
        if line is not None:
            prefix = f"line {line}: "
        elif key is not None:
            prefix = f"key '{key}': "
        super().__init__(prefix + message)
        self.line = line
        self.key = key
