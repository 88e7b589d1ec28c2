"""Exception types shared across the simulator."""


class LumenscanError(Exception):
    """Base class for all simulator errors."""


class CapacityError(LumenscanError):
    """World spec asks for more occupied cells than the lattice holds."""


class LatticeBoundsError(LumenscanError, IndexError):
    """Coordinate outside the lattice."""


class ScaleError(LumenscanError):
    """Trait vector is on the wrong measurement scale."""


class ArityError(LumenscanError):
    """Trait vector lengths do not line up (or a vector is empty)."""


class ProtocolViolation(LumenscanError):
    """An operation was invoked out of protocol order (re-measure, double
    dispense, verdict for a never-emitted cell, ...)."""


class ConfigError(LumenscanError):
    """Scenario config file is missing, malformed or inconsistent."""

    def __init__(self, message, section=None, key=None):
        self.section = section
        self.key = key
        where = ""
        if section is not None and key is not None:
            where = f" [{section}] key '{key}':"
        elif section is not None:
            where = f" [{section}]:"
        super().__init__(f"config error:{where} {message}")
