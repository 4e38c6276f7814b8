"""Error types shared across the package."""


class CapacityError(Exception):
    """A requested table, divisor list, or scan exceeds a configured cap."""
