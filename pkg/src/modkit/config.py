import os

DEFAULT_TOLERANCE = 1e-9


def tolerance() -> float:
    """Float guard for positivity and convergence checks; never used for exact equality."""
    raw = os.environ.get("MODKIT_TOLERANCE")
    return float(raw) if raw else DEFAULT_TOLERANCE
