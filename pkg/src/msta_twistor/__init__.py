"""Two-particle space-time algebra: twistors, conformal points and cosmological spaces."""

__version__ = "0.1.0"
