"""Width, Kirby, trisection and bridge-trisection bookkeeping for smooth 4-manifolds."""
__version__ = "0.1.0"
