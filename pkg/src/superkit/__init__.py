"""superkit: exact Grassmann/Clifford algebra on the 16-dimensional module W,
equivariant momentum-space symbols on the mass orbit, the super Fourier
transform, and the Wess-Zumino component system, with machine-checkable
identity suites for everything.
"""

__version__ = "0.1.0"
