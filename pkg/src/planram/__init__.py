"""planram: enumeration and verification for C4-free planar graphs.

The package enumerates C4-free planar graphs and minimum-degree-5
triangulations up to isomorphism, builds large-order witnesses by rotation
surgery on a small library of seed embeddings, and emits machine-readable
certificates for planar Ramsey numbers of the 4-cycle versus wheels.
"""

__version__ = "0.1.0"

from .graphs import Graph
from .planarity import PlaneEmbedding, embed, is_planar

__all__ = ["Graph", "PlaneEmbedding", "embed", "is_planar", "__version__"]
