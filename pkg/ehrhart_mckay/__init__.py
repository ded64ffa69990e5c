# Exact lattice-point counts of root-lattice Chern-Simons states, by polytope
# enumeration, Omega elimination and McKay-dual representation counting.
__version__ = "0.1.0"
