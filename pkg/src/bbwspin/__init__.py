"""Cohomology of equivariant bundles on (orthogonal) Grassmannians."""
