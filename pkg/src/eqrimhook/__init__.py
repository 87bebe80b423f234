"""Equivariant quantum cohomology of Grassmannians via the rim hook rule."""
