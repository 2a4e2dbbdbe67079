"""Exact computations in the convolution algebra of the double flag variety
and the based ring of the lowest two-sided cell of an extended affine Weyl
group."""

__version__ = "0.1.0"

from .root_datum import RootDatum, Weight, load_datum, standard_datum  # noqa: E402
from .group_algebra import LaurentPoly  # noqa: E402

__all__ = ["RootDatum", "Weight", "LaurentPoly", "load_datum", "standard_datum", "__version__"]
