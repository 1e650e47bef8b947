"""Exception hierarchy. Every domain error derives from :class:`OrbitFlopsError`."""


class OrbitFlopsError(ValueError):
    """Base class for domain errors (CLI exit status 1)."""


class ParseError(OrbitFlopsError):
    """Malformed diagram, partition or family text."""


class NoDualError(OrbitFlopsError):
    """The component has no nontrivial diagram automorphism."""


class TableMissError(OrbitFlopsError, LookupError):
    """Requested data is outside the embedded tables."""
