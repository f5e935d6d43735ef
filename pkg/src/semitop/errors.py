"""Exception types shared across the package."""


class StructureError(ValueError):
    """Malformed tables: wrong shape, out-of-range index, unknown label."""


class AxiomError(ValueError):
    """A structure failed one of its axioms; carries the validation report."""

    def __init__(self, report):
        self.report = report
        super().__init__(str(report))


class CapExceeded(RuntimeError):
    """A size guard refused the computation instead of truncating it."""


class ContractionError(ValueError):
    """Preimage of a distinguished point left the distinguished class."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)
