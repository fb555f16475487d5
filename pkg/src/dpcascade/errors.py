"""Exception types. Each names the precondition it guards."""


class DpCascadeError(Exception):
    """Base class; ``module`` names where the failure happened."""

    module = "dpcascade"


class DegenerateInput(DpCascadeError):
    module = "polygon_core"


class NotFano(DpCascadeError):
    module = "polygon_core"


class DependentRays(DpCascadeError):
    module = "polygon_core"


class OriginNotInterior(DpCascadeError):
    module = "polygon_core"


class NotNef(DpCascadeError):
    module = "scaffolding"


class InvalidScaffolding(DpCascadeError):
    module = "scaffolding"


class NoSuchDivisor(DpCascadeError):
    module = "scaffolding"


class DegreeNonPositive(DpCascadeError):
    module = "hilbert"


class LinearCone(DpCascadeError):
    module = "quasismooth"


class DegenerateLattice(DpCascadeError):
    module = "rootsys"


class UnrecognizedDiagram(DpCascadeError):
    module = "rootsys"


class InternalMismatch(DpCascadeError):
    module = "rootsys"


class InvalidMove(DpCascadeError):
    module = "mutation_mirror"


class OutOfRange(DpCascadeError):
    module = "catalog"


class UnknownId(DpCascadeError):
    module = "catalog"
