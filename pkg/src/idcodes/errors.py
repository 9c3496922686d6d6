"""Exception hierarchy shared by all idcodes modules."""


class IdcodesError(Exception):
    """Base class for every error raised by this package."""


# -- finite fields ------------------------------------------------------------

class NotPrime(IdcodesError):
    pass


class DegreeTooLarge(IdcodesError):
    pass


class NoIrreducibleFound(IdcodesError):
    pass


class SpecMismatch(IdcodesError):
    """Operands belong to different field specs."""


class DivisionByZero(IdcodesError):
    pass


class EvenCharacteristic(IdcodesError):
    """Squareness test requires odd field order."""


class OddCharacteristic(IdcodesError):
    """Hyperconic requires characteristic 2."""


class OrderMismatch(IdcodesError):
    """Conjugation x -> x^q needs a field of order q^2."""


# -- geometry -----------------------------------------------------------------

class SizeGuard(IdcodesError):
    """Requested object exceeds the supported size limits."""


class EqualPoints(IdcodesError):
    pass


class NotOnVariety(IdcodesError):
    pass


# -- graphs -------------------------------------------------------------------

class BadVertex(IdcodesError):
    pass


class Disconnected(IdcodesError):
    pass


class BadParams(IdcodesError):
    pass


class Eq1Violated(IdcodesError):
    """Strongly regular parameters violate (n-k-1)*mu = k*(k-lambda-1)."""


# -- codes / solving ----------------------------------------------------------

class TwinsPresent(IdcodesError):
    """Graph has twin vertices; no identifying code exists."""


class PropertyViolated(IdcodesError):
    """Starting set does not satisfy the property it should be pruned under."""


class Infeasible(IdcodesError):
    pass


class BudgetExceeded(IdcodesError):
    """Search or LP exceeded its node/size budget."""


class NotRegular(IdcodesError):
    pass


class NotClaimedTransitive(IdcodesError):
    """Closed-form fractional value needs the vertex-transitivity claim."""


class ConstructionFailed(IdcodesError):
    """A geometric selection step found no valid candidate."""
