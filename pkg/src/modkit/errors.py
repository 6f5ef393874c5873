"""Exception hierarchy. CLI maps ``ModkitError`` subclasses to exit code 1."""


class ModkitError(Exception):
    pass


class ValidationError(ModkitError):
    pass


class ShapeError(ValidationError):
    pass


class NotSymmetric(ValidationError):
    pass


class NotPseudoUnitary(ValidationError):
    pass


class DualityFailure(ValidationError):
    pass


class VerlindeNonInteger(ValidationError):
    pass


class VerlindeNegative(ValidationError):
    pass


class TwistNotRootOfUnity(ValidationError):
    pass


class FusionAxiomFailure(ValidationError):
    pass


class NonConvergence(ModkitError):
    pass


class MismatchWithSDims(ValidationError):
    pass


class ModReductionOnNonInteger(ModkitError):
    pass


class NonGroupFusion(ModkitError):
    pass


class GradingInconsistent(ModkitError):
    pass


class TwistNotPlusMinusOneOnSymmetric(ModkitError):
    pass


class NotModularSubcat(ModkitError):
    pass


class PairingNotBijective(ModkitError):
    pass


class NoOrderTwoInvertible(ModkitError):
    pass


class DegenerateForm(ModkitError):
    pass


class IllDefinedForm(ModkitError):
    pass
