"""Exception hierarchy shared by every module of the package."""


class AlgebraError(Exception):
    """Base class for all errors raised by nakayama."""


# fields
class NotPrime(AlgebraError):
    pass


class ReducibleModulus(AlgebraError):
    pass


class ReducibleModulusUnknown(ReducibleModulus):
    """Irreducibility of the modulus could not be decided."""


class UnsupportedTower(AlgebraError):
    pass


class FieldDivisionByZero(AlgebraError, ZeroDivisionError):
    pass


class FieldMismatch(AlgebraError):
    pass


class NotExtensionField(AlgebraError):
    pass


# linalg
class Inconsistent(AlgebraError):
    pass


class AmbientMismatch(AlgebraError):
    pass


class NotDisjoint(AlgebraError):
    pass


class AlreadyContains(AlgebraError):
    pass


class FieldTooSmall(AlgebraError):
    pass


class SizeMismatch(AlgebraError):
    pass


# algebra_core / structure
class NotAssociative(AlgebraError):
    def __init__(self, i, j, k):
        super().__init__(f"(e{i} e{j}) e{k} != e{i} (e{j} e{k})")
        self.triple = (i, j, k)


class IdentityInvalid(AlgebraError):
    pass


class NotAutomorphism(AlgebraError):
    pass


class Inconclusive(AlgebraError):
    pass


class CharTooSmall(AlgebraError):
    pass


# frobenius / modrep
class DegenerateForm(AlgebraError):
    pass


class NotUnit(AlgebraError):
    pass


class NotSubmodule(AlgebraError):
    pass


# scalars
class SimplesInvalid(AlgebraError):
    pass


class ZeroTraceMap(AlgebraError):
    pass


class DegenerateWitness(AlgebraError):
    pass


class TheoremViolation(AlgebraError):
    """A proved statement failed; always an implementation bug."""


# cli
class BadParams(AlgebraError):
    pass


class NotAGroup(AlgebraError):
    pass


class SchemaError(AlgebraError):
    pass


class SingularMatrix(AlgebraError):
    pass
