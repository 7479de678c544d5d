"""Exception types raised by the library."""


class MMatrixError(Exception):
    """Base class for all library errors."""


class InadmissibleOrder(MMatrixError, ValueError):
    """Order does not satisfy the primality requirement of its matrix type."""


class IndexOutOfRange(MMatrixError, IndexError):
    pass


class WrongType(MMatrixError, ValueError):
    pass


class WrongConvention(MMatrixError, ValueError):
    pass


class DegenerateDesign(MMatrixError, ValueError):
    """The extracted incidence matrix is too small to form a design."""


class OrderTooLarge(MMatrixError, ValueError):
    pass
