from dataclasses import dataclass




@dataclass(frozen=True)
class Verdict:
    passed: bool
    witness: object = None
    message: str = ''

    def __bool__(self):
        return self.passed




class KummerError(Exception):
    exit_code = 1



class UsageError(KummerError):
    exit_code = 1



class ParseError(KummerError):
    exit_code = 2

    def __init__(self, message, location=None):
        if location is not None:
            message = f"{location}: {message}"
        super(ParseError, self).__init__(message)
        self.location = location



class VerificationError(KummerError):
    exit_code = 3



class BudgetExceeded(KummerError):
    exit_code = 4

    def __init__(self, what, size, limit):
        super(BudgetExceeded, self).__init__(
            f"{what} of size {size} exceeds the enumeration budget {limit}"
        )
        self.size = size
        self.limit = limit



class NonIntegerExponentError(VerificationError, ValueError):
    pass



class HodgeInvariantError(VerificationError):

    def __init__(self, p, q, reason):
        super(HodgeInvariantError, self).__init__(f"h^{{{p},{q}}}: {reason}")
        self.p = p
        self.q = q



class ChartError(VerificationError):
    pass



class LatticeError(VerificationError):
    pass
