from .hodge import Hodge, Euler
from .toric import ToricVerifier
from .invariants import InvariantChecker
from .report import Report, emit
