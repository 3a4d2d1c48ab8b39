"""
loglambert
==========

The logarithmic Lambert function ``W_L``, the inverse of
``y -> y ln(By) e^y``, on all of its real branches, together with the
three-parameter entropy thermostatics of a classical ideal gas whose heat
functions are expressed through ``W_L``.

Modules
-------
special        principal-branch Lambert W, exponential integral Ei, log-gamma
core           branch points, evaluation, derivative, antiderivative, series,
               large-x asymptotics
thermostatics  deformed logarithms, entropies, the four adiabatic ensembles
cli            ``python -m loglambert`` CSV front end
"""
from .core import (BranchId, EvalDiagnostics, LogLambertContext, antiderivative,
                   asymptotic_approx, branch_points, derivative, evaluate, forward,
                   taylor_coefficients, taylor_eval)
from .errors import (ConvergenceError, DomainError, LogLambertError, NonPhysicalRegionError,
                     NumericalOverflowError, SingularityError, UncoveredRegionError)
from .special import SolverOptions, exp_integral_ei, lambert_w0, log_gamma

__version__ = "0.1.0"
