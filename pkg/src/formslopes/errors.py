"""Exception hierarchy.

Every error raised by the library derives from :class:`FormSlopesError` and
belongs to one of three families, which the CLI maps onto exit codes:

* :class:`InvalidInput` -- malformed or out-of-domain arguments (exit 1)
* :class:`PreconditionViolated` -- well-formed input that fails a theorem's
  hypotheses (exit 2)
* :class:`CertificateFailure` -- a computed certificate did not verify (exit 3)
"""


class FormSlopesError(ValueError):
    pass


class InvalidInput(FormSlopesError):
    pass


class PreconditionViolated(FormSlopesError):
    pass


class CertificateFailure(FormSlopesError):
    def __init__(self, clause, message, witnesses=None):
        super().__init__(f"clause ({clause}): {message}")
        self.clause = clause
        self.witnesses = witnesses or {}


class OutOfRange(InvalidInput):
    """Primality cannot be decided exactly for this input."""


class InvalidModulus(InvalidInput):
    pass


class InvalidDiscriminant(InvalidInput):
    pass


class NotPositiveDefinite(InvalidInput):
    pass


class BadDeterminant(InvalidInput):
    pass


class ZeroPair(InvalidInput):
    pass


class NotPrimitive(PreconditionViolated):
    pass


class NotCoprime(PreconditionViolated):
    pass


class HypothesisViolated(PreconditionViolated):
    pass
