"""Binary quadratic forms, proper representation counts, and families of
slopes p/q sharing a common value of p^2 + 12q^2."""
from .arith import Factorization, factorize, gcd, is_prime, legendre, mod_pow, primes_in_progression
from .errors import (
    CertificateFailure,
    FormSlopesError,
    HypothesisViolated,
    InvalidInput,
    PreconditionViolated,
)
from .family import (
    SlopeFamily,
    SurfaceInvariant,
    certify_family,
    construct_N,
    find_family,
    surface_invariants,
)
from .forms import (
    BQF,
    UnimodularChange,
    apply_change,
    discriminant,
    enumerate_reduced,
    is_primitive,
    is_reduced,
    properly_equivalent,
    reduce,
)
from .reps import (
    RepresentationSet,
    count_by_3_4_form,
    count_N_representations,
    enumerate_representations,
    gauss_count,
)
from .slopes import Slope, distance, is_admissible, make_slope

__version__ = "0.1.0"
