"""
Verification harness: theorem certificates, golden grid, Puiseux oracle, orbit probe
"""

from .theorem import TheoremCertificate, Summary, certify_point, n_u_pair, verify_theorem
from .golden import sl2_golden
from .oracle import puiseux_oracle_n_u
from .sampling import orbit_probe

__all__ = [
    "TheoremCertificate", "Summary", "certify_point", "n_u_pair", "verify_theorem",
    "sl2_golden", "puiseux_oracle_n_u", "orbit_probe",
]
