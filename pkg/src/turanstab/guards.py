"""Size guards for the exponential searches.

Every guard can be overridden through an environment variable; overrides are
read at call time so tests and the CLI can adjust them without re-importing.

=============================  =======  =================================
variable                       default  meaning
=============================  =======  =================================
``TURANSTAB_HOM_GUARD``        20       max vertices of a homomorphism
                                        pattern / chromatic number input
``TURANSTAB_ORACLE_GUARD``     (none)   max n for the exhaustive oracles;
                                        when unset: 14 for p <= 3, else 12
``TURANSTAB_CLIQUE_GUARD``     2000     max n for the K_{p+1} precondition
                                        check and the clique breaker
=============================  =======  =================================
"""

import os

from .errors import CapabilityError

HOM_PATTERN_MAX = 20
ORACLE_MAX_N_SMALL_P = 14
ORACLE_MAX_N_LARGE_P = 12
CLIQUE_CHECK_MAX_N = 2000


def _env_int(name):
    raw = os.environ.get(name, "").strip()
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        raise CapabilityError(f"{name} must be an integer, got {raw!r}") from None


def hom_pattern_max():
    value = _env_int("TURANSTAB_HOM_GUARD")
    return HOM_PATTERN_MAX if value is None else value


def oracle_max_n(p):
    value = _env_int("TURANSTAB_ORACLE_GUARD")
    if value is not None:
        return value
    return ORACLE_MAX_N_SMALL_P if p <= 3 else ORACLE_MAX_N_LARGE_P


def clique_check_max_n():
    value = _env_int("TURANSTAB_CLIQUE_GUARD")
    return CLIQUE_CHECK_MAX_N if value is None else value


def within_oracle_guard(n, p):
    return n <= oracle_max_n(p)


def require_oracle_guard(n, p):
    limit = oracle_max_n(p)
    if n > limit:
        raise CapabilityError(f"exhaustive oracle limited to n <= {limit} for p = {p}; got n = {n}")


def require_hom_guard(n):
    limit = hom_pattern_max()
    if n > limit:
        raise CapabilityError(f"pattern graphs limited to {limit} vertices; got {n}")
