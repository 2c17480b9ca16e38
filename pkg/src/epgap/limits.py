"""Size limits for the exact searches.

Every exponential-time operation takes an optional limit argument; when the
argument is None the default below applies. Defaults can be overridden
process-wide through the EPGAP_LIMITS environment variable, a comma list of
name=value entries, e.g.

    EPGAP_LIMITS="treewidth=22,minor_host=30"

Raising a limit is a statement that you are willing to wait.
"""

import os

from .errors import ParameterError

DEFAULTS = {
    "minor_host": 24,        # find_minor_model host size
    "minor_pattern": 10,     # find_minor_model pattern size
    "treewidth": 20,         # treewidth_exact
    "pathwidth": 16,         # pathwidth_exact
    "contraction_deg": 12,   # contraction_degeneracy exact mode
    "mesh_n": 12,            # find_mesh host size
    "mesh_k": 2,             # find_mesh connectivity
    "mesh_s": 6,             # find_mesh order
    "verify_mesh_s": 10,     # verify_mesh order
    "verify_mesh_k": 3,      # verify_mesh connectivity
    "pack_host": 18,         # pack_exact / cover_exact host size, general pattern
    "pack_host_triangle": 24,  # same, when the pattern is a triangle
    "enumerate_models": 20000,  # enumerate_minimal_models default cap
}


def _env_overrides() -> dict:
    raw = os.environ.get("EPGAP_LIMITS", "")
    out = {}
    for entry in filter(None, (part.strip() for part in raw.split(","))):
        name, _, value = entry.partition("=")
        if name not in DEFAULTS or not value.lstrip("-").isdigit():
            raise ParameterError(f"bad EPGAP_LIMITS entry: {entry!r}")
        out[name] = int(value)
    return out


def limit(name: str, override: int | None = None) -> int:
    """Resolve a size limit: explicit argument > env override > default."""
    if override is not None:
        return override
    env = _env_overrides()
    if name in env:
        return env[name]
    return DEFAULTS[name]
